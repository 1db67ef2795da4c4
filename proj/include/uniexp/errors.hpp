#pragma once

#include <stdexcept>
#include <string>

namespace uniexp {

/// Frequency outside the feasible window (0, (n+1)*pi).
class InfeasibleFrequencyError : public std::domain_error {
public:
    explicit InfeasibleFrequencyError(const std::string& msg) : std::domain_error(msg) {}
};

/// Evaluation requested at (or too close to) a pole.
class PoleHitError : public std::runtime_error {
public:
    explicit PoleHitError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Barycentric denominator collapsed relative to its term magnitudes.
class SpuriousPoleError : public std::runtime_error {
public:
    explicit SpuriousPoleError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A pole with vanishing real part where the phase function needs xi != 0.
class DegeneratePoleError : public std::runtime_error {
public:
    explicit DegeneratePoleError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Two interpolation/support/test nodes coincide.
class CoincidentNodeError : public std::invalid_argument {
public:
    explicit CoincidentNodeError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Loewner null space dimension is ambiguous (two near-zero singular values).
class RankDeficiencyError : public std::runtime_error {
public:
    explicit RankDeficiencyError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Phase error fails to change sign across a claimed interpolation node.
class SignChangeError : public std::runtime_error {
public:
    explicit SignChangeError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace uniexp
