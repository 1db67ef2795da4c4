#pragma once

#include "uniexp/analysis.hpp"
#include "uniexp/brasil.hpp"
#include "uniexp/errors.hpp"
#include "uniexp/interpolation.hpp"
#include "uniexp/lawson.hpp"
#include "uniexp/pade.hpp"
#include "uniexp/unitary.hpp"
