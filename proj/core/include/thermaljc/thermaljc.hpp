#pragma once

#include "thermaljc/analytic.hpp"
#include "thermaljc/errors.hpp"
#include "thermaljc/model.hpp"
#include "thermaljc/observables.hpp"
#include "thermaljc/oracle.hpp"
#include "thermaljc/sweep.hpp"
