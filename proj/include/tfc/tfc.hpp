#pragma once

#include "tfc/closed_forms.hpp"
#include "tfc/errors.hpp"
#include "tfc/expr.hpp"
#include "tfc/mellin.hpp"
#include "tfc/operators.hpp"
#include "tfc/prng.hpp"
#include "tfc/quadrature.hpp"
#include "tfc/rl_series.hpp"
#include "tfc/specfun.hpp"
#include "tfc/suites.hpp"
#include "tfc/theorems.hpp"
#include "tfc/types.hpp"
#include "tfc/verification.hpp"
