#pragma once

// Umbrella header: evaluation of the binomial series
// sum_n n^k z^n / ((s n + 1) C(s n, n)) by direct summation, integral
// representations and the root-sum closed form, plus the identity
// verification harness built on top of the three pipelines.

#include "lehmer/closedform.hpp"
#include "lehmer/errors.hpp"
#include "lehmer/eulerian.hpp"
#include "lehmer/expr.hpp"
#include "lehmer/harness.hpp"
#include "lehmer/jet.hpp"
#include "lehmer/polylog.hpp"
#include "lehmer/polynomial.hpp"
#include "lehmer/quadrature.hpp"
#include "lehmer/roots.hpp"
#include "lehmer/series.hpp"
