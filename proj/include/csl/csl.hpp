#pragma once

#include "csl/analytic_eval.hpp"
#include "csl/bessel_mellin.hpp"
#include "csl/closed_value.hpp"
#include "csl/errors.hpp"
#include "csl/exact_core.hpp"
#include "csl/fibonacci_closed.hpp"
#include "csl/golden.hpp"
#include "csl/poly_engine.hpp"
#include "csl/quadrature.hpp"
#include "csl/rational_polynomial.hpp"
#include "csl/series_oracle.hpp"
#include "csl/verify.hpp"
