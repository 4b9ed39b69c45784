#pragma once

// Umbrella header.

#include "altsum/alt_formula.hpp"
#include "altsum/bounds.hpp"
#include "altsum/boxcalc.hpp"
#include "altsum/coefficients.hpp"
#include "altsum/cone.hpp"
#include "altsum/errors.hpp"
#include "altsum/exprdsl.hpp"
#include "altsum/multiindex.hpp"
#include "altsum/parallel.hpp"
#include "altsum/polynomial.hpp"
#include "altsum/polytope.hpp"
#include "altsum/quadrature.hpp"
#include "altsum/rational.hpp"
#include "altsum/rational_linalg.hpp"
#include "altsum/series.hpp"
