#pragma once

// Exact verification of four families of harmonic-number summation formulas
// and the nine weighted convolution kernels they are derived from, over
// arbitrary-precision rationals and dual numbers.

#include "hsum/binomial.hpp"
#include "hsum/derivation.hpp"
#include "hsum/dual.hpp"
#include "hsum/errors.hpp"
#include "hsum/harmonic.hpp"
#include "hsum/kernels.hpp"
#include "hsum/rational.hpp"
#include "hsum/record.hpp"
#include "hsum/report.hpp"
#include "hsum/scalar.hpp"
#include "hsum/theorems.hpp"
