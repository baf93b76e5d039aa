#pragma once

// Umbrella header for the star-product cohomology library.

#include "starprod/catalog.hpp"
#include "starprod/cochain.hpp"
#include "starprod/cocycle.hpp"
#include "starprod/equivalence.hpp"
#include "starprod/errors.hpp"
#include "starprod/json_io.hpp"
#include "starprod/matrix.hpp"
#include "starprod/modefield.hpp"
#include "starprod/momentum.hpp"
#include "starprod/polynomial.hpp"
#include "starprod/rational.hpp"
#include "starprod/report.hpp"
#include "starprod/sampling.hpp"
