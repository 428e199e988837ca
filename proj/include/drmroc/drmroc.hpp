#pragma once

// Umbrella header for the drmroc library.

#include "drmroc/basis.hpp"
#include "drmroc/cutoff.hpp"
#include "drmroc/data.hpp"
#include "drmroc/el_fit.hpp"
#include "drmroc/errors.hpp"
#include "drmroc/gof.hpp"
#include "drmroc/io.hpp"
#include "drmroc/kde.hpp"
#include "drmroc/region.hpp"
#include "drmroc/rng.hpp"
#include "drmroc/simulate.hpp"
#include "drmroc/weighted_cdf.hpp"
