#pragma once

#include "polyeff/convex_estimator.hpp"
#include "polyeff/emit.hpp"
#include "polyeff/isoperimetric.hpp"
#include "polyeff/math_util.hpp"
#include "polyeff/metrics.hpp"
#include "polyeff/polygon_io.hpp"
#include "polyeff/regular_geometry.hpp"
#include "polyeff/verify.hpp"
