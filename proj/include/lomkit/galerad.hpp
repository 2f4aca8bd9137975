#pragma once

// Point configurations, Gale transforms and induced Radon partitions.

#include "lomkit/geometry/gale.hpp"
#include "lomkit/geometry/linalg.hpp"
#include "lomkit/geometry/lp.hpp"
#include "lomkit/geometry/point_config.hpp"
#include "lomkit/geometry/radon.hpp"
#include "lomkit/geometry/rational.hpp"
