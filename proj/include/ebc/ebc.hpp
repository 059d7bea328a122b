#pragma once

#include "ebc/billiard.hpp"
#include "ebc/centers.hpp"
#include "ebc/conic.hpp"
#include "ebc/errors.hpp"
#include "ebc/invariants.hpp"
#include "ebc/numeric.hpp"
#include "ebc/poristic.hpp"
#include "ebc/pythagorean.hpp"
#include "ebc/tolerances.hpp"
#include "ebc/triangle.hpp"
#include "ebc/vec2.hpp"
