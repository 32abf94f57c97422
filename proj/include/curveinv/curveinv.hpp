#pragma once

#include "curveinv/families.hpp"
#include "curveinv/filling.hpp"
#include "curveinv/invariants.hpp"
#include "curveinv/laurent.hpp"
#include "curveinv/numeric.hpp"
#include "curveinv/polygon.hpp"
#include "curveinv/report.hpp"
#include "curveinv/slope.hpp"
#include "curveinv/spectral.hpp"
#include "curveinv/tracepoly.hpp"
