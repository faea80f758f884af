// Umbrella header.
#pragma once

#include "dirdepth/bessel.hpp"
#include "dirdepth/csv.hpp"
#include "dirdepth/depth.hpp"
#include "dirdepth/distance.hpp"
#include "dirdepth/errors.hpp"
#include "dirdepth/gld.hpp"
#include "dirdepth/rng.hpp"
#include "dirdepth/rotation.hpp"
#include "dirdepth/sample.hpp"
#include "dirdepth/stats.hpp"
#include "dirdepth/svg.hpp"
#include "dirdepth/unit_vector.hpp"
#include "dirdepth/vmf.hpp"
