#pragma once

// Single include for the whole library: exact rational volume machinery for
// cross-polytope and simplex triangulations, label-induced deformations,
// boundary-map degrees, and the instance-level verification pipelines.

#include "tuckvol/builders.hpp"
#include "tuckvol/deform.hpp"
#include "tuckvol/degree.hpp"
#include "tuckvol/geometry.hpp"
#include "tuckvol/json_io.hpp"
#include "tuckvol/labeling.hpp"
#include "tuckvol/linalg.hpp"
#include "tuckvol/poly.hpp"
#include "tuckvol/rational.hpp"
#include "tuckvol/report.hpp"
#include "tuckvol/rng.hpp"
#include "tuckvol/svg_render.hpp"
#include "tuckvol/triangulation.hpp"
#include "tuckvol/verify.hpp"
