#pragma once

#include "symm/geomset/points.hpp"

namespace symm::oracle {

struct SphereVerdict {
  bool sphere = false;    // a genuine sphere passes through every point
  bool coplanar = false;  // every point lies in one plane
};

/// Geometric brute force, independent of the moment-matrix rank test: the
/// unique sphere through the first non-coplanar 4-subset (Cramer's rule),
/// else the unique circle through the first non-collinear triple, else the
/// collinear case (a sphere only for at most two points).
SphereVerdict sphere_oracle(const geomset::PointSet& points);

}  // namespace symm::oracle
