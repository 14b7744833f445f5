#pragma once

#include <array>
#include <string>
#include <vector>

#include "symm/core/codim.hpp"
#include "symm/core/errors.hpp"
#include "symm/graph/automorphism.hpp"

namespace symm::geomset {

struct RationalPoint {
  Rational x, y, z;
  bool operator==(const RationalPoint&) const = default;
};

class DuplicatePoints : public PreconditionViolated {
 public:
  using PreconditionViolated::PreconditionViolated;
};

using PointSet = std::vector<RationalPoint>;

RationalPoint point(const Rational& x, const Rational& y, const Rational& z);
Rational squared_distance(const RationalPoint& a, const RationalPoint& b);
std::string to_string(const RationalPoint& p);

/// One point per line: three integers or p/q rationals. Blank lines and
/// lines starting with '#' are skipped.
PointSet parse_points(const std::string& text);

/// Throws DuplicatePoints naming the first repeated pair.
void require_distinct(const PointSet& points);

/// Rank of a rational matrix by exact elimination.
std::size_t rank(std::vector<std::vector<Rational>> m);

/// True iff some a(x^2+y^2+z^2) + bx + cy + dz + e = 0 holds at every point
/// with a != 0 (a genuine sphere). With allow_planes, any nonzero
/// coefficient vector counts, so coplanar sets qualify too.
bool on_common_sphere(const PointSet& points, bool allow_planes = false);

struct IsometryGroup {
  std::vector<Permutation> generators;
  Integer order = 1;
};

/// Permutations of the points preserving every squared distance, via the
/// automorphisms of the complete graph colored by distance class.
IsometryGroup isometry_group(const PointSet& points, std::size_t cap = graph::kDefaultSearchCap);

bool preserves_distances(const PointSet& points, const Permutation& p);

}  // namespace symm::geomset
