#include "symm/oracle/sphere.hpp"

#include <array>

namespace symm::oracle {

namespace {

using geomset::RationalPoint;
using V3 = std::array<Rational, 3>;

V3 sub(const RationalPoint& a, const RationalPoint& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Rational dot(const V3& a, const V3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Rational det3(const V3& a, const V3& b, const V3& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}
Rational norm2(const RationalPoint& p) { return p.x * p.x + p.y * p.y + p.z * p.z; }

bool equidistant(const geomset::PointSet& p, const V3& c) {
  auto d = [&](const RationalPoint& q) {
    V3 v{q.x - c[0], q.y - c[1], q.z - c[2]};
    return dot(v, v);
  };
  for (const auto& q : p)
    if (d(q) != d(p[0])) return false;
  return true;
}

}  // namespace

SphereVerdict sphere_oracle(const geomset::PointSet& p) {
  const std::size_t n = p.size();
  if (n <= 1) return {true, true};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d) {
          V3 u = sub(p[b], p[a]), v = sub(p[c], p[a]), w = sub(p[d], p[a]);
          Rational D = det3(u, v, w);
          if (D == 0) continue;
          // 2 (q - p_a) . x = |q|^2 - |p_a|^2 for q = b, c, d; solved by Cramer.
          V3 rhs{(norm2(p[b]) - norm2(p[a])) / 2, (norm2(p[c]) - norm2(p[a])) / 2, (norm2(p[d]) - norm2(p[a])) / 2};
          V3 c0{u[0], v[0], w[0]}, c1{u[1], v[1], w[1]}, c2{u[2], v[2], w[2]};
          V3 centre{det3(rhs, c1, c2) / D, det3(c0, rhs, c2) / D, det3(c0, c1, rhs) / D};
          return {equidistant(p, centre), false};
        }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        V3 u = sub(p[b], p[a]), v = sub(p[c], p[a]);
        Rational uu = dot(u, u), uv = dot(u, v), vv = dot(v, v);
        Rational gram = uu * vv - uv * uv;
        if (gram == 0) continue;
        // Circumcentre p_a + al u + be v: 2(uu al + uv be) = uu, 2(uv al + vv be) = vv.
        Rational al = (uu * vv - uv * vv) / (2 * gram), be = (uu * vv - uv * uu) / (2 * gram);
        V3 centre{p[a].x + al * u[0] + be * v[0], p[a].y + al * u[1] + be * v[1], p[a].z + al * u[2] + be * v[2]};
        return {equidistant(p, centre), true};
      }
  return {n <= 2, true};
}

}  // namespace symm::oracle
