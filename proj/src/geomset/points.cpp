#include "symm/geomset/points.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace symm::geomset {

RationalPoint point(const Rational& x, const Rational& y, const Rational& z) {
  RationalPoint p{x, y, z};
  p.x.canonicalize();
  p.y.canonicalize();
  p.z.canonicalize();
  return p;
}

Rational squared_distance(const RationalPoint& a, const RationalPoint& b) {
  Rational dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
  return dx * dx + dy * dy + dz * dz;
}

std::string to_string(const RationalPoint& p) {
  return "(" + p.x.get_str() + "," + p.y.get_str() + "," + p.z.get_str() + ")";
}

namespace {

Rational parse_rational(const std::string& tok, std::size_t line) {
  auto bad = [&] { return ParseError("points line " + std::to_string(line) + ": bad number \"" + tok + "\""); };
  auto slash = tok.find('/');
  auto is_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    return i < s.size() && std::all_of(s.begin() + static_cast<long>(i), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  std::string num = tok.substr(0, slash), den = slash == std::string::npos ? "1" : tok.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+') throw bad();
  if (num[0] == '+') num.erase(0, 1);
  Integer d(den);
  if (d == 0) throw ParseError("points line " + std::to_string(line) + ": zero denominator");
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

}  // namespace

PointSet parse_points(const std::string& text) {
  PointSet out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string tok;
    while (ls >> tok) toks.push_back(tok);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (toks.size() != 3)
      throw ParseError("points line " + std::to_string(lineno) + ": expected 3 coordinates, got " +
                       std::to_string(toks.size()));
    out.push_back({parse_rational(toks[0], lineno), parse_rational(toks[1], lineno), parse_rational(toks[2], lineno)});
  }
  return out;
}

void require_distinct(const PointSet& points) {
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j])
        throw DuplicatePoints("points " + std::to_string(i) + " and " + std::to_string(j) + " coincide at " +
                              to_string(points[i]));
}

std::size_t rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

bool on_common_sphere(const PointSet& points, bool allow_planes) {
  if (points.empty()) throw PreconditionViolated("on_common_sphere: no points");
  require_distinct(points);
  std::vector<std::vector<Rational>> full, tail;
  for (const auto& p : points) {
    Rational s = p.x * p.x + p.y * p.y + p.z * p.z;
    full.push_back({s, p.x, p.y, p.z, Rational(1)});
    tail.push_back({p.x, p.y, p.z, Rational(1)});
  }
  const std::size_t rf = rank(full);
  if (allow_planes) return rf < 5;
  // A kernel vector with a != 0 exists iff the first column lies in the span
  // of the others.
  return rf == rank(tail);
}

IsometryGroup isometry_group(const PointSet& points, std::size_t cap) {
  require_distinct(points);
  std::map<Rational, int> classes;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) classes.emplace(squared_distance(points[i], points[j]), 0);
  int next = 0;
  for (auto& [d, c] : classes) c = next++;
  std::vector<graph::Vertex> vs;
  std::vector<graph::Edge> es;
  for (std::size_t i = 0; i < points.size(); ++i) vs.push_back({static_cast<int>(i), std::nullopt});
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      es.push_back({static_cast<int>(es.size()), static_cast<int>(i), static_cast<int>(j),
                    classes.at(squared_distance(points[i], points[j]))});
  auto aut = graph::automorphism_group(graph::Graph(false, vs, es), cap);
  return {aut.generators, aut.order};
}

bool preserves_distances(const PointSet& points, const Permutation& p) {
  if (p.size() != points.size() || !is_permutation(p)) return false;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < points.size(); ++j)
      if (squared_distance(points[i], points[j]) != squared_distance(points[p[i]], points[p[j]])) return false;
  return true;
}

}  // namespace symm::geomset
