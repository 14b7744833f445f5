#include "symm/graph/families.hpp"

#include "symm/core/errors.hpp"

namespace symm::graph {

GnGraph gen_Gn(std::size_t n) {
  if (n == 0) throw PreconditionViolated("gen_Gn: n must be positive");
  const int m = static_cast<int>(5 * n);
  const int step = static_cast<int>(n);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i) edges.emplace_back(i, (i + 1) % m);
  for (int j = 0; j < step; ++j)
    for (int a = 0; a < 5; ++a) edges.emplace_back((j + step * a) % m, (j + step * (a + 2)) % m);
  GnGraph out{make_graph(static_cast<std::size_t>(m), edges), {}, {}};
  for (int a = 0; a < 5; ++a) out.designated.push_back(step * a);
  for (int i = 0; i < m; ++i) out.rotation.push_back(static_cast<std::uint32_t>((i + 1) % m));
  return out;
}

}  // namespace symm::graph
