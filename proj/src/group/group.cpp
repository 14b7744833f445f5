#include "symm/group/group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace symm::group {

NotAGroup::NotAGroup(std::string axiom, std::vector<std::uint32_t> witness)
    : PreconditionViolated("not a group: " + axiom + " fails at " + [&] {
        std::string s = "(";
        for (std::size_t i = 0; i < witness.size(); ++i) s += (i ? "," : "") + std::to_string(witness[i]);
        return s + ")";
      }()),
      axiom_(std::move(axiom)),
      witness_(std::move(witness)) {}

FiniteGroup::FiniteGroup(Table table, std::string name) : table_(std::move(table)), name_(std::move(name)) {
  const auto n = static_cast<std::uint32_t>(table_.size());
  if (n == 0) throw NotAGroup("nonempty", {});
  for (std::uint32_t a = 0; a < n; ++a) {
    if (table_[a].size() != n) throw NotAGroup("square table", {a});
    for (std::uint32_t b = 0; b < n; ++b)
      if (table_[a][b] >= n) throw NotAGroup("closure", {a, b});
  }
  bool found = false;
  for (std::uint32_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::uint32_t a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw NotAGroup("identity", {});
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) throw NotAGroup("associativity", {a, b, c});
  inverse_.assign(n, n);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b)
      if (table_[a][b] == identity_ && table_[b][a] == identity_) {
        inverse_[a] = b;
        break;
      }
    if (inverse_[a] == n) throw NotAGroup("inverse", {a});
  }
  orders_.resize(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    std::uint32_t x = a, k = 1;
    while (x != identity_) {
      x = table_[x][a];
      ++k;
    }
    orders_[a] = k;
  }
}

std::uint32_t FiniteGroup::pow(std::uint32_t a, std::uint64_t k) const {
  std::uint32_t r = identity_, base = a;
  k %= orders_[a];
  while (k) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = a + 1; b < order(); ++b)
      if (table_[a][b] != table_[b][a]) return false;
  return true;
}

FiniteGroup load_group(Table table, std::string name) { return FiniteGroup(std::move(table), std::move(name)); }

FiniteGroup parse_group_text(const std::string& text, std::string name) {
  std::istringstream in(text);
  long long n = 0;
  if (!(in >> n) || n <= 0) throw ParseError("group file: expected a positive order on the first line");
  Table t(static_cast<std::size_t>(n), std::vector<std::uint32_t>(static_cast<std::size_t>(n)));
  for (auto& row : t)
    for (auto& x : row) {
      long long v;
      if (!(in >> v)) throw ParseError("group file: expected " + std::to_string(n * n) + " table entries");
      if (v < 0 || v >= n) throw ParseError("group file: entry " + std::to_string(v) + " out of range");
      x = static_cast<std::uint32_t>(v);
    }
  std::string extra;
  if (in >> extra) throw ParseError("group file: trailing data");
  return FiniteGroup(std::move(t), std::move(name));
}

std::string group_to_text(const FiniteGroup& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (const auto& row : g.table()) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
    out << '\n';
  }
  return out.str();
}

Subgroup generate(const FiniteGroup& g, const Bitset& elements) {
  Subgroup s = g.trivial();
  std::vector<std::uint32_t> gens;
  for (auto x : elements.indices()) gens.push_back(static_cast<std::uint32_t>(x));
  std::vector<std::uint32_t> work{g.identity()};
  while (!work.empty()) {
    auto x = work.back();
    work.pop_back();
    for (auto y : gens) {
      auto z = g.mul(x, y);
      if (!s.test(z)) {
        s.set(z);
        work.push_back(z);
      }
    }
  }
  return s;
}

Subgroup product(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) { return generate(g, a | b); }

Subgroup intersect(const Subgroup& a, const Subgroup& b) { return a & b; }

bool is_subgroup(const FiniteGroup& g, const Bitset& s) {
  if (s.universe() != g.order() || !s.test(g.identity())) return false;
  auto m = s.indices();
  for (auto a : m)
    for (auto b : m)
      if (!s.test(g.mul(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)))) return false;
  return true;
}

bool is_normal_in(const FiniteGroup& g, const Subgroup& a, const Subgroup& within) {
  for (auto x : within.indices())
    for (auto h : a.indices()) {
      auto xi = static_cast<std::uint32_t>(x);
      if (!a.test(g.mul(g.mul(g.inv(xi), static_cast<std::uint32_t>(h)), xi))) return false;
    }
  return true;
}

bool is_normal(const FiniteGroup& g, const Subgroup& a) { return is_normal_in(g, a, g.whole()); }

Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  Bitset c(g.order());
  for (auto x : a.indices())
    for (auto y : b.indices()) c.set(g.commutator(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)));
  return generate(g, c);
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, std::size_t cap) {
  std::set<Subgroup> seen{g.trivial()};
  std::vector<Subgroup> work{g.trivial()};
  while (!work.empty()) {
    auto s = work.back();
    work.pop_back();
    for (std::uint32_t x = 0; x < g.order(); ++x) {
      if (s.test(x)) continue;
      Bitset gens = s;
      gens.set(x);
      auto t = generate(g, gens);
      if (seen.insert(t).second) {
        if (seen.size() > cap) throw CapExceeded("more than " + std::to_string(cap) + " subgroups");
        work.push_back(t);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Subgroup> all_normal_subgroups(const FiniteGroup& g, std::size_t cap) {
  // Normal subgroups are products of normal closures of single elements.
  std::vector<Subgroup> closures;
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    Bitset conj(g.order());
    for (std::uint32_t y = 0; y < g.order(); ++y) conj.set(g.mul(g.mul(g.inv(y), x), y));
    closures.push_back(generate(g, conj));
  }
  std::set<Subgroup> seen{g.trivial()};
  std::vector<Subgroup> work{g.trivial()};
  while (!work.empty()) {
    auto s = work.back();
    work.pop_back();
    for (const auto& c : closures) {
      if (c.subset_of(s)) continue;
      auto t = generate(g, s | c);
      if (seen.insert(t).second) {
        if (seen.size() > cap) throw CapExceeded("more than " + std::to_string(cap) + " normal subgroups");
        work.push_back(t);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::uint32_t> members(const Subgroup& s) {
  std::vector<std::uint32_t> out;
  for (auto x : s.indices()) out.push_back(static_cast<std::uint32_t>(x));
  return out;
}

FiniteGroup cyclic_group(std::size_t n) {
  Table t(n, std::vector<std::uint32_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<std::uint32_t>((a + b) % n);
  return FiniteGroup(std::move(t), "C" + std::to_string(n));
}

FiniteGroup dihedral_group(std::size_t n) {
  const std::size_t m = 2 * n;
  Table t(m, std::vector<std::uint32_t>(m));
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      std::size_t a = x % n, b = x / n, c = y % n, d = y / n;
      // r^a s^b r^c s^d = r^(a + (-1)^b c) s^(b + d)
      std::size_t i = b == 0 ? (a + c) % n : (a + n - c) % n;
      t[x][y] = static_cast<std::uint32_t>(i + n * ((b + d) % 2));
    }
  return FiniteGroup(std::move(t), "D" + std::to_string(n));
}

FiniteGroup quaternion_group() {
  // id = 4 * sign + unit, units 1, i, j, k
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_mul[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  Table t(8, std::vector<std::uint32_t>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int s = (x / 4 + y / 4 + sign_mul[x % 4][y % 4]) % 2;
      t[x][y] = static_cast<std::uint32_t>(4 * s + unit_mul[x % 4][y % 4]);
    }
  return FiniteGroup(std::move(t), "Q8");
}

FiniteGroup permutation_group(const std::vector<Permutation>& gens, std::size_t degree, std::string name) {
  std::set<Permutation> seen{identity_permutation(degree)};
  std::vector<Permutation> work{identity_permutation(degree)};
  while (!work.empty()) {
    auto p = work.back();
    work.pop_back();
    for (const auto& g : gens) {
      auto q = compose(g, p);
      if (seen.insert(q).second) work.push_back(q);
    }
  }
  std::vector<Permutation> elems(seen.begin(), seen.end());  // identity sorts first
  std::map<Permutation, std::uint32_t> id;
  for (std::size_t i = 0; i < elems.size(); ++i) id[elems[i]] = static_cast<std::uint32_t>(i);
  Table t(elems.size(), std::vector<std::uint32_t>(elems.size()));
  // a * b acts as "first a, then b"
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b) t[a][b] = id.at(compose(elems[b], elems[a]));
  return FiniteGroup(std::move(t), std::move(name));
}

FiniteGroup symmetric_group(std::size_t n) {
  std::vector<Permutation> gens;
  if (n >= 2) {
    Permutation swap = identity_permutation(n), cyc(n);
    std::swap(swap[0], swap[1]);
    for (std::size_t i = 0; i < n; ++i) cyc[i] = static_cast<std::uint32_t>((i + 1) % n);
    gens = {swap, cyc};
  }
  return permutation_group(gens, n, "S" + std::to_string(n));
}

FiniteGroup alternating_group(std::size_t n) {
  std::vector<Permutation> gens;
  for (std::size_t k = 2; k < n; ++k) {
    Permutation c = identity_permutation(n);
    c[0] = 1;
    c[1] = static_cast<std::uint32_t>(k);
    c[k] = 0;
    gens.push_back(c);
  }
  return permutation_group(gens, n, "A" + std::to_string(n));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t n = a.order() * b.order(), m = b.order();
  Table t(n, std::vector<std::uint32_t>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      t[x][y] = static_cast<std::uint32_t>(a.mul(static_cast<std::uint32_t>(x / m), static_cast<std::uint32_t>(y / m)) * m +
                                           b.mul(static_cast<std::uint32_t>(x % m), static_cast<std::uint32_t>(y % m)));
  return FiniteGroup(std::move(t), a.name() + "x" + b.name());
}

std::vector<FiniteGroup> small_group_corpus() {
  std::vector<FiniteGroup> out;
  for (std::size_t n = 2; n <= 12; ++n) out.push_back(cyclic_group(n));
  out.push_back(symmetric_group(3));
  out.push_back(dihedral_group(4));
  out.push_back(quaternion_group());
  out.push_back(alternating_group(4));
  out.push_back(dihedral_group(6));
  out.push_back(direct_product(symmetric_group(3), cyclic_group(2)));
  return out;
}

}  // namespace symm::group
