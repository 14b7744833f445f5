#include "symm/cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "symm/core/engine.hpp"
#include "symm/core/errors.hpp"
#include "symm/geomset/instances.hpp"
#include "symm/graph/families.hpp"
#include "symm/graph/forbidden.hpp"
#include "symm/graph/io.hpp"
#include "symm/graph/local_embed.hpp"
#include "symm/graph/planarity.hpp"
#include "symm/group/theorems.hpp"
#include "symm/oracle/laws.hpp"

namespace symm::cli {

using nlohmann::json;

std::uint64_t fnv1a(std::string_view data, std::uint64_t h) {
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

namespace {

struct Options {
  std::string input;
  std::string removed;
  std::string forbidden = "triangle";
  std::vector<std::string> words;
  std::vector<std::string> classes;
  std::vector<std::string> layers;
  std::string group;
  std::string subgroup;
  std::string predicate;
  std::string output;
  std::string x = "10";
  std::size_t arity = 0;
  std::size_t k = 4;
  std::size_t n = 2;
  std::size_t cap = kDefaultOrbitCap;
  std::size_t aut_cap = graph::kDefaultSearchCap;
  std::size_t size_cap = graph::kDefaultLocalEmbedCap;
  std::size_t samples = 20000;
  std::size_t budget = std::size_t{1} << 26;
  std::uint64_t seed = 0;
  bool trace = false;
  bool verify = false;
  bool allow_planes = false;
  bool self_respect = true;
  bool planarize = false;
  bool serial = false;
};

// Everything read from disk is folded into the digest in read order.
class Context {
 public:
  explicit Context(std::uint64_t digest) : digest_(digest) {}

  std::string read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    digest_ = fnv1a(text, fnv1a(std::string_view("\0", 1), digest_));
    return text;
  }

  json read_json(const std::string& path) {
    auto text = read(path);
    try {
      return json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(path + ": " + e.what());
    }
  }

  std::string digest() const {
    std::ostringstream os;
    os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << digest_;
    return os.str();
  }

 private:
  std::uint64_t digest_;
};

std::vector<int> parse_id_list(const std::string& text, Context& ctx) {
  if (!text.empty() && text[0] == '@') {
    auto ids = graph::edge_ids_from_json(ctx.read_json(text.substr(1)));
    return {ids.begin(), ids.end()};
  }
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto b = tok.find_first_not_of(" \t"), e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    tok = tok.substr(b, e - b + 1);
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || v < 0) throw ParseError("not a nonnegative id: '" + tok + "'");
    out.push_back(static_cast<int>(v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::size_t> to_size_ids(const std::vector<int>& ids) { return {ids.begin(), ids.end()}; }

// Built-in pattern names: triangle, K<n>, K<a>,<b>, C<n>, P<n>.
std::optional<graph::Graph> builtin_pattern(const std::string& name) {
  auto num = [](const std::string& s) -> std::optional<std::size_t> {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
    return std::stoul(s);
  };
  if (name == "triangle") return graph::complete_graph(3);
  if (name.size() < 2) return std::nullopt;
  const std::string rest = name.substr(1);
  if (name[0] == 'K') {
    if (auto comma = rest.find(','); comma != std::string::npos) {
      auto a = num(rest.substr(0, comma)), b = num(rest.substr(comma + 1));
      if (a && b) return graph::complete_bipartite(*a, *b);
      return std::nullopt;
    }
    if (auto a = num(rest)) return graph::complete_graph(*a);
  }
  if (name[0] == 'C')
    if (auto a = num(rest); a && *a >= 3) return graph::cycle_graph(*a);
  if (name[0] == 'P')
    if (auto a = num(rest); a && *a >= 2) return graph::path_graph(*a);
  return std::nullopt;
}

std::vector<graph::Graph> load_family(const std::string& spec, Context& ctx) {
  std::vector<graph::Graph> out;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ';')) {
    if (tok.empty()) continue;
    if (auto g = builtin_pattern(tok)) {
      out.push_back(*g);
      continue;
    }
    auto j = ctx.read_json(tok);
    if (j.is_array()) {
      for (auto& g : graph::family_from_json(j)) out.push_back(g);
    } else {
      out.push_back(graph::graph_from_json(j));
    }
  }
  if (out.empty()) throw ParseError("empty forbidden family");
  return out;
}

group::FiniteGroup named_group(const std::string& name) {
  for (auto& g : group::small_group_corpus())
    if (g.name() == name) return g;
  auto num = [&](std::size_t from) -> std::size_t {
    auto s = name.substr(from);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("unknown group '" + name + "'");
    return std::stoul(s);
  };
  if (name.empty()) throw ParseError("no group given");
  std::size_t k = 0;
  switch (name[0]) {
    case 'C':
      if ((k = num(1)) >= 1) return group::cyclic_group(k);
      break;
    case 'D':
      if ((k = num(1)) >= 2) return group::dihedral_group(k);
      break;
    case 'S':
      if ((k = num(1)) >= 1 && k <= 5) return group::symmetric_group(k);
      break;
    case 'A':
      if ((k = num(1)) >= 1 && k <= 5) return group::alternating_group(k);
      break;
  }
  throw ParseError("unknown group '" + name + "'");
}

std::shared_ptr<const group::FiniteGroup> load_group(const Options& o, Context& ctx) {
  if (!o.input.empty()) return std::make_shared<const group::FiniteGroup>(group::parse_group_text(ctx.read(o.input), o.input));
  return std::make_shared<const group::FiniteGroup>(named_group(o.group));
}

// Normal closure of the listed elements; "all" gives the whole group.
group::Subgroup load_normal(const group::FiniteGroup& g, const std::string& spec, Context& ctx) {
  if (spec == "all") return g.whole();
  Bitset conj(static_cast<std::size_t>(g.order()));
  for (int id : parse_id_list(spec, ctx)) {
    if (static_cast<std::size_t>(id) >= g.order()) throw PreconditionViolated("element " + std::to_string(id) + " out of range");
    for (std::uint32_t h = 0; h < g.order(); ++h) conj.set(g.mul(g.mul(g.inv(h), static_cast<std::uint32_t>(id)), h));
  }
  return group::generate(g, conj);
}

json clauses_json(const std::vector<Clause>& clauses) {
  auto j = json::array();
  for (const auto& c : clauses) {
    json cj{{"name", c.name}, {"ok", c.ok}};
    if (!c.detail.empty()) cj["detail"] = c.detail;
    j.push_back(cj);
  }
  return j;
}

using Describe = std::function<json(const Element&)>;

json engine_json(const EngineResult& r, const Describe& describe, bool full) {
  json j{{"codim_seed", r.codim_seed.to_string()},
         {"codim_H", r.codim_H.to_string()},
         {"bound", r.bound.to_string()},
         {"codim_H_approx", r.codim_H.approx()},
         {"bound_approx", r.bound.approx()},
         {"bound_holds", r.codim_H <= r.bound}};
  auto steps = json::array();
  for (std::size_t s = 0; s < r.trace.steps.size(); ++s) {
    const auto& st = r.trace.steps[s];
    json sj{{"step", s + 1},
            {"orbit_size", st.orbit_size},
            {"selected", st.selected.size()},
            {"codim_N", st.codim_N.to_string()},
            {"codim_G", st.codim_G.to_string()}};
    if (full) {
      sj["G"] = describe(st.G);
      sj["N"] = describe(st.N);
      auto sel = json::array();
      for (const auto& e : st.selected) sel.push_back(describe(e));
      sj["selected_elements"] = sel;
    }
    steps.push_back(sj);
  }
  j["trace"] = steps;
  return j;
}

// Checks of the trace against the bound function, from recorded codims.
json trace_check_json(const EngineResult& r) {
  auto issues = json::array();
  Codim prev = r.codim_seed;
  for (std::size_t s = 0; s < r.trace.steps.size(); ++s) {
    const auto& st = r.trace.steps[s];
    if (st.codim_N > bound_step(prev)) issues.push_back("step " + std::to_string(s + 1) + ": codim N_s > f(codim N_{s-1})");
    if (st.codim_G > prev) issues.push_back("step " + std::to_string(s + 1) + ": codim G_s > codim N_{s-1}");
    prev = st.codim_N;
  }
  return issues;
}

json edge_describe(const graph::Graph& g, const Element& kept) {
  return graph::normalize_ids(g.edge_ids(kept.complement()));
}

json members_json(const group::Subgroup& s) { return group::members(s); }

// ---- commands -----------------------------------------------------------

json cmd_graph_forbid(const Options& o, Context& ctx) {
  auto g = graph::graph_from_json(ctx.read_json(o.input));
  auto removed = parse_id_list(o.removed, ctx);
  auto family = load_family(o.forbidden, ctx);
  graph::ForbidOptions fo;
  fo.aut_cap = o.aut_cap;
  fo.engine.orbit_cap = o.cap;
  fo.engine.execution = o.serial ? Execution::serial : Execution::parallel;
  auto res = graph::forbid_invariant(g, removed, family, fo);
  json j{{"removed_N", removed},
         {"removed_H", res.removed_H},
         {"H", "G minus " + std::to_string(res.removed_H.size()) + " edges"},
         {"automorphism_group_order", res.group_order.get_str()},
         {"arity", graph::family_arity(family)}};
  j["engine"] = engine_json(res.engine, [&](const Element& e) { return edge_describe(g, e); }, o.trace);
  j["clauses"] = clauses_json(res.clauses);
  if (o.verify) {
    auto p = graph::forbidden_subgraph_predicate(g, family);
    j["verification"] = {{"trace_inequalities", trace_check_json(res.engine)},
                         {"predicate_failures_along_trace", predicate_failures_along_trace(p, res.engine.trace)}};
  }
  return j;
}

json cmd_graph_planarize(const Options& o, Context& ctx) {
  auto g = graph::graph_from_json(ctx.read_json(o.input));
  auto removed = parse_id_list(o.removed, ctx);
  graph::ForbidOptions fo;
  fo.aut_cap = o.aut_cap;
  fo.engine.orbit_cap = o.cap;
  auto res = graph::planarize_invariant(g, removed, fo);
  json rounds = json::array();
  for (const auto& r : res.rounds) {
    json rj{{"kuratowski", r.kuratowski}, {"layer", r.layer}};
    rj["engine"] = engine_json(r.engine, [](const Element& e) { return e.to_string(); }, false);
    if (o.verify) rj["trace_inequalities"] = trace_check_json(r.engine);
    rounds.push_back(rj);
  }
  return {{"removed_N", removed},
          {"removed_H", res.removed_H},
          {"H", "G minus " + std::to_string(res.removed_H.size()) + " edges"},
          {"rounds", rounds},
          {"clauses", clauses_json(res.clauses)}};
}

json cmd_graph_local_embed(const Options& o, Context& ctx) {
  auto g = graph::graph_from_json(ctx.read_json(o.input));
  auto removed = parse_id_list(o.removed, ctx);
  graph::ForbidOptions fo;
  fo.aut_cap = o.aut_cap;
  fo.engine.orbit_cap = o.cap;
  auto res = graph::local_embed_invariant(g, removed, o.size_cap, fo);
  json rounds = json::array();
  for (const auto& r : res.rounds) rounds.push_back({{"witness", r.witness}, {"layer", r.layer}});
  return {{"removed_M", removed},
          {"removed_H", res.removed_H},
          {"H", "G minus " + std::to_string(res.removed_H.size()) + " edges"},
          {"rounds", rounds},
          {"clauses", clauses_json(res.clauses)}};
}

json cmd_graph_gn(const Options& o, Context&) {
  if (o.n == 0) throw PreconditionViolated("graph-gn: n must be positive");
  auto gn = graph::gen_Gn(o.n);
  const auto& g = gn.graph;
  auto aut = graph::automorphism_group(g, o.aut_cap);
  auto orbits = graph::edge_orbits(g, aut.generators);
  std::size_t min_orbit = g.edge_count();
  for (const auto& orb : orbits) min_orbit = std::min(min_orbit, orb.size());
  const bool nonplanar = !graph::planarity_test(g);
  const bool designated_planarize = graph::planarity_test(g.remove_edges(gn.designated));
  std::vector<Clause> clauses = {
      {"edge-count", g.edge_count() == 10 * o.n, std::to_string(g.edge_count()) + " edges"},
      {"nonplanar", nonplanar, ""},
      {"designated-planarize", designated_planarize, ""},
      {"rotation-automorphism", graph::is_automorphism(g, gn.rotation), ""},
      {"orbits-at-least-n", min_orbit >= o.n, "smallest edge orbit " + std::to_string(min_orbit)},
  };
  json j{{"n", o.n},
         {"graph", graph::graph_to_json(g)},
         {"designated", gn.designated},
         {"automorphism_group_order", aut.order.get_str()},
         {"edge_orbits", orbits}};
  if (o.planarize) {
    graph::ForbidOptions fo;
    fo.aut_cap = o.aut_cap;
    fo.engine.orbit_cap = o.cap;
    auto res = graph::planarize_invariant(g, gn.designated, fo);
    clauses.insert(clauses.end(), res.clauses.begin(), res.clauses.end());
    clauses.push_back({"nonempty", !res.removed_H.empty(), ""});
    clauses.push_back({"at-least-n", res.removed_H.size() >= o.n, std::to_string(res.removed_H.size()) + " edges"});
    j["removed_N"] = gn.designated;
    j["removed_H"] = res.removed_H;
    j["H"] = "G_" + std::to_string(o.n) + " minus " + std::to_string(res.removed_H.size()) + " edges";
    j["rounds"] = res.rounds.size();
  }
  j["clauses"] = clauses_json(clauses);
  return j;
}

json group_result_json(const group::FiniteGroup& g, const group::Subgroup& n, const group::GroupRunResult& r,
                       const Options& o) {
  json j{{"group", g.name()},
         {"order", g.order()},
         {"N", members_json(n)},
         {"H", members_json(r.H)},
         {"H_order", r.H.count()},
         {"arity", r.arity},
         {"automorphism_count", r.aut.order.get_str()}};
  j["engine"] = engine_json(r.engine, members_json, o.trace);
  j["clauses"] = clauses_json(r.clauses);
  if (o.verify) j["verification"] = {{"trace_inequalities", trace_check_json(r.engine)}};
  return j;
}

json cmd_group_law(const Options& o, Context& ctx) {
  auto g = load_group(o, ctx);
  auto n = load_normal(*g, o.subgroup, ctx);
  std::vector<group::VerbalCondition> conds;
  auto words = o.words.empty() ? std::vector<std::string>{"[x1,x2]"} : o.words;
  for (std::size_t i = 0; i < words.size(); ++i) {
    auto cls = i < o.classes.size() ? o.classes[i] : std::string("trivial");
    conds.push_back({group::parse_ocw(words[i]), group::parse_class(cls)});
  }
  group::GroupRunOptions go;
  go.engine.orbit_cap = o.cap;
  auto r = group::khm_run(*g, n, conds, go);
  auto j = group_result_json(*g, n, r, o);
  auto cj = json::array();
  for (const auto& c : conds) cj.push_back({{"word", c.word.to_string()}, {"class", c.tester.to_string()}});
  j["conditions"] = cj;
  return j;
}

json cmd_group_spectrum(const Options& o, Context& ctx) {
  auto g = load_group(o, ctx);
  auto n = load_normal(*g, o.subgroup, ctx);
  group::GroupRunOptions go;
  go.engine.orbit_cap = o.cap;
  auto r = group::spectrum_run(*g, n, go);
  auto j = group_result_json(*g, n, r, o);
  j["spectrum_G_mod_N"] = group::spectrum_of_quotient(*g, n);
  j["spectrum_G_mod_H"] = group::spectrum_of_quotient(*g, r.H);
  return j;
}

json cmd_group_series(const Options& o, Context& ctx) {
  auto g = load_group(o, ctx);
  auto n = load_normal(*g, o.subgroup, ctx);
  if (o.layers.empty()) throw PreconditionViolated("group-series: give at least one --layer");
  std::vector<group::LayerRequirement> spec;
  for (const auto& l : o.layers) {
    if (l.rfind("word:", 0) == 0)
      spec.push_back(group::word_layer(l.substr(5)));
    else if (l.rfind("class:", 0) == 0)
      spec.push_back(group::class_layer(l.substr(6)));
    else
      throw ParseError("layer must be word:<w> or class:<c>, got '" + l + "'");
  }
  group::GroupRunOptions go;
  go.engine.orbit_cap = o.cap;
  auto r = group::series_run(*g, n, spec, go);
  auto j = group_result_json(*g, n, r, o);
  auto lj = json::array();
  for (const auto& l : spec) lj.push_back(l.to_string());
  j["layers"] = lj;
  return j;
}

json subset_result_json(const geomset::SubsetRunResult& r, const std::vector<int>& seed, const Options& o) {
  json j{{"removed_N", seed}, {"removed_H", r.removed_H}, {"symmetry_group_order", r.group_order.get_str()}};
  j["engine"] = engine_json(r.engine, [](const Element& kept) { return kept.complement().indices(); }, o.trace);
  j["clauses"] = clauses_json(r.clauses);
  if (o.verify) j["verification"] = {{"trace_inequalities", trace_check_json(r.engine)}};
  return j;
}

json cmd_set_sphere(const Options& o, Context& ctx) {
  auto pts = geomset::parse_points(ctx.read(o.input));
  auto removed = parse_id_list(o.removed, ctx);
  geomset::RunOptions ro;
  ro.aut_cap = o.aut_cap;
  ro.engine.orbit_cap = o.cap;
  const std::size_t k = o.arity ? o.arity : 4;
  auto r = geomset::sphere_invariant_run(pts, to_size_ids(removed), k, o.allow_planes, ro);
  auto j = subset_result_json(r, removed, o);
  j["points"] = pts.size();
  j["arity"] = k;
  j["H"] = "P minus " + std::to_string(r.removed_H.size()) + " points";
  return j;
}

json cmd_set_team(const Options& o, Context& ctx) {
  auto rel = geomset::parse_relation(ctx.read(o.input));
  auto expel = parse_id_list(o.removed, ctx);
  geomset::RunOptions ro;
  ro.aut_cap = o.aut_cap;
  ro.engine.orbit_cap = o.cap;
  const std::size_t k = o.arity ? o.arity : 5;
  auto r = geomset::team_invariant_run(rel, to_size_ids(expel), k, o.self_respect, ro);
  auto j = subset_result_json(r, expel, o);
  j["candidates"] = rel.n;
  j["arity"] = k;
  j["self_respect"] = o.self_respect;
  j["H"] = "team of " + std::to_string(rel.n - r.removed_H.size());
  return j;
}

json cmd_bound(const Options& o, Context&) {
  Rational x;
  try {
    x = Rational(o.x);
    x.canonicalize();
  } catch (const std::exception&) {
    throw ParseError("--x must be an integer or p/q, got '" + o.x + "'");
  }
  if (x < 0) throw PreconditionViolated("--x must be nonnegative");
  if (o.k > 20) throw CapExceeded("--k above 20 would produce an astronomically long number");
  Rational value = iterate_f(x, o.k);
  // x (x+1)^(2^k - 1) dominates f^k(x); for x = 10, k = 4 it is 11^15 * 10.
  Rational rhs = x;
  const std::size_t e = (std::size_t{1} << o.k) - 1;
  Rational base = x + 1;
  for (std::size_t i = 0; i < e; ++i) rhs *= base;
  const char* rel = value < rhs ? "<" : value == rhs ? "=" : ">";
  return {{"x", x.get_str()},
          {"k", o.k},
          {"value", value.get_str()},
          {"rhs", x.get_str() + " * " + base.get_str() + "^" + std::to_string(e)},
          {"rhs_value", rhs.get_str()},
          {"relation", rel},
          {"clauses", clauses_json({{"below-rhs", value <= rhs, std::string("f^k(x) ") + rel + " rhs"}})}};
}

json cmd_verify_laws(const Options& o, Context& ctx) {
  oracle::LawOptions lo;
  lo.seed = o.seed;
  lo.samples = o.samples;
  lo.budget = o.budget;
  std::shared_ptr<const LatticeInstance> lattice;
  std::vector<Element> universe;
  Predicate p;
  const std::string& name = o.predicate;
  if (name == "triangle" || name == "forbid") {
    auto g = graph::graph_from_json(ctx.read_json(o.input));
    auto family = name == "triangle" ? std::vector<graph::Graph>{graph::complete_graph(3)} : load_family(o.forbidden, ctx);
    p = graph::forbidden_subgraph_predicate(g, family);
    lattice = std::make_shared<SubsetLattice>(g.edge_count(), std::vector<Permutation>{});
    universe = oracle::all_subsets(g.edge_count());
  } else if (name == "team") {
    auto rel = geomset::parse_relation(ctx.read(o.input));
    p = geomset::team_predicate(rel, o.arity ? o.arity : 5, o.self_respect);
    lattice = std::make_shared<SubsetLattice>(rel.n, std::vector<Permutation>{});
    universe = oracle::all_subsets(rel.n);
  } else if (name == "sphere") {
    auto pts = geomset::parse_points(ctx.read(o.input));
    p = geomset::sphere_predicate(pts, o.arity ? o.arity : 4, o.allow_planes);
    lattice = std::make_shared<SubsetLattice>(pts.size(), std::vector<Permutation>{});
    universe = oracle::all_subsets(pts.size());
  } else if (name == "spectrum") {
    auto g = load_group(o, ctx);
    auto auts = group::group_automorphisms(*g);
    auto base = std::make_shared<group::NormalSubgroupLattice>(g, auts.generators);
    lattice = dualize(base, [](const Element& a) { return group::log2_order(a); });
    auto spec = group::spectrum_of_quotient(*g, g->trivial());
    p = group::spectrum_predicate(g, {spec.begin(), spec.end()});
    auto normals = group::all_normal_subgroups(*g);
    universe.assign(normals.begin(), normals.end());
  } else if (name == "even" || name == "small") {
    const std::size_t n = o.n;
    lattice = std::make_shared<SubsetLattice>(n, std::vector<Permutation>{});
    universe = oracle::all_subsets(n);
    p = name == "even" ? oracle::even_size_predicate() : oracle::at_most_one_predicate();
  } else {
    throw ParseError("unknown predicate '" + name + "' (triangle, forbid, team, sphere, spectrum, even, small)");
  }
  auto mono = oracle::check_monotone(*lattice, p, universe, lo);
  auto multi = oracle::check_multilinear(*lattice, p, universe, lo);
  const bool revalid = oracle::revalidate(*lattice, p, mono) && oracle::revalidate(*lattice, p, multi);
  return {{"predicate", p.id},
          {"arity", p.arity},
          {"universe", universe.size()},
          {"reports", {oracle::to_json(*lattice, mono), oracle::to_json(*lattice, multi)}},
          {"laws_hold", mono.passed() && multi.passed()},
          {"clauses", clauses_json({{"counterexamples-revalidate", revalid, ""}})}};
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Invariant elements of finite lattices: graphs, groups, point sets"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  auto common = [&](CLI::App* sc) {
    sc->add_option("--output", o.output, "Write the report here instead of stdout");
    sc->add_option("--seed", o.seed, "Seed for randomized paths")->capture_default_str();
    sc->add_option("--cap", o.cap, "Orbit closure cap")->capture_default_str();
    sc->add_flag("--trace", o.trace, "Include the full engine trace");
    sc->add_flag("--verify", o.verify, "Re-check trace inequalities and the predicate along the trace");
  };
  auto graph_cmd = [&](const char* name, const char* help) {
    auto* sc = app.add_subcommand(name, help);
    common(sc);
    sc->add_option("--input", o.input, "Graph JSON")->required();
    sc->add_option("--removed", o.removed, "Seed removal: comma-separated edge ids or @file.json");
    sc->add_option("--aut-cap", o.aut_cap, "Automorphism search node cap")->capture_default_str();
    return sc;
  };
  auto group_cmd = [&](const char* name, const char* help) {
    auto* sc = app.add_subcommand(name, help);
    common(sc);
    auto* in = sc->add_option("--input", o.input, "Cayley table file");
    auto* gr = sc->add_option("--group", o.group, "Named group (C6, D4, Q8, S3, A4, S3xC2, ...)");
    in->excludes(gr);
    sc->add_option("--subgroup", o.subgroup, "Normal closure of these element ids, or 'all'")->required();
    return sc;
  };

  auto* forbid = graph_cmd("graph-forbid", "Invariant removal avoiding forbidden subgraphs");
  forbid->add_option("--forbidden", o.forbidden, "';'-separated: triangle, K<n>, K<a>,<b>, C<n>, P<n>, or JSON files")
      ->capture_default_str();
  forbid->add_flag("--serial", o.serial, "Use the serial kernels");
  graph_cmd("graph-planarize", "Invariant planarizing removal");
  auto* local = graph_cmd("graph-local-embed", "Invariant removal leaving a graph that locally embeds into G - M");
  local->add_option("--size-cap", o.size_cap, "Largest edge count accepted")->capture_default_str();

  auto* gn = app.add_subcommand("graph-gn", "Build G_n and check its properties");
  common(gn);
  gn->add_option("--n", o.n, "Subdivision parameter")->capture_default_str();
  gn->add_flag("--planarize", o.planarize, "Also run the invariant planarization");
  gn->add_option("--aut-cap", o.aut_cap, "Automorphism search node cap")->capture_default_str();

  auto* law = group_cmd("group-law", "Characteristic subgroup satisfying outer commutator laws");
  // allow_extra_args(false) keeps "[x1,x2]" whole instead of reading it as a list.
  law->add_option("--word", o.words, "Outer commutator word, e.g. [x1,x2] (repeatable)")->allow_extra_args(false);
  law->add_option("--class", o.classes, "Class for the matching --word: trivial, solvable, nilpotent, pi:p,q")
      ->allow_extra_args(false);
  group_cmd("group-spectrum", "Characteristic subgroup with quotient spectrum inside that of G/N");
  auto* series = group_cmd("group-series", "Characteristic subgroup with a normal series of given shape");
  series->add_option("--layer", o.layers, "word:<w> or class:<c>, bottom layer first (repeatable)")
      ->allow_extra_args(false);

  auto* sphere = app.add_subcommand("set-sphere", "Invariant point removal with no k points on a sphere");
  common(sphere);
  sphere->add_option("--input", o.input, "Point file")->required();
  sphere->add_option("--removed", o.removed, "Seed removal: comma-separated point ids");
  sphere->add_option("--arity", o.arity, "k (default 4)");
  sphere->add_flag("--allow-planes", o.allow_planes, "Count planes as spheres");
  sphere->add_option("--aut-cap", o.aut_cap, "Automorphism search node cap")->capture_default_str();

  auto* team = app.add_subcommand("set-team", "Invariant expulsion leaving an efficient team");
  common(team);
  team->add_option("--input", o.input, "Relation file")->required();
  team->add_option("--expel,--removed", o.removed, "Seed expulsion: comma-separated candidate ids");
  team->add_option("--arity", o.arity, "k (default 5)");
  team->add_flag("--self-respect,!--no-self-respect", o.self_respect, "Own opinion counts toward the majority");
  team->add_option("--aut-cap", o.aut_cap, "Automorphism search node cap")->capture_default_str();

  auto* bound = app.add_subcommand("bound", "Evaluate f^k(x) for f(x) = x(x+1)");
  bound->add_option("--output", o.output, "Write the report here instead of stdout");
  bound->add_option("--x", o.x, "Nonnegative rational")->capture_default_str();
  bound->add_option("--k", o.k, "Iterations")->capture_default_str();

  auto* laws = app.add_subcommand("verify-laws", "Check monotonicity and multilinearity of a predicate");
  laws->add_option("--output", o.output, "Write the report here instead of stdout");
  laws->add_option("--predicate", o.predicate, "triangle, forbid, team, sphere, spectrum, even, small")->required();
  laws->add_option("--input", o.input, "Instance file");
  laws->add_option("--group", o.group, "Named group for spectrum");
  laws->add_option("--forbidden", o.forbidden, "Family for forbid");
  laws->add_option("--arity", o.arity, "k for team and sphere");
  laws->add_option("--n", o.n, "Ground set size for even and small")->capture_default_str();
  laws->add_flag("--allow-planes", o.allow_planes, "Count planes as spheres");
  laws->add_flag("--self-respect,!--no-self-respect", o.self_respect, "Team majority semantics");
  laws->add_option("--seed", o.seed, "Sampling seed")->capture_default_str();
  laws->add_option("--samples", o.samples, "Samples beyond the exhaustive budget")->capture_default_str();
  laws->add_option("--budget", o.budget, "Largest tuple count checked exhaustively")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParse;
  }

  auto* sc = app.get_subcommands().front();
  const std::string command = sc->get_name();
  // Digest of the arguments that define the run (not where it is written).
  std::uint64_t h = kFnvOffset;
  for (int i = 1; i < argc; ++i) {
    std::string_view a = argv[i];
    if (a == "--output") {
      ++i;
      continue;
    }
    if (a.rfind("--output=", 0) == 0) continue;
    h = fnv1a(a, fnv1a(std::string_view("\0", 1), h));
  }
  Context ctx(h);

  static const std::map<std::string, std::function<json(const Options&, Context&)>> commands = {
      {"graph-forbid", cmd_graph_forbid},       {"graph-planarize", cmd_graph_planarize},
      {"graph-local-embed", cmd_graph_local_embed}, {"graph-gn", cmd_graph_gn},
      {"group-law", cmd_group_law},             {"group-spectrum", cmd_group_spectrum},
      {"group-series", cmd_group_series},       {"set-sphere", cmd_set_sphere},
      {"set-team", cmd_set_team},               {"bound", cmd_bound},
      {"verify-laws", cmd_verify_laws},
  };

  json report;
  int code = kOk;
  std::string status = "ok";
  try {
    report = commands.at(command)(o, ctx);
    if (report.contains("clauses"))
      for (const auto& c : report["clauses"])
        if (!c["ok"].get<bool>()) {
          code = kInvariant;
          status = "invariant-violation";
        }
  } catch (const graph::ForbiddenSubgraphPresent& e) {
    code = kPrecondition;
    status = "precondition-violation";
    report["error"] = e.what();
    report["witness"] = {{"member", e.member()}, {"embedding", graph::embedding_to_json(e.witness())}};
  } catch (const PreconditionViolated& e) {
    code = kPrecondition;
    status = "precondition-violation";
    report["error"] = e.what();
  } catch (const ArityMismatch& e) {
    code = kPrecondition;
    status = "precondition-violation";
    report["error"] = e.what();
  } catch (const ParseError& e) {
    code = kParse;
    status = "parse-error";
    report["error"] = e.what();
  } catch (const json::exception& e) {
    code = kParse;
    status = "parse-error";
    report["error"] = e.what();
  } catch (const CapExceeded& e) {
    code = kCap;
    status = "cap-exceeded";
    report["error"] = e.what();
  } catch (const InvariantViolation& e) {
    code = kInvariant;
    status = "invariant-violation";
    report["error"] = e.what();
  } catch (const std::exception& e) {
    code = kInvariant;
    status = "internal-error";
    report["error"] = e.what();
  }
  report["command"] = command;
  report["input_digest"] = ctx.digest();
  report["seed"] = o.seed;
  report["status"] = status;
  report["exit_code"] = code;
  if (report.contains("error")) err << command << ": " << report["error"].get<std::string>() << "\n";

  const std::string text = report.dump(2) + "\n";
  if (o.output.empty()) {
    out << text;
  } else {
    std::ofstream f(o.output, std::ios::binary);
    if (!f) {
      err << "cannot write '" << o.output << "'\n";
      return kParse;
    }
    f << text;
  }
  return code;
}

}  // namespace symm::cli
