#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace zeroent;

namespace {

DualGraph triangle() {
  return DualGraph::from_edges({"a", "b", "c"}, {{"a", "b", 1}, {"b", "c", 1}, {"c", "a", 1}});
}

Int gcd_of(const IntVec& v) {
  Int g = 0;
  for (auto& x : v) g = gcd(g, iabs(x));
  return g;
}

}  // namespace

TEST_CASE("graph validation", "[graph]") {
  REQUIRE_THROWS_AS(DualGraph({"a", "b"}, IntMatrix{{-2, 1}, {0, -2}}), GraphError);
  REQUIRE_THROWS_AS(DualGraph({"a", "b"}, IntMatrix{{-2, -1}, {-1, -2}}), GraphError);
  REQUIRE_THROWS_AS(DualGraph({"a", "b"}, IntMatrix{{-2, 1}, {1, -1}}), GraphError);
  REQUIRE_THROWS_AS(DualGraph({"a", "a"}, IntMatrix{{-2, 1}, {1, -2}}), GraphError);
  REQUIRE_THROWS(DualGraph::from_edges({"a"}, {{"a", "z", 1}}));
  REQUIRE(gram(DualGraph({"v"}, IntMatrix{{-2}})).gram == IntMatrix{{-2}});
  auto dbl = DualGraph::from_edges({"x", "y"}, {{"x", "y", 2}});
  REQUIRE(gram(dbl).gram == IntMatrix{{-2, 2}, {2, -2}});
  REQUIRE(gram(dbl).det() == 0);
}

TEST_CASE("catalog shapes", "[catalog]") {
  REQUIRE(builtin_catalog().size() == 15);
  auto& a7 = catalog_entry("A7~").graph;
  REQUIRE(a7.size() == 10);
  REQUIRE(a7.edges().size() == 10);
  auto& d6 = catalog_entry("D6+A1~").graph;
  REQUIRE(d6.size() == 11);
  std::size_t doubles = 0;
  for (auto& [a, b, w] : d6.edges())
    if (w == 2) ++doubles;
  REQUIRE(doubles == 1);
  // E6~: three arms of length 3 around a degree-3 centre
  auto& e6 = catalog_entry("E6~").graph;
  REQUIRE(e6.size() == 10);
  std::vector<int> deg(10, 0);
  for (auto& [a, b, w] : e6.edges()) {
    ++deg[e6.index(a)];
    ++deg[e6.index(b)];
  }
  REQUIRE(std::count(deg.begin(), deg.end(), 3) == 1);
  REQUIRE(std::count(deg.begin(), deg.end(), 1) == 3);
  REQUIRE(e6.edges().size() == 9);
  REQUIRE(catalog_entry("D6+A1~").conductrix.size() == 6);
  REQUIRE_THROWS(catalog_entry("nope"));
}

TEST_CASE("enumerate_fibers agrees with a brute-force subset scan", "[fibers]") {
  for (auto& e : builtin_catalog()) {
    INFO(e.name);
    auto fs = enumerate_fibers(e.graph);
    REQUIRE(oracle::as_shape(fs) == oracle::brute_force_fibers(e.graph));
  }
  REQUIRE(oracle::as_shape(enumerate_fibers(triangle())) == oracle::brute_force_fibers(triangle()));
}

TEST_CASE("fiber classes are isotropic and orthogonal to their support", "[fibers]") {
  for (auto& e : builtin_catalog()) {
    GraphAnalysis a(e.graph);
    for (auto& f : a.fibers()) {
      INFO(e.name);
      REQUIRE(a.pairing(f.iso_class, f.iso_class) == 0);
      IntVec pv = a.pairing_vector(f.iso_class);
      for (auto v : f.support) REQUIRE(pv[v] == 0);
      REQUIRE(gcd_of(f.marks) == 1);
      REQUIRE(affine_type_from_marks(f.marks) == f.affine_type);
      // an odd pairing with some vertex makes the class primitive in the dual
      if (f.halfness == Halfness::HalfFiber) REQUIRE(gcd_of(pv) == 1);
      else REQUIRE(gcd_of(pv) % 2 == 0);
    }
  }
}

TEST_CASE("fibers of the A7~ graph", "[fibers]") {
  GraphAnalysis a(catalog_entry("A7~").graph);
  REQUIRE(signature(a.lattice()) == Signature{1, 9, 0});
  REQUIRE(a.span_is_E10());
  auto i8 = a.find_fiber({"R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8"});
  REQUIRE(i8);
  REQUIRE(i8->kodaira_label() == "I8");
  REQUIRE(i8->halfness == Halfness::HalfFiber);
  auto d8 = a.find_fiber({"E1", "R2", "R1", "R8", "R7", "R6", "R5", "R4", "E2"});
  REQUIRE(d8);
  REQUIRE(d8->kodaira_label() == "I4*");
  REQUIRE(d8->affine_type.label() == "D8~");
  auto p8 = a.profile(*i8);
  REQUIRE(p8.orthogonal_root_rank == 7);
  REQUIRE_FALSE(p8.extremal_compatible);
  auto pd = a.profile(*d8);
  REQUIRE(pd.orthogonal_root_rank == 8);
  REQUIRE(pd.extremal_compatible);
  REQUIRE(a.scan(*i8, 1).violations.empty());
}

TEST_CASE("small graphs", "[fibers]") {
  auto fs = enumerate_fibers(triangle());
  REQUIRE(fs.size() == 1);
  REQUIRE(fs[0].kodaira_label() == "I3/IV");
  auto dbl = enumerate_fibers(DualGraph::from_edges({"x", "y"}, {{"x", "y", 2}}));
  REQUIRE(dbl.size() == 1);
  REQUIRE(dbl[0].affine_type.label() == "A1~");
  REQUIRE(dbl[0].kodaira_label() == "III/I2");
  REQUIRE_FALSE(span_is_E10(DualGraph({"v"}, IntMatrix{{-2}})));
  REQUIRE(enumerate_fibers(DualGraph({"v"}, IntMatrix{{-2}})).empty());
}

TEST_CASE("E6~ graph has the IV* fiber with its marks", "[fibers]") {
  GraphAnalysis a(catalog_entry("E6~").graph);
  REQUIRE(a.span_is_E10());
  auto f = a.find_fiber(catalog_entry("E6~").f0_support);
  REQUIRE(f);
  REQUIRE(f->kodaira_label() == "IV*");
  std::vector<Int> m(f->marks.begin(), f->marks.end());
  std::sort(m.begin(), m.end());
  REQUIRE(m == std::vector<Int>{1, 1, 1, 2, 2, 2, 3});
  REQUIRE_FALSE(a.profile(*f).extremal_compatible);
}

TEST_CASE("defining graphs have a unique non-extremal fibration", "[theorems]") {
  struct Want {
    const char* name;
    const char* label;
    std::size_t rank;
    const char* type;
  };
  for (auto w : {Want{"A7~", "I8", 7, "A7"}, Want{"E6~", "IV*", 6, "E6"}, Want{"D6+A1~", "III*", 7, "E7"}}) {
    INFO(w.name);
    auto& e = catalog_entry(w.name);
    GraphAnalysis a(e.graph);
    REQUIRE(a.span_is_E10());
    auto ne = a.unique_nonextremal();
    REQUIRE(ne.is_unique());
    REQUIRE(ne.unique->kodaira_label() == w.label);
    auto p = a.profile(*ne.unique);
    REQUIRE(p.orthogonal_root_rank == w.rank);
    REQUIRE(p.orthogonal_root_type.str() == w.type);
    auto f0 = a.find_fiber(e.f0_support);
    REQUIRE(f0);
    REQUIRE(a.orbit_key(f0->iso_class) == a.orbit_key(ne.unique->iso_class));
    REQUIRE(a.scan(*f0, e.f0_scale).violations.empty());
  }
  auto none = unique_nonextremal(catalog_entry("E8-extraspecial").graph);
  REQUIRE(none.classes.empty());
  REQUIRE_THROWS_AS(unique_nonextremal(catalog_entry("sec4-IIIs-1").graph), std::domain_error);
}

TEST_CASE("contradiction scan finds the stated half-fibers", "[scan]") {
  auto& e = catalog_entry("sec4-graph2");
  GraphAnalysis a(e.graph);
  auto f0 = a.find_fiber(e.f0_support);
  auto vs = a.scan(*f0, 2).violations;
  bool found = false;
  for (auto& v : vs)
    if (v.f2.kodaira_label() == "I4" && v.f2.halfness == Halfness::HalfFiber && v.pairing == 1) found = true;
  REQUIRE(found);
  auto& d1 = catalog_entry("lem43-d1");
  GraphAnalysis b(d1.graph);
  bool i6 = false;
  for (auto& v : contradiction_scan(d1.graph, *b.find_fiber(d1.f0_support), 2))
    if (v.f2.kodaira_label() == "I6" && v.pairing == 1) i6 = true;
  REQUIRE(i6);
}

TEST_CASE("classification replay matches the case tree", "[classify]") {
  std::size_t survivors = 0;
  for (auto& e : builtin_catalog()) {
    auto r = classify_entry(e);
    INFO(e.name << " -> " << r.summary() << " expected " << e.expected);
    REQUIRE(r.matches_expected());
    if (r.outcome == Outcome::Survivor) {
      ++survivors;
      REQUIRE(e.context == CatalogContext::Defining);
    }
    if (r.outcome == Outcome::Contradiction) REQUIRE_FALSE(r.violations.empty());
  }
  REQUIRE(survivors == 3);
}

TEST_CASE("DOT export", "[dot]") {
  auto& g = catalog_entry("D6+A1~").graph;
  GraphAnalysis a(g);
  auto f = a.find_fiber(catalog_entry("D6+A1~").f0_support);
  std::string dot = to_dot(g, &*f, "D6+A1~");
  REQUIRE(dot.rfind("graph \"D6+A1~\" {", 0) == 0);
  REQUIRE(dot.find("\"R9\" -- \"RXX\" [label=\"2\"") != std::string::npos);
  REQUIRE(dot.find("\"R2\" [style=dashed]") != std::string::npos);
  REQUIRE(dot.find("\"R1\" [style=dashed]") == std::string::npos);
  REQUIRE(to_dot(g) == to_dot(g));
}
