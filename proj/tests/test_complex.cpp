#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "spherecomb/complex.hpp"
#include "spherecomb/errors.hpp"

using namespace sc;

namespace {

std::vector<Int> ints(std::initializer_list<long> xs) {
  std::vector<Int> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// brute force: every subset of every facet, counted once
std::vector<Int> fv_oracle(const SimplicialComplex& K) {
  std::set<Face> all;
  for (const Face& f : K.facets())
    for (unsigned m = 1; m < (1u << f.size()); ++m) {
      Face g;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (m >> i & 1u) g.push_back(f[i]);
      all.insert(g);
    }
  std::vector<Int> out(static_cast<std::size_t>(K.d()));
  for (const Face& g : all) out[g.size() - 1] += 1;
  return out;
}

}  // namespace

TEST_CASE("from_facets canonicalizes") {
  auto K = SimplicialComplex::from_facets({{0, 1}, {1, 2}, {0, 2}});
  CHECK(K.dim() == 1);
  CHECK(K.facets().size() == 3);
  auto L = SimplicialComplex::from_facets({{0, 1, 2}, {0, 1}});
  REQUIRE(L.facets().size() == 1);
  CHECK(L.facets()[0] == Face{0, 1, 2});
  CHECK_THROWS_AS(SimplicialComplex::from_facets({{0, 0, 1}}), MalformedFace);
  CHECK_THROWS_AS(SimplicialComplex::from_facets({{-1, 2}}), MalformedFace);
  CHECK(SimplicialComplex::from_facets({}).is_void());
  CHECK(SimplicialComplex::from_facets({{}}).dim() == -1);
}

TEST_CASE("f_vector against enumeration") {
  CHECK(f_vector(cross_polytope_boundary(3)).f == ints({6, 12, 8}));
  CHECK(f_vector(cross_polytope_boundary(4)).f == ints({8, 24, 32, 16}));
  CHECK(f_vector(SimplicialComplex::from_facets({{0}})).f == ints({1}));
  for (int d = 1; d <= 6; ++d) {
    auto K = cross_polytope_boundary(d);
    auto f = f_vector(K).f;
    CHECK(f == fv_oracle(K));
    for (int i = 1; i <= d; ++i) CHECK(f[i - 1] == pow2(i) * binom(d, i));
  }
}

TEST_CASE("Euler characteristic of generated spheres") {
  for (int d = 1; d <= 7; ++d)
    for (const auto& K : {cross_polytope_boundary(d), simplex_boundary(d)}) {
      auto f = f_vector(K).f;
      Int chi = 0;
      for (std::size_t i = 0; i < f.size(); ++i) chi += (i % 2 ? -1 : 1) * f[i];
      CHECK(chi == 1 + (d % 2 ? 1 : -1));
    }
}

TEST_CASE("links") {
  auto oct = cross_polytope_boundary(3);
  auto lk = link(oct, {0});
  CHECK(f_vector(lk).f == ints({4, 4}));
  auto c4 = cross_polytope_boundary(4);
  for (const Face& e : c4.edges()) CHECK(f_vector(link(c4, e)).f == ints({4, 4}));
  auto seg = SimplicialComplex::from_facets({{0, 1}});
  auto l = link(seg, {0, 1});
  CHECK(l.dim() == -1);
  CHECK(l.facets() == std::vector<Face>{Face{}});
  CHECK_THROWS_AS(link(oct, {0, 1}), AbsentFace);
  CHECK(link(oct, {}) == oct);
  for (const Face& e : c4.edges()) CHECK(link(link(c4, {e[0]}), {e[1]}) == link(c4, e));
}

TEST_CASE("link condition") {
  for (int d = 2; d <= 5; ++d) CHECK(check_link_condition(cross_polytope_boundary(d)).all_ok);
  auto tri = simplex_boundary(2);
  auto rep = check_link_condition(tri);
  CHECK_FALSE(rep.all_ok);
  CHECK(rep.violations().size() == 3);
  auto path = SimplicialComplex::from_facets({{0, 1}, {1, 2}});
  CHECK(link_condition_at(path, {0, 1}));
}

TEST_CASE("edge contraction") {
  auto c4 = cross_polytope_boundary(4);
  auto r = contract_edge(c4, {0, 2});
  CHECK(r.contracted_vertex == 0);
  auto f = f_vector(r.complex).f;
  // f_{k-1} drops by f_{k-2}(lk e) + f_{k-3}(lk e), lk e a 4-cycle
  CHECK(f == ints({7, 24 - 1 - 4, 32 - 4 - 4, 16 - 4}));
  auto cyc = cycle(4);
  CHECK(f_vector(contract_edge(cyc, {0, 1}).complex).f == ints({3, 3}));
  auto oct = cross_polytope_boundary(3);
  for (const Face& e : oct.edges()) CHECK(f_vector(contract_edge(oct, e).complex).f == ints({5, 9, 6}));
  CHECK_THROWS_AS(contract_edge(oct, {0, 1}), AbsentFace);
  CHECK(r.removed_second_copies == 1 + 5 + 8 + 4);
}

TEST_CASE("stellar subdivision") {
  auto s = stellar_subdivide_edge(simplex_boundary(2), {0, 1});
  CHECK(f_vector(s).f == ints({4, 4}));
  auto oct = cross_polytope_boundary(3);
  CHECK(f_vector(stellar_subdivide_edge(oct, {0, 2})).f == ints({7, 15, 10}));
  auto seg = stellar_subdivide_edge(SimplicialComplex::from_facets({{0, 1}}), {0, 1});
  CHECK(seg == SimplicialComplex::from_facets({{0, 2}, {1, 2}}));
}

TEST_CASE("tchebyshev subdivision order independence") {
  auto tri = simplex_boundary(2);
  std::vector<Face> edges = tri.edges();
  std::sort(edges.begin(), edges.end());
  do {
    CHECK(f_vector(tchebyshev_subdivision(tri, edges)).f == ints({6, 6}));
  } while (std::next_permutation(edges.begin(), edges.end()));
  auto seg = tchebyshev_subdivision(SimplicialComplex::from_facets({{0, 1}}));
  CHECK(f_vector(seg).f == ints({3, 2}));
  CHECK_THROWS_AS(tchebyshev_subdivision(tri, std::vector<Face>{{0, 1}}), BadOrder);
  auto oct = cross_polytope_boundary(3);
  auto base = f_vector(tchebyshev_subdivision(oct)).f;
  std::mt19937 rng(7);
  auto oe = oct.edges();
  for (int t = 0; t < 5; ++t) {
    std::shuffle(oe.begin(), oe.end(), rng);
    CHECK(f_vector(tchebyshev_subdivision(oct, oe)).f == base);
  }
}

TEST_CASE("generators and parsing") {
  CHECK(simplex_boundary(2) == cycle(3));
  CHECK_THROWS_AS(cycle(2), RangeError);
  CHECK_THROWS_AS(cross_polytope_boundary(0), RangeError);
  CHECK(generate("cross:3") == cross_polytope_boundary(3));
  CHECK(generate("simplexboundary:3") == simplex_boundary(3));
  CHECK_THROWS_AS(generate("torus:3"), ParseError);
  auto K = parse_facets("# square\n0 1\n1 2\n2 3 # last\n0 3\n");
  CHECK(K == cycle(4));
  CHECK(parse_facets(R"({"facets": [[0,1],[1,2],[0,2]]})") == cycle(3));
  CHECK_THROWS_AS(parse_facets("0 x\n"), ParseError);
  CHECK(parse_facets(facets_text(cross_polytope_boundary(4))) == cross_polytope_boundary(4));
  auto c4 = cross_polytope_boundary(4);
  for (const Face& f : c4.facets())
    for (std::size_t i = 0; i + 1 < f.size(); ++i) CHECK(f[i] / 2 != f[i + 1] / 2);
}
