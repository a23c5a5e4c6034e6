#include <doctest.h>

#include <random>

#include "covres/errors.hpp"
#include "covres/graph.hpp"
#include "covres/lattice.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace covres;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

// random unimodular matrix: a product of elementary row additions and swaps
IntMatrix random_unimodular(size_t n, std::mt19937& rng) {
  IntMatrix u = IntMatrix::identity(n);
  std::uniform_int_distribution<int> idx(0, static_cast<int>(n) - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int step = 0; step < 12; ++step) {
    int i = idx(rng), j = idx(rng);
    if (i == j) continue;
    long long c = coef(rng);
    for (size_t k = 0; k < n; ++k) u.at(i, k) += Int(c) * u.at(j, k);
  }
  return u;
}

}  // namespace

TEST_CASE("intersection_matrix indexes nodes and counts parallel edges") {
  DecoratedGraph single;
  fixtures::add(single, "w", fixtures::node(-2, std::nullopt));
  auto m1 = intersection_matrix(single);
  REQUIRE(m1.rows() == 1);
  CHECK(m1.at(0, 0) == -2);

  auto m = intersection_matrix(fixtures::ns1());
  REQUIRE(m.rows() == 6);  // the arrowhead is excluded
  for (size_t i = 0; i < 5; ++i) CHECK(m.at(i, i) == -2);
  CHECK(m.at(5, 5) == -3);
  CHECK(m.at(0, 2) == 1);  // v1 - v3
  CHECK(m.at(2, 0) == 1);
  CHECK(m.at(0, 1) == 0);

  DecoratedGraph dbl;
  fixtures::add(dbl, "a", fixtures::node(-4, std::nullopt, 5));
  fixtures::add(dbl, "b", fixtures::node(-2, std::nullopt));
  fixtures::join(dbl, "a", "b");
  fixtures::join(dbl, "a", "b");
  auto md = intersection_matrix(dbl);
  CHECK(md.at(0, 1) == 2);

  DecoratedGraph missing;
  fixtures::add(missing, "w", fixtures::node(std::nullopt, 1));
  CHECK_THROWS_AS((void)intersection_matrix(missing), Error);
}

TEST_CASE("negative definiteness by exact leading minors") {
  CHECK(is_negative_definite(from_rows({{-2}})));
  CHECK(!is_negative_definite(from_rows({{0}})));
  CHECK(!is_negative_definite(from_rows({{-2, 3}, {3, -2}})));

  auto e8 = intersection_matrix(fixtures::e8());
  CHECK(is_negative_definite(e8));
  CHECK(oracle::det_cofactor(e8) == 1);  // even rank, unimodular
  CHECK(det(e8) == 1);

  // every stripped fixture is a resolution graph, so negative definite
  for (const auto& g : {fixtures::ns1(), fixtures::cusp(), fixtures::gamma_a(),
                        fixtures::gamma_b(), fixtures::gamma_c()})
    CHECK(is_negative_definite(intersection_matrix(strip_embedding(g))));
}

TEST_CASE("determinant matches the cofactor oracle") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    size_t n = 1 + trial % 5;
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) m.at(i, j) = entry(rng);
    CHECK(det(m) == oracle::det_cofactor(m));
  }
}

TEST_CASE("smith normal form on fixed examples") {
  auto id2 = smith_normal_form(IntMatrix::identity(2));
  CHECK(id2.diag == std::vector<Int>{1, 1});
  CHECK(id2.rank == 2);

  auto a2 = smith_normal_form(from_rows({{-2, 1}, {1, -2}}));
  CHECK(a2.diag == std::vector<Int>{1, 3});

  auto ns = smith_normal_form(intersection_matrix(strip_embedding(fixtures::ns1())));
  Int order = 1;
  for (const Int& d : ns.diag) order *= d;
  CHECK(order == 4);

  // zero matrix: rank 0
  CHECK(smith_normal_form(IntMatrix(2, 3)).rank == 0);
}

TEST_CASE("smith normal form equals the determinantal-divisor oracle") {
  std::mt19937 rng(987123);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int trial = 0; trial < 30; ++trial) {
    size_t r = 1 + trial % 4, c = 1 + (trial / 2) % 4;
    IntMatrix m(r, c);
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < c; ++j) m.at(i, j) = entry(rng);
    auto s = smith_normal_form(m);
    auto ref = oracle::snf_by_minors(m);
    CHECK(s.diag == ref);
    CHECK(s.rank == ref.size());
  }
}

TEST_CASE("smith normal form is invariant under unimodular changes of basis") {
  std::mt19937 rng(5150);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    size_t n = 2 + trial % 3;
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) m.at(i, j) = entry(rng);
    IntMatrix u = random_unimodular(n, rng), v = random_unimodular(n, rng);
    CHECK(smith_normal_form(m).diag == smith_normal_form(u.mul(m).mul(v)).diag);
  }
}

TEST_CASE("smith transforms reconstruct the diagonal") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> entry(-6, 6);
  for (int trial = 0; trial < 15; ++trial) {
    size_t r = 1 + trial % 3, c = 1 + (trial / 3) % 3;
    IntMatrix m(r, c);
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < c; ++j) m.at(i, j) = entry(rng);
    auto t = smith_with_transforms(m);
    IntMatrix d = t.u.mul(m).mul(t.v);
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < c; ++j) {
        Int want = (i == j && i < t.rank) ? t.diag[i] : Int(0);
        CHECK(d.at(i, j) == want);
      }
    Int du = det(t.u), dv = det(t.v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
  }
}

TEST_CASE("solve_multiplicities reproduces the decorated figures") {
  DecoratedGraph ns = fixtures::ns1();
  for (auto& [id, vd] : ns.vertices)
    if (vd.kind == VertexKind::Node) vd.mult.reset();
  auto m = solve_multiplicities(ns);
  CHECK(m.at(VertexId("v1")) == 1);
  CHECK(m.at(VertexId("v2")) == 1);
  CHECK(m.at(VertexId("v3")) == 2);
  CHECK(m.at(VertexId("v4")) == 2);
  CHECK(m.at(VertexId("v5")) == 1);
  CHECK(m.at(VertexId("v6")) == 1);

  DecoratedGraph c = fixtures::cusp();
  for (auto& [id, vd] : c.vertices)
    if (vd.kind == VertexKind::Node) vd.mult.reset();
  auto mc = solve_multiplicities(c);
  CHECK(mc.at(VertexId("v1")) == 2);
  CHECK(mc.at(VertexId("v2")) == 6);
  CHECK(mc.at(VertexId("v3")) == 3);

  DecoratedGraph single;
  fixtures::add(single, "w", fixtures::node(-2, std::nullopt));
  fixtures::add(single, "t", fixtures::arrow(2));
  fixtures::join(single, "w", "t");
  CHECK(solve_multiplicities(single).at(VertexId("w")) == 1);
}

TEST_CASE("solve_multiplicities error paths") {
  DecoratedGraph noarrow = strip_embedding(fixtures::cusp());
  CHECK_THROWS_AS((void)solve_multiplicities(noarrow), Error);

  DecoratedGraph posdef;
  fixtures::add(posdef, "w", fixtures::node(2, std::nullopt));
  fixtures::add(posdef, "t", fixtures::arrow(1));
  fixtures::join(posdef, "w", "t");
  CHECK_THROWS_AS((void)solve_multiplicities(posdef), Error);

  // solution exists but is not integral: single (-2) node with a unit arrow
  DecoratedGraph frac;
  fixtures::add(frac, "w", fixtures::node(-2, std::nullopt));
  fixtures::add(frac, "t", fixtures::arrow(1));
  fixtures::join(frac, "w", "t");
  CHECK_THROWS_AS((void)solve_multiplicities(frac), Error);
}

TEST_CASE("solve_euler_numbers recovers figure decorations") {
  // arrowed node of multiplicity 4 with two unit arrows and two mult-3 nodes
  // multiplicity-4 node with two unit arrows and two mult-3 neighbours, each
  // sitting on a triangle of unit nodes
  DecoratedGraph g;
  fixtures::add(g, "a", fixtures::node(std::nullopt, 4));
  fixtures::add(g, "t1", fixtures::arrow(1));
  fixtures::add(g, "t2", fixtures::arrow(1));
  fixtures::join(g, "a", "t1");
  fixtures::join(g, "a", "t2");
  for (int i = 1; i <= 2; ++i) {
    std::string b = "b" + std::to_string(i);
    std::string ua = "u" + std::to_string(i) + "a", ub = "u" + std::to_string(i) + "b";
    fixtures::add(g, b, fixtures::node(std::nullopt, 3));
    fixtures::add(g, ua, fixtures::node(std::nullopt, 1));
    fixtures::add(g, ub, fixtures::node(std::nullopt, 1));
    fixtures::join(g, "a", b);
    fixtures::join(g, b, ua);
    fixtures::join(g, b, ub);
    fixtures::join(g, ua, ub);
  }
  auto e = solve_euler_numbers(g);
  CHECK(e.at(VertexId("a")) == -2);    // (3+3+1+1)/4
  CHECK(e.at(VertexId("u1a")) == -4);  // neighbours of mult 3 and 1
  CHECK(e.at(VertexId("b1")) == -2);

  // genus-5 node of multiplicity 1 doubly joined to a multiplicity-2 node
  DecoratedGraph dbl;
  fixtures::add(dbl, "g5", fixtures::node(std::nullopt, 1, 5));
  fixtures::add(dbl, "c", fixtures::node(std::nullopt, 2));
  fixtures::add(dbl, "t1", fixtures::arrow(1));
  fixtures::add(dbl, "t2", fixtures::arrow(1));
  fixtures::join(dbl, "g5", "c");
  fixtures::join(dbl, "g5", "c");
  fixtures::join(dbl, "c", "t1");
  fixtures::join(dbl, "c", "t2");
  auto ed = solve_euler_numbers(dbl);
  CHECK(ed.at(VertexId("g5")) == -4);
  CHECK(ed.at(VertexId("c")) == -2);

  // non-exact division is refused
  DecoratedGraph bad;
  fixtures::add(bad, "w", fixtures::node(std::nullopt, 4));
  fixtures::add(bad, "t", fixtures::arrow(3));
  fixtures::join(bad, "w", "t");
  CHECK_THROWS_AS((void)solve_euler_numbers(bad), Error);
}

TEST_CASE("mult and euler solvers invert each other on the fixtures") {
  for (const auto& g : {fixtures::ns1(), fixtures::cusp(), fixtures::gamma_a(),
                        fixtures::gamma_b(), fixtures::gamma_c()}) {
    auto e = solve_euler_numbers(g);
    for (const auto& [w, val] : e) CHECK(val == g.euler_of(w));

    DecoratedGraph bare = g;
    for (auto& [id, vd] : bare.vertices)
      if (vd.kind == VertexKind::Node) vd.mult.reset();
    auto m = solve_multiplicities(bare);
    for (const auto& [w, val] : m) {
      CHECK(val == g.mult_of(w));
      bare.vertices[w].mult = val;
    }
    CHECK(check_compatibility(bare));
  }
}

TEST_CASE("link_homology on the fixtures") {
  auto ns = link_homology(strip_embedding(fixtures::ns1()));
  CHECK(ns.free_rank == 0);
  CHECK(ns.torsion_order() == 4);

  auto gc = link_homology(strip_embedding(fixtures::gamma_c()));
  CHECK(gc.free_rank == 6);  // 2 * genus 3
  CHECK(gc.torsion_order() == 1);

  auto e8 = link_homology(fixtures::e8());
  CHECK(e8.free_rank == 0);
  CHECK(e8.torsion.empty());

  // torsion order equals |det| on every stripped fixture
  for (const auto& g : {fixtures::ns1(), fixtures::cusp(), fixtures::gamma_a(),
                        fixtures::gamma_b(), fixtures::gamma_c()}) {
    auto s = strip_embedding(g);
    Int dd = abs(oracle::det_cofactor(intersection_matrix(s)));
    CHECK(link_homology(s).torsion_order() == dd);
  }
}

TEST_CASE("h_gamma extends the cokernel by one free rank per arrow") {
  DecoratedGraph single;
  fixtures::add(single, "w", fixtures::node(-2, std::nullopt));
  fixtures::add(single, "t", fixtures::arrow(1));
  fixtures::join(single, "w", "t");
  auto h = h_gamma(single);
  CHECK(h.free_rank == 1);
  CHECK(h.torsion.empty());

  auto ns = h_gamma(fixtures::ns1());
  CHECK(ns.free_rank == 1);
  CHECK(ns.torsion_order() == 4);

  // without arrows the group is exactly coker of the intersection matrix
  for (const auto& g : {strip_embedding(fixtures::ns1()), fixtures::e8(),
                        strip_embedding(fixtures::gamma_b())}) {
    auto h2 = h_gamma(g);
    auto c = cokernel(intersection_matrix(g));
    CHECK(h2.free_rank == c.free_rank);
    CHECK(h2.torsion == c.torsion);
  }
}
