#include <doctest.h>

#include "covres/errors.hpp"
#include "covres/monodromy.hpp"
#include "fixtures.hpp"

using namespace covres;

namespace {

long long exps_total(const std::map<long long, long long>& e) {
  long long t = 0;
  for (const auto& [d, a] : e) t += euler_phi(d) * a;
  return t;
}

}  // namespace

TEST_CASE("zeta factorizations multiply and expand into cyclotomic exponents") {
  ZetaFactorization z;
  z.mul(6, 1);
  z.mul(2, -1);
  z.mul(2, 1);  // cancels
  CHECK(z.factors == std::map<long long, long long>{{6, 1}});
  CHECK(z.degree() == 6);
  CHECK(z.cyclotomic_exponents() ==
        std::map<long long, long long>{{1, 1}, {2, 1}, {3, 1}, {6, 1}});

  ZetaFactorization w;
  w.mul(1, -1);
  z.mul(w);
  CHECK(z.degree() == 5);
  CHECK(z.cyclotomic_exponents().at(1) == 0);

  CHECK_THROWS_AS(z.mul(0, 1), Error);
}

TEST_CASE("characteristic polynomial of the algebraic monodromy") {
  // plane cusp: everything cancels except the primitive sixth roots
  ZetaFactorization c = acampo_delta1(fixtures::cusp(), 1);
  CHECK(c.factors ==
        std::map<long long, long long>{{1, 1}, {2, -1}, {3, -1}, {6, 1}});
  CHECK(c.degree() == 2);
  auto ce = c.cyclotomic_exponents();
  CHECK(ce.at(6) == 1);
  CHECK(ce.at(1) == 0);
  CHECK(ce.at(2) == 0);
  CHECK(ce.at(3) == 0);

  // six-node star: (t+1)^2
  ZetaFactorization s = acampo_delta1(fixtures::ns1(), 1);
  CHECK(s.degree() == 2);
  auto se = s.cyclotomic_exponents();
  CHECK(se.at(1) == 0);
  CHECK(se.at(2) == 2);

  // a germ whose naive product has a negative exponent is rejected
  DecoratedGraph bad;
  fixtures::add(bad, "w", fixtures::node(-2, 2));
  fixtures::add(bad, "a", fixtures::arrow(2));
  fixtures::join(bad, "w", "a");
  CHECK_THROWS_AS((void)acampo_delta1(bad, 1), Error);
  CHECK_THROWS_AS((void)acampo_delta1(fixtures::cusp(), 0), Error);
}

TEST_CASE("eigenvalue-one dimensions from the graph shape") {
  CHECK(dim_eigen_one(fixtures::ns1()) == std::pair<long long, long long>{0, 0});
  CHECK(dim_eigen_one(fixtures::cusp()) == std::pair<long long, long long>{0, 0});
  CHECK(dim_eigen_one(fixtures::gamma_b()) == std::pair<long long, long long>{3, 2});
  CHECK(dim_eigen_one(fixtures::gamma_c()) == std::pair<long long, long long>{6, 6});
  CHECK(dim_eigen_one(fixtures::gamma_a()) == std::pair<long long, long long>{7, 7});
}

TEST_CASE("number of fibre pieces seen by the cover") {
  CHECK(milnor_components(fixtures::gamma_c_f1()) == 2);
  CHECK(milnor_components(fixtures::gamma_c_f2()) == 1);
  CHECK(milnor_components(universal_covering(fixtures::ns1())) == 1);
  CHECK(milnor_components(fixtures::gamma_b_f1()) == 1);
}

TEST_CASE("size-2 block counts from quotient cycle ranks") {
  auto b_ns1 = jordan_blocks2(universal_covering(fixtures::ns1()));
  CHECK(b_ns1 == std::map<long long, long long>{{2, 1}});

  // both triangle covers carry one block at order 1 and one at order 2
  CHECK(jordan_blocks2(fixtures::gamma_b_f1()) ==
        std::map<long long, long long>{{1, 1}, {2, 1}});
  CHECK(jordan_blocks2(fixtures::gamma_b_f2()) ==
        std::map<long long, long long>{{1, 1}, {2, 1}});

  // the double-edge cover of the genus germ versus its split sibling
  CHECK(jordan_blocks2(fixtures::gamma_a_f2()) ==
        std::map<long long, long long>{{2, 1}});
  CHECK(jordan_blocks2(fixtures::gamma_a_f1()).empty());

  // tree cover: no cycles anywhere
  CHECK(jordan_blocks2(universal_covering(fixtures::cusp())).empty());

  CHECK(jordan_blocks2(fixtures::ex918_pres()) ==
        std::map<long long, long long>{{2, 1}});

  CHECK_THROWS_AS((void)jordan_blocks2(fixtures::gamma_c_f1()), Error);
}

TEST_CASE("jordan structure of the six-node star germ") {
  JordanReport r = jordan_report(fixtures::ns1(), universal_covering(fixtures::ns1()));
  CHECK(r.milnor_components == 1);
  CHECK(r.dims == std::map<long long, long long>{{2, 2}});
  CHECK(r.blocks2 == std::map<long long, long long>{{2, 1}});
  CHECK(r.blocks1.empty());  // the two dimensions at order 2 pair into one block
}

TEST_CASE("jordan structure of the plane cusp is semisimple") {
  JordanReport r = jordan_report(fixtures::cusp(), universal_covering(fixtures::cusp()));
  CHECK(r.dims == std::map<long long, long long>{{6, 1}});
  CHECK(r.blocks2.empty());
  CHECK(r.blocks1 == std::map<long long, long long>{{6, 1}});
}

TEST_CASE("jordan structure of the triangle germ covers") {
  JordanReport r = jordan_report(fixtures::gamma_b(), fixtures::gamma_b_f2());
  CHECK(r.dims == std::map<long long, long long>{{1, 3}, {2, 2}, {3, 1}, {4, 1}, {6, 1}, {8, 1}});
  CHECK(r.blocks2 == std::map<long long, long long>{{1, 1}, {2, 1}});
  CHECK(r.blocks1 == std::map<long long, long long>{{1, 1}, {3, 1}, {4, 1}, {6, 1}, {8, 1}});

  // dimension at eigenvalue one agrees with the shape formula on both counts
  auto [gen, ker] = dim_eigen_one(fixtures::gamma_b());
  CHECK(r.dims.at(1) == gen);
  CHECK(gen - r.blocks2.at(1) == ker);

  // total dimension equals the degree of the characteristic polynomial
  CHECK(exps_total(r.dims) == acampo_delta1(fixtures::gamma_b(), 1).degree());

  JordanReport r1 = jordan_report(fixtures::gamma_b(), fixtures::gamma_b_f1());
  CHECK(r1.blocks2 == r.blocks2);
  CHECK(r1.dims == r.dims);
}

TEST_CASE("jordan structure of the genus-3 chain germ") {
  JordanReport r = jordan_report(fixtures::ex918_base(), fixtures::ex918_pres());
  CHECK(r.dims == std::map<long long, long long>{{1, 6}, {2, 6}, {6, 1}});
  CHECK(r.blocks2 == std::map<long long, long long>{{2, 1}});
  CHECK(r.blocks1 == std::map<long long, long long>{{1, 6}, {2, 4}, {6, 1}});
  CHECK(exps_total(r.dims) == 14);

  CHECK_THROWS_AS((void)jordan_report(fixtures::gamma_a(), fixtures::gamma_b_f1()), Error);
}

TEST_CASE("edge/vertex gcd count of size-2 blocks") {
  DecoratedGraph star = fixtures::ns1();
  CHECK(neumann_crosscheck(star, 2) == 1);
  for (long long N : {1, 3, 5, 7, 9, 11}) CHECK(neumann_crosscheck(star, N) == 0);
  CHECK(neumann_crosscheck(star, 4) == 1);
  CHECK(neumann_crosscheck(star, 6) == 1);

  for (long long N = 1; N <= 12; ++N) CHECK(neumann_crosscheck(fixtures::cusp(), N) == 0);

  CHECK_THROWS_AS((void)neumann_crosscheck(fixtures::gamma_a(), 2), Error);  // genus
  CHECK_THROWS_AS((void)neumann_crosscheck(fixtures::gamma_b(), 2), Error);  // cycle
  CHECK_THROWS_AS((void)neumann_crosscheck(star, 0), Error);
}

TEST_CASE("structural obstructions on the block orders") {
  DecoratedGraph star = fixtures::ns1();
  CoveringPresentation u = universal_covering(star);
  JordanReport r = jordan_report(star, u);
  CHECK(finiteness_checks(star, u, r).ok());

  JordanReport rc = jordan_report(fixtures::cusp(), universal_covering(fixtures::cusp()));
  CHECK(finiteness_checks(fixtures::cusp(), universal_covering(fixtures::cusp()), rc).ok());

  JordanReport re = jordan_report(fixtures::ex918_base(), fixtures::ex918_pres());
  CHECK(finiteness_checks(fixtures::ex918_base(), fixtures::ex918_pres(), re).ok());

  // a lone block of composite coprime order violates the splitting rule
  JordanReport fake;
  fake.blocks2 = {{6, 1}};
  ValidationReport v1 = finiteness_checks(star, u, fake);
  REQUIRE(v1.findings.size() == 1);
  CHECK(v1.findings[0].code == "CoprimeSplit");

  // a block of prime order whose square misses the torsion is flagged
  JordanReport fake3;
  fake3.blocks2 = {{3, 1}};
  ValidationReport v2 = finiteness_checks(star, u, fake3);  // torsion order 4
  REQUIRE(v2.findings.size() == 1);
  CHECK(v2.findings[0].code == "TorsionSquare");

  CHECK_THROWS_AS((void)finiteness_checks(fixtures::gamma_a(), fixtures::gamma_b_f1(), fake), Error);
}
