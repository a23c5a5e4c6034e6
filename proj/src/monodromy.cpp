#include "covres/monodromy.hpp"

#include <numeric>
#include <string>

#include "covres/errors.hpp"
#include "covres/lattice.hpp"

namespace covres {

void ZetaFactorization::mul(long long m, long long exponent) {
  if (m < 1) throw Error(ErrorCode::BadModel, "factor degree must be positive");
  if (exponent == 0) return;
  long long& a = factors[m];
  a += exponent;
  if (a == 0) factors.erase(m);
}

void ZetaFactorization::mul(const ZetaFactorization& other) {
  for (const auto& [m, a] : other.factors) mul(m, a);
}

std::map<long long, long long> ZetaFactorization::cyclotomic_exponents() const {
  std::map<long long, long long> e;
  for (const auto& [m, a] : factors)
    for (long long d : divisors(m)) e[d] += a;
  return e;
}

long long ZetaFactorization::degree() const {
  long long deg = 0;
  for (const auto& [m, a] : factors) deg += m * a;
  return deg;
}

long long milnor_components(const CoveringPresentation& p) {
  return stats(realize(p).cover).num_components;
}

ZetaFactorization acampo_delta1(const DecoratedGraph& base, long long k) {
  if (k < 1) throw Error(ErrorCode::BadModel, "component count must be positive");
  ZetaFactorization z;
  z.mul(k, 1);
  for (const auto& [w, dat] : base.vertices) {
    if (dat.kind != VertexKind::Node) continue;
    long long delta = base.degree(w);
    z.mul(base.mult_of(w), delta + 2 * dat.genus - 2);
  }
  for (const auto& [d, e] : z.cyclotomic_exponents())
    if (e < 0)
      throw Error(ErrorCode::NegativeCyclotomicExponent,
                  "cyclotomic exponent at order " + std::to_string(d) + " is " + std::to_string(e));
  return z;
}

std::pair<long long, long long> dim_eigen_one(const DecoratedGraph& base) {
  GraphStats s = stats(base);
  long long g = s.total_genus, c = s.cycle_rank, arrows = s.num_arrows;
  return {2 * g + 2 * c + arrows - 1, 2 * g + c + arrows - 1};
}

std::map<long long, long long> jordan_blocks2(const CoveringPresentation& p) {
  check_presentation(p);
  if (stats(realize(p).cover).num_components != 1)
    throw Error(ErrorCode::DisconnectedCover, "the realized covering graph is not connected");

  long long L = 1;
  for (const auto& [v, n] : p.data.n) {
    (void)v;
    L = lcm_ll(L, n);
  }
  for (size_t e = 0; e < p.base.edges.size(); ++e) L = lcm_ll(L, p.edge_fiber(e));

  std::map<long long, long long> cycle_rank_mod;  // k -> c(mod_k cover)
  for (long long k : divisors(L)) cycle_rank_mod[k] = stats(realize(mod_n(p, k)).cover).cycle_rank;

  std::map<long long, long long> blocks2;
  for (long long n : divisors(L)) {
    long long s = 0;
    for (long long k : divisors(n)) s += moebius(n / k) * cycle_rank_mod.at(k);
    long long phi = euler_phi(n);
    if (s % phi != 0)
      throw Error(ErrorCode::MoebiusNonIntegral,
                  "block count at order " + std::to_string(n) + " is not an integer");
    long long b = s / phi;
    if (b < 0)
      throw Error(ErrorCode::NegativeBlockCount,
                  "block count at order " + std::to_string(n) + " is negative");
    if (b > 0) blocks2[n] = b;
  }
  return blocks2;
}

JordanReport jordan_report(const DecoratedGraph& base, const CoveringPresentation& p) {
  if (!(p.base == base))
    throw Error(ErrorCode::InconsistentCoveringData, "presentation is over a different base graph");
  JordanReport r;
  r.blocks2 = jordan_blocks2(p);
  r.milnor_components = milnor_components(p);  // = 1, the cover is connected

  ZetaFactorization z = acampo_delta1(base, r.milnor_components);
  for (const auto& [d, e] : z.cyclotomic_exponents())
    if (e > 0) r.dims[d] = e;

  // every order with blocks must carry enough dimension; the rest are 1-blocks
  for (const auto& [d, b2] : r.blocks2) {
    auto it = r.dims.find(d);
    long long dim = (it == r.dims.end()) ? 0 : it->second;
    if (dim < 2 * b2)
      throw Error(ErrorCode::NegativeBlockCount,
                  "more 2-blocks than dimension at order " + std::to_string(d));
  }
  for (const auto& [d, dim] : r.dims) {
    long long b2 = r.blocks2.count(d) ? r.blocks2.at(d) : 0;
    long long b1 = dim - 2 * b2;
    if (b1 > 0) r.blocks1[d] = b1;
  }

  // the 2-blocks must account exactly for the independent cycles of the cover
  long long total = 0;
  for (const auto& [d, b2] : r.blocks2) total += euler_phi(d) * b2;
  if (total != stats(realize(p).cover).cycle_rank)
    throw Error(ErrorCode::NegativeBlockCount, "2-block total does not match the cover cycle rank");
  return r;
}

long long neumann_crosscheck(const DecoratedGraph& base, long long N) {
  if (N < 1) throw Error(ErrorCode::BadModel, "N must be >= 1");
  GraphStats s = stats(base);
  if (s.num_components != 1 || s.cycle_rank != 0 || s.total_genus != 0)
    throw Error(ErrorCode::QHSRequired, "edge/vertex gcd count needs a connected genus-zero tree base");
  long long value = 0;
  for (const auto& [a, b] : base.edges) {
    if (base.is_arrowhead(a) || base.is_arrowhead(b)) continue;
    value += std::gcd(std::gcd(base.mult_of(a), base.mult_of(b)), N) - 1;
  }
  for (const auto& [w, dat] : base.vertices) {
    if (dat.kind != VertexKind::Node) continue;
    long long star = base.mult_of(w);
    for (size_t e : base.edges_at(w)) {
      const auto& [a, b] = base.edges[e];
      star = std::gcd(star, base.mult_of(a == w ? b : a));
    }
    value -= std::gcd(star, N) - 1;
  }
  return value;
}

ValidationReport finiteness_checks(const DecoratedGraph& base, const CoveringPresentation& p,
                                   const JordanReport& report) {
  if (!(p.base == base))
    throw Error(ErrorCode::InconsistentCoveringData, "presentation is over a different base graph");
  ValidationReport out;
  const auto& blocks2 = report.blocks2;
  GraphStats s = stats(base);

  if (s.cycle_rank == 0) {
    // (i) coprime splitting: a 2-block of composite order k = p*q, (p,q)=1,
    // forces one at an order dividing p or dividing q
    for (const auto& [k, b2] : blocks2) {
      (void)b2;
      for (long long pp : divisors(k)) {
        long long qq = k / pp;
        if (pp <= 1 || qq <= pp || std::gcd(pp, qq) != 1) continue;
        bool witness = false;
        for (const auto& [o, b] : blocks2) {
          (void)b;
          if (pp % o == 0 || qq % o == 0) witness = true;
        }
        if (!witness)
          out.findings.push_back({"CoprimeSplit",
                                  "2-block at order " + std::to_string(k) + " but none at an order dividing " +
                                      std::to_string(pp) + " or " + std::to_string(qq)});
      }
    }
  }

  bool qhs = (s.num_components == 1 && s.cycle_rank == 0 && s.total_genus == 0);
  if (qhs && s.num_arrows == 1) {
    // (ii) a 2-block at order k needs a prime p | k with p^2 | torsion order
    Int torsion = link_homology(base).torsion_order();
    for (const auto& [k, b2] : blocks2) {
      (void)b2;
      if (k < 2) continue;
      bool witness = false;
      long long rest = k;
      for (long long q = 2; q <= rest; ++q) {
        if (rest % q != 0) continue;
        while (rest % q == 0) rest /= q;
        if (torsion % (Int(q) * q) == 0) witness = true;
      }
      if (!witness)
        out.findings.push_back({"TorsionSquare",
                                "2-block at order " + std::to_string(k) +
                                    " but no prime square from its order divides the link homology torsion"});
    }
  }
  return out;
}

}  // namespace covres
