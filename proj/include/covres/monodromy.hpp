#pragma once

#include <map>
#include <utility>
#include <vector>

#include "covres/covering.hpp"
#include "covres/graph.hpp"

namespace covres {

// A product  prod_m (t^m - 1)^{a_m}  with integer exponents, kept as the
// sparse map m -> a_m.
struct ZetaFactorization {
  std::map<long long, long long> factors;

  void mul(long long m, long long exponent);  // multiply by (t^m - 1)^exponent
  void mul(const ZetaFactorization& other);

  // exponent of the d-th cyclotomic polynomial for every divisor d of a
  // factor degree (zero entries included)
  std::map<long long, long long> cyclotomic_exponents() const;

  long long degree() const;  // sum of m * a_m
  bool operator==(const ZetaFactorization&) const = default;
};

// Number of connected components of the realized covering graph (the number
// of Milnor-fibre pieces the graph sees).
long long milnor_components(const CoveringPresentation& p);

// Characteristic polynomial of the algebraic monodromy on first homology:
//   Delta_1(t) = (t^k - 1) * prod_w (t^{m_w} - 1)^{delta_w + 2 g_w - 2},
// k = number of components of the cover.  Throws
// NegativeCyclotomicExponent if the result is not a polynomial.
ZetaFactorization acampo_delta1(const DecoratedGraph& base, long long k);

// (dim of the generalized eigenspace at 1, dim ker(h - 1)) =
// (2g + 2c + #arrows - 1, 2g + c + #arrows - 1); the difference is the
// number of size-2 Jordan blocks at eigenvalue 1.
std::pair<long long, long long> dim_eigen_one(const DecoratedGraph& base);

// Size-2 Jordan block counts per eigenvalue order n (only nonzero entries):
//   phi(n) * blocks2[n] = sum_{k | n} moebius(n/k) * cycle_rank(mod_k cover).
// Requires the realized cover to be connected.
std::map<long long, long long> jordan_blocks2(const CoveringPresentation& p);

struct JordanReport {
  long long milnor_components = 1;
  std::map<long long, long long> dims;     // order -> dim of one generalized eigenspace
  std::map<long long, long long> blocks2;  // order -> number of 2-blocks
  std::map<long long, long long> blocks1;  // order -> number of 1-blocks
};

JordanReport jordan_report(const DecoratedGraph& base, const CoveringPresentation& p);

// Edge/vertex gcd count of size-2 blocks among eigenvalues of order dividing
// N (tree bases with genus zero only):
//   sum over node-node edges of (gcd(m_e, N) - 1)
//   - sum over nodes of (gcd(M_w, N) - 1),
// m_e = gcd of endpoint multiplicities, M_w = closed-star gcd.
long long neumann_crosscheck(const DecoratedGraph& base, long long N);

// Structural obstructions on the multiset of 2-block orders:
// (i) on forest bases with connected cover: an order k = p*q (coprime, both
//     > 1) with a 2-block needs a 2-block at some order dividing p or q;
// (ii) a one-arrow tree base with all genus zero and a 2-block at order k
//     needs a prime p | k with p^2 dividing the torsion order of the link
//     homology.
ValidationReport finiteness_checks(const DecoratedGraph& base, const CoveringPresentation& p,
                                   const JordanReport& report);

}  // namespace covres
