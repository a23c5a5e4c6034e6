#pragma once

#include <vector>

#include "covres/numeric.hpp"

namespace covres {

// A string (chain) of rational curves inserted along an edge of a covering
// graph.  `ks` are the negated self-intersections (all >= 2), `mults` the
// interior multiplicities; the end multiplicities belong to the vertices the
// string is glued to.  Every interior vertex satisfies
//   -k_i * m_i + m_{i-1} + m_{i+1} == 0
// with m_0 = left_mult and m_{s+1} = right_mult.
struct HJString {
  std::vector<long long> ks;
  std::vector<long long> mults;
  long long left_mult = 0;
  long long right_mult = 0;

  // diagnostics of the construction
  long long t = 1;        // gcd(m1, m2, N), divided out first
  long long n_prime = 1;  // N / t
  long long lambda = 0;   // 0 means the edge survives with no inserted string
  bool right_is_arrow = false;  // set by the resolve step for arrow edges

  bool empty() const { return ks.empty(); }
};

// Negative (Hirzebruch-Jung) continued fraction of p/q:
//   p/q = k_1 - 1/(k_2 - 1/(... - 1/k_s)),  all k_i >= 2.
// Requires p > q >= 1.
std::vector<long long> neg_cf(long long p, long long q);

// Exact evaluation, the inverse of neg_cf on reduced fractions.
Rat eval_neg_cf(const std::vector<long long>& ks);

// The string replacing one edge of the N-fold cover graph whose base
// endpoints carry multiplicities m1 (left) and m2 (right).  End
// multiplicities are m1/gcd(m1,N) and m2/gcd(m2,N); the interior is the
// resolution of the residual cyclic quotient singularity.
HJString hj_resolve_edge(long long m1, long long m2, long long N);

// Multiplicity systems of the model germs on the cyclic model space
// {x^a y^b = z^N} (gcd(a,b,N) = 1): the two coordinate germs and their
// product z, combined as x^i y^j z^k.  The string shape is the minimal good
// resolution; `malpha`/`mbeta`/`mgamma` are the per-germ interior systems.
struct StrModelResult {
  std::vector<long long> ks;
  std::vector<long long> malpha, mbeta, mgamma;
  long long alpha_left = 0, alpha_right = 0;
  long long beta_left = 0, beta_right = 0;
  long long gamma_left = 0, gamma_right = 0;
  // combined germ x^i y^j z^k
  std::vector<long long> mults;
  long long left_mult = 0, right_mult = 0;
  long long lambda = 0;
  // model-space bookkeeping: the space is an A_{n,q} quotient singularity
  long long anq_n = 0, anq_q = 0;
};

StrModelResult str_model(long long a, long long b, long long N,
                         long long i, long long j, long long k);

}  // namespace covres
