#include "covres/hjstring.hpp"

#include <numeric>
#include <string>

#include "covres/errors.hpp"

namespace covres {

std::vector<long long> neg_cf(long long p, long long q) {
  if (q < 1 || p <= q)
    throw Error(ErrorCode::BadFraction, "neg_cf needs p > q >= 1, got " + std::to_string(p) + "/" + std::to_string(q));
  std::vector<long long> ks;
  while (q > 0) {
    long long k = (p + q - 1) / q;  // ceil(p/q), >= 2 since p > q
    ks.push_back(k);
    long long r = k * q - p;  // 0 <= r < q
    p = q;
    q = r;
  }
  return ks;
}

Rat eval_neg_cf(const std::vector<long long>& ks) {
  if (ks.empty()) throw Error(ErrorCode::BadFraction, "eval_neg_cf of empty list");
  Rat value(ks.back());
  for (size_t i = ks.size() - 1; i-- > 0;) {
    if (value == 0) throw Error(ErrorCode::BadFraction, "division by zero in continued fraction");
    value = Rat(ks[i]) - Rat(1) / value;
  }
  return value;
}

namespace {

long long mod_inverse(long long a, long long n) {
  long long r0 = mod_pos(a, n), r1 = n, s0 = 1, s1 = 0;
  while (r1 != 0) {
    long long q = r0 / r1;
    long long r2 = r0 - q * r1, s2 = s0 - q * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  if (r0 != 1) throw std::logic_error("element not invertible in modular arithmetic");
  return mod_pos(s0, n);
}

// smallest lambda in [0, n) with lambda * a == target (mod n)
long long solve_congruence(long long a, long long target, long long n) {
  if (n == 1) return 0;
  return mod_pos(mod_inverse(a, n) * mod_pos(target, n), n);
}

// Forward chain recursion m_{i+1} = k_i * m_i - m_{i-1} from (m_0, m_1);
// returns the s+2 values m_0 .. m_{s+1}.
std::vector<long long> chain(const std::vector<long long>& ks, long long m0, long long m1) {
  std::vector<long long> m{m0, m1};
  for (size_t i = 0; i < ks.size(); ++i) m.push_back(ks[i] * m[i + 1] - m[i]);
  return m;
}

// Second, independent route: solve the tridiagonal chain system for the
// interior given only the two end multiplicities (exact rationals).
std::vector<long long> chain_from_ends(const std::vector<long long>& ks, long long left, long long right) {
  size_t s = ks.size();
  std::vector<Rat> diag(s), rhs(s);
  for (size_t i = 0; i < s; ++i) diag[i] = Rat(-ks[i]);
  rhs[0] += Rat(-left);
  rhs[s - 1] += Rat(-right);
  for (size_t i = 1; i < s; ++i) {  // off-diagonal entries are 1
    Rat f = Rat(1) / diag[i - 1];
    diag[i] -= f;
    rhs[i] -= f * rhs[i - 1];
  }
  std::vector<Rat> x(s);
  for (size_t i = s; i-- > 0;) {
    Rat v = rhs[i];
    if (i + 1 < s) v -= x[i + 1];
    x[i] = v / diag[i];
  }
  std::vector<long long> out;
  for (const Rat& v : x) {
    if (denominator(v) != 1) throw std::logic_error("chain solution is not integral");
    out.push_back(static_cast<long long>(numerator(v)));
  }
  return out;
}

}  // namespace

HJString hj_resolve_edge(long long m1, long long m2, long long N) {
  if (m1 < 1 || m2 < 1 || N < 1)
    throw Error(ErrorCode::BadModel, "hj_resolve_edge needs positive m1, m2, N");
  HJString out;
  out.left_mult = m1 / std::gcd(m1, N);
  out.right_mult = m2 / std::gcd(m2, N);
  out.t = std::gcd(std::gcd(m1, m2), N);
  out.n_prime = N / out.t;

  long long p1 = m1 / out.t, p2 = m2 / out.t;
  long long g = std::gcd(p1, out.n_prime);
  long long npp = out.n_prime / g;
  // p2 + lambda * (p1/g) == 0 (mod npp), 0 <= lambda < npp
  out.lambda = solve_congruence(p1 / g, -p2, npp);
  if (out.lambda == 0) return out;  // edge survives, nothing inserted

  out.ks = neg_cf(npp, out.lambda);
  long long first = (p2 + out.lambda * (p1 / g)) / npp;
  auto m = chain(out.ks, out.left_mult, first);
  if (m.back() != out.right_mult)
    throw std::logic_error("string multiplicity chain does not close on the right end");
  out.mults.assign(m.begin() + 1, m.end() - 1);
  for (long long v : out.mults)
    if (v < 1) throw std::logic_error("string multiplicity is not positive");
  return out;
}

StrModelResult str_model(long long a, long long b, long long N,
                         long long i, long long j, long long k) {
  if (a < 1 || b < 1 || N < 1) throw Error(ErrorCode::BadModel, "str_model needs positive a, b, N");
  if (std::gcd(std::gcd(a, b), N) != 1)
    throw Error(ErrorCode::BadModel, "str_model needs gcd(a, b, N) = 1");
  if (i < 0 || j < 0 || k < 0 || i + j + k < 1)
    throw Error(ErrorCode::BadModel, "str_model needs i, j, k >= 0, not all zero");

  long long ga = std::gcd(a, N), gb = std::gcd(b, N);
  StrModelResult r;
  r.gamma_left = a / ga;
  r.gamma_right = b / gb;
  r.alpha_left = N / ga;
  r.alpha_right = 0;
  r.beta_left = 0;
  r.beta_right = N / gb;

  // b + lambda * (a/ga) == 0 (mod N/ga)  and its reversed-orientation twin
  // a + lambda~ * (b/gb) == 0 (mod N/gb)
  r.lambda = solve_congruence(a / ga, -b, N / ga);
  long long lambda_tilde = solve_congruence(b / gb, -a, N / gb);
  if (r.lambda % gb != 0 || lambda_tilde % ga != 0)
    throw std::logic_error("twist is not divisible by the opposite end gcd");
  r.anq_n = N / (ga * gb);
  r.anq_q = r.lambda / gb;

  r.left_mult = i * r.alpha_left + j * r.beta_left + k * r.gamma_left;
  r.right_mult = i * r.alpha_right + j * r.beta_right + k * r.gamma_right;
  if (r.lambda == 0) return r;  // smooth model space: empty string

  r.ks = neg_cf(N / ga, r.lambda);

  auto close = [&](std::vector<long long>& store, long long m0, long long m1,
                   long long want_last, long long want_end, const char* name) {
    auto m = chain(r.ks, m0, m1);
    if (m[m.size() - 2] != want_last || m.back() != want_end)
      throw std::logic_error(std::string("model multiplicity chain for ") + name + " does not close");
    auto alt = chain_from_ends(r.ks, m0, m.back());  // independent route
    for (size_t t = 0; t < alt.size(); ++t)
      if (alt[t] != m[t + 1]) throw std::logic_error(std::string("chain routes disagree for ") + name);
    store.assign(m.begin() + 1, m.end() - 1);
  };

  // first/last interior values have closed forms through the two twists
  long long gamma_first = (b + r.lambda * (a / ga)) / (N / ga);
  long long gamma_last = (a + lambda_tilde * (b / gb)) / (N / gb);
  close(r.mgamma, r.gamma_left, gamma_first, gamma_last, r.gamma_right, "gamma");
  close(r.malpha, r.alpha_left, r.lambda, gb, r.alpha_right, "alpha");
  close(r.mbeta, r.beta_left, ga, lambda_tilde, r.beta_right, "beta");

  r.mults.resize(r.ks.size());
  for (size_t t = 0; t < r.ks.size(); ++t)
    r.mults[t] = i * r.malpha[t] + j * r.mbeta[t] + k * r.mgamma[t];
  return r;
}

}  // namespace covres
