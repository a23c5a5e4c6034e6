#include "covres/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "covres/errors.hpp"

namespace covres {

IntMatrix IntMatrix::identity(size_t n) {
  IntMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::mul(const IntMatrix& other) const {
  if (cols_ != other.rows()) throw std::logic_error("matrix dimension mismatch");
  IntMatrix out(rows_, other.cols());
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (size_t j = 0; j < other.cols(); ++j) out.at(i, j) += at(i, k) * other.at(k, j);
    }
  return out;
}

Int det(IntMatrix m) {
  if (m.rows() != m.cols()) throw std::logic_error("det of non-square matrix");
  size_t n = m.rows();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      size_t swap = k + 1;
      while (swap < n && m.at(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

bool is_negative_definite(const IntMatrix& m0) {
  if (m0.rows() != m0.cols()) throw std::logic_error("definiteness of non-square matrix");
  IntMatrix m = m0;
  size_t n = m.rows();
  Int prev = 1;
  for (size_t k = 0; k < n; ++k) {
    // After k elimination stages the (k,k) entry equals the (k+1)-st leading
    // principal minor; Sylvester demands its sign be (-1)^(k+1).
    const Int& minor = m.at(k, k);
    if ((k % 2 == 0 && minor >= 0) || (k % 2 == 1 && minor <= 0)) return false;
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return true;
}

namespace {

struct SmithWorker {
  IntMatrix m;
  bool track;
  IntMatrix u, v;

  explicit SmithWorker(IntMatrix mm, bool with_transforms)
      : m(std::move(mm)), track(with_transforms) {
    if (track) {
      u = IntMatrix::identity(m.rows());
      v = IntMatrix::identity(m.cols());
    }
  }

  void row_swap(size_t a, size_t b) {
    if (a == b) return;
    for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
    if (track)
      for (size_t j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
  }

  void col_swap(size_t a, size_t b) {
    if (a == b) return;
    for (size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
    if (track)
      for (size_t i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
  }

  void row_add(size_t dst, size_t src, const Int& c) {  // row dst += c * row src
    for (size_t j = 0; j < m.cols(); ++j) m.at(dst, j) += c * m.at(src, j);
    if (track)
      for (size_t j = 0; j < u.cols(); ++j) u.at(dst, j) += c * u.at(src, j);
  }

  void col_add(size_t dst, size_t src, const Int& c) {
    for (size_t i = 0; i < m.rows(); ++i) m.at(i, dst) += c * m.at(i, src);
    if (track)
      for (size_t i = 0; i < v.rows(); ++i) v.at(i, dst) += c * v.at(i, src);
  }

  void row_negate(size_t r) {
    for (size_t j = 0; j < m.cols(); ++j) m.at(r, j) = -m.at(r, j);
    if (track)
      for (size_t j = 0; j < u.cols(); ++j) u.at(r, j) = -u.at(r, j);
  }

  // Diagonalize with the divisibility chain; returns the rank.
  size_t run() {
    size_t t = 0;
    size_t bound = std::min(m.rows(), m.cols());
    while (t < bound) {
      // find entry of smallest absolute value in the remaining block
      size_t pi = t, pj = t;
      Int best = 0;
      for (size_t i = t; i < m.rows(); ++i)
        for (size_t j = t; j < m.cols(); ++j) {
          const Int& x = m.at(i, j);
          if (x == 0) continue;
          if (best == 0 || abs(x) < abs(best)) {
            best = x;
            pi = i;
            pj = j;
          }
        }
      if (best == 0) break;  // remaining block is zero
      row_swap(t, pi);
      col_swap(t, pj);

      bool clean = false;
      while (!clean) {
        clean = true;
        for (size_t i = t + 1; i < m.rows(); ++i) {
          if (m.at(i, t) == 0) continue;
          Int q = m.at(i, t) / m.at(t, t);
          row_add(i, t, -q);
          if (m.at(i, t) != 0) {  // strictly smaller remainder becomes pivot
            row_swap(t, i);
            clean = false;
          }
        }
        for (size_t j = t + 1; j < m.cols(); ++j) {
          if (m.at(t, j) == 0) continue;
          Int q = m.at(t, j) / m.at(t, t);
          col_add(j, t, -q);
          if (m.at(t, j) != 0) {
            col_swap(t, j);
            clean = false;
          }
        }
        if (!clean) continue;
        // pivot must divide every remaining entry for the invariant chain
        for (size_t i = t + 1; i < m.rows() && clean; ++i)
          for (size_t j = t + 1; j < m.cols() && clean; ++j)
            if (m.at(i, j) % m.at(t, t) != 0) {
              row_add(t, i, 1);
              clean = false;
            }
      }
      if (m.at(t, t) < 0) row_negate(t);
      ++t;
    }
    return t;
  }
};

}  // namespace

SmithResult smith_normal_form(IntMatrix m) {
  SmithWorker w(std::move(m), false);
  size_t rank = w.run();
  SmithResult r;
  r.rank = rank;
  for (size_t i = 0; i < rank; ++i) r.diag.push_back(w.m.at(i, i));
  return r;
}

SmithTransforms smith_with_transforms(IntMatrix m) {
  SmithWorker w(std::move(m), true);
  size_t rank = w.run();
  SmithTransforms r;
  r.rank = rank;
  for (size_t i = 0; i < rank; ++i) r.diag.push_back(w.m.at(i, i));
  r.u = std::move(w.u);
  r.v = std::move(w.v);
  return r;
}

std::optional<std::vector<Rat>> solve_linear(const IntMatrix& m, const std::vector<Rat>& b) {
  if (m.rows() != m.cols() || b.size() != m.rows()) throw std::logic_error("solve_linear shape mismatch");
  size_t n = m.rows();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + 1));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) a[i][j] = Rat(m.at(i, j));
    a[i][n] = b[i];
  }
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[k], a[piv]);
    for (size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      Rat f = a[i][k] / a[k][k];
      for (size_t j = k; j <= n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  std::vector<Rat> x(n);
  for (size_t k = n; k-- > 0;) {
    Rat s = a[k][n];
    for (size_t j = k + 1; j < n; ++j) s -= a[k][j] * x[j];
    x[k] = s / a[k][k];
  }
  return x;
}

Int AbelianGroup::torsion_order() const {
  Int p = 1;
  for (const Int& d : torsion) p *= d;
  return p;
}

AbelianGroup cokernel(const IntMatrix& relations_as_columns) {
  SmithResult s = smith_normal_form(relations_as_columns);
  AbelianGroup g;
  g.free_rank = static_cast<long long>(relations_as_columns.rows()) - static_cast<long long>(s.rank);
  for (const Int& d : s.diag)
    if (d != 1) g.torsion.push_back(d);
  return g;
}

IntMatrix intersection_matrix(const DecoratedGraph& g) {
  auto nodes = g.node_ids();
  std::map<VertexId, size_t> index;
  for (size_t i = 0; i < nodes.size(); ++i) index[nodes[i]] = i;
  IntMatrix m(nodes.size(), nodes.size());
  for (size_t i = 0; i < nodes.size(); ++i) m.at(i, i) = g.euler_of(nodes[i]);
  for (const auto& [a, b] : g.edges) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end() || ib == index.end()) continue;  // arrow edges don't enter
    m.at(ia->second, ib->second) += 1;
    m.at(ib->second, ia->second) += 1;
  }
  return m;
}

std::map<VertexId, long long> solve_multiplicities(const DecoratedGraph& g) {
  auto nodes = g.node_ids();
  auto arrows = g.arrowhead_ids();
  if (arrows.empty()) throw Error(ErrorCode::NoArrows, "multiplicity system needs at least one arrowhead");
  for (const auto& a : arrows) g.mult_of(a);  // demand arrow multiplicities

  IntMatrix m = intersection_matrix(g);  // demands node euler numbers
  if (!is_negative_definite(m))
    throw Error(ErrorCode::NotNegativeDefinite, "intersection matrix is not negative definite");

  std::map<VertexId, size_t> index;
  for (size_t i = 0; i < nodes.size(); ++i) index[nodes[i]] = i;
  std::vector<Rat> rhs(nodes.size(), Rat(0));
  for (const auto& [a, b] : g.edges) {
    bool a_node = g.is_node(a), b_node = g.is_node(b);
    if (a_node && !b_node) rhs[index.at(a)] -= Rat(g.mult_of(b));
    if (!a_node && b_node) rhs[index.at(b)] -= Rat(g.mult_of(a));
  }
  auto sol = solve_linear(m, rhs);
  if (!sol) throw Error(ErrorCode::NotNegativeDefinite, "intersection matrix is singular");

  std::map<VertexId, long long> out;
  for (size_t i = 0; i < nodes.size(); ++i) {
    const Rat& x = (*sol)[i];
    if (denominator(x) != 1)
      throw Error(ErrorCode::NonIntegralMultiplicity, "multiplicity at " + nodes[i].id + " is not an integer");
    Int num = numerator(x);
    if (num <= 0)
      throw Error(ErrorCode::NonIntegralMultiplicity, "multiplicity at " + nodes[i].id + " is not positive");
    out[nodes[i]] = static_cast<long long>(num);
  }
  for (const auto& a : arrows) out[a] = g.mult_of(a);
  return out;
}

std::map<VertexId, long long> solve_euler_numbers(const DecoratedGraph& g) {
  std::map<VertexId, long long> out;
  for (const auto& [w, data] : g.vertices) {
    if (data.kind != VertexKind::Node) continue;
    long long mw = g.mult_of(w);
    long long sum = 0;
    for (size_t e : g.edges_at(w)) {
      const auto& [a, b] = g.edges[e];
      sum += g.mult_of(a == w ? b : a);
    }
    if (sum % mw != 0)
      throw Error(ErrorCode::NonIntegralEuler, "euler number at " + w.id + " is not an integer");
    out[w] = -(sum / mw);
  }
  return out;
}

AbelianGroup link_homology(const DecoratedGraph& g) {
  IntMatrix m = intersection_matrix(g);
  AbelianGroup coker = cokernel(m);
  GraphStats s = stats(strip_embedding(g));
  coker.free_rank += 2 * s.total_genus + s.cycle_rank;
  return coker;
}

AbelianGroup h_gamma(const DecoratedGraph& g) {
  std::vector<VertexId> all;
  for (const auto& [v, data] : g.vertices) {
    (void)data;
    all.push_back(v);
  }
  std::map<VertexId, size_t> index;
  for (size_t i = 0; i < all.size(); ++i) index[all[i]] = i;
  auto nodes = g.node_ids();
  IntMatrix rel(all.size(), nodes.size());  // one relation column per node
  for (size_t c = 0; c < nodes.size(); ++c) {
    const VertexId& w = nodes[c];
    rel.at(index.at(w), c) += g.euler_of(w);
    for (size_t e : g.edges_at(w)) {
      const auto& [a, b] = g.edges[e];
      rel.at(index.at(a == w ? b : a), c) += 1;
    }
  }
  return cokernel(rel);
}

}  // namespace covres
