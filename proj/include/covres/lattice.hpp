#pragma once

#include <map>
#include <optional>
#include <vector>

#include "covres/graph.hpp"
#include "covres/numeric.hpp"

namespace covres {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntMatrix identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Int& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Int& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  IntMatrix mul(const IntMatrix& other) const;
  bool operator==(const IntMatrix&) const = default;

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

// Exact determinant (fraction-free elimination with row pivoting).
Int det(IntMatrix m);

// Negative definiteness via Sylvester: (-1)^k * (k-th leading principal
// minor) > 0 for every k.  The minors are the pivots of a Bareiss pass; a
// zero pivot already refutes definiteness.
bool is_negative_definite(const IntMatrix& m);

struct SmithResult {
  std::vector<Int> diag;  // positive invariant factors d1 | d2 | ... (rank many)
  size_t rank = 0;
};

struct SmithTransforms {
  IntMatrix u, v;  // unimodular, u * m * v = diag
  std::vector<Int> diag;
  size_t rank = 0;
};

SmithResult smith_normal_form(IntMatrix m);
SmithTransforms smith_with_transforms(IntMatrix m);

// Exact solution of a square system m * x = b, or nullopt if singular.
std::optional<std::vector<Rat>> solve_linear(const IntMatrix& m, const std::vector<Rat>& b);

struct AbelianGroup {
  long long free_rank = 0;
  std::vector<Int> torsion;  // nonunit invariant factors, divisibility order

  Int torsion_order() const;
  bool operator==(const AbelianGroup&) const = default;
};

// Cokernel of a relation matrix acting on Z^generators (columns = relations).
AbelianGroup cokernel(const IntMatrix& relations_as_columns);

// Intersection matrix on nodes in id order: diagonal = euler numbers,
// off-diagonal = number of connecting edges.  Arrowheads are excluded.
IntMatrix intersection_matrix(const DecoratedGraph& g);

// Node multiplicities from euler numbers and arrowhead multiplicities:
// unique solution of the compatibility system; must be positive integers.
std::map<VertexId, long long> solve_multiplicities(const DecoratedGraph& g);

// Euler numbers from a full multiplicity system: e_w = -(sum of neighbour
// multiplicities)/m_w, which must divide exactly.
std::map<VertexId, long long> solve_euler_numbers(const DecoratedGraph& g);

// First homology of the plumbed 3-manifold boundary: coker(intersection
// matrix) plus a free part of rank 2*(total genus) + (cycle rank).
AbelianGroup link_homology(const DecoratedGraph& g);

// Z^vertices (nodes and arrowheads) modulo one compatibility relation per
// node; contains coker(A) with a free part of rank #arrows on top.
AbelianGroup h_gamma(const DecoratedGraph& g);

}  // namespace covres
