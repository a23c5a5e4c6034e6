#include "covres/covering.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "covres/errors.hpp"

namespace covres {

long long CoveringPresentation::edge_fiber(size_t e) const {
  const auto& [a, b] = base.edges[e];
  return data.d[e] * lcm_ll(data.n.at(a), data.n.at(b));
}

void check_presentation(const CoveringPresentation& p) {
  for (const auto& [v, dat] : p.base.vertices) {
    (void)dat;
    auto it = p.data.n.find(v);
    if (it == p.data.n.end())
      throw Error(ErrorCode::InconsistentCoveringData, "no fibre size for vertex " + v.id);
    if (it->second < 1)
      throw Error(ErrorCode::InconsistentCoveringData, "fibre size at " + v.id + " must be >= 1");
  }
  if (p.data.n.size() != p.base.vertices.size())
    throw Error(ErrorCode::InconsistentCoveringData, "fibre sizes given for unknown vertices");
  if (p.data.d.size() != p.base.edges.size())
    throw Error(ErrorCode::InconsistentCoveringData, "edge density list does not match the edge list");
  for (long long d : p.data.d)
    if (d < 1) throw Error(ErrorCode::InconsistentCoveringData, "edge density must be >= 1");
  if (p.offsets.size() != p.base.edges.size())
    throw Error(ErrorCode::InconsistentCoveringData, "offset list does not match the edge list");
  for (size_t e = 0; e < p.base.edges.size(); ++e) {
    const auto& [a, b] = p.base.edges[e];
    if (!p.base.has_vertex(a) || !p.base.has_vertex(b))
      throw Error(ErrorCode::InconsistentCoveringData, "edge " + std::to_string(e) + " references a missing vertex");
    if (p.offsets[e].first < 0 || p.offsets[e].first >= p.data.n.at(a) ||
        p.offsets[e].second < 0 || p.offsets[e].second >= p.data.n.at(b))
      throw Error(ErrorCode::InconsistentCoveringData, "offset out of range on edge " + std::to_string(e));
  }
}

VertexId lift_id(const VertexId& base, long long fiber_index) {
  return VertexId(base.id + "." + std::to_string(fiber_index));
}

CoveringPresentation trivial_covering(DecoratedGraph base, CoveringData data) {
  CoveringPresentation p;
  p.offsets.assign(base.edges.size(), {0, 0});
  p.base = std::move(base);
  p.data = std::move(data);
  check_presentation(p);
  return p;
}

Realization realize(const CoveringPresentation& p) {
  check_presentation(p);
  Realization r;
  for (const auto& [v, dat] : p.base.vertices) {
    for (long long i = 0; i < p.data.n.at(v); ++i) {
      VertexData lifted;
      lifted.kind = dat.kind;
      VertexId id = lift_id(v, i);
      r.cover.add_vertex(id, lifted);
      r.vertex_fiber[id] = {v, i};
    }
  }
  for (size_t e = 0; e < p.base.edges.size(); ++e) {
    const auto& [a, b] = p.base.edges[e];
    long long na = p.data.n.at(a), nb = p.data.n.at(b);
    long long ne = p.edge_fiber(e);
    for (long long k = 0; k < ne; ++k) {
      r.cover.add_edge(lift_id(a, mod_pos(k + p.offsets[e].first, na)),
                       lift_id(b, mod_pos(k + p.offsets[e].second, nb)));
      r.edge_fiber.emplace_back(e, k);
    }
  }
  return r;
}

DecoratedGraph standard_block(long long n1, long long n2, long long d) {
  if (n1 < 1 || n2 < 1 || d < 1)
    throw Error(ErrorCode::InconsistentCoveringData, "standard_block needs positive n1, n2, d");
  CoveringPresentation p;
  p.base.add_vertex(VertexId("P1"), VertexData{});
  p.base.add_vertex(VertexId("P2"), VertexData{});
  p.base.add_edge(VertexId("P1"), VertexId("P2"));
  p.data.n[VertexId("P1")] = n1;
  p.data.n[VertexId("P2")] = n2;
  p.data.d = {d};
  p.offsets = {{0, 0}};
  return realize(p).cover;
}

CoveringPresentation act(CoveringPresentation p, size_t edge, int endpoint, long long amount) {
  check_presentation(p);
  if (edge >= p.base.edges.size())
    throw Error(ErrorCode::InconsistentCoveringData, "no edge with index " + std::to_string(edge));
  if (endpoint != 1 && endpoint != 2)
    throw Error(ErrorCode::InconsistentCoveringData, "endpoint must be 1 or 2");
  const auto& [a, b] = p.base.edges[edge];
  if (endpoint == 1)
    p.offsets[edge].first = mod_pos(p.offsets[edge].first + amount, p.data.n.at(a));
  else
    p.offsets[edge].second = mod_pos(p.offsets[edge].second + amount, p.data.n.at(b));
  return p;
}

namespace {

// Columns of the move lattice inside the product of end-twist groups
// Z_{n_v(end)}: one whole-edge rotation per edge, one whole-vertex rotation
// per vertex, one modulus column per end.  Rows are the 2*#edges ends, in
// edge order (first endpoint, then second).
IntMatrix move_lattice(const DecoratedGraph& base, const CoveringData& data) {
  size_t ends = 2 * base.edges.size();
  std::vector<VertexId> verts;
  for (const auto& [v, dat] : base.vertices) {
    (void)dat;
    verts.push_back(v);
  }
  std::map<VertexId, size_t> vindex;
  for (size_t i = 0; i < verts.size(); ++i) vindex[verts[i]] = i;

  IntMatrix m(ends, base.edges.size() + verts.size() + ends);
  for (size_t e = 0; e < base.edges.size(); ++e) {
    m.at(2 * e, e) = 1;  // edge rotation twists both ends
    m.at(2 * e + 1, e) = 1;
    const auto& [a, b] = base.edges[e];
    m.at(2 * e, base.edges.size() + vindex.at(a)) = 1;  // vertex rotations
    m.at(2 * e + 1, base.edges.size() + vindex.at(b)) = 1;
    m.at(2 * e, base.edges.size() + verts.size() + 2 * e) = data.n.at(a);  // moduli
    m.at(2 * e + 1, base.edges.size() + verts.size() + 2 * e + 1) = data.n.at(b);
  }
  return m;
}

std::vector<long long> flatten_offsets(const CoveringPresentation& p) {
  std::vector<long long> x;
  x.reserve(2 * p.offsets.size());
  for (const auto& [s1, s2] : p.offsets) {
    x.push_back(s1);
    x.push_back(s2);
  }
  return x;
}

}  // namespace

bool equivalent(const CoveringPresentation& p1, const CoveringPresentation& p2) {
  check_presentation(p1);
  check_presentation(p2);
  if (!(p1.base == p2.base) || !(p1.data == p2.data))
    throw Error(ErrorCode::InconsistentCoveringData, "equivalence needs the same base and covering data");
  auto x1 = flatten_offsets(p1);
  auto x2 = flatten_offsets(p2);

  IntMatrix m = move_lattice(p1.base, p1.data);
  SmithTransforms st = smith_with_transforms(m);
  // solvable iff U*(x2-x1) is divisible by the diagonal (and zero past rank)
  for (size_t i = 0; i < m.rows(); ++i) {
    Int acc = 0;
    for (size_t j = 0; j < m.rows(); ++j) acc += st.u.at(i, j) * Int(x2[j] - x1[j]);
    if (i < st.rank) {
      if (acc % st.diag[i] != 0) return false;
    } else {
      if (acc != 0) return false;
    }
  }
  return true;
}

std::vector<long long> canonical_offsets(const CoveringPresentation& p) {
  check_presentation(p);
  CoveringPresentation q = p;

  // 1. zero both offsets of spanning-forest edges: BFS root-first; each tree
  //    edge is cleared by one edge rotation (first end) plus one vertex
  //    rotation at the child (second end), which only disturbs edges not yet
  //    visited.
  std::map<VertexId, bool> seen;
  for (const auto& [v, dat] : q.base.vertices) {
    (void)dat;
    seen[v] = false;
  }
  for (const auto& [root, dat] : q.base.vertices) {
    (void)dat;
    if (seen.at(root)) continue;
    seen[root] = true;
    std::vector<VertexId> frontier{root};
    while (!frontier.empty()) {
      VertexId v = frontier.front();
      frontier.erase(frontier.begin());
      for (size_t e : q.base.edges_at(v)) {
        const auto& [a, b] = q.base.edges[e];
        VertexId child = (a == v) ? b : a;
        if (seen.at(child)) continue;
        seen[child] = true;
        bool v_is_first = (a == v);
        long long sv = v_is_first ? q.offsets[e].first : q.offsets[e].second;
        q = act(std::move(q), e, 1, -sv);  // edge rotation: clear the v side...
        q = act(std::move(q), e, 2, -sv);
        long long sc = v_is_first ? q.offsets[e].second : q.offsets[e].first;
        // ...then a vertex rotation at the child clears the child side
        for (size_t f : q.base.edges_at(child)) {
          const auto& [fa, fb] = q.base.edges[f];
          if (fa == child) q = act(std::move(q), f, 1, -sc);
          if (fb == child) q = act(std::move(q), f, 2, -sc);
        }
        frontier.push_back(child);
      }
    }
  }
  // 2. zero the first offset of every remaining twisted edge
  for (size_t e = 0; e < q.base.edges.size(); ++e) {
    long long s1 = q.offsets[e].first;
    if (s1 != 0) {
      q = act(std::move(q), e, 1, -s1);
      q = act(std::move(q), e, 2, -s1);
    }
  }

  // 3. unique residue modulo the move lattice: column-style Hermite
  //    reduction, then top-down coset reduction.
  IntMatrix m = move_lattice(q.base, q.data);
  size_t rows = m.rows(), cols = m.cols();
  // column echelon form via integer column operations
  size_t lead = 0;
  for (size_t r = 0; r < rows && lead < cols; ++r) {
    // gcd out the row r across columns lead..cols-1
    while (true) {
      size_t nz = cols;
      Int best = 0;
      for (size_t c = lead; c < cols; ++c)
        if (m.at(r, c) != 0 && (best == 0 || abs(m.at(r, c)) < abs(best))) {
          best = m.at(r, c);
          nz = c;
        }
      if (nz == cols) break;  // row r is zero in the block: no pivot here
      for (size_t c2 = 0; c2 < rows; ++c2) std::swap(m.at(c2, lead), m.at(c2, nz));
      bool reduced = true;
      for (size_t c = lead + 1; c < cols; ++c) {
        if (m.at(r, c) == 0) continue;
        Int qq = m.at(r, c) / m.at(r, lead);
        for (size_t rr = 0; rr < rows; ++rr) m.at(rr, c) -= qq * m.at(rr, lead);
        if (m.at(r, c) != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (m.at(r, lead) != 0) {
      if (m.at(r, lead) < 0)
        for (size_t rr = 0; rr < rows; ++rr) m.at(rr, lead) = -m.at(rr, lead);
      // clear entries of row r in columns before lead (upper reduction)
      for (size_t c = 0; c < lead; ++c) {
        if (m.at(r, c) == 0) continue;
        Int qq = m.at(r, c) / m.at(r, lead);
        // floor division for a canonical nonnegative remainder
        if ((m.at(r, c) % m.at(r, lead)) < 0) qq -= 1;
        for (size_t rr = 0; rr < rows; ++rr) m.at(rr, c) -= qq * m.at(rr, lead);
      }
      ++lead;
    }
  }
  // coset reduce the flattened offsets (pivot of column c sits in some row)
  std::vector<Int> x;
  for (long long v : flatten_offsets(q)) x.push_back(v);
  size_t c = 0;
  for (size_t r = 0; r < rows && c < cols; ++r) {
    if (m.at(r, c) == 0) continue;
    Int qq = x[r] / m.at(r, c);
    if (x[r] % m.at(r, c) < 0) qq -= 1;  // floor
    for (size_t rr = 0; rr < rows; ++rr) x[rr] -= qq * m.at(rr, c);
    ++c;
  }
  std::vector<long long> out;
  for (const Int& v : x) out.push_back(static_cast<long long>(v));
  return out;
}

CoveringClassGroup classification_group(const DecoratedGraph& base, const CoveringData& data) {
  CoveringPresentation probe = trivial_covering(base, data);  // validates data
  (void)probe;
  IntMatrix m = move_lattice(base, data);
  SmithTransforms st = smith_with_transforms(m);

  CoveringClassGroup out;
  out.group.free_rank = static_cast<long long>(m.rows()) - static_cast<long long>(st.rank);
  std::vector<size_t> torsion_rows;
  for (size_t i = 0; i < st.rank; ++i)
    if (st.diag[i] != 1) {
      out.group.torsion.push_back(st.diag[i]);
      torsion_rows.push_back(i);
    }
  for (size_t e = 0; e < base.edges.size(); ++e) {
    std::vector<Int> coords;
    for (size_t i : torsion_rows) {
      Int y = st.u.at(i, 2 * e);  // image of the unit twist at end (e, 1)
      Int dmod = st.diag[i];
      Int r = y % dmod;
      if (r < 0) r += dmod;
      coords.push_back(r);
    }
    out.generator_images[e] = std::move(coords);
  }
  return out;
}

CoveringPresentation mod_n(const CoveringPresentation& p, long long N) {
  check_presentation(p);
  if (N < 1) throw Error(ErrorCode::InconsistentCoveringData, "mod_n needs N >= 1");
  CoveringPresentation q;
  q.base = p.base;
  for (const auto& [v, n] : p.data.n) q.data.n[v] = std::gcd(n, N);
  q.data.d.resize(p.base.edges.size());
  q.offsets.resize(p.base.edges.size());
  for (size_t e = 0; e < p.base.edges.size(); ++e) {
    const auto& [a, b] = p.base.edges[e];
    long long l = lcm_ll(p.data.n.at(a), p.data.n.at(b));
    q.data.d[e] = std::gcd(p.data.d[e], N / std::gcd(N, l));
    q.offsets[e] = {mod_pos(p.offsets[e].first, q.data.n.at(a)),
                    mod_pos(p.offsets[e].second, q.data.n.at(b))};
  }
  return q;
}

namespace {

long long closed_star_gcd(const DecoratedGraph& base, const VertexId& v) {
  long long g = base.mult_of(v);
  for (size_t e : base.edges_at(v)) {
    const auto& [a, b] = base.edges[e];
    g = std::gcd(g, base.mult_of(a == v ? b : a));
  }
  return g;
}

void require_qhs(const DecoratedGraph& base) {
  GraphStats s = stats(base);
  if (s.num_components != 1)
    throw Error(ErrorCode::QHSRequired, "base graph is not connected");
  if (s.cycle_rank != 0)
    throw Error(ErrorCode::QHSRequired, "base graph has a cycle");
  if (s.total_genus != 0)
    throw Error(ErrorCode::QHSRequired, "base graph has a positive-genus vertex");
}

}  // namespace

CoveringPresentation universal_covering(const DecoratedGraph& base) {
  require_qhs(base);
  CoveringPresentation p;
  p.base = base;
  for (const auto& [v, dat] : base.vertices) {
    (void)dat;
    p.data.n[v] = closed_star_gcd(base, v);
  }
  for (size_t e = 0; e < base.edges.size(); ++e) {
    const auto& [a, b] = base.edges[e];
    long long ne = std::gcd(base.mult_of(a), base.mult_of(b));
    long long l = lcm_ll(p.data.n.at(a), p.data.n.at(b));
    if (ne % l != 0) throw std::logic_error("edge fibre is not a multiple of the endpoint lcm");
    p.data.d.push_back(ne / l);
    p.offsets.emplace_back(0, 0);
  }
  return p;
}

ValidationReport validate_universal(const DecoratedGraph& base, const CoveringPresentation& p) {
  check_presentation(p);
  if (!(p.base == base))
    throw Error(ErrorCode::InconsistentCoveringData, "presentation is over a different base graph");
  ValidationReport report;
  auto add = [&](const std::string& code, const std::string& detail) {
    report.findings.push_back({code, detail});
  };

  for (const auto& [v, dat] : base.vertices) {
    if (!dat.mult) {
      add("MissingMult", "vertex " + v.id + " has no multiplicity");
      continue;
    }
    long long nv = p.data.n.at(v);
    if (*dat.mult % nv != 0) add("FiberNotDividingMult", "n at " + v.id + " does not divide its multiplicity");
    long long star = closed_star_gcd(base, v);
    if (dat.kind == VertexKind::Node && dat.genus > 0) {
      if (star % nv != 0) add("VertexFiberNotDivisor", "n at positive-genus " + v.id + " does not divide the closed-star gcd");
    } else {
      if (nv != star) add("VertexFiberMismatch", "n at " + v.id + " is not the closed-star gcd");
    }
  }
  std::map<std::pair<VertexId, VertexId>, int> pair_count;
  for (size_t e = 0; e < base.edges.size(); ++e) {
    const auto& [a, b] = base.edges[e];
    pair_count[{std::min(a, b), std::max(a, b)}] += 1;
    if (!base.vertices.at(a).mult || !base.vertices.at(b).mult) continue;
    if (p.edge_fiber(e) != std::gcd(base.mult_of(a), base.mult_of(b)))
      add("EdgeFiberMismatch", "edge " + std::to_string(e) + " fibre is not gcd of endpoint multiplicities");
  }
  for (const auto& [pair, count] : pair_count)
    if (count > 1)
      add("BaseMultiEdge", "vertices " + pair.first.id + " and " + pair.second.id + " are joined by " + std::to_string(count) + " edges");
  return report;
}

GraphStats cover_stats(const CoveringPresentation& p) { return stats(realize(p).cover); }

}  // namespace covres
