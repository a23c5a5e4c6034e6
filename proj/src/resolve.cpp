#include "covres/resolve.hpp"

#include <numeric>
#include <string>

#include "covres/errors.hpp"

namespace covres {

long long genus_lift(long long g, long long delta, long long m,
                     const std::vector<long long>& neighbor_mults,
                     long long N, long long n_w) {
  if (static_cast<long long>(neighbor_mults.size()) != delta)
    throw Error(ErrorCode::GenusFormulaNonIntegral, "neighbour multiplicity list does not match delta");
  long long acc = (2 - 2 * g - delta) * std::gcd(m, N);
  for (long long mv : neighbor_mults) acc += std::gcd(std::gcd(mv, m), N);
  long long den = std::gcd(N, n_w);
  if (acc % den != 0)
    throw Error(ErrorCode::GenusFormulaNonIntegral, "lifted Euler characteristic is not an integer");
  long long chi = acc / den;  // 2 - 2*g~
  if (chi % 2 != 0 || chi > 2)
    throw Error(ErrorCode::GenusFormulaNonIntegral, "lifted genus is not a nonnegative integer");
  return (2 - chi) / 2;
}

namespace {

VertexId string_vertex_id(size_t base_edge, long long fiber, size_t pos) {
  return VertexId("e" + std::to_string(base_edge) + "." + std::to_string(fiber) + "." + std::to_string(pos + 1));
}

}  // namespace

ResolveOutput resolve_cyclic_cover(const DecoratedGraph& base,
                                   const CoveringPresentation& p, long long N) {
  if (N < 1) throw Error(ErrorCode::InconsistentCoveringData, "cover degree N must be >= 1");
  {
    ValidationReport wf = validate_graph(base);
    if (!wf.ok())
      throw Error(ErrorCode::InconsistentCoveringData, "base graph is malformed: " + wf.findings.front().code);
  }
  for (const auto& [v, dat] : base.vertices) {
    (void)dat;
    base.mult_of(v);  // demand a full multiplicity system
  }
  if (!check_compatibility(base))
    throw Error(ErrorCode::InconsistentCoveringData, "base multiplicities violate the compatibility relation");
  {
    ValidationReport vu = validate_universal(base, p);
    if (!vu.ok())
      throw Error(ErrorCode::InconsistentCoveringData,
                  "covering data is not the universal data: " + vu.findings.front().code);
  }

  CoveringPresentation q = mod_n(p, N);
  ResolveOutput out;

  // lifted vertices: multiplicity m/(m,N), genus via the covering formula
  for (const auto& [v, dat] : base.vertices) {
    long long m = base.mult_of(v);
    VertexData lifted;
    lifted.kind = dat.kind;
    if (dat.kind == VertexKind::Node) {
      std::vector<long long> nbr;
      for (size_t e : base.edges_at(v)) {
        const auto& [a, b] = base.edges[e];
        nbr.push_back(base.mult_of(a == v ? b : a));
      }
      lifted.genus = genus_lift(dat.genus, static_cast<long long>(nbr.size()), m, nbr, N, p.data.n.at(v));
    }
    lifted.mult = m / std::gcd(m, N);
    for (long long i = 0; i < q.data.n.at(v); ++i) out.embedded.add_vertex(lift_id(v, i), lifted);
  }

  // realized edges, each replaced by its string (possibly empty)
  for (size_t e = 0; e < base.edges.size(); ++e) {
    const auto& [a, b] = base.edges[e];
    long long na = q.data.n.at(a), nb = q.data.n.at(b);
    long long ne = q.edge_fiber(e);
    // left endpoint of the string: the smaller non-arrowhead endpoint
    bool a_left = base.is_arrowhead(b) || (!base.is_arrowhead(a) && a < b);
    const VertexId& vleft = a_left ? a : b;
    const VertexId& vright = a_left ? b : a;
    HJString hj = hj_resolve_edge(base.mult_of(vleft), base.mult_of(vright), N);
    hj.right_is_arrow = base.is_arrowhead(vright);
    for (long long k = 0; k < ne; ++k) {
      VertexId ca = lift_id(a, mod_pos(k + q.offsets[e].first, na));
      VertexId cb = lift_id(b, mod_pos(k + q.offsets[e].second, nb));
      VertexId left = a_left ? ca : cb;
      VertexId right = a_left ? cb : ca;
      if (hj.empty()) {
        out.embedded.add_edge(left, right);
        continue;
      }
      VertexId prev = left;
      for (size_t s = 0; s < hj.ks.size(); ++s) {
        VertexData sv;
        sv.kind = VertexKind::Node;
        sv.euler = -hj.ks[s];
        sv.mult = hj.mults[s];
        VertexId id = string_vertex_id(e, k, s);
        out.embedded.add_vertex(id, sv);
        out.embedded.add_edge(prev, id);
        prev = id;
      }
      out.embedded.add_edge(prev, right);
    }
  }

  // recover Euler numbers of the lifted vertices from the balance relation
  for (const auto& [v, dat] : base.vertices) {
    if (dat.kind != VertexKind::Node) continue;
    for (long long i = 0; i < q.data.n.at(v); ++i) {
      VertexId id = lift_id(v, i);
      long long m = *out.embedded.vertices.at(id).mult;
      long long sum = 0;
      for (size_t e : out.embedded.edges_at(id)) {
        const auto& [x, y] = out.embedded.edges[e];
        sum += *out.embedded.vertices.at(x == id ? y : x).mult;
      }
      if (sum % m != 0)
        throw Error(ErrorCode::NonIntegralEuler, "euler number at lifted vertex " + id.id + " is not an integer");
      out.embedded.vertices.at(id).euler = -(sum / m);
    }
  }

  if (!check_compatibility(out.embedded))
    throw std::logic_error("resolved cover violates the compatibility relation");

  out.stripped = strip_embedding(out.embedded);
  out.points_above = points_above(stats(realize(p).cover).num_components, N);
  return out;
}

DecoratedGraph resolution_graph(const DecoratedGraph& base,
                                const CoveringPresentation& p, long long N) {
  return minimize(resolve_cyclic_cover(base, p, N).stripped);
}

long long points_above(long long k, long long N) {
  if (k < 1 || N < 1)
    throw Error(ErrorCode::InconsistentCoveringData, "component count and cover degree must be >= 1");
  return std::gcd(k, N);
}

}  // namespace covres
