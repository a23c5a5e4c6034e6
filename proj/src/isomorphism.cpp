#include "covres/isomorphism.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace covres {

namespace {

struct FlatGraph {
  std::vector<VertexId> ids;
  std::vector<std::string> base_color;            // decoration colour per vertex
  std::vector<std::map<int, int>> adj;            // neighbour index -> edge multiplicity
  std::vector<int> color;                         // current refinement colour
};

FlatGraph flatten(const DecoratedGraph& g, const std::map<VertexId, std::string>* extra) {
  FlatGraph f;
  std::map<VertexId, int> index;
  for (const auto& [v, data] : g.vertices) {
    index[v] = static_cast<int>(f.ids.size());
    f.ids.push_back(v);
    std::ostringstream col;
    col << (data.kind == VertexKind::Node ? "n" : "a") << "/g" << data.genus << "/e";
    if (data.euler) col << *data.euler;
    col << "/m";
    if (data.mult) col << *data.mult;
    if (extra) {
      col << "/x";
      auto it = extra->find(v);
      if (it != extra->end()) col << it->second;
    }
    f.base_color.push_back(col.str());
  }
  f.adj.resize(f.ids.size());
  for (const auto& [a, b] : g.edges) {
    int i = index.at(a), j = index.at(b);
    f.adj[i][j] += 1;
    if (i != j) f.adj[j][i] += 1;
  }
  return f;
}

// Jointly refine colours on both graphs until stable.  Returns false if the
// colour histograms ever disagree (then the graphs cannot be isomorphic).
bool refine(FlatGraph& a, FlatGraph& b) {
  {
    std::map<std::string, int> palette;
    for (FlatGraph* g : {&a, &b})
      for (const auto& c : g->base_color) palette.emplace(c, 0);
    int next = 0;
    for (auto& [c, idx] : palette) idx = next++;
    for (FlatGraph* g : {&a, &b}) {
      g->color.clear();
      for (const auto& c : g->base_color) g->color.push_back(palette.at(c));
    }
  }
  while (true) {
    // signature: (own colour, sorted multiset of (neighbour colour, edge mult))
    using Sig = std::pair<int, std::vector<std::pair<int, int>>>;
    auto signature = [](const FlatGraph& g, int v) {
      Sig s{g.color[v], {}};
      for (const auto& [u, m] : g.adj[v]) s.second.emplace_back(g.color[u], m);
      std::sort(s.second.begin(), s.second.end());
      return s;
    };
    std::map<Sig, int> palette;
    std::vector<Sig> siga(a.ids.size()), sigb(b.ids.size());
    for (size_t v = 0; v < a.ids.size(); ++v) palette.emplace(siga[v] = signature(a, static_cast<int>(v)), 0);
    for (size_t v = 0; v < b.ids.size(); ++v) palette.emplace(sigb[v] = signature(b, static_cast<int>(v)), 0);
    int next = 0;
    for (auto& [s, idx] : palette) idx = next++;
    bool changed = false;
    for (size_t v = 0; v < a.ids.size(); ++v) {
      int c = palette.at(siga[v]);
      if (c != a.color[v]) changed = true;
      a.color[v] = c;
    }
    for (size_t v = 0; v < b.ids.size(); ++v) {
      int c = palette.at(sigb[v]);
      if (c != b.color[v]) changed = true;
      b.color[v] = c;
    }
    std::map<int, int> ha, hb;
    for (int c : a.color) ++ha[c];
    for (int c : b.color) ++hb[c];
    if (ha != hb) return false;
    if (!changed) return true;
  }
}

struct Matcher {
  const FlatGraph& a;
  const FlatGraph& b;
  std::vector<int> map_ab;   // a-index -> b-index or -1
  std::vector<bool> used_b;
  std::vector<int> order;    // a-vertices, rarest colour first

  bool extend(size_t k) {
    if (k == order.size()) return true;
    int v = order[k];
    for (size_t u = 0; u < b.ids.size(); ++u) {
      if (used_b[u] || b.color[u] != a.color[v]) continue;
      bool ok = true;
      for (const auto& [w, m] : a.adj[v]) {
        if (map_ab[w] < 0) continue;
        auto it = b.adj[u].find(map_ab[w]);
        if (it == b.adj[u].end() || it->second != m) { ok = false; break; }
      }
      // mapped b-neighbours of u must all be hit with the right multiplicity
      if (ok) {
        int mapped_a = 0, mapped_b = 0;
        for (const auto& [w, m] : a.adj[v]) if (map_ab[w] >= 0) mapped_a += m;
        for (const auto& [w, m] : b.adj[u]) if (std::find(map_ab.begin(), map_ab.end(), static_cast<int>(w)) != map_ab.end()) mapped_b += m;
        if (mapped_a != mapped_b) ok = false;
      }
      if (!ok) continue;
      map_ab[v] = static_cast<int>(u);
      used_b[u] = true;
      if (extend(k + 1)) return true;
      map_ab[v] = -1;
      used_b[u] = false;
    }
    return false;
  }
};

}  // namespace

bool is_isomorphic(const DecoratedGraph& a, const DecoratedGraph& b,
                   const std::map<VertexId, std::string>* extra_a,
                   const std::map<VertexId, std::string>* extra_b) {
  if (a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size()) return false;
  FlatGraph fa = flatten(a, extra_a);
  FlatGraph fb = flatten(b, extra_b);
  if (!refine(fa, fb)) return false;

  Matcher m{fa, fb, std::vector<int>(fa.ids.size(), -1), std::vector<bool>(fb.ids.size(), false), {}};
  std::map<int, int> color_count;
  for (int c : fa.color) ++color_count[c];
  m.order.resize(fa.ids.size());
  for (size_t v = 0; v < fa.ids.size(); ++v) m.order[v] = static_cast<int>(v);
  std::sort(m.order.begin(), m.order.end(), [&](int x, int y) {
    if (color_count[fa.color[x]] != color_count[fa.color[y]]) return color_count[fa.color[x]] < color_count[fa.color[y]];
    return x < y;
  });
  return m.extend(0);
}

}  // namespace covres
