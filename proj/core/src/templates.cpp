#include "chromcon/templates.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace chromcon {

VertexSet Template::precolored_vertices() const {
  VertexSet s;
  for (int v = 0; v < vertex_count(); ++v)
    if (precolor[v] != 0) s.push_back(v);
  return s;
}

std::vector<int> Template::precolored_colors() const {
  std::vector<int> out;
  for (int v = 0; v < vertex_count(); ++v)
    if (precolor[v] != 0) out.push_back(precolor[v]);
  return out;
}

Template empty_template(int n) {
  Template t;
  t.precolor.assign(static_cast<std::size_t>(n), 0);
  t.forbidden.assign(static_cast<std::size_t>(n), {});
  return t;
}

void validate_template(const Graph& g, const Template& t, const ColorSet& c) {
  const int n = g.vertex_count();
  if (t.vertex_count() != n || static_cast<int>(t.forbidden.size()) != n)
    throw std::invalid_argument("template: size does not match the graph");
  for (int v = 0; v < n; ++v) {
    const int col = t.precolor[v];
    if (col != 0 && !c.contains(col))
      throw std::invalid_argument("template: precolor of vertex " + std::to_string(v) +
                                  " outside the color set");
    if (col != 0 && !t.forbidden[v].empty())
      throw std::invalid_argument("template: precolored vertex " + std::to_string(v) +
                                  " carries forbidden colors");
    if (!std::is_sorted(t.forbidden[v].begin(), t.forbidden[v].end()) ||
        std::adjacent_find(t.forbidden[v].begin(), t.forbidden[v].end()) != t.forbidden[v].end())
      throw std::invalid_argument("template: forbidden list of vertex " + std::to_string(v) +
                                  " not sorted/unique");
    for (int f : t.forbidden[v])
      if (!c.contains(f))
        throw std::invalid_argument("template: forbidden color " + std::to_string(f) +
                                    " at vertex " + std::to_string(v) + " outside the color set");
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (t.precolor[u] != 0 && t.precolor[u] == t.precolor[v] && g.adjacent(u, v))
        throw std::invalid_argument("template: adjacent vertices " + std::to_string(u) + " and " +
                                    std::to_string(v) + " share precolor " +
                                    std::to_string(t.precolor[u]));
}

int k_cost(const Template& t, int k) {
  int cost = 0;
  for (int v = 0; v < t.vertex_count(); ++v) {
    if (t.precolor[v] != 0)
      cost += k;
    else
      cost += static_cast<int>(t.forbidden[v].size());
  }
  return cost;
}

Template restrict_template(const Graph& g, const Template& t, const VertexSet& a) {
  const VertexSet verts = normalize_vertex_set(g, a);
  Template out = empty_template(static_cast<int>(verts.size()));
  for (std::size_t i = 0; i < verts.size(); ++i) {
    out.precolor[i] = t.precolor[verts[i]];
    if (out.precolor[i] == 0) out.forbidden[i] = t.forbidden[verts[i]];
  }
  return out;
}

bool respects(const Graph& g, const Template& t, const Coloring& f) {
  const int n = g.vertex_count();
  if (static_cast<int>(f.colors.size()) != n || t.vertex_count() != n) return false;
  for (int v = 0; v < n; ++v) {
    if (t.precolor[v] != 0) {
      if (f.colors[v] != t.precolor[v]) return false;
    } else if (std::binary_search(t.forbidden[v].begin(), t.forbidden[v].end(), f.colors[v])) {
      return false;
    }
  }
  return true;
}

}  // namespace chromcon
