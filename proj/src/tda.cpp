#include "setreal/tda.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "setreal/constructions.hpp"

namespace sr {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

void require_hasse(const Shape& S) {
  auto covers = hasse_edges(S);  // throws on cycles and parallel arrows
  for (std::size_t a = 0; a < S.num_arrows(); ++a)
    if (std::find(covers.begin(), covers.end(), std::make_pair(S.src(a), S.dst(a))) == covers.end())
      throw ShapeError("arrow '" + S.arrows()[a].name + "' is not a cover relation");
}

}  // namespace

std::size_t Graph::vertex_index(const std::string& name) const {
  auto it = std::find(vertices.begin(), vertices.end(), name);
  if (it == vertices.end()) throw RepError("unknown vertex '" + name + "'");
  return static_cast<std::size_t>(it - vertices.begin());
}

std::vector<std::size_t> component_labels(const Graph& g, std::size_t* count) {
  const std::size_t n = g.vertices.size();
  UnionFind uf(n);
  for (auto [u, v] : g.edges) uf.unite(u, v);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return g.vertices[a] < g.vertices[b]; });
  std::map<std::size_t, std::size_t> root_label;
  for (auto v : order) root_label.emplace(uf.find(v), root_label.size() + 1);
  std::vector<std::size_t> label(n);
  for (std::size_t v = 0; v < n; ++v) label[v] = root_label[uf.find(v)];
  if (count) *count = root_label.size();
  return label;
}

void validate(const GraphDiagram& G) {
  const Shape& S = G.shape;
  require_hasse(S);
  if (G.graphs.size() != S.num_objects() || G.vertex_maps.size() != S.num_arrows())
    throw RepError("graph diagram: wrong number of graphs or maps");
  for (std::size_t v = 0; v < S.num_objects(); ++v) {
    const Graph& g = G.graphs[v];
    std::vector<std::string> names = g.vertices;
    std::sort(names.begin(), names.end());
    if (std::adjacent_find(names.begin(), names.end()) != names.end())
      throw RepError("object '" + S.objects()[v] + "': duplicate vertex name");
    for (auto [x, y] : g.edges)
      if (x >= g.vertices.size() || y >= g.vertices.size())
        throw RepError("object '" + S.objects()[v] + "': edge references a missing vertex");
  }
  for (std::size_t a = 0; a < S.num_arrows(); ++a) {
    const Graph& src = G.graphs[S.src(a)];
    const Graph& dst = G.graphs[S.dst(a)];
    const auto& f = G.vertex_maps[a];
    if (f.size() != src.vertices.size()) throw RepError("arrow '" + S.arrows()[a].name + "': map has wrong length");
    for (auto x : f)
      if (x >= dst.vertices.size()) throw RepError("arrow '" + S.arrows()[a].name + "': image out of range");
    for (auto [x, y] : src.edges) {
      const std::size_t u = f[x], w = f[y];
      if (u == w) continue;
      const bool ok = std::any_of(dst.edges.begin(), dst.edges.end(), [&](auto e) {
        return (e.first == u && e.second == w) || (e.first == w && e.second == u);
      });
      if (!ok) throw RepError("arrow '" + S.arrows()[a].name + "': edge not sent to an edge or a vertex");
    }
  }
  // every pair of paths with the same ends induces the same vertex map
  for (std::size_t x = 0; x < S.num_objects(); ++x) {
    std::map<std::size_t, std::vector<std::size_t>> seen;
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> stack;
    std::vector<std::size_t> id(G.graphs[x].vertices.size());
    std::iota(id.begin(), id.end(), 0);
    stack.emplace_back(x, id);
    while (!stack.empty()) {
      auto [y, m] = std::move(stack.back());
      stack.pop_back();
      auto [it, fresh] = seen.emplace(y, m);
      if (!fresh) {
        if (it->second != m) throw RepError("graph diagram does not commute at '" + S.objects()[y] + "'");
        continue;
      }
      for (auto a : S.out_arrows(y)) {
        std::vector<std::size_t> next(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) next[i] = G.vertex_maps[a][m[i]];
        stack.emplace_back(S.dst(a), std::move(next));
      }
    }
  }
}

SetRep h0_setrep(const GraphDiagram& G) {
  validate(G);
  const Shape& S = G.shape;
  std::vector<std::vector<std::size_t>> label(S.num_objects());
  std::vector<std::size_t> sizes(S.num_objects());
  for (std::size_t v = 0; v < S.num_objects(); ++v) label[v] = component_labels(G.graphs[v], &sizes[v]);
  std::vector<std::vector<std::uint32_t>> maps(S.num_arrows());
  for (std::size_t a = 0; a < S.num_arrows(); ++a) {
    const std::size_t s = S.src(a), t = S.dst(a);
    maps[a].assign(sizes[s], 0);
    for (std::size_t i = 0; i < G.graphs[s].vertices.size(); ++i)
      maps[a][label[s][i] - 1] = static_cast<std::uint32_t>(label[t][G.vertex_maps[a][i]]);
  }
  return SetRep(S, sizes, maps);
}

GraphDiagram setrep_to_graphs(const SetRep& S) {
  if (auto err = validate(S)) throw RepError(*err);
  if (!S.basepoint_free()) throw RepError("setrep_to_graphs: input uses the basepoint");
  const Shape& Q = S.shape;
  require_hasse(Q);
  const auto le = Q.reachability();
  const std::size_t n = Q.num_objects();
  GraphDiagram G;
  G.shape = Q;
  G.graphs.resize(n);
  std::vector<std::map<std::pair<std::size_t, std::size_t>, std::size_t>> index(n);
  for (std::size_t p = 0; p < n; ++p) {
    Graph& g = G.graphs[p];
    for (std::size_t r = 0; r < n; ++r) {
      if (!le[r][p]) continue;
      for (std::size_t i = 1; i <= S.sizes[r]; ++i) {
        index[p][{r, i}] = g.vertices.size();
        g.vertices.push_back(Q.objects()[r] + ":" + std::to_string(i));
      }
    }
    for (std::size_t a = 0; a < Q.num_arrows(); ++a) {
      const std::size_t q = Q.src(a), q2 = Q.dst(a);
      if (!le[q2][p]) continue;
      for (std::size_t i = 1; i <= S.sizes[q]; ++i)
        g.edges.emplace_back(index[p].at({q, i}), index[p].at({q2, S.apply(a, static_cast<std::uint32_t>(i))}));
    }
  }
  G.vertex_maps.resize(Q.num_arrows());
  for (std::size_t a = 0; a < Q.num_arrows(); ++a) {
    const std::size_t p = Q.src(a), p2 = Q.dst(a);
    for (const auto& [key, idx] : index[p]) {
      G.vertex_maps[a].resize(G.graphs[p].vertices.size());
      G.vertex_maps[a][idx] = index[p2].at(key);
    }
  }
  return G;
}

namespace io {

GraphDiagram graph_diagram_from_json(const json& j) {
  GraphDiagram G;
  try {
    G.shape = shape_from_json(j.at("shape"));
    const json& objs = j.at("objects");
    for (std::size_t v = 0; v < G.shape.num_objects(); ++v) {
      const std::string& name = G.shape.objects()[v];
      if (!objs.contains(name)) throw ParseError("objects: missing '" + name + "'");
      const json& o = objs.at(name);
      Graph g;
      g.vertices = o.at("vertices").get<std::vector<std::string>>();
      if (o.contains("edges"))
        for (const auto& e : o.at("edges")) {
          if (!e.is_array() || e.size() != 2) throw ParseError("objects." + name + ": edge must be [u, v]");
          g.edges.emplace_back(g.vertex_index(e[0].get<std::string>()), g.vertex_index(e[1].get<std::string>()));
        }
      G.graphs.push_back(std::move(g));
    }
    const json& maps = j.at("maps");
    for (std::size_t a = 0; a < G.shape.num_arrows(); ++a) {
      const std::string& name = G.shape.arrows()[a].name;
      if (!maps.contains(name)) throw ParseError("maps: missing '" + name + "'");
      const json& m = maps.at(name);
      const Graph& src = G.graphs[G.shape.src(a)];
      const Graph& dst = G.graphs[G.shape.dst(a)];
      std::vector<std::size_t> f(src.vertices.size());
      if (m.is_string()) {
        if (m.get<std::string>() != "inclusion") throw ParseError("maps." + name + ": expected \"inclusion\" or an object");
        for (std::size_t i = 0; i < f.size(); ++i) f[i] = dst.vertex_index(src.vertices[i]);
      } else {
        for (std::size_t i = 0; i < f.size(); ++i) {
          if (!m.contains(src.vertices[i])) throw ParseError("maps." + name + ": no image for '" + src.vertices[i] + "'");
          f[i] = dst.vertex_index(m.at(src.vertices[i]).get<std::string>());
        }
      }
      G.vertex_maps.push_back(std::move(f));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("graph diagram: ") + e.what());
  } catch (const RepError& e) {
    throw ParseError(std::string("graph diagram: ") + e.what());
  }
  return G;
}

json graph_diagram_to_json(const GraphDiagram& G) {
  json j;
  j["shape"] = shape_to_json(G.shape);
  json objs = json::object();
  for (std::size_t v = 0; v < G.shape.num_objects(); ++v) {
    const Graph& g = G.graphs[v];
    json edges = json::array();
    for (auto [x, y] : g.edges) edges.push_back({g.vertices[x], g.vertices[y]});
    objs[G.shape.objects()[v]] = {{"vertices", g.vertices}, {"edges", edges}};
  }
  j["objects"] = objs;
  json maps = json::object();
  for (std::size_t a = 0; a < G.shape.num_arrows(); ++a) {
    const Graph& src = G.graphs[G.shape.src(a)];
    const Graph& dst = G.graphs[G.shape.dst(a)];
    bool inclusion = true;
    json m = json::object();
    for (std::size_t i = 0; i < src.vertices.size(); ++i) {
      const std::string& img = dst.vertices[G.vertex_maps[a][i]];
      inclusion &= img == src.vertices[i];
      m[src.vertices[i]] = img;
    }
    maps[G.shape.arrows()[a].name] = inclusion ? json("inclusion") : m;
  }
  j["maps"] = maps;
  return j;
}

}  // namespace io

}  // namespace sr
