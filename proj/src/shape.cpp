#include "setreal/shape.hpp"

#include <algorithm>
#include <functional>

namespace sr {

Shape::Shape(std::vector<std::string> objects, std::vector<Arrow> arrows, std::vector<Relation> relations)
    : objects_(std::move(objects)), arrows_(std::move(arrows)), relations_(std::move(relations)) {
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (!obj_idx_.emplace(objects_[i], i).second) throw ShapeError("duplicate object name '" + objects_[i] + "'");
  out_.resize(objects_.size());
  in_.resize(objects_.size());
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    const auto& a = arrows_[i];
    if (!arr_idx_.emplace(a.name, i).second) throw ShapeError("duplicate arrow name '" + a.name + "'");
    auto s = obj_idx_.find(a.src), d = obj_idx_.find(a.dst);
    if (s == obj_idx_.end() || d == obj_idx_.end())
      throw ShapeError("arrow '" + a.name + "' has an unknown endpoint");
    src_.push_back(s->second);
    dst_.push_back(d->second);
    out_[s->second].push_back(i);
    in_[d->second].push_back(i);
  }
  for (const auto& r : relations_) {
    auto l = path_indices(r.lhs), rr = path_indices(r.rhs);
    if (l.empty() && rr.empty()) continue;
    auto ends = [&](const std::vector<std::size_t>& p, const std::vector<std::size_t>& other) {
      const auto& ref = p.empty() ? other : p;
      std::size_t s = src_[ref.front()];
      std::size_t t = p.empty() ? s : dst_[p.back()];
      return std::make_pair(s, t);
    };
    auto el = ends(l, rr), er = ends(rr, l);
    if (el != er) throw ShapeError("relation paths have different endpoints");
  }
}

std::size_t Shape::object_index(const std::string& name) const {
  auto it = obj_idx_.find(name);
  if (it == obj_idx_.end()) throw ShapeError("unknown object '" + name + "'");
  return it->second;
}

std::size_t Shape::arrow_index(const std::string& name) const {
  auto it = arr_idx_.find(name);
  if (it == arr_idx_.end()) throw ShapeError("unknown arrow '" + name + "'");
  return it->second;
}

std::vector<std::size_t> Shape::path_indices(const std::vector<std::string>& path) const {
  std::vector<std::size_t> out;
  for (const auto& n : path) {
    std::size_t a = arrow_index(n);
    if (!out.empty() && dst_[out.back()] != src_[a])
      throw ShapeError("path is not composable at arrow '" + n + "'");
    out.push_back(a);
  }
  return out;
}

bool Shape::is_acyclic() const {
  std::vector<int> state(objects_.size(), 0);
  std::function<bool(std::size_t)> dfs = [&](std::size_t v) {
    state[v] = 1;
    for (auto a : out_[v]) {
      auto w = dst_[a];
      if (state[w] == 1) return false;
      if (state[w] == 0 && !dfs(w)) return false;
    }
    state[v] = 2;
    return true;
  };
  for (std::size_t v = 0; v < objects_.size(); ++v)
    if (state[v] == 0 && !dfs(v)) return false;
  return true;
}

std::vector<std::vector<bool>> Shape::reachability() const {
  const std::size_t n = objects_.size();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::size_t> stack{v};
    r[v][v] = true;
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      for (auto a : out_[u])
        if (!r[v][dst_[a]]) {
          r[v][dst_[a]] = true;
          stack.push_back(dst_[a]);
        }
    }
  }
  return r;
}

std::vector<std::vector<int>> Shape::path_counts() const {
  const std::size_t n = objects_.size();
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  // bounded relaxation; counts saturate at 2 so cycles terminate
  for (std::size_t v = 0; v < n; ++v) {
    c[v][v] = 1;
    bool changed = true;
    for (std::size_t iter = 0; changed && iter < 4 * n + 4; ++iter) {
      changed = false;
      std::vector<int> next(n, 0);
      next[v] = 1;
      for (std::size_t a = 0; a < arrows_.size(); ++a) next[dst_[a]] = std::min(2, next[dst_[a]] + c[v][src_[a]]);
      if (next != c[v]) {
        c[v] = next;
        changed = true;
      }
    }
  }
  return c;
}

namespace shapes {

Shape linear(const std::vector<bool>& orient) {
  std::vector<std::string> obj;
  for (std::size_t i = 0; i <= orient.size(); ++i) obj.push_back(std::to_string(i + 1));
  std::vector<Arrow> arr;
  for (std::size_t i = 0; i < orient.size(); ++i) {
    auto a = obj[i], b = obj[i + 1];
    if (orient[i])
      arr.push_back({"a" + std::to_string(i + 1), a, b});
    else
      arr.push_back({"a" + std::to_string(i + 1), b, a});
  }
  return Shape(obj, arr);
}

Shape linear(std::size_t n) { return linear(std::vector<bool>(n ? n - 1 : 0, true)); }

Shape loop() { return Shape({"v"}, {{"phi", "v", "v"}}); }

Shape star(const std::vector<bool>& inward) {
  std::vector<std::string> obj;
  std::vector<Arrow> arr;
  for (std::size_t i = 0; i < inward.size(); ++i) {
    std::string a = "a" + std::to_string(i + 1);
    obj.push_back(a);
    if (inward[i])
      arr.push_back({"x" + std::to_string(i + 1), a, "c"});
    else
      arr.push_back({"x" + std::to_string(i + 1), "c", a});
  }
  obj.push_back("c");
  return Shape(obj, arr);
}

Shape star(std::size_t n, bool inward) { return star(std::vector<bool>(n, inward)); }

Shape atilde(const std::vector<bool>& clockwise) {
  const std::size_t n = clockwise.size();
  if (n < 2) throw ShapeError("a cycle needs at least two objects");
  std::vector<std::string> obj;
  for (std::size_t i = 0; i < n; ++i) obj.push_back(std::to_string(i));
  std::vector<Arrow> arr;
  for (std::size_t i = 0; i < n; ++i) {
    auto a = obj[i], b = obj[(i + 1) % n];
    std::string nm = "alpha" + std::to_string(i);
    if (clockwise[i])
      arr.push_back({nm, a, b});
    else
      arr.push_back({nm, b, a});
  }
  return Shape(obj, arr);
}

Shape d4tilde_two_two() {
  return Shape({"in1", "in2", "c", "out1", "out2"},
               {{"i1", "in1", "c"}, {"i2", "in2", "c"}, {"o1", "c", "out1"}, {"o2", "c", "out2"}});
}

Shape e6(const std::vector<bool>& out) {
  if (out.size() != 5) throw ShapeError("E6 needs five orientation flags");
  const std::pair<const char*, const char*> edges[5] = {{"a2", "a1"}, {"c", "a2"}, {"b2", "b1"}, {"c", "b2"}, {"c", "s"}};
  std::vector<Arrow> arr;
  for (std::size_t i = 0; i < 5; ++i) {
    auto [inner, outer] = edges[i];
    std::string nm = "e" + std::to_string(i + 1);
    if (out[i])
      arr.push_back({nm, inner, outer});
    else
      arr.push_back({nm, outer, inner});
  }
  return Shape({"a1", "a2", "c", "b2", "b1", "s"}, arr);
}

Shape grid(std::size_t rows, std::size_t cols) {
  auto name = [](std::size_t r, std::size_t c) { return std::to_string(r) + "," + std::to_string(c); };
  auto h = [](std::size_t r, std::size_t c) { return "h" + std::to_string(r) + "_" + std::to_string(c); };
  auto v = [](std::size_t r, std::size_t c) { return "v" + std::to_string(r) + "_" + std::to_string(c); };
  std::vector<std::string> obj;
  std::vector<Arrow> arr;
  std::vector<Relation> rel;
  for (std::size_t r = 1; r <= rows; ++r)
    for (std::size_t c = 1; c <= cols; ++c) obj.push_back(name(r, c));
  for (std::size_t r = 1; r <= rows; ++r)
    for (std::size_t c = 1; c + 1 <= cols; ++c) arr.push_back({h(r, c), name(r, c), name(r, c + 1)});
  for (std::size_t r = 1; r + 1 <= rows; ++r)
    for (std::size_t c = 1; c <= cols; ++c) arr.push_back({v(r, c), name(r, c), name(r + 1, c)});
  for (std::size_t r = 1; r + 1 <= rows; ++r)
    for (std::size_t c = 1; c + 1 <= cols; ++c) rel.push_back({{h(r, c), v(r, c + 1)}, {v(r, c), h(r + 1, c)}});
  return Shape(obj, arr, rel);
}

}  // namespace shapes

}  // namespace sr
