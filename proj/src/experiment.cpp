#include "setreal/experiment.hpp"

#include <algorithm>

#include "setreal/decomp.hpp"
#include "setreal/realize.hpp"

namespace sr {

std::size_t e_edge_count(std::size_t n) {
  if (n < 6 || n > 8) throw ShapeError("E_n needs n in 6..8");
  return n - 1;
}

Shape e_shape(std::size_t n, const std::vector<bool>& out) {
  if (out.size() != e_edge_count(n)) throw ShapeError("wrong number of orientation flags");
  if (n == 6) return shapes::e6(out);
  const std::size_t blen = n - 4;
  std::vector<std::string> obj{"a1", "a2", "c"};
  for (std::size_t i = blen; i >= 1; --i) obj.push_back("b" + std::to_string(i));
  obj.push_back("s");
  std::vector<std::pair<std::string, std::string>> edges{{"a2", "a1"}, {"c", "a2"}};  // (inner, outer)
  for (std::size_t i = 1; i < blen; ++i) edges.emplace_back("b" + std::to_string(i + 1), "b" + std::to_string(i));
  edges.emplace_back("c", "b" + std::to_string(blen));
  edges.emplace_back("c", "s");
  std::vector<Arrow> arr;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& [inner, outer] = edges[i];
    const std::string nm = "e" + std::to_string(i + 1);
    arr.push_back(out[i] ? Arrow{nm, inner, outer} : Arrow{nm, outer, inner});
  }
  return Shape(obj, arr);
}

bool e_expected_surjective(std::size_t n, const std::vector<bool>& out) {
  const std::size_t m = e_edge_count(n);
  if (out.size() != m) throw ShapeError("wrong number of orientation flags");
  const std::size_t a = out[0] + out[1];
  std::size_t b = 0;
  for (std::size_t i = 2; i + 1 < m; ++i) b += out[i];
  const bool s = out[m - 1];
  const std::size_t blen = n - 4, total = a + b + s;
  switch (n) {
    case 6:
      return a == 2 || b == 2 || (s && total >= 2);
    case 7:
      return b == blen || (a == 2 && total >= 3) || (s && (a >= 1 || b >= blen - 1));
    default:
      return (b == blen && total >= blen + 1) || (a == 2 && b >= 2) || (s && total >= 3 && a >= 1) || (s && b >= 3);
  }
}

OrientationResult e_orientation(const Field& F, std::size_t n, const std::vector<bool>& out, std::uint64_t seed) {
  const Shape S = e_shape(n, out);
  OrientationResult res;
  res.out = out;
  for (const auto& d : positive_roots(S)) {
    ++res.roots_checked;
    const LinRep R = root_indecomposable(F, S, d, seed);
    if (!is_add_set_realizable(R).realizable) {
      res.surjective = false;
      res.failing_root = d;
      break;
    }
  }
  return res;
}

std::vector<OrientationResult> e_sweep(const Field& F, std::size_t n, std::uint64_t seed) {
  const std::size_t m = e_edge_count(n);
  std::vector<OrientationResult> all;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<bool> out(m);
    for (std::size_t i = 0; i < m; ++i) out[i] = (mask >> i) & 1;
    all.push_back(e_orientation(F, n, out, seed));
  }
  return all;
}

}  // namespace sr
