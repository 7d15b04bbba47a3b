#include "setreal/catalog.hpp"

#include <stdexcept>

namespace sr::catalog {

namespace {

using Rows = std::vector<std::vector<Elem>>;

// Grid representation from per-object dims ("r,c") and per-arrow matrices.
LinRep on_grid(const Field& F, std::size_t rows, std::size_t cols, const std::vector<std::pair<std::string, std::size_t>>& dims,
               const std::vector<std::pair<std::string, Rows>>& mats) {
  Shape G = shapes::grid(rows, cols);
  DimVector d(G.num_objects(), 0);
  for (const auto& [name, n] : dims) d[G.object_index(name)] = n;
  LinRep R(F, G, d);
  for (const auto& [name, rowsv] : mats) {
    Matrix M = Matrix::from_rows(rowsv);
    Matrix& slot = R.mat(name);
    if (M.rows != slot.rows || M.cols != slot.cols) throw std::logic_error("catalog: bad matrix shape for " + name);
    slot = M;
  }
  if (auto err = validate(R)) throw std::logic_error("catalog: " + *err);
  return R;
}

}  // namespace

LinRep d4_inward(const Field& F) {
  LinRep R(F, shapes::star(3, true), {1, 1, 1, 2});
  R.mats[0] = Matrix(2, 1, {1, 0});
  R.mats[1] = Matrix(2, 1, {0, 1});
  R.mats[2] = Matrix(2, 1, {1, 1});
  return R;
}

LinRep star7(const Field& F) {
  const std::vector<Rows> V = {{{1, 1, 0}, {0, 1, 1}}, {{1, 0, 0}, {0, 1, 0}}, {{1, 0, 0}, {0, 1, 1}},
                               {{1, 0, 1}, {0, 1, 0}}, {{0, 1, 0}, {0, 0, 1}}, {{1, 0, 0}, {0, 0, 1}},
                               {{1, 1, 0}, {0, 0, 1}}};
  LinRep R(F, shapes::star(7, false), {2, 2, 2, 2, 2, 2, 2, 3});
  for (std::size_t i = 0; i < 7; ++i) R.mats[i] = Matrix::from_rows(V[i]);
  return R;
}

LinRep intro_grid(const Field& F) {
  return on_grid(F, 2, 5,
                 {{"2,1", 1}, {"2,2", 2}, {"2,3", 3}, {"2,4", 3}, {"2,5", 2}, {"1,3", 1}, {"1,4", 2}, {"1,5", 2}},
                 {{"h2_1", {{0}, {1}}},
                  {"h2_2", {{1, 0}, {0, 0}, {0, 1}}},
                  {"h2_3", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}},
                  {"h2_4", {{1, 0, 1}, {0, 1, 1}}},
                  {"h1_3", {{1}, {0}}},
                  {"h1_4", {{1, 0}, {0, 1}}},
                  {"v1_3", {{0}, {1}, {0}}},
                  {"v1_4", {{0, 1}, {1, 1}, {0, 0}}},
                  {"v1_5", {{0, 1}, {1, 1}}}});
}

LinRep grid_pattern(const Field& F, int k) {
  switch (k) {
    case 1:
      return on_grid(F, 2, 4, {{"1,1", 1}, {"2,1", 1}, {"1,2", 2}, {"2,2", 1}, {"1,3", 1}},
                     {{"h1_1", {{1}, {0}}}, {"v1_1", {{1}}}, {"h2_1", {{1}}}, {"v1_2", {{1, 0}}}, {"h1_2", {{1, 1}}}});
    case 2:
      return on_grid(F, 2, 4, {{"2,1", 1}, {"1,2", 1}, {"2,2", 2}, {"2,3", 1}, {"1,3", 1}},
                     {{"h2_1", {{1}, {0}}}, {"v1_2", {{0}, {1}}}, {"h2_2", {{1, 1}}}, {"h1_2", {{1}}}, {"v1_3", {{1}}}});
    case 3:
      return on_grid(F, 2, 4, {{"2,1", 1}, {"2,2", 2}, {"2,3", 1}, {"1,2", 1}, {"1,3", 2}, {"1,4", 1}},
                     {{"h2_1", {{1}, {0}}},
                      {"h2_2", {{1, 1}}},
                      {"h1_2", {{1}, {0}}},
                      {"h1_3", {{1, 1}}},
                      {"v1_2", {{0}, {1}}},
                      {"v1_3", {{1, 0}}}});
  }
  throw std::invalid_argument("grid_pattern: k must be 1, 2 or 3");
}

std::vector<std::string> names() {
  return {"d4_inward", "star7", "intro_grid", "grid_pattern1", "grid_pattern2", "grid_pattern3"};
}

LinRep by_name(const std::string& name, const Field& F) {
  if (name == "d4_inward") return d4_inward(F);
  if (name == "star7") return star7(F);
  if (name == "intro_grid") return intro_grid(F);
  if (name.rfind("grid_pattern", 0) == 0 && name.size() == 13) return grid_pattern(F, name.back() - '0');
  throw std::invalid_argument("unknown example '" + name + "'");
}

}  // namespace sr::catalog
