#include "setreal/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace sr::io {

json field_to_json(const Field& F) {
  return json{{"p", F.p()}, {"k", F.k()}, {"modulus", F.modulus()}};
}

Field field_from_json(const json& j) {
  try {
    unsigned p = j.at("p").get<unsigned>();
    unsigned k = j.value("k", 1u);
    std::optional<std::vector<Elem>> mod;
    if (j.contains("modulus")) mod = j.at("modulus").get<std::vector<Elem>>();
    // a linear modulus only names GF(p) itself
    if (k == 1) mod.reset();
    return Field::create(p, k, mod);
  } catch (const json::exception& e) {
    throw ParseError(std::string("field: ") + e.what());
  }
}

json shape_to_json(const Shape& S) {
  json arrows = json::array();
  for (const auto& a : S.arrows()) arrows.push_back({{"name", a.name}, {"src", a.src}, {"dst", a.dst}});
  json rels = json::array();
  for (const auto& r : S.relations()) rels.push_back(json::array({r.lhs, r.rhs}));
  json out{{"objects", S.objects()}, {"arrows", arrows}};
  if (!rels.empty()) out["relations"] = rels;
  return out;
}

Shape shape_from_json(const json& j) {
  try {
    auto objects = j.at("objects").get<std::vector<std::string>>();
    std::vector<Arrow> arrows;
    for (const auto& a : j.value("arrows", json::array()))
      arrows.push_back({a.at("name").get<std::string>(), a.at("src").get<std::string>(), a.at("dst").get<std::string>()});
    std::vector<Relation> rels;
    for (const auto& r : j.value("relations", json::array())) {
      if (!r.is_array() || r.size() != 2) throw ParseError("shape: a relation is a pair of paths");
      rels.push_back({r[0].get<std::vector<std::string>>(), r[1].get<std::vector<std::string>>()});
    }
    return Shape(objects, arrows, rels);
  } catch (const json::exception& e) {
    throw ParseError(std::string("shape: ") + e.what());
  } catch (const ShapeError& e) {
    throw ParseError(std::string("shape: ") + e.what());
  }
}

json matrix_to_json(const Matrix& M) {
  json rows = json::array();
  for (std::size_t i = 0; i < M.rows; ++i) rows.push_back(std::vector<Elem>(M.row(i), M.row(i) + M.cols));
  return rows;
}

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw ParseError("matrix: expected " + std::to_string(rows) + " rows");
  Matrix M(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    auto r = j[i].get<std::vector<Elem>>();
    if (r.size() != cols) throw ParseError("matrix: expected " + std::to_string(cols) + " columns in row " + std::to_string(i));
    std::copy(r.begin(), r.end(), M.row(i));
  }
  return M;
}

json linrep_to_json(const LinRep& R) {
  json dims = json::object(), mats = json::object();
  for (std::size_t v = 0; v < R.dims.size(); ++v) dims[R.shape.objects()[v]] = R.dims[v];
  for (std::size_t a = 0; a < R.mats.size(); ++a) mats[R.shape.arrows()[a].name] = matrix_to_json(R.mats[a]);
  return json{{"field", field_to_json(R.field)}, {"shape", shape_to_json(R.shape)}, {"dims", dims}, {"mats", mats}};
}

LinRep linrep_from_json(const json& j) {
  Field F = field_from_json(j.at("field"));
  Shape S = shape_from_json(j.at("shape"));
  try {
    DimVector d(S.num_objects());
    for (std::size_t v = 0; v < d.size(); ++v) d[v] = j.at("dims").at(S.objects()[v]).get<std::size_t>();
    LinRep R(F, S, d);
    const auto& mats = j.at("mats");
    for (std::size_t a = 0; a < S.num_arrows(); ++a) {
      const auto& name = S.arrows()[a].name;
      std::size_t r = d[S.dst(a)], c = d[S.src(a)];
      if (!mats.contains(name)) {
        if (r * c == 0) continue;
        throw ParseError("mats: missing matrix for arrow '" + name + "'");
      }
      try {
        R.mats[a] = matrix_from_json(mats.at(name), r, c);
      } catch (const ParseError& e) {
        throw ParseError("mats['" + name + "']: " + e.what());
      }
      for (auto x : R.mats[a].a)
        if (x >= F.q()) throw ParseError("mats['" + name + "']: entry " + std::to_string(x) + " is not a field element");
    }
    return R;
  } catch (const json::exception& e) {
    throw ParseError(std::string("representation: ") + e.what());
  }
}

json setrep_to_json(const SetRep& T) {
  json sizes = json::object(), maps = json::object();
  for (std::size_t v = 0; v < T.sizes.size(); ++v) sizes[T.shape.objects()[v]] = T.sizes[v];
  for (std::size_t a = 0; a < T.maps.size(); ++a) maps[T.shape.arrows()[a].name] = T.maps[a];
  return json{{"shape", shape_to_json(T.shape)}, {"sizes", sizes}, {"maps", maps}};
}

SetRep setrep_from_json(const json& j) {
  Shape S = shape_from_json(j.at("shape"));
  try {
    std::vector<std::size_t> n(S.num_objects());
    for (std::size_t v = 0; v < n.size(); ++v) n[v] = j.at("sizes").at(S.objects()[v]).get<std::size_t>();
    std::vector<std::vector<std::uint32_t>> maps;
    for (const auto& a : S.arrows()) maps.push_back(j.at("maps").at(a.name).get<std::vector<std::uint32_t>>());
    return SetRep(S, n, maps);
  } catch (const json::exception& e) {
    throw ParseError(std::string("set representation: ") + e.what());
  }
}

json hom_to_json(const Shape& S, const Hom& h) {
  json out = json::object();
  for (std::size_t v = 0; v < h.size(); ++v) out[S.objects()[v]] = matrix_to_json(h[v]);
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

std::string digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace sr::io
