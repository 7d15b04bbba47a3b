#pragma once

#include <json.hpp>
#include <string>

#include "setreal/rep.hpp"

namespace sr::io {

using json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json field_to_json(const Field& F);
Field field_from_json(const json& j);

json shape_to_json(const Shape& S);
Shape shape_from_json(const json& j);

json matrix_to_json(const Matrix& M);
Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols);

json linrep_to_json(const LinRep& R);
LinRep linrep_from_json(const json& j);

json setrep_to_json(const SetRep& S);
SetRep setrep_from_json(const json& j);

json hom_to_json(const Shape& S, const Hom& h);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

/// FNV-1a 64-bit digest, hex encoded.
std::string digest(const std::string& bytes);

}  // namespace sr::io
