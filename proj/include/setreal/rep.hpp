#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "setreal/field.hpp"
#include "setreal/matrix.hpp"
#include "setreal/shape.hpp"

namespace sr {

using DimVector = std::vector<std::size_t>;

/// Three-valued answer for searches that may give up.
enum class Tri { False, True, Inconclusive };
const char* tri_name(Tri t);

class RepError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Linear representation: one matrix per generating arrow, d_dst x d_src.
struct LinRep {
  Field field;
  Shape shape;
  DimVector dims;             // object order
  std::vector<Matrix> mats;   // arrow order

  LinRep() = default;
  LinRep(Field F, Shape S, DimVector d);  // zero maps
  LinRep(Field F, Shape S, DimVector d, std::vector<Matrix> m);

  std::size_t total_dim() const;
  const Matrix& mat(const std::string& arrow) const { return mats[shape.arrow_index(arrow)]; }
  Matrix& mat(const std::string& arrow) { return mats[shape.arrow_index(arrow)]; }
  std::size_t dim(const std::string& object) const { return dims[shape.object_index(object)]; }
  /// Composite matrix of a path (identity on `from` when empty).
  Matrix path_matrix(const std::vector<std::size_t>& path, std::size_t from) const;

  bool operator==(const LinRep& o) const {
    return field == o.field && shape == o.shape && dims == o.dims && mats == o.mats;
  }
};

/// Pointed-set representation. Elements of object v are 1..sizes[v]; 0 is the
/// basepoint. maps[a][j-1] is the image of element j under arrow a.
struct SetRep {
  Shape shape;
  std::vector<std::size_t> sizes;
  std::vector<std::vector<std::uint32_t>> maps;

  SetRep() = default;
  SetRep(Shape S, std::vector<std::size_t> n, std::vector<std::vector<std::uint32_t>> m);

  std::uint32_t apply(std::size_t arrow, std::uint32_t x) const { return x == 0 ? 0 : maps[arrow][x - 1]; }
  std::uint32_t apply_path(const std::vector<std::size_t>& path, std::uint32_t x) const;
  bool basepoint_free() const;
  bool operator==(const SetRep& o) const = default;
};

/// Morphism of representations: one matrix per object.
using Hom = std::vector<Matrix>;

/// First violation found, or nothing when the representation is valid.
std::optional<std::string> validate(const LinRep& R);
std::optional<std::string> validate(const SetRep& S);

enum class Linearization { Free, FreeStar };
/// free_star: basis = non-basepoint elements. free: the basepoint is kept as an
/// ordinary basis vector, placed first.
LinRep linearize(const SetRep& S, const Field& F, Linearization variant = Linearization::FreeStar);

/// Basis of Hom(R, S): solutions of S(a) phi_v = phi_w R(a) for all arrows a: v -> w.
std::vector<Hom> hom_space(const LinRep& R, const LinRep& S);
std::size_t hom_dim(const LinRep& R, const LinRep& S);
Hom hom_combination(const Field& F, const std::vector<Hom>& basis, const std::vector<Elem>& coeffs);
Hom hom_compose(const Field& F, const Hom& g, const Hom& f);  // g after f
bool is_morphism(const LinRep& R, const LinRep& S, const Hom& h);
Hom hom_identity(const LinRep& R);

struct IsoOptions {
  std::size_t random_trials = 64;
  std::uint64_t exhaustive_limit = 1u << 16;
  std::uint64_t seed = 0;
};
/// Invertible element of Hom(R, S) if one is found.
std::optional<Hom> find_isomorphism(const LinRep& R, const LinRep& S, const IsoOptions& opt, Tri* verdict);
Tri is_isomorphic(const LinRep& R, const LinRep& S, const IsoOptions& opt = {});

LinRep direct_sum(const LinRep& R, const LinRep& S);
LinRep direct_sum(const std::vector<LinRep>& parts, const LinRep& zero_template);
LinRep zero_rep(const Field& F, const Shape& shape);
/// Re-read every entry through the subfield embedding into `big`.
LinRep tensor_extend(const LinRep& R, const Field& big);
/// Change of basis: new maps B_w R(a) B_v^{-1}.
LinRep conjugate(const LinRep& R, const Hom& B);
/// Restriction to the subrepresentation spanned by the columns of `basis`, using
/// `proj` (left inverses) to read coordinates.
LinRep restrict_rep(const LinRep& R, const Hom& basis, const Hom& proj);

/// Uniformly random representation with given dimension vector.
LinRep random_rep(const Field& F, const Shape& shape, const DimVector& dims, std::mt19937_64& rng);
Matrix random_matrix(const Field& F, std::size_t r, std::size_t c, std::mt19937_64& rng);
Matrix random_invertible(const Field& F, std::size_t n, std::mt19937_64& rng);

}  // namespace sr
