#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "setreal/rep.hpp"

namespace sr {

enum class Variant { Plain, GSet };
const char* variant_name(Variant v);

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Encoding of a vector x in F^d: sum_i x_i q^i (coordinate 0 least significant).
std::uint64_t vector_code(const Field& F, const Elem* x, std::size_t d);
std::vector<Elem> vector_decode(const Field& F, std::uint64_t code, std::size_t d);

/// free_star(forget R) (plain) or its projective quotient (gset), with the counit.
struct CounitPackage {
  Variant variant = Variant::GSet;
  LinRep big;
  Hom counit;                                   // E_v, d_v x D_v
  std::vector<std::vector<std::uint64_t>> basis;  // codes of the vectors indexing big(v)
  /// Sparse copy of the arrow matrices of `big`: for arrow a and column b,
  /// (row, value) with value 0 meaning a zero column.
  std::vector<std::vector<std::pair<std::uint32_t, Elem>>> columns;

  std::size_t big_dim(std::size_t v) const { return basis[v].size(); }
};

constexpr std::size_t kDefaultCap = std::size_t(1) << 20;
/// The split system is assembled densely; larger systems throw CapExceeded.
constexpr std::size_t kMaxSystemEntries = std::size_t(1) << 28;

/// Throws CapExceeded when some D_v exceeds `cap`.
CounitPackage counit_package(const LinRep& R, Variant variant = Variant::GSet, std::size_t cap = kDefaultCap);

/// Unknowns: entries of each G_v (D_v x d_v), object order, row-major.
/// Equations: E_v G_v = I for each object, then G_w L = U G_v for each arrow.
/// Throws CapExceeded above kMaxSystemEntries.
LinearSystem build_split_system(const CounitPackage& pkg, const LinRep& R);

struct Realizability {
  bool realizable = false;
  std::optional<Hom> witness;  // G_v per object
  std::size_t unknowns = 0, equations = 0;
};

Realizability is_add_set_realizable(const LinRep& R, Variant variant = Variant::GSet, std::size_t cap = kDefaultCap);
/// Same, reusing an already-built package.
Realizability decide(const CounitPackage& pkg, const LinRep& R);

/// E_v G_v = I and G_w L = U G_v for every arrow, by direct matrix products.
bool check_witness(const LinRep& R, const CounitPackage& pkg, const Hom& G);

/// E_w U = L E_v on every arrow.
bool counit_is_natural(const LinRep& R, const CounitPackage& pkg);

}  // namespace sr
