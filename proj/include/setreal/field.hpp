#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sr {

// Field elements are encoded as integers in [0, q): the base-p digits are the
// coefficients c0 + c1*a + c2*a^2 + ... of a polynomial in the generator a.
using Elem = std::uint32_t;

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

struct FieldTables;

/// GF(p^k) with dense lookup tables. Cheap to copy (shared, immutable tables).
class Field {
 public:
  Field() = default;

  /// Largest supported order; log/exp tables are kept for every field.
  static constexpr std::uint64_t kMaxOrder = 1u << 16;

  static Field create(unsigned p, unsigned k = 1,
                      std::optional<std::vector<Elem>> modulus = std::nullopt);
  static Field prime(unsigned p) { return create(p, 1); }

  unsigned p() const;
  unsigned k() const;
  Elem q() const;
  /// Monic modulus, coefficients c0..ck.
  const std::vector<Elem>& modulus() const;
  bool valid() const { return t_ != nullptr; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  /// Image of an integer in the prime subfield.
  Elem from_int(long long v) const;
  /// Multiplicative order of a nonzero element.
  std::uint64_t order(Elem a) const;
  /// Row of the multiplication table for a fixed factor (q <= 256 only).
  const Elem* mul_row(Elem f) const;
  const Elem* add_table() const;

  std::string name() const;

  bool operator==(const Field& o) const;
  bool operator!=(const Field& o) const { return !(*this == o); }

 private:
  std::shared_ptr<const FieldTables> t_;
};

/// Smallest element (by encoding) of multiplicative order exactly n.
Elem root_of_unity(const Field& F, std::uint64_t n);

/// Canonical embedding of `small` into `big`: the generator goes to the
/// smallest-encoded root of the small modulus. Returns the image of every
/// encoding of `small`.
std::vector<Elem> subfield_embedding(const Field& small, const Field& big);

/// Polynomial helpers over GF(p) used for modulus checks. Coefficients low to high.
bool is_irreducible_mod_p(const std::vector<Elem>& f, unsigned p);

}  // namespace sr
