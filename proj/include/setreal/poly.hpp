#pragma once

#include <random>
#include <utility>
#include <vector>

#include "setreal/field.hpp"
#include "setreal/matrix.hpp"

namespace sr {

/// Univariate polynomial over a Field, coefficients low to high, no trailing zeros.
using Poly = std::vector<Elem>;

void poly_trim(Poly& f);
long poly_deg(const Poly& f);  // -1 for zero
Poly poly_add(const Field& F, const Poly& f, const Poly& g);
Poly poly_sub(const Field& F, const Poly& f, const Poly& g);
Poly poly_mul(const Field& F, const Poly& f, const Poly& g);
Poly poly_scale(const Field& F, Elem c, const Poly& f);
/// f = quot * g + rem.
void poly_divmod(const Field& F, const Poly& f, const Poly& g, Poly& quot, Poly& rem);
Poly poly_mod(const Field& F, const Poly& f, const Poly& g);
Poly poly_monic(const Field& F, const Poly& f);
Poly poly_gcd(const Field& F, Poly f, Poly g);
Poly poly_powmod(const Field& F, Poly base, std::uint64_t e, const Poly& m);
Poly poly_pow(const Field& F, const Poly& f, unsigned e);
Poly poly_derivative(const Field& F, const Poly& f);
Poly poly_x();

/// Evaluate f at a square matrix.
Matrix poly_eval(const Field& F, const Poly& f, const Matrix& A);

/// Monic irreducible factors with multiplicities, sorted by (degree, coefficients).
/// Squarefree split, then distinct-degree, then equal-degree (randomized).
std::vector<std::pair<Poly, unsigned>> poly_factor(const Field& F, const Poly& f, std::mt19937_64& rng);
bool poly_is_irreducible(const Field& F, const Poly& f);

/// Companion matrix of a monic polynomial: ones on the subdiagonal, last
/// column -c0 .. -c_{u-1}.
Matrix companion(const Field& F, const Poly& f);

}  // namespace sr
