#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "setreal/field.hpp"
#include "setreal/matrix.hpp"
#include "setreal/poly.hpp"

using namespace sr;

namespace {

// Reference multiplication: schoolbook product of digit vectors, reduced by the modulus.
Elem ref_mul(unsigned p, unsigned k, const std::vector<Elem>& mod, Elem a, Elem b) {
  std::vector<long> x(k), y(k), prod(2 * k, 0);
  for (unsigned i = 0; i < k; ++i, a /= p, b /= p) {
    x[i] = a % p;
    y[i] = b % p;
  }
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < k; ++j) prod[i + j] += x[i] * y[j];
  for (unsigned d = 2 * k - 1; d-- > k;) {
    long c = ((prod[d] % long(p)) + p) % p;
    for (unsigned i = 0; i <= k; ++i) prod[d - k + i] -= c * static_cast<long>(mod[i]);
  }
  Elem r = 0;
  for (unsigned i = k; i-- > 0;) r = r * p + static_cast<Elem>(((prod[i] % long(p)) + p) % p);
  return r;
}

std::vector<std::pair<unsigned, unsigned>> small_fields() {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u, 47u, 53u, 59u, 61u})
    for (unsigned k = 1;; ++k) {
      unsigned q = 1;
      for (unsigned i = 0; i < k; ++i) q *= p;
      if (q > 64) break;
      out.emplace_back(p, k);
    }
  return out;
}

}  // namespace

TEST_CASE("field_create rejects bad input") {
  CHECK_THROWS_AS(Field::create(4, 1), FieldError);
  CHECK_THROWS_AS(Field::create(1, 1), FieldError);
  CHECK_THROWS_AS(Field::create(2, 2, std::vector<Elem>{1, 0, 1}), FieldError);  // (X+1)^2
  CHECK_THROWS_AS(Field::create(2, 2, std::vector<Elem>{1, 1}), FieldError);     // wrong degree
  CHECK_THROWS_AS(Field::create(2, 0), FieldError);
}

TEST_CASE("default moduli") {
  CHECK(Field::create(2, 1).modulus() == std::vector<Elem>{0, 1});
  // Among X^2, X^2+1, X^2+X, X^2+X+1 only the last has no root in GF(2).
  std::vector<Elem> expect;
  for (Elem c0 = 0; c0 < 2 && expect.empty(); ++c0)
    for (Elem c1 = 0; c1 < 2 && expect.empty(); ++c1) {
      bool root = false;
      for (Elem x = 0; x < 2; ++x) root |= ((c0 + c1 * x + x * x) % 2 == 0);
      if (!root) expect = {c0, c1, 1};
    }
  CHECK(Field::create(2, 2).modulus() == expect);
  CHECK(Field::create(5, 1).q() == 5);
  CHECK(Field::create(3, 2).q() == 9);
  CHECK(Field::create(2, 3).modulus() == std::vector<Elem>{1, 0, 1, 1});
}

TEST_CASE("element examples") {
  auto F5 = Field::create(5);
  CHECK(F5.mul(2, 3) == 1);
  auto F4 = Field::create(2, 2);
  CHECK(F4.mul(2, 2) == ref_mul(2, 2, F4.modulus(), 2, 2));
  CHECK(F4.mul(2, 2) == 3);
  auto F2 = Field::create(2);
  CHECK(F2.inv(1) == 1);
  CHECK_THROWS_AS(F2.inv(0), FieldError);
}

TEST_CASE("exhaustive field axioms for q <= 64") {
  for (auto [p, k] : small_fields()) {
    auto F = Field::create(p, k);
    const Elem q = F.q();
    CAPTURE(q);
    bool ok = true;
    for (Elem a = 0; a < q && ok; ++a) {
      ok &= F.add(a, 0) == a && F.mul(a, 1) == a && F.add(a, F.neg(a)) == 0;
      if (a) ok &= F.mul(a, F.inv(a)) == 1;
      for (Elem b = 0; b < q && ok; ++b) {
        ok &= F.mul(a, b) == ref_mul(p, k, F.modulus(), a, b);
        ok &= F.add(a, b) == F.add(b, a) && F.mul(a, b) == F.mul(b, a);
        for (Elem c = 0; c < q && ok; ++c) {
          ok &= F.add(F.add(a, b), c) == F.add(a, F.add(b, c));
          ok &= F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c));
          ok &= F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c));
        }
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("roots of unity") {
  auto F5 = Field::create(5);
  CHECK(root_of_unity(F5, 4) == 2);
  CHECK(root_of_unity(F5, 1) == 1);
  CHECK_THROWS_AS(root_of_unity(Field::create(2), 3), FieldError);
  for (auto [p, k] : small_fields()) {
    auto F = Field::create(p, k);
    for (std::uint64_t n = 1; n < F.q(); ++n) {
      if ((F.q() - 1) % n) continue;
      Elem z = root_of_unity(F, n);
      CHECK(F.pow(z, n) == 1);
      for (auto l : prime_factors(n)) CHECK(F.pow(z, n / l) != 1);
    }
  }
}

TEST_CASE("subfield embedding is a ring map") {
  auto F2 = Field::create(2), F4 = Field::create(2, 2), F16 = Field::create(2, 4);
  auto e = subfield_embedding(F2, F4);
  CHECK(e == std::vector<Elem>{0, 1});
  auto e2 = subfield_embedding(F4, F16);
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) {
      CHECK(e2[F4.mul(a, b)] == F16.mul(e2[a], e2[b]));
      CHECK(e2[F4.add(a, b)] == F16.add(e2[a], e2[b]));
    }
  CHECK_THROWS_AS(subfield_embedding(F4, Field::create(2, 3)), FieldError);
}

TEST_CASE("solve, rank, nullspace examples") {
  auto F2 = Field::create(2);
  Matrix b(3, 1, {1, 0, 1});
  auto x = solve(F2, Matrix::identity(3), b);
  REQUIRE(x);
  CHECK(*x == b);
  CHECK_FALSE(solve(F2, Matrix::from_rows({{1, 1}, {0, 0}}), Matrix(2, 1, {1, 1})));
  auto N = nullspace(F2, Matrix::from_rows({{1, 1}}));
  CHECK(N == Matrix(2, 1, {1, 1}));
  CHECK_THROWS_AS(solve(F2, Matrix::identity(2), Matrix(3, 1)), DimensionError);
}

TEST_CASE("random linear algebra properties") {
  std::mt19937_64 rng(7);
  for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}, {7, 1}}) {
    auto F = Field::create(p, k);
    for (int it = 0; it < 60; ++it) {
      std::size_t r = rng() % 7, c = rng() % 7;
      Matrix M(r, c);
      for (auto& v : M.a) v = static_cast<Elem>(rng() % F.q());
      if (rng() % 3 == 0 && r > 1)  // force dependencies
        for (std::size_t j = 0; j < c; ++j) M(r - 1, j) = M(0, j);
      std::size_t rk = rank(F, M);
      CHECK(rk == rank(F, transpose(M)));
      Matrix N = nullspace(F, M);
      CHECK(rk + N.cols == c);
      CHECK(mul(F, M, N).is_zero());
      Matrix x(c, 1);
      for (auto& v : x.a) v = static_cast<Elem>(rng() % F.q());
      Matrix rhs = mul(F, M, x);
      auto sol = solve(F, M, rhs);
      REQUIRE(sol);
      CHECK(mul(F, M, *sol) == rhs);
      if (r == c) {
        auto inv = inverse(F, M);
        CHECK(inv.has_value() == (rk == r));
        if (inv) CHECK(mul(F, M, *inv) == Matrix::identity(r));
      }
    }
  }
}

TEST_CASE("polynomials") {
  auto F2 = Field::create(2);
  CHECK(companion(F2, Poly{1, 1, 1}) == Matrix::from_rows({{0, 1}, {1, 1}}));
  auto F3 = Field::create(3);
  Poly f{2, 0, 1};  // X^2 - 1
  Poly g{1, 1};     // X + 1
  CHECK(poly_gcd(F3, f, g) == g);
  Poly C = poly_mul(F3, Poly{1, 1}, Poly{2, 1});
  CHECK(C == f);
  Matrix A = companion(F3, f);
  CHECK(poly_eval(F3, f, A).is_zero());
}
