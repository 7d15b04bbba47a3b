#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "setreal/decomp.hpp"

using namespace sr;

namespace {

LinRep thin(const Field& F, const Shape& S, const std::vector<int>& support) {
  DimVector d(S.num_objects());
  for (std::size_t v = 0; v < d.size(); ++v) d[v] = support[v] ? 1 : 0;
  LinRep R(F, S, d);
  for (std::size_t a = 0; a < S.num_arrows(); ++a)
    if (support[S.src(a)] && support[S.dst(a)]) R.mats[a](0, 0) = 1;
  return R;
}

LinRep d4_rep(const Field& F) {
  LinRep R(F, shapes::star(3, true), {1, 1, 1, 2});
  R.mats[0] = Matrix(2, 1, {1, 0});
  R.mats[1] = Matrix(2, 1, {0, 1});
  R.mats[2] = Matrix(2, 1, {1, 1});
  return R;
}

// all monic polynomials of degree d, by enumeration
std::vector<Poly> monics(const Field& F, std::size_t d) {
  std::vector<Poly> out;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= F.q();
  for (std::uint64_t c = 0; c < total; ++c) {
    Poly f(d + 1, 0);
    std::uint64_t x = c;
    for (std::size_t i = 0; i < d; ++i) {
      f[i] = static_cast<Elem>(x % F.q());
      x /= F.q();
    }
    f[d] = 1;
    out.push_back(f);
  }
  return out;
}

bool brute_irreducible(const Field& F, const Poly& f) {
  const std::size_t n = static_cast<std::size_t>(poly_deg(f));
  for (std::size_t d = 1; 2 * d <= n; ++d)
    for (const auto& g : monics(F, d))
      if (poly_mod(F, f, g).empty()) return false;
  return n >= 1;
}

}  // namespace

TEST_CASE("polynomial factorization") {
  std::mt19937_64 rng(4);
  for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}}) {
    auto F = Field::create(p, k);
    for (int it = 0; it < 40; ++it) {
      std::size_t n = 1 + rng() % 7;
      Poly f(n + 1);
      for (auto& x : f) x = static_cast<Elem>(rng() % F.q());
      f[n] = 1;
      if (it % 4 == 0) f = poly_mul(F, f, f);
      auto fac = poly_factor(F, f, rng);
      Poly prod{1};
      for (auto& [g, m] : fac) {
        CHECK(brute_irreducible(F, g));
        CHECK(g.back() == 1);
        prod = poly_mul(F, prod, poly_pow(F, g, m));
      }
      CHECK(prod == f);
      for (std::size_t i = 1; i < fac.size(); ++i) CHECK(fac[i - 1].first != fac[i].first);
    }
  }
  auto F2 = Field::create(2);
  CHECK(poly_is_irreducible(F2, {1, 1, 1}));
  CHECK_FALSE(poly_is_irreducible(F2, {1, 0, 1}));
  // (X+1)^4 over GF(2)
  auto f4 = poly_factor(F2, poly_pow(F2, {1, 1}, 4), rng);
  REQUIRE(f4.size() == 1);
  CHECK(f4[0].second == 4);
}

TEST_CASE("minimal polynomial") {
  auto F3 = Field::create(3);
  std::mt19937_64 rng(8);
  for (int it = 0; it < 30; ++it) {
    Hom th{random_matrix(F3, rng() % 4, 0, rng)};
    th[0] = random_matrix(F3, th[0].rows, th[0].rows, rng);
    th.push_back(random_matrix(F3, 2, 2, rng));
    Poly mu = minimal_polynomial(F3, th);
    for (const auto& M : th) CHECK(poly_eval(F3, mu, M).is_zero());
    // no proper divisor annihilates both blocks
    for (auto& [g, m] : poly_factor(F3, mu, rng)) {
      Poly h, r;
      poly_divmod(F3, mu, g, h, r);
      bool all = true;
      for (const auto& M : th) all = all && poly_eval(F3, h, M).is_zero();
      CHECK_FALSE(all);
    }
  }
}

TEST_CASE("endomorphism algebras") {
  auto F2 = Field::create(2);
  Shape A2 = shapes::linear(2);
  CHECK(end_algebra(thin(F2, A2, {1, 1})).dim() == 1);
  LinRep S = thin(F2, A2, {0, 1});
  CHECK(end_algebra(direct_sum(S, S)).dim() == 4);
  CHECK(end_algebra(d4_rep(F2)).dim() == 1);
  CHECK(end_algebra(d4_rep(Field::create(3))).dim() == 1);

  std::mt19937_64 rng(12);
  auto F3 = Field::create(3);
  Shape Q = shapes::star(3, true);
  for (int it = 0; it < 25; ++it) {
    DimVector d1(4), d2(4);
    for (auto& x : d1) x = rng() % 2;
    for (auto& x : d2) x = rng() % 3;
    LinRep R = random_rep(F3, Q, d1, rng), T = random_rep(F3, Q, d2, rng);
    CHECK(end_algebra(direct_sum(R, T)).dim() ==
          end_algebra(R).dim() + end_algebra(T).dim() + hom_dim(R, T) + hom_dim(T, R));
  }
}

TEST_CASE("decompose the D4 examples") {
  auto F2 = Field::create(2);
  auto pkg = counit_package(d4_rep(F2), Variant::Plain);
  auto D = decompose(pkg.big);
  CHECK(D.certified);
  REQUIRE(D.factors.size() == 3);
  Shape Q = shapes::star(3, true);
  for (int i = 0; i < 3; ++i) {
    std::vector<int> sup{0, 0, 0, 1};
    sup[i] = 1;
    int hits = 0;
    for (const auto& f : D.factors) hits += is_isomorphic(f.rep, thin(F2, Q, sup)) == Tri::True;
    CHECK(hits == 1);
  }
  CHECK(is_isomorphic(D.reassemble(pkg.big), pkg.big) == Tri::True);

  for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    auto F = Field::create(p, k);
    auto g = counit_package(d4_rep(F), Variant::GSet);
    CHECK(g.big.dims[3] == F.q() + 1);
    auto Dg = decompose(g.big);
    CHECK(Dg.count() == F.q() + 1);
    for (const auto& f : Dg.factors) {
      std::vector<int> sup;
      for (auto x : f.rep.dims) {
        CHECK(x <= 1);
        sup.push_back(static_cast<int>(x));
      }
      CHECK(is_isomorphic(f.rep, thin(F, Q, sup)) == Tri::True);
    }
  }

  auto single = decompose(d4_rep(F2));
  REQUIRE(single.factors.size() == 1);
  CHECK(single.factors[0].multiplicity == 1);
  CHECK(decompose(zero_rep(F2, Q)).factors.empty());
}

TEST_CASE("decomposition properties") {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 40; ++it) {
    auto F = Field::create(it % 2 ? 3 : 2);
    Shape Q = it % 3 == 0 ? shapes::loop() : shapes::linear({true, false, true});
    DimVector d1(Q.num_objects()), d2(Q.num_objects());
    for (auto& x : d1) x = rng() % 3;
    for (auto& x : d2) x = rng() % 2;
    LinRep R = direct_sum(random_rep(F, Q, d1, rng), random_rep(F, Q, d2, rng));
    DecompOptions opt;
    opt.seed = it;
    auto D = decompose(R, opt);
    CHECK(is_isomorphic(D.reassemble(R), R) == Tri::True);
    for (const auto& f : D.factors) {
      CHECK(f.local == Tri::True);
      CHECK(is_indecomposable(f.rep) == Tri::True);
      for (std::size_t i = 0; i < f.multiplicity; ++i) {
        CHECK(is_morphism(f.rep, R, f.inclusions[i]));
        CHECK(is_morphism(R, f.rep, f.projections[i]));
        CHECK(hom_compose(F, f.projections[i], f.inclusions[i]) == hom_identity(f.rep));
      }
    }
  }
}

TEST_CASE("indecomposability") {
  auto F2 = Field::create(2);
  Shape A3 = shapes::linear(3);
  CHECK(is_indecomposable(thin(F2, A3, {1, 1, 0})) == Tri::True);
  LinRep I = thin(F2, A3, {1, 1, 1});
  CHECK(is_indecomposable(direct_sum(I, I)) == Tri::False);
  CHECK(is_indecomposable(zero_rep(F2, A3)) == Tri::False);

  // cyclic band with an irreducible companion block
  Shape C = shapes::atilde({true, true, true, true});
  LinRep B(F2, C, {2, 2, 2, 2});
  for (auto& M : B.mats) M = Matrix::identity(2);
  B.mats[0] = companion(F2, {1, 1, 1});
  CHECK(is_indecomposable(B) == Tri::True);
  LinRep B2 = B;
  B2.mats[0] = companion(F2, {1, 0, 1});  // (X+1)^2: a Jordan block, still indecomposable
  CHECK(is_indecomposable(B2) == Tri::True);
  B2.mats[0] = companion(F2, {0, 1, 1});  // X(X+1) splits
  CHECK(is_indecomposable(B2) == Tri::False);

  DecompOptions tight;
  tight.random_trials = 0;
  tight.exhaustive_limit = 1;
  CHECK(is_indecomposable(B, tight) == Tri::Inconclusive);
}

TEST_CASE("Dynkin shapes and roots") {
  CHECK(is_dynkin(shapes::linear(4)));
  CHECK(is_dynkin(shapes::star(3, true)));
  CHECK(is_dynkin(shapes::e6({true, false, true, false, true})));
  CHECK_FALSE(is_dynkin(shapes::star(4, true)));
  CHECK_FALSE(is_dynkin(shapes::loop()));
  CHECK_FALSE(is_dynkin(shapes::atilde({true, true, true})));
  CHECK_FALSE(is_dynkin(Shape({"a", "b"}, {{"x", "a", "b"}, {"y", "a", "b"}})));
  Shape e7({"1", "2", "3", "4", "5", "6", "7"},
           {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "4"}, {"d", "4", "5"}, {"e", "5", "6"}, {"f", "3", "7"}});
  CHECK(is_dynkin(e7));

  CHECK(positive_roots(shapes::linear(3)).size() == 6);
  CHECK(positive_roots(shapes::linear(5)).size() == 15);
  CHECK(positive_roots(shapes::star(3, false)).size() == 12);
  CHECK(positive_roots(shapes::e6({false, false, false, false, false})).size() == 36);
  CHECK(positive_roots(e7).size() == 63);
  CHECK(is_positive_root(shapes::star(3, true), {1, 1, 1, 2}));
  CHECK_FALSE(is_positive_root(shapes::star(3, true), {1, 1, 1, 3}));
}

TEST_CASE("root indecomposables") {
  auto F2 = Field::create(2);
  LinRep a2 = root_indecomposable(F2, shapes::linear(2), {1, 1});
  CHECK(is_isomorphic(a2, thin(F2, shapes::linear(2), {1, 1})) == Tri::True);
  LinRep d4 = root_indecomposable(F2, shapes::star(3, true), {1, 1, 1, 2});
  CHECK(is_isomorphic(d4, d4_rep(F2)) == Tri::True);
  CHECK_THROWS_AS(root_indecomposable(F2, shapes::star(3, true), {1, 1, 1, 3}), RepError);
  CHECK_THROWS_AS(root_indecomposable(F2, shapes::loop(), {1}), RepError);

  Shape E = shapes::e6({true, false, true, true, false});
  // objects a1, a2, c, b2, b1, s
  DimVector top{1, 2, 3, 2, 1, 2};
  CHECK(is_positive_root(E, top));
  LinRep R = root_indecomposable(F2, E, top);
  CHECK(R.dims == top);
  CHECK(end_algebra(R).dim() == 1);
  for (const auto& d : positive_roots(E)) CHECK(end_algebra(root_indecomposable(F2, E, d, 3)).dim() == 1);

  // mixed orientation of E7 over two fields; the seed only changes the basis
  Shape e7({"1", "2", "3", "4", "5", "6", "7"},
           {{"x1", "1", "2"}, {"x2", "3", "2"}, {"x3", "3", "4"}, {"x4", "5", "4"}, {"x5", "5", "6"}, {"x6", "4", "7"}});
  for (auto F : {F2, Field::create(3)})
    for (const auto& d : positive_roots(e7)) {
      LinRep M = root_indecomposable(F, e7, d);
      CHECK(M.dims == d);
      CHECK_FALSE(validate(M));
      CHECK(end_algebra(M).dim() == 1);
      if (d[3] == 4) CHECK(is_isomorphic(M, root_indecomposable(F, e7, d, 7)) == Tri::True);
    }
}

TEST_CASE("isomorphism through summands") {
  auto F2 = Field::create(2);
  // End has dimension 22, too large to search exhaustively
  LinRep R(F2, shapes::star(3, true), {3, 3, 3, 1});
  for (auto& M : R.mats) M = Matrix::from_rows({{1, 1, 1}});
  std::mt19937_64 rng(8);
  Hom B;
  for (auto d : R.dims) B.push_back(random_invertible(F2, d, rng));
  CHECK(isomorphic_by_summands(R, conjugate(R, B)) == Tri::True);
  LinRep S = R;
  S.mats[0] = Matrix::from_rows({{1, 1, 0}});
  CHECK(isomorphic_by_summands(R, S) == Tri::True);
  LinRep T = R;
  T.mats[0] = Matrix::from_rows({{0, 0, 0}});
  CHECK(isomorphic_by_summands(R, T) == Tri::False);
}
