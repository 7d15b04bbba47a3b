#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "setreal/realize.hpp"

using namespace sr;

namespace {

LinRep d4_rep(const Field& F) {
  LinRep R(F, shapes::star(3, true), {1, 1, 1, 2});
  R.mats[0] = Matrix(2, 1, {1, 0});
  R.mats[1] = Matrix(2, 1, {0, 1});
  R.mats[2] = Matrix(2, 1, {1, 1});
  return R;
}

LinRep star7_rep(const Field& F) {
  const std::vector<std::vector<std::vector<Elem>>> V = {
      {{1, 1, 0}, {0, 1, 1}}, {{1, 0, 0}, {0, 1, 0}}, {{1, 0, 0}, {0, 1, 1}}, {{1, 0, 1}, {0, 1, 0}},
      {{0, 1, 0}, {0, 0, 1}}, {{1, 0, 0}, {0, 0, 1}}, {{1, 1, 0}, {0, 0, 1}}};
  LinRep R(F, shapes::star(7, false), {2, 2, 2, 2, 2, 2, 2, 3});
  for (std::size_t i = 0; i < 7; ++i) R.mats[i] = Matrix::from_rows(V[i]);
  return R;
}

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// closed-form sizes of the split system
std::pair<std::uint64_t, std::uint64_t> formula(const LinRep& R, Variant v) {
  const std::uint64_t q = R.field.q();
  auto D = [&](std::size_t d) { return v == Variant::Plain ? ipow(q, d) - 1 : (ipow(q, d) - 1) / (q - 1); };
  std::uint64_t unk = 0, eq = 0;
  for (auto d : R.dims) {
    unk += d * D(d);
    eq += d * d;
  }
  for (std::size_t a = 0; a < R.shape.num_arrows(); ++a) eq += R.dims[R.shape.src(a)] * D(R.dims[R.shape.dst(a)]);
  return {unk, eq};
}

}  // namespace

TEST_CASE("counit package examples") {
  auto F2 = Field::create(2);
  auto pkg = counit_package(d4_rep(F2), Variant::Plain);
  CHECK(pkg.big.dims == DimVector{1, 1, 1, 3});
  CHECK(pkg.big.mats[0] == Matrix(3, 1, {1, 0, 0}));
  CHECK(pkg.big.mats[1] == Matrix(3, 1, {0, 1, 0}));
  CHECK(pkg.big.mats[2] == Matrix(3, 1, {0, 0, 1}));
  for (unsigned p : {2u, 3u, 5u}) {
    auto F = Field::create(p);
    CHECK(counit_package(d4_rep(F), Variant::GSet).big.dims[3] == p + 1);
  }
  CHECK(counit_package(d4_rep(Field::create(2, 2)), Variant::GSet).big.dims[3] == 5);

  LinRep id(F2, shapes::linear(2), {1, 1});
  id.mats[0] = Matrix::identity(1);
  auto p2 = counit_package(id, Variant::Plain);
  CHECK(p2.big == id);
  CHECK(p2.counit[0] == Matrix::identity(1));
  CHECK(p2.counit[1] == Matrix::identity(1));
}

TEST_CASE("system sizes") {
  auto F2 = Field::create(2);
  LinRep id(F2, shapes::linear(2), {1, 1});
  id.mats[0] = Matrix::identity(1);
  auto s = build_split_system(counit_package(id, Variant::Plain), id);
  CHECK(s.unknowns() == 2);
  CHECK(s.equations() == 3);
  auto s4 = build_split_system(counit_package(d4_rep(F2), Variant::Plain), d4_rep(F2));
  CHECK(s4.unknowns() == 9);
  CHECK(s4.equations() == 16);
  auto F3 = Field::create(3);
  LinRep one(F3, Shape({"v"}, {}), {2});
  CHECK(build_split_system(counit_package(one, Variant::GSet), one).unknowns() == 8);

  std::mt19937_64 rng(1);
  for (int it = 0; it < 20; ++it) {
    auto F = Field::create(it % 2 ? 3 : 2);
    Shape Q = it % 3 ? shapes::star(3, it % 2) : shapes::loop();
    DimVector d(Q.num_objects());
    for (auto& x : d) x = rng() % 3;
    LinRep R = random_rep(F, Q, d, rng);
    for (auto v : {Variant::Plain, Variant::GSet}) {
      auto sys = build_split_system(counit_package(R, v), R);
      auto [u, e] = formula(R, v);
      CHECK(sys.unknowns() == u);
      CHECK(sys.equations() == e);
    }
  }
}

TEST_CASE("verdicts") {
  for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}}) {
    auto F = Field::create(p, k);
    CHECK_FALSE(is_add_set_realizable(d4_rep(F)).realizable);
    CHECK_FALSE(is_add_set_realizable(d4_rep(F), Variant::Plain).realizable);
  }
  CHECK_FALSE(is_add_set_realizable(star7_rep(Field::create(2))).realizable);
  auto r3 = is_add_set_realizable(star7_rep(Field::create(3)));
  CHECK(r3.realizable);
  REQUIRE(r3.witness);
  auto F3 = Field::create(3);
  CHECK(check_witness(star7_rep(F3), counit_package(star7_rep(F3)), *r3.witness));

  auto F2 = Field::create(2);
  Shape A3 = shapes::linear(3);
  LinRep ind(F2, A3, {1, 1, 0});
  ind.mats[0] = Matrix::identity(1);
  CHECK(is_add_set_realizable(ind).realizable);

  LinRep zero(F2, A3, {0, 0, 0});
  auto z = is_add_set_realizable(zero);
  CHECK(z.realizable);
  CHECK(z.witness->size() == 3);
}

TEST_CASE("check_witness") {
  auto F2 = Field::create(2);
  LinRep id(F2, shapes::linear(2), {1, 1});
  id.mats[0] = Matrix::identity(1);
  auto pkg = counit_package(id, Variant::Plain);
  CHECK(check_witness(id, pkg, {Matrix::identity(1), Matrix::identity(1)}));
  CHECK_FALSE(check_witness(id, pkg, {Matrix(1, 1), Matrix(1, 1)}));
  CHECK_THROWS_AS(check_witness(id, pkg, {Matrix(2, 1), Matrix(1, 1)}), DimensionError);
}

TEST_CASE("cap") {
  auto F2 = Field::create(2);
  LinRep big(F2, Shape({"v"}, {}), {21});
  CHECK_THROWS_AS(counit_package(big, Variant::Plain), CapExceeded);
  CHECK_THROWS_AS(counit_package(d4_rep(F2), Variant::Plain, 2), CapExceeded);
}

TEST_CASE("properties on random inputs") {
  std::mt19937_64 rng(2024);
  for (int it = 0; it < 60; ++it) {
    auto F = Field::create(it % 3 == 0 ? 3 : 2);
    Shape Q = it % 2 ? shapes::star(3, (it / 2) % 2) : shapes::linear({true, false});
    DimVector d(Q.num_objects());
    for (auto& x : d) x = rng() % 3;
    LinRep R = random_rep(F, Q, d, rng);
    auto pp = counit_package(R, Variant::Plain), pg = counit_package(R, Variant::GSet);
    CHECK(counit_is_natural(R, pp));
    CHECK(counit_is_natural(R, pg));
    bool vp = decide(pp, R).realizable, vg = decide(pg, R).realizable;
    CHECK(vp == vg);
    Hom P;
    for (auto x : d) P.push_back(random_invertible(F, x, rng));
    CHECK(is_add_set_realizable(conjugate(R, P)).realizable == vg);
    if (F.q() == 2) CHECK(is_add_set_realizable(tensor_extend(R, Field::create(2, 2))).realizable == vg);
  }
}

TEST_CASE("linearized set representations carry the unit witness") {
  std::mt19937_64 rng(77);
  auto F3 = Field::create(3);
  Shape Q = shapes::star(3, false);
  for (int it = 0; it < 30; ++it) {
    std::vector<std::size_t> n(4);
    for (auto& x : n) x = rng() % 3;
    std::vector<std::vector<std::uint32_t>> maps;
    for (std::size_t a = 0; a < 3; ++a) {
      std::vector<std::uint32_t> m(n[Q.src(a)]);
      for (auto& x : m) x = static_cast<std::uint32_t>(rng() % (n[Q.dst(a)] + 1));
      maps.push_back(m);
    }
    LinRep R = linearize(SetRep(Q, n, maps), F3);
    auto pkg = counit_package(R, Variant::Plain);
    Hom G;
    for (std::size_t v = 0; v < 4; ++v) {
      Matrix g(pkg.big_dim(v), R.dims[v]);
      for (std::size_t j = 0; j < R.dims[v]; ++j) {
        std::vector<Elem> e(R.dims[v], 0);
        e[j] = 1;
        auto code = vector_code(F3, e.data(), e.size());
        auto pos = std::find(pkg.basis[v].begin(), pkg.basis[v].end(), code) - pkg.basis[v].begin();
        g(pos, j) = 1;
      }
      G.push_back(g);
    }
    CHECK(check_witness(R, pkg, G));
    CHECK(is_add_set_realizable(R).realizable);
  }
}
