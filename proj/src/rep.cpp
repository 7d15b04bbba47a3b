#include "setreal/rep.hpp"

#include <algorithm>

namespace sr {

const char* tri_name(Tri t) {
  switch (t) {
    case Tri::True: return "true";
    case Tri::False: return "false";
    default: return "inconclusive";
  }
}

LinRep::LinRep(Field F, Shape S, DimVector d) : field(std::move(F)), shape(std::move(S)), dims(std::move(d)) {
  if (dims.size() != shape.num_objects()) throw RepError("dimension vector length does not match objects");
  for (std::size_t a = 0; a < shape.num_arrows(); ++a) mats.emplace_back(dims[shape.dst(a)], dims[shape.src(a)]);
}

LinRep::LinRep(Field F, Shape S, DimVector d, std::vector<Matrix> m)
    : field(std::move(F)), shape(std::move(S)), dims(std::move(d)), mats(std::move(m)) {
  if (dims.size() != shape.num_objects()) throw RepError("dimension vector length does not match objects");
  if (mats.size() != shape.num_arrows()) throw RepError("matrix count does not match arrows");
}

std::size_t LinRep::total_dim() const {
  std::size_t t = 0;
  for (auto d : dims) t += d;
  return t;
}

Matrix LinRep::path_matrix(const std::vector<std::size_t>& path, std::size_t from) const {
  Matrix M = Matrix::identity(dims[path.empty() ? from : shape.src(path.front())]);
  for (auto a : path) M = mul(field, mats[a], M);
  return M;
}

SetRep::SetRep(Shape S, std::vector<std::size_t> n, std::vector<std::vector<std::uint32_t>> m)
    : shape(std::move(S)), sizes(std::move(n)), maps(std::move(m)) {
  if (sizes.size() != shape.num_objects()) throw RepError("size vector length does not match objects");
  if (maps.size() != shape.num_arrows()) throw RepError("map count does not match arrows");
}

std::uint32_t SetRep::apply_path(const std::vector<std::size_t>& path, std::uint32_t x) const {
  for (auto a : path) x = apply(a, x);
  return x;
}

bool SetRep::basepoint_free() const {
  for (const auto& m : maps)
    for (auto v : m)
      if (v == 0) return false;
  return true;
}

std::optional<std::string> validate(const LinRep& R) {
  const auto& S = R.shape;
  if (R.dims.size() != S.num_objects()) return "dimension vector has wrong length";
  if (R.mats.size() != S.num_arrows()) return "wrong number of matrices";
  for (std::size_t a = 0; a < S.num_arrows(); ++a) {
    const auto& M = R.mats[a];
    if (M.rows != R.dims[S.dst(a)] || M.cols != R.dims[S.src(a)])
      return "arrow '" + S.arrows()[a].name + "': matrix is " + std::to_string(M.rows) + "x" +
             std::to_string(M.cols) + ", expected " + std::to_string(R.dims[S.dst(a)]) + "x" +
             std::to_string(R.dims[S.src(a)]);
    for (auto x : M.a)
      if (x >= R.field.q()) return "arrow '" + S.arrows()[a].name + "': entry out of field range";
  }
  for (std::size_t i = 0; i < S.relations().size(); ++i) {
    const auto& rel = S.relations()[i];
    auto l = S.path_indices(rel.lhs), r = S.path_indices(rel.rhs);
    if (l.empty() && r.empty()) continue;
    std::size_t from = S.src(l.empty() ? r.front() : l.front());
    if (R.path_matrix(l, from) != R.path_matrix(r, from)) return "relation " + std::to_string(i) + " violated";
  }
  return std::nullopt;
}

std::optional<std::string> validate(const SetRep& T) {
  const auto& S = T.shape;
  if (T.sizes.size() != S.num_objects()) return "size vector has wrong length";
  if (T.maps.size() != S.num_arrows()) return "wrong number of maps";
  for (std::size_t a = 0; a < S.num_arrows(); ++a) {
    const auto& m = T.maps[a];
    if (m.size() != T.sizes[S.src(a)])
      return "arrow '" + S.arrows()[a].name + "': table length " + std::to_string(m.size()) + ", expected " +
             std::to_string(T.sizes[S.src(a)]);
    for (auto v : m)
      if (v > T.sizes[S.dst(a)]) return "arrow '" + S.arrows()[a].name + "': value out of range";
  }
  for (std::size_t i = 0; i < S.relations().size(); ++i) {
    const auto& rel = S.relations()[i];
    auto l = S.path_indices(rel.lhs), r = S.path_indices(rel.rhs);
    if (l.empty() && r.empty()) continue;
    std::size_t from = S.src(l.empty() ? r.front() : l.front());
    for (std::uint32_t x = 1; x <= T.sizes[from]; ++x)
      if (T.apply_path(l, x) != T.apply_path(r, x)) return "relation " + std::to_string(i) + " violated";
  }
  return std::nullopt;
}

LinRep linearize(const SetRep& T, const Field& F, Linearization variant) {
  const auto& S = T.shape;
  const bool keep_base = variant == Linearization::Free;
  DimVector dims(S.num_objects());
  for (std::size_t v = 0; v < dims.size(); ++v) dims[v] = T.sizes[v] + (keep_base ? 1 : 0);
  LinRep R(F, S, dims);
  for (std::size_t a = 0; a < S.num_arrows(); ++a) {
    auto& M = R.mats[a];
    if (keep_base) {
      M(0, 0) = 1;
      for (std::size_t j = 0; j < T.maps[a].size(); ++j) M(T.maps[a][j], j + 1) = 1;
    } else {
      for (std::size_t j = 0; j < T.maps[a].size(); ++j)
        if (T.maps[a][j]) M(T.maps[a][j] - 1, j) = 1;
    }
  }
  return R;
}

namespace {

void require_compatible(const LinRep& R, const LinRep& S) {
  if (R.field != S.field) throw RepError("representations live over different fields");
  if (R.shape != S.shape) throw RepError("representations live on different shapes");
}

}  // namespace

std::vector<Hom> hom_space(const LinRep& R, const LinRep& S) {
  require_compatible(R, S);
  const auto& F = R.field;
  const auto& Q = R.shape;
  const std::size_t n = Q.num_objects();
  std::vector<std::size_t> off(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) off[v + 1] = off[v] + S.dims[v] * R.dims[v];
  std::size_t eqs = 0;
  for (std::size_t a = 0; a < Q.num_arrows(); ++a) eqs += S.dims[Q.dst(a)] * R.dims[Q.src(a)];
  Matrix A(eqs, off[n]);
  std::size_t row = 0;
  for (std::size_t a = 0; a < Q.num_arrows(); ++a) {
    const std::size_t v = Q.src(a), w = Q.dst(a);
    const Matrix& Ra = R.mats[a];
    const Matrix& Sa = S.mats[a];
    const std::size_t dRv = R.dims[v], dSv = S.dims[v], dRw = R.dims[w], dSw = S.dims[w];
    for (std::size_t i = 0; i < dSw; ++i)
      for (std::size_t j = 0; j < dRv; ++j, ++row) {
        Elem* r = A.row(row);
        for (std::size_t k = 0; k < dSv; ++k)  // S(a)[i,k] * phi_v[k,j]
          r[off[v] + k * dRv + j] = F.add(r[off[v] + k * dRv + j], Sa(i, k));
        for (std::size_t l = 0; l < dRw; ++l)  // - phi_w[i,l] * R(a)[l,j]
          r[off[w] + i * dRw + l] = F.sub(r[off[w] + i * dRw + l], Ra(l, j));
      }
  }
  Matrix N = nullspace(F, A);
  std::vector<Hom> basis;
  for (std::size_t c = 0; c < N.cols; ++c) {
    Hom h(n);
    for (std::size_t v = 0; v < n; ++v) {
      h[v] = Matrix(S.dims[v], R.dims[v]);
      for (std::size_t e = 0; e < h[v].a.size(); ++e) h[v].a[e] = N(off[v] + e, c);
    }
    basis.push_back(std::move(h));
  }
  return basis;
}

std::size_t hom_dim(const LinRep& R, const LinRep& S) { return hom_space(R, S).size(); }

Hom hom_combination(const Field& F, const std::vector<Hom>& basis, const std::vector<Elem>& coeffs) {
  if (basis.empty()) return {};
  Hom h = basis[0];
  for (auto& M : h) std::fill(M.a.begin(), M.a.end(), 0);
  for (std::size_t b = 0; b < basis.size(); ++b) {
    if (!coeffs[b]) continue;
    for (std::size_t v = 0; v < h.size(); ++v) axpy(F, h[v].a.data(), basis[b][v].a.data(), coeffs[b], h[v].a.size());
  }
  return h;
}

Hom hom_compose(const Field& F, const Hom& g, const Hom& f) {
  Hom h(f.size());
  for (std::size_t v = 0; v < f.size(); ++v) h[v] = mul(F, g[v], f[v]);
  return h;
}

bool is_morphism(const LinRep& R, const LinRep& S, const Hom& h) {
  const auto& Q = R.shape;
  if (h.size() != Q.num_objects()) return false;
  for (std::size_t v = 0; v < h.size(); ++v)
    if (h[v].rows != S.dims[v] || h[v].cols != R.dims[v]) return false;
  for (std::size_t a = 0; a < Q.num_arrows(); ++a)
    if (mul(R.field, S.mats[a], h[Q.src(a)]) != mul(R.field, h[Q.dst(a)], R.mats[a])) return false;
  return true;
}

Hom hom_identity(const LinRep& R) {
  Hom h;
  for (auto d : R.dims) h.push_back(Matrix::identity(d));
  return h;
}

namespace {

bool all_invertible(const Field& F, const Hom& h) {
  for (const auto& M : h)
    if (!is_invertible(F, M)) return false;
  return true;
}

}  // namespace

std::optional<Hom> find_isomorphism(const LinRep& R, const LinRep& S, const IsoOptions& opt, Tri* verdict) {
  require_compatible(R, S);
  auto set = [&](Tri t) {
    if (verdict) *verdict = t;
  };
  if (R.dims != S.dims) {
    set(Tri::False);
    return std::nullopt;
  }
  const auto& F = R.field;
  auto H = hom_space(R, S);
  if (H.empty()) {
    if (R.total_dim() == 0) {
      set(Tri::True);
      return hom_identity(R);
    }
    set(Tri::False);
    return std::nullopt;
  }
  std::mt19937_64 rng(opt.seed);
  std::vector<Elem> c(H.size());
  for (std::size_t t = 0; t < opt.random_trials; ++t) {
    for (auto& x : c) x = static_cast<Elem>(rng() % F.q());
    Hom h = hom_combination(F, H, c);
    if (all_invertible(F, h)) {
      set(Tri::True);
      return h;
    }
  }
  // hom dimensions against R and S are isomorphism invariants
  std::size_t hRR = hom_dim(R, R), hSS = hom_dim(S, S);
  if (hRR != hSS || hom_dim(S, R) != H.size() || hRR != H.size()) {
    set(Tri::False);
    return std::nullopt;
  }
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < H.size() && total <= opt.exhaustive_limit; ++i) total *= F.q();
  if (total > opt.exhaustive_limit) {
    set(Tri::Inconclusive);
    return std::nullopt;
  }
  std::fill(c.begin(), c.end(), 0);
  for (std::uint64_t code = 1; code < total; ++code) {
    std::uint64_t x = code;
    for (auto& e : c) {
      e = static_cast<Elem>(x % F.q());
      x /= F.q();
    }
    Hom h = hom_combination(F, H, c);
    if (all_invertible(F, h)) {
      set(Tri::True);
      return h;
    }
  }
  set(Tri::False);
  return std::nullopt;
}

Tri is_isomorphic(const LinRep& R, const LinRep& S, const IsoOptions& opt) {
  Tri t = Tri::Inconclusive;
  find_isomorphism(R, S, opt, &t);
  return t;
}

LinRep zero_rep(const Field& F, const Shape& shape) { return LinRep(F, shape, DimVector(shape.num_objects(), 0)); }

LinRep direct_sum(const LinRep& R, const LinRep& S) {
  require_compatible(R, S);
  DimVector d(R.dims.size());
  for (std::size_t v = 0; v < d.size(); ++v) d[v] = R.dims[v] + S.dims[v];
  std::vector<Matrix> m;
  for (std::size_t a = 0; a < R.mats.size(); ++a) m.push_back(block_diag(R.mats[a], S.mats[a]));
  return LinRep(R.field, R.shape, d, m);
}

LinRep direct_sum(const std::vector<LinRep>& parts, const LinRep& zero_template) {
  LinRep acc = zero_rep(zero_template.field, zero_template.shape);
  for (const auto& p : parts) acc = direct_sum(acc, p);
  return acc;
}

LinRep tensor_extend(const LinRep& R, const Field& big) {
  auto emb = subfield_embedding(R.field, big);
  LinRep out(big, R.shape, R.dims, R.mats);
  for (auto& M : out.mats)
    for (auto& x : M.a) x = emb[x];
  return out;
}

LinRep conjugate(const LinRep& R, const Hom& B) {
  LinRep out = R;
  for (std::size_t a = 0; a < R.mats.size(); ++a) {
    auto inv = inverse(R.field, B[R.shape.src(a)]);
    if (!inv) throw RepError("base change is not invertible");
    out.mats[a] = mul(R.field, mul(R.field, B[R.shape.dst(a)], R.mats[a]), *inv);
  }
  return out;
}

LinRep restrict_rep(const LinRep& R, const Hom& basis, const Hom& proj) {
  DimVector d;
  for (const auto& B : basis) d.push_back(B.cols);
  LinRep out(R.field, R.shape, d);
  for (std::size_t a = 0; a < R.mats.size(); ++a)
    out.mats[a] = mul(R.field, proj[R.shape.dst(a)], mul(R.field, R.mats[a], basis[R.shape.src(a)]));
  return out;
}

Matrix random_matrix(const Field& F, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Matrix M(r, c);
  for (auto& x : M.a) x = static_cast<Elem>(rng() % F.q());
  return M;
}

Matrix random_invertible(const Field& F, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Matrix M = random_matrix(F, n, n, rng);
    if (is_invertible(F, M)) return M;
  }
}

LinRep random_rep(const Field& F, const Shape& shape, const DimVector& dims, std::mt19937_64& rng) {
  LinRep R(F, shape, dims);
  for (auto& M : R.mats)
    for (auto& x : M.a) x = static_cast<Elem>(rng() % F.q());
  return R;
}

}  // namespace sr
