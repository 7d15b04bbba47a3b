#include "setreal/realize.hpp"

#include <unordered_map>

namespace sr {

const char* variant_name(Variant v) { return v == Variant::Plain ? "plain" : "gset"; }

std::uint64_t vector_code(const Field& F, const Elem* x, std::size_t d) {
  std::uint64_t c = 0;
  for (std::size_t i = d; i-- > 0;) c = c * F.q() + x[i];
  return c;
}

std::vector<Elem> vector_decode(const Field& F, std::uint64_t code, std::size_t d) {
  std::vector<Elem> x(d);
  for (std::size_t i = 0; i < d; ++i) {
    x[i] = static_cast<Elem>(code % F.q());
    code /= F.q();
  }
  return x;
}

namespace {

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

// index of a code among the basis vectors of one object
struct CodeIndex {
  std::vector<std::int32_t> dense;
  std::unordered_map<std::uint64_t, std::uint32_t> sparse;
  bool use_dense = true;

  void build(const std::vector<std::uint64_t>& codes, std::uint64_t universe) {
    use_dense = universe <= (std::uint64_t(1) << 24);
    if (use_dense) {
      dense.assign(universe, -1);
      for (std::size_t i = 0; i < codes.size(); ++i) dense[codes[i]] = static_cast<std::int32_t>(i);
    } else {
      for (std::size_t i = 0; i < codes.size(); ++i) sparse.emplace(codes[i], static_cast<std::uint32_t>(i));
    }
  }
  std::uint32_t at(std::uint64_t code) const {
    if (use_dense) return static_cast<std::uint32_t>(dense[code]);
    return sparse.at(code);
  }
};

}  // namespace

CounitPackage counit_package(const LinRep& R, Variant variant, std::size_t cap) {
  if (auto err = validate(R)) throw RepError("invalid representation: " + *err);
  const Field& F = R.field;
  const Shape& Q = R.shape;
  const std::size_t n = Q.num_objects();
  const std::uint64_t q = F.q();

  CounitPackage pkg;
  pkg.variant = variant;
  pkg.basis.resize(n);
  std::vector<CodeIndex> index(n);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t d = R.dims[v];
    if (d > 64) throw CapExceeded("dimension too large at object '" + Q.objects()[v] + "'");
    long double total = 1;
    for (std::size_t i = 0; i < d; ++i) total *= q;
    long double D = variant == Variant::Plain ? total - 1 : (total - 1) / (q - 1);
    if (D > static_cast<long double>(cap))
      throw CapExceeded("object '" + Q.objects()[v] + "' would need " + std::to_string(static_cast<unsigned long long>(D)) +
                        " basis elements (cap " + std::to_string(cap) + ")");
    const std::uint64_t universe = ipow(q, d);
    auto& B = pkg.basis[v];
    B.reserve(static_cast<std::size_t>(D));
    for (std::uint64_t code = 1; code < universe; ++code) {
      if (variant == Variant::GSet) {
        // normalized: lowest-index nonzero coordinate equals 1
        std::uint64_t c = code;
        while (c % q == 0) c /= q;
        if (c % q != 1) continue;
      }
      B.push_back(code);
    }
    index[v].build(B, universe);
  }

  DimVector bigdims(n);
  for (std::size_t v = 0; v < n; ++v) bigdims[v] = pkg.basis[v].size();
  pkg.big = LinRep(F, Q, bigdims);
  pkg.counit.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    Matrix E(R.dims[v], bigdims[v]);
    for (std::size_t b = 0; b < bigdims[v]; ++b) {
      auto x = vector_decode(F, pkg.basis[v][b], R.dims[v]);
      for (std::size_t i = 0; i < x.size(); ++i) E(i, b) = x[i];
    }
    pkg.counit[v] = std::move(E);
  }

  pkg.columns.resize(Q.num_arrows());
  for (std::size_t a = 0; a < Q.num_arrows(); ++a) {
    const std::size_t v = Q.src(a), w = Q.dst(a);
    const Matrix& L = R.mats[a];
    const std::size_t dv = R.dims[v], dw = R.dims[w];
    auto& cols = pkg.columns[a];
    cols.resize(bigdims[v]);
    Matrix& U = pkg.big.mats[a];
    std::vector<Elem> y(dw);
    for (std::size_t b = 0; b < bigdims[v]; ++b) {
      const Matrix& E = pkg.counit[v];
      std::fill(y.begin(), y.end(), 0);
      for (std::size_t j = 0; j < dv; ++j) {
        Elem xj = E(j, b);
        if (!xj) continue;
        for (std::size_t i = 0; i < dw; ++i) y[i] = F.add(y[i], F.mul(L(i, j), xj));
      }
      std::size_t lead = 0;
      while (lead < dw && y[lead] == 0) ++lead;
      if (lead == dw) {
        cols[b] = {0, 0};
        continue;
      }
      Elem mu = 1;
      if (variant == Variant::GSet) {
        mu = y[lead];
        Elem inv = F.inv(mu);
        for (auto& e : y) e = F.mul(e, inv);
      }
      std::uint32_t row = index[w].at(vector_code(F, y.data(), dw));
      cols[b] = {row, mu};
      U(row, b) = mu;
    }
  }
  return pkg;
}

LinearSystem build_split_system(const CounitPackage& pkg, const LinRep& R) {
  const Field& F = R.field;
  const Shape& Q = R.shape;
  const std::size_t n = Q.num_objects();
  std::vector<std::size_t> off(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) off[v + 1] = off[v] + pkg.big_dim(v) * R.dims[v];
  std::size_t eqs = 0;
  for (std::size_t v = 0; v < n; ++v) eqs += R.dims[v] * R.dims[v];
  for (std::size_t a = 0; a < Q.num_arrows(); ++a) eqs += pkg.big_dim(Q.dst(a)) * R.dims[Q.src(a)];
  if (off[n] && eqs > kMaxSystemEntries / off[n])
    throw CapExceeded("split system of " + std::to_string(eqs) + " x " + std::to_string(off[n]) +
                      " exceeds the dense size limit");

  LinearSystem sys;
  sys.A = Matrix(eqs, off[n]);
  sys.b = Matrix(eqs, 1);
  sys.vars.reserve(off[n]);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t r = 0; r < pkg.big_dim(v); ++r)
      for (std::size_t c = 0; c < R.dims[v]; ++c) sys.vars.push_back({Q.objects()[v], r, c});

  auto var = [&](std::size_t v, std::size_t r, std::size_t c) { return off[v] + r * R.dims[v] + c; };
  std::size_t row0 = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t d = R.dims[v];
    const Matrix& E = pkg.counit[v];
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const std::size_t row = row0 + i * d + j;
        for (std::size_t b = 0; b < pkg.big_dim(v); ++b)
          if (E(i, b)) sys.A(row, var(v, b, j)) = F.add(sys.A(row, var(v, b, j)), E(i, b));
        if (i == j) sys.b(row, 0) = 1;
      }
    row0 += d * d;
  }
  for (std::size_t a = 0; a < Q.num_arrows(); ++a) {
    const std::size_t v = Q.src(a), w = Q.dst(a);
    const std::size_t dv = R.dims[v], dw = R.dims[w], Dw = pkg.big_dim(w);
    const Matrix& L = R.mats[a];
    // G_w L
    for (std::size_t r = 0; r < Dw; ++r)
      for (std::size_t j = 0; j < dv; ++j) {
        const std::size_t row = row0 + r * dv + j;
        for (std::size_t i = 0; i < dw; ++i)
          if (L(i, j)) sys.A(row, var(w, r, i)) = F.add(sys.A(row, var(w, r, i)), L(i, j));
      }
    // - U G_v
    const auto& cols = pkg.columns[a];
    for (std::size_t b = 0; b < cols.size(); ++b) {
      auto [r, mu] = cols[b];
      if (!mu) continue;
      for (std::size_t j = 0; j < dv; ++j) {
        const std::size_t row = row0 + r * dv + j;
        sys.A(row, var(v, b, j)) = F.sub(sys.A(row, var(v, b, j)), mu);
      }
    }
    row0 += Dw * dv;
  }
  return sys;
}

Realizability decide(const CounitPackage& pkg, const LinRep& R) {
  Realizability out;
  LinearSystem sys = build_split_system(pkg, R);
  out.unknowns = sys.unknowns();
  out.equations = sys.equations();
  auto x = solve(R.field, sys);
  if (!x) return out;
  const std::size_t n = R.shape.num_objects();
  Hom G(n);
  std::size_t k = 0;
  for (std::size_t v = 0; v < n; ++v) {
    G[v] = Matrix(pkg.big_dim(v), R.dims[v]);
    for (auto& e : G[v].a) e = (*x)(k++, 0);
  }
  if (!check_witness(R, pkg, G)) throw std::logic_error("solver produced a witness that does not verify");
  out.realizable = true;
  out.witness = std::move(G);
  return out;
}

Realizability is_add_set_realizable(const LinRep& R, Variant variant, std::size_t cap) {
  return decide(counit_package(R, variant, cap), R);
}

bool check_witness(const LinRep& R, const CounitPackage& pkg, const Hom& G) {
  const Field& F = R.field;
  const Shape& Q = R.shape;
  if (G.size() != Q.num_objects()) throw DimensionError("witness has wrong number of blocks");
  for (std::size_t v = 0; v < G.size(); ++v) {
    if (G[v].rows != pkg.big_dim(v) || G[v].cols != R.dims[v]) throw DimensionError("witness block has wrong shape");
    if (mul(F, pkg.counit[v], G[v]) != Matrix::identity(R.dims[v])) return false;
  }
  for (std::size_t a = 0; a < Q.num_arrows(); ++a) {
    const std::size_t v = Q.src(a), w = Q.dst(a);
    if (mul(F, G[w], R.mats[a]) != mul(F, pkg.big.mats[a], G[v])) return false;
  }
  return true;
}

bool counit_is_natural(const LinRep& R, const CounitPackage& pkg) {
  const Field& F = R.field;
  const Shape& Q = R.shape;
  for (std::size_t a = 0; a < Q.num_arrows(); ++a) {
    const std::size_t v = Q.src(a), w = Q.dst(a);
    if (mul(F, pkg.counit[w], pkg.big.mats[a]) != mul(F, R.mats[a], pkg.counit[v])) return false;
  }
  return true;
}

}  // namespace sr
