#include "setreal/decomp.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "setreal/constructions.hpp"

namespace sr {

EndAlgebra end_algebra(const LinRep& R) { return EndAlgebra{hom_space(R, R)}; }

Poly minimal_polynomial(const Field& F, const Hom& theta) {
  std::size_t len = 0;
  for (const auto& M : theta) {
    if (M.rows != M.cols) throw DimensionError("minimal polynomial of a non-square block");
    len += M.rows * M.cols;
  }
  if (len == 0) return Poly{1};
  Hom cur;
  for (const auto& M : theta) cur.push_back(Matrix::identity(M.rows));
  Matrix K(len, 0);
  for (std::size_t i = 0;; ++i) {
    Matrix col(len, 1);
    std::size_t k = 0;
    for (const auto& M : cur)
      for (auto x : M.a) col.a[k++] = x;
    K = hstack(K, col);
    Matrix N = nullspace(F, K);
    if (N.cols > 0) {
      Poly mu(i + 1);
      for (std::size_t j = 0; j <= i; ++j) mu[j] = N(j, 0);
      poly_trim(mu);
      return poly_monic(F, mu);
    }
    for (std::size_t v = 0; v < cur.size(); ++v) cur[v] = mul(F, theta[v], cur[v]);
  }
}

std::size_t Decomposition::count() const {
  std::size_t n = 0;
  for (const auto& f : factors) n += f.multiplicity;
  return n;
}

LinRep Decomposition::reassemble(const LinRep& zero_template) const {
  std::vector<LinRep> parts;
  for (const auto& f : factors)
    for (std::size_t i = 0; i < f.multiplicity; ++i) parts.push_back(f.rep);
  return direct_sum(parts, zero_template);
}

namespace {

struct Split {
  Hom k1, k2;  // column bases of two complementary subrepresentations
};

Hom identity_minus(const Field& F, const Hom& h) {
  Hom out;
  for (const auto& M : h) out.push_back(sub(F, Matrix::identity(M.rows), M));
  return out;
}

std::optional<Split> split_by_minpoly(const Field& F, const Hom& theta, std::mt19937_64& rng) {
  Poly mu = minimal_polynomial(F, theta);
  auto fac = poly_factor(F, mu, rng);
  if (fac.size() < 2) return std::nullopt;
  Poly g = poly_pow(F, fac[0].first, fac[0].second), h, r;
  poly_divmod(F, mu, g, h, r);
  Split s;
  for (const auto& M : theta) {
    s.k1.push_back(nullspace(F, poly_eval(F, g, M)));
    s.k2.push_back(nullspace(F, poly_eval(F, h, M)));
  }
  return s;
}

bool is_nontrivial_idempotent(const Field& F, const Hom& e) {
  bool zero = true, one = true;
  for (const auto& M : e) {
    if (mul(F, M, M) != M) return false;
    zero = zero && M.is_zero();
    one = one && M == Matrix::identity(M.rows);
  }
  return !zero && !one;
}

Tri local_test(const LinRep& R, const std::vector<Hom>& E, std::mt19937_64& rng, const DecompOptions& opt,
               std::optional<Split>& split) {
  const Field& F = R.field;
  if (E.empty()) return Tri::False;
  if (E.size() == 1) return Tri::True;
  std::vector<Elem> c(E.size());
  for (std::size_t t = 0; t < opt.random_trials; ++t) {
    for (auto& x : c) x = static_cast<Elem>(rng() % F.q());
    if ((split = split_by_minpoly(F, hom_combination(F, E, c), rng))) return Tri::False;
  }
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < E.size() && total <= opt.exhaustive_limit; ++i) total *= F.q();
  if (total > opt.exhaustive_limit) return Tri::Inconclusive;
  for (std::uint64_t code = 1; code < total; ++code) {
    std::uint64_t x = code;
    for (auto& e : c) {
      e = static_cast<Elem>(x % F.q());
      x /= F.q();
    }
    Hom th = hom_combination(F, E, c);
    if (is_nontrivial_idempotent(F, th)) {
      Split s;
      Hom rest = identity_minus(F, th);
      for (std::size_t v = 0; v < th.size(); ++v) {
        s.k1.push_back(nullspace(F, th[v]));
        s.k2.push_back(nullspace(F, rest[v]));
      }
      split = std::move(s);
      return Tri::False;
    }
  }
  return Tri::True;
}

struct Summand {
  LinRep rep;
  Hom inc, proj;
  Tri local;
};

void split_recursive(const LinRep& R, const Hom& inc, const Hom& proj, std::mt19937_64& rng,
                     const DecompOptions& opt, std::vector<Summand>& out) {
  if (R.total_dim() == 0) return;
  const Field& F = R.field;
  std::optional<Split> s;
  Tri t = local_test(R, hom_space(R, R), rng, opt, s);
  if (!s) {
    out.push_back({R, inc, proj, t});
    return;
  }
  Hom inc1, inc2, proj1, proj2, b1, b2, p1, p2;
  for (std::size_t v = 0; v < R.dims.size(); ++v) {
    const std::size_t a = s->k1[v].cols, b = s->k2[v].cols;
    auto Pinv = inverse(F, hstack(s->k1[v], s->k2[v]));
    if (!Pinv) throw std::logic_error("summands are not complementary");
    b1.push_back(s->k1[v]);
    b2.push_back(s->k2[v]);
    p1.push_back(rows_of(*Pinv, 0, a));
    p2.push_back(rows_of(*Pinv, a, b));
    inc1.push_back(mul(F, inc[v], b1[v]));
    inc2.push_back(mul(F, inc[v], b2[v]));
    proj1.push_back(mul(F, p1[v], proj[v]));
    proj2.push_back(mul(F, p2[v], proj[v]));
  }
  split_recursive(restrict_rep(R, b1, p1), inc1, proj1, rng, opt, out);
  split_recursive(restrict_rep(R, b2, p2), inc2, proj2, rng, opt, out);
}

}  // namespace

Decomposition decompose(const LinRep& R, const DecompOptions& opt) {
  if (auto err = validate(R)) throw RepError("invalid representation: " + *err);
  if (R.total_dim() > opt.cap)
    throw CapExceeded("total dimension " + std::to_string(R.total_dim()) + " exceeds cap " + std::to_string(opt.cap));
  const Field& F = R.field;
  std::mt19937_64 rng(opt.seed);
  std::vector<Summand> parts;
  Hom id = hom_identity(R);
  split_recursive(R, id, id, rng, opt, parts);

  Decomposition out;
  IsoOptions iso;
  iso.seed = opt.seed;
  iso.exhaustive_limit = opt.exhaustive_limit;
  for (auto& s : parts) {
    if (s.local != Tri::True) out.certified = false;
    bool placed = false;
    for (auto& f : out.factors) {
      if (f.rep.dims != s.rep.dims) continue;
      Tri t = Tri::Inconclusive;
      auto phi = find_isomorphism(f.rep, s.rep, iso, &t);
      if (t == Tri::Inconclusive) out.certified = false;
      if (!phi) continue;
      // re-express the copy through the class representative
      Hom inc, proj;
      for (std::size_t v = 0; v < phi->size(); ++v) {
        inc.push_back(mul(F, s.inc[v], (*phi)[v]));
        proj.push_back(mul(F, *inverse(F, (*phi)[v]), s.proj[v]));
      }
      f.inclusions.push_back(std::move(inc));
      f.projections.push_back(std::move(proj));
      ++f.multiplicity;
      placed = true;
      break;
    }
    if (!placed) out.factors.push_back(Factor{s.rep, 1, {s.inc}, {s.proj}, s.local});
  }
  std::stable_sort(out.factors.begin(), out.factors.end(), [](const Factor& x, const Factor& y) {
    return std::make_tuple(x.rep.total_dim(), std::cref(x.rep.dims), std::cref(x.rep.mats)) <
           std::make_tuple(y.rep.total_dim(), std::cref(y.rep.dims), std::cref(y.rep.mats));
  });
  return out;
}

Tri is_indecomposable(const LinRep& R, const DecompOptions& opt) {
  if (R.total_dim() == 0) return Tri::False;
  std::mt19937_64 rng(opt.seed);
  std::optional<Split> s;
  return local_test(R, hom_space(R, R), rng, opt, s);
}

namespace {

// adjacency of the underlying simple graph, or nothing if it has loops or multiple edges
std::optional<std::vector<std::vector<std::size_t>>> simple_graph(const Shape& S) {
  std::vector<std::vector<std::size_t>> adj(S.num_objects());
  for (std::size_t a = 0; a < S.num_arrows(); ++a) {
    std::size_t u = S.src(a), w = S.dst(a);
    if (u == w) return std::nullopt;
    if (std::find(adj[u].begin(), adj[u].end(), w) != adj[u].end()) return std::nullopt;
    adj[u].push_back(w);
    adj[w].push_back(u);
  }
  return adj;
}

std::size_t arm_length(const std::vector<std::vector<std::size_t>>& adj, std::size_t center, std::size_t first) {
  std::size_t len = 1, prev = center, cur = first;
  while (adj[cur].size() == 2) {
    std::size_t nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = nxt;
    ++len;
  }
  return len;
}

// largest coefficient of the highest root, or 0 if not Dynkin
unsigned dynkin_bound(const Shape& S) {
  auto adj = simple_graph(S);
  if (!adj) return 0;
  const std::size_t n = S.num_objects();
  // forest check: edges = vertices - components
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < S.num_arrows(); ++a) {
    std::size_t x = find(S.src(a)), y = find(S.dst(a));
    if (x == y) return 0;
    parent[x] = y;
  }
  unsigned bound = 1;
  std::vector<std::size_t> branches(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    if ((*adj)[v].size() > 3) return 0;
    if ((*adj)[v].size() == 3) {
      if (++branches[find(v)] > 1) return 0;
      std::vector<std::size_t> arms;
      for (auto w : (*adj)[v]) arms.push_back(arm_length(*adj, v, w));
      std::sort(arms.begin(), arms.end());
      if (arms[0] > 1) return 0;
      if (arms[1] == 1) {
        bound = std::max(bound, 2u);
      } else if (arms[1] == 2 && arms[2] <= 4) {
        bound = std::max(bound, arms[2] == 2 ? 3u : arms[2] == 3 ? 4u : 6u);
      } else {
        return 0;
      }
    }
  }
  return bound;
}

}  // namespace

Tri isomorphic_by_summands(const LinRep& R, const LinRep& S, const DecompOptions& opt) {
  IsoOptions iso;
  iso.seed = opt.seed;
  const Tri direct = is_isomorphic(R, S, iso);
  if (direct != Tri::Inconclusive) return direct;
  const Decomposition a = decompose(R, opt), b = decompose(S, opt);
  if (!a.certified || !b.certified) return Tri::Inconclusive;
  if (a.factors.size() != b.factors.size()) return Tri::False;
  std::vector<bool> used(b.factors.size());
  for (const auto& f : a.factors) {
    bool found = false;
    for (std::size_t j = 0; j < b.factors.size() && !found; ++j) {
      if (used[j] || b.factors[j].multiplicity != f.multiplicity || b.factors[j].rep.dims != f.rep.dims) continue;
      const Tri t = is_isomorphic(f.rep, b.factors[j].rep, iso);
      if (t == Tri::Inconclusive) return Tri::Inconclusive;
      if (t == Tri::True) used[j] = found = true;
    }
    if (!found) return Tri::False;
  }
  return Tri::True;
}

bool is_dynkin(const Shape& S) { return S.num_objects() > 0 && dynkin_bound(S) > 0; }

long tits_form(const Shape& S, const DimVector& d) {
  long q = 0;
  for (auto x : d) q += static_cast<long>(x * x);
  for (std::size_t a = 0; a < S.num_arrows(); ++a) q -= static_cast<long>(d[S.src(a)] * d[S.dst(a)]);
  return q;
}

bool is_positive_root(const Shape& S, const DimVector& d) {
  if (d.size() != S.num_objects()) return false;
  if (std::all_of(d.begin(), d.end(), [](std::size_t x) { return x == 0; })) return false;
  return tits_form(S, d) == 1;
}

std::vector<DimVector> positive_roots(const Shape& S) {
  unsigned bound = dynkin_bound(S);
  if (!bound) throw RepError("positive roots are only enumerated for Dynkin shapes");
  const std::size_t n = S.num_objects();
  std::vector<DimVector> out;
  DimVector d(n, 0);
  for (;;) {
    std::size_t i = 0;
    while (i < n && d[i] == bound) d[i++] = 0;
    if (i == n) break;
    ++d[i];
    if (tits_form(S, d) == 1) out.push_back(d);
  }
  std::sort(out.begin(), out.end(), [](const DimVector& x, const DimVector& y) {
    auto hx = std::accumulate(x.begin(), x.end(), std::size_t(0));
    auto hy = std::accumulate(y.begin(), y.end(), std::size_t(0));
    return hx != hy ? hx < hy : x < y;
  });
  return out;
}

LinRep root_indecomposable(const Field& F, const Shape& S, const DimVector& d, std::uint64_t seed) {
  if (!is_dynkin(S)) throw RepError("shape is not of Dynkin type");
  if (!is_positive_root(S, d)) throw RepError("dimension vector is not a positive root");
  const std::size_t n = S.num_objects();
  // sources first: reflecting in this order keeps the next vertex a source
  std::vector<std::size_t> order, indeg(n);
  for (std::size_t a = 0; a < S.num_arrows(); ++a) ++indeg[S.dst(a)];
  for (std::size_t v = 0; v < n; ++v)
    if (indeg[v] == 0) order.push_back(v);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (auto a : S.out_arrows(order[i]))
      if (--indeg[S.dst(a)] == 0) order.push_back(S.dst(a));
  const auto reach = S.reachability();
  // C^- orbits of the projectives P_i cover every indecomposable
  for (std::size_t i = 0; i < n; ++i) {
    DimVector pd(n);
    for (std::size_t v = 0; v < n; ++v) pd[v] = reach[i][v];
    LinRep M(F, S, pd);
    for (std::size_t a = 0; a < S.num_arrows(); ++a)
      if (pd[S.src(a)] && pd[S.dst(a)]) M.mats[a] = Matrix::identity(1);
    while (M.total_dim() > 0) {
      if (M.dims == d) {
        if (seed == 0) return M;
        std::mt19937_64 rng(seed);
        Hom B;
        for (auto k : M.dims) B.push_back(random_invertible(F, k, rng));
        return conjugate(M, B);
      }
      for (auto k : order) M = reflect_source(M, k);
    }
  }
  throw std::logic_error("root not reached from any projective");
}

}  // namespace sr
