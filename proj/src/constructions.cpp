#include "setreal/constructions.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

namespace sr {

LinRep indicator(const Field& F, const Shape& S, const std::vector<bool>& support) {
  if (support.size() != S.num_objects()) throw RepError("support has wrong length");
  DimVector d(S.num_objects());
  for (std::size_t v = 0; v < d.size(); ++v) d[v] = support[v] ? 1 : 0;
  LinRep R(F, S, d);
  for (std::size_t a = 0; a < S.num_arrows(); ++a)
    if (support[S.src(a)] && support[S.dst(a)]) R.mats[a](0, 0) = 1;
  if (auto err = validate(R)) throw RepError("indicator violates the shape: " + *err);
  return R;
}

LinRep indicator(const Field& F, const Shape& S, const std::vector<std::string>& support) {
  std::vector<bool> s(S.num_objects(), false);
  for (const auto& name : support) s[S.object_index(name)] = true;
  return indicator(F, S, s);
}

// ---------------------------------------------------------------- Vandermonde

VandermondeExpansion vandermonde_expand(const LinRep& R, unsigned n) {
  const Field& F = R.field;
  if (n == 0) throw RepError("n must be positive");
  VandermondeExpansion X;
  X.n = n;
  X.zeta = root_of_unity(F, n);
  X.Z = Matrix(n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) X.Z(i, j) = F.pow(X.zeta, std::uint64_t(i) * j);

  DimVector d;
  for (auto x : R.dims) d.push_back(x * n);
  X.expanded = LinRep(F, R.shape, d);
  for (std::size_t a = 0; a < R.mats.size(); ++a) {
    const Matrix& M = R.mats[a];
    Matrix& H = X.expanded.mats[a];
    for (std::size_t c = 0; c < M.cols; ++c) {
      int nz = 0;
      for (std::size_t r = 0; r < M.rows; ++r) {
        const Elem x = M(r, c);
        if (!x) continue;
        if (++nz > 1) throw RepError("arrow '" + R.shape.arrows()[a].name + "' has a column with two nonzero entries");
        if (F.pow(x, n) != 1) throw RepError("entry " + std::to_string(x) + " is not an n-th root of unity");
        for (unsigned i = 0; i < n; ++i) H(r * n + i, c * n + i) = F.pow(x, i);
      }
    }
  }
  for (auto dv : R.dims) {
    Matrix B(0, 0);
    for (std::size_t j = 0; j < dv; ++j) B = block_diag(B, X.Z);
    X.base_change.push_back(B);
  }
  X.permuted = conjugate(X.expanded, X.base_change);
  return X;
}

LinRep vandermonde_block(const VandermondeExpansion& X, unsigned i) {
  const LinRep& E = X.expanded;
  DimVector d;
  for (auto x : E.dims) d.push_back(x / X.n);
  LinRep R(E.field, E.shape, d);
  for (std::size_t a = 0; a < R.mats.size(); ++a)
    for (std::size_t r = 0; r < R.mats[a].rows; ++r)
      for (std::size_t c = 0; c < R.mats[a].cols; ++c) R.mats[a](r, c) = E.mats[a](r * X.n + i, c * X.n + i);
  return R;
}

// ----------------------------------------------------------------- reflection

Shape reflect_shape(const Shape& Q, std::size_t d) {
  if (!Q.is_source(d)) throw RepError("object '" + Q.objects()[d] + "' is not a source");
  if (!Q.relations().empty()) throw RepError("reflection is defined for quivers without relations");
  std::vector<Arrow> arr = Q.arrows();
  for (auto a : Q.out_arrows(d)) std::swap(arr[a].src, arr[a].dst);
  return Shape(Q.objects(), arr);
}

LinRep reflect_source(const LinRep& R, std::size_t d) {
  const Field& F = R.field;
  Shape Q2 = reflect_shape(R.shape, d);
  const auto& outs = R.shape.out_arrows(d);
  Matrix M(0, R.dims[d]);
  for (auto a : outs) M = vstack(M, R.mats[a]);
  Matrix C = transpose(nullspace(F, transpose(M)));  // C M = 0, rows span the cokernel
  DimVector dims = R.dims;
  dims[d] = C.rows;
  LinRep out(F, Q2, dims, R.mats);
  std::size_t off = 0;
  for (auto a : outs) {
    const std::size_t w = R.dims[R.shape.dst(a)];
    out.mats[a] = columns(C, off, w);
    off += w;
  }
  return out;
}

SetRep reflect_source(const SetRep& S, std::size_t d) {
  Shape Q2 = reflect_shape(S.shape, d);
  const auto& outs = S.shape.out_arrows(d);
  if (outs.size() > 2) throw RepError("pointed-set reflection needs at most two arrows out of the source");
  auto sizes = S.sizes;
  auto maps = S.maps;
  if (outs.empty()) {
    sizes[d] = 0;
    return SetRep(Q2, sizes, maps);
  }
  // nodes: 0 basepoint, then elements of each target in arrow order
  std::vector<std::size_t> base{1};
  for (auto a : outs) base.push_back(base.back() + S.sizes[S.shape.dst(a)]);
  std::vector<std::size_t> parent(base.back());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  auto node = [&](std::size_t k, std::uint32_t y) -> std::size_t { return y == 0 ? 0 : base[k] + y - 1; };
  auto unite = [&](std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  };
  for (std::uint32_t x = 1; x <= S.sizes[d]; ++x) {
    if (outs.size() == 1)
      unite(0, node(0, S.apply(outs[0], x)));
    else
      unite(node(0, S.apply(outs[0], x)), node(1, S.apply(outs[1], x)));
  }
  std::vector<std::uint32_t> cls(parent.size(), 0);
  std::vector<std::uint32_t> label(parent.size(), 0);
  std::uint32_t next = 0;
  for (std::size_t x = 1; x < parent.size(); ++x) {
    std::size_t r = find(x);
    if (r == find(0)) continue;
    if (!label[r]) label[r] = ++next;
    cls[x] = label[r];
  }
  sizes[d] = next;
  for (std::size_t k = 0; k < outs.size(); ++k) {
    auto& m = maps[outs[k]];
    m.assign(S.sizes[S.shape.dst(outs[k])], 0);
    for (std::uint32_t y = 1; y <= m.size(); ++y) m[y - 1] = cls[node(k, y)];
  }
  return SetRep(Q2, sizes, maps);
}

// ---------------------------------------------------------------- Kan extension

namespace {

std::vector<std::size_t> offsets(const DimVector& d, const std::vector<std::size_t>& objs) {
  std::vector<std::size_t> off(d.size(), 0);
  std::size_t o = 0;
  for (auto v : objs) {
    off[v] = o;
    o += d[v];
  }
  return off;
}

// quotient of the sum over `objs` by x - R(a)x for arrows inside `objs`
Matrix colimit_quotient(const LinRep& R, const std::vector<std::size_t>& objs) {
  const Field& F = R.field;
  std::vector<bool> in(R.dims.size(), false);
  for (auto v : objs) in[v] = true;
  auto off = offsets(R.dims, objs);
  std::size_t N = 0;
  for (auto v : objs) N += R.dims[v];
  std::size_t ncols = 0;
  for (std::size_t a = 0; a < R.mats.size(); ++a)
    if (in[R.shape.src(a)] && in[R.shape.dst(a)]) ncols += R.dims[R.shape.src(a)];
  Matrix K(N, ncols);
  std::size_t col = 0;
  for (std::size_t a = 0; a < R.mats.size(); ++a) {
    const std::size_t v = R.shape.src(a), w = R.shape.dst(a);
    if (!in[v] || !in[w]) continue;
    for (std::size_t x = 0; x < R.dims[v]; ++x, ++col) {
      K(off[v] + x, col) = F.add(K(off[v] + x, col), 1);
      for (std::size_t i = 0; i < R.dims[w]; ++i)
        K(off[w] + i, col) = F.sub(K(off[w] + i, col), R.mats[a](i, x));
    }
  }
  return transpose(nullspace(F, transpose(K)));
}

Matrix right_inverse(const Field& F, const Matrix& Q) {
  Matrix P(Q.cols, Q.rows);
  for (std::size_t i = 0; i < Q.rows; ++i) {
    Matrix e(Q.rows, 1);
    e(i, 0) = 1;
    auto x = solve(F, Q, e);
    if (!x) throw std::logic_error("quotient map is not surjective");
    for (std::size_t r = 0; r < Q.cols; ++r) P(r, i) = (*x)(r, 0);
  }
  return P;
}

// some path from v to each reachable sink, by breadth-first search in arrow order
std::vector<std::pair<std::size_t, std::vector<std::string>>> paths_to_sinks(const Shape& S, std::size_t v) {
  std::vector<int> seen(S.num_objects(), 0);
  std::vector<std::vector<std::string>> path(S.num_objects());
  std::deque<std::size_t> queue{v};
  seen[v] = 1;
  std::vector<std::pair<std::size_t, std::vector<std::string>>> out;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    if (S.is_sink(u)) out.push_back({u, path[u]});
    for (auto a : S.out_arrows(u)) {
      std::size_t w = S.dst(a);
      if (seen[w]) continue;
      seen[w] = 1;
      path[w] = path[u];
      path[w].push_back(S.arrows()[a].name);
      queue.push_back(w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Matrix> colimit_insertions(const LinRep& R) {
  std::vector<std::size_t> all(R.dims.size());
  std::iota(all.begin(), all.end(), 0);
  Matrix Q = colimit_quotient(R, all);
  auto off = offsets(R.dims, all);
  std::vector<Matrix> out;
  for (std::size_t v = 0; v < R.dims.size(); ++v) out.push_back(columns(Q, off[v], R.dims[v]));
  return out;
}

LinRep kan_add_terminal(const LinRep& R, TerminalAttach mode, const std::string& t) {
  if (auto err = validate(R)) throw RepError("invalid representation: " + *err);
  const Shape& S = R.shape;
  if (S.has_object(t)) throw RepError("object '" + t + "' already exists");
  auto ins = colimit_insertions(R);
  const std::size_t c = ins.empty() ? 0 : ins[0].rows;

  std::vector<std::string> objs = S.objects();
  objs.push_back(t);
  std::vector<Arrow> arr = S.arrows();
  std::vector<Relation> rel = S.relations();
  std::vector<Matrix> mats = R.mats;
  auto to_t = [&](std::size_t v) { return S.objects()[v] + "_" + t; };
  std::vector<bool> attached(S.num_objects(), false);
  for (std::size_t v = 0; v < S.num_objects(); ++v) {
    if (mode == TerminalAttach::Sinks && !S.is_sink(v)) continue;
    attached[v] = true;
    arr.push_back({to_t(v), S.objects()[v], t});
    mats.push_back(ins[v]);
  }
  if (mode == TerminalAttach::All) {
    for (const auto& a : S.arrows()) rel.push_back({{a.name, a.dst + "_" + t}, {a.src + "_" + t}});
  } else {
    for (std::size_t v = 0; v < S.num_objects(); ++v) {
      auto ps = paths_to_sinks(S, v);
      for (std::size_t k = 1; k < ps.size(); ++k) {
        auto lhs = ps[0].second, rhs = ps[k].second;
        lhs.push_back(to_t(ps[0].first));
        rhs.push_back(to_t(ps[k].first));
        rel.push_back({lhs, rhs});
      }
    }
  }
  DimVector dims = R.dims;
  dims.push_back(c);
  return LinRep(R.field, Shape(objs, arr, rel), dims, mats);
}

LinRep kan_extend_object(const LinRep& R, const std::string& c, const std::vector<std::string>& below,
                         const std::vector<std::string>& above) {
  if (auto err = validate(R)) throw RepError("invalid representation: " + *err);
  const Field& F = R.field;
  const Shape& S = R.shape;
  if (S.has_object(c)) throw RepError("object '" + c + "' already exists");
  std::vector<std::size_t> lo, hi;
  for (const auto& b : below) lo.push_back(S.object_index(b));
  for (const auto& u : above) hi.push_back(S.object_index(u));
  std::vector<bool> is_lo(S.num_objects(), false), is_hi(S.num_objects(), false);
  for (auto v : lo) is_lo[v] = true;
  for (auto u : hi) is_hi[u] = true;

  // the unique arrow v -> u for each pair
  std::vector<std::vector<long>> through(lo.size(), std::vector<long>(hi.size(), -1));
  std::vector<bool> dropped(S.num_arrows(), false);
  for (std::size_t a = 0; a < S.num_arrows(); ++a) {
    if (!is_lo[S.src(a)] || !is_hi[S.dst(a)]) continue;
    std::size_t i = std::find(lo.begin(), lo.end(), S.src(a)) - lo.begin();
    std::size_t j = std::find(hi.begin(), hi.end(), S.dst(a)) - hi.begin();
    if (through[i][j] >= 0) throw RepError("two arrows from '" + below[i] + "' to '" + above[j] + "'");
    through[i][j] = static_cast<long>(a);
    dropped[a] = true;
  }
  for (std::size_t i = 0; i < lo.size(); ++i)
    for (std::size_t j = 0; j < hi.size(); ++j)
      if (through[i][j] < 0) throw RepError("no arrow from '" + below[i] + "' to '" + above[j] + "'");

  Matrix Q = colimit_quotient(R, lo);
  auto off = offsets(R.dims, lo);
  Matrix Qr = right_inverse(F, Q);

  std::vector<std::string> objs = S.objects();
  objs.push_back(c);
  std::vector<Arrow> arr;
  std::vector<Matrix> mats;
  std::vector<std::string> kept;
  for (std::size_t a = 0; a < S.num_arrows(); ++a) {
    if (dropped[a]) continue;
    arr.push_back(S.arrows()[a]);
    mats.push_back(R.mats[a]);
  }
  std::vector<Relation> rel;
  auto mentions_dropped = [&](const std::vector<std::string>& p) {
    for (const auto& nm : p)
      if (dropped[S.arrow_index(nm)]) return true;
    return false;
  };
  for (const auto& r : S.relations()) {
    if (mentions_dropped(r.lhs) || mentions_dropped(r.rhs))
      throw RepError("a relation uses an arrow that factors through the new object");
    rel.push_back(r);
  }
  for (std::size_t i = 0; i < lo.size(); ++i) {
    arr.push_back({below[i] + "_" + c, below[i], c});
    mats.push_back(columns(Q, off[lo[i]], R.dims[lo[i]]));
  }
  for (std::size_t j = 0; j < hi.size(); ++j) {
    const std::size_t u = hi[j];
    Matrix B(R.dims[u], 0);
    for (std::size_t i = 0; i < lo.size(); ++i) B = hstack(B, R.mats[static_cast<std::size_t>(through[i][j])]);
    Matrix Phi = mul(F, B, Qr);
    if (mul(F, Phi, Q) != B) throw RepError("the maps into '" + above[j] + "' do not form a cocone");
    arr.push_back({c + "_" + above[j], c, above[j]});
    mats.push_back(Phi);
  }
  for (const auto& a : S.arrows()) {
    if (is_lo[S.object_index(a.src)] && is_lo[S.object_index(a.dst)])
      rel.push_back({{a.name, a.dst + "_" + c}, {a.src + "_" + c}});
    if (is_hi[S.object_index(a.src)] && is_hi[S.object_index(a.dst)])
      rel.push_back({{c + "_" + a.src, a.name}, {c + "_" + a.dst}});
  }
  DimVector dims = R.dims;
  dims.push_back(Q.rows);
  return LinRep(F, Shape(objs, arr, rel), dims, mats);
}

// ---------------------------------------------------------------- bands, strings

namespace {

void check_band_poly(const Field& F, const Poly& f) {
  if (f.empty() || f.back() != 1) throw RepError("band polynomial must be monic");
  if (!poly_is_irreducible(F, f)) throw RepError("band polynomial must be irreducible");
}

}  // namespace

LinRep band_rep(const Field& F, const Poly& f, unsigned m, const std::vector<bool>& orient) {
  check_band_poly(F, f);
  if (f == poly_x()) throw RepError("band polynomial X gives a non-invertible map");
  if (m == 0) throw RepError("band multiplicity must be positive");
  Matrix C = companion(F, poly_pow(F, f, m));
  const std::size_t u = C.rows;
  if (orient.empty()) return LinRep(F, shapes::loop(), {u}, {C});
  Shape S = shapes::atilde(orient);
  LinRep R(F, S, DimVector(S.num_objects(), u));
  for (auto& M : R.mats) M = Matrix::identity(u);
  R.mats.back() = C;
  return R;
}

bool band_is_realizable(const Field& F, const Poly& f, unsigned m) {
  check_band_poly(F, f);
  if (m == 0) throw RepError("band multiplicity must be positive");
  if (f == poly_x()) return false;
  while (m % F.p() == 0) m /= F.p();
  return m == 1;
}

SetRep string_rep(const std::vector<bool>& orient, std::size_t start, std::size_t m) {
  Shape S = shapes::atilde(orient);
  const std::size_t N = orient.size();
  if (m == 0) throw RepError("a string needs at least one step");
  if (start >= N) throw RepError("string start is not an object");
  std::vector<std::size_t> sizes(N, 0), pos(m + 1);
  for (std::size_t l = 1; l <= m; ++l) pos[l] = ++sizes[(start + l - 1) % N];
  std::vector<std::vector<std::uint32_t>> maps(N);
  for (std::size_t a = 0; a < N; ++a) maps[a].assign(sizes[S.src(a)], 0);
  for (std::size_t l = 1; l < m; ++l) {
    const std::size_t v = (start + l - 1) % N;  // arrow alpha_v joins v and v+1
    if (orient[v])
      maps[v][pos[l] - 1] = static_cast<std::uint32_t>(pos[l + 1]);
    else
      maps[v][pos[l + 1] - 1] = static_cast<std::uint32_t>(pos[l]);
  }
  return SetRep(S, sizes, maps);
}

// ---------------------------------------------------------------- D4-tilde families

namespace {

// center elements: unprimed 1..a, primed 1'..b' after them, then x if present
struct Center {
  std::size_t a, b;
  bool x;
  std::uint32_t un(std::size_t i) const { return static_cast<std::uint32_t>(i); }
  std::uint32_t pr(std::size_t i) const { return static_cast<std::uint32_t>(a + i); }
  std::uint32_t xx() const { return static_cast<std::uint32_t>(a + b + 1); }
  std::size_t size() const { return a + b + (x ? 1 : 0); }
};

struct Builder {
  Center c;
  std::size_t n_in1, n_in2, n_out1, n_out2;
  std::vector<std::uint32_t> i1, i2, o1, o2;

  Builder(Center cc, std::size_t in1, std::size_t in2, std::size_t out1, std::size_t out2)
      : c(cc), n_in1(in1), n_in2(in2), n_out1(out1), n_out2(out2), i1(in1, 0), i2(in2, 0), o1(cc.size(), 0),
        o2(cc.size(), 0) {}

  void incl_in1() {
    for (std::size_t i = 1; i <= n_in1; ++i) i1[i - 1] = c.un(i);
  }
  void incl_in2() {
    for (std::size_t i = 1; i <= n_in2; ++i) i2[i - 1] = c.pr(i);
  }
  // image of a center element under an outgoing arrow; targets past the end are
  // rejected so that a wrong table cannot pass silently
  static void set(std::vector<std::uint32_t>& m, std::uint32_t from, std::size_t to, std::size_t limit) {
    if (to > limit) throw std::logic_error("family map leaves its target");
    m[from - 1] = static_cast<std::uint32_t>(to);
  }
  SetRep build() const {
    return SetRep(shapes::d4tilde_two_two(), {n_in1, n_in2, c.size(), n_out1, n_out2}, {i1, i2, o1, o2});
  }
};

}  // namespace

SetRep d4tilde_family(D4Kind kind, int variant, std::size_t n) {
  if (n < 1) throw RepError("family index n must be at least 1");
  if (variant < 1 || variant > 5) throw RepError("family variant must be 1..5");
  auto put = Builder::set;
  if (kind == D4Kind::Preprojective) {
    switch (variant) {
      case 1:
      case 2: {
        const bool x = variant == 2;
        Builder B({n, n, x}, n, n, n, n + 1);
        B.incl_in1();
        B.incl_in2();
        for (std::size_t i = 1; i <= n; ++i) {
          put(B.o1, B.c.un(i), i, n);
          put(B.o1, B.c.pr(i), i, n);
          put(B.o2, B.c.un(i), i, n + 1);
          put(B.o2, B.c.pr(i), i + 1, n + 1);
        }
        if (x) put(B.o2, B.c.xx(), 1, n + 1);  // x goes to the basepoint under o1
        return B.build();
      }
      case 3:
      case 4: {
        const bool x = variant == 4;
        Builder B({n, n + 1, x}, n, n + 1, n + 1, n + 1);
        B.incl_in1();
        B.incl_in2();
        for (std::size_t i = 1; i <= n; ++i) {
          put(B.o1, B.c.un(i), i, n + 1);
          put(B.o2, B.c.un(i), i + 1, n + 1);
        }
        for (std::size_t i = 1; i <= n + 1; ++i) {
          put(B.o1, B.c.pr(i), i, n + 1);
          put(B.o2, B.c.pr(i), i, n + 1);
        }
        if (x) put(B.o2, B.c.xx(), 1, n + 1);
        return B.build();
      }
      default: {
        Builder B({n, n, true}, n, n, n + 1, n + 1);
        B.incl_in1();
        B.incl_in2();
        for (std::size_t i = 1; i <= n; ++i) {
          put(B.o1, B.c.un(i), i, n + 1);
          put(B.o1, B.c.pr(i), i + 1, n + 1);
          put(B.o2, B.c.un(i), i + 1, n + 1);
          put(B.o2, B.c.pr(i), i, n + 1);
        }
        put(B.o1, B.c.xx(), n + 1, n + 1);
        put(B.o2, B.c.xx(), n + 1, n + 1);
        return B.build();
      }
    }
  }
  switch (variant) {
    case 1: {
      Builder B({n + 1, n, false}, n + 1, n, n, n);
      B.incl_in1();
      B.incl_in2();
      for (std::size_t i = 1; i <= n; ++i) put(B.o1, B.c.un(i), i, n);
      for (std::size_t i = 2; i <= n + 1; ++i) put(B.o2, B.c.un(i), i - 1, n);
      // read as i' -> i under o2: i' -> i+1 would send n' outside the target
      for (std::size_t i = 1; i <= n; ++i) {
        put(B.o1, B.c.pr(i), i, n);
        put(B.o2, B.c.pr(i), i, n);
      }
      return B.build();
    }
    case 2: {
      Builder B({n, n, false}, n + 1, n, n, n);
      for (std::size_t i = 1; i <= n; ++i) B.i1[i - 1] = B.c.un(i);
      B.i1[n] = B.c.pr(1);
      B.incl_in2();
      for (std::size_t i = 1; i <= n; ++i) {
        put(B.o1, B.c.un(i), i, n);
        put(B.o1, B.c.pr(i), i, n);
        put(B.o2, B.c.pr(i), i, n);
      }
      for (std::size_t i = 1; i < n; ++i) put(B.o2, B.c.un(i), i + 1, n);
      return B.build();
    }
    case 3: {
      // out2 holds n-1 elements: nothing maps to n
      Builder B({n, n, false}, n, n, n, n - 1);
      B.incl_in1();
      B.incl_in2();
      for (std::size_t i = 1; i <= n; ++i) {
        put(B.o1, B.c.un(i), i, n);
        put(B.o1, B.c.pr(i), i, n);
      }
      for (std::size_t i = 2; i <= n; ++i) put(B.o2, B.c.un(i), i - 1, n - 1);
      for (std::size_t i = 1; i < n; ++i) put(B.o2, B.c.pr(i), i, n - 1);
      return B.build();
    }
    case 4: {
      Builder B({n - 1, n, false}, n, n, n, n - 1);
      for (std::size_t i = 1; i < n; ++i) B.i1[i - 1] = B.c.un(i);
      B.i1[n - 1] = B.c.pr(1);
      B.incl_in2();
      for (std::size_t i = 1; i < n; ++i) {
        put(B.o1, B.c.un(i), i + 1, n);
        put(B.o2, B.c.un(i), i, n - 1);
        put(B.o2, B.c.pr(i), i, n - 1);
      }
      for (std::size_t i = 1; i <= n; ++i) put(B.o1, B.c.pr(i), i, n);
      return B.build();
    }
    default: {
      Builder B({n, n + 1, false}, n + 1, n + 1, n, n);
      // the first n elements go to 1..n and the last to 1'
      for (std::size_t i = 1; i <= n; ++i) B.i1[i - 1] = B.c.un(i);
      B.i1[n] = B.c.pr(1);
      B.incl_in2();
      for (std::size_t i = 1; i <= n; ++i) {
        put(B.o1, B.c.un(i), i, n);
        put(B.o1, B.c.pr(i), i, n);
      }
      for (std::size_t i = 1; i < n; ++i) put(B.o2, B.c.un(i), i + 1, n);
      put(B.o2, B.c.pr(1), 1, n);
      for (std::size_t i = 2; i <= n + 1; ++i) put(B.o2, B.c.pr(i), i - 1, n);
      return B.build();
    }
  }
}

DimVector d4tilde_family_dims(D4Kind kind, int variant, std::size_t n) {
  static const std::size_t pp[5][5][2] = {
      // (coefficient of n, constant) for in1, in2, c, out1, out2
      {{1, 0}, {1, 0}, {2, 0}, {1, 0}, {1, 1}}, {{1, 0}, {1, 0}, {2, 1}, {1, 0}, {1, 1}},
      {{1, 0}, {1, 1}, {2, 1}, {1, 1}, {1, 1}}, {{1, 0}, {1, 1}, {2, 2}, {1, 1}, {1, 1}},
      {{1, 0}, {1, 0}, {2, 1}, {1, 1}, {1, 1}}};
  static const long pi[5][5][2] = {
      {{1, 1}, {1, 0}, {2, 1}, {1, 0}, {1, 0}}, {{1, 1}, {1, 0}, {2, 0}, {1, 0}, {1, 0}},
      {{1, 0}, {1, 0}, {2, 0}, {1, 0}, {1, -1}}, {{1, 0}, {1, 0}, {2, -1}, {1, 0}, {1, -1}},
      {{1, 1}, {1, 1}, {2, 1}, {1, 0}, {1, 0}}};
  if (variant < 1 || variant > 5) throw RepError("family variant must be 1..5");
  DimVector d(5);
  for (int i = 0; i < 5; ++i) {
    long v = kind == D4Kind::Preprojective
                 ? static_cast<long>(pp[variant - 1][i][0] * n + pp[variant - 1][i][1])
                 : pi[variant - 1][i][0] * static_cast<long>(n) + pi[variant - 1][i][1];
    d[i] = static_cast<std::size_t>(v);
  }
  return d;
}

// ---------------------------------------------------------------- classification

namespace {

void require_poset(const Shape& S) {
  for (std::size_t a = 0; a < S.num_arrows(); ++a) {
    if (S.src(a) == S.dst(a)) throw ShapeError("not a poset: loop at '" + S.objects()[S.src(a)] + "'");
    for (std::size_t b = 0; b < a; ++b)
      if (S.src(a) == S.src(b) && S.dst(a) == S.dst(b))
        throw ShapeError("not a poset: parallel arrows '" + S.arrows()[b].name + "' and '" + S.arrows()[a].name + "'");
  }
  if (!S.is_acyclic()) throw ShapeError("not a poset: directed cycle");
}

using Reach = std::vector<std::vector<bool>>;

// cover relation of the order restricted to `members`
std::vector<std::pair<std::size_t, std::size_t>> covers(const Reach& le, const std::vector<std::size_t>& members) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (auto x : members)
    for (auto y : members) {
      if (x == y || !le[x][y]) continue;
      bool direct = true;
      for (auto z : members)
        if (z != x && z != y && le[x][z] && le[z][y]) {
          direct = false;
          break;
        }
      if (direct) out.push_back({x, y});
    }
  return out;
}

std::vector<std::vector<std::size_t>> components(std::size_t n, const std::vector<std::size_t>& members,
                                                 const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (auto [x, y] : edges) parent[find(x)] = find(y);
  std::vector<std::vector<std::size_t>> groups;
  std::vector<long> slot(n, -1);
  for (auto v : members) {
    auto r = find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<long>(groups.size());
      groups.emplace_back();
    }
    groups[static_cast<std::size_t>(slot[r])].push_back(v);
  }
  return groups;
}

// connected members whose Hasse diagram is a simple path
bool type_a(const Reach& le, const std::vector<std::size_t>& members) {
  auto e = covers(le, members);
  if (e.size() + 1 != members.size()) return false;
  std::vector<int> deg(le.size(), 0);
  for (auto [x, y] : e)
    if (++deg[x] > 2 || ++deg[y] > 2) return false;
  return components(le.size(), members, e).size() == 1;
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const Shape& S) {
  require_poset(S);
  std::vector<std::size_t> all(S.num_objects());
  std::iota(all.begin(), all.end(), 0);
  return covers(S.reachability(), all);
}

bool shape_is_indicator_only(const Shape& S) {
  require_poset(S);
  const Reach le = S.reachability();
  std::vector<std::size_t> all(S.num_objects());
  std::iota(all.begin(), all.end(), 0);
  for (const auto& comp : components(all.size(), all, covers(le, all))) {
    if (type_a(le, comp)) continue;
    std::vector<std::size_t> maxima;
    for (auto x : comp)
      if (std::none_of(comp.begin(), comp.end(), [&](std::size_t y) { return y != x && le[x][y]; }))
        maxima.push_back(x);
    if (maxima.size() != 1) return false;
    std::vector<std::size_t> rest;
    for (auto x : comp)
      if (x != maxima[0]) rest.push_back(x);
    for (const auto& part : components(all.size(), rest, covers(le, rest))) {
      if (!type_a(le, part)) return false;
      std::size_t minima = 0;
      for (auto x : part)
        minima += std::none_of(part.begin(), part.end(), [&](std::size_t y) { return y != x && le[y][x]; });
      if (minima != 1) return false;
    }
  }
  return true;
}

}  // namespace sr
