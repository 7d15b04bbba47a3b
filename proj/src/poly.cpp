#include "setreal/poly.hpp"

#include <algorithm>

namespace sr {

void poly_trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

long poly_deg(const Poly& f) { return static_cast<long>(f.size()) - 1; }

Poly poly_add(const Field& F, const Poly& f, const Poly& g) {
  Poly h(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < h.size(); ++i)
    h[i] = F.add(i < f.size() ? f[i] : 0, i < g.size() ? g[i] : 0);
  poly_trim(h);
  return h;
}

Poly poly_sub(const Field& F, const Poly& f, const Poly& g) {
  Poly h(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < h.size(); ++i)
    h[i] = F.sub(i < f.size() ? f[i] : 0, i < g.size() ? g[i] : 0);
  poly_trim(h);
  return h;
}

Poly poly_mul(const Field& F, const Poly& f, const Poly& g) {
  if (f.empty() || g.empty()) return {};
  Poly h(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i]) axpy(F, h.data() + i, g.data(), f[i], g.size());
  poly_trim(h);
  return h;
}

Poly poly_scale(const Field& F, Elem c, const Poly& f) {
  Poly h = f;
  for (auto& x : h) x = F.mul(c, x);
  poly_trim(h);
  return h;
}

void poly_divmod(const Field& F, const Poly& f, const Poly& g, Poly& quot, Poly& rem) {
  if (g.empty()) throw FieldError("polynomial division by zero");
  rem = f;
  poly_trim(rem);
  const std::size_t dg = g.size() - 1;
  const Elem lc_inv = F.inv(g.back());
  quot.assign(rem.size() >= g.size() ? rem.size() - dg : 0, 0);
  while (rem.size() >= g.size()) {
    std::size_t shift = rem.size() - g.size();
    Elem c = F.mul(rem.back(), lc_inv);
    quot[shift] = c;
    axpy(F, rem.data() + shift, g.data(), F.neg(c), g.size());
    poly_trim(rem);
  }
  poly_trim(quot);
}

Poly poly_mod(const Field& F, const Poly& f, const Poly& g) {
  Poly q, r;
  poly_divmod(F, f, g, q, r);
  return r;
}

Poly poly_monic(const Field& F, const Poly& f) {
  if (f.empty()) return f;
  return poly_scale(F, F.inv(f.back()), f);
}

Poly poly_gcd(const Field& F, Poly f, Poly g) {
  poly_trim(f);
  poly_trim(g);
  while (!g.empty()) {
    Poly r = poly_mod(F, f, g);
    f = std::move(g);
    g = std::move(r);
  }
  return poly_monic(F, f);
}

Poly poly_powmod(const Field& F, Poly base, std::uint64_t e, const Poly& m) {
  Poly r{1};
  r = poly_mod(F, r, m);
  base = poly_mod(F, base, m);
  while (e) {
    if (e & 1) r = poly_mod(F, poly_mul(F, r, base), m);
    e >>= 1;
    if (e) base = poly_mod(F, poly_mul(F, base, base), m);
  }
  return r;
}

Poly poly_pow(const Field& F, const Poly& f, unsigned e) {
  Poly r{1};
  for (unsigned i = 0; i < e; ++i) r = poly_mul(F, r, f);
  return r;
}

Poly poly_derivative(const Field& F, const Poly& f) {
  if (f.size() <= 1) return {};
  Poly d(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = F.mul(F.from_int(static_cast<long long>(i)), f[i]);
  poly_trim(d);
  return d;
}

Poly poly_x() { return Poly{0, 1}; }

Matrix poly_eval(const Field& F, const Poly& f, const Matrix& A) {
  const std::size_t n = A.rows;
  Matrix R(n, n);
  for (std::size_t i = f.size(); i-- > 0;) {
    R = mul(F, R, A);
    for (std::size_t j = 0; j < n; ++j) R(j, j) = F.add(R(j, j), f[i]);
  }
  return R;
}

namespace {

Poly poly_div_exact(const Field& F, const Poly& f, const Poly& g) {
  Poly q, r;
  poly_divmod(F, f, g, q, r);
  return q;
}

bool is_one(const Poly& f) { return f.size() == 1 && f[0] == 1; }

// g with g(X)^p = f, for f' = 0
Poly pth_root(const Field& F, const Poly& f) {
  const unsigned p = F.p();
  std::uint64_t e = 1;
  for (unsigned i = 1; i < F.k(); ++i) e *= p;
  Poly g((f.size() + p - 1) / p, 0);
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = F.pow(f[i * p], e);
  poly_trim(g);
  return g;
}

void squarefree(const Field& F, const Poly& f, unsigned mult, std::vector<std::pair<Poly, unsigned>>& out) {
  Poly c = poly_gcd(F, f, poly_derivative(F, f));
  Poly w = poly_div_exact(F, f, c);
  unsigned i = 1;
  while (!is_one(w)) {
    Poly y = poly_gcd(F, w, c);
    Poly z = poly_div_exact(F, w, y);
    if (poly_deg(z) > 0) out.push_back({poly_monic(F, z), i * mult});
    w = y;
    c = poly_div_exact(F, c, y);
    ++i;
  }
  if (!is_one(c)) squarefree(F, poly_monic(F, pth_root(F, c)), mult * F.p(), out);
}

void equal_degree(const Field& F, const Poly& f, std::size_t d, std::mt19937_64& rng, std::vector<Poly>& out) {
  const std::size_t n = static_cast<std::size_t>(poly_deg(f));
  if (n == d) {
    out.push_back(f);
    return;
  }
  const std::uint64_t q = F.q();
  for (;;) {
    Poly a(n);
    for (auto& x : a) x = static_cast<Elem>(rng() % q);
    poly_trim(a);
    if (poly_deg(a) < 1) continue;
    Poly t;
    if (F.p() == 2) {
      // absolute trace into GF(2)
      Poly s = a;
      t = a;
      for (std::size_t i = 1; i < F.k() * d; ++i) {
        s = poly_mod(F, poly_mul(F, s, s), f);
        t = poly_add(F, t, s);
      }
    } else {
      // a^((q^d - 1) / 2) as (a * a^q * ... * a^(q^(d-1)))^((q - 1) / 2)
      Poly s = a, nrm = a;
      for (std::size_t i = 1; i < d; ++i) {
        s = poly_powmod(F, s, q, f);
        nrm = poly_mod(F, poly_mul(F, nrm, s), f);
      }
      t = poly_sub(F, poly_powmod(F, nrm, (q - 1) / 2, f), Poly{1});
    }
    Poly g = poly_gcd(F, f, t);
    long dg = poly_deg(g);
    if (dg > 0 && dg < static_cast<long>(n)) {
      equal_degree(F, g, d, rng, out);
      equal_degree(F, poly_monic(F, poly_div_exact(F, f, g)), d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<Poly, unsigned>> poly_factor(const Field& F, const Poly& f0, std::mt19937_64& rng) {
  Poly f = f0;
  poly_trim(f);
  if (f.empty()) throw FieldError("cannot factor the zero polynomial");
  std::vector<std::pair<Poly, unsigned>> out;
  if (poly_deg(f) == 0) return out;
  std::vector<std::pair<Poly, unsigned>> sqf;
  squarefree(F, poly_monic(F, f), 1, sqf);
  for (auto& [g0, m] : sqf) {
    Poly g = g0, h = poly_x();
    for (std::size_t d = 1; 2 * d <= static_cast<std::size_t>(poly_deg(g)); ++d) {
      h = poly_powmod(F, h, F.q(), g);
      Poly part = poly_gcd(F, g, poly_sub(F, h, poly_x()));
      if (poly_deg(part) > 0) {
        std::vector<Poly> irr;
        equal_degree(F, part, d, rng, irr);
        for (auto& p : irr) out.push_back({p, m});
        g = poly_monic(F, poly_div_exact(F, g, part));
        h = poly_mod(F, h, g);
      }
    }
    if (poly_deg(g) > 0) out.push_back({g, m});
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
    return x.first < y.first;
  });
  // the same irreducible may come from different squarefree layers
  std::vector<std::pair<Poly, unsigned>> merged;
  for (auto& e : out) {
    if (!merged.empty() && merged.back().first == e.first)
      merged.back().second += e.second;
    else
      merged.push_back(e);
  }
  return merged;
}

bool poly_is_irreducible(const Field& F, const Poly& f) {
  if (poly_deg(f) < 1) return false;
  std::mt19937_64 rng(0);
  auto fac = poly_factor(F, f, rng);
  return fac.size() == 1 && fac[0].second == 1;
}

Matrix companion(const Field& F, const Poly& f) {
  if (f.empty() || f.back() != 1) throw FieldError("companion matrix needs a monic polynomial");
  const std::size_t u = f.size() - 1;
  Matrix C(u, u);
  for (std::size_t i = 1; i < u; ++i) C(i, i - 1) = 1;
  for (std::size_t i = 0; i < u; ++i) C(i, u - 1) = F.neg(f[i]);
  return C;
}

}  // namespace sr
