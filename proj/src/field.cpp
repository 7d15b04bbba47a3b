#include "setreal/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

namespace sr {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

using Poly = std::vector<Elem>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// remainder of f modulo monic g over GF(p)
Poly poly_mod_p(Poly f, const Poly& g, unsigned p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    Elem c = f.back();
    std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i)
      f[shift + i] = (f[shift + i] + (p - c) * g[i]) % p;
    trim(f);
  }
  return f;
}

std::vector<Elem> digits(Elem a, unsigned p, unsigned k) {
  std::vector<Elem> d(k);
  for (unsigned i = 0; i < k; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

Elem undigits(const std::vector<Elem>& d, unsigned p, unsigned k) {
  Elem a = 0;
  for (unsigned i = k; i-- > 0;) a = a * p + (i < d.size() ? d[i] : 0);
  return a;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<Elem>& f_in, unsigned p) {
  Poly f = f_in;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t n = f.size() - 1;
  if (n == 1) return true;
  // trial division by every monic polynomial of degree 1..n/2
  for (std::size_t d = 1; d <= n / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<Elem>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_mod_p(f, g, p).empty()) return false;
    }
  }
  return true;
}

struct FieldTables {
  unsigned p = 0, k = 0;
  Elem q = 0;
  std::vector<Elem> modulus;
  std::vector<Elem> exp;  // length 2(q-1)
  std::vector<Elem> log;  // length q, log[0] unused
  std::vector<Elem> addt;  // q*q when q <= 256
  std::vector<Elem> mult;  // q*q when q <= 256
  std::vector<Elem> negt;
  std::vector<Elem> invt;

  Elem slow_add(Elem a, Elem b) const {
    if (k == 1) return (a + b) % p;
    if (p == 2) return a ^ b;
    Elem r = 0, m = 1;
    for (unsigned i = 0; i < k; ++i) {
      r += ((a % p + b % p) % p) * m;
      a /= p;
      b /= p;
      m *= p;
    }
    return r;
  }
  Elem slow_mul(Elem a, Elem b) const {
    if (k == 1) return static_cast<Elem>((std::uint64_t(a) * b) % p);
    auto da = digits(a, p, k), db = digits(b, p, k);
    Poly prod(2 * k - 1, 0);
    for (unsigned i = 0; i < k; ++i)
      for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    return undigits(poly_mod_p(prod, modulus, p), p, k);
  }
};

namespace {

std::shared_ptr<const FieldTables> build_tables(unsigned p, unsigned k, std::vector<Elem> modulus) {
  auto t = std::make_shared<FieldTables>();
  t->p = p;
  t->k = k;
  Elem q = 1;
  for (unsigned i = 0; i < k; ++i) q *= p;
  t->q = q;
  t->modulus = std::move(modulus);

  // primitive element: smallest encoding of order q-1
  const auto ell = prime_factors(q - 1);
  auto slow_pow = [&](Elem a, std::uint64_t e) {
    Elem r = 1;
    while (e) {
      if (e & 1) r = t->slow_mul(r, a);
      a = t->slow_mul(a, a);
      e >>= 1;
    }
    return r;
  };
  Elem g = 0;
  for (Elem c = 1; c < q; ++c) {
    bool ok = true;
    for (auto l : ell)
      if (slow_pow(c, (q - 1) / l) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      g = c;
      break;
    }
  }
  if (g == 0) throw FieldError("no primitive element found (modulus not irreducible?)");

  t->exp.assign(2 * (q - 1) + 1, 0);
  t->log.assign(q, 0);
  Elem x = 1;
  for (Elem i = 0; i < q - 1; ++i) {
    t->exp[i] = x;
    t->log[x] = i;
    x = t->slow_mul(x, g);
  }
  for (Elem i = q - 1; i < t->exp.size(); ++i) t->exp[i] = t->exp[i - (q - 1)];

  t->negt.resize(q);
  t->invt.assign(q, 0);
  for (Elem a = 0; a < q; ++a) {
    auto d = digits(a, p, k);
    for (auto& c : d) c = (p - c) % p;
    t->negt[a] = undigits(d, p, k);
    if (a) t->invt[a] = t->exp[(q - 1 - t->log[a]) % (q - 1)];
  }
  if (q <= 256) {
    t->addt.resize(std::size_t(q) * q);
    t->mult.resize(std::size_t(q) * q);
    for (Elem a = 0; a < q; ++a)
      for (Elem b = 0; b < q; ++b) {
        t->addt[a * q + b] = t->slow_add(a, b);
        t->mult[a * q + b] = (a && b) ? t->exp[t->log[a] + t->log[b]] : 0;
      }
  }
  return t;
}

std::vector<Elem> smallest_irreducible(unsigned p, unsigned k) {
  // coefficient tuples (c0, ..., c_{k-1}, 1) in lexicographic order, c0 first
  std::uint64_t count = 1;
  for (unsigned i = 0; i < k; ++i) count *= p;
  std::vector<Elem> f(k + 1, 0);
  f[k] = 1;
  for (std::uint64_t rank = 0; rank < count; ++rank) {
    std::uint64_t c = rank;
    for (unsigned i = k; i-- > 0;) {
      f[i] = static_cast<Elem>(c % p);
      c /= p;
    }
    if (is_irreducible_mod_p(f, p)) return f;
  }
  throw FieldError("no irreducible polynomial found");
}

}  // namespace

Field Field::create(unsigned p, unsigned k, std::optional<std::vector<Elem>> modulus) {
  if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw FieldError("extension degree must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxOrder) throw FieldError("field order exceeds supported maximum 2^16");
  }
  std::vector<Elem> mod;
  if (modulus) {
    mod = *modulus;
    if (mod.size() != k + 1 || mod.back() != 1)
      throw FieldError("modulus must be monic of degree " + std::to_string(k));
    for (auto c : mod)
      if (c >= p) throw FieldError("modulus coefficient out of range");
    if (!is_irreducible_mod_p(mod, p)) throw FieldError("modulus is reducible");
  } else {
    mod = smallest_irreducible(p, k);
  }

  static std::mutex mu;
  static std::map<std::tuple<unsigned, unsigned, std::vector<Elem>>, std::shared_ptr<const FieldTables>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(p, k, mod);
  auto it = cache.find(key);
  Field F;
  if (it != cache.end()) {
    F.t_ = it->second;
  } else {
    F.t_ = build_tables(p, k, mod);
    cache.emplace(key, F.t_);
  }
  return F;
}

unsigned Field::p() const { return t_->p; }
unsigned Field::k() const { return t_->k; }
Elem Field::q() const { return t_->q; }
const std::vector<Elem>& Field::modulus() const { return t_->modulus; }

Elem Field::add(Elem a, Elem b) const {
  if (!t_->addt.empty()) return t_->addt[a * t_->q + b];
  return t_->slow_add(a, b);
}
Elem Field::neg(Elem a) const { return t_->negt[a]; }
Elem Field::sub(Elem a, Elem b) const { return add(a, t_->negt[b]); }
Elem Field::mul(Elem a, Elem b) const {
  if (!t_->mult.empty()) return t_->mult[a * t_->q + b];
  if (a == 0 || b == 0) return 0;
  return t_->exp[t_->log[a] + t_->log[b]];
}
Elem Field::inv(Elem a) const {
  if (a == 0) throw FieldError("inversion of zero");
  return t_->invt[a];
}
Elem Field::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return t_->exp[(std::uint64_t(t_->log[a]) * (e % (t_->q - 1))) % (t_->q - 1)];
}
Elem Field::from_int(long long v) const {
  long long r = v % static_cast<long long>(t_->p);
  if (r < 0) r += t_->p;
  return static_cast<Elem>(r);
}
std::uint64_t Field::order(Elem a) const {
  if (a == 0) throw FieldError("zero has no multiplicative order");
  std::uint64_t n = t_->q - 1;
  for (auto l : prime_factors(n))
    while (n % l == 0 && pow(a, n / l) == 1) n /= l;
  return n;
}
const Elem* Field::mul_row(Elem f) const {
  return t_->mult.empty() ? nullptr : t_->mult.data() + std::size_t(f) * t_->q;
}
const Elem* Field::add_table() const { return t_->addt.empty() ? nullptr : t_->addt.data(); }

std::string Field::name() const {
  return "GF(" + std::to_string(t_->q) + ")";
}

bool Field::operator==(const Field& o) const {
  if (t_ == o.t_) return true;
  if (!t_ || !o.t_) return false;
  return t_->p == o.t_->p && t_->k == o.t_->k && t_->modulus == o.t_->modulus;
}

Elem root_of_unity(const Field& F, std::uint64_t n) {
  if (n == 0 || (F.q() - 1) % n != 0)
    throw FieldError("no primitive " + std::to_string(n) + "-th root of unity in " + F.name());
  for (Elem a = 1; a < F.q(); ++a)
    if (F.order(a) == n) return a;
  throw FieldError("no primitive root of unity found");
}

std::vector<Elem> subfield_embedding(const Field& small, const Field& big) {
  if (small.p() != big.p() || big.k() % small.k() != 0)
    throw FieldError(small.name() + " does not embed in " + big.name());
  const unsigned p = small.p(), k = small.k();
  std::vector<Elem> img(small.q());
  if (k == 1) {
    for (Elem a = 0; a < small.q(); ++a) img[a] = a;
    return img;
  }
  const auto& m = small.modulus();
  Elem beta = 0;
  bool found = false;
  for (Elem b = 0; b < big.q() && !found; ++b) {
    Elem acc = 0;
    for (std::size_t i = m.size(); i-- > 0;) acc = big.add(big.mul(acc, b), m[i]);
    if (acc == 0) {
      beta = b;
      found = true;
    }
  }
  if (!found) throw FieldError("modulus has no root in extension field");
  for (Elem a = 0; a < small.q(); ++a) {
    auto d = digits(a, p, k);
    Elem acc = 0;
    for (unsigned i = k; i-- > 0;) acc = big.add(big.mul(acc, beta), d[i]);
    img[a] = acc;
  }
  return img;
}

}  // namespace sr
