#include "frobenian/poly_fp.hpp"

#include <algorithm>
#include <atomic>
#include <random>

#include "frobenian/errors.hpp"

namespace frobenian {

PolyFp::PolyFp(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= p_;
  normalize();
}

void PolyFp::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyFp PolyFp::reduce(const PolyQ& f, std::uint64_t p) {
  std::vector<std::uint64_t> c;
  c.reserve(f.coeffs().size());
  for (const auto& q : f.coeffs()) c.push_back(reduce_mod(q, p));
  return PolyFp(p, std::move(c));
}

PolyFp PolyFp::constant(std::uint64_t p, std::uint64_t c) { return PolyFp(p, {c}); }

PolyFp PolyFp::monomial(std::uint64_t p, std::uint64_t c, int degree) {
  std::vector<std::uint64_t> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return PolyFp(p, std::move(v));
}

PolyFp& PolyFp::operator+=(const PolyFp& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) {
    c_[i] += o.c_[i];
    if (c_[i] >= p_) c_[i] -= p_;
  }
  normalize();
  return *this;
}

PolyFp& PolyFp::operator-=(const PolyFp& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = (c_[i] + p_ - o.c_[i]) % p_;
  normalize();
  return *this;
}

PolyFp operator*(const PolyFp& a, const PolyFp& b) {
  if (a.is_zero() || b.is_zero()) return PolyFp(a.p_, {});
  const std::uint64_t p = a.p_;
  std::vector<unsigned __int128> acc(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      acc[i + j] += static_cast<unsigned __int128>(a.c_[i]) * b.c_[j];
      if (acc[i + j] >> 120) acc[i + j] %= p;
    }
  }
  std::vector<std::uint64_t> out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<std::uint64_t>(acc[i] % p);
  return PolyFp(p, std::move(out));
}

PolyFp PolyFp::scaled(std::uint64_t c) const {
  std::vector<std::uint64_t> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = frobenian::mul_mod(c_[i], c % p_, p_);
  return PolyFp(p_, std::move(out));
}

std::pair<PolyFp, PolyFp> PolyFp::divmod(const PolyFp& divisor) const {
  if (divisor.is_zero()) throw InputError("polynomial division by zero mod p");
  int dd = divisor.degree();
  if (degree() < dd) return {PolyFp(p_, {}), *this};
  std::vector<std::uint64_t> rem = c_;
  std::vector<std::uint64_t> quot(static_cast<std::size_t>(degree() - dd) + 1, 0);
  std::uint64_t inv = inv_mod(divisor.leading(), p_);
  for (int i = degree(); i >= dd; --i) {
    std::uint64_t top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    std::uint64_t q = frobenian::mul_mod(top, inv, p_);
    quot[static_cast<std::size_t>(i - dd)] = q;
    for (int j = 0; j <= dd; ++j) {
      auto& r = rem[static_cast<std::size_t>(i - dd + j)];
      r = (r + p_ - frobenian::mul_mod(q, divisor.c_[static_cast<std::size_t>(j)], p_)) % p_;
    }
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {PolyFp(p_, std::move(quot)), PolyFp(p_, std::move(rem))};
}

PolyFp PolyFp::derivative() const {
  if (c_.size() <= 1) return PolyFp(p_, {});
  std::vector<std::uint64_t> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = frobenian::mul_mod(c_[i], i % p_, p_);
  return PolyFp(p_, std::move(d));
}

PolyFp PolyFp::monic() const {
  if (is_zero()) return *this;
  return scaled(inv_mod(leading(), p_));
}

std::uint64_t PolyFp::operator()(std::uint64_t x) const {
  std::uint64_t acc = 0;
  x %= p_;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (frobenian::mul_mod(acc, x, p_) + *it) % p_;
  return acc;
}

std::string PolyFp::to_string(const std::string& var) const {
  std::vector<Rational> q;
  q.reserve(c_.size());
  for (auto c : c_) q.emplace_back(static_cast<unsigned long>(c));
  return PolyQ(std::move(q)).to_string(var);
}

bool canonical_less(const PolyFp& a, const PolyFp& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.coeffs() < b.coeffs();
}

PolyFp gcd(PolyFp a, PolyFp b) {
  while (!b.is_zero()) {
    PolyFp r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

PolyFp mul_mod(const PolyFp& a, const PolyFp& b, const PolyFp& modulus) { return (a * b) % modulus; }

PolyFp pow_mod(const PolyFp& base, const Integer& exp, const PolyFp& modulus) {
  if (exp < 0) throw InputError("negative exponent in pow_mod");
  PolyFp result = PolyFp::constant(modulus.modulus(), 1) % modulus;
  PolyFp b = base % modulus;
  std::size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mul_mod(result, result, modulus);
    if (mpz_tstbit(exp.get_mpz_t(), i)) result = mul_mod(result, b, modulus);
  }
  return result;
}

bool is_squarefree(const PolyFp& f) {
  if (f.degree() <= 0) return true;
  return gcd(f, f.derivative()).degree() == 0;
}

namespace {

// f = g(x^p) -> g
PolyFp pth_root(const PolyFp& f) {
  const std::uint64_t p = f.modulus();
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) out.push_back(f.coeffs()[i]);
  // coefficients are in F_p, so their p-th roots are themselves
  return PolyFp(p, std::move(out));
}

void squarefree_decompose(const PolyFp& f, int scale, std::vector<FpFactor>& out) {
  const std::uint64_t p = f.modulus();
  PolyFp c = gcd(f, f.derivative());
  PolyFp w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    PolyFp y = gcd(w, c);
    PolyFp z = w / y;
    if (z.degree() > 0) out.push_back({z.monic(), i * scale});
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) squarefree_decompose(pth_root(c).monic(), scale * static_cast<int>(p), out);
}

// g squarefree monic. Returns (product of all degree-d irreducible factors, d).
std::vector<std::pair<PolyFp, int>> distinct_degree(PolyFp g) {
  const std::uint64_t p = g.modulus();
  std::vector<std::pair<PolyFp, int>> out;
  PolyFp x = PolyFp::x(p);
  PolyFp h = x % g;
  int d = 1;
  while (g.degree() >= 2 * d) {
    h = pow_mod(h, Integer(static_cast<unsigned long>(p)), g);
    PolyFp part = gcd(h - x, g);
    if (part.degree() > 0) {
      out.emplace_back(part, d);
      g = g / part;
      h = h % g;
    }
    ++d;
  }
  if (g.degree() > 0) out.emplace_back(g.monic(), g.degree());
  return out;
}

void equal_degree(const PolyFp& g, int d, std::mt19937_64& rng, std::vector<PolyFp>& out) {
  if (g.degree() == d) {
    out.push_back(g.monic());
    return;
  }
  const std::uint64_t p = g.modulus();
  std::uniform_int_distribution<std::uint64_t> coin(0, p - 1);
  Integer exponent;
  if (p != 2) {
    mpz_ui_pow_ui(exponent.get_mpz_t(), p, static_cast<unsigned long>(d));
    exponent = (exponent - 1) / 2;
  }
  for (;;) {
    std::vector<std::uint64_t> a(static_cast<std::size_t>(g.degree()));
    for (auto& c : a) c = coin(rng);
    PolyFp probe(p, std::move(a));
    if (probe.degree() < 1) continue;
    PolyFp b;
    if (p == 2) {
      // trace from F_{2^d} to F_2
      PolyFp term = probe;
      b = probe;
      for (int j = 1; j < d; ++j) {
        term = mul_mod(term, term, g);
        b += term;
      }
    } else {
      b = pow_mod(probe, exponent, g) - PolyFp::constant(p, 1);
    }
    PolyFp split = gcd(b, g);
    if (split.degree() > 0 && split.degree() < g.degree()) {
      equal_degree(split, d, rng, out);
      equal_degree(g / split, d, rng, out);
      return;
    }
  }
}

}  // namespace

namespace {
std::atomic<std::uint64_t> g_factoring_seed{0x5eed};
}

std::uint64_t factoring_seed() { return g_factoring_seed.load(std::memory_order_relaxed); }
void set_factoring_seed(std::uint64_t seed) { g_factoring_seed.store(seed, std::memory_order_relaxed); }

std::vector<FpFactor> factor_mod_p(const PolyFp& f, std::uint64_t seed) {
  if (f.is_zero()) throw InputError("factor_mod_p of the zero polynomial");
  if (!is_prime(f.modulus())) throw InputError("modulus " + std::to_string(f.modulus()) + " is not prime");
  std::vector<FpFactor> out;
  if (f.degree() == 0) return out;
  std::mt19937_64 rng(seed);
  std::vector<FpFactor> sqf;
  squarefree_decompose(f.monic(), 1, sqf);
  for (const auto& [part, mult] : sqf) {
    for (const auto& [block, d] : distinct_degree(part)) {
      std::vector<PolyFp> irreducibles;
      equal_degree(block, d, rng, irreducibles);
      for (auto& q : irreducibles) out.push_back({std::move(q), mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const FpFactor& a, const FpFactor& b) {
    if (a.factor == b.factor) return a.multiplicity < b.multiplicity;
    return canonical_less(a.factor, b.factor);
  });
  // identical irreducibles can only arise from distinct squarefree layers
  std::vector<FpFactor> merged;
  for (auto& fac : out) {
    if (!merged.empty() && merged.back().factor == fac.factor) {
      merged.back().multiplicity += fac.multiplicity;
    } else {
      merged.push_back(std::move(fac));
    }
  }
  return merged;
}

int count_roots_mod_p(const PolyFp& f) {
  if (f.is_zero()) throw InputError("count_roots_mod_p of the zero polynomial");
  const std::uint64_t p = f.modulus();
  PolyFp m = f.monic();
  if (m.degree() <= 0) return 0;
  PolyFp x = PolyFp::x(p);
  PolyFp xp = pow_mod(x, Integer(static_cast<unsigned long>(p)), m);
  return gcd(xp - x, m).degree();
}

}  // namespace frobenian
