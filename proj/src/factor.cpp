#include "frobenian/factor.hpp"

#include <algorithm>
#include <functional>

#include "frobenian/errors.hpp"
#include "frobenian/poly_fp.hpp"

namespace frobenian {

namespace {

using ZPoly = std::vector<Integer>;

void trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

void reduce_nonneg(ZPoly& f, const Integer& m) {
  for (auto& c : f) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  trim(f);
}

void reduce_symmetric(ZPoly& f, const Integer& m) {
  Integer half = m / 2;
  for (auto& c : f) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  trim(f);
}

PolyFp to_fp(const ZPoly& f, std::uint64_t p) {
  std::vector<std::uint64_t> c;
  c.reserve(f.size());
  for (const auto& z : f) c.push_back(reduce_mod(z, p));
  return PolyFp(p, std::move(c));
}

ZPoly from_fp(const PolyFp& f) {
  ZPoly out;
  for (auto c : f.coeffs()) out.emplace_back(static_cast<unsigned long>(c));
  return out;
}

PolyQ to_q(const ZPoly& f) {
  std::vector<Rational> c(f.begin(), f.end());
  return PolyQ(std::move(c));
}

// Exact division over Z; nullopt-like empty flag when not exact.
bool divides_exactly(const ZPoly& num, const ZPoly& den, ZPoly& quot) {
  ZPoly rem = num;
  int dn = static_cast<int>(rem.size()) - 1, dd = static_cast<int>(den.size()) - 1;
  if (dd < 0) return false;
  if (dn < dd) return rem.empty();
  quot.assign(static_cast<std::size_t>(dn - dd) + 1, Integer(0));
  const Integer& lead = den.back();
  for (int i = dn; i >= dd; --i) {
    Integer& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return false;
    Integer q = top / lead;
    quot[static_cast<std::size_t>(i - dd)] = q;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= q * den[static_cast<std::size_t>(j)];
  }
  for (int i = 0; i < dd; ++i) {
    if (rem[static_cast<std::size_t>(i)] != 0) return false;
  }
  trim(quot);
  return true;
}

ZPoly primitive(ZPoly f) {
  Integer g = 0;
  for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) return f;
  if (f.back() < 0) g = -g;
  for (auto& c : f) c /= g;
  return f;
}

// Lift monic factors of a monic target T (mod p) to monic factors mod p^k.
std::vector<ZPoly> hensel_lift(const ZPoly& target, const std::vector<PolyFp>& factors, std::uint64_t p, unsigned k,
                               const Integer& pk) {
  if (factors.size() == 1) {
    ZPoly t = target;
    reduce_nonneg(t, pk);
    return {t};
  }
  std::size_t half = factors.size() / 2;
  std::vector<PolyFp> left(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(half));
  std::vector<PolyFp> right(factors.begin() + static_cast<std::ptrdiff_t>(half), factors.end());
  PolyFp a_p = PolyFp::constant(p, 1), b_p = PolyFp::constant(p, 1);
  for (const auto& f : left) a_p = a_p * f;
  for (const auto& f : right) b_p = b_p * f;

  // s*a + t*b = 1 mod p
  PolyFp r0 = a_p, r1 = b_p, s0 = PolyFp::constant(p, 1), s1(p, {}), t0(p, {}), t1 = PolyFp::constant(p, 1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = r1;
    r1 = r;
    PolyFp s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
    PolyFp t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0.degree() != 0) throw InvariantViolation("Hensel lifting: modular factors not coprime");
  std::uint64_t inv = inv_mod(r0.leading(), p);
  PolyFp s = s0.scaled(inv), t = t0.scaled(inv);

  ZPoly a = from_fp(a_p), b = from_fp(b_p);
  Integer pj = p;
  for (unsigned j = 1; j < k; ++j) {
    ZPoly ab = mul(a, b);
    ZPoly diff = target;
    if (diff.size() < ab.size()) diff.resize(ab.size(), Integer(0));
    for (std::size_t i = 0; i < ab.size(); ++i) diff[i] -= ab[i];
    reduce_nonneg(diff, pj * p);
    for (auto& c : diff) c /= pj;
    PolyFp e = to_fp(diff, p);
    if (!e.is_zero()) {
      PolyFp da = (t * e) % a_p;
      PolyFp db = (e - b_p * da) / a_p;
      ZPoly da_z = from_fp(da), db_z = from_fp(db);
      for (std::size_t i = 0; i < da_z.size(); ++i) a[i] += pj * da_z[i];
      for (std::size_t i = 0; i < db_z.size(); ++i) b[i] += pj * db_z[i];
    }
    pj *= p;
  }
  auto lifted_left = hensel_lift(a, left, p, k, pk);
  auto lifted_right = hensel_lift(b, right, p, k, pk);
  lifted_left.insert(lifted_left.end(), lifted_right.begin(), lifted_right.end());
  return lifted_left;
}

// Advances a sorted k-subset of {0..m-1}; false when exhausted.
bool next_combination(std::vector<int>& pick, int m) {
  const int k = static_cast<int>(pick.size());
  int i = k - 1;
  while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - k + i) --i;
  if (i < 0) return false;
  ++pick[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

Integer coefficient_bound(const ZPoly& f) {
  // 2^n * ||f||_2 * |lc| bounds the coefficients of lc * (any factor of f)
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  Integer bound = root * abs(f.back());
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), f.size() - 1);
  return bound;
}

// Factors a primitive squarefree integer polynomial of degree >= 2 with no
// rational roots.
std::vector<ZPoly> zassenhaus(ZPoly f) {
  // choose the good prime with the fewest modular factors among a few
  std::uint64_t best_p = 0;
  std::vector<PolyFp> best_factors;
  int tried = 0;
  for (std::uint64_t p = 3; tried < 16; p += 2) {
    if (!is_prime(p)) continue;
    if (divides(p, f.back())) continue;
    PolyFp fp = to_fp(f, p);
    if (!is_squarefree(fp)) continue;
    ++tried;
    auto facs = factor_mod_p(fp);
    if (best_p == 0 || facs.size() < best_factors.size()) {
      best_p = p;
      best_factors.clear();
      for (auto& fac : facs) best_factors.push_back(fac.factor);
    }
    if (best_factors.size() == 1) break;
  }
  if (best_factors.size() <= 1) return {f};
  const std::uint64_t p = best_p;

  Integer bound = 2 * coefficient_bound(f) + 1;
  unsigned k = 1;
  Integer pk = p;
  while (pk <= bound) {
    pk *= p;
    ++k;
  }
  // monic target: lc^{-1} f mod p^k
  Integer lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), f.back().get_mpz_t(), pk.get_mpz_t());
  ZPoly target = f;
  for (auto& c : target) c *= lc_inv;
  reduce_nonneg(target, pk);
  std::vector<ZPoly> lifted = hensel_lift(target, best_factors, p, k, pk);

  std::vector<ZPoly> found;
  std::vector<bool> used(lifted.size(), false);
  std::size_t remaining = lifted.size();
  int subset_size = 1;
  while (2 * subset_size <= static_cast<int>(remaining)) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < lifted.size(); ++i) {
      if (!used[i]) idx.push_back(i);
    }
    bool progress = false;
    std::vector<int> pick(static_cast<std::size_t>(subset_size));
    for (int i = 0; i < subset_size; ++i) pick[static_cast<std::size_t>(i)] = i;
    const int m = static_cast<int>(idx.size());
    while (true) {
      // constant-term test before forming the full product
      Integer constant = f.back();
      for (int i : pick) {
        constant *= lifted[idx[static_cast<std::size_t>(i)]][0];
        mpz_fdiv_r(constant.get_mpz_t(), constant.get_mpz_t(), pk.get_mpz_t());
      }
      if (constant > pk / 2) constant -= pk;
      Integer lc_f0 = f.back() * f[0];
      if (constant == 0 ? lc_f0 != 0 : !mpz_divisible_p(lc_f0.get_mpz_t(), constant.get_mpz_t())) {
        if (!next_combination(pick, m)) break;
        continue;
      }
      ZPoly g{f.back()};
      for (int i : pick) {
        g = mul(g, lifted[idx[static_cast<std::size_t>(i)]]);
        reduce_symmetric(g, pk);
      }
      ZPoly h = primitive(g);
      ZPoly quot;
      if (h.size() > 1 && divides_exactly(f, h, quot)) {
        found.push_back(h);
        f = quot;
        for (int i : pick) used[idx[static_cast<std::size_t>(i)]] = true;
        remaining -= static_cast<std::size_t>(subset_size);
        progress = true;
        break;
      }
      if (!next_combination(pick, m)) break;
    }
    if (!progress) ++subset_size;
  }
  if (f.size() > 1) found.push_back(primitive(f));
  return found;
}

std::vector<Integer> divisors_small(const Integer& n, std::size_t limit, bool& ok) {
  std::vector<Integer> out;
  ok = true;
  Integer m = abs(n);
  if (!m.fits_ulong_p() || m > 1000000000UL) {
    ok = false;
    return out;
  }
  unsigned long v = m.get_ui();
  for (unsigned long d = 1; d * d <= v; ++d) {
    if (v % d != 0) continue;
    out.emplace_back(d);
    if (d * d != v) out.emplace_back(v / d);
    if (out.size() > limit) {
      ok = false;
      return {};
    }
  }
  return out;
}

// Strips rational roots from a primitive squarefree integer polynomial when
// the candidate set is small. Returns the linear factors found.
std::vector<ZPoly> strip_rational_roots(ZPoly& f) {
  std::vector<ZPoly> found;
  if (f.size() >= 2 && f[0] == 0) {
    found.push_back({Integer(0), Integer(1)});
    f.erase(f.begin());
  }
  if (f.size() <= 2) return found;
  bool ok_num = false, ok_den = false;
  auto nums = divisors_small(f.front(), 256, ok_num);
  auto dens = divisors_small(f.back(), 256, ok_den);
  if (!ok_num || !ok_den || nums.size() * dens.size() > 4096) return found;
  for (const auto& e : dens) {
    for (const auto& d : nums) {
      for (int sign : {1, -1}) {
        if (f.size() <= 2) return found;
        Integer dd = d * sign;
        Integer g;
        mpz_gcd(g.get_mpz_t(), dd.get_mpz_t(), e.get_mpz_t());
        if (g != 1) continue;
        ZPoly lin{-dd, e};
        ZPoly quot;
        if (divides_exactly(f, lin, quot)) {
          found.push_back(lin);
          f = quot;
        }
      }
    }
  }
  return found;
}

std::vector<std::pair<PolyQ, int>> squarefree_decomposition(const PolyQ& f) {
  // Yun's algorithm over Q
  std::vector<std::pair<PolyQ, int>> out;
  PolyQ a = f.monic();
  PolyQ b = a.derivative();
  PolyQ c = gcd(a, b);
  PolyQ w = a / c;
  PolyQ y = b / c;
  PolyQ z = y - w.derivative();
  int i = 1;
  while (w.degree() > 0) {
    PolyQ g = gcd(w, z);
    if (g.degree() > 0) out.emplace_back(g, i);
    w = w / g;
    y = z / g;
    z = y - w.derivative();
    ++i;
  }
  return out;
}

}  // namespace

std::vector<QFactor> factor_over_Q(const PolyQ& f) {
  if (f.is_zero()) throw InputError("factor_over_Q of the zero polynomial");
  std::vector<QFactor> out;
  if (f.degree() == 0) return out;
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    ZPoly z = primitive_integer_coeffs(part);
    std::vector<ZPoly> pieces = strip_rational_roots(z);
    if (z.size() == 2) {
      pieces.push_back(z);
    } else if (z.size() > 2) {
      auto more = zassenhaus(z);
      pieces.insert(pieces.end(), more.begin(), more.end());
    }
    for (const auto& piece : pieces) out.push_back({to_q(piece).monic(), mult});
  }
  std::sort(out.begin(), out.end(),
            [](const QFactor& a, const QFactor& b) { return canonical_less(a.factor, b.factor); });
  return out;
}

std::vector<Rational> rational_roots(const PolyQ& f) {
  std::vector<Rational> roots;
  for (const auto& fac : factor_over_Q(f)) {
    if (fac.factor.degree() == 1) roots.push_back(-fac.factor.coeff(0));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

bool is_irreducible_over_Q(const PolyQ& f) {
  if (f.degree() < 1) return false;
  auto facs = factor_over_Q(f);
  return facs.size() == 1 && facs[0].multiplicity == 1;
}

}  // namespace frobenian
