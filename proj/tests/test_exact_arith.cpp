#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "frobenian/errors.hpp"
#include "frobenian/factor.hpp"
#include "frobenian/matrix.hpp"
#include "frobenian/poly_fp.hpp"
#include "frobenian/poly_q.hpp"

using namespace frobenian;

namespace {

PolyQ P(const char* s) { return parse_poly(s); }

// Brute-force root search, independent of factor_mod_p.
std::vector<std::uint64_t> roots_by_search(const PolyFp& f) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < f.modulus(); ++x) {
    if (f(x) == 0) out.push_back(x);
  }
  return out;
}

PolyFp product(const std::vector<FpFactor>& facs, std::uint64_t p) {
  PolyFp acc = PolyFp::constant(p, 1);
  for (const auto& f : facs)
    for (int i = 0; i < f.multiplicity; ++i) acc = acc * f.factor;
  return acc;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational(" -4 ") == Rational(-4));
  CHECK(to_string(Rational(-6, 4)) == "-3/2");
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("abc"), InputError);
}

TEST_CASE("polynomial parsing") {
  CHECK(P("x^2-x-1") == PolyQ{-1, -1, 1});
  CHECK(P("1/2*x^2 + 3x - 1/3") == PolyQ{Rational(-1, 3), 3, Rational(1, 2)});
  CHECK(P("x") == PolyQ::x());
  CHECK(P("x^3 - 2").to_string() == "x^3 - 2");
  CHECK_THROWS_AS(P("x^"), InputError);
  CHECK_THROWS_AS(P("2y"), InputError);
}

TEST_CASE("discriminant and resultant") {
  CHECK(discriminant(P("x^2-x-1")) == 5);
  CHECK(discriminant(P("x^2+1")) == -4);
  CHECK(discriminant(P("x^3-2")) == -108);
  CHECK(resultant(P("x-1"), P("x+1")) == 2);  // b evaluated at the root of a
}

TEST_CASE("factor_over_Q examples") {
  auto a = factor_over_Q(P("x^2-1"));
  REQUIRE(a.size() == 2);
  CHECK(a[0] == QFactor{P("x-1"), 1});
  CHECK(a[1] == QFactor{P("x+1"), 1});

  auto b = factor_over_Q(P("x^2-x-1"));
  REQUIRE(b.size() == 1);
  CHECK(b[0] == QFactor{P("x^2-x-1"), 1});

  auto c = factor_over_Q(P("x^2-2x+1"));
  REQUIRE(c.size() == 1);
  CHECK(c[0] == QFactor{P("x-1"), 2});

  CHECK_THROWS_AS(factor_over_Q(PolyQ{}), InputError);
}

TEST_CASE("factor_over_Q needs recombination") {
  // x^4+1 is irreducible over Q but splits mod every prime
  auto f = factor_over_Q(P("x^4+1"));
  REQUIRE(f.size() == 1);
  CHECK(f[0].factor == P("x^4+1"));
  // Swinnerton-Dyer style: (x^2-2)(x^2-3)(x^4-10x^2+1) with rational scaling
  PolyQ g = P("x^2-2") * P("x^2-3") * P("x^4-10x^2+1") * Rational(3, 7);
  auto h = factor_over_Q(g);
  REQUIRE(h.size() == 3);
  CHECK(h[0].factor == P("x^2-3"));
  CHECK(h[1].factor == P("x^2-2"));
  CHECK(h[2].factor == P("x^4-10x^2+1"));
}

TEST_CASE("factor_mod_p examples") {
  auto a = factor_mod_p(PolyFp::reduce(P("x^2-x-1"), 11));
  REQUIRE(a.size() == 2);
  CHECK(a[0].factor == PolyFp(11, {3, 1}));  // x - 8
  CHECK(a[1].factor == PolyFp(11, {7, 1}));  // x - 4
  CHECK(roots_by_search(PolyFp::reduce(P("x^2-x-1"), 11)) == std::vector<std::uint64_t>{4, 8});

  auto b = factor_mod_p(PolyFp::reduce(P("x^2-x-1"), 7));
  REQUIRE(b.size() == 1);
  CHECK(b[0].factor.degree() == 2);
  CHECK(roots_by_search(PolyFp::reduce(P("x^2-x-1"), 7)).empty());

  auto c = factor_mod_p(PolyFp::reduce(P("x^2"), 5));
  REQUIRE(c.size() == 1);
  CHECK(c[0] == FpFactor{PolyFp(5, {0, 1}), 2});

  CHECK_THROWS_AS(factor_mod_p(PolyFp(9, {1, 0, 1})), InputError);
}

TEST_CASE("factor_mod_p handles p-th powers and p = 2") {
  // (x+1)^2 (x^2+x+1) mod 2, and x^3+x = x(x+1)^2 mod 2
  auto f = factor_mod_p(PolyFp(2, {1, 0, 1}) * PolyFp(2, {1, 1, 1}));
  REQUIRE(f.size() == 2);
  CHECK(f[0] == FpFactor{PolyFp(2, {1, 1}), 2});
  CHECK(f[1] == FpFactor{PolyFp(2, {1, 1, 1}), 1});
  // (x^3 - 2)^3 mod 3 = (x - 2)^9
  PolyFp g(3, {1, 0, 0, 1});
  auto h = factor_mod_p(g * g * g);
  REQUIRE(h.size() == 1);
  CHECK(h[0].multiplicity == 9);
}

TEST_CASE("squarefree_part examples") {
  CHECK(squarefree_part(P("x-1") * P("x-1") * P("x+2")) == P("x-1") * P("x+2"));
  CHECK(squarefree_part(P("x^2-x-1")) == P("x^2-x-1"));
  CHECK(squarefree_part(P("x^2+1") * P("x^2+1") * P("x^2+1") * Rational(5)) == P("x^2+1"));
}

TEST_CASE("matrix_pow_mod examples") {
  MatQ fib{{0, 1}, {1, 1}};
  MatFp m = matrix_pow_mod(fib, 10, 1009);
  CHECK(m(0, 0) == 34);
  CHECK(m(0, 1) == 55);
  CHECK(m(1, 1) == 89);
  CHECK(matrix_pow_mod(fib, 0, 7) == MatFp::identity(7, 2));
  MatQ unip{{1, 1}, {0, 1}};
  CHECK(matrix_pow_mod(unip, 13, 13) == MatFp::identity(13, 2));
  MatQ bad{{Rational(1, 7), 0}, {0, 1}};
  CHECK_THROWS_AS(matrix_pow_mod(bad, 3, 7), BadPrimeError);
}

TEST_CASE("matrix_pow_mod agrees with repeated multiplication") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int trial = 0; trial < 10; ++trial) {
    MatQ m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = Rational(entry(rng), 1 + (trial % 3));
    const std::uint64_t p = 101;
    MatFp naive = MatFp::identity(p, 3);
    MatFp base = reduce(m, p);
    for (unsigned n = 0; n <= 64; ++n) {
      CHECK(matrix_pow_mod(m, n, p) == naive);
      naive = naive * base;
    }
  }
}

TEST_CASE("charpoly, inverse, determinant") {
  MatQ m{{2, 1}, {0, 2}};
  CHECK(m.charpoly() == P("x^2-4x+4"));
  CHECK(m.determinant() == 4);
  CHECK(*m.inverse() * m == MatQ::identity(2));
  CHECK_FALSE(MatQ{{1, 2}, {2, 4}}.inverse().has_value());
}

TEST_CASE("property: refactoring random products recovers the factors") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> coef(-4, 4);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    // product of up to three random irreducibles, total degree <= 6
    std::vector<PolyQ> parts;
    int total = 0;
    while (total < 6) {
      int deg = 1 + static_cast<int>(rng() % 3);
      if (total + deg > 6) break;
      std::vector<Rational> c;
      for (int i = 0; i < deg; ++i) c.emplace_back(coef(rng));
      c.emplace_back(1);
      PolyQ cand(std::move(c));
      if (!is_irreducible_over_Q(cand)) continue;
      parts.push_back(cand);
      total += deg;
      if (rng() % 3 == 0) break;
    }
    if (parts.empty()) continue;
    PolyQ prod = PolyQ::constant(Rational(coef(rng) == 0 ? 1 : 2, 3));
    for (const auto& q : parts) prod = prod * q;
    auto facs = factor_over_Q(prod);
    PolyQ back = PolyQ::constant(1);
    for (const auto& f : facs) {
      CHECK(is_irreducible_over_Q(f.factor));
      for (int i = 0; i < f.multiplicity; ++i) back = back * f.factor;
    }
    CHECK(back == prod.monic());
    for (const auto& q : parts) {
      bool present = std::any_of(facs.begin(), facs.end(), [&](const QFactor& f) { return f.factor == q; });
      CHECK(present);
    }
    ++checked;
  }
  CHECK(checked >= 90);
}

TEST_CASE("property: modular factor degrees sum to the degree") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> coef(-9, 9);
  auto primes = primes_between(3, 400);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> c;
    int deg = 2 + static_cast<int>(rng() % 5);
    for (int i = 0; i < deg; ++i) c.emplace_back(coef(rng));
    c.emplace_back(1);
    PolyQ f(std::move(c));
    if (discriminant(f) == 0) continue;
    std::uint64_t p = primes[rng() % primes.size()];
    if (divides(p, discriminant(f).get_num())) continue;
    PolyFp fp = PolyFp::reduce(f, p);
    auto facs = factor_mod_p(fp, trial);
    int sum = 0;
    for (const auto& x : facs) {
      CHECK(x.multiplicity == 1);
      sum += x.factor.degree();
    }
    CHECK(sum == deg);
    CHECK(product(facs, p) == fp);
    CHECK(static_cast<int>(roots_by_search(fp).size()) ==
          std::count_if(facs.begin(), facs.end(), [](const FpFactor& x) { return x.factor.degree() == 1; }));
  }
}

TEST_CASE("prime_divisors") {
  CHECK(prime_divisors(Integer(-108)) == std::vector<Integer>{2, 3});
  Integer big("1000000007");
  big *= Integer("998244353");
  big *= 12;
  CHECK(prime_divisors(big) == std::vector<Integer>{2, 3, Integer("998244353"), Integer("1000000007")});
}
