#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>
#include <map>

#include "frobenian/errors.hpp"
#include "frobenian/number_field.hpp"

using namespace frobenian;

namespace {

PolyQ P(const char* s) { return parse_poly(s); }

// Brute-force root count, independent of the factorization code.
int roots_by_search(const PolyQ& f, std::uint64_t p) {
  PolyFp fp = PolyFp::reduce(f, p);
  int count = 0;
  for (std::uint64_t x = 0; x < p; ++x) count += fp(x) == 0 ? 1 : 0;
  return count;
}

long legendre5(std::uint64_t p) { return pow_mod(p % 5, 2, 5) == 1 ? 1 : -1; }

}  // namespace

TEST_CASE("splitting_field examples") {
  auto q5 = splitting_field(P("x^2-5"));
  CHECK(q5.field->degree() == 2);
  REQUIRE(q5.roots.size() == 2);
  for (const auto& r : q5.roots) CHECK(r * r == NFElement::from_rational(q5.field, 5));
  CHECK(q5.roots[0] == -q5.roots[1]);

  auto cube = splitting_field(P("x^3-2"));
  CHECK(cube.field->degree() == 6);
  REQUIRE(cube.roots.size() == 3);
  for (const auto& r : cube.roots) CHECK(r.pow(3) == NFElement::from_rational(cube.field, 2));

  auto lin = splitting_field(P("x-3"));
  CHECK(lin.field->degree() == 1);
  REQUIRE(lin.roots.size() == 1);
  CHECK(lin.roots[0].rational_value() == 3);
}

TEST_CASE("splitting_field of x^4-2 has degree 8") {
  auto s = splitting_field(P("x^4-2"));
  CHECK(s.field->degree() == 8);
  CHECK(s.roots.size() == 4);
  auto g = GaloisGroup::compute(s.field);
  CHECK(g->order() == 8);
  CHECK(g->table().class_count() == 5);  // dihedral of order 8
}

TEST_CASE("splitting_field respects the degree cap") {
  CHECK_THROWS_AS(splitting_field(P("x^3-2"), 4), ScaleLimitError);
}

TEST_CASE("factor_over_field examples") {
  FieldPtr q5 = NumberField::create(P("x^2-5"));
  auto a = factor_over_field(P("x^2-5"), q5);
  REQUIRE(a.size() == 2);
  CHECK(a[0].factor.degree() == 1);
  CHECK(a[1].factor.degree() == 1);

  FieldPtr cbrt = NumberField::create(P("x^3-2"));
  auto b = factor_over_field(P("x^3-2"), cbrt);
  REQUIRE(b.size() == 2);
  CHECK(b[0].factor.degree() == 1);
  CHECK(b[1].factor.degree() == 2);
  NFElement t = NFElement::generator(cbrt);
  // x^2 + t x + t^2
  CHECK(b[1].factor.coeffs()[0] == t * t);
  CHECK(b[1].factor.coeffs()[1] == t);

  auto c = factor_over_field(P("x^2+1"), q5);
  REQUIRE(c.size() == 1);
  CHECK(c[0].factor.degree() == 2);

  auto d = factor_over_field(P("x^2-5") * P("x^2-5"), q5);
  REQUIRE(d.size() == 2);
  CHECK(d[0].multiplicity == 2);
}

TEST_CASE("element arithmetic") {
  FieldPtr k = NumberField::create(P("x^3-2"));
  NFElement t = NFElement::generator(k);
  NFElement a = t * t + t * Rational(3) + NFElement::from_rational(k, 1);
  CHECK(a * a.inverse() == NFElement::from_rational(k, 1));
  CHECK(t.norm() == 2);
  CHECK(t.trace() == 0);
  CHECK(t.min_poly() == P("x^3-2"));
  CHECK(NumberField::create(P("x^3-2"))->discriminant() == -108);
  CHECK_THROWS_AS(NumberField::create(P("x^2-4")), InputError);
}

TEST_CASE("galois_group examples") {
  auto q5 = GaloisGroup::compute(NumberField::create(P("x^2-5")));
  CHECK(q5->order() == 2);
  CHECK(q5->table().class_count() == 2);

  auto s3 = GaloisGroup::compute(splitting_field(P("x^3-2")).field);
  CHECK(s3->order() == 6);
  std::multiset<std::size_t> sizes;
  for (const auto& c : s3->table().classes()) sizes.insert(c.size());
  CHECK(sizes == std::multiset<std::size_t>{1, 2, 3});

  auto q = GaloisGroup::compute(NumberField::rationals());
  CHECK(q->order() == 1);

  CHECK_THROWS_AS(GaloisGroup::compute(NumberField::create(P("x^3-2"))), InvariantViolation);
}

TEST_CASE("property: composition table matches composition on theta") {
  for (const char* f : {"x^3-2", "x^4-2", "x^2+1"}) {
    auto g = GaloisGroup::compute(splitting_field(P(f)).field);
    const int n = static_cast<int>(g->order());
    NFElement theta = NFElement::generator(g->field());
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        NFElement direct = g->apply(i, g->apply(j, theta));
        CHECK(direct == g->element(g->table().mul(i, j)).image);
      }
    }
    CHECK(g->element(0).image == theta);
  }
}

TEST_CASE("prime_local_data examples for Q(sqrt5)") {
  auto g = GaloisGroup::compute(NumberField::create(P("x^2-5")));
  auto split = prime_local_data(*g, 11);
  CHECK_FALSE(split.ramified);
  CHECK(split.frobenius_index == 0);
  CHECK(split.residue_degree == 1);
  auto inert = prime_local_data(*g, 7);
  CHECK_FALSE(inert.ramified);
  CHECK(inert.frobenius_index == 1);
  CHECK(inert.residue_degree == 2);
  CHECK(prime_local_data(*g, 5).ramified);
  CHECK_THROWS_AS(frobenius_class(*g, 5), BadPrimeError);
}

TEST_CASE("frobenius_class examples for x^3-2") {
  auto g = GaloisGroup::compute(splitting_field(P("x^3-2")).field);
  const auto& t = g->table();
  auto order_of_class = [&](int cls) { return t.element_order(t.representative(cls)); };
  CHECK(order_of_class(frobenius_class(*g, 31)) == 1);
  CHECK(order_of_class(frobenius_class(*g, 5)) == 2);
  CHECK(order_of_class(frobenius_class(*g, 7)) == 3);
}

TEST_CASE("property: Frobenius order, residue degree and factor independence") {
  for (const char* f : {"x^3-2", "x^2-5", "x^4-2"}) {
    auto s = splitting_field(P(f));
    auto g = GaloisGroup::compute(s.field);
    int tested = 0;
    for (std::uint64_t p : primes_between(3, 2000)) {
      if (tested == 20) break;
      auto d = prime_local_data(*g, p);
      if (d.ramified) continue;
      ++tested;
      CHECK(g->table().element_order(d.frobenius_index) == d.residue_degree);
      int cls = g->table().class_of(d.frobenius_index);
      for (std::size_t k = 1; k < d.factors.size(); ++k) {
        auto other = prime_local_data(*g, p, k);
        CHECK(g->table().class_of(other.frobenius_index) == cls);
      }
      // independent check: number of roots of f mod p equals the number of
      // roots fixed by Frobenius
      int fixed = 0;
      for (const auto& r : s.roots) fixed += g->apply(d.frobenius_index, r) == r ? 1 : 0;
      CHECK(fixed == roots_by_search(P(f), p));
    }
    CHECK(tested == 20);
  }
}

TEST_CASE("Q(sqrt5) Frobenius follows the Legendre symbol") {
  auto g = GaloisGroup::compute(NumberField::create(P("x^2-5")));
  for (std::uint64_t p : primes_between(7, 3000)) {
    CHECK((frobenius_class(*g, p) == 0) == (legendre5(p) == 1));
  }
}

TEST_CASE("Chebotarev statistics for x^3-2 up to 1e5") {
  auto g = GaloisGroup::compute(splitting_field(P("x^3-2")).field);
  const auto& t = g->table();
  std::map<int, int> by_order;
  int total = 0;
  for (std::uint64_t p : primes_up_to(100000)) {
    auto d = prime_local_data(*g, p);
    if (d.ramified) continue;
    ++by_order[t.element_order(d.frobenius_index)];
    ++total;
  }
  CHECK(std::abs(by_order[1] / double(total) - 1.0 / 6) < 0.02);
  CHECK(std::abs(by_order[2] / double(total) - 1.0 / 2) < 0.02);
  CHECK(std::abs(by_order[3] / double(total) - 1.0 / 3) < 0.02);
}

TEST_CASE("normal_basis_generator") {
  for (const char* f : {"x^2-5", "x^2+1", "x^3-2"}) {
    auto g = GaloisGroup::compute(splitting_field(P(f)).field);
    NFElement t0 = normal_basis_generator(*g);
    const std::size_t n = g->order();
    MatQ m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      NFElement c = g->apply(static_cast<int>(i), t0);
      for (std::size_t j = 0; j < n; ++j) m(i, j) = c.coord(j);
    }
    CHECK(m.determinant() != 0);
  }
  auto q = GaloisGroup::compute(NumberField::rationals());
  CHECK(normal_basis_generator(*q).rational_value() == 1);
  // (1 + sqrt5)/2 is a valid normal basis generator: det = -sqrt5 != 0
  FieldPtr q5 = NumberField::create(P("x^2-5"));
  NFElement half_golden(q5, {Rational(1, 2), Rational(1, 2)});
  NFElement conj(q5, {Rational(1, 2), Rational(-1, 2)});
  CHECK(MatQ{{half_golden.coord(0), half_golden.coord(1)}, {conj.coord(0), conj.coord(1)}}.determinant() != 0);
}
