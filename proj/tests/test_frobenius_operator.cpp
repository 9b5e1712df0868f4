#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "frobenian/errors.hpp"
#include "frobenian/frobenius_operator.hpp"
#include "frobenian/recurrence.hpp"

using namespace frobenian;

namespace {

FieldPtr F(const char* poly) { return NumberField::create(parse_poly(poly)); }
GroupPtr group_of(const char* poly) { return GaloisGroup::compute(splitting_field(parse_poly(poly)).field); }

std::vector<std::uint64_t> mul_residues(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                                        const PolyFp& f) {
  PolyFp pa(f.modulus(), a), pb(f.modulus(), b);
  PolyFp prod = mul_mod(pa, pb, f);
  std::vector<std::uint64_t> out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = prod.coeff(static_cast<int>(i));
  return out;
}

}  // namespace

TEST_CASE("frobenius_matrix examples on Q(sqrt5)") {
  auto q5 = F("x^2-5");
  auto m11 = frobenius_matrix(q5, 11);
  CHECK(m11.m == MatFp{11, 2, {1, 0, 0, 1}});
  auto m7 = frobenius_matrix(q5, 7);
  CHECK(m7.m == MatFp{7, 2, {1, 0, 0, 6}});
  auto m5 = frobenius_matrix(q5, 5);
  CHECK(m5.m == MatFp{5, 2, {1, 0, 0, 0}});
  CHECK_THROWS_AS(frobenius_matrix(F("x^2-1/3"), 3), BadPrimeError);
}

TEST_CASE("entry_sequence examples") {
  auto q5 = F("x^2-5");
  CHECK(entry_sequence(q5, 1, 1, {7, 11, 13}) == std::vector<std::uint64_t>{6, 1, 12});
  CHECK(entry_sequence(q5, 0, 0, {7, 11, 13, 101}) == std::vector<std::uint64_t>{1, 1, 1, 1});
  CHECK(entry_sequence(q5, 0, 1, {11}) == std::vector<std::uint64_t>{0});
  CHECK_THROWS_AS(entry_sequence(q5, 2, 0, {7}), InputError);
}

TEST_CASE("trace_form_class_function examples") {
  auto g5 = GaloisGroup::compute(F("x^2-5"));
  auto field = g5->field();
  auto one = NFElement::from_rational(field, 1);
  auto s5 = NFElement::generator(field);
  auto c = trace_form_class_function(g5, one, one);
  for (const auto& v : c.class_values()) CHECK(v.rational_value() == 2);
  auto t = trace_form_class_function(g5, s5, s5);
  CHECK(t.class_value(0).rational_value() == 10);
  CHECK(t.class_value(1).rational_value() == -10);
  auto z = trace_form_class_function(g5, NFElement::from_rational(field, 0), s5);
  for (const auto& v : z.class_values()) CHECK(v.is_zero());
}

TEST_CASE("trace form class functions are equivariant in a non-abelian group") {
  auto g = group_of("x^3-2");
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Rational> a(6), b(6);
    for (auto& x : a) x = d(rng);
    for (auto& x : b) x = d(rng);
    CHECK_NOTHROW(trace_form_class_function(g, NFElement(g->field(), a), NFElement(g->field(), b)));
  }
}

TEST_CASE("multiplicativity, identity column and order") {
  std::mt19937_64 rng(11);
  for (const char* poly : {"x^2-5", "x^3-2", "x^3-3x-1"}) {
    auto group = group_of(poly);
    auto field = group->field();
    const std::size_t n = static_cast<std::size_t>(field->degree());
    for (std::uint64_t p : primes_between(3, 1000)) {
      auto local = prime_local_data(*group, p);
      auto fm = frobenius_matrix(field, p);
      CHECK(fm.entry(0, 0) == 1);
      for (std::size_t i = 1; i < n; ++i) CHECK(fm.entry(i, 0) == 0);
      if (local.ramified) continue;
      CHECK(fm.order() == local.residue_degree);
      CHECK(fm.order() == group->table().element_order(local.frobenius_index));
      if (p > 200) continue;
      PolyFp f = PolyFp::reduce(field->min_poly(), p);
      std::uniform_int_distribution<std::uint64_t> d(0, p - 1);
      for (int k = 0; k < 50; ++k) {
        std::vector<std::uint64_t> u(n), v(n);
        for (auto& x : u) x = d(rng);
        for (auto& x : v) x = d(rng);
        CHECK(fm.apply(mul_residues(u, v, f)) == mul_residues(fm.apply(u), fm.apply(v), f));
      }
    }
  }
}

TEST_CASE("span_check examples") {
  auto fib = to_class_function(Recurrence::parse("1,1;0,1"));
  auto rep = span_check(fib, primes_up_to(1000));
  CHECK(rep.ok());
  CHECK(rep.primes_checked > 160);

  auto q5 = GaloisGroup::compute(F("x^2-5"));
  auto legendre = ClassFunction::from_elements(
      q5, {NFElement::from_rational(q5->field(), 1), NFElement::from_rational(q5->field(), -1)});
  auto rep5 = span_check(legendre, primes_up_to(1000));
  CHECK(rep5.ok());

  auto q = GaloisGroup::compute(NumberField::rationals());
  auto one = ClassFunction::constant(q, 1);
  auto rq = span_check(one, primes_up_to(100));
  CHECK(rq.ok());
  CHECK(rq.coefficients == std::vector<Rational>{1});
  CHECK(entry_sequence(q->field(), 0, 0, {2, 3, 5}) == std::vector<std::uint64_t>{1, 1, 1});
}

TEST_CASE("span_check on the splitting field of x^3-2") {
  auto g = group_of("x^3-2");
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> d(-2, 2);
  std::vector<Rational> a(6), b(6);
  for (auto& x : a) x = d(rng);
  for (auto& x : b) x = d(rng);
  auto h = trace_form_class_function(g, NFElement(g->field(), a), NFElement(g->field(), b));
  auto rep = span_check(h, primes_up_to(1000));
  CHECK(rep.ok());
  CHECK(rep.primes_checked > 150);
}
