#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "frobenian/corpus.hpp"
#include "frobenian/errors.hpp"
#include "frobenian/recurrence.hpp"

using namespace frobenian;

namespace {

GroupPtr group_of(const char* poly) { return GaloisGroup::compute(splitting_field(parse_poly(poly)).field); }

// Random class function: symmetrize a random element over each centralizer.
ClassFunction random_class_function(const GroupPtr& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-4, 4);
  const auto& table = g->table();
  std::vector<NFElement> values;
  for (std::size_t c = 0; c < table.class_count(); ++c) {
    std::vector<Rational> coords(static_cast<std::size_t>(g->field()->degree()));
    for (auto& x : coords) x = Rational(d(rng), 1 + (d(rng) + 4) % 3);
    NFElement x(g->field(), coords);
    NFElement sum = NFElement::from_rational(g->field(), 0);
    for (int z : table.centralizer(table.representative(static_cast<int>(c)))) sum += g->apply(z, x);
    values.push_back(sum);
  }
  return ClassFunction(g, values);
}

std::vector<std::uint64_t> good_primes(const ClassFunction& g, const Recurrence& r, std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p : primes_up_to(limit)) {
    if (divides(p, r.denominator_lcm()) || divides(p, g.denominator_lcm())) continue;
    if (divides(p, g.field()->discriminant().get_num())) continue;
    if (p <= static_cast<std::uint64_t>(r.order())) continue;
    out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_CASE("construction checks centralizer fixedness") {
  auto g = group_of("x^2-5");
  NFElement sqrt5 = NFElement::generator(g->field());
  CHECK_THROWS_AS(ClassFunction(g, {sqrt5, NFElement::from_rational(g->field(), 0)}), InputError);
  CHECK_THROWS_AS(ClassFunction(g, {NFElement::from_rational(g->field(), 1)}), InputError);
  CHECK_NOTHROW(ClassFunction(g, {NFElement::from_rational(g->field(), 0), NFElement::from_rational(g->field(), 3)}));
}

TEST_CASE("cf_add and cf_mul examples") {
  auto fib = to_class_function(Recurrence::parse("1,1;0,1"));
  auto zero = ClassFunction::constant(fib.group(), 0);
  CHECK((fib + zero).class_values() == fib.class_values());
  auto sq = fib * fib;
  for (const auto& v : sq.class_values()) CHECK(v.rational_value() == 1);
  auto a = ClassFunction::indicator(fib.group(), {0});
  auto b = ClassFunction::indicator(fib.group(), {1});
  auto ab = a * b;
  for (const auto& v : ab.class_values()) CHECK(v.is_zero());
  auto other = ClassFunction::constant(group_of("x^2+1"), 1);
  CHECK_THROWS_AS(fib + other, InputError);
}

TEST_CASE("eval_at_frobenius examples") {
  auto fib = to_class_function(Recurrence::parse("1,1;0,1"));
  CHECK(eval_at_frobenius(fib, 7) == 6u);
  CHECK(eval_at_frobenius(fib, 11) == 1u);
  CHECK_FALSE(eval_at_frobenius(fib, 5).has_value());
  auto c = ClassFunction::constant(fib.group(), Rational(7, 3));
  CHECK(eval_at_frobenius(c, 11) == reduce_mod(Rational(7, 3), 11));
  CHECK_FALSE(eval_at_frobenius(c, 3).has_value());

  auto gi = group_of("x^2+1");
  auto conj = ClassFunction::indicator(gi, {1});
  CHECK(eval_at_frobenius(conj, 7) == 1u);
  CHECK(eval_at_frobenius(conj, 13) == 0u);
}

TEST_CASE("annihilator examples") {
  auto fib = to_class_function(Recurrence::parse("1,1;0,1"));
  CHECK(annihilator(fib) == parse_poly("x^2-1"));
  auto two = to_class_function(Recurrence::parse("2;1"));
  CHECK(annihilator(two) == parse_poly("x-2"));
  auto g = group_of("x^2-5");
  ClassFunction h(g, {NFElement::from_rational(g->field(), 0), NFElement::from_rational(g->field(), 3)});
  CHECK(annihilator(h) == parse_poly("x^2-3x"));
}

TEST_CASE("equivariance, g(1) rational, annihilator minimality") {
  std::mt19937_64 rng(17);
  for (const char* f : {"x^2-5", "x^3-2", "x^3-3x-1", "x^4-2", "x^2+1"}) {
    auto g = group_of(f);
    const auto& table = g->table();
    for (int trial = 0; trial < 3; ++trial) {
      auto h = random_class_function(g, rng);
      auto vals = h.all_values();
      for (std::size_t s = 0; s < g->order(); ++s)
        for (std::size_t t = 0; t < g->order(); ++t)
          CHECK(vals[static_cast<std::size_t>(table.conjugate(static_cast<int>(s), static_cast<int>(t)))] ==
                g->apply(static_cast<int>(s), vals[t]));
      CHECK(h.at(0).is_rational());
      PolyQ a = annihilator(h);
      PolyQ prod = PolyQ::constant(1);
      for (const auto& v : h.class_values()) prod = prod * v.min_poly();
      CHECK((prod % a).is_zero());
      for (const auto& v : vals) {
        // a(v) = 0 in L
        NFElement acc = NFElement::from_rational(g->field(), 0);
        for (int i = a.degree(); i >= 0; --i) acc = acc * v + NFElement::from_rational(g->field(), a.coeff(i));
        CHECK(acc.is_zero());
      }
      CHECK(a(h.at(0).rational_value()) == 0);
      CHECK_NOTHROW(ClassFunction::from_elements(g, vals));
    }
  }
}

TEST_CASE("eval_at_frobenius is independent of the prime above p") {
  std::mt19937_64 rng(5);
  for (const char* f : {"x^3-2", "x^2-5", "x^3-3x-1"}) {
    auto g = group_of(f);
    auto h = random_class_function(g, rng);
    int tested = 0;
    for (std::uint64_t p : primes_between(7, 2000)) {
      auto local = prime_local_data(*g, p);
      if (local.ramified || local.factors.size() < 2) continue;
      CHECK(eval_at_frobenius(h, local) == eval_at_frobenius(h, prime_local_data(*g, p, local.factors.size() - 1)));
      if (++tested == 20) break;
    }
    CHECK(tested == 20);
  }
}

TEST_CASE("to_recurrence examples and round trips") {
  auto triv = GaloisGroup::compute(NumberField::rationals());
  Recurrence two = to_recurrence(ClassFunction::constant(triv, 2));
  CHECK(two.order() == 1);
  for (long n = 0; n < 5; ++n) CHECK(term_at(two, n) == 2);

  auto fib = to_class_function(Recurrence::parse("1,1;0,1"));
  Recurrence rf = to_recurrence(fib);
  CHECK(rf.order() == 2);
  for (std::uint64_t p : primes_between(7, 1000)) {
    if (divides(p, rf.denominator_lcm())) continue;
    CHECK(term_mod_p(rf, p) == *eval_at_frobenius(fib, p));
  }

  auto gi = group_of("x^2+1");
  Recurrence ri = to_recurrence(ClassFunction::indicator(gi, {1}));
  for (std::uint64_t p : primes_between(3, 1000)) {
    if (divides(p, ri.denominator_lcm())) continue;
    CHECK(term_mod_p(ri, p) == (p % 4 == 3 ? 1u : 0u));
  }
}

TEST_CASE("round trip preserves residues for random class functions") {
  std::mt19937_64 rng(99);
  for (const char* f : {"x^2-5", "x^3-2", "x^3-3x-1", "x^2+1"}) {
    auto g = group_of(f);
    auto h = random_class_function(g, rng);
    Recurrence r = to_recurrence(h);
    auto back = to_class_function(r);
    for (std::uint64_t p : good_primes(h, r, 1000)) {
      auto v = eval_at_frobenius(h, p);
      auto w = eval_at_frobenius(back, p);
      if (!v || !w) continue;
      CHECK(term_mod_p(r, p) == *v);
      CHECK(*w == *v);
    }
  }
}

TEST_CASE("to_recurrence of to_class_function preserves residues") {
  for (const auto& entry : recurrence_corpus()) {
    INFO(entry.name);
    Recurrence r = entry.recurrence();
    auto g = to_class_function(r);
    Recurrence r2 = to_recurrence(g);
    for (std::uint64_t p : good_primes(g, r, 1000)) {
      if (divides(p, r2.denominator_lcm())) continue;
      auto v = eval_at_frobenius(g, p);
      if (!v) continue;
      CHECK(term_mod_p(r2, p) == *v);
    }
  }
}
