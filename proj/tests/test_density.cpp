#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "frobenian/density.hpp"
#include "frobenian/errors.hpp"

using namespace frobenian;

namespace {

struct Setup {
  PolyQ f;
  GroupPtr group;
  std::vector<NFElement> roots;
};

Setup setup(const char* poly) {
  PolyQ f = parse_poly(poly);
  auto split = splitting_field(f);
  return {f, GaloisGroup::compute(split.field), split.roots};
}

int class_with_order(const GaloisGroup& g, int order) {
  for (std::size_t c = 0; c < g.table().class_count(); ++c)
    if (g.table().element_order(g.table().representative(static_cast<int>(c))) == order) return static_cast<int>(c);
  return -1;
}

NFElement eval(const PolyQ& f, const NFElement& x) {
  NFElement acc = NFElement::from_rational(x.field(), 0);
  for (int i = f.degree(); i >= 0; --i) acc = acc * x + NFElement::from_rational(x.field(), f.coeff(i));
  return acc;
}

std::vector<int> zero_set(const PolyQ& f, const ClassFunction& g) {
  std::vector<int> out;
  for (std::size_t s = 0; s < g.group()->order(); ++s)
    if (eval(f, g.at(static_cast<int>(s))).is_zero()) out.push_back(static_cast<int>(s));
  return out;
}

}  // namespace

TEST_CASE("s1 and s2 examples") {
  auto c = setup("x^3-2");
  auto s1 = s1_set(*c.group, c.roots);
  auto s2 = s2_set(*c.group, c.roots);
  CHECK(s1.size() == 4);
  CHECK(s2.size() == 3);
  for (int s : s2) CHECK(c.group->table().element_order(s) == 2);

  auto i = setup("x^2+1");
  CHECK(s1_set(*i.group, i.roots) == std::vector<int>{0});
  CHECK(s2_set(*i.group, i.roots).empty());

  auto q = setup("x^3-3x^2+x-3");  // (x-3)(x^2+1)
  CHECK(s1_set(*q.group, q.roots).size() == q.group->order());
  CHECK(s2_set(*q.group, q.roots).size() == q.group->order());
}

TEST_CASE("extremal class function examples") {
  auto c = setup("x^3-2");
  auto g = extremal_class_function(c.group, c.roots);
  int transposition = class_with_order(*c.group, 2);
  CHECK(g.class_value(0).is_zero());
  CHECK(g.class_value(class_with_order(*c.group, 3)).is_zero());
  CHECK(g.class_value(transposition).min_poly() == parse_poly("x^3-2"));
  CHECK(zero_set(c.f, g) == s2_set(*c.group, c.roots));

  auto i = setup("x^2+1");
  auto gi = extremal_class_function(i.group, i.roots);
  for (const auto& v : gi.class_values()) CHECK(v.is_zero());
  CHECK(zero_set(i.f, gi).empty());

  auto l = setup("x-3");
  auto gl = extremal_class_function(l.group, l.roots);
  CHECK(gl.class_value(0).rational_value() == 3);
}

TEST_CASE("S2 within S1, equality and containment cases on a corpus of polynomials") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> d(-2, 2);
  for (const char* poly : {"x^3-2", "x^2+1", "x^2-5", "x^3-3x-1", "x^4-2", "x^3-x-1", "x^4-5x^2+6", "x-3"}) {
    INFO(poly);
    auto c = setup(poly);
    auto s1 = s1_set(*c.group, c.roots);
    auto s2 = s2_set(*c.group, c.roots);
    for (int s : s2) CHECK(std::binary_search(s1.begin(), s1.end(), s));
    CHECK(zero_set(c.f, extremal_class_function(c.group, c.roots)) == s2);
    // random class functions with values among roots or random elements
    const auto& table = c.group->table();
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<NFElement> values;
      for (std::size_t cls = 0; cls < table.class_count(); ++cls) {
        const auto& cent = table.centralizer(table.representative(static_cast<int>(cls)));
        NFElement x;
        if (trial % 2 == 0) {
          x = c.roots[static_cast<std::size_t>(trial / 2) % c.roots.size()];
        } else {
          std::vector<Rational> coords(static_cast<std::size_t>(c.group->field()->degree()));
          for (auto& q : coords) q = d(rng);
          x = NFElement(c.group->field(), coords);
        }
        // average over the centralizer; non-fixed choices collapse
        NFElement sum = NFElement::from_rational(c.group->field(), 0);
        for (int z : cent) sum += c.group->apply(z, x);
        values.push_back(sum * Rational(1, static_cast<long>(cent.size())));
      }
      ClassFunction g(c.group, values);
      auto zs = zero_set(c.f, g);
      for (int s : zs) CHECK(std::binary_search(s2.begin(), s2.end(), s));
    }
  }
}

TEST_CASE("density_report examples") {
  auto r = density_report(parse_poly("x^3-2"), 20000);
  CHECK(r.s1_density == Rational(2, 3));
  CHECK(r.s2_density == Rational(1, 2));
  REQUIRE(r.strict_gap_witness.has_value());
  CHECK(*r.strict_gap_witness == 0);
  CHECK(std::abs(r.empirical_root_density.get_d() - 2.0 / 3) < 0.02);
  CHECK(std::abs(r.empirical_zero_density.get_d() - 0.5) < 0.02);

  auto i = density_report(parse_poly("x^2+1"), 20000);
  CHECK(i.s1_density == Rational(1, 2));
  CHECK(i.s2_density == 0);
  CHECK(i.empirical_zero_density == 0);
  CHECK(std::abs(i.empirical_root_density.get_d() - 0.5) < 0.02);

  auto l = density_report(parse_poly("x-3"), 1000);
  CHECK(l.s1_density == 1);
  CHECK(l.s2_density == 1);
  CHECK(l.empirical_root_density == 1);
  CHECK(l.empirical_zero_density == 1);
  CHECK_FALSE(l.strict_gap_witness.has_value());
}

TEST_CASE("wreath_check examples") {
  auto c2 = wreath_check(FiniteGroupTable::named("C2"), 3);
  CHECK(c2.size == 128);
  CHECK(c2.bound == 64);
  CHECK(c2.count >= 64);
  CHECK(c2.pass);

  auto triv = wreath_check(FiniteGroupTable::named("C1"), 4);
  CHECK(triv.count == triv.size);
  CHECK(triv.pass);

  auto s3 = wreath_check(FiniteGroupTable::named("S3"), 1);
  CHECK(s3.size == 384);
  CHECK(s3.bound < 0);
  CHECK(s3.pass);
  CHECK(s3.pair_mismatches == 0);
  CHECK(s3.sum_mismatches == 0);

  CHECK_THROWS_AS(wreath_check(FiniteGroupTable::named("S3"), 4, 1000000), ScaleLimitError);
}

TEST_CASE("wreath_check bounds for the listed cases, both enumeration methods") {
  for (auto [name, r] : std::vector<std::pair<const char*, int>>{{"C2", 1}, {"C2", 2}, {"C2", 3}, {"C3", 1}, {"C3", 2}, {"S3", 1}}) {
    INFO(name << " r=" << r);
    auto rep = wreath_check(FiniteGroupTable::named(name), r);
    CHECK(rep.method == "multiplication");
    CHECK(rep.pass);
    CHECK(Rational(Integer(static_cast<unsigned long>(rep.count))) >= rep.bound);
    CHECK(Integer(static_cast<unsigned long>(rep.failures)) <= rep.failure_bound);
  }
  // larger instance exercises the coboundary path and its sampled cross-check
  auto big = wreath_check(FiniteGroupTable::named("C3"), 4);
  CHECK(big.method == "coboundary");
  CHECK(big.pass);
  CHECK(big.pair_checks > 0);
}
