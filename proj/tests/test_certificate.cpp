#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "frobenian/certificate.hpp"
#include "frobenian/corpus.hpp"
#include "frobenian/errors.hpp"

using namespace frobenian;

namespace {

Recurrence R(const char* s) { return Recurrence::parse(s); }

bool has_source(const FrobenianCertificate& c, const std::string& source, long value) {
  for (const auto& b : c.provenance)
    if (b.source == source && b.value == value) return true;
  return false;
}

bool any_source_prime(const FrobenianCertificate& c, long value) {
  for (const auto& b : c.provenance)
    if (b.source != "order of the recurrence" && b.value == value) return true;
  return false;
}

GroupPtr group_of(const char* poly) { return GaloisGroup::compute(splitting_field(parse_poly(poly)).field); }

}  // namespace

TEST_CASE("certify fibonacci") {
  Recurrence fib = R("1,1;0,1");
  auto cert = certify(fib);
  CHECK(cert.zero_classes.empty());
  CHECK(cert.density == 0);
  CHECK(cert.bound == 5);
  CHECK(has_source(cert, "field discriminant", 5));
  CHECK(has_source(cert, "denominator of spectral pairs", 5));
  REQUIRE(cert.exceptional_primes.size() == 3);
  CHECK(cert.exceptional_primes[2].p == 5);
  CHECK(cert.exceptional_primes[2].in_zero_set);
  CHECK_FALSE(cert.exceptional_primes[0].in_zero_set);
  auto rep = verify_empirical(cert, fib, 10000);
  CHECK(rep.mismatches_above_bound.empty());
  CHECK(rep.zero_count == 1);
}

TEST_CASE("certify 2^n - 2 and 2^n") {
  auto cert = certify(R("3,-2;-1,0"));
  CHECK(cert.group->order() == 1);
  CHECK(cert.zero_classes == std::vector<int>{0});
  CHECK(cert.density == 1);

  // a_2 = 4 = 0 mod 2 although C is empty: 2 divides the norm of g = 2
  auto pow2 = certify(R("2;1"));
  CHECK(pow2.zero_classes.empty());
  CHECK(pow2.bound == 2);
  CHECK(has_source(pow2, "norm of non-zero g value", 2));
  CHECK(pow2.exceptional_primes.front().in_zero_set);
}

TEST_CASE("denominator primes appear in the provenance") {
  auto cert = certify(R("1/6;1"));
  CHECK(any_source_prime(cert, 2));
  CHECK(any_source_prime(cert, 3));
  CHECK(has_source(cert, "denominator of M", 2));
  CHECK(has_source(cert, "denominator of M", 3));
}

TEST_CASE("from_conjugacy_data examples") {
  auto gi = group_of("x^2+1");
  Recurrence r = from_conjugacy_data(gi, {1});
  auto cert = certify(r);
  auto rep = verify_empirical(cert, r, 10000);
  CHECK(rep.mismatches_above_bound.empty());
  for (std::uint64_t p : primes_between(3, 10000))
    if (Integer(static_cast<unsigned long>(p)) > cert.bound) CHECK((term_mod_p(r, p) == 0) == (p % 4 == 3));
  CHECK(cert.density == Rational(1, 2));
  CHECK(std::abs(rep.empirical_density.get_d() - 0.5) < 0.02);

  auto q = GaloisGroup::compute(NumberField::rationals());
  Recurrence one = from_conjugacy_data(q, {});
  for (long n = 0; n < 5; ++n) CHECK(term_at(one, n) == 1);

  auto g3 = group_of("x^3-2");
  int three_cycle = -1;
  for (std::size_t c = 0; c < g3->table().class_count(); ++c)
    if (g3->table().element_order(g3->table().representative(static_cast<int>(c))) == 3) three_cycle = static_cast<int>(c);
  Recurrence r3 = from_conjugacy_data(g3, {three_cycle});
  auto c3 = certify(r3);
  CHECK(c3.density == Rational(1, 3));
  CHECK(c3.zero_classes == std::vector<int>{three_cycle});
  PolyQ f = parse_poly("x^3-2");
  for (std::uint64_t p : primes_between(2, 3000)) {
    if (Integer(static_cast<unsigned long>(p)) <= c3.bound) continue;
    bool irreducible = factor_mod_p(PolyFp::reduce(f, p)).size() == 1;
    CHECK((term_mod_p(r3, p) == 0) == irreducible);
  }
}

TEST_CASE("zero sequence") {
  Recurrence z = R("1;0");
  auto cert = certify(z);
  CHECK(cert.density == 1);
  auto rep = verify_empirical(cert, z, 1000);
  CHECK(rep.empirical_density == 1);
}

TEST_CASE("soundness of B on the corpus up to 10^4") {
  for (const auto& entry : recurrence_corpus()) {
    INFO(entry.name);
    Recurrence r = entry.recurrence();
    auto cert = certify(r);
    EmpiricalReport rep;
    CHECK_NOTHROW(rep = verify_empirical(cert, r, 10000));
    CHECK(rep.mismatches_above_bound.empty());
    CHECK(rep.mismatches_below_bound.empty());
    for (const auto& e : cert.exceptional_primes) CHECK(Integer(static_cast<unsigned long>(e.p)) <= cert.bound);
  }
}

TEST_CASE("scaling changes only exceptional primes") {
  for (const auto& entry : recurrence_corpus()) {
    Recurrence r = entry.recurrence();
    auto a = certify(r);
    for (Rational c : {Rational(3), Rational(-2, 7)}) {
      auto b = certify(r.scaled(c));
      CHECK(a.zero_classes == b.zero_classes);
      CHECK(a.density == b.density);
    }
  }
}

TEST_CASE("certificate JSON is deterministic") {
  Recurrence r = R("0,0,2;3,0,0");
  std::string a = to_json(certify(r)).dump();
  std::string b = to_json(certify(r)).dump();
  CHECK(a == b);
  auto j = nlohmann::json::parse(a);
  CHECK(j["density"] == "1");  // a_p = Tr(cbrt(2)^p) = 0 for p != 3
  CHECK(j["provenance"].size() > 0);
}
