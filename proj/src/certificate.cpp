#include "frobenian/certificate.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "frobenian/errors.hpp"

namespace frobenian {

namespace {

void add_primes(std::map<std::string, std::set<Integer>>& out, const std::string& source, const Integer& n) {
  if (n == 0) return;
  Integer a = abs(n);
  if (a == 1) return;
  for (const auto& q : prime_divisors(a)) out[source].insert(q);
}

void add_denominator(std::map<std::string, std::set<Integer>>& out, const std::string& source, const Integer& d) {
  add_primes(out, source, d);
}

Integer lcm_of(const std::vector<Rational>& xs) {
  Integer l = 1;
  for (const auto& x : xs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

bool decide_directly(const Recurrence& r, std::uint64_t p, bool& undefined) {
  undefined = divides(p, r.denominator_lcm());
  if (undefined) return false;
  return term_mod_p(r, p) == 0;
}

}  // namespace

std::pair<Integer, std::vector<BoundContribution>> bad_prime_bound(const Recurrence& r, const SpectralData& s,
                                                                   const ClassFunction& g) {
  std::map<std::string, std::set<Integer>> primes;
  add_denominator(primes, "denominator of M", lcm_of(r.coeffs()));
  add_denominator(primes, "denominator of u", lcm_of(r.u()));
  add_denominator(primes, "denominator of v", lcm_of(r.v()));
  add_denominator(primes, "denominator of M_ss", s.jc.ss.denominator_lcm());
  add_denominator(primes, "denominator of M_u", s.jc.u.denominator_lcm());
  const PolyQ& m = s.field()->min_poly();
  add_denominator(primes, "denominator of field polynomial", m.denominator_lcm());
  const Rational& disc = s.field()->discriminant();
  add_primes(primes, "field discriminant", disc.get_num());
  add_primes(primes, "field discriminant", disc.get_den());
  for (const auto& sigma : s.group->elements())
    add_denominator(primes, "denominator of automorphisms", sigma.image.denominator_lcm());
  for (const auto& pair : s.pairs) {
    add_denominator(primes, "denominator of spectral pairs", pair.b.denominator_lcm());
    add_denominator(primes, "denominator of spectral pairs", pair.lambda.denominator_lcm());
  }
  for (const auto& v : g.class_values()) {
    add_denominator(primes, "denominator of g", v.denominator_lcm());
    if (!v.is_zero()) {
      Rational nv = v.norm();
      add_primes(primes, "norm of non-zero g value", nv.get_num());
    }
  }

  std::vector<BoundContribution> provenance;
  Integer bound = r.order();
  provenance.push_back({"order of the recurrence", Integer(r.order())});
  for (const auto& [source, set] : primes)
    for (const auto& q : set) {
      provenance.push_back({source, q});
      if (q > bound) bound = q;
    }
  return {bound, provenance};
}

bool FrobenianCertificate::predicts_zero(std::uint64_t p) const {
  auto it = std::lower_bound(exceptional_primes.begin(), exceptional_primes.end(), p,
                             [](const ExceptionalPrime& e, std::uint64_t q) { return e.p < q; });
  if (it != exceptional_primes.end() && it->p == p) return it->in_zero_set;
  int cls = frobenius_class(*group, p);
  return std::binary_search(zero_classes.begin(), zero_classes.end(), cls);
}

FrobenianCertificate certify(const Recurrence& r) {
  FrobenianCertificate cert;
  SpectralData s = spectral_data(r);
  cert.group = s.group;
  cert.g = to_class_function(s);
  cert.zero_classes = cert.g.zero_classes();
  const auto& table = cert.group->table();
  std::size_t members = 0;
  for (int c : cert.zero_classes) members += table.classes()[static_cast<std::size_t>(c)].size();
  cert.density = Rational(static_cast<long>(members), static_cast<long>(cert.group->order()));
  cert.density.canonicalize();
  std::tie(cert.bound, cert.provenance) = bad_prime_bound(r, s, cert.g);

  std::set<std::uint64_t> direct;
  const Integer sweep_to = std::min(cert.bound, Integer(static_cast<unsigned long>(kDirectSweepLimit)));
  for (std::uint64_t p : primes_up_to(sweep_to.get_ui())) direct.insert(p);
  for (const auto& c : cert.provenance) {
    if (!is_prime(c.value)) continue;
    if (!c.value.fits_ulong_p()) throw ScaleLimitError("exceptional prime " + to_string(c.value) + " exceeds 64 bits");
    direct.insert(c.value.get_ui());
  }
  for (std::uint64_t p : direct) {
    ExceptionalPrime e{p, false, false};
    e.in_zero_set = decide_directly(r, p, e.undefined);
    cert.exceptional_primes.push_back(e);
  }
  return cert;
}

Recurrence from_conjugacy_data(const GroupPtr& group, const std::vector<int>& classes) {
  ClassFunction chi = ClassFunction::indicator(group, classes);
  ClassFunction g = cf_add(ClassFunction::constant(group, 1), cf_scale(chi, -1));
  return to_recurrence(g);
}

EmpiricalReport verify_empirical(const FrobenianCertificate& cert, const Recurrence& r, std::uint64_t limit) {
  EmpiricalReport rep;
  rep.limit = limit;
  rep.certificate_density = cert.density;
  for (std::uint64_t p : primes_up_to(limit)) {
    bool undefined = false;
    bool actual = decide_directly(r, p, undefined);
    bool predicted = cert.predicts_zero(p);
    ++rep.primes_checked;
    if (actual) ++rep.zero_count;
    if (actual != predicted) {
      if (Integer(static_cast<unsigned long>(p)) > cert.bound)
        rep.mismatches_above_bound.push_back(p);
      else
        rep.mismatches_below_bound.push_back(p);
    }
  }
  if (rep.primes_checked > 0) {
    rep.empirical_density = Rational(static_cast<long>(rep.zero_count), static_cast<long>(rep.primes_checked));
    rep.empirical_density.canonicalize();
  }
  if (!rep.mismatches_above_bound.empty())
    throw InvariantViolation("certificate mismatch above B at p = " + std::to_string(rep.mismatches_above_bound.front()));
  return rep;
}

// ----------------------------------------------------------------------- JSON

nlohmann::ordered_json coords_json(const NFElement& x) {
  auto a = nlohmann::ordered_json::array();
  for (const auto& c : x.coords()) a.push_back(to_string(c));
  return a;
}

nlohmann::ordered_json poly_json(const PolyQ& f) {
  auto a = nlohmann::ordered_json::array();
  for (const auto& c : f.coeffs()) a.push_back(to_string(c));
  return a;
}

nlohmann::ordered_json to_json(const FrobenianCertificate& cert) {
  using json = nlohmann::ordered_json;
  const auto& table = cert.group->table();
  json field;
  field["min_poly"] = poly_json(cert.group->field()->min_poly());
  field["min_poly_text"] = cert.group->field()->min_poly().to_string();
  field["degree"] = cert.group->field()->degree();
  field["discriminant"] = to_string(cert.group->field()->discriminant());
  json classes = json::array();
  for (std::size_t c = 0; c < table.class_count(); ++c) {
    const int rep = table.representative(static_cast<int>(c));
    json cls;
    cls["index"] = c;
    cls["size"] = table.classes()[c].size();
    cls["order"] = table.element_order(rep);
    cls["representative"] = coords_json(cert.group->element(rep).image);
    cls["g_value"] = coords_json(cert.g.class_value(static_cast<int>(c)));
    classes.push_back(cls);
  }
  json provenance = json::array();
  for (const auto& c : cert.provenance) provenance.push_back(json{{"source", c.source}, {"value", to_string(c.value)}});
  json exceptional = json::array();
  for (const auto& e : cert.exceptional_primes)
    exceptional.push_back(json{{"p", e.p}, {"in_zero_set", e.in_zero_set}, {"undefined", e.undefined}});
  json out;
  out["field"] = field;
  out["group_order"] = cert.group->order();
  out["classes"] = classes;
  out["zero_classes"] = cert.zero_classes;
  out["density"] = to_string(cert.density);
  out["bound"] = to_string(cert.bound);
  out["provenance"] = provenance;
  out["exceptional_primes"] = exceptional;
  return out;
}

nlohmann::ordered_json to_json(const EmpiricalReport& report) {
  nlohmann::ordered_json out;
  out["limit"] = report.limit;
  out["primes_checked"] = report.primes_checked;
  out["zero_count"] = report.zero_count;
  out["empirical_density"] = to_string(report.empirical_density);
  out["empirical_density_approx"] = report.empirical_density.get_d();
  out["certificate_density"] = to_string(report.certificate_density);
  out["mismatches_below_bound"] = report.mismatches_below_bound;
  out["mismatches_above_bound"] = report.mismatches_above_bound;
  return out;
}

}  // namespace frobenian
