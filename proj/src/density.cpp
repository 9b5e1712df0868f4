#include "frobenian/density.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>

#include "frobenian/errors.hpp"

namespace frobenian {

namespace {

bool subset_of(const std::vector<int>& a, const std::vector<int>& sorted_b) {
  return std::all_of(a.begin(), a.end(), [&](int x) { return std::binary_search(sorted_b.begin(), sorted_b.end(), x); });
}

Rational fraction(std::size_t a, std::size_t b) {
  Rational q(static_cast<long>(a), static_cast<long>(b));
  q.canonicalize();
  return q;
}

}  // namespace

std::vector<std::vector<int>> root_stabilizers(const GaloisGroup& group, const std::vector<NFElement>& roots) {
  std::vector<std::vector<int>> out;
  for (const auto& a : roots) {
    std::vector<int> stab;
    for (std::size_t s = 0; s < group.order(); ++s)
      if (group.apply(static_cast<int>(s), a) == a) stab.push_back(static_cast<int>(s));
    out.push_back(stab);
  }
  return out;
}

std::vector<int> s1_set(const FiniteGroupTable& table, const std::vector<std::vector<int>>& subgroups) {
  std::vector<int> out;
  for (std::size_t s = 0; s < table.order(); ++s)
    for (const auto& h : subgroups)
      if (std::binary_search(h.begin(), h.end(), static_cast<int>(s))) {
        out.push_back(static_cast<int>(s));
        break;
      }
  return out;
}

std::vector<int> s2_set(const FiniteGroupTable& table, const std::vector<std::vector<int>>& subgroups) {
  std::vector<int> out;
  for (std::size_t s = 0; s < table.order(); ++s)
    for (const auto& h : subgroups)
      if (subset_of(table.centralizer(static_cast<int>(s)), h)) {
        out.push_back(static_cast<int>(s));
        break;
      }
  return out;
}

std::vector<int> s1_set(const GaloisGroup& group, const std::vector<NFElement>& roots) {
  return s1_set(group.table(), root_stabilizers(group, roots));
}

std::vector<int> s2_set(const GaloisGroup& group, const std::vector<NFElement>& roots) {
  return s2_set(group.table(), root_stabilizers(group, roots));
}

ClassFunction extremal_class_function(const GroupPtr& group, const std::vector<NFElement>& roots) {
  const auto& table = group->table();
  const auto stabs = root_stabilizers(*group, roots);
  std::vector<NFElement> values;
  for (std::size_t c = 0; c < table.class_count(); ++c) {
    const auto& cent = table.centralizer(table.representative(static_cast<int>(c)));
    NFElement v = NFElement::from_rational(group->field(), 0);
    for (std::size_t i = 0; i < roots.size(); ++i)
      if (subset_of(cent, stabs[i])) {
        v = roots[i];
        break;
      }
    values.push_back(v);
  }
  return ClassFunction(group, std::move(values));
}

DensityReport density_report(const PolyQ& f_in, std::uint64_t limit) {
  if (f_in.degree() < 1) throw InputError("density needs a polynomial of degree >= 1");
  if (limit < 2) throw InputError("prime bound must be at least 2");
  DensityReport rep;
  rep.f = f_in.monic();
  SplittingField split = splitting_field(rep.f);
  rep.group = GaloisGroup::compute(split.field);
  rep.roots = split.roots;
  const auto& table = rep.group->table();
  const auto stabs = root_stabilizers(*rep.group, rep.roots);
  rep.s1 = s1_set(table, stabs);
  rep.s2 = s2_set(table, stabs);
  rep.s1_density = fraction(rep.s1.size(), rep.group->order());
  rep.s2_density = fraction(rep.s2.size(), rep.group->order());
  rep.extremal = extremal_class_function(rep.group, rep.roots);
  for (int s : rep.s1)
    if (!std::binary_search(rep.s2.begin(), rep.s2.end(), s)) {
      rep.strict_gap_witness = s;
      break;
    }

  rep.limit = limit;
  const Integer den = rep.f.denominator_lcm();
  for (std::uint64_t p : primes_up_to(limit)) {
    if (divides(p, den)) continue;
    ++rep.primes_counted;
    PolyFp fp = PolyFp::reduce(rep.f, p);
    if (count_roots_mod_p(fp) > 0) ++rep.root_primes;
    std::optional<std::uint64_t> g;
    try {
      g = eval_at_frobenius(rep.extremal, prime_local_data(*rep.group, p));
    } catch (const BadPrimeError&) {
    }
    if (g && fp(*g) == 0) ++rep.zero_primes;
  }
  rep.empirical_root_density = fraction(rep.root_primes, rep.primes_counted);
  rep.empirical_zero_density = fraction(rep.zero_primes, rep.primes_counted);
  return rep;
}

// --------------------------------------------------------------------- wreath

std::uint64_t brute_force_budget() {
  if (const char* env = std::getenv("FROBENIAN_BRUTE_FORCE_BUDGET")) {
    long long v = std::atoll(env);
    if (v > 0) return static_cast<std::uint64_t>(v);
  }
  return kDefaultBruteForceBudget;
}

namespace {

// Elements of A^G x G with A = (Z/2)^r: phi packs |G| r-bit values, phi(x)
// in bits [x r, (x+1) r).
class Wreath {
 public:
  Wreath(const FiniteGroupTable& g, int r) : g_(g), r_(r), n_(g.order()) {
    mask_ = (std::uint64_t{1} << r) - 1;
    functions_ = std::uint64_t{1} << (r * static_cast<int>(n_));
  }

  std::uint64_t functions() const { return functions_; }

  // phi o R_s, with R_s(x) = x s
  std::uint64_t compose_right(std::uint64_t phi, int s) const {
    std::uint64_t out = 0;
    for (std::size_t x = 0; x < n_; ++x) {
      std::uint64_t v = (phi >> (static_cast<std::size_t>(r_) * static_cast<std::size_t>(g_.mul(static_cast<int>(x), s)))) & mask_;
      out |= v << (static_cast<std::size_t>(r_) * x);
    }
    return out;
  }

  // (phi, s)(psi, t) = (phi + psi o R_s, s t)
  std::pair<std::uint64_t, int> mul(std::uint64_t phi, int s, std::uint64_t psi, int t) const {
    return {phi ^ compose_right(psi, s), g_.mul(s, t)};
  }

  bool commute(std::uint64_t phi, int s, std::uint64_t psi, int t) const {
    return mul(phi, s, psi, t) == mul(psi, t, phi, s);
  }

  // sum_n (phi o R_{s^n t} - phi o R_{s^n}) == 0
  bool sum_criterion(std::uint64_t phi, int s, int t) const {
    std::uint64_t acc = 0;
    int sn = g_.identity();
    const int order = g_.element_order(s);
    for (int k = 0; k < order; ++k) {
      acc ^= compose_right(phi, g_.mul(sn, t)) ^ compose_right(phi, sn);
      sn = g_.mul(sn, s);
    }
    return acc == 0;
  }

 private:
  const FiniteGroupTable& g_;
  int r_;
  std::size_t n_;
  std::uint64_t mask_ = 0;
  std::uint64_t functions_ = 0;
};

constexpr std::uint64_t kMultiplicationLimit = 4096;

}  // namespace

WreathReport wreath_check(const FiniteGroupTable& gamma, int r, std::uint64_t budget) {
  if (r < 1) throw InputError("r must be positive");
  const std::size_t n = gamma.order();
  if (n > 64) throw ScaleLimitError("groups above order 64 are outside the wreath enumeration");
  if (static_cast<std::size_t>(r) * n > 40) throw ScaleLimitError("wreath product too large to enumerate");
  Wreath w(gamma, r);
  const std::uint64_t m = w.functions();
  WreathReport rep;
  rep.gamma_order = n;
  rep.r = r;
  rep.size = m * n;
  if (rep.size > budget)
    throw ScaleLimitError("|A^G x G| = " + std::to_string(rep.size) + " exceeds the brute-force budget " +
                          std::to_string(budget));

  std::vector<std::vector<int>> cyclic(n);
  for (std::size_t s = 0; s < n; ++s) cyclic[s] = gamma.cyclic_subgroup(static_cast<int>(s));

  // projected[s][phi] = bitmask over t of pi(C((phi, s)))
  std::vector<std::vector<std::uint64_t>> projected(n, std::vector<std::uint64_t>(m, 0));
  if (rep.size <= kMultiplicationLimit) {
    rep.method = "multiplication";
    for (std::size_t s = 0; s < n; ++s)
      for (std::uint64_t phi = 0; phi < m; ++phi)
        for (std::size_t t = 0; t < n; ++t)
          for (std::uint64_t psi = 0; psi < m; ++psi)
            if (w.commute(phi, static_cast<int>(s), psi, static_cast<int>(t))) {
              projected[s][phi] |= std::uint64_t{1} << t;
              break;
            }
  } else {
    // (phi,s) and (psi,t) commute iff s t = t s and
    // phi - phi o R_t = psi - psi o R_s; enumerate the image of psi -> psi - psi o R_s.
    rep.method = "coboundary";
    std::vector<char> image(m);
    for (std::size_t s = 0; s < n; ++s) {
      std::fill(image.begin(), image.end(), 0);
      for (std::uint64_t psi = 0; psi < m; ++psi) image[psi ^ w.compose_right(psi, static_cast<int>(s))] = 1;
      for (std::size_t t = 0; t < n; ++t) {
        if (!gamma.commute(static_cast<int>(s), static_cast<int>(t))) continue;
        for (std::uint64_t phi = 0; phi < m; ++phi)
          if (image[phi ^ w.compose_right(phi, static_cast<int>(t))]) projected[s][phi] |= std::uint64_t{1} << t;
      }
    }
    // sampled pairs against multiplication
    std::mt19937_64 rng(0x77726561);
    std::uniform_int_distribution<std::uint64_t> pick_phi(0, m - 1);
    std::uniform_int_distribution<std::size_t> pick_s(0, n - 1);
    for (int k = 0; k < 20000; ++k) {
      std::uint64_t phi = pick_phi(rng), psi = pick_phi(rng);
      std::size_t s = pick_s(rng), t = pick_s(rng);
      bool direct = w.commute(phi, static_cast<int>(s), psi, static_cast<int>(t));
      bool criterion = gamma.commute(static_cast<int>(s), static_cast<int>(t)) &&
                       (phi ^ w.compose_right(phi, static_cast<int>(t))) == (psi ^ w.compose_right(psi, static_cast<int>(s)));
      ++rep.pair_checks;
      if (direct != criterion) ++rep.pair_mismatches;
    }
  }
  if (rep.method == "multiplication") {
    for (std::size_t s = 0; s < n; ++s)
      for (std::uint64_t phi = 0; phi < m; ++phi)
        for (std::size_t t = 0; t < n; ++t)
          for (std::uint64_t psi = 0; psi < m; ++psi) {
            bool direct = w.commute(phi, static_cast<int>(s), psi, static_cast<int>(t));
            bool criterion = gamma.commute(static_cast<int>(s), static_cast<int>(t)) &&
                             (phi ^ w.compose_right(phi, static_cast<int>(t))) == (psi ^ w.compose_right(psi, static_cast<int>(s)));
            ++rep.pair_checks;
            if (direct != criterion) ++rep.pair_mismatches;
          }
  }

  for (std::size_t s = 0; s < n; ++s) {
    std::uint64_t allowed = 0;
    for (int x : cyclic[s]) allowed |= std::uint64_t{1} << x;
    for (std::uint64_t phi = 0; phi < m; ++phi) {
      const std::uint64_t proj = projected[s][phi];
      if ((proj & ~allowed) == 0)
        ++rep.count;
      else
        ++rep.failures;
      for (std::size_t t = 0; t < n; ++t) {
        bool enumerated = (proj >> t) & 1;
        bool closed_form = gamma.commute(static_cast<int>(s), static_cast<int>(t)) &&
                           w.sum_criterion(phi, static_cast<int>(s), static_cast<int>(t));
        ++rep.sum_checks;
        if (enumerated != closed_form) ++rep.sum_mismatches;
      }
    }
  }

  const Integer a = Integer(1) << r;
  const Integer gsq = Integer(static_cast<unsigned long>(n * n));
  rep.bound = (Rational(1) - Rational(gsq, a)) * Rational(Integer(static_cast<unsigned long>(rep.size)));
  rep.bound.canonicalize();
  Integer apow = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) apow *= a;
  rep.failure_bound = gsq * apow;
  rep.pass = Rational(Integer(static_cast<unsigned long>(rep.count))) >= rep.bound &&
             Integer(static_cast<unsigned long>(rep.failures)) <= rep.failure_bound && rep.pair_mismatches == 0 &&
             rep.sum_mismatches == 0;
  return rep;
}

// ----------------------------------------------------------------------- JSON

nlohmann::ordered_json to_json(const DensityReport& rep) {
  nlohmann::ordered_json out;
  out["polynomial"] = rep.f.to_string();
  out["field"] = {{"min_poly", rep.group->field()->min_poly().to_string()}, {"degree", rep.group->field()->degree()}};
  out["group_order"] = rep.group->order();
  out["s1"] = rep.s1;
  out["s2"] = rep.s2;
  out["s1_density"] = to_string(rep.s1_density);
  out["s2_density"] = to_string(rep.s2_density);
  auto values = nlohmann::ordered_json::array();
  for (const auto& v : rep.extremal.class_values()) {
    nlohmann::ordered_json coords = nlohmann::ordered_json::array();
    for (const auto& c : v.coords()) coords.push_back(to_string(c));
    values.push_back(coords);
  }
  out["extremal_class_values"] = values;
  out["limit"] = rep.limit;
  out["primes_counted"] = rep.primes_counted;
  out["empirical_root_density"] = to_string(rep.empirical_root_density);
  out["empirical_root_density_approx"] = rep.empirical_root_density.get_d();
  out["empirical_zero_density"] = to_string(rep.empirical_zero_density);
  out["empirical_zero_density_approx"] = rep.empirical_zero_density.get_d();
  if (rep.strict_gap_witness)
    out["strict_gap_witness"] = *rep.strict_gap_witness;
  else
    out["strict_gap_witness"] = nullptr;
  return out;
}

nlohmann::ordered_json to_json(const WreathReport& rep) {
  nlohmann::ordered_json out;
  out["gamma_order"] = rep.gamma_order;
  out["r"] = rep.r;
  out["size"] = rep.size;
  out["count"] = rep.count;
  out["failures"] = rep.failures;
  out["bound"] = to_string(rep.bound);
  out["failure_bound"] = to_string(rep.failure_bound);
  out["method"] = rep.method;
  out["pair_checks"] = rep.pair_checks;
  out["pair_mismatches"] = rep.pair_mismatches;
  out["sum_checks"] = rep.sum_checks;
  out["sum_mismatches"] = rep.sum_mismatches;
  out["pass"] = rep.pass;
  return out;
}

}  // namespace frobenian
