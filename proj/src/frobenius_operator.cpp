#include "frobenian/frobenius_operator.hpp"

#include "frobenian/errors.hpp"

namespace frobenian {

std::vector<std::uint64_t> FrobeniusMatrix::apply(const std::vector<std::uint64_t>& v) const {
  std::vector<std::uint64_t> out(m.n, 0);
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = 0; j < m.n; ++j) out[i] = (out[i] + mul_mod(m(i, j), v[j] % p, p)) % p;
  return out;
}

int FrobeniusMatrix::order(int limit) const {
  const MatFp id = MatFp::identity(p, m.n);
  MatFp power = m;
  for (int k = 1; k <= limit; ++k) {
    if (power == id) return k;
    power = power * m;
  }
  return 0;
}

FrobeniusMatrix frobenius_matrix(const FieldPtr& field, std::uint64_t p) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  const std::size_t n = static_cast<std::size_t>(field->degree());
  PolyFp f = PolyFp::reduce(field->min_poly(), p);
  PolyFp xp = pow_mod(PolyFp::x(p), Integer(static_cast<unsigned long>(p)), f);
  FrobeniusMatrix out{field, p, MatFp{p, n, std::vector<std::uint64_t>(n * n, 0)}};
  PolyFp col = PolyFp::constant(p, 1) % f;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) out.m(i, j) = col.coeff(static_cast<int>(i));
    col = mul_mod(col, xp, f);
  }
  return out;
}

std::vector<std::uint64_t> entry_sequence(const FieldPtr& field, std::size_t i, std::size_t j,
                                          const std::vector<std::uint64_t>& primes) {
  const std::size_t n = static_cast<std::size_t>(field->degree());
  if (i >= n || j >= n) throw InputError("matrix entry out of range");
  std::vector<std::uint64_t> out;
  for (std::uint64_t p : primes) out.push_back(frobenius_matrix(field, p).entry(i, j));
  return out;
}

ClassFunction trace_form_class_function(const GroupPtr& group, const NFElement& x, const NFElement& y) {
  const auto& table = group->table();
  const int n = static_cast<int>(group->order());
  std::vector<NFElement> tx, ty;
  for (int t = 0; t < n; ++t) {
    tx.push_back(group->apply(t, x));
    ty.push_back(group->apply(t, y));
  }
  std::vector<NFElement> values;
  for (std::size_t c = 0; c < table.class_count(); ++c) {
    const int s = table.representative(static_cast<int>(c));
    NFElement acc = NFElement::from_rational(group->field(), 0);
    for (int t = 0; t < n; ++t) acc += tx[static_cast<std::size_t>(t)] * group->apply(s, ty[static_cast<std::size_t>(t)]);
    values.push_back(acc);
  }
  return ClassFunction(group, std::move(values));
}

std::vector<NFElement> trace_dual_basis(const FieldPtr& field) {
  const std::size_t n = static_cast<std::size_t>(field->degree());
  std::vector<Rational> traces(2 * n - 1);
  NFElement power = NFElement::from_rational(field, 1);
  const NFElement theta = NFElement::generator(field);
  for (auto& t : traces) {
    t = power.trace();
    power *= theta;
  }
  MatQ gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) gram(i, k) = traces[i + k];
  auto inv = gram.inverse();
  if (!inv) throw InvariantViolation("trace form is degenerate");
  std::vector<NFElement> dual;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> c(n);
    for (std::size_t k = 0; k < n; ++k) c[k] = (*inv)(i, k);
    dual.emplace_back(field, c);
  }
  return dual;
}

SpanReport span_check(const ClassFunction& g, const std::vector<std::uint64_t>& primes) {
  const GroupPtr& group = g.group();
  const FieldPtr& field = g.field();
  const std::size_t n = static_cast<std::size_t>(field->degree());
  const auto dual = trace_dual_basis(field);
  const NFElement theta = NFElement::generator(field);

  std::vector<ClassFunction> t;  // t[i * n + j]
  Integer bad = field->min_poly().denominator_lcm();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      t.push_back(trace_form_class_function(group, dual[i], theta.pow(static_cast<long>(j))));
      Integer d = t.back().denominator_lcm();
      mpz_lcm(bad.get_mpz_t(), bad.get_mpz_t(), d.get_mpz_t());
    }

  // g = sum c_ij T_ij over Q
  const std::size_t classes = group->table().class_count();
  MatQ a(classes * n, n * n);
  std::vector<Rational> rhs(classes * n);
  for (std::size_t k = 0; k < n * n; ++k)
    for (std::size_t c = 0; c < classes; ++c)
      for (std::size_t r = 0; r < n; ++r) a(c * n + r, k) = t[k].class_value(static_cast<int>(c)).coord(r);
  for (std::size_t c = 0; c < classes; ++c)
    for (std::size_t r = 0; r < n; ++r) rhs[c * n + r] = g.class_value(static_cast<int>(c)).coord(r);
  auto sol = solve_any(a, rhs);
  if (!sol) throw InvariantViolation("class function is not a rational combination of trace-form functions");

  SpanReport rep;
  rep.coefficients = *sol;
  for (const auto& c : rep.coefficients) mpz_lcm(bad.get_mpz_t(), bad.get_mpz_t(), c.get_den_mpz_t());
  {
    Integer d = g.denominator_lcm();
    mpz_lcm(bad.get_mpz_t(), bad.get_mpz_t(), d.get_mpz_t());
  }

  for (std::uint64_t p : primes) {
    if (divides(p, bad)) {
      rep.skipped.push_back(p);
      continue;
    }
    PrimeLocalData local = prime_local_data(*group, p);
    if (local.ramified) {
      rep.skipped.push_back(p);
      continue;
    }
    ++rep.primes_checked;
    FrobeniusMatrix fm = frobenius_matrix(field, p);
    std::uint64_t combo = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const std::uint64_t e = fm.entry(i, j);
        auto tv = eval_at_frobenius(t[i * n + j], local);
        if (!tv || *tv != e) rep.entry_disagreements.push_back({p, i, j});
        combo = (combo + mul_mod(reduce_mod(rep.coefficients[i * n + j], p), e, p)) % p;
      }
    auto gv = eval_at_frobenius(g, local);
    if (!gv || *gv != combo) rep.combination_disagreements.push_back(p);
  }
  if (!rep.ok()) {
    std::uint64_t p = rep.combination_disagreements.empty() ? rep.entry_disagreements.front()[0]
                                                            : rep.combination_disagreements.front();
    throw InvariantViolation("span check disagreement at p = " + std::to_string(p));
  }
  return rep;
}

nlohmann::ordered_json to_json(const FrobeniusMatrix& m) {
  nlohmann::ordered_json out;
  out["p"] = m.p;
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.m.n; ++i) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < m.m.n; ++j) row.push_back(m.entry(i, j));
    rows.push_back(row);
  }
  out["matrix"] = rows;
  return out;
}

nlohmann::ordered_json to_json(const SpanReport& report) {
  nlohmann::ordered_json out;
  out["primes_checked"] = report.primes_checked;
  out["skipped"] = report.skipped;
  auto coeffs = nlohmann::ordered_json::array();
  for (const auto& c : report.coefficients) coeffs.push_back(to_string(c));
  out["coefficients"] = coeffs;
  out["combination_disagreements"] = report.combination_disagreements;
  out["entry_disagreements"] = report.entry_disagreements;
  out["ok"] = report.ok();
  return out;
}

}  // namespace frobenian
