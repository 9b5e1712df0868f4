#include "frobenian/class_function.hpp"

#include "frobenian/errors.hpp"
#include "frobenian/recurrence.hpp"

namespace frobenian {

ClassFunction::ClassFunction(GroupPtr group, std::vector<NFElement> class_values)
    : group_(std::move(group)), values_(std::move(class_values)) {
  if (!group_) throw InputError("class function without a group");
  const auto& table = group_->table();
  if (values_.size() != table.class_count())
    throw InputError("expected " + std::to_string(table.class_count()) + " class values, got " +
                     std::to_string(values_.size()));
  for (std::size_t c = 0; c < values_.size(); ++c) {
    if (values_[c].field() != group_->field()) throw InputError("class value lives in a different field");
    const int rep = table.representative(static_cast<int>(c));
    for (int z : table.centralizer(rep))
      if (!(group_->apply(z, values_[c]) == values_[c]))
        throw InputError("value on class " + std::to_string(c) + " is not fixed by the centralizer of its representative");
  }
}

ClassFunction ClassFunction::from_elements(GroupPtr group, const std::vector<NFElement>& values) {
  const auto& table = group->table();
  const int n = static_cast<int>(group->order());
  if (static_cast<int>(values.size()) != n) throw InputError("need one value per group element");
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (!(values[static_cast<std::size_t>(table.conjugate(s, t))] == group->apply(s, values[static_cast<std::size_t>(t)])))
        throw InputError("values are not Galois-equivariant");
  std::vector<NFElement> reps;
  for (std::size_t c = 0; c < table.class_count(); ++c)
    reps.push_back(values[static_cast<std::size_t>(table.representative(static_cast<int>(c)))]);
  return ClassFunction(std::move(group), std::move(reps));
}

ClassFunction ClassFunction::constant(GroupPtr group, const Rational& c) {
  std::vector<NFElement> v(group->table().class_count(), NFElement::from_rational(group->field(), c));
  return ClassFunction(std::move(group), std::move(v));
}

ClassFunction ClassFunction::indicator(GroupPtr group, const std::vector<int>& classes) {
  const std::size_t count = group->table().class_count();
  std::vector<NFElement> v(count, NFElement::from_rational(group->field(), 0));
  for (int c : classes) {
    if (c < 0 || static_cast<std::size_t>(c) >= count) throw InputError("class index " + std::to_string(c) + " out of range");
    v[static_cast<std::size_t>(c)] = NFElement::from_rational(group->field(), 1);
  }
  return ClassFunction(std::move(group), std::move(v));
}

NFElement ClassFunction::at(int element) const {
  const auto& table = group_->table();
  return group_->apply(table.conjugator(element), values_[static_cast<std::size_t>(table.class_of(element))]);
}

std::vector<NFElement> ClassFunction::all_values() const {
  std::vector<NFElement> out;
  for (std::size_t i = 0; i < group_->order(); ++i) out.push_back(at(static_cast<int>(i)));
  return out;
}

std::vector<int> ClassFunction::zero_classes() const {
  std::vector<int> out;
  for (std::size_t c = 0; c < values_.size(); ++c)
    if (values_[c].is_zero()) out.push_back(static_cast<int>(c));
  return out;
}

Integer ClassFunction::denominator_lcm() const {
  Integer l = 1;
  for (const auto& v : values_) {
    Integer d = v.denominator_lcm();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

namespace {

void require_same(const ClassFunction& g, const ClassFunction& h) {
  if (g.group() != h.group()) throw InputError("class functions over different Galois groups");
}

}  // namespace

ClassFunction cf_add(const ClassFunction& g, const ClassFunction& h) {
  require_same(g, h);
  std::vector<NFElement> v;
  for (std::size_t c = 0; c < g.class_values().size(); ++c) v.push_back(g.class_values()[c] + h.class_values()[c]);
  return ClassFunction(g.group(), std::move(v));
}

ClassFunction cf_mul(const ClassFunction& g, const ClassFunction& h) {
  require_same(g, h);
  std::vector<NFElement> v;
  for (std::size_t c = 0; c < g.class_values().size(); ++c) v.push_back(g.class_values()[c] * h.class_values()[c]);
  return ClassFunction(g.group(), std::move(v));
}

ClassFunction cf_scale(const ClassFunction& g, const Rational& c) {
  std::vector<NFElement> v;
  for (const auto& x : g.class_values()) v.push_back(x * c);
  return ClassFunction(g.group(), std::move(v));
}

std::optional<std::uint64_t> eval_at_frobenius(const ClassFunction& g, const PrimeLocalData& local) {
  if (local.ramified) return std::nullopt;
  if (divides(local.p, g.denominator_lcm())) return std::nullopt;
  PolyFp r = g.at(local.frobenius_index).reduce_mod(local.p, local.chosen_factor);
  if (r.degree() > 0)
    throw InvariantViolation("g(Frob) mod P is not in the prime field at p = " + std::to_string(local.p));
  return r.coeff(0);
}

std::optional<std::uint64_t> eval_at_frobenius(const ClassFunction& g, std::uint64_t p, std::size_t factor_choice) {
  try {
    return eval_at_frobenius(g, prime_local_data(*g.group(), p, factor_choice));
  } catch (const BadPrimeError&) {
    return std::nullopt;
  }
}

PolyQ annihilator(const ClassFunction& g) {
  PolyQ f = PolyQ::constant(1);
  for (const auto& v : g.class_values()) f = lcm(f, v.min_poly());
  return f.monic();
}

Recurrence to_recurrence(const ClassFunction& g) {
  const GaloisGroup& group = *g.group();
  const FieldPtr& field = group.field();
  const auto& table = group.table();
  const std::size_t n = group.order();
  const NFElement theta0 = normal_basis_generator(group);

  // By equivariance the normal-basis coefficients satisfy x_t = t(x_1), so
  // g(s) = sum_t t(x) s(t(theta0)) and x = x_1 solves a Q-linear system.
  std::vector<NFElement> eta, gens;
  for (std::size_t t = 0; t < n; ++t) {
    eta.push_back(group.apply(static_cast<int>(t), theta0));
    gens.push_back(group.element(static_cast<int>(t)).image);
  }
  const std::size_t classes = table.class_count();
  MatQ a(classes * n, n);
  std::vector<Rational> rhs(classes * n);
  for (std::size_t c = 0; c < classes; ++c) {
    const int rep = table.representative(static_cast<int>(c));
    std::vector<NFElement> s_eta;
    for (std::size_t t = 0; t < n; ++t) s_eta.push_back(group.apply(rep, eta[t]));
    for (std::size_t k = 0; k < n; ++k) {
      NFElement col = NFElement::from_rational(field, 0);
      for (std::size_t t = 0; t < n; ++t) col += gens[t].pow(static_cast<long>(k)) * s_eta[t];
      for (std::size_t i = 0; i < n; ++i) a(c * n + i, k) = col.coord(i);
    }
    for (std::size_t i = 0; i < n; ++i) rhs[c * n + i] = g.class_value(static_cast<int>(c)).coord(i);
  }
  auto sol = solve_any(a, rhs);
  if (!sol) throw InvariantViolation("class function is not in the image of the normal-basis map");
  NFElement x(field, *sol);

  PolyQ charpoly = theta0.min_poly();
  if (charpoly.degree() != static_cast<int>(n)) throw InvariantViolation("normal basis generator has repeated conjugates");
  std::vector<Rational> coeffs(n), initial(n);
  for (std::size_t i = 1; i <= n; ++i) coeffs[i - 1] = -charpoly.coeff(static_cast<int>(n - i));
  NFElement power = NFElement::from_rational(field, 1);
  for (std::size_t m = 0; m < n; ++m) {
    initial[m] = (x * power).trace();
    power *= theta0;
  }
  return Recurrence(coeffs, initial);
}

}  // namespace frobenian
