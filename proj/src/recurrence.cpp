#include "frobenian/recurrence.hpp"

#include <sstream>

#include "frobenian/errors.hpp"

namespace frobenian {

namespace {

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

std::vector<NFElement> mat_vec(const MatQ& m, const std::vector<NFElement>& v) {
  std::vector<NFElement> out;
  out.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    NFElement acc = NFElement::from_rational(v[0].field(), 0);
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) acc += v[j] * m(i, j);
    out.push_back(acc);
  }
  return out;
}

}  // namespace

// ----------------------------------------------------------------- Recurrence

Recurrence::Recurrence(std::vector<Rational> coeffs, std::vector<Rational> initial)
    : c_(std::move(coeffs)), a_(std::move(initial)) {
  if (c_.empty()) throw InputError("a recurrence needs at least one coefficient");
  if (c_.size() != a_.size())
    throw InputError("order " + std::to_string(c_.size()) + " needs that many initial values, got " +
                     std::to_string(a_.size()));
  if (c_.back() == 0)
    throw InputError("c_k = 0 makes the companion matrix singular; shift the sequence to drop the trailing zero coefficient");
  for (auto& x : c_) x.canonicalize();
  for (auto& x : a_) x.canonicalize();
}

Recurrence Recurrence::parse(const std::string& text) {
  auto semi = text.find(';');
  if (semi == std::string::npos) throw InputError("recurrence must look like \"c1,..,ck;a0,..,a(k-1)\"");
  return Recurrence(parse_list(text.substr(0, semi)), parse_list(text.substr(semi + 1)));
}

MatQ Recurrence::companion() const {
  const std::size_t k = c_.size();
  MatQ m(k, k);
  for (std::size_t i = 0; i + 1 < k; ++i) m(i, i + 1) = 1;
  for (std::size_t j = 0; j < k; ++j) m(k - 1, j) = c_[k - 1 - j];
  return m;
}

std::vector<Rational> Recurrence::u() const {
  std::vector<Rational> e(c_.size(), Rational(0));
  e[0] = 1;
  return e;
}

PolyQ Recurrence::characteristic_polynomial() const {
  const std::size_t k = c_.size();
  std::vector<Rational> p(k + 1);
  p[k] = 1;
  for (std::size_t i = 1; i <= k; ++i) p[k - i] = -c_[i - 1];
  return PolyQ(p);
}

Integer Recurrence::denominator_lcm() const {
  Integer l = 1;
  for (const auto* list : {&c_, &a_})
    for (const auto& x : *list) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

Recurrence Recurrence::scaled(const Rational& c) const {
  std::vector<Rational> a = a_;
  for (auto& x : a) x *= c;
  return Recurrence(c_, a);
}

std::string Recurrence::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? "," : "") + frobenian::to_string(c_[i]);
  s += ";";
  for (std::size_t i = 0; i < a_.size(); ++i) s += (i ? "," : "") + frobenian::to_string(a_[i]);
  return s;
}

// ---------------------------------------------------------------- evaluation

Rational term_at(const Recurrence& r, long n) {
  const long k = r.order();
  const auto& c = r.coeffs();
  std::vector<Rational> window = r.initial();  // a_lo .. a_{lo+k-1}
  long lo = 0;
  while (n >= lo + k) {
    Rational next = 0;
    for (long i = 1; i <= k; ++i) next += c[static_cast<std::size_t>(i - 1)] * window[static_cast<std::size_t>(k - i)];
    window.erase(window.begin());
    window.push_back(next);
    ++lo;
  }
  while (n < lo) {
    // a_lo-1 = (a_{lo+k-1} - c_1 a_{lo+k-2} - ... - c_{k-1} a_lo) / c_k
    Rational prev = window[static_cast<std::size_t>(k - 1)];
    for (long i = 1; i < k; ++i) prev -= c[static_cast<std::size_t>(i - 1)] * window[static_cast<std::size_t>(k - 1 - i)];
    prev /= c[static_cast<std::size_t>(k - 1)];
    window.pop_back();
    window.insert(window.begin(), prev);
    --lo;
  }
  return window[static_cast<std::size_t>(n - lo)];
}

std::vector<Rational> terms(const Recurrence& r, std::size_t count) {
  const std::size_t k = static_cast<std::size_t>(r.order());
  std::vector<Rational> out = r.initial();
  const auto& c = r.coeffs();
  while (out.size() < count) {
    Rational next = 0;
    const std::size_t n = out.size();
    for (std::size_t i = 1; i <= k; ++i) next += c[i - 1] * out[n - i];
    out.push_back(next);
  }
  out.resize(count);
  return out;
}

std::uint64_t term_mod_p(const Recurrence& r, const Integer& n, std::uint64_t p) {
  if (n < 0) throw InputError("term_mod_p needs n >= 0");
  MatFp mn = matrix_pow_mod(r.companion(), n, p);
  std::uint64_t acc = 0;
  const auto& a = r.initial();
  for (std::size_t j = 0; j < a.size(); ++j) acc = (acc + mul_mod(mn(0, j), reduce_mod(a[j], p), p)) % p;
  return acc;
}

std::uint64_t term_mod_p(const Recurrence& r, std::uint64_t p) {
  return term_mod_p(r, Integer(static_cast<unsigned long>(p)), p);
}

// ------------------------------------------------------------ Jordan-Chevalley

JordanChevalley jordan_chevalley(const MatQ& m) {
  if (!m.is_square() || m.rows() == 0) throw InputError("jordan_chevalley needs a non-empty square matrix");
  if (m.determinant() == 0) throw InputError("jordan_chevalley needs an invertible matrix");
  const std::size_t k = m.rows();
  PolyQ q = squarefree_part(m.charpoly());
  PolyQ dq = q.derivative();
  int rounds = 1;
  while ((std::size_t{1} << (rounds - 1)) < k) ++rounds;  // ceil(log2 k) + 1
  MatQ s = m;
  for (int i = 0; i < rounds && !s.evaluate(q).is_zero(); ++i) {
    auto inv = s.evaluate(dq).inverse();
    if (!inv) throw InvariantViolation("q'(X) singular during Jordan-Chevalley iteration");
    s = s - s.evaluate(q) * *inv;
  }
  if (!s.evaluate(q).is_zero()) throw InvariantViolation("Newton iteration did not reach a semisimple matrix");
  auto s_inv = s.inverse();
  if (!s_inv) throw InvariantViolation("semisimple part is singular");
  JordanChevalley jc{s, *s_inv * m};
  if (jc.ss * jc.u != m || jc.u * jc.ss != m) throw InvariantViolation("Jordan-Chevalley factors do not commute to M");
  MatQ nil = jc.u - MatQ::identity(k);
  if (!nil.pow(static_cast<unsigned long>(k)).is_zero()) throw InvariantViolation("M_u is not unipotent");
  return jc;
}

// --------------------------------------------------------------- spectral data

SpectralData spectral_data(const Recurrence& r) {
  SpectralData out;
  out.jc = jordan_chevalley(r.companion());
  PolyQ q = squarefree_part(r.characteristic_polynomial());
  SplittingField split = splitting_field(q);
  out.group = GaloisGroup::compute(split.field);
  const FieldPtr& field = split.field;
  const auto& lambdas = split.roots;
  const std::size_t k = static_cast<std::size_t>(r.order());

  std::vector<NFElement> v;
  for (const auto& x : r.v()) v.push_back(NFElement::from_rational(field, x));
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    // u^T E_i v with E_i = prod_{j != i} (S - l_j) / (l_i - l_j)
    std::vector<NFElement> w = v;
    NFElement denom = NFElement::from_rational(field, 1);
    for (std::size_t j = 0; j < lambdas.size(); ++j) {
      if (j == i) continue;
      std::vector<NFElement> sw = mat_vec(out.jc.ss, w);
      for (std::size_t t = 0; t < k; ++t) sw[t] -= lambdas[j] * w[t];
      w = std::move(sw);
      denom *= lambdas[i] - lambdas[j];
    }
    NFElement b = w[0] * denom.inverse();
    if (!b.is_zero()) out.pairs.push_back({b, lambdas[i]});
  }

  const auto& group = *out.group;
  out.action.assign(group.order(), std::vector<int>(out.pairs.size(), -1));
  for (std::size_t s = 0; s < group.order(); ++s) {
    for (std::size_t i = 0; i < out.pairs.size(); ++i) {
      NFElement sb = group.apply(static_cast<int>(s), out.pairs[i].b);
      NFElement sl = group.apply(static_cast<int>(s), out.pairs[i].lambda);
      for (std::size_t j = 0; j < out.pairs.size(); ++j) {
        if (out.pairs[j].lambda == sl) {
          if (!(out.pairs[j].b == sb)) throw InvariantViolation("spectral pairs are not Galois-stable");
          out.action[s][i] = static_cast<int>(j);
          break;
        }
      }
      if (out.action[s][i] < 0) throw InvariantViolation("spectral pairs are not Galois-stable");
    }
  }
  return out;
}

std::optional<std::uint64_t> spectral_sum_mod_p(const SpectralData& s, const PrimeLocalData& local) {
  if (local.ramified) return std::nullopt;
  const std::uint64_t p = local.p;
  const PolyFp& m1 = local.chosen_factor;
  PolyFp acc(p, {});
  const Integer e(static_cast<unsigned long>(p));
  try {
    for (const auto& pair : s.pairs) {
      PolyFp b = pair.b.reduce_mod(p, m1);
      PolyFp l = pair.lambda.reduce_mod(p, m1);
      acc += mul_mod(b, pow_mod(l, e, m1), m1);
    }
  } catch (const BadPrimeError&) {
    return std::nullopt;
  }
  if (acc.degree() > 0) throw InvariantViolation("spectral sum left the prime field at p = " + std::to_string(p));
  return acc.coeff(0);
}

ClassFunction to_class_function(const SpectralData& s) {
  const auto& table = s.group->table();
  std::vector<NFElement> values;
  for (std::size_t c = 0; c < table.class_count(); ++c) {
    int rep = table.representative(static_cast<int>(c));
    NFElement acc = NFElement::from_rational(s.field(), 0);
    for (const auto& pair : s.pairs) acc += pair.b * s.group->apply(rep, pair.lambda);
    values.push_back(acc);
  }
  return ClassFunction(s.group, std::move(values));
}

ClassFunction to_class_function(const Recurrence& r) { return to_class_function(spectral_data(r)); }

}  // namespace frobenian
