#include "frobenian/number_field.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>

#include "frobenian/errors.hpp"
#include "frobenian/factor.hpp"

namespace frobenian {

int degree_cap() {
  if (const char* env = std::getenv("FROBENIAN_DEGREE_CAP")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return kDefaultDegreeCap;
}

// ---------------------------------------------------------------- NumberField

FieldPtr NumberField::create(const PolyQ& min_poly, bool trusted) {
  if (min_poly.degree() < 1) throw InputError("a number field needs a minimal polynomial of degree >= 1");
  PolyQ m = min_poly.monic();
  if (!trusted && !is_irreducible_over_Q(m)) throw InputError("not irreducible over Q: " + m.to_string());
  auto field = std::shared_ptr<NumberField>(new NumberField());
  field->min_poly_ = m;
  field->degree_ = m.degree();
  field->discriminant_ = frobenian::discriminant(m);
  const int n = field->degree_;
  std::vector<Rational> current(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) current[static_cast<std::size_t>(i)] = -m.coeff(i);
  for (int k = n; k <= 2 * n - 2 || k == n; ++k) {
    field->reductions_.push_back(current);
    // multiply by theta
    Rational top = current.back();
    for (int i = n - 1; i > 0; --i) current[static_cast<std::size_t>(i)] = current[static_cast<std::size_t>(i - 1)];
    current[0] = 0;
    if (top != 0) {
      for (int i = 0; i < n; ++i) current[static_cast<std::size_t>(i)] -= top * m.coeff(i);
    }
  }
  return field;
}

FieldPtr NumberField::rationals() {
  static const FieldPtr q = create(PolyQ::x(), true);
  return q;
}

// ---------------------------------------------------------------- NFElement

NFElement::NFElement(FieldPtr field, std::vector<Rational> coords) : field_(std::move(field)), coords_(std::move(coords)) {
  if (!field_) throw InputError("element without a field");
  if (static_cast<int>(coords_.size()) != field_->degree()) throw InputError("coordinate count differs from field degree");
  for (auto& c : coords_) c.canonicalize();
}

NFElement NFElement::from_rational(FieldPtr field, const Rational& q) {
  std::vector<Rational> c(static_cast<std::size_t>(field->degree()), Rational(0));
  c[0] = q;
  return NFElement(std::move(field), std::move(c));
}

NFElement NFElement::from_poly(FieldPtr field, const PolyQ& p) {
  const int n = field->degree();
  PolyQ r = p % field->min_poly();
  std::vector<Rational> c(static_cast<std::size_t>(n), Rational(0));
  for (int i = 0; i <= r.degree(); ++i) c[static_cast<std::size_t>(i)] = r.coeff(i);
  return NFElement(std::move(field), std::move(c));
}

NFElement NFElement::generator(FieldPtr field) { return from_poly(field, PolyQ::x()); }

bool NFElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

bool NFElement::is_rational() const {
  return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& c) { return c == 0; });
}

Rational NFElement::rational_value() const {
  if (!is_rational()) throw InvariantViolation("element is not rational: " + to_string());
  return coords_[0];
}

NFElement& NFElement::operator+=(const NFElement& o) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

NFElement& NFElement::operator-=(const NFElement& o) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

NFElement& NFElement::operator*=(const Rational& c) {
  for (auto& x : coords_) x *= c;
  return *this;
}

NFElement& NFElement::operator*=(const NFElement& o) {
  const int n = field_->degree();
  std::vector<Rational> prod(static_cast<std::size_t>(2 * n - 1), Rational(0));
  for (int i = 0; i < n; ++i) {
    const Rational& a = coords_[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    for (int j = 0; j < n; ++j) {
      const Rational& b = o.coords_[static_cast<std::size_t>(j)];
      if (b != 0) prod[static_cast<std::size_t>(i + j)] += a * b;
    }
  }
  for (int k = n; k <= 2 * n - 2; ++k) {
    const Rational& c = prod[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const auto& red = field_->power_reduction(k);
    for (int i = 0; i < n; ++i) prod[static_cast<std::size_t>(i)] += c * red[static_cast<std::size_t>(i)];
  }
  prod.resize(static_cast<std::size_t>(n));
  coords_ = std::move(prod);
  return *this;
}

NFElement NFElement::operator-() const {
  NFElement r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

NFElement NFElement::inverse() const {
  if (is_zero()) throw InputError("inverse of zero in a number field");
  auto eg = extended_gcd(to_poly(), field_->min_poly());
  if (eg.g.degree() != 0) throw InvariantViolation("element shares a factor with an irreducible minimal polynomial");
  return from_poly(field_, eg.s);
}

NFElement NFElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  NFElement result = from_rational(field_, 1);
  NFElement base = *this;
  while (e > 0) {
    if (e & 1L) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

NFElement NFElement::substitute(const NFElement& theta_image) const {
  NFElement acc = from_rational(theta_image.field(), 0);
  for (auto it = coords_.rbegin(); it != coords_.rend(); ++it) {
    acc *= theta_image;
    acc.coords_[0] += *it;
  }
  return acc;
}

MatQ NFElement::multiplication_matrix() const {
  const std::size_t n = coords_.size();
  MatQ m(n, n);
  NFElement col = *this;
  NFElement theta = generator(field_);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col.coords_[i];
    if (j + 1 < n) col *= theta;
  }
  return m;
}

Rational NFElement::norm() const { return multiplication_matrix().determinant(); }

Rational NFElement::trace() const {
  MatQ m = multiplication_matrix();
  Rational t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

PolyQ NFElement::min_poly() const { return squarefree_part(multiplication_matrix().charpoly()); }

Integer NFElement::denominator_lcm() const {
  Integer l = 1;
  for (const auto& c : coords_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

PolyFp NFElement::reduce_mod(std::uint64_t p, const PolyFp& factor) const {
  return PolyFp::reduce(to_poly(), p) % factor;
}

std::string NFElement::to_string(const std::string& var) const { return to_poly().to_string(var); }

// ---------------------------------------------------------------- PolyNF

PolyNF::PolyNF(FieldPtr field, std::vector<NFElement> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  normalize();
}

void PolyNF::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

PolyNF PolyNF::lift(FieldPtr field, const PolyQ& p) {
  std::vector<NFElement> c;
  for (const auto& q : p.coeffs()) c.push_back(NFElement::from_rational(field, q));
  return PolyNF(std::move(field), std::move(c));
}

PolyNF operator+(const PolyNF& a, const PolyNF& b) {
  std::vector<NFElement> c = a.c_.size() >= b.c_.size() ? a.c_ : b.c_;
  const auto& other = a.c_.size() >= b.c_.size() ? b.c_ : a.c_;
  for (std::size_t i = 0; i < other.size(); ++i) c[i] += other[i];
  return PolyNF(a.field_, std::move(c));
}

PolyNF operator-(const PolyNF& a, const PolyNF& b) {
  std::vector<NFElement> c = a.c_;
  while (c.size() < b.c_.size()) c.push_back(NFElement::from_rational(a.field_, 0));
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return PolyNF(a.field_, std::move(c));
}

PolyNF operator*(const PolyNF& a, const PolyNF& b) {
  if (a.is_zero() || b.is_zero()) return PolyNF(a.field_, {});
  std::vector<NFElement> c(a.c_.size() + b.c_.size() - 1, NFElement::from_rational(a.field_, 0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return PolyNF(a.field_, std::move(c));
}

std::pair<PolyNF, PolyNF> PolyNF::divmod(const PolyNF& d) const {
  if (d.is_zero()) throw InputError("division by the zero polynomial over a number field");
  if (degree() < d.degree()) return {PolyNF(field_, {}), *this};
  std::vector<NFElement> rem = c_;
  const int dd = d.degree();
  std::vector<NFElement> quot(static_cast<std::size_t>(degree() - dd) + 1, NFElement::from_rational(field_, 0));
  NFElement inv = d.leading().inverse();
  for (int i = degree(); i >= dd; --i) {
    if (rem[static_cast<std::size_t>(i)].is_zero()) continue;
    NFElement q = rem[static_cast<std::size_t>(i)] * inv;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= q * d.c_[static_cast<std::size_t>(j)];
    quot[static_cast<std::size_t>(i - dd)] = std::move(q);
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {PolyNF(field_, std::move(quot)), PolyNF(field_, std::move(rem))};
}

PolyNF PolyNF::monic() const {
  if (is_zero()) return *this;
  NFElement inv = leading().inverse();
  std::vector<NFElement> c = c_;
  for (auto& x : c) x *= inv;
  return PolyNF(field_, std::move(c));
}

PolyNF PolyNF::derivative() const {
  if (c_.size() <= 1) return PolyNF(field_, {});
  std::vector<NFElement> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rational(static_cast<long>(i)));
  return PolyNF(field_, std::move(d));
}

NFElement PolyNF::operator()(const NFElement& x) const {
  NFElement acc = NFElement::from_rational(field_, 0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PolyNF PolyNF::substitute(const NFElement& theta_image) const {
  std::vector<NFElement> c;
  for (const auto& x : c_) c.push_back(x.substitute(theta_image));
  return PolyNF(theta_image.field(), std::move(c));
}

std::string PolyNF::to_string(const std::string& var, const std::string& theta) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const NFElement& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string(theta) + ")";
    if (i > 0) out += "*" + var + (i > 1 ? "^" + std::to_string(i) : "");
  }
  return out;
}

PolyNF gcd(PolyNF a, PolyNF b) {
  while (!b.is_zero()) {
    PolyNF r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// ---------------------------------------------------------------- Trager

namespace {

// Norm_{K/Q} of a polynomial with K coefficients, by evaluation at
// 0..D and Newton interpolation.
PolyQ norm_poly(const PolyNF& g) {
  const int n = g.field()->degree();
  const int total = n * g.degree();
  std::vector<Rational> xs, ys;
  for (int k = 0; k <= total; ++k) {
    Rational x = k;
    NFElement acc = NFElement::from_rational(g.field(), 0);
    for (auto it = g.coeffs().rbegin(); it != g.coeffs().rend(); ++it) acc = acc * x + *it;
    xs.push_back(x);
    ys.push_back(acc.norm());
  }
  // divided differences in place
  std::vector<Rational> dd = ys;
  for (int j = 1; j <= total; ++j) {
    for (int i = total; i >= j; --i) {
      dd[static_cast<std::size_t>(i)] = (dd[static_cast<std::size_t>(i)] - dd[static_cast<std::size_t>(i - 1)]) /
                                        (xs[static_cast<std::size_t>(i)] - xs[static_cast<std::size_t>(i - j)]);
    }
  }
  PolyQ result = PolyQ::constant(dd[static_cast<std::size_t>(total)]);
  for (int i = total - 1; i >= 0; --i) {
    result = result * PolyQ{-xs[static_cast<std::size_t>(i)], Rational(1)} + PolyQ::constant(dd[static_cast<std::size_t>(i)]);
  }
  return result;
}

// g(x + shift) for g over K, shift in K
PolyNF shift_poly(const PolyNF& g, const NFElement& shift) {
  PolyNF lin(g.field(), {shift, NFElement::from_rational(g.field(), 1)});
  PolyNF acc(g.field(), {});
  for (auto it = g.coeffs().rbegin(); it != g.coeffs().rend(); ++it) acc = acc * lin + PolyNF(g.field(), {*it});
  return acc;
}

// Irreducible factors of a monic squarefree g over K.
std::vector<PolyNF> trager_squarefree(const PolyNF& g) {
  if (g.degree() <= 1) return {g.monic()};
  const FieldPtr& k = g.field();
  if (k->degree() == 1) {
    std::vector<Rational> c;
    for (const auto& x : g.coeffs()) c.push_back(x.rational_value());
    std::vector<PolyNF> out;
    for (const auto& fac : factor_over_Q(PolyQ(std::move(c)))) out.push_back(PolyNF::lift(k, fac.factor));
    return out;
  }
  NFElement theta = NFElement::generator(k);
  for (int attempt = 0; attempt < 64; ++attempt) {
    long s = (attempt + 1) / 2 * (attempt % 2 == 1 ? 1 : -1);
    // g_s(x) = g(x - s*theta)
    PolyNF gs = shift_poly(g, theta * Rational(-s));
    PolyQ norm = norm_poly(gs);
    if (gcd(norm, norm.derivative()).degree() != 0) continue;
    auto qfactors = factor_over_Q(norm);
    if (qfactors.size() == 1) return {g.monic()};
    std::vector<PolyNF> out;
    for (const auto& fac : qfactors) {
      PolyNF back = shift_poly(PolyNF::lift(k, fac.factor), theta * Rational(s));
      PolyNF h = gcd(g, back);
      if (h.degree() > 0) out.push_back(h);
    }
    return out;
  }
  throw InvariantViolation("no shift gives a squarefree norm");
}

}  // namespace

std::vector<NFFactor> factor_over_field(const PolyNF& f) {
  if (f.is_zero()) throw InputError("factor_over_field of the zero polynomial");
  std::vector<NFFactor> out;
  if (f.degree() == 0) return out;
  PolyNF sqf = f.divmod(gcd(f, f.derivative())).first.monic();
  for (auto& h : trager_squarefree(sqf)) {
    int mult = 0;
    PolyNF rest = f;
    for (;;) {
      auto [q, r] = rest.divmod(h);
      if (!r.is_zero()) break;
      rest = std::move(q);
      ++mult;
    }
    out.push_back({std::move(h), mult});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const NFFactor& a, const NFFactor& b) { return a.factor.degree() < b.factor.degree(); });
  return out;
}

std::vector<NFFactor> factor_over_field(const PolyQ& f, const FieldPtr& field) {
  return factor_over_field(PolyNF::lift(field, f));
}

std::vector<NFElement> roots_in_field(const PolyQ& f, const FieldPtr& field) {
  std::vector<NFElement> roots;
  for (const auto& fac : factor_over_field(f, field)) {
    if (fac.factor.degree() == 1) roots.push_back(-fac.factor.coeffs()[0]);
  }
  return roots;
}

// ---------------------------------------------------------------- splitting fields

namespace {

using Tower = std::vector<NFElement>;  // polynomial in y of degree < d

// t * (y + c) reduced mod h (h monic of degree d over K)
Tower times_linear(const Tower& t, const NFElement& c, const PolyNF& h) {
  const std::size_t d = t.size();
  Tower out(d + 1, NFElement::from_rational(c.field(), 0));
  for (std::size_t j = 0; j < d; ++j) {
    out[j + 1] += t[j];
    out[j] += t[j] * c;
  }
  NFElement top = out[d];
  out.pop_back();
  if (!top.is_zero()) {
    for (std::size_t j = 0; j < d; ++j) out[j] -= top * h.coeffs()[j];
  }
  return out;
}

std::vector<Rational> flatten(const Tower& t) {
  std::vector<Rational> v;
  for (const auto& e : t) v.insert(v.end(), e.coords().begin(), e.coords().end());
  return v;
}

}  // namespace

Extension adjoin_root(const PolyNF& h_in) {
  PolyNF h = h_in.monic();
  const FieldPtr& k = h.field();
  const int n = k->degree();
  const int d = h.degree();
  if (d < 2) throw InputError("adjoin_root expects a factor of degree >= 2");
  const int total = n * d;
  NFElement theta = NFElement::generator(k);
  NFElement zero = NFElement::from_rational(k, 0);
  for (int attempt = 0; attempt < 64; ++attempt) {
    long c = (n == 1) ? 0 : (attempt + 2) / 2 * (attempt % 2 == 0 ? 1 : -1);
    NFElement shift = theta * Rational(c);
    // powers of gamma = y + c*theta
    Tower power(static_cast<std::size_t>(d), zero);
    power[0] = NFElement::from_rational(k, 1);
    MatQ p(static_cast<std::size_t>(total), static_cast<std::size_t>(total));
    for (int col = 0; col < total; ++col) {
      auto v = flatten(power);
      for (int row = 0; row < total; ++row) p(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) = v[static_cast<std::size_t>(row)];
      power = times_linear(power, shift, h);
    }
    auto inv = p.inverse();
    if (!inv) {
      if (n == 1) throw InvariantViolation("root of an irreducible polynomial is not primitive");
      continue;
    }
    auto top = inv->apply(flatten(power));
    std::vector<Rational> mp(static_cast<std::size_t>(total) + 1);
    for (int i = 0; i < total; ++i) mp[static_cast<std::size_t>(i)] = -top[static_cast<std::size_t>(i)];
    mp[static_cast<std::size_t>(total)] = 1;
    FieldPtr field = NumberField::create(PolyQ(std::move(mp)), true);

    Tower theta_t(static_cast<std::size_t>(d), zero);
    theta_t[0] = theta;
    Tower y_t(static_cast<std::size_t>(d), zero);
    y_t[1] = NFElement::from_rational(k, 1);
    NFElement old_gen(field, inv->apply(flatten(theta_t)));
    NFElement new_root(field, inv->apply(flatten(y_t)));
    return {field, old_gen, new_root};
  }
  throw InvariantViolation("no primitive element found for the extension");
}

SplittingField splitting_field(const PolyQ& f, int cap) {
  if (f.is_zero()) throw InputError("splitting_field of the zero polynomial");
  FieldPtr field = NumberField::rationals();
  std::vector<NFElement> roots;
  if (f.degree() == 0) return {field, roots};
  PolyQ g = squarefree_part(f);
  std::vector<PolyNF> pending;
  for (const auto& fac : factor_over_Q(g)) pending.push_back(PolyNF::lift(field, fac.factor));
  for (;;) {
    std::vector<PolyNF> nonlinear;
    for (const auto& h : pending) {
      auto facs = (h.degree() == 1 || field->degree() == 1) ? std::vector<NFFactor>{{h, 1}} : factor_over_field(h);
      for (auto& fac : facs) {
        if (fac.factor.degree() == 1) {
          PolyNF m = fac.factor.monic();
          roots.push_back(-m.coeffs()[0]);
        } else {
          nonlinear.push_back(std::move(fac.factor));
        }
      }
    }
    if (nonlinear.empty()) break;
    const PolyNF& h = nonlinear.front();
    if (field->degree() * h.degree() > cap) {
      throw ScaleLimitError("splitting field degree would exceed the cap of " + std::to_string(cap));
    }
    Extension ext = adjoin_root(h);
    for (auto& r : roots) r = r.substitute(ext.old_generator);
    roots.push_back(ext.new_root);
    pending.clear();
    for (std::size_t i = 0; i < nonlinear.size(); ++i) {
      PolyNF mapped = nonlinear[i].substitute(ext.old_generator);
      if (i == 0) {
        PolyNF lin(ext.field, {-ext.new_root, NFElement::from_rational(ext.field, 1)});
        mapped = mapped.divmod(lin).first;
      }
      if (mapped.degree() >= 1) pending.push_back(std::move(mapped));
    }
    field = ext.field;
  }
  PolyNF lifted = PolyNF::lift(field, g);
  for (const auto& r : roots) {
    if (!lifted(r).is_zero()) throw InvariantViolation("splitting_field produced a non-root");
  }
  return {field, roots};
}

// ---------------------------------------------------------------- Galois groups

std::shared_ptr<const GaloisGroup> GaloisGroup::compute(const FieldPtr& field) {
  const int n = field->degree();
  NFElement theta = NFElement::generator(field);
  std::vector<NFElement> images;
  if (n == 1) {
    images.push_back(theta);
  } else {
    images = roots_in_field(field->min_poly(), field);
  }
  if (static_cast<int>(images.size()) != n) {
    throw InvariantViolation("field is not normal over Q: found " + std::to_string(images.size()) + " of " +
                             std::to_string(n) + " conjugates of the generator");
  }
  std::sort(images.begin(), images.end(), [&](const NFElement& a, const NFElement& b) {
    if ((a == theta) != (b == theta)) return a == theta;
    return a.coords() < b.coords();
  });
  std::vector<Automorphism> elements;
  for (auto& img : images) elements.push_back({img});
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  auto find = [&](const NFElement& x) {
    for (int i = 0; i < n; ++i) {
      if (elements[static_cast<std::size_t>(i)].image == x) return i;
    }
    return -1;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      NFElement composed = elements[static_cast<std::size_t>(j)].image.substitute(elements[static_cast<std::size_t>(i)].image);
      int idx = find(composed);
      if (idx < 0) throw InvariantViolation("composition of automorphisms is not an automorphism");
      table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = idx;
    }
  }
  return std::shared_ptr<const GaloisGroup>(new GaloisGroup(field, std::move(elements), FiniteGroupTable(std::move(table))));
}

int GaloisGroup::index_of_image(const NFElement& image) const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].image == image) return static_cast<int>(i);
  }
  return -1;
}

PrimeLocalData prime_local_data(const GaloisGroup& group, std::uint64_t p, std::size_t factor_choice) {
  const FieldPtr& field = group.field();
  PrimeLocalData data;
  data.p = p;
  PolyFp m = PolyFp::reduce(field->min_poly(), p);
  auto facs = factor_mod_p(m);
  for (const auto& f : facs) data.factors.push_back(f.factor);
  if (factor_choice >= data.factors.size()) throw InputError("factor choice out of range");
  data.chosen_factor = data.factors[factor_choice];
  data.residue_degree = data.chosen_factor.degree();
  if (!is_squarefree(m)) {
    data.ramified = true;
    return data;
  }
  PolyFp xp = pow_mod(PolyFp::x(p), Integer(static_cast<unsigned long>(p)), data.chosen_factor);
  int found = -1;
  for (std::size_t i = 0; i < group.order(); ++i) {
    PolyFp img;
    try {
      img = group.elements()[i].image.reduce_mod(p, data.chosen_factor);
    } catch (const BadPrimeError&) {
      data.ramified = true;
      return data;
    }
    if (img == xp) {
      if (found >= 0) throw InvariantViolation("two automorphisms reduce to Frobenius at p = " + std::to_string(p));
      found = static_cast<int>(i);
    }
  }
  if (found < 0) throw InvariantViolation("no Frobenius automorphism found at p = " + std::to_string(p));
  data.frobenius_index = found;
  return data;
}

int frobenius_class(const GaloisGroup& group, std::uint64_t p) {
  PrimeLocalData data = prime_local_data(group, p);
  if (data.ramified) throw BadPrimeError("Frobenius undefined at ramified prime " + std::to_string(p));
  return group.table().class_of(data.frobenius_index);
}

NFElement normal_basis_generator(const GaloisGroup& group, int budget) {
  const FieldPtr& field = group.field();
  const int n = field->degree();
  if (n == 1) return NFElement::from_rational(field, 1);
  std::mt19937_64 rng(0x6e6f726d);
  std::uniform_int_distribution<int> small(-3, 3);
  for (int attempt = 0; attempt < budget; ++attempt) {
    std::vector<Rational> c(static_cast<std::size_t>(n), Rational(0));
    if (attempt == 0) {
      c[1] = 1;
    } else if (attempt == 1) {
      c[0] = 1;
      c[1] = 1;
    } else {
      for (auto& x : c) x = small(rng);
    }
    NFElement cand(field, c);
    MatQ m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      NFElement conj = group.apply(i, cand);
      for (int j = 0; j < n; ++j) m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = conj.coord(static_cast<std::size_t>(j));
    }
    if (m.determinant() != 0) return cand;
  }
  throw ScaleLimitError("normal basis search exhausted its candidate budget");
}

}  // namespace frobenian
