#include "frobenian/poly_q.hpp"

#include <algorithm>
#include <cctype>

#include "frobenian/errors.hpp"

namespace frobenian {

PolyQ::PolyQ(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  normalize();
}

void PolyQ::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PolyQ PolyQ::constant(const Rational& c) { return PolyQ(std::vector<Rational>{c}); }

PolyQ PolyQ::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
  v.back() = c;
  return PolyQ(std::move(v));
}

Rational PolyQ::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

PolyQ& PolyQ::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return PolyQ(std::move(out));
}

PolyQ PolyQ::operator-() const {
  PolyQ r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::pair<PolyQ, PolyQ> PolyQ::divmod(const PolyQ& divisor) const {
  if (divisor.is_zero()) throw InputError("polynomial division by zero");
  std::vector<Rational> rem = coeffs_;
  int dd = divisor.degree();
  if (degree() < dd) return {PolyQ{}, *this};
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd) + 1, Rational(0));
  Rational inv_lead = 1 / divisor.leading();
  for (int i = degree(); i >= dd; --i) {
    const Rational& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    Rational q = top * inv_lead;
    quot[static_cast<std::size_t>(i - dd)] = q;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= q * divisor.coeffs_[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {PolyQ(std::move(quot)), PolyQ(std::move(rem))};
}

PolyQ PolyQ::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return PolyQ(std::move(d));
}

PolyQ PolyQ::monic() const {
  if (is_zero()) return {};
  return *this * (1 / leading());
}

Rational PolyQ::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PolyQ PolyQ::compose(const PolyQ& inner) const {
  PolyQ acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + constant(*it);
  return acc;
}

Integer PolyQ::denominator_lcm() const {
  Integer l = 1;
  for (const auto& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

std::string PolyQ::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    Rational c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    bool negative = c < 0;
    Rational mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    bool unit = (mag == 1);
    if (i == 0) {
      out += frobenian::to_string(mag);
    } else {
      if (!unit) out += frobenian::to_string(mag) + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

bool canonical_less(const PolyQ& a, const PolyQ& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] != cb[i]) return ca[i] < cb[i];
  }
  return false;
}

PolyQ gcd(PolyQ a, PolyQ b) {
  while (!b.is_zero()) {
    PolyQ r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

PolyQ lcm(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return (a * b / gcd(a, b)).monic();
}

ExtendedGcd extended_gcd(const PolyQ& a, const PolyQ& b) {
  PolyQ r0 = a, r1 = b;
  PolyQ s0 = PolyQ::constant(1), s1;
  PolyQ t0, t1 = PolyQ::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    PolyQ s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    PolyQ t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = 1 / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

PolyQ squarefree_part(const PolyQ& f) {
  if (f.is_zero()) throw InputError("squarefree_part of the zero polynomial");
  if (f.degree() == 0) return PolyQ::constant(1);
  return (f / gcd(f, f.derivative())).monic();
}

Rational resultant(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  // res(a, b) with the standard sign bookkeeping of the Euclidean algorithm
  PolyQ f = a, g = b;
  Rational res = 1;
  while (g.degree() > 0) {
    int df = f.degree(), dg = g.degree();
    PolyQ r = f % g;
    if (r.is_zero()) return 0;
    if ((df * dg) % 2 == 1) res = -res;
    Rational lg = g.leading();
    for (int i = 0; i < df - r.degree(); ++i) res *= lg;
    f = std::move(g);
    g = std::move(r);
  }
  // g is a non-zero constant now
  Rational c = g.leading();
  for (int i = 0; i < f.degree(); ++i) res *= c;
  return res;
}

Rational discriminant(const PolyQ& f) {
  int n = f.degree();
  if (n < 1) throw InputError("discriminant needs degree >= 1");
  Rational r = resultant(f, f.derivative());
  Rational sign = ((n * (n - 1) / 2) % 2 == 0) ? 1 : -1;
  return sign * r / f.leading();
}

std::vector<Integer> primitive_integer_coeffs(const PolyQ& f) {
  Integer den = f.denominator_lcm();
  std::vector<Integer> out;
  out.reserve(f.coeffs().size());
  Integer content = 0;
  for (const auto& c : f.coeffs()) {
    Integer z = c.get_num() * (den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
    out.push_back(z);
  }
  if (content == 0) return out;
  if (!out.empty() && out.back() < 0) content = -content;
  for (auto& z : out) z /= content;
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& text, char var) : var_(var) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
    }
  }

  PolyQ parse() {
    if (s_.empty()) throw InputError("empty polynomial");
    PolyQ acc;
    bool first = true;
    while (pos_ < s_.size()) {
      Rational sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        if (s_[pos_] == '-') sign = -1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      acc += term() * sign;
      first = false;
    }
    return acc;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("cannot parse polynomial '" + s_ + "' at position " + std::to_string(pos_) + ": " + what);
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  PolyQ term() {
    Rational coeff = 1;
    bool have_coeff = false;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::string num = digits();
      std::string den = "1";
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        den = digits();
        if (den.empty()) fail("missing denominator");
      }
      coeff = parse_rational(num + "/" + den);
      have_coeff = true;
      if (pos_ < s_.size() && s_[pos_] == '*') ++pos_;
    }
    if (pos_ < s_.size() && s_[pos_] == var_) {
      ++pos_;
      int exponent = 1;
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        std::string e = digits();
        if (e.empty()) fail("missing exponent");
        exponent = std::stoi(e);
      }
      return PolyQ::monomial(coeff, exponent);
    }
    if (!have_coeff) fail("expected a coefficient or the variable");
    return PolyQ::constant(coeff);
  }

  std::string s_;
  std::size_t pos_ = 0;
  char var_;
};

}  // namespace

PolyQ parse_poly(const std::string& text, char var) { return PolyParser(text, var).parse(); }

}  // namespace frobenian
