#include "frobenian/matrix.hpp"

#include "frobenian/errors.hpp"

namespace frobenian {

MatQ::MatQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

MatQ::MatQ(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows * cols) throw InputError("matrix entry count does not match shape");
}

MatQ::MatQ(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("ragged matrix literal");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

MatQ MatQ::identity(std::size_t n) {
  MatQ m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

MatQ operator+(const MatQ& a, const MatQ& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix shape mismatch");
  MatQ out = a;
  for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] += b.a_[i];
  return out;
}

MatQ operator-(const MatQ& a, const MatQ& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix shape mismatch");
  MatQ out = a;
  for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] -= b.a_[i];
  return out;
}

MatQ operator*(const MatQ& a, const MatQ& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix shape mismatch");
  MatQ out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  }
  return out;
}

MatQ operator*(const MatQ& a, const Rational& c) {
  MatQ out = a;
  for (auto& x : out.a_) x *= c;
  return out;
}

std::vector<Rational> MatQ::apply(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw InputError("vector length mismatch");
  std::vector<Rational> out(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  }
  return out;
}

MatQ MatQ::transpose() const {
  MatQ out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

Rational MatQ::determinant() const {
  if (!is_square()) throw InputError("determinant of a non-square matrix");
  MatQ m = *this;
  Rational det = 1;
  const std::size_t n = rows_;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m(pivot, c) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    Rational inv = 1 / m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      Rational f = m(r, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

std::optional<MatQ> MatQ::inverse() const {
  if (!is_square()) throw InputError("inverse of a non-square matrix");
  const std::size_t n = rows_;
  MatQ m = *this;
  MatQ inv = identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m(pivot, c) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(pivot, j), m(c, j));
        std::swap(inv(pivot, j), inv(c, j));
      }
    }
    Rational s = 1 / m(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) *= s;
      inv(c, j) *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m(r, c) == 0) continue;
      Rational f = m(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(r, j) -= f * m(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

PolyQ MatQ::charpoly() const {
  if (!is_square()) throw InputError("charpoly of a non-square matrix");
  const std::size_t n = rows_;
  // M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k)/k
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  MatQ mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = *this * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    MatQ am = *this * mk;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / static_cast<long>(k);
  }
  return PolyQ(std::move(c));
}

MatQ MatQ::evaluate(const PolyQ& q) const {
  const std::size_t n = rows_;
  MatQ acc(n, n);
  const auto& cs = q.coeffs();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
    acc = acc * *this;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
  }
  return acc;
}

MatQ MatQ::pow(unsigned long n) const {
  MatQ result = identity(rows_);
  MatQ base = *this;
  while (n > 0) {
    if (n & 1UL) result = result * base;
    base = base * base;
    n >>= 1U;
  }
  return result;
}

bool MatQ::is_zero() const {
  for (const auto& x : a_) {
    if (x != 0) return false;
  }
  return true;
}

Integer MatQ::denominator_lcm() const {
  Integer l = 1;
  for (const auto& x : a_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

MatFp MatFp::identity(std::uint64_t p, std::size_t n) {
  MatFp m{p, n, std::vector<std::uint64_t>(n * n, 0)};
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1 % p;
  return m;
}

MatFp operator*(const MatFp& x, const MatFp& y) {
  const std::size_t n = x.n;
  MatFp out{x.p, n, std::vector<std::uint64_t>(n * n, 0)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      unsigned __int128 acc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        acc += static_cast<unsigned __int128>(x(i, k)) * y(k, j);
        if (acc >> 120) acc %= x.p;
      }
      out(i, j) = static_cast<std::uint64_t>(acc % x.p);
    }
  }
  return out;
}

MatFp reduce(const MatQ& m, std::uint64_t p) {
  if (!m.is_square()) throw InputError("reduce expects a square matrix");
  MatFp out{p, m.rows(), {}};
  out.a.reserve(m.entries().size());
  for (const auto& x : m.entries()) out.a.push_back(reduce_mod(x, p));
  return out;
}

MatFp matrix_pow_mod(const MatQ& m, const Integer& n, std::uint64_t p) {
  if (n < 0) throw InputError("matrix_pow_mod needs a non-negative exponent");
  MatFp base = reduce(m, p);
  MatFp result = MatFp::identity(p, m.rows());
  std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = result * result;
    if (mpz_tstbit(n.get_mpz_t(), i)) result = result * base;
  }
  return result;
}

std::optional<std::vector<Rational>> solve(const MatQ& a, const std::vector<Rational>& b) {
  auto inv = a.inverse();
  if (!inv) return std::nullopt;
  return inv->apply(b);
}

std::optional<std::vector<Rational>> solve_any(const MatQ& a, const std::vector<Rational>& b) {
  if (b.size() != a.rows()) throw InputError("right-hand side length mismatch");
  const std::size_t rows = a.rows(), cols = a.cols();
  MatQ m(rows, cols + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = a(i, j);
    m(i, cols) = b[i];
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    for (std::size_t j = 0; j <= cols; ++j) std::swap(m(piv, j), m(r, j));
    Rational s = 1 / m(r, c);
    for (std::size_t j = 0; j <= cols; ++j) m(r, j) *= s;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = 0; j <= cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (m(i, cols) != 0) return std::nullopt;
  }
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = m(i, cols);
  return x;
}

}  // namespace frobenian
