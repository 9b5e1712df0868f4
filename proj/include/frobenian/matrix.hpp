#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "frobenian/poly_q.hpp"

namespace frobenian {

/// Dense rational matrix, row-major.
class MatQ {
 public:
  MatQ() = default;
  MatQ(std::size_t rows, std::size_t cols);
  MatQ(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  MatQ(std::initializer_list<std::initializer_list<Rational>> rows);
  static MatQ identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  const std::vector<Rational>& entries() const { return a_; }

  friend MatQ operator+(const MatQ& a, const MatQ& b);
  friend MatQ operator-(const MatQ& a, const MatQ& b);
  friend MatQ operator*(const MatQ& a, const MatQ& b);
  friend MatQ operator*(const MatQ& a, const Rational& c);
  std::vector<Rational> apply(const std::vector<Rational>& v) const;
  MatQ transpose() const;

  bool is_square() const { return rows_ == cols_; }
  Rational determinant() const;
  /// Inverse, or nullopt when singular.
  std::optional<MatQ> inverse() const;
  /// det(xI - A), by Faddeev-LeVerrier.
  PolyQ charpoly() const;
  /// q(A) by Horner.
  MatQ evaluate(const PolyQ& q) const;
  MatQ pow(unsigned long n) const;
  bool is_zero() const;
  /// Least common multiple of entry denominators.
  Integer denominator_lcm() const;

  friend bool operator==(const MatQ&, const MatQ&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

/// Square matrix over F_p.
struct MatFp {
  std::uint64_t p = 2;
  std::size_t n = 0;
  std::vector<std::uint64_t> a;

  static MatFp identity(std::uint64_t p, std::size_t n);
  std::uint64_t& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
  std::uint64_t operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
  friend MatFp operator*(const MatFp& x, const MatFp& y);
  friend bool operator==(const MatFp&, const MatFp&) = default;
};

/// Reduces a rational square matrix mod p; BadPrimeError if p divides a
/// denominator.
MatFp reduce(const MatQ& m, std::uint64_t p);

/// M^n mod p by binary powering.
MatFp matrix_pow_mod(const MatQ& m, const Integer& n, std::uint64_t p);

/// Solves A x = b for square non-singular A over Q; nullopt if singular.
std::optional<std::vector<Rational>> solve(const MatQ& a, const std::vector<Rational>& b);

/// Some solution of a possibly rectangular consistent system A x = b (free
/// variables set to zero); nullopt if inconsistent.
std::optional<std::vector<Rational>> solve_any(const MatQ& a, const std::vector<Rational>& b);

}  // namespace frobenian
