#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace amorph {

/// Exact integer in the cyclotomic ring Z[zeta_L], zeta_L a primitive L-th
/// root of unity. Values are kept in the canonical power basis
/// 1, zeta, ..., zeta^{deg-1} with deg = phi(L), reduced modulo the L-th
/// cyclotomic polynomial, so equality is coefficient equality and "equals
/// the rational integer n" is the coefficient test (n, 0, ..., 0).
class CyclotomicInt {
 public:
  /// Zero at the given level.
  explicit CyclotomicInt(uint32_t level);

  static CyclotomicInt integer(uint32_t level, int64_t n);
  /// zeta_L^e (e taken modulo L), reduced to the canonical basis.
  static CyclotomicInt zeta_pow(uint32_t level, uint64_t e);

  uint32_t level() const { return level_; }
  const std::vector<int64_t>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_integer() const;
  /// Requires is_integer().
  int64_t integer_value() const;

  CyclotomicInt operator+(const CyclotomicInt& o) const;
  CyclotomicInt operator-(const CyclotomicInt& o) const;
  CyclotomicInt operator-() const;
  CyclotomicInt operator*(const CyclotomicInt& o) const;
  CyclotomicInt& operator+=(const CyclotomicInt& o);
  CyclotomicInt& operator-=(const CyclotomicInt& o);
  CyclotomicInt operator*(int64_t n) const;

  /// Adds zeta^e in place; the workhorse of direct character summation.
  void add_zeta_pow(uint64_t e);

  /// Galois twist zeta -> zeta^k, gcd(k, L) = 1.
  CyclotomicInt galois(uint64_t k) const;
  /// Complex conjugation, zeta -> zeta^{-1}.
  CyclotomicInt conjugate() const;

  bool operator==(const CyclotomicInt& o) const = default;
  /// Lexicographic on (level, coeffs); used for ordered spectra.
  std::strong_ordering operator<=>(const CyclotomicInt& o) const;

  /// "-13" for integers, "(c0 + c1*z + ...)" otherwise (z = zeta_L).
  std::string to_string() const;

  /// Coefficients of the L-th cyclotomic polynomial, constant term first.
  static std::vector<int64_t> cyclotomic_polynomial(uint32_t L);

 private:
  uint32_t level_;
  std::vector<int64_t> coeffs_;  // size phi(L)
};

}  // namespace amorph
