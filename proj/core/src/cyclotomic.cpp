#include "amorph/cyclotomic.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace amorph {
namespace {

// Exact division of polynomials with integer coefficients (remainder must
// vanish; cyclotomic polynomials divide x^L - 1 exactly).
std::vector<int64_t> exact_div(std::vector<int64_t> num, const std::vector<int64_t>& den) {
  const size_t dn = den.size() - 1;
  if (num.size() < den.size()) throw std::logic_error("cyclotomic: bad division");
  std::vector<int64_t> quot(num.size() - dn, 0);
  for (size_t i = num.size(); i-- > dn;) {
    int64_t c = num[i];
    if (c % den[dn] != 0) throw std::logic_error("cyclotomic: inexact division");
    int64_t q = c / den[dn];
    quot[i - dn] = q;
    for (size_t j = 0; j <= dn; ++j) num[i - dn + j] -= q * den[j];
  }
  for (int64_t c : num)
    if (c != 0) throw std::logic_error("cyclotomic: nonzero remainder");
  return quot;
}

// Phi_d for every divisor d of L, built bottom-up: Phi_d = (x^d - 1) / prod
// of Phi_e over proper divisors e | d.
std::map<uint32_t, std::vector<int64_t>> compute_phi_tower(uint32_t L) {
  std::map<uint32_t, std::vector<int64_t>> tower;
  for (uint32_t d = 1; d <= L; ++d) {
    if (L % d != 0) continue;
    std::vector<int64_t> num(d + 1, 0);
    num[0] = -1;
    num[d] = 1;
    for (uint32_t e = 1; e < d; ++e)
      if (d % e == 0) num = exact_div(std::move(num), tower.at(e));
    tower.emplace(d, std::move(num));
  }
  return tower;
}

// Per-level reduction data: zeta^e in the canonical basis for 0 <= e < L.
struct Basis {
  uint32_t deg;
  std::vector<std::vector<int64_t>> zeta_row;  // L rows of length deg
};

const Basis& basis_for(uint32_t L) {
  static std::map<uint32_t, Basis> cache;
  static std::shared_mutex mtx;
  {
    std::shared_lock lock(mtx);
    auto it = cache.find(L);
    if (it != cache.end()) return it->second;
  }
  std::unique_lock lock(mtx);
  auto it = cache.find(L);
  if (it != cache.end()) return it->second;

  auto phi = CyclotomicInt::cyclotomic_polynomial(L);
  Basis b;
  b.deg = static_cast<uint32_t>(phi.size() - 1);
  b.zeta_row.assign(L, std::vector<int64_t>(b.deg, 0));
  for (uint32_t e = 0; e < L && e < b.deg; ++e) b.zeta_row[e][e] = 1;
  // zeta^e = zeta * zeta^{e-1}; shifting past deg-1 substitutes
  // zeta^deg = -(phi[0] + phi[1] zeta + ... + phi[deg-1] zeta^{deg-1}).
  for (uint32_t e = b.deg; e < L; ++e) {
    const auto& prev = b.zeta_row[e - 1];
    auto& row = b.zeta_row[e];
    int64_t top = prev[b.deg - 1];
    for (uint32_t i = 0; i < b.deg; ++i) row[i] = -top * phi[i];
    for (uint32_t i = 0; i + 1 < b.deg; ++i) row[i + 1] += prev[i];
  }
  return cache.emplace(L, std::move(b)).first->second;
}

}  // namespace

std::vector<int64_t> CyclotomicInt::cyclotomic_polynomial(uint32_t L) {
  if (L == 0) throw std::invalid_argument("cyclotomic level must be positive");
  static std::map<uint32_t, std::vector<int64_t>> cache;
  static std::shared_mutex mtx;
  {
    std::shared_lock lock(mtx);
    auto it = cache.find(L);
    if (it != cache.end()) return it->second;
  }
  auto tower = compute_phi_tower(L);
  std::unique_lock lock(mtx);
  for (auto& [d, phi] : tower) cache.emplace(d, std::move(phi));
  return cache.at(L);
}

CyclotomicInt::CyclotomicInt(uint32_t level)
    : level_(level), coeffs_(basis_for(level).deg, 0) {}

CyclotomicInt CyclotomicInt::integer(uint32_t level, int64_t n) {
  CyclotomicInt z(level);
  z.coeffs_[0] = n;
  return z;
}

CyclotomicInt CyclotomicInt::zeta_pow(uint32_t level, uint64_t e) {
  CyclotomicInt z(level);
  z.coeffs_ = basis_for(level).zeta_row[e % level];
  return z;
}

bool CyclotomicInt::is_zero() const {
  for (int64_t c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CyclotomicInt::is_integer() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

int64_t CyclotomicInt::integer_value() const {
  if (!is_integer()) throw std::logic_error("CyclotomicInt: not a rational integer");
  return coeffs_[0];
}

CyclotomicInt CyclotomicInt::operator+(const CyclotomicInt& o) const {
  CyclotomicInt r(*this);
  r += o;
  return r;
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& o) {
  if (level_ != o.level_) throw std::invalid_argument("CyclotomicInt: level mismatch");
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& o) {
  if (level_ != o.level_) throw std::invalid_argument("CyclotomicInt: level mismatch");
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CyclotomicInt CyclotomicInt::operator-(const CyclotomicInt& o) const {
  CyclotomicInt r(*this);
  r -= o;
  return r;
}

CyclotomicInt CyclotomicInt::operator-() const {
  CyclotomicInt r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CyclotomicInt CyclotomicInt::operator*(int64_t n) const {
  CyclotomicInt r(*this);
  for (auto& c : r.coeffs_) c *= n;
  return r;
}

CyclotomicInt CyclotomicInt::operator*(const CyclotomicInt& o) const {
  if (level_ != o.level_) throw std::invalid_argument("CyclotomicInt: level mismatch");
  const Basis& b = basis_for(level_);
  const uint32_t deg = b.deg;
  std::vector<int64_t> prod(2 * deg - 1, 0);
  for (uint32_t i = 0; i < deg; ++i) {
    if (coeffs_[i] == 0) continue;
    for (uint32_t j = 0; j < deg; ++j) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  CyclotomicInt r(level_);
  for (uint32_t i = 0; i < deg; ++i) r.coeffs_[i] = prod[i];
  for (uint32_t e = deg; e < prod.size(); ++e) {
    if (prod[e] == 0) continue;
    const auto& row = b.zeta_row[e % level_];  // e < 2 deg - 1 < 2L, exponent mod L
    for (uint32_t i = 0; i < deg; ++i) r.coeffs_[i] += prod[e] * row[i];
  }
  return r;
}

void CyclotomicInt::add_zeta_pow(uint64_t e) {
  const auto& row = basis_for(level_).zeta_row[e % level_];
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += row[i];
}

CyclotomicInt CyclotomicInt::galois(uint64_t k) const {
  const Basis& b = basis_for(level_);
  CyclotomicInt r(level_);
  for (uint32_t i = 0; i < b.deg; ++i) {
    if (coeffs_[i] == 0) continue;
    const auto& row = b.zeta_row[(static_cast<uint64_t>(i) * k) % level_];
    for (uint32_t j = 0; j < b.deg; ++j) r.coeffs_[j] += coeffs_[i] * row[j];
  }
  return r;
}

CyclotomicInt CyclotomicInt::conjugate() const { return galois(level_ - 1 == 0 ? 1 : level_ - 1); }

std::strong_ordering CyclotomicInt::operator<=>(const CyclotomicInt& o) const {
  if (auto c = level_ <=> o.level_; c != 0) return c;
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (auto c = coeffs_[i] <=> o.coeffs_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::string CyclotomicInt::to_string() const {
  if (is_integer()) return std::to_string(coeffs_[0]);
  std::string s = "(";
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) s += coeffs_[i] > 0 ? " + " : " - ";
    int64_t a = first ? coeffs_[i] : std::abs(coeffs_[i]);
    first = false;
    if (i == 0) {
      s += std::to_string(a);
    } else {
      if (a != 1 && a != -1) s += std::to_string(a) + "*";
      if (a == -1) s += "-";
      s += "z";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  s += ")";
  return s;
}

}  // namespace amorph
