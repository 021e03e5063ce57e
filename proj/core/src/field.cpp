#include "amorph/field.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace amorph {
namespace {

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Polynomial helpers over Z_p, coefficient vectors constant term first.
using Poly = std::vector<uint32_t>;

Poly poly_mod(Poly a, const Poly& m, uint32_t p) {
  const size_t dm = m.size() - 1;
  while (a.size() > dm) {
    uint32_t lead = a.back();
    if (lead != 0) {
      // m is monic
      const size_t shift = a.size() - 1 - dm;
      for (size_t i = 0; i <= dm; ++i) {
        uint64_t t = a[shift + i] + static_cast<uint64_t>(lead) * (p - m[i] % p);
        a[shift + i] = static_cast<uint32_t>(t % p);
      }
    }
    a.pop_back();
  }
  return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& m, uint32_t p) {
  Poly prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = static_cast<uint32_t>((prod[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p);
  }
  return poly_mod(std::move(prod), m, p);
}

bool poly_divides(const Poly& d, Poly a, uint32_t p) {
  // d monic; true iff d | a over Z_p
  a = poly_mod(std::move(a), d, p);
  return std::all_of(a.begin(), a.end(), [](uint32_t c) { return c == 0; });
}

bool is_irreducible(const Poly& m, uint32_t p) {
  const size_t s = m.size() - 1;
  if (s == 0) return false;
  if (s == 1) return true;
  // no monic divisor of degree 1..s/2
  for (size_t d = 1; 2 * d <= s; ++d) {
    uint64_t count = 1;
    for (size_t i = 0; i < d; ++i) count *= p;
    for (uint64_t r = 0; r < count; ++r) {
      Poly cand(d + 1, 0);
      uint64_t t = r;
      for (size_t i = 0; i < d; ++i) {
        cand[i] = static_cast<uint32_t>(t % p);
        t /= p;
      }
      cand[d] = 1;
      if (poly_divides(cand, m, p)) return false;
    }
  }
  return true;
}

bool is_prime(uint32_t p) {
  if (p < 2) return false;
  for (uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Pinned moduli for the fields the constructions need; anything else gets
// the smallest-rank irreducible. All are re-validated at construction.
const std::map<std::pair<uint32_t, uint32_t>, Poly>& builtin_moduli() {
  static const std::map<std::pair<uint32_t, uint32_t>, Poly> table = {
      {{2, 2}, {1, 1, 1}},           // x^2+x+1
      {{2, 3}, {1, 1, 0, 1}},        // x^3+x+1
      {{2, 4}, {1, 1, 0, 0, 1}},     // x^4+x+1
      {{2, 6}, {1, 1, 0, 0, 0, 0, 1}},  // x^6+x+1
      {{2, 8}, {1, 1, 0, 1, 1, 0, 0, 0, 1}},  // x^8+x^4+x^3+x+1
      {{3, 2}, {1, 0, 1}},           // x^2+1
      {{3, 3}, {1, 2, 0, 1}},        // x^3+2x+1
      {{3, 4}, {2, 1, 0, 0, 1}},     // x^4+x+2
      {{5, 2}, {2, 1, 1}},           // x^2+x+2
  };
  return table;
}

}  // namespace

Field Field::prime(uint32_t p) { return Field(p, {0, 1}); }

Field Field::extension(uint32_t p, uint32_t s) {
  if (s == 1) return prime(p);
  auto it = builtin_moduli().find({p, s});
  if (it != builtin_moduli().end()) return Field(p, it->second);
  // smallest-rank monic irreducible of degree s
  uint64_t count = 1;
  for (uint32_t i = 0; i < s; ++i) count *= p;
  for (uint64_t r = 0; r < count; ++r) {
    Poly cand(s + 1, 0);
    uint64_t t = r;
    for (uint32_t i = 0; i < s; ++i) {
      cand[i] = static_cast<uint32_t>(t % p);
      t /= p;
    }
    cand[s] = 1;
    if (is_irreducible(cand, p)) return Field(p, cand);
  }
  throw std::logic_error("Field::extension: no irreducible polynomial found");
}

Field Field::with_modulus(uint32_t p, std::vector<uint32_t> modulus) {
  return Field(p, std::move(modulus));
}

Field::Field(uint32_t p, std::vector<uint32_t> modulus)
    : p_(p), modulus_(std::move(modulus)) {
  if (!is_prime(p_)) throw std::invalid_argument("Field: characteristic must be prime");
  if (modulus_.size() < 2) throw std::invalid_argument("Field: modulus must have degree >= 1");
  s_ = static_cast<uint32_t>(modulus_.size() - 1);
  for (auto& c : modulus_) c %= p_;
  if (modulus_.back() != 1) throw std::invalid_argument("Field: modulus must be monic");
  if (!is_irreducible(modulus_, p_))
    throw std::invalid_argument("Field: modulus is not irreducible");
  q_ = 1;
  for (uint32_t i = 0; i < s_; ++i) {
    q_ *= p_;
    if (q_ > (1u << 20)) throw std::invalid_argument("Field: order too large");
  }

  // primitive element: smallest rank of multiplicative order q-1
  const uint64_t group_order = q_ - 1;
  const auto pf = prime_factors(group_order);
  auto pow_raw = [&](uint32_t base, uint64_t e) {
    uint32_t acc = 1, b = base;
    while (e) {
      if (e & 1) acc = mul_raw(acc, b);
      b = mul_raw(b, b);
      e >>= 1;
    }
    return acc;
  };
  g_rank_ = 1;
  if (group_order > 1) {
    for (uint32_t cand = 2; cand < q_; ++cand) {
      bool primitive = true;
      for (uint64_t f : pf)
        if (pow_raw(cand, group_order / f) == 1) {
          primitive = false;
          break;
        }
      if (primitive) {
        g_rank_ = cand;
        break;
      }
    }
  }

  exp_.resize(group_order);
  log_.assign(q_, 0);
  uint32_t acc = 1;
  for (uint64_t i = 0; i < group_order; ++i) {
    exp_[i] = acc;
    log_[acc] = static_cast<uint32_t>(i);
    acc = mul_raw(acc, g_rank_);
  }
  if (acc != 1) throw std::logic_error("Field: generator order mismatch");

  // tr(x) = x + x^p + ... + x^{p^{s-1}}; lies in the prime subfield, so the
  // rank of the sum is the scalar trace value.
  trace_.resize(q_);
  for (uint32_t r = 0; r < q_; ++r) {
    uint32_t sum = 0, y = r;
    for (uint32_t i = 0; i < s_; ++i) {
      sum = add({sum}, {y}).rank;
      y = pow_raw(y, p_);
    }
    if (sum >= p_) throw std::logic_error("Field: trace not in prime subfield");
    trace_[r] = sum;
  }
}

uint32_t Field::mul_raw(uint32_t a, uint32_t b) const {
  Poly pa(s_), pb(s_);
  uint32_t ta = a, tb = b;
  for (uint32_t i = 0; i < s_; ++i) {
    pa[i] = ta % p_;
    ta /= p_;
    pb[i] = tb % p_;
    tb /= p_;
  }
  Poly prod = poly_mul_mod(pa, pb, modulus_, p_);
  uint32_t r = 0, stride = 1;
  for (uint32_t i = 0; i < s_; ++i) {
    if (i < prod.size()) r += prod[i] * stride;
    stride *= p_;
  }
  return r;
}

FieldElement Field::element(uint64_t rank) const {
  if (rank >= q_) throw std::out_of_range("Field::element: rank out of range");
  return {static_cast<uint32_t>(rank)};
}

FieldElement Field::from_coeffs(const std::vector<uint32_t>& c) const {
  if (c.size() != s_) throw std::invalid_argument("Field::from_coeffs: wrong length");
  uint32_t r = 0, stride = 1;
  for (uint32_t i = 0; i < s_; ++i) {
    if (c[i] >= p_) throw std::invalid_argument("Field::from_coeffs: coefficient out of range");
    r += c[i] * stride;
    stride *= p_;
  }
  return {r};
}

std::vector<uint32_t> Field::coeffs(FieldElement x) const {
  std::vector<uint32_t> c(s_);
  uint32_t t = x.rank;
  for (uint32_t i = 0; i < s_; ++i) {
    c[i] = t % p_;
    t /= p_;
  }
  return c;
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
  uint32_t out = 0, stride = 1, ta = a.rank, tb = b.rank;
  for (uint32_t i = 0; i < s_; ++i) {
    uint32_t s = ta % p_ + tb % p_;
    if (s >= p_) s -= p_;
    out += s * stride;
    stride *= p_;
    ta /= p_;
    tb /= p_;
  }
  return {out};
}

FieldElement Field::neg(FieldElement a) const {
  uint32_t out = 0, stride = 1, ta = a.rank;
  for (uint32_t i = 0; i < s_; ++i) {
    uint32_t r = ta % p_;
    out += (r == 0 ? 0 : p_ - r) * stride;
    stride *= p_;
    ta /= p_;
  }
  return {out};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement Field::mul(FieldElement a, FieldElement b) const {
  if (a.rank == 0 || b.rank == 0) return {0};
  uint64_t e = log_[a.rank] + log_[b.rank];
  if (e >= q_ - 1) e -= q_ - 1;
  return {exp_[e]};
}

FieldElement Field::inv(FieldElement a) const {
  if (a.rank == 0) throw std::domain_error("Field::inv: zero has no inverse");
  const uint64_t l = log_[a.rank];
  return {exp_[(q_ - 1 - l) % (q_ - 1)]};
}

FieldElement Field::pow(FieldElement a, uint64_t e) const {
  if (a.rank == 0) return e == 0 ? one() : zero();
  const uint64_t l = log_[a.rank] % (q_ - 1);
  return {exp_[l * (e % (q_ - 1)) % (q_ - 1)]};
}

uint64_t Field::log(FieldElement x) const {
  if (x.rank == 0) throw std::domain_error("Field::log: zero");
  return log_[x.rank];
}

SubfieldEmbedding::SubfieldEmbedding(Field big, Field sub)
    : big_(std::move(big)), sub_(std::move(sub)) {
  if (big_.characteristic() != sub_.characteristic())
    throw std::invalid_argument("SubfieldEmbedding: characteristic mismatch");
  if (big_.degree() % sub_.degree() != 0)
    throw std::invalid_argument("SubfieldEmbedding: subfield degree must divide field degree");
  ext_ = big_.degree() / sub_.degree();
  const uint64_t q = big_.order(), q0 = sub_.order();
  const uint64_t step = (q - 1) / (q0 - 1);

  embed_.assign(q0, 0);
  auto try_root = [&](uint64_t j) {
    embed_[0] = 0;
    FieldElement r = big_.exp(step * j);
    embed_[sub_.exp(0).rank] = big_.exp(0).rank;
    for (uint64_t k = 1; k < q0 - 1; ++k)
      embed_[sub_.exp(k).rank] = big_.pow(r, k).rank;
    // a multiplicative, additive, unital map is a ring embedding
    for (uint64_t x = 0; x < q0; ++x)
      for (uint64_t y = x; y < q0; ++y) {
        FieldElement fx{embed_[x]}, fy{embed_[y]};
        uint32_t lhs = embed_[sub_.add({static_cast<uint32_t>(x)}, {static_cast<uint32_t>(y)}).rank];
        if (big_.add(fx, fy).rank != lhs) return false;
      }
    return true;
  };
  bool found = false;
  for (uint64_t j = 1; j < q0; ++j) {
    if (std::gcd(j, q0 - 1) != 1) continue;
    if (try_root(j)) {
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("SubfieldEmbedding: no additive generator image");

  back_.assign(q, -1);
  for (uint64_t x = 0; x < q0; ++x) back_[embed_[x]] = static_cast<int64_t>(x);

  basis_pow_.resize(ext_);
  // x in the polynomial basis has rank p (coefficient vector (0,1,0,...))
  const FieldElement xb =
      big_.degree() == 1 ? big_.one() : big_.element(big_.characteristic());
  FieldElement acc = big_.one();
  for (uint32_t j = 0; j < ext_; ++j) {
    basis_pow_[j] = acc.rank;
    acc = big_.mul(acc, xb);
  }

  // coordinate matrix: column (j*ssub + l) = coeffs(x^j * embed(e_l))
  const uint32_t p = big_.characteristic(), s = big_.degree(), ssub = sub_.degree();
  std::vector<std::vector<uint32_t>> m(s, std::vector<uint32_t>(s, 0));
  for (uint32_t j = 0; j < ext_; ++j)
    for (uint32_t l = 0; l < ssub; ++l) {
      uint32_t sub_rank = 1;
      for (uint32_t i = 0; i < l; ++i) sub_rank *= p;
      FieldElement col = big_.mul({basis_pow_[j]}, {embed_[sub_rank]});
      auto cc = big_.coeffs(col);
      for (uint32_t i = 0; i < s; ++i) m[i][j * ssub + l] = cc[i];
    }
  // invert m over Z_p by Gauss-Jordan
  minv_.assign(s, std::vector<uint32_t>(s, 0));
  for (uint32_t i = 0; i < s; ++i) minv_[i][i] = 1;
  auto inv_mod = [&](uint32_t a) {
    for (uint32_t x = 1; x < p; ++x)
      if (a * x % p == 1) return x;
    throw std::logic_error("SubfieldEmbedding: singular pivot");
  };
  for (uint32_t col = 0; col < s; ++col) {
    uint32_t piv = col;
    while (piv < s && m[piv][col] == 0) ++piv;
    if (piv == s) throw std::logic_error("SubfieldEmbedding: coordinate matrix singular");
    std::swap(m[piv], m[col]);
    std::swap(minv_[piv], minv_[col]);
    const uint32_t f = inv_mod(m[col][col]);
    for (uint32_t k = 0; k < s; ++k) {
      m[col][k] = m[col][k] * f % p;
      minv_[col][k] = minv_[col][k] * f % p;
    }
    for (uint32_t row = 0; row < s; ++row) {
      if (row == col || m[row][col] == 0) continue;
      const uint32_t f2 = m[row][col];
      for (uint32_t k = 0; k < s; ++k) {
        m[row][k] = (m[row][k] + (p - f2) * m[col][k]) % p;
        minv_[row][k] = (minv_[row][k] + (p - f2) * minv_[col][k]) % p;
      }
    }
  }
}

FieldElement SubfieldEmbedding::pull_back(FieldElement y) const {
  const int64_t r = back_[y.rank];
  if (r < 0) throw std::domain_error("SubfieldEmbedding::pull_back: not in subfield image");
  return {static_cast<uint32_t>(r)};
}

FieldElement SubfieldEmbedding::trace_in_big(FieldElement x) const {
  FieldElement acc = x, y = x;
  for (uint32_t i = 1; i < ext_; ++i) {
    y = big_.pow(y, sub_.order());
    acc = big_.add(acc, y);
  }
  return acc;
}

FieldElement SubfieldEmbedding::trace(FieldElement x) const {
  return pull_back(trace_in_big(x));
}

std::vector<FieldElement> SubfieldEmbedding::decompose(FieldElement y) const {
  const uint32_t p = big_.characteristic(), s = big_.degree(), ssub = sub_.degree();
  const auto yc = big_.coeffs(y);
  std::vector<uint32_t> c(s, 0);
  for (uint32_t i = 0; i < s; ++i) {
    uint64_t acc = 0;
    for (uint32_t k = 0; k < s; ++k) acc += static_cast<uint64_t>(minv_[i][k]) * yc[k];
    c[i] = static_cast<uint32_t>(acc % p);
  }
  std::vector<FieldElement> out(ext_);
  for (uint32_t j = 0; j < ext_; ++j) {
    std::vector<uint32_t> sc(c.begin() + j * ssub, c.begin() + (j + 1) * ssub);
    out[j] = sub_.from_coeffs(sc);
  }
  return out;
}

FieldElement SubfieldEmbedding::compose(std::span<const FieldElement> c) const {
  if (c.size() != ext_) throw std::invalid_argument("SubfieldEmbedding::compose: wrong length");
  FieldElement acc = big_.zero();
  for (uint32_t j = 0; j < ext_; ++j)
    acc = big_.add(acc, big_.mul({embed_[c[j].rank]}, {basis_pow_[j]}));
  return acc;
}

std::vector<FieldElement> trace_zero_elements(const Field& fq2) {
  if (fq2.degree() % 2 != 0)
    throw std::invalid_argument("trace_zero_elements: field degree must be even");
  uint64_t q = 1;
  for (uint32_t i = 0; i < fq2.degree() / 2; ++i) q *= fq2.characteristic();
  std::vector<FieldElement> out;
  out.reserve(q);
  out.push_back(fq2.zero());
  const uint64_t offset = fq2.characteristic() == 2 ? 0 : (q + 1) / 2;
  for (uint64_t i = 0; i + 1 < q; ++i) out.push_back(fq2.exp(offset + (q + 1) * i));
  return out;
}

GroupSpec additive_group(const Field& f) {
  return GroupSpec(std::vector<uint32_t>(f.degree(), f.characteristic()));
}

GroupSpec vector_group(const Field& f, uint32_t n) {
  return GroupSpec(std::vector<uint32_t>(static_cast<size_t>(f.degree()) * n, f.characteristic()));
}

GroupElement as_group_element(const Field& f, FieldElement x) {
  return {f.coeffs(x)};
}

GroupElement as_group_element(const Field& f, std::span<const FieldElement> v) {
  GroupElement g;
  g.residues.reserve(f.degree() * v.size());
  for (FieldElement x : v) {
    auto c = f.coeffs(x);
    g.residues.insert(g.residues.end(), c.begin(), c.end());
  }
  return g;
}

FieldElement field_from_group(const Field& f, const GroupElement& g) {
  if (g.residues.size() != f.degree())
    throw std::invalid_argument("field_from_group: residue length mismatch");
  return f.from_coeffs(g.residues);
}

std::vector<FieldElement> vector_from_group(const Field& f, const GroupElement& g) {
  const uint32_t s = f.degree();
  if (g.residues.size() % s != 0)
    throw std::invalid_argument("vector_from_group: residue length mismatch");
  std::vector<FieldElement> v(g.residues.size() / s);
  for (size_t i = 0; i < v.size(); ++i)
    v[i] = f.from_coeffs({g.residues.begin() + i * s, g.residues.begin() + (i + 1) * s});
  return v;
}

}  // namespace amorph
