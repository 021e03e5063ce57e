#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "amorph/group.hpp"

namespace amorph {

/// Element of a finite field, identified by its rank: the coefficient
/// vector of the polynomial-basis representation read as a base-p integer
/// (constant term least significant).
struct FieldElement {
  uint32_t rank = 0;
  constexpr auto operator<=>(const FieldElement&) const = default;
};

/// F_{p^s} as Z_p[x]/(modulus), with exp/log tables for a fixed primitive
/// element. Immutable after construction; all operations are pure.
class Field {
 public:
  /// The prime field Z_p.
  static Field prime(uint32_t p);
  /// F_{p^s} with the built-in modulus when one is pinned for (p, s),
  /// otherwise the smallest-rank monic irreducible of degree s.
  static Field extension(uint32_t p, uint32_t s);
  /// User-supplied monic modulus (constant term first, length s+1);
  /// validated for irreducibility.
  static Field with_modulus(uint32_t p, std::vector<uint32_t> modulus);

  uint32_t characteristic() const { return p_; }
  uint32_t degree() const { return s_; }
  uint64_t order() const { return q_; }
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  /// The pinned primitive element (smallest rank of multiplicative order q-1).
  FieldElement generator() const { return {g_rank_}; }
  FieldElement element(uint64_t rank) const;
  FieldElement scalar(uint32_t c) const { return {c % p_}; }

  FieldElement from_coeffs(const std::vector<uint32_t>& c) const;
  std::vector<uint32_t> coeffs(FieldElement x) const;

  bool is_zero(FieldElement x) const { return x.rank == 0; }
  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;
  FieldElement pow(FieldElement a, uint64_t e) const;

  /// Discrete log base the generator; requires x != 0.
  uint64_t log(FieldElement x) const;
  FieldElement exp(uint64_t e) const { return {exp_[e % (q_ - 1)]}; }

  /// Trace to the prime subfield, as a value in Z_p.
  uint32_t absolute_trace(FieldElement x) const { return trace_[x.rank]; }

  bool operator==(const Field& o) const { return p_ == o.p_ && modulus_ == o.modulus_; }

 private:
  Field(uint32_t p, std::vector<uint32_t> modulus);

  uint32_t mul_raw(uint32_t a, uint32_t b) const;  // table-free, used during setup

  uint32_t p_, s_;
  uint64_t q_;
  std::vector<uint32_t> modulus_;
  uint32_t g_rank_ = 1;
  std::vector<uint32_t> exp_, log_, trace_;
};

/// Ring embedding of F_{q0} into F_q (q = q0^e), pinned by mapping the
/// subfield generator g0 to the first power g^{j(q-1)/(q0-1)}, gcd(j, q0-1)=1,
/// that makes the induced map additive. Carries the trace to the subfield
/// and the coordinate split of F_q over F_{q0} in the basis 1, x, ..., x^{e-1}.
class SubfieldEmbedding {
 public:
  SubfieldEmbedding(Field big, Field sub);

  const Field& big() const { return big_; }
  const Field& sub() const { return sub_; }
  uint32_t extension_degree() const { return ext_; }

  FieldElement embed(FieldElement x0) const { return {embed_[x0.rank]}; }
  bool in_image(FieldElement y) const { return back_[y.rank] >= 0; }
  FieldElement pull_back(FieldElement y) const;

  /// tr_{q/q0}(x) = sum of x^{q0^i}, i < e, expressed in subfield coords.
  FieldElement trace(FieldElement x) const;
  /// Same trace value left in big-field coordinates.
  FieldElement trace_in_big(FieldElement x) const;

  /// Coordinates of y over the subfield: y = sum_j embed(c_j) * x^j.
  std::vector<FieldElement> decompose(FieldElement y) const;
  FieldElement compose(std::span<const FieldElement> c) const;

 private:
  Field big_, sub_;
  uint32_t ext_;
  std::vector<uint32_t> embed_;
  std::vector<int64_t> back_;
  std::vector<uint32_t> basis_pow_;       // ranks of x^j, j < ext
  std::vector<std::vector<uint32_t>> minv_;  // inverse coordinate matrix mod p
};

/// The trace-zero subset {x in F_{q^2} : tr_{q^2/q}(x) = 0}, produced from
/// the closed-form generator powers (q even: g^{(q+1)i}; q odd:
/// g^{(q+1)/2 + (q+1)i}) together with 0. Exactly q elements.
std::vector<FieldElement> trace_zero_elements(const Field& fq2);

/// Additive group of F_{p^s}: Z_p^s in the polynomial basis.
GroupSpec additive_group(const Field& f);
/// Additive group of F_{p^s}^n: Z_p^{s*n}, coordinate-major.
GroupSpec vector_group(const Field& f, uint32_t n);

GroupElement as_group_element(const Field& f, FieldElement x);
GroupElement as_group_element(const Field& f, std::span<const FieldElement> v);
FieldElement field_from_group(const Field& f, const GroupElement& g);
std::vector<FieldElement> vector_from_group(const Field& f, const GroupElement& g);

}  // namespace amorph
