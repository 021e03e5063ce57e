#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "amorph/field.hpp"
#include "amorph/group.hpp"

namespace amorph {

/// Quadratic form Q(x) = sum_{i<=j} c_{ij} x_i x_j on F_q^m, stored as an
/// upper-triangular coefficient matrix. Polarization is computed from the
/// definition B(u,v) = Q(u+v) - Q(u) - Q(v); in characteristic 2 the
/// symmetric-matrix shortcut is invalid.
class QuadraticForm {
 public:
  QuadraticForm(Field field, uint32_t dimension, std::vector<FieldElement> upper_triangular);

  const Field& field() const { return field_; }
  uint32_t dimension() const { return dim_; }
  FieldElement coefficient(uint32_t i, uint32_t j) const;  // requires i <= j

  FieldElement evaluate(std::span<const FieldElement> v) const;
  FieldElement polarize(std::span<const FieldElement> v1, std::span<const FieldElement> v2) const;

  /// True iff the radical {w : Q(w) = 0 and B(w, .) = 0} is trivial.
  bool is_nonsingular() const;

  /// gamma * Q for gamma != 0; preserves nonsingularity and type.
  QuadraticForm scalar_multiple(FieldElement gamma) const;

  /// x1 x2 + x3 x4 + ... + x_{2l-1} x_{2l}.
  static QuadraticForm standard_hyperbolic(const Field& f, uint32_t ell);
  /// p(x1, x2) + x3 x4 + ... with p = a x1^2 + x1 x2 + b x2^2 anisotropic,
  /// picked as the first (b, a) pair in field rank order (b outer) whose p
  /// has only the trivial zero. Over F_4 this yields a = alpha, b = 1.
  static QuadraticForm standard_elliptic(const Field& f, uint32_t ell);

  /// tr_{q/q0} o Q as a form over the subfield in dimension m * [F_q : F_q0],
  /// coordinates split coordinate-major, basis-minor along 1, x, ..., x^{e-1}.
  QuadraticForm trace_compose(const Field& subfield) const;

  /// {v : Q(v) = beta} as a subset of the additive group Z_p^{s*m};
  /// symmetric since Q(-v) = Q(v).
  SubsetIndicator level_set(FieldElement beta, bool exclude_zero_vector) const;

  struct TypeTag {
    int epsilon;  // +1 hyperbolic, -1 elliptic
    uint64_t nonzero_zero_count;
  };
  /// Decides by exhaustive zero count against the two closed-form counts;
  /// requires a nonsingular form of even dimension.
  TypeTag classify_type() const;

  uint64_t vector_count() const;  // q^m
  std::vector<FieldElement> vector_at(uint64_t n) const;

 private:
  Field field_;
  uint32_t dim_;
  std::vector<FieldElement> coeff_;  // dim x dim row-major, zero below diagonal
};

}  // namespace amorph
