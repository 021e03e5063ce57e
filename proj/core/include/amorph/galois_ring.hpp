#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "amorph/cyclotomic.hpp"
#include "amorph/field.hpp"
#include "amorph/group.hpp"

namespace amorph {

/// Element a0 + a1*xi of R = GR(4,2) = Z_4[x]/(x^2+x+1), so xi^2 = -xi - 1.
/// 2R = {both coordinates even} is the unique maximal ideal and R/2R = F_4.
struct RingElement {
  uint8_t a0 = 0, a1 = 0;
  constexpr auto operator<=>(const RingElement&) const = default;
};

namespace gr4 {

inline constexpr RingElement zero{0, 0};
inline constexpr RingElement one{1, 0};
inline constexpr RingElement xi{0, 1};

RingElement add(RingElement a, RingElement b);
RingElement neg(RingElement a);
RingElement sub(RingElement a, RingElement b);
RingElement mul(RingElement a, RingElement b);
RingElement scalar(uint32_t c);  // c mod 4

/// rank = a0 + 4*a1, a bijection with 0..15 used for exhaustive loops.
uint32_t rank(RingElement a);
RingElement unrank(uint32_t r);

/// The fixed F_4 = F_2[x]/(x^2+x+1) that R reduces onto; pi(xi) = alpha = x.
const Field& residue_field();

/// Natural epimorphism pi: R -> R/2R = F_4.
FieldElement pi(RingElement a);

/// Teichmuller system T = (0, 1, xi, xi^2) in that pinned order; pi
/// restricted to T is a bijection onto F_4.
const std::array<RingElement, 4>& teichmuller();
/// pi_T^{-1}: the unique t in T with pi(t) = x.
RingElement teich_lift(FieldElement x);

/// The unique pair (b1, b2) in T x T with b = b1 + 2*b2.
std::pair<RingElement, RingElement> two_adic_decompose(RingElement b);

/// Frobenius f(b1 + 2 b2) = b1^2 + 2 b2^2; a ring automorphism of order 2.
RingElement frobenius(RingElement b);

/// Tr(b) = b + f(b), a value in Z_4.
uint32_t trace(RingElement b);

/// psi_beta(x) = i^{Tr(beta x)} as a level-4 cyclotomic integer.
CyclotomicInt ring_character(RingElement beta, RingElement x);
/// 4 when beta is a unit times odd part (beta not in 2R), 2 on 2R\{0}, 1 at 0.
uint32_t character_order(RingElement beta);

/// F: F_4^{2l} -> R x F_4^{2l-2}, (x1, x2, rest...) -> (pi_T^{-1}(x1) +
/// 2 pi_T^{-1}(x2), rest...). A bijection of sets, not a homomorphism.
struct LiftedPoint {
  RingElement ring;
  std::vector<FieldElement> rest;
};
LiftedPoint lift(std::span<const FieldElement> x);
std::vector<FieldElement> unlift(const LiftedPoint& y);

/// Additive group Z_4^2 of R; rank of (a0, a1) is a0 + 4*a1.
GroupSpec ring_group();
/// Additive group Z_4^2 x Z_2^{4l-4} of R x F_4^{2l-2}.
GroupSpec lifted_group(uint32_t ell);

GroupElement to_group(RingElement a);
RingElement from_group(const GroupElement& g);
GroupElement to_group(const LiftedPoint& y);
LiftedPoint from_lifted_group(const GroupElement& g);

/// Label of the product character psi_beta (x) chi_{w3} (x) ... (x) chi_{w2l}
/// as a plain group character of Z_4^2 x Z_2^{4l-4}: character_value at this
/// label composed with to_group equals the tensor-product evaluation.
GroupElement character_label(RingElement beta, std::span<const FieldElement> w);
/// Inverse of character_label.
std::pair<RingElement, std::vector<FieldElement>> character_label_inverse(const GroupElement& label);

}  // namespace gr4
}  // namespace amorph
