#include "amorph/galois_ring.hpp"

#include <stdexcept>

namespace amorph {
namespace gr4 {

RingElement add(RingElement a, RingElement b) {
  return {static_cast<uint8_t>((a.a0 + b.a0) & 3), static_cast<uint8_t>((a.a1 + b.a1) & 3)};
}

RingElement neg(RingElement a) {
  return {static_cast<uint8_t>((4 - a.a0) & 3), static_cast<uint8_t>((4 - a.a1) & 3)};
}

RingElement sub(RingElement a, RingElement b) { return add(a, neg(b)); }

RingElement mul(RingElement a, RingElement b) {
  // (a0 + a1 xi)(b0 + b1 xi) with xi^2 = -xi - 1
  const uint32_t c0 = a.a0 * b.a0 + 3u * a.a1 * b.a1;  // -1 = 3 mod 4
  const uint32_t c1 = a.a0 * b.a1 + a.a1 * b.a0 + 3u * a.a1 * b.a1;
  return {static_cast<uint8_t>(c0 & 3), static_cast<uint8_t>(c1 & 3)};
}

RingElement scalar(uint32_t c) { return {static_cast<uint8_t>(c & 3), 0}; }

uint32_t rank(RingElement a) { return a.a0 + 4u * a.a1; }

RingElement unrank(uint32_t r) {
  if (r >= 16) throw std::out_of_range("gr4::unrank");
  return {static_cast<uint8_t>(r & 3), static_cast<uint8_t>(r >> 2)};
}

const Field& residue_field() {
  static const Field f4 = Field::extension(2, 2);
  return f4;
}

FieldElement pi(RingElement a) {
  return {static_cast<uint32_t>((a.a0 & 1) | ((a.a1 & 1) << 1))};
}

const std::array<RingElement, 4>& teichmuller() {
  // (0, 1, xi, xi^2); xi^2 = -xi - 1 = 3 + 3 xi
  static const std::array<RingElement, 4> t = {RingElement{0, 0}, RingElement{1, 0},
                                               RingElement{0, 1}, RingElement{3, 3}};
  return t;
}

RingElement teich_lift(FieldElement x) {
  for (const RingElement& t : teichmuller())
    if (pi(t) == x) return t;
  throw std::invalid_argument("gr4::teich_lift: not an F_4 element");
}

std::pair<RingElement, RingElement> two_adic_decompose(RingElement b) {
  const RingElement b1 = teich_lift(pi(b));
  const RingElement d = sub(b, b1);  // in 2R: both coordinates even
  const RingElement half{static_cast<uint8_t>(d.a0 >> 1), static_cast<uint8_t>(d.a1 >> 1)};
  const RingElement b2 = teich_lift(pi(half));
  return {b1, b2};
}

RingElement frobenius(RingElement b) {
  auto [b1, b2] = two_adic_decompose(b);
  return add(mul(b1, b1), mul(scalar(2), mul(b2, b2)));
}

uint32_t trace(RingElement b) {
  const RingElement t = add(b, frobenius(b));
  if (t.a1 != 0) throw std::logic_error("gr4::trace: value not in Z_4");
  return t.a0;
}

CyclotomicInt ring_character(RingElement beta, RingElement x) {
  return CyclotomicInt::zeta_pow(4, trace(mul(beta, x)));
}

uint32_t character_order(RingElement beta) {
  if (beta == zero) return 1;
  const bool in_2r = (beta.a0 % 2 == 0) && (beta.a1 % 2 == 0);
  return in_2r ? 2 : 4;
}

LiftedPoint lift(std::span<const FieldElement> x) {
  if (x.size() < 2 || x.size() % 2 != 0)
    throw std::invalid_argument("gr4::lift: need an even number (>= 2) of F_4 coordinates");
  LiftedPoint y;
  y.ring = add(teich_lift(x[0]), mul(scalar(2), teich_lift(x[1])));
  y.rest.assign(x.begin() + 2, x.end());
  return y;
}

std::vector<FieldElement> unlift(const LiftedPoint& y) {
  auto [b1, b2] = two_adic_decompose(y.ring);
  std::vector<FieldElement> x;
  x.reserve(y.rest.size() + 2);
  x.push_back(pi(b1));
  x.push_back(pi(b2));
  x.insert(x.end(), y.rest.begin(), y.rest.end());
  return x;
}

GroupSpec ring_group() { return GroupSpec({4, 4}); }

GroupSpec lifted_group(uint32_t ell) {
  if (ell < 1) throw std::invalid_argument("gr4::lifted_group: ell >= 1 required");
  std::vector<uint32_t> factors = {4, 4};
  factors.insert(factors.end(), 4u * ell - 4u, 2u);
  return GroupSpec(std::move(factors));
}

GroupElement to_group(RingElement a) { return {{a.a0, a.a1}}; }

RingElement from_group(const GroupElement& g) {
  if (g.residues.size() != 2) throw std::invalid_argument("gr4::from_group: expected Z_4^2");
  return {static_cast<uint8_t>(g.residues[0]), static_cast<uint8_t>(g.residues[1])};
}

GroupElement to_group(const LiftedPoint& y) {
  GroupElement g;
  g.residues.reserve(2 + 2 * y.rest.size());
  g.residues.push_back(y.ring.a0);
  g.residues.push_back(y.ring.a1);
  const Field& f4 = residue_field();
  for (FieldElement x : y.rest) {
    auto c = f4.coeffs(x);
    g.residues.push_back(c[0]);
    g.residues.push_back(c[1]);
  }
  return g;
}

LiftedPoint from_lifted_group(const GroupElement& g) {
  if (g.residues.size() < 2 || g.residues.size() % 2 != 0)
    throw std::invalid_argument("gr4::from_lifted_group: bad residue length");
  LiftedPoint y;
  y.ring = {static_cast<uint8_t>(g.residues[0]), static_cast<uint8_t>(g.residues[1])};
  const Field& f4 = residue_field();
  for (size_t i = 2; i < g.residues.size(); i += 2)
    y.rest.push_back(f4.from_coeffs({g.residues[i], g.residues[i + 1]}));
  return y;
}

GroupElement character_label(RingElement beta, std::span<const FieldElement> w) {
  // psi_beta(a0 + a1 xi) = i^{Tr(beta (a0 + a1 xi))} = i^{l0 a0 + l1 a1} with
  // l0 = 2 b0 + 3 b1, l1 = 3 b0 + 3 b1 (from Tr(1) = 2, Tr(xi) = -1).
  GroupElement label;
  label.residues.reserve(2 + 2 * w.size());
  label.residues.push_back((2u * beta.a0 + 3u * beta.a1) & 3);
  label.residues.push_back((3u * beta.a0 + 3u * beta.a1) & 3);
  const Field& f4 = residue_field();
  for (FieldElement wi : w) {
    // chi_w(u0 + u1 alpha) = (-1)^{w1 u0 + (w0 + w1) u1}
    auto c = f4.coeffs(wi);
    label.residues.push_back(c[1]);
    label.residues.push_back((c[0] + c[1]) & 1);
  }
  return label;
}

std::pair<RingElement, std::vector<FieldElement>> character_label_inverse(
    const GroupElement& label) {
  if (label.residues.size() < 2 || label.residues.size() % 2 != 0)
    throw std::invalid_argument("gr4::character_label_inverse: bad residue length");
  const uint32_t l0 = label.residues[0], l1 = label.residues[1];
  // inverse of [[2,3],[3,3]] mod 4 is [[3,1],[1,2]]
  RingElement beta{static_cast<uint8_t>((3 * l0 + l1) & 3),
                   static_cast<uint8_t>((l0 + 2 * l1) & 3)};
  const Field& f4 = residue_field();
  std::vector<FieldElement> w;
  for (size_t i = 2; i < label.residues.size(); i += 2) {
    const uint32_t m0 = label.residues[i], m1 = label.residues[i + 1];
    w.push_back(f4.from_coeffs({(m0 + m1) & 1, m0 & 1}));
  }
  return {beta, std::move(w)};
}

}  // namespace gr4
}  // namespace amorph
