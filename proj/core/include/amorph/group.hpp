#pragma once

#include <cstdint>
#include <vector>

#include "amorph/cyclotomic.hpp"

namespace amorph {

/// Element of a finite abelian group written as a product of cyclic factors:
/// a residue vector (r_1, ..., r_t) with 0 <= r_i < m_i.
struct GroupElement {
  std::vector<uint32_t> residues;
  bool operator==(const GroupElement&) const = default;
};

/// A finite abelian group Z_{m_1} x ... x Z_{m_t}, each m_i >= 2. Elements
/// are ranked by the mixed-radix rule with the first factor least
/// significant: rank(r) = r_1 + m_1*(r_2 + m_2*(...)).
class GroupSpec {
 public:
  explicit GroupSpec(std::vector<uint32_t> factors);

  const std::vector<uint32_t>& factors() const { return factors_; }
  uint64_t order() const { return order_; }
  uint32_t exponent() const { return exponent_; }

  uint64_t rank(const GroupElement& g) const;
  GroupElement unrank(uint64_t i) const;

  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement identity() const;

  uint64_t add_ranks(uint64_t a, uint64_t b) const;
  uint64_t neg_rank(uint64_t a) const;
  uint64_t sub_ranks(uint64_t a, uint64_t b) const { return add_ranks(a, neg_rank(b)); }

  bool operator==(const GroupSpec& o) const { return factors_ == o.factors_; }

 private:
  std::vector<uint32_t> factors_;
  uint64_t order_;
  uint32_t exponent_;
};

/// Dense membership table over a group; the canonical subset representation
/// (O(1) membership for convolution inner loops).
class SubsetIndicator {
 public:
  explicit SubsetIndicator(GroupSpec group);

  const GroupSpec& group() const { return group_; }
  uint64_t cardinality() const { return cardinality_; }

  bool contains(uint64_t rank) const { return bits_[rank] != 0; }
  bool contains(const GroupElement& g) const { return contains(group_.rank(g)); }
  void insert(uint64_t rank);
  void erase(uint64_t rank);

  /// Membership ranks in ascending order.
  std::vector<uint64_t> members() const;

  bool contains_identity() const { return bits_[0] != 0; }
  /// True iff -x in S for every x in S.
  bool is_symmetric() const;

  SubsetIndicator negated() const;  // {-s : s in S}
  SubsetIndicator complement(bool include_identity) const;

  static SubsetIndicator union_of(const SubsetIndicator& a, const SubsetIndicator& b);
  /// Set difference a \ b.
  static SubsetIndicator difference(const SubsetIndicator& a, const SubsetIndicator& b);
  bool disjoint_with(const SubsetIndicator& o) const;

  bool operator==(const SubsetIndicator& o) const {
    return group_ == o.group_ && bits_ == o.bits_;
  }

 private:
  GroupSpec group_;
  std::vector<uint8_t> bits_;
  uint64_t cardinality_ = 0;
};

/// chi_label(x) = prod_j zeta_{m_j}^{label_j * x_j}, expressed at level
/// L = exponent(G); the standard character of a product of cyclic groups.
CyclotomicInt character_value(const GroupSpec& g, const GroupElement& label,
                              const GroupElement& x);

/// Sum of chi_label over the members of S, exact in Z[zeta_L].
CyclotomicInt character_sum(const SubsetIndicator& s, const GroupElement& label);

/// Character sums for every label, indexed by label rank. Exponents 2, 3
/// and 4 take the multidimensional decimation transform; any other exponent
/// falls back to direct per-label summation. Both paths are exact and agree
/// entry for entry.
std::vector<CyclotomicInt> all_character_sums(const SubsetIndicator& s);

/// counts[g] = #{(d1, d2) in S x S : d1 != d2, d1 - d2 = g}; counts[0] = 0.
std::vector<uint64_t> difference_counts(const SubsetIndicator& s);

/// counts[y] = sum_z A(z) * B(y - z); total count is |A| * |B|.
std::vector<uint64_t> convolve(const SubsetIndicator& a, const SubsetIndicator& b);

}  // namespace amorph
