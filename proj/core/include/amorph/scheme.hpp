#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "amorph/group.hpp"
#include "amorph/pds.hpp"

namespace amorph {

/// A set partition of the class indices {1, ..., d}; blocks are sorted
/// ascending and ordered by smallest element.
struct FusionPartition {
  std::vector<std::vector<uint32_t>> blocks;
  std::string to_string() const;  // e.g. "{1}{2,3,4}"
  bool operator==(const FusionPartition&) const = default;
};

/// A translation association scheme candidate: an ordered list of connection
/// sets that are pairwise disjoint, symmetric, identity-free, and together
/// cover the nonidentity elements. The diagonal class is implicit.
class TranslationScheme {
 public:
  /// Validates the partition axioms; throws std::invalid_argument naming the
  /// violated axiom otherwise.
  TranslationScheme(GroupSpec group, std::vector<SubsetIndicator> classes);

  /// Non-throwing check; empty string when the axioms hold.
  static std::string validate(const GroupSpec& group,
                              const std::vector<SubsetIndicator>& classes);

  const GroupSpec& group() const { return group_; }
  uint32_t num_classes() const { return static_cast<uint32_t>(classes_.size()); }
  /// 1-based, matching the class indices used by fusion partitions.
  const SubsetIndicator& cls(uint32_t i) const { return classes_.at(i - 1); }
  const std::vector<SubsetIndicator>& classes() const { return classes_; }

  bool same_partition(const TranslationScheme& o) const;

 private:
  GroupSpec group_;
  std::vector<SubsetIndicator> classes_;
};

/// p[i][j][k] for i,j,k in 0..d (0 = diagonal class), plus valencies n_i.
struct IntersectionNumbers {
  uint32_t d = 0;
  std::vector<uint64_t> p;  // (d+1)^3 flattened
  std::vector<uint64_t> valencies;
  uint64_t at(uint32_t i, uint32_t j, uint32_t k) const {
    return p[(static_cast<size_t>(i) * (d + 1) + j) * (d + 1) + k];
  }
  uint64_t& at(uint32_t i, uint32_t j, uint32_t k) {
    return p[(static_cast<size_t>(i) * (d + 1) + j) * (d + 1) + k];
  }
};

struct IntersectionResult {
  bool ok = false;
  IntersectionNumbers table;
  // first witness of non-constancy when !ok
  uint32_t i = 0, j = 0, k = 0;
  uint64_t witness_rank = 0, found = 0, expected = 0;
  std::string describe() const;
};

/// Checks axiom (3) at x = 0 (translation invariance extends it to all x):
/// convolve(S_i, S_j) must be constant on every class and at the identity.
IntersectionResult intersection_numbers(const TranslationScheme& s);

/// All set partitions of {1..d} in lexicographic restricted-growth order;
/// Bell(d) of them. d above the cap (default 8, Bell(8) = 4140) throws.
std::vector<FusionPartition> enumerate_fusions(uint32_t d, uint32_t cap = 8);

/// Blockwise unions of the classes; the result is re-validated.
TranslationScheme fuse(const TranslationScheme& s, const FusionPartition& partition);

/// Pairwise class convolutions, computed once and reused for every fusion:
/// convolve is additive over disjoint unions, so a fused intersection table
/// is a block sum of the base tables. Identical numbers to the direct path.
class ConvolutionCache {
 public:
  explicit ConvolutionCache(const TranslationScheme& s);
  const std::vector<uint64_t>& conv(uint32_t i, uint32_t j) const;

 private:
  uint32_t d_;
  std::vector<std::vector<uint64_t>> tables_;  // i <= j, 1-based pairs
};

struct FusionCheck {
  FusionPartition partition;
  bool ok = false;
  std::string witness;
};

struct AmorphyCertificate {
  bool amorphic = false;
  uint64_t fusions_checked = 0;
  std::vector<FusionCheck> checks;
  std::optional<FusionPartition> first_failure;
};

/// Runs the intersection-number axiom check on every fusion of s.
AmorphyCertificate verify_amorphic(const TranslationScheme& s, uint32_t cap = 8);

struct VanDamReport {
  bool partition_ok = false;
  bool all_pds = false;
  bool applicable = false;  // amorphic by the uniform-type criterion
  int epsilon = 0;
  std::vector<PdsCheckResult> class_results;
  std::vector<std::optional<LatinTypeDescriptor>> class_types;
  std::string detail;
};

/// The uniform-type criterion on raw class lists: if the classes partition
/// the nonidentity elements and every class is a PDS of one common Latin
/// type (all eps = +1 or all eps = -1), the decomposition is an amorphic
/// association scheme. Independent of verify_amorphic.
VanDamReport van_dam_check(const GroupSpec& g, const std::vector<SubsetIndicator>& classes);

struct SrgResult {
  bool ok = false;
  PdsParameters params;
  std::string failure;
};

/// (v, k, lambda, mu) of class i read off the two-class fusion {S_i, rest};
/// cross-checked against the difference-count verifier.
SrgResult srg_parameters_of_class(const TranslationScheme& s, uint32_t i);

}  // namespace amorph
