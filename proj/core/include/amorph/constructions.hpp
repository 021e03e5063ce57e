#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "amorph/field.hpp"
#include "amorph/galois_ring.hpp"
#include "amorph/pds.hpp"
#include "amorph/quadratic_form.hpp"
#include "amorph/scheme.hpp"

namespace amorph {

/// What a construction claims about its own output; verified downstream.
struct ConstructionDescriptor {
  std::string name;
  std::vector<std::pair<std::string, std::string>> parameters;  // ordered key/value
  std::vector<uint64_t> expected_class_sizes;
  std::vector<PdsParameters> expected_class_params;
  std::vector<std::string> warnings;  // e.g. dropped empty classes
  /// Cyclotomic schemes carry the coset-criterion prediction.
  std::optional<bool> amorphy_prediction;
};

struct ConstructionResult {
  TranslationScheme scheme;
  ConstructionDescriptor descriptor;
};

/// The e-class scheme of the index-e multiplicative subgroup cosets on the
/// additive group of F_{p^s}. Requires e > 1, e | p^s - 1 and -1 in the
/// subgroup ((p^s-1)/e even, or characteristic 2). Predicted amorphic iff
/// e <= 2 or -1 is a power of p modulo e.
ConstructionResult cyclotomic_scheme(uint32_t p, uint32_t s, uint32_t e);

/// Four classes on F_4^{2l} (l >= 2): the nonzero zeros of the pinned
/// elliptic form and its three nonzero level sets, all negative Latin type.
ConstructionResult four_class_scheme(uint32_t ell);

/// Image of the level set {Q = beta} under the 2-adic lift into
/// Z_4^2 x Z_2^{4l-4}; for beta = 0 the zero element is excluded.
SubsetIndicator lifted_set(FieldElement beta, uint32_t ell);

/// The lifted four-class scheme on Z_4^2 x Z_2^{4l-4} (l >= 2), a
/// nonelementary abelian 2-group.
ConstructionResult lifted_four_class_scheme(uint32_t ell);

enum class FormKind { Elliptic, Hyperbolic };

struct ChainSchemeResult {
  TranslationScheme scheme;
  ConstructionDescriptor descriptor;
  /// Nested zero sets Omega_1 c Omega_2 c ... c Omega_d (0 excluded),
  /// one per chain step, before differencing; kept for fusion slices.
  std::vector<SubsetIndicator> omegas;
  std::vector<uint32_t> chain;
  FormKind kind;
};

/// Subfield-chain scheme on F_{q^m}^{2l}: classes Omega_1,
/// Omega_2 \ Omega_1, ..., Omega_d \ Omega_{d-1}, rest, where Omega_i is the
/// punctured zero set of the trace of the pinned form down to F_{q^{m_i}}.
/// chain = (m_1 = m, ..., m_d = 1), strict divisibility. Empty classes are
/// dropped with a warning.
ChainSchemeResult chain_scheme(uint32_t q, uint32_t m, uint32_t ell,
                               std::vector<uint32_t> chain, FormKind kind);

/// Alternating union (Omega_d \ Omega_{d-1}) u (Omega_{d-2} \ Omega_{d-3})
/// u ... ending at Omega_2 \ Omega_1 (d even) or Omega_1 (d odd); a PDS of
/// the chain's type.
SubsetIndicator hamilton_fusion(const ChainSchemeResult& chain);

/// (q+2)-class scheme on F_{q^2}^{2l} (l >= 2) from the q+1 scalar multiples
/// of the pinned elliptic form: Omega_0 and the sets
/// {x != 0 : tr_{q^2/q}(g^i Q(x)) = 0} \ Omega_0, i = 0..q. The partition
/// property is re-checked exhaustively; q = 2 reproduces the four-class
/// scheme as a partition.
ConstructionResult rotation_scheme(uint32_t q, uint32_t ell);

/// Restricted character sums over the slice O_0 = {x in D_1 : x_1 = 0} and
/// the lift of its complement in D_1, for every order-4 character of
/// Z_4^2 x Z_2^{4l-4}. The diagnostic pattern: the O_0 sum is always
/// +-4^{l-1}, and when it is +4^{l-1} the complementary lifted sum is 0.
struct LiftDiagnosticEntry {
  uint64_t label_rank;
  int64_t chi_o0;
  int64_t psi_rest;
};
struct LiftDiagnostic {
  uint32_t ell = 0;
  int64_t magnitude = 0;  // 4^{l-1}
  bool pattern_holds = false;
  bool o0_hits_both_signs = false;
  std::vector<LiftDiagnosticEntry> entries;
};
LiftDiagnostic lift_restriction_diagnostic(uint32_t ell);

std::string to_string(FormKind kind);

}  // namespace amorph
