#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "amorph/group.hpp"

namespace amorph {

struct PdsParameters {
  uint64_t v = 0, k = 0, lambda = 0, mu = 0;
  bool operator==(const PdsParameters&) const = default;
};

/// (v,k,lambda,mu) = (n^2, r(n-eps), eps*n + r^2 - 3*eps*r, r^2 - eps*r);
/// eps = +1 is Latin square type, eps = -1 negative Latin square type.
struct LatinTypeDescriptor {
  int epsilon = 0;
  uint64_t n = 0, r = 0;
  bool operator==(const LatinTypeDescriptor&) const = default;
};

enum class PdsFailure {
  None,
  IdentityInSet,
  Asymmetric,
  NotConstantOnMembers,
  NotConstantOffMembers,
  NonIntegerCharacterSum,
  SpectrumTooLarge,
  InconsistentSpectrum,
};

struct PdsCheckResult {
  bool ok = false;
  bool trivial = false;  // empty set or all of G minus the identity
  PdsParameters params;
  PdsFailure failure = PdsFailure::None;
  uint64_t witness = 0;  // element rank (difference method) or label rank (character method)
  std::string detail;
  /// Distinct nonprincipal character sums with multiplicities, ascending;
  /// filled by the character method on success.
  std::vector<std::pair<int64_t, uint64_t>> spectrum;
};

/// Canonical verifier: checks that the internal differences of S hit every
/// nonidentity member exactly lambda times and every nonidentity
/// non-member exactly mu times. Requires 0 not in S and S symmetric.
PdsCheckResult verify_pds_by_differences(const SubsetIndicator& s);

/// Independent verifier via exact character sums: S is a PDS iff every
/// nonprincipal sum is one of two integers theta1 > theta2, which determine
/// the parameters by mu = k + theta1*theta2, lambda = mu + theta1 + theta2.
/// Irrational spectra are rejected with NonIntegerCharacterSum.
PdsCheckResult verify_pds_by_characters(const SubsetIndicator& s);

/// The (eps, n, r) solution of the (negative) Latin square parameterization,
/// or nullopt when neither form fits exactly. eps=+1 is tried first.
std::optional<LatinTypeDescriptor> classify_latin_type(const PdsParameters& p);

std::string to_string(const PdsParameters& p);
std::string to_string(const LatinTypeDescriptor& t);

}  // namespace amorph
