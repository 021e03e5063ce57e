#pragma once

#include <optional>
#include <string>
#include <vector>

#include "amorph/pds.hpp"
#include "amorph/scheme.hpp"

namespace amorph {

enum class VerifyMode { Differences, Characters, Both };
enum class AmorphyMode { Exhaustive, VanDam, Both };

struct ClassReport {
  uint64_t size = 0;
  std::optional<PdsCheckResult> differences;
  std::optional<PdsCheckResult> characters;
  std::optional<LatinTypeDescriptor> latin;
  bool ok() const;
};

/// Everything the verifier established, and nothing it did not: amorphy is
/// reported separately per method (exhaustive fusion certificate vs the
/// uniform-type criterion), each labeled with its provenance.
struct VerificationReport {
  std::vector<uint32_t> group_factors;
  uint64_t order = 0;
  uint32_t num_classes = 0;
  std::vector<uint64_t> class_sizes;

  std::string partition_violation;  // empty when the partition axioms hold
  std::optional<IntersectionResult> axioms;
  std::vector<ClassReport> classes;
  std::optional<AmorphyCertificate> exhaustive;
  std::optional<VanDamReport> vandam;
  double seconds = 0.0;

  bool all_ok() const;
};

VerificationReport run_verification(const GroupSpec& g,
                                    const std::vector<SubsetIndicator>& classes, VerifyMode mode,
                                    AmorphyMode amorphy);

std::string format_report(const VerificationReport& r);
/// Deterministic JSON rendering of the report.
std::string report_to_json(const VerificationReport& r);

VerifyMode parse_verify_mode(const std::string& s);      // differences|characters|both
AmorphyMode parse_amorphy_mode(const std::string& s);    // exhaustive|vandam|both

}  // namespace amorph
