#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "amorph/scheme.hpp"

namespace amorph {

struct SchemeParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A scheme file after parsing but before the partition axioms are checked;
/// verification reports axiom violations itself, so corrupted files still
/// parse as long as they are well-formed.
struct ParsedScheme {
  std::vector<uint32_t> factors;
  std::vector<std::vector<GroupElement>> class_elements;
  std::string provenance;  // empty when the file carries none

  GroupSpec group() const { return GroupSpec(factors); }
  /// Dense indicators; throws SchemeParseError on out-of-range residues.
  std::vector<SubsetIndicator> indicators() const;
  /// Assembles and validates; throws std::invalid_argument on axiom failure.
  TranslationScheme to_scheme() const;
};

/// Plain-text scheme format, one element per line as residue vectors:
///
///   amorph-scheme 1
///   group 4 4 2 2 2 2
///   provenance lifted_four_class ell=2
///   classes 4
///   class 1 51
///   2 0 0 1 0 1
///   ...
///
/// The writer emits class elements in ascending rank order, so
/// write(parse(write(s))) is byte-identical to write(s).
ParsedScheme parse_scheme_file(const std::string& text);
std::string write_scheme_file(const TranslationScheme& s, const std::string& provenance = "");

ParsedScheme load_scheme_file(const std::string& path);
void save_scheme_file(const std::string& path, const TranslationScheme& s,
                      const std::string& provenance = "");

}  // namespace amorph
