#include "amorph/pds.hpp"

#include <cmath>
#include <map>

namespace amorph {
namespace {

// Shared precondition screen for both verifiers.
bool screen_preconditions(const SubsetIndicator& s, PdsCheckResult& r) {
  if (s.contains_identity()) {
    r.failure = PdsFailure::IdentityInSet;
    r.witness = 0;
    r.detail = "identity element is in the set";
    return false;
  }
  const auto& g = s.group();
  for (uint64_t x : s.members()) {
    if (!s.contains(g.neg_rank(x))) {
      r.failure = PdsFailure::Asymmetric;
      r.witness = x;
      r.detail = "set is not symmetric: contains rank " + std::to_string(x) +
                 " but not its negative";
      return false;
    }
  }
  return true;
}

}  // namespace

PdsCheckResult verify_pds_by_differences(const SubsetIndicator& s) {
  PdsCheckResult r;
  const auto& g = s.group();
  r.params.v = g.order();
  r.params.k = s.cardinality();
  if (!screen_preconditions(s, r)) return r;
  if (r.params.k == 0) {
    r.ok = true;
    r.trivial = true;
    return r;
  }

  const auto counts = difference_counts(s);
  const auto mem = s.members();
  const uint64_t lambda = counts[mem.front()];
  for (uint64_t x : mem) {
    if (counts[x] != lambda) {
      r.failure = PdsFailure::NotConstantOnMembers;
      r.witness = x;
      r.detail = "difference count " + std::to_string(counts[x]) + " at member rank " +
                 std::to_string(x) + ", expected " + std::to_string(lambda);
      return r;
    }
  }

  bool have_mu = false;
  uint64_t mu = 0;
  for (uint64_t y = 1; y < g.order(); ++y) {
    if (s.contains(y)) continue;
    if (!have_mu) {
      mu = counts[y];
      have_mu = true;
    } else if (counts[y] != mu) {
      r.failure = PdsFailure::NotConstantOffMembers;
      r.witness = y;
      r.detail = "difference count " + std::to_string(counts[y]) + " at non-member rank " +
                 std::to_string(y) + ", expected " + std::to_string(mu);
      return r;
    }
  }
  if (!have_mu) {
    // S = G \ {0}: the complete Cayley graph; mu is vacuous, reported as 0
    r.trivial = true;
    mu = 0;
  }
  r.params.lambda = lambda;
  r.params.mu = mu;
  r.ok = true;
  return r;
}

PdsCheckResult verify_pds_by_characters(const SubsetIndicator& s) {
  PdsCheckResult r;
  const auto& g = s.group();
  const uint64_t v = g.order();
  const uint64_t k = s.cardinality();
  r.params.v = v;
  r.params.k = k;
  if (!screen_preconditions(s, r)) return r;
  if (k == 0) {
    r.ok = true;
    r.trivial = true;
    return r;
  }

  const auto sums = all_character_sums(s);
  std::map<int64_t, uint64_t> hist;
  for (uint64_t a = 1; a < v; ++a) {
    if (!sums[a].is_integer()) {
      r.failure = PdsFailure::NonIntegerCharacterSum;
      r.witness = a;
      r.detail = "character sum at label rank " + std::to_string(a) +
                 " is not a rational integer: " + sums[a].to_string();
      return r;
    }
    const int64_t val = sums[a].integer_value();
    auto [it, fresh] = hist.emplace(val, 0);
    ++it->second;
    if (fresh && hist.size() > 2) {
      r.failure = PdsFailure::SpectrumTooLarge;
      r.witness = a;
      r.detail = "third distinct nonprincipal sum " + std::to_string(val) +
                 " at label rank " + std::to_string(a);
      return r;
    }
  }
  r.spectrum.assign(hist.begin(), hist.end());

  if (k == v - 1) {
    // complete Cayley graph; every nonprincipal sum is -1
    if (hist.size() == 1 && hist.begin()->first == -1) {
      r.ok = true;
      r.trivial = true;
      r.params.lambda = v - 2;
      r.params.mu = 0;
      return r;
    }
    r.failure = PdsFailure::InconsistentSpectrum;
    r.detail = "full set with spectrum different from {-1}";
    return r;
  }
  if (hist.size() < 2) {
    r.failure = PdsFailure::InconsistentSpectrum;
    r.detail = "a proper nonempty symmetric set cannot have a single nonprincipal sum";
    return r;
  }

  const int64_t theta2 = hist.begin()->first;
  const int64_t theta1 = hist.rbegin()->first;
  const int64_t mu = static_cast<int64_t>(k) + theta1 * theta2;
  const int64_t lambda = mu + theta1 + theta2;
  if (mu < 0 || lambda < 0) {
    r.failure = PdsFailure::InconsistentSpectrum;
    r.detail = "spectrum {" + std::to_string(theta1) + ", " + std::to_string(theta2) +
               "} yields negative parameters";
    return r;
  }
  // counting identity k(k-1) - lambda*k = mu(v-k-1)
  const __int128 lhs = static_cast<__int128>(k) * (k - 1) - static_cast<__int128>(lambda) * k;
  const __int128 rhs = static_cast<__int128>(mu) * (v - k - 1);
  if (lhs != rhs) {
    r.failure = PdsFailure::InconsistentSpectrum;
    r.detail = "reconstructed parameters violate the counting identity";
    return r;
  }
  r.params.lambda = static_cast<uint64_t>(lambda);
  r.params.mu = static_cast<uint64_t>(mu);
  r.ok = true;
  return r;
}

std::optional<LatinTypeDescriptor> classify_latin_type(const PdsParameters& p) {
  const uint64_t n = static_cast<uint64_t>(std::llround(std::sqrt(static_cast<double>(p.v))));
  if (n * n != p.v || n < 2) return std::nullopt;
  for (int eps : {+1, -1}) {
    const int64_t denom = static_cast<int64_t>(n) - eps;
    if (denom <= 0 || p.k % denom != 0) continue;
    const int64_t r = static_cast<int64_t>(p.k) / denom;
    if (r < 1) continue;
    const int64_t lambda = eps * static_cast<int64_t>(n) + r * r - 3 * eps * r;
    const int64_t mu = r * r - eps * r;
    if (lambda >= 0 && mu >= 0 && static_cast<uint64_t>(lambda) == p.lambda &&
        static_cast<uint64_t>(mu) == p.mu)
      return LatinTypeDescriptor{eps, n, static_cast<uint64_t>(r)};
  }
  return std::nullopt;
}

std::string to_string(const PdsParameters& p) {
  return "(" + std::to_string(p.v) + "," + std::to_string(p.k) + "," + std::to_string(p.lambda) +
         "," + std::to_string(p.mu) + ")";
}

std::string to_string(const LatinTypeDescriptor& t) {
  return std::string(t.epsilon > 0 ? "Latin" : "negative Latin") +
         " (n=" + std::to_string(t.n) + ", r=" + std::to_string(t.r) + ")";
}

}  // namespace amorph
