#include "amorph/scheme.hpp"

#include <stdexcept>

namespace amorph {

std::string FusionPartition::to_string() const {
  std::string s;
  for (const auto& block : blocks) {
    s += "{";
    for (size_t i = 0; i < block.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(block[i]);
    }
    s += "}";
  }
  return s;
}

std::string TranslationScheme::validate(const GroupSpec& group,
                                        const std::vector<SubsetIndicator>& classes) {
  if (classes.empty()) return "scheme needs at least one class";
  std::vector<uint32_t> owner(group.order(), 0);
  for (size_t c = 0; c < classes.size(); ++c) {
    const auto& s = classes[c];
    if (!(s.group() == group)) return "class " + std::to_string(c + 1) + " lives in a different group";
    if (s.cardinality() == 0) return "class " + std::to_string(c + 1) + " is empty";
    if (s.contains_identity())
      return "identity element in class " + std::to_string(c + 1);
    for (uint64_t x : s.members()) {
      if (!s.contains(group.neg_rank(x)))
        return "class " + std::to_string(c + 1) + " is not symmetric at rank " + std::to_string(x);
      if (owner[x] != 0)
        return "classes " + std::to_string(owner[x]) + " and " + std::to_string(c + 1) +
               " overlap at rank " + std::to_string(x);
      owner[x] = static_cast<uint32_t>(c + 1);
    }
  }
  for (uint64_t x = 1; x < group.order(); ++x)
    if (owner[x] == 0) return "rank " + std::to_string(x) + " is covered by no class";
  return {};
}

TranslationScheme::TranslationScheme(GroupSpec group, std::vector<SubsetIndicator> classes)
    : group_(std::move(group)), classes_(std::move(classes)) {
  const std::string err = validate(group_, classes_);
  if (!err.empty()) throw std::invalid_argument("TranslationScheme: " + err);
}

bool TranslationScheme::same_partition(const TranslationScheme& o) const {
  if (!(group_ == o.group_) || classes_.size() != o.classes_.size()) return false;
  for (const auto& c : classes_) {
    bool found = false;
    for (const auto& oc : o.classes_)
      if (c == oc) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

std::string IntersectionResult::describe() const {
  if (ok) return "association scheme axioms hold";
  return "p[" + std::to_string(i) + "][" + std::to_string(j) + "] is not constant on class " +
         std::to_string(k) + ": count " + std::to_string(found) + " at rank " +
         std::to_string(witness_rank) + ", expected " + std::to_string(expected);
}

namespace {

// Constancy scan of one convolution table against the class partition.
// members[k] lists class k's ranks (class 0 = {0}).
bool scan_constancy(const std::vector<uint64_t>& table,
                    const std::vector<std::vector<uint64_t>>& members, uint32_t i, uint32_t j,
                    IntersectionResult& res) {
  for (uint32_t k = 0; k < members.size(); ++k) {
    const uint64_t expected = table[members[k].front()];
    for (uint64_t y : members[k]) {
      if (table[y] != expected) {
        res.ok = false;
        res.i = i;
        res.j = j;
        res.k = k;
        res.witness_rank = y;
        res.found = table[y];
        res.expected = expected;
        return false;
      }
    }
    res.table.at(i, j, k) = expected;
    res.table.at(j, i, k) = expected;
  }
  return true;
}

std::vector<std::vector<uint64_t>> class_member_lists(const TranslationScheme& s) {
  std::vector<std::vector<uint64_t>> members(s.num_classes() + 1);
  members[0] = {0};
  for (uint32_t i = 1; i <= s.num_classes(); ++i) members[i] = s.cls(i).members();
  return members;
}

void fill_diagonal_rows(IntersectionNumbers& t) {
  // R_0 is the diagonal relation: p[0][j][k] = [j == k], p[i][0][k] = [i == k].
  for (uint32_t j = 0; j <= t.d; ++j)
    for (uint32_t k = 0; k <= t.d; ++k) {
      t.at(0, j, k) = (j == k) ? 1 : 0;
      t.at(j, 0, k) = (j == k) ? 1 : 0;
    }
}

}  // namespace

IntersectionResult intersection_numbers(const TranslationScheme& s) {
  const uint32_t d = s.num_classes();
  IntersectionResult res;
  res.table.d = d;
  res.table.p.assign(static_cast<size_t>(d + 1) * (d + 1) * (d + 1), 0);
  res.table.valencies.resize(d + 1);
  res.table.valencies[0] = 1;
  for (uint32_t i = 1; i <= d; ++i) res.table.valencies[i] = s.cls(i).cardinality();

  const auto members = class_member_lists(s);
  fill_diagonal_rows(res.table);
  res.ok = true;
  for (uint32_t i = 1; i <= d; ++i)
    for (uint32_t j = i; j <= d; ++j) {
      const auto table = convolve(s.cls(i), s.cls(j));
      if (!scan_constancy(table, members, i, j, res)) return res;
    }
  return res;
}

std::vector<FusionPartition> enumerate_fusions(uint32_t d, uint32_t cap) {
  if (d < 1) throw std::invalid_argument("enumerate_fusions: d >= 1 required");
  if (d > cap)
    throw std::invalid_argument("enumerate_fusions: " + std::to_string(d) +
                                " classes exceed the fusion cap " + std::to_string(cap));
  // restricted growth strings in lexicographic order
  std::vector<FusionPartition> out;
  std::vector<uint32_t> a(d, 0);
  while (true) {
    uint32_t nblocks = 0;
    for (uint32_t v : a) nblocks = std::max(nblocks, v + 1);
    FusionPartition p;
    p.blocks.assign(nblocks, {});
    for (uint32_t i = 0; i < d; ++i) p.blocks[a[i]].push_back(i + 1);
    out.push_back(std::move(p));

    // next RGS: increment the rightmost position that may grow
    uint32_t i = d;
    while (i-- > 1) {
      uint32_t maxprev = 0;
      for (uint32_t j = 0; j < i; ++j) maxprev = std::max(maxprev, a[j]);
      if (a[i] <= maxprev) {
        ++a[i];
        for (uint32_t j = i + 1; j < d; ++j) a[j] = 0;
        break;
      }
      if (i == 1) return out;
    }
    if (d == 1) return out;
  }
}

TranslationScheme fuse(const TranslationScheme& s, const FusionPartition& partition) {
  const uint32_t d = s.num_classes();
  std::vector<uint8_t> seen(d + 1, 0);
  for (const auto& block : partition.blocks) {
    if (block.empty()) throw std::invalid_argument("fuse: empty block");
    for (uint32_t i : block) {
      if (i < 1 || i > d) throw std::invalid_argument("fuse: class index out of range");
      if (seen[i]) throw std::invalid_argument("fuse: class index repeated");
      seen[i] = 1;
    }
  }
  for (uint32_t i = 1; i <= d; ++i)
    if (!seen[i]) throw std::invalid_argument("fuse: class " + std::to_string(i) + " not covered");

  std::vector<SubsetIndicator> fused;
  fused.reserve(partition.blocks.size());
  for (const auto& block : partition.blocks) {
    SubsetIndicator u = s.cls(block[0]);
    for (size_t b = 1; b < block.size(); ++b) u = SubsetIndicator::union_of(u, s.cls(block[b]));
    fused.push_back(std::move(u));
  }
  return TranslationScheme(s.group(), std::move(fused));
}

ConvolutionCache::ConvolutionCache(const TranslationScheme& s) : d_(s.num_classes()) {
  tables_.reserve(static_cast<size_t>(d_) * (d_ + 1) / 2);
  for (uint32_t i = 1; i <= d_; ++i)
    for (uint32_t j = i; j <= d_; ++j) tables_.push_back(convolve(s.cls(i), s.cls(j)));
}

const std::vector<uint64_t>& ConvolutionCache::conv(uint32_t i, uint32_t j) const {
  if (i > j) std::swap(i, j);
  // pair (i, j), 1 <= i <= j <= d, stored row by row; row i starts after the
  // (i-1) earlier rows of lengths d, d-1, ..., d-i+2
  const size_t idx = static_cast<size_t>(i - 1) * (d_ + 1) -
                     static_cast<size_t>(i) * (i - 1) / 2 + (j - i);
  return tables_[idx];
}

AmorphyCertificate verify_amorphic(const TranslationScheme& s, uint32_t cap) {
  const uint32_t d = s.num_classes();
  AmorphyCertificate cert;
  const ConvolutionCache cache(s);
  const auto members = class_member_lists(s);
  const uint64_t order = s.group().order();

  std::vector<uint64_t> tmp(order);
  for (const FusionPartition& part : enumerate_fusions(d, cap)) {
    FusionCheck check;
    check.partition = part;
    check.ok = true;
    const uint32_t nb = static_cast<uint32_t>(part.blocks.size());
    for (uint32_t bi = 0; bi < nb && check.ok; ++bi)
      for (uint32_t bj = bi; bj < nb && check.ok; ++bj) {
        std::fill(tmp.begin(), tmp.end(), 0);
        for (uint32_t i : part.blocks[bi])
          for (uint32_t j : part.blocks[bj]) {
            const auto& base = cache.conv(i, j);
            for (uint64_t y = 0; y < order; ++y) tmp[y] += base[y];
          }
        // constancy over every fused class; the identity class is a single
        // element and needs no scan
        for (uint32_t bk = 0; bk < nb && check.ok; ++bk) {
          uint64_t expected = 0;
          bool first = true;
          for (uint32_t k : part.blocks[bk]) {
            for (uint64_t y : members[k]) {
              if (first) {
                expected = tmp[y];
                first = false;
              } else if (tmp[y] != expected) {
                check.ok = false;
                check.witness = "blocks (" + std::to_string(bi + 1) + "," + std::to_string(bj + 1) +
                                ") not constant on fused class " + std::to_string(bk + 1) +
                                ": count " + std::to_string(tmp[y]) + " at rank " +
                                std::to_string(y) + ", expected " + std::to_string(expected);
                break;
              }
            }
            if (!check.ok) break;
          }
        }
      }
    if (!check.ok && !cert.first_failure) cert.first_failure = part;
    cert.checks.push_back(std::move(check));
  }
  cert.fusions_checked = cert.checks.size();
  cert.amorphic = !cert.first_failure.has_value();
  return cert;
}

VanDamReport van_dam_check(const GroupSpec& g, const std::vector<SubsetIndicator>& classes) {
  VanDamReport rep;
  const std::string err = TranslationScheme::validate(g, classes);
  rep.partition_ok = err.empty();
  if (!rep.partition_ok) rep.detail = err;

  rep.all_pds = true;
  for (const auto& s : classes) {
    rep.class_results.push_back(verify_pds_by_differences(s));
    const auto& res = rep.class_results.back();
    rep.class_types.push_back(res.ok ? classify_latin_type(res.params) : std::nullopt);
    if (!res.ok) rep.all_pds = false;
  }
  if (!rep.all_pds) {
    if (rep.detail.empty()) rep.detail = "a class fails PDS verification";
    return rep;
  }

  int eps = 0;
  bool uniform = true;
  for (const auto& t : rep.class_types) {
    if (!t) {
      uniform = false;
      rep.detail = "a class is neither Latin nor negative Latin square type";
      break;
    }
    if (eps == 0) eps = t->epsilon;
    if (t->epsilon != eps) {
      uniform = false;
      rep.detail = "criterion not applicable: classes mix Latin and negative Latin types";
      break;
    }
  }
  rep.applicable = rep.partition_ok && uniform;
  if (rep.applicable) rep.epsilon = eps;
  return rep;
}

SrgResult srg_parameters_of_class(const TranslationScheme& s, uint32_t i) {
  SrgResult out;
  if (i < 1 || i > s.num_classes()) {
    out.failure = "class index out of range";
    return out;
  }
  const auto diff = verify_pds_by_differences(s.cls(i));
  if (s.num_classes() == 1) {
    const uint64_t v = s.group().order();
    out.ok = true;
    out.params = {v, v - 1, v - 2, 0};
    if (!(diff.params == out.params))
      throw std::logic_error("srg_parameters_of_class: verifier disagreement on trivial scheme");
    return out;
  }

  SubsetIndicator rest(s.group());
  for (uint32_t j = 1; j <= s.num_classes(); ++j)
    if (j != i) rest = SubsetIndicator::union_of(rest, s.cls(j));
  TranslationScheme two(s.group(), {s.cls(i), std::move(rest)});
  const auto res = intersection_numbers(two);
  if (!res.ok) {
    out.failure = res.describe();
    return out;
  }
  out.params = {s.group().order(), res.table.valencies[1], res.table.at(1, 1, 1),
                res.table.at(1, 1, 2)};
  if (!diff.ok || !(diff.params == out.params))
    throw std::logic_error(
        "srg_parameters_of_class: intersection-number and difference-count parameters disagree");
  out.ok = true;
  return out;
}

}  // namespace amorph
