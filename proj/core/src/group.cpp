#include "amorph/group.hpp"

#include <numeric>
#include <stdexcept>

namespace amorph {

GroupSpec::GroupSpec(std::vector<uint32_t> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("GroupSpec: at least one cyclic factor");
  order_ = 1;
  uint64_t lcm = 1;
  for (uint32_t m : factors_) {
    if (m < 2) throw std::invalid_argument("GroupSpec: cyclic factors must be >= 2");
    order_ *= m;
    lcm = std::lcm(lcm, static_cast<uint64_t>(m));
    if (order_ > (1ull << 40)) throw std::invalid_argument("GroupSpec: order too large");
  }
  exponent_ = static_cast<uint32_t>(lcm);
}

uint64_t GroupSpec::rank(const GroupElement& g) const {
  if (g.residues.size() != factors_.size())
    throw std::invalid_argument("GroupSpec::rank: residue count mismatch");
  uint64_t r = 0, stride = 1;
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (g.residues[i] >= factors_[i])
      throw std::invalid_argument("GroupSpec::rank: residue out of range");
    r += g.residues[i] * stride;
    stride *= factors_[i];
  }
  return r;
}

GroupElement GroupSpec::unrank(uint64_t i) const {
  if (i >= order_) throw std::out_of_range("GroupSpec::unrank: index out of range");
  GroupElement g;
  g.residues.resize(factors_.size());
  for (size_t k = 0; k < factors_.size(); ++k) {
    g.residues[k] = static_cast<uint32_t>(i % factors_[k]);
    i /= factors_[k];
  }
  return g;
}

GroupElement GroupSpec::add(const GroupElement& a, const GroupElement& b) const {
  GroupElement r;
  r.residues.resize(factors_.size());
  for (size_t i = 0; i < factors_.size(); ++i) {
    uint32_t s = a.residues[i] + b.residues[i];
    if (s >= factors_[i]) s -= factors_[i];
    r.residues[i] = s;
  }
  return r;
}

GroupElement GroupSpec::neg(const GroupElement& a) const {
  GroupElement r;
  r.residues.resize(factors_.size());
  for (size_t i = 0; i < factors_.size(); ++i)
    r.residues[i] = a.residues[i] == 0 ? 0 : factors_[i] - a.residues[i];
  return r;
}

GroupElement GroupSpec::identity() const {
  GroupElement g;
  g.residues.assign(factors_.size(), 0);
  return g;
}

uint64_t GroupSpec::add_ranks(uint64_t a, uint64_t b) const {
  uint64_t out = 0, stride = 1;
  for (uint32_t m : factors_) {
    uint64_t s = a % m + b % m;
    if (s >= m) s -= m;
    out += s * stride;
    stride *= m;
    a /= m;
    b /= m;
  }
  return out;
}

uint64_t GroupSpec::neg_rank(uint64_t a) const {
  uint64_t out = 0, stride = 1;
  for (uint32_t m : factors_) {
    uint64_t r = a % m;
    out += (r == 0 ? 0 : m - r) * stride;
    stride *= m;
    a /= m;
  }
  return out;
}

SubsetIndicator::SubsetIndicator(GroupSpec group)
    : group_(std::move(group)), bits_(group_.order(), 0) {}

void SubsetIndicator::insert(uint64_t rank) {
  if (!bits_.at(rank)) {
    bits_[rank] = 1;
    ++cardinality_;
  }
}

void SubsetIndicator::erase(uint64_t rank) {
  if (bits_.at(rank)) {
    bits_[rank] = 0;
    --cardinality_;
  }
}

std::vector<uint64_t> SubsetIndicator::members() const {
  std::vector<uint64_t> m;
  m.reserve(cardinality_);
  for (uint64_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) m.push_back(i);
  return m;
}

bool SubsetIndicator::is_symmetric() const {
  for (uint64_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] && !bits_[group_.neg_rank(i)]) return false;
  return true;
}

SubsetIndicator SubsetIndicator::negated() const {
  SubsetIndicator r(group_);
  for (uint64_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) r.insert(group_.neg_rank(i));
  return r;
}

SubsetIndicator SubsetIndicator::complement(bool include_identity) const {
  SubsetIndicator r(group_);
  for (uint64_t i = 0; i < bits_.size(); ++i)
    if (!bits_[i] && (include_identity || i != 0)) r.insert(i);
  return r;
}

SubsetIndicator SubsetIndicator::union_of(const SubsetIndicator& a, const SubsetIndicator& b) {
  if (!(a.group_ == b.group_)) throw std::invalid_argument("union_of: group mismatch");
  SubsetIndicator r(a.group_);
  for (uint64_t i = 0; i < r.bits_.size(); ++i)
    if (a.bits_[i] || b.bits_[i]) r.insert(i);
  return r;
}

SubsetIndicator SubsetIndicator::difference(const SubsetIndicator& a, const SubsetIndicator& b) {
  if (!(a.group_ == b.group_)) throw std::invalid_argument("difference: group mismatch");
  SubsetIndicator r(a.group_);
  for (uint64_t i = 0; i < r.bits_.size(); ++i)
    if (a.bits_[i] && !b.bits_[i]) r.insert(i);
  return r;
}

bool SubsetIndicator::disjoint_with(const SubsetIndicator& o) const {
  for (uint64_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] && o.bits_[i]) return false;
  return true;
}

CyclotomicInt character_value(const GroupSpec& g, const GroupElement& label,
                              const GroupElement& x) {
  const uint32_t L = g.exponent();
  if (label.residues.size() != g.factors().size() || x.residues.size() != g.factors().size())
    throw std::invalid_argument("character_value: group mismatch");
  uint64_t e = 0;
  for (size_t j = 0; j < g.factors().size(); ++j) {
    const uint64_t w = L / g.factors()[j];
    e = (e + w * label.residues[j] % L * x.residues[j]) % L;
  }
  return CyclotomicInt::zeta_pow(L, e);
}

namespace {

// Exponent of zeta_L contributed by label a against x, both given as ranks.
uint64_t character_exponent(const GroupSpec& g, uint64_t a, uint64_t x) {
  const uint32_t L = g.exponent();
  uint64_t e = 0;
  for (uint32_t m : g.factors()) {
    e = (e + (L / m) * (a % m) % L * (x % m)) % L;
    a /= m;
    x /= m;
  }
  return e;
}

// Exponent 2: every character value is +-1, so the whole spectrum stays in
// the rational integers and the decimation butterfly is (a+b, a-b).
std::vector<CyclotomicInt> character_sums_walsh(const SubsetIndicator& s) {
  const GroupSpec& g = s.group();
  const uint64_t n = g.order();
  std::vector<int64_t> data(n, 0);
  for (uint64_t i = 0; i < n; ++i) data[i] = s.contains(i) ? 1 : 0;
  for (uint64_t stride = 1; stride < n; stride <<= 1) {
    for (uint64_t base = 0; base < n; base += stride << 1) {
      for (uint64_t off = 0; off < stride; ++off) {
        const int64_t a = data[base + off];
        const int64_t b = data[base + off + stride];
        data[base + off] = a + b;
        data[base + off + stride] = a - b;
      }
    }
  }
  std::vector<CyclotomicInt> out;
  out.reserve(n);
  for (uint64_t i = 0; i < n; ++i) out.push_back(CyclotomicInt::integer(2, data[i]));
  return out;
}

// Rank addition without per-pair division: the factor list is split into
// chunks of product <= 256 and each chunk gets a premultiplied digit-sum
// table, so adding two ranks is one lookup-and-add per chunk.
class RankAdder {
 public:
  explicit RankAdder(const GroupSpec& g) {
    // chunk tables cost prod^2 to build; keeping prod near sqrt(order) makes
    // the setup negligible against the order-sized loops that use it
    uint64_t bound = 2;
    while (bound * bound < 4 * g.order() && bound < 256) bound <<= 1;
    const auto& factors = g.factors();
    size_t i = 0;
    uint64_t stride = 1;
    while (i < factors.size()) {
      uint64_t prod = 1;
      size_t j = i;
      std::vector<uint32_t> part;
      while (j < factors.size() && prod * factors[j] <= bound) {
        prod *= factors[j];
        part.push_back(factors[j]);
        ++j;
      }
      Chunk c;
      if (part.empty()) {
        // a single cyclic factor above the chunk bound: add directly, no table
        prod = factors[j];
        ++j;
        c.mod = prod;
        c.stride = stride;
      } else {
        c.mod = prod;
        c.stride = stride;
        std::vector<uint64_t> table(prod * prod);
        for (uint64_t a = 0; a < prod; ++a)
          for (uint64_t b = 0; b < prod; ++b) {
            uint64_t out = 0, sub_stride = 1, ta = a, tb = b;
            for (uint32_t m : part) {
              uint64_t v = ta % m + tb % m;
              if (v >= m) v -= m;
              out += v * sub_stride;
              sub_stride *= m;
              ta /= m;
              tb /= m;
            }
            table[a * prod + b] = out * stride;  // premultiplied by the chunk stride
          }
        c.table = std::move(table);
      }
      chunks_.push_back(std::move(c));
      stride *= prod;
      i = j;
    }
  }

  size_t chunk_count() const { return chunks_.size(); }

  // chunk digits of every rank in `ranks`, row-major
  std::vector<uint32_t> digits_of(const std::vector<uint64_t>& ranks) const {
    std::vector<uint32_t> out(ranks.size() * chunks_.size());
    for (size_t r = 0; r < ranks.size(); ++r) {
      uint64_t t = ranks[r];
      for (size_t c = 0; c < chunks_.size(); ++c) {
        out[r * chunks_.size() + c] = static_cast<uint32_t>(t % chunks_[c].mod);
        t /= chunks_[c].mod;
      }
    }
    return out;
  }

  uint64_t add_digits(const uint32_t* da, const uint32_t* db) const {
    uint64_t y = 0;
    for (size_t c = 0; c < chunks_.size(); ++c) {
      const Chunk& ch = chunks_[c];
      if (ch.table.empty()) {
        uint64_t v = static_cast<uint64_t>(da[c]) + db[c];
        if (v >= ch.mod) v -= ch.mod;
        y += v * ch.stride;
      } else {
        y += ch.table[static_cast<uint64_t>(da[c]) * ch.mod + db[c]];
      }
    }
    return y;
  }

 private:
  struct Chunk {
    uint64_t mod;
    uint64_t stride;
    std::vector<uint64_t> table;
  };
  std::vector<Chunk> chunks_;
};

std::vector<CyclotomicInt> character_sums_direct(const SubsetIndicator& s) {
  const GroupSpec& g = s.group();
  const uint32_t L = g.exponent();
  const auto mem = s.members();
  std::vector<CyclotomicInt> out(g.order(), CyclotomicInt(L));
  for (uint64_t a = 0; a < g.order(); ++a)
    for (uint64_t x : mem) out[a].add_zeta_pow(character_exponent(g, a, x));
  return out;
}

// Decimation along each cyclic factor: the m-point exact DFT with twiddle
// zeta_L^{L/m} applied to every line of the data cube.
std::vector<CyclotomicInt> character_sums_transform(const SubsetIndicator& s) {
  const GroupSpec& g = s.group();
  const uint32_t L = g.exponent();
  const uint64_t n = g.order();
  std::vector<CyclotomicInt> data(n, CyclotomicInt(L));
  for (uint64_t i = 0; i < n; ++i)
    if (s.contains(i)) data[i] = CyclotomicInt::integer(L, 1);

  uint64_t stride = 1;
  for (uint32_t m : g.factors()) {
    const uint64_t w = L / m;  // twiddle exponent step
    const uint64_t block = stride * m;
    std::vector<CyclotomicInt> line(m, CyclotomicInt(L));
    for (uint64_t base = 0; base < n; base += block) {
      for (uint64_t off = 0; off < stride; ++off) {
        for (uint32_t r = 0; r < m; ++r) {
          CyclotomicInt acc(L);
          for (uint32_t t = 0; t < m; ++t) {
            const CyclotomicInt& v = data[base + off + t * stride];
            if (v.is_zero()) continue;
            acc += v * CyclotomicInt::zeta_pow(L, w * r % L * t);
          }
          line[r] = std::move(acc);
        }
        for (uint32_t r = 0; r < m; ++r) data[base + off + r * stride] = std::move(line[r]);
      }
    }
    stride = block;
  }
  return data;
}

}  // namespace

CyclotomicInt character_sum(const SubsetIndicator& s, const GroupElement& label) {
  const GroupSpec& g = s.group();
  CyclotomicInt acc(g.exponent());
  const uint64_t a = g.rank(label);
  for (uint64_t x : s.members()) acc.add_zeta_pow(character_exponent(g, a, x));
  return acc;
}

std::vector<CyclotomicInt> all_character_sums(const SubsetIndicator& s) {
  const uint32_t L = s.group().exponent();
  if (L == 2) return character_sums_walsh(s);
  if (L == 3 || L == 4) return character_sums_transform(s);
  return character_sums_direct(s);
}

std::vector<uint64_t> difference_counts(const SubsetIndicator& s) {
  const GroupSpec& g = s.group();
  std::vector<uint64_t> counts(g.order(), 0);
  const auto mem = s.members();
  std::vector<uint64_t> negs(mem.size());
  for (size_t i = 0; i < mem.size(); ++i) negs[i] = g.neg_rank(mem[i]);

  const RankAdder adder(g);
  const size_t nc = adder.chunk_count();
  const auto da = adder.digits_of(mem);
  const auto dn = adder.digits_of(negs);
  for (size_t j = 0; j < mem.size(); ++j)
    for (size_t i = 0; i < mem.size(); ++i) {
      if (i == j) continue;
      ++counts[adder.add_digits(&da[i * nc], &dn[j * nc])];
    }
  return counts;
}

std::vector<uint64_t> convolve(const SubsetIndicator& a, const SubsetIndicator& b) {
  if (!(a.group() == b.group())) throw std::invalid_argument("convolve: group mismatch");
  const GroupSpec& g = a.group();
  std::vector<uint64_t> counts(g.order(), 0);
  const auto ma = a.members();
  const auto mb = b.members();

  const RankAdder adder(g);
  const size_t nc = adder.chunk_count();
  const auto da = adder.digits_of(ma);
  const auto db = adder.digits_of(mb);
  for (size_t i = 0; i < ma.size(); ++i)
    for (size_t j = 0; j < mb.size(); ++j)
      ++counts[adder.add_digits(&da[i * nc], &db[j * nc])];
  return counts;
}

}  // namespace amorph
