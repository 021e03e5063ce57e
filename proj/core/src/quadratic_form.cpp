#include "amorph/quadratic_form.hpp"

#include <stdexcept>

namespace amorph {

QuadraticForm::QuadraticForm(Field field, uint32_t dimension,
                             std::vector<FieldElement> upper_triangular)
    : field_(std::move(field)), dim_(dimension), coeff_(std::move(upper_triangular)) {
  if (dim_ == 0) throw std::invalid_argument("QuadraticForm: dimension must be positive");
  if (coeff_.size() != static_cast<size_t>(dim_) * dim_)
    throw std::invalid_argument("QuadraticForm: coefficient matrix size mismatch");
  for (uint32_t i = 0; i < dim_; ++i)
    for (uint32_t j = 0; j < i; ++j)
      if (coeff_[i * dim_ + j] != field_.zero())
        throw std::invalid_argument("QuadraticForm: matrix must be upper triangular");
}

FieldElement QuadraticForm::coefficient(uint32_t i, uint32_t j) const {
  if (i > j || j >= dim_) throw std::out_of_range("QuadraticForm::coefficient");
  return coeff_[i * dim_ + j];
}

FieldElement QuadraticForm::evaluate(std::span<const FieldElement> v) const {
  if (v.size() != dim_) throw std::invalid_argument("QuadraticForm::evaluate: dimension mismatch");
  FieldElement acc = field_.zero();
  for (uint32_t i = 0; i < dim_; ++i) {
    if (field_.is_zero(v[i])) continue;
    for (uint32_t j = i; j < dim_; ++j) {
      const FieldElement c = coeff_[i * dim_ + j];
      if (field_.is_zero(c)) continue;
      acc = field_.add(acc, field_.mul(c, field_.mul(v[i], v[j])));
    }
  }
  return acc;
}

FieldElement QuadraticForm::polarize(std::span<const FieldElement> v1,
                                     std::span<const FieldElement> v2) const {
  if (v1.size() != dim_ || v2.size() != dim_)
    throw std::invalid_argument("QuadraticForm::polarize: dimension mismatch");
  std::vector<FieldElement> sum(dim_);
  for (uint32_t i = 0; i < dim_; ++i) sum[i] = field_.add(v1[i], v2[i]);
  return field_.sub(field_.sub(evaluate(sum), evaluate(v1)), evaluate(v2));
}

bool QuadraticForm::is_nonsingular() const {
  // Gram matrix of B: B(e_i, e_i) = 2 c_ii, B(e_i, e_j) = c_ij for i < j.
  std::vector<FieldElement> gram(static_cast<size_t>(dim_) * dim_);
  for (uint32_t i = 0; i < dim_; ++i)
    for (uint32_t j = 0; j < dim_; ++j) {
      if (i == j)
        gram[i * dim_ + j] = field_.add(coeff_[i * dim_ + i], coeff_[i * dim_ + i]);
      else
        gram[i * dim_ + j] = coeff_[std::min(i, j) * dim_ + std::max(i, j)];
    }

  // kernel basis by Gaussian elimination over F_q
  std::vector<uint32_t> pivot_col;
  uint32_t row = 0;
  for (uint32_t col = 0; col < dim_ && row < dim_; ++col) {
    uint32_t pr = row;
    while (pr < dim_ && field_.is_zero(gram[pr * dim_ + col])) ++pr;
    if (pr == dim_) continue;
    for (uint32_t k = 0; k < dim_; ++k) std::swap(gram[pr * dim_ + k], gram[row * dim_ + k]);
    const FieldElement inv = field_.inv(gram[row * dim_ + col]);
    for (uint32_t k = 0; k < dim_; ++k)
      gram[row * dim_ + k] = field_.mul(gram[row * dim_ + k], inv);
    for (uint32_t rr = 0; rr < dim_; ++rr) {
      if (rr == row || field_.is_zero(gram[rr * dim_ + col])) continue;
      const FieldElement f = gram[rr * dim_ + col];
      for (uint32_t k = 0; k < dim_; ++k)
        gram[rr * dim_ + k] =
            field_.sub(gram[rr * dim_ + k], field_.mul(f, gram[row * dim_ + k]));
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<std::vector<FieldElement>> kernel;
  std::vector<uint8_t> is_pivot(dim_, 0);
  for (uint32_t c : pivot_col) is_pivot[c] = 1;
  for (uint32_t free_col = 0; free_col < dim_; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<FieldElement> w(dim_, field_.zero());
    w[free_col] = field_.one();
    for (uint32_t r = 0; r < pivot_col.size(); ++r)
      w[pivot_col[r]] = field_.neg(gram[r * dim_ + free_col]);
    kernel.push_back(std::move(w));
  }
  if (kernel.empty()) return true;

  // the radical is {w in ker B : Q(w) = 0}; enumerate ker B
  uint64_t combos = 1;
  for (size_t i = 0; i < kernel.size(); ++i) {
    combos *= field_.order();
    if (combos > (1u << 22))
      throw std::logic_error("QuadraticForm::is_nonsingular: kernel too large to enumerate");
  }
  std::vector<FieldElement> w(dim_);
  for (uint64_t n = 1; n < combos; ++n) {
    std::fill(w.begin(), w.end(), field_.zero());
    uint64_t t = n;
    for (const auto& basis_vec : kernel) {
      const FieldElement c = field_.element(t % field_.order());
      t /= field_.order();
      if (field_.is_zero(c)) continue;
      for (uint32_t i = 0; i < dim_; ++i)
        w[i] = field_.add(w[i], field_.mul(c, basis_vec[i]));
    }
    if (field_.is_zero(evaluate(w))) return false;
  }
  return true;
}

QuadraticForm QuadraticForm::scalar_multiple(FieldElement gamma) const {
  if (field_.is_zero(gamma))
    throw std::invalid_argument("QuadraticForm::scalar_multiple: gamma must be nonzero");
  std::vector<FieldElement> c(coeff_.size());
  for (size_t i = 0; i < coeff_.size(); ++i) c[i] = field_.mul(coeff_[i], gamma);
  return QuadraticForm(field_, dim_, std::move(c));
}

QuadraticForm QuadraticForm::standard_hyperbolic(const Field& f, uint32_t ell) {
  if (ell < 1) throw std::invalid_argument("standard_hyperbolic: ell >= 1 required");
  const uint32_t m = 2 * ell;
  std::vector<FieldElement> c(static_cast<size_t>(m) * m, f.zero());
  for (uint32_t k = 0; k < ell; ++k) c[(2 * k) * m + (2 * k + 1)] = f.one();
  return QuadraticForm(f, m, std::move(c));
}

QuadraticForm QuadraticForm::standard_elliptic(const Field& f, uint32_t ell) {
  if (ell < 1) throw std::invalid_argument("standard_elliptic: ell >= 1 required");
  const uint32_t m = 2 * ell;
  // anisotropic binary part a x1^2 + x1 x2 + b x2^2, first (b, a) in rank order
  for (uint64_t brank = 0; brank < f.order(); ++brank)
    for (uint64_t arank = 0; arank < f.order(); ++arank) {
      const FieldElement a = f.element(arank), b = f.element(brank);
      bool anisotropic = true;
      for (uint64_t x1 = 0; x1 < f.order() && anisotropic; ++x1)
        for (uint64_t x2 = 0; x2 < f.order() && anisotropic; ++x2) {
          if (x1 == 0 && x2 == 0) continue;
          const FieldElement e1 = f.element(x1), e2 = f.element(x2);
          FieldElement val = f.mul(a, f.mul(e1, e1));
          val = f.add(val, f.mul(e1, e2));
          val = f.add(val, f.mul(b, f.mul(e2, e2)));
          if (f.is_zero(val)) anisotropic = false;
        }
      if (!anisotropic) continue;
      std::vector<FieldElement> c(static_cast<size_t>(m) * m, f.zero());
      c[0 * m + 0] = a;
      c[0 * m + 1] = f.one();
      c[1 * m + 1] = b;
      for (uint32_t k = 1; k < ell; ++k) c[(2 * k) * m + (2 * k + 1)] = f.one();
      return QuadraticForm(f, m, std::move(c));
    }
  throw std::logic_error("standard_elliptic: no anisotropic binary form found");
}

QuadraticForm QuadraticForm::trace_compose(const Field& subfield) const {
  const SubfieldEmbedding emb(field_, subfield);
  const uint32_t e = emb.extension_degree();
  const uint32_t md = dim_ * e;
  // x^j in the big field, j < 2e (products of two basis powers)
  std::vector<FieldElement> xpow(2 * e);
  const FieldElement xb =
      field_.degree() == 1 ? field_.one() : field_.element(field_.characteristic());
  xpow[0] = field_.one();
  for (uint32_t j = 1; j < 2 * e; ++j) xpow[j] = field_.mul(xpow[j - 1], xb);

  std::vector<FieldElement> c(static_cast<size_t>(md) * md, subfield.zero());
  auto flat = [&](uint32_t i, uint32_t j) { return i * e + j; };
  for (uint32_t i1 = 0; i1 < dim_; ++i1)
    for (uint32_t j1 = 0; j1 < e; ++j1) {
      const uint32_t I = flat(i1, j1);
      // diagonal: Q0(e_I) = tr(c_{i1 i1} x^{2 j1})
      c[I * md + I] = emb.trace(field_.mul(coeff_[i1 * dim_ + i1], xpow[2 * j1]));
      // off-diagonal: B0(e_I, e_J) = tr(B(e_{i1}, e_{i2}) x^{j1 + j2})
      for (uint32_t I2 = I + 1; I2 < md; ++I2) {
        const uint32_t i2 = I2 / e, j2 = I2 % e;
        const FieldElement bij =
            i1 == i2 ? field_.add(coeff_[i1 * dim_ + i1], coeff_[i1 * dim_ + i1])
                     : coeff_[i1 * dim_ + i2];
        c[I * md + I2] = emb.trace(field_.mul(bij, xpow[j1 + j2]));
      }
    }
  return QuadraticForm(subfield, md, std::move(c));
}

uint64_t QuadraticForm::vector_count() const {
  uint64_t n = 1;
  for (uint32_t i = 0; i < dim_; ++i) n *= field_.order();
  return n;
}

std::vector<FieldElement> QuadraticForm::vector_at(uint64_t n) const {
  std::vector<FieldElement> v(dim_);
  for (uint32_t i = 0; i < dim_; ++i) {
    v[i] = field_.element(n % field_.order());
    n /= field_.order();
  }
  return v;
}

SubsetIndicator QuadraticForm::level_set(FieldElement beta, bool exclude_zero_vector) const {
  SubsetIndicator out(vector_group(field_, dim_));
  const uint64_t total = vector_count();
  std::vector<FieldElement> v(dim_);
  for (uint64_t n = 0; n < total; ++n) {
    if (exclude_zero_vector && n == 0) continue;
    uint64_t t = n;
    for (uint32_t i = 0; i < dim_; ++i) {
      v[i] = field_.element(t % field_.order());
      t /= field_.order();
    }
    if (evaluate(v) == beta) out.insert(n);
  }
  return out;
}

QuadraticForm::TypeTag QuadraticForm::classify_type() const {
  if (dim_ % 2 != 0)
    throw std::invalid_argument("classify_type: even dimension required");
  const uint64_t q = field_.order();
  const uint32_t h = dim_ / 2;
  uint64_t qh = 1, qh1 = 1;
  for (uint32_t i = 0; i < h; ++i) qh *= q;
  for (uint32_t i = 0; i + 1 < h; ++i) qh1 *= q;
  const uint64_t elliptic = (qh + 1) * (qh1 - 1);
  const uint64_t hyperbolic = (qh - 1) * (qh1 + 1);

  uint64_t zeros = 0;
  const uint64_t total = vector_count();
  std::vector<FieldElement> v(dim_);
  for (uint64_t n = 1; n < total; ++n) {
    uint64_t t = n;
    for (uint32_t i = 0; i < dim_; ++i) {
      v[i] = field_.element(t % q);
      t /= q;
    }
    if (field_.is_zero(evaluate(v))) ++zeros;
  }
  if (zeros == elliptic) return {-1, zeros};
  if (zeros == hyperbolic) return {+1, zeros};
  throw std::logic_error(
      "classify_type: zero count matches neither type (singular input or internal error)");
}

}  // namespace amorph
