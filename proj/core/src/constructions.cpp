#include "amorph/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace amorph {
namespace {

std::pair<uint32_t, uint32_t> as_prime_power(uint32_t q) {
  if (q < 2) throw std::invalid_argument("expected a prime power >= 2");
  uint32_t p = q;
  for (uint32_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  uint32_t s = 0, t = q;
  while (t % p == 0) {
    t /= p;
    ++s;
  }
  if (t != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return {p, s};
}

uint64_t ipow(uint64_t b, uint32_t e) {
  uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Latin / negative Latin parameters from (n, k, eps); k = r(n - eps) must
// divide exactly for the families built here.
PdsParameters latin_params(uint64_t n, uint64_t k, int eps) {
  const int64_t denom = static_cast<int64_t>(n) - eps;
  if (denom <= 0 || k % static_cast<uint64_t>(denom) != 0)
    throw std::logic_error("latin_params: size is not of Latin type");
  const int64_t r = static_cast<int64_t>(k / static_cast<uint64_t>(denom));
  const int64_t lambda = eps * static_cast<int64_t>(n) + r * r - 3 * eps * r;
  const int64_t mu = r * r - eps * r;
  return {n * n, k, static_cast<uint64_t>(lambda), static_cast<uint64_t>(mu)};
}

void check_sizes(const std::vector<SubsetIndicator>& classes,
                 const std::vector<uint64_t>& expected, const std::string& name) {
  if (classes.size() != expected.size())
    throw std::logic_error(name + ": class count differs from the formula prediction");
  for (size_t i = 0; i < classes.size(); ++i)
    if (classes[i].cardinality() != expected[i])
      throw std::logic_error(name + ": class " + std::to_string(i + 1) + " has size " +
                             std::to_string(classes[i].cardinality()) + ", formula predicts " +
                             std::to_string(expected[i]));
}

// Group-character label on Z_2^{2n} matching the F_4 character
// x -> (-1)^{tr(w x)} coordinate by coordinate.
GroupElement f4_char_label(const Field& f4, std::span<const FieldElement> w) {
  GroupElement label;
  label.residues.reserve(2 * w.size());
  for (FieldElement wi : w) {
    auto c = f4.coeffs(wi);
    label.residues.push_back(c[1]);
    label.residues.push_back((c[0] + c[1]) & 1);
  }
  return label;
}

}  // namespace

std::string to_string(FormKind kind) {
  return kind == FormKind::Elliptic ? "elliptic" : "hyperbolic";
}

ConstructionResult cyclotomic_scheme(uint32_t p, uint32_t s, uint32_t e) {
  const Field f = Field::extension(p, s);
  const uint64_t q = f.order();
  if (e <= 1) throw std::invalid_argument("cyclotomic_scheme: e > 1 required");
  if ((q - 1) % e != 0)
    throw std::invalid_argument("cyclotomic_scheme: e must divide " + std::to_string(q - 1));
  const uint64_t fsize = (q - 1) / e;
  if (p != 2 && fsize % 2 != 0)
    throw std::invalid_argument(
        "cyclotomic_scheme: -1 is not in the index-e subgroup ((q-1)/e odd, odd characteristic)");

  const GroupSpec g = additive_group(f);
  std::vector<SubsetIndicator> classes(e, SubsetIndicator(g));
  for (uint64_t t = 0; t < q - 1; ++t)
    classes[t % e].insert(g.rank(as_group_element(f, f.exp(t))));

  bool predicted = e <= 2;
  if (!predicted) {
    // -1 a power of p modulo e
    uint64_t pk = 1 % e;
    for (uint32_t k = 0; k <= 2 * e && !predicted; ++k) {
      if (pk == (e - 1) % e) predicted = true;
      pk = pk * p % e;
    }
  }

  ConstructionDescriptor d;
  d.name = "cyclotomic";
  d.parameters = {{"p", std::to_string(p)}, {"s", std::to_string(s)}, {"e", std::to_string(e)}};
  d.expected_class_sizes.assign(e, fsize);
  d.amorphy_prediction = predicted;
  check_sizes(classes, d.expected_class_sizes, "cyclotomic_scheme");
  return {TranslationScheme(g, std::move(classes)), std::move(d)};
}

ConstructionResult four_class_scheme(uint32_t ell) {
  if (ell < 2) throw std::invalid_argument("four_class_scheme: ell >= 2 required");
  const Field& f4 = gr4::residue_field();
  const QuadraticForm q = QuadraticForm::standard_elliptic(f4, ell);

  std::vector<SubsetIndicator> classes;
  classes.push_back(q.level_set(f4.zero(), /*exclude_zero_vector=*/true));
  for (uint64_t beta = 1; beta < 4; ++beta)
    classes.push_back(q.level_set(f4.element(beta), false));

  const uint64_t n = ipow(4, ell);
  const uint64_t size0 = (n + 1) * (ipow(4, ell - 1) - 1);
  const uint64_t size1 = (n + 1) * ipow(4, ell - 1);
  ConstructionDescriptor d;
  d.name = "four_class";
  d.parameters = {{"ell", std::to_string(ell)}};
  d.expected_class_sizes = {size0, size1, size1, size1};
  d.expected_class_params = {latin_params(n, size0, -1), latin_params(n, size1, -1),
                             latin_params(n, size1, -1), latin_params(n, size1, -1)};
  check_sizes(classes, d.expected_class_sizes, "four_class_scheme");
  GroupSpec g = classes[0].group();
  return {TranslationScheme(std::move(g), std::move(classes)), std::move(d)};
}

SubsetIndicator lifted_set(FieldElement beta, uint32_t ell) {
  if (ell < 2) throw std::invalid_argument("lifted_set: ell >= 2 required");
  const Field& f4 = gr4::residue_field();
  if (beta.rank >= 4) throw std::invalid_argument("lifted_set: beta must be an F_4 element");
  const QuadraticForm q = QuadraticForm::standard_elliptic(f4, ell);
  const SubsetIndicator d_beta = q.level_set(beta, f4.is_zero(beta));

  const GroupSpec lifted = gr4::lifted_group(ell);
  SubsetIndicator out(lifted);
  for (uint64_t nrank : d_beta.members()) {
    const auto v = vector_from_group(f4, d_beta.group().unrank(nrank));
    out.insert(lifted.rank(gr4::to_group(gr4::lift(v))));
  }
  return out;
}

ConstructionResult lifted_four_class_scheme(uint32_t ell) {
  if (ell < 2) throw std::invalid_argument("lifted_four_class_scheme: ell >= 2 required");
  const Field& f4 = gr4::residue_field();
  std::vector<SubsetIndicator> classes;
  for (uint64_t beta = 0; beta < 4; ++beta) classes.push_back(lifted_set(f4.element(beta), ell));

  const uint64_t n = ipow(4, ell);
  const uint64_t size0 = (n + 1) * (ipow(4, ell - 1) - 1);
  const uint64_t size1 = (n + 1) * ipow(4, ell - 1);
  ConstructionDescriptor d;
  d.name = "lifted_four_class";
  d.parameters = {{"ell", std::to_string(ell)}};
  d.expected_class_sizes = {size0, size1, size1, size1};
  d.expected_class_params = {latin_params(n, size0, -1), latin_params(n, size1, -1),
                             latin_params(n, size1, -1), latin_params(n, size1, -1)};
  check_sizes(classes, d.expected_class_sizes, "lifted_four_class_scheme");
  GroupSpec g = classes[0].group();
  return {TranslationScheme(std::move(g), std::move(classes)), std::move(d)};
}

ChainSchemeResult chain_scheme(uint32_t q, uint32_t m, uint32_t ell,
                               std::vector<uint32_t> chain, FormKind kind) {
  if (ell < 1) throw std::invalid_argument("chain_scheme: ell >= 1 required");
  if (chain.empty() || chain.front() != m || chain.back() != 1)
    throw std::invalid_argument("chain_scheme: chain must run from m down to 1");
  for (size_t i = 1; i < chain.size(); ++i)
    if (chain[i] >= chain[i - 1] || chain[i - 1] % chain[i] != 0)
      throw std::invalid_argument("chain_scheme: chain must descend by strict divisibility");
  const auto [p, s0] = as_prime_power(q);
  const Field big = Field::extension(p, s0 * m);
  const uint32_t d = static_cast<uint32_t>(chain.size());

  // in_kernel[i][u]: tr from F_{q^m} down to F_{q^{m_i}} kills u
  std::vector<std::vector<uint8_t>> in_kernel(d, std::vector<uint8_t>(big.order(), 0));
  for (uint32_t i = 0; i < d; ++i) {
    const uint64_t qi = ipow(q, chain[i]);
    const uint32_t steps = m / chain[i];
    for (uint64_t u = 0; u < big.order(); ++u) {
      FieldElement acc{0}, y = big.element(u);
      for (uint32_t k = 0; k < steps; ++k) {
        acc = big.add(acc, y);
        y = big.pow(y, qi);
      }
      in_kernel[i][u] = big.is_zero(acc) ? 1 : 0;
    }
  }

  const QuadraticForm form = kind == FormKind::Elliptic
                                 ? QuadraticForm::standard_elliptic(big, ell)
                                 : QuadraticForm::standard_hyperbolic(big, ell);
  const GroupSpec g = vector_group(big, 2 * ell);

  std::vector<SubsetIndicator> omegas(d, SubsetIndicator(g));
  std::vector<SubsetIndicator> slices(d + 1, SubsetIndicator(g));
  const uint64_t total = form.vector_count();
  for (uint64_t nrank = 1; nrank < total; ++nrank) {
    const FieldElement val = form.evaluate(form.vector_at(nrank));
    uint32_t cls = d;  // complement unless a kernel claims it
    for (uint32_t i = 0; i < d; ++i) {
      if (in_kernel[i][val.rank]) {
        omegas[i].insert(nrank);
        if (cls == d) cls = i;
      }
    }
    slices[cls].insert(nrank);
  }

  // expected cumulative sizes from the quadric counts over F_{q^{m_i}}
  const int eps = kind == FormKind::Elliptic ? -1 : +1;
  const uint64_t v = g.order();
  const uint64_t n = ipow(q, static_cast<uint32_t>(m) * ell);  // sqrt(v)
  std::vector<uint64_t> cumulative(d);
  for (uint32_t i = 0; i < d; ++i) {
    const uint64_t qi = ipow(q, chain[i]);
    const uint32_t li = ell * (m / chain[i]);
    const uint64_t qh = ipow(qi, li), qh1 = ipow(qi, li - 1);
    cumulative[i] = kind == FormKind::Elliptic ? (qh + 1) * (qh1 - 1) : (qh - 1) * (qh1 + 1);
  }

  ConstructionDescriptor desc;
  desc.name = "chain";
  std::string chain_str;
  for (size_t i = 0; i < chain.size(); ++i)
    chain_str += (i ? "," : "") + std::to_string(chain[i]);
  desc.parameters = {{"q", std::to_string(q)},
                     {"m", std::to_string(m)},
                     {"ell", std::to_string(ell)},
                     {"chain", chain_str},
                     {"type", to_string(kind)}};

  std::vector<SubsetIndicator> classes;
  for (uint32_t i = 0; i <= d; ++i) {
    const uint64_t expected =
        i == 0 ? cumulative[0]
               : (i < d ? cumulative[i] - cumulative[i - 1] : v - 1 - cumulative[d - 1]);
    if (slices[i].cardinality() != expected)
      throw std::logic_error("chain_scheme: slice size disagrees with the quadric count formula");
    if (expected == 0) {
      desc.warnings.push_back("class " + std::to_string(i + 1) +
                              (i == 0 ? " (Omega_1)"
                                      : i < d ? " (Omega_" + std::to_string(i + 1) + " \\ Omega_" +
                                                    std::to_string(i) + ")"
                                              : " (complement)") +
                              " is empty; dropped");
      continue;
    }
    desc.expected_class_sizes.push_back(expected);
    desc.expected_class_params.push_back(latin_params(n, expected, eps));
    classes.push_back(std::move(slices[i]));
  }
  check_sizes(classes, desc.expected_class_sizes, "chain_scheme");

  ChainSchemeResult out{TranslationScheme(g, std::move(classes)), std::move(desc),
                        std::move(omegas), std::move(chain), kind};
  return out;
}

SubsetIndicator hamilton_fusion(const ChainSchemeResult& chain) {
  const uint32_t d = static_cast<uint32_t>(chain.omegas.size());
  SubsetIndicator fusion(chain.scheme.group());
  // Omega_d \ Omega_{d-1}, then Omega_{d-2} \ Omega_{d-3}, ...; the odd
  // tail ends with Omega_1 itself.
  for (int32_t i = static_cast<int32_t>(d); i >= 1; i -= 2) {
    const SubsetIndicator& top = chain.omegas[i - 1];
    const SubsetIndicator slice =
        i >= 2 ? SubsetIndicator::difference(top, chain.omegas[i - 2]) : top;
    fusion = SubsetIndicator::union_of(fusion, slice);
  }
  return fusion;
}

ConstructionResult rotation_scheme(uint32_t q, uint32_t ell) {
  if (ell < 2) throw std::invalid_argument("rotation_scheme: ell >= 2 required");
  const auto [p, s0] = as_prime_power(q);
  const Field big = Field::extension(p, 2 * s0);  // F_{q^2}

  // trace kernel of tr_{q^2/q}, cross-checked against the generator-power
  // description of the trace-zero set
  std::vector<uint8_t> in_kernel(big.order(), 0);
  for (uint64_t u = 0; u < big.order(); ++u) {
    const FieldElement x = big.element(u);
    in_kernel[u] = big.is_zero(big.add(x, big.pow(x, q))) ? 1 : 0;
  }
  {
    std::vector<uint8_t> formula(big.order(), 0);
    for (FieldElement x : trace_zero_elements(big)) formula[x.rank] = 1;
    if (formula != in_kernel)
      throw std::logic_error("rotation_scheme: trace-zero formula set mismatch");
  }

  const QuadraticForm form = QuadraticForm::standard_elliptic(big, ell);
  const GroupSpec g = vector_group(big, 2 * ell);
  const FieldElement gen = big.generator();

  // scalars g^i, i = 0..q
  std::vector<FieldElement> scalars(q + 1);
  for (uint32_t i = 0; i <= q; ++i) scalars[i] = big.pow(gen, i);

  std::vector<SubsetIndicator> classes(q + 2, SubsetIndicator(g));
  const uint64_t total = form.vector_count();
  for (uint64_t nrank = 1; nrank < total; ++nrank) {
    const FieldElement val = form.evaluate(form.vector_at(nrank));
    if (big.is_zero(val)) {
      classes[0].insert(nrank);
      continue;
    }
    uint32_t hits = 0, which = 0;
    for (uint32_t i = 0; i <= q; ++i)
      if (in_kernel[big.mul(scalars[i], val).rank]) {
        ++hits;
        which = i;
      }
    if (hits != 1)
      throw std::logic_error("rotation_scheme: nonzero value not covered exactly once");
    classes[which + 1].insert(nrank);
  }

  const uint64_t n = ipow(q, 2 * ell);  // sqrt(v)
  const uint64_t q2 = static_cast<uint64_t>(q) * q;
  const uint64_t size0 = (ipow(q2, ell) + 1) * (ipow(q2, ell - 1) - 1);
  const uint64_t size1 = (ipow(q, 2 * ell) + 1) * (ipow(q, 2 * ell - 1) - ipow(q, 2 * ell - 2));
  ConstructionDescriptor d;
  d.name = "rotation";
  d.parameters = {{"q", std::to_string(q)}, {"ell", std::to_string(ell)}};
  d.expected_class_sizes.assign(q + 2, size1);
  d.expected_class_sizes[0] = size0;
  d.expected_class_params.push_back(latin_params(n, size0, -1));
  for (uint32_t i = 0; i <= q; ++i) d.expected_class_params.push_back(latin_params(n, size1, -1));
  check_sizes(classes, d.expected_class_sizes, "rotation_scheme");
  return {TranslationScheme(g, std::move(classes)), std::move(d)};
}

LiftDiagnostic lift_restriction_diagnostic(uint32_t ell) {
  if (ell < 2) throw std::invalid_argument("lift_restriction_diagnostic: ell >= 2 required");
  const Field& f4 = gr4::residue_field();
  const QuadraticForm q = QuadraticForm::standard_elliptic(f4, ell);
  const SubsetIndicator d1 = q.level_set(f4.one(), false);
  const GroupSpec field_side = d1.group();

  // O_0 = {x in D_1 : x_1 = 0} on the field side
  SubsetIndicator o0(field_side);
  for (uint64_t r : d1.members()) {
    if (vector_from_group(f4, field_side.unrank(r)).front() == f4.zero()) o0.insert(r);
  }

  // lift of D_1 \ O_0 on the ring side
  const GroupSpec lifted = gr4::lifted_group(ell);
  SubsetIndicator lifted_rest(lifted);
  for (uint64_t r : SubsetIndicator::difference(d1, o0).members()) {
    const auto v = vector_from_group(f4, field_side.unrank(r));
    lifted_rest.insert(lifted.rank(gr4::to_group(gr4::lift(v))));
  }

  LiftDiagnostic out;
  out.ell = ell;
  out.magnitude = static_cast<int64_t>(ipow(4, ell - 1));
  out.pattern_holds = true;
  bool saw_plus = false, saw_minus = false;
  for (uint64_t label_rank = 0; label_rank < lifted.order(); ++label_rank) {
    const GroupElement label = lifted.unrank(label_rank);
    if (label.residues[0] % 2 == 0 && label.residues[1] % 2 == 0) continue;  // order < 4
    auto [beta, w] = gr4::character_label_inverse(label);
    auto [b1, b2] = gr4::two_adic_decompose(beta);

    // field-side label (pi(b2), pi(b1), w3, ..., w_{2l})
    std::vector<FieldElement> field_label;
    field_label.reserve(2 * ell);
    field_label.push_back(gr4::pi(b2));
    field_label.push_back(gr4::pi(b1));
    field_label.insert(field_label.end(), w.begin(), w.end());

    const int64_t chi_o0 =
        character_sum(o0, f4_char_label(f4, field_label)).integer_value();
    const int64_t psi_rest = character_sum(lifted_rest, label).integer_value();
    out.entries.push_back({label_rank, chi_o0, psi_rest});

    if (chi_o0 == out.magnitude) saw_plus = true;
    if (chi_o0 == -out.magnitude) saw_minus = true;
    if (chi_o0 != out.magnitude && chi_o0 != -out.magnitude) out.pattern_holds = false;
    if (chi_o0 == out.magnitude && psi_rest != 0) out.pattern_holds = false;
  }
  out.o0_hits_both_signs = saw_plus && saw_minus;
  return out;
}

}  // namespace amorph
