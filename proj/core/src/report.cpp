#include "amorph/report.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace amorph {

bool ClassReport::ok() const {
  if (differences && !differences->ok) return false;
  if (characters && !characters->ok) return false;
  if (differences && characters && !(differences->params == characters->params)) return false;
  return true;
}

bool VerificationReport::all_ok() const {
  if (!partition_violation.empty()) return false;
  if (axioms && !axioms->ok) return false;
  for (const auto& c : classes)
    if (!c.ok()) return false;
  if (exhaustive && !exhaustive->amorphic) return false;
  if (vandam && !vandam->applicable) return false;
  return true;
}

VerificationReport run_verification(const GroupSpec& g,
                                    const std::vector<SubsetIndicator>& classes, VerifyMode mode,
                                    AmorphyMode amorphy) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.group_factors = g.factors();
  rep.order = g.order();
  rep.num_classes = static_cast<uint32_t>(classes.size());
  for (const auto& c : classes) rep.class_sizes.push_back(c.cardinality());

  for (const auto& c : classes) {
    ClassReport cr;
    cr.size = c.cardinality();
    if (mode == VerifyMode::Differences || mode == VerifyMode::Both)
      cr.differences = verify_pds_by_differences(c);
    if (mode == VerifyMode::Characters || mode == VerifyMode::Both)
      cr.characters = verify_pds_by_characters(c);
    const PdsCheckResult* params_src =
        cr.differences ? &*cr.differences : (cr.characters ? &*cr.characters : nullptr);
    if (params_src && params_src->ok) cr.latin = classify_latin_type(params_src->params);
    rep.classes.push_back(std::move(cr));
  }

  rep.partition_violation = TranslationScheme::validate(g, classes);
  if (rep.partition_violation.empty()) {
    TranslationScheme scheme(g, classes);
    rep.axioms = intersection_numbers(scheme);
    if (amorphy == AmorphyMode::Exhaustive || amorphy == AmorphyMode::Both)
      rep.exhaustive = verify_amorphic(scheme);
    if (amorphy == AmorphyMode::VanDam || amorphy == AmorphyMode::Both)
      rep.vandam = van_dam_check(g, classes);
  }

  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

namespace {

std::string describe_pds(const PdsCheckResult& r) {
  if (!r.ok) return "FAIL: " + r.detail;
  std::string s = to_string(r.params);
  if (r.trivial) s += " [trivial]";
  if (!r.spectrum.empty()) {
    s += " spectrum {";
    for (size_t i = 0; i < r.spectrum.size(); ++i) {
      if (i) s += ", ";
      s += std::to_string(r.spectrum[i].first) + " x" + std::to_string(r.spectrum[i].second);
    }
    s += "}";
  }
  return s;
}

}  // namespace

std::string format_report(const VerificationReport& r) {
  std::ostringstream out;
  out << "group:";
  for (uint32_t m : r.group_factors) out << ' ' << m;
  out << "  (order " << r.order << ")\n";
  out << "classes: " << r.num_classes << " (sizes";
  for (uint64_t s : r.class_sizes) out << ' ' << s;
  out << ")\n";

  if (!r.partition_violation.empty())
    out << "partition axioms: FAIL (" << r.partition_violation << ")\n";
  else
    out << "partition axioms: PASS (disjoint, symmetric, identity-free, covering)\n";

  if (r.axioms)
    out << "scheme axioms: " << (r.axioms->ok ? "PASS (intersection numbers constant)" : "FAIL (" + r.axioms->describe() + ")")
        << "\n";

  for (size_t i = 0; i < r.classes.size(); ++i) {
    const auto& c = r.classes[i];
    out << "class " << (i + 1) << ": size " << c.size;
    if (c.differences) out << ", differences " << describe_pds(*c.differences);
    if (c.characters) out << ", characters " << describe_pds(*c.characters);
    if (c.differences && c.characters && c.differences->ok && c.characters->ok)
      out << (c.differences->params == c.characters->params ? ", methods agree"
                                                            : ", METHODS DISAGREE");
    if (c.latin) out << ", " << to_string(*c.latin);
    out << "\n";
  }

  if (r.exhaustive) {
    if (r.exhaustive->amorphic)
      out << "amorphy: amorphic (exhaustive certificate: " << r.exhaustive->fusions_checked
          << "/" << r.exhaustive->fusions_checked << " fusions are association schemes)\n";
    else {
      uint64_t passed = 0;
      for (const auto& c : r.exhaustive->checks) passed += c.ok ? 1 : 0;
      out << "amorphy: NOT amorphic (exhaustive: " << passed << "/"
          << r.exhaustive->fusions_checked << " fusions pass; first failing fusion "
          << r.exhaustive->first_failure->to_string() << ")\n";
    }
  }
  if (r.vandam) {
    if (r.vandam->applicable)
      out << "amorphy: amorphic (uniform-type criterion: all classes "
          << (r.vandam->epsilon > 0 ? "Latin" : "negative Latin") << " square type)\n";
    else
      out << "amorphy: uniform-type criterion not conclusive (" << r.vandam->detail << ")\n";
  }

  out << "verdict: " << (r.all_ok() ? "PASS" : "FAIL") << "\n";
  std::ostringstream t;
  t.precision(3);
  t << std::fixed << r.seconds;
  out << "time: " << t.str() << " s\n";
  return out.str();
}

std::string report_to_json(const VerificationReport& r) {
  using json = nlohmann::ordered_json;
  json j;
  j["group"] = r.group_factors;
  j["order"] = r.order;
  j["class_sizes"] = r.class_sizes;
  j["partition_ok"] = r.partition_violation.empty();
  if (!r.partition_violation.empty()) j["partition_violation"] = r.partition_violation;
  if (r.axioms) {
    j["scheme_axioms_ok"] = r.axioms->ok;
    if (!r.axioms->ok) j["scheme_axioms_witness"] = r.axioms->describe();
  }
  j["classes"] = json::array();
  for (const auto& c : r.classes) {
    json jc;
    jc["size"] = c.size;
    auto render = [](const PdsCheckResult& res) {
      json v;
      v["ok"] = res.ok;
      if (res.ok) {
        v["params"] = {res.params.v, res.params.k, res.params.lambda, res.params.mu};
        v["trivial"] = res.trivial;
      } else {
        v["failure"] = res.detail;
        v["witness"] = res.witness;
      }
      if (!res.spectrum.empty()) {
        json spec = json::array();
        for (auto [val, mult] : res.spectrum) spec.push_back({{"value", val}, {"count", mult}});
        v["spectrum"] = spec;
      }
      return v;
    };
    if (c.differences) jc["differences"] = render(*c.differences);
    if (c.characters) jc["characters"] = render(*c.characters);
    if (c.latin)
      jc["latin_type"] = {{"epsilon", c.latin->epsilon}, {"n", c.latin->n}, {"r", c.latin->r}};
    j["classes"].push_back(jc);
  }
  if (r.exhaustive) {
    json e;
    e["amorphic"] = r.exhaustive->amorphic;
    e["fusions_checked"] = r.exhaustive->fusions_checked;
    e["method"] = "exhaustive";
    if (r.exhaustive->first_failure)
      e["first_failure"] = r.exhaustive->first_failure->to_string();
    j["amorphy_exhaustive"] = e;
  }
  if (r.vandam) {
    json v;
    v["amorphic"] = r.vandam->applicable;
    v["method"] = "uniform-type criterion";
    if (r.vandam->applicable) v["epsilon"] = r.vandam->epsilon;
    if (!r.vandam->detail.empty()) v["detail"] = r.vandam->detail;
    j["amorphy_uniform_type"] = v;
  }
  j["verdict"] = r.all_ok() ? "PASS" : "FAIL";
  j["seconds"] = r.seconds;
  return j.dump(2) + "\n";
}

VerifyMode parse_verify_mode(const std::string& s) {
  if (s == "differences") return VerifyMode::Differences;
  if (s == "characters") return VerifyMode::Characters;
  if (s == "both") return VerifyMode::Both;
  throw std::invalid_argument("unknown verify mode '" + s + "' (differences|characters|both)");
}

AmorphyMode parse_amorphy_mode(const std::string& s) {
  if (s == "exhaustive") return AmorphyMode::Exhaustive;
  if (s == "vandam") return AmorphyMode::VanDam;
  if (s == "both") return AmorphyMode::Both;
  throw std::invalid_argument("unknown amorphy mode '" + s + "' (exhaustive|vandam|both)");
}

}  // namespace amorph
