// Command-line front door: construct the scheme families, verify scheme
// files exactly, fuse classes, export Cayley-graph edge lists, and print
// character-sum spectra.
//
// Exit codes: 0 success / all checks pass, 2 scheme-file parse error,
// 3 invalid usage or construction precondition, 4 verification failure.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "amorph/constructions.hpp"
#include "amorph/report.hpp"
#include "amorph/scheme_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitVerification = 4;

struct ConstructArgs {
  std::string name;
  std::string out;
  uint32_t p = 0, s = 0, e = 0;
  uint32_t q = 0, m = 0, ell = 0;
  std::string chain;
  std::string type = "elliptic";
};

std::vector<uint32_t> parse_chain(const std::string& text) {
  std::vector<uint32_t> chain;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      chain.push_back(static_cast<uint32_t>(std::stoul(tok)));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad chain entry '" + tok + "'");
    }
  }
  if (chain.empty()) throw std::invalid_argument("--chain must list divisors, e.g. 2,1");
  return chain;
}

amorph::FormKind parse_kind(const std::string& s) {
  if (s == "elliptic") return amorph::FormKind::Elliptic;
  if (s == "hyperbolic") return amorph::FormKind::Hyperbolic;
  throw std::invalid_argument("--type must be elliptic or hyperbolic");
}

std::string provenance_of(const amorph::ConstructionDescriptor& d) {
  std::string s = d.name;
  for (const auto& [k, v] : d.parameters) s += " " + k + "=" + v;
  return s;
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

int run_construct(const ConstructArgs& a) {
  using namespace amorph;
  std::optional<TranslationScheme> scheme;
  std::string provenance;
  std::vector<std::string> warnings;

  if (a.name == "cyclotomic") {
    require(a.p && a.s && a.e, "cyclotomic needs --p --s --e");
    auto r = cyclotomic_scheme(a.p, a.s, a.e);
    provenance = provenance_of(r.descriptor);
    warnings = r.descriptor.warnings;
    scheme = std::move(r.scheme);
  } else if (a.name == "four_class") {
    require(a.ell != 0, "four_class needs --ell (>= 2 required)");
    auto r = four_class_scheme(a.ell);
    provenance = provenance_of(r.descriptor);
    scheme = std::move(r.scheme);
  } else if (a.name == "lifted_four_class") {
    require(a.ell != 0, "lifted_four_class needs --ell (>= 2 required)");
    auto r = lifted_four_class_scheme(a.ell);
    provenance = provenance_of(r.descriptor);
    scheme = std::move(r.scheme);
  } else if (a.name == "chain") {
    require(a.q && a.m && a.ell && !a.chain.empty(), "chain needs --q --m --ell --chain");
    auto r = chain_scheme(a.q, a.m, a.ell, parse_chain(a.chain), parse_kind(a.type));
    provenance = provenance_of(r.descriptor);
    warnings = r.descriptor.warnings;
    scheme = std::move(r.scheme);
  } else if (a.name == "rotation") {
    require(a.q && a.ell, "rotation needs --q --ell");
    auto r = rotation_scheme(a.q, a.ell);
    provenance = provenance_of(r.descriptor);
    scheme = std::move(r.scheme);
  } else if (a.name == "hamilton_fusion") {
    require(a.q && a.m && a.ell && !a.chain.empty(), "hamilton_fusion needs --q --m --ell --chain");
    auto r = chain_scheme(a.q, a.m, a.ell, parse_chain(a.chain), parse_kind(a.type));
    warnings = r.descriptor.warnings;
    SubsetIndicator fusion = hamilton_fusion(r);
    const GroupSpec g = fusion.group();
    SubsetIndicator rest(g);
    for (uint64_t x = 1; x < g.order(); ++x)
      if (!fusion.contains(x)) rest.insert(x);
    provenance = "hamilton_fusion";
    for (const auto& [k, v] : r.descriptor.parameters) provenance += " " + k + "=" + v;
    std::vector<SubsetIndicator> two;
    two.push_back(std::move(fusion));
    two.push_back(std::move(rest));
    scheme = TranslationScheme(g, std::move(two));
  } else {
    throw std::invalid_argument(
        "unknown construction '" + a.name +
        "' (cyclotomic|four_class|lifted_four_class|chain|rotation|hamilton_fusion)");
  }

  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  amorph::save_scheme_file(a.out, *scheme, provenance);
  std::cout << "wrote " << a.out << ": " << scheme->num_classes() << " classes on group";
  for (uint32_t m : scheme->group().factors()) std::cout << ' ' << m;
  std::cout << " (sizes";
  for (const auto& c : scheme->classes()) std::cout << ' ' << c.cardinality();
  std::cout << ")\n";
  return kExitOk;
}

int run_verify(const std::string& path, const std::string& mode, const std::string& amorphy,
               const std::string& report_path) {
  using namespace amorph;
  const ParsedScheme parsed = load_scheme_file(path);
  const GroupSpec g = parsed.group();
  const auto classes = parsed.indicators();
  const VerificationReport rep =
      run_verification(g, classes, parse_verify_mode(mode), parse_amorphy_mode(amorphy));
  if (!parsed.provenance.empty()) std::cout << "provenance: " << parsed.provenance << "\n";
  std::cout << format_report(rep);
  if (!report_path.empty()) {
    std::ofstream out(report_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + report_path + "'");
    out << report_to_json(rep);
  }
  return rep.all_ok() ? kExitOk : kExitVerification;
}

amorph::FusionPartition parse_partition(const std::string& text, uint32_t d) {
  amorph::FusionPartition part;
  std::stringstream in(text);
  std::string block;
  while (std::getline(in, block, '|')) {
    std::vector<uint32_t> ids;
    std::stringstream bin(block);
    std::string tok;
    while (std::getline(bin, tok, ',')) {
      try {
        ids.push_back(static_cast<uint32_t>(std::stoul(tok)));
      } catch (const std::exception&) {
        throw std::invalid_argument("bad class index '" + tok + "' in partition");
      }
    }
    if (ids.empty()) throw std::invalid_argument("empty block in partition");
    std::sort(ids.begin(), ids.end());
    part.blocks.push_back(std::move(ids));
  }
  std::sort(part.blocks.begin(), part.blocks.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  if (part.blocks.empty()) throw std::invalid_argument("empty partition");
  (void)d;
  return part;
}

int run_fuse(const std::string& path, const std::string& partition, const std::string& out) {
  using namespace amorph;
  const ParsedScheme parsed = load_scheme_file(path);
  const TranslationScheme scheme = parsed.to_scheme();
  const FusionPartition part = parse_partition(partition, scheme.num_classes());
  const TranslationScheme fused = fuse(scheme, part);
  std::string provenance = "fusion " + part.to_string();
  if (!parsed.provenance.empty()) provenance += " of [" + parsed.provenance + "]";
  save_scheme_file(out, fused, provenance);
  std::cout << "wrote " << out << ": " << fused.num_classes() << " classes (sizes";
  for (const auto& c : fused.classes()) std::cout << ' ' << c.cardinality();
  std::cout << ")\n";
  return kExitOk;
}

int run_export(const std::string& path, uint32_t class_index, const std::string& out_path) {
  using namespace amorph;
  const ParsedScheme parsed = load_scheme_file(path);
  const TranslationScheme scheme = parsed.to_scheme();
  require(class_index >= 1 && class_index <= scheme.num_classes(),
          "class index out of range (1.." + std::to_string(scheme.num_classes()) + ")");
  const GroupSpec& g = scheme.group();
  const auto members = scheme.cls(class_index).members();

  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
  uint64_t edges = 0;
  for (uint64_t u = 0; u < g.order(); ++u)
    for (uint64_t s : members) {
      const uint64_t w = g.add_ranks(u, s);
      if (u < w) {
        out << u << ' ' << w << '\n';
        ++edges;
      }
    }
  std::cout << "wrote " << edges << " edges of Cay(G, S_" << class_index << ") to " << out_path
            << "\n";
  return kExitOk;
}

int run_charsum(const std::string& path, uint32_t class_index, bool full) {
  using namespace amorph;
  const ParsedScheme parsed = load_scheme_file(path);
  const GroupSpec g = parsed.group();
  const auto classes = parsed.indicators();
  require(class_index >= 1 && class_index <= classes.size(),
          "class index out of range (1.." + std::to_string(classes.size()) + ")");
  const SubsetIndicator& s = classes[class_index - 1];

  const auto sums = all_character_sums(s);
  std::cout << "class " << class_index << " size " << s.cardinality() << " over group order "
            << g.order() << " (cyclotomic level " << g.exponent() << ")\n";
  std::cout << "principal sum: " << sums[0].to_string() << "\n";
  std::map<CyclotomicInt, uint64_t> hist;
  for (uint64_t a = 1; a < g.order(); ++a) ++hist.emplace(sums[a], 0).first->second;
  std::cout << "distinct nonprincipal sums: " << hist.size() << "\n";
  for (const auto& [val, count] : hist)
    std::cout << val.to_string() << " x" << count << "\n";
  if (full) {
    std::cout << "label sums:\n";
    for (uint64_t a = 0; a < g.order(); ++a)
      std::cout << a << ' ' << sums[a].to_string() << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"construct and exactly verify translation association schemes, partial "
               "difference sets, and their amorphic fusions over finite abelian groups"};
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* construct = app.add_subcommand(
      "construct", "build a named scheme family and write it to a scheme file");
  construct->add_option("name", ca.name,
                        "cyclotomic|four_class|lifted_four_class|chain|rotation|hamilton_fusion")
      ->required();
  construct->add_option("--out", ca.out, "output scheme file")->required();
  construct->add_option("--p", ca.p, "field characteristic (cyclotomic)");
  construct->add_option("--s", ca.s, "field degree (cyclotomic)");
  construct->add_option("--e", ca.e, "number of cyclotomic classes");
  construct->add_option("--q", ca.q, "base prime power (chain, rotation)");
  construct->add_option("--m", ca.m, "top extension degree (chain)");
  construct->add_option("--ell", ca.ell, "half the form dimension");
  construct->add_option("--chain", ca.chain, "divisor chain, e.g. 2,1 or 4,2,1");
  construct->add_option("--type", ca.type, "elliptic|hyperbolic (default elliptic)");

  std::string verify_path, verify_mode = "both", verify_amorphy = "both", report_path;
  auto* verify = app.add_subcommand("verify", "verify a scheme file and report exactly");
  verify->add_option("path", verify_path, "scheme file")->required();
  verify->add_option("--mode", verify_mode, "differences|characters|both (default both)");
  verify->add_option("--amorphy", verify_amorphy, "exhaustive|vandam|both (default both)");
  verify->add_option("--report", report_path, "also write a JSON report here");

  std::string fuse_path, fuse_partition, fuse_out;
  auto* fusecmd = app.add_subcommand("fuse", "fuse classes along a partition, e.g. 1|2,3,4");
  fusecmd->add_option("path", fuse_path, "scheme file")->required();
  fusecmd->add_option("--partition", fuse_partition, "blocks '|'-separated, indices ','-separated")
      ->required();
  fusecmd->add_option("--out", fuse_out, "output scheme file")->required();

  std::string export_path, export_out;
  uint32_t export_class = 0;
  auto* exportcmd = app.add_subcommand("export", "write the edge list of one class's Cayley graph");
  exportcmd->add_option("path", export_path, "scheme file")->required();
  exportcmd->add_option("--class", export_class, "class index (1-based)")->required();
  exportcmd->add_option("--out", export_out, "edge list output, 'u v' ranks per line")->required();

  std::string charsum_path;
  uint32_t charsum_class = 0;
  bool charsum_full = false;
  auto* charsum = app.add_subcommand("charsum", "print the character-sum spectrum of a class");
  charsum->add_option("path", charsum_path, "scheme file")->required();
  charsum->add_option("--class", charsum_class, "class index (1-based)")->required();
  charsum->add_flag("--full", charsum_full, "also print every label's sum");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitPrecondition;
  }

  try {
    if (construct->parsed()) return run_construct(ca);
    if (verify->parsed()) return run_verify(verify_path, verify_mode, verify_amorphy, report_path);
    if (fusecmd->parsed()) return run_fuse(fuse_path, fuse_partition, fuse_out);
    if (exportcmd->parsed()) return run_export(export_path, export_class, export_out);
    if (charsum->parsed()) return run_charsum(charsum_path, charsum_class, charsum_full);
  } catch (const amorph::SchemeParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return kExitPrecondition;
}
