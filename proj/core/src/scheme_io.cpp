#include "amorph/scheme_io.hpp"

#include <fstream>
#include <sstream>

namespace amorph {
namespace {

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

uint64_t parse_number(const std::string& tok, const std::string& what, size_t line_no) {
  try {
    size_t pos = 0;
    const uint64_t v = std::stoull(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw SchemeParseError("line " + std::to_string(line_no) + ": expected " + what + ", got '" +
                           tok + "'");
  }
}

}  // namespace

std::vector<SubsetIndicator> ParsedScheme::indicators() const {
  const GroupSpec g = group();
  std::vector<SubsetIndicator> out;
  out.reserve(class_elements.size());
  for (size_t c = 0; c < class_elements.size(); ++c) {
    SubsetIndicator s(g);
    for (const GroupElement& e : class_elements[c]) {
      uint64_t r;
      try {
        r = g.rank(e);
      } catch (const std::exception& ex) {
        throw SchemeParseError("class " + std::to_string(c + 1) + ": " + ex.what());
      }
      if (s.contains(r))
        throw SchemeParseError("class " + std::to_string(c + 1) + ": duplicate element rank " +
                               std::to_string(r));
      s.insert(r);
    }
    out.push_back(std::move(s));
  }
  return out;
}

TranslationScheme ParsedScheme::to_scheme() const { return {group(), indicators()}; }

ParsedScheme parse_scheme_file(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  size_t line_no = 0;
  auto next_line = [&]() -> std::vector<std::string> {
    while (std::getline(in, line)) {
      ++line_no;
      auto toks = split_tokens(line);
      if (!toks.empty()) return toks;
    }
    throw SchemeParseError("unexpected end of file at line " + std::to_string(line_no));
  };

  auto header = next_line();
  if (header.size() != 2 || header[0] != "amorph-scheme" || header[1] != "1")
    throw SchemeParseError("line " + std::to_string(line_no) +
                           ": expected header 'amorph-scheme 1'");

  auto group_line = next_line();
  if (group_line.size() < 2 || group_line[0] != "group")
    throw SchemeParseError("line " + std::to_string(line_no) + ": expected 'group m1 m2 ...'");
  ParsedScheme out;
  for (size_t i = 1; i < group_line.size(); ++i)
    out.factors.push_back(static_cast<uint32_t>(parse_number(group_line[i], "factor", line_no)));
  GroupSpec g = [&] {
    try {
      return GroupSpec(out.factors);
    } catch (const std::exception& ex) {
      throw SchemeParseError("line " + std::to_string(line_no) + ": " + ex.what());
    }
  }();

  auto toks = next_line();
  if (toks.size() >= 1 && toks[0] == "provenance") {
    std::string prov;
    for (size_t i = 1; i < toks.size(); ++i) prov += (i > 1 ? " " : "") + toks[i];
    out.provenance = prov;
    toks = next_line();
  }

  if (toks.size() != 2 || toks[0] != "classes")
    throw SchemeParseError("line " + std::to_string(line_no) + ": expected 'classes <count>'");
  const uint64_t nclasses = parse_number(toks[1], "class count", line_no);
  if (nclasses == 0 || nclasses > 4096)
    throw SchemeParseError("line " + std::to_string(line_no) + ": unreasonable class count");

  for (uint64_t c = 1; c <= nclasses; ++c) {
    toks = next_line();
    if (toks.size() != 3 || toks[0] != "class")
      throw SchemeParseError("line " + std::to_string(line_no) +
                             ": expected 'class <index> <size>'");
    if (parse_number(toks[1], "class index", line_no) != c)
      throw SchemeParseError("line " + std::to_string(line_no) + ": classes must be numbered 1.." +
                             std::to_string(nclasses) + " in order");
    const uint64_t size = parse_number(toks[2], "class size", line_no);
    if (size > g.order())
      throw SchemeParseError("line " + std::to_string(line_no) + ": class size exceeds group order");
    std::vector<GroupElement> elems;
    std::vector<uint8_t> seen(g.order(), 0);
    elems.reserve(size);
    for (uint64_t k = 0; k < size; ++k) {
      toks = next_line();
      if (toks.size() != out.factors.size())
        throw SchemeParseError("line " + std::to_string(line_no) + ": expected " +
                               std::to_string(out.factors.size()) + " residues");
      GroupElement e;
      for (const std::string& t : toks)
        e.residues.push_back(static_cast<uint32_t>(parse_number(t, "residue", line_no)));
      uint64_t r;
      try {
        r = g.rank(e);
      } catch (const std::exception& ex) {
        throw SchemeParseError("line " + std::to_string(line_no) + ": " + ex.what());
      }
      if (seen[r])
        throw SchemeParseError("line " + std::to_string(line_no) +
                               ": duplicate element in class " + std::to_string(c));
      seen[r] = 1;
      elems.push_back(std::move(e));
    }
    out.class_elements.push_back(std::move(elems));
  }

  while (std::getline(in, line)) {
    ++line_no;
    if (!split_tokens(line).empty())
      throw SchemeParseError("line " + std::to_string(line_no) + ": trailing content");
  }
  return out;
}

std::string write_scheme_file(const TranslationScheme& s, const std::string& provenance) {
  std::ostringstream out;
  out << "amorph-scheme 1\n";
  out << "group";
  for (uint32_t m : s.group().factors()) out << ' ' << m;
  out << '\n';
  if (!provenance.empty()) out << "provenance " << provenance << '\n';
  out << "classes " << s.num_classes() << '\n';
  for (uint32_t c = 1; c <= s.num_classes(); ++c) {
    const auto members = s.cls(c).members();
    out << "class " << c << ' ' << members.size() << '\n';
    for (uint64_t r : members) {
      const GroupElement e = s.group().unrank(r);
      for (size_t i = 0; i < e.residues.size(); ++i)
        out << (i ? " " : "") << e.residues[i];
      out << '\n';
    }
  }
  return out.str();
}

ParsedScheme load_scheme_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemeParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scheme_file(buf.str());
}

void save_scheme_file(const std::string& path, const TranslationScheme& s,
                      const std::string& provenance) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << write_scheme_file(s, provenance);
}

}  // namespace amorph
