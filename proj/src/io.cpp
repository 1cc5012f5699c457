#include "skewlat/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

namespace skewlat {

namespace {

[[noreturn]] void structural(const std::string& what) {
  throw AlgebraFileError(AlgebraFileError::Kind::structural, what);
}

// Whitespace tokens with '#'-to-end-of-line comments removed.
std::vector<std::string> tokenize(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }
  return tokens;
}

int parse_int(const std::string& tok, const char* what) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(tok, &used);
    if (used != tok.size()) structural(std::string("bad ") + what + ": " + tok);
    return value;
  } catch (const AlgebraFileError&) {
    throw;
  } catch (const std::exception&) {
    structural(std::string("bad ") + what + ": " + tok);
  }
}

}  // namespace

SkewLatticeAlgebra parse_algebra(std::istream& in) {
  std::vector<std::string> tok = tokenize(in);
  std::size_t at = 0;
  auto next = [&]() -> const std::string& {
    if (at >= tok.size()) structural("unexpected end of file");
    return tok[at++];
  };

  if (next() != "skewlat" || next() != "1")
    structural("missing 'skewlat 1' header");
  if (next() != "n") structural("expected size line 'n <int>'");
  const int n = parse_int(next(), "carrier size");
  if (n < 1 || n > 64) structural("carrier size out of range [1, 64]");

  std::vector<std::string> names;
  std::string section = next();
  if (section == "names") {
    for (int i = 0; i < n; ++i) names.push_back(next());
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (names[i] == names[j]) structural("duplicate name: " + names[i]);
    section = next();
  }

  auto read_table = [&](const char* label) {
    std::vector<ElementId> entries;
    for (int i = 0; i < n * n; ++i) {
      const int v = parse_int(next(), label);
      if (v < 0 || v >= n)
        structural(std::string(label) + " entry out of range: " +
                   std::to_string(v));
      entries.push_back(v);
    }
    return OpTable(n, entries);
  };
  if (section != "meet") structural("expected 'meet' section");
  OpTable meet = read_table("meet");
  if (next() != "join") structural("expected 'join' section");
  OpTable join = read_table("join");
  if (at != tok.size()) structural("trailing content after join table");

  ValidationReport report = validate(meet, join);
  if (!report.structurally_ok()) structural(report.structural_error);
  if (!report.passed) {
    std::string what = "not a skew lattice:";
    for (const LawFailure& f : report.failures) {
      what += " " + f.law + "(";
      for (std::size_t i = 0; i < f.witness.size(); ++i)
        what += (i ? "," : "") + std::to_string(f.witness[i]);
      what += ")";
    }
    throw AlgebraFileError(AlgebraFileError::Kind::law, what);
  }
  return SkewLatticeAlgebra{n, std::move(names), meet, join, true};
}

SkewLatticeAlgebra parse_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) structural("cannot open file: " + path);
  return parse_algebra(in);
}

std::string print_algebra(const SkewLatticeAlgebra& s) {
  std::ostringstream out;
  out << "skewlat 1\n";
  out << "n " << s.size << "\n";
  if (s.has_names()) {
    out << "names";
    for (const std::string& name : s.names) out << " " << name;
    out << "\n";
  }
  auto table = [&](const char* label, const OpTable& t) {
    out << label << "\n";
    for (int i = 0; i < s.size; ++i) {
      for (int j = 0; j < s.size; ++j) out << (j ? " " : "") << t(i, j);
      out << "\n";
    }
  };
  table("meet", s.meet);
  table("join", s.join);
  return out.str();
}

SkewLatticeAlgebra load_algebra_argument(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::exists(arg, ec)) return parse_algebra_file(arg);
  try {
    return builtin(arg);
  } catch (const std::invalid_argument&) {
    structural("no such file or builtin algebra: " + arg);
  }
}

ElementId resolve_element(const SkewLatticeAlgebra& s,
                          const std::string& token) {
  if (s.has_names()) {
    for (ElementId x = 0; x < s.size; ++x)
      if (s.names[x] == token) return x;
    throw std::invalid_argument("unknown element name: " + token);
  }
  try {
    std::size_t used = 0;
    const int id = std::stoi(token, &used);
    if (used == token.size() && id >= 0 && id < s.size) return id;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("unknown element id: " + token);
}

}  // namespace skewlat
