#include "varqa/integrals.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "varqa/errors.hpp"

namespace varqa {
namespace {

// Pulls "KEY=value" out of the namelist header; keys are case-insensitive.
bool find_header_int(const std::string& header, const std::string& key, int& out) {
  std::string upper;
  upper.reserve(header.size());
  for (char c : header) upper.push_back(static_cast<char>(std::toupper(c)));
  std::size_t pos = 0;
  while ((pos = upper.find(key, pos)) != std::string::npos) {
    const std::size_t after = pos + key.size();
    // Reject partial matches such as INORB.
    if (pos > 0 && (std::isalnum(upper[pos - 1]) || upper[pos - 1] == '_')) {
      pos = after;
      continue;
    }
    std::size_t eq = after;
    while (eq < upper.size() && std::isspace(static_cast<unsigned char>(upper[eq]))) ++eq;
    if (eq >= upper.size() || upper[eq] != '=') {
      pos = after;
      continue;
    }
    ++eq;
    while (eq < upper.size() && std::isspace(static_cast<unsigned char>(upper[eq]))) ++eq;
    std::size_t end = eq;
    if (end < upper.size() && (upper[end] == '+' || upper[end] == '-')) ++end;
    while (end < upper.size() && std::isdigit(static_cast<unsigned char>(upper[end]))) ++end;
    if (end == eq) return false;
    out = std::stoi(header.substr(eq, end - eq));
    return true;
  }
  return false;
}

double parse_value(const std::string& tok, long line) {
  // Fortran exponent markers D/d are legal in FCIDUMP files.
  std::string t = tok;
  for (char& c : t)
    if (c == 'D' || c == 'd') c = 'E';
  try {
    std::size_t used = 0;
    double v = std::stod(t, &used);
    if (used != t.size()) throw ParseError("non-numeric value '" + tok + "'", line);
    if (!std::isfinite(v)) throw ParseError("non-finite value '" + tok + "'", line);
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("non-numeric value '" + tok + "'", line);
  }
}

int parse_index(const std::string& tok, int norb, long line) {
  int v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw ParseError("non-numeric index '" + tok + "'", line);
  if (v < 0 || v > norb)
    throw IndexError("orbital index " + tok + " out of range [0, " + std::to_string(norb) +
                     "] (line " + std::to_string(line) + ")");
  return v;
}

}  // namespace

MolecularIntegrals parse_fcidump(std::istream& in) {
  std::string line;
  long lineno = 0;

  // Header: everything from &FCI up to &END (or a bare '/').
  std::string header;
  bool header_done = false;
  while (!header_done && std::getline(in, line)) {
    ++lineno;
    header += line + "\n";
    if (header.find("&END") != std::string::npos || header.find("&end") != std::string::npos ||
        line.find('/') != std::string::npos)
      header_done = true;
  }
  if (!header_done) throw ParseError("missing &END terminator in FCIDUMP header", lineno);

  MolecularIntegrals mi;
  if (!find_header_int(header, "NORB", mi.n_spatial_orbitals))
    throw ParseError("header is missing NORB", 1);
  if (!find_header_int(header, "NELEC", mi.n_electrons))
    throw ParseError("header is missing NELEC", 1);
  if (!find_header_int(header, "MS2", mi.ms2)) mi.ms2 = 0;
  if (mi.n_spatial_orbitals <= 0) throw ParseError("NORB must be positive", 1);
  if (mi.n_electrons < 0 || mi.n_electrons > 2 * mi.n_spatial_orbitals)
    throw ParseError("NELEC outside [0, 2*NORB]", 1);

  const int n = mi.n_spatial_orbitals;
  const std::size_t ns = static_cast<std::size_t>(n);
  mi.one_body.assign(ns * ns, 0.0);
  mi.two_body.assign(ns * ns * ns * ns, 0.0);

  auto set1 = [&](int i, int j, double v) {
    mi.one_body[static_cast<std::size_t>(i) * ns + j] = v;
    mi.one_body[static_cast<std::size_t>(j) * ns + i] = v;
  };
  auto set2 = [&](int i, int j, int k, int l, double v) {
    const int a[2] = {i, j}, b[2] = {k, l};
    for (int p = 0; p < 2; ++p)
      for (int q = 0; q < 2; ++q) {
        const std::size_t ij = (static_cast<std::size_t>(a[p]) * ns + a[1 - p]) * ns * ns;
        const std::size_t kl = static_cast<std::size_t>(b[q]) * ns + b[1 - q];
        mi.two_body[ij + kl] = v;
        const std::size_t ij2 = (static_cast<std::size_t>(b[q]) * ns + b[1 - q]) * ns * ns;
        const std::size_t kl2 = static_cast<std::size_t>(a[p]) * ns + a[1 - p];
        mi.two_body[ij2 + kl2] = v;
      }
  };

  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string tok;
    while (ls >> tok) toks.push_back(tok);
    if (toks.empty()) continue;
    if (toks.size() != 5)
      throw ParseError("expected 'value i j k l', got " + std::to_string(toks.size()) +
                           " fields",
                       lineno);
    const double v = parse_value(toks[0], lineno);
    const int i = parse_index(toks[1], n, lineno);
    const int j = parse_index(toks[2], n, lineno);
    const int k = parse_index(toks[3], n, lineno);
    const int l = parse_index(toks[4], n, lineno);
    if (i == 0 && j == 0 && k == 0 && l == 0) {
      mi.core_energy = v;
    } else if (k == 0 && l == 0) {
      if (i == 0 || j == 0)
        throw IndexError("one-body entry with zero orbital index (line " +
                         std::to_string(lineno) + ")");
      set1(i - 1, j - 1, v);
    } else if (i == 0 || j == 0 || k == 0 || l == 0) {
      throw IndexError("two-body entry with zero orbital index (line " + std::to_string(lineno) +
                       ")");
    } else {
      set2(i - 1, j - 1, k - 1, l - 1, v);
    }
  }
  return mi;
}

MolecularIntegrals parse_fcidump(const std::string& text) {
  std::istringstream in(text);
  return parse_fcidump(in);
}

MolecularIntegrals load_fcidump(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open FCIDUMP file: " + path);
  return parse_fcidump(in);
}

}  // namespace varqa
