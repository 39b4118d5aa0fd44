#include "varqa/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "varqa/errors.hpp"

namespace varqa {

CompiledTerm compile_term(const PauliTerm& term, int n_qubits) {
  CompiledTerm c;
  c.coefficient = term.coefficient;
  for (int j = 0; j < n_qubits; ++j) {
    const BasisState bit = BasisState{1} << (n_qubits - 1 - j);
    switch (term.axes[static_cast<std::size_t>(j)]) {
      case 'I':
        break;
      case 'X':
        c.x_mask |= bit;
        break;
      case 'Y':
        c.x_mask |= bit;
        c.zy_mask |= bit;
        ++c.y_count;
        break;
      case 'Z':
        c.zy_mask |= bit;
        break;
      default:
        throw ParseError(std::string("invalid Pauli axis '") +
                         term.axes[static_cast<std::size_t>(j)] + "' in word " + term.axes);
    }
  }
  return c;
}

PauliHamiltonian::PauliHamiltonian(int n_qubits, std::vector<PauliTerm> terms, double prune)
    : n_qubits_(n_qubits) {
  if (n_qubits <= 0) throw ShapeError("PauliHamiltonian needs at least one qubit");
  if (n_qubits > 31)
    throw DimensionTooLarge("PauliHamiltonian limited to 31 qubits (32-bit basis masks)");
  std::map<std::string, double> merged;
  for (auto& t : terms) {
    if (static_cast<int>(t.axes.size()) != n_qubits)
      throw ShapeError("axes word '" + t.axes + "' does not have length " +
                       std::to_string(n_qubits));
    if (!std::isfinite(t.coefficient))
      throw ParseError("non-finite coefficient for axes word " + t.axes);
    merged[t.axes] += t.coefficient;
  }
  for (auto& [axes, coeff] : merged) {
    if (std::abs(coeff) < prune) continue;
    terms_.push_back({coeff, axes});
  }
  compiled_.reserve(terms_.size());
  for (const auto& t : terms_) compiled_.push_back(compile_term(t, n_qubits_));

  // Group term indices by flip mask so expectation values can walk only the
  // basis pairs some term actually connects.
  std::vector<std::size_t> order(terms_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return compiled_[a].x_mask < compiled_[b].x_mask;
  });
  flip_order_ = order;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && compiled_[order[j]].x_mask == compiled_[order[i]].x_mask) ++j;
    flip_groups_.push_back({compiled_[order[i]].x_mask, i, j});
    i = j;
  }
}

PauliHamiltonian read_pauli_text(std::istream& in) {
  std::string line;
  long lineno = 0;
  int n_qubits = -1;
  std::optional<int> electrons;
  std::vector<PauliTerm> terms;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') {
      std::istringstream cs(line.substr(start + 1));
      std::string key;
      cs >> key;
      if (key == "qubits:") cs >> n_qubits;
      if (key == "electrons:") {
        int e = 0;
        if (cs >> e) electrons = e;
      }
      continue;
    }
    std::istringstream ls(line);
    std::string coeff_tok, axes;
    if (!(ls >> coeff_tok >> axes))
      throw ParseError("expected 'coefficient axes-word'", lineno);
    std::string rest;
    if (ls >> rest) throw ParseError("trailing tokens after axes word", lineno);
    double coeff = 0.0;
    try {
      std::size_t used = 0;
      coeff = std::stod(coeff_tok, &used);
      if (used != coeff_tok.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ParseError("non-numeric coefficient '" + coeff_tok + "'", lineno);
    }
    terms.push_back({coeff, axes});
  }
  if (n_qubits <= 0) throw ParseError("missing '# qubits: M' header");
  PauliHamiltonian h(n_qubits, std::move(terms));
  h.electrons = electrons;
  return h;
}

PauliHamiltonian load_pauli_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open Pauli text file: " + path);
  return read_pauli_text(in);
}

void write_pauli_text(std::ostream& out, const PauliHamiltonian& h) {
  out << "# qubits: " << h.n_qubits() << "\n";
  if (h.electrons) out << "# electrons: " << *h.electrons << "\n";
  char buf[64];
  for (const auto& t : h.terms()) {
    std::snprintf(buf, sizeof buf, "%.17g", t.coefficient);
    out << buf << " " << t.axes << "\n";
  }
}

void save_pauli_text(const std::string& path, const PauliHamiltonian& h) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open output file: " + path);
  write_pauli_text(out, h);
}

std::vector<double> dense_matrix(const PauliHamiltonian& h) {
  const int M = h.n_qubits();
  if (M > 24) throw DimensionTooLarge("dense matrix limited to 24 qubits");
  const std::size_t dim = std::size_t{1} << M;
  double odd_y_weight = 0.0;
  std::vector<double> mat(dim * dim, 0.0);
  for (const auto& t : h.compiled()) {
    if (t.y_count % 2 != 0) {
      odd_y_weight += std::abs(t.coefficient);
      continue;  // purely imaginary contribution
    }
    const double sign_y = (t.y_count % 4 == 0) ? 1.0 : -1.0;  // i^y for even y
    for (BasisState n = 0; n < dim; ++n) {
      const BasisState m = n ^ t.x_mask;
      const double parity = (popcount(t.zy_mask & n) % 2) ? -1.0 : 1.0;
      mat[static_cast<std::size_t>(m) * dim + n] += t.coefficient * sign_y * parity;
    }
  }
  if (odd_y_weight > 1e-10)
    throw ImaginaryResidue("operator has imaginary part of weight " +
                           std::to_string(odd_y_weight));
  return mat;
}

}  // namespace varqa
