#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "varqa/bits.hpp"

namespace varqa {

struct PauliTerm {
  double coefficient = 0.0;
  std::string axes;  // length-M word over {I,X,Y,Z}; leftmost char = qubit 1
};

// Precomputed masks for algebraic matrix-element evaluation. Masks live in
// index-bit space: axes character j maps to index bit M-1-j.
struct CompiledTerm {
  double coefficient = 0.0;
  BasisState x_mask = 0;   // qubits carrying X or Y
  BasisState zy_mask = 0;  // qubits carrying Z or Y
  int y_count = 0;
};

// Weighted sum of Pauli words. Terms are merged, pruned and kept sorted
// lexicographically by axes word; coefficients are real.
class PauliHamiltonian {
 public:
  static constexpr double kDefaultPrune = 1e-12;

  PauliHamiltonian() = default;
  PauliHamiltonian(int n_qubits, std::vector<PauliTerm> terms, double prune = kDefaultPrune);

  int n_qubits() const { return n_qubits_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  const std::vector<CompiledTerm>& compiled() const { return compiled_; }

  // Flip-mask groups: (x_mask, index range into flip_order()) sorted by mask.
  struct FlipGroup {
    BasisState mask;
    std::size_t begin, end;
  };
  const std::vector<FlipGroup>& flip_groups() const { return flip_groups_; }
  const std::vector<std::size_t>& flip_order() const { return flip_order_; }

  // Optional electron count carried through file metadata.
  std::optional<int> electrons;

 private:
  int n_qubits_ = 0;
  std::vector<PauliTerm> terms_;
  std::vector<CompiledTerm> compiled_;
  std::vector<FlipGroup> flip_groups_;
  std::vector<std::size_t> flip_order_;
};

CompiledTerm compile_term(const PauliTerm& term, int n_qubits);

// Text format: '#' comments, a "# qubits: M" header, then one
// "coefficient axes-word" per line.
PauliHamiltonian read_pauli_text(std::istream& in);
PauliHamiltonian load_pauli_text(const std::string& path);
void write_pauli_text(std::ostream& out, const PauliHamiltonian& h);
void save_pauli_text(const std::string& path, const PauliHamiltonian& h);

// Dense 2^M x 2^M matrix (row-major, real). Throws ImaginaryResidue if the
// operator has an imaginary component above 1e-10.
std::vector<double> dense_matrix(const PauliHamiltonian& h);

}  // namespace varqa
