#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace varqa {

// One- and two-electron integrals over spatial orbitals, in Hartree.
// The two-body tensor uses chemists' notation (ij|kl) with full 8-fold
// real-orbital symmetry.
struct MolecularIntegrals {
  int n_spatial_orbitals = 0;
  int n_electrons = 0;
  int ms2 = 0;
  double core_energy = 0.0;
  std::vector<double> one_body;  // row-major n x n, symmetric
  std::vector<double> two_body;  // row-major n^4

  double h(int i, int j) const {
    return one_body[static_cast<std::size_t>(i) * n_spatial_orbitals + j];
  }
  double g(int i, int j, int k, int l) const {
    const std::size_t n = static_cast<std::size_t>(n_spatial_orbitals);
    return two_body[((static_cast<std::size_t>(i) * n + j) * n + k) * n + l];
  }
};

MolecularIntegrals parse_fcidump(std::istream& in);
MolecularIntegrals parse_fcidump(const std::string& text);
MolecularIntegrals load_fcidump(const std::string& path);

}  // namespace varqa
