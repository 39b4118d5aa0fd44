#include "varqa/spin_orbitals.hpp"

#include <cmath>

#include "varqa/errors.hpp"

namespace varqa {

Ordering ordering_from_string(const std::string& name) {
  if (name == "blocked") return Ordering::blocked;
  if (name == "interleaved") return Ordering::interleaved;
  throw ParseError("unknown spin-orbital ordering: " + name);
}

std::string to_string(Ordering o) {
  return o == Ordering::blocked ? "blocked" : "interleaved";
}

SpinOrbitalIntegrals to_spin_orbitals(const MolecularIntegrals& mi, Ordering ordering) {
  const int n = mi.n_spatial_orbitals;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (std::abs(mi.h(i, j) - mi.h(j, i)) > 1e-12)
        throw ShapeError("one-body matrix is not symmetric");

  SpinOrbitalIntegrals so;
  so.n_orbitals = 2 * n;
  so.core_energy = mi.core_energy;
  so.ordering = ordering;
  const int M = so.n_orbitals;
  const std::size_t m = static_cast<std::size_t>(M);
  so.h.assign(m * m, 0.0);
  so.g.assign(m * m * m * m, 0.0);

  for (int p = 0; p < M; ++p)
    for (int q = 0; q < M; ++q)
      if (so.spin(p) == so.spin(q))
        so.h[static_cast<std::size_t>(p) * m + q] = mi.h(so.spatial(p), so.spatial(q));

  // g[p][q][r][s] multiplies a+p a+q ar as; built from chemists' (PS|QR)
  // integrals, nonzero only when spin(p)==spin(s) and spin(q)==spin(r).
  for (int p = 0; p < M; ++p)
    for (int q = 0; q < M; ++q)
      for (int r = 0; r < M; ++r)
        for (int s = 0; s < M; ++s) {
          if (so.spin(p) != so.spin(s) || so.spin(q) != so.spin(r)) continue;
          so.g[((static_cast<std::size_t>(p) * m + q) * m + r) * m + s] =
              mi.g(so.spatial(p), so.spatial(s), so.spatial(q), so.spatial(r));
        }
  return so;
}

}  // namespace varqa
