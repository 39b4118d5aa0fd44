#include <doctest.h>

#include <cmath>
#include <random>

#include "support/fermion_oracle.hpp"
#include "varqa/errors.hpp"
#include "varqa/exact.hpp"
#include "varqa/jordan_wigner.hpp"
#include "varqa/scan.hpp"

using namespace varqa;

namespace {
const std::string kData = VARQA_DATA_DIR;
}

TEST_CASE("single-qubit Z spectrum") {
  const PauliHamiltonian h(1, {{1.0, "Z"}});
  const auto spec = exact_diagonalize(h);
  REQUIRE(spec.eigenvalues.size() == 2);
  CHECK(spec.eigenvalues[0] == doctest::Approx(-1.0));
  CHECK(spec.eigenvalues[1] == doctest::Approx(1.0));
}

TEST_CASE("deflation lifts the shifted state") {
  const PauliHamiltonian h(1, {{1.0, "Z"}});
  const auto deflated = deflate(h, {{0.0, 1.0}}, {3.0});
  const auto spec = exact_diagonalize(deflated);
  CHECK(spec.eigenvalues[0] == doctest::Approx(1.0));   // |0>
  CHECK(spec.eigenvalues[1] == doctest::Approx(2.0));   // |1> lifted by 3
  CHECK(std::abs(spec.eigenvectors[0][0]) == doctest::Approx(1.0));
}

TEST_CASE("empty deflation leaves the spectrum alone") {
  const PauliHamiltonian h(2, {{0.5, "ZI"}, {-0.25, "XX"}});
  const auto base = exact_diagonalize(h);
  const auto same = exact_diagonalize(deflate(h, {}, {}));
  for (std::size_t k = 0; k < base.eigenvalues.size(); ++k)
    CHECK(base.eigenvalues[k] == doctest::Approx(same.eigenvalues[k]).epsilon(1e-14));
}

TEST_CASE("deflate rejects non-unit states and non-positive shifts") {
  const PauliHamiltonian h(1, {{1.0, "Z"}});
  CHECK_THROWS_AS(deflate(h, {{0.0, 0.5}}, {1.0}), NonUnitState);
  CHECK_THROWS_AS(deflate(h, {{0.0, 1.0}}, {-1.0}), ShapeError);
}

TEST_CASE("H2 at 1.950 A reproduces the reference ground amplitudes") {
  const auto h = load_hamiltonian({"1.950", kData + "/h2_1.950.fcidump", SourceFormat::fcidump},
                                  Ordering::blocked);
  const auto spec = exact_diagonalize(h);
  const auto& gs = spec.eigenvectors[0];
  double a5 = gs[0b0101], a10 = gs[0b1010];
  if (a5 < 0) {
    a5 = -a5;
    a10 = -a10;
  }
  CHECK(a5 == doctest::Approx(0.8529).epsilon(5e-4));
  CHECK(a10 == doctest::Approx(-0.5220).epsilon(5e-4));
  REQUIRE(spec.sector_labels[0].has_value());
  CHECK(spec.sector_labels[0]->first == 2);   // two electrons
  CHECK(spec.sector_labels[0]->second == 0);  // Sz = 0
}

TEST_CASE("sector-restricted ED matches the full solve inside the sector") {
  std::mt19937_64 rng(5);
  const auto mi = test::random_integrals(2, rng);
  const auto h = jordan_wigner(to_spin_orbitals(mi));

  const auto full = exact_diagonalize(h);
  EdOptions opts;
  opts.particle_sector = 2;
  const auto sector = exact_diagonalize(h, opts);

  std::vector<double> expected;
  for (std::size_t k = 0; k < full.eigenvalues.size(); ++k)
    if (full.sector_labels[k] && full.sector_labels[k]->first == 2)
      expected.push_back(full.eigenvalues[k]);
  REQUIRE(sector.eigenvalues.size() == 6);  // C(4, 2)
  REQUIRE(expected.size() == 6);
  for (std::size_t k = 0; k < 6; ++k)
    CHECK(sector.eigenvalues[k] == doctest::Approx(expected[k]).epsilon(1e-9));
  for (const auto& label : sector.sector_labels) {
    REQUIRE(label.has_value());
    CHECK(label->first == 2);
  }
}

TEST_CASE("one-electron sector at sixteen qubits matches the orbital matrix") {
  // With no two-body part, the n=1 sector spectrum is just eig(h_so) + core.
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  const int n_spatial = 8;
  MolecularIntegrals mi;
  mi.n_spatial_orbitals = n_spatial;
  mi.n_electrons = 1;
  mi.core_energy = 0.25;
  mi.one_body.assign(64, 0.0);
  for (int i = 0; i < n_spatial; ++i)
    for (int j = 0; j <= i; ++j) {
      const double v = uni(rng);
      mi.one_body[static_cast<std::size_t>(i) * 8 + j] = v;
      mi.one_body[static_cast<std::size_t>(j) * 8 + i] = v;
    }
  mi.two_body.assign(std::size_t{64} * 64, 0.0);
  const auto so = to_spin_orbitals(mi);
  const auto h = jordan_wigner(so);
  REQUIRE(h.n_qubits() == 16);

  EdOptions opts;
  opts.particle_sector = 1;
  opts.max_eigenpairs = 4;
  const auto spec = exact_diagonalize(h, opts);

  Eigen::MatrixXd horb(8, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) horb(i, j) = mi.h(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(horb);
  // each spatial level appears twice (alpha and beta)
  CHECK(spec.eigenvalues[0] == doctest::Approx(es.eigenvalues()(0) + 0.25).epsilon(1e-10));
  CHECK(spec.eigenvalues[1] == doctest::Approx(es.eigenvalues()(0) + 0.25).epsilon(1e-10));
  CHECK(spec.eigenvalues[2] == doctest::Approx(es.eigenvalues()(1) + 0.25).epsilon(1e-10));
}

TEST_CASE("dimension guard") {
  CHECK_THROWS_AS(exact_diagonalize(PauliHamiltonian(21, {{1.0, std::string(21, 'Z')}})),
                  DimensionTooLarge);
  // Above 14 qubits a sector is mandatory.
  CHECK_THROWS_AS(exact_diagonalize(PauliHamiltonian(15, {{1.0, std::string(15, 'Z')}})),
                  DimensionTooLarge);
}

TEST_CASE("deflation preserves eigenvectors orthogonal to the shifts") {
  std::mt19937_64 rng(17);
  const auto mi = test::random_integrals(2, rng);
  const auto h = jordan_wigner(to_spin_orbitals(mi));
  const auto base = exact_diagonalize(h);

  const auto deflated = deflate(h, {base.eigenvectors[0], base.eigenvectors[1]}, {2.0, 2.0});
  const auto spec = exact_diagonalize(deflated);
  // Each remaining base eigenvector stays an eigenvector at its old energy.
  for (std::size_t k = 2; k < 6; ++k) {
    bool found = false;
    for (const double e : spec.eigenvalues)
      if (std::abs(e - base.eigenvalues[k]) < 1e-9) found = true;
    CHECK(found);
  }
}

TEST_CASE("particle number is sharp in every eigenvector of a molecular Hamiltonian") {
  std::mt19937_64 rng(23);
  const auto mi = test::random_integrals(3, rng);
  const auto h = jordan_wigner(to_spin_orbitals(mi));
  const auto spec = exact_diagonalize(h);
  for (const auto& label : spec.sector_labels) CHECK(label.has_value());
}
