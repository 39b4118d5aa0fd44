#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "support/fermion_oracle.hpp"
#include "varqa/errors.hpp"
#include "varqa/exact.hpp"
#include "varqa/jordan_wigner.hpp"
#include "varqa/scan.hpp"
#include "varqa/trial.hpp"

using namespace varqa;

namespace {

const std::string kData = VARQA_DATA_DIR;

SampleDistribution make_counts(int M, std::vector<std::pair<std::string, double>> entries,
                               double total) {
  SampleDistribution d;
  d.n_qubits = M;
  d.total_samples = total;
  for (auto& [bits, c] : entries) d.counts.emplace_back(from_bits(bits), c);
  std::sort(d.counts.begin(), d.counts.end());
  return d;
}

PauliHamiltonian random_pauli(int M, int n_terms, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::uniform_int_distribution<int> axis(0, 3);
  std::vector<PauliTerm> terms;
  for (int t = 0; t < n_terms; ++t) {
    std::string axes(static_cast<std::size_t>(M), 'I');
    for (int j = 0; j < M; ++j) axes[static_cast<std::size_t>(j)] = "IXYZ"[axis(rng)];
    // even-Y words keep the operator real symmetric
    int y = 0;
    for (char c : axes) y += c == 'Y';
    if (y % 2) {
      for (auto& c : axes)
        if (c == 'Y') {
          c = 'X';
          break;
        }
    }
    terms.push_back({uni(rng), axes});
  }
  return PauliHamiltonian(M, std::move(terms));
}

double dense_expectation(const TrialState& psi, const PauliHamiltonian& h) {
  const auto mat = dense_matrix(h);
  const std::size_t dim = std::size_t{1} << h.n_qubits();
  std::vector<double> vec(dim, 0.0);
  for (const auto& [state, a] : psi.support) vec[state] = a;
  double e = 0.0;
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) e += vec[r] * mat[r * dim + c] * vec[c];
  return e;
}

}  // namespace

TEST_CASE("trial state from counts takes square-root ratios") {
  const auto d = make_counts(4, {{"0101", 640}, {"1010", 360}}, 1000);
  SignPattern signs;
  signs.signs = {{from_bits("0101"), +1}, {from_bits("1010"), -1}};
  const auto psi = build_trial_state(d, signs);
  CHECK(psi.amplitude(from_bits("0101")) == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(psi.amplitude(from_bits("1010")) == doctest::Approx(-0.6).epsilon(1e-12));
  double norm = 0.0;
  for (const auto& [s, a] : psi.support) norm += a * a;
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("point mass distribution gives a basis state") {
  const auto d = make_counts(3, {{"101", 500}}, 500);
  const auto psi = build_trial_state(d, {});
  REQUIRE(psi.support.size() == 1);
  CHECK(psi.amplitude(from_bits("101")) == doctest::Approx(1.0));
}

TEST_CASE("uniform two-state support gives 1/sqrt(2) amplitudes") {
  SampleDistribution d;
  d.n_qubits = 2;
  d.exact_probabilities = true;
  d.total_samples = 1.0;
  d.counts = {{from_bits("01"), 0.5}, {from_bits("10"), 0.5}};
  const auto psi = build_trial_state(d, {});
  CHECK(psi.amplitude(from_bits("01")) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
  CHECK(psi.amplitude(from_bits("10")) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
}

TEST_CASE("empty distribution is rejected") {
  SampleDistribution d;
  d.n_qubits = 2;
  CHECK_THROWS_AS(build_trial_state(d, {}), EmptyDistribution);
}

TEST_CASE("canonical global phase keeps the largest amplitude positive") {
  const auto d = make_counts(2, {{"01", 700}, {"10", 300}}, 1000);
  SignPattern signs;
  signs.signs = {{from_bits("01"), -1}, {from_bits("10"), +1}};
  const auto psi = build_trial_state(d, signs);
  CHECK(psi.amplitude(from_bits("01")) > 0.0);
  CHECK(psi.amplitude(from_bits("10")) < 0.0);
}

TEST_CASE("transition elements of two-qubit flips") {
  const PauliHamiltonian xx(2, {{1.0, "XX"}});
  CHECK(transition_element(std::string("01"), std::string("10"), xx) ==
        doctest::Approx(1.0));
  const PauliHamiltonian yy(2, {{1.0, "YY"}});
  CHECK(transition_element(std::string("01"), std::string("10"), yy) ==
        doctest::Approx(1.0));
  CHECK(transition_element(std::string("00"), std::string("10"), yy) == 0.0);
}

TEST_CASE("transition elements match the dense matrix") {
  std::mt19937_64 rng(77);
  const auto h = random_pauli(4, 12, rng);
  const auto mat = dense_matrix(h);
  for (BasisState m = 0; m < 16; ++m)
    for (BasisState n = 0; n < 16; ++n)
      CHECK(std::abs(transition_element(m, n, h) - mat[m * 16 + n]) < 1e-12);
}

TEST_CASE("deflated transition elements add the rank-one shifts") {
  const PauliHamiltonian h(1, {{1.0, "Z"}});
  const double isq = 1.0 / std::sqrt(2.0);
  const auto deflated = deflate(h, {{isq, isq}}, {2.0});
  CHECK(transition_element(BasisState{0}, BasisState{1}, deflated) == doctest::Approx(1.0));
  CHECK(transition_element(BasisState{0}, BasisState{0}, deflated) == doctest::Approx(2.0));
}

TEST_CASE("expected energy cancels for the symmetric Z state") {
  const PauliHamiltonian h(1, {{1.0, "Z"}});
  TrialState psi;
  psi.n_qubits = 1;
  psi.support = {{0, std::sqrt(0.5)}, {1, std::sqrt(0.5)}};
  CHECK(expected_energy(psi, h) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("ED ground state of H2 reproduces its own energy through the estimator") {
  const auto h = load_hamiltonian({"", kData + "/h2_1.950.fcidump", SourceFormat::fcidump},
                                  Ordering::blocked);
  const auto spec = exact_diagonalize(h);
  TrialState psi;
  psi.n_qubits = h.n_qubits();
  for (std::size_t i = 0; i < spec.eigenvectors[0].size(); ++i)
    if (std::abs(spec.eigenvectors[0][i]) > 1e-12)
      psi.support.emplace_back(static_cast<BasisState>(i), spec.eigenvectors[0][i]);
  CHECK(expected_energy(psi, h) == doctest::Approx(spec.eigenvalues[0]).epsilon(1e-9));
}

TEST_CASE("expected energy equals the dense quadratic form") {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 5; ++round) {
    const auto h = random_pauli(4, 10, rng);
    const auto d = make_counts(4, {{"0000", 3}, {"0110", 2}, {"1010", 4}, {"1111", 1}}, 10);
    auto [signs, energy] = optimize_signs(d, h);
    const auto psi = build_trial_state(d, signs);
    CHECK(expected_energy(psi, h) == doctest::Approx(energy).epsilon(1e-12));
    CHECK(dense_expectation(psi, h) == doctest::Approx(energy).epsilon(1e-10));
  }
}

TEST_CASE("global sign flip leaves the energy invariant") {
  std::mt19937_64 rng(29);
  const auto h = random_pauli(3, 8, rng);
  TrialState psi;
  psi.n_qubits = 3;
  psi.support = {{0, 0.6}, {3, -0.64}, {5, 0.48}};
  TrialState flipped = psi;
  for (auto& [s, a] : flipped.support) a = -a;
  CHECK(expected_energy(psi, h) == doctest::Approx(expected_energy(flipped, h)).epsilon(1e-13));
}

TEST_CASE("variational bound against exact diagonalization") {
  std::mt19937_64 rng(41);
  const auto mi = test::random_integrals(2, rng);
  const auto h = jordan_wigner(to_spin_orbitals(mi));
  const double e0 = exact_diagonalize(h).eigenvalues[0];
  std::uniform_int_distribution<int> cnt(1, 100);
  for (int round = 0; round < 200; ++round) {
    SampleDistribution d;
    d.n_qubits = 4;
    double total = 0.0;
    for (BasisState s = 0; s < 16; ++s) {
      if (rng() & 1) continue;
      const double c = cnt(rng);
      d.counts.emplace_back(s, c);
      total += c;
    }
    if (d.counts.empty()) continue;
    d.total_samples = total;
    SignPattern signs;
    for (const auto& [s, c] : d.counts) signs.signs.emplace_back(s, (rng() & 1) ? 1 : -1);
    const auto psi = build_trial_state(d, signs);
    CHECK(expected_energy(psi, h) >= e0 - 1e-9);
  }
}

TEST_CASE("variational bound on the helium-hydride fixture") {
  const auto h = load_hamiltonian({"", kData + "/heh+_1.000.fcidump", SourceFormat::fcidump},
                                  Ordering::blocked);
  const double e0 = exact_diagonalize(h).eigenvalues[0];
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<int> cnt(1, 50);
  for (int round = 0; round < 300; ++round) {
    SampleDistribution d;
    d.n_qubits = 4;
    double total = 0.0;
    for (BasisState s = 0; s < 16; ++s) {
      if (rng() % 3) continue;
      const double c = cnt(rng);
      d.counts.emplace_back(s, c);
      total += c;
    }
    if (d.counts.empty()) continue;
    d.total_samples = total;
    SignPattern signs;
    for (const auto& [s, c] : d.counts) signs.signs.emplace_back(s, (rng() & 1) ? 1 : -1);
    CHECK(expected_energy(build_trial_state(d, signs), h) >= e0 - 1e-9);
  }
}

TEST_CASE("single-outcome sign search has no freedom") {
  const PauliHamiltonian h(2, {{0.7, "ZI"}, {0.1, "ZZ"}});
  const auto d = make_counts(2, {{"10", 5}}, 5);
  auto [signs, energy] = optimize_signs(d, h);
  REQUIRE(signs.signs.size() == 1);
  CHECK(signs.signs[0].second == 1);
  CHECK(energy ==
        doctest::Approx(transition_element(from_bits("10"), from_bits("10"), h)).epsilon(1e-12));
}

TEST_CASE("H2 near-exact weights select opposite signs") {
  const auto h = load_hamiltonian({"", kData + "/h2_1.950.fcidump", SourceFormat::fcidump},
                                  Ordering::blocked);
  const auto d = make_counts(4, {{"0101", 727}, {"1010", 273}}, 1000);
  auto [signs, energy] = optimize_signs(d, h);
  CHECK(signs.sign_of(from_bits("0101")) * signs.sign_of(from_bits("1010")) == -1);
  const double e0 = exact_diagonalize(h).eigenvalues[0];
  CHECK(energy >= e0 - 1e-9);
  CHECK(energy - e0 < 1e-3);
}

TEST_CASE("exhaustive sign search matches the four-pattern brute force") {
  std::mt19937_64 rng(53);
  for (int round = 0; round < 10; ++round) {
    const auto h = random_pauli(4, 12, rng);
    const auto d = make_counts(4, {{"0011", 2}, {"0101", 3}, {"1110", 5}}, 10);
    auto [signs, energy] = optimize_signs(d, h);
    double best = 1e300;
    const auto psi_base = build_trial_state(d, {});
    for (int pattern = 0; pattern < 4; ++pattern) {
      TrialState psi = psi_base;
      for (int b = 0; b < 2; ++b)
        if ((pattern >> b) & 1) psi.support[static_cast<std::size_t>(b + 1)].second *= -1.0;
      best = std::min(best, expected_energy(psi, h));
    }
    CHECK(energy == doctest::Approx(best).epsilon(1e-12));
  }
}

TEST_CASE("exhaustive search dominates greedy") {
  std::mt19937_64 rng(67);
  for (int round = 0; round < 10; ++round) {
    const auto h = random_pauli(4, 14, rng);
    const auto d = make_counts(
        4, {{"0000", 1}, {"0011", 2}, {"0101", 3}, {"0110", 1}, {"1001", 2}, {"1111", 1}}, 10);
    SignSearchOptions exhaustive;
    SignSearchOptions greedy;
    greedy.exhaustive_limit = 1;
    const double e_exh = optimize_signs(d, h, exhaustive).second;
    const double e_greedy = optimize_signs(d, h, greedy).second;
    CHECK(e_exh <= e_greedy + 1e-12);
  }
}

TEST_CASE("support floor drops rare outcomes and renormalizes") {
  const auto d = make_counts(2, {{"00", 996}, {"01", 3}, {"10", 1}}, 1000);
  const auto psi = build_trial_state(d, {}, 0.002);
  REQUIRE(psi.support.size() == 2);
  double norm = 0.0;
  for (const auto& [s, a] : psi.support) norm += a * a;
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("trial state serialization round trip") {
  TrialState psi;
  psi.n_qubits = 4;
  psi.support = {{from_bits("0101"), 0.8529}, {from_bits("1010"), -0.5220}};
  std::ostringstream out;
  write_trial_state(out, psi);
  CHECK(out.str().find("0101 0.85289999999999999") != std::string::npos);
  std::istringstream in(out.str());
  const auto back = read_trial_state(in);
  REQUIRE(back.support.size() == 2);
  CHECK(back.amplitude(from_bits("1010")) == doctest::Approx(-0.5220).epsilon(1e-15));
}
