#include "varqa/scan.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "varqa/errors.hpp"
#include "varqa/integrals.hpp"
#include "varqa/jordan_wigner.hpp"
#include "varqa/units.hpp"

namespace varqa {
namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::optional<double> label_distance(const std::string& label) {
  // Use the trailing numeric field of the label, e.g. "h2_1.950" -> 1.950.
  std::size_t end = label.size();
  while (end > 0 && !(std::isdigit(static_cast<unsigned char>(label[end - 1])))) --end;
  if (end == 0) return std::nullopt;
  std::size_t begin = end;
  auto numeric = [&](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '+';
  };
  while (begin > 0 && numeric(label[begin - 1])) --begin;
  try {
    std::size_t used = 0;
    const std::string tok = label.substr(begin, end - begin);
    const double v = std::stod(tok, &used);
    if (used != tok.size()) return std::nullopt;
    return v;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

int ExcitedRule::k_for(double distance) const {
  for (const auto& [threshold, k] : below)
    if (distance < threshold) return k;
  return default_k;
}

SourceFormat format_from_path(const std::string& path) {
  const auto dot = path.find_last_of('.');
  const std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
  if (ext == "fcidump" || ext == "FCIDUMP") return SourceFormat::fcidump;
  if (ext == "pauli" || ext == "txt") return SourceFormat::pauli_text;
  throw UnsupportedConversion("cannot infer format from path: " + path);
}

std::string label_from_path(const std::string& path) {
  const auto slash = path.find_last_of("/\\");
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  const auto dot = name.find_last_of('.');
  if (dot != std::string::npos) name = name.substr(0, dot);
  return name;
}

PauliHamiltonian load_hamiltonian(const HamiltonianSource& source, Ordering ordering) {
  if (source.format == SourceFormat::pauli_text) return load_pauli_text(source.path);
  const MolecularIntegrals mi = load_fcidump(source.path);
  PauliHamiltonian h = jordan_wigner(to_spin_orbitals(mi, ordering));
  h.electrons = mi.n_electrons;
  return h;
}

std::vector<ScanRow> run_scan(const ScanConfig& config) {
  std::set<std::string> labels;
  for (const auto& s : config.sources) {
    if (!labels.insert(s.label).second)
      throw ShapeError("duplicate scan label: " + s.label);
    std::ifstream probe(s.path);
    if (!probe) throw ParseError("cannot open source file: " + s.path);
  }
  if (config.excited) {
    double prev = -1.0;
    for (const auto& [threshold, k] : config.excited->below) {
      if (threshold <= prev) throw ShapeError("excited-state thresholds must increase");
      prev = threshold;
    }
  }

  std::vector<ScanRow> rows;
  for (const auto& source : config.sources) {
    ScanRow row;
    row.label = source.label;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const PauliHamiltonian h = load_hamiltonian(source, config.ordering);

      DigitizerSpec spec;
      spec.kind = config.digitizer;
      spec.n_qubits = h.n_qubits();
      spec.exhaustive = config.exhaustive;
      spec.random_trials = config.random_trials;
      spec.seed = mix_seed(config.master_seed, std::hash<std::string>{}(source.label));

      SearchOptions opts;
      opts.sampler = config.sampler;
      opts.signs.support_floor = config.support_floor;
      opts.master_seed = spec.seed;
      opts.threads = config.threads;

      EdOptions ed;
      ed.ordering = config.ordering;
      if (h.n_qubits() > 14) {
        if (!h.electrons)
          throw DimensionTooLarge("sector-restricted ED needs an electron count");
        ed.particle_sector = *h.electrons;
      }

      VarqaResult result;
      double target = 0.0;
      if (config.excited) {
        const auto d = label_distance(source.label);
        if (!d)
          throw ParseError("label '" + source.label + "' has no distance for the k rule");
        const int k = config.excited->k_for(*d);
        ed.max_eigenpairs = k + 1;
        const Spectrum spectrum = exact_diagonalize(h, ed);
        target = spectrum.eigenvalues.at(static_cast<std::size_t>(k));
        result = excited_state_search(h, k, config.excited->alpha_shift, spec, opts);
        if (config.fine_tune) {
          std::vector<std::vector<double>> states(spectrum.eigenvectors.begin(),
                                                  spectrum.eigenvectors.begin() + k);
          const DeflatedHamiltonian hk =
              deflate(h, states, std::vector<double>(static_cast<std::size_t>(k),
                                                     config.excited->alpha_shift));
          FineTuneOptions ft;
          ft.coordinates = config.fine_tune_coordinates;
          const FineTuneResult tuned = fine_tune(result.best_theta, hk, opts, ft);
          if (tuned.energy < result.best_energy) {
            result.best_theta = tuned.theta;
            result.best_energy = tuned.energy;
            auto [signs, energy] = evaluate_trial(tuned.theta, hk, opts,
                                                  mix_seed(opts.master_seed, 0x66746e65ull));
            result.best_signs = signs;
            result.best_state = build_trial_state(
                sample(tuned.theta, opts.sampler, mix_seed(opts.master_seed, 0x66746e65ull)),
                signs, opts.signs.support_floor);
            result.best_energy = energy;
          }
        }
      } else {
        ed.max_eigenpairs = 1;
        target = exact_diagonalize(h, ed).eigenvalues.at(0);
        result = varqa_search(h, spec, opts);
        if (config.fine_tune) {
          FineTuneOptions ft;
          ft.coordinates = config.fine_tune_coordinates;
          const FineTuneResult tuned = fine_tune(result.best_theta, h, opts, ft);
          if (tuned.energy < result.best_energy) {
            const DeflatedHamiltonian wrapped{h, {}};
            auto [signs, energy] = evaluate_trial(tuned.theta, wrapped, opts,
                                                  mix_seed(opts.master_seed, 0x66746e65ull));
            result.best_theta = tuned.theta;
            result.best_signs = signs;
            result.best_state = build_trial_state(
                sample(tuned.theta, opts.sampler, mix_seed(opts.master_seed, 0x66746e65ull)),
                signs, opts.signs.support_floor);
            result.best_energy = energy;
          }
        }
      }

      row.varqa_energy = result.best_energy;
      row.ed_energy = target;
      row.error_kcal = hartree_to_kcal(result.best_energy - target);
      row.trials = result.trials_evaluated;
      row.support_size = result.best_state.support.size();
      row.detail = std::move(result);
    } catch (const Error& e) {
      row.error_message = e.what();
    }
    row.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string scan_csv(const std::vector<ScanRow>& rows, bool report_timing) {
  std::ostringstream out;
  out << "label,varqa_hartree,ed_hartree,error_kcal_mol,trials,support,seconds\n";
  for (const auto& row : rows) {
    if (row.failed()) {
      std::string msg = row.error_message;
      for (auto& c : msg)
        if (c == ',' || c == '\n') c = ';';
      out << row.label << ",,,,,,," << msg << "\n";
      continue;
    }
    char seconds[32];
    std::snprintf(seconds, sizeof seconds, "%.3f", report_timing ? row.seconds : 0.0);
    out << row.label << "," << fmt17(row.varqa_energy) << "," << fmt17(row.ed_energy) << ","
        << fmt17(row.error_kcal) << "," << row.trials << "," << row.support_size << ","
        << seconds << "\n";
  }
  return out.str();
}

void write_scan_csv(const std::string& path, const std::vector<ScanRow>& rows,
                    bool report_timing) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open output file: " + path);
  out << scan_csv(rows, report_timing);
}

std::string scan_report(const ScanConfig& config, const std::vector<ScanRow>& rows) {
  std::ostringstream out;
  out << "varqa scan: " << rows.size() << " point(s), digitizer "
      << (config.digitizer == DigitizerKind::d1 ? "D1" : "D2")
      << (config.exhaustive ? " exhaustive" : " random") << ", backend "
      << (config.sampler.backend == SamplerBackend::exact_gibbs ? "gibbs" : "sa") << "\n";
  for (const auto& row : rows) {
    out << "\n== " << row.label << " ==\n";
    if (row.failed()) {
      out << "error: " << row.error_message << "\n";
      continue;
    }
    out << "varqa energy:  " << fmt17(row.varqa_energy) << " Ha\n";
    out << "ed reference:  " << fmt17(row.ed_energy) << " Ha\n";
    out << "error:         " << fmt17(row.error_kcal) << " kcal/mol\n";
    out << "trials:        " << row.trials << "\n";
    if (row.detail) {
      out << "theta*:        ";
      bool first = true;
      for (const double v : row.detail->best_theta.pack()) {
        out << (first ? "" : " ") << fmt17(v);
        first = false;
      }
      out << "\n";
      out << "support (bitstring amplitude sign):\n";
      for (const auto& [state, amp] : row.detail->best_state.support)
        out << "  " << to_bits(state, row.detail->best_state.n_qubits) << " " << fmt17(amp)
            << "\n";
      out << "energy (kcal/mol): " << fmt17(hartree_to_kcal(row.varqa_energy)) << "\n";
    }
  }
  return out.str();
}

void convert(const std::string& input_path, SourceFormat input_format,
             const std::string& output_path, SourceFormat output_format, Ordering ordering) {
  if (output_format == SourceFormat::fcidump)
    throw UnsupportedConversion("conversion to FCIDUMP is not supported");
  PauliHamiltonian h = load_hamiltonian({"", input_path, input_format}, ordering);
  save_pauli_text(output_path, h);
}

}  // namespace varqa
