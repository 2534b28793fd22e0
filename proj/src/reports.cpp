// SPDX-License-Identifier: MIT
#include "qtangle/reports.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <random>
#include <vector>

#include <json.hpp>

#include "qtangle/concurrence.hpp"
#include "qtangle/eig.hpp"
#include "qtangle/grover.hpp"
#include "qtangle/pi_tangle.hpp"
#include "qtangle/rank2.hpp"
#include "qtangle/three_tangle.hpp"
#include "qtangle/version.hpp"

namespace qtangle {

namespace fs = std::filesystem;
using nlohmann::json;

std::string format_cell(double v) {
  if (!std::isfinite(v)) throw std::runtime_error("non-finite value in report");
  if (v < 0.0 && v >= -1e-10) v = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

char delimiter_for(const std::string& format) { return format == "tsv" ? '\t' : ','; }

std::string table_filename(const std::string& stem, const std::string& format) {
  return stem + "." + format;
}

bool write_table(const fs::path& path, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows, char delim) {
  std::ofstream f(path, std::ios::binary);
  if (!f) return false;
  for (size_t i = 0; i < header.size(); ++i) {
    if (i) f << delim;
    f << header[i];
  }
  f << '\n';
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) f << delim;
      f << row[i];
    }
    f << '\n';
  }
  f.flush();
  return f.good();
}

bool write_meta(const fs::path& dir, const std::string& command, json flags) {
  json meta;
  meta["command"] = command;
  meta["artifact_version"] = artifact_version;
  meta["flags"] = std::move(flags);
  std::ofstream f(dir / "meta.json", std::ios::binary);
  if (!f) return false;
  f << meta.dump(2) << '\n';
  f.flush();
  return f.good();
}

bool prepare_output_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  return !ec && fs::is_directory(dir);
}

bool valid_format(const std::string& format) { return format == "csv" || format == "tsv"; }

// --- deterministic random helpers (fixed engine, explicit bit scaling) -----

double u01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double gauss(std::mt19937_64& rng) {
  const double u = std::max(u01(rng), 1e-300);
  const double v = u01(rng);
  return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
}

cd gauss_c(std::mt19937_64& rng) {
  const double re = gauss(rng);
  const double im = gauss(rng);
  return cd(re, im);
}

StateVector random_state(std::mt19937_64& rng, int num_qubits) {
  std::vector<cd> a(size_t{1} << num_qubits);
  double nrm = 0.0;
  for (cd& v : a) {
    v = gauss_c(rng);
    nrm += std::norm(v);
  }
  const double inv = 1.0 / std::sqrt(nrm);
  for (cd& v : a) v *= inv;
  return StateVector(num_qubits, std::move(a));
}

ComplexMatrix random_hermitian(std::mt19937_64& rng, int n) {
  ComplexMatrix m(n, n);
  for (int r = 0; r < n; ++r) {
    m(r, r) = gauss(rng);
    for (int c = r + 1; c < n; ++c) {
      const cd v = gauss_c(rng);
      m(r, c) = v;
      m(c, r) = std::conj(v);
    }
  }
  return m;
}

Gate random_unitary2(std::mt19937_64& rng) {
  const double theta = std::acos(std::sqrt(u01(rng)));
  const double alpha = 2.0 * std::numbers::pi * u01(rng);
  const double beta = 2.0 * std::numbers::pi * u01(rng);
  ComplexMatrix m(2, 2);
  m(0, 0) = std::polar(std::cos(theta), alpha);
  m(0, 1) = std::polar(std::sin(theta), beta);
  m(1, 0) = -std::polar(std::sin(theta), -beta);
  m(1, 1) = std::polar(std::cos(theta), -alpha);
  return {"haar2", m};
}

// --- reference three-qubit states ------------------------------------------

StateVector ghz_state() {
  std::vector<cd> a(8, cd(0.0));
  a[0] = a[7] = 1.0 / std::numbers::sqrt2;
  return StateVector(3, std::move(a));
}

StateVector w_state() {
  std::vector<cd> a(8, cd(0.0));
  const double r = 1.0 / std::sqrt(3.0);
  a[1] = a[2] = a[4] = r;
  return StateVector(3, std::move(a));
}

}  // namespace

// --- commands ---------------------------------------------------------------

int cmd_grover_table(int n, int target, int iterations, const SweepConfig& cfg,
                     std::ostream& out) {
  if (n != 3) {
    out << "error: the stage tangle table is defined for --n 3\n";
    return 2;
  }
  if (target < 0 || target >= (1 << n)) {
    out << "error: --target must lie in [0, " << (1 << n) - 1 << "] for n = " << n << "\n";
    return 2;
  }
  if (iterations < -1) {
    out << "error: --iterations must be >= 0 (or omitted for the optimal count)\n";
    return 2;
  }
  if (!valid_format(cfg.format)) {
    out << "error: --format must be csv or tsv\n";
    return 2;
  }
  if (!prepare_output_dir(cfg.output_dir)) {
    out << "error: cannot create output directory '" << cfg.output_dir << "'\n";
    return 1;
  }

  std::vector<GroverTableRow> rows;
  try {
    rows = grover_table(n, target, iterations);
  } catch (const std::exception& e) {
    out << "error: " << e.what() << "\n";
    return 1;
  }

  std::vector<std::vector<std::string>> cells;
  out << "state        tau3        C_AB        C_AC        C_BC\n";
  for (const GroverTableRow& r : rows) {
    cells.push_back({r.state, format_cell(r.tau3), format_cell(r.c_ab), format_cell(r.c_ac),
                     format_cell(r.c_bc)});
    char line[160];
    std::snprintf(line, sizeof line, "%-6s %11.9f %11.9f %11.9f %11.9f\n", r.state.c_str(),
                  r.tau3, r.c_ab, r.c_ac, r.c_bc);
    out << line;
  }

  const fs::path dir(cfg.output_dir);
  const char delim = delimiter_for(cfg.format);
  if (!write_table(dir / table_filename("grover_table", cfg.format),
                   {"state", "tau3", "C_AB", "C_AC", "C_BC"}, cells, delim) ||
      !write_meta(dir, "grover-table",
                  {{"n", n},
                   {"target", target},
                   {"iterations", iterations < 0 ? grover_optimal_iterations(n) : iterations},
                   {"format", cfg.format}})) {
    out << "error: failed to write reports\n";
    return 1;
  }
  return 0;
}

int cmd_hhl_sweep(const SweepConfig& cfg, std::ostream& out) {
  if (cfg.grid_points < 2) {
    out << "error: --grid-points must be at least 2\n";
    return 2;
  }
  if (!(cfg.c > 0.0) || cfg.c > 1.0) {
    out << "error: --c must lie in (0, 1]\n";
    return 2;
  }
  if (!(cfg.b0_sq_min >= 0.0) || !(cfg.b0_sq_max <= 1.0) || !(cfg.b0_sq_min < cfg.b0_sq_max)) {
    out << "error: the b0^2 range must satisfy 0 <= min < max <= 1\n";
    return 2;
  }
  if (!valid_format(cfg.format)) {
    out << "error: --format must be csv or tsv\n";
    return 2;
  }
  if (!prepare_output_dir(cfg.output_dir)) {
    out << "error: cannot create output directory '" << cfg.output_dir << "'\n";
    return 1;
  }

  std::vector<std::vector<std::string>> rows_tau, rows_pi;
  for (int i = 0; i < cfg.grid_points; ++i) {
    const double b0_sq =
        cfg.b0_sq_min + (cfg.b0_sq_max - cfg.b0_sq_min) * i / (cfg.grid_points - 1);
    const double b0 = std::sqrt(b0_sq);
    const double b1 = std::sqrt(std::max(0.0, 1.0 - b0_sq));
    const ClosedFormTangles t = closed_form_tangles(HhlProblem(b0, b1, cfg.c));
    rows_tau.push_back({format_cell(b0_sq), format_cell(t.tau3_psi1), format_cell(t.tau3_rho2),
                        format_cell(t.tau3_rho3)});
    rows_pi.push_back({format_cell(b0_sq), format_cell(t.pi3_psi1), format_cell(t.pi3_rho2),
                       format_cell(t.pi3_rho3)});
  }

  const fs::path dir(cfg.output_dir);
  const char delim = delimiter_for(cfg.format);
  if (!write_table(dir / table_filename("fig4a", cfg.format),
                   {"b0_sq", "tau3_psi1", "tau3_rho2", "tau3_rho3"}, rows_tau, delim) ||
      !write_table(dir / table_filename("fig4b", cfg.format),
                   {"b0_sq", "pi3_psi1", "pi3_rho2", "pi3_rho3"}, rows_pi, delim) ||
      !write_meta(dir, "hhl-sweep",
                  {{"grid_points", cfg.grid_points},
                   {"b0_sq_min", cfg.b0_sq_min},
                   {"b0_sq_max", cfg.b0_sq_max},
                   {"c", cfg.c},
                   {"format", cfg.format}})) {
    out << "error: failed to write reports\n";
    return 1;
  }
  out << "wrote " << table_filename("fig4a", cfg.format) << " and "
      << table_filename("fig4b", cfg.format) << " (" << cfg.grid_points << " rows) to "
      << cfg.output_dir << "\n";
  return 0;
}

int cmd_rank2_curve(double x1, int theta_steps, int p_steps, const SweepConfig& cfg,
                    std::ostream& out) {
  if (!(x1 >= 0.0 && x1 <= 1.0)) {
    out << "error: --x1 must lie in [0, 1]\n";
    return 2;
  }
  if (theta_steps < 2 || p_steps < 2) {
    out << "error: --theta-steps and --p-steps must be at least 2\n";
    return 2;
  }
  if (!valid_format(cfg.format)) {
    out << "error: --format must be csv or tsv\n";
    return 2;
  }
  if (!prepare_output_dir(cfg.output_dir)) {
    out << "error: cannot create output directory '" << cfg.output_dir << "'\n";
    return 1;
  }

  const auto [p_minus, p_plus] = rank2_p_bounds(Rank2Family(x1, 0.5));
  std::vector<double> p_values;
  for (int i = 0; i < p_steps; ++i) p_values.push_back(static_cast<double>(i) / (p_steps - 1));
  for (double bound : {p_minus, p_plus}) {
    bool present = false;
    for (double p : p_values)
      if (std::abs(p - bound) < 1e-12) present = true;
    if (!present) p_values.push_back(bound);
  }
  std::sort(p_values.begin(), p_values.end());

  std::vector<std::vector<std::string>> rows;
  for (double p : p_values) {
    const Rank2Family fam(x1, p);
    const bool at_bound = std::abs(p - p_minus) < 1e-12 || std::abs(p - p_plus) < 1e-12;
    const double f_p = rank2_f(fam);
    const double hull = rank2_three_tangle(fam);
    for (int j = 0; j < theta_steps; ++j) {
      const double theta = 2.0 * std::numbers::pi * j / theta_steps;
      rows.push_back({format_cell(p), format_cell(theta),
                      format_cell(rank2_characteristic(fam, theta)), format_cell(f_p),
                      format_cell(hull), at_bound ? "1" : "0"});
    }
  }

  const fs::path dir(cfg.output_dir);
  if (!write_table(dir / table_filename("rank2_curves", cfg.format),
                   {"p", "theta", "tau3_Z", "f_p", "convex_hull", "is_p_bound"}, rows,
                   delimiter_for(cfg.format)) ||
      !write_meta(dir, "rank2-curve",
                  {{"x1", x1},
                   {"theta_steps", theta_steps},
                   {"p_steps", p_steps},
                   {"format", cfg.format}})) {
    out << "error: failed to write reports\n";
    return 1;
  }
  out << "wrote " << table_filename("rank2_curves", cfg.format) << " (" << rows.size()
      << " rows) to " << cfg.output_dir << "\n";
  return 0;
}

// --- verify -----------------------------------------------------------------

namespace {

struct CheckAccumulator {
  std::vector<CheckResult> checks;
  void add(const std::string& name, double disc, double tol) {
    checks.push_back({name, disc, tol, disc <= tol});
  }
};

double max_pair_concurrence(const EntanglementRecord& r) {
  return std::max({r.concurrence_ab, r.concurrence_ac, r.concurrence_bc});
}

}  // namespace

int cmd_verify(const VerifyOptions& options, std::ostream& out) {
  if (options.grid_points < 2) {
    out << "error: --grid-points must be at least 2\n";
    return 2;
  }
  if (!(options.c > 0.0) || options.c > 1.0) {
    out << "error: --c must lie in (0, 1]\n";
    return 2;
  }
  const double c_sim = options.c;
  const double c_closed = options.closed_form_c.value_or(options.c);

  CheckAccumulator acc;

  // Cross-validation plus stage-level invariants over the b0^2 grid.
  std::array<double, 5> cv{};
  std::array<std::string, 5> cv_names;
  double clock_mass = 0.0, stage_match = 0.0, stage_conc = 0.0, ordering = 0.0,
         endpoint = 0.0;
  for (int i = 0; i < options.grid_points; ++i) {
    const double b0_sq = static_cast<double>(i) / (options.grid_points - 1);
    const double b0 = std::sqrt(b0_sq);
    const double b1 = std::sqrt(std::max(0.0, 1.0 - b0_sq));
    const HhlProblem sim_p(b0, b1, c_sim);
    const HhlProblem cf_p(b0, b1, c_closed);

    const std::vector<CheckResult> res = cross_validate(sim_p, cf_p);
    for (size_t j = 0; j < res.size(); ++j) {
      cv[j] = std::max(cv[j], res[j].discrepancy);
      cv_names[j] = res[j].name;
    }

    const HhlStageStates sim = hhl_run(sim_p);
    for (int k = 4; k < 16; ++k) clock_mass = std::max(clock_mass, std::abs(sim.psi3[k]));
    stage_match = std::max({stage_match,
                            phase_aligned_linf(closed_form_psi1(cf_p), sim.psi1),
                            phase_aligned_linf(closed_form_psi2(cf_p), sim.psi2),
                            phase_aligned_linf(closed_form_psi3(cf_p), sim.psi3)});
    stage_conc = std::max({stage_conc, max_pair_concurrence(analyze_three_qubit(sim.psi1_bar)),
                           max_pair_concurrence(analyze_three_qubit(sim.rho2_bar)),
                           max_pair_concurrence(analyze_three_qubit(sim.rho3_bar))});
    const ClosedFormTangles t = closed_form_tangles(cf_p);
    ordering = std::max({ordering, t.tau3_rho2 - t.tau3_psi1, t.pi3_rho2 - t.pi3_psi1});
    if (i == 0 || i == options.grid_points - 1)
      endpoint = std::max(endpoint, std::abs(three_tangle(sim.psi1_bar) - 1.0));
  }
  for (size_t j = 0; j < cv.size(); ++j)
    acc.add("cross-validate: " + cv_names[j], cv[j], 1e-8);
  acc.add("psi3 clock register uncomputed", clock_mass, 1e-10);
  acc.add("simulated stages match closed forms", stage_match, 1e-10);
  acc.add("stage pairwise concurrences vanish", stage_conc, 1e-9);
  acc.add("stage tangles non-increasing (closed forms)", std::max(0.0, ordering), 1e-9);
  acc.add("endpoint stage-1 tangle equals 1", endpoint, 1e-9);

  // Search-stage tangle table against the frozen rational references.
  {
    const std::vector<GroverTableRow> rows = grover_table(3, 7, 2);
    const double tau_ref[4] = {1.0 / 4, 1.0 / 16, 9.0 / 64, 9.0 / 256};
    const double c_ref[4] = {1.0 / 2, 1.0 / 4, 3.0 / 8, 3.0 / 16};
    double disc = (rows.size() == 4) ? 0.0 : 1.0;
    for (size_t r = 0; r < rows.size() && r < 4; ++r)
      disc = std::max({disc, std::abs(rows[r].tau3 - tau_ref[r]),
                       std::abs(rows[r].c_ab - c_ref[r]), std::abs(rows[r].c_ac - c_ref[r]),
                       std::abs(rows[r].c_bc - c_ref[r])});
    acc.add("search stage table matches references", disc, 1e-9);
  }

  // Success probabilities at the optimal iteration count.
  {
    double formula_disc = 0.0, floor_disc = 0.0;
    for (int n = 2; n <= 6; ++n) {
      const GroverRun r = grover_run(n, (1 << n) - 1);
      const double theta = std::asin(1.0 / std::sqrt(static_cast<double>(1 << n)));
      const double predicted = std::pow(std::sin((2.0 * r.iterations + 1.0) * theta), 2.0);
      formula_disc = std::max(formula_disc, std::abs(r.success_probability - predicted));
      floor_disc = std::max(floor_disc, 0.94 - r.success_probability);
    }
    acc.add("search success matches rotation formula", formula_disc, 1e-10);
    acc.add("search success at optimal iterations >= 0.94", std::max(0.0, floor_disc), 0.0);
  }

  // Reference three-qubit states.
  {
    const StateVector ghz = ghz_state(), w = w_state();
    const double pi_w_ref = (4.0 / 9.0) * (std::sqrt(5.0) - 1.0);
    const DensityMatrix w_pair = reduced_density(w, {0, 1});
    const double disc =
        std::max({std::abs(pi_tangle(ghz) - 1.0), std::abs(three_tangle(ghz) - 1.0),
                  std::abs(pi_tangle(w) - pi_w_ref), three_tangle(w),
                  std::abs(concurrence(w_pair) - 2.0 / 3.0)});
    acc.add("reference three-qubit states (GHZ, W)", disc, 1e-9);
  }

  // Rank-2 family invariants.
  {
    double boundary = 0.0;
    for (int i = 0; i <= 100; ++i) {
      const double x1 = static_cast<double>(i) / 100.0;
      const auto [pm, pp] = rank2_p_bounds(Rank2Family(x1, 0.5));
      boundary = std::max({boundary, rank2_f(Rank2Family(x1, pm)), rank2_f(Rank2Family(x1, pp))});
    }
    acc.add("rank-2 boundary zeros f(p-)=f(p+)=0", boundary, 1e-10);

    double characteristic = 0.0, theta_min = 0.0, hull = 0.0, convex = 0.0;
    for (double x1 : {0.1, 0.3, 0.5, 1.0 / std::numbers::sqrt2, 0.8, 0.95}) {
      for (int pi_idx = 0; pi_idx <= 20; ++pi_idx) {
        const double p = pi_idx / 20.0;
        const Rank2Family fam(x1, p);
        for (int k = 0; k < 32; ++k) {
          const double theta = 2.0 * std::numbers::pi * k / 32.0;
          characteristic = std::max(characteristic,
                                    std::abs(rank2_characteristic(fam, theta) -
                                             three_tangle(fam.z_state(theta))));
        }
        double dense_min = 1e300;
        for (int k = 0; k < 629; ++k)
          dense_min = std::min(dense_min, rank2_characteristic(fam, 0.01 * k));
        theta_min = std::max(theta_min, rank2_f(fam) - dense_min);
        hull = std::max(hull, rank2_three_tangle(fam) - rank2_f(fam));
      }
      // discrete convexity on each side of the zero plateau
      const auto [pm, pp] = rank2_p_bounds(Rank2Family(x1, 0.5));
      for (auto [lo, hi] : {std::pair{0.0, pm}, std::pair{pp, 1.0}}) {
        if (hi - lo < 1e-9) continue;
        const int steps = 40;
        std::vector<double> vals;
        for (int k = 0; k <= steps; ++k)
          vals.push_back(rank2_three_tangle(Rank2Family(x1, lo + (hi - lo) * k / steps)));
        for (int k = 1; k + 1 <= steps; ++k)
          convex = std::max(convex, -(vals[k - 1] - 2.0 * vals[k] + vals[k + 1]));
      }
    }
    acc.add("rank-2 characteristic matches hyperdeterminant", characteristic, 1e-9);
    acc.add("rank-2 theta minimum at 0 or pi", std::max(0.0, theta_min), 1e-9);
    acc.add("rank-2 hull below f and piecewise convex",
            std::max(0.0, std::max(hull, convex)), 1e-9);
  }

  // Eigensolver reconstruction and orthonormality on random Hermitian input.
  {
    std::mt19937_64 rng(20260826ULL);
    double disc = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 15);
      const ComplexMatrix h = random_hermitian(rng, n);
      const SpectralDecomposition d = hermitian_eig(h);
      disc = std::max(disc, (d.reconstruct() - h).max_abs());
      const ComplexMatrix gram = d.eigenvectors.adjoint() * d.eigenvectors;
      disc = std::max(disc, (gram - ComplexMatrix::identity(n)).max_abs());
    }
    acc.add("eigensolver reconstruction and orthonormality", disc, 1e-10);
  }

  // Gate unitarity.
  {
    double disc = 0.0;
    auto check_gate = [&disc](const Gate& g) {
      const ComplexMatrix gram = g.matrix.adjoint() * g.matrix;
      disc = std::max(disc, (gram - ComplexMatrix::identity(g.matrix.rows())).max_abs());
    };
    for (const Gate& g : {gates::x(), gates::y(), gates::z(), gates::h(), gates::ry(0.7),
                          gates::phase(1.1), gates::controlled_phase(0.9), gates::swap(),
                          gates::phase_flip_oracle(3, 5), gates::diffuser(3),
                          hamiltonian_evolution(HhlProblem::a_matrix(), HhlProblem::evolution_time()),
                          gates::controlled_on_value(gates::ry(0.4), 2, 3)})
      check_gate(g);
    acc.add("gate unitarity", disc, 1e-10);
  }

  // Norm preservation along random circuits.
  {
    std::mt19937_64 rng(7ULL);
    double disc = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      StateVector s = random_state(rng, 3);
      for (int step = 0; step < 25; ++step) {
        const int q = static_cast<int>(rng() % 3);
        switch (rng() % 4) {
          case 0: s = apply(s, gates::h(), {q}); break;
          case 1: s = apply(s, gates::ry(u01(rng) * 3.0), {q}); break;
          case 2: s = apply(s, gates::phase(u01(rng) * 6.0), {q}); break;
          default: s = apply(s, gates::controlled_phase(u01(rng) * 6.0), {q, (q + 1) % 3});
        }
      }
      disc = std::max(disc, std::abs(s.norm() - 1.0));
    }
    acc.add("circuit norm preservation", disc, 1e-12);
  }

  // Pure-state concurrence agreement.
  {
    std::mt19937_64 rng(11ULL);
    double disc = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
      const StateVector s = random_state(rng, 2);
      disc = std::max(disc,
                      std::abs(concurrence_pure(s) - concurrence(DensityMatrix::from_pure(s))));
    }
    acc.add("concurrence pure/mixed agreement", disc, 1e-9);
  }

  // Local-unitary invariance of the three-tangle.
  {
    std::mt19937_64 rng(13ULL);
    double disc = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
      StateVector s = random_state(rng, 3);
      const double before = three_tangle(s);
      for (int q = 0; q < 3; ++q) s = apply(s, random_unitary2(rng), {q});
      disc = std::max(disc, std::abs(three_tangle(s) - before));
    }
    acc.add("three-tangle local-unitary invariance", disc, 1e-9);
  }

  // Negativity monogamy on random pure states.
  {
    std::mt19937_64 rng(17ULL);
    double disc = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
      const StateVector s = random_state(rng, 3);
      const DensityMatrix rho = DensityMatrix::from_pure(s);
      const double na = negativity(rho, 0);
      const double nab = negativity(partial_trace(rho, {2}), 0);
      const double nac = negativity(partial_trace(rho, {1}), 0);
      disc = std::max(disc, nab * nab + nac * nac - na * na);
    }
    acc.add("negativity monogamy slack", std::max(0.0, disc), 1e-9);
  }

  // Separable states give zero pi-tangle.
  {
    std::mt19937_64 rng(19ULL);
    double disc = 0.0;
    for (int trial = 0; trial < 30; ++trial) {
      const int terms = 1 + static_cast<int>(rng() % 4);
      ComplexMatrix m(8, 8);
      std::vector<double> weights(terms);
      double total = 0.0;
      for (double& w : weights) {
        w = u01(rng) + 0.1;
        total += w;
      }
      for (int t = 0; t < terms; ++t) {
        const StateVector prod =
            kron(kron(random_state(rng, 1), random_state(rng, 1)), random_state(rng, 1));
        for (int r = 0; r < 8; ++r)
          for (int c = 0; c < 8; ++c)
            m(r, c) += weights[t] / total * prod[r] * std::conj(prod[c]);
      }
      disc = std::max(disc, pi_tangle(DensityMatrix(m, {2, 2, 2})));
    }
    acc.add("separable states give zero pi-tangle", disc, 1e-9);
  }

  // Solution register against the directly solved linear system.
  {
    std::mt19937_64 rng(23ULL);
    double disc = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const double phi = 2.0 * std::numbers::pi * u01(rng);
      const HhlProblem prob(std::cos(phi), std::sin(phi), c_sim);
      const HhlStageStates sim = hhl_run(prob);
      const double w0 = (3.0 * prob.b0 - prob.b1) / 4.0;
      const double w1 = (-prob.b0 + 3.0 * prob.b1) / 4.0;
      const double wn = std::hypot(w0, w1);
      const StateVector ref(1, {cd(w0 / wn), cd(w1 / wn)});
      disc = std::max(disc, phase_aligned_linf(ref, sim.solution));
    }
    acc.add("solution register matches linear system", disc, 1e-8);
  }

  bool all_pass = true;
  for (const CheckResult& c : acc.checks) {
    char line[200];
    std::snprintf(line, sizeof line, "check %-52s max %.3e  tol %.0e  %s\n", c.name.c_str(),
                  c.discrepancy, c.tolerance, c.pass ? "PASS" : "FAIL");
    out << line;
    all_pass = all_pass && c.pass;
  }
  out << (all_pass ? "verify: all checks passed\n" : "verify: FAILURES detected\n");
  return all_pass ? 0 : 1;
}

}  // namespace qtangle
