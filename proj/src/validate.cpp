// Copyright 2026 The qotto Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qotto/validate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include <fmt/format.h>

namespace qotto {

namespace {

using Rng = std::mt19937_64;

double uniform(Rng &rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Operator random_operator(Rng &rng, double scale) {
  return pauli_operator(uniform(rng, -scale, scale), uniform(rng, -scale, scale),
                        uniform(rng, -scale, scale), uniform(rng, -scale, scale));
}

CVector<2> random_ket(Rng &rng) {
  std::normal_distribution<double> n;
  CVector<2> v(complex_t(n(rng), n(rng)), complex_t(n(rng), n(rng)));
  return v.normalized();
}

Qubit random_mixed(Rng &rng) {
  const double p = uniform(rng, 0.0, 1.0);
  const CVector<2> a = random_ket(rng);
  CVector<2> b(-std::conj(a(1)), std::conj(a(0)));
  return Qubit(p * a * a.adjoint() + (1.0 - p) * b * b.adjoint());
}

class Collector {
public:
  // Passes when measured <= threshold.
  void at_most(std::string name, double measured, double threshold,
               std::string detail = {}) {
    results_.push_back({std::move(name), measured, threshold,
                        std::isfinite(measured) && measured <= threshold,
                        std::move(detail)});
  }
  // Records a count of violations; passes when zero.
  void none(std::string name, int violations, std::string detail = {}) {
    at_most(std::move(name), violations, 0, std::move(detail));
  }
  std::vector<PropertyResult> take() { return std::move(results_); }

private:
  std::vector<PropertyResult> results_;
};

// Max-entry distance U^dagger U - I over a batch, OpenMP reduction over samples.
double max_unitarity_defect(const std::vector<std::pair<Operator, double>> &samples,
                            int threads) {
  double worst = 0.0;
  const int n = static_cast<int>(samples.size());
#pragma omp parallel for reduction(max : worst) num_threads(threads)
  for (int i = 0; i < n; ++i) {
    const CMatrix<2> u = expm_step(samples[i].first, samples[i].second);
    worst = std::max(worst, max_abs(u.adjoint() * u - CMatrix<2>::Identity()));
  }
  return worst;
}

void check_core(Collector &c, Rng &rng, int threads) {
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const Operator op = random_operator(rng, 1e4);
    const Operator back = Operator::from_matrix(op.matrix());
    for (int k = 0; k < 4; ++k)
      worst = std::max(worst, std::abs(back.coefficients()[k] - op.coefficients()[k]) /
                                  std::max(1.0, op.op_norm()));
  }
  c.at_most("core.pauli_round_trip", worst, 1e-12, "relative to max(1, |H|)");

  std::vector<std::pair<Operator, double>> samples;
  for (int i = 0; i < 10000; ++i) {
    const Operator op = random_operator(rng, 1e4);
    samples.emplace_back(op, uniform(rng, 0.0, 1e-2));
  }
  c.at_most("core.expm_unitarity", max_unitarity_defect(samples, threads), 1e-10,
            "10^4 random H, |a| <= 1e4 Hz, dt <= 10 ms");

  worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const Operator op = random_operator(rng, 1e4);
    const Eigensystem es = eigh(op);
    CMatrix<2> v;
    v << es.vectors[0], es.vectors[1];
    const CMatrix<2> e = Eigen::Vector2d(es.values[0], es.values[1])
                             .cast<complex_t>()
                             .asDiagonal();
    worst = std::max(worst,
                     max_abs(v * e * v.adjoint() - op.matrix()) / (1.0 + op.op_norm()));
  }
  c.at_most("core.eigh_reconstruction", worst, 1e-9, "relative to 1 + |H|");

  worst = 0.0;
  int proportional_violations = 0;
  for (int i = 0; i < 1000; ++i) {
    const Qubit a = random_mixed(rng), b = random_mixed(rng);
    worst = std::max(worst, std::abs(fidelity(a, b) - fidelity(b, a)));
    const CVector<2> psi = random_ket(rng);
    const CVector<2> phi = random_ket(rng);
    if (std::abs(fidelity(Qubit::pure(psi), Qubit::pure(psi)) - 1.0) > 1e-12)
      ++proportional_violations;
    if (std::abs(psi.dot(phi)) < 1.0 - 1e-6 &&
        fidelity(Qubit::pure(psi), Qubit::pure(phi)) > 1.0 - 1e-12)
      ++proportional_violations;
  }
  c.at_most("core.fidelity_symmetry", worst, 1e-12);
  c.none("core.fidelity_one_iff_equal", proportional_violations, "pure states");

  worst = 0.0;
  const Unitary<4> swap = swap_gate();
  for (int i = 0; i < 1000; ++i) {
    const Qubit a = random_mixed(rng), b = random_mixed(rng);
    const QubitPair ab = tensor(a, b);
    worst = std::max({worst, max_abs(partial_trace(ab, 1).matrix() - a.matrix()),
                      max_abs(partial_trace(ab, 2).matrix() - b.matrix()),
                      max_abs(swap.conjugate(ab).matrix() - tensor(b, a).matrix())});
  }
  c.at_most("core.partial_trace_tensor_swap", worst, 1e-12);
}

void check_schedule(Collector &c, Rng &rng) {
  double worst_fd = 0.0, worst_round_trip = 0.0;
  int monotone_violations = 0;
  for (int i = 0; i < 1000; ++i) {
    const double initial = uniform(rng, -5e3, 5e3);
    const double final_hz = uniform(rng, -5e3, 5e3);
    const double tau = uniform(rng, 1e-4, 1e-2);
    const RampSchedule s = RampSchedule::between(initial, final_hz, tau);
    worst_round_trip = std::max(worst_round_trip, std::abs(s.value(tau) - final_hz) /
                                                      std::max(1.0, std::abs(final_hz)));

    const double t = uniform(rng, 0.01, 0.99) * tau;
    const double h = 1e-4 * tau;
    const double fd = (s.value(t + h) - s.value(t - h)) / (2.0 * h);
    const double exact = s.derivative(t);
    if (exact != 0.0)
      worst_fd = std::max(worst_fd, std::abs(fd - exact) / std::abs(exact));

    double prev = s.value(0.0);
    for (int k = 1; k <= 200; ++k) {
      const double v = s.value(tau * k / 200.0);
      if ((s.amplitude() > 0 && v < prev) || (s.amplitude() < 0 && v > prev))
        ++monotone_violations;
      prev = v;
    }
  }
  c.at_most("schedule.derivative_vs_finite_difference", worst_fd, 1e-6, "relative");
  c.none("schedule.monotone", monotone_violations);
  c.at_most("schedule.endpoint_round_trip", worst_round_trip, 1e-9, "relative");
}

void check_model(Collector &c, Rng &rng) {
  int gap_violations = 0, heff_violations = 0;
  for (int i = 0; i < 1000; ++i) {
    const LZModel m(uniform(rng, 1.0, 5e3),
                    RampSchedule::between(uniform(rng, -5e3, 5e3), uniform(rng, -5e3, 5e3),
                                          uniform(rng, 1e-4, 1e-2)));
    const double t = uniform(rng, 0.0, 1.0) * m.tau();
    if (gap(m, t) < m.bx())
      ++gap_violations;
    const Operator sta = h_eff(m, t, DriveMode::STA);
    const Operator bare = h0(m, t);
    if (sta.identity() != bare.identity() || sta.x() != bare.x() || sta.z() != bare.z() ||
        sta.y() != b_cd(m, t) || h_eff(m, t, DriveMode::NA).y() != 0.0)
      ++heff_violations;
  }
  c.none("model.gap_at_least_bx", gap_violations);
  c.none("model.sta_differs_only_in_y", heff_violations);
}

void check_propagator(Collector &c, Rng &rng, const ValidationOptions &opts) {
  double worst = 0.0;
  for (double tau_us : {200.0, 500.0, 1000.0, 2250.0})
    worst = std::max(worst, cd_tracking_infidelity(tau_us * 1e-6, kDefaultSteps, opts.cd_gain));
  c.at_most("propagator.cd_tracking", worst, 1e-6,
            "1 - F at every step, tau in {200, 500, 1000, 2250} us");

  worst = 0.0;
  for (int n : {2, 16, 512, 4096})
    for (auto mode : {DriveMode::NA, DriveMode::STA}) {
      const EvolutionSpec spec{LZModel::expansion(1000, 2500, 2e-4), mode, n};
      const CMatrix<2> u = total_unitary(spec).matrix();
      worst = std::max(worst, max_abs(u.adjoint() * u - CMatrix<2>::Identity()));
    }
  c.at_most("propagator.unitarity", worst, 1e-10);

  // Error against a 4x finer reference should fall ~4x per halving of dt.
  double worst_ratio_dev = 0.0;
  std::string ratios;
  for (auto mode : {DriveMode::NA, DriveMode::STA}) {
    std::vector<double> err;
    for (int n : {64, 128, 256}) {
      const EvolutionSpec coarse{LZModel::expansion(1000, 2500, 2e-4), mode, n};
      EvolutionSpec fine = coarse;
      fine.n_steps = 4 * n;
      err.push_back(max_abs(total_unitary(coarse).matrix() - total_unitary(fine).matrix()));
    }
    for (int k = 0; k + 1 < 3; ++k) {
      const double ratio = err[k] / err[k + 1];
      ratios += fmt::format("{:.3f} ", ratio);
      // within a factor 2 of 4: log2 distance from 4 at most 1
      worst_ratio_dev = std::max(worst_ratio_dev, std::abs(std::log2(ratio / 4.0)));
    }
  }
  c.at_most("propagator.second_order_convergence", worst_ratio_dev, 1.0,
            "|log2(ratio/4)|, ratios " + ratios);

  worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Qubit rho = random_mixed(rng);
    const EvolutionSpec spec{LZModel::expansion(1000, 2500, uniform(rng, 2e-4, 2.25e-3)),
                             i % 2 ? DriveMode::STA : DriveMode::NA, 512};
    const Qubit out = evolve(rho, spec);
    Eigen::SelfAdjointEigenSolver<CMatrix<2>> a(rho.matrix()), b(out.matrix());
    worst = std::max(worst, (a.eigenvalues() - b.eigenvalues()).cwiseAbs().maxCoeff());
  }
  c.at_most("propagator.spectrum_preserved", worst, 1e-10);
}

void check_thermo(Collector &c, Rng &rng) {
  double worst_commutator = 0.0, worst_round_trip = 0.0, worst_identity = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Operator h = random_operator(rng, 5e3);
    const Qubit rho = gibbs(h, {uniform(rng, 0.5, 50.0)});
    const CMatrix<2> hm = h.matrix();
    worst_commutator = std::max(
        worst_commutator,
        max_abs(hm * rho.matrix() - rho.matrix() * hm) / std::max(1.0, h.op_norm()));

    const double nu = uniform(rng, 100.0, 1e4);
    const Operator h_gap = pauli_operator(0.0, 0.0, 0.0, nu);
    const double kT = uniform(rng, 0.5, 50.0);
    const auto p = populations(h_gap, gibbs(h_gap, {kT}));
    const double back_kT = spin_temperature(p[0], p[1], nu);
    const auto q = populations(h_gap, gibbs(h_gap, {back_kT}));
    worst_round_trip = std::max(worst_round_trip, std::abs(q[0] - p[0]));

    const Qubit a = random_mixed(rng), b = random_mixed(rng);
    const Operator h2 = random_operator(rng, 5e3);
    worst_identity = std::max({worst_identity, std::abs(heat(h, a, a)),
                               std::abs(work(h, a, h2, b) + work(h2, b, h, a))});
  }
  c.at_most("thermo.gibbs_commutes", worst_commutator, 1e-12, "relative to max(1, |H|)");
  c.at_most("thermo.spin_temperature_round_trip", worst_round_trip, 1e-9);
  c.at_most("thermo.heat_zero_and_work_antisymmetric", worst_identity, 1e-12, "peV");
}

void check_engine(Collector &c, const ValidationOptions &opts) {
  const SweepSpec spec = SweepSpec::defaults();
  const std::vector<SweepRow> rows = sweep_parallel(spec, opts.threads);
  const std::vector<SweepRow> reference = sweep_serial(spec);

  int mismatches = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto &a = rows[i].metrics;
    const auto &b = reference[i].metrics;
    auto same = [](double x, double y) { return x == y || (std::isnan(x) && std::isnan(y)); };
    if (!same(a.W2, b.W2) || !same(a.W4, b.W4) || !same(a.Q3, b.Q3) ||
        !same(a.eta2_STA, b.eta2_STA) || !same(a.P_STA, b.P_STA) || a.flags != b.flags)
      ++mismatches;
  }
  c.none("sweep.parallel_matches_serial", mismatches, "bitwise");

  double first_law = 0.0, sta_work = 0.0, otto = 0.0;
  int carnot = 0, ordering = 0, eta_order = 0;
  auto find = [&](double kT, EngineMode mode, double tau) -> const CycleMetrics & {
    for (const auto &r : rows)
      if (r.kT_hot == kT && r.mode == mode && r.tau == tau)
        return r.metrics;
    throw std::logic_error("validation: missing sweep row");
  };
  for (const auto &r : rows) {
    const auto &m = r.metrics;
    first_law = std::max(first_law, std::abs(m.W2 + m.W4 + m.Q1 + m.Q3));
    const double bound = carnot_limit(spec.cold_temperature, r.kT_hot);
    for (double eta : {m.eta_A, m.eta1_STA, m.eta2_STA})
      if (eta > 0.0 && eta > bound)
        ++carnot;
    if (r.mode == EngineMode::IdealAdiabatic)
      otto = std::max(otto, std::abs(m.eta_A - otto_limit(spec.base.nu_i(), spec.base.nu_f())));
    if (r.mode == EngineMode::STA) {
      const auto &ideal = find(r.kT_hot, EngineMode::IdealAdiabatic, r.tau);
      sta_work = std::max({sta_work, std::abs(m.W2 - ideal.W2), std::abs(m.W4 - ideal.W4)});
      const auto &na = find(r.kT_hot, EngineMode::NA, r.tau);
      if (na.eta_A > 0.0 && m.eta2_STA > 0.0 && m.eta2_STA < na.eta_A - 1e-9)
        ++ordering;
      const double extracted = -(m.W2 + m.W4);
      if (m.Q3 > 0.0 && extracted <= m.Q3 && m.eta1_STA < m.eta2_STA)
        ++eta_order;
    }
  }
  c.at_most("engine.first_law_closure", first_law, 1e-9, "peV, every sweep row");
  c.none("engine.carnot_bound", carnot, "every positive efficiency in the sweep");
  c.at_most("engine.otto_limit_ideal", otto, 1e-9);
  c.at_most("engine.sta_work_equals_ideal", sta_work, 1e-8, "peV");
  c.none("engine.sta_beats_na", ordering, "eta2_STA >= eta_NA where both positive");
  c.none("engine.eta1_at_least_eta2", eta_order);

  double swap_gap = 0.0;
  for (auto mode : {EngineMode::IdealAdiabatic, EngineMode::NA, EngineMode::STA})
    for (double tau : {2e-4, 1.3e-3, 2.25e-3}) {
      EngineConfig cfg;
      cfg.mode = mode;
      cfg.tau = tau;
      cfg.kT_hot = 8.45;
      EngineConfig swapped = cfg;
      swapped.heating = HeatingModel::Swap;
      const CycleMetrics a = run_cycle(cfg), b = run_cycle(swapped);
      for (auto [x, y] : {std::pair{a.W2, b.W2}, {a.W4, b.W4}, {a.Q1, b.Q1}, {a.Q3, b.Q3},
                          {a.eta_A, b.eta_A}, {a.eta2_STA, b.eta2_STA}, {a.P_A, b.P_A},
                          {a.P_STA, b.P_STA}, {a.cost2, b.cost2}, {a.cost4, b.cost4}})
        if (!(std::isnan(x) && std::isnan(y)))
          swap_gap = std::max(swap_gap, std::abs(x - y) / std::max(1.0, std::abs(x)));
    }
  c.at_most("engine.swap_equals_reset", swap_gap, 1e-12, "max metric difference, relative to max(1, |m|)");

  // NA approaches the Otto efficiency as tau doubles. Steps scale with tau
  // so dt stays at the default sweep's resolution.
  std::vector<double> gaps;
  for (double tau : {2.25e-3, 4.5e-3, 9e-3, 18e-3}) {
    EngineConfig cfg;
    cfg.mode = EngineMode::NA;
    cfg.tau = tau;
    cfg.n_steps = static_cast<int>(std::lround(kDefaultSteps * tau / 2.25e-3));
    gaps.push_back(std::abs(run_cycle(cfg).eta_A - otto_limit(cfg.nu_i(), cfg.nu_f())));
  }
  int increases = 0;
  for (std::size_t k = 0; k + 1 < gaps.size(); ++k)
    if (gaps[k + 1] >= gaps[k])
      ++increases;
  c.none("engine.na_merges_with_otto", increases,
         fmt::format("|eta_NA - eta_otto| = {:.3e} {:.3e} {:.3e} {:.3e}", gaps[0], gaps[1],
                     gaps[2], gaps[3]));
}

} // namespace

bool ValidationReport::all_passed() const {
  return std::all_of(results.begin(), results.end(),
                     [](const PropertyResult &r) { return r.passed; });
}

double cd_tracking_infidelity(double tau, int n_steps, double cd_gain) {
  const LZModel base = LZModel::expansion(1000.0, 2500.0, tau);
  const LZModel model(base.bx(), base.bz(), cd_gain);
  const EvolutionSpec spec{model, DriveMode::STA, n_steps};
  CVector<2> psi = eigh(h0(model, 0.0)).vectors[0];
  double worst = 0.0;
  for_each_midpoint(spec, [&](int k, double t, double dt) {
    psi = expm_step(h_eff(model, t, DriveMode::STA), dt) * psi;
    const double t_end = std::min((k + 1) * dt, model.tau());
    const CVector<2> ground = eigh(h0(model, t_end)).vectors[0];
    // Overlap fidelity of two pure states is |<g|psi>|^2.
    worst = std::max(worst, 1.0 - std::norm(ground.dot(psi)));
  });
  return worst;
}

ValidationReport run_validation(const ValidationOptions &opts) {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(opts.seed);
  Collector c;
  check_core(c, rng, opts.threads > 0 ? opts.threads : resolve_threads());
  check_schedule(c, rng);
  check_model(c, rng);
  check_propagator(c, rng, opts);
  check_thermo(c, rng);
  check_engine(c, opts);

  ValidationReport report;
  report.results = c.take();
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

void print_report(std::ostream &os, const ValidationReport &report) {
  for (const auto &r : report.results) {
    os << fmt::format("[{}] {:<42} measured {:<11.4g} limit {:<9.3g} margin {:.3g}",
                      r.passed ? "PASS" : "FAIL", r.name, r.measured, r.threshold,
                      r.threshold - r.measured);
    if (!r.detail.empty())
      os << "  (" << r.detail << ')';
    os << '\n';
  }
  const auto failed = std::count_if(report.results.begin(), report.results.end(),
                                    [](const PropertyResult &r) { return !r.passed; });
  os << fmt::format("{} properties, {} failed, {:.2f} s\n", report.results.size(), failed,
                    report.seconds);
}

} // namespace qotto
