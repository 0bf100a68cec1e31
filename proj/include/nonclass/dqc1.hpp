#pragma once

#include <optional>

#include "nonclass/measures.hpp"
#include "nonclass/states.hpp"

namespace nonclass {

/// Closed-form summary for one DQC1 state.
struct Dqc1Report {
    std::size_t n = 0;
    double alpha = 0.0;
    double lnu_closed = 0.0;
    double lnu_upper = 0.0;       // alpha / 2^{n/2}
    double mid_closed = 0.0;
    double mid_asymptotic = 0.0;
    cplx tau;
    double phi = 0.0;             // arg tau (0 when degenerate)
    bool degenerate_reduction = false;  // |tau| <= 1e-12: numeric paths authoritative
};

/// Maximal LNU shift of the DQC1 state over the commutant of the top qubit:
/// (alpha/2^{(n+1)/2}) sqrt(1 - Re Tr(e^{-2i phi} U^2)/2^n). Throws
/// DegenerateReductionError when |tau| <= 1e-12 and no phi is supplied
/// (arg tau undefined, the commutant becomes all of SU(2)); the numeric
/// lnu_distance is authoritative there.
double dqc1_lnu_closed(const Dqc1State& state);
double dqc1_lnu_closed(const Dqc1State& state, double phi);

/// MID of the DQC1 state dephased in the reduced eigenbases, in closed form.
double dqc1_mid_closed(const Dqc1State& state);
double dqc1_mid_closed(const Dqc1State& state, double phi);

/// Large-n limit 1 - H2((1-alpha)/2), independent of n and U.
double dqc1_mid_asymptotic(double alpha);

/// Spectrum {(1 +/- alpha |d_j|)/2^{n+1}} of the dephased DQC1 state, with
/// the matching eigenvectors (A eigenbasis (x) computational on B).
Spectrum dqc1_spectrum_dephased(const Dqc1State& state);
Spectrum dqc1_spectrum_dephased(const Dqc1State& state, double phi);

Dqc1Report dqc1_report(const Dqc1State& state);

/// One row of a DQC1 parameter scan.
struct Dqc1ScanRow {
    double alpha = 0.0;
    std::uint64_t seed = 0;
    double mid_numeric = 0.0;     // general-purpose mid of the assembled state
    double mid_closed = 0.0;
    double mid_asymptotic = 0.0;
    double discord_numeric = 0.0; // measurement on the top qubit
    double lnu_closed = 0.0;
};

struct Dqc1ScanOptions {
    bool include_discord = true;
    OptimOptions optim;
    std::size_t threads = 0;  // 0 = available parallelism
};

/// Scan over (alpha, seed) pairs; one Haar unitary per seed, deterministic
/// per-point results independent of scheduling.
std::vector<Dqc1ScanRow> dqc1_scan(std::size_t n, const std::vector<double>& alphas,
                                   const std::vector<std::uint64_t>& seeds,
                                   const Dqc1ScanOptions& opt = {});

} // namespace nonclass
