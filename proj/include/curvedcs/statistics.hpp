#pragma once

#include <optional>
#include <span>
#include <vector>

#include "curvedcs/coherent.hpp"

namespace curvedcs {

// Photon-number statistics and phase-swept quadrature squeezing of the
// coherent states. All expectation values go through the operator matrices;
// closed binomial forms exist for the flat flavor and serve as test oracles.

Eigen::VectorXd photon_distribution(const CoherentState& state);

double mean_photon(const CoherentState& state);
double variance_photon(const CoherentState& state);

// (variance - mean) / mean; empty for the vacuum (mean = 0), where the
// parameter is undefined.
std::optional<double> mandel(const CoherentState& state);

struct StatsReport {
    SurfaceSpec spec;
    Complex mu;
    Flavor flavor;
    Eigen::VectorXd pn;
    double mean_n = 0.0;
    double variance_n = 0.0;
    std::optional<double> mandel_m;
    // weight sitting on the top level times its would-be raising strength;
    // measures how much the truncated-boson convention can bias <a a^+> etc.
    double truncation_weight = 0.0;
};

StatsReport make_stats(const CoherentState& state);

// ------------------------------ squeezing -----------------------------------

enum class QuadKind { nondeformed, deformed };

// S_1(phase) and S_2(phase) on a phase grid. For the quadrature pair built
// from one ladder pair, s1[phi] = s2[phi + pi/2] identically.
struct SqueezeCurve {
    std::vector<double> phase;
    std::vector<double> s1;
    std::vector<double> s2;
    QuadKind kind = QuadKind::nondeformed;
};

// Default grid: 721 points covering [0, 2*pi] in quarter-degree steps.
std::vector<double> default_phase_grid();

// S_i = 4 (Delta X_i)^2 - 1 with the truncated boson quadratures.
SqueezeCurve squeeze_nondeformed(const CoherentState& state,
                                 std::span<const double> phase_grid);

// S_i = 4 (Delta X_i)^2 - <[A, A^+]> with the deformed quadratures of the
// state's flavor; the top-level structure value phi(n_max + 1) = 0 enters
// through the truncated matrices themselves.
SqueezeCurve squeeze_deformed(const CoherentState& state,
                              std::span<const double> phase_grid);

double min_value(std::span<const double> values);

// <[L, L^+]> evaluated from the matrices; the diagonal route
// sum_n P(n) (phi(n+1) - phi(n)) must agree and is used as a test oracle.
double ladder_commutator_expectation(const CoherentState& state, const LadderPair& ladder);

}  // namespace curvedcs
