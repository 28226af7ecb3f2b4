#include "curvedcs/statistics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "curvedcs/algebra.hpp"

namespace curvedcs {

namespace {

struct KahanSum {
    double sum = 0.0;
    double comp = 0.0;
    void add(double term) {
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

// The five ladder expectations every squeezing curve needs. The phase
// dependence is analytic once these are known.
struct LadderMoments {
    Complex e_low;     // <L>
    Complex e_low2;    // <L^2>
    double e_up_low;   // <L^+ L>
    double e_low_up;   // <L L^+>
};

LadderMoments ladder_moments(const CoherentState& state, const LadderPair& ladder) {
    const FockVector& v = state.vector;
    LadderMoments m;
    m.e_low = expectation(v, ladder.lower);
    m.e_low2 = v.amps.dot(ladder.lower.mat * (ladder.lower.mat * v.amps));
    m.e_up_low = expectation(v, OperatorMatrix(ladder.raise.mat * ladder.lower.mat,
                                               v.spec, "LdagL")).real();
    m.e_low_up = expectation(v, OperatorMatrix(ladder.lower.mat * ladder.raise.mat,
                                               v.spec, "LLdag")).real();
    return m;
}

SqueezeCurve sweep_phases(const LadderMoments& m, std::span<const double> phase_grid,
                          QuadKind kind) {
    SqueezeCurve curve;
    curve.kind = kind;
    curve.phase.assign(phase_grid.begin(), phase_grid.end());
    curve.s1.reserve(phase_grid.size());
    curve.s2.reserve(phase_grid.size());

    const double symmetric = m.e_low_up + m.e_up_low;
    // nondeformed bound is the boson commutator (= 1); deformed bound is <[A, A^+]>
    const double floor = kind == QuadKind::nondeformed ? 1.0 : m.e_low_up - m.e_up_low;

    for (double phase : phase_grid) {
        const Complex rot = std::polar(1.0, phase);
        const Complex rot2 = std::polar(1.0, 2.0 * phase);
        const double mean1 = (m.e_low * rot).real();
        const double mean2 = (m.e_low * rot).imag();
        const double paired = 2.0 * (m.e_low2 * rot2).real();
        const double var1 = 0.25 * (paired + symmetric) - mean1 * mean1;
        const double var2 = 0.25 * (symmetric - paired) - mean2 * mean2;
        curve.s1.push_back(4.0 * var1 - floor);
        curve.s2.push_back(4.0 * var2 - floor);
    }
    return curve;
}

}  // namespace

Eigen::VectorXd photon_distribution(const CoherentState& state) {
    return state.vector.amps.cwiseAbs2();
}

double mean_photon(const CoherentState& state) {
    const Eigen::VectorXd pn = photon_distribution(state);
    KahanSum mean;
    for (int n = 0; n < pn.size(); ++n) {
        mean.add(n * pn(n));
    }
    return mean.sum;
}

double variance_photon(const CoherentState& state) {
    const Eigen::VectorXd pn = photon_distribution(state);
    const double mean = mean_photon(state);
    KahanSum var;
    for (int n = 0; n < pn.size(); ++n) {
        const double d = n - mean;
        var.add(d * d * pn(n));
    }
    return var.sum;
}

std::optional<double> mandel(const CoherentState& state) {
    const double mean = mean_photon(state);
    if (mean <= 0.0) {
        return std::nullopt;  // undefined for the vacuum
    }
    return (variance_photon(state) - mean) / mean;
}

StatsReport make_stats(const CoherentState& state) {
    StatsReport report{state.spec(), state.mu, state.flavor,
                       photon_distribution(state), 0.0, 0.0, std::nullopt, 0.0};
    report.mean_n = mean_photon(state);
    report.variance_n = variance_photon(state);
    report.mandel_m = mandel(state);
    const int top = state.spec().n_max;
    report.truncation_weight = (top + 1.0) * report.pn(top);
    return report;
}

std::vector<double> default_phase_grid() {
    std::vector<double> grid(721);
    for (int i = 0; i < 721; ++i) {
        grid[i] = 2.0 * std::numbers::pi * i / 720.0;
    }
    return grid;
}

SqueezeCurve squeeze_nondeformed(const CoherentState& state,
                                 std::span<const double> phase_grid) {
    const LadderPair boson = build_boson_ladder(state.spec());
    return sweep_phases(ladder_moments(state, boson), phase_grid, QuadKind::nondeformed);
}

SqueezeCurve squeeze_deformed(const CoherentState& state,
                              std::span<const double> phase_grid) {
    const LadderPair ladder = build_ladder(state.spec(), state.flavor);
    return sweep_phases(ladder_moments(state, ladder), phase_grid, QuadKind::deformed);
}

double min_value(std::span<const double> values) {
    if (values.empty()) {
        throw std::invalid_argument("min_value: empty range");
    }
    double best = values[0];
    for (double v : values) {
        best = std::min(best, v);
    }
    return best;
}

double ladder_commutator_expectation(const CoherentState& state, const LadderPair& ladder) {
    const LadderMoments m = ladder_moments(state, ladder);
    return m.e_low_up - m.e_up_low;
}

}  // namespace curvedcs
