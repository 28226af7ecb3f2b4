#include "curvedcs/figures.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "curvedcs/statistics.hpp"

namespace curvedcs {

namespace {

constexpr int kFigLevels[] = {10, 20, 30};
constexpr double kFigMu = 0.5;
constexpr double kSqueezeMu = 0.1;
constexpr int kSqueezeLevel = 10;
constexpr double kSqueezeLambdas[] = {0.0, 0.05, 0.1};

// dense part 0..10 in steps of 0.1, then a sparse tail out to the saturation
// regime; 0.5 and 1000 land on grid points exactly
std::vector<double> fig1_mu_grid() {
    std::vector<double> grid;
    grid.reserve(107);
    for (int i = 0; i <= 100; ++i) {
        grid.push_back(i / 10.0);
    }
    for (double mu : {20.0, 50.0, 100.0, 200.0, 500.0, 1000.0}) {
        grid.push_back(mu);
    }
    return grid;
}

std::vector<double> lambda_grid_21() {
    std::vector<double> grid;
    grid.reserve(21);
    for (int i = 0; i <= 20; ++i) {
        grid.push_back(i / 20.0);
    }
    return grid;
}

Table mean_vs_mu_table() {
    Table table;
    table.header = {"mu", "mean_n10", "mean_n20", "mean_n30"};
    for (double mu : fig1_mu_grid()) {
        std::vector<double> row{mu};
        for (int n_level : kFigLevels) {
            row.push_back(mean_photon(coherent_flat(mu, n_level)));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

Table sphere_vs_lambda_table(bool mandel_column) {
    Table table;
    table.header = {"lambda"};
    for (int n_level : kFigLevels) {
        table.header.push_back((mandel_column ? "mandel_n" : "mean_n") + std::to_string(n_level));
    }
    for (double lambda : lambda_grid_21()) {
        std::vector<double> row{lambda};
        for (int n_level : kFigLevels) {
            const CoherentState state = coherent_sphere(kFigMu, SurfaceSpec(lambda, n_level));
            row.push_back(mandel_column ? mandel(state).value() : mean_photon(state));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

Table squeeze_table(QuadKind kind, int which) {
    const char* base = kind == QuadKind::nondeformed ? (which == 1 ? "s1a" : "s2a")
                                                     : (which == 1 ? "s1A" : "s2A");
    Table table;
    table.header = {"phi"};
    for (const char* tag : {"_lambda0", "_lambda0.05", "_lambda0.1"}) {
        table.header.push_back(std::string(base) + tag);
    }

    const std::vector<double> phases = default_phase_grid();
    std::vector<SqueezeCurve> curves;
    for (double lambda : kSqueezeLambdas) {
        const CoherentState state = coherent_sphere(kSqueezeMu, SurfaceSpec(lambda, kSqueezeLevel));
        curves.push_back(kind == QuadKind::nondeformed ? squeeze_nondeformed(state, phases)
                                                       : squeeze_deformed(state, phases));
    }
    for (std::size_t i = 0; i < phases.size(); ++i) {
        std::vector<double> row{phases[i]};
        for (const SqueezeCurve& curve : curves) {
            row.push_back(which == 1 ? curve.s1[i] : curve.s2[i]);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace

std::optional<FigureId> parse_figure_id(std::string_view name) {
    if (name == "fig1") return FigureId::fig1;
    if (name == "fig2") return FigureId::fig2;
    if (name == "fig3") return FigureId::fig3;
    if (name == "fig4a") return FigureId::fig4a;
    if (name == "fig4b") return FigureId::fig4b;
    if (name == "fig5a") return FigureId::fig5a;
    if (name == "fig5b") return FigureId::fig5b;
    return std::nullopt;
}

const char* to_string(FigureId id) {
    switch (id) {
        case FigureId::fig1: return "fig1";
        case FigureId::fig2: return "fig2";
        case FigureId::fig3: return "fig3";
        case FigureId::fig4a: return "fig4a";
        case FigureId::fig4b: return "fig4b";
        case FigureId::fig5a: return "fig5a";
        case FigureId::fig5b: return "fig5b";
    }
    throw std::invalid_argument("to_string: bad FigureId");
}

Table figure_table(FigureId id) {
    switch (id) {
        case FigureId::fig1: return mean_vs_mu_table();
        case FigureId::fig2: return sphere_vs_lambda_table(false);
        case FigureId::fig3: return sphere_vs_lambda_table(true);
        case FigureId::fig4a: return squeeze_table(QuadKind::nondeformed, 1);
        case FigureId::fig4b: return squeeze_table(QuadKind::nondeformed, 2);
        case FigureId::fig5a: return squeeze_table(QuadKind::deformed, 1);
        case FigureId::fig5b: return squeeze_table(QuadKind::deformed, 2);
    }
    throw std::invalid_argument("figure_table: bad FigureId");
}

Table sweep_table(const SweepConfig& config) {
    if (config.n_levels.empty() || config.lambdas.empty() || config.mus.empty()) {
        throw std::invalid_argument("sweep_table: every grid must be nonempty");
    }
    if (config.phase_points < 2) {
        throw std::invalid_argument("sweep_table: phase_points must be >= 2");
    }

    std::vector<double> phases(config.phase_points);
    for (int i = 0; i < config.phase_points; ++i) {
        phases[i] = 2.0 * std::numbers::pi * i / (config.phase_points - 1.0);
    }

    Table table;
    table.header = {"n_max",   "lambda",  "mu",      "mean_n",  "variance_n",
                    "mandel_m", "min_s1a", "min_s2a", "min_s1A", "min_s2A"};
    for (int n_level : config.n_levels) {
        for (double lambda : config.lambdas) {
            for (double mu : config.mus) {
                const CoherentState state = coherent_sphere(mu, SurfaceSpec(lambda, n_level));
                const StatsReport stats = make_stats(state);
                const SqueezeCurve plain = squeeze_nondeformed(state, phases);
                const SqueezeCurve deformed = squeeze_deformed(state, phases);
                table.rows.push_back(
                    {static_cast<double>(n_level), lambda, mu, stats.mean_n, stats.variance_n,
                     stats.mandel_m.value_or(std::numeric_limits<double>::quiet_NaN()),
                     min_value(plain.s1), min_value(plain.s2), min_value(deformed.s1),
                     min_value(deformed.s2)});
            }
        }
    }
    return table;
}

}  // namespace curvedcs
