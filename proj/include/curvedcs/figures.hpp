#pragma once

#include <optional>
#include <string_view>

#include "curvedcs/csv.hpp"
#include "curvedcs/surface.hpp"

namespace curvedcs {

// Line-plot data sets, one CSV per figure:
//   fig1        mean photon number of the flat state vs mu, N in {10,20,30}
//   fig2        mean photon number of the sphere state vs lambda, mu = 0.5
//   fig3        Mandel parameter vs lambda, mu = 0.5
//   fig4a/fig4b nondeformed squeezing S1/S2 vs phase, N=10, mu=0.1,
//               lambda in {0, 0.05, 0.1}
//   fig5a/fig5b deformed squeezing, same grid
enum class FigureId { fig1, fig2, fig3, fig4a, fig4b, fig5a, fig5b };

std::optional<FigureId> parse_figure_id(std::string_view name);
const char* to_string(FigureId id);

Table figure_table(FigureId id);

// Cartesian sweep over (n_max, lambda, mu) of the sphere-flavor state
// (lambda = 0 rows coincide with the flat flavor). One row per grid point in
// nested n_max -> lambda -> mu order with mean, variance, Mandel parameter
// and the phase minima of all four squeezing indices.
struct SweepConfig {
    std::vector<int> n_levels;
    std::vector<double> lambdas;
    std::vector<double> mus;
    int phase_points = 721;
};

Table sweep_table(const SweepConfig& config);

}  // namespace curvedcs
