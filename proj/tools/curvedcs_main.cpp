// Command-line front end: figure-data CSV emission, single-state statistics,
// (n_max, lambda, mu) sweeps and the self-check suite.
//
// Exit status: 0 success, 1 invariant breach (verify), 2 configuration error.

#include <cstdlib>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "curvedcs/csv.hpp"
#include "curvedcs/figures.hpp"
#include "curvedcs/statistics.hpp"
#include "curvedcs/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBreach = 1;
constexpr int kExitConfig = 2;

std::string default_output_path(const std::string& stem) {
    const char* dir = std::getenv("CURVEDCS_OUT_DIR");
    if (dir == nullptr || *dir == '\0') {
        return stem + ".csv";
    }
    return (std::filesystem::path(dir) / (stem + ".csv")).string();
}

struct FigureArgs {
    std::string id;
    std::string out;
};

int run_figure_command(const FigureArgs& args) {
    const auto id = curvedcs::parse_figure_id(args.id);
    if (!id) {
        std::cerr << "error: unknown figure id '" << args.id
                  << "' (expected fig1, fig2, fig3, fig4a, fig4b, fig5a, fig5b)\n";
        return kExitConfig;
    }
    const std::string path = args.out.empty() ? default_output_path(args.id) : args.out;
    curvedcs::write_csv_file(path, curvedcs::figure_table(*id));
    std::cout << "wrote " << path << "\n";
    return kExitOk;
}

struct StatsArgs {
    std::string flavor = "flat";
    int n_max = 10;
    double lambda = 0.0;
    double mu_re = 1.0;
    double mu_im = 0.0;
};

int run_stats_command(const StatsArgs& args) {
    const curvedcs::Complex mu(args.mu_re, args.mu_im);
    curvedcs::CoherentState state =
        args.flavor == "flat"
            ? curvedcs::coherent_flat(mu, args.n_max)
            : curvedcs::coherent_sphere(mu, curvedcs::SurfaceSpec(args.lambda, args.n_max));
    const curvedcs::StatsReport report = curvedcs::make_stats(state);

    std::cout << "flavor: " << curvedcs::to_string(report.flavor) << "\n"
              << "n_max: " << report.spec.n_max << "\n"
              << "lambda: " << curvedcs::format_value(report.spec.lambda) << "\n"
              << "mu: " << curvedcs::format_value(args.mu_re) << " + "
              << curvedcs::format_value(args.mu_im) << "i\n"
              << "mean_n: " << curvedcs::format_value(report.mean_n) << "\n"
              << "variance_n: " << curvedcs::format_value(report.variance_n) << "\n";
    if (report.mandel_m) {
        std::cout << "mandel_m: " << curvedcs::format_value(*report.mandel_m) << "\n";
    } else {
        std::cout << "mandel_m: undefined (vacuum)\n";
    }
    std::cout << "truncation_weight: " << curvedcs::format_value(report.truncation_weight)
              << "\n\n";

    curvedcs::Table table;
    table.header = {"n", "p"};
    for (int n = 0; n < report.pn.size(); ++n) {
        table.rows.push_back({static_cast<double>(n), report.pn(n)});
    }
    curvedcs::write_csv(std::cout, table);
    return kExitOk;
}

struct SweepArgs {
    std::vector<int> n_levels;
    std::vector<double> lambdas;
    std::vector<double> mus;
    int phi_points = 721;
    std::string out;
};

int run_sweep_command(const SweepArgs& args) {
    const curvedcs::SweepConfig config{args.n_levels, args.lambdas, args.mus, args.phi_points};
    const std::string path = args.out.empty() ? default_output_path("sweep") : args.out;
    curvedcs::write_csv_file(path, curvedcs::sweep_table(config));
    std::cout << "wrote " << path << "\n";
    return kExitOk;
}

struct VerifyArgs {
    int n_max_max = 20;
    std::vector<double> lambdas{0.0, 0.1, 1.0};
    double tol = 0.0;
    double g_fault = 0.0;
};

int run_verify_command(const VerifyArgs& args) {
    curvedcs::VerifyOptions options;
    options.n_max_max = args.n_max_max;
    options.lambdas = args.lambdas;
    if (args.tol > 0.0) {
        options.tol_override = args.tol;
    }
    options.g_fault = args.g_fault;

    const curvedcs::VerifyReport report = curvedcs::run_verify(options);
    curvedcs::print_verify(std::cout, report, options);
    return report.all_pass() ? kExitOk : kExitBreach;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"deformed-oscillator coherent states on the plane and the sphere"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read defaults from an INI/TOML file");

    FigureArgs figure_args;
    CLI::App* figure = app.add_subcommand("figure", "emit one figure data set as CSV");
    figure->add_option("id", figure_args.id, "fig1|fig2|fig3|fig4a|fig4b|fig5a|fig5b")
        ->required();
    figure->add_option("--out", figure_args.out, "output path (default <id>.csv)");

    StatsArgs stats_args;
    CLI::App* stats = app.add_subcommand("stats", "photon statistics of one coherent state");
    stats->add_option("--flavor", stats_args.flavor, "flat|sphere")
        ->check(CLI::IsMember({"flat", "sphere"}))
        ->capture_default_str();
    stats->add_option("--n-max", stats_args.n_max, "top occupation number N")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    stats->add_option("--lambda", stats_args.lambda, "curvature (sphere flavor)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    stats->add_option("--mu", stats_args.mu_re, "Re(mu)")->capture_default_str();
    stats->add_option("--mu-imag", stats_args.mu_im, "Im(mu)")->capture_default_str();

    SweepArgs sweep_args;
    CLI::App* sweep = app.add_subcommand("sweep", "Cartesian (n_max, lambda, mu) sweep to CSV");
    sweep->add_option("--n-max", sweep_args.n_levels, "list of N values")
        ->required()
        ->delimiter(',');
    sweep->add_option("--lambda", sweep_args.lambdas, "list of curvatures")
        ->required()
        ->delimiter(',');
    sweep->add_option("--mu", sweep_args.mus, "list of mu values")->required()->delimiter(',');
    sweep->add_option("--phi-points", sweep_args.phi_points, "phase-grid size")
        ->check(CLI::Range(2, 100000))
        ->capture_default_str();
    sweep->add_option("--out", sweep_args.out, "output path (default sweep.csv)");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "run the invariant self-check suite");
    verify->add_option("--n-max-max", verify_args.n_max_max, "largest N exercised")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    verify->add_option("--lambda", verify_args.lambdas, "curvature grid")->delimiter(',');
    verify->add_option("--tol", verify_args.tol, "override every check tolerance");
    verify->add_option("--inject-g-fault", verify_args.g_fault,
                       "test hook: perturb g inside the factorization check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (figure->parsed()) {
            return run_figure_command(figure_args);
        }
        if (stats->parsed()) {
            return run_stats_command(stats_args);
        }
        if (sweep->parsed()) {
            return run_sweep_command(sweep_args);
        }
        return run_verify_command(verify_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
}
