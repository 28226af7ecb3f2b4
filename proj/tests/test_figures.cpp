#include <cmath>
#include <cstdlib>
#include <string>

#include <doctest.h>

#include "curvedcs/csv.hpp"
#include "curvedcs/figures.hpp"
#include "curvedcs/statistics.hpp"
#include "curvedcs/verify.hpp"

using namespace curvedcs;

TEST_CASE("figure id parsing") {
    CHECK(parse_figure_id("fig1") == FigureId::fig1);
    CHECK(parse_figure_id("fig4b") == FigureId::fig4b);
    CHECK_FALSE(parse_figure_id("fig6").has_value());
    CHECK_FALSE(parse_figure_id("").has_value());
    CHECK(std::string(to_string(FigureId::fig5a)) == "fig5a");
}

TEST_CASE("fig1: saturation row at mu = 1000") {
    const Table table = figure_table(FigureId::fig1);
    REQUIRE(table.header ==
            std::vector<std::string>{"mu", "mean_n10", "mean_n20", "mean_n30"});
    const std::vector<double>& last = table.rows.back();
    CHECK(last[0] == 1000.0);
    CHECK(std::abs(last[1] - 10.0) < 0.01 * 10.0);
    CHECK(std::abs(last[2] - 20.0) < 0.01 * 20.0);
    CHECK(std::abs(last[3] - 30.0) < 0.01 * 30.0);

    // mean grows monotonically with mu
    for (std::size_t i = 1; i < table.rows.size(); ++i) {
        CHECK(table.rows[i][1] > table.rows[i - 1][1]);
    }
}

TEST_CASE("fig2 at lambda = 0 equals fig1 at mu = 0.5") {
    const Table fig1 = figure_table(FigureId::fig1);
    const Table fig2 = figure_table(FigureId::fig2);
    const std::vector<double>* fig1_row = nullptr;
    for (const auto& row : fig1.rows) {
        if (row[0] == 0.5) {
            fig1_row = &row;
        }
    }
    REQUIRE(fig1_row != nullptr);
    REQUIRE(fig2.rows.front()[0] == 0.0);
    for (int col = 1; col <= 3; ++col) {
        CHECK(fig2.rows.front()[col] == (*fig1_row)[col]);
    }
}

TEST_CASE("fig2/fig3 monotone in lambda") {
    const Table fig2 = figure_table(FigureId::fig2);
    const Table fig3 = figure_table(FigureId::fig3);
    REQUIRE(fig2.rows.size() == 21);
    REQUIRE(fig3.rows.size() == 21);
    for (std::size_t i = 1; i < 21; ++i) {
        for (int col = 1; col <= 3; ++col) {
            CHECK(fig2.rows[i][col] > fig2.rows[i - 1][col]);
            CHECK(fig3.rows[i][col] < fig3.rows[i - 1][col]);
        }
    }
    for (const auto& row : fig3.rows) {
        for (int col = 1; col <= 3; ++col) {
            CHECK(row[col] < 0.0);
        }
    }
}

TEST_CASE("fig4/fig5 minima deepen with lambda, deformed below nondeformed") {
    const Table fig4a = figure_table(FigureId::fig4a);
    const Table fig5a = figure_table(FigureId::fig5a);
    REQUIRE(fig4a.rows.size() == 721);

    auto column_min = [](const Table& t, int col) {
        double best = t.rows[0][col];
        for (const auto& row : t.rows) {
            best = std::min(best, row[col]);
        }
        return best;
    };
    double prev4 = 1.0;
    double prev5 = 1.0;
    for (int col = 1; col <= 3; ++col) {
        const double m4 = column_min(fig4a, col);
        const double m5 = column_min(fig5a, col);
        CHECK(m4 < prev4);
        CHECK(m5 < prev5);
        CHECK(m5 <= m4);
        prev4 = m4;
        prev5 = m5;
    }
}

TEST_CASE("csv formatting") {
    CHECK(format_value(0.5) == "0.5");
    CHECK(format_value(1000.0) == "1000");

    // 17 significant digits round-trip
    for (double x : {0.1, 1.0 / 3.0, 6.02214076e23, -2.5e-13}) {
        CHECK(std::strtod(format_value(x).c_str(), nullptr) == x);
    }

    Table table;
    table.header = {"a", "b"};
    table.rows = {{1.0, 0.25}, {2.0, -0.5}};
    CHECK(to_csv(table) == "a,b\n1,0.25\n2,-0.5\n");
}

TEST_CASE("sweep table") {
    SweepConfig config;
    config.n_levels = {5, 10};
    config.lambdas = {0.0, 0.3};
    config.mus = {0.5, 1.0, 2.0};
    config.phase_points = 181;
    const Table table = sweep_table(config);
    CHECK(table.rows.size() == 2 * 2 * 3);

    // deterministic rendering, byte for byte
    CHECK(to_csv(table) == to_csv(sweep_table(config)));

    // a single-point sweep agrees with calling the statistics layer directly
    SweepConfig point;
    point.n_levels = {10};
    point.lambdas = {0.3};
    point.mus = {0.5};
    point.phase_points = 181;
    const Table single = sweep_table(point);
    REQUIRE(single.rows.size() == 1);
    const CoherentState cs = coherent_sphere(0.5, SurfaceSpec(0.3, 10));
    CHECK(single.rows[0][3] == mean_photon(cs));
    CHECK(single.rows[0][4] == variance_photon(cs));
    CHECK(single.rows[0][5] == mandel(cs).value());

    // flat rows match the binomial closed forms
    for (const auto& row : table.rows) {
        if (row[1] == 0.0) {
            const double n_level = row[0];
            const double mu = row[2];
            const double q = mu * mu / (1.0 + mu * mu);
            CHECK(row[3] == doctest::Approx(n_level * q).epsilon(1e-10));
            CHECK(row[4] == doctest::Approx(n_level * q * (1.0 - q)).epsilon(1e-10));
            CHECK(row[5] == doctest::Approx(-q).epsilon(1e-10));
        }
    }
    (void)p;

    SweepConfig empty;
    CHECK_THROWS_AS(sweep_table(empty), std::invalid_argument);
}

TEST_CASE("verify suite passes at defaults and fails under fault injection") {
    VerifyOptions options;
    options.n_max_max = 10;  // trimmed grid keeps the unit run quick
    const VerifyReport report = run_verify(options);
    for (const CheckResult& check : report.checks) {
        INFO(check.name, " worst=", check.worst, " tol=", check.tol);
        CHECK(check.pass);
    }
    CHECK(report.all_pass());

    // the h-residual table is informational: present, and exact at lambda = 0
    bool has_zero_lambda = false;
    for (const ClosureResidualRow& row : report.su2_residuals) {
        if (row.lambda == 0.0) {
            has_zero_lambda = true;
            CHECK(row.residual < 1e-12);
        }
    }
    CHECK(has_zero_lambda);

    VerifyOptions faulty = options;
    faulty.g_fault = 1e-3;
    const VerifyReport broken = run_verify(faulty);
    CHECK_FALSE(broken.all_pass());
    bool factorization_failed = false;
    for (const CheckResult& check : broken.checks) {
        if (!check.pass) {
            factorization_failed =
                check.name.find("factorization") != std::string::npos;
        }
    }
    CHECK(factorization_failed);  // the breached invariant is named
}
