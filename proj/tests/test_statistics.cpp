#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "curvedcs/algebra.hpp"
#include "curvedcs/statistics.hpp"

using namespace curvedcs;

namespace {

double binomial_p(double mu_abs) { return mu_abs * mu_abs / (1.0 + mu_abs * mu_abs); }

CoherentState vacuum_state(const SurfaceSpec& spec, Flavor flavor) {
    return {FockVector::basis_state(spec, 0), Complex(0.0, 0.0), flavor};
}

}  // namespace

TEST_CASE("photon distribution") {
    const CoherentState vac = coherent_flat(0.0, 9);
    CHECK(photon_distribution(vac)(0) == 1.0);

    // flat, N=10, mu=1: binomial with p = 1/2
    const CoherentState cs = coherent_flat(1.0, 10);
    const Eigen::VectorXd pn = photon_distribution(cs);
    for (int n = 0; n <= 10; ++n) {
        CHECK(pn(n) == doctest::Approx(binomial(10, n) / 1024.0).epsilon(1e-12));
    }
    CHECK(std::abs(pn.sum() - 1.0) < 1e-12);

    const CoherentState sphere_zero = coherent_sphere(1.0, SurfaceSpec(0.0, 10));
    CHECK((photon_distribution(sphere_zero) - pn).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("distribution sums to one everywhere") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> angle(0.0, 6.28);
    for (double lambda : {0.0, 0.3, 1.0}) {
        for (int n_level : {1, 14, 50}) {
            for (double mu_abs : {0.2, 1.0, 8.0}) {
                const CoherentState cs = coherent_sphere(std::polar(mu_abs, angle(rng)),
                                                         SurfaceSpec(lambda, n_level));
                CHECK(std::abs(photon_distribution(cs).sum() - 1.0) < 1e-12);
            }
        }
    }
}

TEST_CASE("mean photon number: flat closed forms") {
    CHECK(mean_photon(coherent_flat(1.0, 10)) == doctest::Approx(5.0).epsilon(1e-10));

    // saturation toward the space dimension
    for (int n_level : {10, 20, 30}) {
        const double mean = mean_photon(coherent_flat(1e3, n_level));
        CHECK(std::abs(mean - n_level) < 1e-4 * n_level);
    }

    for (double mu : {0.1, 0.5, 2.0}) {
        for (int n_level : {5, 25}) {
            const double p = binomial_p(mu);
            CHECK(mean_photon(coherent_flat(mu, n_level)) ==
                  doctest::Approx(n_level * p).epsilon(1e-10));
            CHECK(variance_photon(coherent_flat(mu, n_level)) ==
                  doctest::Approx(n_level * p * (1.0 - p)).epsilon(1e-10));
        }
    }
}

TEST_CASE("sphere mean grows with curvature") {
    for (int n_level : {10, 20, 30}) {
        double previous = -1.0;
        for (int i = 0; i <= 20; ++i) {
            const double lambda = i / 20.0;
            const double mean =
                mean_photon(coherent_sphere(0.5, SurfaceSpec(lambda, n_level)));
            CHECK(mean > previous);
            previous = mean;
        }
    }
}

TEST_CASE("mandel parameter") {
    // closed form M = -p for the flat flavor, independent of N
    for (int n_level : {5, 10, 40}) {
        const auto m = mandel(coherent_flat(0.5, n_level));
        REQUIRE(m.has_value());
        CHECK(*m == doctest::Approx(-0.2).epsilon(1e-10));
    }

    std::mt19937 rng(7);
    std::uniform_real_distribution<double> mu_dist(0.05, 6.0);
    for (int trial = 0; trial < 30; ++trial) {
        const auto m = mandel(coherent_flat(mu_dist(rng), 17));
        REQUIRE(m.has_value());
        CHECK(*m > -1.0);
        CHECK(*m < 0.0);
    }

    CHECK_FALSE(mandel(coherent_flat(0.0, 8)).has_value());

    // more negative with curvature
    for (int n_level : {10, 20, 30}) {
        double previous = 1.0;
        for (double lambda : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            const auto m = mandel(coherent_sphere(0.5, SurfaceSpec(lambda, n_level)));
            REQUIRE(m.has_value());
            CHECK(*m < previous);
            CHECK(*m < 0.0);
            previous = *m;
        }
    }
}

TEST_CASE("matrix path agrees with the distribution path") {
    for (double lambda : {0.0, 0.4}) {
        const SurfaceSpec spec(lambda, 21);
        const CoherentState cs = coherent_sphere(Complex(0.9, 0.5), spec);
        const OperatorMatrix number = build_number(spec);
        const OperatorMatrix number_sq(number.mat * number.mat, spec, "n^2");
        const double mean = expectation(cs.vector, number).real();
        const double second = expectation(cs.vector, number_sq).real();
        CHECK(mean == doctest::Approx(mean_photon(cs)).epsilon(1e-12));
        CHECK(second - mean * mean == doctest::Approx(variance_photon(cs)).epsilon(1e-10));
    }
}

TEST_CASE("stats report") {
    const CoherentState cs = coherent_sphere(0.5, SurfaceSpec(0.2, 10));
    const StatsReport report = make_stats(cs);
    CHECK(report.mean_n == mean_photon(cs));
    CHECK(report.variance_n >= 0.0);
    CHECK(report.mandel_m.has_value());
    CHECK(report.pn.size() == 11);
    CHECK(report.truncation_weight == doctest::Approx(11.0 * report.pn(10)).epsilon(1e-15));

    const StatsReport vac = make_stats(coherent_flat(0.0, 4));
    CHECK_FALSE(vac.mandel_m.has_value());
}

TEST_CASE("vacuum squeezing baselines") {
    const std::vector<double> phases = default_phase_grid();
    for (double lambda : {0.0, 0.3, 1.0}) {
        const SurfaceSpec spec(lambda, 10);
        for (Flavor flavor : {Flavor::flat, Flavor::sphere}) {
            const CoherentState vac = vacuum_state(spec, flavor);
            for (const SqueezeCurve& curve :
                 {squeeze_nondeformed(vac, phases), squeeze_deformed(vac, phases)}) {
                for (std::size_t i = 0; i < phases.size(); ++i) {
                    CHECK(std::abs(curve.s1[i]) < 1e-12);
                    CHECK(std::abs(curve.s2[i]) < 1e-12);
                }
            }
        }
    }
}

TEST_CASE("quadrature pair phase relation") {
    // s1(phi) = s2(phi + pi/2): 180 grid steps on the default grid
    const CoherentState cs = coherent_sphere(0.8, SurfaceSpec(0.4, 12));
    const std::vector<double> phases = default_phase_grid();
    for (const SqueezeCurve& curve :
         {squeeze_nondeformed(cs, phases), squeeze_deformed(cs, phases)}) {
        for (std::size_t i = 0; i + 180 < phases.size(); ++i) {
            CHECK(std::abs(curve.s1[i] - curve.s2[i + 180]) < 1e-10);
        }
    }
}

TEST_CASE("squeezing curves are 2pi periodic and pi periodic") {
    const CoherentState cs = coherent_sphere(Complex(0.3, 0.2), SurfaceSpec(0.15, 10));
    const std::vector<double> phases = default_phase_grid();
    const SqueezeCurve curve = squeeze_deformed(cs, phases);
    CHECK(std::abs(curve.s1.front() - curve.s1.back()) < 1e-12);  // S(0) vs S(2pi)
    CHECK(std::abs(curve.s2.front() - curve.s2.back()) < 1e-12);
    for (std::size_t i = 0; i + 360 < phases.size(); ++i) {
        CHECK(std::abs(curve.s1[i] - curve.s1[i + 360]) < 1e-12);
    }
}

TEST_CASE("squeezing deepens with curvature") {
    const std::vector<double> phases = default_phase_grid();
    double prev_plain = 1.0;
    double prev_deformed = 1.0;
    for (double lambda : {0.0, 0.05, 0.1}) {
        const CoherentState cs = coherent_sphere(0.1, SurfaceSpec(lambda, 10));
        const double plain = min_value(squeeze_nondeformed(cs, phases).s1);
        const double deformed = min_value(squeeze_deformed(cs, phases).s1);
        CHECK(plain < prev_plain);
        CHECK(deformed < prev_deformed);
        CHECK(deformed <= plain);
        prev_plain = plain;
        prev_deformed = deformed;
    }
}

TEST_CASE("commutator expectation computed two ways") {
    for (double lambda : {0.0, 0.7}) {
        const SurfaceSpec spec(lambda, 20);
        const CoherentState cs = coherent_sphere(1.3, spec);
        const LadderPair ladder = build_ladder(spec, Flavor::sphere);
        const double matrix_route = ladder_commutator_expectation(cs, ladder);

        const Eigen::VectorXd pn = photon_distribution(cs);
        double diagonal_route = 0.0;
        for (int n = 0; n <= 20; ++n) {
            const double above = n < 20 ? phi_sphere(spec, n + 1) : 0.0;
            diagonal_route += pn(n) * (above - phi_sphere(spec, n));
        }
        CHECK(matrix_route == doctest::Approx(diagonal_route).epsilon(1e-10));
    }
}

TEST_CASE("uncertainty product bound") {
    const std::vector<double> phases = default_phase_grid();
    for (double lambda : {0.0, 0.05, 0.1, 1.0}) {
        const SurfaceSpec spec(lambda, 10);
        const CoherentState cs = coherent_sphere(0.9, spec);
        const LadderPair ladder = build_ladder(spec, Flavor::sphere);
        const double comm = ladder_commutator_expectation(cs, ladder);
        const SqueezeCurve curve = squeeze_deformed(cs, phases);
        for (std::size_t i = 0; i < phases.size(); ++i) {
            const double var1 = 0.25 * (curve.s1[i] + comm);
            const double var2 = 0.25 * (curve.s2[i] + comm);
            CHECK(var1 * var2 >= comm * comm / 16.0 - 1e-12);
        }
    }
}
