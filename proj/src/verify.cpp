#include "curvedcs/verify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>

#include <Eigen/Dense>

#include "curvedcs/algebra.hpp"
#include "curvedcs/coherent.hpp"
#include "curvedcs/fock.hpp"
#include "curvedcs/resolution.hpp"
#include "curvedcs/statistics.hpp"

namespace curvedcs {

namespace {

using LongMatrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;

// The ladder, number and su(2) matrices are real; promote to long double for
// the commutator products.
LongMatrix widen(const Matrix& m) {
    LongMatrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            out(i, j) = static_cast<long double>(m(i, j).real());
        }
    }
    return out;
}

double max_abs(const LongMatrix& m) {
    long double worst = 0.0L;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            worst = std::max(worst, std::abs(m(i, j)));
        }
    }
    return static_cast<double>(worst);
}

struct Tolerances {
    double structure = 1e-12;     // exact-by-construction commutators
    double diagonal = 1e-10;      // [A, A^+] against structure differences
    double degeneration = 1e-6;   // flat-limit gaps at lambda = 1e-8
    double normalization = 1e-12;
    double moment = 1e-6;
    double vacuum = 1e-12;
    double factorization = 1e-12;  // relative
};

Tolerances make_tolerances(const VerifyOptions& options) {
    Tolerances tol;
    if (options.tol_override) {
        const double t = *options.tol_override;
        tol = {t, t, t, t, t, t, t};
    }
    return tol;
}

}  // namespace

double number_ladder_residual(const SurfaceSpec& spec, Flavor flavor) {
    const LadderPair ladder = build_ladder(spec, flavor);
    const LongMatrix lower = widen(ladder.lower.mat);
    const LongMatrix raise = widen(ladder.raise.mat);
    const LongMatrix number = widen(build_number(spec).mat);
    const double up = max_abs(number * raise - raise * number - raise);
    const double down = max_abs(number * lower - lower * number + lower);
    return std::max(up, down);
}

double ladder_diagonal_residual(const SurfaceSpec& spec, Flavor flavor) {
    const LadderPair ladder = build_ladder(spec, flavor);
    const LongMatrix lower = widen(ladder.lower.mat);
    const LongMatrix raise = widen(ladder.raise.mat);
    LongMatrix residual = lower * raise - raise * lower;
    for (int n = 0; n <= spec.n_max; ++n) {
        const long double above =
            n < spec.n_max ? static_cast<long double>(phi(spec, flavor, n + 1)) : 0.0L;
        residual(n, n) -= above - static_cast<long double>(phi(spec, flavor, n));
    }
    return max_abs(residual);
}

double su2_structure_residual(const SurfaceSpec& spec, Flavor flavor) {
    const Su2Triple su2 = build_su2(spec, flavor);
    const LongMatrix plus = widen(su2.plus.mat);
    const LongMatrix minus = widen(su2.minus.mat);
    const LongMatrix zero = widen(su2.zero.mat);
    const double up = max_abs(zero * plus - plus * zero - plus);
    const double down = max_abs(zero * minus - minus * zero + minus);
    return std::max(up, down);
}

double su2_flat_commutator_residual(int n_level) {
    const SurfaceSpec spec(0.0, n_level);
    const Su2Triple su2 = build_su2(spec, Flavor::flat);
    const LongMatrix plus = widen(su2.plus.mat);
    const LongMatrix minus = widen(su2.minus.mat);
    const LongMatrix zero = widen(su2.zero.mat);
    return max_abs(plus * minus - minus * plus - 2.0L * zero);
}

bool VerifyReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

VerifyReport run_verify(const VerifyOptions& options) {
    if (options.n_max_max < 0) {
        throw std::invalid_argument("run_verify: n_max_max must be >= 0");
    }
    for (double lambda : options.lambdas) {
        if (!(lambda >= 0.0)) {
            throw std::invalid_argument("run_verify: lambdas must be >= 0");
        }
    }

    const Tolerances tol = make_tolerances(options);
    VerifyReport report;
    auto record = [&report](std::string name, double worst, double bound) {
        report.checks.push_back({std::move(name), worst, bound, worst <= bound});
    };

    // operator-algebra closure over the (N, lambda, flavor) grid
    {
        double worst_structure = 0.0;
        double worst_diag = 0.0;
        double worst_su2 = 0.0;
        double worst_flat_comm = 0.0;
        for (int n_level = 0; n_level <= options.n_max_max; ++n_level) {
            worst_flat_comm = std::max(worst_flat_comm, su2_flat_commutator_residual(n_level));
            for (double lambda : options.lambdas) {
                const SurfaceSpec spec(lambda, n_level);
                for (Flavor flavor : {Flavor::flat, Flavor::sphere}) {
                    worst_structure =
                        std::max(worst_structure, number_ladder_residual(spec, flavor));
                    worst_diag = std::max(worst_diag, ladder_diagonal_residual(spec, flavor));
                    worst_su2 = std::max(worst_su2, su2_structure_residual(spec, flavor));
                }
            }
        }
        record("number-ladder commutators [n,A],[n,Adag]", worst_structure, tol.structure);
        record("ladder commutator diagonal [A,Adag]", worst_diag, tol.diagonal);
        record("su2 commutators [J0,Jpm]", worst_su2, tol.structure);
        record("flat su2 commutator [Jp,Jm]=2J0", worst_flat_comm, tol.structure);
    }

    // hermiticity of labeled-hermitian operators
    {
        double worst = 0.0;
        for (double lambda : options.lambdas) {
            const SurfaceSpec spec(lambda, std::min(options.n_max_max, 12));
            worst = std::max(worst, hermiticity_defect(build_number(spec)));
            worst = std::max(worst, hermiticity_defect(build_su2(spec, Flavor::sphere).zero));
            const LadderPair ladder = build_ladder(spec, Flavor::sphere);
            for (double phase : {0.0, 0.7, 2.4}) {
                const auto [x1, x2] = build_quadratures(ladder, phase);
                worst = std::max({worst, hermiticity_defect(x1), hermiticity_defect(x2)});
            }
        }
        record("hermiticity of n, J0, quadratures", worst, tol.structure);
    }

    // flat-limit degenerations at lambda = 1e-8. The energy gap grows as
    // (lambda/2)(N+1)^2, so the 1e-6 bound is only attainable up to N = 12.
    {
        const double lambda_small = 1e-8;
        double worst = 0.0;
        const int cap = std::min(options.n_max_max, 12);
        for (int n_level = 0; n_level <= cap; ++n_level) {
            const SurfaceSpec spec(lambda_small, n_level);
            for (int n = 0; n <= n_level + 1; ++n) {
                worst = std::max(worst, std::abs(g_deform(spec, n) - 1.0));
                worst = std::max(worst, std::abs(f_sphere(spec, n) - f_flat(n_level, n)));
            }
            for (int n = 0; n <= n_level; ++n) {
                const double j0 = n - n_level / 2.0;
                worst = std::max(worst, std::abs(su2_commutator_factor(spec, j0) - 1.0));
            }
            worst = std::max(worst,
                             std::abs(energy_sphere(n_level, lambda_small) - energy_flat(n_level)));
        }
        record("flat-limit degeneration at lambda=1e-8 (N<=12)", worst, tol.degeneration);
    }

    // normalization of both coherent-state flavors
    {
        double worst = 0.0;
        for (int n_level : {0, 1, std::min(options.n_max_max, 7), options.n_max_max}) {
            for (double lambda : options.lambdas) {
                const SurfaceSpec spec(lambda, n_level);
                for (double mu : {0.1, 0.5, 1.0, 2.0, 10.0}) {
                    worst = std::max(worst,
                                     std::abs(coherent_sphere(mu, spec).vector.norm() - 1.0));
                    worst = std::max(
                        worst, std::abs(coherent_flat(Complex(0.3, mu), n_level).vector.norm() - 1.0));
                }
            }
        }
        record("coherent-state normalization", worst, tol.normalization);
    }

    // radial moment identity for the flat family
    {
        double worst = 0.0;
        bool converged = true;
        for (int n_level = 0; n_level <= std::min(options.n_max_max, 10); ++n_level) {
            const IdentityResult id = verify_identity_flat(n_level);
            worst = std::max(worst, id.residual);
            converged = converged && id.converged;
        }
        record("flat resolution-of-identity residual (N<=10)",
               converged ? worst : std::numeric_limits<double>::infinity(), tol.moment);
    }

    // vacuum squeezing baselines
    {
        double worst = 0.0;
        const std::vector<double> phases = default_phase_grid();
        const int n_level = std::max(1, std::min(options.n_max_max, 10));
        for (double lambda : options.lambdas) {
            const SurfaceSpec spec(lambda, n_level);
            for (Flavor flavor : {Flavor::flat, Flavor::sphere}) {
                const CoherentState vac{FockVector::basis_state(spec, 0), Complex(0.0, 0.0),
                                        flavor};
                for (const SqueezeCurve& curve :
                     {squeeze_nondeformed(vac, phases), squeeze_deformed(vac, phases)}) {
                    for (std::size_t i = 0; i < curve.s1.size(); ++i) {
                        worst = std::max({worst, std::abs(curve.s1[i]), std::abs(curve.s2[i])});
                    }
                }
            }
        }
        record("vacuum squeezing baseline S=0", worst, tol.vacuum);
    }

    // structure-function factorization against the four-factor product form;
    // options.g_fault perturbs the factored side to exercise failure reporting
    {
        double worst = 0.0;
        for (int n_level = 0; n_level <= options.n_max_max; ++n_level) {
            for (double lambda : options.lambdas) {
                const SurfaceSpec spec(lambda, n_level);
                const double c = std::sqrt(1.0 + lambda * lambda / 4.0);
                for (int n = 0; n <= n_level + 1; ++n) {
                    const double g = g_deform(spec, n) + options.g_fault;
                    const double factored = phi_flat(n_level, n) * g * g;
                    const double product = n * (n_level + 1.0 - n) *
                                           (lambda * (n_level + 1.0 - n) + c) *
                                           (lambda * n + c);
                    const double scale = std::max(1.0, std::abs(product));
                    worst = std::max(worst, std::abs(factored - product) / scale);
                }
            }
        }
        record("structure-function factorization phi = phi_flat*g^2", worst, tol.factorization);
    }

    // informational su(2) closure-residual table (see su2_closure_residual)
    for (double lambda : {0.0, 0.1}) {
        for (int n_level : {2, 10}) {
            const SurfaceSpec spec(lambda, std::min(n_level, options.n_max_max));
            for (int n = 0; n <= spec.n_max; ++n) {
                report.su2_residuals.push_back(
                    {lambda, spec.n_max, n, su2_closure_residual(spec, n)});
            }
        }
    }

    return report;
}

void print_verify(std::ostream& out, const VerifyReport& report, const VerifyOptions& options) {
    out << "verify: n_max <= " << options.n_max_max << ", lambda in {";
    for (std::size_t i = 0; i < options.lambdas.size(); ++i) {
        out << (i ? ", " : "") << options.lambdas[i];
    }
    out << "}\n";
    if (options.tol_override) {
        out << "tolerance override: " << *options.tol_override << "\n";
    }
    out << "\n";

    for (const CheckResult& check : report.checks) {
        out << (check.pass ? "[PASS] " : "[FAIL] ") << check.name << ": worst "
            << std::scientific << std::setprecision(3) << check.worst << " (tol " << check.tol
            << ")\n"
            << std::defaultfloat;
    }

    out << "\nsu(2) closure residual |phi(n)-phi(n+1) - 2(n-N/2) h| (informational):\n";
    out << "  lambda  N   n   residual\n";
    for (const ClosureResidualRow& row : report.su2_residuals) {
        out << "  " << std::setw(6) << row.lambda << "  " << std::setw(2) << row.n_level << "  "
            << std::setw(2) << row.n << "   " << std::scientific << std::setprecision(6)
            << row.residual << std::defaultfloat << "\n";
    }
    out << "\n" << (report.all_pass() ? "all checks passed" : "CHECKS FAILED") << "\n";
}

}  // namespace curvedcs
