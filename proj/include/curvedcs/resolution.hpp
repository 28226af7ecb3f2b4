#pragma once

#include <vector>

#include "curvedcs/surface.hpp"

namespace curvedcs {

// Overcompleteness check for the flat coherent-state family. The angular
// integral is done analytically (it kills all off-diagonal |n><m| terms), so
// verifying the resolution of identity reduces to the radial moments
//
//   I_n = integral_0^inf  x^n (1 + x)^{-(N+2)} dx,      x = |mu|^2,
//
// against which the assembled diagonal operator entry is (N+1) C(N,n) I_n.

struct QuadratureSpec {
    double cutoff = 1e10;     // upper end of the radial grid in x = |mu|^2
    int max_points = 200000;  // integrand-evaluation budget per moment
    double rel_tol = 1e-8;    // target relative accuracy per moment
};

struct IdentityResult {
    int n_level = 0;
    std::vector<double> moments;      // numerically integrated I_n
    double residual = 0.0;            // max_n |(N+1) C(N,n) I_n - 1|
    double tail_bound_rel = 0.0;      // max_n truncation bound / I_n
    long evaluations = 0;
    bool converged = false;           // budget met and tail below rel_tol
    std::string message;
};

// Integrates every radial moment with an adaptive Simpson rule on [0, cutoff]
// and reports the max-norm deviation of the assembled operator from identity.
// Non-convergence (budget exhausted or cutoff tail above tolerance) is
// reported through `converged`/`message`, never silently accepted.
IdentityResult verify_identity_flat(int n_level, const QuadratureSpec& quad = {});

// Sphere-side companion: the deformed measure is only defined formally, so no
// numerical identity claim is possible. This reports, per n, what any valid
// measure must satisfy: the deformed binomial coefficient (the coefficient of
// x^n in the deformed expansion of (1+x)^N) and the target moment
// 1 / (pi C_lambda(N,n)).
struct MomentReportRow {
    int n;
    double deformed_binomial;
    double target_moment;
};

struct MomentReport {
    SurfaceSpec spec;
    std::vector<MomentReportRow> rows;
};

MomentReport sphere_moment_report(const SurfaceSpec& spec);

}  // namespace curvedcs
