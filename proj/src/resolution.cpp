#include "curvedcs/resolution.hpp"

#include <cmath>
#include <numbers>
#include <stack>
#include <stdexcept>

#include "curvedcs/coherent.hpp"

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

// x^n (1+x)^{-(N+2)} evaluated in log space so large cutoffs cannot overflow
double moment_integrand(double x, int n, int n_level) {
    if (x <= 0.0) {
        return n == 0 ? 1.0 : 0.0;
    }
    return std::exp(n * std::log(x) - (n_level + 2.0) * std::log1p(x));
}

struct Segment {
    double a, b;
    double fa, fm, fb;
    double simpson;
};

double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

// Adaptive Simpson with an explicit work stack and a fixed evaluation budget.
// Segment results are accumulated with compensated summation.
struct MomentIntegration {
    double value = 0.0;
    long evaluations = 0;
    bool converged = true;
};

MomentIntegration integrate_moment(int n, int n_level, const QuadratureSpec& quad) {
    auto f = [&](double x) { return moment_integrand(x, n, n_level); };

    MomentIntegration out;
    KahanSum total;

    const double m0 = 0.5 * quad.cutoff;
    Segment root{0.0, quad.cutoff, f(0.0), f(m0), f(quad.cutoff), 0.0};
    root.simpson = simpson(root.a, root.b, root.fa, root.fm, root.fb);
    out.evaluations = 3;

    // local error budget: rel_tol spread uniformly over the interval
    const double abs_tol_per_unit = quad.rel_tol / quad.cutoff;

    std::stack<Segment> work;
    work.push(root);
    while (!work.empty()) {
        Segment seg = work.top();
        work.pop();

        const double m = 0.5 * (seg.a + seg.b);
        const double lm = 0.5 * (seg.a + m);
        const double rm = 0.5 * (m + seg.b);
        const double flm = f(lm);
        const double frm = f(rm);
        out.evaluations += 2;

        const double left = simpson(seg.a, m, seg.fa, flm, seg.fm);
        const double right = simpson(m, seg.b, seg.fm, frm, seg.fb);
        const double err = (left + right - seg.simpson) / 15.0;
        const double budget =
            std::max(abs_tol_per_unit * (seg.b - seg.a), quad.rel_tol * std::abs(left + right));

        if (std::abs(err) <= budget || (m - seg.a) < 1e-300) {
            total.add(left + right + err);  // Richardson-extrapolated segment
            continue;
        }
        if (out.evaluations >= quad.max_points) {
            total.add(left + right);
            out.converged = false;
            continue;
        }
        work.push(Segment{seg.a, m, seg.fa, flm, seg.fm, left});
        work.push(Segment{m, seg.b, seg.fm, frm, seg.fb, right});
    }

    out.value = total.sum;
    return out;
}

}  // namespace

IdentityResult verify_identity_flat(int n_level, const QuadratureSpec& quad) {
    if (n_level < 0) {
        throw std::invalid_argument("verify_identity_flat: n_level must be >= 0");
    }
    if (!(quad.cutoff > 0.0) || quad.max_points < 5 || !(quad.rel_tol > 0.0)) {
        throw std::invalid_argument("verify_identity_flat: invalid quadrature spec");
    }

    IdentityResult result;
    result.n_level = n_level;
    result.moments.resize(n_level + 1);
    result.converged = true;

    for (int n = 0; n <= n_level; ++n) {
        const MomentIntegration mi = integrate_moment(n, n_level, quad);
        result.moments[n] = mi.value;
        result.evaluations += mi.evaluations;
        if (!mi.converged) {
            result.converged = false;
            result.message = "evaluation budget exhausted before reaching rel_tol";
        }

        // discarded tail integral above the cutoff: for n <= N the integrand is
        // below x^(n - N - 2), so the tail is below cutoff^(n-N-1) / (N+1-n)
        const double tail =
            std::pow(quad.cutoff, n - n_level - 1.0) / static_cast<double>(n_level + 1 - n);
        const double tail_rel = tail / std::max(mi.value, 1e-300);
        result.tail_bound_rel = std::max(result.tail_bound_rel, tail_rel);

        const double diagonal = (n_level + 1.0) * binomial(n_level, n) * mi.value;
        result.residual = std::max(result.residual, std::abs(diagonal - 1.0));
    }

    if (result.tail_bound_rel > quad.rel_tol) {
        result.converged = false;
        if (result.message.empty()) {
            result.message = "cutoff tail bound exceeds rel_tol; increase cutoff";
        }
    }
    return result;
}

MomentReport sphere_moment_report(const SurfaceSpec& spec) {
    MomentReport report{spec, {}};
    report.rows.reserve(spec.dim());
    for (int n = 0; n <= spec.n_max; ++n) {
        const double coeff = deformed_binomial(spec, n);
        report.rows.push_back({n, coeff, 1.0 / (std::numbers::pi * coeff)});
    }
    return report;
}

}  // namespace curvedcs
