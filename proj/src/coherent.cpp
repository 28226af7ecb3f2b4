#include "curvedcs/coherent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "curvedcs/algebra.hpp"

namespace curvedcs {

namespace {

void check_occupation_range(const SurfaceSpec& spec, int n, const char* fn) {
    if (n < 0 || n > spec.n_max) {
        throw std::out_of_range(std::string(fn) + ": n must be in [0, n_max]");
    }
}

// amplitudes from log-magnitude + phase; immune to overflow in
// sqrt(C(N,n)) |mu|^n [g]!
Vector amplitudes_log_route(Complex mu, const SurfaceSpec& spec, Flavor flavor) {
    const int d = spec.dim();
    const double log_abs_mu = std::log(std::abs(mu));
    const double arg_mu = std::arg(mu);

    std::vector<double> log_mag(d);
    double peak = -std::numeric_limits<double>::infinity();
    double log_gfact = 0.0;
    for (int n = 0; n < d; ++n) {
        if (n > 0 && flavor == Flavor::sphere) {
            log_gfact += std::log(g_deform(spec, n));
        }
        log_mag[n] = 0.5 * log_binomial(spec.n_max, n) + n * log_abs_mu + log_gfact;
        peak = std::max(peak, log_mag[n]);
    }

    Vector amps(d);
    for (int n = 0; n < d; ++n) {
        amps(n) = std::polar(std::exp(log_mag[n] - peak), n * arg_mu);
    }
    return amps;
}

Vector amplitudes_direct_route(Complex mu, const SurfaceSpec& spec, Flavor flavor) {
    const int d = spec.dim();
    Vector amps(d);
    Complex mu_power(1.0, 0.0);
    double gfact = 1.0;
    for (int n = 0; n < d; ++n) {
        if (n > 0) {
            mu_power *= mu;
            if (flavor == Flavor::sphere) {
                gfact *= g_deform(spec, n);
            }
        }
        amps(n) = std::sqrt(binomial(spec.n_max, n)) * gfact * mu_power;
    }
    return amps;
}

CoherentState make_coherent(Complex mu, const SurfaceSpec& spec, Flavor flavor) {
    FockVector state(spec);
    if (mu == Complex(0.0, 0.0)) {
        state.amps(0) = Complex(1.0, 0.0);
        return {std::move(state), mu, flavor};
    }

    Vector amps = spec.n_max > 100 ? amplitudes_log_route(mu, spec, flavor)
                                   : amplitudes_direct_route(mu, spec, flavor);
    if (!amps.allFinite()) {
        amps = amplitudes_log_route(mu, spec, flavor);
    }
    state.amps = amps / amps.norm();
    return {std::move(state), mu, flavor};
}

}  // namespace

double binomial(int n_level, int n) {
    if (n_level < 0 || n < 0 || n > n_level) {
        throw std::out_of_range("binomial: need 0 <= n <= n_level");
    }
    const int k = std::min(n, n_level - n);
    double value = 1.0;
    for (int i = 1; i <= k; ++i) {
        value *= static_cast<double>(n_level - k + i) / static_cast<double>(i);
    }
    return value;
}

double log_binomial(int n_level, int n) {
    if (n_level < 0 || n < 0 || n > n_level) {
        throw std::out_of_range("log_binomial: need 0 <= n <= n_level");
    }
    return std::lgamma(n_level + 1.0) - std::lgamma(n + 1.0) - std::lgamma(n_level - n + 1.0);
}

double g_factorial(const SurfaceSpec& spec, int n) {
    check_occupation_range(spec, n, "g_factorial");
    double product = 1.0;
    for (int k = 1; k <= n; ++k) {
        product *= g_deform(spec, k);
    }
    return product;
}

double log_g_factorial(const SurfaceSpec& spec, int n) {
    check_occupation_range(spec, n, "log_g_factorial");
    double sum = 0.0;
    for (int k = 1; k <= n; ++k) {
        sum += std::log(g_deform(spec, k));
    }
    return sum;
}

double deformed_binomial(const SurfaceSpec& spec, int n) {
    const double gfact = g_factorial(spec, n);
    return binomial(spec.n_max, n) * gfact * gfact;
}

double deformed_binomial_expansion(const SurfaceSpec& spec, double x) {
    double sum = 0.0;
    double comp = 0.0;  // Kahan correction
    double x_power = 1.0;
    for (int n = 0; n <= spec.n_max; ++n) {
        if (n > 0) {
            x_power *= x;
        }
        const double term = deformed_binomial(spec, n) * x_power - comp;
        const double next = sum + term;
        comp = (next - sum) - term;
        sum = next;
    }
    return sum;
}

CoherentState coherent_flat(Complex mu, int n_level) {
    return make_coherent(mu, SurfaceSpec(0.0, n_level), Flavor::flat);
}

CoherentState coherent_sphere(Complex mu, const SurfaceSpec& spec) {
    return make_coherent(mu, spec, Flavor::sphere);
}

double fidelity(const FockVector& a, const FockVector& b) {
    return std::norm(overlap(a, b));
}

double fidelity(const CoherentState& a, const CoherentState& b) {
    return fidelity(a.vector, b.vector);
}

}  // namespace curvedcs
