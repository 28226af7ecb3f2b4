#include "curvedcs/algebra.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace curvedcs {

namespace {

void check_level(int n_level, const char* fn) {
    if (n_level < 0) {
        throw std::invalid_argument(std::string(fn) + ": n_level must be >= 0");
    }
}

void check_occupation(int n_level, int n, const char* fn) {
    if (n < 0 || n > n_level + 1) {
        throw std::out_of_range(std::string(fn) + ": n must be in [0, n_max + 1], got " +
                                std::to_string(n));
    }
}

}  // namespace

const char* to_string(Flavor f) noexcept {
    return f == Flavor::flat ? "flat" : "sphere";
}

double energy_flat(int n_level) {
    check_level(n_level, "energy_flat");
    return static_cast<double>(n_level) + 1.0;
}

double energy_sphere(int n_level, double lambda) {
    check_level(n_level, "energy_sphere");
    if (!(lambda >= 0.0)) {
        throw std::invalid_argument("energy_sphere: lambda must be >= 0");
    }
    const double dim = static_cast<double>(n_level) + 1.0;
    return std::sqrt(1.0 + lambda * lambda / 4.0) * dim + 0.5 * lambda * dim * dim;
}

double phi_flat(int n_level, int n) {
    check_level(n_level, "phi_flat");
    check_occupation(n_level, n, "phi_flat");
    return static_cast<double>(n) * static_cast<double>(n_level + 1 - n);
}

double g_deform(const SurfaceSpec& spec, int n) {
    check_occupation(spec.n_max, n, "g_deform");
    const double lam = spec.lambda;
    const double c = std::sqrt(1.0 + lam * lam / 4.0);
    return std::sqrt((lam * static_cast<double>(spec.n_max + 1 - n) + c) *
                     (lam * static_cast<double>(n) + c));
}

double phi_sphere(const SurfaceSpec& spec, int n) {
    const double g = g_deform(spec, n);
    return phi_flat(spec.n_max, n) * g * g;
}

double f_flat(int n_level, int n) {
    check_level(n_level, "f_flat");
    check_occupation(n_level, n, "f_flat");
    return std::sqrt(static_cast<double>(n_level + 1 - n));
}

double f_sphere(const SurfaceSpec& spec, int n) {
    return f_flat(spec.n_max, n) * g_deform(spec, n);
}

double phi(const SurfaceSpec& spec, Flavor flavor, int n) {
    return flavor == Flavor::flat ? phi_flat(spec.n_max, n) : phi_sphere(spec, n);
}

double su2_commutator_factor(const SurfaceSpec& spec, double j0) {
    const double lam = spec.lambda;
    const double n_level = static_cast<double>(spec.n_max);
    return 1.0 + lam * std::sqrt(1.0 + lam / 4.0) * (n_level + 1.0) -
           lam * lam * (2.0 * j0 * j0 - n_level * (n_level / 2.0 + 1.0) - 0.25);
}

double su2_closure_residual(const SurfaceSpec& spec, int n) {
    if (n < 0 || n > spec.n_max) {
        throw std::out_of_range("su2_closure_residual: n must be in [0, n_max]");
    }
    const double j0 = static_cast<double>(n) - static_cast<double>(spec.n_max) / 2.0;
    const double lhs = phi_sphere(spec, n) - phi_sphere(spec, n + 1);
    return std::abs(lhs - 2.0 * j0 * su2_commutator_factor(spec, j0));
}

}  // namespace curvedcs
