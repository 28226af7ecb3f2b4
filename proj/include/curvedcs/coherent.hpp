#pragma once

#include "curvedcs/fock.hpp"

namespace curvedcs {

// Finite-dimensional coherent states over |0>, ..., |n_max>:
//   flat:   c_n ~ sqrt(C(N,n)) mu^n
//   sphere: c_n ~ sqrt(C(N,n)) [g(lambda,n)]! mu^n
// Both flavors share one normalized construction path, so the sphere state at
// lambda = 0 reproduces the flat state bit for bit.

struct CoherentState {
    FockVector vector;
    Complex mu;
    Flavor flavor;

    const SurfaceSpec& spec() const noexcept { return vector.spec; }
};

// Binomial coefficient as a double, and its log (for the large-N route).
double binomial(int n_level, int n);
double log_binomial(int n_level, int n);

// [g(lambda, n)]! = g(lambda,1) g(lambda,2) ... g(lambda,n); empty product = 1.
// Valid for 0 <= n <= n_max.
double g_factorial(const SurfaceSpec& spec, int n);
double log_g_factorial(const SurfaceSpec& spec, int n);

// Deformed binomial coefficient C(N,n) {[g]!}^2; reduces to C(N,n) at lambda=0.
double deformed_binomial(const SurfaceSpec& spec, int n);

// Deformed binomial expansion sum_n C_lambda(N,n) x^n. Equals (1+x)^N at
// lambda = 0 and 1 at x = 0.
double deformed_binomial_expansion(const SurfaceSpec& spec, double x);

CoherentState coherent_flat(Complex mu, int n_level);
CoherentState coherent_sphere(Complex mu, const SurfaceSpec& spec);

// |<a|b>|^2 in [0, 1].
double fidelity(const FockVector& a, const FockVector& b);
double fidelity(const CoherentState& a, const CoherentState& b);

}  // namespace curvedcs
