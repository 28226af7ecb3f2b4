#pragma once

#include "curvedcs/surface.hpp"

namespace curvedcs {

// Scalar layer: spectra, structure functions and deformation functions of the
// oscillator on the plane and on the sphere (units hbar = m = omega = 1).
//
// For a fixed top level N the structure function vanishes at n = 0 and at
// n = N + 1, which is what makes the Fock space (N+1)-dimensional.

// Level energy on the plane: N + 1.
double energy_flat(int n_level);

// Level energy on the sphere: sqrt(1 + lambda^2/4) (N+1) + (lambda/2) (N+1)^2.
// Degenerates to energy_flat at lambda = 0.
double energy_sphere(int n_level, double lambda);

// Flat structure function n (N+1-n), valid for 0 <= n <= N+1.
double phi_flat(int n_level, int n);

// Curvature factor g(lambda, n) =
//   sqrt( (lambda (N+1-n) + c) (lambda n + c) ),   c = sqrt(1 + lambda^2/4).
// Equals exactly 1 at lambda = 0 and is symmetric under n -> N+1-n.
double g_deform(const SurfaceSpec& spec, int n);

// Sphere structure function, computed in factored form phi_flat * g^2.
// Equality with the four-factor product form is a test, not an assumption.
double phi_sphere(const SurfaceSpec& spec, int n);

// Deformation functions: f_flat = sqrt(N+1-n), f_sphere = f_flat * g.
// They satisfy n f^2(n) = phi(n); both vanish at n = N+1.
double f_flat(int n_level, int n);
double f_sphere(const SurfaceSpec& spec, int n);

// Structure function of either flavor (flat ignores spec.lambda).
double phi(const SurfaceSpec& spec, Flavor flavor, int n);

// Deformed su(2) commutator factor h(lambda, N, j0) multiplying 2 J0 in
// [J+, J-]. This is the published closed form, reproduced verbatim including
// its (1 + lambda/4)^(1/2) factor; see su2_closure_residual for how far it is
// from the exact commutator diagonal. Returns 1 at lambda = 0.
double su2_commutator_factor(const SurfaceSpec& spec, double j0);

// | phi_s(n) - phi_s(n+1) - 2 (n - N/2) h(lambda, N, n - N/2) |: the gap
// between the published factor and the exact [J+, J-] diagonal. Zero at
// lambda = 0; reported (not asserted) for lambda > 0.
double su2_closure_residual(const SurfaceSpec& spec, int n);

}  // namespace curvedcs
