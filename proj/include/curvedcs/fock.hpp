#pragma once

#include <complex>
#include <string>

#include <Eigen/Dense>

#include "curvedcs/surface.hpp"

namespace curvedcs {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// ----------------------------- state vector ---------------------------------

// Complex amplitude vector over the occupation basis |0>, ..., |n_max>.
struct FockVector {
    Vector amps;
    SurfaceSpec spec;

    explicit FockVector(const SurfaceSpec& spec_)
        : amps(Vector::Zero(spec_.dim())), spec(spec_) {}

    FockVector(Vector amps_, const SurfaceSpec& spec_);

    static FockVector basis_state(const SurfaceSpec& spec, int n);

    double norm() const { return amps.norm(); }
    bool is_normalized(double tol = 1e-12) const;
};

// <a|b>; dimensions must match.
Complex overlap(const FockVector& a, const FockVector& b);

// ------------------------------- operators ----------------------------------

// Dense operator on the (n_max+1)-dimensional space, tagged with the spec it
// was built for and a label naming which operator it is.
struct OperatorMatrix {
    Matrix mat;
    SurfaceSpec spec;
    std::string label;

    OperatorMatrix(Matrix mat_, const SurfaceSpec& spec_, std::string label_);

    int dim() const noexcept { return spec.dim(); }
};

struct LadderPair {
    OperatorMatrix lower;  // A   (annihilation side)
    OperatorMatrix raise;  // A^+ (conjugate transpose of lower)
};

struct Su2Triple {
    OperatorMatrix plus;
    OperatorMatrix minus;
    OperatorMatrix zero;
};

// Deformed ladder pair: lower has single subdiagonal entries
// A[n-1, n] = sqrt(phi(n)), so A|0> = 0 and A^+|n_max> = 0.
LadderPair build_ladder(const SurfaceSpec& spec, Flavor flavor);

// Truncated boson pair a[n-1, n] = sqrt(n). Note the truncation artifact:
// a^+ a = diag(0..n_max) exactly, but (a a^+)[n_max, n_max] = 0, not n_max+1.
LadderPair build_boson_ladder(const SurfaceSpec& spec);

// Number operator diag(0, 1, ..., n_max).
OperatorMatrix build_number(const SurfaceSpec& spec);

// su(2)-style triple: J+ = A^+, J- = A, J0 = diag(n - n_max/2).
Su2Triple build_su2(const SurfaceSpec& spec, Flavor flavor);

// Quadrature pair for a ladder pair at phase angle phase:
//   X1 = (L e^{i phase} + L^+ e^{-i phase}) / 2
//   X2 = (L e^{i phase} - L^+ e^{-i phase}) / (2i)
std::pair<OperatorMatrix, OperatorMatrix> build_quadratures(const LadderPair& ladder,
                                                            double phase);

// <psi| M |psi>; throws on dimension mismatch.
Complex expectation(const FockVector& state, const OperatorMatrix& op);

FockVector apply(const OperatorMatrix& op, const FockVector& state);

Matrix commutator(const OperatorMatrix& a, const OperatorMatrix& b);

// max |M - M^+| entry; 0 for exactly hermitian matrices.
double hermiticity_defect(const OperatorMatrix& op);

// [phi(n)]! = phi(n) phi(n-1) ... phi(1), with [phi(0)]! = 1. The direct
// product is used up to n_max = 150; the log-space route avoids overflow
// above that.
double phi_factorial(const SurfaceSpec& spec, Flavor flavor, int n);
double phi_log_factorial(const SurfaceSpec& spec, Flavor flavor, int n);

}  // namespace curvedcs
