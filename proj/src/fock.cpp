#include "curvedcs/fock.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "curvedcs/algebra.hpp"

namespace curvedcs {

namespace {

// direct [phi]! products stay finite up to this n_max for the lambda ranges
// the library targets; above it the log route is used
constexpr int kFactorialDirectLimit = 150;

void check_dims(const SurfaceSpec& a, const SurfaceSpec& b, const char* fn) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument(std::string(fn) + ": dimension mismatch");
    }
}

}  // namespace

FockVector::FockVector(Vector amps_, const SurfaceSpec& spec_)
    : amps(std::move(amps_)), spec(spec_) {
    if (amps.size() != spec.dim()) {
        throw std::invalid_argument("FockVector: amplitude length must equal n_max + 1");
    }
}

FockVector FockVector::basis_state(const SurfaceSpec& spec, int n) {
    if (n < 0 || n > spec.n_max) {
        throw std::out_of_range("FockVector::basis_state: n out of range");
    }
    FockVector v(spec);
    v.amps(n) = Complex(1.0, 0.0);
    return v;
}

bool FockVector::is_normalized(double tol) const {
    return std::abs(amps.squaredNorm() - 1.0) <= tol;
}

Complex overlap(const FockVector& a, const FockVector& b) {
    check_dims(a.spec, b.spec, "overlap");
    return a.amps.dot(b.amps);  // Eigen dot conjugates the left argument
}

OperatorMatrix::OperatorMatrix(Matrix mat_, const SurfaceSpec& spec_, std::string label_)
    : mat(std::move(mat_)), spec(spec_), label(std::move(label_)) {
    if (mat.rows() != spec.dim() || mat.cols() != spec.dim()) {
        throw std::invalid_argument("OperatorMatrix: shape must be (n_max+1) x (n_max+1)");
    }
}

LadderPair build_ladder(const SurfaceSpec& spec, Flavor flavor) {
    const int d = spec.dim();
    Matrix lower = Matrix::Zero(d, d);
    for (int n = 1; n <= spec.n_max; ++n) {
        lower(n - 1, n) = std::sqrt(phi(spec, flavor, n));
    }
    Matrix raise = lower.adjoint();
    const std::string tag = to_string(flavor);
    return {OperatorMatrix(std::move(lower), spec, "A[" + tag + "]"),
            OperatorMatrix(std::move(raise), spec, "Adag[" + tag + "]")};
}

LadderPair build_boson_ladder(const SurfaceSpec& spec) {
    const int d = spec.dim();
    Matrix lower = Matrix::Zero(d, d);
    for (int n = 1; n <= spec.n_max; ++n) {
        lower(n - 1, n) = std::sqrt(static_cast<double>(n));
    }
    Matrix raise = lower.adjoint();
    return {OperatorMatrix(std::move(lower), spec, "a"),
            OperatorMatrix(std::move(raise), spec, "adag")};
}

OperatorMatrix build_number(const SurfaceSpec& spec) {
    const int d = spec.dim();
    Matrix m = Matrix::Zero(d, d);
    for (int n = 0; n < d; ++n) {
        m(n, n) = static_cast<double>(n);
    }
    return OperatorMatrix(std::move(m), spec, "n");
}

Su2Triple build_su2(const SurfaceSpec& spec, Flavor flavor) {
    LadderPair ladder = build_ladder(spec, flavor);
    const int d = spec.dim();
    Matrix zero = Matrix::Zero(d, d);
    const double half_level = static_cast<double>(spec.n_max) / 2.0;
    for (int n = 0; n < d; ++n) {
        zero(n, n) = static_cast<double>(n) - half_level;
    }
    ladder.raise.label = "J+";
    ladder.lower.label = "J-";
    return {std::move(ladder.raise), std::move(ladder.lower),
            OperatorMatrix(std::move(zero), spec, "J0")};
}

std::pair<OperatorMatrix, OperatorMatrix> build_quadratures(const LadderPair& ladder,
                                                            double phase) {
    const Complex rot = std::polar(1.0, phase);
    Matrix x1 = 0.5 * (ladder.lower.mat * rot + ladder.raise.mat * std::conj(rot));
    Matrix x2 = Complex(0.0, -0.5) * (ladder.lower.mat * rot - ladder.raise.mat * std::conj(rot));
    return {OperatorMatrix(std::move(x1), ladder.lower.spec, "X1"),
            OperatorMatrix(std::move(x2), ladder.lower.spec, "X2")};
}

Complex expectation(const FockVector& state, const OperatorMatrix& op) {
    check_dims(state.spec, op.spec, "expectation");
    return state.amps.dot(op.mat * state.amps);
}

FockVector apply(const OperatorMatrix& op, const FockVector& state) {
    check_dims(state.spec, op.spec, "apply");
    return FockVector(op.mat * state.amps, state.spec);
}

Matrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
    check_dims(a.spec, b.spec, "commutator");
    return a.mat * b.mat - b.mat * a.mat;
}

double hermiticity_defect(const OperatorMatrix& op) {
    return (op.mat - op.mat.adjoint()).cwiseAbs().maxCoeff();
}

double phi_factorial(const SurfaceSpec& spec, Flavor flavor, int n) {
    if (n < 0 || n > spec.n_max) {
        throw std::out_of_range("phi_factorial: n must be in [0, n_max]");
    }
    if (spec.n_max > kFactorialDirectLimit) {
        return std::exp(phi_log_factorial(spec, flavor, n));
    }
    double product = 1.0;
    for (int k = 1; k <= n; ++k) {
        product *= phi(spec, flavor, k);
    }
    return product;
}

double phi_log_factorial(const SurfaceSpec& spec, Flavor flavor, int n) {
    if (n < 0 || n > spec.n_max) {
        throw std::out_of_range("phi_log_factorial: n must be in [0, n_max]");
    }
    double sum = 0.0;
    for (int k = 1; k <= n; ++k) {
        sum += std::log(phi(spec, flavor, k));
    }
    return sum;
}

}  // namespace curvedcs
