#pragma once

#include <stdexcept>

namespace curvedcs {

// Which oscillator family an operator or state belongs to.
enum class Flavor { flat, sphere };

const char* to_string(Flavor f) noexcept;

// Physical configuration: curvature lambda = 1/R^2 (0 = flat plane) and the
// top occupation number n_max. The Fock space has dimension n_max + 1.
struct SurfaceSpec {
    double lambda{0.0};
    int n_max{0};

    SurfaceSpec(double lambda_, int n_max_) : lambda(lambda_), n_max(n_max_) {
        // !(x >= 0) also rejects NaN
        if (!(lambda >= 0.0)) {
            throw std::invalid_argument("SurfaceSpec: lambda must be >= 0 (negative curvature unsupported)");
        }
        if (n_max < 0) {
            throw std::invalid_argument("SurfaceSpec: n_max must be >= 0");
        }
    }

    int dim() const noexcept { return n_max + 1; }
};

inline bool operator==(const SurfaceSpec& a, const SurfaceSpec& b) noexcept {
    return a.lambda == b.lambda && a.n_max == b.n_max;
}

}  // namespace curvedcs
