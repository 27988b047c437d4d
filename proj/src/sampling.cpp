#include "minangle/sampling.hpp"

#include <cmath>
#include <numbers>

namespace minangle {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t counter) {
    // splitmix64 finalizer
    std::uint64_t z = base + counter * 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

double Rng::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(phi);
    has_spare_ = true;
    return r * std::cos(phi);
}

Complex Rng::complex_gaussian() {
    const double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
    return Complex(gaussian() * inv_sqrt2, gaussian() * inv_sqrt2);
}

std::uint64_t Rng::integer(std::uint64_t bound) {
    if (bound == 0) {
        throw InvalidValueError("Rng::integer: bound must be positive");
    }
    // rejection sampling to avoid modulo bias
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

CMatrix Rng::gaussian_matrix(Eigen::Index rows, Eigen::Index cols) {
    CMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            m(i, j) = complex_gaussian();
        }
    }
    return m;
}

CVector Rng::unit_vector(Eigen::Index d) {
    CVector v(d);
    for (Eigen::Index i = 0; i < d; ++i) v(i) = complex_gaussian();
    return v.normalized();
}

Subspace random_subspace(Rng& rng, Eigen::Index d, Eigen::Index n) {
    if (n < 1 || n > d) {
        throw DimensionError("random_subspace: need 1 <= n <= d");
    }
    return Subspace(orthonormalize(rng.gaussian_matrix(d, n)));
}

Subspace random_subspace_of(Rng& rng, const Subspace& s, Eigen::Index k) {
    if (k < 1 || k > s.dim()) {
        throw DimensionError("random_subspace_of: need 1 <= k <= dim(s)");
    }
    const CMatrix coeffs = orthonormalize(rng.gaussian_matrix(s.dim(), k));
    return Subspace(s.basis() * coeffs);
}

IsometryMap random_unitary(Rng& rng, Eigen::Index d, bool conjugate) {
    return IsometryMap(orthonormalize(rng.gaussian_matrix(d, d)), conjugate);
}

IsometryMap random_isometry(Rng& rng, Eigen::Index d, Eigen::Index d_prime, bool conjugate) {
    if (d > d_prime) {
        throw DimensionError("random_isometry: need d <= d'");
    }
    return IsometryMap(orthonormalize(rng.gaussian_matrix(d_prime, d)), conjugate);
}

std::vector<Projection> converging_sequence(Rng& rng, const Projection& p, int k_max,
                                            const Tolerance& tol) {
    const Subspace range = to_subspace(p, tol);
    const CMatrix base = range.basis();
    std::vector<Projection> out;
    out.reserve(static_cast<std::size_t>(k_max));
    double prev_gap = 2.0;
    for (int k = 1; k <= k_max; ++k) {
        CMatrix direction = rng.gaussian_matrix(base.rows(), base.cols());
        direction /= operator_norm(direction);
        double scale = std::pow(2.0, -k);
        for (int attempt = 0; attempt < 80; ++attempt) {
            const Projection candidate =
                to_projection(Subspace(orthonormalize(base + scale * direction, tol), tol));
            const double gap = gap_distance(candidate, p);
            if (gap < prev_gap) {
                out.push_back(candidate);
                prev_gap = gap;
                break;
            }
            scale *= 0.5;  // keeps gap <= 2^{1-k} and restores monotonicity
        }
        if (static_cast<int>(out.size()) != k) {
            // the perturbation underflowed; the unperturbed projection closes
            // the sequence
            out.push_back(p);
            prev_gap = 0.0;
        }
    }
    return out;
}

}  // namespace minangle
