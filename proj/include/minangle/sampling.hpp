#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "minangle/grassmann.hpp"
#include "minangle/maps.hpp"

namespace minangle {

/// Derives an independent stream seed from a base seed and a trial counter
/// (splitmix64 of base xor counter), so parallel trial runs reproduce serial
/// ones.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t counter);

/// Deterministic random source: mt19937_64 for the raw stream, uniform
/// doubles from the top 53 bits, Gaussians by Box-Muller. The whole stack is
/// pinned here (not delegated to std:: distributions) so a seed reproduces
/// the same values on every standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1).
    double uniform();

    /// Standard normal.
    double gaussian();

    /// Standard complex Gaussian, E|z|^2 = 1.
    Complex complex_gaussian();

    /// Uniform integer in [0, bound).
    std::uint64_t integer(std::uint64_t bound);

    bool coin() { return integer(2) == 1; }

    CMatrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols);
    CVector unit_vector(Eigen::Index d);

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// Haar-distributed n-dimensional subspace of C^d (orthonormalized complex
/// Gaussian matrix).
Subspace random_subspace(Rng& rng, Eigen::Index d, Eigen::Index n);

/// Haar-distributed random subspace of s with the given dimension.
Subspace random_subspace_of(Rng& rng, const Subspace& s, Eigen::Index k);

/// Haar unitary on C^d, optionally flagged conjugate-linear.
IsometryMap random_unitary(Rng& rng, Eigen::Index d, bool conjugate = false);

/// Isometry C^d -> C^{d_prime}, d <= d_prime, with Haar-distributed range.
IsometryMap random_isometry(Rng& rng, Eigen::Index d, Eigen::Index d_prime,
                            bool conjugate = false);

/// Rank-n projections R_1, ..., R_kmax with gap(R_k, p) <= 2^{1-k}, strictly
/// decreasing: the range of orthonormalize(B + s_k G_k) for a basis B of p,
/// unit-operator-norm Gaussian G_k and s_k = 2^-k (halved further whenever
/// monotonicity would fail).
std::vector<Projection> converging_sequence(Rng& rng, const Projection& p, int k_max,
                                            const Tolerance& tol = {});

}  // namespace minangle
