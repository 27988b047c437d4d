#pragma once

#include <functional>
#include <string>
#include <vector>

#include "minangle/maps.hpp"
#include "minangle/report.hpp"
#include "minangle/sampling.hpp"

namespace minangle {

struct SharpPair {
    Subspace u;
    Subspace v;
};

/// A 1-orthogonal pair of n-dimensional subspaces intersecting exactly in the
/// line through x: the unit vector x is completed to an orthonormal frame of
/// 2n-1 vectors, randomly when an Rng is supplied, deterministically
/// otherwise. Requires ambient dimension >= 2n-1.
SharpPair find_sharp_pair(const CVector& x, Eigen::Index n, Rng* rng = nullptr,
                          const Tolerance& tol = {});

struct LineMapEntry {
    Subspace input;                        // rank one, domain side
    Subspace output;                       // rank one, codomain side
    double well_definedness_residual = 0;  // angle between candidates from
                                           // independent sharp pairs
};

/// A map on rank-one subspaces induced from a rank-n map, evaluated on a
/// sampled family of lines.
struct LineMap {
    std::vector<LineMapEntry> entries;
    std::string provenance;

    const LineMapEntry* find(const Subspace& line, const Tolerance& tol = {}) const;
    double max_residual() const;
};

/// Black-box view of a subspace map, so sampled maps, table maps, and
/// compositions share one interface.
using SubspaceMap = std::function<Subspace(const Subspace&)>;

/// The canonical line family recovery needs: [e_1]..[e_d], [(e_1+e_j)/sqrt2]
/// for j = 2..d, and [(e_1 + i e_2)/sqrt2].
std::vector<Subspace> recovery_lines(Eigen::Index d);

/// Induces the line map x -> phi(U) cap phi(V) over sharp pairs (U, V)
/// through each sampled line. Each line is evaluated with pairs_per_line
/// independent sharp pairs; the angle between the first candidate and the
/// others is recorded as the well-definedness residual. A candidate
/// intersection that is not one-dimensional throws PreserverViolationError.
LineMap build_line_map(const SubspaceMap& phi, Eigen::Index n,
                       const std::vector<Subspace>& lines, Rng& rng,
                       int pairs_per_line = 2, const Tolerance& tol = {});
LineMap build_line_map(const GrassmannMap& phi, const std::vector<Subspace>& lines,
                       Rng& rng, int pairs_per_line = 2, const Tolerance& tol = {});

struct RecoveryResult {
    IsometryMap isometry;
    bool global_phase_fixed = false;
    double max_residual = 0.0;  // recorded, never silently thresholded
};

/// Constructive Wigner recovery: reads the columns of U off the images of the
/// basis lines, phase-aligns them through the images of the sum lines
/// [(e_1+e_j)/sqrt2], decides the conjugation flag from [(e_1+i e_2)/sqrt2],
/// and fixes the global phase by making the first nonzero entry of the first
/// column real positive. Throws NotWignerMapError when alignment is
/// impossible within eps_angle.
RecoveryResult recover_isometry(const LineMap& psi, Eigen::Index d,
                                const Tolerance& tol = {});

enum class PreserverBranch { standard, complement };

std::string to_string(PreserverBranch branch);

struct PreserverVerdict {
    PreserverBranch branch = PreserverBranch::standard;
    RecoveryResult recovery;
    double max_ma_deviation = 0.0;  // over the sampled hypothesis pairs
    int trials = 0;
};

/// End-to-end pipeline: checks ma-preservation on sampled pairs (violations
/// beyond 10 * eps_angle throw PreserverViolationError), induces the line
/// map, recovers the isometry, and validates phi(S) against U S on fresh
/// samples; at d = 2n it falls back to the complement branch when the
/// standard one does not fit within the branch threshold 1e-3.
PreserverVerdict verify_preserver(const GrassmannMap& phi, int trials, std::uint64_t seed,
                                  const Tolerance& tol = {});

// --- Certificates ---------------------------------------------------------

/// Witness that complementation on C^{2n}, n >= 2, is not of the form
/// P -> U P U^*: three diagonal rank-n projections sharing the first diagonal
/// entry and jointly covering every position make A = (P1+P2+P3)/3 invertible
/// with eigenvalue 1, so I - A is singular while U A U^* cannot be.
struct ComplementCertificate {
    Eigen::Index n = 0;
    CMatrix p1, p2, p3;
    CMatrix a;
    double min_singular_a = 0.0;
    double eigenvalue_one_residual = 0.0;  // ||(A - I) e_1||
    double min_singular_i_minus_a = 0.0;
};

ComplementCertificate certificate_complement_not_standard(Eigen::Index n);
void validate(const ComplementCertificate& cert, const Tolerance& tol = {});

/// At rank one on C^2 complementation IS standard: I - P = U P^t U^* with
/// U = [[0,1],[-1,0]], verified over a (p, z) grid of rank-one projections,
/// along with P^t = conj(P).
struct TwoByTwoCertificate {
    std::vector<double> p_grid;
    std::vector<Complex> z_grid;
    double max_identity_residual = 0.0;
    double max_conjugation_residual = 0.0;
};

TwoByTwoCertificate certificate_two_by_two();
void validate(const TwoByTwoCertificate& cert);

/// In the regime n+1 <= d < 2n any two rank-n subspaces of C^d intersect, so
/// ma vanishes identically; evidenced on a seeded sample.
struct DegenerateRegimeCertificate {
    Eigen::Index n = 0;
    Eigen::Index d = 0;
    std::uint64_t seed = 0;
    int trials = 0;
    double max_ma = 0.0;
    Eigen::Index min_intersection_dim = 0;
};

DegenerateRegimeCertificate certificate_degenerate_regime(Eigen::Index n, Eigen::Index d,
                                                          std::uint64_t seed,
                                                          int trials = 1000,
                                                          const Tolerance& tol = {});
void validate(const DegenerateRegimeCertificate& cert, const Tolerance& tol = {});

struct SharpTriple {
    Subspace u;
    Subspace v;
    Subspace w;
};

/// Pairwise 1-orthogonal triple through one common random line; requires
/// d >= 3n-2. Trial t of check_lemma_2_2 draws its triple from
/// Rng(derive_seed(seed, t)), so callers can reproduce the inputs.
SharpTriple sample_sharp_triple(Rng& rng, Eigen::Index d, Eigen::Index n,
                                const Tolerance& tol = {});

/// Samples triples (U, V, W), pairwise 1-orthogonal through a common line,
/// and checks that the images under phi are pairwise 1-orthogonal with one
/// common intersection line. Violations are reported, not thrown. Requires
/// d >= 3n-2 to build the hypothesis triples.
Report check_lemma_2_2(const GrassmannMap& phi, int trials, std::uint64_t seed,
                       const Tolerance& tol = {});

}  // namespace minangle
