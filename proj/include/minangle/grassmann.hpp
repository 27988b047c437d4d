#pragma once

#include <optional>
#include <vector>

#include "minangle/numerics.hpp"

namespace minangle {

/// An n-dimensional subspace of C^d, held as a d x n matrix with orthonormal
/// columns. The constructor validates orthonormality; use span_of() to build
/// one from an arbitrary full-rank matrix.
class Subspace {
public:
    Subspace(CMatrix orthonormal_basis, const Tolerance& tol = {});

    /// Orthonormalizes the columns of m and spans them.
    static Subspace span_of(const CMatrix& m, const Tolerance& tol = {});

    /// Span of the coordinate axes with the given 0-based indices in C^d.
    static Subspace coordinate(Eigen::Index d, const std::vector<Eigen::Index>& axes);

    /// The line through a nonzero vector (normalized internally).
    static Subspace line(const CVector& x);

    Eigen::Index ambient_dim() const { return basis_.rows(); }
    Eigen::Index dim() const { return basis_.cols(); }
    const CMatrix& basis() const { return basis_; }

private:
    CMatrix basis_;
};

/// A d x d Hermitian idempotent matrix of known rank.
struct Projection {
    CMatrix matrix;
    Eigen::Index rank = 0;

    /// Validates Hermitian/idempotent invariants and reads the rank off the
    /// trace. Throws InvalidValueError when the matrix is not a projection.
    explicit Projection(CMatrix m, const Tolerance& tol = {});

    Eigen::Index ambient_dim() const { return matrix.rows(); }
};

/// The ascending principal angles between two equal-rank subspaces, together
/// with the two orthonormal frames of principal vectors.
struct PrincipalAngles {
    std::vector<double> angles;  // ascending, in [0, pi/2]
    CMatrix left_frame;          // d x n, columns x_k
    CMatrix right_frame;         // d x n, columns y_k

    double smallest() const { return angles.front(); }
    double largest() const { return angles.back(); }
};

Projection to_projection(const Subspace& s);

/// Range of a projection as a Subspace. Throws IllConditionedProjectionError
/// when a singular value of the matrix is too far from both 0 and 1 for the
/// rank decision to be trustworthy.
Subspace to_subspace(const Projection& p, const Tolerance& tol = {});

/// arccos |<x,y>| for unit vectors; throws InvalidValueError on non-unit input.
double angle_between_lines(const CVector& x, const CVector& y, const Tolerance& tol = {});

/// Principal angles from the SVD of the cross-Gram matrix basis(S)^H basis(T).
PrincipalAngles principal_angles(const Subspace& s, const Subspace& t,
                                 const Tolerance& tol = {});

/// Second, independent code path: the recursive minimization definition.
/// Extracts the top singular pair of the cross-Gram matrix by power
/// iteration, deflates both subspaces by the principal vectors found, and
/// recurses. Exists for cross-validation of principal_angles().
PrincipalAngles principal_angles_oracle(const Subspace& s, const Subspace& t,
                                        const Tolerance& tol = {});

/// Minimal angle: the smallest principal angle, defined for any pair of
/// nonzero subspaces (ranks may differ) as arccos of the largest singular
/// value of the rectangular cross-Gram matrix.
double min_angle(const Subspace& s, const Subspace& t, const Tolerance& tol = {});
double min_angle(const Projection& p, const Projection& q, const Tolerance& tol = {});

/// Gap metric ||P - Q|| (operator norm).
double gap_distance(const Projection& p, const Projection& q);
double gap_distance(const Subspace& s, const Subspace& t);

/// Re tr(PQ); throws ToleranceConflictError if the imaginary part exceeds
/// eps_entry.
double trace_product(const Projection& p, const Projection& q, const Tolerance& tol = {});
double trace_product(const Subspace& s, const Subspace& t, const Tolerance& tol = {});

struct IntersectionAnalysis {
    std::optional<Subspace> subspace;  // empty when the intersection is {0}
    Eigen::Index dimension = 0;
    std::vector<double> angles;        // min(dim S, dim T) smallest angles, ascending
    bool ill_conditioned = false;      // an angle within a factor 10 of eps_angle
};

/// Intersection decided by counting principal angles below eps_angle; the
/// angles within a factor 10 of the threshold are flagged, not silently
/// decided. Ranks may differ.
IntersectionAnalysis intersection_analysis(const Subspace& s, const Subspace& t,
                                           const Tolerance& tol = {});

std::optional<Subspace> intersection(const Subspace& s, const Subspace& t,
                                     const Tolerance& tol = {});

/// Orthogonality decided by two routes that must agree: |ma - pi/2| <
/// eps_angle and ||PQ|| <= eps_entry. Disagreement throws
/// ToleranceConflictError.
bool is_orthogonal(const Projection& p, const Projection& q, const Tolerance& tol = {});
bool is_orthogonal(const Subspace& s, const Subspace& t, const Tolerance& tol = {});

/// True iff ma > eps_angle, i.e. the ranges meet only in {0}.
bool is_trivial_intersection(const Projection& p, const Projection& q,
                             const Tolerance& tol = {});
bool is_trivial_intersection(const Subspace& s, const Subspace& t,
                             const Tolerance& tol = {});

/// dim(S cap T) == n - 1 for equal-rank subspaces.
bool is_adjacent(const Subspace& s, const Subspace& t, const Tolerance& tol = {});

/// 1-orthogonality: dim(S cap T) == 1 and the orthogonal complements of the
/// common line inside S and inside T are mutually orthogonal. Undefined for
/// rank one (throws UndefinedRelationError).
bool is_one_orthogonal(const Subspace& s, const Subspace& t, const Tolerance& tol = {});

/// Numeric version used by reports: dimension of the intersection plus the
/// largest cosine between the two complements (0 when 1-orthogonal).
struct OneOrthogonalityCheck {
    Eigen::Index intersection_dim = 0;
    double complement_cosine = 1.0;
    bool holds = false;
    bool ill_conditioned = false;  // an angle within a factor 10 of eps_angle
};
OneOrthogonalityCheck one_orthogonality_check(const Subspace& s, const Subspace& t,
                                              const Tolerance& tol = {});

/// Block-diagonal direct sum; ranks add.
Projection direct_sum(const Projection& p, const Projection& q);

}  // namespace minangle
