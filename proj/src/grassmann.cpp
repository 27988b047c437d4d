#include "minangle/grassmann.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace minangle {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

void require_same_ambient(Eigen::Index a, Eigen::Index b, const char* context) {
    if (a != b) {
        std::ostringstream os;
        os << context << ": ambient dimensions differ (" << a << " vs " << b << ")";
        throw DimensionError(os.str());
    }
}

// Largest eigenpair of the Hermitian PSD matrix b, found by repeatedly
// squaring the (normalized) matrix until it collapses onto the dominant
// eigenspace; the eigenvalue is then read off as a Rayleigh quotient of the
// original. Squaring amplifies eigenvalue ratios doubly exponentially, so
// clustered tops that stall plain power iteration are resolved too.
std::pair<double, CVector> top_eigenpair(const CMatrix& b) {
    const Eigen::Index m = b.cols();
    if (m == 1) {
        CVector v(1);
        v(0) = Complex(1.0, 0.0);
        return {std::max(std::real(b(0, 0)), 0.0), v};
    }
    CMatrix power = b;
    for (int round = 0; round < 60; ++round) {
        const double scale = power.norm();
        if (!(scale > 0.0)) {
            return {0.0, CVector::Unit(m, 0)};
        }
        power /= scale;
        power = power * power;
    }
    Eigen::Index dominant = 0;
    double best = -1.0;
    for (Eigen::Index j = 0; j < m; ++j) {
        const double norm = power.col(j).norm();
        if (norm > best) {
            best = norm;
            dominant = j;
        }
    }
    if (!(best > 0.0)) {
        return {0.0, CVector::Unit(m, 0)};
    }
    const CVector v = power.col(dominant).normalized();
    const double lambda = std::real((v.adjoint() * b * v)(0, 0));
    return {std::max(lambda, 0.0), v};
}

}  // namespace

Subspace::Subspace(CMatrix orthonormal_basis, const Tolerance& tol)
    : basis_(std::move(orthonormal_basis)) {
    require_finite(basis_, "Subspace");
    const Eigen::Index d = basis_.rows();
    const Eigen::Index n = basis_.cols();
    if (n < 1 || n > d) {
        std::ostringstream os;
        os << "Subspace: need 1 <= n <= d, got n=" << n << ", d=" << d;
        throw DimensionError(os.str());
    }
    if (!has_orthonormal_columns(basis_, tol.eps_entry)) {
        throw InvalidValueError("Subspace: basis columns are not orthonormal");
    }
}

Subspace Subspace::span_of(const CMatrix& m, const Tolerance& tol) {
    return Subspace(orthonormalize(m, tol), tol);
}

Subspace Subspace::coordinate(Eigen::Index d, const std::vector<Eigen::Index>& axes) {
    CMatrix basis = CMatrix::Zero(d, static_cast<Eigen::Index>(axes.size()));
    for (std::size_t j = 0; j < axes.size(); ++j) {
        basis(axes[j], static_cast<Eigen::Index>(j)) = Complex(1.0, 0.0);
    }
    return Subspace(std::move(basis));
}

Subspace Subspace::line(const CVector& x) {
    const double norm = x.norm();
    if (!(norm > 0.0) || !x.allFinite()) {
        throw InvalidValueError("Subspace::line: zero or non-finite vector");
    }
    return Subspace(x / norm);
}

Projection::Projection(CMatrix m, const Tolerance& tol) : matrix(std::move(m)) {
    require_finite(matrix, "Projection");
    if (matrix.rows() != matrix.cols()) {
        throw DimensionError("Projection: matrix is not square");
    }
    if (operator_norm(matrix - matrix.adjoint()) > tol.eps_entry) {
        throw InvalidValueError("Projection: matrix is not Hermitian");
    }
    if (operator_norm(matrix * matrix - matrix) > tol.eps_entry) {
        throw InvalidValueError("Projection: matrix is not idempotent");
    }
    const Complex tr = matrix.trace();
    if (std::abs(tr.imag()) > tol.eps_entry) {
        throw InvalidValueError("Projection: trace is not real");
    }
    rank = static_cast<Eigen::Index>(std::llround(tr.real()));
    if (std::abs(tr.real() - static_cast<double>(rank)) > tol.eps_entry) {
        throw InvalidValueError("Projection: trace is not within eps_entry of an integer");
    }
}

Projection to_projection(const Subspace& s) {
    return Projection(s.basis() * s.basis().adjoint());
}

Subspace to_subspace(const Projection& p, const Tolerance& tol) {
    if (p.rank < 1) {
        throw InvalidValueError("to_subspace: zero projection has no range subspace");
    }
    const SvdResult f = svd(p.matrix);
    Eigen::Index ones = 0;
    for (Eigen::Index i = 0; i < f.sigma.size(); ++i) {
        const double s = f.sigma(i);
        if (s >= 1.0 - tol.eps_rank) {
            ++ones;
        } else if (s > tol.eps_rank) {
            std::ostringstream os;
            os << "to_subspace: singular value " << s << " is neither 0 nor 1 at eps_rank="
               << tol.eps_rank;
            throw IllConditionedProjectionError(os.str());
        }
    }
    if (ones != p.rank) {
        std::ostringstream os;
        os << "to_subspace: declared rank " << p.rank << " but " << ones
           << " singular values near 1";
        throw IllConditionedProjectionError(os.str());
    }
    return Subspace(f.u.leftCols(ones), tol);
}

double angle_between_lines(const CVector& x, const CVector& y, const Tolerance& tol) {
    if (x.size() != y.size()) {
        throw DimensionError("angle_between_lines: vector lengths differ");
    }
    if (std::abs(x.norm() - 1.0) > tol.eps_entry || std::abs(y.norm() - 1.0) > tol.eps_entry) {
        throw InvalidValueError("angle_between_lines: inputs must be unit vectors");
    }
    return angle_from_cosine(std::abs((x.adjoint() * y)(0, 0)));
}

PrincipalAngles principal_angles(const Subspace& s, const Subspace& t, const Tolerance& tol) {
    require_same_ambient(s.ambient_dim(), t.ambient_dim(), "principal_angles");
    if (s.dim() != t.dim()) {
        throw DimensionError("principal_angles: subspace dimensions differ");
    }
    const CMatrix gram = s.basis().adjoint() * t.basis();
    const SvdResult f = svd(gram);
    PrincipalAngles out;
    out.angles.resize(static_cast<std::size_t>(f.sigma.size()));
    for (Eigen::Index k = 0; k < f.sigma.size(); ++k) {
        out.angles[static_cast<std::size_t>(k)] = angle_from_cosine(f.sigma(k));
    }
    out.left_frame = s.basis() * f.u;
    out.right_frame = t.basis() * f.v;
    (void)tol;
    return out;
}

PrincipalAngles principal_angles_oracle(const Subspace& s, const Subspace& t,
                                        const Tolerance& tol) {
    require_same_ambient(s.ambient_dim(), t.ambient_dim(), "principal_angles_oracle");
    if (s.dim() != t.dim()) {
        throw DimensionError("principal_angles_oracle: subspace dimensions differ");
    }
    const Eigen::Index n = s.dim();
    CMatrix bs = s.basis();
    CMatrix bt = t.basis();

    PrincipalAngles out;
    out.left_frame.resize(s.ambient_dim(), n);
    out.right_frame.resize(s.ambient_dim(), n);

    for (Eigen::Index k = 0; k < n; ++k) {
        const CMatrix gram = bs.adjoint() * bt;
        const auto [lambda, z] = top_eigenpair(gram.adjoint() * gram);
        const double sigma = std::sqrt(lambda);

        CVector w;  // left singular vector in the coordinates of bs
        if (sigma > 1e-12) {
            w = (gram * z) / sigma;
            w.normalize();
        } else {
            // every remaining angle is pi/2; any coordinate direction will do
            w = CVector::Unit(bs.cols(), 0);
        }
        out.angles.push_back(angle_from_cosine(sigma));
        out.left_frame.col(k) = bs * w;
        out.right_frame.col(k) = bt * z;

        if (k + 1 < n) {
            bs = bs * householder_complement(w);
            bt = bt * householder_complement(z);
        }
    }
    // roundoff can produce tiny inversions of the recursive order
    std::sort(out.angles.begin(), out.angles.end());
    (void)tol;
    return out;
}

double min_angle(const Subspace& s, const Subspace& t, const Tolerance& tol) {
    require_same_ambient(s.ambient_dim(), t.ambient_dim(), "min_angle");
    (void)tol;
    return angle_from_cosine(operator_norm(s.basis().adjoint() * t.basis()));
}

double min_angle(const Projection& p, const Projection& q, const Tolerance& tol) {
    if (p.rank < 1 || q.rank < 1) {
        throw InvalidValueError("min_angle: projections must be nonzero");
    }
    return min_angle(to_subspace(p, tol), to_subspace(q, tol), tol);
}

double gap_distance(const Projection& p, const Projection& q) {
    require_same_ambient(p.ambient_dim(), q.ambient_dim(), "gap_distance");
    return operator_norm(p.matrix - q.matrix);
}

double gap_distance(const Subspace& s, const Subspace& t) {
    return gap_distance(to_projection(s), to_projection(t));
}

double trace_product(const Projection& p, const Projection& q, const Tolerance& tol) {
    require_same_ambient(p.ambient_dim(), q.ambient_dim(), "trace_product");
    const Complex tr = (p.matrix * q.matrix).trace();
    if (std::abs(tr.imag()) > tol.eps_entry) {
        std::ostringstream os;
        os << "trace_product: imaginary part " << tr.imag() << " exceeds eps_entry";
        throw ToleranceConflictError(os.str());
    }
    return tr.real();
}

double trace_product(const Subspace& s, const Subspace& t, const Tolerance& tol) {
    return trace_product(to_projection(s), to_projection(t), tol);
}

IntersectionAnalysis intersection_analysis(const Subspace& s, const Subspace& t,
                                           const Tolerance& tol) {
    require_same_ambient(s.ambient_dim(), t.ambient_dim(), "intersection");
    const CMatrix gram = s.basis().adjoint() * t.basis();
    const SvdResult f = svd(gram);

    IntersectionAnalysis out;
    for (Eigen::Index i = 0; i < f.sigma.size(); ++i) {
        out.angles.push_back(angle_from_cosine(f.sigma(i)));
    }
    for (double theta : out.angles) {
        if (theta < tol.eps_angle) ++out.dimension;
        if (theta >= tol.eps_angle / 10.0 && theta <= tol.eps_angle * 10.0) {
            out.ill_conditioned = true;
        }
    }
    if (out.dimension > 0) {
        // left principal vectors of the near-zero angles: inside S exactly,
        // within eps_angle of T
        out.subspace = Subspace(s.basis() * f.u.leftCols(out.dimension), tol);
    }
    return out;
}

std::optional<Subspace> intersection(const Subspace& s, const Subspace& t,
                                     const Tolerance& tol) {
    return intersection_analysis(s, t, tol).subspace;
}

bool is_orthogonal(const Projection& p, const Projection& q, const Tolerance& tol) {
    const bool by_angle = std::abs(min_angle(p, q, tol) - kHalfPi) < tol.eps_angle;
    const bool by_product = operator_norm(p.matrix * q.matrix) <= tol.eps_entry;
    if (by_angle != by_product) {
        std::ostringstream os;
        os << "is_orthogonal: angle route says " << by_angle << " but ||PQ|| route says "
           << by_product;
        throw ToleranceConflictError(os.str());
    }
    return by_angle;
}

bool is_orthogonal(const Subspace& s, const Subspace& t, const Tolerance& tol) {
    return is_orthogonal(to_projection(s), to_projection(t), tol);
}

bool is_trivial_intersection(const Projection& p, const Projection& q, const Tolerance& tol) {
    return min_angle(p, q, tol) > tol.eps_angle;
}

bool is_trivial_intersection(const Subspace& s, const Subspace& t, const Tolerance& tol) {
    return min_angle(s, t, tol) > tol.eps_angle;
}

bool is_adjacent(const Subspace& s, const Subspace& t, const Tolerance& tol) {
    if (s.dim() != t.dim()) {
        throw DimensionError("is_adjacent: subspace dimensions differ");
    }
    return intersection_analysis(s, t, tol).dimension == s.dim() - 1;
}

OneOrthogonalityCheck one_orthogonality_check(const Subspace& s, const Subspace& t,
                                              const Tolerance& tol) {
    if (s.dim() != t.dim()) {
        throw DimensionError("one_orthogonality_check: subspace dimensions differ");
    }
    if (s.dim() < 2) {
        throw UndefinedRelationError("1-orthogonality is undefined for rank-one subspaces");
    }
    OneOrthogonalityCheck out;
    const PrincipalAngles pa = principal_angles(s, t, tol);
    for (double theta : pa.angles) {
        if (theta < tol.eps_angle) ++out.intersection_dim;
        if (theta >= tol.eps_angle / 10.0 && theta <= tol.eps_angle * 10.0) {
            out.ill_conditioned = true;
        }
    }
    if (out.intersection_dim != 1) {
        out.holds = false;
        return out;
    }
    // deflate the shared direction out of each side and compare the remainders
    const CVector x = pa.left_frame.col(0);
    const CVector y = pa.right_frame.col(0);
    const CMatrix su = s.basis() * householder_complement(s.basis().adjoint() * x);
    const CMatrix tv = t.basis() * householder_complement(t.basis().adjoint() * y);
    out.complement_cosine = operator_norm(su.adjoint() * tv);
    out.holds = out.complement_cosine <= tol.eps_angle;
    return out;
}

bool is_one_orthogonal(const Subspace& s, const Subspace& t, const Tolerance& tol) {
    return one_orthogonality_check(s, t, tol).holds;
}

Projection direct_sum(const Projection& p, const Projection& q) {
    const Eigen::Index dp = p.ambient_dim();
    const Eigen::Index dq = q.ambient_dim();
    CMatrix block = CMatrix::Zero(dp + dq, dp + dq);
    block.topLeftCorner(dp, dp) = p.matrix;
    block.bottomRightCorner(dq, dq) = q.matrix;
    return Projection(std::move(block));
}

}  // namespace minangle
