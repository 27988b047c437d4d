#include "minangle/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace minangle {

void Tolerance::validate() const {
    for (double eps : {eps_rank, eps_angle, eps_entry}) {
        if (!(eps > 0.0) || !(eps < 1e-3)) {
            std::ostringstream os;
            os << "tolerance " << eps << " outside (0, 1e-3)";
            throw InvalidValueError(os.str());
        }
    }
}

bool is_finite(const CMatrix& m) {
    return m.allFinite();
}

void require_finite(const CMatrix& m, const std::string& context) {
    if (!is_finite(m)) {
        throw InvalidValueError(context + ": matrix has non-finite entries");
    }
}

SvdResult svd(const CMatrix& m) {
    require_finite(m, "svd");
    Eigen::JacobiSVD<CMatrix> dec(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (dec.info() != Eigen::Success) {
        throw FactorizationError("svd: Jacobi iteration did not converge");
    }
    return {dec.matrixU(), dec.singularValues(), dec.matrixV()};
}

SvdResult svd_full(const CMatrix& m) {
    require_finite(m, "svd_full");
    Eigen::JacobiSVD<CMatrix> dec(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (dec.info() != Eigen::Success) {
        throw FactorizationError("svd_full: Jacobi iteration did not converge");
    }
    return {dec.matrixU(), dec.singularValues(), dec.matrixV()};
}

double operator_norm(const CMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0.0;
    require_finite(m, "operator_norm");
    Eigen::JacobiSVD<CMatrix> dec(m);
    return dec.singularValues()(0);
}

double smallest_singular_value(const CMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0.0;
    require_finite(m, "smallest_singular_value");
    Eigen::JacobiSVD<CMatrix> dec(m);
    const auto& s = dec.singularValues();
    return s(s.size() - 1);
}

CMatrix orthonormalize(const CMatrix& m, const Tolerance& tol) {
    require_finite(m, "orthonormalize");
    if (m.cols() == 0 || m.rows() < m.cols()) {
        throw DimensionError("orthonormalize: need a tall matrix with at least one column");
    }
    Eigen::JacobiSVD<CMatrix> dec(m);
    const auto& s = dec.singularValues();
    const double smax = s(0);
    const double smin = s(s.size() - 1);
    if (!(smin > tol.eps_rank * smax)) {
        std::ostringstream os;
        os << "orthonormalize: rank-deficient input, smallest singular value " << smin
           << " <= " << tol.eps_rank << " * " << smax;
        throw RankDeficientError(os.str());
    }

    Eigen::HouseholderQR<CMatrix> qr(m);
    CMatrix q = qr.householderQ() * CMatrix::Identity(m.rows(), m.cols());
    const CMatrix r = qr.matrixQR().topRows(m.cols()).triangularView<Eigen::Upper>();
    // Fix the phase of each column so that the implied R has a real positive
    // diagonal; this makes the map deterministic and Haar-correct.
    for (Eigen::Index j = 0; j < q.cols(); ++j) {
        const Complex d = r(j, j);
        const double a = std::abs(d);
        if (a > 0.0) q.col(j) *= d / a;
    }
    return q;
}

CMatrix nullspace(const CMatrix& m, const Tolerance& tol) {
    require_finite(m, "nullspace");
    const Eigen::Index cols = m.cols();
    if (cols == 0) return CMatrix(0, 0);
    const SvdResult f = svd_full(m);
    const Eigen::Index nsv = f.sigma.size();
    const double smax = nsv > 0 ? f.sigma(0) : 0.0;
    if (smax == 0.0) {
        return CMatrix::Identity(cols, cols);  // zero map: everything is in the kernel
    }
    Eigen::Index kernel = cols - nsv;  // columns of v beyond min(rows, cols)
    for (Eigen::Index i = nsv - 1; i >= 0 && f.sigma(i) <= tol.eps_rank * smax; --i) {
        ++kernel;
    }
    return f.v.rightCols(kernel);
}

CMatrix householder_complement(const CVector& unit_vector) {
    const Eigen::Index m = unit_vector.size();
    if (m < 1) {
        throw DimensionError("householder_complement: empty vector");
    }
    const double lead = std::abs(unit_vector(0));
    const Complex alpha =
        lead > 0.0 ? Complex(-unit_vector(0) / lead) : Complex(1.0, 0.0);
    CVector u = unit_vector;
    u(0) -= alpha;
    const double uu = u.squaredNorm();
    CMatrix h = CMatrix::Identity(m, m);
    if (uu > 0.0) {
        h -= (2.0 / uu) * (u * u.adjoint());
    }
    return h.rightCols(m - 1);
}

double clamp_cosine(double c) {
    return std::clamp(c, 0.0, 1.0);
}

double angle_from_cosine(double c) {
    return std::acos(clamp_cosine(c));
}

bool has_orthonormal_columns(const CMatrix& m, double eps) {
    const CMatrix gram = m.adjoint() * m;
    const CMatrix residual = gram - CMatrix::Identity(m.cols(), m.cols());
    return operator_norm(residual) <= eps;
}

}  // namespace minangle
