#pragma once

#include <complex>
#include <string>

#include <Eigen/Dense>

#include "minangle/errors.hpp"

namespace minangle {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Numerical thresholds used throughout the library.
///
/// eps_rank is relative: a singular value counts as zero when it is below
/// eps_rank times the largest singular value of the same matrix. eps_angle is
/// an absolute threshold in radians for angle comparisons, eps_entry an
/// absolute threshold for elementwise and operator-norm matrix comparisons.
struct Tolerance {
    double eps_rank = 1e-8;
    double eps_angle = 1e-7;
    double eps_entry = 1e-10;

    /// Throws InvalidValueError unless all thresholds lie in (0, 1e-3).
    void validate() const;
};

struct SvdResult {
    CMatrix u;          // orthonormal columns
    RealVector sigma;   // non-negative, descending
    CMatrix v;          // orthonormal columns
};

bool is_finite(const CMatrix& m);

/// Throws InvalidValueError when m contains NaN or Inf.
void require_finite(const CMatrix& m, const std::string& context);

/// Thin singular value decomposition, m = u * diag(sigma) * v^H.
SvdResult svd(const CMatrix& m);

/// Like svd() but with full (square) u and v.
SvdResult svd_full(const CMatrix& m);

/// Largest singular value.
double operator_norm(const CMatrix& m);

/// Smallest singular value (of min(rows, cols) many).
double smallest_singular_value(const CMatrix& m);

/// Orthonormal basis of the column space, same shape as the input.
///
/// Householder QR with the diagonal of R phase-fixed to be real positive, so
/// an input that already has orthonormal columns is returned unchanged and
/// orthonormalizing a Gaussian matrix yields a Haar-distributed frame.
/// Throws RankDeficientError when the smallest singular value is at or below
/// eps_rank times the largest.
CMatrix orthonormalize(const CMatrix& m, const Tolerance& tol = {});

/// Orthonormal basis of { x : m x = 0 }, decided at eps_rank relative to the
/// largest singular value. May have zero columns.
CMatrix nullspace(const CMatrix& m, const Tolerance& tol = {});

/// Columns form an orthonormal basis of the orthogonal complement of the
/// given unit vector (size m in, m x (m-1) out), via a unitary Householder
/// reflector.
CMatrix householder_complement(const CVector& unit_vector);

/// Clamps a computed cosine into [0, 1] before arccos.
double clamp_cosine(double c);

/// arccos of a clamped cosine; result in [0, pi/2].
double angle_from_cosine(double c);

/// Orthonormal columns check: ||m^H m - I|| <= eps.
bool has_orthonormal_columns(const CMatrix& m, double eps);

}  // namespace minangle
