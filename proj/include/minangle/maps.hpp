#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minangle/grassmann.hpp"

namespace minangle {

/// A linear or conjugate-linear isometry, stored as a d' x d matrix with
/// orthonormal columns plus a conjugation flag. A conjugate-linear map acts
/// as x -> U conj(x), with conj taken entrywise in the standard basis.
struct IsometryMap {
    CMatrix matrix;
    bool conjugate = false;

    IsometryMap(CMatrix m, bool conj, const Tolerance& tol = {});

    Eigen::Index domain_dim() const { return matrix.cols(); }
    Eigen::Index codomain_dim() const { return matrix.rows(); }
};

Subspace apply_isometry(const IsometryMap& u, const Subspace& s);
CVector apply_isometry(const IsometryMap& u, const CVector& x);

/// Orthogonal complement of s; dimension d - n. Throws DimensionError for a
/// full subspace (the complement would be zero-dimensional).
Subspace complement(const Subspace& s, const Tolerance& tol = {});

/// Rule selecting a fixed-rank subprojection 0 != rho(P) <= P.
using SubprojectionRule = std::function<Subspace(const Subspace&)>;

/// Default selector: the line spanned by the column of the projection matrix
/// holding its largest-magnitude entry (first such in row-major order). The
/// choice depends only on the span, and is deliberately not monotone under
/// inclusion of subspaces.
Subspace pivot_column_line(const Subspace& s);

/// A map on rank-n subspaces of C^d. Four kinds:
///   standard             S -> U S            (isometry, optionally conjugated)
///   complement_standard  S -> U S^perp       (only at d = 2n)
///   table                explicit input/output pairs, miss -> TableMissError
///   nonstandard_demo     S -> S (+) rho(S) block-embedded into C^{2d},
///                        rank n + r; preserves ma without being standard
class GrassmannMap {
public:
    enum class Kind { standard, complement_standard, table, nonstandard_demo };

    static GrassmannMap standard(IsometryMap u, Eigen::Index n);
    static GrassmannMap complement_standard(IsometryMap u, Eigen::Index n);
    static GrassmannMap table(Eigen::Index d, Eigen::Index n,
                              std::vector<std::pair<Subspace, Subspace>> pairs);
    static GrassmannMap nonstandard_demo(Eigen::Index d, Eigen::Index n,
                                         Eigen::Index selector_rank,
                                         SubprojectionRule rule, std::string rule_name);

    Kind kind() const { return kind_; }
    Eigen::Index domain_dim() const { return d_; }
    Eigen::Index domain_rank() const { return n_; }
    Eigen::Index codomain_dim() const;
    Eigen::Index codomain_rank() const;

    const IsometryMap& isometry() const;
    const std::vector<std::pair<Subspace, Subspace>>& pairs() const { return pairs_; }
    Eigen::Index selector_rank() const { return selector_rank_; }
    const std::string& rule_name() const { return rule_name_; }

    /// True when the selector rank equals the domain rank, which degenerates
    /// the demo into a plain block embedding.
    bool degenerate_selector() const {
        return kind_ == Kind::nonstandard_demo && selector_rank_ == n_;
    }

    Subspace apply(const Subspace& s, const Tolerance& tol = {}) const;

private:
    GrassmannMap(Kind kind, Eigen::Index d, Eigen::Index n)
        : kind_(kind), d_(d), n_(n) {}

    Kind kind_;
    Eigen::Index d_;
    Eigen::Index n_;
    std::optional<IsometryMap> isometry_;
    std::vector<std::pair<Subspace, Subspace>> pairs_;
    SubprojectionRule rule_;
    Eigen::Index selector_rank_ = 0;
    std::string rule_name_;
};

/// Finite analogue of the block construction that preserves ma between
/// subspaces of different Grassmannians: the codomain rank grows by the
/// selector rank. selector_rank == n is accepted but flagged degenerate.
GrassmannMap construct_nonstandard_demo(Eigen::Index d, Eigen::Index n,
                                        Eigen::Index selector_rank = 1);

std::string to_string(GrassmannMap::Kind kind);
GrassmannMap::Kind kind_from_string(const std::string& name);

}  // namespace minangle
