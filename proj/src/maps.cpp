#include "minangle/maps.hpp"

#include <sstream>

namespace minangle {

IsometryMap::IsometryMap(CMatrix m, bool conj, const Tolerance& tol)
    : matrix(std::move(m)), conjugate(conj) {
    require_finite(matrix, "IsometryMap");
    if (matrix.rows() < matrix.cols() || matrix.cols() < 1) {
        throw DimensionError("IsometryMap: matrix must be tall, d' >= d >= 1");
    }
    if (!has_orthonormal_columns(matrix, tol.eps_entry)) {
        throw InvalidValueError("IsometryMap: columns are not orthonormal");
    }
}

Subspace apply_isometry(const IsometryMap& u, const Subspace& s) {
    if (u.domain_dim() != s.ambient_dim()) {
        throw DimensionError("apply_isometry: domain dimension mismatch");
    }
    const CMatrix mapped =
        u.conjugate ? CMatrix(u.matrix * s.basis().conjugate()) : CMatrix(u.matrix * s.basis());
    return Subspace(mapped);
}

CVector apply_isometry(const IsometryMap& u, const CVector& x) {
    if (u.domain_dim() != x.size()) {
        throw DimensionError("apply_isometry: domain dimension mismatch");
    }
    return u.conjugate ? CVector(u.matrix * x.conjugate()) : CVector(u.matrix * x);
}

Subspace complement(const Subspace& s, const Tolerance& tol) {
    if (s.dim() == s.ambient_dim()) {
        throw DimensionError("complement: full subspace has a zero-dimensional complement");
    }
    return Subspace(nullspace(CMatrix(s.basis().adjoint()), tol), tol);
}

Subspace pivot_column_line(const Subspace& s) {
    const CMatrix p = s.basis() * s.basis().adjoint();
    Eigen::Index pivot_col = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < p.rows(); ++i) {
        for (Eigen::Index j = 0; j < p.cols(); ++j) {
            const double a = std::abs(p(i, j));
            if (a > best) {
                best = a;
                pivot_col = j;
            }
        }
    }
    return Subspace::line(p.col(pivot_col));
}

GrassmannMap GrassmannMap::standard(IsometryMap u, Eigen::Index n) {
    if (n < 1 || n > u.domain_dim()) {
        throw DimensionError("GrassmannMap::standard: rank outside 1..d");
    }
    GrassmannMap map(Kind::standard, u.domain_dim(), n);
    map.isometry_ = std::move(u);
    return map;
}

GrassmannMap GrassmannMap::complement_standard(IsometryMap u, Eigen::Index n) {
    if (u.domain_dim() != u.codomain_dim()) {
        throw DimensionError("GrassmannMap::complement_standard: isometry must be square");
    }
    if (u.domain_dim() != 2 * n) {
        throw DimensionError("GrassmannMap::complement_standard: requires d = 2n");
    }
    GrassmannMap map(Kind::complement_standard, u.domain_dim(), n);
    map.isometry_ = std::move(u);
    return map;
}

GrassmannMap GrassmannMap::table(Eigen::Index d, Eigen::Index n,
                                 std::vector<std::pair<Subspace, Subspace>> pairs) {
    GrassmannMap map(Kind::table, d, n);
    for (const auto& [in, out] : pairs) {
        if (in.ambient_dim() != d || in.dim() != n) {
            throw DimensionError("GrassmannMap::table: entry input outside declared domain");
        }
        (void)out;
    }
    map.pairs_ = std::move(pairs);
    return map;
}

GrassmannMap GrassmannMap::nonstandard_demo(Eigen::Index d, Eigen::Index n,
                                            Eigen::Index selector_rank,
                                            SubprojectionRule rule, std::string rule_name) {
    if (selector_rank < 1 || selector_rank > n) {
        throw DimensionError("GrassmannMap::nonstandard_demo: selector rank outside 1..n");
    }
    GrassmannMap map(Kind::nonstandard_demo, d, n);
    map.rule_ = std::move(rule);
    map.selector_rank_ = selector_rank;
    map.rule_name_ = std::move(rule_name);
    return map;
}

Eigen::Index GrassmannMap::codomain_dim() const {
    switch (kind_) {
        case Kind::standard:
        case Kind::complement_standard:
            return isometry_->codomain_dim();
        case Kind::table:
            return pairs_.empty() ? d_ : pairs_.front().second.ambient_dim();
        case Kind::nonstandard_demo:
            return 2 * d_;
    }
    return d_;
}

Eigen::Index GrassmannMap::codomain_rank() const {
    return kind_ == Kind::nonstandard_demo ? n_ + selector_rank_ : n_;
}

const IsometryMap& GrassmannMap::isometry() const {
    if (!isometry_) {
        throw InvalidValueError("GrassmannMap: no isometry for this kind");
    }
    return *isometry_;
}

Subspace GrassmannMap::apply(const Subspace& s, const Tolerance& tol) const {
    if (s.ambient_dim() != d_ || s.dim() != n_) {
        std::ostringstream os;
        os << "GrassmannMap::apply: input is " << s.dim() << "-dim in C^" << s.ambient_dim()
           << ", domain is " << n_ << "-dim in C^" << d_;
        throw DimensionError(os.str());
    }
    switch (kind_) {
        case Kind::standard:
            return apply_isometry(*isometry_, s);
        case Kind::complement_standard:
            return apply_isometry(*isometry_, complement(s, tol));
        case Kind::table: {
            for (const auto& [in, out] : pairs_) {
                if (principal_angles(s, in, tol).largest() < tol.eps_angle) {
                    return out;
                }
            }
            throw TableMissError("GrassmannMap::apply: subspace not present in table");
        }
        case Kind::nonstandard_demo: {
            const Subspace rho = rule_(s);
            if (rho.ambient_dim() != d_ || rho.dim() != selector_rank_) {
                throw SelectorContractError(
                    "nonstandard_demo: selector returned the wrong shape");
            }
            // containment rho <= s, checked as the residual of projecting back
            const CMatrix proj = s.basis() * s.basis().adjoint();
            const double residual =
                operator_norm(rho.basis() - proj * rho.basis());
            if (residual > 1e3 * tol.eps_entry) {
                std::ostringstream os;
                os << "nonstandard_demo: selector output leaves the input span (residual "
                   << residual << ")";
                throw SelectorContractError(os.str());
            }
            CMatrix block = CMatrix::Zero(2 * d_, n_ + selector_rank_);
            block.topLeftCorner(d_, n_) = s.basis();
            block.bottomRightCorner(d_, selector_rank_) = rho.basis();
            return Subspace(std::move(block), tol);
        }
    }
    throw InvalidValueError("GrassmannMap::apply: unknown kind");
}

GrassmannMap construct_nonstandard_demo(Eigen::Index d, Eigen::Index n,
                                        Eigen::Index selector_rank) {
    if (selector_rank == n) {
        // identity selector: a plain block embedding, kept only as a labeled
        // degenerate case
        return GrassmannMap::nonstandard_demo(
            d, n, n, [](const Subspace& s) { return s; }, "identity");
    }
    if (selector_rank != 1) {
        throw InvalidValueError(
            "construct_nonstandard_demo: only rank-1 and identity selectors are built in");
    }
    return GrassmannMap::nonstandard_demo(
        d, n, 1, [](const Subspace& s) { return pivot_column_line(s); }, "pivot_column");
}

std::string to_string(GrassmannMap::Kind kind) {
    switch (kind) {
        case GrassmannMap::Kind::standard: return "standard";
        case GrassmannMap::Kind::complement_standard: return "complement_standard";
        case GrassmannMap::Kind::table: return "table";
        case GrassmannMap::Kind::nonstandard_demo: return "nonstandard_demo";
    }
    return "unknown";
}

GrassmannMap::Kind kind_from_string(const std::string& name) {
    if (name == "standard") return GrassmannMap::Kind::standard;
    if (name == "complement_standard") return GrassmannMap::Kind::complement_standard;
    if (name == "table") return GrassmannMap::Kind::table;
    if (name == "nonstandard_demo") return GrassmannMap::Kind::nonstandard_demo;
    throw ParseError("unknown map kind: " + name);
}

}  // namespace minangle
