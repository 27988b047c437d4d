#include "minangle/preserver.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

namespace minangle {

namespace {

CVector line_vector(const Subspace& line) {
    if (line.dim() != 1) {
        throw DimensionError("expected a rank-one subspace");
    }
    return line.basis().col(0);
}

// Representative with the first entry of magnitude above eps made real
// positive.
CVector phase_normalized(CVector v, double eps) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double a = std::abs(v(i));
        if (a > eps) {
            v *= std::conj(v(i)) / a;
            return v;
        }
    }
    return v;
}

double line_angle(const CVector& x, const CVector& y) {
    return angle_from_cosine(std::abs((x.adjoint() * y)(0, 0)) / (x.norm() * y.norm()));
}

}  // namespace

SharpPair find_sharp_pair(const CVector& x, Eigen::Index n, Rng* rng, const Tolerance& tol) {
    const Eigen::Index d = x.size();
    if (n < 2) {
        throw UndefinedRelationError("find_sharp_pair: rank must be at least 2");
    }
    if (d < 2 * n - 1) {
        std::ostringstream os;
        os << "find_sharp_pair: need d >= 2n-1 = " << 2 * n - 1 << ", got d = " << d;
        throw DimensionError(os.str());
    }
    const double norm = x.norm();
    if (!(norm > 0.0)) {
        throw InvalidValueError("find_sharp_pair: zero vector");
    }

    // orthonormal frame [x, f_1, ..., f_{2n-2}]
    CMatrix frame(d, 2 * n - 1);
    frame.col(0) = x / norm;
    if (rng != nullptr) {
        CMatrix raw(d, 2 * n - 1);
        raw.col(0) = frame.col(0);
        raw.rightCols(2 * n - 2) = rng->gaussian_matrix(d, 2 * n - 2);
        frame = orthonormalize(raw, tol);  // col 0 stays x: R(0,0) = ||x|| = 1
    } else {
        frame.rightCols(2 * n - 2) = householder_complement(frame.col(0)).leftCols(2 * n - 2);
    }

    CMatrix u(d, n), v(d, n);
    u.col(0) = frame.col(0);
    v.col(0) = frame.col(0);
    u.rightCols(n - 1) = frame.middleCols(1, n - 1);
    v.rightCols(n - 1) = frame.middleCols(n, n - 1);
    return {Subspace(std::move(u), tol), Subspace(std::move(v), tol)};
}

const LineMapEntry* LineMap::find(const Subspace& line, const Tolerance& tol) const {
    for (const LineMapEntry& entry : entries) {
        if (entry.input.ambient_dim() == line.ambient_dim() &&
            line_angle(entry.input.basis().col(0), line.basis().col(0)) < tol.eps_angle) {
            return &entry;
        }
    }
    return nullptr;
}

double LineMap::max_residual() const {
    double out = 0.0;
    for (const LineMapEntry& entry : entries) {
        out = std::max(out, entry.well_definedness_residual);
    }
    return out;
}

std::vector<Subspace> recovery_lines(Eigen::Index d) {
    if (d < 2) {
        throw DimensionError("recovery_lines: need d >= 2");
    }
    std::vector<Subspace> lines;
    lines.reserve(static_cast<std::size_t>(2 * d));
    for (Eigen::Index j = 0; j < d; ++j) {
        lines.push_back(Subspace::line(CVector::Unit(d, j)));
    }
    for (Eigen::Index j = 1; j < d; ++j) {
        CVector v = CVector::Zero(d);
        v(0) = Complex(1.0, 0.0);
        v(j) = Complex(1.0, 0.0);
        lines.push_back(Subspace::line(v));
    }
    CVector v = CVector::Zero(d);
    v(0) = Complex(1.0, 0.0);
    v(1) = Complex(0.0, 1.0);
    lines.push_back(Subspace::line(v));
    return lines;
}

LineMap build_line_map(const SubspaceMap& phi, Eigen::Index n,
                       const std::vector<Subspace>& lines, Rng& rng, int pairs_per_line,
                       const Tolerance& tol) {
    if (pairs_per_line < 1) {
        throw InvalidValueError("build_line_map: need at least one sharp pair per line");
    }
    LineMap out;
    out.provenance = "phi(U) cap phi(V) over sharp pairs (U, V)";
    out.entries.reserve(lines.size());

    for (std::size_t idx = 0; idx < lines.size(); ++idx) {
        const CVector x = line_vector(lines[idx]);
        std::vector<Subspace> candidates;
        candidates.reserve(static_cast<std::size_t>(pairs_per_line));
        for (int p = 0; p < pairs_per_line; ++p) {
            const SharpPair pair = find_sharp_pair(x, n, &rng, tol);
            const Subspace fu = phi(pair.u);
            const Subspace fv = phi(pair.v);
            const IntersectionAnalysis ia = intersection_analysis(fu, fv, tol);
            if (ia.dimension != 1) {
                std::ostringstream os;
                os << "build_line_map: image intersection has dimension " << ia.dimension
                   << " (expected 1) at line " << idx;
                throw PreserverViolationError(os.str());
            }
            candidates.push_back(*ia.subspace);
        }
        double residual = 0.0;
        for (std::size_t p = 1; p < candidates.size(); ++p) {
            residual = std::max(residual,
                                line_angle(candidates[0].basis().col(0),
                                           candidates[p].basis().col(0)));
        }
        out.entries.push_back({lines[idx], candidates[0], residual});
    }
    return out;
}

LineMap build_line_map(const GrassmannMap& phi, const std::vector<Subspace>& lines, Rng& rng,
                       int pairs_per_line, const Tolerance& tol) {
    LineMap out = build_line_map(
        [&phi, &tol](const Subspace& s) { return phi.apply(s, tol); }, phi.domain_rank(),
        lines, rng, pairs_per_line, tol);
    out.provenance = to_string(phi.kind()) + " map, " + out.provenance;
    return out;
}

RecoveryResult recover_isometry(const LineMap& psi, Eigen::Index d, const Tolerance& tol) {
    const auto rep = [&](const CVector& direction) -> CVector {
        const LineMapEntry* entry = psi.find(Subspace::line(direction), tol);
        if (entry == nullptr) {
            throw InvalidValueError("recover_isometry: line map lacks a required line");
        }
        return entry->output.basis().col(0);
    };

    const double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
    double max_residual = 0.0;

    CVector u1 = phase_normalized(rep(CVector::Unit(d, 0)), tol.eps_entry);
    const Eigen::Index dprime = u1.size();
    CMatrix u(dprime, d);
    u.col(0) = u1;

    for (Eigen::Index j = 1; j < d; ++j) {
        const CVector w = rep(CVector::Unit(d, j));
        CVector sum_dir = CVector::Zero(d);
        sum_dir(0) = Complex(inv_sqrt2, 0.0);
        sum_dir(j) = Complex(inv_sqrt2, 0.0);
        const CVector s = rep(sum_dir);

        const double ortho = std::abs((u1.adjoint() * w)(0, 0));
        if (ortho > tol.eps_angle) {
            std::ostringstream os;
            os << "recover_isometry: images of basis lines 1 and " << j + 1
               << " are not orthogonal (cos = " << ortho << ")";
            throw NotWignerMapError(os.str());
        }
        const Complex a = (u1.adjoint() * s)(0, 0);
        const Complex b = (w.adjoint() * s)(0, 0);
        if (std::abs(a) < 0.1 || std::abs(b) < 0.1) {
            std::ostringstream os;
            os << "recover_isometry: image of the sum line 1+" << j + 1
               << " does not lie across both basis images";
            throw NotWignerMapError(os.str());
        }
        Complex alpha = b / a;
        alpha /= std::abs(alpha);
        const CVector uj = alpha * w;

        CVector expected = (u1 + uj) * inv_sqrt2;
        const double residual = line_angle(expected, s);
        if (residual > tol.eps_angle) {
            std::ostringstream os;
            os << "recover_isometry: phase alignment failed at the sum line 1+" << j + 1
               << " (residual " << residual << " rad)";
            throw NotWignerMapError(os.str());
        }
        max_residual = std::max(max_residual, std::max(residual, ortho));
        u.col(j) = uj;
    }

    bool conjugate = false;
    if (d >= 2) {
        CVector im_dir = CVector::Zero(d);
        im_dir(0) = Complex(inv_sqrt2, 0.0);
        im_dir(1) = Complex(0.0, inv_sqrt2);
        const CVector t = rep(im_dir);
        const CVector plus = (u.col(0) + Complex(0.0, 1.0) * u.col(1)) * inv_sqrt2;
        const CVector minus = (u.col(0) - Complex(0.0, 1.0) * u.col(1)) * inv_sqrt2;
        const double plus_angle = line_angle(plus, t);
        const double minus_angle = line_angle(minus, t);
        if (plus_angle <= tol.eps_angle) {
            conjugate = false;
            max_residual = std::max(max_residual, plus_angle);
        } else if (minus_angle <= tol.eps_angle) {
            conjugate = true;
            max_residual = std::max(max_residual, minus_angle);
        } else {
            std::ostringstream os;
            os << "recover_isometry: the line (e1 + i e2)/sqrt2 matches neither orientation "
               << "(residuals " << plus_angle << ", " << minus_angle << ")";
            throw NotWignerMapError(os.str());
        }
    }

    if (!has_orthonormal_columns(u, tol.eps_entry)) {
        throw NotWignerMapError(
            "recover_isometry: images of the basis lines are not jointly orthonormal");
    }
    return {IsometryMap(std::move(u), conjugate, tol), true, max_residual};
}

std::string to_string(PreserverBranch branch) {
    return branch == PreserverBranch::standard ? "standard" : "complement";
}

namespace {

// Largest gap between phi(S) and the image predicted from a recovered
// isometry, over fresh samples.
double validation_residual(const GrassmannMap& phi, const IsometryMap& u,
                           PreserverBranch branch, Rng& rng, int samples,
                           const Tolerance& tol) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const Subspace s = random_subspace(rng, phi.domain_dim(), phi.domain_rank());
        const Subspace image = phi.apply(s, tol);
        const Subspace predicted = branch == PreserverBranch::standard
                                       ? apply_isometry(u, s)
                                       : complement(apply_isometry(u, s), tol);
        worst = std::max(worst, gap_distance(image, predicted));
    }
    return worst;
}

}  // namespace

PreserverVerdict verify_preserver(const GrassmannMap& phi, int trials, std::uint64_t seed,
                                  const Tolerance& tol) {
    if (trials < 1) {
        throw InvalidValueError("verify_preserver: need at least one trial");
    }
    const Eigen::Index d = phi.domain_dim();
    const Eigen::Index n = phi.domain_rank();
    constexpr double kBranchThreshold = 1e-3;

    // hypothesis: ma is preserved. Table maps are finite samples, so they are
    // checked over their own entry pairs; every other kind over random pairs.
    double deviation = 0.0;
    if (phi.kind() == GrassmannMap::Kind::table) {
        const auto& pairs = phi.pairs();
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            for (std::size_t j = i + 1; j < pairs.size(); ++j) {
                const double before = min_angle(pairs[i].first, pairs[j].first, tol);
                const double after = min_angle(pairs[i].second, pairs[j].second, tol);
                deviation = std::max(deviation, std::abs(after - before));
            }
        }
    } else {
        Rng hypothesis_rng(derive_seed(seed, 0));
        for (int t = 0; t < trials; ++t) {
            const Subspace s = random_subspace(hypothesis_rng, d, n);
            const Subspace r = random_subspace(hypothesis_rng, d, n);
            const double before = min_angle(s, r, tol);
            const double after = min_angle(phi.apply(s, tol), phi.apply(r, tol), tol);
            deviation = std::max(deviation, std::abs(after - before));
        }
    }
    if (deviation > 10.0 * tol.eps_angle) {
        std::ostringstream os;
        os << "verify_preserver: ma deviates by " << deviation
           << " on sampled pairs; the map is outside the preserving hypothesis";
        throw PreserverViolationError(os.str());
    }

    const std::vector<Subspace> lines = recovery_lines(d);
    const bool complement_possible = (d == 2 * n) && (phi.codomain_dim() == d);

    // standard branch first
    try {
        Rng rng(derive_seed(seed, 1));
        const LineMap psi = build_line_map(phi, lines, rng, 2, tol);
        RecoveryResult recovery = recover_isometry(psi, d, tol);
        Rng validation_rng(derive_seed(seed, 2));
        const double residual = validation_residual(phi, recovery.isometry,
                                                    PreserverBranch::standard,
                                                    validation_rng, 50, tol);
        if (residual <= kBranchThreshold) {
            recovery.max_residual = std::max(recovery.max_residual, residual);
            return {PreserverBranch::standard, std::move(recovery), deviation, trials};
        }
    } catch (const Error&) {
        if (!complement_possible) throw;
    }

    if (!complement_possible) {
        throw PreserverViolationError(
            "verify_preserver: the standard branch does not fit and d != 2n leaves no "
            "complement branch");
    }

    // complement branch: complement . phi is then the standard map by U
    const SubspaceMap flipped = [&phi, &tol](const Subspace& s) {
        return complement(phi.apply(s, tol), tol);
    };
    Rng rng(derive_seed(seed, 3));
    const LineMap psi = build_line_map(flipped, n, lines, rng, 2, tol);
    RecoveryResult recovery = recover_isometry(psi, d, tol);
    Rng validation_rng(derive_seed(seed, 4));
    const double residual = validation_residual(phi, recovery.isometry,
                                                PreserverBranch::complement, validation_rng,
                                                50, tol);
    if (residual > kBranchThreshold) {
        std::ostringstream os;
        os << "verify_preserver: neither branch reproduces the map (complement residual "
           << residual << ")";
        throw PreserverViolationError(os.str());
    }
    recovery.max_residual = std::max(recovery.max_residual, residual);
    return {PreserverBranch::complement, std::move(recovery), deviation, trials};
}

ComplementCertificate certificate_complement_not_standard(Eigen::Index n) {
    if (n < 2) {
        throw RegimeError("certificate_complement_not_standard: needs n >= 2");
    }
    const Eigen::Index d = 2 * n;
    // positions 1..2n-1 (0-based), covered by three overlapping chunks of n-1
    const auto diagonal_projection = [d](Eigen::Index first, Eigen::Index count) {
        CMatrix m = CMatrix::Zero(d, d);
        m(0, 0) = Complex(1.0, 0.0);
        for (Eigen::Index k = 0; k < count; ++k) {
            m(first + k, first + k) = Complex(1.0, 0.0);
        }
        return m;
    };
    ComplementCertificate cert;
    cert.n = n;
    cert.p1 = diagonal_projection(1, n - 1);
    cert.p2 = diagonal_projection(n, n - 1);
    cert.p3 = diagonal_projection(d - (n - 1), n - 1);
    cert.a = (cert.p1 + cert.p2 + cert.p3) / 3.0;
    cert.min_singular_a = smallest_singular_value(cert.a);
    cert.eigenvalue_one_residual =
        ((cert.a - CMatrix::Identity(d, d)) * CVector::Unit(d, 0)).norm();
    cert.min_singular_i_minus_a = smallest_singular_value(CMatrix::Identity(d, d) - cert.a);
    return cert;
}

void validate(const ComplementCertificate& cert, const Tolerance& tol) {
    const Eigen::Index d = 2 * cert.n;
    const auto check_projection = [&](const CMatrix& p, const char* name) {
        const Projection proj(p, tol);
        if (proj.rank != cert.n) {
            throw CertificateError(std::string("complement certificate: ") + name +
                                   " does not have rank n");
        }
        if (std::abs(p(0, 0) - Complex(1.0, 0.0)) > tol.eps_entry) {
            throw CertificateError(std::string("complement certificate: ") + name +
                                   " does not fix the first coordinate");
        }
    };
    check_projection(cert.p1, "P1");
    check_projection(cert.p2, "P2");
    check_projection(cert.p3, "P3");
    for (Eigen::Index j = 1; j < d; ++j) {
        if (std::abs(cert.p1(j, j)) + std::abs(cert.p2(j, j)) + std::abs(cert.p3(j, j)) <
            0.5) {
            std::ostringstream os;
            os << "complement certificate: diagonal position " << j << " is not covered";
            throw CertificateError(os.str());
        }
    }
    const CMatrix a = (cert.p1 + cert.p2 + cert.p3) / 3.0;
    if (operator_norm(a - cert.a) > tol.eps_entry) {
        throw CertificateError("complement certificate: stored A mismatches (P1+P2+P3)/3");
    }
    const double min_sv_a = smallest_singular_value(a);
    const double eig_res = ((a - CMatrix::Identity(d, d)) * CVector::Unit(d, 0)).norm();
    const double min_sv_ia = smallest_singular_value(CMatrix::Identity(d, d) - a);
    if (min_sv_a < 1.0 / 3.0 - 1e-12) {
        throw CertificateError("complement certificate: A is not invertible down to 1/3");
    }
    if (eig_res > 1e-12) {
        throw CertificateError("complement certificate: 1 is not an eigenvalue of A");
    }
    if (min_sv_ia > tol.eps_rank) {
        throw CertificateError("complement certificate: I - A is not singular");
    }
}

TwoByTwoCertificate certificate_two_by_two() {
    TwoByTwoCertificate cert;
    for (int k = 0; k <= 10; ++k) {
        cert.p_grid.push_back(static_cast<double>(k) / 10.0);
    }
    const double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
    cert.z_grid = {Complex(1.0, 0.0), Complex(0.0, 1.0), Complex(inv_sqrt2, inv_sqrt2),
                   Complex(-1.0, 0.0)};
    CMatrix u(2, 2);
    u << Complex(0, 0), Complex(1, 0), Complex(-1, 0), Complex(0, 0);
    for (double p : cert.p_grid) {
        for (const Complex& z : cert.z_grid) {
            const double off = std::sqrt(p * (1.0 - p));
            CMatrix proj(2, 2);
            proj << Complex(p, 0), z * off, std::conj(z) * off, Complex(1.0 - p, 0);
            const CMatrix lhs = CMatrix::Identity(2, 2) - proj;
            const CMatrix rhs = u * proj.transpose() * u.adjoint();
            cert.max_identity_residual =
                std::max(cert.max_identity_residual, operator_norm(lhs - rhs));
            cert.max_conjugation_residual = std::max(
                cert.max_conjugation_residual,
                operator_norm(CMatrix(proj.transpose()) - CMatrix(proj.conjugate())));
        }
    }
    return cert;
}

void validate(const TwoByTwoCertificate& cert) {
    CMatrix u(2, 2);
    u << Complex(0, 0), Complex(1, 0), Complex(-1, 0), Complex(0, 0);
    for (double p : cert.p_grid) {
        if (p < 0.0 || p > 1.0) {
            throw CertificateError("two-by-two certificate: p outside [0, 1]");
        }
        for (const Complex& z : cert.z_grid) {
            if (std::abs(std::abs(z) - 1.0) > 1e-12) {
                throw CertificateError("two-by-two certificate: |z| != 1 on the grid");
            }
            const double off = std::sqrt(p * (1.0 - p));
            CMatrix proj(2, 2);
            proj << Complex(p, 0), z * off, std::conj(z) * off, Complex(1.0 - p, 0);
            const CMatrix rhs = u * proj.transpose() * u.adjoint();
            const double residual = operator_norm(CMatrix(CMatrix::Identity(2, 2) - proj) - rhs);
            if (residual > 1e-12) {
                std::ostringstream os;
                os << "two-by-two certificate fails at p=" << p << ", z=(" << z.real() << ","
                   << z.imag() << "): residual " << residual;
                throw CertificateError(os.str());
            }
        }
    }
}

DegenerateRegimeCertificate certificate_degenerate_regime(Eigen::Index n, Eigen::Index d,
                                                          std::uint64_t seed, int trials,
                                                          const Tolerance& tol) {
    if (!(n + 1 <= d && d < 2 * n)) {
        std::ostringstream os;
        os << "certificate_degenerate_regime: (n, d) = (" << n << ", " << d
           << ") is outside n+1 <= d < 2n";
        throw RegimeError(os.str());
    }
    DegenerateRegimeCertificate cert;
    cert.n = n;
    cert.d = d;
    cert.seed = seed;
    cert.trials = trials;
    cert.min_intersection_dim = n;
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        const Subspace s = random_subspace(rng, d, n);
        const Subspace r = random_subspace(rng, d, n);
        cert.max_ma = std::max(cert.max_ma, min_angle(s, r, tol));
        cert.min_intersection_dim =
            std::min(cert.min_intersection_dim, intersection_analysis(s, r, tol).dimension);
    }
    return cert;
}

void validate(const DegenerateRegimeCertificate& cert, const Tolerance& tol) {
    const DegenerateRegimeCertificate fresh =
        certificate_degenerate_regime(cert.n, cert.d, cert.seed, cert.trials, tol);
    if (fresh.max_ma != cert.max_ma ||
        fresh.min_intersection_dim != cert.min_intersection_dim) {
        throw CertificateError("degenerate-regime certificate: replay mismatch");
    }
    if (cert.max_ma > 10.0 * tol.eps_angle) {
        throw CertificateError("degenerate-regime certificate: a pair had nonzero ma");
    }
    if (cert.min_intersection_dim < 2 * cert.n - cert.d) {
        throw CertificateError(
            "degenerate-regime certificate: intersection smaller than the dimension count");
    }
}

SharpTriple sample_sharp_triple(Rng& rng, Eigen::Index d, Eigen::Index n,
                                const Tolerance& tol) {
    if (n < 2) {
        throw UndefinedRelationError("sample_sharp_triple: rank must be at least 2");
    }
    if (d < 3 * n - 2) {
        std::ostringstream os;
        os << "sample_sharp_triple: need d >= 3n-2 = " << 3 * n - 2 << ", got d = " << d;
        throw DimensionError(os.str());
    }
    // common line plus 3(n-1) orthonormal directions
    CMatrix raw(d, 3 * n - 2);
    raw.col(0) = rng.unit_vector(d);
    raw.rightCols(3 * n - 3) = rng.gaussian_matrix(d, 3 * n - 3);
    const CMatrix frame = orthonormalize(raw, tol);

    const auto assemble = [&](Eigen::Index block) {
        CMatrix b(d, n);
        b.col(0) = frame.col(0);
        b.rightCols(n - 1) = frame.middleCols(1 + block * (n - 1), n - 1);
        return Subspace(std::move(b), tol);
    };
    return {assemble(0), assemble(1), assemble(2)};
}

Report check_lemma_2_2(const GrassmannMap& phi, int trials, std::uint64_t seed,
                       const Tolerance& tol) {
    const Eigen::Index d = phi.domain_dim();
    const Eigen::Index n = phi.domain_rank();

    Report report;
    report.check = "lemma22";
    report.seed = seed;
    report.trials = trials;
    report.paper_ref =
        "U#V, U#W, V#W with a common line => images pairwise # with one common line";

    int ill_conditioned_count = 0;
    for (int t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
        const SharpTriple triple = sample_sharp_triple(rng, d, n, tol);
        const Subspace& u = triple.u;
        const Subspace& v = triple.v;
        const Subspace& w = triple.w;

        const Subspace fu = phi.apply(u, tol);
        const Subspace fv = phi.apply(v, tol);
        const Subspace fw = phi.apply(w, tol);

        bool triple_ok = true;
        double residual = 0.0;
        std::vector<CVector> common_lines;
        const std::array<std::pair<const Subspace*, const Subspace*>, 3> image_pairs{
            {{&fu, &fv}, {&fu, &fw}, {&fv, &fw}}};
        for (const auto& [a, b] : image_pairs) {
            const OneOrthogonalityCheck check = one_orthogonality_check(*a, *b, tol);
            if (check.ill_conditioned) ++ill_conditioned_count;
            if (check.intersection_dim != 1) {
                report.record_violation({{"trial", t},
                                         {"conclusion", "sharpness"},
                                         {"intersection_dim", check.intersection_dim}});
                triple_ok = false;
                break;
            }
            residual = std::max(residual, check.complement_cosine);
            if (!check.holds) {
                report.record_violation({{"trial", t},
                                         {"conclusion", "sharpness"},
                                         {"complement_cosine", check.complement_cosine}});
                triple_ok = false;
            }
            common_lines.push_back(intersection(*a, *b, tol)->basis().col(0));
        }
        if (!triple_ok) continue;

        for (std::size_t i = 1; i < common_lines.size(); ++i) {
            const double angle = line_angle(common_lines[0], common_lines[i]);
            residual = std::max(residual, angle);
            if (angle > tol.eps_angle) {
                report.record_violation(
                    {{"trial", t}, {"conclusion", "common_line"}, {"angle", angle}});
            }
        }
        report.max_residual = std::max(report.max_residual, residual);
    }

    report.details = {{"ill_conditioned_intersections", ill_conditioned_count}};
    report.pass = report.violations.empty() && report.max_residual <= tol.eps_angle;
    return report;
}

}  // namespace minangle
