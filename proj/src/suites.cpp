#include "minangle/suites.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "minangle/io.hpp"

namespace minangle {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

Eigen::Index pick_dim(Rng& rng, Eigen::Index lo, Eigen::Index hi) {
    return lo + static_cast<Eigen::Index>(rng.integer(static_cast<std::uint64_t>(hi - lo + 1)));
}

Report run_oracle_suite(const SuiteConfig& config) {
    Report report;
    report.check = "oracle";
    report.seed = config.seed;
    report.trials = config.trials > 0 ? config.trials : 1000;
    report.paper_ref = "theta_k from the cross-Gram SVD == recursive min-angle definition";
    const Eigen::Index dmax = config.d > 0 ? config.d : 8;
    const Eigen::Index nmax = config.n > 0 ? config.n : 3;

    for (int t = 0; t < report.trials; ++t) {
        Rng rng(derive_seed(config.seed, static_cast<std::uint64_t>(t)));
        const Eigen::Index d = pick_dim(rng, 2, dmax);
        const Eigen::Index n = pick_dim(rng, 1, std::min<Eigen::Index>(nmax, d / 2));
        const Subspace s = random_subspace(rng, d, n);
        const Subspace r = random_subspace(rng, d, n);
        const PrincipalAngles direct = principal_angles(s, r, config.tol);
        const PrincipalAngles recursive = principal_angles_oracle(s, r, config.tol);
        for (std::size_t k = 0; k < direct.angles.size(); ++k) {
            const double diff = std::abs(direct.angles[k] - recursive.angles[k]);
            report.max_residual = std::max(report.max_residual, diff);
            if (diff > 1e-8) {
                report.record_violation(
                    {{"trial", t}, {"d", d}, {"n", n}, {"k", k}, {"diff", diff}});
            }
        }
    }
    report.pass = report.violations.empty();
    return report;
}

Report run_svlaw_suite(const SuiteConfig& config) {
    Report report;
    report.check = "svlaw";
    report.seed = config.seed;
    report.trials = config.trials > 0 ? config.trials : 1000;
    report.paper_ref = "nonzero singular values of P-Q = {sin theta_k}, each counted twice";
    const Eigen::Index dmax = config.d > 0 ? config.d : 8;
    const Eigen::Index nmax = config.n > 0 ? config.n : 3;

    for (int t = 0; t < report.trials; ++t) {
        Rng rng(derive_seed(config.seed, static_cast<std::uint64_t>(t)));
        const Eigen::Index d = pick_dim(rng, 2, dmax);
        const Eigen::Index n = pick_dim(rng, 1, std::min<Eigen::Index>(nmax, d / 2));
        const Subspace s = random_subspace(rng, d, n);
        const Subspace r = random_subspace(rng, d, n);
        const Projection p = to_projection(s);
        const Projection q = to_projection(r);

        const SvdResult f = svd(CMatrix(p.matrix - q.matrix));
        const double smax = f.sigma.size() > 0 ? f.sigma(0) : 0.0;
        std::vector<double> observed;
        for (Eigen::Index i = 0; i < f.sigma.size(); ++i) {
            if (f.sigma(i) > config.tol.eps_rank * smax) observed.push_back(f.sigma(i));
        }

        std::vector<double> expected;
        for (double theta : principal_angles(s, r, config.tol).angles) {
            if (theta > config.tol.eps_angle) {
                expected.push_back(std::sin(theta));
                expected.push_back(std::sin(theta));
            }
        }
        std::sort(observed.begin(), observed.end());
        std::sort(expected.begin(), expected.end());

        if (observed.size() != expected.size()) {
            report.record_violation({{"trial", t},
                                     {"observed_count", observed.size()},
                                     {"expected_count", expected.size()}});
            continue;
        }
        for (std::size_t i = 0; i < observed.size(); ++i) {
            const double diff = std::abs(observed[i] - expected[i]);
            report.max_residual = std::max(report.max_residual, diff);
            if (diff > 1e-8) {
                report.record_violation({{"trial", t}, {"index", i}, {"diff", diff}});
            }
        }
    }
    report.pass = report.violations.empty();
    return report;
}

Report run_formulas_suite(const SuiteConfig& config) {
    Report report;
    report.check = "formulas";
    report.seed = config.seed;
    report.trials = config.trials > 0 ? config.trials : 1000;
    report.paper_ref =
        "gap = sin theta_max; tr(PQ) = sum cos^2 theta_k; rank one: gap = sqrt(1 - tr(PQ))";
    const Eigen::Index dmax = config.d > 0 ? config.d : 8;
    const Eigen::Index nmax = config.n > 0 ? config.n : 3;

    for (int t = 0; t < report.trials; ++t) {
        Rng rng(derive_seed(config.seed, static_cast<std::uint64_t>(t)));
        const Eigen::Index d = pick_dim(rng, 2, dmax);
        const Eigen::Index n = pick_dim(rng, 1, std::min<Eigen::Index>(nmax, d / 2));
        const Subspace s = random_subspace(rng, d, n);
        const Subspace r = random_subspace(rng, d, n);
        const PrincipalAngles pa = principal_angles(s, r, config.tol);

        const double gap = gap_distance(s, r);
        const double gap_diff = std::abs(gap - std::sin(pa.largest()));
        double cos_sum = 0.0;
        for (double theta : pa.angles) cos_sum += std::cos(theta) * std::cos(theta);
        const double trace_diff = std::abs(trace_product(s, r, config.tol) - cos_sum);

        const Subspace sx = random_subspace(rng, d, 1);
        const Subspace sy = random_subspace(rng, d, 1);
        const double rank_one_diff =
            std::abs(gap_distance(sx, sy) -
                     std::sqrt(std::max(0.0, 1.0 - trace_product(sx, sy, config.tol))));

        const double worst = std::max({gap_diff, trace_diff, rank_one_diff});
        report.max_residual = std::max(report.max_residual, worst);
        if (worst > 1e-8) {
            report.record_violation({{"trial", t},
                                     {"gap_diff", gap_diff},
                                     {"trace_diff", trace_diff},
                                     {"rank_one_diff", rank_one_diff}});
        }
    }
    report.pass = report.violations.empty();
    return report;
}

Report run_lemma21_suite(const SuiteConfig& config) {
    Report report;
    report.check = "lemma21";
    report.seed = config.seed;
    report.trials = config.trials > 0 ? config.trials : 1000;
    report.paper_ref = "ma(P1 (+) P2, Q1 (+) Q2) = min(ma(P1, Q1), ma(P2, Q2))";
    const Eigen::Index d = config.d > 0 ? config.d : 3;
    const int blocks = std::max(config.blocks, 2);

    for (int t = 0; t < report.trials; ++t) {
        Rng rng(derive_seed(config.seed, static_cast<std::uint64_t>(t)));
        double expected = kHalfPi;
        std::optional<Projection> p;
        std::optional<Projection> q;
        for (int b = 0; b < blocks; ++b) {
            // ranks drawn independently per side: the extended ma covers
            // unequal-rank blocks
            const Eigen::Index np = pick_dim(rng, 1, d);
            const Eigen::Index nq = pick_dim(rng, 1, d);
            const Subspace sp = random_subspace(rng, d, np);
            const Subspace sq = random_subspace(rng, d, nq);
            expected = std::min(expected, min_angle(sp, sq, config.tol));
            const Projection pp = to_projection(sp);
            const Projection qq = to_projection(sq);
            p = p ? direct_sum(*p, pp) : pp;
            q = q ? direct_sum(*q, qq) : qq;
        }
        const double actual = min_angle(*p, *q, config.tol);
        const double diff = std::abs(actual - expected);
        report.max_residual = std::max(report.max_residual, diff);
        if (diff > 1e-7) {
            report.record_violation({{"trial", t}, {"diff", diff}});
        }
    }
    report.pass = report.violations.empty();
    return report;
}

Report run_maps_suite(const SuiteConfig& config) {
    Report report;
    report.check = "maps";
    report.seed = config.seed;
    report.trials = config.trials > 0 ? config.trials : 500;
    report.paper_ref =
        "P -> UPU* preserves every principal angle; P -> U(I-P)U* preserves ma at d = 2n";

    double max_angle_dev = 0.0;
    double max_complement_dev = 0.0;
    for (int t = 0; t < report.trials; ++t) {
        Rng rng(derive_seed(config.seed, static_cast<std::uint64_t>(t)));
        const Eigen::Index d = config.d > 0 ? config.d : pick_dim(rng, 2, 6);
        const Eigen::Index n =
            config.n > 0 ? config.n : pick_dim(rng, 1, std::min<Eigen::Index>(3, d / 2));
        const Eigen::Index extra = pick_dim(rng, 0, 2);
        const IsometryMap u = random_isometry(rng, d, d + extra, rng.coin());

        const Subspace s = random_subspace(rng, d, n);
        const Subspace r = random_subspace(rng, d, n);
        const PrincipalAngles before = principal_angles(s, r, config.tol);
        const PrincipalAngles after =
            principal_angles(apply_isometry(u, s), apply_isometry(u, r), config.tol);
        for (std::size_t k = 0; k < before.angles.size(); ++k) {
            const double diff = std::abs(before.angles[k] - after.angles[k]);
            max_angle_dev = std::max(max_angle_dev, diff);
            if (diff > 1e-8) {
                report.record_violation({{"trial", t}, {"kind", "standard"}, {"diff", diff}});
            }
        }

        const Eigen::Index nc = pick_dim(rng, 1, 3);
        const GrassmannMap flip =
            GrassmannMap::complement_standard(random_unitary(rng, 2 * nc, rng.coin()), nc);
        const Subspace cs = random_subspace(rng, 2 * nc, nc);
        const Subspace cr = random_subspace(rng, 2 * nc, nc);
        const double diff = std::abs(min_angle(cs, cr, config.tol) -
                                     min_angle(flip.apply(cs, config.tol),
                                               flip.apply(cr, config.tol), config.tol));
        max_complement_dev = std::max(max_complement_dev, diff);
        if (diff > 1e-7) {
            report.record_violation({{"trial", t}, {"kind", "complement"}, {"diff", diff}});
        }
    }
    report.max_residual = std::max(max_angle_dev, max_complement_dev);
    report.details = {{"max_angle_deviation", max_angle_dev},
                      {"max_complement_ma_deviation", max_complement_dev}};
    report.pass = report.violations.empty();
    return report;
}

// Phase-aligned distance between a recovered isometry and the planted one.
double planted_residual(const IsometryMap& recovered, const IsometryMap& planted) {
    const Complex overlap = (planted.matrix.adjoint() * recovered.matrix).trace();
    const double mag = std::abs(overlap);
    const Complex phase = mag > 0.0 ? overlap / mag : Complex(1.0, 0.0);
    return operator_norm(recovered.matrix - phase * planted.matrix);
}

Report run_recover_suite(const SuiteConfig& config) {
    Report report;
    report.check = "recover";
    report.seed = config.seed;
    report.trials = config.trials > 0 ? config.trials : 30;
    report.paper_ref = "ma-preserving phi is P -> UPU*, or P -> U(I-P)U* at d = 2n";
    const Eigen::Index d = config.d > 0 ? config.d : 6;
    const Eigen::Index n = config.n > 0 ? config.n : 2;
    if (d < 2 * n - 1) {
        throw RegimeError("recover: sharp pairs need d >= 2n-1");
    }

    nlohmann::json cases = nlohmann::json::array();
    int case_index = 0;
    const auto run_case = [&](const GrassmannMap& phi, const IsometryMap& planted,
                              PreserverBranch expected_branch, const std::string& label) {
        const PreserverVerdict verdict = verify_preserver(
            phi, report.trials, derive_seed(config.seed, 1000 + case_index), config.tol);
        ++case_index;
        const double planted_diff = planted_residual(verdict.recovery.isometry, planted);
        const bool ok = verdict.branch == expected_branch &&
                        verdict.recovery.isometry.conjugate == planted.conjugate &&
                        verdict.recovery.max_residual <= 1e-7 && planted_diff <= 1e-7;
        if (!ok) {
            report.record_violation({{"case", label},
                                     {"branch", to_string(verdict.branch)},
                                     {"max_residual", verdict.recovery.max_residual},
                                     {"planted_residual", planted_diff}});
        }
        report.max_residual =
            std::max({report.max_residual, verdict.recovery.max_residual, planted_diff});
        cases.push_back({{"case", label},
                         {"branch", to_string(verdict.branch)},
                         {"conjugate", verdict.recovery.isometry.conjugate},
                         {"max_residual", verdict.recovery.max_residual},
                         {"planted_residual", planted_diff},
                         {"ma_deviation", verdict.max_ma_deviation}});
    };

    Rng rng(config.seed);
    for (const bool conj : {false, true}) {
        const IsometryMap u = random_unitary(rng, d, conj);
        run_case(GrassmannMap::standard(u, n), u, PreserverBranch::standard,
                 conj ? "standard conjugate-linear" : "standard linear");
    }
    if (d == 2 * n) {
        for (const bool conj : {false, true}) {
            const IsometryMap u = random_unitary(rng, d, conj);
            run_case(GrassmannMap::complement_standard(u, n), u, PreserverBranch::complement,
                     conj ? "complement conjugate-linear" : "complement linear");
        }
    }
    report.details = {{"d", d}, {"n", n}, {"cases", cases}};
    report.pass = report.violations.empty();
    return report;
}

Report run_lemma22_suite(const SuiteConfig& config) {
    const Eigen::Index d = config.d > 0 ? config.d : 20;
    const Eigen::Index n = config.n > 0 ? config.n : 2;
    const int trials = config.trials > 0 ? config.trials : 200;

    Report report;
    report.check = "lemma22";
    report.seed = config.seed;
    report.trials = trials;
    report.paper_ref =
        "U#V, U#W, V#W with a common line => images pairwise # with one common line";

    Rng rng(config.seed);
    nlohmann::json runs = nlohmann::json::array();
    for (const bool conj : {false, true}) {
        const GrassmannMap phi = GrassmannMap::standard(random_unitary(rng, d, conj), n);
        const Report inner = check_lemma_2_2(phi, trials, derive_seed(config.seed, conj), config.tol);
        report.max_residual = std::max(report.max_residual, inner.max_residual);
        for (const auto& v : inner.violations) report.record_violation(v);
        runs.push_back({{"map", conj ? "standard conjugate-linear" : "standard linear"},
                        {"pass", inner.pass},
                        {"max_residual", inner.max_residual},
                        {"details", inner.details}});
    }

    // negative control: remap the third subspace of the first sampled triple
    // away from the common line
    {
        const std::uint64_t control_seed = derive_seed(config.seed, 99);
        Rng triple_rng(derive_seed(control_seed, 0));
        const SharpTriple triple = sample_sharp_triple(triple_rng, d, n, config.tol);
        Rng breaker(derive_seed(config.seed, 100));
        const SharpPair broken =
            find_sharp_pair(breaker.unit_vector(d), n, &breaker, config.tol);
        const GrassmannMap control = GrassmannMap::table(
            d, n,
            {{triple.u, triple.u}, {triple.v, triple.v}, {triple.w, broken.u}});
        const Report inner = check_lemma_2_2(control, 1, control_seed, config.tol);
        runs.push_back({{"map", "negative control"},
                        {"pass", inner.pass},
                        {"violations", inner.violations}});
        if (inner.pass) {
            report.record_violation(
                {{"case", "negative control"},
                 {"detail", "a broken table map passed the lemma conclusions"}});
        }
    }

    report.details = {{"d", d}, {"n", n}, {"runs", runs}};
    report.pass = report.violations.empty();
    return report;
}

Report run_continuity_suite(const SuiteConfig& config) {
    Report report;
    report.check = "continuity";
    report.seed = config.seed;
    report.trials = config.trials > 0 ? config.trials : 50;
    report.paper_ref = "R_k -> P implies ma(R_k, complement(P)) -> pi/2";
    const Eigen::Index d = config.d > 0 ? config.d : 6;
    const Eigen::Index n = config.n > 0 ? config.n : 2;
    if (n >= d) {
        throw RegimeError("continuity: requires n < d so the complement is nonzero");
    }

    double worst_ratio = 0.0;
    for (int t = 0; t < report.trials; ++t) {
        Rng rng(derive_seed(config.seed, static_cast<std::uint64_t>(t)));
        const Subspace s = random_subspace(rng, d, n);
        const Projection p = to_projection(s);
        const Subspace comp = complement(s, config.tol);
        for (const Projection& rk : converging_sequence(rng, p, 12, config.tol)) {
            const double gap = gap_distance(rk, p);
            if (gap > 0.1 || gap <= 0.0) continue;
            const double defect = kHalfPi - min_angle(to_subspace(rk, config.tol), comp,
                                                      config.tol);
            worst_ratio = std::max(worst_ratio, defect / gap);
            const double excess = defect - 2.0 * gap;
            report.max_residual = std::max(report.max_residual, std::max(excess, 0.0));
            if (excess > 0.0) {
                report.record_violation(
                    {{"trial", t}, {"gap", gap}, {"defect", defect}});
            }
        }
    }
    report.details = {{"observed_constant", worst_ratio}};
    report.pass = report.violations.empty();
    return report;
}

Report run_nonstandard_demo(const SuiteConfig& config) {
    Report report;
    report.check = "nonstandard";
    report.seed = config.seed;
    report.trials = config.trials > 0 ? config.trials : 500;
    report.paper_ref = "P -> P (+) rho(P) preserves ma without being standard";
    const Eigen::Index d = config.d > 0 ? config.d : 4;
    const Eigen::Index n = config.n > 0 ? config.n : 2;
    if (n < 2 || n >= d) {
        throw RegimeError("nonstandard: requires 2 <= n < d");
    }
    const GrassmannMap demo = construct_nonstandard_demo(d, n, 1);

    for (int t = 0; t < report.trials; ++t) {
        Rng rng(derive_seed(config.seed, static_cast<std::uint64_t>(t)));
        const Subspace s = random_subspace(rng, d, n);
        const Subspace r = random_subspace(rng, d, n);
        const double diff = std::abs(min_angle(s, r, config.tol) -
                                     min_angle(demo.apply(s, config.tol),
                                               demo.apply(r, config.tol), config.tol));
        report.max_residual = std::max(report.max_residual, diff);
        if (diff > 1e-7) {
            report.record_violation({{"trial", t}, {"diff", diff}});
        }
    }

    // non-monotonicity witness: nested P <= Q whose selector lines differ
    nlohmann::json witness;
    Rng rng(derive_seed(config.seed, 777));
    for (int attempt = 0; attempt < 100; ++attempt) {
        const Subspace q = random_subspace(rng, d, n + 1);
        const Subspace p = random_subspace_of(rng, q, n);
        const Subspace rho_p = pivot_column_line(p);
        const Subspace rho_q = pivot_column_line(q);
        const double angle =
            angle_between_lines(rho_p.basis().col(0), rho_q.basis().col(0), config.tol);
        if (angle > 1e-3) {
            witness = {{"attempt", attempt},
                       {"angle_between_selector_lines", angle},
                       {"p", subspace_to_json(p)},
                       {"q", subspace_to_json(q)}};
            break;
        }
    }
    if (witness.is_null()) {
        report.record_violation({{"detail", "no non-monotonicity witness found"}});
    }
    report.details = {{"d", d},
                      {"n", n},
                      {"selector", demo.rule_name()},
                      {"witness", witness}};
    report.pass = report.violations.empty();
    return report;
}

Report run_degenerate_demo(const SuiteConfig& config) {
    Report report;
    report.check = "degenerate";
    report.seed = config.seed;
    report.trials = config.trials > 0 ? config.trials : 1000;
    report.paper_ref = "n+1 <= d < 2n forces ma(P, Q) = 0 for every pair";
    const Eigen::Index n = config.n > 0 ? config.n : 2;
    const Eigen::Index d = config.d > 0 ? config.d : 3;

    const DegenerateRegimeCertificate cert =
        certificate_degenerate_regime(n, d, config.seed, report.trials, config.tol);
    validate(cert, config.tol);
    report.max_residual = cert.max_ma;
    report.details = {{"n", cert.n},
                      {"d", cert.d},
                      {"max_ma", cert.max_ma},
                      {"min_intersection_dim", cert.min_intersection_dim},
                      {"forced_intersection_dim", 2 * cert.n - cert.d}};
    report.pass = cert.max_ma <= 10.0 * config.tol.eps_angle;
    return report;
}

Report run_two_by_two_demo(const SuiteConfig& config) {
    Report report;
    report.check = "two_by_two";
    report.seed = config.seed;
    report.trials = 0;
    report.paper_ref = "I - P = U P^t U* on rank-one projections of C^2, U = [[0,1],[-1,0]]";
    const TwoByTwoCertificate cert = certificate_two_by_two();
    validate(cert);
    report.trials = static_cast<int>(cert.p_grid.size() * cert.z_grid.size());
    report.max_residual = std::max(cert.max_identity_residual, cert.max_conjugation_residual);
    report.details = {{"grid_points", report.trials},
                      {"max_identity_residual", cert.max_identity_residual},
                      {"max_conjugation_residual", cert.max_conjugation_residual}};
    report.pass = report.max_residual <= 1e-12;
    return report;
}

Report run_complement_cert_demo(const SuiteConfig& config) {
    Report report;
    report.check = "complement_cert";
    report.seed = config.seed;
    report.paper_ref =
        "A = (P1+P2+P3)/3 invertible with eigenvalue 1 makes I - A = UAU* impossible";
    const Eigen::Index n = config.n > 0 ? config.n : 2;
    const ComplementCertificate cert = certificate_complement_not_standard(n);
    validate(cert, config.tol);
    report.trials = 1;
    report.max_residual = cert.eigenvalue_one_residual;
    report.details = {{"n", cert.n},
                      {"min_singular_a", cert.min_singular_a},
                      {"eigenvalue_one_residual", cert.eigenvalue_one_residual},
                      {"min_singular_i_minus_a", cert.min_singular_i_minus_a},
                      {"a", matrix_to_json(cert.a)}};
    report.pass = true;  // validate() throws otherwise
    return report;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"oracle", "svlaw", "formulas", "lemma21", "maps", "recover", "lemma22",
            "continuity"};
}

std::vector<std::string> demo_names() {
    return {"nonstandard", "degenerate", "two_by_two", "complement_cert"};
}

Report run_suite(const std::string& name, const SuiteConfig& config) {
    config.tol.validate();
    if (name == "oracle") return run_oracle_suite(config);
    if (name == "svlaw") return run_svlaw_suite(config);
    if (name == "formulas") return run_formulas_suite(config);
    if (name == "lemma21") return run_lemma21_suite(config);
    if (name == "maps") return run_maps_suite(config);
    if (name == "recover") return run_recover_suite(config);
    if (name == "lemma22") return run_lemma22_suite(config);
    if (name == "continuity") return run_continuity_suite(config);
    throw InvalidValueError("unknown suite: " + name);
}

Report run_demo(const std::string& name, const SuiteConfig& config) {
    config.tol.validate();
    if (name == "nonstandard") return run_nonstandard_demo(config);
    if (name == "degenerate") return run_degenerate_demo(config);
    if (name == "two_by_two") return run_two_by_two_demo(config);
    if (name == "complement_cert") return run_complement_cert_demo(config);
    throw InvalidValueError("unknown demo: " + name);
}

}  // namespace minangle
