#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "minangle/io.hpp"
#include "minangle/maps.hpp"
#include "minangle/sampling.hpp"

using namespace minangle;

TEST_CASE("isometry validation") {
    CMatrix skew(2, 2);
    skew << Complex(1, 0), Complex(1, 0), Complex(0, 0), Complex(1, 0);
    CHECK_THROWS_AS(IsometryMap(skew, false), InvalidValueError);
    CHECK_NOTHROW(IsometryMap(CMatrix::Identity(3, 2), false));
}

TEST_CASE("identity isometry fixes subspaces") {
    Rng rng(1);
    const Subspace s = random_subspace(rng, 4, 2);
    const IsometryMap id(CMatrix::Identity(4, 4), false);
    CHECK(gap_distance(apply_isometry(id, s), s) <= 1e-12);
}

TEST_CASE("a permutation moves the spanned axis") {
    CMatrix perm = CMatrix::Zero(2, 2);
    perm(0, 1) = Complex(1, 0);
    perm(1, 0) = Complex(1, 0);
    const Subspace image = apply_isometry(IsometryMap(perm, false), Subspace::coordinate(2, {0}));
    CHECK(std::abs(image.basis()(1, 0)) == doctest::Approx(1.0));
}

TEST_CASE("the conjugation flag conjugates coordinates") {
    CVector v(2);
    v << Complex(1, 0), Complex(0, 1);
    const Subspace line = Subspace::line(v);
    const IsometryMap conj_id(CMatrix::Identity(2, 2), true);
    const Subspace image = apply_isometry(conj_id, line);
    CVector expected(2);
    expected << Complex(1, 0), Complex(0, -1);
    const double overlap =
        std::abs((image.basis().col(0).adjoint() * expected.normalized())(0, 0));
    CHECK(overlap >= 1.0 - 1e-12);
}

TEST_CASE("complement basics") {
    const Subspace e1 = Subspace::coordinate(2, {0});
    const Subspace c = complement(e1);
    CHECK(c.dim() == 1);
    CHECK(std::abs(c.basis()(1, 0)) == doctest::Approx(1.0));

    Rng rng(2);
    const Subspace s = random_subspace(rng, 6, 2);
    const Subspace cc = complement(complement(s));
    CHECK(gap_distance(s, cc) <= 1e-10);
    CHECK(complement(s).dim() == 4);
    CHECK(min_angle(s, complement(s)) == doctest::Approx(std::acos(0.0)));

    CHECK_THROWS_AS(complement(Subspace::coordinate(2, {0, 1})), DimensionError);
}

TEST_CASE("standard map kinds apply as expected") {
    Rng rng(3);
    const IsometryMap u = random_unitary(rng, 4);
    const GrassmannMap std_map = GrassmannMap::standard(u, 2);
    const Subspace s = random_subspace(rng, 4, 2);
    CHECK(gap_distance(std_map.apply(s), apply_isometry(u, s)) <= 1e-12);

    const GrassmannMap comp_map =
        GrassmannMap::complement_standard(IsometryMap(CMatrix::Identity(2, 2), false), 1);
    const Subspace image = comp_map.apply(Subspace::coordinate(2, {0}));
    CHECK(std::abs(image.basis()(1, 0)) == doctest::Approx(1.0));

    CHECK_THROWS_AS(
        GrassmannMap::complement_standard(IsometryMap(CMatrix::Identity(3, 3), false), 1),
        DimensionError);
}

TEST_CASE("standard maps preserve principal angles") {
    Rng rng(4);
    for (int trial = 0; trial < 25; ++trial) {
        const bool conj = rng.coin();
        const IsometryMap u = random_isometry(rng, 4, 6, conj);
        const GrassmannMap phi = GrassmannMap::standard(u, 2);
        const Subspace s = random_subspace(rng, 4, 2);
        const Subspace t = random_subspace(rng, 4, 2);
        const PrincipalAngles before = principal_angles(s, t);
        const PrincipalAngles after = principal_angles(phi.apply(s), phi.apply(t));
        for (std::size_t k = 0; k < before.angles.size(); ++k) {
            CHECK(std::abs(before.angles[k] - after.angles[k]) <= 1e-8);
        }
    }
}

TEST_CASE("complement standard maps preserve ma at d = 2n") {
    Rng rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        const GrassmannMap phi =
            GrassmannMap::complement_standard(random_unitary(rng, 6, rng.coin()), 3);
        const Subspace s = random_subspace(rng, 6, 3);
        const Subspace t = random_subspace(rng, 6, 3);
        CHECK(std::abs(min_angle(phi.apply(s), phi.apply(t)) - min_angle(s, t)) <= 1e-7);
    }
}

TEST_CASE("table maps look up by span and report misses") {
    Rng rng(6);
    const Subspace in = random_subspace(rng, 3, 1);
    const Subspace out = random_subspace(rng, 3, 1);
    const GrassmannMap table = GrassmannMap::table(3, 1, {{in, out}});
    // a re-based copy of the same span still hits
    const Subspace rebased(CMatrix(in.basis() * Complex(0.0, 1.0)));
    CHECK(gap_distance(table.apply(rebased), out) <= 1e-12);
    CHECK_THROWS_AS(table.apply(random_subspace(rng, 3, 1)), TableMissError);
}

TEST_CASE("pivot column line picks a basis-independent direction inside") {
    Rng rng(7);
    const Subspace s = random_subspace(rng, 5, 3);
    const Subspace line = pivot_column_line(s);
    CHECK(line.dim() == 1);
    CHECK(min_angle(line, s) <= 1e-7);
    const CMatrix mix = orthonormalize(rng.gaussian_matrix(3, 3));
    const Subspace rebased(CMatrix(s.basis() * mix));
    const Subspace line2 = pivot_column_line(rebased);
    CHECK(angle_between_lines(line.basis().col(0), line2.basis().col(0)) <= 1e-9);
}

TEST_CASE("nonstandard demo preserves ma and is flagged when degenerate") {
    Rng rng(8);
    const GrassmannMap demo = construct_nonstandard_demo(4, 2, 1);
    CHECK_FALSE(demo.degenerate_selector());
    CHECK(demo.codomain_dim() == 8);
    CHECK(demo.codomain_rank() == 3);
    for (int trial = 0; trial < 25; ++trial) {
        const Subspace s = random_subspace(rng, 4, 2);
        const Subspace t = random_subspace(rng, 4, 2);
        CHECK(std::abs(min_angle(demo.apply(s), demo.apply(t)) - min_angle(s, t)) <= 1e-7);
    }
    const GrassmannMap degenerate = construct_nonstandard_demo(4, 2, 2);
    CHECK(degenerate.degenerate_selector());
}

TEST_CASE("nonstandard demo finds a non-monotone selector witness") {
    Rng rng(9);
    bool found = false;
    for (int attempt = 0; attempt < 50 && !found; ++attempt) {
        const Subspace q = random_subspace(rng, 4, 3);
        const Subspace p = random_subspace_of(rng, q, 2);
        const double angle = angle_between_lines(pivot_column_line(p).basis().col(0),
                                                 pivot_column_line(q).basis().col(0));
        found = angle > 1e-3;
    }
    CHECK(found);
}

TEST_CASE("selector contract violations are caught") {
    // selector output outside the input span
    const GrassmannMap broken = GrassmannMap::nonstandard_demo(
        3, 2, 1, [](const Subspace& s) { return complement(s); }, "complement");
    Rng rng(10);
    CHECK_THROWS_AS(broken.apply(random_subspace(rng, 3, 2)), SelectorContractError);
}

TEST_CASE("map JSON round trip") {
    Rng rng(11);
    const GrassmannMap phi = GrassmannMap::standard(random_unitary(rng, 3, true), 1);
    const GrassmannMap back = map_from_json(map_to_json(phi));
    CHECK(back.kind() == GrassmannMap::Kind::standard);
    CHECK(back.isometry().conjugate);
    CHECK(operator_norm(back.isometry().matrix - phi.isometry().matrix) <= 1e-12);

    const GrassmannMap demo = construct_nonstandard_demo(4, 2, 1);
    const GrassmannMap demo_back = map_from_json(map_to_json(demo));
    CHECK(demo_back.kind() == GrassmannMap::Kind::nonstandard_demo);
    const Subspace s = random_subspace(rng, 4, 2);
    CHECK(gap_distance(demo.apply(s), demo_back.apply(s)) <= 1e-12);
}

TEST_CASE("subspace and matrix JSON round trips reject bad input") {
    Rng rng(12);
    const Subspace s = random_subspace(rng, 3, 2);
    const Subspace back = subspace_from_json(subspace_to_json(s));
    CHECK(gap_distance(s, back) <= 1e-12);

    nlohmann::json j = subspace_to_json(s);
    j["basis"]["re"][0][0] = "not a number";
    CHECK_THROWS(subspace_from_json(j));
    j = subspace_to_json(s);
    j["ambient_dim"] = 7;
    CHECK_THROWS_AS(subspace_from_json(j), ParseError);
}
