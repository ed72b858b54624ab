#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cecoh/cdga.hpp"
#include "cecoh/corpus.hpp"

using namespace cecoh;

namespace {

Cdga heisenberg() { return build_cdga(registry("heisenberg")); }

}  // namespace

TEST_CASE("Chevalley-Eilenberg differential of the 5-dim nilpotent algebra") {
    // brackets [e1,e2] = -e4, [e1,e5] = -e3
    LieAlgebra g(5);
    g.add_bracket(1, 2, 4, -1);
    g.add_bracket(1, 5, 3, -1);
    Cdga c = ce_differential(g);
    CHECK(c.d_generator(1).is_zero());
    CHECK(c.d_generator(2).is_zero());
    CHECK(c.d_generator(3) == parse_form(5, "e15"));
    CHECK(c.d_generator(4) == parse_form(5, "e12"));
    CHECK(c.d_generator(5).is_zero());
}

TEST_CASE("Chevalley-Eilenberg differential of an abelian algebra vanishes") {
    LieAlgebra g(6);
    Cdga c = ce_differential(g);
    for (int i = 1; i <= 6; ++i)
        CHECK(c.d_generator(i).is_zero());
}

TEST_CASE("Chevalley-Eilenberg differential of h7") {
    LieAlgebra g(6);
    g.add_bracket(1, 2, 4, -1);
    g.add_bracket(1, 3, 5, -1);
    g.add_bracket(2, 3, 6, -1);
    Cdga c = ce_differential(g);
    CHECK(c.d_generator(4) == parse_form(6, "e12"));
    CHECK(c.d_generator(5) == parse_form(6, "e13"));
    CHECK(c.d_generator(6) == parse_form(6, "e23"));
}

TEST_CASE("the differential is a degree +1 antiderivation") {
    Cdga h = heisenberg();
    CHECK(h.d(parse_form(3, "e13")).is_zero());
    CHECK(h.d(Form::one(3)).is_zero());

    Cdga nil5 = build_cdga(registry("nil5_cosymp"));
    CHECK(nil5.d(parse_form(5, "e234")) == parse_form(5, "-e1245"));
}

TEST_CASE("check_d_squared reports witnesses") {
    CHECK(!check_d_squared(build_cdga(registry("g6_78"))));
    CHECK(!check_d_squared(heisenberg()));

    std::vector<Form> dgen(4, Form(4));
    dgen[2] = parse_form(4, "e12");
    dgen[3] = parse_form(4, "e34");
    Cdga broken(4, dgen);
    auto witness = check_d_squared(broken);
    REQUIRE(witness.has_value());
    CHECK(witness->generator == 4);
    CHECK(witness->value == broken.d(parse_form(4, "e34")));
    CHECK(!witness->value.is_zero());
}

TEST_CASE("ce_differential rejects non-Jacobi brackets with a triple") {
    // [e1,e2] = e3, [e1,e3] = e1 violates Jacobi on (1,2,3)
    LieAlgebra g(3);
    g.add_bracket(1, 2, 3, 1);
    g.add_bracket(1, 3, 1, 1);
    CHECK_THROWS_AS(ce_differential(g), JacobiError);
    try {
        ce_differential(g);
    } catch (const JacobiError& e) {
        CHECK(e.i == 1);
        CHECK(e.j == 2);
        CHECK(e.k == 3);
    }
}

TEST_CASE("circle products append one closed generator") {
    Cdga kt = circle_product(heisenberg());
    CHECK(kt.dim() == 4);
    CHECK(kt.d_generator(3) == parse_form(4, "e12"));
    CHECK(kt.d_generator(4).is_zero());
    CHECK(kt == build_cdga(registry("kt")));

    Cdga torus = circle_product(Cdga::abelian(5));
    CHECK(torus == Cdga::abelian(6));

    Cdga twice = circle_product(circle_product(build_cdga(registry("g6_78"))));
    CHECK(twice.dim() == 8);
    CHECK(twice.d_generator(1) == parse_form(8, "e25 - e16"));
    CHECK(!check_d_squared(twice));
}

TEST_CASE("semidirect extension by the zero derivation is the circle product") {
    Cdga h = heisenberg();
    CHECK(semidirect_extend(h, QMatrix(3, 3)) == circle_product(h));
}

TEST_CASE("semidirect extension by the block rotation reproduces g7") {
    Cdga h7 = build_cdga(registry("h7"));
    QMatrix D(6, 6);
    D.at(0, 1) = 1;
    D.at(1, 0) = -1;
    D.at(4, 5) = 1;
    D.at(5, 4) = -1;
    Cdga extended = semidirect_extend(h7, D);
    CHECK(extended == build_cdga(registry("g7")));
    CHECK(!check_d_squared(extended));
}

TEST_CASE("semidirect extension of the plane by a rotation") {
    Cdga plane = Cdga::abelian(2);
    QMatrix D(2, 2);
    D.at(0, 1) = 1;
    D.at(1, 0) = -1;
    Cdga c = semidirect_extend(plane, D);
    CHECK(c.d_generator(1) == parse_form(3, "e23"));
    CHECK(c.d_generator(2) == parse_form(3, "-e13"));
    CHECK(c.d_generator(3).is_zero());
}

TEST_CASE("semidirect extension rejects non-derivations") {
    Cdga h = heisenberg();
    QMatrix D(3, 3);
    D.at(0, 0) = 1;  // scaling e1 alone is not a bracket derivation
    CHECK_THROWS_AS(semidirect_extend(h, D), DerivationPairError);
}

TEST_CASE("direct sums concatenate and reindex") {
    CHECK(direct_sum(Cdga::abelian(2), Cdga::abelian(3)) == Cdga::abelian(5));
    CHECK(direct_sum(heisenberg(), Cdga::abelian(1)) == build_cdga(registry("kt")));
    Cdga kt = build_cdga(registry("kt"));
    Cdga two = direct_sum(kt, kt);
    CHECK(two.dim() == 8);
    CHECK(two.d_generator(3) == parse_form(8, "e12"));
    CHECK(two.d_generator(7) == parse_form(8, "e56"));
    CHECK(!check_d_squared(two));
}

TEST_CASE("nilpotency and unimodularity detection") {
    CHECK(is_nilpotent(heisenberg()));
    CHECK(is_nilpotent(build_cdga(registry("kt_x_kt"))));
    CHECK(!is_nilpotent(build_cdga(registry("g6_78"))));
    CHECK(!is_nilpotent(build_cdga(registry("solv5"))));
    CHECK(!is_nilpotent(build_cdga(registry("g7"))));

    CHECK(lie_from_cdga(build_cdga(registry("g6_78"))).is_unimodular());
    CHECK(lie_from_cdga(build_cdga(registry("g7"))).is_unimodular());
    LieAlgebra affine(2);
    affine.add_bracket(1, 2, 2, 1);  // [e1,e2] = e2, tr(ad_{e1}) = 1
    CHECK(!affine.is_unimodular());
    CHECK(!affine.is_nilpotent());
}
