#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "cecoh/report.hpp"

using namespace cecoh;

TEST_CASE("parsing the 5-dimensional cosymplectic file") {
    const char* text =
        "# five generators, two relations\n"
        "dim 5\n"
        "d e3 = e15\n"
        "d e4 = e12\n"
        "eta = e5\n"
        "omega = e13 - e24\n"
        "flag nilpotent\n";
    AlgebraSpec spec = parse_spec(text, "sample");
    CHECK(spec.dim == 5);
    CHECK_FALSE(spec.uses_brackets);
    CHECK(spec.differentials.size() == 2);
    CHECK(spec.eta == parse_form(5, "e5"));
    CHECK(spec.omega == parse_form(5, "e13 - e24"));
    CHECK(spec.flag_nilpotent);
    CHECK(build_cdga(spec) == build_cdga(registry("nil5_cosymp")));
}

TEST_CASE("a bare dim line is an abelian spec") {
    AlgebraSpec spec = parse_spec("dim 2\n");
    CHECK(build_cdga(spec) == Cdga::abelian(2));
}

TEST_CASE("grammar violations are rejected with positions") {
    auto reject = [](const char* text) {
        CHECK_THROWS_AS(parse_spec(text), ParseError);
    };
    reject("dim 5\nbracket [e1,e2] = -1 e4\nd e3 = e15\n");  // mixed styles
    reject("dim 5\nd e3 = e15\nbracket [e1,e2] = -1 e4\n");
    reject("dim 3\nd e7 = e12\n");                            // out of range
    reject("dim 3\nd e1 = e45\n");
    reject("dim 3\nflag shiny\n");
    reject("dim 3\ndim 4\n");
    reject("d e3 = e12\n");                                   // missing dim first
    reject("dim 3\nd e3 = e12\nd e3 = e12\n");                // duplicate
    reject("dim 3\neta = e1\neta = e2\n");
    reject("dim 3\nbrackets [e1,e2] = e3\n");                 // unknown keyword
    reject("dim 3\nbracket [e1,e1] = e3\n");
    reject("dim 3\nd e3 = e1\n");                             // wrong degree
    reject("dim 10\n");
    try {
        parse_spec("dim 3\nd e3 = e4x\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.col > 1);
    }
}

TEST_CASE("bracket values may combine generators with rational weights") {
    AlgebraSpec spec = parse_spec(
        "dim 4\n"
        "bracket [e1,e2] = -1/2 e3 + e4\n");
    Cdga c = build_cdga(spec);
    CHECK(c.d_generator(3) == parse_form(4, "1/2 e12"));
    CHECK(c.d_generator(4) == parse_form(4, "-e12"));
}

TEST_CASE("flags are cross-checked against the bracket") {
    CHECK_THROWS_AS(build_cdga(parse_spec("dim 5\nd e1 = -e15\nflag nilpotent\n")),
                    ValidationError);
    CHECK_THROWS_AS(build_cdga(parse_spec("dim 2\nbracket [e1,e2] = e2\nflag unimodular\n")),
                    ValidationError);
}

TEST_CASE("structure declarations must fit the dimension parity") {
    CHECK_THROWS_AS(analyze(parse_spec("dim 4\neta = e4\nomega = e12 + e34\n")),
                    ValidationError);
    CHECK_THROWS_AS(analyze(parse_spec("dim 5\nomega = e12 + e34\n")), ValidationError);
    CHECK_THROWS_AS(analyze(parse_spec("dim 5\neta = e5\n")), ValidationError);
}

TEST_CASE("every registry entry builds and passes the cochain condition") {
    for (const auto& name : registry_names()) {
        AlgebraSpec spec = registry(name);
        Cdga c = build_cdga(spec);
        CHECK(!check_d_squared(c));
        CHECK(c.dim() == spec.dim);
    }
    CHECK_THROWS_AS(registry("benson_gordon"), UnknownNameError);
}

TEST_CASE("registry circle products agree with the constructors") {
    CHECK(build_cdga(registry("kt_x_s1")) == circle_product(build_cdga(registry("kt"))));
    CHECK(build_cdga(registry("e4_x_s1")) == circle_product(build_cdga(registry("e4"))));
    CHECK(build_cdga(registry("g6_78_x_s1")) == circle_product(build_cdga(registry("g6_78"))));
    CHECK(build_cdga(registry("kt_x_kt")) ==
          direct_sum(build_cdga(registry("kt")), build_cdga(registry("kt"))));
}

TEST_CASE("reports are byte-identical across runs") {
    for (const char* name : {"g6_78", "nil5_cosymp", "solv5", "torus_5", "kt"}) {
        AlgebraSpec spec = registry(name);
        std::string first = render_report(analyze(spec), true);
        std::string second = render_report(analyze(spec), true);
        CHECK(first == second);
        CHECK(first.find('#') == std::string::npos);
    }
}

TEST_CASE("report fields for the three pinned registry entries") {
    {
        AnalysisReport rep = analyze(registry("g6_78"));
        CHECK(rep.betti == std::vector<int>{1, 1, 1, 2, 1, 1, 1});
        CHECK(rep.structure == StructureKind::symplectic);
        CHECK_FALSE(rep.symplectic->lefschetz_type);
        CHECK(rep.massey_findings.empty());
        CHECK(rep.formality == FormalityVerdict::undetermined);
    }
    {
        AnalysisReport rep = analyze(registry("torus_7"));
        CHECK(rep.structure == StructureKind::cosymplectic);
        CHECK(rep.k_cosymplectic.has_value());
        CHECK(rep.k_cosymplectic->lefschetz_property);
        CHECK(rep.one_lefschetz == true);
        CHECK(rep.formality == FormalityVerdict::formal);
        CHECK(rep.poincare_duality);
        CHECK(rep.splitting_holds);
    }
    {
        AnalysisReport rep = analyze(registry("nil5_cosymp"));
        CHECK(rep.structure == StructureKind::cosymplectic);
        CHECK(*rep.xi == "[0, 0, 0, 0, 1]");
        CHECK(rep.xi_equals_theta);
        CHECK(rep.one_lefschetz == false);
        CHECK(rep.formality == FormalityVerdict::non_formal);
    }
}

TEST_CASE("the g7 report routes manifold Betti numbers through the mapping torus") {
    AnalysisReport rep = analyze(registry("g7"));
    CHECK(rep.model_level_caveat);
    REQUIRE(rep.manifold_betti.has_value());
    CHECK((*rep.manifold_betti)[1] == 2);
    CHECK((*rep.manifold_betti)[2] == 3);
    std::string text = render_report(rep, true);
    CHECK(text.find("provenance = model-level") != std::string::npos);
    CHECK(text.find("manifold_betti") != std::string::npos);
}

TEST_CASE("corpus verdict table matches the golden transcription") {
    std::ifstream golden(std::string(CECOH_TEST_DIR) + "/golden/corpus_verdicts.golden.txt");
    REQUIRE(golden.good());
    std::ostringstream want;
    want << golden.rdbuf();
    CHECK(render_corpus_table() == want.str());
}
