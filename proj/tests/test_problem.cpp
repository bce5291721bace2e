#include "lct/problem.hpp"

#include "lct/cohomology.hpp"

#include "doctest.h"

using namespace lct;

TEST_CASE("parse the integer example") {
    ProblemFile pf = parse_problem(
        "ring { base = ZZ; vars = U1:1, U2:1 } ideal { f1 = 2*U1 + 3*U2 }");
    CHECK(pf.ring == CoefficientRing::integers());
    CHECK(pf.u_names == std::vector<std::string>{"U1", "U2"});
    CHECK(pf.weights == std::vector<unsigned>{1, 1});
    REQUIRE(pf.generators.size() == 1);
    CHECK(pf.generators[0].to_string(pf.u_names) == "2*U1 + 3*U2");
    GradedRingSpec spec = pf.to_spec();
    CHECK(spec.delta() == 2);
}

TEST_CASE("parse the symbolic example") {
    ProblemFile pf = parse_problem(
        "ring { base = QQ[x,y]; vars = U1:1, U2:1 } ideal { f1 = x*U1 + y*U2 }");
    CHECK(pf.ring.to_string() == "QQ[x,y]");
    REQUIRE(pf.generators.size() == 1);
    CHECK(pf.generators[0].to_string(pf.u_names) == "x*U1 + y*U2");
}

TEST_CASE("non-homogeneous generators are rejected with a location") {
    try {
        parse_problem("ring { base = ZZ; vars = U1:1, U2:1 }\n"
                      "ideal { f1 = U1 + U2^2 }");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(std::string(e.what()).find("non-homogeneous") != std::string::npos);
        CHECK(std::string(e.what()).find("f1") != std::string::npos);
    }
}

TEST_CASE("diagnostics carry positions") {
    try {
        parse_problem("ring { base = ZZ; vars = U1:1 }\nideal { f1 = U1 + z }");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(std::string(e.what()).find("unknown identifier z") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_problem("ring { base = ZZ; vars = U1:1 } ideal { f1 = }"),
                    ParseError);
    CHECK_THROWS_AS(parse_problem("ring { base = XX }"), ParseError);
    CHECK_THROWS_AS(parse_problem("ring { base = GF(4); vars = U1:1 }"), ParseError);
    CHECK_THROWS_AS(parse_problem("ideal { f1 = 1 }"), ParseError);
    CHECK_THROWS_AS(
        parse_problem("ring { base = ZZ; vars = U1:1 } ideal { f1 = 1; f1 = 2 }"),
        ParseError);
    CHECK_THROWS_AS(
        parse_problem("ring { base = ZZ[U1]; vars = U1:1 } ideal { f1 = U1 }"),
        ParseError);
    CHECK_THROWS_AS(parse_problem("ring { base = ZZ; vars = U1:0 }"), ParseError);
}

TEST_CASE("expression grammar") {
    CoefficientRing ring = CoefficientRing::polynomial(CoefficientRing::integers(), {"a"});
    std::vector<std::string> u = {"U1", "U2"};
    auto p = [&](const std::string& text) { return parse_expression(text, ring, u); };

    CHECK(p("U1*U2") == p("U2*U1"));
    CHECK(p("(U1 + U2)^2") == p("U1^2 + 2*U1*U2 + U2^2"));
    CHECK(p("-U1^2") == p("0 - U1^2"));
    CHECK(p("2*a*U1 - a*U1") == p("a*U1"));
    CHECK(p("U1 - U1").is_zero());
    CHECK(p("3") == p("1 + 2"));
    CHECK_THROWS_AS(p("U1 +"), ParseError);
    CHECK_THROWS_AS(p("2 U1"), ParseError); // no implicit multiplication
    CHECK_THROWS_AS(p("U1^a"), ParseError);
}

TEST_CASE("options block") {
    ProblemFile pf = parse_problem(
        "ring { base = ZZ; vars = U1:1 }\n"
        "ideal { f1 = 2*U1 }\n"
        "options { dmax = 9; minor_budget = 500; alpha_max = 3; beta_max = 4 }");
    CHECK(pf.options.dmax == 9);
    CHECK(pf.options.minor_budget == 500);
    CHECK(pf.options.alpha_max == 3);
    CHECK(pf.options.beta_max == 4);
}

TEST_CASE("comments and newline separators") {
    ProblemFile pf = parse_problem(
        "# presentation over the integers\n"
        "ring {\n"
        "  base = ZZ\n"
        "  vars = U1:1, U2:2\n"
        "}\n"
        "ideal {\n"
        "  f1 = U1^2 # inline comment\n"
        "  f2 = 3*U2\n"
        "}\n");
    CHECK(pf.weights == std::vector<unsigned>{1, 2});
    REQUIRE(pf.generators.size() == 2);
    CHECK(pf.generator_names == std::vector<std::string>{"f1", "f2"});
}

TEST_CASE("round trip through the pretty printer") {
    const std::vector<std::string> sources = {
        "ring { base = ZZ; vars = U1:1, U2:1 } ideal { f1 = 2*U1 + 3*U2 }",
        "ring { base = QQ[x,y]; vars = U1:1, U2:1 } ideal { f1 = x*U1 + y*U2 }",
        "ring { base = GF(5); vars = V:2, W:3 } ideal { g = 2*V^3 + 4*W^2 }",
        "ring { base = ZZ[A1,A2]; vars = X1:1, X2:1 }\n"
        "ideal { F = X1*X2 - A1*X1^2 - A2*X2^2 }\n"
        "options { dmax = 7; minor_budget = 1000 }",
        "ring { base = ZZ; vars = U1:1 }",
    };
    for (const auto& src : sources) {
        ProblemFile once = parse_problem(src);
        ProblemFile twice = parse_problem(once.pretty_print());
        CHECK(once == twice);
        CHECK(once.pretty_print() == twice.pretty_print());
    }
}

TEST_CASE("char-p inputs") {
    ProblemFile pf = parse_problem(
        "ring { base = GF(2)[x,y] } ideal { f1 = x; f2 = y }");
    CHECK(pf.u_names.empty());
    CHECK_THROWS_AS(pf.to_spec(), Error);
    std::vector<R0Element> fs = pf.charp_inputs();
    REQUIRE(fs.size() == 2);
    CHECK(fs[0] == R0Element::variable(pf.ring, "x"));

    ProblemFile bad = parse_problem(
        "ring { base = GF(2)[x]; vars = U1:1 } ideal { f1 = x*U1 }");
    CHECK_THROWS_AS(bad.charp_inputs(), Error);
}
