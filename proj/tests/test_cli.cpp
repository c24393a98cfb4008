#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include <json.hpp>
#include <nctorus/cli.hpp>
#include <nctorus/expression.hpp>
#include <nctorus/harness.hpp>

using namespace nctorus;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parse produces the expected shape")
{
    auto e = parse_expression(torus_algebra(), "V*U");
    REQUIRE(e.kind == Expression::Kind::sum);
    REQUIRE(e.children.size() == 1);
    const auto& prod = e.children[0];
    REQUIRE(prod.children.size() == 2);
    CHECK(prod.children[0].kind == Expression::Kind::generator);
    CHECK(prod.children[0].generator == 1);
    CHECK(prod.children[1].generator == 0);

    auto m = parse_expression(p2_algebra(), "q^(-1/2) U1 V1 U2 V2");
    REQUIRE(m.children.size() == 1);
    CHECK(m.children[0].children.size() == 5);
    CHECK(m.children[0].children[0].kind == Expression::Kind::scalar);
    CHECK(m.children[0].children[0].value == phase_pow(-1));

    auto two = parse_expression(torus_algebra(), "U^2V + 3*V");
    CHECK(two.children.size() == 2);
}

TEST_CASE("eval_expression")
{
    const auto& T = torus_algebra();
    CHECK(parse_element(T, "V*U") == basis(T, {1, 1}).scaled(phase_pow(-2)));
    CHECK(parse_element(T, "V U") == parse_element(T, "V*U"));
    CHECK(parse_element(T, "U*U^(-1)") == unit(T));
    CHECK(parse_element(T, "U U^-1") == unit(T));
    CHECK(parse_element(p2_algebra(), "U1U2V1V2") == basis(p2_algebra(), {1, 1, 1, 1}).scaled(phase_pow(-1)));
    CHECK(parse_element(T, "(U+V)^2") == parse_element(T, "U^2 + U V + V U + V^2"));
    CHECK(parse_element(T, "U - U").is_zero());
    CHECK(parse_element(T, "-U + 2 i V") ==
          AlgebraElement::generator(T, 0).scaled(PhaseScalar(-1)) +
              AlgebraElement::generator(T, 1).scaled(PhaseScalar(GaussianRational(0, 2))));
    CHECK(parse_element(circle_algebra(), "z^3 z^-1") == basis(circle_algebra(), {2}));
    CHECK(parse_element(T, "q U") == parse_element(T, "q^(1) U"));
    CHECK(parse_element(T, "q^2") == parse_element(T, "q^(2)"));
}

TEST_CASE("parse errors carry positions")
{
    const auto& T = torus_algebra();
    CHECK_THROWS_AS(parse_element(T, "U1"), ParseError);
    CHECK_THROWS_AS(parse_element(T, "U +"), ParseError);
    CHECK_THROWS_AS(parse_element(T, "(U"), ParseError);
    CHECK_THROWS_AS(parse_element(T, "q^(1/3)"), ParseError);
    CHECK_THROWS_AS(parse_element(T, "1/0"), ParseError);
    CHECK_THROWS_AS(parse_element(T, "(U+V)^-1"), ParseError);
    try {
        parse_element(T, "U V W");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
        CHECK(std::string(e.what()).find("unknown generator 'W'") != std::string::npos);
    }
}

TEST_CASE("render/parse round trip on generated elements")
{
    TrialConfig cfg;
    Rng rng(2718);
    std::size_t n = 0;
    for (const auto* a : checks::all_algebras())
        for (int t = 0; t < 125; ++t, ++n) {
            auto x = random_element(*a, cfg, rng);
            auto y = random_element(*a, cfg, rng);
            auto z = x * y + x.scaled(random_scalar(rng));
            INFO(z.str());
            REQUIRE(parse_element(*a, z.str()) == z);
        }
    CHECK(n == 500);
}

TEST_CASE("element serialization round trip")
{
    TrialConfig cfg;
    Rng rng(1);
    for (int t = 0; t < 100; ++t) {
        auto x = random_element(p3_algebra(), cfg, rng);
        auto j = to_json(x);
        CHECK(element_from_json(p3_algebra(), nlohmann::json::parse(j.dump())) == x);
    }
    auto q = basis(torus_algebra(), {1, 1}).scaled(phase_pow(-1));
    CHECK(to_json(q).dump() == "[[[1,1],[[-1,1,1,0,1]]]]");
    CHECK_THROWS_AS(element_from_json(torus_algebra(), nlohmann::json::parse("[[[1],[[0,1,1,0,1]]]]")), AlgebraError);
}

TEST_CASE("cli commands")
{
    auto n = run({"normalize", "--algebra", "torus", "V U"});
    CHECK(n.code == 0);
    CHECK(n.out == "q^(-1) * U V\n");

    auto d = run({"apply", "--map", "delta", "U"});
    CHECK(d.code == 0);
    CHECK(d.out == "U1 U2\n");

    CHECK(run({"apply", "--map", "epsilon", "U V"}).out == "q^(1/2)\n");
    CHECK(run({"apply", "--map", "mu", "U1 V1 U2 V2"}).out == "q^(-1) * U^2 V^2\n");
    CHECK(run({"apply", "--map", "circle-delta", "z^2"}).out == "q^(-1) * U^2 V^2\n");
    CHECK(run({"mul", "--algebra", "p2", "U1 U2", "V1 V2"}).out == "q^(-1/2) * U1 V1 U2 V2\n");

    auto ev = run({"eval", "--theta", "0.5", "--algebra", "torus", "q U V + V"});
    CHECK(ev.code == 0);
    CHECK(ev.out.find("U V: -1") != std::string::npos);
    CHECK(ev.out.find("V: 1 + 0i") != std::string::npos);

    auto c = run({"check", "--suite", "antipode-law", "--seed", "7", "--trials", "50"});
    CHECK(c.code == 0);
    CHECK(c.out.find("PASS antipode-law") != std::string::npos);
}

TEST_CASE("cli errors and exit codes")
{
    auto mismatch = run({"apply", "--map", "mu", "--algebra", "torus", "U"});
    CHECK(mismatch.code == 2);
    CHECK(mismatch.err.find("mu") != std::string::npos);
    CHECK(mismatch.err.find("p2") != std::string::npos);
    CHECK(mismatch.err.find("torus") != std::string::npos);

    CHECK(run({"apply", "--map", "mu", "U"}).code == 2);  // U is not a p2 generator
    CHECK(run({"normalize", "--algebra", "torus", "U +"}).code == 2);
    CHECK(run({"normalize", "--algebra", "klein", "U"}).code == 2);
    CHECK(run({"check", "--suite", "bogus"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("json-like output is stable")
{
    auto a = run({"--format", "json-like", "check", "--suite", "torus-relation,counit-laws", "--trials", "10"});
    auto b = run({"--format", "json-like", "check", "--suite", "torus-relation,counit-laws", "--trials", "10"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto j = nlohmann::json::parse(a.out);
    CHECK(j["passed"] == true);
    CHECK(j["checks"].size() == 2);
    CHECK(j["checks"][1]["name"] == "counit-laws");

    auto n = run({"normalize", "--algebra", "torus", "V U", "--format", "json-like"});
    auto e = nlohmann::json::parse(n.out);
    CHECK(e["rendered"] == "q^(-1) * U V");
    CHECK(e["element"].dump() == "[[[1,1],[[-2,1,1,0,1]]]]");
}
