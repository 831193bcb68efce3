#include "support.hpp"

#include "monores/cli.hpp"
#include "monores/errors.hpp"
#include "monores/morse.hpp"
#include "monores/resolutions.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace monores;
using namespace monores::testing;
namespace fs = std::filesystem;

namespace {

struct Scratch {
    fs::path dir;
    Scratch() {
        dir = fs::temp_directory_path() / ("monores_cli_" + std::to_string(std::random_device{}()));
        fs::create_directories(dir);
    }
    ~Scratch() { fs::remove_all(dir); }
    std::string write(const std::string& name, const std::string& text) const {
        const fs::path p = dir / name;
        std::ofstream(p) << text;
        return p.string();
    }
};

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int status = dispatch(args, out, err);
    return {status, out.str(), err.str()};
}

const char* path_ideal = "vars: w x y z\ngens: w*x, x*y, y*z\n";

} // namespace

TEST_CASE("ideal files") {
    const MonomialIdeal i = parse_ideal("# path\nvars: w x y z\ngens: w*x, x*y\ngens: y*z\n");
    CHECK(i.to_string() == ideal_from(path_ideal).to_string());
    CHECK(i.generator(3) == Multidegree{0, 0, 1, 1});
    try {
        parse_ideal("vars: x y\ngens: x*q");
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() >= 7);
        CHECK(std::string(e.what()).find("undeclared variable q") != std::string::npos);
    }
    CHECK_THROWS_WITH(parse_ideal("vars: x y\ngens: x, x*y"), doctest::Contains("x divides x*y"));
    CHECK_THROWS_AS(parse_ideal("vars: x y\ngens: 2*x"), parse_error);
    CHECK_THROWS_AS(parse_ideal("vars: x y\ngens: x + y"), parse_error);
    CHECK_THROWS_AS(parse_ideal("gens: x"), parse_error);
    CHECK_THROWS_AS(parse_ideal("vars: x x\ngens: x"), parse_error);
    CHECK_THROWS_AS(parse_polynomial("x^", {"x"}), parse_error);
    CHECK_THROWS_AS(parse_polynomial("(x", {"x"}), parse_error);
}

TEST_CASE("complete intersection files") {
    const MonomialIdeal i = ideal_from("vars: x y\ngens: x^2, x*y, y^2");
    const CIData derived = parse_ci("a: x^2 + y^2\n", i);
    CHECK(derived.r() == 1);
    const CIData explicit_coeffs = parse_ci("vars: x y\na: x^2*y\ncoeffs: 0, x, 0\na: y^2\n", i);
    CHECK(explicit_coeffs.r() == 2);
    CHECK(explicit_coeffs.coefficient(1, 2) == parse_polynomial("x", i.variables()));
    CHECK_THROWS_AS(parse_ci("a: x^2*y\ncoeffs: 0, 1, 0\n", i), membership_error);
    CHECK_THROWS_AS(parse_ci("a: x^2\ncoeffs: 1, 0\n", i), parse_error);
    CHECK_THROWS_AS(parse_ci("a: x + y\n", i), membership_error);
    CHECK_THROWS_AS(parse_ci("vars: y x\na: x^2\n", i), parse_error);
}

TEST_CASE("matching files and index lists") {
    const MorseMatching m = parse_matching(R"({"edges": [{"upper": [1,2,3], "lower": [1,3]}]})");
    REQUIRE(m.size() == 1);
    CHECK(m.edges()[0].upper == IndexSet{1, 2, 3});
    CHECK_THROWS_AS(parse_matching("{\"edges\": 3}"), parse_error);
    CHECK_THROWS_AS(parse_matching("{"), parse_error);
    CHECK(parse_index_list("1,3, 4") == std::vector<std::size_t>{1, 3, 4});
    CHECK_THROWS_AS(parse_index_list("0,1"), parse_error);
    CHECK_THROWS_AS(parse_index_list("1,,2"), parse_error);
}

TEST_CASE("complex serialization") {
    const MonomialIdeal x = ideal_from("vars: x\ngens: x");
    const auto j = complex_to_json(taylor_resolution(x));
    CHECK(j["degrees"].size() == 2);
    CHECK(j["differentials"][0]["entries"].size() == 1);
    CHECK(j["differentials"][0]["entries"][0]["poly"].dump() == R"([{"exps":[1],"num":1,"den":1}])");

    for (const auto& [name, ideal] : corpus()) {
        CAPTURE(name);
        const BasedComplex t = taylor_resolution(ideal);
        const std::string text = complex_to_json(t).dump();
        CHECK(complex_from_json(nlohmann::json::parse(text)) == t);
        CHECK(complex_to_json(taylor_resolution(ideal)).dump() == text);
        for (const IndexSet s : subsets_with_gaps(ideal)) {
            const BasedComplex p = pivot_complex(ideal, s);
            CHECK(complex_from_json(nlohmann::json::parse(complex_to_json(p).dump())) == p);
        }
    }
    Polynomial big;
    big.add_term(Multidegree{1}, Rational(mpq_class("123456789012345678901234567890/7")));
    const auto pj = polynomial_to_json(big);
    CHECK(pj[0]["num"].is_string());
    CHECK(polynomial_from_json(nlohmann::json::parse(pj.dump()), 1) == big);
}

TEST_CASE("text display of T_{1,2}") {
    const MonomialIdeal i = ideal_from(path_ideal);
    const std::string expected =
        "ranks: 1 3 2\n"
        "F2: e13[w*x*y*z] e23[x*y*z]\n"
        "F1: e1[w*x] e2[x*y] e3[y*z]\n"
        "F0: e{}[1]\n"
        "d2: F2 -> F1\n"
        "     e13  e23\n"
        "  e1 -y*z 0\n"
        "  e2 0    -z\n"
        "  e3 w*x  x\n"
        "d1: F1 -> F0\n"
        "      e1  e2  e3\n"
        "  e{} w*x x*y y*z\n";
    CHECK(complex_to_text(pivot_complex(i, IndexSet{1, 2}), i.variables()) == expected);
}

TEST_CASE("sha256") {
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("command line") {
    const Scratch scratch;
    const std::string path = scratch.write("path.txt", path_ideal);
    const std::string i1 = scratch.write("i1.txt", "vars: w x y z\ngens: w*x, x*y, y*z, w*z\n");
    const std::string i2 = scratch.write("i2.txt", "vars: u w x y z\ngens: u, w*x, x*y, y*z\n");
    const std::string quad = scratch.write("quad.txt", "vars: x y\ngens: x^2, x*y, y^2\n");
    const std::string ci = scratch.write("ci.txt", "a: x^2 + y^2\n");
    const std::string ci_mono = scratch.write("ci_mono.txt", "a: x^2\n");
    const std::string bad = scratch.write("bad.txt", "vars: x y\ngens: x*q\n");

    SUBCASE("simple queries") {
        CHECK(run({"scarf", i2}).out == "2\n");
        CHECK(run({"scarf", i2}).status == 0);
        CHECK(run({"scarf", scratch.write("v.txt", "vars: x y\ngens: x, y\n")}).out == "inf\n");
        CHECK(run({"betti", i1}).out == "1 4 4 1\n");
        CHECK(run({"betti", i2}).out == "1 4 5 2\n");
        CHECK(run({"gaps", path, "--indices", "1,3"}).out == "2\n");
        const Run none = run({"gaps", path, "--indices", "1,2"});
        CHECK(none.status == 1);
        CHECK(none.out == "none\n");
        CHECK(run({"smallest-pivot", i2}).out == "2,4\n");
        CHECK(run({"taylor", path}).out.rfind("ranks: 1 3 3 1\n", 0) == 0);
        CHECK(run({"--version"}).out == "0.1.0\n");
    }
    SUBCASE("usage and parse errors exit with 2") {
        CHECK(run({"frobnicate", path}).status == 2);
        CHECK(run({}).status == 2);
        CHECK(run({"pivot", path}).status == 2);
        CHECK(run({"taylor", path, "--format", "xml"}).status == 2);
        const Run parse = run({"taylor", bad});
        CHECK(parse.status == 2);
        CHECK(parse.err.find("undeclared variable q") != std::string::npos);
        CHECK(run({"taylor", (scratch.dir / "missing.txt").string()}).status == 2);
        CHECK(run({"pivot", path, "--indices", "1,7"}).status == 2);
        CHECK(run({"verify", path, "--what", "d2", "--indices", "1,3", "--order", "1,2,3"}).status == 2);
    }
    SUBCASE("verify attaches certificates") {
        const Run fail = run({"verify", path, "--what", "exactness", "--indices", "1,2", "--format", "json"});
        CHECK(fail.status == 1);
        const auto cert = nlohmann::json::parse(fail.out);
        CHECK(cert["command"] == "verify exactness");
        CHECK(cert["pass"] == false);
        CHECK(cert["tool_version"] == "0.1.0");
        CHECK(cert["inputs_digest"].get<std::string>().size() == 64);
        const auto& witness = cert["checks"][1]["witness"][0];
        CHECK(witness["multidegree"] == "w*x*y");
        CHECK(witness["homological_degree"] == 1);
        CHECK(witness["dimension"] == 1);

        CHECK(run({"verify", path, "--what", "exactness", "--indices", "1,3"}).status == 0);
        CHECK(run({"verify", path, "--what", "exactness", "--order", "3,1,2"}).status == 0);
        CHECK(run({"verify", path, "--what", "d2"}).status == 0);
        const Run dg = run({"verify", quad, "--what", "dg", "--indices", "1,3"});
        CHECK(dg.status == 0);
        CHECK(dg.out.find("Leibniz") != std::string::npos);
        CHECK(run({"verify", quad, "--what", "homotopy", "--ci", ci, "--indices", "1,3"}).status == 0);
        CHECK(run({"verify", quad, "--what", "homotopy"}).status == 2);

        // a serialized complex round-trips through --complex
        const std::string json = scratch.write("t.json", run({"pivot", path, "--indices", "1,2", "--format", "json"}).out);
        CHECK(run({"verify", path, "--what", "exactness", "--complex", json}).status == 1);
        const std::string lyu = scratch.write("l.json", run({"lyubeznik", path, "--format", "json"}).out);
        CHECK(run({"verify", path, "--what", "exactness", "--complex", lyu}).status == 2);
        CHECK(run({"verify", path, "--what", "exactness", "--complex", ci}).status == 2);
    }
    SUBCASE("matchings") {
        const std::string good =
            scratch.write("good.json", R"({"edges": [{"upper": [1,2,3], "lower": [1,3]}]})");
        const std::string invalid = scratch.write("bad.json", R"({"edges": [{"upper": [1,2], "lower": [1]}]})");
        const Run ok = run({"morse", path, "--matching", good});
        CHECK(ok.status == 0);
        CHECK(ok.out.rfind("ranks: 1 3 2\n", 0) == 0);
        const Run no = run({"morse", path, "--matching", invalid});
        CHECK(no.status == 1);
        CHECK(no.out.find("condition 2") != std::string::npos);
        CHECK(run({"lyubeznik", path}).out.rfind("matching:\nranks: 1 3 3 1", 0) == 0);
    }
    SUBCASE("homotopies, Shamash and bounds") {
        const Run h = run({"homotopy", quad, "--ci", ci, "--indices", "1,3"});
        CHECK(h.status == 0);
        CHECK(h.out.find("[pass] d sigma_1 + sigma_1 d = a_1 id") != std::string::npos);
        const Run sh = run({"shamash", quad, "--ci", ci, "--truncate", "5", "--format", "json"});
        CHECK(sh.status == 0);
        const auto sj = nlohmann::json::parse(sh.out);
        CHECK(sj["ranks"].dump() == "[1,3,3,3,3,3]");
        CHECK(sj["base"] == "pivot resolution T_{1,3}");
        const Run exact = run({"shamash", quad, "--ci", ci_mono, "--strand-bound", "6,6", "--trust-regular"});
        CHECK(exact.status == 0);
        CHECK(exact.out.find("assumed (--trust-regular)") != std::string::npos);
        CHECK(run({"shamash", quad, "--ci", scratch.write("nm.txt", "a: x + y\n")}).status == 2);
        const Run b = run({"bounds", path, "--r", "1", "--max-degree", "4"});
        CHECK(b.status == 0);
        CHECK(b.out.find("3  0  3  literal < structural") != std::string::npos);
    }
    SUBCASE("output is deterministic") {
        CHECK(run({"taylor", i2, "--format", "json"}).out == run({"taylor", i2, "--format", "json"}).out);
        CHECK(run({"verify", i2, "--what", "exactness"}).out == run({"verify", i2, "--what", "exactness"}).out);
    }
}
