#include <catch2/catch_amalgamated.hpp>
#include <qtilt/cli.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace qtilt;

namespace {

std::string data_path(const std::string& name) {
    return std::string(QTILT_DATA_DIR) + "/" + name;
}

struct CliResult {
    int code;
    std::string out;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out;
    int code = run_cli(args, out);
    return {code, out.str()};
}

// A scratch workspace file for negative parsing cases.
struct TempFile {
    std::string path;
    explicit TempFile(const std::string& text) {
        static int counter = 0;
        path = std::string("qtilt_test_") + std::to_string(++counter) + ".alg";
        std::ofstream f(path);
        f << text;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("workspace parsing: sections, comments, matrices") {
    std::string text =
        "# comment\n"
        "[quiver]\n"
        "vertices = 1, 2, 3\n"
        "a: 1 -> 2\n"
        "b: 2 -> 3\n"
        "[relations]\n"
        "a b   # dies\n"
        "[module M]\n"
        "dims = 1 2 1\n"
        "a = 1 0\n"
        "b = 0; -3/2\n"
        "[pair]\n"
        "T = P1, M\n"
        "support_excluded = 3\n";
    Workspace ws = parse_workspace(text);
    CHECK(ws.pres.quiver.vertex_count() == 3);
    CHECK(ws.pres.quiver.arrows.size() == 2);
    REQUIRE(ws.pres.relations.size() == 1);
    CHECK(ws.pres.relations[0].terms.size() == 1);

    REQUIRE(ws.modules.count("M") == 1);
    const Representation& m = ws.modules.at("M");
    CHECK(m.dims == std::vector<int>{1, 2, 1});
    CHECK(m.arrows[0].at(0, 0) == 1);
    CHECK(m.arrows[0].at(0, 1) == 0);
    CHECK(m.arrows[1].at(0, 0) == 0);
    CHECK(m.arrows[1].at(1, 0) == Rat(-3, 2));

    REQUIRE(ws.pair.has_value());
    SupportTauTiltingPair pair = resolve_pair(ws);
    CHECK(pair.t.size() == 2);
    CHECK(pair.p_vertices == std::vector<int>{2});
}

TEST_CASE("workspace parsing: relation grammar") {
    std::string base =
        "[quiver]\n"
        "vertices = 1 2 3\n"
        "a: 1 -> 2\n"
        "b: 2 -> 3\n"
        "c: 1 -> 2\n";
    // Coefficients with the dot and star separators, signs, juxtaposition.
    Workspace ws = parse_workspace(base + "[relations]\na b - 2/3*c b\n");
    REQUIRE(ws.pres.relations.size() == 1);
    const Relation& r = ws.pres.relations[0];
    REQUIRE(r.terms.size() == 2);
    CHECK(r.terms[0].first == 1);
    CHECK(r.terms[1].first == Rat(-2, 3));

    Workspace dot = parse_workspace(base + "[relations]\n3·a b + c b\n");
    CHECK(dot.pres.relations[0].terms[0].first == 3);

    // Errors carry line numbers.
    auto fails_with = [&](const std::string& text, const std::string& what) {
        try {
            parse_workspace(text);
            FAIL("expected a parse error");
        } catch (const Error& e) {
            CHECK(contains(e.what(), what));
        }
    };
    fails_with(base + "[relations]\na q\n", "line 7");
    fails_with(base + "[relations]\nb a\n", "do not compose");
    fails_with(base + "[relations]\na\n", "length");  // admissibility: length < 2
    fails_with("[quiver]\nvertices = 1 1\n", "duplicate vertex");
    fails_with("vertices = 1\n", "before the first section");
    fails_with(base + "[module M]\ndims = 1 1\n", "expected 3 dimensions");
    fails_with(base + "[module M]\ndims = 1 1 1\na = 2; 3\n", "matrix row");
}

TEST_CASE("workspace parsing: modules must satisfy the relations") {
    std::string text =
        "[quiver]\n"
        "vertices = 1 2 3\n"
        "a: 1 -> 2\n"
        "b: 2 -> 3\n"
        "[relations]\n"
        "a b\n"
        "[module BAD]\n"
        "dims = 1 1 1\n"
        "a = 1\n"
        "b = 1\n";
    CHECK_THROWS_AS(parse_workspace(text), Error);
}

TEST_CASE("canonical module names resolve, user names shadow them") {
    std::string text =
        "[quiver]\n"
        "vertices = 1 2\n"
        "a: 1 -> 2\n"
        "[module S1]\n"
        "dims = 0 1\n";
    Workspace ws = parse_workspace(text);
    // The user's S1 shadows the canonical simple at vertex 1.
    CHECK(resolve_module(ws, "S1").dims == std::vector<int>{0, 1});
    CHECK(resolve_module(ws, "S2").dims == std::vector<int>{0, 1});
    CHECK(resolve_module(ws, "P1").dims == std::vector<int>{1, 1});
    CHECK(resolve_module(ws, "I1").dims == std::vector<int>{1, 0});
    CHECK_THROWS_AS(resolve_module(ws, "P9"), Error);
    CHECK_THROWS_AS(resolve_module(ws, "nope"), Error);
}

TEST_CASE("cli: verdicts and trailers on the worked example") {
    CliResult check = run({"check-pair", data_path("y4.alg")});
    CHECK(check.code == 0);
    CHECK(contains(check.out, "verdict=true"));

    CliResult silted = run({"silted", data_path("y4.alg"), "--trailer-only"});
    CHECK(silted.code == 0);
    CHECK(silted.out == "dim=7\nvertices=4\narrows=3\nrelations=2\n");

    CliResult cluster = run({"cluster-tilted", data_path("y4.alg"), "--trailer-only"});
    CHECK(cluster.code == 0);
    CHECK(cluster.out == "dim=10\nvertices=4\narrows=5\nrelations=5\ndimE=2\ndimN=1\n");

    CliResult report = run({"report-3-6", data_path("y4.alg"), "--trailer-only"});
    CHECK(report.code == 1);  // hypothesis fails on this pair
    CHECK(report.out == "dim=10\ndimE=2\ndimN=1\ngldim=2\nverdict=false\n");
}

TEST_CASE("cli: comparison verdict true on the tilting pair") {
    CliResult report = run({"report-3-6", data_path("a3_tilt.alg"), "--trailer-only"});
    CHECK(report.code == 0);
    CHECK(report.out == "dim=6\ndimE=1\ndimN=0\ngldim=2\nverdict=true\n");

    CliResult prose = run({"report-3-6", data_path("a3_tilt.alg")});
    CHECK(prose.code == 0);
    CHECK(contains(prose.out, "hypothesis holds"));
    CHECK(contains(prose.out, "same presentation signature"));
}

TEST_CASE("cli: presentation commands") {
    CliResult present = run({"present", data_path("tilted_a3.alg"), "--trailer-only"});
    CHECK(present.code == 0);
    CHECK(present.out == "dim=5\nvertices=3\narrows=2\nrelations=1\ngldim=2\n");

    CliResult relext = run({"relation-extension", data_path("tilted_a3.alg"), "--trailer-only"});
    CHECK(relext.code == 0);
    CHECK(relext.out == "dim=6\nvertices=3\narrows=3\nrelations=3\ngldim=2\n");

    // Hereditary input: the extension is the algebra itself.
    CliResult hered = run({"relation-extension", data_path("y4.alg"), "--trailer-only"});
    CHECK(hered.code == 0);
    CHECK(hered.out == "dim=9\nvertices=4\narrows=3\nrelations=0\ngldim=1\n");

    // Global dimension 3 is out of scope: input error.
    CliResult gl3 = run({"relation-extension", data_path("gl3.alg")});
    CHECK(gl3.code == 2);
    CHECK(contains(gl3.out, "error:"));

    CliResult pres3 = run({"present", data_path("gl3.alg"), "--trailer-only"});
    CHECK(pres3.code == 0);
    CHECK(contains(pres3.out, "gldim=3"));
}

TEST_CASE("cli: enumerate") {
    CliResult a2 = run({"enumerate", data_path("a2.alg"), "--trailer-only"});
    CHECK(a2.code == 0);
    CHECK(a2.out == "pairs=5\n");

    CliResult full = run({"enumerate", data_path("a2.alg")});
    CHECK(full.code == 0);
    CHECK(contains(full.out, "T = P1 + P2"));
    CHECK(contains(full.out, "pairs=5"));

    // Non-hereditary input is rejected.
    CliResult bad = run({"enumerate", data_path("tilted_a3.alg")});
    CHECK(bad.code == 2);
}

TEST_CASE("cli: output is deterministic, seed is accepted") {
    CliResult a = run({"cluster-tilted", data_path("y4.alg"), "--seed", "1"});
    CliResult b = run({"cluster-tilted", data_path("y4.alg"), "--seed", "99"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    CliResult c = run({"report-3-6", data_path("a3_tilt.alg"), "--bound", "10"});
    CliResult d = run({"report-3-6", data_path("a3_tilt.alg"), "--bound", "10"});
    CHECK(c.out == d.out);
}

TEST_CASE("cli: failing verdict prints a witness") {
    // One summand, one excluded vertex: the count is right, but S2 lives on
    // the excluded vertex, so the support condition is the failure reported.
    TempFile unsupported(
        "[quiver]\n"
        "vertices = 1 2\n"
        "a: 1 -> 2\n"
        "[pair]\n"
        "T = S2\n"
        "support_excluded = 2\n");
    CliResult r = run({"check-pair", unsupported.path});
    CHECK(r.code == 1);
    CHECK(contains(r.out, "verdict=false"));
    CHECK(contains(r.out, "NOT a support tau-tilting pair"));
    CHECK(contains(r.out, "nonzero on an excluded vertex"));

    // P1 + S1 + P2 is one summand too many.
    TempFile overfull(
        "[quiver]\n"
        "vertices = 1 2\n"
        "a: 1 -> 2\n"
        "[pair]\n"
        "T = P1, S1, P2\n");
    CliResult c = run({"check-pair", overfull.path});
    CHECK(c.code == 1);
    CHECK(contains(c.out, "verdict=false"));
    CHECK(contains(c.out, "summand count"));
}

TEST_CASE("cli: error handling") {
    CHECK(run({"silted", "no_such_file.alg"}).code == 2);
    CHECK(run({"bogus-subcommand"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);

    // Workspace without a pair section.
    CliResult nop = run({"silted", data_path("a2.alg")});
    CHECK(nop.code == 2);
    CHECK(contains(nop.out, "no [pair] section"));

    // Parse errors surface the line number.
    TempFile broken(
        "[quiver]\n"
        "vertices = 1 2\n"
        "a: 1 -> 9\n");
    CliResult r = run({"present", broken.path});
    CHECK(r.code == 2);
    CHECK(contains(r.out, "line 3"));
}

TEST_CASE("cli: rendered presentations parse back") {
    CliResult silted = run({"silted", data_path("y4.alg")});
    REQUIRE(silted.code == 0);
    // Extract the rendered block between "[quiver]" and the blank line after
    // the relations, and feed it back through the parser.
    size_t start = silted.out.find("[quiver]");
    REQUIRE(start != std::string::npos);
    size_t stop = silted.out.find("\n\n", start);
    REQUIRE(stop != std::string::npos);
    Workspace ws = parse_workspace(silted.out.substr(start, stop - start));
    CHECK(ws.pres.quiver.vertex_count() == 4);
    CHECK(ws.pres.quiver.arrows.size() == 3);
    CHECK(ws.pres.relations.size() == 2);
    CHECK(ws.ctx->pa().alg.dim == 7);
}
