#include <catch2/catch_amalgamated.hpp>

#include "testutil.hpp"

using namespace torcol;

TEST_CASE("rotation files round-trip byte-exactly") {
    for (const auto& e : {gen_k4_planar(), gen_k5_torus(), gen_torus_grid(3, 4, true),
                          testutil::seven_four_fixture(), testutil::embedded_theta(4, 4, 4)}) {
        std::string text = emit_rotation(e);
        EmbeddedGraph back = parse_rotation(text);
        CHECK(back == e);
        CHECK(emit_rotation(back) == text);
    }
}

TEST_CASE("rotation parser accepts comments, blanks, and a genus header") {
    std::string text =
        "# the 4-cycle, planar rotation\n"
        "n 4 genus 0\n"
        "\n"
        "0: 1 3\n"
        "1: 2 0\n"
        "2: 3 1   # reversed on purpose\n"
        "3: 0 2\n";
    EmbeddedGraph e = parse_rotation(text);
    CHECK(e.graph().vertex_count() == 4);
    CHECK(e.genus() == 0);
    CHECK(e.faces().face_count() == 2);

    std::string grid = emit_rotation(gen_torus_grid(4, 4));
    CHECK(grid.substr(0, 13) == "n 16 genus 1\n");
    CHECK(parse_rotation(grid).genus() == 1);
}

TEST_CASE("rotation parser rejects genus lies and unknown vertices") {
    std::string grid = emit_rotation(gen_torus_grid(4, 4));
    std::string lied = grid;
    lied.replace(lied.find("genus 1"), 7, "genus 0");
    CHECK_THROWS_AS(parse_rotation(lied), GenusMismatch);

    CHECK_THROWS_AS(parse_rotation("n 3\n0: 1\n1: 0\n5: 0\n"), UnknownVertex);
    CHECK_THROWS_AS(parse_rotation("n 2\n0: 7\n1: 0\n"), UnknownVertex);
    CHECK_THROWS_WITH(parse_rotation("n 2\n0: 7\n1: 0\n"),
                      Catch::Matchers::ContainsSubstring("neighbor 7 out of range"));
}

TEST_CASE("rotation parser reports line and column on bad input") {
    try {
        parse_rotation("n 2\n0: 1\n0: 1\n1: 0\n");
        FAIL("duplicate vertex line not rejected");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 1);
    }

    try {
        parse_rotation("n 2\n0: x\n1: 0\n");
        FAIL("non-integer neighbor not rejected");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 4);
    }

    CHECK_THROWS_AS(parse_rotation("n 2\n0: 1\n"), ParseError);        // vertex 1 missing
    CHECK_THROWS_AS(parse_rotation("m 3\n"), ParseError);              // bad header
    CHECK_THROWS_AS(parse_rotation(""), ParseError);                   // empty
    CHECK_THROWS_AS(parse_rotation("# only a comment\n"), ParseError);
    CHECK_THROWS_AS(parse_rotation("n -1\n"), ParseError);
    CHECK_THROWS_AS(parse_rotation("n 3 x\n"), ParseError);
    CHECK_THROWS_AS(parse_rotation("n 3 genus -1\n"), ParseError);
    CHECK_THROWS_AS(parse_rotation("n 3 genus 0 x\n"), ParseError);
    CHECK_THROWS_AS(parse_rotation("n 1\n: 0\n"), ParseError);         // empty head
    CHECK_THROWS_AS(parse_rotation("n 2\nzz 1\n1: 0\n"), ParseError);  // no colon
}

TEST_CASE("rotation parser surfaces structural errors from the graph") {
    CHECK_THROWS_AS(parse_rotation("n 2\n0: 1\n1:\n"), AsymmetricAdjacency);
    CHECK_THROWS_AS(parse_rotation("n 2\n0: 1 1\n1: 0\n"), MultigraphInput);
    CHECK_THROWS_AS(parse_rotation("n 2\n0:\n1:\n"), DisconnectedGraph);
    CHECK_THROWS_AS(parse_rotation("n 0\n"), Error);
}

TEST_CASE("list files intern tokens in first-occurrence order") {
    TokenMap tokens;
    ListAssignment la = parse_lists("0: a b c\n1: c a b\n2: b q a\n", 3, tokens);
    CHECK(tokens.size() == 4);
    CHECK(tokens.name(0) == "a");
    CHECK(tokens.name(1) == "b");
    CHECK(tokens.name(2) == "c");
    CHECK(tokens.lookup("q") == 3);
    CHECK_FALSE(tokens.lookup("zz").has_value());
    CHECK_THROWS_AS(tokens.name(9), Error);

    CHECK(la.lists[0] == std::vector<int>{0, 1, 2});
    CHECK(la.lists[1] == std::vector<int>{0, 1, 2});
    CHECK(la.lists[2] == std::vector<int>{0, 1, 3});

    std::string text = emit_lists(la, tokens);
    CHECK(text == "0: a b c\n1: a b c\n2: a b q\n");
    TokenMap fresh;
    ListAssignment back = parse_lists(text, 3, fresh);
    CHECK(emit_lists(back, fresh) == text);
    CHECK(back == la);  // same interning order, same ids
}

TEST_CASE("list parser rejects duplicates and gaps") {
    TokenMap t;
    CHECK_THROWS_AS(parse_lists("0: a a\n1: b\n", 2, t), ParseError);
    CHECK_THROWS_AS(parse_lists("0: a\n0: b\n1: c\n", 2, t), ParseError);
    CHECK_THROWS_AS(parse_lists("0: a\n", 2, t), ParseError);
    CHECK_THROWS_AS(parse_lists("0: a\n3: b\n", 2, t), UnknownVertex);
    CHECK_THROWS_WITH(parse_lists("0: a\n1: b\n2: c\n", 2, t),
                      Catch::Matchers::ContainsSubstring("vertex 2 out of range"));

    // Numeric tokens are opaque: "10" is a name, not an id.
    TokenMap nums;
    ListAssignment la = parse_lists("0: 10 2\n", 1, nums);
    CHECK(nums.name(la.lists[0][0]) == "10");
}

TEST_CASE("coloring files hold exactly one token per vertex") {
    TokenMap tokens;
    std::vector<int> colors = parse_coloring("0: red\n1: blue\n2: red\n", 3, tokens);
    CHECK(colors == std::vector<int>{0, 1, 0});
    std::string text = emit_coloring(colors, tokens);
    CHECK(text == "0: red\n1: blue\n2: red\n");
    CHECK(parse_coloring(text, 3, tokens) == colors);

    CHECK_THROWS_AS(parse_coloring("0: red blue\n1: red\n2: red\n", 3, tokens), ParseError);
    CHECK_THROWS_AS(parse_coloring("0: red\n1: blue\n", 3, tokens), ParseError);
    CHECK_THROWS_AS(parse_coloring("0: red\n0: blue\n1: red\n", 2, tokens), ParseError);
    CHECK_THROWS_AS(parse_coloring("0: red\n9: blue\n", 2, tokens), UnknownVertex);
}

TEST_CASE("lists and colorings verify together through one token map") {
    Graph c5 = testutil::cycle_graph(5);
    TokenMap tokens;
    ListAssignment la = parse_lists(
        "0: red green\n1: red green\n2: red green\n3: red green\n4: red green\n", 5, tokens);
    std::vector<int> good = parse_coloring(
        "0: red\n1: red\n2: green\n3: red\n4: green\n", 5, tokens);
    CHECK(verify_coloring(c5, la, DefectiveColoring{good, 1}, 1).ok);

    // A token appearing only in the coloring interns to a fresh id, which
    // is off every list.
    std::vector<int> bad = parse_coloring(
        "0: mauve\n1: red\n2: green\n3: red\n4: green\n", 5, tokens);
    Verdict v = verify_coloring(c5, la, DefectiveColoring{bad, 1}, 1);
    CHECK_FALSE(v.ok);
    REQUIRE(v.violations.size() == 1);
    CHECK(v.violations[0].type == Violation::Type::OffList);
    CHECK(v.violations[0].vertex == 0);
}

TEST_CASE("rule files round-trip through their canonical form") {
    for (int case_id : {1, 2}) {
        std::string text = emit_rules(builtin_rules(case_id));
        RuleSet parsed = parse_rules(text);
        CHECK(parsed.rules().size() == builtin_rules(case_id).rules().size());
        CHECK(emit_rules(parsed) == text);
    }
    std::string case1 = emit_rules(builtin_rules(1));
    CHECK(case1 ==
          "vertex k=4 -> face d in {3,4}: 1/6 per-incidence\n"
          "vertex k>=5 -> face d in {3,4}: 1/3 per-incidence\n"
          "face d>=7 -> adjface d<=4: 1/42 per-edge\n");
}

TEST_CASE("rule parser applies defaults and line-number ids") {
    RuleSet rs = parse_rules(
        "# vertex rules pay per corner unless told otherwise\n"
        "\n"
        "vertex k=4 -> face d<=4: 1/6\n"
        "face d>=7 -> adjface d=3: 1/42\n"
        "vertex k>=6 -> face d=5: 2 per-edge\n");
    REQUIRE(rs.rules().size() == 3);
    CHECK(rs.rules()[0].id == "L3");
    CHECK(rs.rules()[0].policy == TransferPolicy::PerIncidence);
    CHECK(rs.rules()[1].id == "L4");
    CHECK(rs.rules()[1].policy == TransferPolicy::PerEdge);
    CHECK(rs.rules()[2].policy == TransferPolicy::PerEdge);
    CHECK(rs.rules()[2].amount == Rat(2));

    RuleSet in_set = parse_rules("vertex k in {5,3} -> face d in {3,4}: 2/7 per-edge\n");
    CHECK(emit_rules(in_set) == "vertex k in {3,5} -> face d in {3,4}: 2/7 per-edge\n");
}

TEST_CASE("rule parser rejects malformed rules with positions") {
    CHECK_THROWS_AS(parse_rules("vertex k=4 -> adjface d=3: 1/6\n"), ParseError);
    CHECK_THROWS_AS(parse_rules("face d>=7 -> face d<=4: 1/42\n"), ParseError);
    CHECK_THROWS_AS(parse_rules("vertex k=4 -> face d=3: 1/0\n"), ParseError);
    CHECK_THROWS_AS(parse_rules("vertex k=4 -> face d=3: 0\n"), ParseError);
    CHECK_THROWS_AS(parse_rules("vertex k=4 -> face d=3: -1/6\n"), ParseError);
    CHECK_THROWS_AS(parse_rules("vertex k=4 -> face d=3: 1/6 sometimes\n"), ParseError);
    CHECK_THROWS_AS(parse_rules("vertex k=4 -> face d=3: 1/6 per-edge junk\n"), ParseError);
    CHECK_THROWS_AS(parse_rules("edge k=4 -> face d=3: 1/6\n"), ParseError);
    CHECK_THROWS_AS(parse_rules("vertex d=4 -> face d=3: 1/6\n"), ParseError);
    CHECK_THROWS_AS(parse_rules("vertex k~4 -> face d=3: 1/6\n"), ParseError);
    CHECK_THROWS_AS(parse_rules("vertex k in {} -> face d=3: 1/6\n"), ParseError);

    try {
        parse_rules("vertex k=4 -> face d=3: 1/6\nhello world\n");
        FAIL("garbage line not rejected");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 6);
    }

    CHECK_THROWS_AS(
        parse_rules("vertex k>=4 -> face d<=4: 1/6\nvertex k=5 -> face d=3: 1/4\n"),
        OverlappingSelectors);
}
