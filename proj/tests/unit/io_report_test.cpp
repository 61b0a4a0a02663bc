#include "gqm/io.hpp"
#include "gqm/report.hpp"

#include <doctest.h>

#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace gqm;
using nlohmann::json;

namespace {

// Serialize, reparse, serialize again: the two dumps must agree.
void check_space_roundtrip(const GqmSpace& space) {
    json first = io::space_to_json(space);
    GqmSpace back = io::space_from_json(first);
    CHECK(io::space_to_json(back).dump() == first.dump());
    CHECK(back.index() == space.index());
}

void check_seq_roundtrip(const SeqSpec& seq) {
    json first = io::seq_to_json(seq);
    SeqSpec back = io::seq_from_json(first);
    CHECK(io::seq_to_json(back).dump() == first.dump());
    for (std::uint64_t n : {1, 2, 3, 7}) CHECK(back.term(n) == seq.term(n));
}

std::string thrown_message(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const std::exception& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_SUITE_BEGIN("io-report");

TEST_CASE("space json round trips") {
    check_space_roundtrip(GqmSpace::piecewise(Rational(7, 3)));
    check_space_roundtrip(
        GqmSpace::piecewise_on(Rational(2), Carrier::box(Rational(-1), Rational(9, 2))));
    check_space_roundtrip(GqmSpace::table(
        {Point::sym("a"), Point::rat(Rational(5, 2))},
        {{Rational(3), Rational(4)}, {Rational(9, 2), Rational(3)}}));
    check_space_roundtrip(
        GqmSpace::square_shift(Rational(100), Carrier::box(Rational(2), Rational(4))));
    check_space_roundtrip(
        GqmSpace::shifted_quasi(QuasiRule::abs_diff(), Rational(3), Carrier::line()));
    check_space_roundtrip(GqmSpace::shifted_quasi(
        QuasiRule::discrete(), Rational(1, 2),
        Carrier::finite({Point::sym("x"), Point::sym("y")})));
    check_space_roundtrip(GqmSpace::shifted_quasi(
        QuasiRule::table({{Rational(0), Rational(1)}, {Rational(2), Rational(0)}}), Rational(1),
        Carrier::finite({Point::sym("u"), Point::sym("v")})));
    check_space_roundtrip(
        GqmSpace::product(GqmSpace::piecewise(Rational(1)),
                          GqmSpace::table({Point::sym("a"), Point::sym("b")},
                                          {{Rational(1), Rational(2)}, {Rational(3), Rational(1)}})));
}

TEST_CASE("space json distances survive the trip") {
    auto out = io::space_to_json(GqmSpace::piecewise(Rational(1)));
    auto back = io::space_from_json(out);
    CHECK(back.distance(Point::rat(Rational(0)), Point::rat(Rational(1, 2))) == Rational(2));

    auto parsed = io::space_from_json(json::parse(
        R"({"carrier":{"kind":"finite","points":["a","b"]},
            "rule":{"kind":"table","matrix":[["3","4"],["4","3"]]}})"));
    CHECK(parsed.distance(Point::sym("a"), Point::sym("b")) == Rational(4));
    CHECK(parsed.index() == Rational(3));
}

TEST_CASE("space json rejects malformed descriptions") {
    CHECK_THROWS_AS(io::space_from_json(json::parse(R"({"carrier":{"kind":"line"}})")),
                    std::invalid_argument);  // no rule
    CHECK_THROWS_AS(io::space_from_json(json::parse(
                        R"({"carrier":{"kind":"moebius"},"rule":{"kind":"piecewise","r":"1"}})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(io::space_from_json(json::parse(
                        R"({"carrier":{"kind":"line"},"rule":{"kind":"fractal"}})")),
                    std::invalid_argument);
    // Decimals are not rationals anywhere a rational is expected.
    CHECK_THROWS_AS(io::space_from_json(json::parse(
                        R"({"carrier":{"kind":"line"},"rule":{"kind":"piecewise","r":"1.5"}})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(io::space_from_json(json::parse(
                        R"({"carrier":{"kind":"box","lo":1.5,"hi":"2"},
                            "rule":{"kind":"square-shift","offset":"1"}})")),
                    std::invalid_argument);  // bare number, not a "p/q" string
    CHECK_THROWS_AS(io::space_from_json(json::parse(
                        R"({"carrier":{"kind":"box","lo":"0","hi":"1"},
                            "rule":{"kind":"table","matrix":[["1"]]}})")),
                    std::invalid_argument);  // table rules need a finite carrier
}

TEST_CASE("sequence json round trips") {
    check_seq_roundtrip(SeqSpec::constant(Point::sym("a")));
    check_seq_roundtrip(SeqSpec::affine(Rational(2), Rational(-1, 3)));
    check_seq_roundtrip(SeqSpec::drift_gap(Rational(5, 2)));
    check_seq_roundtrip(SeqSpec::alt_pow(Rational(10), Rational(1)));
    check_seq_roundtrip(SeqSpec::alt_pow_mirror(Rational(10), Rational(1)));
    check_seq_roundtrip(SeqSpec::table(
        {Point::rat(Rational(1)), Point::sym("mid"), Point::rat(Rational(-7, 2))}));
    check_seq_roundtrip(SeqSpec::pair(SeqSpec::constant(Point::rat(Rational(0))),
                                      SeqSpec::drift_gap(Rational(1))));

    CHECK_THROWS_AS(io::seq_from_json(json::parse(R"({"family":"fibonacci"})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(io::seq_from_json(json::parse(R"({"terms":["1"]})")),
                    std::invalid_argument);
}

TEST_CASE("point parsing") {
    CHECK(io::point_from_json(json("3/4")) == Point::rat(Rational(3, 4)));
    CHECK(io::point_from_json(json("-2")) == Point::rat(Rational(-2)));
    CHECK(io::point_from_json(json("a")) == Point::sym("a"));
    // Decimal text has no rational reading, so it stays a label.
    CHECK(io::point_from_json(json("1.5")) == Point::sym("1.5"));
    auto nested = io::point_from_json(json::parse(R"([["1","2"],"b"])"));
    CHECK(nested == Point::pair(Point::pair(Point::rat(Rational(1)), Point::rat(Rational(2))),
                                Point::sym("b")));
    CHECK(io::point_to_json(nested).dump() == R"([["1/1","2/1"],"b"])");

    CHECK_THROWS_AS(io::point_from_json(json("")), std::invalid_argument);
    CHECK_THROWS_AS(io::point_from_json(json::parse(R"(["a","b","c"])")), std::invalid_argument);
    CHECK_THROWS_AS(io::point_from_json(json::parse(R"({"x":1})")), std::invalid_argument);
    // A label that reads back as a rational would not round trip.
    CHECK_THROWS_AS(io::point_to_json(Point::sym("5")), std::logic_error);
}

TEST_CASE("base family parsing") {
    auto fam = io::base_from_json(json::parse(
        R"({"ground":["a","b","c"],"base":[["a"],["a","b"],[]]})"));
    CHECK(fam.ground.size() == 3);
    REQUIRE(fam.base.size() == 3);
    CHECK(fam.base[1] == std::vector<Point>{Point::sym("a"), Point::sym("b")});
    CHECK(fam.base[2].empty());
    CHECK_THROWS_AS(io::base_from_json(json::parse(R"({"ground":["a"]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(io::base_from_json(json::parse(R"({"ground":["a"],"base":["a"]})")),
                    std::invalid_argument);
}

TEST_CASE("map pair text") {
    auto pairs = io::map_pairs_from_text(
        "# domain -> codomain\n"
        "\n"
        "a x\n"
        "3/2 y\n");
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0].first == Point::sym("a"));
    CHECK(pairs[1].first == Point::rat(Rational(3, 2)));
    CHECK(pairs[1].second == Point::sym("y"));

    auto msg = thrown_message([] { io::map_pairs_from_text("a b\nc d\ne f g\n"); });
    CHECK(msg.find("map line 3") != std::string::npos);
    msg = thrown_message([] { io::map_pairs_from_text("lonely\n"); });
    CHECK(msg.find("map line 1") != std::string::npos);
}

TEST_CASE("file loading cites the failing line") {
    const std::string path = "io_report_broken.json";
    io::write_file(path, "{\n  \"carrier\": {\"kind\": \"line\"},\n  \"rule\": oops\n}\n");
    auto msg = thrown_message([&] { io::load_space(path); });
    CHECK(msg.find(path) != std::string::npos);
    CHECK(msg.find("line 3") != std::string::npos);
    std::remove(path.c_str());

    CHECK_THROWS_AS(io::load_space("does_not_exist_anywhere.json"), std::runtime_error);
}

TEST_CASE("file round trip") {
    const std::string path = "io_report_roundtrip.json";
    auto space = GqmSpace::piecewise_on(Rational(3), Carrier::box(Rational(0), Rational(10)));
    io::write_file(path, io::space_to_json(space).dump(2) + "\n");
    auto back = io::load_space(path);
    CHECK(io::space_to_json(back).dump() == io::space_to_json(space).dump());
    std::remove(path.c_str());
}

TEST_CASE("report rendering is deterministic") {
    auto build = [] {
        Report rep("demo");
        rep.add_input("space", "piecewise r=1");
        rep.add_input("epsilon", "3/2");
        auto& chk = rep.add_check("first", true);
        chk.detail("witness", "(0,1)").number("distance", Rational(2), Provenance::derived);
        rep.add_check("second", true).count("pairs", 42).number(
            "extent", "(21/10,31/10)", Provenance::paper_formula);
        return rep;
    };
    Report a = build();
    Report b = build();
    CHECK(a.render_structured() == b.render_structured());
    CHECK(a.render_text() == b.render_text());
    CHECK(a.digest() == b.digest());
    CHECK(a.digest().size() == 16);
    CHECK(a.digest().find_first_not_of("0123456789abcdef") == std::string::npos);
    CHECK(a.pass());

    // Different inputs move the digest.
    Report c("demo");
    c.add_input("space", "piecewise r=2");
    CHECK(c.digest() != a.digest());
}

TEST_CASE("report text form") {
    Report rep("axioms");
    rep.add_input("grid", "[-5,5]");
    rep.add_check("triangle", true);
    rep.add_check("index", false).detail("witness", "x=0 y=1");
    std::string text = rep.render_text();
    CHECK(text.find("[PASS] triangle") != std::string::npos);
    CHECK(text.find("[FAIL] index") != std::string::npos);
    CHECK(text.find("witness: x=0 y=1") != std::string::npos);
    CHECK(text.find("overall: FAIL") != std::string::npos);
    CHECK_FALSE(rep.pass());
}

TEST_CASE("structured report is line-delimited json") {
    Report rep("classify");
    rep.add_input("k", "10");
    rep.add_check("verified", true).number("extremal", Rational(111, 110), Provenance::derived);
    rep.add_check("exact", false);

    std::istringstream lines(rep.render_structured());
    std::string line;
    std::vector<json> records;
    while (std::getline(lines, line)) records.push_back(json::parse(line));
    REQUIRE(records.size() == 3);

    const json& header = records[0];
    CHECK(header.at("record") == "header");
    CHECK(header.at("command") == "classify");
    CHECK(header.at("digest") == rep.digest());
    CHECK(header.at("inputs").at("k") == "10");
    CHECK(header.at("pass") == false);

    CHECK(records[1].at("record") == "check");
    CHECK(records[1].at("name") == "verified");
    CHECK(records[1].at("pass") == true);
    CHECK(records[1].at("numbers").at("extremal").at("value") == "111/110");
    CHECK(records[1].at("numbers").at("extremal").at("provenance") == "derived");
    CHECK(records[2].at("name") == "exact");
    CHECK(records[2].at("pass") == false);
}

TEST_SUITE_END();
