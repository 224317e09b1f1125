#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ppm/reports.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <stdexcept>

using namespace ppm;

TEST_CASE("sequence specs") {
    SequenceRecord r = sequence_by_spec("exactly:F1:x=1", 10);
    CHECK(r.offset == 2);
    CHECK(r.terms.size() == 8);
    CHECK(r.terms[0] == 1);
    CHECK(r.terms[3] == 48);
    CHECK(r.terms[6] == 2002);

    r = sequence_by_spec("gf:F2:x=0", 8);
    CHECK(r.offset == 0);
    CHECK(r.terms == std::vector<BigInt>{1, 2, 5, 15, 48, 160, 548, 1914});

    r = sequence_by_spec("gf:FS4:x=0", 7);
    CHECK(r.terms == std::vector<BigInt>{1, 3, 12, 52, 236, 1108, 5340});

    r = sequence_by_spec("gf:FS4", 6);
    CHECK(r.terms == std::vector<BigInt>{1, 3, 13, 63, 321, 1683});

    r = sequence_by_spec("catalan", 6);
    CHECK(r.terms == std::vector<BigInt>{1, 1, 2, 5, 14, 42});
    CHECK(r.oeis == "A000108");

    r = sequence_by_spec("parity-even:F3", 8);
    CHECK(r.terms == std::vector<BigInt>{1, 2, 5, 14, 43, 142, 494, 1780});

    r = sequence_by_spec("expect-num:F2345", 8);
    CHECK(r.offset == 2);
    CHECK(r.terms == std::vector<BigInt>{4, 24, 116, 520, 2248, 9520});

    r = sequence_by_spec("formula:total-p1", 8);
    CHECK(r.offset == 2);
    CHECK(r.terms == std::vector<BigInt>{1, 8, 47, 244, 1186, 5536});

    r = sequence_by_spec("formula:odd-bounce", 8);
    CHECK(r.offset == 2);
    CHECK(r.terms == std::vector<BigInt>{2, 8, 30, 112, 420, 1584});

    CHECK_THROWS_AS(sequence_by_spec("nope", 6), std::invalid_argument);
    CHECK_THROWS_AS(sequence_by_spec("gf:F9", 6), std::invalid_argument);
    CHECK_THROWS_AS(sequence_by_spec("exactly:F1:y=1", 6), std::invalid_argument);
    // non-integral sequences are refused
    CHECK_THROWS_AS(sequence_by_spec("gf:F1:x=1/2", 6), std::domain_error);
}

TEST_CASE("b-file output is byte-exact") {
    SequenceRecord r = sequence_by_spec("exactly:F1:x=1", 7);
    CHECK(bfile_text(r) == "2 1\n3 4\n4 14\n5 48\n6 165\n");
    CHECK(bfile_text(r, 3, 4) == "3 4\n4 14\n");
    CHECK(bfile_text(r, 10, 20).empty());
}

TEST_CASE("path reports") {
    PathReport rep = profile_path(PathWord::parse("NEEENN", PathKind::lattice));
    CHECK(rep.profile.at(1) == 1);
    CHECK(rep.profile.at(3) == 1);
    CHECK(rep.east_below == 1);
    CHECK(rep.cross_h == 1);
    CHECK(!rep.dyck);
    auto j = nlohmann::json::parse(path_report_json(rep));
    CHECK(j["p1"] == 1);
    CHECK(j["crossh"] == 1);
    CHECK(j["bounce-"] == 0);
    CHECK(!j.contains("area"));

    rep = profile_path(PathWord::parse("", PathKind::lattice));
    CHECK(rep.profile.total() == 0);
    CHECK(rep.dyck);
    CHECK(*rep.area == 0);

    rep = profile_path(PathWord::parse("EDNDDNNEDE", PathKind::delannoy));
    CHECK(rep.profile.at(4) == 1);
    CHECK(rep.profile.at(6) == 1);

    std::string grid = ascii_grid(PathWord::parse("EN", PathKind::lattice));
    CHECK(grid == ". +\n  |\n+-+\n");
}

TEST_CASE("asymptotics tables") {
    for (const std::string& target : asymptotics_targets()) {
        AsymptoticsTable t = asymptotics(target, 8, 16);
        CHECK(t.rows.size() == 9);
        CHECK(t.gap_monotone_decreasing());
    }
    AsymptoticsTable t = asymptotics("E[P2]", 4, 7);
    CHECK(t.rows[0].exact == BigRational(29, 70));
    CHECK_THROWS_AS(asymptotics("E[P9]", 2, 4), std::invalid_argument);
}

TEST_CASE("documented overrides") {
    const auto& o = documented_overrides();
    REQUIRE(o.size() == 3);
    CHECK(o[0].printed == 7072);
    CHECK(o[0].pinned == 2002);
    CHECK(o[1].printed == 2880);
    CHECK(o[1].pinned == 2380);
    CHECK(o[2].printed == 9530);
    CHECK(o[2].pinned == 9520);
    // pinned values really are the series values
    SequenceRecord r = sequence_by_spec(o[0].series, o[0].index + 1);
    CHECK(r.terms[static_cast<size_t>(o[0].index - r.offset)] == o[0].pinned);
    r = sequence_by_spec(o[2].series, o[2].index + 1);
    CHECK(r.terms[static_cast<size_t>(o[2].index - r.offset)] == o[2].pinned);
}

TEST_CASE("verify_all at a tiny cap") {
    VerifyAllOutcome out = verify_all(3);
    CHECK(out.pass);
    auto j = nlohmann::json::parse(out.json);
    CHECK(j["status"] == "pass");
    CHECK(j["checks"].size() == out.checks.size());
    CHECK(j["documented_overrides"].size() == 3);

    std::filesystem::path dir = std::filesystem::temp_directory_path() / "ppm-test-logs";
    std::filesystem::remove_all(dir);
    std::string file = write_run_log(out, dir.string());
    CHECK(std::filesystem::exists(file));
    std::filesystem::remove_all(dir);
}

TEST_CASE("series json") {
    auto j = nlohmann::json::parse(series_json(build(GFName::F1, 3)));
    REQUIRE(j.size() == 3);
    CHECK(j[0].size() == 1);
    CHECK(j[0][0]["num"] == "1");
    CHECK(j[2].size() == 2); // x + 5
}
