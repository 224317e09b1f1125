#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ppm/numeric.hpp"
#include "ppm/path.hpp"

#include <set>
#include <stdexcept>

using namespace ppm;

TEST_CASE("parse_word") {
    PathWord p = PathWord::parse("NEEENN", PathKind::lattice);
    CHECK(p.semisize() == 3);
    CHECK(p.pair_count() == 3);

    CHECK(PathWord::parse("", PathKind::lattice).semisize() == 0);

    PathWord d = PathWord::parse("EDNDDNNEDE", PathKind::delannoy);
    CHECK(d.semisize() == 7);
    CHECK(d.pair_count() == 3);
    CHECK(d.has_diagonal_steps());

    CHECK_THROWS_AS(PathWord::parse("EENNN", PathKind::lattice), std::invalid_argument);
    CHECK_THROWS_AS(PathWord::parse("EXNN", PathKind::lattice), std::invalid_argument);
    CHECK_THROWS_AS(PathWord::parse("ED ND", PathKind::delannoy), std::invalid_argument);
    CHECK_THROWS_AS(PathWord::parse("EDND", PathKind::lattice), std::invalid_argument);
}

TEST_CASE("to_array / from_array") {
    PathWord p = PathWord::parse("NEEENN", PathKind::lattice);
    TwoRowArray t = to_array(p);
    CHECK(t.bottom == std::vector<int>{2, 3, 4});
    CHECK(t.top == std::vector<int>{1, 5, 6});

    TwoRowArray en = to_array(PathWord::parse("EN", PathKind::lattice));
    CHECK(en.bottom == std::vector<int>{1});
    CHECK(en.top == std::vector<int>{2});

    CHECK(from_array(t) == p);
    CHECK(from_array(en).word() == "EN");

    CHECK_THROWS_AS(to_array(PathWord::parse("DD", PathKind::delannoy)), std::invalid_argument);
    TwoRowArray bad;
    bad.bottom = {1, 3};
    bad.top = {2, 3};
    CHECK_THROWS_AS(from_array(bad), std::invalid_argument);
    bad.top = {2, 5};
    CHECK_THROWS_AS(from_array(bad), std::invalid_argument);
}

TEST_CASE("round trips over full enumeration") {
    for (int n = 0; n <= 6; ++n) {
        for_each_path(n, PathKind::lattice, [&](const PathWord& p) {
            CHECK(from_array(to_array(p)) == p);
        });
    }
}

TEST_CASE("reduce") {
    TwoRowArray s;
    s.bottom = {3, 9};
    s.top = {5, 12};
    TwoRowArray r = reduce(s);
    CHECK(r.bottom == std::vector<int>{1, 3});
    CHECK(r.top == std::vector<int>{2, 4});
    CHECK(reduce(r) == r);

    PathWord p = PathWord::parse("ENNEEN", PathKind::lattice);
    TwoRowArray full = to_array(p);
    CHECK(reduce(full) == full);

    TwoRowArray dup;
    dup.bottom = {3, 9};
    dup.top = {5, 9};
    CHECK_THROWS_AS(reduce(dup), std::invalid_argument);
}

TEST_CASE("select_columns") {
    PathWord p = PathWord::parse("NEEENN", PathKind::lattice);
    TwoRowArray t = to_array(p);
    CHECK(select_columns(t, IndexSet::full(3)) == t);
    CHECK(select_columns(t, IndexSet::parse("")).width() == 0);

    // columns {1,2} of T(NEEENN), reduced, give T(NEEN)
    TwoRowArray sub = reduce(select_columns(t, IndexSet::of({1, 2})));
    CHECK(sub == to_array(PathWord::parse("NEEN", PathKind::lattice)));

    CHECK_THROWS_AS(select_columns(t, IndexSet::of({4})), std::out_of_range);
}

TEST_CASE("paired_subword examples") {
    PathWord p = PathWord::parse("NEEENN", PathKind::lattice);
    CHECK(paired_subword(p, IndexSet::of({1})).word() == "NE");
    CHECK(paired_subword(p, IndexSet::of({2})).word() == "EN");
    CHECK(paired_subword(p, IndexSet::of({1, 2})).word() == "NEEN");
    CHECK(paired_subword(p, IndexSet::of({1, 3})).word() == "NEEN");
    CHECK(paired_subword(p, IndexSet::of({2, 3})).word() == "EENN");
    CHECK(paired_subword(p, IndexSet::full(3)) == p);
    CHECK_THROWS_AS(paired_subword(p, IndexSet::of({4})), std::out_of_range);

    // Delannoy: D steps are transparent and vanish with the unselected pairs
    PathWord d = PathWord::parse("EDNDDNNEDE", PathKind::delannoy);
    CHECK(paired_subword(d, IndexSet::of({1, 2})).word() == "ENNE");
    CHECK(paired_subword(d, IndexSet::of({2, 3})).word() == "NNEE");
}

TEST_CASE("paired_subword factors through the array encoding") {
    for (int n = 0; n <= 5; ++n) {
        for_each_path(n, PathKind::lattice, [&](const PathWord& p) {
            TwoRowArray t = to_array(p);
            // every subset of [n]
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                IndexSet a;
                for (int i = 0; i < n; ++i)
                    if (mask & (1u << i)) a.indices.push_back(i + 1);
                PathWord direct = paired_subword(p, a);
                PathWord via = from_array(reduce(select_columns(t, a)));
                CHECK(direct == via);
                CHECK(direct.pair_count() == a.size()); // balance preserved
            }
        });
    }
}

TEST_CASE("enumeration counts and order") {
    std::vector<std::string> words;
    for_each_path(2, PathKind::lattice, [&](const PathWord& p) { words.push_back(p.word()); });
    CHECK(words == std::vector<std::string>{"EENN", "ENEN", "ENNE", "NEEN", "NENE", "NNEE"});

    for (int n = 0; n <= 10; ++n) {
        BigInt count = 0;
        for_each_path(n, PathKind::lattice, [&](const PathWord&) { count += 1; });
        CHECK(count == binomial(2 * n, n));
    }

    const std::vector<int> delannoy = {1, 3, 13, 63, 321, 1683};
    for (int n = 0; n <= 5; ++n) {
        int count = 0;
        for_each_path(n, PathKind::delannoy, [&](const PathWord&) { ++count; });
        CHECK(count == delannoy[static_cast<size_t>(n)]);
        CHECK(central_delannoy(n) == delannoy[static_cast<size_t>(n)]);
    }

    int zero = 0;
    for_each_path(0, PathKind::lattice, [&](const PathWord& p) {
        ++zero;
        CHECK(p.word().empty());
    });
    CHECK(zero == 1);
}

TEST_CASE("prefix partitioning covers the path space exactly once") {
    for (PathKind kind : {PathKind::lattice, PathKind::delannoy}) {
        const int n = 4;
        std::set<std::string> all;
        for_each_path(n, kind, [&](const PathWord& p) { all.insert(p.word()); });
        std::set<std::string> merged;
        for (const std::string& prefix : enumeration_prefixes(n, kind, 3)) {
            for_each_path_with_prefix(n, kind, prefix, [&](const PathWord& p) {
                CHECK(merged.insert(p.word()).second);
            });
        }
        CHECK(merged == all);
    }
}
