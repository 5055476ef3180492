#include <doctest.h>

#include <set>
#include <stdexcept>

#include "ferrers/oracles.hpp"
#include "ferrers/rook.hpp"
#include "ferrers/wilf.hpp"

using namespace ferrers;

namespace {

Partition P(const char* text) { return Partition::parse(text); }

// Restriction of the host to the witness rows and columns.
Partition restrict_board(const Partition& host, const ContainmentWitness& w)
{
    std::vector<int> parts;
    for (int r : w.kept_rows) {
        int boxes = 0;
        for (int c : w.kept_columns)
            if (c <= host.part(r)) ++boxes;
        parts.push_back(boxes);
    }
    return Partition(std::move(parts));
}

}  // namespace

TEST_CASE("contains")
{
    CHECK(contains(P("6,5,5,5,4,4,2,2"), P("4,3,3,2,2")));
    CHECK(contains(P("4,3,3,2,2"), P("4,3,3,2,2")));
    CHECK_FALSE(contains(P("2,2"), P("2,1")));
    CHECK(contains(P("3,1"), P("")));
    CHECK(contains(P(""), P("")));
}

TEST_CASE("difference criterion agrees with the deletion oracle")
{
    for (int hn = 0; hn <= 7; ++hn) {
        for (const Partition& host : enumerate_partitions(hn)) {
            for (int pn = 0; pn <= hn; ++pn) {
                for (const Partition& pattern : enumerate_partitions(pn))
                    CHECK(contains(host, pattern) == contains_by_deletion(host, pattern));
            }
        }
    }
}

TEST_CASE("containment witness restricts to the pattern")
{
    for (int hn = 0; hn <= 7; ++hn) {
        for (const Partition& host : enumerate_partitions(hn)) {
            for (int pn = 0; pn <= hn; ++pn) {
                for (const Partition& pattern : enumerate_partitions(pn)) {
                    auto w = containment_witness(host, pattern);
                    REQUIRE(w.has_value() == contains(host, pattern));
                    if (!w) continue;
                    CHECK(static_cast<int>(w->kept_rows.size()) == pattern.length());
                    CHECK(static_cast<int>(w->kept_columns.size()) == pattern.part(1));
                    CHECK(restrict_board(host, *w) == pattern);
                }
            }
        }
    }
}

TEST_CASE("count_containing")
{
    for (int n = 1; n <= 8; ++n)
        CHECK(count_containing(n, P("1")) ==
              static_cast<long long>(enumerate_partitions(n).size()));
    CHECK(count_containing(4, P("2,1")) == 2);
    CHECK(count_containing(5, P("3")) == 4);
    CHECK(count_containing(0, P("1")) == 0);
}

TEST_CASE("count_containing_top")
{
    CHECK(count_containing_top(4, P("2,1"), 1) == 1);
    CHECK(count_containing_top(4, P("2,1"), 0) == 1);

    // The strata partition P_n(mu).
    for (int n = 0; n <= 8; ++n) {
        for (const Partition& mu : {P("2,1"), P("3"), P("2,2"), P("1")}) {
            long long total = 0;
            for (int k = 0; k <= n; ++k) total += count_containing_top(n, mu, k);
            CHECK(total == count_containing(n, mu));
        }
    }
}

TEST_CASE("extend")
{
    CHECK(extend(P("10,7,1"), {P("1,1,1"), P("3,1")}) == P("11,8,3,2,1"));
    CHECK(extend(P("10,7,1"), {P("1,1"), P("3,2")}) == P("11,8,3,2,1"));
    CHECK(extend(P("7,6,5"), {P("1,1,1"), P("3,1")}) == P("8,7,6,3,1"));
    CHECK(extend(P("7,6,5"), {P("1,1"), P("3,2")}) == P("8,7,5,3,2"));
    CHECK(extend(P("4,2"), {P(""), P("")}) == P("4,2"));
    CHECK_THROWS_AS(extend(P("2,1"), {P("1"), P("5")}), std::invalid_argument);
}

TEST_CASE("enumerate_extensions")
{
    CHECK(enumerate_extensions(P("5,3,1"), 0, 0) == std::set<Partition>{P("5,3,1")});

    // The worked pair: both extensions appear among weight m-1 = 7 additions.
    auto exts = enumerate_extensions(P("7,6,5"), 1, 7);
    CHECK(exts.contains(P("8,7,6,3,1")));
    CHECK(exts.contains(P("8,7,5,3,2")));

    std::set<Partition> expected;
    for (const Partition& alpha : enumerate_partitions(5))
        if (contains(alpha, P("2,1")) && alpha.part(1) == 3) expected.insert(alpha);
    CHECK(enumerate_extensions(P("2,1"), 1, 2) == expected);
}

TEST_CASE("extension completeness at small weight")
{
    for (int n = 0; n <= 6; ++n) {
        for (const Partition& nu : enumerate_partitions(n)) {
            if (!nu.is_strict()) continue;
            for (int k = 0; k <= 3; ++k) {
                for (int w = 0; w <= 4; ++w) {
                    std::set<Partition> expected;
                    for (const Partition& alpha : enumerate_partitions(n + w))
                        if (alpha.part(1) == nu.part(1) + k && contains(alpha, nu))
                            expected.insert(alpha);
                    CHECK(enumerate_extensions(nu, k, w) == expected);
                }
            }
        }
    }
}

TEST_CASE("distinguishing_weight")
{
    auto d1 = distinguishing_weight(P("3"), P("2,1"));
    CHECK(d1.weight == 5);
    CHECK(d1.larger_side == 1);
    CHECK(count_containing(5, P("3")) == 4);
    CHECK(count_containing(5, P("2,1")) == 5);

    auto d2 = distinguishing_weight(P("4"), P("3,1"));
    CHECK(d2.weight == 6);
    CHECK(d2.larger_side == 1);
    CHECK(count_containing(6, P("4")) < count_containing(6, P("3,1")));

    auto d3 = distinguishing_weight(P("3,2,1"), P("4,2"));
    CHECK(d3.weight == 9);
    CHECK(d3.larger_side == 0);
    CHECK(count_containing(9, P("3,2,1")) > count_containing(9, P("4,2")));

    CHECK_THROWS_AS(distinguishing_weight(P("2,2"), P("3,1")), std::invalid_argument);
    CHECK_THROWS_AS(distinguishing_weight(P("3,1"), P("3,1")), std::invalid_argument);
    CHECK_THROWS_AS(distinguishing_weight(P("3"), P("3,1")), std::invalid_argument);
}

TEST_CASE("wilf_equivalent_up_to")
{
    CHECK(wilf_equivalent_up_to(P("2,2"), P("3,1"), 10));
    CHECK_FALSE(wilf_equivalent_up_to(P("3"), P("2,1"), 5));
    CHECK(wilf_equivalent_up_to(P("4,2"), P("4,2"), 12));
}
