#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "expcon/partitions.hpp"

using namespace expcon;

namespace {
Partition PT(const std::string& s) { return Partition::parse(s); }
} // namespace

TEST_CASE("partitions_of ordering") {
    auto p3 = partitions_of(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0] == PT("3"));
    CHECK(p3[1] == PT("2,1"));
    CHECK(p3[2] == PT("1^3"));
    CHECK(partitions_of(1).size() == 1);
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(8).size() == 22);
}

TEST_CASE("n statistic") {
    CHECK(n_stat(PT("3")) == 0);
    CHECK(n_stat(PT("1,1,1")) == 3);
    CHECK(n_stat(PT("2,1")) == 1);
}

TEST_CASE("conjugate and dominance") {
    CHECK(conjugate(PT("3")) == PT("1^3"));
    CHECK(conjugate(PT("2,1")) == PT("2,1"));
    for (int n = 1; n <= 8; ++n)
        for (const auto& lam : partitions_of(n)) CHECK(conjugate(conjugate(lam)) == lam);
    CHECK(dominates(PT("3"), PT("2,1")));
    CHECK(dominates(PT("2,1"), PT("1^3")));
    CHECK_FALSE(dominates(PT("1^3"), PT("2,1")));
    // partial order axioms on all partitions of each n
    for (int n = 2; n <= 6; ++n) {
        auto ps = partitions_of(n);
        for (const auto& a : ps) {
            CHECK(dominates(a, a));
            for (const auto& b : ps) {
                if (dominates(a, b) && dominates(b, a)) CHECK(a == b);
                for (const auto& c : ps)
                    if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
            }
        }
    }
}

TEST_CASE("arm and leg") {
    // lambda = (2): cells (1,1) and (1,2)
    CHECK(arm(PT("2"), 1, 1) == 1);
    CHECK(leg(PT("2"), 1, 1) == 0);
    CHECK(arm(PT("2"), 1, 2) == 0);
    CHECK(leg(PT("2"), 1, 2) == 0);
    CHECK_THROWS_AS(arm(PT("2"), 2, 1), CellOutOfRange);
    CHECK_THROWS_AS(leg(PT("2,1"), 1, 3), CellOutOfRange);
    // n(conjugate(lambda)) = sum binomial(lambda_i, 2)
    for (int n = 1; n <= 8; ++n)
        for (const auto& lam : partitions_of(n)) {
            int expect = 0;
            for (int p : lam.parts()) expect += p * (p - 1) / 2;
            CHECK(n_stat(conjugate(lam)) == expect);
        }
}

TEST_CASE("kostka numbers") {
    CHECK(kostka(PT("2,1"), PT("1^3")) == 2);
    for (const auto& lam : partitions_of(5)) CHECK(kostka(lam, lam) == 1);
    CHECK(kostka(PT("1^3"), PT("3")) == 0);
    CHECK_THROWS_AS(kostka(PT("2"), PT("3")), SizeMismatch);
    // unitriangularity w.r.t. dominance for n <= 6
    for (int n = 1; n <= 6; ++n)
        for (const auto& lam : partitions_of(n))
            for (const auto& pi : partitions_of(n)) {
                long k = kostka(lam, pi);
                if (k != 0) CHECK(dominates(lam, pi));
                if (lam == pi) CHECK(k == 1);
            }
    // row sums of the Kostka matrix count all SSYT fillings; spot value
    CHECK(kostka(PT("3,2"), PT("2,2,1")) == 2);
    CHECK(kostka(PT("2,2"), PT("1^4")) == 2);
}

TEST_CASE("text forms") {
    CHECK(PT("1^3") == Partition(std::vector<int>{1, 1, 1}));
    CHECK(PT("2,1").to_string() == "2,1");
    CHECK(PT("3,1^2") == Partition(std::vector<int>{3, 1, 1}));
    CHECK_THROWS_AS(PT(""), ParseError);
    CHECK_THROWS_AS(PT("a,b"), ParseError);
    CHECK_THROWS_AS(Partition(std::vector<int>{1, 2}), BadComposition);
    CHECK_THROWS_AS(Partition(std::vector<int>{0}), BadComposition);
}

TEST_CASE("compositions") {
    auto c3 = compositions_of(3);
    CHECK(c3.size() == 4); // 3, 21, 12, 111
    CHECK(c3.front() == Composition{3});
    CHECK(c3.back() == Composition{1, 1, 1});
    CHECK(Partition::of_composition({1, 2}) == PT("2,1"));
}
