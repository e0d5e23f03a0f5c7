#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "expcon/symgroup.hpp"

using namespace expcon;

namespace {
Permutation PW(const std::string& s, int n) { return parse_permutation(s, n); }
} // namespace

TEST_CASE("lengths") {
    CHECK(length(PW("s1 s2 s1", 3)) == 3);
    CHECK(length(Permutation::identity(4)) == 0);
    // longest element of S_4
    CHECK(length(PW("4 3 2 1", 4)) == 6);
    // length equals reduced word length everywhere in S_5
    for (const auto& w : all_permutations(5))
        CHECK(static_cast<int>(reduced_word(w).size()) == length(w));
}

TEST_CASE("compose, inverse, apply_simple") {
    Permutation s1 = Permutation::simple(3, 1), s2 = Permutation::simple(3, 2);
    CHECK(compose(s1, s2) == PW("2 3 1", 3));
    CHECK(compose(compose(s1, s2), inverse(compose(s1, s2))) == Permutation::identity(3));
    auto [ws, delta] = apply_simple(Permutation::identity(3), 1, Side::left);
    CHECK(ws == s1);
    CHECK(delta == 1);
    auto [ws2, delta2] = apply_simple(s1, 1, Side::right);
    CHECK(ws2 == Permutation::identity(3));
    CHECK(delta2 == -1);
    CHECK_THROWS_AS(apply_simple(s1, 5, Side::left), IndexOutOfRange);
    // left/right application agrees with composition, same lengths delta
    std::mt19937 rng(11);
    auto s5 = all_permutations(5);
    std::uniform_int_distribution<std::size_t> pick(0, s5.size() - 1);
    std::uniform_int_distribution<int> geni(1, 4);
    for (int trial = 0; trial < 100; ++trial) {
        Permutation w = s5[pick(rng)];
        int i = geni(rng);
        auto [lw, ld] = apply_simple(w, i, Side::left);
        CHECK(lw == compose(Permutation::simple(5, i), w));
        CHECK(length(lw) - length(w) == ld);
        auto [rw, rd] = apply_simple(w, i, Side::right);
        CHECK(rw == compose(w, Permutation::simple(5, i)));
        CHECK(length(rw) - length(w) == rd);
    }
}

TEST_CASE("cycle types") {
    CHECK(cycle_type(PW("s1 s2", 3)) == Partition::parse("3"));
    CHECK(cycle_type(PW("s1 s2 s1", 3)) == Partition::parse("2,1"));
    CHECK(cycle_type(Permutation::identity(4)) == Partition::parse("1^4"));
    // class function under conjugation
    std::mt19937 rng(5);
    auto s6 = all_permutations(6);
    std::uniform_int_distribution<std::size_t> pick(0, s6.size() - 1);
    for (int trial = 0; trial < 100; ++trial) {
        Permutation w = s6[pick(rng)], x = s6[pick(rng)];
        CHECK(cycle_type(compose(compose(x, w), inverse(x))) == cycle_type(w));
    }
}

TEST_CASE("minimal class representatives") {
    CHECK(min_class_rep(Partition::parse("3")) == PW("s1 s2", 3));
    CHECK(min_class_rep(Partition::parse("2,1")) == PW("s1", 3));
    // length(gamma_nu) = n - l(nu), and it is the class minimum (exhaustive S_5 scan)
    std::map<Partition, int> class_min;
    for (const auto& w : all_permutations(5)) {
        Partition t = cycle_type(w);
        auto it = class_min.find(t);
        if (it == class_min.end() || length(w) < it->second) class_min[t] = length(w);
    }
    for (const auto& nu : partitions_of(5)) {
        Permutation g = min_class_rep(nu);
        CHECK(cycle_type(g) == nu);
        CHECK(length(g) == 5 - nu.length());
        CHECK(length(g) == class_min.at(nu));
    }
}

TEST_CASE("young subgroups and poincare polynomials") {
    auto w21 = young_subgroup({2, 1});
    REQUIRE(w21.size() == 2);
    CHECK(w21[0] == Permutation::identity(3));
    CHECK(w21[1] == PW("s1", 3));
    for (const auto& pi : std::vector<Composition>{{2, 2}, {3, 1}, {1, 3}, {2, 1, 1}, {4}}) {
        long expect = 1;
        for (int p : pi)
            for (int i = 2; i <= p; ++i) expect *= i;
        CHECK(static_cast<long>(young_subgroup(pi).size()) == expect);
    }
    // poincare(pi) = [pi]! for all compositions of 4
    for (const auto& pi : compositions_of(4)) CHECK(poincare(pi) == pi_factorial(pi));
    // sum over all of S_n of q^length = [n]!
    for (int n = 1; n <= 6; ++n) {
        QTLaurent sum;
        for (const auto& w : all_permutations(n)) sum.add_term(length(w), 0, 1);
        CHECK(sum == q_factorial(n));
    }
    CHECK_THROWS_AS(young_subgroup(Composition{2, 0}), BadComposition);
}

TEST_CASE("subadditivity of length") {
    std::mt19937 rng(17);
    auto s5 = all_permutations(5);
    std::uniform_int_distribution<std::size_t> pick(0, s5.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
        Permutation u = s5[pick(rng)], v = s5[pick(rng)];
        CHECK(length(compose(u, v)) <= length(u) + length(v));
    }
    // equality along a reduced decomposition
    Permutation w = PW("s1 s3 s2", 4);
    auto word = reduced_word(w);
    Permutation prefix = Permutation::identity(4);
    int acc = 0;
    for (int i : word) {
        prefix = compose(prefix, Permutation::simple(4, i));
        ++acc;
        CHECK(length(prefix) == acc);
    }
}

TEST_CASE("canonical class order") {
    auto order3 = canonical_class_order(3);
    std::vector<std::string> labels;
    for (const auto& w : order3) labels.push_back(w.to_string());
    CHECK(labels == std::vector<std::string>{"s1 s2", "s2 s1", "s1 s2 s1", "s2", "s1", "1"});
    auto order2 = canonical_class_order(2);
    CHECK(order2[0] == PW("s1", 2));
    CHECK(order2[1] == Permutation::identity(2));
    for (int n = 2; n <= 5; ++n) {
        auto ord = canonical_class_order(n);
        CHECK(ord.size() == all_permutations(n).size());
    }
}

TEST_CASE("text forms") {
    CHECK(PW("2 3 1", 3) == PW("s1 s2", 3));
    CHECK(PW("1", 3) == Permutation::identity(3));
    CHECK(PW("s1 s2 s1", 3).to_string() == "s1 s2 s1");
    CHECK(Permutation::identity(3).to_string() == "1");
    CHECK(PW("s2 s1", 3).to_string() == "s2 s1");
    CHECK_THROWS_AS(PW("2 3", 3), ParseError);
    CHECK_THROWS_AS(PW("s9", 3), IndexOutOfRange);
}
