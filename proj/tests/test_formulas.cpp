#include <catch2/catch_amalgamated.hpp>

#include "ccbch/cosets.hpp"
#include "ccbch/formulas.hpp"

using namespace ccbch;

TEST_CASE("delta_max") {
    CHECK(delta_max(make_frame(5, 2)) == 19);
    CHECK(delta_max(make_frame(2, 4)) == 11);
    CHECK(delta_max(make_frame(9, 2)) == 67);
    CHECK(delta_max(make_frame(2, 2)) == 3);
    CHECK(delta_max(make_frame(3, 2)) == 6);
    CHECK(delta_max(make_frame(4, 2)) == 11);
    CHECK(delta_max(make_frame(7, 2)) == 39);
    CHECK(delta_max(make_frame(8, 2)) == 52);
}

TEST_CASE("i_star values") {
    CHECK(i_star(make_frame(4, 2)) == 10);
    CHECK(i_star(make_frame(5, 2)) == 13);
    CHECK(i_star(make_frame(2, 4)) == 11);
}

// brute-force oracle: the unique solution of (q+1) i = -1 (mod q^m + 1)
TEST_CASE("i_star characterization") {
    for (auto [q, m] : {std::pair<u64, u64>{2, 2}, {4, 2}, {8, 2}, {2, 4}, {4, 4}, {8, 4}}) {
        CodeFrame f = make_frame(q, m);
        u64 mod = detail::upow(q, m) + 1;
        u64 solutions = 0, sol = 0;
        for (u64 i = 0; i < mod; ++i)
            if ((q + 1) * i % mod == mod - 1) {
                ++solutions;
                sol = i;
            }
        REQUIRE(solutions == 1);
        CHECK(sol == i_star(f));
    }
    // no solution for odd q
    for (u64 q : {3, 5, 7, 9}) {
        u64 mod = q * q + 1;
        for (u64 i = 0; i < mod; ++i) CHECK((q + 1) * i % mod != mod - 1);
    }
}

TEST_CASE("n1") {
    CHECK(n1(3, 4) == 1);
    CHECK(n1(2, 2) == 0); // floor(-1/4) + 1 with floor toward -infinity
    CHECK(n1(5, 19) == 1);
    // N1 = 0 throughout 2 <= delta <= q
    for (u64 q : {3, 5, 7}) {
        for (u64 d = 2; d <= q; ++d) CHECK(n1(q, d) == 0);
    }
}

TEST_CASE("n2") {
    CHECK(n2(make_frame(5, 2), 19) == 1);
    CHECK(n2(make_frame(9, 2), 67) == 3);
    CodeFrame f3 = make_frame(3, 2);
    for (u64 d = 2; d <= delta_max(f3); ++d) CHECK(n2(f3, d) == 0);
    CHECK_THROWS_AS(n2(make_frame(5, 2), 20), error);
}

TEST_CASE("script_n worked examples") {
    FormulaReport a = script_n(make_frame(2, 2), 3);
    CHECK(a.script_n == 2);
    CHECK(a.interval_branch == 1);

    FormulaReport b = script_n(make_frame(5, 2), 19);
    CHECK(b.script_n == 32);
    CHECK(b.n1 == 1);
    CHECK(b.n2 == 1);
    CHECK(b.interval_branch == 3);
    CHECK(b.dmax_branch == "m=2,q>=5");

    FormulaReport c = script_n(make_frame(2, 4), 11);
    CHECK(c.n1 == 3);
    CHECK(c.script_n == 28);
    CHECK_FALSE(c.half_coset_term);

    CHECK_THROWS_AS(script_n(make_frame(2, 2), 4), error);
}

TEST_CASE("casewise_n worked examples") {
    CHECK(casewise_n(make_frame(3, 2), 6) == 8);
    CHECK(casewise_n(make_frame(4, 2), 7) == 10);
    CodeFrame f8 = make_frame(8, 2);
    CHECK(casewise_n(f8, 52) == 95);
    CHECK(casewise_n(f8, 52) == script_n(f8, 52).script_n);
}

TEST_CASE("formula equals direct union on small frames") {
    for (auto [q, m] : {std::pair<u64, u64>{2, 2}, {3, 2}, {4, 2}, {2, 4}, {5, 2}}) {
        CodeFrame f = make_frame(q, m);
        for (u64 d = 2; d <= delta_max(f); ++d) {
            u64 direct = union_size_direct(f, d);
            CHECK(script_n(f, d).script_n == direct);
            CHECK(casewise_n(f, d) == direct);
        }
    }
}

TEST_CASE("coset-size anomaly via cosets: q=4, m=2") {
    CodeFrame f = make_frame(4, 2);
    u64 imax = (detail::upow(f.q, f.m + 1) - 2) / (f.q + 1);
    u64 anomalies = 0;
    for (u64 i = 0; i <= imax; ++i) {
        u64 size = coset(f, (1 + f.r * i) % f.nr).size;
        if (i == i_star(f)) {
            CHECK(size == f.m / 2);
            ++anomalies;
        } else {
            CHECK(size == f.m);
        }
    }
    CHECK(anomalies == 1);
}

TEST_CASE("threshold sanity: delta_max beats (q-1) * delta_A") {
    for (auto [q, m] : {std::pair<u64, u64>{3, 2}, {5, 2}, {8, 2}, {9, 2}, {5, 4}}) {
        CodeFrame f = make_frame(q, m);
        u64 delta_a = (detail::upow(q, m) - 1) / (q + 1);
        CHECK(delta_max(f) > (q - 1) * delta_a);
    }
}

TEST_CASE("i_star exceeds the usable range for q=2") {
    CodeFrame f = make_frame(2, 4);
    CHECK(i_star(f) > delta_max(f) - 2);
    CodeFrame g = make_frame(4, 2);
    CHECK(i_star(g) > delta_max(g) - 2); // q=4, m=2: half term never fires
}
