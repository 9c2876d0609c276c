#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <unordered_set>

#include "ccbch/cosets.hpp"
#include "ccbch/formulas.hpp"

using namespace ccbch;

TEST_CASE("make_frame derived quantities") {
    CodeFrame f = make_frame(2, 2);
    CHECK(f.n == 5);
    CHECK(f.r == 3);
    CHECK(f.nr == 15);

    CodeFrame g = make_frame(3, 2);
    CHECK(g.n == 20);
    CHECK(g.r == 4);
    CHECK(g.nr == 80);

    CodeFrame h = make_frame(8, 2);
    CHECK(h.p == 2);
    CHECK(h.s == 3);
    CHECK(h.n == 455);
}

TEST_CASE("make_frame rejections") {
    CHECK_THROWS_AS(make_frame(2, 3), error);  // OddM
    CHECK_THROWS_AS(make_frame(6, 2), error);  // not a prime power
    CHECK_THROWS_AS(make_frame(2, 0), error);  // MTooSmall
    CHECK_THROWS_AS(make_frame(3, 40), error); // q^{2m}-1 over 2^63
}

TEST_CASE("coset orbits") {
    CodeFrame f = make_frame(2, 2);
    CyclotomicCoset c1 = coset(f, 1);
    CHECK(c1.elements == std::vector<u64>{1, 4});
    CHECK(c1.size == 2);
    CHECK(c1.leader == 1);

    CyclotomicCoset c0 = coset(f, 0);
    CHECK(c0.elements == std::vector<u64>{0});
    CHECK(c0.size == 1);

    CodeFrame g = make_frame(3, 2);
    CHECK(coset(g, 1).elements == std::vector<u64>{1, 9});
    CHECK(coset(g, 1).size == g.m);

    CHECK_THROWS_AS(coset(f, 15), error);
}

TEST_CASE("defining sets") {
    CodeFrame f = make_frame(2, 2);
    DefiningSet t = defining_set(f, 3);
    CHECK(t.elements == std::vector<u64>{1, 4}); // C_1 = C_4
    CHECK(t.repeated_indices == std::vector<u64>{1});

    CodeFrame g = make_frame(3, 2);
    DefiningSet t2 = defining_set(g, 2);
    CHECK(t2.elements == std::vector<u64>{1, 9});

    // delta=2 union is C_1 of size m for q odd
    for (u64 q : {3, 5, 7, 9}) {
        CodeFrame fr = make_frame(q, 2);
        CHECK(defining_set(fr, 2).elements.size() == fr.m);
    }

    CHECK_THROWS_AS(defining_set(f, 1), error);
    CHECK_THROWS_AS(defining_set(f, f.n + 1), error);

    // every element is 1 mod r and inside O
    CodeFrame h = make_frame(4, 2);
    DefiningSet th = defining_set(h, 9);
    for (u64 e : th.elements) CHECK(e % h.r == 1);
}

TEST_CASE("negate_q_image") {
    CodeFrame f = make_frame(2, 2);
    DefiningSet t = defining_set(f, 3);
    CHECK(negate_q_image(t) == std::vector<u64>{7, 13});

    CodeFrame g = make_frame(3, 2);
    DefiningSet t2 = defining_set(g, 2);
    CHECK(negate_q_image(t2) == std::vector<u64>{53, 77});
}

TEST_CASE("dual containing criterion") {
    CodeFrame f = make_frame(2, 2);
    CHECK(is_dual_containing(defining_set(f, 3)));

    CodeFrame g = make_frame(5, 2);
    CHECK(is_dual_containing(defining_set(g, 19)));
    CHECK_FALSE(is_dual_containing(defining_set(g, 20)));
}

TEST_CASE("union_size_direct examples") {
    CHECK(union_size_direct(make_frame(2, 2), 3) == 2);
    CHECK(union_size_direct(make_frame(3, 2), 4) == 4);
    CHECK(union_size_direct(make_frame(5, 2), 19) == 32);
}

TEST_CASE("orbit property: multiplication by q^2 permutes each coset") {
    CodeFrame f = make_frame(4, 2);
    u64 q2 = f.q * f.q % f.nr;
    for (u64 s : {u64(1), u64(6), u64(11), u64(100)}) {
        CyclotomicCoset c = coset(f, s);
        std::set<u64> orig(c.elements.begin(), c.elements.end());
        std::set<u64> mapped;
        for (u64 e : c.elements) mapped.insert(mulmod_u64(e, q2, f.nr));
        CHECK(orig == mapped);
    }
}

TEST_CASE("coset sizes divide m across the scan index range") {
    for (u64 q : {2, 3, 4}) {
        CodeFrame f = make_frame(q, 2);
        u64 imax = (f.q * f.q * f.q - 2) / (f.q + 1);
        for (u64 i = 0; i <= imax; ++i) {
            u64 s = (1 + f.r * i) % f.nr;
            CHECK(f.m % coset(f, s).size == 0);
        }
    }
}

TEST_CASE("partition: cosets of O cover exactly n elements") {
    CodeFrame f = make_frame(3, 2);
    std::unordered_set<u64> all;
    std::set<u64> leaders;
    for (u64 i = 0; i < f.n; ++i) {
        CyclotomicCoset c = coset(f, (1 + f.r * i) % f.nr);
        if (!leaders.insert(c.leader).second) continue;
        for (u64 e : c.elements) CHECK(all.insert(e).second); // disjoint
    }
    CHECK(all.size() == f.n);
}

TEST_CASE("union size is nondecreasing with increments in {0, m/2, m}") {
    for (auto [q, m] : {std::pair<u64, u64>{4, 2}, {8, 2}, {2, 4}}) {
        CodeFrame f = make_frame(q, m);
        u64 dmax = delta_max(f);
        u64 prev = union_size_direct(f, 2);
        for (u64 d = 3; d <= dmax; ++d) {
            u64 cur = union_size_direct(f, d);
            u64 inc = cur - prev;
            CHECK(cur >= prev);
            CHECK((inc == 0 || inc == f.m / 2 || inc == f.m));
            prev = cur;
        }
    }
}

TEST_CASE("dual-containing boundary across the frame sweep") {
    for (u64 q : {2, 3, 4, 5, 7, 8, 9}) {
        for (u64 m : {u64(2), u64(4)}) {
            CodeFrame f = make_frame(q, m);
            u64 dmax = delta_max(f);
            CHECK(is_dual_containing(defining_set(f, dmax)));
            CHECK_FALSE(is_dual_containing(defining_set(f, dmax + 1)));
        }
    }
}
