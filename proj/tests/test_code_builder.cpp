#include <catch2/catch_amalgamated.hpp>

#include "ccbch/code_builder.hpp"

using namespace ccbch;

TEST_CASE("classical_params") {
    ClassicalCodeParams a = classical_params(make_frame(2, 2), 3);
    CHECK(a.n == 5);
    CHECK(a.k == 3);
    CHECK(a.dual_containing);

    ClassicalCodeParams b = classical_params(make_frame(3, 2), 5);
    CHECK(b.n == 20);
    CHECK(b.k == 14);

    ClassicalCodeParams c = classical_params(make_frame(2, 4), 8);
    CHECK(c.n == 85);
    CHECK(c.k == 65);

    CHECK_THROWS_AS(classical_params(make_frame(2, 2), 4), error); // > delta_max
}

TEST_CASE("quantum_params") {
    QuantumCodeParams a = quantum_params(make_frame(5, 2), 19);
    CHECK(a.n == 104);
    CHECK(a.k == 40);

    QuantumCodeParams b = quantum_params(make_frame(7, 2), 33);
    CHECK(b.n == 300);
    CHECK(b.k == 180);

    QuantumCodeParams c = quantum_params(make_frame(4, 2), 5);
    CHECK(c.n == 51);
    CHECK(c.k == 39);
}

TEST_CASE("quantum k equals 2*classical k - n across frames") {
    for (auto [q, m] : {std::pair<u64, u64>{2, 2}, {3, 2}, {4, 2}, {2, 4}, {8, 2}}) {
        CodeFrame f = make_frame(q, m);
        for (u64 d = 2; d <= delta_max(f); ++d) {
            auto cl = classical_params(f, d);
            auto qu = quantum_params(f, d);
            CHECK(qu.k == 2 * cl.k - cl.n);
        }
    }
}

TEST_CASE("generator polynomial for the [5,3] frame") {
    CodeFrame f = make_frame(2, 2);
    GeneratorPolynomial g = generator_polynomial(f, 3);
    CHECK(g.degree() == 2);
    CHECK(g.poly.is_monic());
    CHECK(g.tower->element_order(g.eta) == 3);

    // divides x^5 - eta exactly
    auto [quo, rem] = divmod(constacyclic_modulus(g), g.poly);
    CHECK(rem.is_zero());
    CHECK(quo.degree() == 3);

    // roots are beta and beta^4
    CHECK(g.poly.eval(g.tower->gen_pow(1)) == 0);
    CHECK(g.poly.eval(g.tower->gen_pow(4)) == 0);

    // delta=2 produces the identical polynomial (C_1 = C_4 here)
    GeneratorPolynomial g2 = generator_polynomial(f, 2);
    CHECK(g2.poly.coeffs() == g.poly.coeffs());
}

TEST_CASE("generator degree matches the defining set and formula") {
    for (auto [q, m] : {std::pair<u64, u64>{2, 2}, {3, 2}, {4, 2}, {2, 4}}) {
        CodeFrame f = make_frame(q, m);
        for (u64 d = 2; d <= delta_max(f); ++d) {
            GeneratorPolynomial g = generator_polynomial(f, d);
            CHECK(g.degree() == defining_set(f, d).elements.size());
            CHECK(g.degree() == script_n(f, d).script_n);
        }
    }
}

TEST_CASE("generator coefficients lie in F_{q^2}") {
    for (auto [q, m] : {std::pair<u64, u64>{3, 2}, {2, 4}}) {
        CodeFrame f = make_frame(q, m);
        GeneratorPolynomial g = generator_polynomial(f, 4);
        for (u64 c : g.poly.coeffs()) CHECK(g.tower->pow(c, q * q) == c);
        CHECK(g.coeff_logs.size() == g.degree() + 1);
    }
}

TEST_CASE("generator polynomial respects the field cap") {
    CodeFrame f = make_frame(7, 4); // tower 7^8 fits the default cap
    GeneratorPolynomial g = generator_polynomial(f, 3);
    CHECK(g.degree() == script_n(f, 3).script_n);
    // 3^16 exceeds an explicit 2^20 cap
    CHECK_THROWS_AS(generator_polynomial(make_frame(9, 4), 3, u64(1) << 20), error);
}

TEST_CASE("bch_bound_certificate") {
    CodeFrame f = make_frame(2, 2);
    CHECK(bch_bound_certificate(defining_set(f, 3)) == 3);

    CodeFrame g = make_frame(3, 2);
    CHECK(bch_bound_certificate(defining_set(g, 4)) >= 4);

    CodeFrame h = make_frame(5, 2);
    CHECK(bch_bound_certificate(defining_set(h, 19)) >= 19);

    // certificate >= delta for all constructed codes on a small frame
    CodeFrame f4 = make_frame(4, 2);
    for (u64 d = 2; d <= delta_max(f4); ++d)
        CHECK(bch_bound_certificate(defining_set(f4, d)) >= d);
}
