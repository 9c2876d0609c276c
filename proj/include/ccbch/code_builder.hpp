#ifndef CCBCH_CODE_BUILDER_HPP
#define CCBCH_CODE_BUILDER_HPP

#include <string>
#include <vector>

#include "ccbch/cosets.hpp"
#include "ccbch/field.hpp"
#include "ccbch/formulas.hpp"
#include "ccbch/polynomial.hpp"

namespace ccbch {

/// [n, n - scriptN, >= delta] over F_{q^2}, Hermitian dual-containing.
struct ClassicalCodeParams {
    CodeFrame frame;
    u64 delta = 0;
    u64 n = 0;
    u64 k = 0;
    u64 defining_set_size = 0;
    bool dual_containing = false;
};

/// [[n, n - 2*scriptN, >= delta]]_q via the Hermitian construction.
struct QuantumCodeParams {
    CodeFrame frame;
    u64 delta = 0;
    u64 n = 0;
    u64 k = 0;
};

inline ClassicalCodeParams classical_params(const CodeFrame& f, u64 delta) {
    u64 dmax = delta_max(f);
    if (delta < 2 || delta > dmax)
        raise(errc::delta_out_of_range,
              "delta outside [2, delta_max]; delta > delta_max is not dual-containing");
    FormulaReport rep = script_n(f, delta);
    ClassicalCodeParams c;
    c.frame = f;
    c.delta = delta;
    c.n = f.n;
    c.defining_set_size = rep.script_n;
    c.k = f.n - rep.script_n;
    c.dual_containing = true;
    return c;
}

inline QuantumCodeParams quantum_params(const CodeFrame& f, u64 delta) {
    ClassicalCodeParams c = classical_params(f, delta);
    QuantumCodeParams qp;
    qp.frame = f;
    qp.delta = delta;
    qp.n = f.n;
    qp.k = c.n - 2 * c.defining_set_size; // = 2k - n
    return qp;
}

/// g(x) = prod_{j in T} (x - beta^j) over the tower field F_{q^{2m}}, with
/// beta the distinguished primitive element (so beta is a primitive nr-th
/// root of unity and eta = beta^n has order q+1). Coefficients land in the
/// embedded F_{q^2}.
struct GeneratorPolynomial {
    CodeFrame frame;
    u64 delta = 0;
    FieldPtr tower;       // F_{q^{2m}}
    Polynomial poly;      // monic, degree |T|
    u64 eta = 0;          // beta^n
    u64 eta_log = 0;      // = n
    u64 subfield_gen = 0; // gamma = beta^{(Q-1)/(q^2-1)}
    std::vector<i64> coeff_logs; // log_gamma of each coefficient, -1 for zero

    u64 degree() const { return static_cast<u64>(poly.degree()); }
};

inline GeneratorPolynomial generator_polynomial(const CodeFrame& f, u64 delta, u64 cap = field_cap()) {
    DefiningSet t = defining_set(f, delta); // validates 2 <= delta <= n
    FieldPtr F = Field::build(f.p, 2 * f.m * f.s, cap);
    if (F->order() - 1 != f.nr) raise(errc::internal_error, "tower order mismatch");

    GeneratorPolynomial g;
    g.frame = f;
    g.delta = delta;
    g.tower = F;
    g.eta = F->gen_pow(f.n);
    g.eta_log = f.n;
    if (F->element_order(g.eta) != f.r) raise(errc::internal_error, "eta does not have order q+1");

    Polynomial acc = Polynomial::one(F);
    for (u64 j : t.elements) acc = acc * Polynomial::linear_root(F, F->gen_pow(j));
    g.poly = std::move(acc);
    if (!g.poly.is_monic() || g.degree() != t.elements.size())
        raise(errc::internal_error, "generator polynomial degree mismatch");

    const u64 q2 = f.q * f.q;
    const u64 step = (F->order() - 1) / (q2 - 1);
    g.subfield_gen = F->gen_pow(step);
    g.coeff_logs.reserve(g.poly.coeffs().size());
    for (u64 c : g.poly.coeffs()) {
        if (!element_in_subfield(*F, c, q2))
            raise(errc::internal_error, "generator coefficient outside F_{q^2}");
        if (c == 0) {
            g.coeff_logs.push_back(-1);
            continue;
        }
        if (F->has_log_table()) {
            u64 L = F->log(c);
            if (L % step != 0) raise(errc::internal_error, "coefficient log not on subfield lattice");
            g.coeff_logs.push_back(static_cast<i64>(L / step));
        } else {
            u64 cur = 1;
            i64 found = -1;
            for (u64 tt = 0; tt + 1 < q2; ++tt) {
                if (cur == c) {
                    found = static_cast<i64>(tt);
                    break;
                }
                cur = F->mul(cur, g.subfield_gen);
            }
            if (found < 0) raise(errc::internal_error, "coefficient not in embedded subfield image");
            g.coeff_logs.push_back(found);
        }
    }
    return g;
}

/// x^n - eta over the generator's tower field.
inline Polynomial constacyclic_modulus(const GeneratorPolynomial& g) {
    std::vector<u64> c(g.frame.n + 1, 0);
    c[0] = g.tower->neg(g.eta);
    c[g.frame.n] = 1;
    return Polynomial(g.tower, std::move(c));
}

/// Largest Delta such that some run {1+ri : a <= i <= a+Delta-2} lies in T
/// (indices taken modulo n; consecutive-root BCH bound).
inline u64 bch_bound_certificate(const DefiningSet& t) {
    const u64 n = t.frame.n, r = t.frame.r;
    std::vector<u64> idx;
    idx.reserve(t.elements.size());
    for (u64 e : t.elements) {
        if (e % r != 1 % r) raise(errc::internal_error, "defining-set element not 1 mod r");
        idx.push_back((e - 1) / r);
    }
    std::sort(idx.begin(), idx.end());
    if (idx.empty()) return 1;
    if (idx.size() == n) return n + 1;
    // longest circular run of consecutive indices
    u64 best = 1, run = 1;
    for (std::size_t i = 1; i < idx.size(); ++i) {
        run = (idx[i] == idx[i - 1] + 1) ? run + 1 : 1;
        best = std::max(best, run);
    }
    // wraparound: tail ending at n-1 joined with head starting at 0
    if (idx.front() == 0 && idx.back() == n - 1) {
        u64 head = 1;
        while (head < idx.size() && idx[head] == idx[head - 1] + 1) ++head;
        u64 tail = 1;
        while (tail < idx.size() && idx[idx.size() - 1 - tail] + 1 == idx[idx.size() - tail]) ++tail;
        best = std::max(best, head + tail);
    }
    return best + 1;
}

} // namespace ccbch

#endif
