#ifndef CCBCH_FORMULAS_HPP
#define CCBCH_FORMULAS_HPP

#include <string>

#include "ccbch/cosets.hpp"
#include "ccbch/errors.hpp"

namespace ccbch {

namespace detail {

inline u64 exact_div(u64 a, u64 b, const char* what) {
    if (b == 0 || a % b != 0) raise(errc::internal_error, std::string("inexact division in ") + what);
    return a / b;
}

inline u64 upow(u64 b, u64 e) {
    u64 r = 1;
    while (e--) r *= b;
    return r;
}

// floor division rounding toward -infinity (numerator may be negative).
inline i64 floor_div(i64 a, i64 b) {
    i64 q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

} // namespace detail

/// Largest design distance for which the narrow-sense code stays Hermitian
/// dual-containing.
inline u64 delta_max(const CodeFrame& f) {
    using detail::exact_div;
    using detail::upow;
    if (f.m == 2 && f.q >= 5)
        return exact_div(f.q * f.q * f.q - f.q * f.q + f.q + 3, f.q + 1, "delta_max (m=2, q>=5)") + 1;
    return exact_div(upow(f.q, f.m + 1) - f.q * f.q + f.q + 3, f.q + 1, "delta_max");
}

/// The index i* where C_{1+ri} collapses to size m/2 (even q > 2); for all q
/// it is also the branch threshold of the dimension count.
inline u64 i_star(const CodeFrame& f) {
    u64 half_up = (f.q + 2) / 2; // ceil((q+1)/2)
    u64 qm = detail::upow(f.q, f.m);
    u64 even_ind = (f.q % 2 == 0) ? 1 : 0;
    return detail::exact_div(half_up * (qm + 1) - even_ind, f.q + 1, "i_star");
}

/// Count of repeated cosets with index congruent to q-1 mod q^2.
inline u64 n1(u64 q, u64 delta) {
    if (delta < 2) raise(errc::delta_out_of_range, "delta must be >= 2");
    i64 v = detail::floor_div(static_cast<i64>(delta) - static_cast<i64>(q + 1),
                              static_cast<i64>(q * q)) +
            1;
    return v < 0 ? 0 : static_cast<u64>(v);
}

/// Count of repeated-coset pairs from the q^m-shift family; nonzero only for
/// q >= 5 in the top delta interval.
inline u64 n2(const CodeFrame& f, u64 delta) {
    if (delta < 2 || delta > delta_max(f)) raise(errc::delta_out_of_range, "delta outside [2, delta_max]");
    u64 qm = detail::upow(f.q, f.m);
    u64 block = detail::exact_div(qm - 1, f.q + 1, "(q^m-1)/(q+1)");
    u64 threshold = i_star(f) + 2 + block;
    if (f.q < 5 || delta < threshold) return 0;
    i64 v = detail::floor_div(static_cast<i64>((f.q + 1) * (delta - 3)), static_cast<i64>(qm - 1)) -
            static_cast<i64>((f.q + 2) / 2);
    return v < 0 ? 0 : static_cast<u64>(v);
}

/// Closed-form defining-set size with the branch that fired.
struct FormulaReport {
    CodeFrame frame;
    u64 delta = 0;
    u64 delta_max = 0;
    u64 i_star = 0;
    u64 n1 = 0;
    u64 n2 = 0;
    u64 script_n = 0;       // |T| per the closed form
    int interval_branch = 0;  // 1..3, by delta interval
    int case_index = 0; // 1..4
    bool half_coset_term = false;
    std::string dmax_branch;

    std::string branch_label() const {
        return dmax_branch + ";interval-" + std::to_string(interval_branch) + ";case-" +
               std::to_string(case_index);
    }
};

/// Closed-form evaluation of script-N(q, m, delta) = |T|. Internally counted in
/// units of m/2 so the half-coset correction stays integral.
inline FormulaReport script_n(const CodeFrame& f, u64 delta) {
    u64 dmax = delta_max(f);
    if (delta < 2 || delta > dmax) raise(errc::delta_out_of_range, "delta outside [2, delta_max]");
    FormulaReport rep;
    rep.frame = f;
    rep.delta = delta;
    rep.delta_max = dmax;
    rep.i_star = i_star(f);
    rep.n1 = n1(f.q, delta);
    rep.n2 = n2(f, delta);
    rep.dmax_branch = (f.m == 2 && f.q >= 5) ? "m=2,q>=5" : "otherwise";

    u64 qm = detail::upow(f.q, f.m);
    u64 block = detail::exact_div(qm - 1, f.q + 1, "(q^m-1)/(q+1)");
    u64 t2 = rep.i_star + 2;
    u64 t3 = rep.i_star + 2 + block;

    // The half-size-coset correction fires when i* lands inside the index
    // range, i.e. i* <= delta-2: exactly the delta >= i*+2 branches, and only
    // for even q >= 4 (q=4 with m=2 never reaches them below delta_max).
    bool half = false;
    if (delta < t2) {
        rep.interval_branch = 1;
    } else if (delta < t3) {
        rep.interval_branch = 2;
        half = (f.q % 2 == 0 && f.q >= 4);
    } else {
        rep.interval_branch = 3;
        half = (f.q % 2 == 0 && f.q >= 4);
    }
    rep.half_coset_term = half;

    // script_n = (delta - N1 - 1 - half/2 - N2) * m, in half-units of m.
    i64 halves = 2 * (static_cast<i64>(delta) - static_cast<i64>(rep.n1) - 1 - static_cast<i64>(rep.n2)) -
                 (half ? 1 : 0);
    if (halves < 0) raise(errc::internal_error, "negative defining-set size");
    rep.script_n = static_cast<u64>(halves) * f.m / 2;

    if (f.q <= 4 && f.m == 2)
        rep.case_index = 1;
    else if (f.q <= 4)
        rep.case_index = 2;
    else if (f.q % 2 == 1)
        rep.case_index = 3;
    else
        rep.case_index = 4;
    return rep;
}

/// Independent per-case evaluation of the same count via an explicit case split;
/// must agree with script_n on the whole domain.
inline u64 casewise_n(const CodeFrame& f, u64 delta) {
    u64 dmax = delta_max(f);
    if (delta < 2 || delta > dmax) raise(errc::delta_out_of_range, "delta outside [2, delta_max]");
    u64 N1 = n1(f.q, delta);
    u64 qm = detail::upow(f.q, f.m);
    u64 block = detail::exact_div(qm - 1, f.q + 1, "(q^m-1)/(q+1)");
    u64 istar = i_star(f);

    if (f.q <= 4 && f.m == 2) {
        return 2 * (delta - N1 - 1);
    }
    if (f.q <= 4) { // m > 2
        if (delta < istar + 2) return (delta - N1 - 1) * f.m;
        u64 halves = 2 * (delta - N1 - 1) - (f.q == 4 ? 1 : 0);
        return halves * f.m / 2;
    }
    if (f.q % 2 == 1) { // q >= 5 odd
        if (delta < istar + 2 + block) return (delta - N1 - 1) * f.m;
        return (delta - N1 - n2(f, delta) - 1) * f.m;
    }
    // q >= 5 even (smallest instance q = 8)
    if (delta < istar + 2) return (delta - N1 - 1) * f.m;
    if (delta < istar + 2 + block) return (2 * (delta - N1) - 3) * f.m / 2;
    return (2 * (delta - N1 - n2(f, delta)) - 3) * f.m / 2;
}

} // namespace ccbch

#endif
