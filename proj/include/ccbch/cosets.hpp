#ifndef CCBCH_COSETS_HPP
#define CCBCH_COSETS_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "ccbch/errors.hpp"
#include "ccbch/field.hpp"

namespace ccbch {

using i64 = std::int64_t;

inline u64 mulmod_u64(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

/// The tuple (q, m, r = q+1, n = (q^{2m}-1)/(q+1), nr = q^{2m}-1) with q = p^s.
struct CodeFrame {
    u64 q = 0;
    u64 m = 0;
    u64 p = 0; // characteristic
    u64 s = 0; // q = p^s
    u64 r = 0;
    u64 n = 0;
    u64 nr = 0;
};

inline CodeFrame make_frame(u64 q, u64 m) {
    if (q < 2) raise(errc::not_prime_power, "q = " + std::to_string(q) + " is not a prime power");
    u64 p = 0, s = 0;
    for (u64 d = 2; d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            u64 t = q;
            while (t % d == 0) {
                t /= d;
                ++s;
            }
            if (t != 1) raise(errc::not_prime_power, "q = " + std::to_string(q) + " is not a prime power");
            break;
        }
    }
    if (m < 2) raise(errc::m_too_small, "m must be >= 2");
    if (m % 2 != 0) raise(errc::odd_m, "m must be even");

    u64 nr = 1;
    const u64 cap = (u64(1) << 63) - 1;
    for (u64 i = 0; i < 2 * m; ++i) {
        if (nr > cap / q) raise(errc::capacity_exceeded, "q^{2m} - 1 exceeds 2^63");
        nr *= q;
    }
    nr -= 1;

    CodeFrame f;
    f.q = q;
    f.m = m;
    f.p = p;
    f.s = s;
    f.r = q + 1;
    f.n = nr / (q + 1);
    f.nr = nr;
    if (f.n * f.r != nr) raise(errc::internal_error, "n*r != q^{2m}-1");

    // ord_{nr}(q^2) must be exactly m
    u64 q2 = q * q % nr, t = q2 % nr;
    u64 ord = 1;
    while (t != 1) {
        t = mulmod_u64(t, q2, nr);
        ++ord;
        if (ord > m) break;
    }
    if (ord != m) raise(errc::internal_error, "ord_{nr}(q^2) != m");
    return f;
}

/// Orbit of s under multiplication by q^2 modulo nr.
struct CyclotomicCoset {
    u64 representative = 0;
    std::vector<u64> elements; // sorted
    u64 leader = 0;            // min element
    u64 size = 0;
};

inline CyclotomicCoset coset(const CodeFrame& f, u64 s) {
    if (s >= f.nr) raise(errc::out_of_range, "coset representative out of [0, nr)");
    CyclotomicCoset c;
    c.representative = s;
    u64 q2 = f.q * f.q % f.nr;
    u64 x = s;
    do {
        c.elements.push_back(x);
        x = mulmod_u64(x, q2, f.nr);
    } while (x != s);
    c.size = c.elements.size();
    std::sort(c.elements.begin(), c.elements.end());
    c.leader = c.elements.front();
    return c;
}

/// T = union of C_{1+ri} for 0 <= i <= delta-2, deduplicated.
struct DefiningSet {
    CodeFrame frame;
    u64 delta = 0;
    std::vector<CyclotomicCoset> cosets; // one per distinct coset
    std::vector<u64> repeated_indices;   // i whose coset duplicated an earlier one
    std::vector<u64> elements;           // flat sorted union
};

inline DefiningSet defining_set(const CodeFrame& f, u64 delta) {
    if (delta < 2 || delta > f.n) raise(errc::delta_out_of_range, "delta must satisfy 2 <= delta <= n");
    DefiningSet t;
    t.frame = f;
    t.delta = delta;
    std::unordered_set<u64> leaders;
    std::unordered_set<u64> flat;
    for (u64 i = 0; i + 2 <= delta; ++i) {
        u64 rep = (1 + mulmod_u64(f.r % f.nr, i, f.nr)) % f.nr;
        CyclotomicCoset c = coset(f, rep);
        if (!leaders.insert(c.leader).second) {
            t.repeated_indices.push_back(i);
            continue;
        }
        for (u64 e : c.elements) flat.insert(e);
        t.cosets.push_back(std::move(c));
    }
    t.elements.assign(flat.begin(), flat.end());
    std::sort(t.elements.begin(), t.elements.end());
    return t;
}

/// {(-q*j) mod nr : j in T}, sorted.
inline std::vector<u64> negate_q_image(const DefiningSet& t) {
    std::vector<u64> out;
    out.reserve(t.elements.size());
    const u64 nr = t.frame.nr;
    for (u64 j : t.elements) out.push_back(mulmod_u64(nr - t.frame.q % nr, j % nr, nr));
    std::sort(out.begin(), out.end());
    return out;
}

/// Dual-containment criterion: the code is Hermitian dual-containing iff T and T^{-q}
/// are disjoint.
inline bool is_dual_containing(const DefiningSet& t) {
    std::vector<u64> img = negate_q_image(t);
    std::vector<u64> inter;
    std::set_intersection(t.elements.begin(), t.elements.end(), img.begin(), img.end(),
                          std::back_inserter(inter));
    return inter.empty();
}

/// |union of C_{1+ri}, 0 <= i <= delta-2| by explicit set union (oracle path,
/// independent of the closed-form dimension count).
inline u64 union_size_direct(const CodeFrame& f, u64 delta) {
    if (delta < 2 || delta > f.n) raise(errc::delta_out_of_range, "delta must satisfy 2 <= delta <= n");
    std::unordered_set<u64> flat;
    u64 q2 = f.q * f.q % f.nr;
    for (u64 i = 0; i + 2 <= delta; ++i) {
        u64 s = (1 + mulmod_u64(f.r % f.nr, i, f.nr)) % f.nr;
        u64 x = s;
        do {
            flat.insert(x);
            x = mulmod_u64(x, q2, f.nr);
        } while (x != s);
    }
    return flat.size();
}

} // namespace ccbch

#endif
