#ifndef CCBCH_ORACLE_HPP
#define CCBCH_ORACLE_HPP

#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ccbch/code_builder.hpp"
#include "ccbch/cosets.hpp"
#include "ccbch/formulas.hpp"

namespace ccbch {

/// One row of a full-domain audit: closed form vs. explicit set union.
struct SweepRow {
    u64 delta = 0;
    u64 formula_n = 0;   // script_n (0 and not checked on the delta_max+1 row)
    u64 casewise_n = 0; // case-split route
    u64 direct_size = 0; // explicit union size
    bool match = true;
    bool dual_containing = false;
    u64 certificate = 0; // largest consecutive-run Delta
};

struct SweepReport {
    CodeFrame frame;
    u64 delta_max = 0;
    std::vector<SweepRow> rows; // delta = 2 .. delta_max+1
    u64 mismatches = 0;
    u64 first_mismatch_delta = 0;
    bool boundary_ok = false; // dual-containing through delta_max, not at +1
    bool witness_ok = false;  // necessity witness 1+r*i0 lies in both sets
    bool passed() const { return mismatches == 0 && boundary_ok && witness_ok; }
};

namespace detail {

// Incremental longest-circular-run tracker over Z_n: run lengths stored at
// run endpoints.
class RunTracker {
  public:
    explicit RunTracker(u64 n) : n_(n) {}

    void insert(u64 i) {
        if (len_.count(i)) return;
        u64 left = len_at((i + n_ - 1) % n_);
        u64 right = len_at((i + 1) % n_);
        u64 len = left + right + 1;
        if (len >= n_) {
            best_ = n_;
            len_[i] = 1;
            return;
        }
        u64 lo = (i + n_ - left) % n_;
        u64 hi = (i + right) % n_;
        len_[i] = 1;
        len_[lo] = len;
        len_[hi] = len;
        best_ = std::max(best_, len);
    }

    u64 best() const { return best_; }

  private:
    u64 len_at(u64 i) const {
        auto it = len_.find(i);
        return it == len_.end() ? 0 : it->second;
    }
    u64 n_;
    u64 best_ = 0;
    std::unordered_map<u64, u64> len_;
};

} // namespace detail

/// Full audit of one frame: for every delta in [2, delta_max], the closed
/// form must equal the explicit union size and the set must be dual
/// containing; at delta_max+1 dual containment must fail with the explicit
/// witness present in T and T^{-q}.
inline SweepReport sweep(const CodeFrame& f) {
    SweepReport rep;
    rep.frame = f;
    rep.delta_max = delta_max(f);

    const u64 nr = f.nr, q2 = f.q * f.q % nr;
    std::unordered_set<u64> T, Tinv;
    detail::RunTracker runs(f.n);
    bool intersect = false;
    std::vector<u64> orbit;

    for (u64 delta = 2; delta <= rep.delta_max + 1; ++delta) {
        // add the coset for i = delta-2
        u64 i = delta - 2;
        u64 s = (1 + mulmod_u64(f.r % nr, i, nr)) % nr;
        if (!T.count(s)) {
            orbit.clear();
            u64 x = s;
            do {
                orbit.push_back(x);
                x = mulmod_u64(x, q2, nr);
            } while (x != s);
            for (u64 e : orbit) {
                if (Tinv.count(e)) intersect = true;
                u64 einv = mulmod_u64(nr - f.q % nr, e, nr);
                // einv == e means the element is its own image, an intersection on its own
                if (einv == e || T.count(einv)) intersect = true;
                T.insert(e);
                Tinv.insert(einv);
                runs.insert((e - 1) / f.r);
            }
        }

        SweepRow row;
        row.delta = delta;
        row.direct_size = T.size();
        row.dual_containing = !intersect;
        row.certificate = runs.best() + 1;
        if (delta <= rep.delta_max) {
            row.formula_n = script_n(f, delta).script_n;
            row.casewise_n = casewise_n(f, delta);
            row.match = (row.formula_n == row.direct_size) && (row.casewise_n == row.formula_n);
            if (!row.match) {
                ++rep.mismatches;
                if (rep.first_mismatch_delta == 0) rep.first_mismatch_delta = delta;
            }
        }
        rep.rows.push_back(row);
    }

    bool ok = true;
    for (const SweepRow& row : rep.rows)
        if (row.delta <= rep.delta_max && !row.dual_containing) ok = false;
    rep.boundary_ok = ok && !rep.rows.back().dual_containing;

    // necessity witness i0 at delta = delta_max + 1
    u64 i0;
    if (f.m == 2 && f.q >= 5)
        i0 = detail::exact_div(f.q * f.q * f.q - f.q * f.q - 4 * f.q - 2, f.q + 1, "witness i0 (m=2,q>=5)");
    else
        i0 = detail::exact_div(detail::upow(f.q, f.m + 1) - 3 * detail::upow(f.q, f.m - 1) - 2, f.q + 1,
                               "witness i0");
    u64 witness = (1 + mulmod_u64(f.r % nr, i0, nr)) % nr;
    rep.witness_ok = (i0 <= rep.delta_max + 1 - 2) && T.count(witness) > 0 && Tinv.count(witness) > 0;
    return rep;
}

/// Coset sizes |C_{1+ri}| for 0 <= i <= floor((q^{m+1}-2)/(q+1)), with the
/// Coset-size dichotomy (m everywhere except m/2 at exactly i*, even q > 2).
struct CosetSizeScan {
    CodeFrame frame;
    std::vector<u64> sizes;             // indexed by i
    std::optional<u64> anomaly_index;   // the unique i with size m/2, if any
    bool dichotomy_ok = false;
};

inline CosetSizeScan coset_size_scan(const CodeFrame& f) {
    CosetSizeScan sc;
    sc.frame = f;
    u64 imax = (detail::upow(f.q, f.m + 1) - 2) / (f.q + 1);
    u64 q2 = f.q * f.q % f.nr;
    sc.sizes.reserve(imax + 1);
    for (u64 i = 0; i <= imax; ++i) {
        u64 s = (1 + mulmod_u64(f.r % f.nr, i, f.nr)) % f.nr;
        u64 x = mulmod_u64(s, q2, f.nr), size = 1;
        while (x != s) {
            x = mulmod_u64(x, q2, f.nr);
            ++size;
        }
        sc.sizes.push_back(size);
        if (size == f.m / 2 && !sc.anomaly_index) sc.anomaly_index = i;
    }
    bool expect_anomaly = (f.q > 2 && f.q % 2 == 0);
    sc.dichotomy_ok = true;
    u64 anomalies = 0;
    for (u64 i = 0; i <= imax; ++i) {
        if (sc.sizes[i] == f.m) continue;
        if (sc.sizes[i] == f.m / 2) {
            ++anomalies;
            continue;
        }
        sc.dichotomy_ok = false;
    }
    if (expect_anomaly)
        sc.dichotomy_ok = sc.dichotomy_ok && anomalies == 1 && sc.anomaly_index &&
                          *sc.anomaly_index == i_star(f);
    else
        sc.dichotomy_ok = sc.dichotomy_ok && anomalies == 0;
    return sc;
}

/// Codeword-level view: k x n generator matrix over the F_{q^2} subfield of
/// the tower field (entries stay inside the embedded subfield, so all linear
/// algebra runs in tower-field arithmetic).
struct MatrixCode {
    CodeFrame frame;
    FieldPtr field; // tower field; entries lie in the embedded F_{q^2}
    u64 subfield_order = 0;
    u64 n = 0;
    u64 k = 0;
    u64 eta = 0;
    std::vector<std::vector<u64>> rows;
};

constexpr u64 kMatrixLengthCap = 512;

inline MatrixCode matrix_from_generator(const GeneratorPolynomial& g) {
    if (g.frame.n > kMatrixLengthCap)
        raise(errc::capacity_exceeded, "matrix paths require n <= 512");
    MatrixCode mc;
    mc.frame = g.frame;
    mc.field = g.tower;
    mc.subfield_order = g.frame.q * g.frame.q;
    mc.n = g.frame.n;
    mc.eta = g.eta;
    u64 deg = g.degree();
    if (deg >= mc.n) raise(errc::capacity_exceeded, "degenerate code with k = 0");
    mc.k = mc.n - deg;
    // rows are x^i * g(x), i = 0..k-1; degrees stay below n, no reduction
    mc.rows.assign(mc.k, std::vector<u64>(mc.n, 0));
    for (u64 i = 0; i < mc.k; ++i)
        for (u64 j = 0; j <= deg; ++j) mc.rows[i][i + j] = g.poly.coeff(j);
    return mc;
}

namespace detail {

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<u64> rref(const Field& F, std::vector<std::vector<u64>>& a) {
    std::vector<u64> pivots;
    if (a.empty()) return pivots;
    const std::size_t ncols = a[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < a.size(); ++col) {
        std::size_t sel = row;
        while (sel < a.size() && a[sel][col] == 0) ++sel;
        if (sel == a.size()) continue;
        std::swap(a[row], a[sel]);
        u64 inv = F.inv(a[row][col]);
        for (std::size_t j = col; j < ncols; ++j) a[row][j] = F.mul(a[row][j], inv);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == row || a[i][col] == 0) continue;
            u64 factor = a[i][col];
            for (std::size_t j = col; j < ncols; ++j)
                a[i][j] = F.sub(a[i][j], F.mul(factor, a[row][j]));
        }
        pivots.push_back(col);
        ++row;
    }
    a.resize(row);
    return pivots;
}

// true iff v lies in the row space of an RREF basis.
inline bool in_rowspace(const Field& F, const std::vector<std::vector<u64>>& rrefBasis,
                        const std::vector<u64>& pivots, std::vector<u64> v) {
    for (std::size_t i = 0; i < rrefBasis.size(); ++i) {
        u64 c = v[pivots[i]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = F.sub(v[j], F.mul(c, rrefBasis[i][j]));
    }
    for (u64 x : v)
        if (x != 0) return false;
    return true;
}

} // namespace detail

/// Solves the Hermitian orthogonality system directly: bases C^{perp_H} from
/// the nullspace of the entrywise q-th-power of G, then checks containment in
/// rowspace(G). Independent of the set-level criterion.
inline bool check_hermitian_dual_containing_matrix(const MatrixCode& mc) {
    if (mc.n > kMatrixLengthCap) raise(errc::capacity_exceeded, "matrix paths require n <= 512");
    const Field& F = *mc.field;
    const u64 q = mc.frame.q;

    // u in C^{perp_H}  <=>  sum_i u_i v_i^q = 0 for every row v of G.
    std::vector<std::vector<u64>> gq = mc.rows;
    for (auto& row : gq)
        for (auto& x : row) x = F.pow(x, q);
    std::vector<u64> gq_pivots = detail::rref(F, gq);

    std::vector<std::vector<u64>> gref = mc.rows;
    std::vector<u64> g_pivots = detail::rref(F, gref);

    // nullspace basis of gq from its RREF
    std::vector<bool> is_pivot(mc.n, false);
    for (u64 c : gq_pivots) is_pivot[c] = true;
    for (u64 free_col = 0; free_col < mc.n; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<u64> u(mc.n, 0);
        u[free_col] = 1;
        for (std::size_t i = 0; i < gq.size(); ++i) u[gq_pivots[i]] = F.neg(gq[i][free_col]);
        if (!detail::in_rowspace(F, gref, g_pivots, std::move(u))) return false;
    }
    return true;
}

/// Exact minimum Hamming weight by exhaustive enumeration, budget-gated.
/// Scalar multiples share weights, so the leading nonzero message symbol is
/// pinned to 1. Returns nullopt when (q^2)^k exceeds the budget.
inline std::optional<u64> min_distance_exhaustive(const MatrixCode& mc, u64 budget = 100000000ull) {
    const u64 qs = mc.subfield_order;
    u64 words = 1;
    for (u64 i = 0; i < mc.k; ++i) {
        if (words > budget / qs) return std::nullopt;
        words *= qs;
    }
    if (words > budget) return std::nullopt;

    const Field& F = *mc.field;
    // subfield elements: 0 and powers of the embedded generator
    const u64 step = (F.order() - 1) / (qs - 1);
    std::vector<u64> sub{0};
    u64 cur = 1;
    for (u64 t = 0; t + 1 < qs; ++t) {
        sub.push_back(cur);
        cur = F.mul(cur, F.gen_pow(step));
    }

    u64 best = mc.n + 1;
    std::vector<u64> acc(mc.n, 0);
    // lead = index of first row with message symbol fixed to 1
    for (u64 lead = 0; lead < mc.k; ++lead) {
        std::vector<u64> base(mc.n, 0);
        for (u64 j = 0; j < mc.n; ++j) base[j] = mc.rows[lead][j];
        // enumerate all message tails over rows lead+1..k-1
        u64 tail_rows = mc.k - lead - 1;
        std::vector<u64> digits(tail_rows, 0);
        while (true) {
            acc = base;
            for (u64 t = 0; t < tail_rows; ++t) {
                u64 coef = sub[digits[t]];
                if (coef == 0) continue;
                const auto& row = mc.rows[lead + 1 + t];
                for (u64 j = 0; j < mc.n; ++j) acc[j] = F.add(acc[j], F.mul(coef, row[j]));
            }
            u64 w = 0;
            for (u64 x : acc)
                if (x != 0) ++w;
            if (w < best) best = w;
            // odometer
            u64 t = 0;
            while (t < tail_rows && ++digits[t] == qs) digits[t++] = 0;
            if (t == tail_rows) break;
            if (tail_rows == 0) break;
        }
    }
    return best;
}

} // namespace ccbch

#endif
