#ifndef CCBCH_FIELD_HPP
#define CCBCH_FIELD_HPP

#include <cstdint>
#include <cstdlib>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "ccbch/errors.hpp"

namespace ccbch {

using u64 = std::uint64_t;

/// Largest tower-field order built by default; override with CCBCH_FIELD_CAP.
constexpr u64 kDefaultFieldCap = u64(1) << 26;

/// Fields up to this order carry exp/log tables; larger ones multiply
/// through polynomial reduction.
constexpr u64 kLogTableLimit = u64(1) << 20;

inline u64 field_cap() {
    if (const char* s = std::getenv("CCBCH_FIELD_CAP")) {
        char* end = nullptr;
        u64 v = std::strtoull(s, &end, 10);
        if (end != s && v >= 2) return v;
    }
    return kDefaultFieldCap;
}

inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Distinct prime factors by trial division (inputs here are < 2^63).
inline std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> fs;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

namespace detail {

// Dense polynomials over F_p, lowest degree first, coefficients in [0, p).
using FpPoly = std::vector<u64>;

inline void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline FpPoly fp_mul(const FpPoly& a, const FpPoly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    FpPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    fp_trim(c);
    return c;
}

// Remainder of a modulo monic f.
inline FpPoly fp_mod(FpPoly a, const FpPoly& f, u64 p) {
    const std::size_t df = f.size() - 1;
    while (a.size() > df) {
        u64 lead = a.back();
        std::size_t shift = a.size() - 1 - df;
        if (lead != 0) {
            for (std::size_t i = 0; i < df; ++i) {
                u64 t = (lead * f[i]) % p;
                a[shift + i] = (a[shift + i] + p - t) % p;
            }
        }
        a.pop_back();
        fp_trim(a);
        if (a.size() <= df) break;
    }
    fp_trim(a);
    return a;
}

inline FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f, u64 p) {
    return fp_mod(fp_mul(a, b, p), f, p);
}

inline FpPoly fp_powmod(FpPoly base, u64 exp, const FpPoly& f, u64 p) {
    FpPoly r{1};
    base = fp_mod(std::move(base), f, p);
    while (exp > 0) {
        if (exp & 1) r = fp_mulmod(r, base, f, p);
        base = fp_mulmod(base, base, f, p);
        exp >>= 1;
    }
    return r;
}

// x^(p^k) mod f via k successive p-th powers.
inline FpPoly fp_frobenius_iter(const FpPoly& f, u64 p, std::size_t k) {
    FpPoly t{0, 1};
    t = fp_mod(std::move(t), f, p);
    for (std::size_t i = 0; i < k; ++i) t = fp_powmod(t, p, f, p);
    return t;
}

inline FpPoly fp_gcd(FpPoly a, FpPoly b, u64 p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        // make b monic for fp_mod
        u64 lead = b.back();
        if (lead != 1) {
            // multiply b by lead^{-1} (Fermat)
            u64 inv = 1, base = lead, e = p - 2;
            while (e) {
                if (e & 1) inv = (inv * base) % p;
                base = (base * base) % p;
                e >>= 1;
            }
            for (auto& c : b) c = (c * inv) % p;
        }
        FpPoly r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Rabin irreducibility test for monic f of degree e over F_p.
inline bool fp_irreducible(const FpPoly& f, u64 p) {
    const std::size_t e = f.size() - 1;
    if (e == 0) return false;
    if (e == 1) return true;
    for (u64 r : prime_factors(e)) {
        FpPoly h = fp_frobenius_iter(f, p, e / r);
        // h - x
        FpPoly d = h;
        if (d.size() < 2) d.resize(2, 0);
        d[1] = (d[1] + p - 1) % p;
        fp_trim(d);
        FpPoly g = fp_gcd(f, d, p);
        if (g.size() != 1) return false;
    }
    FpPoly h = fp_frobenius_iter(f, p, e);
    return h.size() == 2 && h[0] == 0 && h[1] == 1;
}

} // namespace detail

/// Exact arithmetic in F_{p^e}. Elements are integer codes whose base-p
/// digits are the coefficient vector over F_p (digit i = coefficient of x^i).
/// Immutable after construction; share freely across threads.
class Field {
  public:
    static std::shared_ptr<const Field> build(u64 p, u64 e, u64 cap = field_cap()) {
        if (!is_prime_u64(p)) raise(errc::not_prime, "p = " + std::to_string(p) + " is not prime");
        if (e < 1) raise(errc::out_of_range, "extension degree must be >= 1");
        u64 order = 1;
        for (u64 i = 0; i < e; ++i) {
            if (order > cap / p)
                raise(errc::capacity_exceeded, "p^e = " + std::to_string(p) + "^" + std::to_string(e) +
                                                   " exceeds field cap " + std::to_string(cap));
            order *= p;
        }
        return std::shared_ptr<const Field>(new Field(p, e, order));
    }

    u64 characteristic() const { return p_; }
    u64 extension_degree() const { return e_; }
    u64 order() const { return order_; }
    /// Monic modulus polynomial, lowest degree first, length e+1.
    const std::vector<u64>& modulus() const { return modulus_; }
    /// Code of the distinguished primitive element.
    u64 generator() const { return gen_; }
    bool has_log_table() const { return !log_.empty(); }

    u64 add(u64 a, u64 b) const {
        if (e_ == 1) return (a + b) % p_;
        if (p_ == 2) return a ^ b;
        u64 r = 0, mul = 1;
        for (u64 i = 0; i < e_; ++i) {
            r += ((a % p_ + b % p_) % p_) * mul;
            a /= p_;
            b /= p_;
            mul *= p_;
        }
        return r;
    }

    u64 neg(u64 a) const {
        if (e_ == 1) return (p_ - a) % p_;
        if (p_ == 2) return a;
        u64 r = 0, mul = 1;
        for (u64 i = 0; i < e_; ++i) {
            r += ((p_ - a % p_) % p_) * mul;
            a /= p_;
            mul *= p_;
        }
        return r;
    }

    u64 sub(u64 a, u64 b) const { return add(a, neg(b)); }

    u64 mul(u64 a, u64 b) const {
        if (a == 0 || b == 0) return 0;
        if (has_log_table()) return exp_[(log_[a] + log_[b]) % (order_ - 1)];
        return mul_generic(a, b);
    }

    u64 inv(u64 a) const {
        if (a == 0) raise(errc::divisor_zero, "inverse of zero");
        if (has_log_table()) return exp_[(order_ - 1 - log_[a]) % (order_ - 1)];
        return pow(a, order_ - 2);
    }

    u64 pow(u64 a, u64 k) const {
        if (a == 0) return k == 0 ? 1 : 0;
        k %= order_ - 1;
        if (has_log_table()) return exp_[(log_[a] % (order_ - 1)) * (k % (order_ - 1)) % (order_ - 1)];
        u64 r = 1;
        while (k) {
            if (k & 1) r = mul_generic_or_prime(r, a);
            a = mul_generic_or_prime(a, a);
            k >>= 1;
        }
        return r;
    }

    /// generator^k (k reduced mod order-1).
    u64 gen_pow(u64 k) const {
        k %= order_ - 1;
        if (has_log_table()) return exp_[k];
        return pow(gen_, k);
    }

    /// Discrete log base the distinguished generator; table fields only.
    u64 log(u64 a) const {
        if (a == 0) raise(errc::divisor_zero, "log of zero");
        if (!has_log_table()) raise(errc::capacity_exceeded, "no log table for field of this size");
        return log_[a];
    }

    /// Multiplicative order of a nonzero element.
    u64 element_order(u64 a) const {
        if (a == 0) raise(errc::divisor_zero, "order of zero");
        u64 ord = order_ - 1;
        for (u64 f : order_factors_) {
            while (ord % f == 0 && pow(a, ord / f) == 1) ord /= f;
        }
        return ord;
    }

    std::vector<u64> unpack(u64 code) const {
        std::vector<u64> c(e_);
        for (u64 i = 0; i < e_; ++i) {
            c[i] = code % p_;
            code /= p_;
        }
        return c;
    }

    u64 pack(const std::vector<u64>& coeffs) const {
        u64 code = 0, mul = 1;
        for (u64 i = 0; i < e_ && i < coeffs.size(); ++i) {
            code += (coeffs[i] % p_) * mul;
            mul *= p_;
        }
        return code;
    }

  private:
    Field(u64 p, u64 e, u64 order) : p_(p), e_(e), order_(order) {
        order_factors_ = prime_factors(order_ - 1 == 0 ? 1 : order_ - 1);
        if (order_ == 2) {
            modulus_ = {1, 1}; // x + 1; F_2* is trivial, generator 1
            gen_ = 1;
        } else if (e_ == 1) {
            gen_ = smallest_primitive_root();
            modulus_ = {(p_ - gen_) % p_, 1};
        } else {
            select_modulus();
            gen_ = p_; // residue class of x
        }
        if (order_ <= kLogTableLimit) build_tables();
    }

    u64 smallest_primitive_root() const {
        for (u64 g = 2; g < p_; ++g) {
            bool ok = true;
            for (u64 f : order_factors_) {
                if (mod_pow_prime(g, (p_ - 1) / f) == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) return g;
        }
        return 1;
    }

    u64 mod_pow_prime(u64 a, u64 k) const {
        u64 r = 1;
        a %= p_;
        while (k) {
            if (k & 1) r = (r * a) % p_;
            a = (a * a) % p_;
            k >>= 1;
        }
        return r;
    }

    // Lexicographically smallest (low-to-high base-p digits) monic primitive
    // polynomial of degree e: irreducible over F_p with x of full order.
    void select_modulus() {
        for (u64 v = 1;; ++v) {
            detail::FpPoly f = unpack_raw(v);
            if (f[0] == 0) continue; // divisible by x
            f.resize(e_ + 1, 0);
            f[e_] = 1;
            if (!detail::fp_irreducible(f, p_)) continue;
            bool primitive = true;
            for (u64 fac : order_factors_) {
                detail::FpPoly t = detail::fp_powmod({0, 1}, (order_ - 1) / fac, f, p_);
                if (t.size() == 1 && t[0] == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) {
                modulus_ = f;
                return;
            }
        }
    }

    detail::FpPoly unpack_raw(u64 v) const {
        detail::FpPoly c(e_, 0);
        for (u64 i = 0; i < e_; ++i) {
            c[i] = v % p_;
            v /= p_;
        }
        return c;
    }

    u64 mul_generic(u64 a, u64 b) const {
        if (e_ == 1) return (a * b) % p_;
        detail::FpPoly pa = unpack(a), pb = unpack(b);
        detail::fp_trim(pa);
        detail::fp_trim(pb);
        detail::FpPoly c = detail::fp_mulmod(pa, pb, modulus_, p_);
        return pack(c);
    }

    u64 mul_generic_or_prime(u64 a, u64 b) const {
        if (a == 0 || b == 0) return 0;
        return mul_generic(a, b);
    }

    void build_tables() {
        exp_.assign(order_ - 1, 0);
        log_.assign(order_, 0);
        u64 cur = 1;
        for (u64 i = 0; i + 1 < order_; ++i) {
            exp_[i] = cur;
            log_[cur] = i;
            cur = mul_generic_or_prime(cur, gen_);
        }
        if (cur != 1)
            raise(errc::internal_error, "distinguished generator does not have full order");
    }

    u64 p_, e_, order_, gen_ = 0;
    std::vector<u64> modulus_;
    std::vector<u64> order_factors_;
    std::vector<u64> exp_, log_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// An element bound to its owning field; arithmetic across fields is rejected.
struct FieldElement {
    FieldPtr field;
    u64 code = 0;

    FieldElement() = default;
    FieldElement(FieldPtr f, u64 c) : field(std::move(f)), code(c) {}

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        check(a, b);
        return {a.field, a.field->add(a.code, b.code)};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        check(a, b);
        return {a.field, a.field->sub(a.code, b.code)};
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        check(a, b);
        return {a.field, a.field->mul(a.code, b.code)};
    }
    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.field.get() == b.field.get() && a.code == b.code;
    }

    static void check(const FieldElement& a, const FieldElement& b) {
        if (a.field.get() != b.field.get())
            raise(errc::mixed_fields, "elements belong to different fields");
    }
};

/// true iff x lies in the subfield of the stated order: x^{small_order} == x.
inline bool element_in_subfield(const Field& f, u64 code, u64 small_order) {
    u64 d = 0, acc = 1;
    while (acc < small_order) {
        acc *= f.characteristic();
        ++d;
    }
    if (acc != small_order || d == 0 || f.extension_degree() % d != 0)
        raise(errc::not_a_subfield,
              std::to_string(small_order) + " does not index a subfield of order " + std::to_string(f.order()));
    return f.pow(code, small_order) == code;
}

/// The injection of F_{small_order} into a bigger field, defined by sending
/// the subfield generator to g^{(Q-1)/(small_order-1)} for the big field's
/// distinguished generator g, extended multiplicatively (0 maps to 0).
class SubfieldEmbedding {
  public:
    SubfieldEmbedding(FieldPtr big, u64 small_order) : big_(std::move(big)), small_order_(small_order) {
        u64 Q = big_->order();
        u64 d = 0, acc = 1;
        while (acc < small_order_) {
            acc *= big_->characteristic();
            ++d;
        }
        if (acc != small_order_ || d == 0 || big_->extension_degree() % d != 0 ||
            (Q - 1) % (small_order_ - 1) != 0)
            raise(errc::not_a_subfield, "F_" + std::to_string(small_order_) + " is not a subfield of F_" +
                                            std::to_string(Q));
        gen_image_ = big_->gen_pow((Q - 1) / (small_order_ - 1));
    }

    u64 small_order() const { return small_order_; }
    u64 generator_image() const { return gen_image_; }
    const Field& big() const { return *big_; }

    /// Map an element of the small field (by code) into the big field.
    u64 map(const Field& small, u64 code) const {
        if (small.order() != small_order_)
            raise(errc::mixed_fields, "embedding domain has a different order");
        if (code == 0) return 0;
        return big_->pow(gen_image_, small.log(code));
    }

    /// All small_order elements of the embedded image.
    std::vector<u64> image() const {
        std::vector<u64> img{0};
        u64 cur = 1;
        for (u64 t = 0; t + 1 < small_order_; ++t) {
            img.push_back(cur);
            cur = big_->mul(cur, gen_image_);
        }
        return img;
    }

  private:
    FieldPtr big_;
    u64 small_order_;
    u64 gen_image_;
};

inline SubfieldEmbedding subfield_embedding(FieldPtr big, u64 small_order) {
    return SubfieldEmbedding(std::move(big), small_order);
}

} // namespace ccbch

#endif
