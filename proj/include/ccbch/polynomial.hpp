#ifndef CCBCH_POLYNOMIAL_HPP
#define CCBCH_POLYNOMIAL_HPP

#include <utility>
#include <vector>

#include "ccbch/field.hpp"

namespace ccbch {

/// Polynomial over a Field, coefficients lowest degree first (element codes).
/// The zero polynomial has an empty coefficient list.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(FieldPtr f) : f_(std::move(f)) {}
    Polynomial(FieldPtr f, std::vector<u64> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) { trim(); }

    static Polynomial zero(FieldPtr f) { return Polynomial(std::move(f)); }
    static Polynomial one(FieldPtr f) { return Polynomial(std::move(f), {1}); }
    /// x - a
    static Polynomial linear_root(FieldPtr f, u64 a) {
        u64 na = f->neg(a);
        return Polynomial(std::move(f), {na, 1});
    }

    const FieldPtr& field() const { return f_; }
    const std::vector<u64>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    u64 coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.f_.get() == b.f_.get() && a.c_ == b.c_;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        check(a, b);
        std::vector<u64> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.f_->add(a.coeff(i), b.coeff(i));
        return Polynomial(a.f_, std::move(c));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        check(a, b);
        std::vector<u64> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.f_->sub(a.coeff(i), b.coeff(i));
        return Polynomial(a.f_, std::move(c));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        check(a, b);
        if (a.is_zero() || b.is_zero()) return Polynomial(a.f_);
        std::vector<u64> c(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] = a.f_->add(c[i + j], a.f_->mul(a.c_[i], b.c_[j]));
        }
        return Polynomial(a.f_, std::move(c));
    }

    /// (quotient, remainder) with deg(remainder) < deg(divisor).
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        check(a, b);
        if (b.is_zero()) raise(errc::divisor_zero, "polynomial division by zero");
        if (a.degree() < b.degree()) return {Polynomial(a.f_), a};
        const Field& F = *a.f_;
        const std::size_t db = b.c_.size() - 1;
        u64 lead_inv = F.inv(b.c_.back());
        std::vector<u64> rem = a.c_;
        std::vector<u64> quo(a.c_.size() - db, 0);
        for (std::size_t i = quo.size(); i-- > 0;) {
            u64 q = F.mul(rem[i + db], lead_inv);
            if (q != 0) {
                quo[i] = q;
                for (std::size_t j = 0; j <= db; ++j) rem[i + j] = F.sub(rem[i + j], F.mul(q, b.c_[j]));
            }
        }
        rem.resize(db);
        return {Polynomial(a.f_, std::move(quo)), Polynomial(a.f_, std::move(rem))};
    }

    u64 eval(u64 x) const {
        u64 r = 0;
        for (std::size_t i = c_.size(); i-- > 0;) r = f_->add(f_->mul(r, x), c_[i]);
        return r;
    }

  private:
    static void check(const Polynomial& a, const Polynomial& b) {
        if (a.f_.get() != b.f_.get()) raise(errc::mixed_fields, "polynomials over different fields");
    }

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    FieldPtr f_;
    std::vector<u64> c_;
};

} // namespace ccbch

#endif
