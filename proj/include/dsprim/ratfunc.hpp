#ifndef DSPRIM_RATFUNC_HPP
#define DSPRIM_RATFUNC_HPP

#include <string>

#include "dsprim/poly.hpp"

namespace dsprim {

/// Rational function num/den in canonical form: gcd(num, den) = 1, den has
/// grevlex-leading coefficient 1, and zero is 0/1. Equal fractions compare
/// equal structurally.
class RatFunc {
public:
    explicit RatFunc(VarsPtr vars)
        : num_(Poly::zero(vars)), den_(Poly::one(std::move(vars))) {}
    RatFunc(VarsPtr vars, const Rational& c)
        : num_(Poly::constant(vars, c)), den_(Poly::one(std::move(vars))) {}

    /// Reduce and normalize; throws ZeroDenominator if den = 0.
    static RatFunc normalized(Poly num, Poly den);
    static RatFunc from_poly(Poly p);
    static RatFunc zero(VarsPtr vars) { return RatFunc(std::move(vars)); }
    static RatFunc one(VarsPtr vars) { return RatFunc(std::move(vars), Rational(1)); }
    static RatFunc variable(VarsPtr vars, size_t index) {
        return from_poly(Poly::variable(std::move(vars), index));
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const VarsPtr& vars() const { return num_.vars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc inverse() const;
    RatFunc pow(long e) const;

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    /// Partial derivative w.r.t. a ring variable (quotient rule).
    RatFunc partial(size_t var) const;

    /// Total degree bound max(deg num, deg den); -1 for zero.
    long height_degree() const { return std::max(num_.degree(), den_.degree()); }

    std::vector<bool> vars_used() const;

    RatFunc lift(const VarsPtr& target, const std::vector<size_t>& position) const {
        RatFunc r(target);
        r.num_ = num_.lift(target, position);
        r.den_ = den_.lift(target, position);
        return r;
    }
    RatFunc restrict_to(const VarsPtr& target) const {
        RatFunc r(target);
        r.num_ = num_.restrict_to(target);
        r.den_ = den_.restrict_to(target);
        return r;
    }

    std::string str() const;

private:
    Poly num_, den_;
};

/// Evaluate a polynomial at rational-function images of its variables.
/// `images[i]` substitutes variable i; all images share one ring.
RatFunc eval_poly(const Poly& p, const std::vector<RatFunc>& images);

/// Evaluate num/den at images; throws ZeroDenominator if the denominator
/// image vanishes.
RatFunc eval_ratfunc(const RatFunc& f, const std::vector<RatFunc>& images);

}  // namespace dsprim

#endif
