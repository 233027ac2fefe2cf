#include "dsprim/ratfunc.hpp"

#include <stdexcept>

namespace dsprim {

RatFunc RatFunc::normalized(Poly num, Poly den) {
    if (!same_vars(num.vars(), den.vars())) throw std::invalid_argument("poly ring mismatch");
    if (den.is_zero()) throw ZeroDenominator();
    RatFunc r(num.vars());
    if (num.is_zero()) return r;
    Poly g = poly_gcd(num, den);
    num = num.divexact(g);
    den = den.divexact(g);
    auto [e, lc] = den.leading_term(MonomialOrder::grevlex(den.nvars()));
    Rational inv = lc.inverse();
    num *= inv;
    den *= inv;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
}

RatFunc RatFunc::from_poly(Poly p) {
    RatFunc r(p.vars());
    r.num_ = std::move(p);
    return r;
}

RatFunc RatFunc::operator-() const {
    RatFunc r(vars());
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc::normalized(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc::normalized(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc::normalized(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw ZeroDenominator();
    return RatFunc::normalized(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw ZeroDenominator();
    return RatFunc::normalized(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
    if (e == 0) return RatFunc::one(vars());
    RatFunc base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? -(unsigned long)e : (unsigned long)e;
    // num and den are coprime, so powers stay canonical up to den scaling
    RatFunc r(vars());
    r.num_ = base.num_.pow(k);
    r.den_ = base.den_.pow(k);
    auto [ex, lc] = r.den_.leading_term(MonomialOrder::grevlex(r.den_.nvars()));
    Rational inv = lc.inverse();
    r.num_ *= inv;
    r.den_ *= inv;
    return r;
}

RatFunc RatFunc::partial(size_t var) const {
    // (n/d)' = (n'd - nd')/d^2
    return RatFunc::normalized(num_.derivative(var) * den_ - num_ * den_.derivative(var),
                               den_ * den_);
}

std::vector<bool> RatFunc::vars_used() const {
    std::vector<bool> used = num_.vars_used();
    std::vector<bool> du = den_.vars_used();
    for (size_t i = 0; i < used.size(); ++i) used[i] = used[i] || du[i];
    return used;
}

std::string RatFunc::str() const {
    if (is_polynomial()) return num_.str();
    std::string n = num_.num().term_count() > 1 ? "(" + num_.str() + ")" : num_.str();
    return n + "/(" + den_.str() + ")";
}

RatFunc eval_poly(const Poly& p, const std::vector<RatFunc>& images) {
    if (images.size() != p.nvars()) throw std::invalid_argument("image count mismatch");
    VarsPtr tvars = images.empty() ? p.vars() : images[0].vars();
    RatFunc acc = RatFunc::zero(tvars);
    // cache powers per variable
    std::vector<std::vector<RatFunc>> powers(images.size());
    for (size_t i = 0; i < images.size(); ++i) powers[i].push_back(RatFunc::one(tvars));
    auto power = [&](size_t i, int e) -> const RatFunc& {
        while ((int)powers[i].size() <= e) powers[i].push_back(powers[i].back() * images[i]);
        return powers[i][e];
    };
    for (const auto& [e, c] : p.terms()) {
        RatFunc term(tvars, c);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) term *= power(i, e[i]);
        acc += term;
    }
    return acc;
}

RatFunc eval_ratfunc(const RatFunc& f, const std::vector<RatFunc>& images) {
    RatFunc n = eval_poly(f.num(), images);
    RatFunc d = eval_poly(f.den(), images);
    if (d.is_zero()) throw ZeroDenominator();
    return n / d;
}

}  // namespace dsprim
