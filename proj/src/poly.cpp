#include "dsprim/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace dsprim {

Poly Poly::constant(VarsPtr vars, const Rational& c) {
    Poly p(std::move(vars));
    if (!c.is_zero()) p.terms_.emplace(Exp(p.nvars(), 0), c);
    return p;
}

Poly Poly::variable(VarsPtr vars, size_t index, int power) {
    Poly p(std::move(vars));
    if (index >= p.nvars()) throw std::out_of_range("variable index");
    Exp e(p.nvars(), 0);
    e[index] = power;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

Poly Poly::monomial(VarsPtr vars, Exp e, const Rational& c) {
    Poly p(std::move(vars));
    if (e.size() != p.nvars()) throw std::invalid_argument("exponent arity mismatch");
    if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

Rational Poly::constant_value() const {
    Exp zero(nvars(), 0);
    auto it = terms_.find(zero);
    return it == terms_.end() ? Rational(0) : it->second;
}

long Poly::degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) {
        long t = total_degree(e);
        if (t > d) d = t;
    }
    return d;
}

long Poly::degree_in(size_t var) const {
    if (terms_.empty()) return -1;
    long d = 0;
    for (const auto& [e, c] : terms_)
        if (e[var] > d) d = e[var];
    return d;
}

bool Poly::uses_var(size_t var) const {
    for (const auto& [e, c] : terms_)
        if (e[var] > 0) return true;
    return false;
}

std::vector<bool> Poly::vars_used() const {
    std::vector<bool> used(nvars(), false);
    for (const auto& [e, c] : terms_)
        for (size_t i = 0; i < used.size(); ++i)
            if (e[i] > 0) used[i] = true;
    return used;
}

void Poly::add_term(const Exp& e, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (!same_vars(vars_, o.vars_)) throw std::invalid_argument("poly ring mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (!same_vars(vars_, o.vars_)) throw std::invalid_argument("poly ring mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (!same_vars(a.vars_, b.vars_)) throw std::invalid_argument("poly ring mismatch");
    Poly r(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(exp_add(ea, eb), ca * cb);
    return r;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Poly Poly::pow(unsigned long e) const {
    Poly r = Poly::one(vars_);
    Poly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

std::pair<Exp, Rational> Poly::leading_term(const MonomialOrder& ord) const {
    if (terms_.empty()) throw std::logic_error("leading term of zero");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (ord.less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

Poly Poly::derivative(size_t var) const {
    Poly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exp d(e);
        d[var] -= 1;
        r.add_term(d, c * Rational(e[var]));
    }
    return r;
}

Poly Poly::divexact(const Poly& divisor) const {
    if (!same_vars(vars_, divisor.vars_)) throw std::invalid_argument("poly ring mismatch");
    if (divisor.is_zero()) throw std::logic_error("division by zero polynomial");
    MonomialOrder ord = MonomialOrder::grevlex(nvars());
    auto [le, lc] = divisor.leading_term(ord);
    Poly rem = *this;
    Poly quot(vars_);
    while (!rem.is_zero()) {
        auto [re, rc] = rem.leading_term(ord);
        if (!divides(le, re)) throw std::logic_error("inexact polynomial division");
        Exp qe = exp_sub(re, le);
        Rational qc = rc / lc;
        quot.add_term(qe, qc);
        rem -= Poly::monomial(vars_, qe, qc) * divisor;
    }
    return quot;
}

Poly Poly::integer_primitive() const {
    if (is_zero()) return *this;
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& [e, c] : terms_) den_lcm = int_lcm(den_lcm, c.den());
    for (const auto& [e, c] : terms_) num_gcd = int_gcd(num_gcd, c.num() * (den_lcm / c.den()));
    Rational scale(den_lcm, num_gcd);
    Poly r = *this;
    r *= scale;
    auto [e, c] = r.leading_term(MonomialOrder::grevlex(nvars()));
    if (c.sign() < 0) r *= Rational(-1);
    return r;
}

std::map<int, Poly> Poly::univariate_in(size_t var) const {
    std::map<int, Poly> out;
    for (const auto& [e, c] : terms_) {
        int d = e[var];
        Exp rest(e);
        rest[var] = 0;
        auto it = out.find(d);
        if (it == out.end()) it = out.emplace(d, Poly(vars_)).first;
        it->second.add_term(rest, c);
    }
    return out;
}

Poly Poly::from_univariate(VarsPtr vars, size_t var, const std::map<int, Poly>& coeffs) {
    Poly r(vars);
    for (const auto& [d, p] : coeffs) {
        for (const auto& [e, c] : p.terms()) {
            Exp full(e);
            full[var] += d;
            r.add_term(full, c);
        }
    }
    return r;
}

Poly Poly::lift(const VarsPtr& target, const std::vector<size_t>& position) const {
    Poly r(target);
    for (const auto& [e, c] : terms_) {
        Exp t(target->size(), 0);
        for (size_t i = 0; i < e.size(); ++i) t[position[i]] = e[i];
        r.terms_.emplace(std::move(t), c);
    }
    return r;
}

Poly Poly::restrict_to(const VarsPtr& target) const {
    std::vector<size_t> position(nvars(), size_t(-1));
    for (size_t i = 0; i < nvars(); ++i)
        if (target->contains(vars_->name(i))) position[i] = target->index_of(vars_->name(i));
    Poly r(target);
    for (const auto& [e, c] : terms_) {
        Exp t(target->size(), 0);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (position[i] == size_t(-1))
                throw std::invalid_argument("restrict_to drops used variable " + vars_->name(i));
            t[position[i]] = e[i];
        }
        r.add_term(t, c);
    }
    return r;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    MonomialOrder ord = MonomialOrder::grevlex(nvars());
    std::vector<const std::pair<const Exp, Rational>*> sorted;
    for (const auto& t : terms_) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(),
              [&](auto* a, auto* b) { return ord.greater(a->first, b->first); });
    std::ostringstream os;
    bool first = true;
    for (auto* t : sorted) {
        const auto& [e, c] = *t;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool has_vars = total_degree(e) > 0;
        if (!a.is_one() || !has_vars) {
            os << a.str();
            if (has_vars) os << "*";
        }
        bool firstv = true;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!firstv) os << "*";
            firstv = false;
            os << vars_->name(i);
            if (e[i] != 1) os << "^" << e[i];
        }
    }
    return os.str();
}

}  // namespace dsprim
