#ifndef DSPRIM_POLY_HPP
#define DSPRIM_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dsprim/order.hpp"
#include "dsprim/rational.hpp"
#include "dsprim/vars.hpp"

namespace dsprim {

/// Sparse multivariate polynomial over Q. Zero coefficients are never stored;
/// every exponent vector has the arity of the shared variable list.
class Poly {
public:
    using TermMap = std::map<Exp, Rational>;

    explicit Poly(VarsPtr vars) : vars_(std::move(vars)) {}

    static Poly zero(VarsPtr vars) { return Poly(std::move(vars)); }
    static Poly constant(VarsPtr vars, const Rational& c);
    static Poly one(VarsPtr vars) { return constant(std::move(vars), Rational(1)); }
    static Poly variable(VarsPtr vars, size_t index, int power = 1);
    static Poly monomial(VarsPtr vars, Exp e, const Rational& c);

    const VarsPtr& vars() const { return vars_; }
    size_t nvars() const { return vars_->size(); }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (the value if is_constant()).
    Rational constant_value() const;

    long degree() const;               // total degree; -1 for zero
    long degree_in(size_t var) const;  // -1 for zero
    bool uses_var(size_t var) const;
    std::vector<bool> vars_used() const;

    void add_term(const Exp& e, const Rational& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const Rational& c);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    Poly pow(unsigned long e) const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return same_vars(a.vars_, b.vars_) && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Leading term under the given order.
    std::pair<Exp, Rational> leading_term(const MonomialOrder& ord) const;

    Poly derivative(size_t var) const;

    /// Exact division; throws std::logic_error if not divisible.
    Poly divexact(const Poly& divisor) const;

    /// Scale so all coefficients are coprime integers and the grevlex-leading
    /// coefficient is positive. Zero stays zero.
    Poly integer_primitive() const;

    /// View as univariate in `var`: coefficient polynomials by degree.
    std::map<int, Poly> univariate_in(size_t var) const;
    /// Rebuild from univariate view.
    static Poly from_univariate(VarsPtr vars, size_t var, const std::map<int, Poly>& coeffs);

    /// Re-embed into a superset variable ring; `position` maps this ring's
    /// variable index to the target index.
    Poly lift(const VarsPtr& target, const std::vector<size_t>& position) const;
    /// Restrict to a ring containing only the used variables; throws if a
    /// used variable is missing from `target`.
    Poly restrict_to(const VarsPtr& target) const;

    std::string str() const;  // deterministic: grevlex-descending terms

private:
    VarsPtr vars_;
    TermMap terms_;
};

/// gcd over Q[vars], normalized integer-primitive with positive grevlex-leading
/// coefficient; gcd(0,0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

Poly poly_lcm(const Poly& a, const Poly& b);

}  // namespace dsprim

#endif
