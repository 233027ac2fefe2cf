#include <stdexcept>

#include "dsprim/poly.hpp"

// Multivariate gcd over Q by the classical route: scale to integer-primitive,
// recurse on a main variable with the subresultant pseudo-remainder sequence
// (Knuth vol. 2, 4.6.1, Algorithm C), contents handled recursively.

namespace dsprim {

namespace {

// last variable occurring in a or b, or -1 if both are constants
int pick_main_var(const Poly& a, const Poly& b) {
    for (size_t i = a.nvars(); i-- > 0;)
        if (a.uses_var(i) || b.uses_var(i)) return int(i);
    return -1;
}

Poly gcd_list(const std::vector<Poly>& polys, const VarsPtr& vars);

// pseudo-remainder of a by b w.r.t. var (deg_var a >= deg_var b >= 0)
Poly prem(const Poly& a, const Poly& b, size_t var) {
    auto ua = a.univariate_in(var);
    auto ub = b.univariate_in(var);
    long da = a.degree_in(var), db = b.degree_in(var);
    Poly lb = ub.rbegin()->second;  // leading coefficient of b in var
    std::map<int, Poly> rem = ua;
    long dr = da;
    long scale_left = da - db + 1;  // keep the exact lc^(deg a - deg b + 1) factor
    auto deg_of = [&](const std::map<int, Poly>& m) -> long {
        return m.empty() ? -1 : m.rbegin()->first;
    };
    while (dr >= db) {
        Poly lr = rem.rbegin()->second;
        // rem = lb*rem - lr*v^(dr-db)*b
        std::map<int, Poly> next;
        for (auto& [d, c] : rem) {
            Poly t = c * lb;
            if (!t.is_zero()) next[d] = std::move(t);
        }
        for (const auto& [d, c] : ub) {
            long td = d + (dr - db);
            Poly t = c * lr;
            auto it = next.find(int(td));
            if (it == next.end()) {
                if (!t.is_zero()) next[int(td)] = -t;
            } else {
                it->second -= t;
                if (it->second.is_zero()) next.erase(it);
            }
        }
        rem = std::move(next);
        --scale_left;
        dr = deg_of(rem);
        if (dr < 0) break;
    }
    Poly r = Poly::from_univariate(a.vars(), var, rem);
    for (long i = 0; i < scale_left; ++i) r = r * lb;
    return r;
}

// both inputs integer-primitive, at least one non-constant
Poly gcd_rec(Poly a, Poly b) {
    const VarsPtr& vars = a.vars();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int mv = pick_main_var(a, b);
    if (mv < 0) return Poly::one(vars);
    size_t v = size_t(mv);
    long da = a.degree_in(v), db = b.degree_in(v);

    // variable missing from one side: gcd goes through that side's content
    auto content_in = [&](const Poly& p) {
        auto u = p.univariate_in(v);
        std::vector<Poly> cs;
        cs.reserve(u.size());
        for (auto& [d, c] : u) cs.push_back(c);
        return gcd_list(cs, vars);
    };
    if (da == 0) return gcd_rec(a, content_in(b));
    if (db == 0) return gcd_rec(content_in(a), b);

    Poly ca = content_in(a), cb = content_in(b);
    Poly c = gcd_rec(ca, cb);
    a = a.divexact(ca);
    b = b.divexact(cb);
    if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);

    Poly g = Poly::one(vars), h = Poly::one(vars);
    while (true) {
        long d = a.degree_in(v) - b.degree_in(v);
        Poly r = prem(a, b, v);
        if (r.is_zero()) break;
        if (r.degree_in(v) == 0) {
            b = Poly::one(vars);
            break;
        }
        a = b;
        Poly divisor = g;
        for (long i = 0; i < d; ++i) divisor = divisor * h;
        b = r.divexact(divisor);
        g = a.univariate_in(v).rbegin()->second;
        if (d > 0) {
            Poly gd = g.pow(unsigned(d));
            Poly hd = d > 1 ? h.pow(unsigned(d - 1)) : Poly::one(vars);
            h = gd.divexact(hd);
        }
    }
    Poly pp = b.divexact(content_in(b));
    return (c * pp).integer_primitive();
}

Poly gcd_list(const std::vector<Poly>& polys, const VarsPtr& vars) {
    Poly g = Poly::zero(vars);
    for (const auto& p : polys) {
        g = poly_gcd(g, p);
        if (g.is_constant() && !g.is_zero()) return Poly::one(vars);
    }
    return g;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (!same_vars(a.vars(), b.vars())) throw std::invalid_argument("poly ring mismatch");
    if (a.is_zero()) return b.integer_primitive();
    if (b.is_zero()) return a.integer_primitive();
    Poly pa = a.integer_primitive(), pb = b.integer_primitive();
    if (pa.is_constant() || pb.is_constant()) return Poly::one(a.vars());
    return gcd_rec(pa, pb).integer_primitive();
}

Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.vars());
    Poly g = poly_gcd(a, b);
    return (a.divexact(g) * b).integer_primitive();
}

}  // namespace dsprim
