#ifndef DSPRIM_ORDER_HPP
#define DSPRIM_ORDER_HPP

#include <vector>

namespace dsprim {

using Exp = std::vector<int>;

/// Monomial order: graded reverse lexicographic within consecutive blocks,
/// blocks compared in ascending block-id order (block 0 dominates).
/// A single block gives plain grevlex; two blocks give the product
/// (elimination) order that eliminates the variables of block 0.
class MonomialOrder {
public:
    MonomialOrder() = default;
    explicit MonomialOrder(std::vector<int> block_of) : block_of_(std::move(block_of)) {}

    static MonomialOrder grevlex(size_t nvars) { return MonomialOrder(std::vector<int>(nvars, 0)); }

    /// Elimination order: variables flagged true form the dominating block.
    static MonomialOrder eliminating(const std::vector<bool>& eliminate) {
        std::vector<int> blocks(eliminate.size());
        for (size_t i = 0; i < eliminate.size(); ++i) blocks[i] = eliminate[i] ? 0 : 1;
        return MonomialOrder(std::move(blocks));
    }

    const std::vector<int>& blocks() const { return block_of_; }

    // strict "a < b" in the monomial order
    bool less(const Exp& a, const Exp& b) const {
        int maxblock = 0;
        for (int bl : block_of_) maxblock = bl > maxblock ? bl : maxblock;
        for (int bl = 0; bl <= maxblock; ++bl) {
            int c = cmp_block(a, b, bl);
            if (c != 0) return c < 0;
        }
        return false;
    }

    bool greater(const Exp& a, const Exp& b) const { return less(b, a); }
    bool equal(const Exp& a, const Exp& b) const { return !less(a, b) && !less(b, a); }

private:
    // grevlex comparison restricted to one block; -1, 0, +1
    int cmp_block(const Exp& a, const Exp& b, int bl) const {
        long da = 0, db = 0;
        for (size_t i = 0; i < block_of_.size(); ++i) {
            if (block_of_[i] != bl) continue;
            da += a[i];
            db += b[i];
        }
        if (da != db) return da < db ? -1 : 1;
        // reverse lex: scan from the last variable; smaller exponent there wins
        for (size_t i = block_of_.size(); i-- > 0;) {
            if (block_of_[i] != bl) continue;
            if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
        }
        return 0;
    }

    std::vector<int> block_of_;
};

inline long total_degree(const Exp& e) {
    long d = 0;
    for (int x : e) d += x;
    return d;
}

inline bool divides(const Exp& a, const Exp& b) {  // a | b componentwise
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Exp exp_add(const Exp& a, const Exp& b) {
    Exp r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline Exp exp_sub(const Exp& a, const Exp& b) {
    Exp r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

inline Exp exp_lcm(const Exp& a, const Exp& b) {
    Exp r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] < b[i] ? b[i] : r[i];
    return r;
}

}  // namespace dsprim

#endif
