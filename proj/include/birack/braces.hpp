// Finite skew braces: two group structures (+, o) on one carrier with the
// compatibility law a o (b+c) = (a o b) - a + (a o c), the associated braid
// solution r(x,y) = (-x + x o y, (-x + x o y)' o x o y), and its derived
// rack, which is conjugation in (A,+).

#pragma once

#include "solution.hpp"

namespace birack {

// raw file/fixture form before any axiom has been verified
struct brace_tables {
    op_table add, circ;
    int zero = 0;
};

struct skew_brace {
    int n = 0;
    op_table add, circ;
    int zero = 0;
    permutation neg;   // additive inverse
    permutation cinv;  // circle inverse a'
};

struct brace_violation {
    std::string law;  // "add_group", "circ_group", "compatibility"
    std::string axiom;
    triple where;
};

inline std::optional<permutation> inverse_permutation_of(const op_table& mult, int e) {
    std::vector<int> inv(mult.n, -1);
    for (int x = 0; x < mult.n; ++x) {
        for (int y = 0; y < mult.n; ++y)
            if (mult.at(x, y) == e && mult.at(y, x) == e) {
                inv[x] = y;
                break;
            }
        if (inv[x] == -1) return std::nullopt;
    }
    if (!is_permutation_image(inv)) return std::nullopt;
    return permutation(std::move(inv));
}

inline std::optional<brace_violation> brace_violation_of(const brace_tables& b) {
    const int n = b.add.n;
    if (b.circ.n != n || b.zero < 0 || b.zero >= n)
        throw validation_error("brace: shape mismatch");

    auto neg = inverse_permutation_of(b.add, b.zero);
    if (!neg) return brace_violation{"add_group", "inverse", {0, 0, 0}};
    if (auto v = group_check(b.add, *neg, b.zero))
        return brace_violation{"add_group", v->axiom, v->where};

    auto cinv = inverse_permutation_of(b.circ, b.zero);
    if (!cinv) return brace_violation{"circ_group", "inverse", {0, 0, 0}};
    if (auto v = group_check(b.circ, *cinv, b.zero))
        return brace_violation{"circ_group", v->axiom, v->where};

    // a o (b+c) = (a o b) - a + (a o c)
    for (int a = 0; a < n; ++a)
        for (int x = 0; x < n; ++x)
            for (int c = 0; c < n; ++c) {
                const int lhs = b.circ.at(a, b.add.at(x, c));
                const int rhs = b.add.at(b.add.at(b.circ.at(a, x), (*neg)(a)), b.circ.at(a, c));
                if (lhs != rhs) return brace_violation{"compatibility", "", {a, x, c}};
            }
    return std::nullopt;
}

inline skew_brace make_skew_brace(const brace_tables& b) {
    if (auto v = brace_violation_of(b))
        throw not_a_skew_brace("make_skew_brace: " + v->law +
                               (v->axiom.empty() ? "" : " (" + v->axiom + ")") + " fails at " +
                               triple_str(v->where));
    return skew_brace{b.add.n, b.add, b.circ, b.zero, *inverse_permutation_of(b.add, b.zero),
                      *inverse_permutation_of(b.circ, b.zero)};
}

inline bool skew_brace_check(const brace_tables& b) { return !brace_violation_of(b); }

inline bool skew_brace_check(const skew_brace& B) {
    return !brace_violation_of(brace_tables{B.add, B.circ, B.zero});
}

// r(x,y) = (-x + x o y, (-x + x o y)' o x o y)
inline solution brace_solution(const skew_brace& B) {
    return solution(op_table::build(B.n, [&](int x, int y) {
                        return B.add.at(B.neg(x), B.circ.at(x, y));
                    }),
                    op_table::build(B.n, [&](int x, int y) {
                        const int w = B.add.at(B.neg(x), B.circ.at(x, y));
                        return B.circ.at(B.circ.at(B.cinv(w), x), y);
                    }));
}

// a.b = a' o (a+b)
inline op_table brace_dot(const skew_brace& B) {
    return op_table::build(B.n, [&](int a, int b) { return B.circ.at(B.cinv(a), B.add.at(a, b)); });
}

// x<|y = -y + x + y, conjugation in (A,+)
inline op_table brace_derived_rack(const skew_brace& B) {
    return op_table::build(
        B.n, [&](int x, int y) { return B.add.at(B.add.at(B.neg(y), x), y); });
}

// bundled fixtures

inline brace_tables trivial_brace(const group_table& g) {
    return brace_tables{g.mult, g.mult, g.e};
}

// Z4 with a o b = a + b + 2ab
inline brace_tables z4_two_ab_brace() {
    const group_table z4 = cyclic_group(4);
    op_table circ = op_table::build(4, [](int a, int b) { return (a + b + 2 * a * b) % 4; });
    return brace_tables{z4.mult, std::move(circ), 0};
}

}  // namespace birack
