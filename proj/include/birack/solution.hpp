// Solutions sigma(x,y) = (g_x(y), f_y(x)) of the braid equation, their
// (star, dot, triangle) presentation, the derived rack, and the predicates
// classifying non-degeneracy, involutivity and biquandle-ness.

#pragma once

#include "racks.hpp"

namespace birack {

struct solution {
    // G[x][y] = g_x(y), F[x][y] = f_y(x); both indexed (x,y)
    op_table G, F;

    solution() = default;
    solution(op_table g, op_table f) : G(std::move(g)), F(std::move(f)) {
        if (G.n != F.n) throw validation_error("solution: table sizes differ");
    }

    int n() const { return G.n; }

    std::pair<int, int> map(int x, int y) const { return {G.at(x, y), F.at(x, y)}; }

    pair_map as_pair_map() const { return pair_map(G.n, G.t, F.t); }

    static solution from_pair_map(const pair_map& P) {
        return solution(op_table(P.n, P.out1), op_table(P.n, P.out2));
    }

    static solution from_rack(const rack_table& T) { return from_pair_map(rack_solution(T)); }

    bool operator==(const solution&) const = default;
};

inline bool braid_check(const pair_map& P) {
    const int n = P.n;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                // (P x id)(id x P)(P x id), innermost first
                auto [a1, b1] = P(x, y);
                auto [b2, c2] = P(b1, z);
                auto [a3, b3] = P(a1, b2);
                // (id x P)(P x id)(id x P)
                auto [B1, C1] = P(y, z);
                auto [A2, B2] = P(x, B1);
                auto [B3, C3] = P(B2, C1);
                if (a3 != A2 || b3 != B3 || c2 != C3) return false;
            }
    return true;
}

inline bool braid_check(const solution& s) { return braid_check(s.as_pair_map()); }

struct degeneracy {
    bool left = false;   // every g_x bijective
    bool right = false;  // every f_y bijective
};

inline degeneracy nondegeneracy(const solution& s) {
    return degeneracy{row_bijective(s.G), column_bijective(s.F)};
}

inline bool is_left_nondegenerate(const solution& s) { return row_bijective(s.G); }

inline void require_left_nondegenerate(const solution& s, const char* who) {
    if (!is_left_nondegenerate(s))
        throw not_left_nondegenerate(std::string(who) + ": some g_x is not a bijection");
}

// Phi(x,y) = (x, g_x(y))
inline pair_map remarkable_map(const solution& s) {
    require_left_nondegenerate(s, "remarkable_map");
    return pair_map::build(s.n(), [&](int x, int y) {
        return std::pair<int, int>{x, s.G.at(x, y)};
    });
}

// x <| y = g_y(f_{g_x^{-1}(y)}(x)); a rack whenever sigma is a bijective
// braid solution, but defined for every left non-degenerate sigma
inline op_table derived_rack(const solution& s) {
    require_left_nondegenerate(s, "derived_rack");
    const op_table ginv = row_inverse(s.G);
    return op_table::build(s.n(), [&](int x, int y) {
        const int u = ginv.at(x, y);
        return s.G.at(y, s.F.at(x, u));
    });
}

// commutativity of Phi . sigma = c_<| . Phi
inline bool derived_diagram(const solution& s) {
    const pair_map phi = remarkable_map(s);
    const op_table tri = derived_rack(s);
    for (int x = 0; x < s.n(); ++x)
        for (int y = 0; y < s.n(); ++y) {
            auto [a, b] = s.map(x, y);
            auto lhs = phi(a, b);
            auto [px, py] = phi(x, y);
            std::pair<int, int> rhs{py, tri.at(px, py)};
            if (lhs != rhs) return false;
        }
    return true;
}

struct ops_triple {
    op_table star, dot, tri;

    ops_triple(op_table star_, op_table tri_)
        : star(std::move(star_)), dot(row_inverse(star)), tri(std::move(tri_)) {
        if (star.n != tri.n) throw validation_error("ops_triple: table sizes differ");
    }

    // validates dot == row_inverse(star)
    static ops_triple from_tables(op_table star, op_table dot, op_table tri) {
        ops_triple ops(std::move(star), std::move(tri));
        if (ops.dot != dot)
            throw validation_error("ops_triple: dot is not the row inverse of star");
        return ops;
    }

    int n() const { return star.n; }
    bool operator==(const ops_triple&) const = default;
};

inline ops_triple ops_from_solution(const solution& s) {
    require_left_nondegenerate(s, "ops_from_solution");
    return ops_triple(s.G, derived_rack(s));
}

// sigma(x,y) = (x*y, (x*y) . (x <| (x*y)))
inline solution solution_from_ops(const ops_triple& ops) {
    const int n = ops.n();
    op_table F = op_table::build(n, [&](int x, int y) {
        const int s = ops.star.at(x, y);
        return ops.dot.at(s, ops.tri.at(x, s));
    });
    return solution(ops.star, std::move(F));
}

struct theorem_report {
    bool cond1 = false, cond2 = false, cond3 = false;
    bool braid = false;
    std::optional<triple> witness1, witness2, witness3;

    bool conditions() const { return cond1 && cond2 && cond3; }
};

// the three conditions equivalent to the braid equation for a
// left non-degenerate sigma presented by (star, dot, tri)
inline theorem_report theorem1_conditions(const ops_triple& ops) {
    const int n = ops.n();
    const op_table& d = ops.dot;
    const op_table& t = ops.tri;
    theorem_report rep;

    // (y.(x<|y)).(y.z) = (x.y).(x.z)
    for (int x = 0; x < n && !rep.witness1; ++x)
        for (int y = 0; y < n && !rep.witness1; ++y)
            for (int z = 0; z < n; ++z) {
                const int a = d.at(y, t.at(x, y));
                if (d.at(a, d.at(y, z)) != d.at(d.at(x, y), d.at(x, z))) {
                    rep.witness1 = triple{x, y, z};
                    break;
                }
            }
    // x.(-) is a morphism for <|: (x.y)<|(x.z) = x.(y<|z)
    for (int x = 0; x < n && !rep.witness2; ++x)
        for (int y = 0; y < n && !rep.witness2; ++y)
            for (int z = 0; z < n; ++z)
                if (t.at(d.at(x, y), d.at(x, z)) != d.at(x, t.at(y, z))) {
                    rep.witness2 = triple{x, y, z};
                    break;
                }
    rep.witness3 = shelf_violation(t);

    rep.cond1 = !rep.witness1;
    rep.cond2 = !rep.witness2;
    rep.cond3 = !rep.witness3;
    rep.braid = braid_check(solution_from_ops(ops));
    return rep;
}

// sigma^{-1}(x,y) = ((x*y) <|^{-1} x, ((x*y) <|^{-1} x) . x)
inline solution inverse_solution(const solution& s) {
    require_left_nondegenerate(s, "inverse_solution");
    const ops_triple ops = ops_from_solution(s);
    if (!is_rack(ops.tri))
        throw derived_not_rack("inverse_solution: derived table is not a rack, sigma is not bijective");
    const op_table colinv = column_inverse(ops.tri);
    const pair_map inv = pair_map::build(s.n(), [&](int x, int y) {
        const int v = colinv.at(s.G.at(x, y), x);
        return std::pair<int, int>{v, ops.dot.at(v, x)};
    });
    const pair_map orig = s.as_pair_map();
    const pair_map id = pair_map::identity(s.n());
    if (pairmap_compose(orig, inv) != id || pairmap_compose(inv, orig) != id)
        throw formula_mismatch("inverse_solution: closed formula failed to invert sigma");
    return solution::from_pair_map(inv);
}

inline bool is_involutive(const solution& s) {
    const pair_map P = s.as_pair_map();
    return pairmap_compose(P, P) == pair_map::identity(s.n());
}

inline bool is_birack(const solution& s) {
    const degeneracy d = nondegeneracy(s);
    return d.left && d.right && pairmap_bijective(s.as_pair_map()) && braid_check(s);
}

inline void require_birack(const solution& s, const char* who) {
    if (!is_birack(s))
        throw not_a_birack(std::string(who) +
                           ": input is not a birack (bijective non-degenerate braid solution)");
}

// the unique y per x with sigma(x,y) = (x,y), when it exists for all x
inline std::optional<permutation> biquandle_pairing(const solution& s) {
    require_birack(s, "biquandle_pairing");
    std::vector<int> img(s.n(), -1);
    for (int x = 0; x < s.n(); ++x) {
        for (int y = 0; y < s.n(); ++y)
            if (s.map(x, y) == std::pair<int, int>{x, y}) {
                if (img[x] != -1) return std::nullopt;  // not unique
                img[x] = y;
            }
        if (img[x] == -1) return std::nullopt;  // none
    }
    if (!is_permutation_image(img)) return std::nullopt;
    return permutation(std::move(img));
}

// dual form: the unique x per y with sigma(x,y) = (x,y)
inline std::optional<permutation> biquandle_pairing_dual(const solution& s) {
    require_birack(s, "biquandle_pairing_dual");
    std::vector<int> img(s.n(), -1);
    for (int y = 0; y < s.n(); ++y) {
        for (int x = 0; x < s.n(); ++x)
            if (s.map(x, y) == std::pair<int, int>{x, y}) {
                if (img[y] != -1) return std::nullopt;
                img[y] = x;
            }
        if (img[y] == -1) return std::nullopt;
    }
    if (!is_permutation_image(img)) return std::nullopt;
    return permutation(std::move(img));
}

inline bool is_biquandle(const solution& s) { return biquandle_pairing(s).has_value(); }

// x |-> x.x
inline std::vector<int> square_map(const solution& s) {
    require_left_nondegenerate(s, "square_map");
    const op_table dot = row_inverse(s.G);
    std::vector<int> sq(s.n());
    for (int x = 0; x < s.n(); ++x) sq[x] = dot.at(x, x);
    return sq;
}

inline permutation sqrt_map(const solution& s) {
    std::vector<int> sq = square_map(s);
    if (!is_permutation_image(sq))
        throw square_not_bijective("sqrt_map: x |-> x.x is not a bijection");
    return permutation(std::move(sq)).inverse();
}

// O[y][z] = the unique x with f_y(x) = z, i.e. z = (x*y).(x <| (x*y));
// for a birack it satisfies x^2 o phi(x^2) = x
inline op_table circle_op(const solution& s) {
    require_left_nondegenerate(s, "circle_op");
    if (!column_bijective(s.F))
        throw not_right_nondegenerate("circle_op: some f_y is not a bijection");
    std::vector<int> entries(s.n() * s.n());
    for (int x = 0; x < s.n(); ++x)
        for (int y = 0; y < s.n(); ++y) entries[y * s.n() + s.F.at(x, y)] = x;
    op_table O(s.n(), std::move(entries));

    if (pairmap_bijective(s.as_pair_map()) && braid_check(s)) {
        const rack_table derived{rack_table(derived_rack(s))};
        const permutation phi = phi_map(derived);
        const std::vector<int> sq = square_map(s);
        for (int x = 0; x < s.n(); ++x)
            if (O.at(sq[x], phi(sq[x])) != x)
                throw formula_mismatch("circle_op: x^2 o phi(x^2) != x at x=" + std::to_string(x));
    }
    return O;
}

// S(u,x) = (u.(x<|u), x.u); satisfies S(sigma_1(x,y), x) = (sigma_2(x,y), y)
inline pair_map sideways_map(const solution& s) {
    require_left_nondegenerate(s, "sideways_map");
    const ops_triple ops = ops_from_solution(s);
    return pair_map::build(s.n(), [&](int u, int x) {
        return std::pair<int, int>{ops.dot.at(u, ops.tri.at(x, u)), ops.dot.at(x, u)};
    });
}

struct diagonal_pair {
    std::vector<int> d1, d2;  // components of S on the diagonal
};

inline diagonal_pair diagonal_maps(const solution& s) {
    const pair_map S = sideways_map(s);
    diagonal_pair d;
    d.d1.resize(s.n());
    d.d2.resize(s.n());
    for (int x = 0; x < s.n(); ++x) {
        auto [a, b] = S(x, x);
        d.d1[x] = a;
        d.d2[x] = b;
    }
    return d;
}

// sigma bijective, a unique invertible sideways map exists, and the
// diagonals of S and S^{-1} are bijections
inline bool strongly_invertible(const solution& s) {
    const int n = s.n();
    const pair_map P = s.as_pair_map();
    if (!pairmap_bijective(P)) return false;

    // partial sideways map from the defining constraints
    std::vector<int> s1(n * n, -1), s2(n * n, -1);
    int defined = 0;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            auto [b1, b2] = P(x, y);
            const int i = pair_index(n, b1, x);
            if (s1[i] == -1) {
                s1[i] = b2;
                s2[i] = y;
                ++defined;
            } else if (s1[i] != b2 || s2[i] != y) {
                return false;  // no sideways map exists
            }
        }
    // injectivity of the defined part
    std::vector<char> hit(n * n, 0);
    for (int i = 0; i < n * n; ++i) {
        if (s1[i] == -1) continue;
        const int j = pair_index(n, s1[i], s2[i]);
        if (hit[j]) return false;
        hit[j] = 1;
    }
    // with >= 2 unconstrained inputs there are several invertible
    // completions, so no unique S
    if (n * n - defined >= 2) return false;
    if (n * n - defined == 1) {
        int in = -1, out = -1;
        for (int i = 0; i < n * n; ++i) {
            if (s1[i] == -1) in = i;
            if (!hit[i]) out = i;
        }
        s1[in] = out / n;
        s2[in] = out % n;
    }

    const pair_map S(n, s1, s2);
    if (!pairmap_bijective(S)) return false;
    const pair_map Sinv = pairmap_inverse(S);
    auto diagonal_bijective = [n](const pair_map& M) {
        std::vector<int> a(n), b(n);
        for (int x = 0; x < n; ++x) {
            auto [u, v] = M(x, x);
            a[x] = u;
            b[x] = v;
        }
        return is_permutation_image(a) && is_permutation_image(b);
    };
    return diagonal_bijective(S) && diagonal_bijective(Sinv);
}

}  // namespace birack
