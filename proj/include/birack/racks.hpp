// Shelves, racks and quandles given by operation tables, their intrinsic
// maps phi and Tw, conjugation racks, untwisting, and skew-racks.

#pragma once

#include "core.hpp"
#include "groups.hpp"

namespace birack {

// lexicographically least triple (x,y,z) violating
// (x<|y)<|z == (x<|z)<|(y<|z), or nullopt if self-distributive
inline std::optional<triple> shelf_violation(const op_table& T) {
    const int n = T.n;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (T.at(T.at(x, y), z) != T.at(T.at(x, z), T.at(y, z)))
                    return triple{x, y, z};
    return std::nullopt;
}

inline bool is_shelf(const op_table& T) { return !shelf_violation(T); }

inline bool is_rack(const op_table& T) { return is_shelf(T) && column_bijective(T); }

inline bool is_quandle(const op_table& T) {
    if (!is_rack(T)) return false;
    for (int x = 0; x < T.n; ++x)
        if (T.at(x, x) != x) return false;
    return true;
}

// a validated rack; constructing one from a non-rack table throws
struct rack_table {
    op_table tri;

    explicit rack_table(op_table t) : tri(std::move(t)) {
        if (!column_bijective(tri))
            throw not_a_rack("rack_table: a column is not a bijection");
        if (auto w = shelf_violation(tri))
            throw not_a_rack("rack_table: not self-distributive at " + triple_str(*w));
    }

    int n() const { return tri.n; }
    int at(int x, int y) const { return tri.at(x, y); }
    bool operator==(const rack_table&) const = default;
};

// phi(x) = x<|x; a rack automorphism
inline permutation phi_map(const rack_table& T) {
    std::vector<int> img(T.n());
    for (int x = 0; x < T.n(); ++x) img[x] = T.at(x, x);
    return permutation(std::move(img));
}

// Tw = phi^{-1}, i.e. Tw(x) = x <|^{-1} x
inline permutation tw_map(const rack_table& T) { return phi_map(T).inverse(); }

// x ~<| y := phi^{-1}(x<|y); always a quandle
inline rack_table untwist_to_quandle(const rack_table& T) {
    const permutation i = tw_map(T);
    return rack_table(op_table::build(T.n(), [&](int x, int y) { return i(T.at(x, y)); }));
}

// x<|y = y^{-1} x y; always a quandle
inline rack_table conj_rack(const op_table& mult, const permutation& inv, int e) {
    if (auto v = group_check(mult, inv, e))
        throw not_a_group("conj_rack: " + v->axiom + " fails at " + triple_str(v->where));
    return rack_table(
        op_table::build(mult.n, [&](int x, int y) { return mult.at(mult.at(inv(y), x), y); }));
}

inline rack_table conj_rack(const group_table& g) { return conj_rack(g.mult, g.inv, g.e); }

// the rack-type solution (x,y) |-> (y, x<|y)
inline pair_map rack_solution(const rack_table& T) {
    return pair_map::build(T.n(), [&](int x, int y) {
        return std::pair<int, int>{y, T.at(x, y)};
    });
}

// Skew-racks: an operation with an equivariant bijection k. The three
// axioms are column bijectivity, k(x #| y) = k(x) #| k(y), and
//   (x #| y) #| z = (k^{-1}(x) #| z) <| (y #| z)
// where x <| y := k(x) #| y is the associated rack operation. The last
// axiom in that form is exactly what makes (x,y) |-> (k(y), x #| y) a
// braid solution; twisting any rack solution by an automorphism k^{-1}
// produces an example.
struct skew_rack {
    op_table btri;    // x #| y
    permutation k;

    skew_rack(op_table b, permutation k_) : btri(std::move(b)), k(std::move(k_)) {
        if (k.size() != btri.n) throw validation_error("skew_rack: map size mismatch");
    }

    int n() const { return btri.n; }
    int at(int x, int y) const { return btri.at(x, y); }
};

struct skew_violation {
    std::string axiom;  // "column_bijective", "equivariance", "skew_distributivity"
    triple where;
};

inline std::optional<skew_violation> skew_violation_of(const skew_rack& S) {
    const int n = S.n();
    if (!column_bijective(S.btri)) return skew_violation{"column_bijective", {0, 0, 0}};
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (S.k(S.at(x, y)) != S.at(S.k(x), S.k(y)))
                return skew_violation{"equivariance", {x, y, 0}};
    const permutation kinv = S.k.inverse();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                const int lhs = S.at(S.at(x, y), z);
                // (k^{-1}(x) #| z) <| (y #| z) with a <| b = k(a) #| b
                const int rhs = S.at(S.k(S.at(kinv(x), z)), S.at(y, z));
                if (lhs != rhs) return skew_violation{"skew_distributivity", {x, y, z}};
            }
    return std::nullopt;
}

inline bool skew_check(const skew_rack& S) { return !skew_violation_of(S); }

inline bool is_rack_automorphism(const rack_table& T, const permutation& k) {
    if (k.size() != T.n()) return false;
    for (int x = 0; x < T.n(); ++x)
        for (int y = 0; y < T.n(); ++y)
            if (k(T.at(x, y)) != T.at(k(x), k(y))) return false;
    return true;
}

// x #| y := k^{-1}(x) <| y
inline skew_rack skew_from_rack(const rack_table& T, const permutation& k) {
    if (!is_rack_automorphism(T, k))
        throw not_automorphism("skew_from_rack: map is not a rack automorphism");
    const permutation kinv = k.inverse();
    return skew_rack(op_table::build(T.n(), [&](int x, int y) { return T.at(kinv(x), y); }), k);
}

// associated rack x <| y := k(x) #| y
inline rack_table rack_from_skew(const skew_rack& S) {
    if (auto v = skew_violation_of(S))
        throw skew_axiom_failure("rack_from_skew: " + v->axiom + " fails at " + triple_str(v->where));
    return rack_table(op_table::build(S.n(), [&](int x, int y) { return S.at(S.k(x), y); }));
}

// (x,y) |-> (k(y), x #| y)
inline pair_map skew_solution(const skew_rack& S) {
    return pair_map::build(S.n(), [&](int x, int y) {
        return std::pair<int, int>{S.k(y), S.at(x, y)};
    });
}

}  // namespace birack
