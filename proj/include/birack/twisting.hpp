// Twisting solutions by automorphisms: the first-kind twist sigma_k, the
// second-kind twists by linear automorphisms, and the untwisting of any
// finite birack to a biquandle. Twist constructors re-verify the
// operation-level identities they advertise and throw on mismatch.

#pragma once

#include "solution.hpp"

namespace birack {

enum class twist_kind { first, left_linear, right_linear };

struct twist_certificate {
    solution original;
    solution twisted;
    permutation map;
    twist_kind kind;
};

// (k x k) sigma = sigma (k x k)
inline bool is_automorphism(const permutation& k, const solution& s) {
    if (k.size() != s.n()) return false;
    for (int x = 0; x < s.n(); ++x)
        for (int y = 0; y < s.n(); ++y) {
            auto [a, b] = s.map(x, y);
            auto [c, d] = s.map(k(x), k(y));
            if (k(a) != c || k(b) != d) return false;
        }
    return true;
}

// all automorphisms of sigma by scanning S_n; n <= 6 keeps this trivial
inline std::vector<permutation> automorphism_group(const solution& s) {
    std::vector<permutation> out;
    for (auto& k : all_permutations(s.n()))
        if (is_automorphism(k, s)) out.push_back(k);
    return out;
}

namespace detail {

inline void check(bool ok, const char* what) {
    if (!ok) throw formula_mismatch(std::string("twist: ") + what);
}

}  // namespace detail

// sigma_k = (k^{-1} x id) sigma (k x id) = (id x k) sigma (id x k^{-1});
// changes dot into k(x.y), preserves the derived rack
inline twist_certificate twist_first(const solution& s, const permutation& k) {
    require_left_nondegenerate(s, "twist_first");
    if (!is_automorphism(k, s)) throw not_automorphism("twist_first: map is not an automorphism");
    const permutation kinv = k.inverse();

    const solution twisted(
        op_table::build(s.n(), [&](int x, int y) { return kinv(s.G.at(k(x), y)); }),
        op_table::build(s.n(), [&](int x, int y) { return s.F.at(k(x), y); }));
    const solution alt(
        op_table::build(s.n(), [&](int x, int y) { return s.G.at(x, kinv(y)); }),
        op_table::build(s.n(), [&](int x, int y) { return k(s.F.at(x, kinv(y))); }));
    detail::check(twisted == alt, "the two defining expressions for sigma_k disagree");

    const ops_triple ops = ops_from_solution(s);
    const ops_triple tops = ops_from_solution(twisted);
    detail::check(tops.tri == ops.tri, "first-kind twist must preserve the derived rack");
    for (int x = 0; x < s.n(); ++x)
        for (int y = 0; y < s.n(); ++y)
            detail::check(tops.dot.at(x, y) == k(ops.dot.at(x, y)), "twisted dot is not k(x.y)");
    detail::check(is_automorphism(k, twisted), "k must remain an automorphism of sigma_k");
    if (braid_check(s)) detail::check(braid_check(twisted), "sigma_k lost the braid property");

    return twist_certificate{s, twisted, k, twist_kind::first};
}

// phi(x.y) = x.phi(y), phi(x).y = x.y, phi(x<|y) = phi(x)<|y, x<|phi(y) = x<|y
inline bool is_linear_automorphism(const permutation& phi, const solution& s) {
    if (phi.size() != s.n()) return false;
    if (!is_left_nondegenerate(s)) return false;
    const ops_triple ops = ops_from_solution(s);
    for (int x = 0; x < s.n(); ++x)
        for (int y = 0; y < s.n(); ++y) {
            if (phi(ops.dot.at(x, y)) != ops.dot.at(x, phi(y))) return false;
            if (ops.dot.at(phi(x), y) != ops.dot.at(x, y)) return false;
            if (phi(ops.tri.at(x, y)) != ops.tri.at(phi(x), y)) return false;
            if (ops.tri.at(x, phi(y)) != ops.tri.at(x, y)) return false;
        }
    return true;
}

// sigma (phi x id): star and dot unchanged, tri becomes phi(x) <| y
inline twist_certificate twist_left(const solution& s, const permutation& phi) {
    if (!is_linear_automorphism(phi, s))
        throw not_linear_automorphism("twist_left: map is not a linear automorphism");
    const solution twisted(
        op_table::build(s.n(), [&](int x, int y) { return s.G.at(phi(x), y); }),
        op_table::build(s.n(), [&](int x, int y) { return s.F.at(phi(x), y); }));

    const ops_triple ops = ops_from_solution(s);
    const ops_triple tops = ops_from_solution(twisted);
    detail::check(tops.star == ops.star && tops.dot == ops.dot,
                  "left twist must keep star and dot");
    for (int x = 0; x < s.n(); ++x)
        for (int y = 0; y < s.n(); ++y)
            detail::check(tops.tri.at(x, y) == ops.tri.at(phi(x), y),
                          "left twist of tri is not phi(x) <| y");
    detail::check(is_linear_automorphism(phi, twisted),
                  "phi must remain a linear automorphism of the twist");
    if (braid_check(s)) detail::check(braid_check(twisted), "left twist lost the braid property");

    return twist_certificate{s, twisted, phi, twist_kind::left_linear};
}

// sigma (id x phi): dot becomes phi^{-1}(x.y), tri becomes phi(x) <| y
inline twist_certificate twist_right(const solution& s, const permutation& phi) {
    if (!is_linear_automorphism(phi, s))
        throw not_linear_automorphism("twist_right: map is not a linear automorphism");
    const solution twisted(
        op_table::build(s.n(), [&](int x, int y) { return s.G.at(x, phi(y)); }),
        op_table::build(s.n(), [&](int x, int y) { return s.F.at(x, phi(y)); }));

    const permutation phinv = phi.inverse();
    const ops_triple ops = ops_from_solution(s);
    const ops_triple tops = ops_from_solution(twisted);
    for (int x = 0; x < s.n(); ++x)
        for (int y = 0; y < s.n(); ++y) {
            detail::check(tops.dot.at(x, y) == phinv(ops.dot.at(x, y)),
                          "right twist of dot is not phi^{-1}(x.y)");
            detail::check(tops.tri.at(x, y) == ops.tri.at(phi(x), y),
                          "right twist of tri is not phi(x) <| y");
        }
    detail::check(is_linear_automorphism(phi, twisted),
                  "phi must remain a linear automorphism of the twist");
    if (braid_check(s)) detail::check(braid_check(twisted), "right twist lost the braid property");

    return twist_certificate{s, twisted, phi, twist_kind::right_linear};
}

// phi(x) = x<|x of the derived rack is a linear automorphism of every
// finite birack; callers treat a false return as a broken input
inline bool phi_linear_check(const solution& s) {
    require_birack(s, "phi_linear_check");
    const permutation phi = phi_map(rack_table(derived_rack(s)));
    return is_linear_automorphism(phi, s);
}

struct untwist_result {
    solution biquandle;
    permutation phi;  // sigma = twist_left(biquandle, phi)
    twist_certificate certificate;
};

// every finite birack is the left twist by phi of a biquandle, obtained
// by twisting with i = Tw of the derived rack
inline untwist_result untwist_to_biquandle(const solution& s) {
    require_birack(s, "untwist_to_biquandle");
    const rack_table derived(derived_rack(s));
    const permutation phi = phi_map(derived);
    const permutation i = tw_map(derived);

    const twist_certificate cert = twist_left(s, i);
    const solution& bq = cert.twisted;
    if (!is_biquandle(bq))
        throw formula_mismatch("untwist_to_biquandle: twist by Tw is not a biquandle");
    const twist_certificate back = twist_left(bq, phi);
    if (!(back.twisted == s))
        throw formula_mismatch("untwist_to_biquandle: recomposition does not recover sigma");
    return untwist_result{bq, phi, cert};
}

}  // namespace birack
