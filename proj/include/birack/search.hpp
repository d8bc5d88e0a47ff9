// Exhaustive enumeration of shelves, racks, quandles and braid solutions at
// small cardinality, plus the theorem sweep asserting every structural
// result over the full enumerated set. Two independent enumeration paths
// (raw bijection filtering and the condition generator) cross-validate
// each other.

#pragma once

#include <cstdlib>

#include "solution.hpp"
#include "twisting.hpp"
#include "enveloping.hpp"
#include "coloring.hpp"

namespace birack {

enum class search_kind { shelf, rack, quandle, solution, birack, biquandle, involutive };

struct search_spec {
    int n = 1;
    search_kind kind = search_kind::rack;
    bool up_to_iso = false;
    std::optional<long long> limit;
};

// global cap for exhaustive operations; override with BIRACK_EXHAUSTIVE_BOUND
inline int exhaustive_bound() {
    if (const char* env = std::getenv("BIRACK_EXHAUSTIVE_BOUND")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 6;
}

namespace detail {

inline void require_bound(int n, int cap, const char* who) {
    if (n > std::min(cap, exhaustive_bound()))
        throw bound_exceeded(std::string(who) + ": n=" + std::to_string(n) +
                             " exceeds the exhaustive bound");
}

// shelf tables cell by cell; a triple is checked as soon as all five
// entries it touches are known
inline void enumerate_shelves_rec(op_table& T, int cell, const std::function<bool(const op_table&)>& emit,
                                  bool& stop) {
    const int n = T.n;
    if (cell == n * n) {
        if (!emit(T)) stop = true;
        return;
    }
    const int cx = cell / n, cy = cell % n;
    auto known = [&](int x, int y) { return x * n + y < cell ? T.at(x, y) : -1; };
    for (int v = 0; v < n && !stop; ++v) {
        T.t[cell] = v;
        auto entry = [&](int x, int y) { return x * n + y <= cell ? T.at(x, y) : -1; };
        bool ok = true;
        // check triples completed by this cell
        for (int x = 0; x < n && ok; ++x)
            for (int y = 0; y < n && ok; ++y)
                for (int z = 0; z < n; ++z) {
                    const int xy = entry(x, y), xz = entry(x, z), yz = entry(y, z);
                    if (xy < 0 || xz < 0 || yz < 0) continue;
                    const int lhs = entry(xy, z), rhs_l = entry(xz, yz);
                    if (lhs < 0 || rhs_l < 0) continue;
                    // only re-check when the new cell participates
                    const bool involves = (x == cx && y == cy) || (x == cx && z == cy) ||
                                          (y == cx && z == cy) || (xy == cx && z == cy) ||
                                          (xz == cx && yz == cy);
                    if (involves && lhs != rhs_l) {
                        ok = false;
                        break;
                    }
                }
        if (ok) enumerate_shelves_rec(T, cell + 1, emit, stop);
    }
    T.t[cell] = 0;
    (void)known;
}

// rack/quandle tables column by column; each column is a permutation
inline void enumerate_column_rec(int n, std::vector<const permutation*>& cols,
                                 const std::vector<permutation>& perms, bool quandle,
                                 const std::function<bool(const op_table&)>& emit, bool& stop) {
    const int m = static_cast<int>(cols.size());
    if (m == n) {
        op_table T = op_table::build(n, [&](int x, int y) { return (*cols[y])(x); });
        if (!emit(T)) stop = true;
        return;
    }
    for (const auto& p : perms) {
        if (stop) return;
        if (quandle && p(m) != m) continue;
        cols.push_back(&p);
        // check every triple that became fully determined: y,z < m+1,
        // entry (y<|z) < m+1
        auto at = [&](int x, int y) { return (*cols[y])(x); };
        bool ok = true;
        const int placed = m + 1;
        for (int y = 0; y < placed && ok; ++y)
            for (int z = 0; z < placed && ok; ++z) {
                const int yz = at(y, z);
                if (yz >= placed) continue;
                if (std::max({y, z, yz}) != m) continue;  // checked earlier otherwise
                for (int x = 0; x < n; ++x)
                    if (at(at(x, y), z) != at(at(x, z), yz)) {
                        ok = false;
                        break;
                    }
            }
        if (ok) enumerate_column_rec(n, cols, perms, quandle, emit, stop);
        cols.pop_back();
    }
}

}  // namespace detail

// relabel by s: x <|' y = s(s^{-1}(x) <| s^{-1}(y))
inline op_table relabel(const op_table& T, const permutation& s) {
    const permutation si = s.inverse();
    return op_table::build(T.n, [&](int x, int y) { return s(T.at(si(x), si(y))); });
}

inline op_table canonical_form(const op_table& T) {
    op_table best = T;
    for (const auto& s : all_permutations(T.n)) {
        op_table cand = relabel(T, s);
        if (cand.t < best.t) best = cand;
    }
    return best;
}

// conjugate sigma by s x s
inline solution relabel(const solution& sol, const permutation& s) {
    const permutation si = s.inverse();
    return solution(
        op_table::build(sol.n(), [&](int x, int y) { return s(sol.G.at(si(x), si(y))); }),
        op_table::build(sol.n(), [&](int x, int y) { return s(sol.F.at(si(x), si(y))); }));
}

inline solution canonical_form(const solution& sol) {
    solution best = sol;
    for (const auto& s : all_permutations(sol.n())) {
        solution cand = relabel(sol, s);
        if (std::pair{cand.G.t, cand.F.t} < std::pair{best.G.t, best.F.t}) best = cand;
    }
    return best;
}

inline std::vector<op_table> enumerate_racks(const search_spec& spec) {
    const int n = spec.n;
    std::vector<op_table> out;
    const long long limit = spec.limit.value_or(-1);
    auto emit = [&](const op_table& T) {
        if (spec.up_to_iso && !(canonical_form(T) == T)) return true;
        out.push_back(T);
        return limit < 0 || static_cast<long long>(out.size()) < limit;
    };
    bool stop = false;
    switch (spec.kind) {
        case search_kind::shelf: {
            detail::require_bound(n, 4, "enumerate_racks(shelf)");
            op_table T = op_table::build(n, [](int, int) { return 0; });
            detail::enumerate_shelves_rec(T, 0, emit, stop);
            break;
        }
        case search_kind::rack:
        case search_kind::quandle: {
            detail::require_bound(n, 4, "enumerate_racks");
            const std::vector<permutation> perms = all_permutations(n);
            std::vector<const permutation*> cols;
            detail::enumerate_column_rec(n, cols, perms, spec.kind == search_kind::quandle, emit,
                                         stop);
            break;
        }
        default:
            throw validation_error("enumerate_racks: kind must be shelf, rack or quandle");
    }
    std::sort(out.begin(), out.end(), [](const op_table& a, const op_table& b) { return a.t < b.t; });
    return out;
}

// raw path: iterate every bijection of the n^2 pairs and filter
inline std::vector<solution> enumerate_solutions(const search_spec& spec) {
    const int n = spec.n;
    detail::require_bound(n, 3, "enumerate_solutions");
    const int nn = n * n;
    std::vector<int> perm(nn);
    std::iota(perm.begin(), perm.end(), 0);

    std::vector<solution> out;
    const long long limit = spec.limit.value_or(-1);
    do {
        std::vector<int> o1(nn), o2(nn);
        for (int i = 0; i < nn; ++i) {
            o1[i] = perm[i] / n;
            o2[i] = perm[i] % n;
        }
        const pair_map P(n, std::move(o1), std::move(o2));
        if (!braid_check(P)) continue;
        const solution s = solution::from_pair_map(P);
        const degeneracy d = nondegeneracy(s);
        bool keep = false;
        switch (spec.kind) {
            case search_kind::solution: keep = true; break;
            case search_kind::birack: keep = d.left && d.right; break;
            case search_kind::biquandle:
                keep = d.left && d.right && is_biquandle(s);
                break;
            case search_kind::involutive: keep = d.left && d.right && is_involutive(s); break;
            default: throw validation_error("enumerate_solutions: not a solution kind");
        }
        if (!keep) continue;
        if (spec.up_to_iso && !(canonical_form(s) == s)) continue;
        out.push_back(s);
        if (limit >= 0 && static_cast<long long>(out.size()) >= limit) break;
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::sort(out.begin(), out.end(), [](const solution& a, const solution& b) {
        return std::pair{a.G.t, a.F.t} < std::pair{b.G.t, b.F.t};
    });
    return out;
}

// generator path: every left non-degenerate braid solution, built from a
// shelf tri and dot rows satisfying the two compatibility conditions
inline std::vector<solution> enumerate_left_nondegenerate(int n) {
    detail::require_bound(n, 4, "enumerate_left_nondegenerate");
    const std::vector<permutation> perms = all_permutations(n);
    search_spec shelf_spec{n, search_kind::shelf, false, std::nullopt};
    const std::vector<op_table> shelves = enumerate_racks(shelf_spec);

    std::vector<solution> out;
    for (const op_table& tri : shelves) {
        // dot rows one at a time; row x must satisfy condition 2 alone and
        // condition 1 against every earlier row
        std::vector<const permutation*> rows;
        auto dot = [&](int x, int y) { return (*rows[x])(y); };
        auto cond2_row = [&](int x) {
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    if (tri.at(dot(x, y), dot(x, z)) != dot(x, tri.at(y, z))) return false;
            return true;
        };
        // condition 1 at (x,y) also reads the rows a = y.(x<|y) and
        // b = x.y, so a triple is checked once its last row is placed
        auto cond1_ready = [&](int x, int y, int m) {
            const int a = dot(y, tri.at(x, y));
            const int b = dot(x, y);
            if (a > m || b > m) return true;  // deferred
            if (std::max({x, y, a, b}) != m) return true;  // checked earlier
            for (int z = 0; z < n; ++z)
                if (dot(a, dot(y, z)) != dot(b, dot(x, z))) return false;
            return true;
        };
        std::function<void()> rec = [&]() {
            const int m = static_cast<int>(rows.size());
            if (m == n) {
                op_table dtbl = op_table::build(n, dot);
                out.push_back(solution_from_ops(ops_triple(row_inverse(dtbl), tri)));
                return;
            }
            for (const auto& p : perms) {
                rows.push_back(&p);
                bool ok = cond2_row(m);
                for (int x = 0; x <= m && ok; ++x)
                    for (int y = 0; y <= m && ok; ++y) ok = cond1_ready(x, y, m);
                if (ok) rec();
                rows.pop_back();
            }
        };
        rec();
    }
    std::sort(out.begin(), out.end(), [](const solution& a, const solution& b) {
        return std::pair{a.G.t, a.F.t} < std::pair{b.G.t, b.F.t};
    });
    return out;
}

struct sweep_report {
    int n = 0;
    long long left_nondegenerate = 0;
    long long bijective = 0;
    long long biracks = 0;
    long long biquandles = 0;
    long long involutive = 0;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

// every structural statement, asserted over the full enumerated set
inline sweep_report sweep_theorems(int n) {
    detail::require_bound(n, 3, "sweep_theorems");
    sweep_report rep;
    rep.n = n;

    const std::vector<solution> generated = enumerate_left_nondegenerate(n);
    const std::vector<solution> raw = enumerate_solutions({n, search_kind::solution, false, {}});

    // cross-validation of the two paths on their common ground
    {
        std::vector<solution> raw_lnd, gen_bij;
        for (const auto& s : raw)
            if (is_left_nondegenerate(s)) raw_lnd.push_back(s);
        for (const auto& s : generated)
            if (pairmap_bijective(s.as_pair_map())) gen_bij.push_back(s);
        if (raw_lnd != gen_bij)
            rep.violations.push_back("generator and raw filter disagree at n=" + std::to_string(n));
    }

    auto flag = [&](const solution& s, const std::string& what) {
        rep.violations.push_back(what + " [G=" + [&] {
            std::string t;
            for (int v : s.G.t) t += std::to_string(v);
            t += "|F=";
            for (int v : s.F.t) t += std::to_string(v);
            return t;
        }() + "]");
    };

    for (const solution& s : generated) {
        ++rep.left_nondegenerate;
        const ops_triple ops = ops_from_solution(s);
        const theorem_report t1 = theorem1_conditions(ops);
        if (!t1.braid || !t1.conditions())
            flag(s, "theorem-1 equivalence failed on a generated solution");

        const bool bij = pairmap_bijective(s.as_pair_map());
        if (bij) ++rep.bijective;
        if (bij != is_rack(ops.tri)) flag(s, "bijectivity <-> derived rack failed");

        const degeneracy d = nondegeneracy(s);
        const bool square_bij = is_permutation_image(square_map(s));
        if (is_rack(ops.tri) && d.right != square_bij)
            flag(s, "right non-degeneracy <-> square bijectivity failed");

        if (is_involutive(s) != (ops.tri == op_table::build(n, [](int x, int) { return x; })))
            flag(s, "involutive <-> trivial derived rack failed");

        if (is_rack(ops.tri)) {
            const rack_table derived(ops.tri);
            const permutation phi = phi_map(derived);
            const std::vector<int> sq = square_map(s);
            const diagonal_pair diag = diagonal_maps(s);
            for (int x = 0; x < n; ++x)
                if (diag.d2[x] != sq[x] || diag.d1[x] != phi(sq[x]))
                    flag(s, "sideways diagonal does not reduce to the square map");
        }

        if (strongly_invertible(s) != (d.left && d.right && bij))
            flag(s, "strong invertibility <-> non-degenerate bijective failed");

        if (d.right && bij) {
            try {
                circle_op(s);  // verifies x^2 o phi(x^2) = x internally
            } catch (const error& e) {
                flag(s, std::string("circle identity failed: ") + e.what());
            }
        }

        if (d.left && d.right && bij) {
            ++rep.biracks;
            const bool bq = is_biquandle(s);
            if (bq) ++rep.biquandles;
            if (is_involutive(s)) ++rep.involutive;
            if (bq != is_quandle(ops.tri)) flag(s, "biquandle <-> derived quandle failed");
            if (biquandle_pairing(s).has_value() != biquandle_pairing_dual(s).has_value())
                flag(s, "primal and dual biquandle pairings disagree");
            if (!phi_linear_check(s)) flag(s, "phi is not a linear automorphism");
            if (!is_linear_automorphism(tw_map(rack_table(ops.tri)), s))
                flag(s, "Tw is not a linear automorphism");
            try {
                const untwist_result u = untwist_to_biquandle(s);
                if (!is_biquandle(u.biquandle)) flag(s, "untwist did not produce a biquandle");
            } catch (const error& e) {
                flag(s, std::string("untwist corollary failed: ") + e.what());
            }
            if (!(kink_map(s) == phi_map(rack_table(derived_rack(s)))))
                flag(s, "kink map differs from derived phi");
            if (!envelope_proposition_check(s)) flag(s, "enveloping group proposition failed");
            try {
                inverse_solution(s);  // verifies the closed inverse formula internally
            } catch (const error& e) {
                flag(s, std::string("closed inverse formula failed: ") + e.what());
            }
        }
    }
    return rep;
}

}  // namespace birack
