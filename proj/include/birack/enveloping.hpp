// Enveloping group presentations G_X of a solution, the quotient by
// x ~ phi(x), and abelian invariants via Smith normal form over exact
// arbitrary-precision integers.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <set>

#include "solution.hpp"

namespace birack {

// relations are words of signed 1-based generator indices, word == identity
struct presentation {
    int generators = 0;
    std::vector<std::vector<int>> relations;

    bool operator==(const presentation&) const = default;
};

struct abelian_invariants {
    int rank = 0;
    std::vector<long long> torsion;  // entries > 1, each dividing the next

    bool operator==(const abelian_invariants&) const = default;
};

namespace detail {

inline std::vector<std::vector<int>> sorted_unique(std::set<std::vector<int>>&& words) {
    return std::vector<std::vector<int>>(words.begin(), words.end());
}

}  // namespace detail

// one relation per ordered pair (x,y):  x (x.y) = y (y.(x<|y))
inline presentation enveloping_presentation(const solution& s) {
    require_left_nondegenerate(s, "enveloping_presentation");
    const ops_triple ops = ops_from_solution(s);
    std::set<std::vector<int>> words;
    for (int x = 0; x < s.n(); ++x)
        for (int y = 0; y < s.n(); ++y) {
            const int lhs2 = ops.dot.at(x, y);
            const int rhs2 = ops.dot.at(y, ops.tri.at(x, y));
            words.insert({x + 1, lhs2 + 1, -(rhs2 + 1), -(y + 1)});
        }
    return presentation{s.n(), detail::sorted_unique(std::move(words))};
}

// the raw form  x y = z t  for sigma(x,y) = (z,t); same normal closure
inline presentation enveloping_presentation_raw(const solution& s) {
    std::set<std::vector<int>> words;
    for (int x = 0; x < s.n(); ++x)
        for (int y = 0; y < s.n(); ++y) {
            auto [z, t] = s.map(x, y);
            words.insert({x + 1, y + 1, -(t + 1), -(z + 1)});
        }
    return presentation{s.n(), detail::sorted_unique(std::move(words))};
}

struct phi_classes {
    std::vector<std::vector<int>> classes;  // sorted blocks, ordered by least element
    std::vector<int> class_of;              // element -> class index
};

// orbits of phi(x) = x<|x of the derived rack
inline phi_classes phi_quotient(const solution& s) {
    require_birack(s, "phi_quotient");
    const permutation phi = phi_map(rack_table(derived_rack(s)));
    phi_classes out;
    out.class_of.assign(s.n(), -1);
    for (int x = 0; x < s.n(); ++x) {
        if (out.class_of[x] != -1) continue;
        std::vector<int> orbit;
        int c = static_cast<int>(out.classes.size());
        for (int y = x; out.class_of[y] == -1; y = phi(y)) {
            out.class_of[y] = c;
            orbit.push_back(y);
        }
        std::sort(orbit.begin(), orbit.end());
        out.classes.push_back(std::move(orbit));
    }
    return out;
}

// G_{X/~}: the enveloping relations pushed through the class map
inline presentation quotient_presentation(const solution& s) {
    const phi_classes q = phi_quotient(s);
    const presentation p = enveloping_presentation(s);
    std::set<std::vector<int>> words;
    for (const auto& rel : p.relations) {
        std::vector<int> w;
        w.reserve(rel.size());
        for (int g : rel) {
            const int cls = q.class_of[std::abs(g) - 1] + 1;
            w.push_back(g > 0 ? cls : -cls);
        }
        words.insert(std::move(w));
    }
    return presentation{static_cast<int>(q.classes.size()), detail::sorted_unique(std::move(words))};
}

namespace detail {

using bigint = boost::multiprecision::cpp_int;

// diagonalize M in place to d_1 | d_2 | ... by integer row/column operations
inline std::vector<bigint> smith_diagonal(std::vector<std::vector<bigint>> M) {
    const int rows = static_cast<int>(M.size());
    const int cols = rows ? static_cast<int>(M[0].size()) : 0;
    std::vector<bigint> diag;

    for (int k = 0; k < std::min(rows, cols); ++k) {
        for (;;) {
            // smallest nonzero entry of the trailing submatrix as pivot
            int pi = -1, pj = -1;
            for (int i = k; i < rows; ++i)
                for (int j = k; j < cols; ++j)
                    if (M[i][j] != 0 &&
                        (pi == -1 || abs(M[i][j]) < abs(M[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == -1) return diag;  // trailing submatrix is zero
            std::swap(M[k], M[pi]);
            if (pj != k)
                for (int i = 0; i < rows; ++i) std::swap(M[i][k], M[i][pj]);

            bool clean = true;
            for (int i = k + 1; i < rows; ++i) {
                if (M[i][k] == 0) continue;
                const bigint q = M[i][k] / M[k][k];
                for (int j = k; j < cols; ++j) M[i][j] -= q * M[k][j];
                if (M[i][k] != 0) clean = false;
            }
            for (int j = k + 1; j < cols; ++j) {
                if (M[k][j] == 0) continue;
                const bigint q = M[k][j] / M[k][k];
                for (int i = k; i < rows; ++i) M[i][j] -= q * M[i][k];
                if (M[k][j] != 0) clean = false;
            }
            if (!clean) continue;

            // enforce the divisibility chain before moving on
            bool divides_all = true;
            for (int i = k + 1; i < rows && divides_all; ++i)
                for (int j = k + 1; j < cols; ++j)
                    if (M[i][j] % M[k][k] != 0) {
                        for (int jj = k; jj < cols; ++jj) M[k][jj] += M[i][jj];
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
        }
        diag.push_back(abs(M[k][k]));
    }
    return diag;
}

}  // namespace detail

inline abelian_invariants abelianization(const presentation& p) {
    using detail::bigint;
    std::vector<std::vector<bigint>> M;
    for (const auto& rel : p.relations) {
        std::vector<bigint> row(p.generators, 0);
        for (int g : rel) row[std::abs(g) - 1] += (g > 0 ? 1 : -1);
        M.push_back(std::move(row));
    }
    abelian_invariants inv;
    if (M.empty()) {
        inv.rank = p.generators;
        return inv;
    }
    std::vector<bigint> diag = detail::smith_diagonal(std::move(M));
    int nonzero = 0;
    for (const auto& d : diag)
        if (d != 0) ++nonzero;
    inv.rank = p.generators - nonzero;
    for (const auto& d : diag)
        if (d > 1) inv.torsion.push_back(d.convert_to<long long>());
    std::sort(inv.torsion.begin(), inv.torsion.end());
    return inv;
}

// witnesses of the proof that G_X = G_{X/~}: the pointwise identity
// x.(x<|x) = phi(x.x) plus equality of abelian invariants; a necessary
// condition, not an isomorphism proof
inline bool envelope_proposition_check(const solution& s) {
    require_birack(s, "envelope_proposition_check");
    const ops_triple ops = ops_from_solution(s);
    for (int x = 0; x < s.n(); ++x) {
        const int lhs = ops.dot.at(x, ops.tri.at(x, x));
        const int sq = ops.dot.at(x, x);
        const int rhs = ops.tri.at(sq, sq);  // phi(x^2)
        if (lhs != rhs) return false;
    }
    return abelianization(enveloping_presentation(s)) == abelianization(quotient_presentation(s));
}

// export format: first line the generator count, then one relation per
// line as space-separated signed indices
inline std::string presentation_text(const presentation& p) {
    std::string out = std::to_string(p.generators) + "\n";
    for (const auto& rel : p.relations) {
        for (size_t i = 0; i < rel.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(rel[i]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace birack
