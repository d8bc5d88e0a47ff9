// Carrier sets, permutations, operation tables and maps on pairs.
// Elements are dense integers 0..n-1; everything downstream is table lookups.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace birack {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// bad input data (out-of-range entries, shape mismatches, broken file invariants)
struct validation_error : error {
    using error::error;
};

struct not_row_bijective : error {
    using error::error;
};
struct not_column_bijective : error {
    using error::error;
};
struct not_bijective : error {
    using error::error;
};
struct not_a_rack : error {
    using error::error;
};
struct not_a_group : error {
    using error::error;
};
struct not_automorphism : error {
    using error::error;
};
struct not_linear_automorphism : error {
    using error::error;
};
struct skew_axiom_failure : error {
    using error::error;
};
struct not_left_nondegenerate : error {
    using error::error;
};
struct not_right_nondegenerate : error {
    using error::error;
};
struct not_a_birack : error {
    using error::error;
};
struct derived_not_rack : error {
    using error::error;
};
struct square_not_bijective : error {
    using error::error;
};
struct not_a_skew_brace : error {
    using error::error;
};
struct bound_exceeded : error {
    using error::error;
};
struct bad_letter : error {
    using error::error;
};
struct parse_error : error {
    using error::error;
};

// internal cross-check failed; indicates a bug, never user input
struct formula_mismatch : error {
    using error::error;
};

using triple = std::array<int, 3>;

inline std::string triple_str(const triple& w) {
    return "(" + std::to_string(w[0]) + "," + std::to_string(w[1]) + "," + std::to_string(w[2]) + ")";
}

inline bool is_permutation_image(const std::vector<int>& image) {
    const int n = static_cast<int>(image.size());
    std::vector<char> seen(n, 0);
    for (int v : image) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

struct permutation {
    std::vector<int> image;  // image[x] = value at x

    permutation() = default;
    explicit permutation(std::vector<int> img) : image(std::move(img)) {
        if (!is_permutation_image(image))
            throw validation_error("permutation: image is not a bijection of 0.." +
                                   std::to_string(image.size() ? image.size() - 1 : 0));
    }

    static permutation identity(int n) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        return permutation(std::move(img));
    }

    int size() const { return static_cast<int>(image.size()); }
    int operator()(int x) const { return image[x]; }

    permutation inverse() const {
        std::vector<int> inv(image.size());
        for (int x = 0; x < size(); ++x) inv[image[x]] = x;
        return permutation(std::move(inv));
    }

    // this first, then q
    permutation then(const permutation& q) const {
        std::vector<int> img(image.size());
        for (int x = 0; x < size(); ++x) img[x] = q(image[x]);
        return permutation(std::move(img));
    }

    bool is_identity() const {
        for (int x = 0; x < size(); ++x)
            if (image[x] != x) return false;
        return true;
    }

    bool operator==(const permutation&) const = default;
};

// n x n table of a binary operation, t[x*n+y] = x op y
struct op_table {
    int n = 0;
    std::vector<int> t;

    op_table() = default;
    op_table(int n_, std::vector<int> entries) : n(n_), t(std::move(entries)) {
        if (n < 1) throw validation_error("op_table: cardinality must be >= 1");
        if (static_cast<int>(t.size()) != n * n)
            throw validation_error("op_table: expected " + std::to_string(n * n) + " entries, got " +
                                   std::to_string(t.size()));
        for (int v : t)
            if (v < 0 || v >= n)
                throw validation_error("op_table: entry " + std::to_string(v) + " out of range 0.." +
                                       std::to_string(n - 1));
    }

    static op_table from_rows(const std::vector<std::vector<int>>& rows) {
        const int n = static_cast<int>(rows.size());
        std::vector<int> entries;
        entries.reserve(n * n);
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != n)
                throw validation_error("op_table: ragged rows");
            entries.insert(entries.end(), row.begin(), row.end());
        }
        return op_table(n, std::move(entries));
    }

    template <class F>
    static op_table build(int n, F&& f) {
        std::vector<int> entries(n * n);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) entries[x * n + y] = f(x, y);
        return op_table(n, std::move(entries));
    }

    int at(int x, int y) const { return t[x * n + y]; }

    std::vector<std::vector<int>> rows() const {
        std::vector<std::vector<int>> out(n);
        for (int x = 0; x < n; ++x) out[x].assign(t.begin() + x * n, t.begin() + (x + 1) * n);
        return out;
    }

    bool operator==(const op_table&) const = default;
};

inline bool row_bijective(const op_table& T) {
    std::vector<char> seen(T.n);
    for (int x = 0; x < T.n; ++x) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int y = 0; y < T.n; ++y) {
            int v = T.at(x, y);
            if (seen[v]) return false;
            seen[v] = 1;
        }
    }
    return true;
}

inline bool column_bijective(const op_table& T) {
    std::vector<char> seen(T.n);
    for (int y = 0; y < T.n; ++y) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int x = 0; x < T.n; ++x) {
            int v = T.at(x, y);
            if (seen[v]) return false;
            seen[v] = 1;
        }
    }
    return true;
}

// u[x][t[x][y]] = y; inverts each row as a permutation
inline op_table row_inverse(const op_table& T) {
    if (!row_bijective(T)) throw not_row_bijective("row_inverse: a row is not a bijection");
    std::vector<int> entries(T.n * T.n);
    for (int x = 0; x < T.n; ++x)
        for (int y = 0; y < T.n; ++y) entries[x * T.n + T.at(x, y)] = y;
    return op_table(T.n, std::move(entries));
}

// u[t[x][y]][y] = x; inverts each column
inline op_table column_inverse(const op_table& T) {
    if (!column_bijective(T)) throw not_column_bijective("column_inverse: a column is not a bijection");
    std::vector<int> entries(T.n * T.n);
    for (int x = 0; x < T.n; ++x)
        for (int y = 0; y < T.n; ++y) entries[T.at(x, y) * T.n + y] = x;
    return op_table(T.n, std::move(entries));
}

// canonical flattening of a pair, used for hashing and file output
inline int pair_index(int n, int x, int y) { return x * n + y; }

// map X^2 -> X^2, (x,y) |-> (out1[x][y], out2[x][y])
struct pair_map {
    int n = 0;
    std::vector<int> out1, out2;  // indexed by pair_index

    pair_map() = default;
    pair_map(int n_, std::vector<int> o1, std::vector<int> o2)
        : n(n_), out1(std::move(o1)), out2(std::move(o2)) {
        if (n < 1) throw validation_error("pair_map: cardinality must be >= 1");
        if (static_cast<int>(out1.size()) != n * n || static_cast<int>(out2.size()) != n * n)
            throw validation_error("pair_map: tables must have n*n entries");
        for (int v : out1)
            if (v < 0 || v >= n) throw validation_error("pair_map: out1 entry out of range");
        for (int v : out2)
            if (v < 0 || v >= n) throw validation_error("pair_map: out2 entry out of range");
    }

    template <class F>
    static pair_map build(int n, F&& f) {
        std::vector<int> o1(n * n), o2(n * n);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                auto [a, b] = f(x, y);
                o1[pair_index(n, x, y)] = a;
                o2[pair_index(n, x, y)] = b;
            }
        return pair_map(n, std::move(o1), std::move(o2));
    }

    static pair_map identity(int n) {
        return build(n, [](int x, int y) { return std::pair<int, int>{x, y}; });
    }

    static pair_map flip(int n) {
        return build(n, [](int x, int y) { return std::pair<int, int>{y, x}; });
    }

    std::pair<int, int> operator()(int x, int y) const {
        const int i = pair_index(n, x, y);
        return {out1[i], out2[i]};
    }

    bool operator==(const pair_map&) const = default;
};

inline bool pairmap_bijective(const pair_map& P) {
    std::vector<char> seen(P.n * P.n, 0);
    for (int i = 0; i < P.n * P.n; ++i) {
        int j = pair_index(P.n, P.out1[i], P.out2[i]);
        if (seen[j]) return false;
        seen[j] = 1;
    }
    return true;
}

// P first, then Q
inline pair_map pairmap_compose(const pair_map& P, const pair_map& Q) {
    if (P.n != Q.n) throw validation_error("pairmap_compose: carrier mismatch");
    return pair_map::build(P.n, [&](int x, int y) {
        auto [a, b] = P(x, y);
        return Q(a, b);
    });
}

inline pair_map pairmap_inverse(const pair_map& P) {
    if (!pairmap_bijective(P)) throw not_bijective("pairmap_inverse: map is not a bijection");
    std::vector<int> o1(P.n * P.n), o2(P.n * P.n);
    for (int x = 0; x < P.n; ++x)
        for (int y = 0; y < P.n; ++y) {
            auto [a, b] = P(x, y);
            int j = pair_index(P.n, a, b);
            o1[j] = x;
            o2[j] = y;
        }
    return pair_map(P.n, std::move(o1), std::move(o2));
}

// all n! permutations of 0..n-1 in lexicographic order; fine for n <= 6
inline std::vector<permutation> all_permutations(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<permutation> out;
    do {
        out.push_back(permutation(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

}  // namespace birack
