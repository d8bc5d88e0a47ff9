// Finite groups as explicit multiplication tables. Only what the bundled
// fixtures need: axiom verification, cyclic groups, and S3.

#pragma once

#include "core.hpp"

namespace birack {

struct group_table {
    op_table mult;
    permutation inv;
    int e = 0;
};

struct group_violation {
    std::string axiom;  // "associativity", "identity", "inverse"
    triple where;
};

inline std::optional<group_violation> group_check(const op_table& mult, const permutation& inv, int e) {
    const int n = mult.n;
    if (inv.size() != n || e < 0 || e >= n)
        throw validation_error("group_check: shape mismatch");
    for (int x = 0; x < n; ++x) {
        if (mult.at(e, x) != x || mult.at(x, e) != x)
            return group_violation{"identity", {e, x, 0}};
        if (mult.at(x, inv(x)) != e || mult.at(inv(x), x) != e)
            return group_violation{"inverse", {x, inv(x), 0}};
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (mult.at(mult.at(x, y), z) != mult.at(x, mult.at(y, z)))
                    return group_violation{"associativity", {x, y, z}};
    return std::nullopt;
}

inline std::optional<group_violation> group_check(const group_table& g) {
    return group_check(g.mult, g.inv, g.e);
}

inline group_table cyclic_group(int n) {
    op_table mult = op_table::build(n, [n](int x, int y) { return (x + y) % n; });
    std::vector<int> inv(n);
    for (int x = 0; x < n; ++x) inv[x] = (n - x) % n;
    return group_table{std::move(mult), permutation(std::move(inv)), 0};
}

// S3 with elements 0..5 encoding permutations of {0,1,2} in lexicographic
// order: 0=[012], 1=[021], 2=[102], 3=[120], 4=[201], 5=[210].
// mult[a][b] = a after b (i.e. (a*b)(i) = a(b(i))).
inline group_table symmetric_group_s3() {
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto index_of = [&](const int p[3]) {
        for (int i = 0; i < 6; ++i)
            if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2]) return i;
        return -1;
    };
    op_table mult = op_table::build(6, [&](int a, int b) {
        int c[3];
        for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
        return index_of(c);
    });
    std::vector<int> inv(6);
    for (int a = 0; a < 6; ++a) {
        int c[3];
        for (int i = 0; i < 3; ++i) c[perms[a][i]] = i;
        inv[a] = index_of(c);
    }
    return group_table{std::move(mult), permutation(std::move(inv)), 0};
}

}  // namespace birack
