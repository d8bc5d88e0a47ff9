// Coloring framed links, presented as braid-word closures, by biracks:
// fixed-point counting, the kink map, and the invariance checks under the
// framed Reidemeister moves.

#pragma once

#include <random>

#include "solution.hpp"

namespace birack {

// letters are nonzero integers i with |i| < strands, meaning the braid
// generator at positions (|i|-1, |i|) with the sign of i
struct braid_word {
    int strands = 1;
    std::vector<int> letters;

    braid_word(int s, std::vector<int> ls) : strands(s), letters(std::move(ls)) {
        if (strands < 1) throw validation_error("braid_word: strands must be >= 1");
        for (int l : letters)
            if (l == 0 || std::abs(l) >= strands)
                throw bad_letter("braid_word: letter " + std::to_string(l) +
                                 " out of range for " + std::to_string(strands) + " strands");
    }
};

inline int writhe(const braid_word& w) {
    int sum = 0;
    for (int l : w.letters) sum += (l > 0 ? 1 : -1);
    return sum;
}

// applies sigma / sigma^{-1} to adjacent color positions
class braid_colorer {
  public:
    explicit braid_colorer(const solution& s) : sigma_(s), sigma_inv_(inverse_solution(s)) {
        require_birack(s, "braid_colorer");
    }

    int n() const { return sigma_.n(); }
    const solution& sigma() const { return sigma_; }
    const solution& sigma_inverse() const { return sigma_inv_; }

    void apply_letter(std::vector<int>& colors, int letter) const {
        const int p = std::abs(letter) - 1;
        const solution& m = letter > 0 ? sigma_ : sigma_inv_;
        auto [a, b] = m.map(colors[p], colors[p + 1]);
        colors[p] = a;
        colors[p + 1] = b;
    }

    void apply_word(std::vector<int>& colors, const braid_word& w) const {
        for (int l : w.letters) apply_letter(colors, l);
    }

  private:
    solution sigma_, sigma_inv_;
};

struct coloring_report {
    long long count = 0;
    int writhe = 0;
    std::optional<std::vector<std::vector<int>>> fixed_colorings;
};

namespace detail {

inline bool next_tuple(std::vector<int>& c, int n) {
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        if (++c[i] < n) return true;
        c[i] = 0;
    }
    return false;
}

}  // namespace detail

// number of tuples in X^strands fixed by the word action
inline coloring_report closure_colorings(const solution& s, const braid_word& w, bool list = false) {
    const braid_colorer colorer(s);
    const int n = colorer.n();
    double space = 1;
    for (int i = 0; i < w.strands; ++i) space *= n;
    if (space > 5e7) throw bound_exceeded("closure_colorings: color space too large");

    coloring_report rep;
    rep.writhe = writhe(w);
    if (list) rep.fixed_colorings.emplace();
    std::vector<int> colors(w.strands, 0), scratch;
    do {
        scratch = colors;
        colorer.apply_word(scratch, w);
        if (scratch == colors) {
            ++rep.count;
            if (list) rep.fixed_colorings->push_back(colors);
        }
    } while (detail::next_tuple(colors, n));
    return rep;
}

// the word action as a permutation of tuple indices (lexicographic, first
// position most significant); for small n^strands only
inline std::vector<int> word_action(const braid_colorer& colorer, const braid_word& w) {
    const int n = colorer.n();
    long long total = 1;
    for (int i = 0; i < w.strands; ++i) {
        total *= n;
        if (total > 5'000'000) throw bound_exceeded("word_action: color space too large");
    }
    std::vector<int> action(total);
    std::vector<int> colors(w.strands, 0);
    long long idx = 0;
    do {
        std::vector<int> scratch = colors;
        colorer.apply_word(scratch, w);
        long long out = 0;
        for (int v : scratch) out = out * n + v;
        action[idx++] = static_cast<int>(out);
    } while (detail::next_tuple(colors, n));
    return action;
}

// color change through a kink: x |-> x<|x of the derived rack
inline permutation kink_map(const solution& s) {
    require_birack(s, "kink_map");
    return phi_map(rack_table(derived_rack(s)));
}

struct kink_coloring {
    int loop = 0;  // the doubled strand color
    int out = 0;   // outgoing color
};

// unique coloring of a positive kink with incoming color x:
// loop = sqrt(x), out = phi(x); satisfies sigma(sqrt(x), x) = (sqrt(x), phi(x))
inline kink_coloring kink_color(const solution& s, int x) {
    require_birack(s, "kink_color");
    const permutation sq = sqrt_map(s);
    const permutation phi = kink_map(s);
    const kink_coloring kc{sq(x), phi(x)};
    if (s.map(kc.loop, x) != std::pair<int, int>{kc.loop, kc.out})
        throw formula_mismatch("kink_color: sigma(sqrt(x), x) != (sqrt(x), phi(x))");
    return kc;
}

// mirror rule for the negative kink: loop = sqrt(Tw(x)), out = Tw(x),
// with sigma^{-1}(loop, x) = (loop, out)
inline kink_coloring kink_color_mirror(const solution& s, int x) {
    require_birack(s, "kink_color_mirror");
    const permutation sq = sqrt_map(s);
    const permutation i = kink_map(s).inverse();
    const kink_coloring kc{sq(i(x)), i(x)};
    if (s.map(kc.loop, kc.out) != std::pair<int, int>{kc.loop, x})
        throw formula_mismatch("kink_color_mirror: sigma(loop, Tw(x)) != (loop, x)");
    return kc;
}

struct invariance_report {
    long long base_count = 0;
    int checks = 0;
    int failures = 0;
    std::vector<std::string> notes;

    bool ok() const { return failures == 0; }
};

// count invariance under R2 insertion, R3 rewriting, far commutation and
// conjugation; writhe bookkeeping and count preservation for a pair of
// opposite stabilizations (the modified first Reidemeister move), plus the
// kink rule and its mirror on every color
inline invariance_report framed_invariance_suite(const solution& s, const braid_word& w, int trials,
                                                 std::uint64_t seed = 0x5eed) {
    require_birack(s, "framed_invariance_suite");
    std::mt19937_64 rng(seed);
    invariance_report rep;
    rep.base_count = closure_colorings(s, w).count;
    const int base_writhe = writhe(w);

    auto expect = [&](const braid_word& rewritten, long long want, const std::string& what) {
        ++rep.checks;
        if (closure_colorings(s, rewritten).count != want) {
            ++rep.failures;
            rep.notes.push_back("count changed under " + what);
        }
    };
    auto rand_int = [&](int lo, int hi) {  // inclusive
        return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    auto rand_letter = [&](int strands) {
        int l = rand_int(1, strands - 1);
        return rng() % 2 ? l : -l;
    };

    for (int t = 0; t < trials; ++t) {
        std::vector<int> ls = w.letters;
        switch (t % 4) {
            case 0: {  // R2: insert a cancelling pair anywhere
                if (w.strands < 2) break;
                const int pos = rand_int(0, static_cast<int>(ls.size()));
                const int l = rand_letter(w.strands);
                ls.insert(ls.begin() + pos, {l, -l});
                expect(braid_word(w.strands, ls), rep.base_count, "R2 insertion");
                break;
            }
            case 1: {  // R3: rewrite [i, i+1, i] <-> [i+1, i, i+1]
                bool done = false;
                for (size_t p = 0; p + 2 < ls.size() && !done; ++p) {
                    const int a = ls[p], b = ls[p + 1], c = ls[p + 2];
                    if (a > 0 && b > 0 && a == c && (b == a + 1 || b == a - 1)) {
                        ls[p] = b;
                        ls[p + 1] = a;
                        ls[p + 2] = b;
                        done = true;
                    }
                }
                if (done) expect(braid_word(w.strands, ls), rep.base_count, "R3 rewrite");
                break;
            }
            case 2: {  // far commutation: swap [a,b] with ||a|-|b|| >= 2
                bool done = false;
                for (size_t p = 0; p + 1 < ls.size() && !done; ++p)
                    if (std::abs(std::abs(ls[p]) - std::abs(ls[p + 1])) >= 2) {
                        std::swap(ls[p], ls[p + 1]);
                        done = true;
                    }
                if (done) expect(braid_word(w.strands, ls), rep.base_count, "far commutation");
                break;
            }
            case 3: {  // conjugation u w u^{-1}
                if (w.strands < 2) break;
                const int u = rand_letter(w.strands);
                ls.insert(ls.begin(), u);
                ls.push_back(-u);
                expect(braid_word(w.strands, ls), rep.base_count, "conjugation");
                break;
            }
        }
    }

    // stabilization bookkeeping: one extra strand multiplies the count by n
    // (the new strand is free), each stabilization letter moves the writhe
    // by +-1, and a pair of opposite stabilizations restores the count
    {
        std::vector<int> up = w.letters;
        up.push_back(w.strands);
        const braid_word stab_pos(w.strands + 1, up);
        up.push_back(-w.strands);
        const braid_word stab_pair(w.strands + 1, up);
        std::vector<int> down = w.letters;
        down.push_back(-w.strands);
        const braid_word stab_neg(w.strands + 1, down);

        ++rep.checks;
        if (writhe(stab_pos) != base_writhe + 1 || writhe(stab_neg) != base_writhe - 1) {
            ++rep.failures;
            rep.notes.push_back("stabilization writhe bookkeeping failed");
        }
        ++rep.checks;
        if (writhe(stab_pair) != base_writhe) {
            ++rep.failures;
            rep.notes.push_back("opposite kink pair changed the writhe");
        }
        expect(stab_pair, rep.base_count * s.n(), "opposite stabilization pair");
    }

    // local kink rule and its mirror
    for (int x = 0; x < s.n(); ++x) {
        ++rep.checks;
        try {
            kink_color(s, x);
            kink_color_mirror(s, x);
        } catch (const formula_mismatch&) {
            ++rep.failures;
            rep.notes.push_back("kink rule asymmetry at color " + std::to_string(x));
        }
    }
    return rep;
}

}  // namespace birack
