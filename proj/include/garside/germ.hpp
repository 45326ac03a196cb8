#pragma once

#include "garside/presentation.hpp"

#include <cstdlib>
#include <functional>

namespace garside {

// Finite germ: elements with endpoints, one identity per object, and a
// partial product whose defined values stay inside the element family.
struct Germ {
    Alphabet alpha;            // germ elements, identities included
    std::vector<int> identity; // element id per object
    std::vector<std::vector<std::optional<int>>> op;

    int size() const { return alpha.size(); }
    bool is_identity(int e) const {
        return identity[alpha.gens[e].src] == e || identity[alpha.gens[e].tgt] == e;
    }
    bool composable(int a, int b) const { return alpha.gens[a].tgt == alpha.gens[b].src; }
    std::optional<int> prod(int a, int b) const { return op[a][b]; }
    void set(int a, int b, int c) { op[a][b] = c; }
};

inline Germ make_germ(Alphabet alpha, std::vector<int> identity) {
    Germ g{std::move(alpha), std::move(identity), {}};
    g.op.assign(g.size(), std::vector<std::optional<int>>(g.size()));
    for (size_t x = 0; x < g.identity.size(); ++x) {
        int e = g.identity[x];
        const auto& gen = g.alpha.gens[e];
        if (gen.src != static_cast<int>(x) || gen.tgt != static_cast<int>(x))
            throw precondition_error("identity element has wrong endpoints");
    }
    for (int e = 0; e < g.size(); ++e) {
        g.set(g.identity[g.alpha.gens[e].src], e, e);
        g.set(e, g.identity[g.alpha.gens[e].tgt], e);
    }
    return g;
}

// Checks endpoint compatibility, the identity laws, and the partial
// associativity law; reports the first violation with its witness.
inline std::optional<std::string> validate_germ(const Germ& g) {
    int n = g.size();
    if (static_cast<int>(g.identity.size()) != static_cast<int>(g.alpha.objects.size()))
        return "identity list does not match the object list";
    auto name = [&](int e) { return g.alpha.gens[e].name; };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto c = g.prod(a, b);
            if (!c) continue;
            if (!g.composable(a, b))
                return "product " + name(a) + "*" + name(b) + " defined on non-composable pair";
            if (g.alpha.gens[*c].src != g.alpha.gens[a].src ||
                g.alpha.gens[*c].tgt != g.alpha.gens[b].tgt)
                return "product " + name(a) + "*" + name(b) + " has wrong endpoints";
        }
    for (int e = 0; e < n; ++e) {
        int ls = g.identity[g.alpha.gens[e].src], rt = g.identity[g.alpha.gens[e].tgt];
        if (g.prod(ls, e) != std::optional<int>(e))
            return "identity law fails on the left of " + name(e);
        if (g.prod(e, rt) != std::optional<int>(e))
            return "identity law fails on the right of " + name(e);
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!g.composable(a, b)) continue;
            for (int c = 0; c < n; ++c) {
                if (!g.composable(b, c)) continue;
                auto ab = g.prod(a, b), bc = g.prod(b, c);
                if (!ab || !bc) continue;
                auto l = g.prod(*ab, c), r = g.prod(a, *bc);
                if (l.has_value() != r.has_value() || (l && *l != *r))
                    return "associativity fails on (" + name(a) + ", " + name(b) + ", " +
                           name(c) + ")";
            }
        }
    return std::nullopt;
}

// Left-associativity: (a*b)*c defined forces b*c defined.
inline bool is_left_associative(const Germ& g) {
    int n = g.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto ab = g.prod(a, b);
            if (!ab) continue;
            for (int c = 0; c < n; ++c)
                if (g.prod(*ab, c) && !g.prod(b, c)) return false;
        }
    return true;
}

struct LocalDivisibility {
    bool cancellative = true;
    std::vector<std::vector<bool>> table; // table[a][x]: a divides x within the germ

    bool divides(int a, int x) const { return table[a][x]; }
    bool strictly_divides(int a, int x) const { return table[a][x] && !table[x][a]; }
};

// Marks a as a divisor of every defined a*b; a repeated value within a row
// witnesses a left-cancellativity failure.
inline LocalDivisibility left_divisibility(const Germ& g) {
    int n = g.size();
    LocalDivisibility d;
    d.table.assign(n, std::vector<bool>(n, false));
    for (int a = 0; a < n; ++a) {
        std::vector<int> seen_by(n, -1);
        for (int b = 0; b < n; ++b) {
            auto c = g.prod(a, b);
            if (!c) continue;
            if (seen_by[*c] >= 0) d.cancellative = false;
            seen_by[*c] = b;
            d.table[a][*c] = true;
        }
    }
    return d;
}

inline bool is_left_cancellative(const Germ& g) { return left_divisibility(g).cancellative; }

// Orders the elements so that no later entry strictly divides an earlier one:
// each element is inserted before its first strict divisor.
inline std::vector<int> non_ascending(const Germ& g, const LocalDivisibility& d) {
    std::vector<int> out;
    for (int e = 0; e < g.size(); ++e) {
        size_t pos = out.size();
        for (size_t i = 0; i < out.size(); ++i)
            if (d.strictly_divides(out[i], e)) {
                pos = i;
                break;
            }
        out.insert(out.begin() + static_cast<long>(pos), e);
    }
    return out;
}

// J(a1, a2) = elements b with a1*b defined and b dividing a2.
inline std::vector<int> j_set(const Germ& g, const LocalDivisibility& d, int a1, int a2) {
    std::vector<int> out;
    for (int b = 0; b < g.size(); ++b)
        if (g.prod(a1, b) && d.divides(b, a2)) out.push_back(b);
    return out;
}

// Scans the non-ascending order: the first member of J(a1, a2) must be
// divided by every later member; returns that greatest element.
inline std::optional<int> j_has_greatest(const Germ& g, const std::vector<int>& sprime, int a1,
                                         int a2, const LocalDivisibility& d) {
    int cand = -1;
    for (int e : sprime) {
        if (!g.prod(a1, e) || !d.divides(e, a2)) continue;
        if (cand < 0) {
            cand = e;
            continue;
        }
        if (!d.divides(e, cand)) return std::nullopt;
    }
    if (cand < 0) return std::nullopt;
    return cand;
}

struct GarsideGermReport {
    bool ok = true;
    std::optional<std::pair<int, int>> witness; // first composable pair whose J has no greatest
};

// A germ is Garside iff it is left-associative, left-cancellative, and every
// composable pair has a greatest J-element.
inline GarsideGermReport is_garside_germ(const Germ& g) {
    GarsideGermReport rep;
    if (!is_left_associative(g)) {
        rep.ok = false;
        return rep;
    }
    LocalDivisibility d = left_divisibility(g);
    if (!d.cancellative) {
        rep.ok = false;
        return rep;
    }
    std::vector<int> sprime = non_ascending(g, d);
    for (int a1 = 0; a1 < g.size(); ++a1)
        for (int a2 = 0; a2 < g.size(); ++a2) {
            if (!g.composable(a1, a2)) continue;
            if (!j_has_greatest(g, sprime, a1, a2, d)) {
                rep.ok = false;
                rep.witness = {a1, a2};
                return rep;
            }
        }
    return rep;
}

// Normal decomposition of a1*a2: b = greatest J-element, c the unique
// element with a2 = b*c; returns (a1*b, c).
inline std::pair<int, int> germ_square_witness(const Germ& g, const LocalDivisibility& d,
                                               const std::vector<int>& sprime, int a1, int a2) {
    if (!g.composable(a1, a2)) throw composability_error("square witness of non-composable pair");
    auto b = j_has_greatest(g, sprime, a1, a2, d);
    if (!b) throw precondition_error("not a Garside germ: J has no greatest element");
    std::optional<int> c;
    for (int e = 0; e < g.size(); ++e)
        if (g.prod(*b, e) == std::optional<int>(a2)) {
            c = e;
            break;
        }
    if (!c) throw precondition_error("greatest J-element does not divide the second factor");
    return {*g.prod(a1, *b), *c};
}

inline std::pair<int, int> germ_square_witness(const Germ& g, int a1, int a2) {
    LocalDivisibility d = left_divisibility(g);
    return germ_square_witness(g, d, non_ascending(g, d), a1, a2);
}

// Presentation of the generated category: the non-identity elements with one
// relation a.b = a*b per defined product, identity factors elided.
inline Presentation germ_to_presentation(const Germ& g) {
    Presentation p;
    p.alpha.objects = g.alpha.objects;
    std::vector<int> letter_of(g.size(), -1);
    for (int e = 0; e < g.size(); ++e) {
        if (g.is_identity(e)) continue;
        letter_of[e] = p.alpha.add_gen(g.alpha.gens[e].name, g.alpha.gens[e].src,
                                       g.alpha.gens[e].tgt);
    }
    auto word_of = [&](int e) {
        if (g.is_identity(e)) return empty_path(g.alpha.gens[e].src);
        return letter_path(p.alpha, letter_of[e]);
    };
    for (int a = 0; a < g.size(); ++a) {
        if (g.is_identity(a)) continue;
        for (int b = 0; b < g.size(); ++b) {
            if (g.is_identity(b)) continue;
            auto c = g.prod(a, b);
            if (!c) continue;
            p.rels.push_back({compose(word_of(a), word_of(b)), word_of(*c)});
        }
    }
    return p;
}

// Invertible elements: fixpoint of pairs whose two products are already
// known invertible, seeded with the identities.
inline std::vector<int> invertibles(const Germ& g) {
    std::vector<bool> inv(g.size(), false);
    for (int e : g.identity) inv[e] = true;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int e = 0; e < g.size(); ++e) {
            if (inv[e]) continue;
            for (int f = 0; f < g.size(); ++f) {
                auto ef = g.composable(e, f) ? g.prod(e, f) : std::nullopt;
                auto fe = g.composable(f, e) ? g.prod(f, e) : std::nullopt;
                if (ef && fe && inv[*ef] && inv[*fe]) {
                    inv[e] = true;
                    inv[f] = true;
                    changed = true;
                }
            }
        }
    }
    std::vector<int> out;
    for (int e = 0; e < g.size(); ++e)
        if (inv[e]) out.push_back(e);
    return out;
}

// Atoms: non-identity elements that are not a product of two non-identity
// elements; they generate the category of any finite germ without
// nontrivial invertibles.
inline std::vector<int> germ_atoms(const Germ& g) {
    std::vector<bool> composite(g.size(), false);
    for (int a = 0; a < g.size(); ++a) {
        if (g.is_identity(a)) continue;
        for (int b = 0; b < g.size(); ++b) {
            if (g.is_identity(b)) continue;
            auto c = g.prod(a, b);
            if (c && !g.is_identity(*c) && *c != a && *c != b) composite[*c] = true;
        }
    }
    std::vector<int> out;
    for (int e = 0; e < g.size(); ++e)
        if (!g.is_identity(e) && !composite[e]) out.push_back(e);
    return out;
}

struct BallResult {
    Alphabet atoms;
    Presentation atom_presentation; // germ relations rewritten over the atoms
    std::vector<Path> words;        // canonical representatives, shortlex order
};

namespace detail {

inline std::vector<int> expand_to_atoms(const Germ& g, int e, std::vector<std::vector<int>>& memo,
                                        std::vector<int>& state) {
    if (state[e] == 2) return memo[e];
    if (state[e] == 1) throw std::runtime_error("germ has a product cycle; no atom expansion");
    state[e] = 1;
    if (g.is_identity(e)) {
        memo[e] = {};
    } else {
        std::optional<std::pair<int, int>> split;
        for (int a = 0; a < g.size() && !split; ++a) {
            if (g.is_identity(a) || a == e) continue;
            for (int b = 0; b < g.size(); ++b) {
                if (g.is_identity(b) || b == e) continue;
                if (g.prod(a, b) == std::optional<int>(e)) {
                    split = {a, b};
                    break;
                }
            }
        }
        if (!split) {
            memo[e] = {e};
        } else {
            auto l = expand_to_atoms(g, split->first, memo, state);
            auto r = expand_to_atoms(g, split->second, memo, state);
            l.insert(l.end(), r.begin(), r.end());
            memo[e] = l;
        }
    }
    state[e] = 2;
    return memo[e];
}

} // namespace detail

// Brute-force oracle: all elements of the generated category expressible as
// atom words of length at most len, as shortlex-canonical representatives.
// Equivalence is the closure of the germ relations rewritten over atoms.
inline BallResult enumerate_ball(const Germ& g, int len, int cap = 10000) {
    BallResult out;
    out.atoms.objects = g.alpha.objects;
    std::vector<int> atoms = germ_atoms(g);
    std::vector<int> atom_letter(g.size(), -1);
    for (int e : atoms)
        atom_letter[e] = out.atoms.add_gen(g.alpha.gens[e].name, g.alpha.gens[e].src,
                                           g.alpha.gens[e].tgt);
    std::vector<std::vector<int>> memo(g.size());
    std::vector<int> state(g.size(), 0);
    auto expand = [&](int e) {
        std::vector<int> elems = detail::expand_to_atoms(g, e, memo, state);
        std::vector<int> letters;
        for (int x : elems) letters.push_back(atom_letter[x]);
        return letters;
    };
    out.atom_presentation.alpha = out.atoms;
    for (int a = 0; a < g.size(); ++a) {
        if (g.is_identity(a)) continue;
        for (int b = 0; b < g.size(); ++b) {
            if (g.is_identity(b)) continue;
            auto c = g.prod(a, b);
            if (!c) continue;
            std::vector<int> lhs = expand(a), rhs;
            {
                auto r = expand(b);
                lhs.insert(lhs.end(), r.begin(), r.end());
                rhs = expand(*c);
            }
            if (lhs == rhs) continue;
            int src = g.alpha.gens[a].src;
            out.atom_presentation.rels.push_back(
                {make_path(out.atoms, lhs, src), make_path(out.atoms, rhs, src)});
        }
    }
    bool homogeneous = out.atom_presentation.is_homogeneous();
    int max_len = len;
    if (!homogeneous) {
        int stretch = 0;
        for (const auto& r : out.atom_presentation.rels)
            stretch = std::max(stretch,
                               std::abs(r.lhs.length() - r.rhs.length()));
        max_len = len + 2 * (stretch + 1);
    }
    // breadth-first congruence closure over all composable atom words
    std::vector<Path> words;
    std::map<std::pair<std::vector<int>, int>, int> index;
    std::function<int(const Path&)> intern = [&](const Path& p) {
        auto key = std::make_pair(p.letters, p.src);
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(words.size());
        if (id >= cap) throw std::runtime_error("ball cap exceeded");
        words.push_back(p);
        index.emplace(key, id);
        return id;
    };
    for (size_t x = 0; x < out.atoms.objects.size(); ++x)
        intern(empty_path(static_cast<int>(x)));
    for (size_t i = 0; i < words.size(); ++i) {
        Path w = words[i];
        if (w.length() >= max_len) continue;
        for (int l = 0; l < out.atoms.size(); ++l)
            if (out.atoms.gens[l].src == w.tgt) intern(append(w, out.atoms, l));
    }
    std::vector<int> parent(words.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int x, int y) {
        while (parent.size() < words.size()) parent.push_back(static_cast<int>(parent.size()));
        x = find(x);
        y = find(y);
        if (x != y) parent[x] = y;
    };
    for (size_t i = 0; i < words.size(); ++i) {
        const Path& w = words[i];
        for (const auto& rel : out.atom_presentation.rels)
            for (int dir = 0; dir < 2; ++dir) {
                const Path& from = dir ? rel.rhs : rel.lhs;
                const Path& to = dir ? rel.lhs : rel.rhs;
                if (to.length() > from.length() &&
                    w.length() - from.length() + to.length() > max_len)
                    continue;
                for (int pos = 0; pos + from.length() <= w.length(); ++pos) {
                    bool match = true;
                    for (int k = 0; k < from.length(); ++k)
                        if (w.letters[pos + k] != from.letters[k]) {
                            match = false;
                            break;
                        }
                    if (!match) continue;
                    if (from.empty()) continue;
                    std::vector<int> nl(w.letters.begin(), w.letters.begin() + pos);
                    nl.insert(nl.end(), to.letters.begin(), to.letters.end());
                    nl.insert(nl.end(), w.letters.begin() + pos + from.length(),
                              w.letters.end());
                    unite(static_cast<int>(i), intern(make_path(out.atoms, nl, w.src)));
                }
            }
    }
    auto shortlex_less = [&](const Path& x, const Path& y) {
        if (x.length() != y.length()) return x.length() < y.length();
        for (int k = 0; k < x.length(); ++k) {
            const auto& nx = out.atoms.gens[x.letters[k]].name;
            const auto& ny = out.atoms.gens[y.letters[k]].name;
            if (nx != ny) return nx < ny;
        }
        return false;
    };
    std::map<int, Path> canon;
    for (size_t i = 0; i < words.size(); ++i) {
        if (words[i].length() > len) continue;
        int r = find(static_cast<int>(i));
        auto it = canon.find(r);
        if (it == canon.end() || shortlex_less(words[i], it->second)) canon[r] = words[i];
    }
    for (auto& [r, w] : canon) out.words.push_back(w);
    std::sort(out.words.begin(), out.words.end(),
              [&](const Path& x, const Path& y) { return shortlex_less(x, y); });
    return out;
}

} // namespace garside
