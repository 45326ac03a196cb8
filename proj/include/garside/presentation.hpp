#pragma once

#include "garside/core.hpp"

namespace garside {

// A relation lhs = rhs between positive paths with equal endpoints.
struct Relation {
    Path lhs;
    Path rhs;
    bool operator==(const Relation&) const = default;
};

struct Presentation {
    Alphabet alpha;
    std::vector<Relation> rels;

    bool operator==(const Presentation&) const = default;

    bool is_homogeneous() const {
        for (const auto& r : rels)
            if (r.lhs.length() != r.rhs.length()) return false;
        return true;
    }

    // Reverses every word and swaps all endpoints.
    Presentation opposite() const {
        Presentation op;
        op.alpha.objects = alpha.objects;
        for (const auto& g : alpha.gens) op.alpha.gens.push_back({g.name, g.tgt, g.src});
        auto rev = [&](const Path& p) {
            Path r;
            r.letters.assign(p.letters.rbegin(), p.letters.rend());
            r.src = p.tgt;
            r.tgt = p.src;
            return r;
        };
        for (const auto& r : rels) op.rels.push_back({rev(r.lhs), rev(r.rhs)});
        return op;
    }
};

inline void validate_relation(const Relation& r) {
    if (r.lhs.src != r.rhs.src || r.lhs.tgt != r.rhs.tgt)
        throw composability_error("relation sides have different endpoints");
}

enum class Side { right, left };

// A partial letter-pair complement map. On the right side, comp(x, y) is the
// path u with x.u = y.comp(y, x) a defining relation; the diagonal is the
// implicit empty path. On the left side, comp(x, y).y = comp(y, x).x.
struct Complement {
    Side side = Side::right;
    Alphabet alpha;
    std::vector<std::vector<std::optional<Path>>> table;

    bool defined(int x, int y) const { return x == y || table[x][y].has_value(); }

    Path comp(int x, int y) const {
        if (x == y)
            return empty_path(side == Side::right ? alpha.gens[x].tgt : alpha.gens[x].src);
        if (!table[x][y]) throw precondition_error("complement undefined on pair");
        return *table[x][y];
    }

    // Every value has length at most one.
    bool is_short() const {
        for (const auto& row : table)
            for (const auto& e : row)
                if (e && e->length() > 1) return false;
        return true;
    }
};

// Builds the right complement of a complemented presentation: one relation
// x.u = y.v per unordered pair of distinct letters, none with equal heads.
inline Complement derive_right_complement(const Presentation& p) {
    Complement c;
    c.side = Side::right;
    c.alpha = p.alpha;
    int n = p.alpha.size();
    c.table.assign(n, std::vector<std::optional<Path>>(n));
    for (const auto& r : p.rels) {
        validate_relation(r);
        if (r.lhs.empty() || r.rhs.empty())
            throw not_complemented_error("relation with an empty side");
        int x = r.lhs.letters.front(), y = r.rhs.letters.front();
        if (x == y)
            throw not_complemented_error("relation sides start with the same letter: " +
                                         p.alpha.gens[x].name);
        if (c.table[x][y] || c.table[y][x])
            throw not_complemented_error("two relations for letter pair " +
                                         p.alpha.gens[x].name + ", " + p.alpha.gens[y].name);
        Path u = r.lhs, v = r.rhs;
        u.letters.erase(u.letters.begin());
        u.src = p.alpha.gens[x].tgt;
        v.letters.erase(v.letters.begin());
        v.src = p.alpha.gens[y].tgt;
        c.table[x][y] = u;
        c.table[y][x] = v;
    }
    return c;
}

// Left complement via the opposite presentation: lc(x, y) is the reverse of
// the opposite right complement's value on (y, x), so lc(x, y).y = lc(y, x).x.
inline Complement derive_left_complement(const Presentation& p) {
    Presentation op = p.opposite();
    Complement rc = derive_right_complement(op);
    Complement c;
    c.side = Side::left;
    c.alpha = p.alpha;
    int n = p.alpha.size();
    c.table.assign(n, std::vector<std::optional<Path>>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y || !rc.table[y][x]) continue;
            const Path& q = *rc.table[y][x];
            Path r;
            r.letters.assign(q.letters.rbegin(), q.letters.rend());
            r.src = q.tgt;
            r.tgt = q.src;
            c.table[x][y] = r;
        }
    return c;
}

} // namespace garside
