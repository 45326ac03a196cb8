#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace garside {

struct parse_error : std::runtime_error {
    int line;
    parse_error(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

struct composability_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct not_complemented_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Generator {
    std::string name;
    int src = 0;
    int tgt = 0;
    bool operator==(const Generator&) const = default;
};

// Objects and generators of a finite precategory; generator names are unique.
struct Alphabet {
    std::vector<std::string> objects;
    std::vector<Generator> gens;

    int add_object(const std::string& name) {
        for (int i = 0; i < static_cast<int>(objects.size()); ++i)
            if (objects[i] == name) return i;
        objects.push_back(name);
        return static_cast<int>(objects.size()) - 1;
    }

    int add_gen(const std::string& name, int src, int tgt) {
        if (find_gen(name)) throw std::invalid_argument("duplicate generator: " + name);
        gens.push_back({name, src, tgt});
        return static_cast<int>(gens.size()) - 1;
    }

    std::optional<int> find_gen(const std::string& name) const {
        for (int i = 0; i < static_cast<int>(gens.size()); ++i)
            if (gens[i].name == name) return i;
        return std::nullopt;
    }

    std::optional<int> find_object(const std::string& name) const {
        for (int i = 0; i < static_cast<int>(objects.size()); ++i)
            if (objects[i] == name) return i;
        return std::nullopt;
    }

    int size() const { return static_cast<int>(gens.size()); }

    static Alphabet monoid(const std::vector<std::string>& names) {
        Alphabet a;
        a.objects.push_back("*");
        for (const auto& n : names) a.add_gen(n, 0, 0);
        return a;
    }

    bool operator==(const Alphabet&) const = default;
};

// A positive path: a composable sequence of generators. Empty paths carry
// their object in src == tgt.
struct Path {
    std::vector<int> letters;
    int src = 0;
    int tgt = 0;

    bool empty() const { return letters.empty(); }
    int length() const { return static_cast<int>(letters.size()); }
    bool operator==(const Path&) const = default;
    auto operator<=>(const Path&) const = default;
};

inline Path empty_path(int obj) { return Path{{}, obj, obj}; }

inline Path letter_path(const Alphabet& a, int gen) {
    return Path{{gen}, a.gens[gen].src, a.gens[gen].tgt};
}

inline Path make_path(const Alphabet& a, const std::vector<int>& letters, int anchor = 0) {
    if (letters.empty()) return empty_path(anchor);
    Path p{letters, a.gens[letters.front()].src, a.gens[letters.back()].tgt};
    for (size_t i = 0; i + 1 < letters.size(); ++i)
        if (a.gens[letters[i]].tgt != a.gens[letters[i + 1]].src)
            throw composability_error("letters do not compose: " + a.gens[letters[i]].name +
                                      " then " + a.gens[letters[i + 1]].name);
    return p;
}

inline Path compose(const Path& x, const Path& y) {
    if (x.tgt != y.src) throw composability_error("paths do not compose");
    Path r = x;
    r.letters.insert(r.letters.end(), y.letters.begin(), y.letters.end());
    r.tgt = y.tgt;
    return r;
}

inline Path append(const Path& x, const Alphabet& a, int gen) {
    return compose(x, letter_path(a, gen));
}

struct SignedLetter {
    int gen = 0;
    bool inv = false;
    bool operator==(const SignedLetter&) const = default;
};

// A signed path: letters or their formal inverses, composable end to end.
struct SignedPath {
    std::vector<SignedLetter> letters;
    int src = 0;
    int tgt = 0;

    bool empty() const { return letters.empty(); }
    int length() const { return static_cast<int>(letters.size()); }
    bool operator==(const SignedPath&) const = default;
};

inline int signed_src(const Alphabet& a, SignedLetter l) {
    return l.inv ? a.gens[l.gen].tgt : a.gens[l.gen].src;
}

inline int signed_tgt(const Alphabet& a, SignedLetter l) {
    return l.inv ? a.gens[l.gen].src : a.gens[l.gen].tgt;
}

inline SignedPath empty_signed(int obj) { return SignedPath{{}, obj, obj}; }

inline SignedPath make_signed(const Alphabet& a, const std::vector<SignedLetter>& letters,
                              int anchor = 0) {
    if (letters.empty()) return empty_signed(anchor);
    SignedPath p{letters, signed_src(a, letters.front()), signed_tgt(a, letters.back())};
    for (size_t i = 0; i + 1 < letters.size(); ++i)
        if (signed_tgt(a, letters[i]) != signed_src(a, letters[i + 1]))
            throw composability_error("signed letters do not compose");
    return p;
}

inline SignedPath to_signed(const Path& p) {
    SignedPath s;
    s.src = p.src;
    s.tgt = p.tgt;
    for (int g : p.letters) s.letters.push_back({g, false});
    return s;
}

inline SignedPath bar(const Path& p) {
    SignedPath s;
    s.src = p.tgt;
    s.tgt = p.src;
    for (auto it = p.letters.rbegin(); it != p.letters.rend(); ++it)
        s.letters.push_back({*it, true});
    return s;
}

inline SignedPath bar(const SignedPath& p) {
    SignedPath s;
    s.src = p.tgt;
    s.tgt = p.src;
    for (auto it = p.letters.rbegin(); it != p.letters.rend(); ++it)
        s.letters.push_back({it->gen, !it->inv});
    return s;
}

inline SignedPath compose(const SignedPath& x, const SignedPath& y) {
    if (x.tgt != y.src) throw composability_error("signed paths do not compose");
    SignedPath r = x;
    r.letters.insert(r.letters.end(), y.letters.begin(), y.letters.end());
    r.tgt = y.tgt;
    return r;
}

enum class WordShape { positive, negative, pos_neg, neg_pos, mixed };

// pos_neg: v . bar(u); neg_pos: bar(u) . v. The all-positive and
// all-negative tags take precedence over the split shapes.
inline WordShape classify(const SignedPath& w) {
    bool any_neg = false, any_pos = false;
    for (const auto& l : w.letters) (l.inv ? any_neg : any_pos) = true;
    if (!any_neg) return WordShape::positive;
    if (!any_pos) return WordShape::negative;
    bool ok_pos_neg = true, ok_neg_pos = true;
    bool neg_seen = false, pos_seen = false;
    for (const auto& l : w.letters) {
        if (l.inv) {
            neg_seen = true;
            if (pos_seen) ok_neg_pos = false;
        } else {
            pos_seen = true;
            if (neg_seen) ok_pos_neg = false;
        }
    }
    if (ok_pos_neg) return WordShape::pos_neg;
    if (ok_neg_pos) return WordShape::neg_pos;
    return WordShape::mixed;
}

// Splits v . bar(u) into (v, u); requires pos_neg shape.
inline std::pair<Path, Path> split_pos_neg(const Alphabet& a, const SignedPath& w) {
    size_t i = 0;
    std::vector<int> pos;
    while (i < w.letters.size() && !w.letters[i].inv) pos.push_back(w.letters[i++].gen);
    std::vector<int> neg_rev;
    while (i < w.letters.size() && w.letters[i].inv) neg_rev.push_back(w.letters[i++].gen);
    if (i != w.letters.size()) throw precondition_error("word is not positive-negative");
    std::reverse(neg_rev.begin(), neg_rev.end());
    Path v = pos.empty() ? empty_path(w.src) : make_path(a, pos);
    Path u = neg_rev.empty() ? empty_path(w.tgt) : make_path(a, neg_rev);
    return {v, u};
}

// Splits bar(u) . v into (u, v); requires neg_pos shape.
inline std::pair<Path, Path> split_neg_pos(const Alphabet& a, const SignedPath& w) {
    size_t i = 0;
    std::vector<int> neg_rev;
    while (i < w.letters.size() && w.letters[i].inv) neg_rev.push_back(w.letters[i++].gen);
    std::vector<int> pos;
    while (i < w.letters.size() && !w.letters[i].inv) pos.push_back(w.letters[i++].gen);
    if (i != w.letters.size()) throw precondition_error("word is not negative-positive");
    std::reverse(neg_rev.begin(), neg_rev.end());
    Path u = neg_rev.empty() ? empty_path(w.src) : make_path(a, neg_rev);
    Path v = pos.empty() ? empty_path(u.src) : make_path(a, pos);
    return {u, v};
}

} // namespace garside
