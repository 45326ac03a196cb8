#pragma once

#include "garside/germ.hpp"
#include "garside/presentation.hpp"

#include <istream>
#include <sstream>

namespace garside {

// Line-oriented input. Presentations use `objects:`, `gens:` or
// `gen: name src tgt`, and a `rels:` section of `w = w` lines. Germs start
// with `germ:` and use `elements:`/`element:`, `identity:`, and a
// `products:` section of `x * y = z` lines. `#` starts a comment, `1` is
// the empty word, `~a` inverts a letter.
struct ParsedInput {
    std::optional<Presentation> pres;
    std::optional<Germ> germ;
};

namespace detail {

inline std::vector<std::string> tokenize(const std::string& line) {
    std::string clean = line.substr(0, line.find('#'));
    std::istringstream in(clean);
    std::vector<std::string> tokens;
    std::string t;
    while (in >> t) tokens.push_back(t);
    return tokens;
}

inline int parse_object(const Alphabet& a, const std::string& name, int line) {
    auto o = a.find_object(name);
    if (!o) throw parse_error(line, "unknown object: " + name);
    return *o;
}

} // namespace detail

inline SignedPath parse_word(const Alphabet& alpha, const std::vector<std::string>& tokens,
                             int line) {
    if (tokens.empty()) throw parse_error(line, "empty word");
    SignedPath w;
    bool anchored = false;
    for (const auto& t : tokens) {
        if (t == "1") continue;
        bool inv = t.size() > 1 && t[0] == '~';
        std::string name = inv ? t.substr(1) : t;
        auto g = alpha.find_gen(name);
        if (!g) throw parse_error(line, "unknown letter: " + name);
        SignedLetter l{*g, inv};
        if (!anchored) {
            w.src = signed_src(alpha, l);
            w.tgt = w.src;
            anchored = true;
        }
        if (signed_src(alpha, l) != w.tgt)
            throw parse_error(line, "letters do not compose at: " + t);
        w.letters.push_back(l);
        w.tgt = signed_tgt(alpha, l);
    }
    return w;
}

inline SignedPath parse_word(const Alphabet& alpha, const std::string& text, int line = 0) {
    return parse_word(alpha, detail::tokenize(text), line);
}

inline Path parse_positive_word(const Alphabet& alpha, const std::vector<std::string>& tokens,
                                int line) {
    SignedPath w = parse_word(alpha, tokens, line);
    Path p = empty_path(w.src);
    p.tgt = w.tgt;
    for (const auto& l : w.letters) {
        if (l.inv) throw parse_error(line, "inverse letter in positive word");
        p.letters.push_back(l.gen);
    }
    return p;
}

inline Path parse_positive_word(const Alphabet& alpha, const std::string& text, int line = 0) {
    return parse_positive_word(alpha, detail::tokenize(text), line);
}

inline ParsedInput parse_input(std::istream& in) {
    std::vector<std::vector<std::string>> lines;
    std::vector<int> numbers;
    std::string raw;
    int lineno = 0;
    bool is_germ = false;
    while (std::getline(in, raw)) {
        ++lineno;
        auto tokens = detail::tokenize(raw);
        if (tokens.empty()) continue;
        if (tokens.size() == 1 && tokens[0] == "germ:") {
            is_germ = true;
            continue;
        }
        lines.push_back(std::move(tokens));
        numbers.push_back(lineno);
    }

    Alphabet alpha;
    bool letters_seen = false;
    auto ensure_object = [&] {
        if (alpha.objects.empty()) alpha.add_object("*");
    };

    enum class Section { none, rels, products };
    Section section = Section::none;
    std::vector<std::pair<std::vector<std::string>, int>> rel_lines;
    std::vector<std::pair<std::vector<std::string>, int>> prod_lines;
    std::vector<std::string> identity_names;
    int identity_line = 0;

    for (size_t k = 0; k < lines.size(); ++k) {
        auto& t = lines[k];
        int ln = numbers[k];
        const std::string& head = t[0];
        if (head == "objects:") {
            if (letters_seen) throw parse_error(ln, "objects must be declared before letters");
            for (size_t i = 1; i < t.size(); ++i) alpha.add_object(t[i]);
            section = Section::none;
        } else if (head == "gens:" || head == "elements:") {
            ensure_object();
            letters_seen = true;
            for (size_t i = 1; i < t.size(); ++i) {
                if (alpha.find_gen(t[i])) throw parse_error(ln, "duplicate letter: " + t[i]);
                alpha.add_gen(t[i], 0, 0);
            }
            section = Section::none;
        } else if (head == "gen:" || head == "element:") {
            if (t.size() != 4) throw parse_error(ln, head + " needs name, source, target");
            ensure_object();
            letters_seen = true;
            if (alpha.find_gen(t[1])) throw parse_error(ln, "duplicate letter: " + t[1]);
            alpha.add_gen(t[1], detail::parse_object(alpha, t[2], ln),
                          detail::parse_object(alpha, t[3], ln));
            section = Section::none;
        } else if (head == "identity:") {
            if (!is_germ) throw parse_error(ln, "identity: only valid after germ:");
            identity_names.assign(t.begin() + 1, t.end());
            identity_line = ln;
            section = Section::none;
        } else if (head == "rels:") {
            if (is_germ) throw parse_error(ln, "rels: not valid in a germ");
            section = Section::rels;
            if (t.size() > 1) rel_lines.push_back({{t.begin() + 1, t.end()}, ln});
        } else if (head == "products:") {
            if (!is_germ) throw parse_error(ln, "products: only valid after germ:");
            section = Section::products;
            if (t.size() > 1) prod_lines.push_back({{t.begin() + 1, t.end()}, ln});
        } else if (section == Section::rels) {
            rel_lines.push_back({t, ln});
        } else if (section == Section::products) {
            prod_lines.push_back({t, ln});
        } else {
            throw parse_error(ln, "unexpected line: " + head);
        }
    }

    ParsedInput out;
    if (!is_germ) {
        Presentation p;
        p.alpha = alpha;
        for (auto& [t, ln] : rel_lines) {
            std::vector<size_t> eqs;
            for (size_t i = 0; i < t.size(); ++i)
                if (t[i] == "=") eqs.push_back(i);
            if (eqs.size() != 1) throw parse_error(ln, "a relation needs exactly one =");
            std::vector<std::string> lhs(t.begin(), t.begin() + eqs[0]);
            std::vector<std::string> rhs(t.begin() + eqs[0] + 1, t.end());
            Path l = parse_positive_word(alpha, lhs, ln);
            Path r = parse_positive_word(alpha, rhs, ln);
            if (l.src != r.src || l.tgt != r.tgt)
                throw parse_error(ln, "relation sides have different endpoints");
            p.rels.push_back({l, r});
        }
        out.pres = std::move(p);
        return out;
    }

    if (identity_names.size() != alpha.objects.size())
        throw parse_error(identity_line, "need exactly one identity per object");
    std::vector<int> identity(alpha.objects.size(), -1);
    for (const auto& n : identity_names) {
        auto g = alpha.find_gen(n);
        if (!g) throw parse_error(identity_line, "unknown identity element: " + n);
        if (alpha.gens[*g].src != alpha.gens[*g].tgt)
            throw parse_error(identity_line, "identity must be an endomorphism: " + n);
        if (identity[alpha.gens[*g].src] >= 0)
            throw parse_error(identity_line, "two identities at one object");
        identity[alpha.gens[*g].src] = *g;
    }
    for (size_t x = 0; x < identity.size(); ++x)
        if (identity[x] < 0)
            throw parse_error(identity_line, "missing identity at object " + alpha.objects[x]);
    Germ g = make_germ(alpha, identity);
    for (auto& [t, ln] : prod_lines) {
        if (t.size() != 5 || t[1] != "*" || t[3] != "=")
            throw parse_error(ln, "a product line reads: x * y = z");
        auto find = [&](const std::string& n) {
            auto e = alpha.find_gen(n);
            if (!e) throw parse_error(ln, "unknown element: " + n);
            return *e;
        };
        int a = find(t[0]), b = find(t[2]), c = find(t[4]);
        if (alpha.gens[a].tgt != alpha.gens[b].src)
            throw parse_error(ln, "product of non-composable elements");
        if (alpha.gens[c].src != alpha.gens[a].src || alpha.gens[c].tgt != alpha.gens[b].tgt)
            throw parse_error(ln, "product value has wrong endpoints");
        if (g.op[a][b] && *g.op[a][b] != c) throw parse_error(ln, "conflicting product");
        g.set(a, b, c);
    }
    out.germ = std::move(g);
    return out;
}

inline ParsedInput parse_input(const std::string& text) {
    std::istringstream in(text);
    return parse_input(in);
}

inline std::string format_word(const Alphabet& alpha, const Path& w) {
    if (w.empty()) return "1";
    std::string out;
    for (int l : w.letters) {
        if (!out.empty()) out += ' ';
        out += alpha.gens[l].name;
    }
    return out;
}

inline std::string format_word(const Alphabet& alpha, const SignedPath& w) {
    if (w.letters.empty()) return "1";
    std::string out;
    for (const auto& l : w.letters) {
        if (!out.empty()) out += ' ';
        if (l.inv) out += '~';
        out += alpha.gens[l.gen].name;
    }
    return out;
}

} // namespace garside
