#pragma once

#include "garside/presentation.hpp"

#include <array>
#include <sstream>

namespace garside {

enum class RevStatus { Reversed, Fail, OutOfFuel };

// Grid edges hold single positive letters; an empty label marks a collapsed
// square. Horizontal edges advance columns, vertical edges advance rows.
struct GridEdge {
    int from = 0;
    int to = 0;
    bool horizontal = true;
    Path label;
};

struct Grid {
    int vertex_count = 0;
    std::vector<GridEdge> edges;
    int new_vertex() { return vertex_count++; }
};

struct ReverseResult {
    RevStatus status = RevStatus::Reversed;
    SignedPath word;
    long long steps = 0;
    long long fills = 0;
    std::optional<Grid> grid;
};

namespace detail {

// Extension of a short complement to empty arguments: equal letters and
// letters against the empty path collapse a square.
inline std::optional<Path> theta_hat_right(const Complement& theta, const Path& x,
                                           const Path& y) {
    if (x.empty()) return y;
    if (y.empty()) return empty_path(x.tgt);
    int gx = x.letters[0], gy = y.letters[0];
    if (gx == gy) return empty_path(x.tgt);
    if (!theta.defined(gx, gy)) return std::nullopt;
    Path r = theta.comp(gx, gy);
    if (r.length() > 1) throw precondition_error("right complement is not short");
    return r;
}

inline std::optional<Path> lc_hat_left(const Complement& lc, const Path& x, const Path& y) {
    // lc_hat_left(x, y) is the factor multiplying y: lc(x, y).y = lc(y, x).x.
    if (x.empty()) return empty_path(y.src);
    if (y.empty()) return x;
    int gx = x.letters[0], gy = y.letters[0];
    if (gx == gy) return empty_path(x.src);
    if (!lc.defined(gx, gy)) return std::nullopt;
    Path r = lc.comp(gx, gy);
    if (r.length() > 1) throw precondition_error("left complement is not short");
    return r;
}

struct WordState {
    std::vector<SignedLetter> word;
    std::vector<int> boundary; // one grid vertex per position between letters
    Grid grid;
    bool tracking = false;

    void init(const Alphabet& alpha, const SignedPath& w, bool want_grid) {
        word = w.letters;
        tracking = want_grid;
        if (!tracking) return;
        boundary.resize(word.size() + 1);
        for (auto& v : boundary) v = grid.new_vertex();
        for (size_t k = 0; k < word.size(); ++k) {
            Path lab = letter_path(alpha, word[k].gen);
            if (word[k].inv)
                grid.edges.push_back({boundary[k + 1], boundary[k], false, lab});
            else
                grid.edges.push_back({boundary[k], boundary[k + 1], true, lab});
        }
    }

    void replace_letters(size_t i, const std::vector<SignedLetter>& repl) {
        word.erase(word.begin() + static_cast<long>(i), word.begin() + static_cast<long>(i) + 2);
        word.insert(word.begin() + static_cast<long>(i), repl.begin(), repl.end());
    }

    void collapse_boundary(size_t i, int junction) {
        boundary.erase(boundary.begin() + static_cast<long>(i),
                       boundary.begin() + static_cast<long>(i) + 3);
        boundary.insert(boundary.begin() + static_cast<long>(i), junction);
    }

    void set_inner_boundary(size_t i, const std::vector<int>& inner) {
        boundary.erase(boundary.begin() + static_cast<long>(i) + 1);
        boundary.insert(boundary.begin() + static_cast<long>(i) + 1, inner.begin(), inner.end());
    }

    // Rewrites bar(a).b at position i into p1.bar(p2); the square hangs off
    // the corner vertices s (before bar(a)) and t (after b).
    void splice_right(const Alphabet& alpha, size_t i, const Path& p1, const Path& p2) {
        std::vector<SignedLetter> repl;
        for (int g : p1.letters) repl.push_back({g, false});
        for (auto it = p2.letters.rbegin(); it != p2.letters.rend(); ++it)
            repl.push_back({*it, true});
        if (tracking) {
            int s = boundary[i], t = boundary[i + 2];
            if (p1.empty() && p2.empty()) {
                int n = grid.new_vertex();
                grid.edges.push_back({s, n, true, p1});
                grid.edges.push_back({t, n, false, p2});
                collapse_boundary(i, n);
            } else {
                int apex = p1.empty() ? s : (p2.empty() ? t : grid.new_vertex());
                std::vector<int> cv(p1.length() + 1), dv(p2.length() + 1);
                cv.front() = s;
                cv.back() = apex;
                for (int k = 1; k < p1.length(); ++k) cv[k] = grid.new_vertex();
                for (int k = 1; k <= p1.length(); ++k)
                    grid.edges.push_back(
                        {cv[k - 1], cv[k], true, letter_path(alpha, p1.letters[k - 1])});
                dv.front() = t;
                dv.back() = apex;
                for (int k = 1; k < p2.length(); ++k) dv[k] = grid.new_vertex();
                for (int k = 1; k <= p2.length(); ++k)
                    grid.edges.push_back(
                        {dv[k - 1], dv[k], false, letter_path(alpha, p2.letters[k - 1])});
                std::vector<int> inner;
                for (int k = 1; k < p1.length(); ++k) inner.push_back(cv[k]);
                inner.push_back(apex);
                for (int k = p2.length() - 1; k >= 1; --k) inner.push_back(dv[k]);
                if (p1.empty()) inner.erase(inner.begin());
                if (p2.empty()) inner.pop_back();
                set_inner_boundary(i, inner);
            }
        }
        replace_letters(i, repl);
    }

    // Rewrites b.bar(a) at position i into bar(p1).p2; the square hangs off
    // the corner vertices m (before b) and t (after bar(a)).
    void splice_left(const Alphabet& alpha, size_t i, const Path& p1, const Path& p2) {
        std::vector<SignedLetter> repl;
        for (auto it = p1.letters.rbegin(); it != p1.letters.rend(); ++it)
            repl.push_back({*it, true});
        for (int g : p2.letters) repl.push_back({g, false});
        if (tracking) {
            int m = boundary[i], t = boundary[i + 2];
            if (p1.empty() && p2.empty()) {
                int n = grid.new_vertex();
                grid.edges.push_back({n, m, false, p1});
                grid.edges.push_back({n, t, true, p2});
                collapse_boundary(i, n);
            } else {
                int apex = p1.empty() ? m : (p2.empty() ? t : grid.new_vertex());
                std::vector<int> ev(p1.length() + 1), fv(p2.length() + 1);
                ev.front() = apex;
                ev.back() = m;
                for (int k = 1; k < p1.length(); ++k) ev[k] = grid.new_vertex();
                for (int k = 1; k <= p1.length(); ++k)
                    grid.edges.push_back(
                        {ev[k - 1], ev[k], false, letter_path(alpha, p1.letters[k - 1])});
                fv.front() = apex;
                fv.back() = t;
                for (int k = 1; k < p2.length(); ++k) fv[k] = grid.new_vertex();
                for (int k = 1; k <= p2.length(); ++k)
                    grid.edges.push_back(
                        {fv[k - 1], fv[k], true, letter_path(alpha, p2.letters[k - 1])});
                std::vector<int> inner;
                for (int k = p1.length() - 1; k >= 1; --k) inner.push_back(ev[k]);
                inner.push_back(apex);
                for (int k = 1; k < p2.length(); ++k) inner.push_back(fv[k]);
                if (p1.empty()) inner.erase(inner.begin());
                if (p2.empty()) inner.pop_back();
                set_inner_boundary(i, inner);
            }
        }
        replace_letters(i, repl);
    }
};

} // namespace detail

// Short right-reversing of bar(u).v by filling a (|u| x |v|) grid; exactly
// |u|*|v| cell fills on success. Returns v'.bar(u').
inline ReverseResult right_reverse_short(const Complement& theta, const Path& u, const Path& v,
                                         bool want_grid = false) {
    if (theta.side != Side::right) throw precondition_error("needs a right complement");
    if (u.src != v.src) throw precondition_error("paths must share a source");
    int q = u.length(), p = v.length();
    std::vector<std::vector<Path>> a(q + 1, std::vector<Path>(p + 1));
    std::vector<std::vector<Path>> b(q + 1, std::vector<Path>(p + 1));
    for (int j = 1; j <= p; ++j) a[0][j] = letter_path(theta.alpha, v.letters[j - 1]);
    for (int i = 1; i <= q; ++i) b[i][0] = letter_path(theta.alpha, u.letters[i - 1]);
    ReverseResult res;
    for (int i = 1; i <= q; ++i)
        for (int j = 1; j <= p; ++j) {
            auto bottom = detail::theta_hat_right(theta, b[i][j - 1], a[i - 1][j]);
            auto right = detail::theta_hat_right(theta, a[i - 1][j], b[i][j - 1]);
            ++res.fills;
            if (!bottom || !right) {
                res.status = RevStatus::Fail;
                res.word = compose(bar(u), to_signed(v));
                return res;
            }
            a[i][j] = *bottom;
            b[i][j] = *right;
        }
    Path vp = empty_path(u.tgt);
    for (int j = 1; j <= p; ++j) vp = compose(vp, a[q][j]);
    Path up = empty_path(v.tgt);
    for (int i = 1; i <= q; ++i) up = compose(up, b[i][p]);
    res.status = RevStatus::Reversed;
    res.word = compose(to_signed(vp), bar(up));
    if (want_grid) {
        Grid g;
        auto vid = [&](int i, int j) { return i * (p + 1) + j; };
        g.vertex_count = (q + 1) * (p + 1);
        for (int i = 0; i <= q; ++i)
            for (int j = 1; j <= p; ++j)
                g.edges.push_back({vid(i, j - 1), vid(i, j), true, a[i][j]});
        for (int i = 1; i <= q; ++i)
            for (int j = 0; j <= p; ++j)
                g.edges.push_back({vid(i - 1, j), vid(i, j), false, b[i][j]});
        res.grid = g;
    }
    return res;
}

// Short left-reversing of v.bar(u); the grid grows toward the top left.
// Returns bar(u').v'.
inline ReverseResult left_reverse_short(const Complement& lc, const Path& v, const Path& u,
                                        bool want_grid = false) {
    if (lc.side != Side::left) throw precondition_error("needs a left complement");
    if (u.tgt != v.tgt) throw precondition_error("paths must share a target");
    int q = u.length(), p = v.length();
    std::vector<std::vector<Path>> a(q + 1, std::vector<Path>(p + 1));
    std::vector<std::vector<Path>> b(q + 1, std::vector<Path>(p + 1));
    for (int j = 1; j <= p; ++j) a[q][j] = letter_path(lc.alpha, v.letters[j - 1]);
    for (int i = 1; i <= q; ++i) b[i][p] = letter_path(lc.alpha, u.letters[i - 1]);
    ReverseResult res;
    for (int i = q; i >= 1; --i)
        for (int j = p; j >= 1; --j) {
            auto left = detail::lc_hat_left(lc, b[i][j], a[i][j]);
            auto top = detail::lc_hat_left(lc, a[i][j], b[i][j]);
            ++res.fills;
            if (!left || !top) {
                res.status = RevStatus::Fail;
                res.word = compose(to_signed(v), bar(u));
                return res;
            }
            b[i][j - 1] = *left;
            a[i - 1][j] = *top;
        }
    Path up = empty_path(v.src);
    for (int i = 1; i <= q; ++i) up = compose(up, b[i][0]);
    Path vp = empty_path(up.tgt);
    for (int j = 1; j <= p; ++j) vp = compose(vp, a[0][j]);
    res.status = RevStatus::Reversed;
    res.word = compose(bar(up), to_signed(vp));
    if (want_grid) {
        Grid g;
        auto vid = [&](int i, int j) { return i * (p + 1) + j; };
        g.vertex_count = (q + 1) * (p + 1);
        for (int i = 0; i <= q; ++i)
            for (int j = 1; j <= p; ++j)
                g.edges.push_back({vid(i, j - 1), vid(i, j), true, a[i][j]});
        for (int i = 1; i <= q; ++i)
            for (int j = 0; j <= p; ++j)
                g.edges.push_back({vid(i - 1, j), vid(i, j), false, b[i][j]});
        res.grid = g;
    }
    return res;
}

// General right-reversing: repeatedly rewrites the leftmost bar(a).b factor,
// deleting it when a = b. May fail or run out of fuel.
inline ReverseResult right_reverse(const Complement& theta, const SignedPath& w,
                                   long long fuel = 1000000, bool want_grid = false) {
    if (theta.side != Side::right) throw precondition_error("needs a right complement");
    detail::WordState st;
    st.init(theta.alpha, w, want_grid);
    ReverseResult res;
    auto finish = [&](RevStatus status) {
        res.status = status;
        res.word = SignedPath{st.word, w.src, w.tgt};
        if (want_grid) res.grid = std::move(st.grid);
        return res;
    };
    size_t scan = 0;
    while (true) {
        // a rewrite at i cannot create a pattern before i-1
        size_t i = scan > 0 ? scan - 1 : 0;
        size_t found = st.word.size();
        for (; i + 1 < st.word.size(); ++i)
            if (st.word[i].inv && !st.word[i + 1].inv) {
                found = i;
                break;
            }
        if (found == st.word.size()) return finish(RevStatus::Reversed);
        if (res.steps >= fuel) return finish(RevStatus::OutOfFuel);
        int a = st.word[found].gen, b = st.word[found + 1].gen;
        Path p1, p2;
        if (a == b) {
            int obj = theta.alpha.gens[a].tgt;
            p1 = empty_path(obj);
            p2 = empty_path(obj);
        } else {
            if (!theta.defined(a, b)) return finish(RevStatus::Fail);
            p1 = theta.comp(a, b);
            p2 = theta.comp(b, a);
        }
        st.splice_right(theta.alpha, found, p1, p2);
        ++res.steps;
        scan = found;
    }
}

// General left-reversing: rewrites the rightmost b.bar(a) factor.
inline ReverseResult left_reverse(const Complement& lc, const SignedPath& w,
                                  long long fuel = 1000000, bool want_grid = false) {
    if (lc.side != Side::left) throw precondition_error("needs a left complement");
    detail::WordState st;
    st.init(lc.alpha, w, want_grid);
    ReverseResult res;
    auto finish = [&](RevStatus status) {
        res.status = status;
        res.word = SignedPath{st.word, w.src, w.tgt};
        if (want_grid) res.grid = std::move(st.grid);
        return res;
    };
    while (true) {
        size_t found = st.word.size();
        for (size_t k = st.word.size(); k >= 2; --k) {
            size_t i = k - 2;
            if (!st.word[i].inv && st.word[i + 1].inv) {
                found = i;
                break;
            }
        }
        if (found == st.word.size()) return finish(RevStatus::Reversed);
        if (res.steps >= fuel) return finish(RevStatus::OutOfFuel);
        int y = st.word[found].gen, x = st.word[found + 1].gen;
        Path p1, p2;
        if (x == y) {
            int obj = lc.alpha.gens[x].src;
            p1 = empty_path(obj);
            p2 = empty_path(obj);
        } else {
            if (!lc.defined(x, y)) return finish(RevStatus::Fail);
            p1 = lc.comp(x, y);
            p2 = lc.comp(y, x);
        }
        st.splice_left(lc.alpha, found, p1, p2);
        ++res.steps;
    }
}

struct RcResult {
    RevStatus status = RevStatus::Reversed;
    Path vp; // appended to the first argument
    Path up; // appended to the second argument
    long long steps = 0;
};

// rc_star(u, v) right-reverses bar(u).v to v'.bar(u') and returns (v', u'),
// so that u.v' = v.u' represents the right lcm when reversing is complete.
inline RcResult rc_star(const Complement& theta, const Path& u, const Path& v,
                        long long fuel = 1000000) {
    if (u.src != v.src) throw precondition_error("paths must share a source");
    ReverseResult r = right_reverse(theta, compose(bar(u), to_signed(v)), fuel);
    RcResult out;
    out.status = r.status;
    out.steps = r.steps;
    if (r.status == RevStatus::Reversed) {
        auto [vp, up] = split_pos_neg(theta.alpha, r.word);
        out.vp = vp;
        out.up = up;
    }
    return out;
}

// lc_star(v, u) left-reverses v.bar(u) to bar(u').v' and returns (u', v'),
// so that u'.v = v'.u represents the left lcm when reversing is complete.
inline RcResult lc_star(const Complement& lc, const Path& v, const Path& u,
                        long long fuel = 1000000) {
    if (u.tgt != v.tgt) throw precondition_error("paths must share a target");
    ReverseResult r = left_reverse(lc, compose(to_signed(v), bar(u)), fuel);
    RcResult out;
    out.status = r.status;
    out.steps = r.steps;
    if (r.status == RevStatus::Reversed) {
        auto [up, vp] = split_neg_pos(lc.alpha, r.word);
        out.vp = vp;
        out.up = up;
    }
    return out;
}

struct ClosureResult {
    bool diverged = false;
    std::vector<Path> family;
};

// Closes the letters under iterated complements; a finite closure certifies
// that right-reversing terminates for every input over this presentation.
inline ClosureResult termination_closure(const Complement& theta, long long fuel = 1000000,
                                         int cap = 1024) {
    ClosureResult out;
    auto& fam = out.family;
    for (int g = 0; g < theta.alpha.size(); ++g) fam.push_back(letter_path(theta.alpha, g));
    auto include = [&](const Path& p) {
        for (const auto& q : fam)
            if (q == p) return true;
        fam.push_back(p);
        return static_cast<int>(fam.size()) <= cap;
    };
    for (size_t i = 0; i < fam.size(); ++i)
        for (size_t j = 0; j <= i; ++j) {
            if (fam[i].src != fam[j].src) continue;
            RcResult r = rc_star(theta, fam[i], fam[j], fuel);
            if (r.status == RevStatus::OutOfFuel) {
                out.diverged = true;
                return out;
            }
            if (r.status == RevStatus::Fail) continue;
            if (!include(r.vp) || !include(r.up)) {
                out.diverged = true;
                return out;
            }
        }
    return out;
}

enum class TriState { holds, fails, inconclusive };

// Cube condition at (a, b, c): the two iterated complements must be equally
// defined, and when both exist each must left-divide the other.
inline TriState cube_condition(const Complement& theta, int a, int b, int c,
                               long long fuel = 1000000) {
    if (a == b || a == c || b == c) return TriState::holds;
    Path pa = letter_path(theta.alpha, a);
    Path pb = letter_path(theta.alpha, b);
    Path pc = letter_path(theta.alpha, c);
    RcResult rab = rc_star(theta, pa, pb, fuel);
    if (rab.status == RevStatus::OutOfFuel) return TriState::inconclusive;
    RcResult rac = rc_star(theta, pa, pc, fuel);
    if (rac.status == RevStatus::OutOfFuel) return TriState::inconclusive;
    RcResult rbc = rc_star(theta, pb, pc, fuel);
    if (rbc.status == RevStatus::OutOfFuel) return TriState::inconclusive;
    std::optional<Path> X, Y;
    if (rab.status == RevStatus::Reversed && rac.status == RevStatus::Reversed) {
        RcResult rx = rc_star(theta, rab.vp, rac.vp, fuel);
        if (rx.status == RevStatus::OutOfFuel) return TriState::inconclusive;
        if (rx.status == RevStatus::Reversed) X = rx.vp;
    }
    if (rab.status == RevStatus::Reversed && rbc.status == RevStatus::Reversed) {
        RcResult ry = rc_star(theta, rab.up, rbc.vp, fuel);
        if (ry.status == RevStatus::OutOfFuel) return TriState::inconclusive;
        if (ry.status == RevStatus::Reversed) Y = ry.vp;
    }
    if (!X && !Y) return TriState::holds;
    if (!X || !Y) return TriState::fails;
    RcResult rz = rc_star(theta, *X, *Y, fuel);
    if (rz.status == RevStatus::OutOfFuel) return TriState::inconclusive;
    if (rz.status != RevStatus::Reversed) return TriState::fails;
    return (rz.vp.empty() && rz.up.empty()) ? TriState::holds : TriState::fails;
}

struct CompletenessReport {
    TriState verdict = TriState::holds; // holds means complete
    std::optional<std::array<int, 3>> witness;
};

// Checks the cube condition on all pairwise-distinct same-source letter
// triples; requires a short complement or homogeneity as Noetherian evidence.
inline CompletenessReport check_complete(const Presentation& pres, const Complement& theta,
                                         long long fuel = 1000000) {
    if (!theta.is_short() && !pres.is_homogeneous())
        throw precondition_error(
            "completeness check needs a short complement or a homogeneous presentation");
    CompletenessReport rep;
    int n = theta.alpha.size();
    bool saw_inconclusive = false;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (a == b || a == c || b == c) continue;
                if (theta.alpha.gens[a].src != theta.alpha.gens[b].src ||
                    theta.alpha.gens[a].src != theta.alpha.gens[c].src)
                    continue;
                TriState t = cube_condition(theta, a, b, c, fuel);
                if (t == TriState::fails) {
                    rep.verdict = TriState::fails;
                    rep.witness = {a, b, c};
                    return rep;
                }
                if (t == TriState::inconclusive) saw_inconclusive = true;
            }
    rep.verdict = saw_inconclusive ? TriState::inconclusive : TriState::holds;
    return rep;
}

namespace detail {

struct GridLayout {
    std::vector<int> xs, ys;
    int maxx = 0, maxy = 0;
};

// Longest-path layering: horizontal edges advance a column, vertical edges a
// row. Every edge strictly advances, so relaxation reaches a fixpoint.
inline GridLayout layout_grid(const Grid& g) {
    GridLayout l;
    l.xs.assign(g.vertex_count, 0);
    l.ys.assign(g.vertex_count, 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& e : g.edges) {
            int nx = l.xs[e.from] + (e.horizontal ? 1 : 0);
            int ny = l.ys[e.from] + (e.horizontal ? 0 : 1);
            if (nx > l.xs[e.to]) {
                l.xs[e.to] = nx;
                changed = true;
            }
            if (ny > l.ys[e.to]) {
                l.ys[e.to] = ny;
                changed = true;
            }
        }
    }
    for (int v = 0; v < g.vertex_count; ++v) {
        l.maxx = std::max(l.maxx, l.xs[v]);
        l.maxy = std::max(l.maxy, l.ys[v]);
    }
    return l;
}

} // namespace detail

inline std::string render_grid_ascii(const Grid& g, const Alphabet& alpha) {
    detail::GridLayout l = detail::layout_grid(g);
    size_t name_w = 1;
    for (const auto& e : g.edges)
        if (!e.label.empty()) name_w = std::max(name_w, alpha.gens[e.label.letters[0]].name.size());
    int cellw = static_cast<int>(name_w) + 4;
    int rows = 2 * l.maxy + 1;
    int cols = cellw * l.maxx + static_cast<int>(name_w) + 2;
    std::vector<std::string> canvas(rows, std::string(cols, ' '));
    auto put = [&](int r, int c, char ch) {
        if (r >= 0 && r < rows && c >= 0 && c < cols) canvas[r][c] = ch;
    };
    auto puts = [&](int r, int c, const std::string& s) {
        for (size_t k = 0; k < s.size(); ++k) put(r, c + static_cast<int>(k), s[k]);
    };
    for (const auto& e : g.edges) {
        int r1 = 2 * l.ys[e.from], c1 = cellw * l.xs[e.from];
        int r2 = 2 * l.ys[e.to], c2 = cellw * l.xs[e.to];
        std::string name = e.label.empty() ? "" : alpha.gens[e.label.letters[0]].name;
        if (e.horizontal) {
            char fill = e.label.empty() ? '=' : '-';
            for (int c = c1 + 1; c < c2; ++c) put(r1, c, fill);
            if (r2 != r1)
                for (int r = std::min(r1, r2) + 1; r < std::max(r1, r2); ++r) put(r, c2, '|');
            if (!name.empty()) {
                put(r1, c2 - 1, '>');
                puts(r1, (c1 + c2 - static_cast<int>(name.size())) / 2, name);
            }
        } else {
            char fill = e.label.empty() ? '=' : '|';
            for (int r = r1 + 1; r < r2; ++r) put(r, c1, fill);
            if (c2 != c1)
                for (int c = std::min(c1, c2) + 1; c < std::max(c1, c2); ++c) put(r2, c, '-');
            if (!name.empty()) puts((r1 + r2) / 2, c1 + 2, name);
        }
    }
    for (int v = 0; v < g.vertex_count; ++v) put(2 * l.ys[v], cellw * l.xs[v], '+');
    std::ostringstream out;
    for (auto& line : canvas) {
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << '\n';
    }
    return out.str();
}

inline std::string render_grid_dot(const Grid& g, const Alphabet& alpha) {
    detail::GridLayout l = detail::layout_grid(g);
    std::ostringstream out;
    out << "digraph reversing {\n";
    for (int v = 0; v < g.vertex_count; ++v)
        out << "  v" << v << " [shape=point, pos=\"" << l.xs[v] << "," << -l.ys[v] << "!\"];\n";
    for (const auto& e : g.edges) {
        out << "  v" << e.from << " -> v" << e.to;
        if (e.label.empty())
            out << " [label=\"1\", style=dashed]";
        else
            out << " [label=\"" << alpha.gens[e.label.letters[0]].name << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

inline std::string render_grid(const Grid& g, const Alphabet& alpha,
                               const std::string& format = "ascii") {
    if (format == "dot") return render_grid_dot(g, alpha);
    if (format == "ascii") return render_grid_ascii(g, alpha);
    throw precondition_error("unknown grid format: " + format);
}

} // namespace garside
