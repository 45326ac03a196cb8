#pragma once

#include "garside/garside.hpp"

namespace garside {

// Greedy normal form: a chain of non-identity S# elements in which every
// adjacent pair is its own square witness. Empty chains keep their object.
struct NormalForm {
    int src = 0, tgt = 0;
    std::vector<int> entries;
    bool empty() const { return entries.empty(); }
    int length() const { return static_cast<int>(entries.size()); }
    bool operator==(const NormalForm&) const = default;
};

inline NormalForm empty_nf(int obj) { return NormalForm{obj, obj, {}}; }

inline Path nf_word(const GarsideStructure& st, const NormalForm& nf) {
    Path w = empty_path(nf.src);
    for (int e : nf.entries) w = compose(w, letter_path(st.fam, st.letter_of_elem[e]));
    if (w.empty()) w.tgt = nf.tgt;
    return w;
}

inline bool is_normal_form(const GarsideStructure& st, const NormalForm& nf) {
    int at = nf.src;
    for (int e : nf.entries) {
        if (st.is_id(e) || st.esrc(e) != at) return false;
        at = st.etgt(e);
    }
    if (at != nf.tgt) return false;
    for (size_t i = 0; i + 1 < nf.entries.size(); ++i)
        if (!st.normal_pair(nf.entries[i], nf.entries[i + 1])) return false;
    return true;
}

// Left multiplication by one S# element: one square-witness sweep pushes the
// multiplier through the chain and the result is again normal.
inline NormalForm left_multiply(const GarsideStructure& st, int b, const NormalForm& nf) {
    if (st.etgt(b) != nf.src) throw composability_error("left multiplier does not fit");
    NormalForm out;
    out.src = st.esrc(b);
    out.tgt = nf.empty() ? st.etgt(b) : nf.tgt;
    int c = b;
    for (int a : nf.entries) {
        auto [head, tail] = st.square(c, a);
        if (!st.is_id(head)) out.entries.push_back(head);
        c = tail;
    }
    if (!st.is_id(c)) out.entries.push_back(c);
    return out;
}

inline NormalForm normalize(const GarsideStructure& st, const Path& w) {
    NormalForm nf = empty_nf(w.tgt);
    for (int k = w.length() - 1; k >= 0; --k)
        nf = left_multiply(st, st.elem_of_letter[w.letters[k]], nf);
    return nf;
}

// Right multiplication: one sweep from the right. The sweep alone is valid
// in the bounded case; otherwise the result is verified and renormalized.
inline NormalForm right_multiply(const GarsideStructure& st, const NormalForm& nf, int b) {
    if (nf.tgt != st.esrc(b)) throw composability_error("right multiplier does not fit");
    NormalForm out;
    out.src = nf.empty() ? st.esrc(b) : nf.src;
    out.tgt = st.etgt(b);
    int c = b;
    std::vector<int> tails(nf.entries.size());
    for (int i = nf.length() - 1; i >= 0; --i) {
        auto [head, tail] = st.square(nf.entries[i], c);
        tails[i] = tail;
        c = head;
    }
    if (!st.is_id(c)) out.entries.push_back(c);
    for (int t : tails)
        if (!st.is_id(t)) out.entries.push_back(t);
    if (st.delta) return out;
    if (is_normal_form(st, out)) return out;
    return normalize(st, nf_word(st, out));
}

inline bool word_problem_positive_nf(const GarsideStructure& st, const Path& u, const Path& v) {
    if (u.src != v.src || u.tgt != v.tgt) return false;
    return normalize(st, u) == normalize(st, v);
}

// Reversing route: u and v name the same element iff bar(u).v reverses to
// the empty word. A selector failure means no common multiple, hence
// distinct elements.
inline bool word_problem_positive_rev(const GarsideStructure& st, const Path& u, const Path& v) {
    if (u.src != v.src || u.tgt != v.tgt) return false;
    ReverseResult r = right_reverse_short(st.sel_right, u, v);
    if (r.status != RevStatus::Reversed) return false;
    return r.word.letters.empty();
}

// u divides v on the left iff the negative part of the reversed word is
// empty; the positive part is then the residue u\v.
inline std::optional<Path> left_divides(const GarsideStructure& st, const Path& u,
                                        const Path& v) {
    if (u.src != v.src) throw precondition_error("paths must share a source");
    ReverseResult r = right_reverse_short(st.sel_right, u, v);
    if (r.status != RevStatus::Reversed) return std::nullopt;
    auto [vp, up] = split_pos_neg(st.fam, r.word);
    if (!up.empty()) return std::nullopt;
    return vp;
}

inline std::optional<Path> right_lcm(const GarsideStructure& st, const Path& u, const Path& v) {
    if (u.src != v.src) throw precondition_error("paths must share a source");
    ReverseResult r = right_reverse_short(st.sel_right, u, v);
    if (r.status != RevStatus::Reversed) return std::nullopt;
    auto [vp, up] = split_pos_neg(st.fam, r.word);
    return compose(u, vp);
}

// Same computation over a raw letter complement; may run out of fuel.
inline std::optional<Path> right_lcm(const Complement& theta, const Path& u, const Path& v,
                                     long long fuel) {
    RcResult r = rc_star(theta, u, v, fuel);
    if (r.status == RevStatus::OutOfFuel) throw diverged_error("reversing out of fuel");
    if (r.status == RevStatus::Fail) return std::nullopt;
    return compose(u, r.vp);
}

} // namespace garside
