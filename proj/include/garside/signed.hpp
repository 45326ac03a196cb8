#pragma once

#include "garside/normal.hpp"

namespace garside {

// Irreducible left fraction bar(den).num with both halves normal; den is
// listed innermost first, so the signed word is den reversed and inverted,
// then num. Both halves start at the same middle object.
struct SymmetricNormal {
    NormalForm den, num;
    int src() const { return den.tgt; }
    int tgt() const { return num.tgt; }
    bool operator==(const SymmetricNormal&) const = default;
};

// delta^n times a normal chain whose head is not delta-like.
struct DeltaNormal {
    int src = 0, tgt = 0;
    long long n = 0;
    std::vector<int> tail;
    bool operator==(const DeltaNormal&) const = default;
};

enum class SymStatus { ok, no_right_fraction, diverged };

struct SymResult {
    SymStatus status = SymStatus::ok;
    SymmetricNormal nf;
};

inline SignedPath signed_word(const GarsideStructure& st, const SymmetricNormal& s) {
    return compose(bar(nf_word(st, s.den)), to_signed(nf_word(st, s.num)));
}

inline bool delta_like(const GarsideStructure& st, int e) {
    return st.delta && st.delta->delta[st.esrc(e)] == e;
}

inline SignedPath signed_word(const GarsideStructure& st, const DeltaNormal& d) {
    SignedPath w = delta_power_path(st, d.n, d.src);
    NormalForm tail{w.tgt, d.tgt, d.tail};
    return compose(w, to_signed(nf_word(st, tail)));
}

namespace detail {

inline bool heads_disjoint(const GarsideStructure& st, int b1, int a1) {
    for (int d = 0; d < st.nelems(); ++d)
        if (!st.is_id(d) && st.dive.divides(d, b1) && st.dive.divides(d, a1)) return false;
    return true;
}

inline int phi_power(const GarsideStructure& st, int e, long long n) {
    const auto& d = *st.delta;
    for (long long k = 0; k < n; ++k) e = d.phi[e];
    for (long long k = 0; k > n; --k) e = d.phi_inv[e];
    return e;
}

} // namespace detail

inline bool is_symmetric_normal(const GarsideStructure& st, const SymmetricNormal& s) {
    if (s.den.src != s.num.src) return false;
    if (!is_normal_form(st, s.den) || !is_normal_form(st, s.num)) return false;
    if (!s.den.empty() && !s.num.empty() &&
        !detail::heads_disjoint(st, s.den.entries[0], s.num.entries[0]))
        return false;
    return true;
}

// Symmetric normal form of a positive-negative word u.bar(v): one short left
// reversing makes the halves left-disjoint, then each half is normalized.
inline SymmetricNormal sym_normalize_fraction(const GarsideStructure& st, const Path& u,
                                              const Path& v) {
    if (!st.sel_left) throw precondition_error("structure is not strong");
    ReverseResult r = left_reverse_short(*st.sel_left, u, v);
    if (r.status != RevStatus::Reversed)
        throw precondition_error("left selector undefined on fraction");
    auto [den_w, num_w] = split_neg_pos(st.fam, r.word);
    return SymmetricNormal{normalize(st, den_w), normalize(st, num_w)};
}

// General route: right reversing turns the word into a positive-negative
// fraction first. Fails when the element admits no right fraction.
inline SymResult sym_normalize(const GarsideStructure& st, const SignedPath& w,
                               long long fuel = 1000000) {
    SymResult out;
    ReverseResult r = right_reverse(st.sel_right, w, fuel);
    if (r.status == RevStatus::OutOfFuel) {
        out.status = SymStatus::diverged;
        return out;
    }
    if (r.status == RevStatus::Fail) {
        out.status = SymStatus::no_right_fraction;
        return out;
    }
    auto [vp, up] = split_pos_neg(st.fam, r.word);
    out.nf = sym_normalize_fraction(st, vp, up);
    return out;
}

// Left multiplication of a symmetric normal form by c: left-lcm squares push
// c through the denominator, then one square-witness sweep fixes the
// numerator. Requires a strong structure.
inline SymmetricNormal sym_left_multiply(const GarsideStructure& st, int c,
                                         const SymmetricNormal& s) {
    if (!st.sel_left) throw precondition_error("structure is not strong");
    if (st.etgt(c) != s.src()) throw composability_error("left multiplier does not fit");
    if (st.is_id(c)) return s;
    int q = s.den.length();
    std::vector<int> bp(q);
    int cur = c;
    for (int i = q - 1; i >= 0; --i) {
        auto pq = detail::left_lcm_pair(st, cur, s.den.entries[i]);
        if (!pq) throw precondition_error("left lcm missing in strong structure");
        bp[i] = pq->second;
        cur = pq->first;
    }
    SymmetricNormal out;
    out.num = left_multiply(st, cur, s.num);
    out.den.src = out.num.src;
    out.den.tgt = st.esrc(c);
    for (int e : bp)
        if (!st.is_id(e)) out.den.entries.push_back(e);
    if (is_symmetric_normal(st, out)) return out;
    SymResult full = sym_normalize(
        st, compose(to_signed(letter_path(st.fam, st.letter_of_elem[c])), signed_word(st, s)));
    if (full.status != SymStatus::ok) throw diverged_error("renormalization failed");
    return full.nf;
}

// Left division by c in the bounded case: square-witness squares push c
// through the denominator, the leftover inverse is rewritten through delta,
// and one sweep plus one complement restores the form.
inline SymmetricNormal sym_left_divide(const GarsideStructure& st, int c,
                                       const SymmetricNormal& s) {
    if (!st.delta) throw precondition_error("structure is not bounded");
    if (st.esrc(c) != s.src()) throw composability_error("left divisor does not fit");
    if (st.is_id(c)) return s;
    const DeltaData& dd = *st.delta;
    int q = s.den.length();
    std::vector<int> bp(q);
    int cur = c;
    for (int i = q - 1; i >= 0; --i) {
        auto [head, tail] = st.square(s.den.entries[i], cur);
        bp[i] = tail;
        cur = head;
    }
    NormalForm swept = left_multiply(st, dd.tilde_del[cur], s.num);
    int a1 = swept.empty() ? st.identity_at(swept.src) : swept.entries[0];
    SymmetricNormal out;
    out.num.entries.assign(swept.entries.begin() + (swept.empty() ? 0 : 1),
                           swept.entries.end());
    out.num.src = st.etgt(a1);
    out.num.tgt = out.num.empty() ? out.num.src : swept.tgt;
    int b0 = dd.del[a1];
    out.den.src = out.num.src;
    out.den.tgt = st.etgt(c);
    if (!st.is_id(b0)) out.den.entries.push_back(b0);
    for (int e : bp)
        if (!st.is_id(e)) out.den.entries.push_back(e);
    if (is_symmetric_normal(st, out)) return out;
    SymResult full = sym_normalize(
        st, compose(bar(letter_path(st.fam, st.letter_of_elem[c])), signed_word(st, s)));
    if (full.status != SymStatus::ok) throw diverged_error("renormalization failed");
    return full.nf;
}

inline SymmetricNormal invert_symmetric(const SymmetricNormal& s) {
    return SymmetricNormal{s.num, s.den};
}

namespace detail {

inline DeltaNormal strip_delta_head(const GarsideStructure& st, DeltaNormal d) {
    while (!d.tail.empty() && delta_like(st, d.tail.front())) {
        ++d.n;
        d.tail.erase(d.tail.begin());
    }
    return d;
}

} // namespace detail

// Left multiplication in delta normal form: the multiplier commutes past
// delta^n via phi, then one sweep; a delta-like head is absorbed into the
// power.
inline DeltaNormal delta_left_multiply(const GarsideStructure& st, int c, const DeltaNormal& d) {
    if (!st.delta) throw precondition_error("structure is not bounded");
    if (st.etgt(c) != d.src) throw composability_error("left multiplier does not fit");
    int c0 = detail::phi_power(st, c, d.n);
    NormalForm tail{st.etgt(c0), d.tail.empty() ? st.etgt(c0) : d.tgt, d.tail};
    NormalForm swept = left_multiply(st, c0, tail);
    DeltaNormal out{st.esrc(c), swept.tgt, d.n, swept.entries};
    return detail::strip_delta_head(st, out);
}

// Left division: bar(c) delta^n = delta^(n-1) phi^n(tilde_del(c)).
inline DeltaNormal delta_left_divide(const GarsideStructure& st, int c, const DeltaNormal& d) {
    if (!st.delta) throw precondition_error("structure is not bounded");
    if (st.esrc(c) != d.src) throw composability_error("left divisor does not fit");
    int c0 = detail::phi_power(st, st.delta->tilde_del[c], d.n);
    NormalForm tail{st.etgt(c0), d.tail.empty() ? st.etgt(c0) : d.tgt, d.tail};
    NormalForm swept = left_multiply(st, c0, tail);
    DeltaNormal out{st.etgt(c), swept.tgt, d.n - 1, swept.entries};
    return detail::strip_delta_head(st, out);
}

inline DeltaNormal delta_normalize(const GarsideStructure& st, const SignedPath& w) {
    if (!st.delta) throw precondition_error("structure is not bounded");
    DeltaNormal acc{w.tgt, w.tgt, 0, {}};
    for (int k = static_cast<int>(w.letters.size()) - 1; k >= 0; --k) {
        int e = st.elem_of_letter[w.letters[k].gen];
        acc = w.letters[k].inv ? delta_left_divide(st, e, acc)
                               : delta_left_multiply(st, e, acc);
    }
    return acc;
}

inline DeltaNormal invert_delta(const GarsideStructure& st, const DeltaNormal& d) {
    if (!st.delta) throw precondition_error("structure is not bounded");
    const DeltaData& dd = *st.delta;
    DeltaNormal out;
    out.src = d.tgt;
    out.tgt = d.src;
    int p = static_cast<int>(d.tail.size());
    out.n = -d.n - p;
    for (int k = p - 1; k >= 0; --k)
        out.tail.push_back(dd.del[detail::phi_power(st, d.tail[k], -d.n - (k + 1))]);
    return detail::strip_delta_head(st, out);
}

// Word problem, symmetric route: normalize both sides and compare halves.
inline SymStatus word_problem_signed_sym(const GarsideStructure& st, const SignedPath& w1,
                                         const SignedPath& w2, bool& equal,
                                         long long fuel = 1000000) {
    SymResult r1 = sym_normalize(st, w1, fuel);
    if (r1.status != SymStatus::ok) return r1.status;
    SymResult r2 = sym_normalize(st, w2, fuel);
    if (r2.status != SymStatus::ok) return r2.status;
    equal = w1.src == w2.src && r1.nf == r2.nf;
    return SymStatus::ok;
}

struct SignedReduceResult {
    bool trivial = false;
    SignedPath residue;
};

// Triviality by double reversing: right reversing to a fraction, then short
// left reversing; the word names an identity iff everything cancels.
inline SignedReduceResult word_problem_signed_right(const GarsideStructure& st,
                                                    const SignedPath& w,
                                                    long long fuel = 1000000) {
    if (!st.sel_left) throw precondition_error("structure is not strong");
    ReverseResult r = right_reverse(st.sel_right, w, fuel);
    if (r.status == RevStatus::OutOfFuel) throw diverged_error("right reversing out of fuel");
    if (r.status == RevStatus::Fail)
        throw precondition_error("no right fraction for input word");
    auto [vp, up] = split_pos_neg(st.fam, r.word);
    ReverseResult r2 = left_reverse_short(*st.sel_left, vp, up);
    if (r2.status != RevStatus::Reversed)
        throw precondition_error("left selector undefined on fraction");
    return {r2.word.letters.empty(), r2.word};
}

// Dual route: left reversing to a left fraction bar(u).v, then u ~ v is
// tested by one short right reversing.
inline SignedReduceResult word_problem_signed_left(const GarsideStructure& st,
                                                   const SignedPath& w,
                                                   long long fuel = 1000000) {
    if (!st.sel_left) throw precondition_error("structure is not strong");
    ReverseResult r = left_reverse(*st.sel_left, w, fuel);
    if (r.status == RevStatus::OutOfFuel) throw diverged_error("left reversing out of fuel");
    if (r.status == RevStatus::Fail)
        throw precondition_error("left selector undefined on input word");
    auto [up, vp] = split_neg_pos(st.fam, r.word);
    ReverseResult r2 = right_reverse_short(st.sel_right, up, vp);
    if (r2.status != RevStatus::Reversed) return {false, r.word};
    return {r2.word.letters.empty(), r.word};
}

// Least common upper bound of two signed words with the same source:
// w1 lub w2 = w1 . RC*(u, v) where bar(u).v is the reduced left fraction
// of bar(w1).w2.
inline SignedPath lub(const GarsideStructure& st, const SignedPath& w1, const SignedPath& w2,
                      long long fuel = 1000000) {
    if (!st.sel_left) throw precondition_error("structure is not strong");
    if (w1.src != w2.src) throw precondition_error("words must share a source");
    ReverseResult r = left_reverse(*st.sel_left, compose(bar(w1), w2), fuel);
    if (r.status == RevStatus::OutOfFuel) throw diverged_error("left reversing out of fuel");
    if (r.status == RevStatus::Fail) throw precondition_error("left selector undefined");
    auto [u, v] = split_neg_pos(st.fam, r.word);
    ReverseResult r2 = right_reverse_short(st.sel_right, u, v);
    if (r2.status != RevStatus::Reversed)
        throw precondition_error("words admit no common upper bound");
    auto [vp, up] = split_pos_neg(st.fam, r2.word);
    return compose(w1, to_signed(vp));
}

// Greatest common lower bound, dual construction: reduce bar(w1).w2 to a
// right fraction u.bar(v), make it a reduced left fraction, and descend.
inline SignedPath glb(const GarsideStructure& st, const SignedPath& w1, const SignedPath& w2,
                      long long fuel = 1000000) {
    if (!st.sel_left) throw precondition_error("structure is not strong");
    if (w1.src != w2.src) throw precondition_error("words must share a source");
    ReverseResult r = right_reverse(st.sel_right, compose(bar(w1), w2), fuel);
    if (r.status == RevStatus::OutOfFuel) throw diverged_error("right reversing out of fuel");
    if (r.status == RevStatus::Fail) throw precondition_error("no right fraction");
    auto [u, v] = split_pos_neg(st.fam, r.word);
    ReverseResult r2 = left_reverse_short(*st.sel_left, u, v);
    if (r2.status != RevStatus::Reversed)
        throw precondition_error("left selector undefined on fraction");
    auto [vp, up] = split_neg_pos(st.fam, r2.word);
    return compose(w1, bar(vp));
}

// Left gcd of positive words: three short reversings. The third one must
// end with an empty negative part.
inline Path left_gcd(const GarsideStructure& st, const Path& u, const Path& v) {
    if (!st.sel_left) throw precondition_error("structure is not strong");
    if (u.src != v.src) throw precondition_error("paths must share a source");
    ReverseResult r1 = right_reverse_short(st.sel_right, u, v);
    if (r1.status != RevStatus::Reversed)
        throw precondition_error("words admit no common right multiple");
    auto [vp, up] = split_pos_neg(st.fam, r1.word);
    ReverseResult r2 = left_reverse_short(*st.sel_left, vp, up);
    if (r2.status != RevStatus::Reversed)
        throw precondition_error("left selector undefined on fraction");
    auto [upp, vpp] = split_neg_pos(st.fam, r2.word);
    ReverseResult r3 = left_reverse_short(*st.sel_left, u, upp);
    if (r3.status != RevStatus::Reversed)
        throw precondition_error("left selector undefined on quotient");
    auto [x, w] = split_neg_pos(st.fam, r3.word);
    if (!x.empty()) throw precondition_error("gcd quotient failed to divide");
    return w;
}

} // namespace garside
