#pragma once

#include "garside/germ.hpp"
#include "garside/reversing.hpp"

namespace garside {

struct diverged_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Decides u ~ v by reversing bar(u).v to the empty word on both sides.
// Requires a complete complement for soundness; nullopt when fuel runs out.
inline std::optional<bool> reversing_equivalent(const Complement& theta, const Path& u,
                                                const Path& v, long long fuel = 1000000) {
    if (u.src != v.src || u.tgt != v.tgt) return false;
    RcResult r = rc_star(theta, u, v, fuel);
    if (r.status == RevStatus::OutOfFuel) return std::nullopt;
    if (r.status == RevStatus::Fail) return false;
    return r.vp.empty() && r.up.empty();
}

struct FamilyResult {
    enum class Status { ok, diverged, no_common_multiple };
    Status status = Status::ok;
    std::vector<Path> family;
    std::optional<std::pair<Path, Path>> failing; // pair without a common right-multiple
};

// Closes the seeds under iterated complements and lcm words. Each candidate
// is appended unless reversing-equivalent to a present entry, so the output
// lists one representative per element of the smallest Garside family.
inline FamilyResult smallest_garside_family(const Complement& theta,
                                            const std::vector<Path>& seeds,
                                            long long fuel = 1000000, int cap = 256,
                                            bool skip_no_common_multiple = false) {
    FamilyResult out;
    auto& fam = out.family;
    auto include = [&](const Path& w) -> bool {
        for (const auto& q : fam) {
            auto eq = reversing_equivalent(theta, w, q, fuel);
            if (!eq) {
                out.status = FamilyResult::Status::diverged;
                return false;
            }
            if (*eq) return true;
        }
        fam.push_back(w);
        if (static_cast<int>(fam.size()) > cap) {
            out.status = FamilyResult::Status::diverged;
            return false;
        }
        return true;
    };
    for (size_t x = 0; x < theta.alpha.objects.size(); ++x)
        fam.push_back(empty_path(static_cast<int>(x)));
    for (const auto& s : seeds)
        if (!include(s)) return out;
    for (size_t i = 1; i < fam.size(); ++i)
        for (size_t j = 0; j < i; ++j) {
            if (fam[i].src != fam[j].src) continue;
            RcResult r = rc_star(theta, fam[i], fam[j], fuel);
            if (r.status == RevStatus::OutOfFuel) {
                out.status = FamilyResult::Status::diverged;
                return out;
            }
            if (r.status == RevStatus::Fail) {
                if (skip_no_common_multiple) continue;
                out.status = FamilyResult::Status::no_common_multiple;
                out.failing = {fam[j], fam[i]};
                return out;
            }
            if (!include(r.vp)) return out;
            if (!include(r.up)) return out;
            if (!include(compose(fam[j], r.up))) return out;
            if (!include(compose(fam[i], r.vp))) return out;
        }
    return out;
}

struct FamilyCheck {
    bool ok = true;
    bool diverged = false;
    std::optional<std::pair<Path, Path>> witness; // pair whose lcm or complement escapes
};

// A generating word family is Garside iff for every same-source pair both
// the complement and the lcm word land back in the family up to equivalence.
inline FamilyCheck is_garside_family(const Complement& theta, const std::vector<Path>& words,
                                     long long fuel = 1000000) {
    FamilyCheck out;
    auto member = [&](const Path& w) -> std::optional<bool> {
        if (w.empty()) return true;
        for (const auto& q : words) {
            auto eq = reversing_equivalent(theta, w, q, fuel);
            if (!eq) return std::nullopt;
            if (*eq) return true;
        }
        return false;
    };
    for (int g = 0; g < theta.alpha.size(); ++g) {
        auto m = member(letter_path(theta.alpha, g));
        if (!m) {
            out.diverged = true;
            return out;
        }
        if (!*m)
            throw precondition_error("family does not contain generator " +
                                     theta.alpha.gens[g].name);
    }
    for (size_t i = 0; i < words.size(); ++i)
        for (size_t j = 0; j < i; ++j) {
            if (words[i].src != words[j].src) continue;
            RcResult r = rc_star(theta, words[i], words[j], fuel);
            if (r.status == RevStatus::OutOfFuel) {
                out.diverged = true;
                return out;
            }
            if (r.status == RevStatus::Fail) continue;
            for (const Path& w :
                 {r.vp, r.up, compose(words[j], r.up), compose(words[i], r.vp)}) {
                auto m = member(w);
                if (!m) {
                    out.diverged = true;
                    return out;
                }
                if (!*m) {
                    out.ok = false;
                    out.witness = {words[j], words[i]};
                    return out;
                }
            }
        }
    return out;
}

struct DeltaData {
    std::vector<int> delta;     // per object: the element every same-source element divides
    std::vector<int> del;       // a * del(a) = delta(src a)
    std::vector<int> tilde_del; // tilde_del(a) * a = delta(src tilde_del(a))
    std::vector<int> phi;       // del applied twice; a family automorphism
    std::vector<int> phi_inv;
    std::vector<int> phi_obj;
    std::vector<int> phi_inv_obj;
};

// A Garside structure: the induced germ on S# with the square-witness table,
// the right-lcm selector, and the optional strong/bounded extras.
struct GarsideStructure {
    Germ germ;
    LocalDivisibility dive;
    std::vector<int> sprime;
    std::vector<std::vector<std::optional<std::pair<int, int>>>> sw;
    Alphabet fam;                  // non-identity elements as letters
    std::vector<int> elem_of_letter;
    std::vector<int> letter_of_elem; // -1 for identities
    Complement sel_right;
    std::optional<Complement> sel_left;
    bool strong = false;
    std::optional<DeltaData> delta;
    std::optional<Presentation> base; // presentation route only
    std::optional<Complement> base_right;
    std::vector<Path> reps; // per element, over the base alphabet
    mutable long long sw_calls = 0;

    int nelems() const { return germ.size(); }
    int esrc(int e) const { return germ.alpha.gens[e].src; }
    int etgt(int e) const { return germ.alpha.gens[e].tgt; }
    bool is_id(int e) const { return germ.is_identity(e); }
    int identity_at(int obj) const { return germ.identity[obj]; }
    const std::string& ename(int e) const { return germ.alpha.gens[e].name; }

    std::pair<int, int> square(int a1, int a2) const {
        if (!sw[a1][a2]) throw composability_error("square witness of non-composable pair");
        ++sw_calls;
        return *sw[a1][a2];
    }
    bool normal_pair(int a1, int a2) const {
        if (!sw[a1][a2]) return false;
        return *sw[a1][a2] == std::make_pair(a1, a2);
    }
};

namespace detail {

inline std::optional<int> least_upper_bound(const GarsideStructure& st, int e1, int e2) {
    std::vector<int> ubs;
    for (int z = 0; z < st.nelems(); ++z)
        if (st.dive.divides(e1, z) && st.dive.divides(e2, z)) ubs.push_back(z);
    for (int z0 : ubs) {
        bool least = true;
        for (int z : ubs)
            if (!st.dive.divides(z0, z)) {
                least = false;
                break;
            }
        if (least) return z0;
    }
    return std::nullopt;
}

inline Path elem_word(const GarsideStructure& st, int e) {
    if (st.is_id(e)) return empty_path(st.esrc(e));
    return letter_path(st.fam, st.letter_of_elem[e]);
}

inline void build_selector(GarsideStructure& st) {
    int nf = st.fam.size();
    st.sel_right.side = Side::right;
    st.sel_right.alpha = st.fam;
    st.sel_right.table.assign(nf, std::vector<std::optional<Path>>(nf));
    for (int x = 0; x < nf; ++x)
        for (int y = 0; y < nf; ++y) {
            if (x == y) continue;
            int e1 = st.elem_of_letter[x], e2 = st.elem_of_letter[y];
            if (st.esrc(e1) != st.esrc(e2)) continue;
            auto z = least_upper_bound(st, e1, e2);
            if (!z) continue;
            for (int c = 0; c < st.nelems(); ++c)
                if (st.germ.prod(e1, c) == z) {
                    st.sel_right.table[x][y] = elem_word(st, c);
                    break;
                }
        }
}

// Minimal pair (p, q) with p.e2 = q.e1 among S# pairs, compared through the
// square-witness normal forms; minimal means germ-divisible into every
// other candidate.
inline std::optional<std::pair<int, int>> left_lcm_pair(const GarsideStructure& st, int e1,
                                                        int e2) {
    std::vector<std::pair<int, int>> cands;
    for (int p = 0; p < st.nelems(); ++p) {
        if (st.etgt(p) != st.esrc(e2)) continue;
        for (int q = 0; q < st.nelems(); ++q) {
            if (st.etgt(q) != st.esrc(e1)) continue;
            if (*st.sw[p][e2] == *st.sw[q][e1]) cands.push_back({p, q});
        }
    }
    for (auto [p, q] : cands) {
        bool minimal = true;
        for (auto [p2, q2] : cands) {
            bool dominated = false;
            for (int d = 0; d < st.nelems(); ++d)
                if (st.germ.composable(d, p) && st.germ.prod(d, p) == std::optional<int>(p2) &&
                    st.germ.composable(d, q) && st.germ.prod(d, q) == std::optional<int>(q2)) {
                    dominated = true;
                    break;
                }
            if (!dominated) {
                minimal = false;
                break;
            }
        }
        if (minimal) return std::make_pair(p, q);
    }
    return std::nullopt;
}

inline void build_strong(GarsideStructure& st) {
    int nf = st.fam.size();
    Complement lc;
    lc.side = Side::left;
    lc.alpha = st.fam;
    lc.table.assign(nf, std::vector<std::optional<Path>>(nf));
    for (int e1 = 0; e1 < st.nelems(); ++e1)
        for (int e2 = 0; e2 < st.nelems(); ++e2) {
            if (st.etgt(e1) != st.etgt(e2)) continue;
            auto pq = left_lcm_pair(st, e1, e2);
            if (!pq) {
                st.strong = false;
                st.sel_left = std::nullopt;
                return;
            }
            if (!st.is_id(e1) && !st.is_id(e2) && e1 != e2) {
                // pq->first multiplies e2, matching lc(e1, e2).e2 = lc(e2, e1).e1
                lc.table[st.letter_of_elem[e1]][st.letter_of_elem[e2]] =
                    elem_word(st, pq->first);
            }
        }
    st.strong = true;
    st.sel_left = lc;
}

inline void build_delta(GarsideStructure& st) {
    int n = st.nelems();
    int nobj = static_cast<int>(st.germ.alpha.objects.size());
    DeltaData d;
    d.delta.assign(nobj, -1);
    for (int x = 0; x < nobj; ++x) {
        for (int z = 0; z < n; ++z) {
            if (st.esrc(z) != x) continue;
            bool all = true;
            for (int e = 0; e < n; ++e)
                if (st.esrc(e) == x && !st.dive.divides(e, z)) {
                    all = false;
                    break;
                }
            if (all) {
                d.delta[x] = z;
                break;
            }
        }
        if (d.delta[x] < 0) return;
    }
    d.del.assign(n, -1);
    d.tilde_del.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int c = 0; c < n; ++c)
            if (st.germ.composable(a, c) &&
                st.germ.prod(a, c) == std::optional<int>(d.delta[st.esrc(a)])) {
                d.del[a] = c;
                break;
            }
        if (d.del[a] < 0) return;
        int count = 0;
        for (int ap = 0; ap < n; ++ap)
            if (st.germ.composable(ap, a) &&
                st.germ.prod(ap, a) == std::optional<int>(d.delta[st.esrc(ap)])) {
                d.tilde_del[a] = ap;
                ++count;
            }
        if (count != 1) return;
    }
    std::vector<int> seen(n, 0);
    for (int a = 0; a < n; ++a) seen[d.del[a]]++;
    for (int a = 0; a < n; ++a)
        if (seen[a] != 1) return;
    d.phi.assign(n, -1);
    d.phi_inv.assign(n, -1);
    for (int a = 0; a < n; ++a) d.phi[a] = d.del[d.del[a]];
    for (int a = 0; a < n; ++a) d.phi_inv[d.phi[a]] = a;
    d.phi_obj.assign(nobj, -1);
    d.phi_inv_obj.assign(nobj, -1);
    for (int x = 0; x < nobj; ++x) d.phi_obj[x] = st.etgt(d.delta[x]);
    std::vector<int> objseen(nobj, 0);
    for (int x = 0; x < nobj; ++x) objseen[d.phi_obj[x]]++;
    for (int x = 0; x < nobj; ++x)
        if (objseen[x] != 1) return;
    for (int x = 0; x < nobj; ++x) d.phi_inv_obj[d.phi_obj[x]] = x;
    for (int a = 0; a < n; ++a) {
        if (st.esrc(d.phi[a]) != d.phi_obj[st.esrc(a)]) return;
        if (st.etgt(d.phi[a]) != d.phi_obj[st.etgt(a)]) return;
        if (st.is_id(a) != st.is_id(d.phi[a])) return;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!st.germ.composable(a, b)) continue;
            auto ab = st.germ.prod(a, b);
            auto fab = st.germ.prod(d.phi[a], d.phi[b]);
            if (ab.has_value() != fab.has_value()) return;
            if (ab && d.phi[*ab] != *fab) return;
        }
    st.delta = std::move(d);
}

inline GarsideStructure build_from_germ(Germ g) {
    auto bad = validate_germ(g);
    if (bad) throw precondition_error("invalid germ: " + *bad);
    auto rep = is_garside_germ(g);
    if (!rep.ok) throw precondition_error("not a Garside germ");
    for (int e : invertibles(g))
        if (!g.is_identity(e))
            throw precondition_error("germ has a nontrivial invertible element");
    GarsideStructure st;
    st.germ = std::move(g);
    st.dive = left_divisibility(st.germ);
    st.sprime = non_ascending(st.germ, st.dive);
    int n = st.nelems();
    st.sw.assign(n, std::vector<std::optional<std::pair<int, int>>>(n));
    for (int a1 = 0; a1 < n; ++a1)
        for (int a2 = 0; a2 < n; ++a2)
            if (st.germ.composable(a1, a2))
                st.sw[a1][a2] = germ_square_witness(st.germ, st.dive, st.sprime, a1, a2);
    st.fam.objects = st.germ.alpha.objects;
    st.letter_of_elem.assign(n, -1);
    for (int e = 0; e < n; ++e) {
        if (st.is_id(e)) continue;
        st.letter_of_elem[e] =
            st.fam.add_gen(st.ename(e), st.esrc(e), st.etgt(e));
        st.elem_of_letter.push_back(e);
    }
    build_selector(st);
    build_strong(st);
    build_delta(st);
    return st;
}

} // namespace detail

// Builds the structure directly from a Garside germ.
inline GarsideStructure build_structure(const Germ& g) { return detail::build_from_germ(g); }

// Builds the structure from a complete right-complemented presentation and a
// family of representative words, via the induced germ. Since every relation
// has two non-empty sides, the presented category has no nontrivial
// invertibles.
inline GarsideStructure build_structure(const Presentation& pres, const Complement& theta,
                                        const std::vector<Path>& family,
                                        long long fuel = 1000000) {
    FamilyCheck chk = is_garside_family(theta, family, fuel);
    if (chk.diverged) throw diverged_error("family check ran out of fuel");
    if (!chk.ok) throw precondition_error("word family is not a Garside family");
    std::vector<Path> reps;
    for (size_t x = 0; x < theta.alpha.objects.size(); ++x)
        reps.push_back(empty_path(static_cast<int>(x)));
    for (const auto& w : family) {
        bool dup = false;
        for (const auto& q : reps) {
            auto eq = reversing_equivalent(theta, w, q, fuel);
            if (!eq) throw diverged_error("family dedup ran out of fuel");
            if (*eq) {
                dup = true;
                break;
            }
        }
        if (!dup) reps.push_back(w);
    }
    Alphabet elems;
    elems.objects = theta.alpha.objects;
    std::vector<int> identity;
    for (size_t x = 0; x < elems.objects.size(); ++x)
        identity.push_back(
            elems.add_gen("1_" + elems.objects[x], static_cast<int>(x), static_cast<int>(x)));
    for (size_t k = elems.objects.size(); k < reps.size(); ++k) {
        std::string name;
        for (int l : reps[k].letters) name += theta.alpha.gens[l].name;
        elems.add_gen(name, reps[k].src, reps[k].tgt);
    }
    std::vector<Path> elem_reps;
    for (size_t x = 0; x < elems.objects.size(); ++x)
        elem_reps.push_back(empty_path(static_cast<int>(x)));
    for (size_t k = elems.objects.size(); k < reps.size(); ++k) elem_reps.push_back(reps[k]);
    Germ g = make_germ(elems, identity);
    int n = g.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!g.composable(a, b)) continue;
            Path prod = compose(elem_reps[a], elem_reps[b]);
            for (int c = 0; c < n; ++c) {
                if (elem_reps[c].src != prod.src || elem_reps[c].tgt != prod.tgt) continue;
                auto eq = reversing_equivalent(theta, prod, elem_reps[c], fuel);
                if (!eq) throw diverged_error("induced germ ran out of fuel");
                if (*eq) {
                    g.set(a, b, c);
                    break;
                }
            }
        }
    GarsideStructure st = detail::build_from_germ(std::move(g));
    st.base = pres;
    st.base_right = theta;
    st.reps = elem_reps;
    return st;
}

// The presentation induced by the right-lcm selector: one relation
// x.sel(x,y) = y.sel(y,x) per unordered family pair.
inline Presentation selector_presentation(const GarsideStructure& st) {
    Presentation p;
    p.alpha = st.fam;
    for (int x = 0; x < st.fam.size(); ++x)
        for (int y = x + 1; y < st.fam.size(); ++y) {
            if (!st.sel_right.defined(x, y) || !st.sel_right.defined(y, x)) continue;
            p.rels.push_back({compose(letter_path(st.fam, x), st.sel_right.comp(x, y)),
                              compose(letter_path(st.fam, y), st.sel_right.comp(y, x))});
        }
    return p;
}

inline bool common_right_multiples_exist(const GarsideStructure& st) {
    for (int e1 = 0; e1 < st.nelems(); ++e1)
        for (int e2 = 0; e2 < st.nelems(); ++e2) {
            if (st.esrc(e1) != st.esrc(e2)) continue;
            bool found = false;
            for (int z = 0; z < st.nelems() && !found; ++z)
                if (st.dive.divides(e1, z) && st.dive.divides(e2, z)) found = true;
            if (!found) return false;
        }
    return true;
}

enum class YesUnknown { yes, unknown };

// Sufficient test only: every same-target pair must bound a common left
// multiple inside S#.
inline YesUnknown common_left_multiples_exist(const GarsideStructure& st) {
    for (int e1 = 0; e1 < st.nelems(); ++e1)
        for (int e2 = 0; e2 < st.nelems(); ++e2) {
            if (st.etgt(e1) != st.etgt(e2)) continue;
            bool found = false;
            for (int p = 0; p < st.nelems() && !found; ++p) {
                if (st.etgt(p) != st.esrc(e2)) continue;
                for (int q = 0; q < st.nelems() && !found; ++q) {
                    if (st.etgt(q) != st.esrc(e1)) continue;
                    if (*st.sw[p][e2] == *st.sw[q][e1]) found = true;
                }
            }
            if (!found) return YesUnknown::unknown;
        }
    return YesUnknown::yes;
}

inline bool has_right_lcms(const GarsideStructure& st) {
    for (int e1 = 0; e1 < st.nelems(); ++e1)
        for (int e2 = 0; e2 < st.nelems(); ++e2) {
            if (st.esrc(e1) != st.esrc(e2)) continue;
            bool bounded = false;
            for (int z = 0; z < st.nelems() && !bounded; ++z)
                if (st.dive.divides(e1, z) && st.dive.divides(e2, z)) bounded = true;
            if (bounded && !detail::least_upper_bound(st, e1, e2)) return false;
        }
    return true;
}

inline bool is_strong(const GarsideStructure& st) { return st.strong; }

inline std::optional<DeltaData> find_delta(const GarsideStructure& st) { return st.delta; }

// Double reversing: f and g are left-disjoint iff reducing the left fraction
// bar(f).g returns f and g themselves.
inline bool left_disjoint(const GarsideStructure& st, const Path& f, const Path& g,
                          long long fuel = 1000000) {
    if (f.src != g.src) throw precondition_error("paths must share a source");
    if (!st.sel_left) throw precondition_error("structure is not strong");
    ReverseResult r1 = right_reverse(st.sel_right, compose(bar(f), to_signed(g)), fuel);
    if (r1.status == RevStatus::OutOfFuel) throw diverged_error("right reversing out of fuel");
    if (r1.status == RevStatus::Fail)
        throw precondition_error("no common right-multiple; fraction cannot be reduced");
    auto [vp, up] = split_pos_neg(st.fam, r1.word);
    ReverseResult r2 = left_reverse_short(*st.sel_left, vp, up);
    if (r2.status != RevStatus::Reversed)
        throw precondition_error("left selector undefined on reduced fraction");
    auto [fp, gp] = split_neg_pos(st.fam, r2.word);
    auto e1 = reversing_equivalent(st.sel_right, fp, f, fuel);
    auto e2 = reversing_equivalent(st.sel_right, gp, g, fuel);
    if (!e1 || !e2) throw diverged_error("equivalence test out of fuel");
    return *e1 && *e2;
}

inline SignedPath delta_power_path(const GarsideStructure& st, long long n, int obj) {
    if (!st.delta) throw precondition_error("structure is not bounded");
    const DeltaData& d = *st.delta;
    SignedPath out = empty_signed(obj);
    int cur = obj;
    if (n >= 0) {
        for (long long k = 0; k < n; ++k) {
            if (!st.is_id(d.delta[cur]))
                out.letters.push_back({st.letter_of_elem[d.delta[cur]], false});
            cur = d.phi_obj[cur];
        }
    } else {
        for (long long k = 0; k < -n; ++k) {
            cur = d.phi_inv_obj[cur];
            if (!st.is_id(d.delta[cur]))
                out.letters.push_back({st.letter_of_elem[d.delta[cur]], true});
        }
    }
    out.tgt = cur;
    return out;
}

struct DominoViolation {
    int a1, a2, b0, b1, b2, ap1, ap2;
};

// Exhaustive second-domino scan over the induced germ: any commuting
// 2x1 diagram with normal top row and normal right column must have a
// normal bottom row. Returns the first violating tuple.
inline std::optional<DominoViolation> second_domino_check(const GarsideStructure& st) {
    int n = st.nelems();
    auto derive = [&](int b, int a, int bnext) -> std::optional<int> {
        // the unique x with b.x = a.bnext, found through normal forms
        if (!st.sw[a][bnext]) return std::nullopt;
        auto target = *st.sw[a][bnext];
        for (int x = 0; x < n; ++x)
            if (st.sw[b][x] && *st.sw[b][x] == target) return x;
        return std::nullopt;
    };
    for (int a1 = 0; a1 < n; ++a1)
        for (int a2 = 0; a2 < n; ++a2) {
            if (!st.germ.composable(a1, a2) || !st.normal_pair(a1, a2)) continue;
            for (int b0 = 0; b0 < n; ++b0) {
                if (st.esrc(b0) != st.esrc(a1)) continue;
                for (int b1 = 0; b1 < n; ++b1) {
                    if (st.esrc(b1) != st.etgt(a1)) continue;
                    auto ap1 = derive(b0, a1, b1);
                    if (!ap1) continue;
                    for (int b2 = 0; b2 < n; ++b2) {
                        if (st.esrc(b2) != st.etgt(a2)) continue;
                        auto ap2 = derive(b1, a2, b2);
                        if (!ap2) continue;
                        if (!st.normal_pair(b1, *ap2)) continue;
                        if (!st.normal_pair(*ap1, *ap2))
                            return DominoViolation{a1, a2, b0, b1, b2, *ap1, *ap2};
                    }
                }
            }
        }
    return std::nullopt;
}

} // namespace garside
