#pragma once

#include <string>
#include <vector>

#include "fixtures.hpp"
#include "garside/garside.hpp"
#include "garside/io.hpp"
#include "garside/normal.hpp"

namespace garside::testing {

inline Path pw(const Alphabet& a, const std::string& text) { return parse_positive_word(a, text); }

inline SignedPath sw(const Alphabet& a, const std::string& text) { return parse_word(a, text); }

inline std::string fmt(const Alphabet& a, const Path& w) { return format_word(a, w); }

inline std::string fmt(const Alphabet& a, const SignedPath& w) { return format_word(a, w); }

inline std::vector<std::string> names(const Alphabet& a, const std::vector<Path>& words) {
    std::vector<std::string> out;
    for (const auto& w : words) out.push_back(format_word(a, w));
    return out;
}

// Structures used across suites; built once per call site to keep tests independent.
inline GarsideStructure b3_structure() {
    Presentation p = fixtures::braid3();
    Complement theta = derive_right_complement(p);
    std::vector<Path> seeds;
    for (int g = 0; g < p.alpha.size(); ++g) seeds.push_back(letter_path(p.alpha, g));
    return build_structure(p, theta, smallest_garside_family(theta, seeds).family);
}

inline GarsideStructure free_abelian_structure() {
    Presentation p = fixtures::free_abelian();
    Complement theta = derive_right_complement(p);
    std::vector<Path> seeds;
    for (int g = 0; g < p.alpha.size(); ++g) seeds.push_back(letter_path(p.alpha, g));
    return build_structure(p, theta, smallest_garside_family(theta, seeds).family);
}

inline GarsideStructure b3_germ_structure() { return build_structure(fixtures::b3_germ()); }

inline GarsideStructure m2_structure() { return build_structure(fixtures::m2_germ()); }

inline int fam_letter(const GarsideStructure& st, const std::string& name) {
    auto g = st.fam.find_gen(name);
    if (!g) throw std::invalid_argument("no family letter named " + name);
    return *g;
}

inline int elem(const GarsideStructure& st, const std::string& name) {
    for (int e = 0; e < st.nelems(); ++e)
        if (st.ename(e) == name) return e;
    throw std::invalid_argument("no element named " + name);
}

inline NormalForm nf_of(const GarsideStructure& st, const std::vector<std::string>& entries,
                        int obj = 0) {
    NormalForm nf = empty_nf(obj);
    for (auto it = entries.rbegin(); it != entries.rend(); ++it)
        nf = left_multiply(st, elem(st, *it), nf);
    return nf;
}

inline std::vector<std::string> entry_names(const GarsideStructure& st, const NormalForm& nf) {
    std::vector<std::string> out;
    for (int e : nf.entries) out.push_back(st.ename(e));
    return out;
}

// Expands family letters to representative words over the base alphabet.
inline Path to_base(const GarsideStructure& st, const Path& w) {
    Path out = empty_path(w.src);
    for (int l : w.letters) out = compose(out, st.reps[st.elem_of_letter[l]]);
    return out;
}

}  // namespace garside::testing
