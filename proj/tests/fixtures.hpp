#pragma once

#include "garside/io.hpp"

namespace garside::fixtures {

// braid monoid on three strands
inline const char* braid3_text = "gens: a b\nrels: a b a = b a b\n";

// rank-2 free abelian monoid
inline const char* free_abelian_text = "gens: a b\nrels: a b = b a\n";

// right-complemented but with divergent reversing
inline const char* divergent_text = "gens: a b\nrels: a b b = b a\n";

// Baumslag-Solitar style relation; reversing of bar(a).b.a never terminates
inline const char* baumslag_text = "gens: a b\nrels: a b = b b a\n";

// not right-cancellative; bounded normal forms do not apply
inline const char* m2_text = "gens: a b\nrels: a b b = b b b\n";

// complement exists but the cube condition fails on (a, b, c)
inline const char* three_gen_text =
    "gens: a b c\nrels:\na b = b a\na c = c a\nb a = c a\n";

inline const char* b3_germ_text =
    "germ:\n"
    "elements: D ab ba b a 1\n"
    "identity: 1\n"
    "products:\n"
    "a * b = ab\n"
    "a * ba = D\n"
    "b * a = ba\n"
    "b * ab = D\n"
    "ab * a = D\n"
    "ba * b = D\n";

inline const char* free_abelian_germ_text =
    "germ:\n"
    "elements: 1 a b ab\n"
    "identity: 1\n"
    "products:\n"
    "a * b = ab\n"
    "b * a = ab\n";

inline const char* m2_germ_text =
    "germ:\n"
    "elements: 1 a b bb bbb\n"
    "identity: 1\n"
    "products:\n"
    "a * bb = bbb\n"
    "b * b = bb\n"
    "b * bb = bbb\n"
    "bb * b = bbb\n";

// left-associative and left-cancellative, but (a, aa) has no greatest divisor
inline const char* nongarside_germ_text =
    "germ:\n"
    "elements: 1 a b aa ab\n"
    "identity: 1\n"
    "products:\n"
    "a * a = aa\n"
    "a * b = ab\n"
    "b * a = ab\n"
    "b * b = aa\n";

// free monoid germ on two letters
inline const char* hollow_germ_text =
    "germ:\n"
    "elements: 1 a b\n"
    "identity: 1\n"
    "products:\n";

inline Presentation braid3() { return *parse_input(braid3_text).pres; }
inline Presentation free_abelian() { return *parse_input(free_abelian_text).pres; }
inline Presentation divergent() { return *parse_input(divergent_text).pres; }
inline Presentation baumslag() { return *parse_input(baumslag_text).pres; }
inline Presentation m2() { return *parse_input(m2_text).pres; }
inline Presentation three_gen() { return *parse_input(three_gen_text).pres; }

inline Germ b3_germ() { return *parse_input(b3_germ_text).germ; }
inline Germ free_abelian_germ() { return *parse_input(free_abelian_germ_text).germ; }
inline Germ m2_germ() { return *parse_input(m2_germ_text).germ; }
inline Germ nongarside_germ() { return *parse_input(nongarside_germ_text).germ; }
inline Germ hollow_germ() { return *parse_input(hollow_germ_text).germ; }

} // namespace garside::fixtures
