#include "garside/io.hpp"
#include "garside/signed.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using json = nlohmann::ordered_json;
using namespace garside;

namespace {

// Exit codes: 0 success or positive answer, 1 negative mathematical answer,
// 2 inconclusive (out of fuel / diverged), 3 usage or parse error.
constexpr int exit_ok = 0;
constexpr int exit_no = 1;
constexpr int exit_inconclusive = 2;
constexpr int exit_usage = 3;

// Answers carried out of handlers as exceptions; the message is the output.
struct negative_result : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct inconclusive_result : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Workspace {
    std::string input = "-";
    long long fuel = 1000000;
    bool json_out = false;
    int rc = exit_ok;

    std::optional<ParsedInput> parsed;
    std::optional<Complement> theta;
    std::optional<GarsideStructure> st;

    void load() {
        if (parsed) return;
        if (input == "-") {
            parsed = parse_input(std::cin);
            return;
        }
        std::ifstream in(input);
        if (!in) throw std::runtime_error("cannot open input file: " + input);
        parsed = parse_input(in);
    }

    const Presentation& pres() {
        load();
        if (!parsed->pres) throw precondition_error("input is not a presentation");
        return *parsed->pres;
    }

    const Germ& germ() {
        load();
        if (!parsed->germ) throw precondition_error("input is not a germ");
        return *parsed->germ;
    }

    const Complement& complement() {
        if (!theta) theta = derive_right_complement(pres());
        return *theta;
    }

    // Built at most once: from the germ directly, or from the presentation
    // via the smallest Garside family over its letters.
    const GarsideStructure& structure() {
        if (st) return *st;
        load();
        if (parsed->germ) {
            st = build_structure(*parsed->germ);
            return *st;
        }
        const Complement& th = complement();
        std::vector<Path> seeds;
        for (int g = 0; g < th.alpha.size(); ++g) seeds.push_back(letter_path(th.alpha, g));
        FamilyResult fam = smallest_garside_family(th, seeds, fuel);
        if (fam.status == FamilyResult::Status::diverged)
            throw inconclusive_result("garside family closure diverged");
        if (fam.status == FamilyResult::Status::no_common_multiple)
            throw negative_result("no common right multiple: " +
                                  format_word(th.alpha, fam.failing->first) + " , " +
                                  format_word(th.alpha, fam.failing->second));
        st = build_structure(pres(), th, fam.family, fuel);
        return *st;
    }
};

void emit(const Workspace& ws, const json& j, const std::string& text) {
    if (ws.json_out)
        std::cout << j.dump(2) << "\n";
    else if (!text.empty())
        std::cout << text << "\n";
}

std::string join_lines(const std::vector<std::string>& lines) {
    std::string out;
    for (const auto& l : lines) {
        if (!out.empty()) out += '\n';
        out += l;
    }
    return out;
}

std::vector<std::string> entry_names(const GarsideStructure& st, const std::vector<int>& entries) {
    std::vector<std::string> out;
    for (int e : entries) out.push_back(st.ename(e));
    return out;
}

std::string nf_text(const GarsideStructure& st, const NormalForm& nf) {
    return format_word(st.fam, nf_word(st, nf));
}

int run_check_complemented(Workspace& ws) {
    Complement th;
    try {
        th = derive_right_complement(ws.pres());
    } catch (const not_complemented_error& e) {
        emit(ws, {{"complemented", false}, {"reason", e.what()}},
             std::string("not right-complemented: ") + e.what());
        return exit_no;
    }
    json table = json::array();
    std::vector<std::string> lines{"right-complemented"};
    for (int x = 0; x < th.alpha.size(); ++x)
        for (int y = 0; y < th.alpha.size(); ++y) {
            if (x == y || !th.defined(x, y)) continue;
            std::string w = format_word(th.alpha, th.comp(x, y));
            table.push_back({th.alpha.gens[x].name, th.alpha.gens[y].name, w});
            lines.push_back("rc(" + th.alpha.gens[x].name + ", " + th.alpha.gens[y].name +
                            ") = " + w);
        }
    emit(ws, {{"complemented", true}, {"table", table}}, join_lines(lines));
    return exit_ok;
}

int run_check_noetherian(Workspace& ws) {
    bool hom = ws.pres().is_homogeneous();
    emit(ws, {{"homogeneous", hom}},
         hom ? "homogeneous; right-noetherian"
             : "not homogeneous; no machine-checkable noetherian evidence");
    return hom ? exit_ok : exit_no;
}

int run_check_complete(Workspace& ws) {
    const Presentation& p = ws.pres();
    const Complement& th = ws.complement();
    CompletenessReport rep;
    try {
        rep = check_complete(p, th, ws.fuel);
    } catch (const precondition_error& e) {
        throw inconclusive_result(e.what());
    }
    if (rep.verdict == TriState::holds) {
        emit(ws, {{"complete", true}}, "complete; left-cancellative");
        return exit_ok;
    }
    if (rep.verdict == TriState::fails) {
        json w = json::array();
        std::string names;
        for (int g : *rep.witness) {
            w.push_back(th.alpha.gens[g].name);
            names += (names.empty() ? "" : " ") + th.alpha.gens[g].name;
        }
        emit(ws, {{"complete", false}, {"witness", w}}, "incomplete; witness: " + names);
        return exit_no;
    }
    emit(ws, {{"complete", nullptr}}, "inconclusive");
    return exit_inconclusive;
}

int run_reverse(Workspace& ws, const std::string& word, const std::string& side,
                const std::string& grid) {
    const Presentation& p = ws.pres();
    SignedPath w = parse_word(p.alpha, word);
    bool want_grid = !grid.empty();
    Complement th = side == "left" ? derive_left_complement(p) : derive_right_complement(p);
    ReverseResult r = side == "left" ? left_reverse(th, w, ws.fuel, want_grid)
                                     : right_reverse(th, w, ws.fuel, want_grid);
    std::string status = r.status == RevStatus::Reversed ? "reversed"
                         : r.status == RevStatus::Fail   ? "stuck"
                                                         : "out-of-fuel";
    json j{{"status", status},
           {"word", format_word(p.alpha, r.word)},
           {"steps", r.steps},
           {"fills", r.fills}};
    std::vector<std::string> lines;
    lines.push_back(r.status == RevStatus::Reversed ? format_word(p.alpha, r.word) : status);
    if (want_grid && r.grid) {
        std::string g = render_grid(*r.grid, p.alpha, grid);
        j["grid"] = g;
        lines.push_back(g);
    }
    emit(ws, j, join_lines(lines));
    return r.status == RevStatus::Reversed ? exit_ok
           : r.status == RevStatus::Fail   ? exit_no
                                           : exit_inconclusive;
}

int run_closure(Workspace& ws, int cap) {
    const Complement& th = ws.complement();
    ClosureResult r = termination_closure(th, ws.fuel, cap);
    json fam = json::array();
    std::vector<std::string> lines;
    for (const auto& w : r.family) {
        fam.push_back(format_word(th.alpha, w));
        lines.push_back(format_word(th.alpha, w));
    }
    if (r.diverged) {
        emit(ws, {{"diverged", true}, {"closure", fam}}, "diverged");
        return exit_inconclusive;
    }
    emit(ws, {{"diverged", false}, {"closure", fam}}, join_lines(lines));
    return exit_ok;
}

int run_garside_closure(Workspace& ws, const std::vector<std::string>& seed_words, int cap,
                        bool skip) {
    const Complement& th = ws.complement();
    std::vector<Path> seeds;
    if (seed_words.empty())
        for (int g = 0; g < th.alpha.size(); ++g) seeds.push_back(letter_path(th.alpha, g));
    for (const auto& s : seed_words) seeds.push_back(parse_positive_word(th.alpha, s));
    FamilyResult r = smallest_garside_family(th, seeds, ws.fuel, cap, skip);
    if (r.status == FamilyResult::Status::diverged) {
        emit(ws, {{"status", "diverged"}}, "diverged");
        return exit_inconclusive;
    }
    if (r.status == FamilyResult::Status::no_common_multiple) {
        std::string u = format_word(th.alpha, r.failing->first);
        std::string v = format_word(th.alpha, r.failing->second);
        emit(ws, {{"status", "no-common-multiple"}, {"failing", {u, v}}},
             "no common right multiple: " + u + " , " + v);
        return exit_no;
    }
    json fam = json::array();
    std::vector<std::string> lines;
    for (const auto& w : r.family) {
        fam.push_back(format_word(th.alpha, w));
        lines.push_back(format_word(th.alpha, w));
    }
    emit(ws, {{"status", "ok"}, {"family", fam}}, join_lines(lines));
    return exit_ok;
}

int run_is_garside_family(Workspace& ws, const std::vector<std::string>& words) {
    const Complement& th = ws.complement();
    std::vector<Path> fam;
    for (const auto& s : words) fam.push_back(parse_positive_word(th.alpha, s));
    FamilyCheck chk = is_garside_family(th, fam, ws.fuel);
    if (chk.diverged) {
        emit(ws, {{"status", "diverged"}}, "diverged");
        return exit_inconclusive;
    }
    if (!chk.ok) {
        std::string u = format_word(th.alpha, chk.witness->first);
        std::string v = format_word(th.alpha, chk.witness->second);
        emit(ws, {{"garside_family", false}, {"witness", {u, v}}},
             "not a garside family; witness: " + u + " , " + v);
        return exit_no;
    }
    emit(ws, {{"garside_family", true}}, "garside family");
    return exit_ok;
}

int run_check_germ(Workspace& ws) {
    const Germ& g = ws.germ();
    if (auto bad = validate_germ(g)) {
        emit(ws, {{"valid", false}, {"reason", *bad}}, "invalid germ: " + *bad);
        return exit_no;
    }
    if (!is_left_associative(g)) {
        emit(ws, {{"valid", true}, {"garside", false}, {"reason", "not left-associative"}},
             "not left-associative");
        return exit_no;
    }
    if (!is_left_cancellative(g)) {
        emit(ws, {{"valid", true}, {"garside", false}, {"reason", "not left-cancellative"}},
             "not left-cancellative");
        return exit_no;
    }
    GarsideGermReport rep = is_garside_germ(g);
    if (!rep.ok) {
        std::string a = g.alpha.gens[rep.witness->first].name;
        std::string b = g.alpha.gens[rep.witness->second].name;
        emit(ws, {{"valid", true}, {"garside", false}, {"witness", {a, b}}},
             "not a garside germ; witness: " + a + " " + b);
        return exit_no;
    }
    emit(ws, {{"valid", true}, {"garside", true}}, "garside germ");
    return exit_ok;
}

int run_witness_table(Workspace& ws) {
    const GarsideStructure& st = ws.structure();
    json table = json::array();
    std::vector<std::string> lines;
    for (int a1 = 0; a1 < st.nelems(); ++a1)
        for (int a2 = 0; a2 < st.nelems(); ++a2) {
            if (!st.sw[a1][a2]) continue;
            auto [h, t] = *st.sw[a1][a2];
            table.push_back({{"pair", {st.ename(a1), st.ename(a2)}},
                             {"witness", {st.ename(h), st.ename(t)}}});
            lines.push_back(st.ename(a1) + " " + st.ename(a2) + " -> " + st.ename(h) + " " +
                            st.ename(t));
        }
    emit(ws, {{"table", table}}, join_lines(lines));
    return exit_ok;
}

int run_normalize(Workspace& ws, const std::string& word) {
    const GarsideStructure& st = ws.structure();
    NormalForm nf = normalize(st, parse_positive_word(st.fam, word));
    emit(ws, {{"entries", entry_names(st, nf.entries)}, {"word", nf_text(st, nf)}},
         nf_text(st, nf));
    return exit_ok;
}

int run_word_problem(Workspace& ws, const std::string& w1s, const std::string& w2s,
                     std::string route) {
    const GarsideStructure& st = ws.structure();
    SignedPath w1 = parse_word(st.fam, w1s);
    SignedPath w2 = parse_word(st.fam, w2s);
    auto positive = [](const SignedPath& w) {
        for (const auto& l : w.letters)
            if (l.inv) return false;
        return true;
    };
    bool pos = positive(w1) && positive(w2);
    if (route.empty()) route = pos ? "nf" : "sym";
    bool equal = false;
    if (route == "nf" || route == "rev") {
        if (!pos) throw precondition_error("route " + route + " needs positive words");
        Path u = parse_positive_word(st.fam, w1s);
        Path v = parse_positive_word(st.fam, w2s);
        if (u.src != v.src || u.tgt != v.tgt)
            equal = false;
        else
            equal = route == "nf" ? word_problem_positive_nf(st, u, v)
                                  : word_problem_positive_rev(st, u, v);
    } else if (route == "sym") {
        SymStatus s = word_problem_signed_sym(st, w1, w2, equal, ws.fuel);
        if (s == SymStatus::diverged) throw inconclusive_result("out of fuel");
        if (s == SymStatus::no_right_fraction)
            throw inconclusive_result("no right-fraction expression");
    } else {
        if (w1.src != w2.src || w1.tgt != w2.tgt) {
            equal = false;
        } else {
            SignedPath diff = compose(w1, bar(w2));
            SignedReduceResult r = route == "right"
                                       ? word_problem_signed_right(st, diff, ws.fuel)
                                       : word_problem_signed_left(st, diff, ws.fuel);
            equal = r.trivial;
        }
    }
    emit(ws, {{"equal", equal}, {"route", route}}, equal ? "equal" : "not equal");
    return equal ? exit_ok : exit_no;
}

int run_left_divides(Workspace& ws, const std::string& us, const std::string& vs) {
    const GarsideStructure& st = ws.structure();
    Path u = parse_positive_word(st.fam, us);
    Path v = parse_positive_word(st.fam, vs);
    auto r = left_divides(st, u, v);
    if (!r) {
        emit(ws, {{"divides", false}}, "no");
        return exit_no;
    }
    emit(ws, {{"divides", true}, {"residue", format_word(st.fam, *r)}},
         format_word(st.fam, *r));
    return exit_ok;
}

int run_lcm(Workspace& ws, const std::string& us, const std::string& vs, bool raw) {
    if (raw) {
        const Complement& th = ws.complement();
        Path u = parse_positive_word(th.alpha, us);
        Path v = parse_positive_word(th.alpha, vs);
        auto r = right_lcm(th, u, v, ws.fuel);
        if (!r) {
            emit(ws, {{"lcm", nullptr}}, "no common right multiple");
            return exit_no;
        }
        emit(ws, {{"lcm", format_word(th.alpha, *r)}}, format_word(th.alpha, *r));
        return exit_ok;
    }
    const GarsideStructure& st = ws.structure();
    Path u = parse_positive_word(st.fam, us);
    Path v = parse_positive_word(st.fam, vs);
    auto r = right_lcm(st, u, v);
    if (!r) {
        emit(ws, {{"lcm", nullptr}}, "no common right multiple");
        return exit_no;
    }
    emit(ws, {{"lcm", format_word(st.fam, *r)}}, format_word(st.fam, *r));
    return exit_ok;
}

int run_gcd(Workspace& ws, const std::string& us, const std::string& vs) {
    const GarsideStructure& st = ws.structure();
    if (!st.sel_left) throw precondition_error("structure is not strong");
    Path u = parse_positive_word(st.fam, us);
    Path v = parse_positive_word(st.fam, vs);
    if (u.src != v.src) throw precondition_error("words must share a source");
    Path g;
    try {
        g = left_gcd(st, u, v);
    } catch (const precondition_error& e) {
        throw negative_result(e.what());
    }
    emit(ws, {{"gcd", format_word(st.fam, g)}}, format_word(st.fam, g));
    return exit_ok;
}

json sym_json(const GarsideStructure& st, const SymmetricNormal& s) {
    return {{"den", entry_names(st, s.den.entries)}, {"num", entry_names(st, s.num.entries)}};
}

std::string sym_text(const GarsideStructure& st, const SymmetricNormal& s) {
    return "den: " + nf_text(st, s.den) + "\nnum: " + nf_text(st, s.num);
}

SymmetricNormal sym_of(Workspace& ws, const std::string& word) {
    const GarsideStructure& st = ws.structure();
    SymResult r = sym_normalize(st, parse_word(st.fam, word), ws.fuel);
    if (r.status == SymStatus::diverged) throw inconclusive_result("out of fuel");
    if (r.status == SymStatus::no_right_fraction)
        throw inconclusive_result("no right-fraction expression");
    return r.nf;
}

int run_sym_normalize(Workspace& ws, const std::string& word) {
    SymmetricNormal s = sym_of(ws, word);
    emit(ws, sym_json(ws.structure(), s), sym_text(ws.structure(), s));
    return exit_ok;
}

json delta_json(const GarsideStructure& st, const DeltaNormal& d) {
    return {{"n", d.n}, {"tail", entry_names(st, d.tail)}};
}

std::string delta_text(const GarsideStructure& st, const DeltaNormal& d) {
    NormalForm tail{d.tail.empty() ? d.tgt : st.esrc(d.tail.front()), d.tgt, d.tail};
    return "n: " + std::to_string(d.n) + "\ntail: " + nf_text(st, tail);
}

int run_delta_normalize(Workspace& ws, const std::string& word) {
    const GarsideStructure& st = ws.structure();
    DeltaNormal d = delta_normalize(st, parse_word(st.fam, word));
    emit(ws, delta_json(st, d), delta_text(st, d));
    return exit_ok;
}

int run_invert(Workspace& ws, const std::string& word, const std::string& form) {
    const GarsideStructure& st = ws.structure();
    if (form == "delta") {
        DeltaNormal d = invert_delta(st, delta_normalize(st, parse_word(st.fam, word)));
        emit(ws, delta_json(st, d), delta_text(st, d));
        return exit_ok;
    }
    SymmetricNormal s = invert_symmetric(sym_of(ws, word));
    emit(ws, sym_json(st, s), sym_text(st, s));
    return exit_ok;
}

int run_bound(Workspace& ws, const std::string& w1s, const std::string& w2s, bool upper) {
    const GarsideStructure& st = ws.structure();
    if (!st.sel_left) throw precondition_error("structure is not strong");
    SignedPath w1 = parse_word(st.fam, w1s);
    SignedPath w2 = parse_word(st.fam, w2s);
    if (w1.src != w2.src) throw precondition_error("words must share a source");
    SignedPath r;
    try {
        r = upper ? lub(st, w1, w2, ws.fuel) : glb(st, w1, w2, ws.fuel);
    } catch (const precondition_error& e) {
        throw negative_result(e.what());
    }
    emit(ws, {{"word", format_word(st.fam, r)}}, format_word(st.fam, r));
    return exit_ok;
}

int run_info(Workspace& ws) {
    const GarsideStructure& st = ws.structure();
    std::vector<int> atoms = germ_atoms(st.germ);
    std::string atom_names;
    json atom_list = json::array();
    for (int e : atoms) {
        atom_names += (atom_names.empty() ? "" : " ") + st.ename(e);
        atom_list.push_back(st.ename(e));
    }
    bool bounded = st.delta.has_value();
    json j{{"elements", st.nelems()},
           {"atoms", atom_list},
           {"strong", st.strong},
           {"bounded", bounded}};
    std::vector<std::string> lines{"elements: " + std::to_string(st.nelems()),
                                   "atoms: " + atom_names,
                                   std::string("strong: ") + (st.strong ? "true" : "false"),
                                   std::string("bounded: ") + (bounded ? "true" : "false")};
    if (bounded) {
        std::string delta_names;
        for (int e : st.delta->delta)
            delta_names += (delta_names.empty() ? "" : " ") + st.ename(e);
        json phi = json::object();
        std::string phi_text;
        for (int e : atoms) {
            phi[st.ename(e)] = st.ename(st.delta->phi[e]);
            phi_text += (phi_text.empty() ? "" : " ") + st.ename(e) + "->" +
                        st.ename(st.delta->phi[e]);
        }
        j["delta"] = delta_names;
        j["phi"] = phi;
        lines.push_back("delta: " + delta_names);
        lines.push_back("phi: " + phi_text);
    }
    bool crm = common_right_multiples_exist(st);
    YesUnknown clm = common_left_multiples_exist(st);
    bool lcms = has_right_lcms(st);
    j["common_right_multiples"] = crm;
    j["common_left_multiples"] = clm == YesUnknown::yes ? "yes" : "unknown";
    j["right_lcms"] = lcms;
    lines.push_back(std::string("common right multiples: ") + (crm ? "true" : "false"));
    lines.push_back(std::string("common left multiples: ") +
                    (clm == YesUnknown::yes ? "yes" : "unknown"));
    lines.push_back(std::string("right lcms: ") + (lcms ? "true" : "false"));
    emit(ws, j, join_lines(lines));
    return exit_ok;
}

void add_common(CLI::App* sub, Workspace& ws) {
    sub->add_option("-i,--input", ws.input, "input file with the presentation or germ ('-' for stdin)");
    sub->add_option("--fuel", ws.fuel, "step budget for reversing loops");
    sub->add_flag("--json", ws.json_out, "structured output");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Garside calculus: word reversing, normal forms, and word problems"};
    app.require_subcommand(1);
    Workspace ws;
    if (const char* env = std::getenv("GARSIDE_FUEL")) ws.fuel = std::atoll(env);

    auto* complemented = app.add_subcommand("check-complemented",
                                            "derive the right-complement table");
    add_common(complemented, ws);
    complemented->callback([&] { ws.rc = run_check_complemented(ws); });

    auto* noetherian = app.add_subcommand("check-noetherian", "homogeneity as noetherian evidence");
    add_common(noetherian, ws);
    noetherian->callback([&] { ws.rc = run_check_noetherian(ws); });

    auto* complete = app.add_subcommand("check-complete", "cube condition on all letter triples");
    add_common(complete, ws);
    complete->callback([&] { ws.rc = run_check_complete(ws); });

    auto* reverse = app.add_subcommand("reverse", "reverse a signed word");
    std::string rev_word, rev_side = "right", rev_grid;
    reverse->add_option("word", rev_word, "signed word, ~ marks an inverse letter")->required();
    reverse->add_option("--side", rev_side, "reversing direction")
        ->check(CLI::IsMember({"right", "left"}));
    reverse->add_option("--grid", rev_grid, "also render the reversing grid")
        ->check(CLI::IsMember({"ascii", "dot"}));
    add_common(reverse, ws);
    reverse->callback([&] { ws.rc = run_reverse(ws, rev_word, rev_side, rev_grid); });

    auto* closure = app.add_subcommand("closure", "letter closure under iterated complements");
    int closure_cap = 1024;
    closure->add_option("--cap", closure_cap, "maximum closure size");
    add_common(closure, ws);
    closure->callback([&] { ws.rc = run_closure(ws, closure_cap); });

    auto* gclosure = app.add_subcommand("garside-closure", "smallest garside family over seeds");
    std::vector<std::string> gc_seeds;
    int gc_cap = 256;
    bool gc_skip = false;
    gclosure->add_option("--seed", gc_seeds, "seed word (repeatable; default: every letter)");
    gclosure->add_option("--cap", gc_cap, "maximum family size");
    gclosure->add_flag("--skip-undefined", gc_skip, "skip pairs without a common right multiple");
    add_common(gclosure, ws);
    gclosure->callback([&] { ws.rc = run_garside_closure(ws, gc_seeds, gc_cap, gc_skip); });

    auto* isfam = app.add_subcommand("is-garside-family", "check a word family for closure");
    std::vector<std::string> fam_words;
    isfam->add_option("family", fam_words, "family words")->required()->expected(-1);
    add_common(isfam, ws);
    isfam->callback([&] { ws.rc = run_is_garside_family(ws, fam_words); });

    auto* checkgerm = app.add_subcommand("check-germ", "validate a germ and test the J-greatest law");
    add_common(checkgerm, ws);
    checkgerm->callback([&] { ws.rc = run_check_germ(ws); });

    auto* wtable = app.add_subcommand("witness-table", "normal decompositions of all products");
    add_common(wtable, ws);
    wtable->callback([&] { ws.rc = run_witness_table(ws); });

    auto* norm = app.add_subcommand("normalize", "greedy normal form of a positive word");
    std::string norm_word;
    norm->add_option("word", norm_word, "positive word over the family alphabet")->required();
    add_common(norm, ws);
    norm->callback([&] { ws.rc = run_normalize(ws, norm_word); });

    auto* wp = app.add_subcommand("word-problem", "decide equivalence of two words");
    std::string wp_w1, wp_w2, wp_route;
    wp->add_option("word1", wp_w1, "first word")->required();
    wp->add_option("word2", wp_w2, "second word")->required();
    wp->add_option("--route", wp_route, "nf, rev (positive), sym, right, left (signed)")
        ->check(CLI::IsMember({"nf", "rev", "sym", "right", "left"}));
    add_common(wp, ws);
    wp->callback([&] { ws.rc = run_word_problem(ws, wp_w1, wp_w2, wp_route); });

    auto* ldiv = app.add_subcommand("left-divides", "left divisibility with residue");
    std::string ld_u, ld_v;
    ldiv->add_option("divisor", ld_u, "candidate left divisor")->required();
    ldiv->add_option("word", ld_v, "word to divide")->required();
    add_common(ldiv, ws);
    ldiv->callback([&] { ws.rc = run_left_divides(ws, ld_u, ld_v); });

    auto* lcmc = app.add_subcommand("lcm", "right lcm of two positive words");
    std::string lcm_u, lcm_v;
    bool lcm_raw = false;
    lcmc->add_option("word1", lcm_u, "first word")->required();
    lcmc->add_option("word2", lcm_v, "second word")->required();
    lcmc->add_flag("--raw", lcm_raw, "reverse over the letter complement, no structure");
    add_common(lcmc, ws);
    lcmc->callback([&] { ws.rc = run_lcm(ws, lcm_u, lcm_v, lcm_raw); });

    auto* gcdc = app.add_subcommand("gcd", "left gcd of two positive words");
    std::string gcd_u, gcd_v;
    gcdc->add_option("word1", gcd_u, "first word")->required();
    gcdc->add_option("word2", gcd_v, "second word")->required();
    add_common(gcdc, ws);
    gcdc->callback([&] { ws.rc = run_gcd(ws, gcd_u, gcd_v); });

    auto* symn = app.add_subcommand("sym-normalize", "symmetric normal form of a signed word");
    std::string sym_word;
    symn->add_option("word", sym_word, "signed word")->required();
    add_common(symn, ws);
    symn->callback([&] { ws.rc = run_sym_normalize(ws, sym_word); });

    auto* deltan = app.add_subcommand("delta-normalize", "delta normal form of a signed word");
    std::string delta_word;
    deltan->add_option("word", delta_word, "signed word")->required();
    add_common(deltan, ws);
    deltan->callback([&] { ws.rc = run_delta_normalize(ws, delta_word); });

    auto* inv = app.add_subcommand("invert", "normal form of the inverse");
    std::string inv_word, inv_form = "sym";
    inv->add_option("word", inv_word, "signed word")->required();
    inv->add_option("--form", inv_form, "output form")->check(CLI::IsMember({"sym", "delta"}));
    add_common(inv, ws);
    inv->callback([&] { ws.rc = run_invert(ws, inv_word, inv_form); });

    auto* lubc = app.add_subcommand("lub", "least common upper bound of two signed words");
    std::string lub_w1, lub_w2;
    lubc->add_option("word1", lub_w1, "first word")->required();
    lubc->add_option("word2", lub_w2, "second word")->required();
    add_common(lubc, ws);
    lubc->callback([&] { ws.rc = run_bound(ws, lub_w1, lub_w2, true); });

    auto* glbc = app.add_subcommand("glb", "greatest common lower bound of two signed words");
    std::string glb_w1, glb_w2;
    glbc->add_option("word1", glb_w1, "first word")->required();
    glbc->add_option("word2", glb_w2, "second word")->required();
    add_common(glbc, ws);
    glbc->callback([&] { ws.rc = run_bound(ws, glb_w1, glb_w2, false); });

    auto* info = app.add_subcommand("info", "structure report");
    add_common(info, ws);
    info->callback([&] { ws.rc = run_info(ws); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    } catch (const negative_result& e) {
        std::cout << e.what() << "\n";
        return exit_no;
    } catch (const inconclusive_result& e) {
        std::cout << e.what() << "\n";
        return exit_inconclusive;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const diverged_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_inconclusive;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return ws.rc;
}
