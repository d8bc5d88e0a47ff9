// Command line front end: classification, derived-rack extraction,
// inversion, twisting, skew-brace solutions, enveloping presentations,
// framed-link coloring and exhaustive enumeration. Every subcommand is a
// thin shell over the library and ends with one machine-parsable line
// prefixed "RESULT:". Exit codes: 0 success/true, 1 property-false,
// 2 usage or input error.

#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include <birack/birack.hpp>

namespace {

using namespace birack;

const char* bstr(bool b) { return b ? "true" : "false"; }

void print_table(const std::string& name, const op_table& T) {
    std::cout << name << ":\n";
    for (int x = 0; x < T.n; ++x) {
        std::cout << " ";
        for (int y = 0; y < T.n; ++y) std::cout << " " << T.at(x, y);
        std::cout << "\n";
    }
}

void print_permutation(const std::string& name, const permutation& p) {
    std::cout << name << ":";
    for (int x = 0; x < p.size(); ++x) std::cout << " " << p(x);
    std::cout << "\n";
}

std::string perm_str(const permutation& p) {
    std::string s = "[";
    for (int x = 0; x < p.size(); ++x) {
        if (x) s += ",";
        s += std::to_string(p(x));
    }
    return s + "]";
}

std::string torsion_str(const std::vector<long long>& torsion) {
    std::string s = "[";
    for (size_t i = 0; i < torsion.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(torsion[i]);
    }
    return s + "]";
}

// rack and ops files lift to their solutions; braces and permutations do not
solution load_solution(const parsed_file& file, const std::string& path) {
    if (const auto* s = std::get_if<solution>(&file)) return *s;
    if (const auto* r = std::get_if<rack_file>(&file)) {
        if (!is_rack(r->tri)) throw not_a_rack(path + ": rack file does not hold a rack");
        return solution::from_rack(rack_table(r->tri));
    }
    if (const auto* o = std::get_if<ops_triple>(&file)) return solution_from_ops(*o);
    throw validation_error(path + ": expected a solution, rack or ops file");
}

int cmd_verify(const std::string& path) {
    const parsed_file file = parse_file(path);
    if (const auto* r = std::get_if<rack_file>(&file)) {
        const bool shelf = is_shelf(r->tri);
        const bool rack = is_rack(r->tri);
        const bool quandle = is_quandle(r->tri);
        std::cout << "RESULT: shelf=" << bstr(shelf) << " rack=" << bstr(rack)
                  << " quandle=" << bstr(quandle) << "\n";
        return rack ? 0 : 1;
    }
    if (const auto* o = std::get_if<ops_triple>(&file)) {
        const theorem_report rep = theorem1_conditions(*o);
        std::cout << "RESULT: cond1=" << bstr(rep.cond1) << " cond2=" << bstr(rep.cond2)
                  << " cond3=" << bstr(rep.cond3) << " braid=" << bstr(rep.braid) << "\n";
        return rep.braid ? 0 : 1;
    }
    if (const auto* b = std::get_if<brace_tables>(&file)) {
        const auto v = brace_violation_of(*b);
        if (v)
            std::cout << "RESULT: skew_brace=false law=" << v->law << "\n";
        else
            std::cout << "RESULT: skew_brace=true\n";
        return v ? 1 : 0;
    }
    if (const auto* p = std::get_if<permutation>(&file)) {
        std::cout << "RESULT: permutation=true size=" << p->size() << "\n";
        return 0;
    }
    const solution s = std::get<solution>(file);
    const degeneracy d = nondegeneracy(s);
    const bool braid = braid_check(s);
    const bool bij = pairmap_bijective(s.as_pair_map());
    const bool inv = is_involutive(s);
    const bool birack_p = d.left && d.right && bij && braid;
    const bool biq = birack_p && is_biquandle(s);
    std::cout << "RESULT: braid=" << bstr(braid) << " left=" << bstr(d.left)
              << " right=" << bstr(d.right) << " bijective=" << bstr(bij)
              << " involutive=" << bstr(inv) << " biquandle=" << bstr(biq) << "\n";
    return braid ? 0 : 1;
}

int cmd_derive(const std::string& path, const std::string& out) {
    const solution s = load_solution(parse_file(path), path);
    if (!is_left_nondegenerate(s)) {
        std::cout << "RESULT: derive=false reason=not_left_nondegenerate\n";
        return 1;
    }
    const ops_triple ops = ops_from_solution(s);
    print_table("star", ops.star);
    print_table("dot", ops.dot);
    print_table("tri", ops.tri);
    if (!out.empty()) emit_file(parsed_file(ops), out);
    std::cout << "RESULT: derived_rack=" << bstr(is_rack(ops.tri))
              << " quandle=" << bstr(is_quandle(ops.tri)) << "\n";
    return is_rack(ops.tri) ? 0 : 1;
}

int cmd_invert(const std::string& path, const std::string& out) {
    const solution s = load_solution(parse_file(path), path);
    try {
        const solution inv = inverse_solution(s);
        print_table("G", inv.G);
        print_table("F", inv.F);
        if (!out.empty()) emit_file(parsed_file(inv), out);
        std::cout << "RESULT: inverse=true\n";
        return 0;
    } catch (const derived_not_rack&) {
        std::cout << "RESULT: inverse=false reason=not_bijective\n";
        return 1;
    } catch (const not_left_nondegenerate&) {
        std::cout << "RESULT: inverse=false reason=not_left_nondegenerate\n";
        return 1;
    }
}

int cmd_twist(const std::string& path, const std::string& map_path, const std::string& kind,
              const std::string& out) {
    const solution s = load_solution(parse_file(path), path);
    const parsed_file map_file = parse_file(map_path);
    const auto* k = std::get_if<permutation>(&map_file);
    if (!k) throw validation_error(map_path + ": expected a permutation file");
    try {
        twist_certificate cert = kind == "first"  ? twist_first(s, *k)
                                 : kind == "left" ? twist_left(s, *k)
                                                  : twist_right(s, *k);
        print_table("G", cert.twisted.G);
        print_table("F", cert.twisted.F);
        if (!out.empty()) emit_file(parsed_file(cert.twisted), out);
        std::cout << "RESULT: twist=true kind=" << kind << "\n";
        return 0;
    } catch (const not_automorphism&) {
        std::cout << "RESULT: twist=false reason=not_automorphism\n";
        return 1;
    } catch (const not_linear_automorphism&) {
        std::cout << "RESULT: twist=false reason=not_linear_automorphism\n";
        return 1;
    }
}

int cmd_untwist(const std::string& path, const std::string& out) {
    const solution s = load_solution(parse_file(path), path);
    try {
        const untwist_result u = untwist_to_biquandle(s);
        print_table("G", u.biquandle.G);
        print_table("F", u.biquandle.F);
        print_permutation("phi", u.phi);
        if (!out.empty()) emit_file(parsed_file(u.biquandle), out);
        std::cout << "RESULT: untwist=true biquandle=true phi=" << perm_str(u.phi) << "\n";
        return 0;
    } catch (const not_a_birack&) {
        std::cout << "RESULT: untwist=false reason=not_a_birack\n";
        return 1;
    }
}

int cmd_brace(const std::string& path) {
    const parsed_file file = parse_file(path);
    const auto* raw = std::get_if<brace_tables>(&file);
    if (!raw) throw validation_error(path + ": expected a brace file");
    if (const auto v = brace_violation_of(*raw)) {
        std::cout << "RESULT: skew_brace=false law=" << v->law
                  << (v->axiom.empty() ? "" : " axiom=" + v->axiom) << " at=" << triple_str(v->where)
                  << "\n";
        return 1;
    }
    const skew_brace B = make_skew_brace(*raw);
    const solution r = brace_solution(B);
    print_table("G", r.G);
    print_table("F", r.F);
    const op_table derived = brace_derived_rack(B);
    print_table("derived", derived);
    const bool conj_ok = derived == derived_rack(r);
    const bool dot_ok = brace_dot(B) == ops_from_solution(r).dot;
    std::cout << "RESULT: skew_brace=true braid=" << bstr(braid_check(r))
              << " involutive=" << bstr(is_involutive(r)) << " derived_conjugation=" << bstr(conj_ok)
              << " dot_match=" << bstr(dot_ok) << "\n";
    return 0;
}

int cmd_envelope(const std::string& path, bool abel, const std::string& out) {
    const solution s = load_solution(parse_file(path), path);
    if (!is_left_nondegenerate(s)) {
        std::cout << "RESULT: envelope=false reason=not_left_nondegenerate\n";
        return 1;
    }
    const presentation p = enveloping_presentation(s);
    std::cout << presentation_text(p);
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) throw error("cannot write " + out);
        f << presentation_text(p);
    }
    std::ostringstream result;
    result << "RESULT: generators=" << p.generators << " relations=" << p.relations.size();
    if (abel) {
        const abelian_invariants inv = abelianization(p);
        result << " rank=" << inv.rank << " torsion=" << torsion_str(inv.torsion);
        if (is_birack(s)) {
            const abelian_invariants qinv = abelianization(quotient_presentation(s));
            result << " quotient_rank=" << qinv.rank
                   << " quotient_torsion=" << torsion_str(qinv.torsion)
                   << " proposition=" << bstr(envelope_proposition_check(s));
        }
    }
    std::cout << result.str() << "\n";
    return 0;
}

int cmd_color(const std::string& path, int strands, const std::string& word_text, bool list) {
    const solution s = load_solution(parse_file(path), path);
    std::vector<int> letters;
    std::istringstream in(word_text);
    for (int v; in >> v;) letters.push_back(v);
    const braid_word w(strands, letters);
    try {
        const coloring_report rep = closure_colorings(s, w, list);
        if (list && rep.fixed_colorings) {
            for (const auto& tuple : *rep.fixed_colorings) {
                std::cout << "coloring:";
                for (int c : tuple) std::cout << " " << c;
                std::cout << "\n";
            }
        }
        std::cout << "RESULT: colorings=" << rep.count << " writhe=" << rep.writhe << "\n";
        return 0;
    } catch (const not_a_birack&) {
        std::cout << "RESULT: color=false reason=not_a_birack\n";
        return 1;
    }
}

search_kind parse_kind(const std::string& kind) {
    if (kind == "shelf") return search_kind::shelf;
    if (kind == "rack") return search_kind::rack;
    if (kind == "quandle") return search_kind::quandle;
    if (kind == "solution") return search_kind::solution;
    if (kind == "birack") return search_kind::birack;
    if (kind == "biquandle") return search_kind::biquandle;
    if (kind == "involutive") return search_kind::involutive;
    throw validation_error("unknown kind \"" + kind + "\"");
}

int cmd_enumerate(int n, const std::string& kind_name, bool up_to_iso,
                  std::optional<long long> limit) {
    const search_kind kind = parse_kind(kind_name);
    search_spec spec{n, kind, up_to_iso, limit};
    std::size_t count = 0;
    if (kind == search_kind::shelf || kind == search_kind::rack || kind == search_kind::quandle)
        count = enumerate_racks(spec).size();
    else
        count = enumerate_solutions(spec).size();
    std::cout << "RESULT: count=" << count << "\n";
    return 0;
}

int cmd_sweep(int n) {
    const sweep_report rep = sweep_theorems(n);
    std::cout << "left_nondegenerate: " << rep.left_nondegenerate << "\n"
              << "bijective: " << rep.bijective << "\n"
              << "biracks: " << rep.biracks << "\n"
              << "biquandles: " << rep.biquandles << "\n"
              << "involutive: " << rep.involutive << "\n";
    for (const auto& v : rep.violations) std::cout << "violation: " << v << "\n";
    std::cout << "RESULT: solutions=" << rep.left_nondegenerate << " biracks=" << rep.biracks
              << " violations=" << rep.violations.size() << "\n";
    return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite solutions of the braid equation: verification, twisting and coloring"};
    app.require_subcommand(1);

    std::string path, out, map_path, kind_name = "first", word_text;
    int strands = 2, n = 2;
    bool abel = false, list = false, up_to_iso = false;
    long long limit = -1;

    auto* verify = app.add_subcommand("verify", "classify a table file");
    verify->add_option("file", path)->required();

    auto* derive = app.add_subcommand("derive", "derived rack and ops triple of a solution");
    derive->add_option("file", path)->required();
    derive->add_option("--out", out, "write the ops triple to a file");

    auto* invert = app.add_subcommand("invert", "inverse solution by the closed formula");
    invert->add_option("file", path)->required();
    invert->add_option("--out", out);

    auto* twist = app.add_subcommand("twist", "twist a solution by an automorphism");
    twist->add_option("file", path)->required();
    twist->add_option("--map", map_path, "permutation file")->required();
    twist->add_option("--kind", kind_name)->check(CLI::IsMember({"first", "left", "right"}));
    twist->add_option("--out", out);

    auto* untwist = app.add_subcommand("untwist", "biquandle and phi certificate of a birack");
    untwist->add_option("file", path)->required();
    untwist->add_option("--out", out);

    auto* brace = app.add_subcommand("brace", "check a skew brace and derive its solution");
    brace->add_option("file", path)->required();

    auto* envelope = app.add_subcommand("envelope", "enveloping group presentation");
    envelope->add_option("file", path)->required();
    envelope->add_flag("--abelianization", abel, "also compute abelian invariants");
    envelope->add_option("--out", out, "write the presentation to a file");

    auto* color = app.add_subcommand("color", "count colorings of a braid closure");
    color->add_option("file", path)->required();
    color->add_option("--strands", strands)->required();
    color->add_option("--word", word_text, "space-separated signed letters")->required();
    color->add_flag("--list", list, "list the fixed colorings");

    auto* enumerate = app.add_subcommand("enumerate", "exhaustive enumeration at small n");
    enumerate->add_option("--n", n)->required();
    enumerate->add_option("--kind", kind_name)->required();
    enumerate->add_flag("--up-to-iso", up_to_iso);
    enumerate->add_option("--limit", limit);

    auto* sweep = app.add_subcommand("sweep", "assert every theorem over the enumerated set");
    sweep->add_option("--n", n)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(verify)) return cmd_verify(path);
        if (app.got_subcommand(derive)) return cmd_derive(path, out);
        if (app.got_subcommand(invert)) return cmd_invert(path, out);
        if (app.got_subcommand(twist)) return cmd_twist(path, map_path, kind_name, out);
        if (app.got_subcommand(untwist)) return cmd_untwist(path, out);
        if (app.got_subcommand(brace)) return cmd_brace(path);
        if (app.got_subcommand(envelope)) return cmd_envelope(path, abel, out);
        if (app.got_subcommand(color)) return cmd_color(path, strands, word_text, list);
        if (app.got_subcommand(enumerate))
            return cmd_enumerate(n, kind_name, up_to_iso,
                                 limit >= 0 ? std::optional<long long>(limit) : std::nullopt);
        if (app.got_subcommand(sweep)) return cmd_sweep(n);
    } catch (const birack::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
