// Command-line front end: counting and enumeration of good cyclic gradings,
// isomorphism testing, grading construction and verification, Galois descent
// and splitting checks. All results go to stdout as JSON; notes go to
// stderr. Exit codes: 0 success, 1 usage, 2 invalid input, 3 internal
// consistency failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "gradmat/json_io.hpp"

namespace {

using namespace gradmat;

FiniteAbelianGroup parse_group(const std::string& s) {
    if (s.empty()) throw invalid_argument("empty group descriptor");
    if (s[0] == 'C' || s[0] == 'c')
        return FiniteAbelianGroup::cyclic(std::stoll(s.substr(1)));
    std::vector<std::int64_t> factors;
    std::string tok;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == ',') {
            if (tok.empty()) throw invalid_argument("bad group descriptor: " + s);
            factors.push_back(std::stoll(tok));
            tok.clear();
        } else {
            tok.push_back(s[i]);
        }
    }
    return FiniteAbelianGroup(std::move(factors));
}

std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string tok;
    for (char c : s) {
        if (c == sep) {
            out.push_back(tok);
            tok.clear();
        } else if (c != ' ') {
            tok.push_back(c);
        }
    }
    out.push_back(tok);
    return out;
}

GroupElement parse_element(const FiniteAbelianGroup& g, const std::string& tok) {
    if (tok == "e") return g.identity();
    if (tok == "s") {
        GroupElement x = g.identity();
        x.coords[0] = 1;
        return g.reduce(x);
    }
    GroupElement x;
    for (const auto& c : split_on(tok, ',')) {
        if (c.empty()) throw invalid_argument("bad element: " + tok);
        x.coords.push_back(std::stoll(c));
    }
    return g.reduce(x);
}

/// Elements separated by ';' (or ',' for rank-1 groups); coordinates within
/// an element separated by ','; 'e' is the identity, 's' the first generator.
std::vector<GroupElement> parse_tuple(const FiniteAbelianGroup& g, const std::string& s) {
    std::vector<GroupElement> out;
    char sep = g.rank() == 1 ? ',' : ';';
    for (const auto& tok : split_on(s, sep)) {
        if (tok.empty()) throw invalid_argument("bad tuple: " + s);
        out.push_back(parse_element(g, tok));
    }
    return out;
}

json witness_summary(const SplittingWitness& w) {
    json degs = json::array();
    for (const auto& d : w.degrees) degs.push_back(d.to_string());
    return json{{"validated", w.validated},
                {"size", w.size},
                {"frame_degrees", std::move(degs)}};
}

GaloisExtension build_extension(const Field& field, const std::string& alpha,
                                const std::vector<std::int64_t>& frob,
                                const std::string& split) {
    int given = !alpha.empty() + !frob.empty() + !split.empty();
    if (given != 1)
        throw invalid_argument(
            "give exactly one of --quadratic-alpha, --frobenius, --split");
    if (!alpha.empty()) return make_quadratic(field, Scalar::parse(field, alpha));
    if (!frob.empty()) {
        if (frob.size() != 2) throw invalid_argument("--frobenius needs p and d");
        return frobenius_extension(frob[0], frob[1]);
    }
    return dual_group_extension(parse_group(split), field);
}

int run(int argc, char** argv) {
    CLI::App app{"good gradings of matrix algebras: counting, construction, descent"};
    app.require_subcommand(1);

    std::int64_t n = 0, m = 0;
    std::int64_t budget = kDefaultEnumerationBudget;
    bool oracle = false;
    std::string group_str, t1_str, t2_str, degrees_str, field_str = "Q";
    std::string grading_file, alpha_str, split_str;
    std::vector<std::int64_t> frob;

    auto* count = app.add_subcommand("count", "count good C_n-gradings of M_m(k)");
    count->add_option("--n", n)->required();
    count->add_option("--m", m)->required();
    count->add_flag("--oracle", oracle, "cross-check against orbit enumeration");
    count->add_option("--budget", budget, "enumeration budget");

    auto* enumerate = app.add_subcommand("enumerate", "orbit representatives");
    enumerate->add_option("--n", n)->required();
    enumerate->add_option("--m", m)->required();
    enumerate->add_option("--budget", budget);

    auto* iso = app.add_subcommand("iso", "good-grading isomorphism test");
    iso->add_option("--group", group_str)->required();
    iso->add_option("--t1", t1_str)->required();
    iso->add_option("--t2", t2_str)->required();

    auto* build = app.add_subcommand("build-good", "END(V) for a degree tuple");
    build->add_option("--group", group_str)->required();
    build->add_option("--degrees", degrees_str)->required();
    build->add_option("--field", field_str);

    auto* verify = app.add_subcommand("verify", "check the grading axioms");
    verify->add_option("--grading", grading_file, "JSON file")->required();

    auto* descend = app.add_subcommand("descend", "descended grading of a Galois extension");
    descend->add_option("--field", field_str);
    descend->add_option("--quadratic-alpha", alpha_str);
    descend->add_option("--frobenius", frob)->expected(2);
    descend->add_option("--split", split_str, "group of a split extension");

    auto* forms = app.add_subcommand("classify-forms", "forms of the good C_2-grading");
    forms->add_option("--field", field_str)->required();

    auto* split_check = app.add_subcommand("split-check", "splitting witness for a descent");
    split_check->add_option("--field", field_str);
    split_check->add_option("--quadratic-alpha", alpha_str);
    split_check->add_option("--frobenius", frob)->expected(2);
    split_check->add_option("--split", split_str);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1; // usage errors are exit 1
    }

    json out;
    if (*count) {
        BigInt formula = count_good_formula(n, m);
        out = json{{"n", n}, {"m", m}, {"count", to_int64(formula)}};
        if (oracle) {
            auto oc = count_good_orbits(n, m, budget);
            out["oracle"] = to_int64(oc.count);
            if (oc.count != formula) {
                std::cout << out.dump(2) << "\n";
                std::cerr << "formula/oracle mismatch\n";
                return 3;
            }
        }
    } else if (*enumerate) {
        auto oc = count_good_orbits(n, m, budget);
        out = orbit_count_to_json(n, m, oc, true);
    } else if (*iso) {
        auto g = parse_group(group_str);
        auto t1 = parse_tuple(g, t1_str);
        auto t2 = parse_tuple(g, t2_str);
        auto w = good_iso(t1, t2, g);
        if (w) {
            out = json{{"isomorphic", true},
                       {"perm", w->perm},
                       {"sigma", w->sigma.to_string()}};
        } else {
            out = json{{"isomorphic", false}, {"result", "not-isomorphic"}};
        }
    } else if (*build) {
        GradedVectorSpace v;
        v.group = parse_group(group_str);
        v.degrees = parse_tuple(v.group, degrees_str);
        out = grading_to_json(end_grading(v, Field::parse(field_str)));
    } else if (*verify) {
        std::ifstream in(grading_file);
        if (!in) throw invalid_argument("cannot open " + grading_file);
        json j = json::parse(in);
        auto rep = verify_grading(grading_from_json(j));
        const char* axiom = rep.axiom == GradingAxiom::DirectSum  ? "direct-sum"
                            : rep.axiom == GradingAxiom::Identity ? "identity"
                            : rep.axiom == GradingAxiom::Product  ? "product"
                                                                  : "none";
        out = json{{"ok", rep.ok}, {"axiom", axiom}, {"witness", rep.witness}};
    } else if (*descend) {
        Field field = Field::parse(field_str);
        auto e = build_extension(field, alpha_str, frob, split_str);
        auto chk = is_galois(e);
        if (!chk.ok) throw invalid_argument("extension is not Galois: " + chk.diagnostics);
        auto a = descended_grading(e);
        auto w = splitting_witness(a, e, descended_frame(e));
        out = json{{"is_galois", true},
                   {"grading", grading_to_json(a)},
                   {"splitting_witness", witness_summary(w)}};
    } else if (*forms) {
        Field field = Field::parse(field_str);
        json list = json::array();
        for (const auto& f : classify_forms(field)) {
            json entry{{"alpha", f.alpha.to_string()},
                       {"split", f.split},
                       {"invariant", f.invariant.to_string()},
                       {"grading", grading_to_json(f.grading)}};
            if (f.split) {
                auto sg = split_good_form(f.grading);
                if (!sg) throw internal_error("split form admits no good conjugate");
                json degs = json::array();
                for (const auto& d : sg->first) degs.push_back(d.to_string());
                entry["good_degrees"] = std::move(degs);
            }
            list.push_back(std::move(entry));
        }
        out = json{{"field", field.to_string()}, {"forms", std::move(list)}};
    } else if (*split_check) {
        Field field = Field::parse(field_str);
        auto e = build_extension(field, alpha_str, frob, split_str);
        auto a = descended_grading(e);
        auto w = splitting_witness(a, e, descended_frame(e));
        out = json{{"is_galois", true}, {"splitting_witness", witness_summary(w)}};
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const gradmat::internal_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 3;
    } catch (const gradmat::resource_limit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
