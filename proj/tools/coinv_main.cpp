// Command-line front end: exact computations and cross-check batteries for
// the graded quotients attached to r-colored permutation groups.
//
// Exit codes: 0 success, 1 check failure, 2 usage error, 3 budget-skips
// present with no failures.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

#include "coinv/colored.hpp"
#include "coinv/demazure.hpp"
#include "coinv/descent.hpp"
#include "coinv/frobenius.hpp"
#include "coinv/groebner.hpp"
#include "coinv/qpoly.hpp"
#include "coinv/skip.hpp"
#include "coinv/verify.hpp"

using json = nlohmann::json;
using namespace coinv;

namespace {

json qpoly_to_json(const QPoly& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) {
        if (c > std::numeric_limits<std::int64_t>::max() || c < std::numeric_limits<std::int64_t>::min())
            throw std::overflow_error("coefficient exceeds int64 in JSON output");
        coeffs.push_back(static_cast<std::int64_t>(c));
    }
    return json{{"coeffs", coeffs}};
}

json rat_to_json(const Rat& c) {
    Int num = numerator(c), den = denominator(c);
    auto narrow = [](const Int& v) {
        if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
            throw std::overflow_error("coefficient exceeds int64 in JSON output");
        return static_cast<std::int64_t>(v);
    };
    return json::array({narrow(num), narrow(den)});
}

json poly_to_json(const Poly& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) terms.push_back(json{{"coeff", rat_to_json(c)}, {"exps", m.e}});
    return terms;
}

json schur_to_json(const SchurSeries& s) {
    json out = json::array();
    for (const auto& [shape, p] : s.terms())
        out.push_back(json{{"lambda", shape}, {"coeffs", qpoly_to_json(p)["coeffs"]}});
    return out;
}

std::string schur_pretty(const SchurSeries& s) {
    std::ostringstream os;
    for (const auto& [shape, p] : s.terms()) {
        os << "s[";
        for (std::size_t i = 0; i < shape.size(); ++i) {
            os << (i ? "," : "") << "(";
            for (std::size_t j = 0; j < shape[i].size(); ++j) os << (j ? "," : "") << shape[i][j];
            os << ")";
        }
        os << "] : " << p.str() << "\n";
    }
    return os.str();
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string norm = text;
    for (auto& ch : norm)
        if (ch == ',') ch = ' ';
    std::istringstream is(norm);
    int v;
    while (is >> v) out.push_back(v);
    return out;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics of colored coinvariant quotients"};
    app.require_subcommand(1);

    int n = 3, k = 2, r = 2, s = 1;
    std::string ring_str = "S", face_str, monomial_str, gamma_str, kind = "faces", content_str;
    std::string format = "json", suite = "all";
    bool extended = false, trace = false, oracle = false, no_sort = false;
    std::uint64_t seed = 20250810;
    std::size_t max_pairs = 500000, max_terms = 5000000;
    int max_n = 4;
    std::vector<int> r_list = {2};

    auto add_nkr = [&](CLI::App* cmd, bool with_ring) {
        cmd->add_option("--n", n, "ground set size")->required();
        cmd->add_option("--k", k, "block count / dimension")->required();
        cmd->add_option("--r", r, "color modulus")->required();
        if (with_ring) cmd->add_option("--ring", ring_str, "R or S")->required();
    };

    auto* hilbert = app.add_subcommand("hilbert", "closed-form Hilbert series");
    add_nkr(hilbert, true);

    auto* dims = app.add_subcommand("dims", "dimensions of both quotients");
    add_nkr(dims, false);

    auto* enumerate = app.add_subcommand("enumerate", "stream combinatorial objects");
    enumerate->add_option("--kind", kind, "perms|osp|faces|omp|osp-nks")->required();
    enumerate->add_option("--n", n, "ground set size");
    enumerate->add_option("--k", k, "block count");
    enumerate->add_option("--r", r, "color modulus")->required();
    enumerate->add_option("--s", s, "pinned-block cutoff for osp-nks");
    enumerate->add_option("--content", content_str, "JSON content matrix for omp");
    enumerate->add_flag("--no-sort", no_sort, "stream in generation order");

    auto* psi_cmd = app.add_subcommand("psi", "face -> monomial bijection");
    add_nkr(psi_cmd, false);
    psi_cmd->add_option("--face", face_str, "face in text grammar")->required();

    auto* phi_cmd = app.add_subcommand("phi", "monomial -> face bijection");
    add_nkr(phi_cmd, false);
    phi_cmd->add_option("--monomial", monomial_str, "exponent list")->required();

    auto* basis_cmd = app.add_subcommand("descent-basis", "descent basis monomials");
    add_nkr(basis_cmd, false);
    basis_cmd->add_flag("--extended", extended, "extended basis with strata");

    auto* straighten = app.add_subcommand("straighten", "expand a monomial coset in the descent basis");
    add_nkr(straighten, true);
    straighten->add_option("--monomial", monomial_str, "exponent list")->required();
    straighten->add_flag("--trace", trace, "emit straightening steps");

    auto* demazure_cmd = app.add_subcommand("demazure", "key polynomial of a composition");
    demazure_cmd->add_option("--gamma", gamma_str, "composition parts")->required();

    auto* gb_cmd = app.add_subcommand("groebner-check", "verify the claimed Groebner basis");
    add_nkr(gb_cmd, true);
    gb_cmd->add_flag("--oracle", oracle, "also run Buchberger and compare");
    gb_cmd->add_option("--max-pairs", max_pairs, "S-pair budget");
    gb_cmd->add_option("--max-terms", max_terms, "total term budget");

    auto* frob = app.add_subcommand("frobenius", "graded character series");
    add_nkr(frob, true);
    frob->add_option("--format", format, "json|pretty");

    auto* verify = app.add_subcommand("verify", "run the cross-check battery");
    verify->add_option("--suite", suite, "check-name prefix filter (default all)");
    verify->add_option("--max-n", max_n, "size ceiling");
    verify->add_option("--r", r_list, "color moduli to test");
    verify->add_option("--seed", seed, "seed for randomized property checks");
    verify->add_option("--max-pairs", max_pairs, "S-pair budget for the oracle");
    verify->add_option("--max-terms", max_terms, "term budget for the oracle");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (*hilbert) {
            Ring ring = parse_ring(ring_str);
            json out{{"schema", 1}, {"ring", ring_name(ring)}, {"n", n}, {"k", k}, {"r", r}};
            out["hilbert"] = qpoly_to_json(hilbert_series(ring, n, k, r));
            print_json(out);
        } else if (*dims) {
            json out{{"schema", 1}, {"n", n}, {"k", k}, {"r", r}};
            out["dim_R"] = dimension(Ring::R, n, k, r).str();
            out["dim_S"] = dimension(Ring::S, n, k, r).str();
            print_json(out);
        } else if (*enumerate) {
            std::vector<std::string> lines;
            if (kind == "perms") {
                for_each_colored_permutation(n, r, [&](const ColoredWord& w) { lines.push_back(to_string(w)); });
            } else if (kind == "osp") {
                for_each_osp(n, k, r, [&](const OrderedSetPartition& o) { lines.push_back(to_string(o)); });
            } else if (kind == "faces") {
                for_each_face(n, k, r, [&](const GFace& f) { lines.push_back(to_string(f)); });
            } else if (kind == "omp") {
                if (content_str.empty()) throw std::invalid_argument("omp requires --content");
                RContent beta = json::parse(content_str).get<RContent>();
                for_each_omp_with_content(beta, k, r, [&](const OrderedMultisetPartition& m) {
                    OrderedSetPartition view;
                    view.r = m.r;
                    view.blocks = m.blocks;
                    lines.push_back(to_string(view));
                });
            } else if (kind == "osp-nks") {
                for_each_osp_nks(n, k, s, r, [&](const OrderedSetPartition& o) { lines.push_back(to_string(o)); });
            } else {
                throw std::invalid_argument("unknown kind: " + kind);
            }
            if (!no_sort) std::sort(lines.begin(), lines.end());
            json out{{"schema", 1}, {"kind", kind}, {"count", lines.size()}, {"items", lines}};
            print_json(out);
        } else if (*psi_cmd) {
            GFace face = parse_face(face_str, r);
            if (face.n != n || face.k != k) throw std::invalid_argument("face does not match --n/--k");
            Monomial m = psi(face);
            json out{{"schema", 1}, {"n", n}, {"k", k}, {"r", r}};
            out["face"] = to_string(face);
            out["exponents"] = m.e;
            out["degree"] = m.degree();
            print_json(out);
        } else if (*phi_cmd) {
            Monomial m{parse_int_list(monomial_str)};
            GFace face = phi(m, n, k, r);
            json out{{"schema", 1}, {"n", n}, {"k", k}, {"r", r}};
            out["face"] = to_string(face);
            out["exponents"] = m.e;
            out["degree"] = m.degree();
            print_json(out);
        } else if (*basis_cmd) {
            json items = json::array();
            for (const auto& [m, z] : descent_basis(n, k, r, extended))
                items.push_back(json{{"exps", m.e}, {"z", z}});
            json out{{"schema", 1}, {"n", n}, {"k", k}, {"r", r}, {"extended", extended}};
            out["count"] = items.size();
            out["items"] = items;
            print_json(out);
        } else if (*straighten) {
            Ring ring = parse_ring(ring_str);
            Monomial m{parse_int_list(monomial_str)};
            std::vector<StraighteningStep> steps;
            auto expansion = expand_in_basis(m, n, k, r, ring, trace ? &steps : nullptr);
            json out{{"schema", 1}, {"ring", ring_name(ring)}, {"n", n}, {"k", k}, {"r", r}};
            out["monomial"] = m.e;
            json terms = json::array();
            for (const auto& [mm, cc] : expansion)
                terms.push_back(json{{"exps", mm.e}, {"coeff", rat_to_json(cc)}});
            out["expansion"] = terms;
            if (trace) {
                json tr = json::array();
                for (const auto& st : steps)
                    tr.push_back(json{{"monomial", st.m.e},
                                      {"coeff", rat_to_json(st.coeff)},
                                      {"action", st.action}});
                out["trace"] = tr;
            }
            print_json(out);
        } else if (*demazure_cmd) {
            std::vector<int> gamma = parse_int_list(gamma_str);
            Poly p = demazure(gamma);
            json out{{"schema", 1}, {"gamma", gamma}};
            out["text"] = p.str();
            out["terms"] = poly_to_json(p);
            print_json(out);
        } else if (*gb_cmd) {
            Ring ring = parse_ring(ring_str);
            auto claimed = claimed_groebner_basis(ring, n, k, r);
            bool reduced_ok = is_reduced_basis(claimed);
            auto std_mons = standard_monomials(claimed);
            bool claimed_ok = Int(std_mons.size()) == dimension(ring, n, k, r);
            json out{{"schema", 1}, {"ring", ring_name(ring)}, {"n", n}, {"k", k}, {"r", r}};
            out["standard_monomial_count"] = std_mons.size();
            out["claimed_basis_ok"] = claimed_ok;
            out["reduced_ok"] = reduced_ok;
            out["oracle_match"] = nullptr;
            int exit_code = claimed_ok ? 0 : 1;
            if (oracle) {
                GroebnerBudget budget{max_pairs, max_terms};
                try {
                    auto gb = buchberger(ideal_generators(ring, n, k, r), budget);
                    bool match;
                    if (k < n && k > 0) {
                        match = same_basis(claimed, gb);
                    } else {
                        match = true;
                        std::set<std::vector<int>> a, b;
                        for (const auto& m : standard_monomials(gb)) a.insert(m.e);
                        for (const auto& m : std_mons) b.insert(m.e);
                        if (a != b) match = false;
                        for (const auto& g : claimed)
                            if (!normal_form(g, gb).is_zero()) match = false;
                    }
                    out["oracle_match"] = match;
                    if (!match) exit_code = 1;
                } catch (const BudgetExceeded&) {
                    out["oracle_match"] = "skipped-budget";
                    if (exit_code == 0) exit_code = 3;
                }
            }
            print_json(out);
            return exit_code;
        } else if (*frob) {
            Ring ring = parse_ring(ring_str);
            SchurSeries series = grfrob(ring, n, k, r);
            if (format == "pretty") {
                std::cout << schur_pretty(series);
            } else {
                json out{{"schema", 1}, {"ring", ring_name(ring)}, {"n", n}, {"k", k}, {"r", r}};
                out["terms"] = schur_to_json(series);
                print_json(out);
            }
        } else if (*verify) {
            VerifyConfig vcfg;
            vcfg.max_n = max_n;
            vcfg.rs = r_list;
            vcfg.suite = suite;
            vcfg.seed = seed;
            vcfg.budget = GroebnerBudget{max_pairs, max_terms};
            auto results = run_verify(vcfg);
            json checks = json::array();
            int fails = 0, skips = 0;
            for (const auto& res : results) {
                json c{{"name", res.name}, {"params", res.params}, {"status", res.status}, {"ms", res.ms}};
                if (res.status == "fail") {
                    c["witness"] = res.witness;
                    ++fails;
                }
                if (res.status == "skipped-budget") ++skips;
                checks.push_back(c);
            }
            int passes = static_cast<int>(results.size()) - fails - skips;
            json out{{"schema", 1},
                     {"checks", checks},
                     {"summary", {{"pass", passes}, {"fail", fails}, {"skipped-budget", skips}}}};
            print_json(out);
            if (fails > 0) return 1;
            if (skips > 0) return 3;
        }
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
