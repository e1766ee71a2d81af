#include "isf/verify.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace {

using namespace isf;

std::string partition_str(const Partition& l) {
    if (l.length() == 0) return "()";
    std::string s;
    for (int p : l.parts()) {
        if (!s.empty()) s += ",";
        s += std::to_string(p);
    }
    return s;
}

void print_symfunc(const SymFunc& f, const std::string& format) {
    if (format == "json") {
        std::cout << to_json(f).dump(2) << "\n";
        return;
    }
    std::cout << "degree " << f.degree() << ", basis " << basis_name(f.basis()) << "\n";
    for (const auto& [l, c] : f.terms())
        std::cout << "  " << partition_str(l) << "\t" << c.to_string() << "\n";
}

void print_monomial(const MonomialSym& f, const std::string& format) {
    if (format == "json") {
        std::cout << to_json(f).dump(2) << "\n";
        return;
    }
    std::cout << "degree " << f.degree() << ", basis m\n";
    for (const auto& [l, c] : f.terms())
        std::cout << "  " << partition_str(l) << "\t" << c.to_string() << "\n";
}

std::set<int> parse_set(const std::string& s) {
    std::set<int> out;
    if (s.empty()) return out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        out.insert(std::stoi(s.substr(pos, next - pos)));
        pos = next + 1;
    }
    return out;
}

Graph parse_graph(std::string spec, int n_override) {
    if (spec.rfind("edges:", 0) == 0) spec = spec.substr(6);
    std::vector<std::pair<int, int>> edges;
    int maxv = 0;
    std::size_t pos = 0;
    while (pos < spec.size()) {
        std::size_t next = spec.find(',', pos);
        if (next == std::string::npos) next = spec.size();
        std::string item = spec.substr(pos, next - pos);
        std::size_t dash = item.find('-');
        if (dash == std::string::npos)
            throw std::invalid_argument("edge must look like 1-2: " + item);
        int u = std::stoi(item.substr(0, dash));
        int v = std::stoi(item.substr(dash + 1));
        if (u == v || u < 1 || v < 1)
            throw std::invalid_argument("bad edge: " + item);
        edges.emplace_back(std::min(u, v), std::max(u, v));
        maxv = std::max({maxv, u, v});
        pos = next + 1;
    }
    int n = n_override > 0 ? n_override : maxv;
    if (maxv > n) throw std::invalid_argument("edge endpoint exceeds --n");
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

int report_and_exit(const std::vector<VerificationReport>& reports,
                    const std::string& format) {
    bool ok = true;
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(r.to_json());
        std::cout << arr.dump(2) << "\n";
    }
    for (const auto& r : reports) {
        if (format != "json") {
            std::cout << (r.passed() ? "PASS" : "FAIL") << " " << r.name << " (n<="
                      << r.max_n << ", " << r.cases << " cases, compared in "
                      << r.comparison << ")\n";
            if (!r.notes.is_null()) std::cout << "  notes: " << r.notes.dump() << "\n";
            if (!r.passed()) {
                std::cout << "  " << r.failure_count << " failures, first "
                          << r.failures.size() << ":\n";
                for (const auto& f : r.failures) std::cout << "  " << f.dump() << "\n";
            }
        }
        ok = ok && r.passed();
    }
    return ok ? 0 : 1;
}

int run(int argc, char** argv) {
    CLI::App app{"Increasing-spanning-forest symmetric functions of indifference "
                 "graphs: exact computation and exhaustive identity checks"};
    app.require_subcommand(1);

    std::string m_str, s_str, y_str = "rho", basis_str = "h", format = "table";
    std::string graph_str, target_str;
    int n = 0, k = -1, max_n = -1, jobs = 1;
    std::optional<std::uint64_t> seed;

    auto* compute = app.add_subcommand("compute", "evaluate one object exactly");
    compute->require_subcommand(1);
    auto add_common = [&](CLI::App* c, bool with_m) {
        c->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));
        if (with_m) c->add_option("--m", m_str, "Hessenberg function, e.g. 2,4,4,4");
    };

    auto* cx = compute->add_subcommand("X", "forest-weight generating function X_y");
    add_common(cx, true);
    cx->add_option("--y", y_str)->check(CLI::IsMember({"rho", "qe"}));
    cx->add_option("--decoration,--S", s_str, "vertical-strip positions");

    auto* ccsf = compute->add_subcommand("csf", "chromatic quasisymmetric function");
    add_common(ccsf, true);
    ccsf->add_option("--graph", graph_str, "edge list, e.g. edges:1-2,2-3");
    ccsf->add_option("--n", n, "vertex count for --graph");

    auto* cllt = compute->add_subcommand("llt", "unicellular/vertical-strip LLT");
    add_common(cllt, true);
    cllt->add_option("--graph", graph_str);
    cllt->add_option("--n", n);
    cllt->add_option("--decoration,--S", s_str);

    auto* crho = compute->add_subcommand("rho", "the rho_n expansion");
    add_common(crho, false);
    crho->add_option("--n", n)->required();
    crho->add_option("--basis", basis_str)->check(CLI::IsMember({"e", "h", "p"}));

    auto* cstir = compute->add_subcommand("stirling", "q-Stirling numbers s_q(n,k)");
    add_common(cstir, false);
    cstir->add_option("--n", n)->required();
    cstir->add_option("--k", k);

    auto* cor = compute->add_subcommand("orientation-sum",
                                        "orientation generating function in e");
    add_common(cor, true);

    auto* verify = app.add_subcommand("verify", "exhaustive identity checks");
    verify->require_subcommand(1);
    std::vector<CLI::App*> vsubs;
    for (const char* name : {"forest-csf", "forest-llt", "modular", "plethystic", "orientations",
                             "vertical", "remark", "identities", "stirling"}) {
        auto* v = verify->add_subcommand(name);
        if (std::string(name) == "forest-csf") v->alias("thm1");
        if (std::string(name) == "forest-llt") v->alias("thm2");
        v->add_option("--max-n", max_n);
        v->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
        v->add_option("--target", target_str)
            ->check(CLI::IsMember({"X_rho", "X_qe", "csf", "llt"}));
        v->add_option("--jobs", jobs, "worker count (output-independent)");
        v->add_option("--seed", seed, "fault-injection seed; forces a failure");
        vsubs.push_back(v);
    }

    CLI11_PARSE(app, argc, argv);

    auto need_m = [&]() {
        if (m_str.empty()) throw std::invalid_argument("--m is required");
        return HessenbergFunction::parse(m_str);
    };

    if (cx->parsed()) {
        HessenbergFunction m = need_m();
        YBasis y = y_str == "rho" ? YBasis::Rho : YBasis::QE;
        std::set<int> S = parse_set(s_str);
        print_symfunc(S.empty() ? X_of(m, y) : X_vertical(m, S, y), format);
        return 0;
    }
    if (ccsf->parsed()) {
        Graph g = graph_str.empty() ? graph_of(need_m()) : parse_graph(graph_str, n);
        if (!natural_peo_valid(g))
            throw std::invalid_argument("csf: graph must have the natural PEO");
        print_monomial(csf_oracle(g), format);
        return 0;
    }
    if (cllt->parsed()) {
        std::set<int> S = parse_set(s_str);
        if (!graph_str.empty()) {
            Graph g = parse_graph(graph_str, n);
            auto m = hessenberg_of(g);
            if (!m) throw std::invalid_argument("llt: graph is not an indifference graph");
            print_monomial(S.empty() ? llt_oracle(g) : llt_vertical_oracle(*m, S), format);
        } else {
            HessenbergFunction m = need_m();
            print_monomial(S.empty() ? llt_oracle(graph_of(m))
                                     : llt_vertical_oracle(m, S),
                           format);
        }
        return 0;
    }
    if (crho->parsed()) {
        if (n < 1) throw std::invalid_argument("--n must be positive");
        SymFunc rho = rho_to_h(basis_unit(Basis::Rho, Partition({n})));
        Basis b = basis_str == "e" ? Basis::E : basis_str == "p" ? Basis::P : Basis::H;
        print_symfunc(convert(rho, b), format);
        return 0;
    }
    if (cstir->parsed()) {
        if (n < 0) throw std::invalid_argument("--n must be nonnegative");
        json out = json::object();
        for (int kk = (k >= 0 ? k : 0); kk <= (k >= 0 ? k : n); ++kk) {
            QPoly s = q_stirling(n, kk);
            if (format == "json")
                out[std::to_string(kk)] = to_json(s);
            else
                std::cout << "s_q(" << n << "," << kk << ") = " << s.to_string() << "\n";
        }
        if (format == "json") std::cout << out.dump(2) << "\n";
        return 0;
    }
    if (cor->parsed()) {
        print_symfunc(orientation_sum(graph_of(need_m())), format);
        return 0;
    }

    // verify subcommands
    auto bound = [&](int dflt) { return max_n >= 0 ? max_n : dflt; };
    std::vector<VerificationReport> reports;
    const auto& vname = verify->get_subcommands().front()->get_name();
    if (vname == "forest-csf") {
        reports.push_back(verify_forest_csf(bound(6), seed));
    } else if (vname == "forest-llt") {
        reports.push_back(verify_forest_llt(bound(6), seed));
    } else if (vname == "modular") {
        if (target_str.empty()) {
            reports.push_back(verify_modular(bound(6), ModularTarget::XRho));
            reports.push_back(verify_modular(bound(6), ModularTarget::XQe));
            reports.push_back(verify_modular(bound(5), ModularTarget::Csf));
            reports.push_back(verify_modular(bound(5), ModularTarget::Llt));
        } else {
            ModularTarget t = modular_target_from_string(target_str);
            bool oracle = t == ModularTarget::Csf || t == ModularTarget::Llt;
            reports.push_back(verify_modular(bound(oracle ? 5 : 6), t));
        }
    } else if (vname == "plethystic") {
        reports.push_back(verify_plethystic(bound(6)));
    } else if (vname == "orientations") {
        reports.push_back(verify_orientations(bound(5), seed));
    } else if (vname == "vertical") {
        reports.push_back(verify_vertical(bound(5)));
    } else if (vname == "remark") {
        reports.push_back(verify_remark_coeffs(bound(6)));
    } else if (vname == "identities") {
        reports.push_back(verify_rho_expansions(bound(8)));
        reports.push_back(verify_identities(bound(7), std::min(bound(7), 6)));
        reports.push_back(verify_complete_graphs(bound(7), std::min(bound(7), 6)));
        reports.push_back(verify_weights_product(bound(7)));
        reports.push_back(verify_bijection(bound(6)));
        reports.push_back(verify_peo_chromatic(std::min(bound(5), 5)));
    } else if (vname == "stirling") {
        reports.push_back(verify_stirling(bound(8)));
    }
    if (format == "table") format = "text";
    return report_and_exit(reports, format);
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
