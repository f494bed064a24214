// command-line front end: identity verification, eigenbasis construction,
// orthogonality reports, dimension tables, and canonical forms

#include "osps3/json_io.hpp"
#include "osps3/op_parse.hpp"
#include "osps3/spectral.hpp"
#include "osps3/verifier.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>

using namespace osps3;

namespace {

std::array<Rational, 4> parse_mu_list(const std::string& text) {
    std::array<Rational, 4> mu;
    std::stringstream ss(text);
    std::string part;
    size_t i = 0;
    while (std::getline(ss, part, ',')) {
        if (i >= 4) throw std::invalid_argument("expected exactly four parameter values");
        mu.at(i++) = parse_rational(part);
    }
    if (i != 4) throw std::invalid_argument("expected exactly four parameter values");
    return mu;
}

void write_or_print(const nlohmann::json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open " + out_path);
    f << j.dump(2) << "\n";
}

std::string section_of(const std::string& id) { return id.substr(0, id.find('.')); }

int cmd_verify(int sphere_cap, const std::vector<std::string>& only, const std::string& subset,
               const std::string& mutate, const std::string& out_path, bool as_json) {
    VerifierConfig cfg;
    cfg.sphere_cap = sphere_cap;
    for (const auto& s : only) {
        const auto& known = verifier_sections();
        if (std::find(known.begin(), known.end(), s) == known.end())
            throw std::invalid_argument("unknown section '" + s + "'");
        cfg.sections.insert(s);
    }
    if (!subset.empty()) cfg.only_subset = Subset::parse(subset);
    if (!mutate.empty()) cfg.mutation = parse_mutation(mutate);

    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep = run_full_suite(cfg);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    nlohmann::json j = report_to_json(rep, cfg);
    if (!out_path.empty()) write_or_print(j, out_path);
    if (as_json && out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        if (cfg.mutation != Mutation::none) std::cout << "mutation: " << mutate << "\n";
        for (const auto& c : rep.checks)
            if (!c.pass) {
                std::cout << "FAIL " << c.id << "   " << c.relation << "\n";
                if (!c.witness.empty()) std::cout << "     " << c.witness << "\n";
            }
        std::map<std::string, std::pair<int, int>> tally;
        for (const auto& c : rep.checks) {
            auto& t = tally[section_of(c.id)];
            t.second += 1;
            t.first += c.pass ? 1 : 0;
        }
        for (const auto& [sec, t] : tally)
            std::cout << sec << ": " << t.first << "/" << t.second << "\n";
        std::cout << "total: " << rep.passed() << "/" << rep.checks.size() << " in " << std::fixed
                  << std::setprecision(2) << secs << " s\n"
                  << (rep.all_pass() ? "RESULT: PASS" : "RESULT: FAIL") << "\n";
    }
    return rep.all_pass() ? 0 : 1;
}

int cmd_basis(int m, const std::string& mu_text, const std::string& out_path, bool as_json) {
    Spectral sp(parse_mu_list(mu_text));
    auto basis = sp.kernel_basis(m);

    bool ok = static_cast<int>(basis.size()) == (m + 1) * (m + 2) / 2;
    for (const auto& b : basis)
        ok = ok && sp.in_kernel(b.psi) && sp.scasimir_eigen_ok(b.psi, m) &&
             sp.h_eigen_ok(b.psi, m) && sp.closed_form_element(b.j) == b.psi;

    if (as_json || !out_path.empty()) {
        nlohmann::json j;
        j["m"] = m;
        j["mu"] = {to_fraction_string(sp.mu()[0]), to_fraction_string(sp.mu()[1]),
                   to_fraction_string(sp.mu()[2]), to_fraction_string(sp.mu()[3])};
        j["count"] = basis.size();
        j["verified"] = ok;
        nlohmann::json elems = nlohmann::json::array();
        for (const auto& b : basis)
            elems.push_back({{"j", b.j},
                             {"poly", to_json(b.psi)},
                             {"s_eig", to_fraction_string(sp.eigenvalue_scasimir(m))},
                             {"h_eig", to_fraction_string(sp.eigenvalue_h(m))}});
        j["elements"] = std::move(elems);
        write_or_print(j, out_path);
    } else {
        std::cout << "degree " << m << ", " << basis.size() << " elements\n"
                  << "sCasimir eigenvalue: " << to_string(sp.eigenvalue_scasimir(m))
                  << ", Hamiltonian eigenvalue: " << to_string(sp.eigenvalue_h(m)) << "\n";
        for (const auto& b : basis)
            std::cout << "j=(" << b.j[0] << "," << b.j[1] << "," << b.j[2] << ")  "
                      << b.psi.str() << "\n";
        std::cout << (ok ? "verified: kernel membership, eigenvalues, closed form"
                         : "VERIFICATION FAILED")
                  << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_gram(int m_max, const std::string& mu_text, bool normcheck, double tol,
             const std::string& out_path, bool as_json) {
    Spectral sp(parse_mu_list(mu_text));
    auto g = sp.gram(m_max);

    bool orth = true;
    bool posdiag = true;
    for (size_t i = 0; i < g.size(); ++i) {
        posdiag = posdiag && g[i][i] > 0;
        for (size_t k = 0; k < g.size(); ++k)
            if (i != k && g[i][k] != 0) orth = false;
    }

    double max_err = 0;
    if (normcheck)
        for (int m = 0; m <= m_max; ++m)
            for (const auto& b : sp.kernel_basis(m))
                max_err = std::max(max_err, sp.normalization_rel_err(b.j));
    bool norm_ok = !normcheck || max_err < tol;

    if (as_json || !out_path.empty()) {
        nlohmann::json j;
        j["m_max"] = m_max;
        j["size"] = g.size();
        j["orthogonal"] = orth;
        j["diagonal_positive"] = posdiag;
        nlohmann::json diag = nlohmann::json::array();
        for (size_t i = 0; i < g.size(); ++i) diag.push_back(to_fraction_string(g[i][i]));
        j["diagonal"] = std::move(diag);
        nlohmann::json mat = nlohmann::json::array();
        for (const auto& row : g) {
            nlohmann::json r = nlohmann::json::array();
            for (const auto& v : row) r.push_back(to_fraction_string(v));
            mat.push_back(std::move(r));
        }
        j["matrix"] = std::move(mat);
        if (normcheck) {
            j["normalization"] = {{"max_rel_err", max_err}, {"tol", tol}, {"ok", norm_ok}};
        }
        write_or_print(j, out_path);
    } else {
        std::cout << g.size() << " basis elements through degree " << m_max << "\n"
                  << "off-diagonal entries all zero: " << (orth ? "yes" : "NO") << "\n"
                  << "diagonal entries all positive: " << (posdiag ? "yes" : "NO") << "\n";
        if (normcheck)
            std::cout << "closed-form norm max relative error: " << std::scientific
                      << std::setprecision(3) << max_err << (norm_ok ? " (ok)" : " (TOO LARGE)")
                      << "\n";
    }
    return orth && posdiag && norm_ok ? 0 : 1;
}

int cmd_dims(int n, int m_max, bool as_json) {
    if (as_json) {
        nlohmann::json rows = nlohmann::json::array();
        for (int m = 0; m <= m_max; ++m)
            rows.push_back({{"m", m}, {"slice", dim_poly(n, m)}, {"kernel", dim_kernel(n, m)}});
        std::cout << rows.dump(2) << "\n";
    } else {
        std::cout << "  m   slice  kernel   (" << n << " variables)\n";
        for (int m = 0; m <= m_max; ++m)
            std::cout << std::setw(3) << m << std::setw(8) << dim_poly(n, m) << std::setw(8)
                      << dim_kernel(n, m) << "\n";
    }
    return 0;
}

int cmd_nf(const std::string& expr_text, const std::string& mu_text, bool as_json) {
    OpPtr op = parse_operator(expr_text);
    SymNF nf = normal_form(op);
    if (mu_text.empty()) {
        if (as_json) {
            nlohmann::json terms = nlohmann::json::array();
            for (const auto& [k, c] : nf.terms())
                for (const auto& [me, q] : c.terms())
                    terms.push_back({{"s", k.s},
                                     {"d", k.d},
                                     {"r", k.r},
                                     {"mu", me},
                                     {"c", to_fraction_string(q)}});
            std::cout << terms.dump(2) << "\n";
        } else {
            std::cout << nf.str() << "\n";
        }
    } else {
        NumNF num = evaluate_mu(nf, parse_mu_list(mu_text));
        if (as_json) {
            nlohmann::json terms = nlohmann::json::array();
            for (const auto& [k, c] : num.terms())
                terms.push_back(
                    {{"s", k.s}, {"d", k.d}, {"r", k.r}, {"c", to_fraction_string(c)}});
            std::cout << terms.dump(2) << "\n";
        } else {
            std::cout << num.str() << "\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact operator algebra on the three-sphere: verification and eigenbasis tools"};
    app.require_subcommand(1);

    auto* v = app.add_subcommand("verify", "machine-check the operator identities");
    int sphere_cap = 6;
    std::vector<std::string> only;
    std::string subset, mutate, v_out;
    bool v_json = false;
    v->add_option("--sphere-cap", sphere_cap, "degree cap for quotient-ring checks")
        ->envname("OSPS3_SPHERE_CAP")
        ->check(CLI::Range(1, 12));
    v->add_option("--only", only, "restrict to a section (repeatable)");
    v->add_option("--A", subset, "restrict per-subset families to one subset, e.g. 134");
    v->add_option("--mutate", mutate, "run with a deliberately altered generator");
    v->add_option("--out", v_out, "write the JSON report to a file");
    v->add_flag("--json", v_json, "print the JSON report to stdout");

    auto* b = app.add_subcommand("basis", "construct and verify the polynomial eigenbasis");
    int b_m = 3;
    std::string b_mu = "1/2,1/2,1/2,1/2", b_out;
    bool b_json = false;
    b->add_option("--m", b_m, "homogeneity degree")->check(CLI::Range(0, 24));
    b->add_option("--mu", b_mu, "four rational parameters, comma separated");
    b->add_option("--out", b_out, "write JSON to a file");
    b->add_flag("--json", b_json, "print JSON to stdout");

    auto* g = app.add_subcommand("gram", "orthogonality and normalization report");
    int g_mmax = 3;
    double g_tol = 1e-9;
    std::string g_mu = "1/2,1/2,1/2,1/2", g_out;
    bool g_norm = false, g_json = false;
    g->add_option("--m-max", g_mmax, "include all degrees up to this")->check(CLI::Range(0, 12));
    g->add_option("--mu", g_mu, "four rational parameters, comma separated");
    g->add_flag("--normcheck", g_norm, "compare diagonal against the closed-form norms");
    g->add_option("--tol", g_tol, "relative tolerance for --normcheck");
    g->add_option("--out", g_out, "write JSON to a file");
    g->add_flag("--json", g_json, "print JSON to stdout");

    auto* d = app.add_subcommand("dims", "dimension table for the kernel slices");
    int d_n = 4, d_mmax = 8;
    bool d_json = false;
    d->add_option("--n", d_n, "number of coordinates")->check(CLI::Range(1, 4));
    d->add_option("--m-max", d_mmax, "largest degree")->check(CLI::Range(0, 64));
    d->add_flag("--json", d_json, "print JSON instead of the table");

    auto* n = app.add_subcommand("nf", "canonical form of an operator expression");
    std::string n_expr, n_mu;
    bool n_json = false;
    n->add_option("expr", n_expr, "operator expression, e.g. 'com(L(12),L(23))'")->required();
    n->add_option("--mu", n_mu, "evaluate the coefficients at fixed rational parameters");
    n->add_flag("--json", n_json, "print the term list as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(v)) return cmd_verify(sphere_cap, only, subset, mutate, v_out, v_json);
        if (app.got_subcommand(b)) return cmd_basis(b_m, b_mu, b_out, b_json);
        if (app.got_subcommand(g)) return cmd_gram(g_mmax, g_mu, g_norm, g_tol, g_out, g_json);
        if (app.got_subcommand(d)) return cmd_dims(d_n, d_mmax, d_json);
        if (app.got_subcommand(n)) return cmd_nf(n_expr, n_mu, n_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
