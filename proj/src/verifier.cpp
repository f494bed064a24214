#include "osps3/verifier.hpp"
#include "osps3/util.hpp"

#include <chrono>
#include <functional>

namespace osps3 {

namespace {

using Clock = std::chrono::steady_clock;

std::string truncate(std::string s, size_t cap = 240) {
    if (s.size() > cap) {
        s.resize(cap);
        s += " ...";
    }
    return s;
}

std::string mono_str(const Idx4& e) {
    std::string s;
    for (int i = 0; i < 4; ++i) {
        int k = e[static_cast<size_t>(i)];
        if (k == 0) continue;
        if (!s.empty()) s += "*";
        s += "s" + std::to_string(i + 1);
        if (k != 1) s += "^" + std::to_string(k);
    }
    return s.empty() ? "1" : s;
}

std::string subset_label(Subset A) { return A.empty() ? "0" : A.str(); }

struct Job {
    std::string id, relation, method;
    std::function<std::optional<std::string>()> run;   // nullopt = pass
};

IdentityCheck execute(const Job& j) {
    IdentityCheck c;
    c.id = j.id;
    c.relation = j.relation;
    c.method = j.method;
    auto t0 = Clock::now();
    auto w = j.run();
    c.elapsed_ms =
        std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(Clock::now() - t0)
            .count();
    c.pass = !w.has_value();
    if (w) c.witness = *w;
    return c;
}

void run_jobs(VerificationReport& rep, const std::vector<Job>& jobs, bool parallel) {
    std::vector<IdentityCheck> out(jobs.size());
    if (parallel) {
        parallel_for(jobs.size(), [&](size_t i) { out[i] = execute(jobs[i]); });
    } else {
        for (size_t i = 0; i < jobs.size(); ++i) out[i] = execute(jobs[i]);
    }
    for (auto& c : out) rep.checks.push_back(std::move(c));
}

Job nf_job(std::string id, std::string relation, OpPtr lhs, OpPtr rhs) {
    return Job{std::move(id), std::move(relation), "normal-form",
               [lhs = std::move(lhs), rhs = std::move(rhs)]() -> std::optional<std::string> {
                   SymNF diff = normal_form(lhs) - normal_form(rhs);
                   if (diff.is_zero()) return std::nullopt;
                   return truncate("difference has canonical form " + diff.str());
               }};
}

Job nf_zero_job(std::string id, std::string relation, OpPtr lhs) {
    return nf_job(std::move(id), std::move(relation), std::move(lhs), op_scalar(MuPoly()));
}

Job sphere_job(std::string id, std::string relation, OpPtr op, int cap) {
    return Job{std::move(id), std::move(relation), "sphere-quotient",
               [op = std::move(op), cap]() -> std::optional<std::string> {
                   auto v = op_vanishes_on_sphere(op, cap);
                   if (v.ok) return std::nullopt;
                   return truncate("image of " + mono_str(v.witness) +
                                   " reduces to " + v.residue.str());
               }};
}

bool enabled(const VerifierConfig& cfg, const std::string& section) {
    return cfg.sections.empty() || cfg.sections.count(section) > 0;
}

std::vector<Subset> selected_subsets(const VerifierConfig& cfg) {
    std::vector<Subset> v;
    for (unsigned m = 1; m < 16; ++m) {
        Subset s{m};
        if (cfg.only_subset && !(s == *cfg.only_subset)) continue;
        v.push_back(s);
    }
    return v;
}

bool coord_selected(const VerifierConfig& cfg, int i /*1-based*/) {
    return !cfg.only_subset || cfg.only_subset->contains0(i - 1);
}

OpPtr times(int n, OpPtr p) { return op_scale(MuPoly(n), std::move(p)); }

std::string gauge_tag(Gauge g) { return g == Gauge::tilde ? ".tilde" : ""; }
std::string gauge_txt(Gauge g) { return g == Gauge::tilde ? " [shifted gauge]" : ""; }

} // namespace

const std::vector<std::string>& verifier_sections() {
    static const std::vector<std::string> s{"osp",       "scasimir", "ident",
                                            "structure", "rank1",    "symmetry"};
    return s;
}

void verify_osp(VerificationReport& rep, const VerifierConfig& cfg) {
    if (!enabled(cfg, "osp")) return;
    Realizations R(cfg.mutation);
    std::vector<Job> jobs;
    for (Subset A : selected_subsets(cfg))
        for (Gauge g : {Gauge::plain, Gauge::tilde}) {
            const std::string at = ".A=" + A.str() + gauge_tag(g);
            const std::string on = " on A=" + A.str() + gauge_txt(g);
            OpPtr D = R.D(A, g), x = R.x(A, g), E = R.E(A, g);
            OpPtr D2 = R.Dsq(A, g), X2 = R.Xsq(A);
            jobs.push_back(nf_job("osp.{x,x}=2|x|2" + at, "{x, x} = 2 |x|^2" + on,
                                  anticommutator(x, x), times(2, X2)));
            jobs.push_back(nf_job("osp.{D,D}=2D2" + at, "{D, D} = 2 D^2" + on,
                                  anticommutator(D, D), times(2, D2)));
            jobs.push_back(nf_job("osp.{x,D}=2E" + at, "{x, D} = 2 E" + on,
                                  anticommutator(x, D), times(2, E)));
            jobs.push_back(nf_job("osp.[D,E]=D" + at, "[D, E] = D" + on,
                                  commutator(D, E), D));
            jobs.push_back(nf_job("osp.[D,|x|2]=2x" + at, "[D, |x|^2] = 2 x" + on,
                                  commutator(D, X2), times(2, x)));
            jobs.push_back(nf_job("osp.[E,x]=x" + at, "[E, x] = x" + on,
                                  commutator(E, x), x));
            jobs.push_back(nf_job("osp.[D2,x]=2D" + at, "[D^2, x] = 2 D" + on,
                                  commutator(D2, x), times(2, D)));
            jobs.push_back(nf_job("osp.[D2,E]=2D2" + at, "[D^2, E] = 2 D^2" + on,
                                  commutator(D2, E), times(2, D2)));
            jobs.push_back(nf_job("osp.[D2,|x|2]=4E" + at, "[D^2, |x|^2] = 4 E" + on,
                                  commutator(D2, X2), times(4, E)));
            jobs.push_back(nf_job("osp.[E,|x|2]=2|x|2" + at, "[E, |x|^2] = 2 |x|^2" + on,
                                  commutator(E, X2), times(2, X2)));
        }
    run_jobs(rep, jobs, true);
}

void verify_scasimir(VerificationReport& rep, const VerifierConfig& cfg) {
    if (!enabled(cfg, "scasimir")) return;
    Realizations R(cfg.mutation);
    std::vector<Job> jobs;
    for (Subset A : selected_subsets(cfg))
        for (Gauge g : {Gauge::plain, Gauge::tilde}) {
            const std::string at = ".A=" + A.str() + gauge_tag(g);
            const std::string on = " on A=" + A.str() + gauge_txt(g);
            OpPtr D = R.D(A, g), x = R.x(A, g), E = R.E(A, g);
            OpPtr D2 = R.Dsq(A, g), X2 = R.Xsq(A);
            OpPtr S = R.S(A, g), Q = R.Q(A, g);
            jobs.push_back(nf_zero_job("scasimir.{S,D}=0" + at, "{S, D} = 0" + on,
                                       anticommutator(S, D)));
            jobs.push_back(nf_zero_job("scasimir.{S,x}=0" + at, "{S, x} = 0" + on,
                                       anticommutator(S, x)));
            jobs.push_back(nf_zero_job("scasimir.[S,E]=0" + at, "[S, E] = 0" + on,
                                       commutator(S, E)));
            jobs.push_back(nf_zero_job("scasimir.[S,|x|2]=0" + at, "[S, |x|^2] = 0" + on,
                                       commutator(S, X2)));
            jobs.push_back(nf_zero_job("scasimir.[S,D2]=0" + at, "[S, D^2] = 0" + on,
                                       commutator(S, D2)));
            jobs.push_back(nf_zero_job("scasimir.[Q,D]=0" + at, "[Q, D] = 0" + on,
                                       commutator(Q, D)));
            jobs.push_back(nf_zero_job("scasimir.[Q,x]=0" + at, "[Q, x] = 0" + on,
                                       commutator(Q, x)));
            jobs.push_back(nf_zero_job("scasimir.[Q,E]=0" + at, "[Q, E] = 0" + on,
                                       commutator(Q, E)));
            jobs.push_back(nf_zero_job("scasimir.[Q,D2]=0" + at, "[Q, D^2] = 0" + on,
                                       commutator(Q, D2)));
            jobs.push_back(nf_zero_job("scasimir.[Q,|x|2]=0" + at, "[Q, |x|^2] = 0" + on,
                                       commutator(Q, X2)));
        }
    for (int i = 1; i <= 4; ++i) {
        if (!coord_selected(cfg, i)) continue;
        Subset one = Subset::of({i});
        OpPtr Ri = op_refl(i - 1);
        const std::string ci = ".i=" + std::to_string(i);
        for (Gauge g : {Gauge::plain, Gauge::tilde}) {
            const std::string at = ci + gauge_tag(g);
            const std::string on = " for coordinate " + std::to_string(i) + gauge_txt(g);
            jobs.push_back(nf_zero_job("scasimir.{R,D}=0" + at, "{R, D} = 0" + on,
                                       anticommutator(Ri, R.D(one, g))));
            jobs.push_back(nf_zero_job("scasimir.{R,x}=0" + at, "{R, x} = 0" + on,
                                       anticommutator(Ri, R.x(one, g))));
            jobs.push_back(nf_zero_job("scasimir.[R,E]=0" + at, "[R, E] = 0" + on,
                                       commutator(Ri, R.E(one, g))));
            jobs.push_back(nf_zero_job("scasimir.[R,|x|2]=0" + at, "[R, |x|^2] = 0" + on,
                                       commutator(Ri, R.Xsq(one))));
            jobs.push_back(nf_zero_job("scasimir.[R,D2]=0" + at, "[R, D^2] = 0" + on,
                                       commutator(Ri, R.Dsq(one, g))));
            jobs.push_back(nf_job("scasimir.Q=mu" + at,
                                  "Q = mu * identity" + on, R.Q(one, g),
                                  op_scalar(MuPoly::variable(i - 1))));
        }
    }
    run_jobs(rep, jobs, true);
}

void verify_identifications(VerificationReport& rep, const VerifierConfig& cfg) {
    if (!enabled(cfg, "ident")) return;
    Realizations R(cfg.mutation);
    std::vector<Job> jobs;
    if (!cfg.only_subset || *cfg.only_subset == Subset::empty_set())
        jobs.push_back(nf_job("ident.Q=-1/2.A=0", "Q of the empty set is the constant -1/2",
                              R.Q(Subset::empty_set()), op_scalar(Rational(-1, 2))));
    for (int i = 1; i <= 4; ++i) {
        Subset A = Subset::of({i});
        if (cfg.only_subset && !(A == *cfg.only_subset)) continue;
        std::string is = std::to_string(i);
        jobs.push_back(nf_job("ident.Q=mu.i=" + is, "Q_" + is + " equals the parameter mu_" + is,
                              R.Q(A), op_scalar(MuPoly::variable(i - 1))));
    }
    for (int j = 1; j <= 4; ++j)
        for (int k = j + 1; k <= 4; ++k) {
            Subset A = Subset::of({j, k});
            if (cfg.only_subset && !(A == *cfg.only_subset)) continue;
            std::string jk = std::to_string(j) + std::to_string(k);
            jobs.push_back(nf_job("ident.L=Q.jk=" + jk,
                                  "L_" + jk + " equals the two-index invariant Q_" + jk,
                                  R.L(j, k), R.Q(A)));
        }
    for (unsigned m = 1; m < 16; ++m) {
        Subset A{m};
        if (A.size() != 3) continue;
        if (cfg.only_subset && !(A == *cfg.only_subset)) continue;
        jobs.push_back(nf_job("ident.M=Q.A=" + A.str(),
                              "M_" + A.str() + " equals the three-index invariant Q_" + A.str(),
                              R.M(A), R.Q(A)));
    }
    run_jobs(rep, jobs, true);
}

void verify_structure(VerificationReport& rep, const VerifierConfig& cfg) {
    if (!enabled(cfg, "structure")) return;
    Realizations R(cfg.mutation);

    auto qnf = std::make_shared<std::array<SymNF, 16>>();
    parallel_for(16, [&](size_t m) {
        (*qnf)[m] = normal_form(R.Q(Subset{static_cast<unsigned>(m)}));
    });

    std::vector<Job> jobs;
    for (unsigned a = 0; a < 16; ++a) {
        Subset A{a};
        if (cfg.only_subset && !(A == *cfg.only_subset)) continue;
        for (unsigned b = 0; b < 16; ++b) {
            Subset B{b};
            std::string id = "structure.A=" + subset_label(A) + ".B=" + subset_label(B);
            std::string rel = "{Q_A, Q_B} = Q_{A xor B} + 2 Q_{A and B} Q_{A or B} + "
                              "2 Q_{A minus B} Q_{B minus A}  (A=" +
                              subset_label(A) + ", B=" + subset_label(B) + ")";
            jobs.push_back(Job{std::move(id), std::move(rel), "normal-form",
                               [qnf, A, B]() -> std::optional<std::string> {
                                   const auto& q = *qnf;
                                   const SymNF& qa = q[A.mask];
                                   const SymNF& qb = q[B.mask];
                                   SymNF lhs = qa * qb + qb * qa;
                                   SymNF rhs = q[(A ^ B).mask] +
                                               (q[(A & B).mask] * q[(A | B).mask]).scaled(MuPoly(2)) +
                                               (q[A.minus(B).mask] * q[B.minus(A).mask]).scaled(MuPoly(2));
                                   SymNF diff = lhs - rhs;
                                   if (diff.is_zero()) return std::nullopt;
                                   return truncate("difference has canonical form " + diff.str());
                               }});
        }
    }
    run_jobs(rep, jobs, true);
}

void verify_rank1(VerificationReport& rep, const VerifierConfig& cfg) {
    if (!enabled(cfg, "rank1")) return;
    Realizations R(cfg.mutation);
    OpPtr K1 = R.Q(Subset::of({1, 2}));
    OpPtr K2 = R.Q(Subset::of({2, 3}));
    OpPtr K3 = R.Q(Subset::of({1, 3}));
    OpPtr q1 = R.Q(Subset::of({1})), q2 = R.Q(Subset::of({2})), q3 = R.Q(Subset::of({3}));
    OpPtr q123 = R.Q(Subset::of({1, 2, 3}));
    OpPtr w1 = times(2, q3 * q123) + times(2, q1 * q2);
    OpPtr w2 = times(2, q1 * q123) + times(2, q2 * q3);
    OpPtr w3 = times(2, q2 * q123) + times(2, q1 * q3);

    std::vector<Job> jobs;
    jobs.push_back(nf_job("rank1.{K1,K2}=K3+w3", "{K_1, K_2} = K_3 + w_3",
                          anticommutator(K1, K2), K3 + w3));
    jobs.push_back(nf_job("rank1.{K2,K3}=K1+w1", "{K_2, K_3} = K_1 + w_1",
                          anticommutator(K2, K3), K1 + w1));
    jobs.push_back(nf_job("rank1.{K3,K1}=K2+w2", "{K_3, K_1} = K_2 + w_2",
                          anticommutator(K3, K1), K2 + w2));
    std::array<OpPtr, 3> w{w1, w2, w3};
    std::array<OpPtr, 3> K{K1, K2, K3};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            std::string ij = ".i=" + std::to_string(i + 1) + ".j=" + std::to_string(j + 1);
            jobs.push_back(nf_zero_job(
                "rank1.[w,K]=0" + ij,
                "[w_" + std::to_string(i + 1) + ", K_" + std::to_string(j + 1) + "] = 0",
                commutator(w[static_cast<size_t>(i)], K[static_cast<size_t>(j)])));
        }
    run_jobs(rep, jobs, true);
}

void verify_symmetries(VerificationReport& rep, const VerifierConfig& cfg) {
    if (!enabled(cfg, "symmetry")) return;
    Realizations R(cfg.mutation);
    OpPtr H = R.H();
    OpPtr bridge = R.H_from_scasimir();

    std::vector<Job> nf_jobs;
    nf_jobs.push_back(nf_job("symmetry.bridge.ambient",
                             "S^2 - S - 3/4 = kinetic + |x|^2 * potential (ambient)",
                             bridge, R.ambient_bridge_rhs()));
    for (int i = 1; i <= 4; ++i) {
        if (!coord_selected(cfg, i)) continue;
        nf_jobs.push_back(nf_zero_job("symmetry.[H,R]=0.i=" + std::to_string(i),
                                      "[H, R_" + std::to_string(i) + "] = 0 (ambient)",
                                      commutator(H, op_refl(i - 1))));
    }
    for (Subset A : selected_subsets(cfg))
        nf_jobs.push_back(nf_zero_job("symmetry.[Q,casimir]=0.A=" + A.str(),
                                      "[Q_" + A.str() + ", S^2 - S - 3/4] = 0 (ambient)",
                                      commutator(R.Q(A), bridge)));
    run_jobs(rep, nf_jobs, true);

    // quotient-ring checks; these parallelize internally over spanning monomials
    std::vector<Job> sph_jobs;
    sph_jobs.push_back(sphere_job("symmetry.bridge.sphere",
                                  "S^2 - S - 3/4 = H on the unit sphere",
                                  bridge - H, cfg.sphere_cap));
    for (int j = 1; j <= 4; ++j)
        for (int k = j + 1; k <= 4; ++k) {
            Subset A = Subset::of({j, k});
            if (cfg.only_subset && !(A == *cfg.only_subset)) continue;
            std::string jk = std::to_string(j) + std::to_string(k);
            sph_jobs.push_back(sphere_job("symmetry.[H,L]=0.jk=" + jk,
                                          "[H, L_" + jk + "] = 0 on the unit sphere",
                                          commutator(H, R.L(j, k)), cfg.sphere_cap));
        }
    for (unsigned m = 1; m < 16; ++m) {
        Subset A{m};
        if (A.size() != 3) continue;
        if (cfg.only_subset && !(A == *cfg.only_subset)) continue;
        sph_jobs.push_back(sphere_job("symmetry.[H,M]=0.A=" + A.str(),
                                      "[H, M_" + A.str() + "] = 0 on the unit sphere",
                                      commutator(H, R.M(A)), cfg.sphere_cap));
    }
    run_jobs(rep, sph_jobs, false);
}

VerificationReport run_full_suite(const VerifierConfig& cfg) {
    VerificationReport rep;
    verify_osp(rep, cfg);
    verify_scasimir(rep, cfg);
    verify_identifications(rep, cfg);
    verify_structure(rep, cfg);
    verify_rank1(rep, cfg);
    verify_symmetries(rep, cfg);
    return rep;
}

nlohmann::json report_to_json(const VerificationReport& rep, const VerifierConfig& cfg) {
    nlohmann::json j;
    j["version"] = "1.0";
    j["mu_mode"] = "symbolic";
    j["caps"] = {{"sphere_degree", cfg.sphere_cap}};
    if (cfg.mutation != Mutation::none) {
        for (const auto& [name, m] : mutation_catalog())
            if (m == cfg.mutation) j["mutation"] = name;
    }
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : rep.checks) {
        nlohmann::json e = {{"id", c.id},
                            {"relation", c.relation},
                            {"method", c.method},
                            {"status", c.pass ? "pass" : "fail"},
                            {"elapsed_ms", c.elapsed_ms}};
        if (!c.witness.empty()) e["witness"] = c.witness;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    j["summary"] = {{"pass", rep.passed()}, {"fail", rep.failed()}};
    return j;
}

} // namespace osps3
