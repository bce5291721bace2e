// lct: presentations, vanishing and support of top graded local cohomology
// modules H^s_{R_+}(R) over a coefficient domain R_0, via exact linear
// algebra on the content/minor criteria.

#include "lct/charp.hpp"
#include "lct/cohomology.hpp"
#include "lct/problem.hpp"
#include "lct/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace lct;

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;
constexpr int kExitUndecided = 3;

int tri_exit(Tri t) {
    switch (t) {
    case Tri::Yes: return kExitOk;
    case Tri::No: return kExitNo;
    default: return kExitUndecided;
    }
}

ProblemFile load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_problem(buffer.str());
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

void describe_ring(Report& rep, const ProblemFile& pf) {
    Report& ring = rep.block("ring");
    ring.add("base", pf.ring.to_string());
    if (!pf.u_names.empty()) {
        std::vector<std::string> vars;
        for (std::size_t i = 0; i < pf.u_names.size(); ++i)
            vars.push_back(pf.u_names[i] + ":" + std::to_string(pf.weights[i]));
        ring.add("vars", join(vars, ", "));
    }
    if (!pf.generators.empty()) {
        Report& ideal = rep.block("ideal");
        for (std::size_t i = 0; i < pf.generators.size(); ++i)
            ideal.add(pf.generator_names[i], pf.generators[i].to_string(pf.u_names));
    }
}

void describe_matrix(Report& rep, const ComponentMatrix& m,
                     const std::vector<std::string>& gen_names) {
    Report& mat = rep.block("matrix");
    mat.add("d", m.d());
    mat.add("rows", m.rows());
    mat.add("cols", m.cols());
    std::vector<std::string> row_labels;
    for (const auto& mono : m.row_basis().elements())
        row_labels.push_back(mono.to_string());
    mat.add("row_basis", join(row_labels, ", "));
    std::vector<std::string> col_labels;
    for (const auto& cl : m.col_basis())
        col_labels.push_back(gen_names.at(cl.gen) + ":" + cl.mono.to_string());
    mat.add("col_basis", join(col_labels, ", "));
    Report& entries = mat.block("entries");
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::string row;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) row += "\t";
            row += m.entry(i, j).to_string();
        }
        entries.add(m.row_basis()[i].to_string(), row);
    }
}

void describe_cokernel(Report& rep, const ComponentPresentation& p) {
    Report& coker = rep.block("cokernel");
    coker.add("kind", to_string(p.kind));
    if (p.kind == CokerKind::FreeOfRank) coker.add("free_rank", p.free_rank);
    if (p.kind == CokerKind::IntegerInvariantFactors) {
        std::vector<std::string> fs;
        for (const Int& f : p.invariant_factors) fs.push_back(f.get_str());
        coker.add("invariant_factors", join(fs, ", "));
        if (p.free_rank) coker.add("free_rank", p.free_rank);
    }
    if (p.minor_ideal) coker.add("minor_ideal", p.minor_ideal->to_string());
    rep.add("vanishes", to_string(p.vanishes));
}

struct Output {
    bool machine = false;
    Report rep;
    std::ostringstream human;

    void flush() {
        if (machine)
            std::cout << rep.to_machine();
        else
            std::cout << human.str();
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"top graded local cohomology toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    bool machine = false;
    app.add_flag("--machine", machine, "structured key: value output");

    std::string file;
    long degree = -1;
    long dmax = -1;
    long minor_budget_flag = -1;
    long alpha_max_flag = -1, beta_max_flag = -1;
    long prime_flag = 0;
    bool witness = false;
    long mc_s = 0, mc_t = 0;

    auto add_file = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "problem file (.lct)")->required();
    };

    CLI::App* c_content = app.add_subcommand("content", "content ideal c(I) of R_0");
    add_file(c_content);
    CLI::App* c_vanishes =
        app.add_subcommand("vanishes", "does H^s_{R_+}(R) vanish (content criterion)?");
    add_file(c_vanishes);
    CLI::App* c_component =
        app.add_subcommand("component", "presentation of H^s_{R_+}(R)_{-d}");
    add_file(c_component);
    c_component->add_option("--degree", degree, "component degree d (the -d part)")
        ->required();
    c_component->add_option("--minor-budget", minor_budget_flag, "minor enumeration cap");
    CLI::App* c_support = app.add_subcommand("support", "support description");
    add_file(c_support);
    CLI::App* c_scan = app.add_subcommand("gap-scan", "vanishing verdict per degree");
    add_file(c_scan);
    c_scan->add_option("--dmax", dmax, "scan up to this degree");
    c_scan->add_option("--minor-budget", minor_budget_flag, "minor enumeration cap");
    CLI::App* c_l2 = app.add_subcommand("verify-lemma2", "maximal-rank check per degree");
    add_file(c_l2);
    c_l2->add_option("--dmax", dmax, "scan up to this degree");
    CLI::App* c_l3 = app.add_subcommand("verify-lemma3",
                                        "content inside the radical of the minor ideal");
    add_file(c_l3);
    c_l3->add_option("--degree", degree, "degree d");
    c_l3->add_option("--minor-budget", minor_budget_flag, "minor enumeration cap");
    CLI::App* c_top = app.add_subcommand("top-iso",
                                         "top component isomorphic to R_0/c(I)?");
    add_file(c_top);
    CLI::App* c_charp = app.add_subcommand("charp", "char-p vanishing certificate search");
    add_file(c_charp);
    c_charp->add_option("--alpha-max", alpha_max_flag, "alpha bound");
    c_charp->add_option("--beta-max", beta_max_flag, "beta bound");
    c_charp->add_option("--prime", prime_flag, "reduce a ZZ[...] base mod this prime");
    c_charp->add_flag("--witness", witness, "extract cofactors");
    CLI::App* c_mc = app.add_subcommand("weak-mc", "weak monomial conjecture instance");
    c_mc->add_option("--s", mc_s, "number of parameters")->required();
    c_mc->add_option("--t", mc_t, "power")->required();

    CLI11_PARSE(app, argc, argv);

    Output out;
    out.machine = machine;

    try {
        if (*c_content) {
            ProblemFile pf = load_problem(file);
            GradedRingSpec spec = pf.to_spec();
            SupportReport sr = vanishes(spec);
            out.rep.add("command", "content");
            describe_ring(out.rep, pf);
            out.rep.add("content", sr.content.to_string());
            out.rep.add("unit", to_string(sr.vanishes));
            out.human << "c(I) = " << sr.content.to_string() << "\n"
                      << "unit ideal: " << to_string(sr.vanishes) << "\n";
            out.flush();
            return sr.vanishes == Tri::Undecided ? kExitUndecided : kExitOk;
        }
        if (*c_vanishes) {
            ProblemFile pf = load_problem(file);
            GradedRingSpec spec = pf.to_spec();
            SupportReport sr = vanishes(spec);
            out.rep.add("command", "vanishes");
            describe_ring(out.rep, pf);
            out.rep.add("content", sr.content.to_string());
            out.rep.add("verdict", sr.vanishes == Tri::Yes       ? "vanishes"
                                   : sr.vanishes == Tri::No      ? "nonvanishing"
                                                                 : "undecided");
            if (sr.vanishes == Tri::Yes)
                out.human << "H = 0: c(I) = " << sr.content.to_string()
                          << " is the unit ideal\n";
            else if (sr.vanishes == Tri::No)
                out.human << "H != 0: c(I) = " << sr.content.to_string()
                          << " is a proper ideal; support " << sr.support_description
                          << "\n";
            else
                out.human << "undecided: c(I) = " << sr.content.to_string() << "\n";
            out.flush();
            return tri_exit(sr.vanishes);
        }
        if (*c_component) {
            ProblemFile pf = load_problem(file);
            GradedRingSpec spec = pf.to_spec();
            std::size_t budget = minor_budget_flag >= 0
                                     ? static_cast<std::size_t>(minor_budget_flag)
                                     : pf.options.minor_budget.value_or(kDefaultMinorBudget);
            ComponentPresentation p = component(spec, degree, budget);
            out.rep.add("command", "component");
            describe_ring(out.rep, pf);
            out.rep.add("degree", degree);
            describe_matrix(out.rep, p.matrix, spec.generator_names());
            describe_cokernel(out.rep, p);
            out.human << p.matrix.to_text(spec.generator_names());
            out.human << "cokernel: " << to_string(p.kind);
            if (p.kind == CokerKind::FreeOfRank)
                out.human << " of rank " << p.free_rank;
            if (p.kind == CokerKind::IntegerInvariantFactors) {
                out.human << " [";
                for (std::size_t i = 0; i < p.invariant_factors.size(); ++i)
                    out.human << (i ? ", " : "") << p.invariant_factors[i].get_str();
                out.human << "]";
                if (p.free_rank) out.human << " plus free rank " << p.free_rank;
            }
            if (p.minor_ideal)
                out.human << "; minor ideal " << p.minor_ideal->to_string();
            out.human << "\nvanishes: " << to_string(p.vanishes) << "\n";
            out.flush();
            return p.vanishes == Tri::Undecided ? kExitUndecided : kExitOk;
        }
        if (*c_support) {
            ProblemFile pf = load_problem(file);
            GradedRingSpec spec = pf.to_spec();
            SupportReport sr = vanishes(spec);
            out.rep.add("command", "support");
            describe_ring(out.rep, pf);
            out.rep.add("content", sr.content.to_string());
            out.rep.add("support", sr.support_description);
            out.rep.add("verdict", sr.vanishes == Tri::Yes       ? "vanishes"
                                   : sr.vanishes == Tri::No      ? "nonvanishing"
                                                                 : "undecided");
            out.human << "support of H: " << sr.support_description << "\n";
            if (sr.vanishes == Tri::Yes) out.human << "(empty: H = 0)\n";
            out.flush();
            return sr.vanishes == Tri::Undecided ? kExitUndecided : kExitOk;
        }
        if (*c_scan) {
            ProblemFile pf = load_problem(file);
            GradedRingSpec spec = pf.to_spec();
            long limit = dmax >= 0 ? dmax
                                   : pf.options.dmax.value_or(spec.default_scan_limit());
            std::size_t budget = minor_budget_flag >= 0
                                     ? static_cast<std::size_t>(minor_budget_flag)
                                     : pf.options.minor_budget.value_or(kDefaultMinorBudget);
            auto scan = gap_scan(spec, limit, budget);
            out.rep.add("command", "gap-scan");
            describe_ring(out.rep, pf);
            out.rep.add("dmax", limit);
            Report& sc = out.rep.block("scan");
            bool undecided = false;
            for (const auto& [d, verdict] : scan) {
                sc.add("d" + std::to_string(d), to_string(verdict));
                if (verdict == Tri::Undecided) undecided = true;
                out.human << "d = " << d << ": "
                          << (verdict == Tri::Yes       ? "vanishes"
                              : verdict == Tri::No      ? "nonvanishing"
                                                        : "undecided")
                          << "\n";
            }
            out.flush();
            return undecided ? kExitUndecided : kExitOk;
        }
        if (*c_l2) {
            ProblemFile pf = load_problem(file);
            GradedRingSpec spec = pf.to_spec();
            long limit = dmax >= 0 ? dmax
                                   : pf.options.dmax.value_or(spec.default_scan_limit());
            out.rep.add("command", "verify-lemma2");
            describe_ring(out.rep, pf);
            bool all = true;
            Report& checks = out.rep.block("checks");
            for (std::size_t i = 0; i < spec.generators().size(); ++i) {
                Lemma2Report r =
                    verify_lemma2(spec.generators()[i], spec, spec.delta(), limit);
                Report& gen = checks.block(spec.generator_names()[i]);
                for (const auto& item : r.items) {
                    gen.add("d" + std::to_string(item.d),
                            "rank " + std::to_string(item.rank) + "/" +
                                std::to_string(item.basis_size) +
                                (item.pass ? " ok" : " FAIL"));
                    out.human << spec.generator_names()[i] << " d=" << item.d
                              << ": rank " << item.rank << " of " << item.basis_size
                              << (item.pass ? " ok" : " FAIL") << "\n";
                }
                if (!r.all_pass) all = false;
            }
            out.rep.add("all_pass", all ? "yes" : "no");
            out.flush();
            return all ? kExitOk : kExitNo;
        }
        if (*c_l3) {
            ProblemFile pf = load_problem(file);
            GradedRingSpec spec = pf.to_spec();
            long d = degree >= 0 ? degree : spec.delta();
            std::size_t budget = minor_budget_flag >= 0
                                     ? static_cast<std::size_t>(minor_budget_flag)
                                     : pf.options.minor_budget.value_or(kDefaultMinorBudget);
            Lemma3Report r = verify_lemma3(spec, d, budget);
            out.rep.add("command", "verify-lemma3");
            describe_ring(out.rep, pf);
            out.rep.add("degree", d);
            out.rep.add("t", r.t);
            out.rep.add("minor_ideal", r.minor_ideal.to_string());
            Report& checks = out.rep.block("checks");
            bool undecided = false;
            for (const auto& item : r.items) {
                checks.add(item.generator, to_string(item.in_radical));
                if (item.in_radical == Tri::Undecided) undecided = true;
                out.human << item.generator << " in radical: "
                          << to_string(item.in_radical) << "\n";
            }
            out.rep.add("all_pass", r.all_pass ? "yes" : "no");
            out.flush();
            if (r.all_pass) return kExitOk;
            return undecided ? kExitUndecided : kExitNo;
        }
        if (*c_top) {
            ProblemFile pf = load_problem(file);
            GradedRingSpec spec = pf.to_spec();
            Tri verdict = top_component_iso_check(spec);
            out.rep.add("command", "top-iso");
            describe_ring(out.rep, pf);
            out.rep.add("delta", spec.delta());
            out.rep.add("isomorphic", to_string(verdict));
            out.human << "Coker M(...; " << spec.delta() << ") = R_0/c(I): "
                      << to_string(verdict) << "\n";
            out.flush();
            return tri_exit(verdict);
        }
        if (*c_charp) {
            ProblemFile pf = load_problem(file);
            if (prime_flag > 0) {
                CoefficientRing target = CoefficientRing::polynomial(
                    CoefficientRing::prime_field(Int(prime_flag)), pf.ring.vars());
                if (pf.ring.scalar_kind() == RingKind::PrimeField &&
                    pf.ring.prime() != prime_flag)
                    throw Error("--prime conflicts with the file's base field");
                std::vector<SPolynomial> moved;
                for (const auto& f : pf.generators) {
                    SPolynomial g(target, f.uvar_count());
                    for (const auto& [e, c] : f.terms())
                        g = g + SPolynomial::monomial(f.uvar_count(), e,
                                                      c.with_scalars(target));
                    moved.push_back(std::move(g));
                }
                pf.ring = target;
                pf.generators = std::move(moved);
            }
            std::vector<R0Element> fs = pf.charp_inputs();
            unsigned amax = alpha_max_flag > 0 ? static_cast<unsigned>(alpha_max_flag)
                                               : pf.options.alpha_max.value_or(5);
            unsigned bmax = beta_max_flag > 0 ? static_cast<unsigned>(beta_max_flag)
                                              : pf.options.beta_max.value_or(5);
            auto cert = charp_vanishing_search(fs, amax, bmax, witness);
            out.rep.add("command", "charp");
            out.rep.add("ring", fs.front().ring().to_string());
            out.rep.add("alpha_max", static_cast<std::size_t>(amax));
            out.rep.add("beta_max", static_cast<std::size_t>(bmax));
            if (cert) {
                out.rep.add("found", "yes");
                out.rep.add("alpha", static_cast<std::size_t>(cert->alpha));
                out.rep.add("beta", static_cast<std::size_t>(cert->beta));
                out.human << "certificate (alpha, beta) = (" << cert->alpha << ", "
                          << cert->beta << "): H^s_I(R) = 0\n";
                if (cert->witness) {
                    Report& w = out.rep.block("witness");
                    for (std::size_t i = 0; i < cert->witness->size(); ++i) {
                        w.add("g" + std::to_string(i + 1),
                              (*cert->witness)[i].to_string());
                        out.human << "g" << (i + 1) << " = "
                                  << (*cert->witness)[i].to_string() << "\n";
                    }
                    out.human << (verify_certificate(fs, *cert)
                                      ? "witness identity verified\n"
                                      : "witness identity FAILED\n");
                }
            } else {
                out.rep.add("found", "no");
                out.human << "no certificate within bounds (" << amax << ", " << bmax
                          << "); inconclusive\n";
            }
            out.flush();
            return cert ? kExitOk : kExitNo;
        }
        if (*c_mc) {
            if (mc_s < 2 || mc_t < 1) throw Error("weak-mc needs --s >= 2 and --t >= 1");
            WeakMCInstance inst = weak_mc_instance(static_cast<unsigned>(mc_s),
                                                   static_cast<unsigned>(mc_t));
            SupportReport sr = vanishes(inst.spec);
            out.rep.add("command", "weak-mc");
            out.rep.add("s", static_cast<std::size_t>(inst.s));
            out.rep.add("t", static_cast<std::size_t>(inst.t));
            Report& ring = out.rep.block("ring");
            ring.add("base", inst.spec.coeff().to_string());
            std::vector<std::string> vars;
            for (std::size_t i = 0; i < inst.spec.u_names().size(); ++i)
                vars.push_back(inst.spec.u_names()[i] + ":" +
                               std::to_string(inst.spec.weights()[i]));
            ring.add("vars", join(vars, ", "));
            out.rep.add("generator",
                        inst.spec.generators()[0].to_string(inst.spec.u_names()));
            out.rep.add("content", sr.content.to_string());
            out.rep.add("verdict", sr.vanishes == Tri::Yes ? "vanishes"
                                                           : to_string(sr.vanishes));
            out.human << "F = " << inst.spec.generators()[0].to_string(inst.spec.u_names())
                      << "\n"
                      << "c(F) = " << sr.content.to_string() << "\n"
                      << "verdict: "
                      << (sr.vanishes == Tri::Yes ? "vanishes" : to_string(sr.vanishes))
                      << "\n";
            out.flush();
            return tri_exit(sr.vanishes);
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
