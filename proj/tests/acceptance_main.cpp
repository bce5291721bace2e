// Acceptance suite: one pass/fail line per criterion. Everything is exact;
// the stated wall-clock targets are enforced as part of each criterion.

#include "lct/charp.hpp"
#include "lct/cohomology.hpp"
#include "lct/problem.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace lct;

namespace {

// ---------------------------------------------------------------------------
// Deterministic corpus: >= 200 specs over {ZZ, QQ, GF(2), GF(5), QQ[x],
// QQ[x,y]}, s in {2,3}, weights in {1,2}, r <= 3, generator degrees <= 4.

std::vector<CoefficientRing> corpus_rings() {
    return {CoefficientRing::integers(),
            CoefficientRing::rationals(),
            CoefficientRing::prime_field(2),
            CoefficientRing::prime_field(5),
            CoefficientRing::polynomial(CoefficientRing::rationals(), {"x"}),
            CoefficientRing::polynomial(CoefficientRing::rationals(), {"x", "y"})};
}

R0Element random_coefficient(const CoefficientRing& ring, std::mt19937& rng) {
    auto pick = [&](long lo, long hi) {
        return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
    };
    switch (ring.scalar_kind()) {
    case RingKind::Integers:
    case RingKind::Rationals: {
        if (!ring.is_polynomial()) {
            long num = pick(-4, 4);
            if (num == 0) num = 1;
            long den = ring.kind() == RingKind::Rationals ? pick(1, 3) : 1;
            return R0Element::constant(ring, Rat(num, den));
        }
        R0Element out(ring);
        for (std::size_t v = 0; v <= ring.nvars(); ++v) {
            long c = pick(-2, 2);
            if (c == 0) continue;
            Exponents e(ring.nvars(), 0);
            if (v > 0) e[v - 1] = 1;
            out += R0Element::monomial(ring, e, Rat(c));
        }
        if (out.is_zero()) out = R0Element::from_int(ring, 1);
        return out;
    }
    case RingKind::PrimeField: {
        long p = ring.prime().get_si();
        return R0Element::constant(ring, Rat(1 + pick(0, p - 2)));
    }
    default:
        return R0Element::from_int(ring, 1);
    }
}

std::vector<Exponents> monomials_of_degree(long deg, const std::vector<unsigned>& w) {
    std::vector<Exponents> out;
    Exponents e(w.size(), 0);
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long rest) {
        if (i + 1 == w.size()) {
            if (rest >= 0 && rest % w[i] == 0) {
                e[i] = static_cast<unsigned>(rest / w[i]);
                out.push_back(e);
            }
            return;
        }
        for (long v = 0; v * static_cast<long>(w[i]) <= rest; ++v) {
            e[i] = static_cast<unsigned>(v);
            rec(i + 1, rest - v * static_cast<long>(w[i]));
        }
    };
    rec(0, deg);
    return out;
}

SPolynomial random_generator(const CoefficientRing& ring,
                             const std::vector<unsigned>& weights, std::mt19937& rng) {
    const unsigned s = static_cast<unsigned>(weights.size());
    while (true) {
        long deg = 1 + static_cast<long>(rng() % 4); // degrees <= 4
        std::vector<Exponents> monos = monomials_of_degree(deg, weights);
        if (monos.empty()) continue;
        SPolynomial f(ring, s);
        for (const auto& e : monos) {
            if (rng() % 2) continue;
            f = f + SPolynomial::monomial(s, e, random_coefficient(ring, rng));
        }
        if (!f.is_zero()) return f;
    }
}

GradedRingSpec random_spec(const CoefficientRing& ring, std::mt19937& rng) {
    unsigned s = 2 + rng() % 2;
    std::vector<unsigned> weights;
    for (unsigned i = 0; i < s; ++i) weights.push_back(1 + rng() % 2);
    unsigned r = 1 + rng() % 3;
    std::vector<SPolynomial> gens;
    for (unsigned g = 0; g < r; ++g) gens.push_back(random_generator(ring, weights, rng));
    return GradedRingSpec(ring, weights, gens);
}

std::vector<GradedRingSpec> build_corpus(std::size_t count) {
    std::mt19937 rng(20260810);
    std::vector<CoefficientRing> rings = corpus_rings();
    std::vector<GradedRingSpec> out;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(random_spec(rings[i % rings.size()], rng));
    return out;
}

// ---------------------------------------------------------------------------
// Independent oracles local to the acceptance suite.

R0Element cofactor_det(const R0Matrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return R0Element::from_int(m.ring(), 1);
    if (n == 1) return m.at(0, 0);
    R0Element acc(m.ring());
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        R0Matrix sub(m.ring(), n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cj = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == j) continue;
                sub.at(i - 1, cj++) = m.at(i, k);
            }
        }
        R0Element term = m.at(0, j) * cofactor_det(sub);
        if (j % 2) term = -term;
        acc += term;
    }
    return acc;
}

void for_combinations(std::size_t n, std::size_t k,
                      const std::function<void(const std::vector<std::size_t>&)>& fn) {
    if (k > n) return;
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    while (true) {
        fn(c);
        std::size_t i = k;
        bool advanced = false;
        while (i > 0) {
            --i;
            if (c[i] + (k - i) < n) {
                ++c[i];
                for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) return;
    }
}

std::size_t exhaustive_rank(const R0Matrix& m) {
    for (std::size_t t = std::min(m.rows(), m.cols()); t >= 1; --t) {
        bool found = false;
        for_combinations(m.rows(), t, [&](const std::vector<std::size_t>& ri) {
            if (found) return;
            for_combinations(m.cols(), t, [&](const std::vector<std::size_t>& ci) {
                if (found) return;
                R0Matrix sub(m.ring(), t, t);
                for (std::size_t i = 0; i < t; ++i)
                    for (std::size_t j = 0; j < t; ++j) sub.at(i, j) = m.at(ri[i], ci[j]);
                if (!cofactor_det(sub).is_zero()) found = true;
            });
        });
        if (found) return t;
    }
    return 0;
}

Int gcd_of_k_minors(const R0Matrix& m, std::size_t k) {
    Int g = 0;
    for_combinations(m.rows(), k, [&](const std::vector<std::size_t>& ri) {
        for_combinations(m.cols(), k, [&](const std::vector<std::size_t>& ci) {
            R0Matrix sub(m.ring(), k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = m.at(ri[i], ci[j]);
            Int d = cofactor_det(sub).is_zero()
                        ? Int(0)
                        : Int(cofactor_det(sub).constant_value().get_num());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        });
    });
    return g;
}

// ---------------------------------------------------------------------------
// Criterion harness

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void run_criterion(int number, const std::string& name, double target_seconds,
                   const std::function<Outcome()>& body) {
    auto start = std::chrono::steady_clock::now();
    Outcome outcome{false, ""};
    try {
        outcome = body();
    } catch (const std::exception& e) {
        outcome = {false, std::string("exception: ") + e.what()};
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = elapsed < target_seconds;
    bool pass = outcome.pass && in_time;
    if (!pass) ++failures;
    std::printf("criterion %d: %s (%s; %s; %.1f s < %.0f s%s)\n", number,
                pass ? "PASS" : "FAIL", name.c_str(), outcome.detail.c_str(), elapsed,
                target_seconds, in_time ? "" : " EXCEEDED");
    std::fflush(stdout);
}

std::string run_cli(const std::string& args, int* exit_code) {
    std::string cmd = std::string(LCT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        *exit_code = -1;
        return "";
    }
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    *exit_code = WEXITSTATUS(pclose(pipe));
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

int main() {
    const std::vector<GradedRingSpec> corpus = build_corpus(210);
    // Scan verdicts per corpus entry, shared between criteria 1 and 5.
    std::vector<std::vector<std::pair<long, Tri>>> scans(corpus.size());

    run_criterion(1, "theorem 1 equivalence", 60.0, [&]() -> Outcome {
        std::size_t components = 0;
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const GradedRingSpec& spec = corpus[i];
            Tri unit = is_unit_ideal(content_ideal(spec));
            if (unit == Tri::Undecided)
                return {false, "content test undecided on a decidable ring"};
            scans[i] = gap_scan(spec, spec.default_scan_limit());
            for (const auto& [d, verdict] : scans[i]) {
                ++components;
                if (verdict != unit) {
                    return {false, "mismatch at spec " + std::to_string(i) +
                                       " degree " + std::to_string(d)};
                }
            }
        }
        return {true, std::to_string(corpus.size()) + " specs, " +
                          std::to_string(components) + " components"};
    });

    run_criterion(2, "lemma 2 maximal rank", 30.0, [&]() -> Outcome {
        std::mt19937 rng(987654321);
        std::vector<CoefficientRing> rings = corpus_rings();
        std::size_t checked = 0, polys = 0;
        for (int i = 0; i < 102; ++i) {
            const CoefficientRing& ring = rings[i % rings.size()];
            unsigned s = 2 + rng() % 2;
            std::vector<unsigned> weights;
            for (unsigned k = 0; k < s; ++k) weights.push_back(1 + rng() % 2);
            SPolynomial f = random_generator(ring, weights, rng);
            GradedRingSpec spec(ring, weights, {f});
            Lemma2Report report =
                verify_lemma2(f, spec, spec.delta(), spec.default_scan_limit());
            if (!report.all_pass) return {false, "rank drop at poly " + std::to_string(i)};
            ++polys;
            checked += report.items.size();
        }
        return {true, std::to_string(polys) + " polynomials, " +
                          std::to_string(checked) + " degrees"};
    });

    run_criterion(3, "lemma 3 radical containment", 120.0, [&]() -> Outcome {
        std::size_t ran = 0, skipped = 0;
        for (const GradedRingSpec& spec : corpus) {
            for (long d = spec.delta(); d <= spec.default_scan_limit(); ++d) {
                if (!basis_nonempty(d, spec.weights())) continue;
                ComponentMatrix m = build_multi(spec, d);
                std::size_t t = rank_ff(m.matrix());
                if (count_minors(m.rows(), m.cols(), t, kDefaultMinorBudget) >
                    kDefaultMinorBudget) {
                    ++skipped;
                    continue;
                }
                Lemma3Report report = verify_lemma3(spec, d);
                if (!report.all_pass)
                    return {false, "containment failed at degree " + std::to_string(d)};
                ++ran;
            }
        }
        return {true, std::to_string(ran) + " degree checks, " +
                          std::to_string(skipped) + " beyond the minor budget"};
    });

    run_criterion(4, "corollary: top degree is R_0/c(I)", 120.0, [&]() -> Outcome {
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            if (top_component_iso_check(corpus[i]) != Tri::Yes)
                return {false, "failed at spec " + std::to_string(i)};
        }
        return {true, std::to_string(corpus.size()) + " specs"};
    });

    run_criterion(5, "corollary: gap-free scans", 60.0, [&]() -> Outcome {
        std::size_t scanned = 0;
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const auto& scan =
                scans[i].empty() ? gap_scan(corpus[i], corpus[i].default_scan_limit())
                                 : scans[i];
            if (scan.empty()) return {false, "empty scan"};
            for (const auto& [d, v] : scan) {
                if (v != scan.front().second)
                    return {false, "verdict flips at spec " + std::to_string(i)};
            }
            ++scanned;
        }
        return {true, std::to_string(scanned) + " scans constant"};
    });

    run_criterion(6, "weak monomial conjecture instances", 120.0, [&]() -> Outcome {
        std::mt19937 rng(13572468);
        const CoefficientRing ZZ = CoefficientRing::integers();
        std::size_t components = 0;
        for (auto [s, t] : std::vector<std::pair<unsigned, unsigned>>{
                 {2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
            WeakMCInstance inst = weak_mc_instance(s, t);
            R0Ideal content = content_ideal(inst.spec);
            if (is_unit_ideal(content) != Tri::Yes)
                return {false, "content not unit at s=" + std::to_string(s)};
            // content == (1, A_1, ..., A_s), both inclusions.
            std::vector<R0Element> expected_gens = {R0Element::from_int(inst.spec.coeff(), 1)};
            for (unsigned i = 1; i <= s; ++i)
                expected_gens.push_back(
                    R0Element::variable(inst.spec.coeff(), "A" + std::to_string(i)));
            R0Ideal expected(inst.spec.coeff(), expected_gens);
            for (const auto& g : content.generators())
                if (ideal_member(g, expected) != Tri::Yes)
                    return {false, "content generator outside (1, A_i)"};
            for (const auto& g : expected.generators())
                if (ideal_member(g, content) != Tri::Yes)
                    return {false, "(1, A_i) generator outside the content"};
            if (vanishes(inst.spec).vanishes != Tri::Yes)
                return {false, "verdict not Vanishes at s=" + std::to_string(s)};
            for (int k = 0; k < 5; ++k) {
                std::vector<Rat> values;
                for (unsigned i = 0; i < s; ++i)
                    values.emplace_back(static_cast<long>(rng() % 19) - 9);
                GradedRingSpec sz = inst.spec.specialized(values, ZZ);
                for (long d = sz.delta(); d <= sz.default_scan_limit(); ++d) {
                    if (!basis_nonempty(d, sz.weights())) continue;
                    if (component(sz, d).kind != CokerKind::ZeroModule)
                        return {false, "specialization fails at d=" + std::to_string(d)};
                    ++components;
                }
            }
        }
        return {true, "4 instances, 20 specializations, " +
                          std::to_string(components) + " components"};
    });

    run_criterion(7, "char-p certificates", 10.0, [&]() -> Outcome {
        CoefficientRing f2x =
            CoefficientRing::polynomial(CoefficientRing::prime_field(2), {"x"});
        CoefficientRing f2xy =
            CoefficientRing::polynomial(CoefficientRing::prime_field(2), {"x", "y"});
        CoefficientRing f3x =
            CoefficientRing::polynomial(CoefficientRing::prime_field(3), {"x"});
        R0Element x2 = R0Element::variable(f2x, "x");
        auto c1 = charp_vanishing_search({x2, x2}, 3, 3, true);
        if (!c1 || c1->alpha != 1 || c1->beta != 1)
            return {false, "(x, x) over GF(2) did not yield (1, 1)"};
        if (!verify_certificate({x2, x2}, *c1))
            return {false, "(x, x) witness failed to re-verify"};

        R0Element x = R0Element::variable(f2xy, "x");
        R0Element y = R0Element::variable(f2xy, "y");
        if (charp_vanishing_search({x, y}, 5, 5))
            return {false, "(x, y) over GF(2) found a spurious certificate"};

        R0Element x3 = R0Element::variable(f3x, "x");
        auto c3 = charp_vanishing_search({x3, x3 + x3 * x3}, 4, 4, true);
        if (!c3) return {false, "(x, x + x^2) over GF(3) found nothing"};
        if (!verify_certificate({x3, x3 + x3 * x3}, *c3))
            return {false, "(x, x + x^2) witness failed to re-verify"};
        return {true, "2 certificates re-verified, 1 exhaustive NotFound"};
    });

    run_criterion(8, "exact linear algebra oracles", 120.0, [&]() -> Outcome {
        std::size_t rank_checks = 0, snf_checks = 0;
        // Presentation matrices from the corpus, capped at 5 x 5.
        for (const GradedRingSpec& spec : corpus) {
            for (long d = spec.delta(); d <= spec.default_scan_limit(); ++d) {
                if (!basis_nonempty(d, spec.weights())) continue;
                ComponentMatrix m = build_multi(spec, d);
                if (m.rows() == 0 || m.rows() > 5 || m.cols() == 0 || m.cols() > 5)
                    continue;
                if (rank_ff(m.matrix()) != exhaustive_rank(m.matrix()))
                    return {false, "rank mismatch on a corpus matrix"};
                ++rank_checks;
                if (spec.coeff().kind() == RingKind::Integers) {
                    SNFResult snf = smith_normal_form(m.matrix());
                    Int prod = 1;
                    for (std::size_t k = 1; k <= snf.invariant_factors.size(); ++k) {
                        prod *= snf.invariant_factors[k - 1];
                        if (prod != gcd_of_k_minors(m.matrix(), k))
                            return {false, "invariant factor mismatch"};
                    }
                    ++snf_checks;
                }
            }
        }
        // Dense random integer matrices for coverage.
        std::mt19937 rng(555777);
        const CoefficientRing ZZ = CoefficientRing::integers();
        for (int i = 0; i < 150; ++i) {
            std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
            R0Matrix m(ZZ, r, c);
            for (std::size_t a = 0; a < r; ++a)
                for (std::size_t b = 0; b < c; ++b)
                    m.at(a, b) =
                        R0Element::from_int(ZZ, static_cast<long>(rng() % 11) - 5);
            if (rank_ff(m) != exhaustive_rank(m)) return {false, "random rank mismatch"};
            ++rank_checks;
            SNFResult snf = smith_normal_form(m);
            Int prod = 1;
            for (std::size_t k = 1; k <= snf.invariant_factors.size(); ++k) {
                prod *= snf.invariant_factors[k - 1];
                if (prod != gcd_of_k_minors(m, k))
                    return {false, "random invariant factor mismatch"};
            }
            ++snf_checks;
        }
        return {true, std::to_string(rank_checks) + " rank checks, " +
                          std::to_string(snf_checks) + " Smith form checks"};
    });

    run_criterion(9, "CLI golden reports", 60.0, [&]() -> Outcome {
        const struct {
            std::string args;
            std::string golden;
        } cases[] = {
            {"component --degree 2 --machine " + std::string(LCT_PROBLEM_DIR) +
                 "/z_23.lct",
             "component_z23.txt"},
            {"component --degree 2 --machine " + std::string(LCT_PROBLEM_DIR) +
                 "/qxy.lct",
             "component_qxy.txt"},
            {"weak-mc --s 2 --t 1 --machine", "weak_mc_2_1.txt"},
        };
        for (const auto& c : cases) {
            int code1 = 0, code2 = 0;
            std::string out1 = run_cli(c.args, &code1);
            std::string out2 = run_cli(c.args, &code2);
            if (code1 != 0 || code2 != 0) return {false, "nonzero exit for " + c.args};
            if (out1 != out2) return {false, "output differs across runs"};
            if (out1 != slurp(std::string(LCT_GOLDEN_DIR) + "/" + c.golden))
                return {false, "output differs from golden " + c.golden};
        }
        return {true, "3 reports byte-identical"};
    });

    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    else std::printf("all 9 criteria passed\n");
    return failures;
}
