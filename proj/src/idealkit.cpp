#include "lct/idealkit.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace lct {

const char* to_string(Tri t) {
    switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    default: return "undecided";
    }
}

Tri tri_all(Tri a, Tri b) {
    if (a == Tri::No || b == Tri::No) return Tri::No;
    if (a == Tri::Undecided || b == Tri::Undecided) return Tri::Undecided;
    return Tri::Yes;
}

R0Ideal::R0Ideal(CoefficientRing ring) : ring_(std::move(ring)) {}

R0Ideal::R0Ideal(CoefficientRing ring, std::vector<R0Element> gens)
    : ring_(std::move(ring)) {
    std::set<R0Element> seen;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.ring() != ring_) throw RingMismatch("ideal generator over the wrong ring");
        if (seen.insert(g).second) gens_.push_back(std::move(g));
    }
}

std::string R0Ideal::to_string() const {
    if (gens_.empty()) return "(0)";
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) out << ", ";
        out << gens_[i].to_string();
    }
    out << ")";
    return out.str();
}

R0Ideal content_poly(const SPolynomial& f) {
    std::vector<R0Element> gens;
    for (const auto& [e, c] : f.terms()) gens.push_back(c);
    return R0Ideal(f.ring(), std::move(gens));
}

R0Ideal content_ideal(const GradedRingSpec& spec) {
    std::vector<R0Element> gens;
    for (const auto& f : spec.generators()) {
        for (const auto& [e, c] : f.terms()) gens.push_back(c);
    }
    return R0Ideal(spec.coeff(), std::move(gens));
}

// ---------------------------------------------------------------------------
// Groebner machinery (polynomial rings with field scalars, lex order)

namespace {

Rat field_div(const Rat& a, const Rat& b, const CoefficientRing& ring) {
    if (ring.scalar_kind() == RingKind::Rationals) return a / b;
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), b.get_num().get_mpz_t(), ring.prime().get_mpz_t()) == 0)
        throw DivisionError("non-invertible scalar in GF(p)");
    return a * Rat(inv);
}

void require_field_poly(const CoefficientRing& ring, const char* who) {
    if (!ring.is_polynomial() || !ring.scalars_form_field())
        throw RingMismatch(std::string(who) + " needs a polynomial ring over QQ or GF(p)");
}

bool divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponents exp_sub(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Exponents exp_lcm(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

long exp_total(const Exponents& a) {
    long t = 0;
    for (unsigned x : a) t += x;
    return t;
}

R0Element make_monic(const R0Element& f) {
    if (f.is_zero()) return f;
    return f.scaled(field_div(Rat(1), f.leading_term().second, f.ring()));
}

struct PairEntry {
    std::size_t i, j;
    Exponents lcm;
};

// Buchberger with the normal selection strategy (smallest lcm first) and the
// coprime-leading-term criterion. Optionally tracks each basis element as a
// combination of the input generators.
struct GBEngine {
    CoefficientRing ring;
    bool track;
    std::vector<R0Element> basis;
    std::vector<std::vector<R0Element>> reps;

    explicit GBEngine(CoefficientRing r, bool track_) : ring(std::move(r)), track(track_) {}

    // Reduce p fully against the current basis; when tracking, rep is the
    // running representation of the *consumed* part and is updated so that
    // input == remainder + sum rep_j * gen_j stays valid.
    R0Element reduce(R0Element p, std::vector<R0Element>* rep) const {
        R0Element rem(ring);
        while (!p.is_zero()) {
            auto [le, lc] = p.leading_term();
            bool reduced = false;
            for (std::size_t k = 0; k < basis.size(); ++k) {
                auto [be, bc] = basis[k].leading_term();
                if (!divides(be, le)) continue;
                Rat q = field_div(lc, bc, ring);
                Exponents shift = exp_sub(le, be);
                p -= basis[k].times_monomial(shift, q);
                if (rep) {
                    for (std::size_t j = 0; j < rep->size(); ++j)
                        (*rep)[j] += reps[k][j].times_monomial(shift, q);
                }
                reduced = true;
                break;
            }
            if (!reduced) {
                R0Element t = R0Element::monomial(ring, le, lc);
                rem += t;
                p -= t;
            }
        }
        return rem;
    }

    void run(const std::vector<R0Element>& gens) {
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (gens[i].is_zero()) continue;
            basis.push_back(gens[i]);
            if (track) {
                std::vector<R0Element> rep(gens.size(), R0Element(ring));
                rep[i] = R0Element::constant(ring, 1);
                reps.push_back(std::move(rep));
            }
        }
        std::vector<PairEntry> pairs;
        auto push_pairs = [&](std::size_t n) {
            for (std::size_t i = 0; i < n; ++i)
                pairs.push_back({i, n, exp_lcm(basis[i].leading_term().first,
                                               basis[n].leading_term().first)});
        };
        for (std::size_t n = 1; n < basis.size(); ++n) push_pairs(n);

        while (!pairs.empty()) {
            // Normal strategy: smallest lcm by total degree, then lex.
            std::size_t best = 0;
            for (std::size_t k = 1; k < pairs.size(); ++k) {
                long ta = exp_total(pairs[k].lcm), tb = exp_total(pairs[best].lcm);
                if (ta < tb || (ta == tb && lex_compare(pairs[k].lcm, pairs[best].lcm) < 0))
                    best = k;
            }
            PairEntry pe = pairs[best];
            pairs.erase(pairs.begin() + static_cast<long>(best));

            auto [ei, ci] = basis[pe.i].leading_term();
            auto [ej, cj] = basis[pe.j].leading_term();
            // Coprime leading monomials reduce to zero.
            bool coprime = true;
            for (std::size_t k = 0; k < ei.size(); ++k)
                if (ei[k] && ej[k]) { coprime = false; break; }
            if (coprime) continue;

            R0Element s = basis[pe.i].times_monomial(exp_sub(pe.lcm, ei),
                                                     field_div(Rat(1), ci, ring)) -
                          basis[pe.j].times_monomial(exp_sub(pe.lcm, ej),
                                                     field_div(Rat(1), cj, ring));
            std::vector<R0Element> rep;
            if (track) {
                rep.assign(reps[pe.i].size(), R0Element(ring));
                for (std::size_t j = 0; j < rep.size(); ++j) {
                    rep[j] = reps[pe.i][j].times_monomial(exp_sub(pe.lcm, ei),
                                                          field_div(Rat(1), ci, ring)) -
                             reps[pe.j][j].times_monomial(exp_sub(pe.lcm, ej),
                                                          field_div(Rat(1), cj, ring));
                }
            }
            // rem = s - sum consumed, with "consumed" folded into rep.
            std::vector<R0Element> consumed;
            if (track) consumed.assign(rep.size(), R0Element(ring));
            R0Element rem = reduce(std::move(s), track ? &consumed : nullptr);
            if (rem.is_zero()) continue;
            // Monic basis elements keep rational coefficients small.
            Rat inv = field_div(Rat(1), rem.leading_term().second, ring);
            if (track) {
                for (std::size_t j = 0; j < rep.size(); ++j)
                    rep[j] = (rep[j] - consumed[j]).scaled(inv);
                reps.push_back(rep);
            }
            basis.push_back(make_monic(rem));
            push_pairs(basis.size() - 1);
        }
    }
};

std::vector<R0Element> reduced_basis(std::vector<R0Element> basis) {
    // Minimalize: drop elements whose leading monomial is divisible by
    // another survivor's.
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!keep[i]) continue;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j || !keep[j]) continue;
            const Exponents& li = basis[i].leading_term().first;
            const Exponents& lj = basis[j].leading_term().first;
            if (divides(lj, li) && (lex_compare(li, lj) != 0 || j < i)) {
                keep[i] = false;
                break;
            }
        }
    }
    std::vector<R0Element> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) minimal.push_back(make_monic(basis[i]));

    // Tail-reduce each element against the others.
    std::vector<R0Element> out;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<R0Element> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        R0Element reduced = normal_form(minimal[i], others);
        if (!reduced.is_zero()) out.push_back(make_monic(reduced));
    }
    std::sort(out.begin(), out.end(), [](const R0Element& a, const R0Element& b) {
        return lex_compare(a.leading_term().first, b.leading_term().first) > 0;
    });
    return out;
}

} // namespace

R0Element normal_form(const R0Element& g, const std::vector<R0Element>& basis) {
    if (g.is_zero()) return g;
    require_field_poly(g.ring(), "normal_form");
    GBEngine engine(g.ring(), false);
    for (const auto& b : basis)
        if (!b.is_zero()) engine.basis.push_back(b);
    return engine.reduce(g, nullptr);
}

std::vector<R0Element> groebner(const R0Ideal& J) {
    require_field_poly(J.ring(), "groebner");
    if (J.is_zero_ideal()) return {};
    // Interreduce the input first; minor ideals arrive with thousands of
    // redundant generators and would drown the pair queue.
    GBEngine seed(J.ring(), false);
    for (const auto& g : J.generators()) {
        R0Element r = seed.reduce(g, nullptr);
        if (!r.is_zero()) seed.basis.push_back(make_monic(r));
    }
    GBEngine engine(J.ring(), false);
    engine.run(seed.basis);
    return reduced_basis(std::move(engine.basis));
}

TrackedBasis groebner_tracked(const CoefficientRing& ring,
                              const std::vector<R0Element>& gens) {
    require_field_poly(ring, "groebner_tracked");
    GBEngine engine(ring, true);
    engine.run(gens);
    return TrackedBasis{std::move(engine.basis), std::move(engine.reps)};
}

std::optional<std::vector<R0Element>> member_with_cofactors(
    const R0Element& g, const std::vector<R0Element>& gens) {
    require_field_poly(g.ring(), "member_with_cofactors");
    const CoefficientRing& ring = g.ring();
    if (g.is_zero()) return std::vector<R0Element>(gens.size(), R0Element(ring));
    TrackedBasis tb = groebner_tracked(ring, gens);
    if (tb.basis.empty()) return std::nullopt;
    GBEngine engine(ring, true);
    engine.basis = tb.basis;
    engine.reps = tb.reps;
    std::vector<R0Element> cof(gens.size(), R0Element(ring));
    R0Element rem = engine.reduce(g, &cof);
    if (!rem.is_zero()) return std::nullopt;
    return cof;
}

// ---------------------------------------------------------------------------
// Decision procedures

namespace {

Int generator_gcd(const R0Ideal& J) {
    Int g = 0;
    for (const auto& x : J.generators()) {
        if (!x.is_constant()) throw RingMismatch("non-constant element over ZZ");
        Int num = x.constant_value().get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    }
    return g;
}

// Deterministic evaluation points for ZZ[A...] heuristics.
std::vector<std::vector<Rat>> sample_points(std::size_t nvars) {
    static const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
    std::vector<std::vector<Rat>> pts;
    for (long v : {0L, 1L, -1L, 2L, 3L}) pts.emplace_back(nvars, Rat(v));
    std::vector<Rat> mixed, shifted;
    for (std::size_t i = 0; i < nvars; ++i) {
        mixed.emplace_back(primes[i % 10]);
        shifted.emplace_back(-primes[(i + 3) % 10]);
    }
    pts.push_back(mixed);
    pts.push_back(shifted);
    // A few fixed pseudo-random points.
    unsigned long state = 0x9e3779b97f4a7c15ULL;
    for (int k = 0; k < 5; ++k) {
        std::vector<Rat> p;
        for (std::size_t i = 0; i < nvars; ++i) {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            p.emplace_back(static_cast<long>((state >> 33) % 41) - 20);
        }
        pts.push_back(std::move(p));
    }
    return pts;
}

Int eval_gcd_at(const R0Ideal& J, const std::vector<Rat>& pt) {
    Int g = 0;
    const CoefficientRing zz = CoefficientRing::integers();
    for (const auto& x : J.generators()) {
        Int num = x.specialized(pt, zz).constant_value().get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
        if (g == 1) return g;
    }
    return g;
}

// Membership of a in the radical of (g) in ZZ, by gcd stripping.
bool int_radical_member(const Int& a, const Int& g) {
    if (a == 0) return true;
    Int g0 = abs(g);
    if (g0 == 0) return false; // nonzero a against the zero ideal
    Int aa = abs(a);
    while (true) {
        Int h;
        mpz_gcd(h.get_mpz_t(), g0.get_mpz_t(), aa.get_mpz_t());
        if (h == 1) break;
        mpz_divexact(g0.get_mpz_t(), g0.get_mpz_t(), h.get_mpz_t());
    }
    return g0 == 1;
}

// Heuristic division over ZZ[A...]: multivariate reduction where every
// coefficient step must divide exactly. Empty remainder certifies
// membership; anything else proves nothing.
bool zz_poly_division_certificate(const R0Element& g, const R0Ideal& J) {
    R0Element work = g;
    while (!work.is_zero()) {
        auto [le, lc] = work.leading_term();
        bool reduced = false;
        for (const auto& h : J.generators()) {
            auto [he, hc] = h.leading_term();
            if (!divides(he, le)) continue;
            if (!mpz_divisible_p(lc.get_num().get_mpz_t(), hc.get_num().get_mpz_t()))
                continue;
            Int q;
            mpz_divexact(q.get_mpz_t(), lc.get_num().get_mpz_t(), hc.get_num().get_mpz_t());
            work -= h.times_monomial(exp_sub(le, he), Rat(q));
            reduced = true;
            break;
        }
        if (!reduced) return false;
    }
    return true;
}

std::string fresh_var_name(const CoefficientRing& ring) {
    auto taken = [&](const std::string& n) { return ring.var_index(n) >= 0; };
    if (!taken("t")) return "t";
    for (int k = 0;; ++k) {
        std::string n = "t" + std::to_string(k);
        if (!taken(n)) return n;
    }
}

} // namespace

Tri is_unit_ideal(const R0Ideal& J) {
    const CoefficientRing& ring = J.ring();
    if (J.is_zero_ideal()) return Tri::No;
    if (!ring.is_polynomial()) {
        switch (ring.kind()) {
        case RingKind::Integers: return generator_gcd(J) == 1 ? Tri::Yes : Tri::No;
        default: return Tri::Yes; // fields: some nonzero generator exists
        }
    }
    if (ring.scalars_form_field()) {
        for (const auto& b : groebner(J))
            if (b.is_constant()) return Tri::Yes;
        return Tri::No;
    }
    // ZZ[A...]: sound one-sided certificates, Undecided otherwise.
    Int cg = 0;
    for (const auto& g : J.generators()) {
        if (!g.is_constant()) continue;
        Int num = g.constant_value().get_num();
        mpz_gcd(cg.get_mpz_t(), cg.get_mpz_t(), num.get_mpz_t());
    }
    if (cg == 1) return Tri::Yes;
    for (const auto& g : J.generators()) {
        // g with unit constant term whose remaining terms all lie in the
        // ideal exhibits 1 as a combination.
        const Exponents zero(ring.nvars(), 0);
        auto it = g.terms().find(zero);
        if (it == g.terms().end()) continue;
        if (it->second != 1 && it->second != -1) continue;
        bool rest_ok = true;
        for (const auto& [e, c] : g.terms()) {
            if (e == zero) continue;
            R0Element term = R0Element::monomial(ring, e, c);
            bool covered = false;
            for (const auto& h : J.generators()) {
                if (h == g) continue;
                if (term.try_exact_div(h)) { covered = true; break; }
            }
            if (!covered) { rest_ok = false; break; }
        }
        if (rest_ok) return Tri::Yes;
    }
    for (const auto& pt : sample_points(ring.nvars())) {
        Int g = eval_gcd_at(J, pt);
        if (g != 1) return Tri::No; // the evaluation lands in a proper ideal
    }
    return Tri::Undecided;
}

Tri ideal_member(const R0Element& g, const R0Ideal& J) {
    if (g.ring() != J.ring()) throw RingMismatch("membership across different rings");
    if (g.is_zero()) return Tri::Yes;
    const CoefficientRing& ring = J.ring();
    if (!ring.is_polynomial()) {
        switch (ring.kind()) {
        case RingKind::Integers: {
            if (J.is_zero_ideal()) return Tri::No; // g nonzero
            Int d = generator_gcd(J);
            return mpz_divisible_p(g.constant_value().get_num().get_mpz_t(),
                                   d.get_mpz_t())
                       ? Tri::Yes
                       : Tri::No;
        }
        default:
            return J.is_zero_ideal() ? Tri::No : Tri::Yes;
        }
    }
    if (ring.scalars_form_field()) {
        if (J.is_zero_ideal()) return Tri::No;
        return normal_form(g, groebner(J)).is_zero() ? Tri::Yes : Tri::No;
    }
    // ZZ[A...]
    if (J.is_zero_ideal()) return Tri::No;
    if (zz_poly_division_certificate(g, J)) return Tri::Yes;
    for (const auto& pt : sample_points(ring.nvars())) {
        Int d = eval_gcd_at(J, pt);
        Int v = g.specialized(pt, CoefficientRing::integers()).constant_value().get_num();
        if (d == 0 ? v != 0 : mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()) == 0)
            return Tri::No;
    }
    return Tri::Undecided;
}

Tri radical_member(const R0Element& a, const R0Ideal& J) {
    if (a.ring() != J.ring()) throw RingMismatch("membership across different rings");
    if (a.is_zero()) return Tri::Yes;
    const CoefficientRing& ring = J.ring();
    if (!ring.is_polynomial()) {
        switch (ring.kind()) {
        case RingKind::Integers:
            return int_radical_member(a.constant_value().get_num(), generator_gcd(J))
                       ? Tri::Yes
                       : Tri::No;
        default:
            return J.is_zero_ideal() ? Tri::No : Tri::Yes;
        }
    }
    if (ring.scalars_form_field()) {
        if (J.is_zero_ideal()) return Tri::No; // a nonzero, R_0 a domain
        // Large generator sets (minor ideals) first collapse to their
        // reduced basis; same ideal, far fewer generators.
        std::vector<R0Element> base = J.generators().size() > 8
                                          ? groebner(J)
                                          : J.generators();
        // Rabinowitsch: 1 in J + (1 - t*a) with a fresh last variable t.
        CoefficientRing ext = ring.extended(fresh_var_name(ring));
        std::vector<R0Element> gens;
        for (const auto& g : base) gens.push_back(g.lifted(ext));
        Exponents te(ext.nvars(), 0);
        te[ext.nvars() - 1] = 1;
        R0Element one = R0Element::constant(ext, 1);
        gens.push_back(one - a.lifted(ext).times_monomial(te, Rat(1)));
        return is_unit_ideal(R0Ideal(ext, std::move(gens)));
    }
    // ZZ[A...]: bounded power search for Yes, evaluation for No.
    R0Element p = a;
    for (int k = 1; k <= 4; ++k) {
        if (zz_poly_division_certificate(p, J)) return Tri::Yes;
        p = p * a;
    }
    const CoefficientRing zz = CoefficientRing::integers();
    for (const auto& pt : sample_points(ring.nvars())) {
        Int d = eval_gcd_at(J, pt);
        Int v = a.specialized(pt, zz).constant_value().get_num();
        if (!int_radical_member(v, d)) return Tri::No;
    }
    return Tri::Undecided;
}

} // namespace lct
