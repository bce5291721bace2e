#include "lct/cohomology.hpp"

#include <sstream>

namespace lct {

const char* to_string(CokerKind k) {
    switch (k) {
    case CokerKind::ZeroModule: return "zero";
    case CokerKind::FreeOfRank: return "free";
    case CokerKind::IntegerInvariantFactors: return "invariant-factors";
    case CokerKind::MinorIdeal: return "minor-ideal";
    default: return "undecided";
    }
}

ComponentPresentation component(const GradedRingSpec& spec, long d,
                                std::size_t minor_budget) {
    ComponentMatrix m = build_multi(spec, d);
    ComponentPresentation out{d, m, CokerKind::Undecided, 0, {}, std::nullopt,
                              Tri::Undecided};
    if (m.rows() == 0) {
        out.kind = CokerKind::ZeroModule;
        out.vanishes = Tri::Yes;
        return out;
    }
    if (spec.generators().empty()) {
        out.kind = CokerKind::FreeOfRank;
        out.free_rank = m.rows();
        out.vanishes = Tri::No;
        return out;
    }
    const CoefficientRing& ring = spec.coeff();
    if (!ring.is_polynomial()) {
        if (ring.kind() == RingKind::Integers) {
            SNFResult snf = smith_normal_form(m.matrix());
            out.free_rank = snf.coker_free_rank;
            for (const Int& f : snf.invariant_factors)
                if (f != 1) out.invariant_factors.push_back(f);
            if (out.free_rank == 0 && out.invariant_factors.empty()) {
                out.kind = CokerKind::ZeroModule;
                out.vanishes = Tri::Yes;
            } else if (out.invariant_factors.empty()) {
                out.kind = CokerKind::FreeOfRank;
                out.vanishes = Tri::No;
            } else {
                out.kind = CokerKind::IntegerInvariantFactors;
                out.vanishes = Tri::No;
            }
        } else {
            std::size_t rank = rank_ff(m.matrix());
            out.free_rank = m.rows() - rank;
            out.kind = out.free_rank == 0 ? CokerKind::ZeroModule : CokerKind::FreeOfRank;
            out.vanishes = out.free_rank == 0 ? Tri::Yes : Tri::No;
        }
        return out;
    }

    CokernelDecision dec = cokernel_is_zero(m.matrix(), minor_budget);
    out.vanishes = dec.verdict;
    if (dec.verdict == Tri::Yes) {
        out.kind = CokerKind::ZeroModule;
        return out;
    }
    out.kind = dec.verdict == Tri::No ? CokerKind::MinorIdeal : CokerKind::Undecided;
    out.minor_ideal = dec.minor_ideal;
    if (!out.minor_ideal) {
        // Attach the maximal-minor ideal to the report when affordable; the
        // budget covers determinant work, not just the submatrix count.
        std::size_t r = rank_ff(m.matrix());
        std::size_t count = count_minors(m.rows(), m.cols(), r, minor_budget);
        if (count <= minor_budget && count * r * r * r <= minor_budget)
            out.minor_ideal = minor_ideal(m.matrix(), r, minor_budget).minors;
    }
    return out;
}

SupportReport vanishes(const GradedRingSpec& spec) {
    R0Ideal content = content_ideal(spec);
    Tri unit = is_unit_ideal(content);
    std::ostringstream desc;
    desc << "V(" << content.to_string() << "R + R_+)";
    return SupportReport{std::move(content), unit, desc.str()};
}

std::vector<std::pair<long, Tri>> gap_scan(const GradedRingSpec& spec, long d_max,
                                           std::size_t minor_budget) {
    if (d_max < spec.delta())
        throw Error("scan limit below delta = " + std::to_string(spec.delta()));
    std::vector<std::pair<long, Tri>> out;
    for (long d = spec.delta(); d <= d_max; ++d) {
        if (!basis_nonempty(d, spec.weights())) continue;
        out.emplace_back(d, component(spec, d, minor_budget).vanishes);
    }
    return out;
}

Tri top_component_iso_check(const GradedRingSpec& spec) {
    ComponentMatrix m = build_multi(spec, spec.delta());
    if (m.rows() != 1)
        throw Error("top component basis is not a single monomial");
    std::vector<R0Element> entry_gens;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m.entry(0, j).is_zero()) entry_gens.push_back(m.entry(0, j));
    R0Ideal entries(spec.coeff(), std::move(entry_gens));
    R0Ideal content = content_ideal(spec);

    Tri verdict = Tri::Yes;
    for (const auto& g : entries.generators())
        verdict = tri_all(verdict, ideal_member(g, content));
    for (const auto& a : content.generators())
        verdict = tri_all(verdict, ideal_member(a, entries));
    return verdict;
}

Lemma2Report verify_lemma2(const SPolynomial& f, const GradedRingSpec& spec,
                           long d_lo, long d_hi) {
    Lemma2Report report{{}, true};
    const Exponents lambda0 = f.lex_min_exponent();
    for (long d = d_lo; d <= d_hi; ++d) {
        if (!basis_nonempty(d, spec.weights())) continue;
        ComponentMatrix m = build_single(f, d, spec);
        if (m.rows() == 0) continue;
        Lemma2Item item;
        item.d = d;
        item.basis_size = m.rows();
        item.rank = rank_ff(m.matrix());
        // The constructive witness: columns U^{nu - lambda_0}.
        for (const auto& nu : m.row_basis().elements()) {
            std::vector<long> shifted = nu.lambda();
            for (std::size_t i = 0; i < shifted.size(); ++i)
                shifted[i] -= static_cast<long>(lambda0[i]);
            InverseMonomial target(std::move(shifted));
            bool found = false;
            for (std::size_t j = 0; j < m.col_basis().size(); ++j) {
                if (m.col_basis()[j].mono == target) {
                    item.witness_columns.push_back(j);
                    found = true;
                    break;
                }
            }
            if (!found) throw Error("witness column missing from the basis");
        }
        item.pass = item.rank == item.basis_size;
        if (!item.pass) report.all_pass = false;
        report.items.push_back(std::move(item));
    }
    return report;
}

Lemma3Report verify_lemma3(const GradedRingSpec& spec, long d,
                           std::size_t minor_budget) {
    ComponentMatrix m = build_multi(spec, d);
    std::size_t t = rank_ff(m.matrix());
    MinorIdealResult mi = minor_ideal(m.matrix(), t, minor_budget);
    Lemma3Report report{t, mi.minors, {}, true};
    R0Ideal content = content_ideal(spec);
    for (const auto& a : content.generators()) {
        Tri r = radical_member(a, mi.minors);
        if (r != Tri::Yes) report.all_pass = false;
        report.items.push_back({a.to_string(), r});
    }
    return report;
}

WeakMCInstance weak_mc_instance(unsigned s, unsigned t) {
    if (s < 2)
        throw Error("weak monomial conjecture instance needs s >= 2");
    if (t < 1)
        throw Error("weak monomial conjecture instance needs t >= 1");
    std::vector<std::string> a_names, x_names;
    for (unsigned i = 1; i <= s; ++i) {
        a_names.push_back("A" + std::to_string(i));
        x_names.push_back("X" + std::to_string(i));
    }
    CoefficientRing ring = CoefficientRing::polynomial(CoefficientRing::integers(),
                                                       a_names);
    // F = (X_1...X_s)^t - sum A_i X_i^{st}
    SPolynomial f = SPolynomial::monomial(s, Exponents(s, t),
                                          R0Element::from_int(ring, 1));
    for (unsigned i = 0; i < s; ++i) {
        Exponents e(s, 0);
        e[i] = s * t;
        f = f - SPolynomial::monomial(s, e, R0Element::variable(ring, a_names[i]));
    }
    GradedRingSpec spec(ring, std::vector<unsigned>(s, 1), {f}, x_names, {"F"});
    if (spec.generator_degree(0) != static_cast<long>(s) * t)
        throw Error("weak MC generator has the wrong degree");

    // The content must agree with (1, A_1, ..., A_s).
    R0Ideal content = content_ideal(spec);
    std::vector<R0Element> expected_gens;
    expected_gens.push_back(R0Element::from_int(ring, 1));
    for (const auto& name : a_names)
        expected_gens.push_back(R0Element::variable(ring, name));
    R0Ideal expected(ring, std::move(expected_gens));
    for (const auto& g : content.generators())
        if (ideal_member(g, expected) != Tri::Yes)
            throw Error("weak MC content mismatch");
    for (const auto& g : expected.generators())
        if (ideal_member(g, content) != Tri::Yes)
            throw Error("weak MC content mismatch");
    return WeakMCInstance{s, t, std::move(spec)};
}

} // namespace lct
