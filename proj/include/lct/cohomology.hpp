#pragma once

#include "lct/presentation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lct {

enum class CokerKind {
    ZeroModule,
    FreeOfRank,
    IntegerInvariantFactors,
    MinorIdeal,
    Undecided,
};
const char* to_string(CokerKind k);

// H^s_{R_+}(R)_{-d} presented as Coker M(f_1..f_r; d), classified per the
// coefficient-ring kind.
struct ComponentPresentation {
    long d;
    ComponentMatrix matrix;
    CokerKind kind;
    std::size_t free_rank = 0;              // FreeOfRank
    std::vector<Int> invariant_factors;     // nontrivial factors over ZZ
    std::optional<R0Ideal> minor_ideal;     // maximal-minor ideal when computed
    Tri vanishes = Tri::Undecided;          // Coker = 0?
};

struct SupportReport {
    R0Ideal content;
    Tri vanishes;
    std::string support_description; // V(c(I)R + R_+) with generators listed
};

ComponentPresentation component(const GradedRingSpec& spec, long d,
                                std::size_t minor_budget = kDefaultMinorBudget);

// The content criterion: H = 0 iff c(I) = R_0; support V(c(I)R + R_+).
SupportReport vanishes(const GradedRingSpec& spec);

// Component-wise vanishing for every d in [delta, d_max] with nonempty B(d);
// each verdict is computed by linear algebra, never inferred.
std::vector<std::pair<long, Tri>> gap_scan(const GradedRingSpec& spec, long d_max,
                                           std::size_t minor_budget = kDefaultMinorBudget);

// Coker M(...; delta) isomorphic to R_0/c(I): the matrix entries at the top
// degree must generate exactly c(I) (two-sided membership of generators).
Tri top_component_iso_check(const GradedRingSpec& spec);

struct Lemma2Item {
    long d;
    std::size_t basis_size;
    std::size_t rank;
    std::vector<std::size_t> witness_columns; // columns U^{nu - lambda_0}
    bool pass;
};
struct Lemma2Report {
    std::vector<Lemma2Item> items;
    bool all_pass;
};

// rank M(f; d) = |B(d)| for each d in [d_lo, d_hi] with nonempty basis.
Lemma2Report verify_lemma2(const SPolynomial& f, const GradedRingSpec& spec,
                           long d_lo, long d_hi);

struct Lemma3Item {
    std::string generator;
    Tri in_radical;
};
struct Lemma3Report {
    std::size_t t;
    R0Ideal minor_ideal;
    std::vector<Lemma3Item> items;
    bool all_pass; // every item Yes
};

// c(I) contained in the radical of the rank-sized minor ideal at degree d.
Lemma3Report verify_lemma3(const GradedRingSpec& spec, long d,
                           std::size_t minor_budget = kDefaultMinorBudget);

// The graded ring ZZ[A_1..A_s][X_1..X_s]/(F) with F = (X_1...X_s)^t - sum
// A_i X_i^{st}; weights all 1. Requires s >= 2 (for s = 1 the two monomials
// coincide and the stated content collapses), t >= 1.
struct WeakMCInstance {
    unsigned s;
    unsigned t;
    GradedRingSpec spec;
};
WeakMCInstance weak_mc_instance(unsigned s, unsigned t);

} // namespace lct
