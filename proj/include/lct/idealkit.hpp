#pragma once

#include "lct/graded_ring.hpp"

#include <optional>
#include <vector>

namespace lct {

enum class Tri { Yes, No, Undecided };
const char* to_string(Tri t);
// All Yes -> Yes; any No -> No; otherwise Undecided.
Tri tri_all(Tri a, Tri b);

// Finitely generated ideal of R_0. Zero generators are dropped and
// duplicates removed; an empty list is the zero ideal.
class R0Ideal {
public:
    explicit R0Ideal(CoefficientRing ring);
    R0Ideal(CoefficientRing ring, std::vector<R0Element> gens);

    const CoefficientRing& ring() const { return ring_; }
    const std::vector<R0Element>& generators() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

    std::string to_string() const; // (2, 3)

private:
    CoefficientRing ring_;
    std::vector<R0Element> gens_;
};

// Ideal of R_0 generated by the coefficients of f.
R0Ideal content_poly(const SPolynomial& f);
// c(I) = c(f_1) + ... + c(f_r).
R0Ideal content_ideal(const GradedRingSpec& spec);

// ZZ: gcd of the generators is 1. Fields: some generator nonzero.
// Polynomial over a field: the reduced Groebner basis contains a constant.
// Polynomial over ZZ: sound heuristics, Undecided when they do not apply.
Tri is_unit_ideal(const R0Ideal& J);

// Reduced lex Groebner basis; requires a polynomial ring over QQ or GF(p).
std::vector<R0Element> groebner(const R0Ideal& J);

// Full normal form of g against a set of field-coefficient polynomials.
R0Element normal_form(const R0Element& g, const std::vector<R0Element>& basis);

Tri ideal_member(const R0Element& g, const R0Ideal& J);

// Fields and polynomial rings over fields: Rabinowitsch. ZZ: iterated gcd
// stripping, no factorization. Polynomial over ZZ: three-valued.
Tri radical_member(const R0Element& a, const R0Ideal& J);

// Groebner basis of the ideal generated by `gens` together with, for each
// basis element, its expression as a combination of them. The generator list
// is taken as given (duplicates and zeros keep their slots), so cofactors
// stay aligned with the caller's indexing. Field-coefficient rings only.
struct TrackedBasis {
    std::vector<R0Element> basis;
    std::vector<std::vector<R0Element>> reps; // basis[k] = sum reps[k][j]*gen[j]
};
TrackedBasis groebner_tracked(const CoefficientRing& ring,
                              const std::vector<R0Element>& gens);

// Cofactors c_j with g = sum c_j * gens_j when g lies in the generated
// ideal, nullopt otherwise.
std::optional<std::vector<R0Element>> member_with_cofactors(
    const R0Element& g, const std::vector<R0Element>& gens);

} // namespace lct
