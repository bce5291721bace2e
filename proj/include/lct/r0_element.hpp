#pragma once

#include "lct/coefficient_ring.hpp"
#include "lct/errors.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace lct {

using Exponents = std::vector<unsigned>;

// Lexicographic comparison with the first variable most significant: returns
// -1/0/+1; the first differing coordinate decides, larger exponent wins.
int lex_compare(const Exponents& a, const Exponents& b);

// Descending lex; the canonical storage order for polynomial terms.
struct LexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const {
        return lex_compare(a, b) > 0;
    }
};

// Element of R_0: an exact scalar or a sparse multivariate polynomial over
// the scalar base. Scalar rings are treated as polynomial rings in zero
// variables, so a scalar is the single term with the empty exponent vector.
// No zero coefficients are stored; prime-field coefficients live in [0, p).
class R0Element {
public:
    using TermMap = std::map<Exponents, Rat, LexGreater>;

    explicit R0Element(CoefficientRing ring); // zero
    static R0Element constant(const CoefficientRing& ring, const Rat& value);
    static R0Element from_int(const CoefficientRing& ring, long value);
    static R0Element variable(const CoefficientRing& ring, const std::string& name);
    static R0Element monomial(const CoefficientRing& ring, const Exponents& exps,
                              const Rat& coeff);

    const CoefficientRing& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    // ZZ: +-1; QQ, GF(p): nonzero; polynomial ring: unit constant of the base.
    bool is_unit() const;
    Rat constant_value() const; // requires is_constant()

    long total_degree() const; // -1 for the zero element

    R0Element operator-() const;
    R0Element operator+(const R0Element& o) const;
    R0Element operator-(const R0Element& o) const;
    R0Element operator*(const R0Element& o) const;
    R0Element& operator+=(const R0Element& o);
    R0Element& operator-=(const R0Element& o);

    // Exact quotient q with q*o == *this; throws DivisionError otherwise.
    R0Element exact_div(const R0Element& o) const;
    std::optional<R0Element> try_exact_div(const R0Element& o) const;

    R0Element pow(unsigned k) const;

    // Leading term under descending lex; requires a nonzero element.
    std::pair<Exponents, Rat> leading_term() const;
    R0Element scaled(const Rat& c) const;
    R0Element times_monomial(const Exponents& exps, const Rat& c) const;

    // Evaluate the polynomial variables at the given scalar values, landing
    // in `target` (the scalar base, or any ring sharing its scalar kind).
    R0Element specialized(const std::vector<Rat>& values,
                          const CoefficientRing& target) const;
    // Reinterpret coefficients in a ring with the same variables but a
    // different scalar base (e.g. ZZ[v] -> GF(p)[v]).
    R0Element with_scalars(const CoefficientRing& target) const;
    // Same element viewed in an extension of the ring by extra variables
    // appended last (exponent vectors are padded with zeros).
    R0Element lifted(const CoefficientRing& bigger) const;

    bool operator==(const R0Element& o) const;
    bool operator!=(const R0Element& o) const { return !(*this == o); }
    // Total order for deduplication; compares term sequences.
    bool operator<(const R0Element& o) const;

    std::string to_string() const;

private:
    CoefficientRing ring_;
    TermMap terms_;

    Rat normalized(const Rat& c) const;
    void accumulate(const Exponents& e, const Rat& c);
    static void require_same_ring(const R0Element& a, const R0Element& b);
};

} // namespace lct
