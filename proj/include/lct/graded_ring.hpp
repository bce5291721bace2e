#pragma once

#include "lct/r0_element.hpp"

#include <string>
#include <vector>

namespace lct {

// Sum of d_i * m_i; throws ShapeError on length mismatch.
long weighted_degree(const Exponents& m, const std::vector<unsigned>& weights);

// Element of S = R_0[U_1,...,U_s]: sparse map from U-exponent vector to a
// nonzero R_0 coefficient, stored in descending lex order (U_1 > ... > U_s).
class SPolynomial {
public:
    using TermMap = std::map<Exponents, R0Element, LexGreater>;

    SPolynomial(CoefficientRing ring, unsigned s); // zero
    static SPolynomial monomial(unsigned s, const Exponents& umono,
                                const R0Element& coeff);

    unsigned uvar_count() const { return s_; }
    const CoefficientRing& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    SPolynomial operator-() const;
    SPolynomial operator+(const SPolynomial& o) const;
    SPolynomial operator-(const SPolynomial& o) const;
    SPolynomial operator*(const SPolynomial& o) const;
    SPolynomial pow(unsigned k) const;

    // {true, common weighted degree} iff every term has the same weighted
    // degree; throws ZeroPolynomial on the zero polynomial.
    std::pair<bool, long> is_homogeneous(const std::vector<unsigned>& weights) const;

    // Lex-minimal U-exponent among the terms; requires a nonzero polynomial.
    Exponents lex_min_exponent() const;

    SPolynomial specialized(const std::vector<Rat>& values,
                            const CoefficientRing& target) const;

    bool operator==(const SPolynomial& o) const;
    bool operator!=(const SPolynomial& o) const { return !(*this == o); }

    std::string to_string(const std::vector<std::string>& u_names) const;

private:
    CoefficientRing ring_;
    unsigned s_;
    TermMap terms_;

    void accumulate(const Exponents& e, const R0Element& c);
};

// The weighted-graded data: s, positive weights d_1..d_s, the coefficient
// ring, and homogeneous generators f_1..f_r of I (homogeneity is checked at
// construction). r = 0 means I = 0.
class GradedRingSpec {
public:
    GradedRingSpec(CoefficientRing coeff, std::vector<unsigned> weights,
                   std::vector<SPolynomial> generators,
                   std::vector<std::string> u_names = {},
                   std::vector<std::string> generator_names = {});

    unsigned s() const { return static_cast<unsigned>(weights_.size()); }
    const std::vector<unsigned>& weights() const { return weights_; }
    const CoefficientRing& coeff() const { return coeff_; }
    const std::vector<SPolynomial>& generators() const { return generators_; }
    long generator_degree(std::size_t i) const { return gen_degrees_.at(i); }
    long delta() const { return delta_; }
    const std::vector<std::string>& u_names() const { return u_names_; }
    const std::vector<std::string>& generator_names() const { return gen_names_; }

    // Default degree scan window upper end: delta + 2*max(d_i) + 4.
    long default_scan_limit() const;

    GradedRingSpec specialized(const std::vector<Rat>& values,
                               const CoefficientRing& target) const;

private:
    CoefficientRing coeff_;
    std::vector<unsigned> weights_;
    std::vector<SPolynomial> generators_;
    std::vector<long> gen_degrees_;
    long delta_;
    std::vector<std::string> u_names_;
    std::vector<std::string> gen_names_;
};

} // namespace lct
