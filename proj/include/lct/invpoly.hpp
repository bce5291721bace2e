#pragma once

#include "lct/graded_ring.hpp"

#include <map>
#include <optional>

namespace lct {

// Monomial U^lambda with every exponent <= -1. These span the module of
// inverse polynomials R_0[U_1^-,...,U_s^-].
class InverseMonomial {
public:
    explicit InverseMonomial(std::vector<long> lambda);
    const std::vector<long>& lambda() const { return lambda_; }
    std::size_t size() const { return lambda_.size(); }
    long weighted_degree(const std::vector<unsigned>& weights) const;

    bool operator==(const InverseMonomial& o) const { return lambda_ == o.lambda_; }
    bool operator!=(const InverseMonomial& o) const { return !(*this == o); }

    std::string to_string() const; // U^(-1,-2)

private:
    std::vector<long> lambda_;
};

// U^a < U^b iff U^{-a} <_Lex U^{-b}, with U_1 > ... > U_s.
bool basis_less(const InverseMonomial& a, const InverseMonomial& b);

struct BasisLess {
    bool operator()(const InverseMonomial& a, const InverseMonomial& b) const {
        return basis_less(a, b);
    }
};

// The ordered basis B(d) of the degree -d component: all U^lambda with
// strictly negative exponents and weighted degree -d, ascending.
class ComponentBasis {
public:
    ComponentBasis(long d, std::vector<InverseMonomial> elements);
    long d() const { return d_; }
    const std::vector<InverseMonomial>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }
    const InverseMonomial& operator[](std::size_t i) const { return elements_[i]; }
    std::optional<std::size_t> index_of(const InverseMonomial& m) const;

private:
    long d_;
    std::vector<InverseMonomial> elements_;
};

// B(d) != 0 iff d - Delta is a nonnegative integer combination of the
// weights (the zero combination included).
bool basis_nonempty(long d, const std::vector<unsigned>& weights);

ComponentBasis enumerate_basis(long d, const std::vector<unsigned>& weights);

// Homogeneous element of R_0[U_1^-,...,U_s^-].
class InversePolynomial {
public:
    using TermMap = std::map<InverseMonomial, R0Element, BasisLess>;

    explicit InversePolynomial(CoefficientRing ring);
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    const R0Element* coefficient(const InverseMonomial& m) const;
    void add_term(const InverseMonomial& m, const R0Element& c);

    std::string to_string() const;

private:
    CoefficientRing ring_;
    TermMap terms_;
};

// f * U^nu in the inverse-polynomial module: sum of a_lambda U^{nu+lambda}
// over the terms of f, keeping only exponent vectors that stay strictly
// negative in every coordinate.
InversePolynomial module_action(const SPolynomial& f, const InverseMonomial& nu);

} // namespace lct
