#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

namespace lct {

using Int = mpz_class;
using Rat = mpq_class;

enum class RingKind { Integers, Rationals, PrimeField, PolynomialRing };

// Descriptor of the base domain R_0: the integers, the rationals, a prime
// field, or a multivariate polynomial ring over one of those (tower depth is
// exactly one). Immutable and cheap to copy.
class CoefficientRing {
public:
    static CoefficientRing integers();
    static CoefficientRing rationals();
    static CoefficientRing prime_field(const Int& p);
    static CoefficientRing polynomial(const CoefficientRing& base,
                                      std::vector<std::string> vars);

    RingKind kind() const;
    // Collapses PolynomialRing to the kind of its scalar base.
    RingKind scalar_kind() const;
    bool is_polynomial() const { return kind() == RingKind::PolynomialRing; }
    // True when the scalar base is QQ or GF(p).
    bool scalars_form_field() const;
    // The modulus for prime-field scalars; 0 in characteristic zero.
    const Int& prime() const;

    const std::vector<std::string>& vars() const;
    std::size_t nvars() const { return vars().size(); }
    // Index of a polynomial variable, or -1.
    int var_index(const std::string& name) const;

    // The scalar ring at the bottom of the tower (identity for scalar rings).
    CoefficientRing base_ring() const;
    // Same ring with one extra polynomial variable appended last.
    CoefficientRing extended(const std::string& extra_var) const;

    bool operator==(const CoefficientRing& o) const;
    bool operator!=(const CoefficientRing& o) const { return !(*this == o); }

    std::string to_string() const; // "ZZ", "QQ", "GF(5)", "ZZ[A1,A2]", ...

private:
    struct Rep;
    std::shared_ptr<const Rep> rep_;
    explicit CoefficientRing(std::shared_ptr<const Rep> rep);
};

} // namespace lct
