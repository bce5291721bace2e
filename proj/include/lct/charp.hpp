#pragma once

#include "lct/idealkit.hpp"

#include <optional>
#include <vector>

namespace lct {

// Certificate that (f_1...f_s)^alpha lies in <f_1^{alpha+beta},...,
// f_s^{alpha+beta}>; in characteristic p this forces H^s_I(R) = 0.
struct FrobeniusCertificate {
    unsigned alpha = 0;
    unsigned beta = 0;
    // Cofactors g_i with (prod f_i)^alpha = sum g_i f_i^{alpha+beta}.
    std::optional<std::vector<R0Element>> witness;
};

// Search all pairs with alpha <= alpha_max, beta <= beta_max in order of
// increasing alpha+beta, then increasing alpha; the first passing pair wins.
// NotFound (nullopt) within bounds is inconclusive, never a nonvanishing
// proof. Requires a polynomial ring over GF(p) and nonzero f_i.
std::optional<FrobeniusCertificate> charp_vanishing_search(
    const std::vector<R0Element>& fs, unsigned alpha_max, unsigned beta_max,
    bool want_witness = false);

// Exact expansion check of a certificate's witness identity.
bool verify_certificate(const std::vector<R0Element>& fs,
                        const FrobeniusCertificate& cert);

} // namespace lct
