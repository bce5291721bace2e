#include "lct/charp.hpp"

namespace lct {

namespace {

void validate_inputs(const std::vector<R0Element>& fs) {
    if (fs.empty()) throw Error("char-p search needs at least one polynomial");
    const CoefficientRing& ring = fs.front().ring();
    if (!ring.is_polynomial() || ring.scalar_kind() != RingKind::PrimeField)
        throw RingMismatch("char-p search needs a polynomial ring over GF(p)");
    for (const auto& f : fs) {
        if (f.ring() != ring) throw RingMismatch("mixed rings in char-p search");
        if (f.is_zero()) throw Error("char-p search needs nonzero polynomials");
    }
}

} // namespace

std::optional<FrobeniusCertificate> charp_vanishing_search(
    const std::vector<R0Element>& fs, unsigned alpha_max, unsigned beta_max,
    bool want_witness) {
    validate_inputs(fs);
    if (alpha_max < 1 || beta_max < 1) throw Error("char-p bounds must be >= 1");
    const CoefficientRing& ring = fs.front().ring();

    R0Element product = R0Element::constant(ring, 1);
    for (const auto& f : fs) product = product * f;

    // The power ideal depends only on alpha+beta, so group the frontier by
    // the total and walk alphas in increasing order inside it.
    for (unsigned total = 2; total <= alpha_max + beta_max; ++total) {
        unsigned lo = total > beta_max ? total - beta_max : 1;
        unsigned hi = std::min(alpha_max, total - 1);
        if (lo > hi) continue;
        std::vector<R0Element> powers;
        for (const auto& f : fs) powers.push_back(f.pow(total));
        R0Ideal ideal(ring, powers);
        std::vector<R0Element> gb = groebner(ideal);
        for (unsigned alpha = lo; alpha <= hi; ++alpha) {
            if (!normal_form(product.pow(alpha), gb).is_zero()) continue;
            FrobeniusCertificate cert;
            cert.alpha = alpha;
            cert.beta = total - alpha;
            if (want_witness) {
                cert.witness = member_with_cofactors(product.pow(alpha), powers);
                if (!cert.witness)
                    throw Error("witness extraction disagrees with the membership test");
            }
            return cert;
        }
    }
    return std::nullopt;
}

bool verify_certificate(const std::vector<R0Element>& fs,
                        const FrobeniusCertificate& cert) {
    validate_inputs(fs);
    if (!cert.witness) return false;
    const CoefficientRing& ring = fs.front().ring();
    if (cert.witness->size() != fs.size()) return false;
    R0Element product = R0Element::constant(ring, 1);
    for (const auto& f : fs) product = product * f;
    R0Element lhs = product.pow(cert.alpha);
    R0Element rhs(ring);
    for (std::size_t i = 0; i < fs.size(); ++i)
        rhs += (*cert.witness)[i] * fs[i].pow(cert.alpha + cert.beta);
    return lhs == rhs;
}

} // namespace lct
