#include "lct/coefficient_ring.hpp"

#include "lct/errors.hpp"

#include <algorithm>
#include <set>

namespace lct {

struct CoefficientRing::Rep {
    RingKind kind;
    RingKind scalar;
    Int p; // 0 in characteristic zero
    std::vector<std::string> vars;
};

CoefficientRing::CoefficientRing(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}

CoefficientRing CoefficientRing::integers() {
    static const auto rep = std::make_shared<const Rep>(
        Rep{RingKind::Integers, RingKind::Integers, Int(0), {}});
    return CoefficientRing(rep);
}

CoefficientRing CoefficientRing::rationals() {
    static const auto rep = std::make_shared<const Rep>(
        Rep{RingKind::Rationals, RingKind::Rationals, Int(0), {}});
    return CoefficientRing(rep);
}

CoefficientRing CoefficientRing::prime_field(const Int& p) {
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
        throw Error("GF(" + p.get_str() + "): modulus is not prime");
    return CoefficientRing(std::make_shared<const Rep>(
        Rep{RingKind::PrimeField, RingKind::PrimeField, p, {}}));
}

CoefficientRing CoefficientRing::polynomial(const CoefficientRing& base,
                                            std::vector<std::string> vars) {
    if (base.kind() == RingKind::PolynomialRing)
        throw Error("coefficient towers are limited to depth one");
    if (vars.empty())
        throw Error("polynomial ring needs at least one variable");
    std::set<std::string> seen(vars.begin(), vars.end());
    if (seen.size() != vars.size())
        throw Error("polynomial ring variable names must be distinct");
    return CoefficientRing(std::make_shared<const Rep>(
        Rep{RingKind::PolynomialRing, base.kind(), base.prime(), std::move(vars)}));
}

RingKind CoefficientRing::kind() const { return rep_->kind; }
RingKind CoefficientRing::scalar_kind() const { return rep_->scalar; }

bool CoefficientRing::scalars_form_field() const {
    return rep_->scalar == RingKind::Rationals || rep_->scalar == RingKind::PrimeField;
}

const Int& CoefficientRing::prime() const { return rep_->p; }
const std::vector<std::string>& CoefficientRing::vars() const { return rep_->vars; }

int CoefficientRing::var_index(const std::string& name) const {
    const auto& v = rep_->vars;
    auto it = std::find(v.begin(), v.end(), name);
    return it == v.end() ? -1 : static_cast<int>(it - v.begin());
}

CoefficientRing CoefficientRing::base_ring() const {
    switch (rep_->scalar) {
    case RingKind::Integers: return integers();
    case RingKind::Rationals: return rationals();
    case RingKind::PrimeField: return prime_field(rep_->p);
    default: throw Error("malformed ring descriptor");
    }
}

CoefficientRing CoefficientRing::extended(const std::string& extra_var) const {
    std::vector<std::string> vars = rep_->vars;
    vars.push_back(extra_var);
    return polynomial(base_ring(), std::move(vars));
}

bool CoefficientRing::operator==(const CoefficientRing& o) const {
    if (rep_ == o.rep_) return true;
    return rep_->kind == o.rep_->kind && rep_->scalar == o.rep_->scalar &&
           rep_->p == o.rep_->p && rep_->vars == o.rep_->vars;
}

std::string CoefficientRing::to_string() const {
    std::string base;
    switch (rep_->scalar) {
    case RingKind::Integers: base = "ZZ"; break;
    case RingKind::Rationals: base = "QQ"; break;
    case RingKind::PrimeField: base = "GF(" + rep_->p.get_str() + ")"; break;
    default: base = "?"; break;
    }
    if (!is_polynomial()) return base;
    std::string out = base + "[";
    for (std::size_t i = 0; i < rep_->vars.size(); ++i) {
        if (i) out += ",";
        out += rep_->vars[i];
    }
    return out + "]";
}

} // namespace lct
