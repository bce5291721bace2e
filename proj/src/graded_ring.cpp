#include "lct/graded_ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace lct {

long weighted_degree(const Exponents& m, const std::vector<unsigned>& weights) {
    if (m.size() != weights.size())
        throw ShapeError("exponent vector does not match the weight list");
    long deg = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        deg += static_cast<long>(weights[i]) * static_cast<long>(m[i]);
    return deg;
}

SPolynomial::SPolynomial(CoefficientRing ring, unsigned s)
    : ring_(std::move(ring)), s_(s) {}

SPolynomial SPolynomial::monomial(unsigned s, const Exponents& umono,
                                  const R0Element& coeff) {
    if (umono.size() != s) throw ShapeError("U-exponent vector of wrong length");
    SPolynomial f(coeff.ring(), s);
    f.accumulate(umono, coeff);
    return f;
}

void SPolynomial::accumulate(const Exponents& e, const R0Element& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

SPolynomial SPolynomial::operator-() const {
    SPolynomial r(ring_, s_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

SPolynomial SPolynomial::operator+(const SPolynomial& o) const {
    if (ring_ != o.ring_ || s_ != o.s_)
        throw RingMismatch("S-polynomials from different rings");
    SPolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.accumulate(e, c);
    return r;
}

SPolynomial SPolynomial::operator-(const SPolynomial& o) const {
    return *this + (-o);
}

SPolynomial SPolynomial::operator*(const SPolynomial& o) const {
    if (ring_ != o.ring_ || s_ != o.s_)
        throw RingMismatch("S-polynomials from different rings");
    SPolynomial r(ring_, s_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e(s_);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.accumulate(e, ca * cb);
        }
    }
    return r;
}

SPolynomial SPolynomial::pow(unsigned k) const {
    SPolynomial r = monomial(s_, Exponents(s_, 0), R0Element::from_int(ring_, 1));
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

std::pair<bool, long> SPolynomial::is_homogeneous(
    const std::vector<unsigned>& weights) const {
    if (terms_.empty()) throw ZeroPolynomial("homogeneity of the zero polynomial");
    long deg = weighted_degree(terms_.begin()->first, weights);
    for (const auto& [e, c] : terms_) {
        if (weighted_degree(e, weights) != deg) return {false, 0};
    }
    return {true, deg};
}

Exponents SPolynomial::lex_min_exponent() const {
    if (terms_.empty()) throw ZeroPolynomial("lex-min exponent of the zero polynomial");
    // Terms are stored lex-descending, so the minimum is the last key.
    return std::prev(terms_.end())->first;
}

SPolynomial SPolynomial::specialized(const std::vector<Rat>& values,
                                     const CoefficientRing& target) const {
    SPolynomial r(target, s_);
    for (const auto& [e, c] : terms_) r.accumulate(e, c.specialized(values, target));
    return r;
}

bool SPolynomial::operator==(const SPolynomial& o) const {
    return ring_ == o.ring_ && s_ == o.s_ && terms_ == o.terms_;
}

std::string SPolynomial::to_string(const std::vector<std::string>& u_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        // Pull a leading minus out of single-term coefficients.
        bool negated = false;
        R0Element coeff = c;
        if (c.terms().size() == 1 && c.terms().begin()->second < 0) {
            negated = true;
            coeff = -c;
        }
        if (first) {
            if (negated) out << "-";
        } else {
            out << (negated ? " - " : " + ");
        }
        first = false;

        std::string monos;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!monos.empty()) monos += "*";
            monos += u_names.at(i);
            if (e[i] > 1) monos += "^" + std::to_string(e[i]);
        }
        bool needs_parens = coeff.terms().size() > 1;
        std::string cs = coeff.to_string();
        if (monos.empty()) {
            out << (needs_parens ? "(" + cs + ")" : cs);
        } else if (coeff.is_one()) {
            out << monos;
        } else if (needs_parens) {
            out << "(" << cs << ")*" << monos;
        } else {
            out << cs << "*" << monos;
        }
    }
    return out.str();
}

GradedRingSpec::GradedRingSpec(CoefficientRing coeff, std::vector<unsigned> weights,
                               std::vector<SPolynomial> generators,
                               std::vector<std::string> u_names,
                               std::vector<std::string> generator_names)
    : coeff_(std::move(coeff)), weights_(std::move(weights)),
      generators_(std::move(generators)), u_names_(std::move(u_names)),
      gen_names_(std::move(generator_names)) {
    if (weights_.empty()) throw Error("at least one U-variable is required");
    delta_ = 0;
    for (unsigned w : weights_) {
        if (w == 0) throw Error("weights must be positive");
        delta_ += w;
    }
    if (u_names_.empty()) {
        for (std::size_t i = 0; i < weights_.size(); ++i)
            u_names_.push_back("U" + std::to_string(i + 1));
    }
    if (u_names_.size() != weights_.size())
        throw ShapeError("U-variable name count does not match the weights");
    std::set<std::string> names(u_names_.begin(), u_names_.end());
    if (names.size() != u_names_.size())
        throw Error("U-variable names must be distinct");
    for (const std::string& v : coeff_.vars()) {
        if (names.count(v))
            throw Error("variable " + v + " is both a U-variable and a base variable");
    }
    if (gen_names_.empty()) {
        for (std::size_t i = 0; i < generators_.size(); ++i)
            gen_names_.push_back("f" + std::to_string(i + 1));
    }
    if (gen_names_.size() != generators_.size())
        throw ShapeError("generator name count does not match the generators");
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        const SPolynomial& f = generators_[i];
        if (f.ring() != coeff_)
            throw RingMismatch("generator " + gen_names_[i] + " over the wrong ring");
        if (f.uvar_count() != s())
            throw ShapeError("generator " + gen_names_[i] + " has the wrong variable count");
        if (f.is_zero())
            throw ZeroPolynomial("generator " + gen_names_[i] + " is zero");
        auto [hom, deg] = f.is_homogeneous(weights_);
        if (!hom)
            throw HomogeneityError("generator " + gen_names_[i] + " is not homogeneous");
        gen_degrees_.push_back(deg);
    }
}

long GradedRingSpec::default_scan_limit() const {
    unsigned maxw = *std::max_element(weights_.begin(), weights_.end());
    return delta_ + 2L * maxw + 4;
}

GradedRingSpec GradedRingSpec::specialized(const std::vector<Rat>& values,
                                           const CoefficientRing& target) const {
    // Generators that vanish under the evaluation are dropped; they no
    // longer contribute to the ideal.
    std::vector<SPolynomial> gens;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        SPolynomial g = generators_[i].specialized(values, target);
        if (g.is_zero()) continue;
        gens.push_back(std::move(g));
        names.push_back(gen_names_[i]);
    }
    return GradedRingSpec(target, weights_, std::move(gens), u_names_, names);
}

} // namespace lct
