#include "lct/invpoly.hpp"

#include <algorithm>
#include <sstream>

namespace lct {

InverseMonomial::InverseMonomial(std::vector<long> lambda) : lambda_(std::move(lambda)) {
    for (long x : lambda_) {
        if (x > -1) throw Error("inverse monomial exponents must be <= -1");
    }
}

long InverseMonomial::weighted_degree(const std::vector<unsigned>& weights) const {
    if (lambda_.size() != weights.size())
        throw ShapeError("inverse monomial does not match the weight list");
    long deg = 0;
    for (std::size_t i = 0; i < lambda_.size(); ++i)
        deg += static_cast<long>(weights[i]) * lambda_[i];
    return deg;
}

std::string InverseMonomial::to_string() const {
    std::ostringstream out;
    out << "U^(";
    for (std::size_t i = 0; i < lambda_.size(); ++i) {
        if (i) out << ",";
        out << lambda_[i];
    }
    out << ")";
    return out.str();
}

bool basis_less(const InverseMonomial& a, const InverseMonomial& b) {
    const auto& x = a.lambda();
    const auto& y = b.lambda();
    if (x.size() != y.size()) throw ShapeError("inverse monomials of different lengths");
    // Compare U^{-a} against U^{-b} lexicographically.
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] != y[i]) return -x[i] < -y[i];
    }
    return false;
}

ComponentBasis::ComponentBasis(long d, std::vector<InverseMonomial> elements)
    : d_(d), elements_(std::move(elements)) {}

std::optional<std::size_t> ComponentBasis::index_of(const InverseMonomial& m) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), m, basis_less);
    if (it == elements_.end() || !(*it == m)) return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
}

bool basis_nonempty(long d, const std::vector<unsigned>& weights) {
    long delta = 0;
    for (unsigned w : weights) delta += w;
    long e = d - delta;
    if (e < 0) return false;
    if (e == 0) return true;
    // Coin-problem dynamic programming on the numerical semigroup.
    std::vector<char> reach(static_cast<std::size_t>(e) + 1, 0);
    reach[0] = 1;
    for (unsigned w : weights) {
        for (std::size_t v = w; v <= static_cast<std::size_t>(e); ++v) {
            if (reach[v - w]) reach[v] = 1;
        }
    }
    return reach[static_cast<std::size_t>(e)] != 0;
}

namespace {

// All mu with mu_i >= 1 and sum w_i mu_i = d, written as lambda = -mu.
void descend(long d, std::size_t i, const std::vector<unsigned>& weights,
             std::vector<long>& mu, std::vector<InverseMonomial>& out) {
    if (i + 1 == mu.size()) {
        long w = weights[i];
        if (d >= w && d % w == 0) {
            mu[i] = d / w;
            std::vector<long> lambda(mu.size());
            for (std::size_t k = 0; k < mu.size(); ++k) lambda[k] = -mu[k];
            out.emplace_back(std::move(lambda));
        }
        return;
    }
    long rest_min = 0;
    for (std::size_t k = i + 1; k < mu.size(); ++k) rest_min += weights[k];
    for (long m = 1; static_cast<long>(weights[i]) * m + rest_min <= d; ++m) {
        mu[i] = m;
        descend(d - static_cast<long>(weights[i]) * m, i + 1, weights, mu, out);
    }
}

} // namespace

ComponentBasis enumerate_basis(long d, const std::vector<unsigned>& weights) {
    std::vector<InverseMonomial> elems;
    std::vector<long> mu(weights.size(), 0);
    if (!weights.empty() && d > 0) descend(d, 0, weights, mu, elems);
    std::sort(elems.begin(), elems.end(), basis_less);
    return ComponentBasis(d, std::move(elems));
}

InversePolynomial::InversePolynomial(CoefficientRing ring) : ring_(std::move(ring)) {}

const R0Element* InversePolynomial::coefficient(const InverseMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? nullptr : &it->second;
}

void InversePolynomial::add_term(const InverseMonomial& m, const R0Element& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

std::string InversePolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.to_string() << ")*" << m.to_string();
    }
    return out.str();
}

InversePolynomial module_action(const SPolynomial& f, const InverseMonomial& nu) {
    InversePolynomial result(f.ring());
    const auto& nu_l = nu.lambda();
    for (const auto& [lambda, a] : f.terms()) {
        if (lambda.size() != nu_l.size())
            throw ShapeError("term length does not match the inverse monomial");
        std::vector<long> rho(nu_l.size());
        bool survives = true;
        for (std::size_t i = 0; i < rho.size(); ++i) {
            rho[i] = nu_l[i] + static_cast<long>(lambda[i]);
            if (rho[i] > -1) { survives = false; break; }
        }
        if (survives) result.add_term(InverseMonomial(std::move(rho)), a);
    }
    return result;
}

} // namespace lct
