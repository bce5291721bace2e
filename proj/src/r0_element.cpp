#include "lct/r0_element.hpp"

#include <sstream>

namespace lct {

int lex_compare(const Exponents& a, const Exponents& b) {
    if (a.size() != b.size())
        throw ShapeError("exponent vectors of different lengths");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

R0Element::R0Element(CoefficientRing ring) : ring_(std::move(ring)) {}

Rat R0Element::normalized(const Rat& c) const {
    if (ring_.scalar_kind() != RingKind::PrimeField) return c;
    // Prime-field scalars are canonical residues in [0, p).
    const Int& p = ring_.prime();
    Int num;
    mpz_mod(num.get_mpz_t(), c.get_num().get_mpz_t(), p.get_mpz_t());
    if (c.get_den() != 1) {
        Int inv;
        if (mpz_invert(inv.get_mpz_t(), c.get_den().get_mpz_t(), p.get_mpz_t()) == 0)
            throw DivisionError("denominator not invertible mod " + p.get_str());
        num *= inv;
        mpz_mod(num.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
    }
    return Rat(num);
}

void R0Element::accumulate(const Exponents& e, const Rat& c) {
    // mpq_class values built from a numerator/denominator pair are not
    // canonical until told so; arithmetic on non-canonical values is wrong.
    Rat cc = c;
    cc.canonicalize();
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        Rat v = normalized(cc);
        if (v != 0) terms_.emplace(e, std::move(v));
        return;
    }
    it->second = normalized(it->second + cc);
    if (it->second == 0) terms_.erase(it);
}

R0Element R0Element::constant(const CoefficientRing& ring, const Rat& value) {
    if (ring.scalar_kind() == RingKind::Integers && value.get_den() != 1)
        throw RingMismatch("non-integer constant over ZZ");
    R0Element r(ring);
    r.accumulate(Exponents(ring.nvars(), 0), value);
    return r;
}

R0Element R0Element::from_int(const CoefficientRing& ring, long value) {
    return constant(ring, Rat(value));
}

R0Element R0Element::variable(const CoefficientRing& ring, const std::string& name) {
    int idx = ring.var_index(name);
    if (idx < 0)
        throw RingMismatch("unknown variable " + name + " in " + ring.to_string());
    Exponents e(ring.nvars(), 0);
    e[static_cast<std::size_t>(idx)] = 1;
    R0Element r(ring);
    r.accumulate(e, Rat(1));
    return r;
}

R0Element R0Element::monomial(const CoefficientRing& ring, const Exponents& exps,
                              const Rat& coeff) {
    if (exps.size() != ring.nvars())
        throw ShapeError("monomial exponent count does not match the ring");
    if (ring.scalar_kind() == RingKind::Integers && coeff.get_den() != 1)
        throw RingMismatch("non-integer coefficient over ZZ");
    R0Element r(ring);
    r.accumulate(exps, coeff);
    return r;
}

bool R0Element::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Exponents& e = terms_.begin()->first;
    for (unsigned x : e)
        if (x) return false;
    return true;
}

bool R0Element::is_one() const {
    return is_constant() && !terms_.empty() && terms_.begin()->second == 1;
}

bool R0Element::is_unit() const {
    if (!is_constant() || terms_.empty()) return false;
    const Rat& c = terms_.begin()->second;
    switch (ring_.scalar_kind()) {
    case RingKind::Integers: return c == 1 || c == -1;
    default: return c != 0; // fields
    }
}

Rat R0Element::constant_value() const {
    if (!is_constant()) throw Error("constant_value on a non-constant element");
    return terms_.empty() ? Rat(0) : terms_.begin()->second;
}

long R0Element::total_degree() const {
    long best = -1;
    for (const auto& [e, c] : terms_) {
        long deg = 0;
        for (unsigned x : e) deg += x;
        if (deg > best) best = deg;
    }
    return best;
}

void R0Element::require_same_ring(const R0Element& a, const R0Element& b) {
    if (a.ring_ != b.ring_)
        throw RingMismatch("operands from different coefficient rings");
}

R0Element R0Element::operator-() const {
    R0Element r(ring_);
    for (const auto& [e, c] : terms_) r.accumulate(e, -c);
    return r;
}

R0Element R0Element::operator+(const R0Element& o) const {
    R0Element r = *this;
    r += o;
    return r;
}

R0Element R0Element::operator-(const R0Element& o) const {
    R0Element r = *this;
    r -= o;
    return r;
}

R0Element& R0Element::operator+=(const R0Element& o) {
    require_same_ring(*this, o);
    for (const auto& [e, c] : o.terms_) accumulate(e, c);
    return *this;
}

R0Element& R0Element::operator-=(const R0Element& o) {
    require_same_ring(*this, o);
    for (const auto& [e, c] : o.terms_) accumulate(e, -c);
    return *this;
}

R0Element R0Element::operator*(const R0Element& o) const {
    require_same_ring(*this, o);
    R0Element r(ring_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.accumulate(e, ca * cb);
        }
    }
    return r;
}

R0Element R0Element::pow(unsigned k) const {
    R0Element r = constant(ring_, 1);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

std::pair<Exponents, Rat> R0Element::leading_term() const {
    if (terms_.empty()) throw Error("leading term of zero");
    return *terms_.begin();
}

R0Element R0Element::scaled(const Rat& c) const {
    R0Element r(ring_);
    for (const auto& [e, v] : terms_) r.accumulate(e, v * c);
    return r;
}

R0Element R0Element::times_monomial(const Exponents& exps, const Rat& c) const {
    R0Element r(ring_);
    for (const auto& [e, v] : terms_) {
        Exponents f(e.size());
        for (std::size_t i = 0; i < f.size(); ++i) f[i] = e[i] + exps[i];
        r.accumulate(f, v * c);
    }
    return r;
}

namespace {

// Scalar exact quotient a/b in the given scalar kind, or nullopt.
std::optional<Rat> scalar_div(const Rat& a, const Rat& b, RingKind kind, const Int& p) {
    if (b == 0) return std::nullopt;
    switch (kind) {
    case RingKind::Integers: {
        if (!mpz_divisible_p(a.get_num().get_mpz_t(), b.get_num().get_mpz_t()))
            return std::nullopt;
        Int q;
        mpz_divexact(q.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
        return Rat(q);
    }
    case RingKind::Rationals:
        return a / b;
    case RingKind::PrimeField: {
        Int inv;
        if (mpz_invert(inv.get_mpz_t(), b.get_num().get_mpz_t(), p.get_mpz_t()) == 0)
            return std::nullopt;
        Int r;
        Int prod = a.get_num() * inv;
        mpz_mod(r.get_mpz_t(), prod.get_mpz_t(), p.get_mpz_t());
        return Rat(r);
    }
    default:
        return std::nullopt;
    }
}

bool exponents_divide(const Exponents& den, const Exponents& num) {
    for (std::size_t i = 0; i < den.size(); ++i)
        if (den[i] > num[i]) return false;
    return true;
}

} // namespace

std::optional<R0Element> R0Element::try_exact_div(const R0Element& o) const {
    require_same_ring(*this, o);
    if (o.is_zero()) return std::nullopt;
    if (is_zero()) return R0Element(ring_);
    // Greedy leading-term division; over a domain, divisibility forces each
    // step to succeed, so one failed step certifies an inexact quotient.
    R0Element rem = *this;
    R0Element quot(ring_);
    const auto [lb_e, lb_c] = o.leading_term();
    while (!rem.is_zero()) {
        const auto [la_e, la_c] = rem.leading_term();
        if (!exponents_divide(lb_e, la_e)) return std::nullopt;
        auto c = scalar_div(la_c, lb_c, ring_.scalar_kind(), ring_.prime());
        if (!c) return std::nullopt;
        Exponents e(la_e.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = la_e[i] - lb_e[i];
        quot.accumulate(e, *c);
        rem -= o.times_monomial(e, *c);
    }
    return quot;
}

R0Element R0Element::exact_div(const R0Element& o) const {
    auto q = try_exact_div(o);
    if (!q)
        throw DivisionError(o.to_string() + " does not divide " + to_string() +
                            " in " + ring_.to_string());
    return *q;
}

R0Element R0Element::specialized(const std::vector<Rat>& values,
                                 const CoefficientRing& target) const {
    if (values.size() != ring_.nvars())
        throw ShapeError("specialization value count does not match the ring");
    R0Element out(target);
    const Exponents none(target.nvars(), 0);
    for (const auto& [e, c] : terms_) {
        Rat v = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (unsigned k = 0; k < e[i]; ++k) v *= values[i];
        }
        out.accumulate(none, v);
    }
    return out;
}

R0Element R0Element::with_scalars(const CoefficientRing& target) const {
    if (target.nvars() != ring_.nvars())
        throw RingMismatch("scalar change must preserve the variables");
    R0Element out(target);
    for (const auto& [e, c] : terms_) out.accumulate(e, c);
    return out;
}

R0Element R0Element::lifted(const CoefficientRing& bigger) const {
    if (bigger.nvars() < ring_.nvars())
        throw RingMismatch("lift target has fewer variables");
    R0Element out(bigger);
    for (const auto& [e, c] : terms_) {
        Exponents f(bigger.nvars(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) f[i] = e[i];
        out.accumulate(f, c);
    }
    return out;
}

bool R0Element::operator==(const R0Element& o) const {
    return ring_ == o.ring_ && terms_ == o.terms_;
}

bool R0Element::operator<(const R0Element& o) const {
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt) {
        int c = lex_compare(it->first, jt->first);
        if (c != 0) return c < 0;
        int cc = cmp(it->second, jt->second);
        if (cc != 0) return cc < 0;
    }
    return it == terms_.end() && jt != o.terms_.end();
}

std::string R0Element::to_string() const {
    if (terms_.empty()) return "0";
    const auto& vars = ring_.vars();
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) { out << "-"; a = -a; }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::string monos;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!monos.empty()) monos += "*";
            monos += vars[i];
            if (e[i] > 1) monos += "^" + std::to_string(e[i]);
        }
        if (monos.empty()) {
            out << a.get_str();
        } else if (a == 1) {
            out << monos;
        } else {
            out << a.get_str() << "*" << monos;
        }
    }
    return out.str();
}

} // namespace lct
