// Independent brute-force oracles used to freeze expected values. These
// deliberately avoid the library's fast paths: enumeration is by bounded
// search, determinants by cofactor expansion, ranks by exhaustive minors.
#pragma once

#include "lct/invpoly.hpp"
#include "lct/linalg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

using lct::Exponents;
using lct::Int;
using lct::R0Element;
using lct::R0Matrix;
using lct::Rat;
using lct::SPolynomial;

// All lambda with entries <= -1 and sum w_i lambda_i = -d, by scanning the
// full box [-d, -1]^s, sorted with an inline comparator.
inline std::vector<std::vector<long>> basis(long d, const std::vector<unsigned>& w) {
    const std::size_t s = w.size();
    std::vector<std::vector<long>> out;
    if (d < 1) return out;
    std::vector<long> lambda(s, -1);
    while (true) {
        long deg = 0;
        for (std::size_t i = 0; i < s; ++i) deg += static_cast<long>(w[i]) * lambda[i];
        if (deg == -d) out.push_back(lambda);
        std::size_t k = s;
        while (k > 0) {
            --k;
            if (lambda[k] > -d) {
                --lambda[k];
                for (std::size_t j = k + 1; j < s; ++j) lambda[j] = -1;
                break;
            }
            if (k == 0) {
                std::sort(out.begin(), out.end(),
                          [](const std::vector<long>& a, const std::vector<long>& b) {
                              for (std::size_t i = 0; i < a.size(); ++i) {
                                  if (a[i] != b[i]) return -a[i] < -b[i];
                              }
                              return false;
                          });
                return out;
            }
        }
    }
}

// Direct expansion of f * U^nu, dropping exponents that leave the strictly
// negative orthant.
inline std::map<std::vector<long>, R0Element> action(const SPolynomial& f,
                                                     const std::vector<long>& nu) {
    std::map<std::vector<long>, R0Element> out;
    for (const auto& [lambda, a] : f.terms()) {
        std::vector<long> rho(nu.size());
        bool ok = true;
        for (std::size_t i = 0; i < nu.size(); ++i) {
            rho[i] = nu[i] + static_cast<long>(lambda[i]);
            if (rho[i] >= 0) { ok = false; break; }
        }
        if (!ok) continue;
        auto it = out.find(rho);
        if (it == out.end()) {
            out.emplace(rho, a);
        } else {
            it->second += a;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

// Cofactor-expansion determinant; no division anywhere.
inline R0Element det(const R0Matrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return R0Element::from_int(m.ring(), 1);
    if (n == 1) return m.at(0, 0);
    R0Element acc(m.ring());
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        R0Matrix sub(m.ring(), n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cj = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == j) continue;
                sub.at(i - 1, cj++) = m.at(i, k);
            }
        }
        R0Element term = m.at(0, j) * det(sub);
        if (j % 2) term = -term;
        acc += term;
    }
    return acc;
}

inline void combinations(std::size_t n, std::size_t k,
                         const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    if (k > n) return;
    while (true) {
        fn(c);
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (c[i] + (k - i) < n) {
                ++c[i];
                for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
        if (k == 0) return;
    }
}

// Rank as the largest t with a nonzero t x t minor.
inline std::size_t rank(const R0Matrix& m) {
    for (std::size_t t = std::min(m.rows(), m.cols()); t >= 1; --t) {
        bool found = false;
        combinations(m.rows(), t, [&](const std::vector<std::size_t>& ri) {
            if (found) return;
            combinations(m.cols(), t, [&](const std::vector<std::size_t>& ci) {
                if (found) return;
                R0Matrix sub(m.ring(), t, t);
                for (std::size_t i = 0; i < t; ++i)
                    for (std::size_t j = 0; j < t; ++j) sub.at(i, j) = m.at(ri[i], ci[j]);
                if (!det(sub).is_zero()) found = true;
            });
        });
        if (found) return t;
    }
    return 0;
}

// gcd of all k x k minors of an integer matrix (0 when none are nonzero).
inline Int gcd_of_minors(const lct::IntMatrix& m, std::size_t k) {
    lct::CoefficientRing zz = lct::CoefficientRing::integers();
    R0Matrix rm(zz, m.rows, m.cols);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            rm.at(i, j) = R0Element::constant(zz, Rat(m.at(i, j)));
    Int g = 0;
    combinations(m.rows, k, [&](const std::vector<std::size_t>& ri) {
        combinations(m.cols, k, [&](const std::vector<std::size_t>& ci) {
            R0Matrix sub(zz, k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = rm.at(ri[i], ci[j]);
            Int d = det(sub).constant_value().get_num();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        });
    });
    return g;
}

// Plain Gaussian elimination rank over a prime field.
inline std::size_t rank_gf(const R0Matrix& m) {
    const Int p = m.ring().prime();
    std::vector<std::vector<Int>> a(m.rows(), std::vector<Int>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            a[i][j] = m.at(i, j).is_zero() ? Int(0) : m.at(i, j).constant_value().get_num();
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && a[piv][c] % p == 0) ++piv;
        if (piv == m.rows()) continue;
        std::swap(a[piv], a[r]);
        Int inv;
        mpz_invert(inv.get_mpz_t(), a[r][c].get_mpz_t(), p.get_mpz_t());
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            Int f = (a[i][c] * inv) % p;
            for (std::size_t j = c; j < m.cols(); ++j)
                a[i][j] = ((a[i][j] - f * a[r][j]) % p + p) % p;
        }
        ++r;
    }
    return r;
}

} // namespace oracle
