#pragma once

#include "lct/idealkit.hpp"

#include <optional>
#include <vector>

namespace lct {

// Dense matrix with exact R_0 entries.
class R0Matrix {
public:
    R0Matrix(CoefficientRing ring, std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const CoefficientRing& ring() const { return ring_; }
    R0Element& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const R0Element& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    R0Matrix transposed() const;

private:
    CoefficientRing ring_;
    std::size_t rows_, cols_;
    std::vector<R0Element> data_;
};

// Rank over the fraction field of R_0, by fraction-free (Bareiss)
// elimination; polynomial rings first try exact evaluation certificates.
std::size_t rank_ff(const R0Matrix& m);
// Bareiss elimination only, no evaluation fast path.
std::size_t rank_bareiss(const R0Matrix& m);

// Exact determinant of a square matrix (fraction-free).
R0Element determinant(const R0Matrix& m);

struct IntMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Int> a;
    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
    Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
    static IntMatrix identity(std::size_t n);
};

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y);

struct SNFResult {
    std::vector<Int> invariant_factors; // positive, each divides the next
    std::size_t rank = 0;
    std::size_t coker_free_rank = 0;    // rows - rank
    std::optional<std::pair<IntMatrix, IntMatrix>> transforms; // P*M*Q = diag
};

SNFResult smith_normal_form(const IntMatrix& m, bool want_transforms = false);
// Requires R_0 = ZZ; RingMismatch otherwise.
SNFResult smith_normal_form(const R0Matrix& m, bool want_transforms = false);

inline constexpr std::size_t kDefaultMinorBudget = 20000;

// Number of t x t submatrices, saturating at cap+1.
std::size_t count_minors(std::size_t rows, std::size_t cols, std::size_t t,
                         std::size_t cap);

struct MinorIdealResult {
    std::size_t t;
    R0Ideal minors; // nonzero t x t minors, deduplicated
};

// All t x t minors; throws BudgetExceeded when the submatrix count is
// above the budget.
MinorIdealResult minor_ideal(const R0Matrix& m, std::size_t t,
                             std::size_t budget = kDefaultMinorBudget);

struct CokernelDecision {
    Tri verdict = Tri::Undecided;
    // The maximal-minor ideal when it was enumerated along the way.
    std::optional<R0Ideal> minor_ideal;
};

// Coker M = 0 over R_0. Complete for ZZ (Smith form), fields (rank) and
// polynomial rings over fields (minor ideal within budget, otherwise an
// exact column-module membership test); three-valued for polynomials
// over ZZ.
CokernelDecision cokernel_is_zero(const R0Matrix& m,
                                  std::size_t minor_budget = kDefaultMinorBudget);

} // namespace lct
