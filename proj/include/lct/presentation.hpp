#pragma once

#include "lct/invpoly.hpp"
#include "lct/linalg.hpp"

#include <string>
#include <vector>

namespace lct {

// Column label: generator index paired with a basis monomial of B(d + deg f_i).
struct ColumnLabel {
    std::size_t gen;
    InverseMonomial mono;
};

// The presentation matrix M(f_1,...,f_r; d) over R_0: rows indexed by B(d)
// ascending, columns by the concatenated bases B(d + deg f_i) in generator
// order; entry[alpha][(i,beta)] is the coefficient of U^alpha in f_i U^beta.
class ComponentMatrix {
public:
    ComponentMatrix(long d, ComponentBasis row_basis, std::vector<ColumnLabel> col_basis,
                    R0Matrix entries);

    long d() const { return d_; }
    const ComponentBasis& row_basis() const { return row_basis_; }
    const std::vector<ColumnLabel>& col_basis() const { return col_basis_; }
    std::size_t rows() const { return entries_.rows(); }
    std::size_t cols() const { return entries_.cols(); }
    const R0Element& entry(std::size_t i, std::size_t j) const { return entries_.at(i, j); }
    const R0Matrix& matrix() const { return entries_; }
    const CoefficientRing& ring() const { return entries_.ring(); }

    // Plain-text layout: one header line with column labels, then one line
    // per row ("row label TAB entry TAB entry ..."), consumed by golden tests.
    std::string to_text(const std::vector<std::string>& generator_names) const;

private:
    long d_;
    ComponentBasis row_basis_;
    std::vector<ColumnLabel> col_basis_;
    R0Matrix entries_;
};

// M(f; d) for a single homogeneous f; HomogeneityError if f is not.
ComponentMatrix build_single(const SPolynomial& f, long d, const GradedRingSpec& spec);

// Horizontal concatenation of build_single(f_i, d) in generator order;
// r = 0 yields the |B(d)| x 0 matrix.
ComponentMatrix build_multi(const GradedRingSpec& spec, long d);

} // namespace lct
