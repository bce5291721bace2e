#include "lct/presentation.hpp"

#include <sstream>

namespace lct {

ComponentMatrix::ComponentMatrix(long d, ComponentBasis row_basis,
                                 std::vector<ColumnLabel> col_basis, R0Matrix entries)
    : d_(d), row_basis_(std::move(row_basis)), col_basis_(std::move(col_basis)),
      entries_(std::move(entries)) {
    if (entries_.rows() != row_basis_.size() || entries_.cols() != col_basis_.size())
        throw ShapeError("matrix shape does not match its bases");
}

std::string ComponentMatrix::to_text(const std::vector<std::string>& generator_names) const {
    std::ostringstream out;
    out << "M(d=" << d_ << ") " << rows() << " x " << cols() << " over "
        << ring().to_string() << "\n";
    out << ".";
    for (const auto& cl : col_basis_) {
        out << "\t";
        if (cl.gen < generator_names.size()) out << generator_names[cl.gen] << ":";
        out << cl.mono.to_string();
    }
    out << "\n";
    for (std::size_t i = 0; i < rows(); ++i) {
        out << row_basis_[i].to_string();
        for (std::size_t j = 0; j < cols(); ++j) out << "\t" << entry(i, j).to_string();
        out << "\n";
    }
    return out.str();
}

namespace {

ComponentMatrix build_block(const SPolynomial& f, long d, const GradedRingSpec& spec,
                            std::size_t gen_index) {
    auto [hom, delta] = f.is_homogeneous(spec.weights());
    if (!hom) throw HomogeneityError("matrix generator is not homogeneous");

    ComponentBasis rows = enumerate_basis(d, spec.weights());
    ComponentBasis cols = enumerate_basis(d + delta, spec.weights());
    R0Matrix entries(spec.coeff(), rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        InversePolynomial image = module_action(f, cols[j]);
        for (const auto& [mono, coeff] : image.terms()) {
            auto idx = rows.index_of(mono);
            if (idx) entries.at(*idx, j) = coeff;
        }
    }
    std::vector<ColumnLabel> labels;
    labels.reserve(cols.size());
    for (const auto& mono : cols.elements()) labels.push_back({gen_index, mono});
    return ComponentMatrix(d, std::move(rows), std::move(labels), std::move(entries));
}

} // namespace

ComponentMatrix build_single(const SPolynomial& f, long d, const GradedRingSpec& spec) {
    return build_block(f, d, spec, 0);
}

ComponentMatrix build_multi(const GradedRingSpec& spec, long d) {
    ComponentBasis rows = enumerate_basis(d, spec.weights());
    std::vector<ColumnLabel> labels;
    std::vector<ComponentMatrix> blocks;
    std::size_t total_cols = 0;
    for (std::size_t i = 0; i < spec.generators().size(); ++i) {
        blocks.push_back(build_block(spec.generators()[i], d, spec, i));
        total_cols += blocks.back().cols();
    }
    R0Matrix entries(spec.coeff(), rows.size(), total_cols);
    std::size_t offset = 0;
    for (const auto& block : blocks) {
        for (std::size_t j = 0; j < block.cols(); ++j) {
            labels.push_back(block.col_basis()[j]);
            for (std::size_t i = 0; i < rows.size(); ++i)
                entries.at(i, offset + j) = block.entry(i, j);
        }
        offset += block.cols();
    }
    return ComponentMatrix(d, std::move(rows), std::move(labels), std::move(entries));
}

} // namespace lct
