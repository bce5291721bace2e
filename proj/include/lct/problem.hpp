#pragma once

#include "lct/graded_ring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lct {

// Options block of a problem file; absent keys keep their defaults.
struct ProblemOptions {
    std::optional<long> dmax;
    std::optional<std::size_t> minor_budget;
    std::optional<unsigned> alpha_max;
    std::optional<unsigned> beta_max;
};

// Parsed .lct problem file: ring block (base ring, ordered U-variables with
// weights), ideal block (named homogeneous generators), optional options
// block. Files without U-variables are legal only for the char-p command.
class ProblemFile {
public:
    CoefficientRing ring;
    std::vector<std::string> u_names;
    std::vector<unsigned> weights;
    std::vector<std::string> generator_names;
    std::vector<SPolynomial> generators;
    ProblemOptions options;

    // Builds the graded spec; throws when no U-variables were declared.
    GradedRingSpec to_spec() const;
    // The generators as R_0 elements; throws unless every generator is free
    // of U-variables.
    std::vector<R0Element> charp_inputs() const;

    // Canonical text form; parse(pretty_print(p)) reproduces p exactly.
    std::string pretty_print() const;
};

// Parses the problem text; ParseError carries line and column.
ProblemFile parse_problem(const std::string& text);

// Expression parser used for the ideal block; exposed for tests.
SPolynomial parse_expression(const std::string& text, const CoefficientRing& ring,
                             const std::vector<std::string>& u_names);

bool operator==(const ProblemFile& a, const ProblemFile& b);

} // namespace lct
