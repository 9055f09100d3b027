#pragma once

#include <stdexcept>
#include <string>

namespace qcomb {

// Base class for all failures raised by the library. Specific subclasses
// distinguish contract violations (bad input) from failures of identities
// the construction guarantees (an implementation bug, never bad input).
struct qcomb_error : std::runtime_error {
    explicit qcomb_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct non_exact_division : qcomb_error {
    explicit non_exact_division(const std::string& msg)
        : qcomb_error("non-exact division: " + msg) {}
};

struct zero_substitution_into_negative_power : qcomb_error {
    explicit zero_substitution_into_negative_power(const std::string& msg)
        : qcomb_error("zero substituted into negative power: " + msg) {}
};

struct parse_error : qcomb_error {
    explicit parse_error(const std::string& msg) : qcomb_error("parse error: " + msg) {}
};

struct malformed_permutation : qcomb_error {
    explicit malformed_permutation(const std::string& msg)
        : qcomb_error("malformed permutation: " + msg) {}
};

struct empty_block : qcomb_error {
    explicit empty_block(const std::string& msg) : qcomb_error("empty block: " + msg) {}
};

struct grade_mismatch : qcomb_error {
    explicit grade_mismatch(const std::string& msg) : qcomb_error("grade mismatch: " + msg) {}
};

struct index_out_of_range : qcomb_error {
    explicit index_out_of_range(const std::string& msg)
        : qcomb_error("index out of range: " + msg) {}
};

struct centrality_violation : qcomb_error {
    explicit centrality_violation(const std::string& msg)
        : qcomb_error("centrality violation: " + msg) {}
};

struct not_central : qcomb_error {
    explicit not_central(const std::string& msg) : qcomb_error("not central: " + msg) {}
};

struct singular_system : qcomb_error {
    explicit singular_system(const std::string& msg)
        : qcomb_error("singular linear system: " + msg) {}
};

struct grade_too_large : qcomb_error {
    explicit grade_too_large(const std::string& msg)
        : qcomb_error("grade too large: " + msg) {}
};

struct degenerate_plethysm_parameter : qcomb_error {
    explicit degenerate_plethysm_parameter(const std::string& msg)
        : qcomb_error("degenerate plethysm parameter: " + msg) {}
};

struct inadmissible_vertex : qcomb_error {
    explicit inadmissible_vertex(const std::string& msg)
        : qcomb_error("inadmissible vertex: " + msg) {}
};

struct resource_budget_exceeded : qcomb_error {
    explicit resource_budget_exceeded(const std::string& msg)
        : qcomb_error("resource budget exceeded: " + msg) {}
};

struct table_mismatch : qcomb_error {
    explicit table_mismatch(const std::string& msg) : qcomb_error("table mismatch: " + msg) {}
};

struct non_divisible : qcomb_error {
    explicit non_divisible(const std::string& msg) : qcomb_error("non-divisible: " + msg) {}
};

struct denominator_survives : qcomb_error {
    explicit denominator_survives(const std::string& msg)
        : qcomb_error("denominator survives shuffle product: " + msg) {}
};

struct limit_diverges : qcomb_error {
    explicit limit_diverges(const std::string& msg) : qcomb_error("limit diverges: " + msg) {}
};

struct singular_evaluation_matrix : qcomb_error {
    explicit singular_evaluation_matrix(const std::string& msg)
        : qcomb_error("singular evaluation matrix: " + msg) {}
};

struct verification_failure : qcomb_error {
    explicit verification_failure(const std::string& msg)
        : qcomb_error("verification failure: " + msg) {}
};

struct degree_mismatch : qcomb_error {
    explicit degree_mismatch(const std::string& msg) : qcomb_error("degree mismatch: " + msg) {}
};

struct mixed_alphabets : qcomb_error {
    explicit mixed_alphabets(const std::string& msg) : qcomb_error("mixed alphabets: " + msg) {}
};

}  // namespace qcomb
