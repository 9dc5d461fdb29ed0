#pragma once

#include <optional>
#include <string>
#include <vector>

#include "charmorph/matrix.hpp"

namespace charmorph {

/// One violated relation or equation, identified by a human-readable
/// kind (relation id, monomial, partition, multi-index or torsion
/// element) together with its nonzero residual.
struct Violation {
    std::string kind;
    std::optional<Matrix> matrix_witness;
    std::optional<Scalar> scalar_witness;

    std::string witness_str() const {
        if (matrix_witness) return matrix_witness->str();
        if (scalar_witness) return scalar_witness->str();
        return "";
    }
};

struct CheckStats {
    std::uint64_t equations = 0;
    double elapsed_seconds = 0.0;
};

/// Outcome of one certification procedure.  The verdict is derived:
/// pass exactly when no violation was recorded.
struct CheckReport {
    std::string check_name;
    std::vector<Violation> violations;
    CheckStats stats;

    bool passed() const { return violations.empty(); }
    const char* verdict() const { return passed() ? "pass" : "fail"; }
};

}  // namespace charmorph
