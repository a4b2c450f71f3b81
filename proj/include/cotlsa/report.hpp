#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cotlsa/matrix.hpp"

namespace cotlsa {

/// One failing instance of a checked identity.
struct Witness {
    std::string kind;                  // which identity failed, e.g. "jacobi", "bracket"
    std::vector<std::size_t> indices;  // basis indices of the failing tuple
    Vector lhs;
    Vector rhs;
};

/// Outcome of an exhaustive identity check over basis tuples.
///
/// `passed` is true iff no witness was recorded. Only the first
/// `kWitnessCap` failures are kept; `failures` counts all of them.
struct VerificationReport {
    static constexpr std::size_t kWitnessCap = 16;

    VerificationReport() = default;
    explicit VerificationReport(std::string name) : check(std::move(name)) {}

    std::string check;
    bool passed = true;
    std::size_t failures = 0;
    std::vector<Witness> witnesses;

    void record(Witness w) {
        passed = false;
        ++failures;
        if (witnesses.size() < kWitnessCap) witnesses.push_back(std::move(w));
    }

    /// Folds another report's failures into this one.
    void merge(const VerificationReport& other) {
        for (const auto& w : other.witnesses) {
            if (witnesses.size() < kWitnessCap) witnesses.push_back(w);
        }
        failures += other.failures;
        passed = passed && other.passed;
    }

    bool has_witness(const std::string& kind, std::vector<std::size_t> idx) const {
        for (const auto& w : witnesses)
            if (w.kind == kind && w.indices == idx) return true;
        return false;
    }
};

}  // namespace cotlsa
