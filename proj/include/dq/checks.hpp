#pragma once

#include "dq/representation.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dq {

struct CheckOptions {
    int dim = 1;
    std::uint64_t seed = 1;
    unsigned max_degree = 4;
    unsigned cases = 10;
};

struct Counterexample {
    std::string property;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::string expected;
    std::string actual;
};

struct CheckReport {
    unsigned checked = 0;
    std::vector<Counterexample> failures;

    bool ok() const { return failures.empty(); }
    void merge(const CheckReport& other);
};

/// module, polarization, agarwal, homomorphism, chart, jacobi, prequantization,
/// commutators, weyl, inverse, roundtrip
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws ConfigError for unknown names.
CheckReport run_suite(const std::string& name, const CheckOptions& options);

}  // namespace dq
