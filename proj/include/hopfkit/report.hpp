#pragma once

#include "hopfkit/graded_map.hpp"

#include <string>
#include <vector>

namespace hopfkit {

struct CheckResult {
    std::string name;
    std::string anchor;  // the identity being certified, as formula text
    bool pass = false;
    std::string witness;  // empty on success
};

struct Report {
    std::vector<CheckResult> entries;

    void add(std::string name, std::string anchor, bool pass, std::string witness = {});
    // Compares two maps; a space mismatch counts as a failure with a witness.
    bool expect_equal(std::string name, std::string anchor, const GradedMap& lhs, const GradedMap& rhs);
    bool expect_zero(std::string name, std::string anchor, const GradedMap& f);
    void merge(const Report& other, const std::string& prefix = {});

    bool ok() const;
    const CheckResult* first_failure() const;
    size_t failures() const;
};

}  // namespace hopfkit
