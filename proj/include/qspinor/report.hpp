#pragma once

#include <string>
#include <vector>

namespace qspinor {

/// One verification outcome; witness holds the nonzero residual on failure.
struct CheckResult {
    std::string name;
    std::string params;
    bool pass = false;
    std::string witness;
};

struct Report {
    std::vector<CheckResult> checks;

    void add(std::string name, std::string params, bool pass, std::string witness = "");
    void merge(const Report& other);
    bool all_pass() const;
    std::size_t failures() const;

    std::string to_text() const;  // one line per check
};

}  // namespace qspinor
