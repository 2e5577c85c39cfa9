#include "qspinor/report.hpp"

#include <sstream>

namespace qspinor {

void Report::add(std::string name, std::string params, bool pass, std::string witness) {
    checks.push_back({std::move(name), std::move(params), pass, std::move(witness)});
}

void Report::merge(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

bool Report::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::size_t Report::failures() const {
    std::size_t n = 0;
    for (const auto& c : checks)
        if (!c.pass) ++n;
    return n;
}

std::string Report::to_text() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.pass ? "pass" : "FAIL") << "  " << c.name;
        if (!c.params.empty()) os << " [" << c.params << "]";
        if (!c.pass && !c.witness.empty()) os << "  residual: " << c.witness;
        os << "\n";
    }
    return os.str();
}

}  // namespace qspinor
