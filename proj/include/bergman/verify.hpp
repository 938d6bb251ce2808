#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bergman::verify {

struct Check {
    std::string name;
    bool passed = false;
    double observed = 0.0;
    double bound = 0.0;  // the tolerance or threshold the observation is held to
};

struct CaseReport {
    std::string name;
    std::string summary;
    bool passed = false;
    std::vector<Check> checks;
    double seconds = 0.0;
};

/// Named oracle-comparison cases, one per acceptance criterion.
std::vector<std::string> case_names();

CaseReport run_case(const std::string& name, std::uint64_t seed);

std::vector<CaseReport> run_all(std::uint64_t seed);

}  // namespace bergman::verify
