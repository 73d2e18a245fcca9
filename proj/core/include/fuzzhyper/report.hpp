#pragma once

#include <string>
#include <vector>

namespace fuzzhyper {

/// One named verdict. `witness` carries a JSON fragment with supporting data,
/// or is empty when `exhaustive` marks a full enumeration pass.
struct CheckResult {
    std::string name;
    bool passed = false;
    std::string witness;  // JSON fragment, may be empty
    bool exhaustive = false;
};

/// Machine-readable result of a checker run. The verdict payload is fully
/// deterministic; wall time lives outside it in the envelope.
struct AnalysisReport {
    std::string suite;
    std::string instance;
    std::string params_json = "{}";
    std::vector<CheckResult> checks;
    bool partial = false;  // some sub-analysis skipped (budget)
    double wall_ms = 0.0;

    bool all_passed() const;
    std::string payload_json() const;            // deterministic
    std::string to_json(bool pretty = true) const;  // envelope with wall time
    std::string to_markdown() const;
};

}  // namespace fuzzhyper
