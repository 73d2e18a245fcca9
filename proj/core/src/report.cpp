#include "fuzzhyper/report.hpp"

#include <json.hpp>

namespace fuzzhyper {

using nlohmann::json;

bool AnalysisReport::all_passed() const {
    if (partial) return false;
    for (const auto& check : checks)
        if (!check.passed) return false;
    return true;
}

std::string AnalysisReport::payload_json() const {
    json body;
    body["suite"] = suite;
    body["instance"] = instance;
    body["params"] = params_json.empty() ? json::object() : json::parse(params_json);
    body["partial"] = partial;
    json items = json::array();
    for (const auto& check : checks) {
        json item;
        item["name"] = check.name;
        item["verdict"] = check.passed;
        if (check.exhaustive)
            item["exhaustive_pass"] = true;
        else
            item["witness"] = check.witness.empty() ? json() : json::parse(check.witness);
        items.push_back(std::move(item));
    }
    body["checks"] = std::move(items);
    return body.dump(2);
}

std::string AnalysisReport::to_json(bool pretty) const {
    json envelope;
    envelope["report"] = json::parse(payload_json());
    envelope["wall_time_ms"] = wall_ms;
    return envelope.dump(pretty ? 2 : -1);
}

std::string AnalysisReport::to_markdown() const {
    std::string out = "# " + suite + " :: " + instance + "\n\n";
    out += "| check | verdict |\n|---|---|\n";
    for (const auto& check : checks)
        out += "| " + check.name + " | " + (check.passed ? "true" : "false") + " |\n";
    if (partial) out += "\n_partial: some sub-analyses skipped (budget)_\n";
    return out;
}

}  // namespace fuzzhyper
