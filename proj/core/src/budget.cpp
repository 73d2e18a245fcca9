#include "fuzzhyper/budget.hpp"

#include <cstdlib>
#include <string>

namespace fuzzhyper {

namespace {

std::size_t read_env_budget(std::size_t fallback) {
    const char* raw = std::getenv("FUZZHYPER_BUDGET");
    if (raw == nullptr || *raw == '\0') return fallback;
    char* end = nullptr;
    unsigned long long v = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0' || v == 0) return fallback;
    return static_cast<std::size_t>(v);
}

}  // namespace

std::size_t enumeration_budget() {
    static const std::size_t value = read_env_budget(4096);
    return value;
}

std::size_t tracker_state_budget() {
    // Scales with the enumeration budget so that one knob controls both.
    return enumeration_budget() * 512;
}

}  // namespace fuzzhyper
