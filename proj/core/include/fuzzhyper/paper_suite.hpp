#pragma once

#include <iosfwd>

#include "fuzzhyper/report.hpp"

namespace fuzzhyper {

/// The bundled verification battery: thirteen numbered suites covering the
/// metric identities, the constructive chain and shadowing machinery, and
/// the counterexample instances. Deterministic; prints one line per suite to
/// `progress` when given.
std::vector<CheckResult> run_paper_suite(std::ostream* progress = nullptr);

/// Single suite by number (1-13).
CheckResult run_paper_criterion(int number);

}  // namespace fuzzhyper
