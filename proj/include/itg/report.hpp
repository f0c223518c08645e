#pragma once

// One-stop analysis report: validation, welfare provenance, the mediated
// optimum with its certificate, the binary characterization when it applies,
// the oracle's equilibrium census, and the value of mediation. JSON is the
// exact format; CSV renderers are provided for plotting and are lossy
// (decimal) by design.

#include "itg/binary.hpp"
#include "itg/oracle.hpp"
#include "itg/simulate.hpp"
#include "itg/vom.hpp"

#include <optional>
#include <string>

namespace itg {

struct ReportOptions {
  int alphabet = 0;  // 0 picks num_types + 1
  bool with_protocols = false;
  std::optional<CertifiedValue> certified;
};

Json build_report(const Game& game, const Welfare& welfare,
                  const ReportOptions& options = {});

// CSV renderers. Decimal rendering is lossy; every file says so on its
// comment line and the JSON output remains the exact source of truth.
std::string region_csv(const BinaryAnalysis& analysis);
std::string hull_csv(const PayoffHull& hull);
std::string simulation_csv(const SimulationResult& result);

}  // namespace itg
