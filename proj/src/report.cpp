#include "itg/report.hpp"

#include "itg/mediated.hpp"

#include <sstream>

namespace itg {

Json build_report(const Game& game, const Welfare& welfare,
                  const ReportOptions& options) {
  validate_game(game);
  validate_welfare(game, welfare);
  const int alphabet =
      options.alphabet > 0 ? options.alphabet : game.num_types() + 1;

  Json j;
  j["game"] = game_to_json(game);

  const MonotonicityReport mono = check_monotone(game, welfare);
  Json welfare_json;
  welfare_json["source"] = welfare.source;
  welfare_json["table"] = rational_table_to_json(welfare.table);
  welfare_json["monotone"] = mono.monotone;
  if (!mono.monotone)
    welfare_json["witness"] = Json{
        {"preferred", Json{{"type", game.type_labels[mono.preferred_type]},
                           {"action", game.action_labels[mono.preferred_action]}}},
        {"other", Json{{"type", game.type_labels[mono.other_type]},
                       {"action", game.action_labels[mono.other_action]}}}};
  j["welfare"] = std::move(welfare_json);

  const WelfareOptimum opt = maximize_welfare(game, welfare);
  j["mediated"] = Json{{"value", rational_to_json(opt.value)},
                       {"argmax", outcome_to_json(opt.argmax)},
                       {"certificate", certificate_to_json(opt.certificate)}};

  if (game.num_actions() == 2) {
    const BinaryAnalysis analysis = classify(game);
    Json binary = binary_analysis_to_json(game, analysis);
    const CheapTalkValue ct = cheaptalk_max_binary(game, welfare);
    binary["cheap_talk"] =
        Json{{"value", rational_to_json(ct.value)},
             {"method", ct.method == CheapTalkMethod::Exact ? "exact"
                                                            : "lower_bound"}};
    j["binary"] = std::move(binary);
  }

  const EquilibriumSet set = enumerate_equilibria(game, alphabet, welfare);
  Json oracle = equilibrium_set_to_json(set, options.with_protocols);
  oracle["payoff_hull"] = payoff_hull_to_json(convexify(set));
  j["oracle"] = std::move(oracle);

  j["mediation_value"] =
      mediation_value_to_json(value_of_mediation(game, welfare, options.certified));
  return j;
}

namespace {

constexpr const char* kLossyNote =
    "# decimal rendering (lossy); use the JSON output for exact rationals\n";

void append_decimal(std::ostringstream& out, const Rat& value) {
  out << to_double(value);
}

}  // namespace

std::string region_csv(const BinaryAnalysis& analysis) {
  std::ostringstream out;
  out.precision(17);
  out << kLossyNote << "p0,p1\n";
  for (const RatPoint& v : analysis.region_vertices) {
    append_decimal(out, v.first);
    out << ',';
    append_decimal(out, v.second);
    out << '\n';
  }
  return out.str();
}

std::string hull_csv(const PayoffHull& hull) {
  std::ostringstream out;
  out.precision(17);
  out << kLossyNote << "sender_value,receiver_value\n";
  for (const RatPoint& v : hull.vertices) {
    append_decimal(out, v.first);
    out << ',';
    append_decimal(out, v.second);
    out << '\n';
  }
  return out.str();
}

std::string simulation_csv(const SimulationResult& result) {
  std::ostringstream out;
  out.precision(17);
  out << kLossyNote << "quantity,trials,mean,std_error,reference\n";
  const auto row = [&](const char* name, const EmpiricalEstimate& est) {
    out << name << ',' << est.trials << ',' << est.mean << ',' << est.std_error
        << ',';
    if (est.reference) append_decimal(out, *est.reference);
    out << '\n';
  };
  row("sender", result.sender);
  row("receiver", result.receiver);
  if (result.welfare) row("welfare", *result.welfare);
  return out.str();
}

}  // namespace itg
