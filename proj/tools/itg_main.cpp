// Command-line front end: validate inputs, compute mediated optima, run the
// binary characterization, enumerate one-round equilibria, simulate
// protocols, and report the value of mediation. Exact values are printed as
// "p/q" strings in JSON; CSV output is decimal and flagged lossy.
//
// Exit codes: 0 success, 2 rejected input (including usage errors),
// 3 internal invariant breach.

#include <CLI11.hpp>

#include "itg/json_io.hpp"
#include "itg/mediated.hpp"
#include "itg/report.hpp"

#include <cstdint>
#include <iostream>

namespace {

using namespace itg;

Welfare resolve_welfare(const Game& game, const std::string& spec,
                        const Json& game_json) {
  Welfare welfare;
  if (spec == "us") welfare = welfare_from_sender(game);
  else if (spec == "ur") welfare = welfare_from_receiver(game);
  else if (spec == "sum") welfare = welfare_sum(game);
  else if (!spec.empty()) welfare = welfare_from_json(load_json_file(spec));
  else if (auto from_game = welfare_from_game_json(game_json)) welfare = *from_game;
  else welfare = welfare_sum(game);
  validate_welfare(game, welfare);
  return welfare;
}

std::optional<CertifiedValue> load_certified(const std::string& path) {
  if (path.empty()) return std::nullopt;
  const Json j = load_json_file(path);
  if (!j.is_object() || !j.contains("value") || !j.contains("citation"))
    throw ValidationError(ValidationCode::MalformedInput,
                          "certified value file needs {value, citation}");
  return CertifiedValue{rational_from_json(j.at("value")),
                        j.at("citation").get<std::string>()};
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

void require_json_only(bool csv, const char* what) {
  if (csv)
    throw ValidationError(ValidationCode::MalformedInput,
                          std::string(what) +
                              " has no CSV rendering; use the JSON output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact equilibrium analysis for sender-receiver transmission games"};
  app.require_subcommand(1);

  std::string game_path, welfare_spec, certified_path;
  std::string outcome_path, protocol_path, check_path;
  bool csv = false, emit_equilibria = false, convex_hull_flag = false;
  int alphabet = 0;
  std::uint64_t seed = 0, trials = 10000, emit_transcripts = 0;

  const auto add_common = [&](CLI::App* sub, bool with_welfare = true) {
    sub->add_option("--game", game_path, "game description (JSON)")
        ->required();
    if (with_welfare)
      sub->add_option("--welfare", welfare_spec,
                      "welfare table: a JSON file, or us|ur|sum "
                      "(default: table embedded in the game file, else sum)");
    sub->add_flag("--csv", csv, "decimal CSV instead of exact JSON (lossy)");
  };

  CLI::App* validate_cmd =
      app.add_subcommand("validate", "check inputs and report ok");
  add_common(validate_cmd);
  validate_cmd->add_option("--outcome", outcome_path, "outcome table to check");
  validate_cmd->add_option("--protocol", protocol_path,
                           "one-round protocol to check");

  CLI::App* mediate_cmd = app.add_subcommand(
      "mediate", "welfare-best mediated equilibrium (exact LP)");
  add_common(mediate_cmd);
  mediate_cmd->add_option(
      "--check", check_path,
      "skip optimization; certify this outcome table instead");

  CLI::App* binary_cmd = app.add_subcommand(
      "analyze-binary", "closed-form region analysis for two-action games");
  add_common(binary_cmd);

  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle", "enumerate one-round cheap-talk equilibria");
  add_common(oracle_cmd);
  oracle_cmd->add_option("--alphabet", alphabet,
                         "message alphabet size (default: types + 1)");
  oracle_cmd->add_flag("--emit-equilibria", emit_equilibria,
                       "include full protocols, not just outcomes");
  oracle_cmd->add_flag("--convex-hull", convex_hull_flag,
                       "add the payoff hull of the equilibrium set");

  CLI::App* simulate_cmd = app.add_subcommand(
      "simulate", "seeded Monte Carlo playout of a protocol or outcome");
  add_common(simulate_cmd);
  simulate_cmd->add_option("--outcome", outcome_path,
                           "mediated outcome table (JSON)");
  simulate_cmd->add_option("--protocol", protocol_path,
                           "one-round protocol (JSON)");
  simulate_cmd->add_option("--trials", trials, "number of trials")
      ->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--seed", seed, "master seed");
  simulate_cmd->add_option("--emit-transcripts", emit_transcripts,
                           "include transcripts of the first N trials");

  CLI::App* vom_cmd =
      app.add_subcommand("vom", "value of mediation for a welfare function");
  add_common(vom_cmd);
  vom_cmd->add_option("--ct-certified", certified_path,
                      "externally certified cheap-talk value (JSON)");

  CLI::App* report_cmd =
      app.add_subcommand("report", "full analysis report (JSON)");
  add_common(report_cmd);
  report_cmd->add_option("--alphabet", alphabet,
                         "oracle alphabet size (default: types + 1)");
  report_cmd->add_flag("--emit-equilibria", emit_equilibria,
                       "include full protocols in the oracle section");
  report_cmd->add_option("--ct-certified", certified_path,
                         "externally certified cheap-talk value (JSON)");

  try {
    app.parse(argc, argv);

    const Json game_json = load_json_file(game_path);
    const Game game = game_from_json(game_json);

    if (validate_cmd->parsed()) {
      const Welfare welfare = resolve_welfare(game, welfare_spec, game_json);
      if (!outcome_path.empty())
        validate_outcome(game, outcome_from_json(load_json_file(outcome_path)));
      if (!protocol_path.empty())
        validate_protocol(game, protocol_from_json(load_json_file(protocol_path)));
      require_json_only(csv, "validate");
      print_json(Json{{"status", "ok"},
                      {"types", game.num_types()},
                      {"actions", game.num_actions()},
                      {"welfare_source", welfare.source}});
    } else if (mediate_cmd->parsed()) {
      require_json_only(csv, "mediate");
      if (!check_path.empty()) {
        const Outcome outcome = outcome_from_json(load_json_file(check_path));
        print_json(certificate_to_json(check_equilibrium(game, outcome)));
      } else {
        const Welfare welfare = resolve_welfare(game, welfare_spec, game_json);
        const WelfareOptimum opt = maximize_welfare(game, welfare);
        print_json(Json{{"value", rational_to_json(opt.value)},
                        {"argmax", outcome_to_json(opt.argmax)},
                        {"certificate", certificate_to_json(opt.certificate)}});
      }
    } else if (binary_cmd->parsed()) {
      const Welfare welfare = resolve_welfare(game, welfare_spec, game_json);
      const BinaryAnalysis analysis = classify(game);
      if (csv) {
        std::cout << region_csv(analysis);
      } else {
        Json j = binary_analysis_to_json(game, analysis);
        const CheapTalkValue ct = cheaptalk_max_binary(game, welfare);
        j["cheap_talk"] = Json{
            {"value", rational_to_json(ct.value)},
            {"method",
             ct.method == CheapTalkMethod::Exact ? "exact" : "lower_bound"}};
        print_json(j);
      }
    } else if (oracle_cmd->parsed()) {
      const Welfare welfare = resolve_welfare(game, welfare_spec, game_json);
      const int k = alphabet > 0 ? alphabet : game.num_types() + 1;
      const EquilibriumSet set = enumerate_equilibria(game, k, welfare);
      if (csv) {
        if (!convex_hull_flag)
          throw ValidationError(
              ValidationCode::MalformedInput,
              "oracle CSV renders the payoff hull; pass --convex-hull");
        std::cout << hull_csv(convexify(set));
      } else {
        Json j = equilibrium_set_to_json(set, emit_equilibria);
        if (convex_hull_flag) j["payoff_hull"] = payoff_hull_to_json(convexify(set));
        print_json(j);
      }
    } else if (simulate_cmd->parsed()) {
      const Welfare welfare = resolve_welfare(game, welfare_spec, game_json);
      if (outcome_path.empty() == protocol_path.empty())
        throw ValidationError(ValidationCode::MalformedInput,
                              "pass exactly one of --outcome or --protocol");
      SimulationResult result;
      if (!outcome_path.empty()) {
        const Outcome outcome = outcome_from_json(load_json_file(outcome_path));
        result = run_mediated(game, outcome, welfare, seed, trials,
                              emit_transcripts);
      } else {
        const OneRoundProtocol protocol =
            protocol_from_json(load_json_file(protocol_path));
        result = run_cheaptalk(game, protocol, welfare, seed, trials,
                               emit_transcripts);
      }
      if (csv) {
        std::cout << simulation_csv(result);
      } else {
        // Requested transcripts stream out first, one compact JSON object
        // per line, followed by the summary object.
        for (const Transcript& t : result.transcripts)
          std::cout << transcript_to_json(t).dump() << "\n";
        print_json(simulation_to_json(result, /*with_transcripts=*/false));
      }
    } else if (vom_cmd->parsed()) {
      require_json_only(csv, "vom");
      const Welfare welfare = resolve_welfare(game, welfare_spec, game_json);
      print_json(mediation_value_to_json(
          value_of_mediation(game, welfare, load_certified(certified_path))));
    } else if (report_cmd->parsed()) {
      require_json_only(csv, "report");
      const Welfare welfare = resolve_welfare(game, welfare_spec, game_json);
      ReportOptions options;
      options.alphabet = alphabet;
      options.with_protocols = emit_equilibria;
      options.certified = load_certified(certified_path);
      print_json(build_report(game, welfare, options));
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
