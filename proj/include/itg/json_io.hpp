#pragma once

// JSON wire format. All exact values travel as "p/q" strings (plain "p" when
// integral); integral JSON numbers are accepted on input, decimal numbers are
// rejected because they cannot round-trip exactly.

#include "itg/game.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace itg {

using Json = nlohmann::ordered_json;

Rat rational_from_json(const Json& j);
Json rational_to_json(const Rat& r);

std::vector<Rat> rational_row_from_json(const Json& j);
std::vector<std::vector<Rat>> rational_table_from_json(const Json& j);
Json rational_row_to_json(const std::vector<Rat>& row);
Json rational_table_to_json(const std::vector<std::vector<Rat>>& table);

// Game object keys: prior, sender_utility, receiver_utility (required);
// types, actions (optional labels, synthesized as t0..,a0.. when absent);
// welfare (optional table, surfaced via welfare_from_game_json).
Game game_from_json(const Json& j);
Json game_to_json(const Game& game);
std::optional<Welfare> welfare_from_game_json(const Json& j);

// A welfare file is either a bare table or an object with a "welfare" key.
Welfare welfare_from_json(const Json& j);

// An outcome file is either a bare table or an object with an "outcome" key.
Outcome outcome_from_json(const Json& j);
Json outcome_to_json(const Outcome& outcome);

// Reads and parses a JSON file; I/O and syntax problems become
// ValidationError(MalformedInput).
Json load_json_file(const std::string& path);

Game load_game_file(const std::string& path);

}  // namespace itg
