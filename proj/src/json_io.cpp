#include "itg/json_io.hpp"

#include <fstream>

namespace itg {

Rat rational_from_json(const Json& j) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ValidationError(ValidationCode::MalformedInput, e.what());
    }
  }
  if (j.is_number_integer())
    return Rat(BigInt(j.get<long long>()));
  if (j.is_number())
    throw ValidationError(ValidationCode::MalformedInput,
                          "decimal number " + j.dump() +
                              " is not exact; write rationals as \"p/q\"");
  throw ValidationError(ValidationCode::MalformedInput,
                        "expected a rational, got " + j.dump());
}

Json rational_to_json(const Rat& r) { return format_rational(r); }

std::vector<Rat> rational_row_from_json(const Json& j) {
  if (!j.is_array())
    throw ValidationError(ValidationCode::MalformedInput,
                          "expected an array of rationals, got " + j.dump());
  std::vector<Rat> row;
  row.reserve(j.size());
  for (const Json& v : j) row.push_back(rational_from_json(v));
  return row;
}

std::vector<std::vector<Rat>> rational_table_from_json(const Json& j) {
  if (!j.is_array())
    throw ValidationError(ValidationCode::MalformedInput,
                          "expected a table (array of arrays)");
  std::vector<std::vector<Rat>> table;
  table.reserve(j.size());
  for (const Json& row : j) table.push_back(rational_row_from_json(row));
  return table;
}

Json rational_row_to_json(const std::vector<Rat>& row) {
  Json j = Json::array();
  for (const Rat& v : row) j.push_back(rational_to_json(v));
  return j;
}

Json rational_table_to_json(const std::vector<std::vector<Rat>>& table) {
  Json j = Json::array();
  for (const auto& row : table) j.push_back(rational_row_to_json(row));
  return j;
}

namespace {

std::vector<std::string> labels_or_default(const Json& j, const char* key,
                                           std::size_t count,
                                           const std::string& prefix) {
  if (j.contains(key)) {
    const Json& arr = j.at(key);
    if (!arr.is_array())
      throw ValidationError(ValidationCode::MalformedInput,
                            std::string(key) + " must be an array of strings");
    std::vector<std::string> labels;
    for (const Json& v : arr) {
      if (!v.is_string())
        throw ValidationError(ValidationCode::MalformedInput,
                              std::string(key) + " entries must be strings");
      labels.push_back(v.get<std::string>());
    }
    return labels;
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < count; ++i)
    labels.push_back(prefix + std::to_string(i));
  return labels;
}

const Json& required(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ValidationError(ValidationCode::MalformedInput,
                          std::string("missing required key \"") + key + "\"");
  return j.at(key);
}

}  // namespace

Game game_from_json(const Json& j) {
  Game game;
  game.prior = rational_row_from_json(required(j, "prior"));
  game.sender_utility = rational_table_from_json(required(j, "sender_utility"));
  game.receiver_utility =
      rational_table_from_json(required(j, "receiver_utility"));
  game.type_labels = labels_or_default(j, "types", game.prior.size(), "t");
  const std::size_t actions =
      game.sender_utility.empty() ? 0 : game.sender_utility.front().size();
  game.action_labels = labels_or_default(j, "actions", actions, "a");
  validate_game(game);
  return game;
}

Json game_to_json(const Game& game) {
  Json j;
  j["types"] = game.type_labels;
  j["actions"] = game.action_labels;
  j["prior"] = rational_row_to_json(game.prior);
  j["sender_utility"] = rational_table_to_json(game.sender_utility);
  j["receiver_utility"] = rational_table_to_json(game.receiver_utility);
  return j;
}

std::optional<Welfare> welfare_from_game_json(const Json& j) {
  if (!j.is_object() || !j.contains("welfare")) return std::nullopt;
  return Welfare{rational_table_from_json(j.at("welfare")), "file"};
}

Welfare welfare_from_json(const Json& j) {
  if (j.is_object() && j.contains("welfare"))
    return Welfare{rational_table_from_json(j.at("welfare")), "file"};
  return Welfare{rational_table_from_json(j), "file"};
}

Outcome outcome_from_json(const Json& j) {
  if (j.is_object() && j.contains("outcome"))
    return Outcome{rational_table_from_json(j.at("outcome"))};
  return Outcome{rational_table_from_json(j)};
}

Json outcome_to_json(const Outcome& outcome) {
  return rational_table_to_json(outcome.p);
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ValidationError(ValidationCode::MalformedInput,
                          "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(ValidationCode::MalformedInput,
                          path + ": " + e.what());
  }
}

Game load_game_file(const std::string& path) {
  return game_from_json(load_json_file(path));
}

}  // namespace itg
