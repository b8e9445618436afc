#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "winlose/game.hpp"

namespace winlose {

struct ReductionLayout;
struct GhrLayout;

using AnyProfile = std::variant<Profile, QuadProfile>;

nlohmann::json game_to_json(const Game& g);
Game game_from_json(const nlohmann::json& j);

// Profiles serialize only their nonzero entries, keyed by strategy label.
nlohmann::json profile_to_json(const Game& g, const Profile& p);
nlohmann::json profile_to_json(const Game& g, const QuadProfile& p);
AnyProfile profile_from_json(const Game& g, const nlohmann::json& j);

nlohmann::json layout_to_json(const ReductionLayout& layout);
ReductionLayout layout_from_json(const nlohmann::json& j);

nlohmann::json ghr_layout_to_json(const GhrLayout& layout);
GhrLayout ghr_layout_from_json(const nlohmann::json& j);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace winlose
