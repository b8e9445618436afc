#include "winlose/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "winlose/reduction.hpp"
#include "winlose/symmetrize.hpp"

namespace winlose {
namespace {

using nlohmann::json;

json utilities_to_json(const Game& g, int player_dim, std::vector<int>& profile) {
  json out = json::array();
  const int d = static_cast<int>(profile.size());
  if (player_dim == d) {
    for (int p = 0; p < g.players(); ++p) out.push_back(g.utility(profile, p).str());
    return out;
  }
  for (int s = 0; s < g.strategy_count(player_dim); ++s) {
    profile[player_dim] = s;
    out.push_back(utilities_to_json(g, player_dim + 1, profile));
  }
  profile[player_dim] = 0;
  return out;
}

void utilities_from_json(const json& node, int player_dim, int players,
                         const std::vector<int>& dims, std::vector<Rational>& flat) {
  if (player_dim == static_cast<int>(dims.size())) {
    if (!node.is_array() || static_cast<int>(node.size()) != players)
      throw std::invalid_argument("game json: leaf must hold one utility per player");
    for (const auto& v : node) flat.push_back(Rational::parse(v.get<std::string>()));
    return;
  }
  if (!node.is_array() || static_cast<int>(node.size()) != dims[player_dim])
    throw std::invalid_argument("game json: utilities shape mismatch");
  for (const auto& child : node) utilities_from_json(child, player_dim + 1, players, dims, flat);
}

int label_index(const Game& g, int player, const std::string& label) {
  const auto& ls = g.labels(player);
  for (std::size_t i = 0; i < ls.size(); ++i)
    if (ls[i] == label) return static_cast<int>(i);
  throw std::invalid_argument("profile json: unknown strategy label '" + label + "'");
}

}  // namespace

json game_to_json(const Game& g) {
  json j;
  j["players"] = g.players();
  j["strategies"] = json::array();
  for (int i = 0; i < g.players(); ++i) j["strategies"].push_back(g.labels(i));
  std::vector<int> profile(g.players(), 0);
  j["utilities"] = utilities_to_json(g, 0, profile);
  return j;
}

Game game_from_json(const json& j) {
  const int players = j.at("players").get<int>();
  std::vector<std::vector<std::string>> labels;
  for (const auto& l : j.at("strategies")) labels.push_back(l.get<std::vector<std::string>>());
  if (static_cast<int>(labels.size()) != players)
    throw std::invalid_argument("game json: players/strategies mismatch");
  std::vector<int> dims;
  for (const auto& l : labels) dims.push_back(static_cast<int>(l.size()));
  std::vector<Rational> flat;
  utilities_from_json(j.at("utilities"), 0, players, dims, flat);
  return Game(std::move(labels), std::move(flat));
}

json profile_to_json(const Game& g, const Profile& p) {
  json j;
  j["field"] = "rational";
  j["distributions"] = json::array();
  for (int i = 0; i < g.players(); ++i) {
    json d = json::object();
    for (int s = 0; s < g.strategy_count(i); ++s)
      if (!p.dist[i][s].is_zero()) d[g.labels(i)[s]] = p.dist[i][s].str();
    j["distributions"].push_back(std::move(d));
  }
  return j;
}

json profile_to_json(const Game& g, const QuadProfile& p) {
  json j;
  j["field"] = "quad_ext";
  j["distributions"] = json::array();
  for (int i = 0; i < g.players(); ++i) {
    json d = json::object();
    for (int s = 0; s < g.strategy_count(i); ++s)
      if (!p.dist[i][s].is_zero())
        d[g.labels(i)[s]] = {{"a", p.dist[i][s].a().str()}, {"b", p.dist[i][s].b().str()}};
    j["distributions"].push_back(std::move(d));
  }
  return j;
}

AnyProfile profile_from_json(const Game& g, const json& j) {
  const std::string field = j.at("field").get<std::string>();
  const auto& dists = j.at("distributions");
  if (static_cast<int>(dists.size()) != g.players())
    throw std::invalid_argument("profile json: wrong number of distributions");
  if (field == "rational") {
    Profile p;
    p.dist.resize(g.players());
    for (int i = 0; i < g.players(); ++i) {
      p.dist[i].assign(g.strategy_count(i), Rational(0));
      for (const auto& [label, value] : dists[i].items())
        p.dist[i][label_index(g, i, label)] = Rational::parse(value.get<std::string>());
    }
    return p;
  }
  if (field == "quad_ext") {
    QuadProfile p;
    p.dist.resize(g.players());
    for (int i = 0; i < g.players(); ++i) {
      p.dist[i].assign(g.strategy_count(i), QuadExt{});
      for (const auto& [label, value] : dists[i].items())
        p.dist[i][label_index(g, i, label)] =
            QuadExt(Rational::parse(value.at("a").get<std::string>()),
                    Rational::parse(value.at("b").get<std::string>()));
    }
    return p;
  }
  throw std::invalid_argument("profile json: field must be 'rational' or 'quad_ext'");
}

json layout_to_json(const ReductionLayout& layout) {
  json j;
  j["players"] = layout.players;
  j["n"] = layout.n;
  j["clauses"] = layout.clause_count;
  j["gadget_counts"] = layout.gadget_counts;
  return j;
}

ReductionLayout layout_from_json(const json& j) {
  ReductionLayout layout;
  layout.players = j.at("players").get<int>();
  layout.n = j.at("n").get<int>();
  layout.clause_count = j.at("clauses").get<int>();
  layout.gadget_counts = j.at("gadget_counts").get<std::vector<int>>();
  if (static_cast<int>(layout.gadget_counts.size()) != layout.players)
    throw std::invalid_argument("layout json: gadget_counts size mismatch");
  return layout;
}

json ghr_layout_to_json(const GhrLayout& layout) {
  json j;
  j["left"] = layout.left_count;
  j["right"] = layout.right_count;
  if (layout.has_literal_roles()) {
    j["literal_left"] = {layout.lit_left_begin, layout.lit_left_end};
    j["literal_right"] = {layout.lit_right_begin, layout.lit_right_end};
  } else {
    j["literal_left"] = nullptr;
    j["literal_right"] = nullptr;
  }
  return j;
}

GhrLayout ghr_layout_from_json(const json& j) {
  GhrLayout layout;
  layout.left_count = j.at("left").get<int>();
  layout.right_count = j.at("right").get<int>();
  if (!j.at("literal_left").is_null()) {
    layout.lit_left_begin = j.at("literal_left")[0].get<int>();
    layout.lit_left_end = j.at("literal_left")[1].get<int>();
    layout.lit_right_begin = j.at("literal_right")[0].get<int>();
    layout.lit_right_end = j.at("literal_right")[1].get<int>();
  }
  return layout;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace winlose
