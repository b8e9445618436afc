#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "winlose/enumerate.hpp"
#include "winlose/gadgets.hpp"
#include "winlose/json_io.hpp"
#include "winlose/reduction.hpp"
#include "winlose/sat.hpp"
#include "winlose/scenario.hpp"
#include "winlose/symmetrize.hpp"

namespace {

using namespace winlose;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;

std::uint64_t effective_seed(std::uint64_t cli_seed) {
  if (const char* env = std::getenv("WINLOSE_LAB_SEED")) return std::strtoull(env, nullptr, 10);
  return cli_seed;
}

Game load_game(const std::string& path) {
  return game_from_json(nlohmann::json::parse(read_file(path)));
}

// A gadget is named either by id (g1..g5) or by a game JSON file.
Game gadget_from_arg(const std::string& arg, int h, int k) {
  if (arg.size() == 2 && (arg[0] == 'g' || arg[0] == 'G')) {
    GadgetId id = GadgetId::parse(arg, arg[1] == '1' ? h : k);
    return build_gadget(id);
  }
  return load_game(arg);
}

void emit(const nlohmann::json& j, const std::string& out_path) {
  if (out_path.empty())
    std::cout << j.dump(2) << "\n";
  else
    write_file(out_path, j.dump(2) + "\n");
}

int report_exit(const Report& rep) {
  rep.print(std::cout);
  return rep.all_pass() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic toolkit for win-lose games: gadgets, the 3SAT "
               "construction, symmetrization, and a brute-force equilibrium oracle"};
  app.require_subcommand(1);
  // --h is a domain flag (cycle length), so help lives on --help only.
  app.set_help_flag("--help", "print help");

  std::string arg_id, arg_out, arg_layout, arg_cnf, arg_game, arg_profile, arg_base_layout;
  int arg_h = 1, arg_k = 1, arg_players = 0, arg_jobs = 0, arg_cap = 12, arg_samples = 10000;
  std::uint64_t arg_seed = 1;
  bool flag_pure = false, flag_uniform = false, flag_symmetric = false, flag_witnesses = false;

  auto* c_gadget = app.add_subcommand("gadget", "build a gadget game as JSON");
  c_gadget->set_help_flag("--help", "print help");
  c_gadget->add_option("id", arg_id, "g1|g2|g3|g4|g5")->required();
  c_gadget->add_option("--h", arg_h, "cycle length for g1");
  c_gadget->add_option("--k", arg_k, "diagonal size for g5");
  c_gadget->add_option("-o,--out", arg_out, "output file (stdout if omitted)");

  auto* c_gverify = app.add_subcommand("gadget-verify", "machine-check a gadget's claims");
  c_gverify->set_help_flag("--help", "print help");
  c_gverify->add_option("id", arg_id)->required();
  c_gverify->add_option("--h", arg_h);
  c_gverify->add_option("--k", arg_k);
  c_gverify->add_option("--seed", arg_seed);
  c_gverify->add_option("--jobs", arg_jobs);

  auto* c_sat = app.add_subcommand("sat-count", "brute-force #phi and parity");
  c_sat->set_help_flag("--help", "print help");
  c_sat->add_option("cnf", arg_cnf, "DIMACS file")->required();
  c_sat->add_flag("--witnesses", flag_witnesses, "also print satisfying assignments");
  c_sat->add_option("--jobs", arg_jobs);
  c_sat->add_option("-o,--out", arg_out, "write witness JSON here");

  auto* c_reduce = app.add_subcommand("reduce", "build the constructed game from gadget + CNF");
  c_reduce->set_help_flag("--help", "print help");
  c_reduce->add_option("--gadget", arg_id, "g1..g5 or a game JSON file")->required();
  c_reduce->add_option("--cnf", arg_cnf)->required();
  c_reduce->add_option("--h", arg_h);
  c_reduce->add_option("--k", arg_k);
  c_reduce->add_option("--players", arg_players, "expected player count (validated)");
  c_reduce->add_option("-o,--out", arg_out);
  c_reduce->add_option("--layout", arg_layout, "write the strategy layout here");

  auto* c_rcheck = app.add_subcommand("reduce-check", "verify the construction's equilibrium map");
  c_rcheck->set_help_flag("--help", "print help");
  c_rcheck->add_option("--gadget", arg_id)->required();
  c_rcheck->add_option("--cnf", arg_cnf)->required();
  c_rcheck->add_option("--h", arg_h);
  c_rcheck->add_option("--k", arg_k);
  c_rcheck->add_option("--samples", arg_samples);
  c_rcheck->add_option("--seed", arg_seed);
  c_rcheck->add_option("--jobs", arg_jobs);

  auto* c_sym = app.add_subcommand("symmetrize", "block symmetrization of a bimatrix game");
  c_sym->set_help_flag("--help", "print help");
  c_sym->add_option("game", arg_game)->required();
  c_sym->add_option("-o,--out", arg_out);
  c_sym->add_option("--layout", arg_layout, "write the half layout here");
  c_sym->add_option("--base-layout", arg_base_layout,
                    "reduction layout JSON; carries literal roles into the output layout");

  auto* c_embed = app.add_subcommand("embed-diagonal", "append the k-strategy diagonal block");
  c_embed->set_help_flag("--help", "print help");
  c_embed->add_option("game", arg_game, "symmetrized game JSON")->required();
  c_embed->add_option("--layout", arg_layout, "half layout with literal roles")->required();
  c_embed->add_option("--k", arg_k)->required();
  c_embed->add_option("-o,--out", arg_out);

  auto* c_pup = app.add_subcommand("pup-complete",
                                   "pure equilibrium or an equilibrium-preserving completion");
  c_pup->set_help_flag("--help", "print help");
  c_pup->add_option("game", arg_game)->required();
  c_pup->add_option("-o,--out", arg_out, "write the completed game here");

  auto* c_enum = app.add_subcommand("enumerate", "exact equilibrium enumeration");
  c_enum->set_help_flag("--help", "print help");
  c_enum->add_option("game", arg_game)->required();
  c_enum->add_flag("--pure", flag_pure, "pure equilibria only (any player count)");
  c_enum->add_flag("--uniform", flag_uniform, "uniform equilibria only");
  c_enum->add_flag("--symmetric", flag_symmetric, "symmetric equilibria only");
  c_enum->add_option("--cap", arg_cap, "per-player strategy cap for the oracle");
  c_enum->add_option("--jobs", arg_jobs);

  auto* c_verify = app.add_subcommand("verify", "check a profile against a game");
  c_verify->set_help_flag("--help", "print help");
  c_verify->add_option("game", arg_game)->required();
  c_verify->add_option("profile", arg_profile)->required();

  auto* c_ghr = app.add_subcommand("ghr-count", "counting identity for the symmetrization");
  c_ghr->set_help_flag("--help", "print help");
  c_ghr->add_option("game", arg_game)->required();
  c_ghr->add_option("--jobs", arg_jobs);

  auto* c_scen = app.add_subcommand("scenario", "prebuilt constructive verification suites");
  c_scen->set_help_flag("--help", "print help");
  c_scen->add_option("id", arg_id,
                     "group1|group2|group3|group4|symmetric-nash-witness|rational-nash-witness")
      ->required();
  c_scen->add_option("--cnf", arg_cnf)->required();
  c_scen->add_option("--k", arg_k);
  c_scen->add_option("--seed", arg_seed);
  c_scen->add_option("--jobs", arg_jobs);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*c_gadget) {
      const Game g = build_gadget(GadgetId::parse(arg_id, arg_id == "g5" ? arg_k : arg_h));
      emit(game_to_json(g), arg_out);
      return kExitOk;
    }
    if (*c_gverify) {
      GadgetVerifyOptions opt;
      opt.seed = effective_seed(arg_seed);
      opt.jobs = arg_jobs;
      return report_exit(verify_gadget(GadgetId::parse(arg_id, arg_id == "g5" ? arg_k : arg_h), opt));
    }
    if (*c_sat) {
      const CnfFormula f = parse_dimacs(read_file(arg_cnf));
      const SatCount res = count_sat(f, flag_witnesses, arg_jobs);
      std::cout << "#phi=" << res.count << " parity=" << res.parity << "\n";
      if (flag_witnesses) {
        nlohmann::json j;
        j["count"] = res.count;
        j["witnesses"] = nlohmann::json::array();
        for (std::uint32_t w : *res.witnesses) {
          nlohmann::json lits = nlohmann::json::array();
          for (int v = 0; v < f.var_count; ++v)
            lits.push_back(((w >> v) & 1u) ? (v + 1) : -(v + 1));
          j["witnesses"].push_back(lits);
        }
        emit(j, arg_out);
      }
      return kExitOk;
    }
    if (*c_reduce) {
      const Game gadget = gadget_from_arg(arg_id, arg_h, arg_k);
      if (arg_players != 0 && arg_players != gadget.players()) {
        std::cerr << "error: --players " << arg_players << " but the gadget has "
                  << gadget.players() << "\n";
        return kExitUsage;
      }
      const CnfFormula f = parse_dimacs(read_file(arg_cnf));
      auto [game, layout] = build_reduction(gadget, f);
      emit(game_to_json(game), arg_out);
      if (!arg_layout.empty()) write_file(arg_layout, layout_to_json(layout).dump(2) + "\n");
      return kExitOk;
    }
    if (*c_rcheck) {
      const Game gadget = gadget_from_arg(arg_id, arg_h, arg_k);
      const CnfFormula f = parse_dimacs(read_file(arg_cnf));
      EquivalenceOptions opt;
      opt.samples = arg_samples;
      opt.seed = effective_seed(arg_seed);
      opt.jobs = arg_jobs;
      return report_exit(reduction_equivalence_check(gadget, f, opt));
    }
    if (*c_sym) {
      const Game base = load_game(arg_game);
      auto [sym, layout] = ghr_symmetrize(base);
      if (!arg_base_layout.empty()) {
        const ReductionLayout red =
            layout_from_json(nlohmann::json::parse(read_file(arg_base_layout)));
        layout = ghr_layout_for_reduction(red, layout);
      }
      emit(game_to_json(sym), arg_out);
      if (!arg_layout.empty()) write_file(arg_layout, ghr_layout_to_json(layout).dump(2) + "\n");
      return kExitOk;
    }
    if (*c_embed) {
      const Game sym = load_game(arg_game);
      const GhrLayout layout = ghr_layout_from_json(nlohmann::json::parse(read_file(arg_layout)));
      emit(game_to_json(diagonal_embed(sym, layout, arg_k)), arg_out);
      return kExitOk;
    }
    if (*c_pup) {
      const Game g = load_game(arg_game);
      const PupCompletion res = pup_complete(g);
      if (res.pure_ne) {
        std::cout << "pure-ne:";
        for (std::size_t i = 0; i < res.pure_ne->size(); ++i)
          std::cout << " " << g.labels(static_cast<int>(i))[(*res.pure_ne)[i]];
        std::cout << "\n";
      } else {
        std::cout << (res.completed->strategy_count(0) == g.strategy_count(0)
                          ? "already has the positive utility property\n"
                          : "completed with one auxiliary strategy per player\n");
        emit(game_to_json(*res.completed), arg_out);
      }
      return kExitOk;
    }
    if (*c_enum) {
      const Game g = load_game(arg_game);
      if (flag_pure) {
        const auto pure = enumerate_pure_ne(g);
        std::cout << pure.size() << " pure equilibria\n";
        for (const auto& s : pure) {
          for (std::size_t i = 0; i < s.size(); ++i)
            std::cout << (i ? " " : "") << g.labels(static_cast<int>(i))[s[i]];
          std::cout << "\n";
        }
        return kExitOk;
      }
      if (flag_uniform) {
        const auto res = enumerate_uniform_ne(g, {.max_strategies = 20, .jobs = arg_jobs});
        std::cout << res.size() << " uniform equilibria\n";
        for (const auto& p : res) std::cout << profile_to_json(g, p).dump() << "\n";
        return kExitOk;
      }
      EnumerationResult res =
          flag_symmetric ? enumerate_symmetric_ne(g, {.max_strategies = arg_cap, .jobs = arg_jobs})
                         : enumerate_ne_bimatrix(g, {.max_strategies = arg_cap, .jobs = arg_jobs});
      if (res.degenerate) {
        std::cout << "degenerate: some support pair carries a positive-dimensional "
                     "equilibrium set ("
                  << res.supports_scanned << " support pairs)\n";
        return kExitDegenerate;
      }
      std::cout << res.equilibria.size() << " equilibria (" << res.supports_scanned
                << " support pairs scanned)\n";
      for (const auto& p : res.equilibria) std::cout << profile_to_json(g, p).dump() << "\n";
      return kExitOk;
    }
    if (*c_verify) {
      const Game g = load_game(arg_game);
      const AnyProfile p = profile_from_json(g, nlohmann::json::parse(read_file(arg_profile)));
      const NashWitness w = std::visit([&](const auto& pp) { return is_nash(g, pp); }, p);
      if (w.is_nash) {
        std::cout << "NASH\n";
        return kExitOk;
      }
      std::cout << "NOT NASH (player " << w.player + 1 << " improves with strategy '"
                << g.labels(w.player)[w.strategy] << "')\n";
      return kExitCheckFailed;
    }
    if (*c_ghr) {
      const Game g = load_game(arg_game);
      const Report rep = ghr_count_identity_check(g, arg_jobs);
      rep.print(std::cout);
      for (const auto& line : rep.lines)
        if (line.pass && line.name.rfind("skipped(degenerate)", 0) == 0) return kExitDegenerate;
      return rep.all_pass() ? kExitOk : kExitCheckFailed;
    }
    if (*c_scen) {
      const CnfFormula f = parse_dimacs(read_file(arg_cnf));
      ScenarioOptions opt;
      opt.seed = effective_seed(arg_seed);
      opt.jobs = arg_jobs;
      return report_exit(run_scenario(ScenarioId::parse(arg_id, arg_k), f, opt));
    }
  } catch (const DimacsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
