// Copyright 2026 The lvgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LVGAME_CLI_HPP_
#define LVGAME_CLI_HPP_

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lvgame/lvgame.hpp"
#include "lvgame/verify.hpp"

namespace lvgame::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitNumerical = 2;
inline constexpr int kExitUsage = 64;

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what, int code = kExitUsage)
      : Error(what), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

enum class Kind { kHelp, kEmbed, kSimulate, kRecover, kRegret, kLorenz, kVerify };

struct Command {
  Kind kind = Kind::kHelp;
  std::string help;
  std::uint64_t seed = kDefaultSeed;

  // embed
  std::string input, output;
  // simulate / regret / recover
  std::string game_file, glv_file, embedding_file, traj_file, out_file;
  std::optional<std::vector<double>> x0, p0;
  double t_end = 10.0;
  double tol = 1e-10;
  double sample_dt = 0.01;
  std::string method = "dp54";
  TimeMode time_mode = TimeMode::kGame;
  // lorenz
  LorenzParams lorenz;
  bool r_given = false;
  std::string out_prefix;
  // verify
  bool strict = false;
};

inline std::vector<double> parse_list(const std::string& text, const std::string& flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(cell, &used));
      if (used != cell.size()) throw std::invalid_argument(cell);
    } catch (const std::exception&) {
      throw UsageError(flag + ": '" + cell + "' is not a number");
    }
  }
  if (out.empty()) throw UsageError(flag + ": empty vector");
  return out;
}

inline Vector to_vector(const std::vector<double>& v) {
  return Eigen::Map<const Vector>(v.data(), static_cast<Eigen::Index>(v.size()));
}

// Parses the arguments after the program name.
inline Command parse_args(const std::vector<std::string>& args) {
  Command cmd;
  CLI::App app{"Embed GLV systems into matrix games and simulate replicator dynamics",
               "lvgame"};
  app.require_subcommand(0, 1);
  app.add_option("--seed", cmd.seed, "Seed for all pseudo-randomness");

  std::string x0_text, p0_text, mode_text = "game";
  const std::vector<std::string> modes{"game", "conjugate"};

  auto* embed_cmd = app.add_subcommand("embed", "Compile a GLV system into a game embedding");
  embed_cmd->add_option("--input", cmd.input, "GLV document")->required();
  embed_cmd->add_option("--output", cmd.output, "Embedding document")->required();

  auto* sim = app.add_subcommand("simulate", "Integrate a GLV system or a replicator flow");
  auto* game_opt = sim->add_option("--game", cmd.game_file, "Game or embedding document");
  auto* glv_opt = sim->add_option("--glv", cmd.glv_file, "GLV document");
  game_opt->excludes(glv_opt);
  auto* x0_opt = sim->add_option("--x0", x0_text, "Source state v1,v2,...");
  auto* p0_opt = sim->add_option("--p0", p0_text, "Simplex state v1,v2,...");
  x0_opt->excludes(p0_opt);
  sim->add_option("--t-end", cmd.t_end, "Final time")->check(CLI::PositiveNumber);
  sim->add_option("--tol", cmd.tol, "Relative and absolute tolerance")
      ->check(CLI::Range(1e-300, 1e-2));
  sim->add_option("--sample-dt", cmd.sample_dt, "Output sampling interval")
      ->check(CLI::PositiveNumber);
  sim->add_option("--method", cmd.method, "Integrator")->check(CLI::IsMember({"dp54", "rk4"}));
  sim->add_option("--time-mode", mode_text, "Replicator clock")->check(CLI::IsMember(modes));
  sim->add_option("--out", cmd.out_file, "Trajectory CSV (default: stdout)");

  auto* rec = app.add_subcommand("recover", "Map a replicator trajectory back to the source");
  rec->add_option("--embedding", cmd.embedding_file, "Embedding document")->required();
  rec->add_option("--traj", cmd.traj_file, "Replicator trajectory CSV")->required();
  rec->add_option("--out", cmd.out_file, "Recovered CSV (default: stdout)");

  auto* reg = app.add_subcommand("regret", "Time-averaged regret of a trajectory");
  reg->add_option("--game", cmd.game_file, "Game or embedding document")->required();
  reg->add_option("--traj", cmd.traj_file, "Replicator trajectory CSV")->required();
  reg->add_option("--out", cmd.out_file, "Regret CSV (default: stdout)");

  auto* lor = app.add_subcommand("lorenz", "Build and run the Lorenz game");
  lor->add_option("--sigma", cmd.lorenz.sigma)->check(CLI::PositiveNumber);
  lor->add_option("--rho", cmd.lorenz.rho)->check(CLI::PositiveNumber);
  lor->add_option("--beta", cmd.lorenz.beta)->check(CLI::PositiveNumber);
  auto* r_opt = lor->add_option("--r", cmd.lorenz.r, "Shift radius")->check(CLI::PositiveNumber);
  double lorenz_t_end = 200.0;
  lor->add_option("--t-end", lorenz_t_end, "Final time")->check(CLI::PositiveNumber);
  lor->add_option("--tol", cmd.tol)->check(CLI::Range(1e-300, 1e-2));
  lor->add_option("--time-mode", mode_text)->check(CLI::IsMember(modes));
  lor->add_option("--out-prefix", cmd.out_prefix, "Prefix for the four output files")
      ->required();

  auto* ver = app.add_subcommand("verify", "Run every invariant on built-in fixtures");
  ver->add_flag("--strict", cmd.strict, "Tighten every threshold 10x");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    cmd.kind = Kind::kHelp;
    cmd.help = app.help();
    return cmd;
  } catch (const CLI::CallForAllHelp&) {
    cmd.kind = Kind::kHelp;
    cmd.help = app.help("", CLI::AppFormatMode::All);
    return cmd;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  cmd.time_mode = mode_text == "conjugate" ? TimeMode::kConjugate : TimeMode::kGame;
  if (!x0_text.empty()) cmd.x0 = parse_list(x0_text, "--x0");
  if (!p0_text.empty()) cmd.p0 = parse_list(p0_text, "--p0");

  if (embed_cmd->parsed()) {
    cmd.kind = Kind::kEmbed;
  } else if (sim->parsed()) {
    cmd.kind = Kind::kSimulate;
    if (cmd.game_file.empty() && cmd.glv_file.empty()) {
      throw UsageError("simulate: one of --game or --glv is required");
    }
    if (!cmd.x0 && !cmd.p0) throw UsageError("simulate: one of --x0 or --p0 is required");
    if (!cmd.glv_file.empty() && cmd.p0) throw UsageError("simulate: --glv takes --x0");
  } else if (rec->parsed()) {
    cmd.kind = Kind::kRecover;
  } else if (reg->parsed()) {
    cmd.kind = Kind::kRegret;
  } else if (lor->parsed()) {
    cmd.kind = Kind::kLorenz;
    cmd.r_given = r_opt->count() > 0;
    if (!cmd.r_given) {
      cmd.lorenz.r = default_shift_radius(cmd.lorenz.sigma, cmd.lorenz.rho, cmd.lorenz.beta);
    }
    cmd.t_end = lorenz_t_end;
  } else if (ver->parsed()) {
    cmd.kind = Kind::kVerify;
  } else {
    throw UsageError("a subcommand is required\n" + app.help());
  }
  return cmd;
}

namespace detail {

inline IntegratorConfig command_config(const Command& cmd) {
  IntegratorConfig cfg;
  cfg.method = cmd.method == "rk4" ? Method::kRk4Fixed : Method::kDp54Adaptive;
  cfg.t_end = cmd.t_end;
  cfg.rel_tol = cfg.abs_tol = cmd.tol;
  cfg.sample_dt = cmd.sample_dt;
  return cfg;
}

// A "game" file may hold a bare payoff matrix or a full embedding.
struct GameFile {
  PayoffMatrix game;
  std::optional<GameEmbedding> embedding;
};

inline GameFile load_game(const std::string& path) {
  const nlohmann::json doc = parse_document(read_file(path));
  GameFile out;
  if (doc.is_object() && doc.contains("game")) {
    out.embedding = embedding_from_document(doc);
    out.game = out.embedding->game;
  } else {
    out.game = game_from_document(doc);
  }
  return out;
}

inline void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty()) {
    out << content;
  } else {
    write_file(path, content);
  }
}

inline bool color_enabled() { return std::getenv("NO_COLOR") == nullptr; }

}  // namespace detail

inline int execute(const Command& cmd, std::ostream& out) {
  switch (cmd.kind) {
    case Kind::kHelp:
      out << cmd.help;
      return kExitOk;

    case Kind::kEmbed: {
      const GlvSystem sys = glv_from_document(parse_document(read_file(cmd.input)));
      write_file(cmd.output, to_document(embed(sys)));
      return kExitOk;
    }

    case Kind::kSimulate: {
      const IntegratorConfig cfg = detail::command_config(cmd);
      Trajectory traj;
      if (!cmd.glv_file.empty()) {
        const GlvSystem sys = glv_from_document(parse_document(read_file(cmd.glv_file)));
        traj = simulate_glv(sys, to_vector(*cmd.x0), cfg);
      } else {
        const detail::GameFile file = detail::load_game(cmd.game_file);
        Vector p0;
        if (cmd.p0) {
          p0 = to_vector(*cmd.p0);
        } else if (file.embedding) {
          p0 = forward_map(*file.embedding, to_vector(*cmd.x0));
        } else {
          throw UsageError("simulate: --x0 needs an embedding document, not a bare game");
        }
        traj = simulate_replicator(file.game, p0, cmd.time_mode, cfg);
      }
      detail::emit(cmd.out_file, trajectory_csv(traj), out);
      return kExitOk;
    }

    case Kind::kRecover: {
      const GameEmbedding e =
          embedding_from_document(parse_document(read_file(cmd.embedding_file)));
      const Trajectory traj = trajectory_from_csv(read_file(cmd.traj_file));
      detail::emit(cmd.out_file, trajectory_csv(recover(e, traj)), out);
      return kExitOk;
    }

    case Kind::kRegret: {
      const detail::GameFile file = detail::load_game(cmd.game_file);
      const Trajectory traj = trajectory_from_csv(read_file(cmd.traj_file));
      detail::emit(cmd.out_file, regret_csv(time_avg_regret(file.game, traj)), out);
      return kExitOk;
    }

    case Kind::kLorenz: {
      const LorenzParams& p = cmd.lorenz;
      const GameEmbedding e = lorenz_game(p);
      IntegratorConfig cfg = detail::command_config(cmd);
      cfg.method = Method::kDp54Adaptive;
      const Vector x0 = Vector::Constant(3, p.r + 1.0);
      const Trajectory traj =
          simulate_replicator(e.game, forward_map(e, x0), cmd.time_mode, cfg);
      write_file(cmd.out_prefix + "game.json", to_document(e));
      write_file(cmd.out_prefix + "traj.csv", trajectory_csv(traj));
      write_file(cmd.out_prefix + "recovered.csv", trajectory_csv(recover(e, traj)));
      write_file(cmd.out_prefix + "regret.csv", regret_csv(time_avg_regret(e.game, traj)));
      return kExitOk;
    }

    case Kind::kVerify: {
      VerifyOptions opt;
      opt.strict = cmd.strict;
      opt.seed = cmd.seed;
      const VerifyReport report = run_verify(opt);
      const bool color = detail::color_enabled();
      for (const CheckResult& c : report.checks) {
        const char* tag = c.passed ? "PASS" : "FAIL";
        if (color) {
          out << (c.passed ? "\033[32m" : "\033[31m") << tag << "\033[0m";
        } else {
          out << tag;
        }
        out << "  " << c.name << "  (" << c.detail << ")\n";
      }
      std::size_t failed = 0;
      for (const CheckResult& c : report.checks) failed += c.passed ? 0 : 1;
      out << report.checks.size() - failed << "/" << report.checks.size() << " checks passed\n";
      return report.passed() ? kExitOk : kExitFailure;
    }
  }
  return kExitFailure;
}

// Full command-line behaviour: parse, dispatch, map errors to exit codes.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return execute(parse_args(args), out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return e.code();
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace lvgame::cli

#endif  // LVGAME_CLI_HPP_
