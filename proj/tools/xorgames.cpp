// Copyright 2026 The xorgames Authors
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


// xorgames: command-line front end.
//
// Exit codes: 0 success or verified, 1 negative decision or failed
// verification, 2 usage or input error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "xorgames/xorgames.hpp"

namespace {

using namespace xorgames;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct LoadedGame {
  Game game;
  std::string id;  // family name, or content hash for files
};

LoadedGame resolve_game(const std::string& source) {
  if (source.empty()) throw InvalidParameter("--game is required");
  if (std::filesystem::exists(source)) {
    Game g = load_game(source);
    return {g, game_hash(g)};
  }
  if (auto g = family_by_name(source)) return {*g, source};
  throw InvalidParameter("'" + source + "' is neither a readable file nor a known family");
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw InvalidParameter("cannot write '" + out_path + "'");
  out << text;
}

std::string game_text(const Game& g, const std::string& format) {
  return format == "json" ? serialize_game_json(g) : serialize_game(g);
}

std::string bits_string(const F2Vector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += v.get(i) ? '1' : '0';
  return s;
}

std::string real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Json load_json_file(const std::string& path) {
  if (path.empty()) throw InvalidParameter("--cert is required");
  return parse_json_text(read_file(path));
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto dash = item.find('-', 1);
    if (dash != std::string::npos) {
      const int lo = std::stoi(item.substr(0, dash));
      const int hi = std::stoi(item.substr(dash + 1));
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    } else {
      out.push_back(std::stoi(item));
    }
  }
  if (out.empty()) throw InvalidParameter("empty list '" + s + "'");
  return out;
}

std::vector<double> parse_real_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(std::stod(item));
  if (out.empty()) throw InvalidParameter("empty list '" + s + "'");
  return out;
}

struct Options {
  std::string game;
  std::string cert;
  std::string strategy;
  std::string out;
  std::string format = "text";
  std::uint64_t seed = 1;
  std::size_t trials = 100;

  std::string family;
  int k = 3;
  int n = 2;
  std::size_t m = 4;
  bool symmetric = false;

  std::string experiment;
  std::string ns;
  std::string densities;
  int bfs_max_n = 2;
  std::size_t bfs_max_len = 40;
  std::string state = "merp";
};

int cmd_gen_family(const Options& o) {
  auto g = family_by_name(o.family);
  if (!g) throw InvalidParameter("unknown family '" + o.family + "'");
  emit(game_text(*g, o.format), o.out);
  return kOk;
}

int cmd_gen_random(const Options& o) {
  Game g = o.symmetric ? random_symmetric_game(o.k, o.n, o.m, o.seed)
                       : random_game(o.k, o.n, o.m, o.seed);
  emit(game_text(g, o.format), o.out);
  return kOk;
}

int cmd_decide_classical(const Options& o) {
  const LoadedGame lg = resolve_game(o.game);
  if (auto s = classical_value1(lg.game)) {
    emit(Json{{"type", "classical_strategy"}, {"answers", bits_string(s->answers)}}.dump() + "\n",
         o.out);
    return kOk;
  }
  const auto r = classical_refutation(lg.game);
  emit(Json{{"type", "classical_refutation"}, {"y", bits_string(r->y)}}.dump() + "\n", o.out);
  return kNegative;
}

int cmd_decide_pref(const Options& o) {
  const LoadedGame lg = resolve_game(o.game);
  if (auto p = find_pref(lg.game)) {
    emit(pref_to_json(*p).dump() + "\n", o.out);
    return kOk;
  }
  std::cerr << "no PREF specification exists\n";
  return kNegative;
}

int cmd_decide_merp(const Options& o) {
  const LoadedGame lg = resolve_game(o.game);
  if (auto s = find_merp(lg.game)) {
    emit(merp_to_json(*s, lg.game.k(), lg.game.n()).dump() + "\n", o.out);
    return kOk;
  }
  std::cerr << "no MERP strategy with value 1 exists\n";
  return kNegative;
}

int cmd_decide_symmetric(const Options& o) {
  const LoadedGame lg = resolve_game(o.game);
  const SymmetricDecision d = decide_symmetric(lg.game);
  if (d.value1) {
    std::cerr << "value 1: MERP strategy\n";
    emit(merp_to_json(*d.merp, lg.game.k(), lg.game.n()).dump() + "\n", o.out);
    return kOk;
  }
  std::cerr << "value < 1: PREF specification\n";
  emit(pref_to_json(*d.pref).dump() + "\n", o.out);
  return kNegative;
}

int cmd_refute_build(const Options& o) {
  const LoadedGame lg = resolve_game(o.game);
  PrefSpecification pref;
  if (!o.cert.empty()) {
    pref = pref_from_json(load_json_file(o.cert));
  } else if (auto p = find_pref(lg.game)) {
    pref = *p;
  } else {
    std::cerr << "no PREF specification exists, so no refutation exists\n";
    return kNegative;
  }
  const RefutationCertificate cert = build_refutation_symmetric(lg.game, pref.z, lg.id);
  emit(refutation_to_json(cert).dump() + "\n", o.out);
  std::cerr << "length " << cert.indices.size() << ", value bound "
            << real(value_upper_bound_from_refutation(lg.game.m(), cert.indices.size())) << "\n";
  return kOk;
}

/// The certificate's game id must match the game it is checked against.
bool game_id_matches(const LoadedGame& lg, const std::string& id) {
  if (id.empty() || id == lg.id) return true;
  if (id.rfind("fnv1a:", 0) == 0) return id == game_hash(lg.game);
  auto fam = family_by_name(id);
  return fam && *fam == lg.game;
}

int cmd_refute_verify(const Options& o) {
  const LoadedGame lg = resolve_game(o.game);
  const RefutationCertificate cert = refutation_from_json(load_json_file(o.cert));
  if (!game_id_matches(lg, cert.game)) {
    std::cout << "not verified: certificate is for game '" << cert.game << "'\n";
    return kNegative;
  }
  for (std::size_t idx : cert.indices) {
    if (idx > lg.game.m()) {
      std::cout << "not verified: clause index " << idx << " out of range\n";
      return kNegative;
    }
  }
  if (is_refutation(lg.game, cert.indices)) {
    std::cout << "verified: refutation of length " << cert.indices.size() << "\n";
    return kOk;
  }
  std::cout << "not verified\n";
  return kNegative;
}

int cmd_value_exact(const Options& o) {
  const LoadedGame lg = resolve_game(o.game);
  const BigRational v = classical_value_exact(lg.game);
  std::cout << "classical_value " << to_string(v) << " (" << real(v.convert_to<double>()) << ")\n";
  return kOk;
}

int cmd_value_bound(const Options& o) {
  const LoadedGame lg = resolve_game(o.game);
  std::size_t length = 0;
  if (!o.cert.empty()) {
    const RefutationCertificate cert = refutation_from_json(load_json_file(o.cert));
    for (std::size_t idx : cert.indices) {
      if (idx > lg.game.m()) throw InvalidParameter("clause index out of range");
    }
    if (!is_refutation(lg.game, cert.indices)) {
      std::cout << "certificate is not a refutation; no bound\n";
      return kNegative;
    }
    length = cert.indices.size();
  } else {
    const auto pref = find_pref(lg.game);
    if (!pref) {
      std::cout << "no refutation exists; no bound below 1\n";
      return kNegative;
    }
    length = build_refutation_symmetric(lg.game, pref->z, lg.id).indices.size();
  }
  std::cout << "refutation_length " << length << "\nvalue_upper_bound "
            << real(value_upper_bound_from_refutation(lg.game.m(), length)) << "\n";
  return kOk;
}

int cmd_simulate_merp(const Options& o) {
  const LoadedGame lg = resolve_game(o.game);
  MerpStrategy s;
  if (!o.cert.empty()) {
    s = merp_from_json(load_json_file(o.cert));
  } else if (auto found = find_merp(lg.game)) {
    s = *found;
  } else {
    std::cout << "no MERP strategy with value 1 exists\n";
    return kNegative;
  }
  const MerpValue closed = merp_value(lg.game, s);
  const double simulated = simulate_merp(lg.game, s);
  std::cout << "exact_value_1 " << (closed.exact_value_1 ? "true" : "false") << "\nclosed_form "
            << real(closed.value) << "\nsimulated " << real(simulated) << "\n";
  return closed.exact_value_1 ? kOk : kNegative;
}

int cmd_simulate_123(const Options&) {
  const double residual = verify_123_residual(psi_123());
  const bool ok = residual <= kEigenTolerance;
  std::cout << "max_residual " << real(residual) << "\nsimulated_value "
            << real(simulate_strategy_value(game_123(), pauli_123_assignment(), psi_123()))
            << "\n" << (ok ? "verified" : "not verified") << "\n";
  return ok ? kOk : kNegative;
}

int cmd_simulate_custom(const Options& o) {
  const LoadedGame lg = resolve_game(o.game);
  if (o.strategy.empty()) throw InvalidParameter("--strategy is required");
  const ObservableAssignment a = observables_from_json(load_json_file(o.strategy));
  PureState state;
  if (o.state == "merp") {
    state = merp_state(lg.game.k());
  } else if (o.state == "psi123") {
    state = psi_123();
  } else {
    throw InvalidParameter("--state must be merp or psi123");
  }
  const double v = simulate_strategy_value(lg.game, a, state);
  const double residual = eigen_residual(lg.game, a, state);
  std::cout << "simulated_value " << real(v) << "\nmax_residual " << real(residual) << "\n";
  return v >= 1.0 - 1e-9 ? kOk : kNegative;
}

int cmd_experiment(const Options& o) {
  ExperimentConfig c;
  c.name = o.experiment;
  c.k = o.k;
  c.trials = o.trials;
  c.seed = o.seed;
  c.bfs_max_n = o.bfs_max_n;
  c.bfs_max_len = o.bfs_max_len;
  if (c.name == "cg_scaling") {
    c.ns = parse_int_list(o.ns.empty() ? "2-8" : o.ns);
  } else if (c.name == "shift_gadget_graph") {
    c.ns = parse_int_list(o.ns.empty() ? "2000" : o.ns);
    c.densities = parse_real_list(o.densities.empty() ? "3.3" : o.densities);
  } else if (c.name == "classical_sat") {
    c.ns = parse_int_list(o.ns.empty() ? "100" : o.ns);
    c.densities = parse_real_list(o.densities.empty() ? "0.5,0.7,0.8,0.9,1.0,1.2,1.5,2.0" : o.densities);
  } else {
    c.ns = parse_int_list(o.ns.empty() ? "30" : o.ns);
    c.densities = parse_real_list(o.densities.empty() ? "3.3" : o.densities);
  }
  std::ostringstream csv;
  run_experiment(c).write(csv);
  emit(csv.str(), o.out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Perfect-value decisions, certificates and experiments for XOR games"};
  app.require_subcommand(1);
  Options o;

  auto add_game = [&](CLI::App* sub) {
    sub->add_option("--game", o.game, "game file or family name")->required();
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", o.out, "output path"); };

  int (*action)(const Options&) = nullptr;
  auto bind = [&](CLI::App* sub, int (*fn)(const Options&)) {
    sub->callback([&action, fn] { action = fn; });
  };

  auto* gen = app.add_subcommand("gen", "write a game file");
  gen->require_subcommand(1);
  auto* gen_family = gen->add_subcommand("family", "named family: ghz, cg<n>, apd<K>, 123, small123");
  gen_family->add_option("name", o.family)->required();
  auto* gen_random = gen->add_subcommand("random", "uniform random game");
  gen_random->add_option("--k", o.k)->required()->check(CLI::Range(1, 64));
  gen_random->add_option("--n", o.n)->required()->check(CLI::Range(1, 1 << 20));
  gen_random->add_option("--m", o.m)->required()->check(CLI::Range(1, 1 << 24));
  gen_random->add_option("--seed", o.seed);
  gen_random->add_flag("--symmetric", o.symmetric, "close the clause list under permutations");
  for (auto* sub : {gen_family, gen_random}) {
    add_out(sub);
    sub->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
  }
  bind(gen_family, cmd_gen_family);
  bind(gen_random, cmd_gen_random);

  auto* decide = app.add_subcommand("decide", "decide perfect value");
  decide->require_subcommand(1);
  auto* d_classical = decide->add_subcommand("classical", "classical value 1 over F2");
  auto* d_pref = decide->add_subcommand("pref", "search for a PREF specification");
  auto* d_merp = decide->add_subcommand("merp", "search for a MERP strategy with value 1");
  auto* d_sym = decide->add_subcommand("symmetric", "full decision for symmetric games");
  for (auto* sub : {d_classical, d_pref, d_merp, d_sym}) {
    add_game(sub);
    add_out(sub);
  }
  bind(d_classical, cmd_decide_classical);
  bind(d_pref, cmd_decide_pref);
  bind(d_merp, cmd_decide_merp);
  bind(d_sym, cmd_decide_symmetric);

  auto* refute = app.add_subcommand("refute", "build or verify refutations");
  refute->require_subcommand(1);
  auto* r_build = refute->add_subcommand("build", "build a refutation for a symmetric game");
  add_game(r_build);
  add_out(r_build);
  r_build->add_option("--cert", o.cert, "PREF certificate to start from");
  auto* r_verify = refute->add_subcommand("verify", "check a refutation certificate");
  add_game(r_verify);
  r_verify->add_option("--cert", o.cert)->required();
  bind(r_build, cmd_refute_build);
  bind(r_verify, cmd_refute_verify);

  auto* value = app.add_subcommand("value", "game values");
  value->require_subcommand(1);
  auto* v_exact = value->add_subcommand("exact", "exact classical value");
  add_game(v_exact);
  auto* v_bound = value->add_subcommand("bound", "upper bound from a refutation");
  add_game(v_bound);
  v_bound->add_option("--cert", o.cert, "refutation certificate (built when omitted)");
  bind(v_exact, cmd_value_exact);
  bind(v_bound, cmd_value_bound);

  auto* simulate = app.add_subcommand("simulate", "state-vector simulation");
  simulate->require_subcommand(1);
  auto* s_merp = simulate->add_subcommand("merp", "simulate a MERP strategy");
  add_game(s_merp);
  s_merp->add_option("--cert", o.cert, "MERP certificate (found when omitted)");
  auto* s_123 = simulate->add_subcommand("game123", "check the Pauli strategy for the 123 game");
  auto* s_custom = simulate->add_subcommand("custom", "simulate an observables file");
  add_game(s_custom);
  s_custom->add_option("--strategy", o.strategy)->required();
  s_custom->add_option("--state", o.state)->check(CLI::IsMember({"merp", "psi123"}));
  bind(s_merp, cmd_simulate_merp);
  bind(s_123, cmd_simulate_123);
  bind(s_custom, cmd_simulate_custom);

  auto* experiment = app.add_subcommand("experiment", "random-game experiments (CSV)");
  experiment->add_option("name", o.experiment)
      ->required()
      ->check(CLI::IsMember({"pref_threshold", "classical_sat", "shift_gadget_graph", "cg_scaling"}));
  experiment->add_option("--k", o.k)->check(CLI::Range(1, 64));
  experiment->add_option("--n", o.ns, "list, e.g. 10,20 or 2-8");
  experiment->add_option("--density", o.densities, "list of m/n values");
  experiment->add_option("--trials", o.trials)->check(CLI::Range(1, 10000000));
  experiment->add_option("--seed", o.seed);
  experiment->add_option("--bfs-max-n", o.bfs_max_n);
  experiment->add_option("--bfs-max-len", o.bfs_max_len);
  add_out(experiment);
  bind(experiment, cmd_experiment);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (!action) {
    std::cerr << app.help();
    return kUsage;
  }
  try {
    return action(o);
  } catch (const xorgames::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const xorgames::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: bad number: " << e.what() << "\n";
    return kUsage;
  }
}
