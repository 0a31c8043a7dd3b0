// Command-line front end: machine checks, reductions, solving, lemma checks and
// a text play loop. Exit codes: 0 success, 1 domain failure, 2 usage or parse
// failure.

#include "robotgames/robotgames.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace robotgames;

namespace {

constexpr int kOk = 0;
constexpr int kDomain = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised for domain failures whose explanation was already printed.
struct DomainFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

MinskyMachine load_machine(const std::string& path) { return parse_machine(read_file(path)); }

// RGS and RG games are played and solved directly, matrix games through their
// vector form.
using PlayableGame = std::variant<RgsGame, RobotGame>;

PlayableGame playable(const AnyGame& g) {
  if (const auto* rgs = std::get_if<RgsGame>(&g)) return *rgs;
  if (const auto* rg = std::get_if<RobotGame>(&g)) return *rg;
  auto back = rg_of_matrix(std::get<MatrixGame>(g));
  if (!back) throw DomainFailure("matrix game is not in the (u,1,v) embedding shape");
  return *back;
}

// ---------------------------------------------------------------------------

int cmd_validate(const std::string& path) {
  MinskyMachine m = parse_machine_unchecked(read_file(path));
  auto report = validate_machine(m);
  if (report.ok()) {
    std::cout << "valid: " << m.states.size() << " states, " << m.transitions.size() << " transitions\n";
    return kOk;
  }
  std::cout << "invalid: " << report.str() << "\n";
  return kDomain;
}

int cmd_run(const std::string& path, std::size_t max_steps, bool trace) {
  MinskyMachine m = load_machine(path);
  RunResult r = run_machine(m, max_steps);
  if (trace) {
    for (std::size_t i = 0; i < r.trace.size(); ++i) std::cout << i << " " << r.trace[i] << "\n";
  }
  switch (r.outcome) {
    case RunOutcome::ZeroZero: std::cout << "ZeroZeroAt(" << r.step << ")\n"; break;
    case RunOutcome::Sink: std::cout << "SinkAt(" << r.step << ")\n"; break;
    case RunOutcome::Exhausted: std::cout << "Exhausted(" << max_steps << ")\n"; break;
  }
  return kOk;
}

int cmd_reduce(const std::string& path, const std::string& to, const std::string& out, bool normalize) {
  MinskyMachine m = load_machine(path);
  if (normalize) m = normalize_zero_zero(m);
  if (to == "normalized") {
    write_output(out, machine_text(normalize ? m : normalize_zero_zero(m)));
  } else if (to == "flags") {
    write_output(out, emit_flagged(add_flags(m)));
  } else {
    Pipeline p = build_pipeline(m);
    if (to == "rgs") write_output(out, emit_game(p.rgs));
    else if (to == "rg") write_output(out, emit_game(p.rg.game));
    else write_output(out, emit_game(p.matrix));
  }
  return kOk;
}

template <class Game>
void print_solve(const Game& g, std::size_t horizon, std::optional<long> box) {
  std::optional<Box> b;
  if (box) b = Box::square(Int(*box));
  Position start = initial_position(g);
  SolveResult r = minimax_winner(g, start, horizon, b);
  std::cout << r << "\n";
  for (const auto& [a, e] : r.witness) std::cout << "  Adam " << a << " -> Eve " << e << "\n";
  if (box && *box <= 64) {
    Region reg = attractor(g, *box);
    auto rank = attractor_win_rank(g, reg, start);
    std::cout << "attractor(" << *box << "): " << reg.size() << " positions, initial "
              << (rank ? "inside at rank " + std::to_string(*rank) : std::string("outside")) << "\n";
  }
}

int cmd_solve(const std::string& path, std::size_t horizon, std::optional<long> box) {
  if (box && *box < 0) throw UsageError("--box must be non-negative");
  PlayableGame g = playable(load_game(read_file(path)));
  std::visit([&](const auto& game) { print_solve(game, horizon, box); }, g);
  return kOk;
}

// ---------------------------------------------------------------------------
// Interactive play

template <class Game>
class HumanStrategy : public StrategyBase<Game, HumanStrategy<Game>> {
 public:
  HumanStrategy(std::istream& in, std::ostream& out) : in_(&in), out_(&out) {}

  Move propose() override {
    auto moves = legal_moves(this->game(), this->position());
    *out_ << this->position() << "\n";
    for (std::size_t i = 0; i < moves.size(); ++i) *out_ << "  [" << i << "] " << moves[i] << "\n";
    for (;;) {
      *out_ << "move> " << std::flush;
      std::string line;
      if (!std::getline(*in_, line)) throw EndOfInput();
      std::istringstream ls(line);
      std::size_t idx = 0;
      std::string rest;
      if (ls >> idx && !(ls >> rest) && idx < moves.size()) return moves[idx];
      *out_ << "enter an index between 0 and " << moves.size() - 1 << "\n";
    }
  }

  struct EndOfInput : std::runtime_error {
    EndOfInput() : std::runtime_error("end of input") {}
  };

 private:
  std::istream* in_;
  std::ostream* out_;
};

struct PlayContext {
  std::optional<Pipeline> pipeline;
  std::uint64_t seed = 1;
};

template <class Game>
std::unique_ptr<Strategy<Game>> generic_opponent(const std::string& name, bool adam, std::uint64_t seed) {
  if (name == "random") return std::make_unique<RandomStrategy<Game>>(seed);
  if (name == "greedy") return std::make_unique<GreedyStrategy<Game>>();
  if (name == "first") return std::make_unique<FirstLegalStrategy<Game>>();
  if (name == "zero" && adam) return std::make_unique<ConstantStrategy<Game>>(Move::plain(zero_move()));
  return nullptr;
}

std::unique_ptr<Strategy<RgsGame>> opponent_for(const RgsGame& g, const std::string& name, bool adam,
                                                const PlayContext& ctx) {
  if (auto s = generic_opponent<RgsGame>(name, adam, ctx.seed)) return s;
  if (name == "eve-sim-rgs" || name == "adam-ref-rgs") {
    if (name == "eve-sim-rgs" && adam) throw UsageError("eve-sim-rgs plays Eve");
    if (name == "adam-ref-rgs" && !adam) throw UsageError("adam-ref-rgs plays Adam");
    if (!ctx.pipeline) throw UsageError(name + " needs --machine");
    if (!(ctx.pipeline->rgs == g)) throw DomainFailure("game is not the RGS of the given machine");
    if (adam) return std::make_unique<AdamRgsReferee>();
    return std::make_unique<EveRgsStrategy>();
  }
  throw UsageError("unknown opponent '" + name + "' for a game with states");
}

std::unique_ptr<Strategy<RobotGame>> opponent_for(const RobotGame& g, const std::string& name, bool adam,
                                                  const PlayContext& ctx) {
  if (auto s = generic_opponent<RobotGame>(name, adam, ctx.seed)) return s;
  if (name == "eve-sim-rg" || name == "adam-ref-rg") {
    if (name == "eve-sim-rg" && adam) throw UsageError("eve-sim-rg plays Eve");
    if (name == "adam-ref-rg" && !adam) throw UsageError("adam-ref-rg plays Adam");
    if (!ctx.pipeline) throw UsageError(name + " needs --machine");
    if (!(ctx.pipeline->rg.game == g)) throw DomainFailure("game is not the robot game of the given machine");
    RgContext rc{&ctx.pipeline->rgs, &ctx.pipeline->rg};
    if (adam) return std::make_unique<AdamRgReferee>(rc);
    return std::make_unique<EveRgStrategy>(rc);
  }
  throw UsageError("unknown opponent '" + name + "' for a stateless game");
}

template <class Game>
int play_game(const Game& g, bool human_adam, const std::string& opponent, std::size_t rounds,
              const PlayContext& ctx) {
  HumanStrategy<Game> human(std::cin, std::cout);
  auto other = opponent_for(g, opponent, !human_adam, ctx);
  Strategy<Game>& adam = human_adam ? static_cast<Strategy<Game>&>(human) : *other;
  Strategy<Game>& eve = human_adam ? *other : static_cast<Strategy<Game>&>(human);
  PlayTrace trace;
  trace.positions.push_back(initial_position(g));
  adam.init(g, trace.positions.back());
  eve.init(g, trace.positions.back());
  try {
    play_rounds(g, adam, eve, 1, rounds, trace);
  } catch (const typename HumanStrategy<Game>::EndOfInput&) {
    std::cout << "\nstopped after " << trace.moves.size() << " moves\n";
    return kOk;
  }
  std::cout << "moves: " << describe_moves(trace.moves) << "\n" << trace.verdict << "\n";
  return kOk;
}

int cmd_play(const std::string& path, const std::string& as, const std::string& opponent, std::size_t rounds,
             const std::string& machine, std::uint64_t seed) {
  PlayContext ctx;
  ctx.seed = seed;
  if (!machine.empty()) ctx.pipeline = build_pipeline(load_machine(machine));
  PlayableGame g = playable(load_game(read_file(path)));
  bool human_adam = as == "adam";
  return std::visit([&](const auto& game) { return play_game(game, human_adam, opponent, rounds, ctx); }, g);
}

// ---------------------------------------------------------------------------

int cmd_verify(const std::string& path, const std::string& scenario, const VerifyOptions& opt) {
  MinskyMachine m = load_machine(path);
  std::vector<std::string> names;
  if (scenario == "all") names = all_scenarios();
  else names = {scenario};
  LemmaVerifier v(m, opt);
  bool ok = true;
  for (const auto& s : names) {
    LemmaReport r = v.run(s);
    std::cout << r.str() << "\n";
    ok = ok && r.passed;
  }
  return ok ? kOk : kDomain;
}

int cmd_count(const std::string& path) {
  MinskyMachine m = load_machine(path);
  Pipeline p = build_pipeline(m);
  MoveCount c = count_moves(p.rg.game, m.states.size());
  std::cout << "states " << c.machine_states << "\nadam " << c.adam << "\neve " << c.eve << "\nbound " << c.eve_bound
            << "\n";
  return c.adam_is_eight() && c.eve_within_bound() ? kOk : kDomain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reductions from two-counter machines to robot games"};
  app.require_subcommand(1);

  std::string machine, game, to, out, as, opponent, scenario, play_machine;
  std::size_t max_steps = 1000, horizon = 12, rounds = 50;
  long box = -1;
  bool trace = false, normalize = false;
  std::uint64_t seed = 1;
  VerifyOptions vopt;

  auto* validate = app.add_subcommand("validate", "check a machine against the structural rules");
  validate->add_option("machine", machine, "machine file")->required();

  auto* run = app.add_subcommand("run", "run a machine from (init,0,0)");
  run->add_option("machine", machine, "machine file")->required();
  run->add_option("--max-steps", max_steps, "step cap");
  run->add_flag("--trace", trace, "print every configuration");

  auto* reduce = app.add_subcommand("reduce", "emit one stage of the reduction chain");
  reduce->add_option("machine", machine, "machine file")->required();
  reduce->add_option("--to", to, "stage")->required()->check(CLI::IsMember({"normalized", "flags", "rgs", "rg", "matrix"}));
  reduce->add_option("-o,--output", out, "output file, '-' for stdout");
  reduce->add_flag("--normalize", normalize, "apply the zero-zero normalization first");

  auto* solve = app.add_subcommand("solve", "bounded minimax from the initial position");
  solve->add_option("game", game, "game file")->required();
  solve->add_option("--horizon", horizon, "rounds")->required();
  solve->add_option("--box", box, "square box bound; also runs the attractor when at most 64");

  auto* play = app.add_subcommand("play", "interactive text play");
  play->add_option("game", game, "game file")->required();
  play->add_option("--as", as, "side played from standard input")->required()->check(CLI::IsMember({"adam", "eve"}));
  play->add_option("--opponent", opponent,
                   "random, greedy, first, zero (Adam), eve-sim-rgs, adam-ref-rgs, eve-sim-rg, adam-ref-rg")
      ->required();
  play->add_option("--machine", play_machine, "machine the game was built from, for the proof strategies");
  play->add_option("--rounds", rounds, "round cap");
  play->add_option("--seed", seed, "seed for the random opponent");

  auto* verify = app.add_subcommand("verify", "check the proof strategies on one machine");
  verify->add_option("machine", machine, "machine file")->required();
  verify->add_option("--scenario", scenario, "L1..L8 or all")
      ->required()
      ->check(CLI::IsMember({"L1", "L2", "L3", "L4", "L5", "L6", "L7", "L8", "all"}));
  verify->add_option("--depth", vopt.depth, "rounds in which deviations are injected");
  verify->add_option("--horizon", vopt.horizon, "minimax horizon");
  verify->add_option("--samples", vopt.samples, "sampled continuations per deviation");
  verify->add_option("--seed", vopt.seed, "sampling seed");

  auto* count = app.add_subcommand("count", "move counts of the generated robot game");
  count->add_option("machine", machine, "machine file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return cmd_validate(machine);
    if (*run) return cmd_run(machine, max_steps, trace);
    if (*reduce) return cmd_reduce(machine, to, out, normalize);
    if (*solve) return cmd_solve(game, horizon, box < 0 ? std::nullopt : std::optional<long>(box));
    if (*play) return cmd_play(game, as, opponent, rounds, play_machine, seed);
    if (*verify) return cmd_verify(machine, scenario, vopt);
    if (*count) return cmd_count(machine);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  }
  return kUsage;
}
