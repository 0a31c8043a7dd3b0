#include "corpus.hpp"

#include <gtest/gtest.h>

using namespace robotgames;

namespace {

const Instruction kInc1{Op::Inc, Counter::C1};
const Instruction kDec1{Op::Dec, Counter::C1};
const Instruction kZero1{Op::ZeroTest, Counter::C1};
const Instruction kInc2{Op::Inc, Counter::C2};

MinskyMachine machine(std::vector<StateId> states, std::vector<Transition> ts) {
  MinskyMachine m;
  m.states = std::move(states);
  m.initial = m.states.front();
  m.sink = m.states.back();
  m.transitions = std::move(ts);
  return m;
}

// Steps of the machine until its sink, ignoring zero-zero configurations.
std::optional<std::size_t> sink_step(const MinskyMachine& m, std::size_t max_steps) {
  MachineConfig c{m.initial, 0, 0};
  for (std::size_t k = 0; k <= max_steps; ++k) {
    if (c.state == m.sink) return k;
    c = std::get<MachineConfig>(step_machine(m, c));
  }
  return std::nullopt;
}

std::size_t count_if(const FlaggedMachine& fm, const std::function<bool(const FlaggedTransition&)>& f) {
  return static_cast<std::size_t>(std::count_if(fm.transitions.begin(), fm.transitions.end(), f));
}

}  // namespace

// ---------------------------------------------------------------------------
// Zero-zero normalization

TEST(Normalize, ImmediateHaltReachesZeroZero) {
  auto m = machine({"s0", "s1", "bot"}, {{"s0", kInc1, "s1"}, {"s1", kDec1, "bot"}, {"s1", kZero1, "bot"}});
  RunResult r = run_machine(normalize_zero_zero(m), 100);
  EXPECT_EQ(r.outcome, RunOutcome::ZeroZero);
}

TEST(Normalize, IncrementerNeverHitsZeroZero) {
  auto m = corpus::load("incrementer");
  RunResult r = run_machine(normalize_zero_zero(m), 10000);
  EXPECT_EQ(r.outcome, RunOutcome::Exhausted);
}

TEST(Normalize, ZeroZeroOnlyAtTheFinalState) {
  std::vector<MinskyMachine> machines;
  for (const auto& [name, m] : corpus::all()) machines.push_back(m);
  for (std::uint64_t seed = 0; seed < 10; ++seed) machines.push_back(corpus::random_machine(3 + seed, 100 + seed));
  for (const auto& m : machines) {
    MinskyMachine nz = normalize_zero_zero(m);
    ASSERT_TRUE(validate_machine(nz).ok());
    RunResult r = run_machine(nz, 500);
    EXPECT_NE(r.outcome, RunOutcome::Sink);
    if (r.outcome == RunOutcome::ZeroZero) {
      EXPECT_EQ(r.trace.back().state, nz.sink);
      EXPECT_TRUE(sink_step(m, 500).has_value());
    }
    if (sink_step(m, 60)) EXPECT_EQ(run_machine(nz, 20000).outcome, RunOutcome::ZeroZero);
    else EXPECT_EQ(run_machine(nz, 2000).outcome, RunOutcome::Exhausted);
  }
}

// ---------------------------------------------------------------------------
// Flags

TEST(Flags, IncrementGivesFourTransitions) {
  auto m = machine({"s", "t", "bot"}, {{"s", kInc1, "t"}, {"t", kInc1, "bot"}});
  auto fm = add_flags(m);
  EXPECT_EQ(fm.states.size(), 12u);
  auto from_s = [](const FlaggedTransition& t) { return t.source.base == "s"; };
  EXPECT_EQ(count_if(fm, from_s), 4u);
  for (const auto& t : fm.transitions) {
    if (t.source.base != "s") continue;
    EXPECT_EQ(t.target.base, "t");
    EXPECT_EQ(t.target.c1, Flag::Plus);
    EXPECT_EQ(t.target.c2, t.source.c2);
  }
}

TEST(Flags, ZeroTestGivesTwoAndDecrementFour) {
  auto m = machine({"s0", "s", "t", "u", "bot"},
                   {{"s0", kInc1, "s"}, {"s", kDec1, "t"}, {"s", kZero1, "u"}, {"t", kInc1, "bot"}, {"u", kInc1, "bot"}});
  auto fm = add_flags(m);
  auto zero = [](const FlaggedTransition& t) { return t.source.base == "s" && t.instruction.op == Op::ZeroTest; };
  auto dec = [](const FlaggedTransition& t) { return t.source.base == "s" && t.instruction.op == Op::Dec; };
  EXPECT_EQ(count_if(fm, zero), 2u);
  EXPECT_EQ(count_if(fm, dec), 4u);
  for (const auto& t : fm.transitions) {
    if (zero(t)) {
      EXPECT_EQ(t.source.c1, Flag::Zero);
      EXPECT_EQ(t.target.base, "u");
    }
    if (dec(t)) {
      EXPECT_EQ(t.source.c1, Flag::Plus);
      EXPECT_EQ(t.target.c2, t.source.c2);
    }
  }
  std::set<std::string> dec_targets;
  for (const auto& t : fm.transitions) {
    if (dec(t)) dec_targets.insert(t.source.name() + ">" + t.target.name());
  }
  EXPECT_EQ(dec_targets, (std::set<std::string>{"s[+0]>t[00]", "s[+0]>t[+0]", "s[++]>t[0+]", "s[++]>t[++]"}));
}

TEST(Flags, SignMatchingRunProjectsToMachineRun) {
  std::vector<MinskyMachine> machines;
  for (const auto& [name, m] : corpus::all()) machines.push_back(m);
  for (std::uint64_t seed = 0; seed < 20; ++seed) machines.push_back(corpus::random_machine(2 + seed % 11, seed));
  for (const auto& m : machines) {
    RunResult r = run_machine(m, 200);
    auto flagged = run_flagged(add_flags(m), r.trace.size() - 1);
    ASSERT_EQ(flagged.size(), r.trace.size());
    for (std::size_t k = 0; k < flagged.size(); ++k) {
      EXPECT_EQ(flagged[k].state.base, r.trace[k].state);
      EXPECT_EQ(flagged[k].c1, r.trace[k].c1);
      EXPECT_EQ(flagged[k].c2, r.trace[k].c2);
      EXPECT_EQ(flagged[k].state.c1, flag_of(flagged[k].c1));
      EXPECT_EQ(flagged[k].state.c2, flag_of(flagged[k].c2));
    }
  }
}

TEST(Flags, NamesRoundTrip) {
  for (auto s : {FlaggedState::sim("q1", Flag::Plus, Flag::Zero), FlaggedState::emptying(Flag::Zero, Flag::Plus),
                 FlaggedState::emptying(Flag::Plus, Flag::Plus, true)}) {
    EXPECT_EQ(parse_flagged_name(s.name()), s);
  }
  EXPECT_FALSE(parse_flagged_name("q1").has_value());
  EXPECT_FALSE(parse_flagged_name("q1[0x]").has_value());
}

// ---------------------------------------------------------------------------
// Robot game with states

TEST(Rgs, AdamHasTheTwoPositivityMoves) {
  for (const auto& [name, m] : corpus::all()) {
    auto g = rgs_from_2cm(add_flags(m));
    EXPECT_EQ(g.adam_moves, (std::vector<Vec2>{Vec2(0, 0), Vec2(1, 0)})) << name;
  }
}

TEST(Rgs, SecondCounterFirstInitialConfig) {
  auto g = rgs_from_2cm(add_flags(corpus::load("c2_first")));
  EXPECT_EQ(g.initial_state, "b[0+]");
  EXPECT_EQ(g.initial, Vec2(0, 1));
}

TEST(Rgs, DecrementOfFirstCounterMovesByFour) {
  auto g = rgs_from_2cm(add_flags(corpus::load("zz2")));
  RgsMove want{"s1[+0]", Vec2(-4, 0), "s2[00]"};
  EXPECT_NE(std::find(g.eve_moves.begin(), g.eve_moves.end(), want), g.eve_moves.end());
}

TEST(Rgs, RejectsMachineNotStartingWithIncrement) {
  auto m = machine({"s0", "s1", "bot"}, {{"s0", kDec1, "s1"}, {"s0", kZero1, "s1"}, {"s1", kInc2, "bot"}});
  EXPECT_THROW(rgs_from_2cm(add_flags(m)), NotIncrementFirst);
}

// ---------------------------------------------------------------------------
// Stateless robot game

TEST(Rg, ExampleStepsThroughUpdateVectors) {
  StateNumbering num;
  num.n = 9;
  std::vector<Vec2> steps;
  apply_sequence(num, Vec2(1, 7),
                 {UpdateVector::add1(-1), UpdateVector::add2(1), UpdateVector::move(1, 2), UpdateVector::check(8)},
                 &steps);
  ASSERT_EQ(steps.size(), 5u);
  EXPECT_EQ(steps[1].y, 7);
  EXPECT_EQ(steps[2].y, Int(536870919));
  EXPECT_EQ(steps[3].y, Int(536870975));
  EXPECT_EQ(steps[4].y, Int(318767167));
  EXPECT_EQ(steps[4].x, 0);
}

TEST(Rg, ExampleInitialVector) {
  // two simulation states give n = 9; state 1 at (1,0)
  auto num = StateNumbering::for_simulation_states({"a[00]", "b[00]"});
  EXPECT_EQ(num.n, 9u);
  Vec2 v = Vec2(1, 0) + update_vector(num, UpdateVector::move(0, num.of("a[00]")));
  EXPECT_EQ(v, Vec2(1, 7));
}

TEST(Rg, UpdateVectorIndexErrors) {
  EXPECT_THROW(update_vector(9, UpdateVector::move(9, 0)), IndexOutOfRange);
  EXPECT_THROW(update_vector(9, UpdateVector::check(2)), IndexOutOfRange);
  EXPECT_THROW(update_vector(9, UpdateVector::check(9)), IndexOutOfRange);
}

TEST(Rg, NumberingLayout) {
  auto p = build_pipeline(corpus::load("zz2"));
  const auto& num = p.rg.numbering;
  EXPECT_EQ(num.n, 4 * p.machine.states.size() + 7);
  EXPECT_EQ(num.names[0], "!T[00]");
  EXPECT_EQ(num.names[1], "s0[00]");
  EXPECT_EQ(num.names[2], "s0[0+]");
  EXPECT_EQ(num.names[num.n - 1], "!T[++]");
  EXPECT_EQ(num.names[num.n - 2], "!T'[++]");
  EXPECT_EQ(num.names[num.n - 6], "!T'[0+]");
}

TEST(Rg, SimulatingMovesUseTheStateEncoding) {
  for (const auto& name : {"zz2", "c2_first", "pingpong"}) {
    auto p = build_pipeline(corpus::load(name));
    const auto& num = p.rg.numbering;
    const Int big = 4 * pow8(num.n);
    std::set<Vec2, std::less<>> eve(p.rg.game.eve_moves.begin(), p.rg.game.eve_moves.end());
    for (const auto& mv : p.rgs.eve_moves) {
      auto s = parse_flagged_name(mv.source), t = parse_flagged_name(mv.target);
      if (s->top || t->top) continue;
      Vec2 want(mv.delta.x, mv.delta.y * big - pow8(num.of(mv.source)) + pow8(num.of(mv.target)));
      EXPECT_TRUE(eve.count(want)) << name << " " << mv.source << " -> " << mv.target;
    }
  }
}

TEST(Rg, MoveCountsWithinBound) {
  EXPECT_EQ(eve_move_bound(32), 2083u);
  std::vector<MinskyMachine> machines;
  for (const auto& [name, m] : corpus::all()) machines.push_back(m);
  for (std::uint64_t seed = 0; seed < 11; ++seed) machines.push_back(corpus::random_machine(2 + seed, 500 + seed));
  for (const auto& m : machines) {
    auto p = build_pipeline(m);
    auto c = count_moves(p.rg.game, m.states.size());
    EXPECT_EQ(c.adam, 8u);
    EXPECT_LE(c.eve, eve_move_bound(m.states.size()));
  }
}

TEST(Rg, RejectsWrongShapedRgs) {
  auto p = build_pipeline(corpus::load("zz2"));
  RgsGame g = p.rgs;
  g.adam_moves.push_back(Vec2(2, 0));
  EXPECT_THROW(rg_from_rgs(g), WrongShape);
  g = p.rgs;
  g.states.push_back("plain");
  EXPECT_THROW(rg_from_rgs(g), WrongShape);
}

// ---------------------------------------------------------------------------
// Matrix game

TEST(MatrixGame, EmbedsEveryMoveAndInverts) {
  auto p = build_pipeline(corpus::load("countdown"));
  EXPECT_EQ(p.matrix.adam_mats.size(), p.rg.game.adam_moves.size());
  EXPECT_EQ(p.matrix.eve_mats.size(), p.rg.game.eve_moves.size());
  EXPECT_EQ(p.matrix.target, (Vec3{0, 1, 0}));
  EXPECT_EQ(p.matrix.initial, embed(p.rg.game.initial));
  auto back = rg_of_matrix(p.matrix);
  ASSERT_TRUE(back.has_value());
  RobotGame want = p.rg.game;
  want.normalize();
  EXPECT_EQ(*back, want);
}
