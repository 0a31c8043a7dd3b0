#include "corpus.hpp"

#include <gtest/gtest.h>

using namespace robotgames;

namespace {

template <class S, class Game>
S started(S s, const Game& g, Position start, const std::vector<Move>& moves = {}) {
  s.init(g, start);
  for (const auto& m : moves) s.observe(m);
  return s;
}

Move zero() { return Move::plain(zero_move()); }
Move check1() { return Move::plain(positivity_check()); }

}  // namespace

// ---------------------------------------------------------------------------
// Game with states

TEST(EveRgs, ConnectorAfterPositivityCheck) {
  auto g = rgs_from_2cm(add_flags(corpus::load("two_counters")));
  auto eve = started(EveRgsStrategy(), g, Position{Turn::Adam, "q3[++]", Vec2(8, 2)}, {check1()});
  EXPECT_EQ(eve.propose(), (Move{Vec2(-1, 0), "q3[++]", "!T[++]"}));
}

TEST(EveRgs, EmptyingCancelsTheCheck) {
  auto g = rgs_from_2cm(add_flags(corpus::load("two_counters")));
  auto eve = started(EveRgsStrategy(), g, Position{Turn::Adam, "!T[++]", Vec2(8, 2)}, {check1()});
  EXPECT_EQ(eve.propose(), (Move{Vec2(-5, -1), "!T[++]", "!T[++]"}));
}

TEST(EveRgs, EmptyingReachesZero) {
  auto g = rgs_from_2cm(add_flags(corpus::load("two_counters")));
  auto eve = started(EveRgsStrategy(), g, Position{Turn::Adam, "!T[++]", Vec2(4, 1)}, {zero()});
  Move m = eve.propose();
  EXPECT_EQ(m, (Move{Vec2(-4, -1), "!T[++]", "!T[00]"}));
  EXPECT_TRUE((eve.position().vec + m.delta).is_zero());
}

TEST(EveRgs, SimulatesWithMatchingFlags) {
  auto p = build_pipeline(corpus::load("countdown"));
  ConstantStrategy<RgsGame> adam(zero());
  EveRgsStrategy eve;
  PlayTrace t = play(p.rgs, adam, eve, 10);
  RunResult run = run_machine(p.machine, 10);
  for (std::size_t r = 1; 2 * r < t.positions.size() && r < run.trace.size(); ++r) {
    const Position& pos = t.positions[2 * r];
    auto fs = parse_flagged_name(*pos.state);
    if (fs->top) break;
    EXPECT_EQ(fs->base, run.trace[r + 1].state);
    EXPECT_EQ(pos.vec, Vec2(4 * run.trace[r + 1].c1, run.trace[r + 1].c2));
  }
}

TEST(AdamRgs, PunishesFlagMismatch) {
  auto g = rgs_from_2cm(add_flags(corpus::load("countdown")));
  auto adam = started(AdamRgsReferee(), g, Position{Turn::Adam, "s2[+0]", Vec2(8, 0)},
                      {zero(), Move{Vec2(-4, 0), "s2[+0]", "s3[00]"}});
  EXPECT_TRUE(adam.punishing());
  EXPECT_EQ(adam.propose(), check1());
}

TEST(AdamRgs, WaitsAtThreeModFour) {
  auto g = rgs_from_2cm(add_flags(corpus::load("countdown")));
  auto adam = started(AdamRgsReferee(), g, Position{Turn::Adam, "s2[+0]", Vec2(7, 0)},
                      {zero(), Move{Vec2(-4, 0), "s2[+0]", "s3[00]"}});
  EXPECT_TRUE(adam.punishing());
  EXPECT_EQ(adam.propose(), zero());
}

TEST(AdamRgs, HonestPlayGetsZeroMoves) {
  auto p = build_pipeline(corpus::load("two_counters"));
  AdamRgsReferee adam;
  EveRgsStrategy eve;
  PlayTrace t = play(p.rgs, adam, eve, 5);
  EXPECT_EQ(t.verdict.kind, Verdict::Kind::Ongoing);
  for (std::size_t i = 0; i < t.moves.size(); i += 2) EXPECT_EQ(t.moves[i], zero());
  EXPECT_FALSE(adam.punishing());
}

TEST(AdamRgs, InvariantHoldsAgainstRandomEve) {
  auto p = build_pipeline(corpus::load("pingpong"));
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    AdamRgsReferee adam;
    RandomStrategy<RgsGame> eve(seed);
    PlayTrace t = play(p.rgs, adam, eve, 12);
    EXPECT_FALSE(t.verdict.eve_won());
    if (!adam.punished_after()) continue;
    for (std::size_t i = *adam.punished_after() + 1; i < t.positions.size(); i += 2) {
      if (t.positions[i].turn == Turn::Eve) EXPECT_TRUE(rgs_punishment_holds(t.positions[i]));
    }
  }
}

// ---------------------------------------------------------------------------
// Stateless game

TEST(EveRg, FinishesFromZeroZeroState) {
  auto p = build_pipeline(corpus::load("zz2"));
  RgContext ctx{&p.rgs, &p.rg};
  ConstantStrategy<RobotGame> adam(zero());
  EveRgStrategy eve(ctx);
  PlayTrace t = play(p.rg.game, adam, eve, 10);
  ASSERT_TRUE(t.verdict.eve_won());
  EXPECT_EQ(t.verdict.round, 2u);
  std::size_t s = p.rg.numbering.of("s2[00]");
  EXPECT_EQ(t.moves.back().delta, update_vector(p.rg.numbering, UpdateVector::move(s, 0)));
}

TEST(EveRg, DefendsCheckedStateWithPrimedPartner) {
  auto p = build_pipeline(corpus::load("two_counters"));
  RgContext ctx{&p.rgs, &p.rg};
  const auto& num = p.rg.numbering;
  const std::size_t n = num.n;
  Move chk = Move::plain(p.rg.check(n - 1));
  auto eve = started(EveRgStrategy(ctx), p.rg.game, initial_position(p.rg.game), {zero()});
  eve.observe(eve.propose());
  eve.observe(zero());
  eve.observe(eve.propose());
  ASSERT_EQ(eve.book().state, num.of("q3[++]"));
  eve.observe(chk);
  Vec2 want = update_vector(num, UpdateVector::move(num.of("q3[++]"), n - 2)) - p.rg.check(n - 1);
  EXPECT_EQ(eve.propose().delta, want);
}

TEST(EveRg, DrainsWithinTwoDefenceRounds) {
  auto p = build_pipeline(corpus::load("two_counters"));
  RgContext ctx{&p.rgs, &p.rg};
  const std::size_t n = p.rg.numbering.n;
  // the check comes with counters (4,1) at q2[++]
  ScriptedStrategy<RobotGame> adam({zero(), Move::plain(p.rg.check(n - 1))},
                                   std::make_unique<ConstantStrategy<RobotGame>>(zero()));
  EveRgStrategy eve(ctx);
  PlayTrace t = play(p.rg.game, adam, eve, 10);
  ASSERT_TRUE(t.verdict.eve_won());
  EXPECT_EQ(t.verdict.round, 3u);
}

TEST(AdamRg, HonestPlayGetsZeroMoves) {
  auto p = build_pipeline(corpus::load("countdown"));
  RgContext ctx{&p.rgs, &p.rg};
  AdamRgReferee adam(ctx);
  EveRgStrategy eve(ctx);
  PlayTrace t = play(p.rg.game, adam, eve, 10);
  EXPECT_TRUE(t.verdict.eve_won());
  EXPECT_EQ(adam.mode(), AdamRgReferee::Mode::Honest);
  for (std::size_t i = 0; i < t.moves.size(); i += 2) EXPECT_EQ(t.moves[i], zero());
}

TEST(AdamRg, PrematureDefenceTargetsTheDefendedCheck) {
  auto p = build_pipeline(corpus::load("two_counters"));
  RgContext ctx{&p.rgs, &p.rg};
  const auto& num = p.rg.numbering;
  const std::size_t n = num.n;
  const Int p8 = pow8(n);
  std::size_t s = num.of("q3[++]");
  std::optional<Vec2> defence;
  for (const auto& [v, info] : p.rg.eve_info) {
    if (info.kind == RgMoveKind::StateDefence && info.from == s && info.to == n - 2) defence = v;
  }
  ASSERT_TRUE(defence.has_value());
  // start so that the defence lands at residue 3*8^n + 5
  Vec2 start(1 - defence->x, 3 * p8 + 5 - defence->y);
  auto adam = started(AdamRgReferee(ctx), p.rg.game, Position{Turn::Adam, std::nullopt, start},
                      {zero(), Move::plain(*defence)});
  EXPECT_EQ(adam.mode(), AdamRgReferee::Mode::PrematurePunish);
  EXPECT_EQ(adam.target_check(), n - 2);
  EXPECT_EQ(adam.interval_move(), zero());
  // residue below 8^n: the interval rule checks the defended state
  Vec2 low(1 - defence->x, 5 - defence->y);
  auto adam2 = started(AdamRgReferee(ctx), p.rg.game, Position{Turn::Adam, std::nullopt, low},
                       {zero(), Move::plain(*defence)});
  EXPECT_EQ(adam2.interval_move(), Move::plain(p.rg.check(n - 2)));
}

TEST(AdamRg, InvariantHoldsAgainstRandomEve) {
  auto p = build_pipeline(corpus::load("halt_once"));
  RgContext ctx{&p.rgs, &p.rg};
  const std::size_t n = p.rg.numbering.n;
  std::size_t punished = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    AdamRgReferee adam(ctx);
    RandomStrategy<RobotGame> eve(seed);
    PlayTrace t = play(p.rg.game, adam, eve, 12);
    EXPECT_FALSE(t.verdict.eve_won()) << seed;
    if (!adam.punished_after()) continue;
    ++punished;
    for (std::size_t i = *adam.punished_after() + 1; i < t.positions.size(); ++i) {
      if (t.positions[i].turn == Turn::Eve) EXPECT_TRUE(rg_referee_invariant(adam.mode(), t.positions[i], n)) << seed;
    }
  }
  EXPECT_GT(punished, 0u);
}
