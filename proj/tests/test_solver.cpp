#include "corpus.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace robotgames;

namespace {

RobotGame small_game(std::vector<Vec2> adam, std::vector<Vec2> eve, Vec2 start) {
  RobotGame g{std::move(adam), std::move(eve), std::move(start)};
  g.normalize();
  return g;
}

RobotGame random_game(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-2, 2), count(1, 3);
  RobotGame g;
  int na = count(rng), ne = count(rng) + 1;
  for (int i = 0; i < na; ++i) g.adam_moves.emplace_back(entry(rng), entry(rng));
  for (int i = 0; i < ne; ++i) g.eve_moves.emplace_back(entry(rng), entry(rng));
  g.initial = Vec2(entry(rng), entry(rng));
  g.normalize();
  return g;
}

// Plain memoized forward minimax, written independently of the backward solver.
class ForwardMinimax {
 public:
  ForwardMinimax(const RobotGame& g, long box) : g_(g), box_(box) {}

  // true when Eve forces the zero vector within k rounds from an Adam turn
  bool adam_turn(const Vec2& v, std::size_t k) {
    if (k == 0 || !inside(v)) return false;
    auto key = std::make_tuple(v.x.convert_to<long>(), v.y.convert_to<long>(), k);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool all = true;
    for (const auto& a : g_.adam_moves) {
      Vec2 u = v + a;
      bool any = false;
      if (inside(u)) {
        for (const auto& e : g_.eve_moves) {
          Vec2 w = u + e;
          if (w.is_zero() || adam_turn(w, k - 1)) {
            any = true;
            break;
          }
        }
      }
      if (!any) {
        all = false;
        break;
      }
    }
    memo_[key] = all;
    return all;
  }

 private:
  bool inside(const Vec2& v) const { return abs(v.x) <= box_ && abs(v.y) <= box_; }

  const RobotGame& g_;
  long box_;
  std::map<std::tuple<long, long, std::size_t>, bool> memo_;
};

}  // namespace

TEST(Minimax, ForcedWinInOneRound) {
  RobotGame g = small_game({Vec2(0, 0)}, {Vec2(-1, 0)}, Vec2(1, 0));
  SolveResult r = minimax_winner(g, initial_position(g), 2);
  EXPECT_EQ(r.kind, SolveResult::Kind::EveWinsWithin);
  EXPECT_EQ(r.rounds, 1u);
  ASSERT_EQ(r.witness.size(), 1u);
  EXPECT_EQ(r.witness[0].second, Move::plain(Vec2(-1, 0)));
}

TEST(Minimax, AdamEscapesByMovingAway) {
  RobotGame g = small_game({Vec2(1, 0), Vec2(0, 0)}, {Vec2(-1, 0)}, Vec2(1, 0));
  SolveResult r = minimax_winner(g, initial_position(g), 10);
  EXPECT_EQ(r.kind, SolveResult::Kind::NoEveWinWithin);
  EXPECT_EQ(r.rounds, 10u);
}

TEST(Minimax, HorizonZeroNeverWins) {
  RobotGame g = small_game({Vec2(0, 0)}, {Vec2(-1, 0)}, Vec2(1, 0));
  EXPECT_FALSE(minimax_winner(g, initial_position(g), 0).eve_wins());
}

TEST(Minimax, MonotoneInHorizon) {
  RobotGame g = small_game({Vec2(0, 0), Vec2(0, 1)}, {Vec2(-1, 0), Vec2(0, -1), Vec2(-1, -1)}, Vec2(3, 0));
  BoundedSolver<RobotGame> s(g);
  std::optional<std::size_t> first;
  for (std::size_t k = 0; k <= 8; ++k) {
    bool win = s.rank(initial_position(g), k).has_value();
    if (first) EXPECT_TRUE(win) << k;
    if (win && !first) first = k;
  }
  EXPECT_TRUE(first.has_value());
}

TEST(Minimax, PipelineGameOfZeroZeroMachine) {
  auto p = build_pipeline(corpus::load("zz2"));
  const Int y = 4 * pow8(p.rg.numbering.n);
  BoundedSolver<RobotGame> rg(p.rg.game, Box{Int(8), y});
  SolveResult r = rg.solve(initial_position(p.rg.game), 6);
  EXPECT_TRUE(r.eve_wins());
  // honest play wins the RG in round 2
  EXPECT_LE(r.rounds, 2u);
  BoundedSolver<RgsGame> rgs(p.rgs, Box{Int(16), Int(4)});
  SolveResult rr = rgs.solve(initial_position(p.rgs), 6);
  // the positivity check costs Eve one emptying round
  EXPECT_EQ(rr.rounds, 2u);
}

TEST(Minimax, NarrowAndWideLayersAgree) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    RobotGame g = random_game(rng);
    const Int huge = pow8(50);  // beyond 128 bits: forces the wide path
    BoundedSolver<RobotGame> narrow(g, Box::square(5));
    // same box expressed through a game that needs wide arithmetic
    RobotGame wide = g;
    wide.eve_moves.push_back(Vec2(huge, 0));
    wide.normalize();
    BoundedSolver<RobotGame> w(wide, Box::square(5));
    for (long x = -3; x <= 3; ++x) {
      for (long y = -3; y <= 3; ++y) {
        Position pos{Turn::Adam, std::nullopt, Vec2(x, y)};
        EXPECT_EQ(narrow.rank(pos, 6), w.rank(pos, 6));
      }
    }
  }
}

TEST(Minimax, MatchesForwardSearch) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    RobotGame g = random_game(rng);
    BoundedSolver<RobotGame> s(g, Box::square(4));
    ForwardMinimax f(g, 4);
    for (long x = -4; x <= 4; ++x) {
      for (long y = -4; y <= 4; ++y) {
        Vec2 v(x, y);
        bool back = s.rank(Position{Turn::Adam, std::nullopt, v}, 5).has_value();
        EXPECT_EQ(back, f.adam_turn(v, 5)) << i << " " << v;
      }
    }
  }
}

TEST(Attractor, TargetAlwaysInside) {
  RobotGame g = small_game({Vec2(1, 0)}, {Vec2(2, 2)}, Vec2(1, 1));
  for (long b : {0L, 1L, 3L}) {
    Region r = attractor(g, b);
    EXPECT_TRUE(r.contains(Position{Turn::Adam, std::nullopt, Vec2(0, 0)}));
  }
}

TEST(Attractor, OneStepPredecessors) {
  RobotGame g = small_game({Vec2(0, 0)}, {Vec2(-1, 0)}, Vec2(1, 0));
  Region r = attractor(g, 3);
  EXPECT_TRUE(r.contains(Position{Turn::Eve, std::nullopt, Vec2(1, 0)}));
  EXPECT_TRUE(r.contains(Position{Turn::Adam, std::nullopt, Vec2(1, 0)}));
  EXPECT_EQ(r.rank(Position{Turn::Adam, std::nullopt, Vec2(3, 0)}), 3);
  EXPECT_FALSE(r.contains(Position{Turn::Adam, std::nullopt, Vec2(-1, 0)}));
}

TEST(Attractor, MonotoneInBox) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    RobotGame g = random_game(rng);
    Region small = attractor(g, 3), large = attractor(g, 4);
    for (long x = -3; x <= 3; ++x) {
      for (long y = -3; y <= 3; ++y) {
        for (Turn t : {Turn::Adam, Turn::Eve}) {
          Position p{t, std::nullopt, Vec2(x, y)};
          if (small.contains(p)) EXPECT_TRUE(large.contains(p));
        }
      }
    }
  }
}

TEST(Attractor, AgreesWithMinimaxOnRandomGames) {
  std::mt19937_64 rng(2024);
  const long box = 6;
  for (int i = 0; i < 50; ++i) {
    RobotGame g = random_game(rng);
    Region reg = attractor(g, box);
    BoundedSolver<RobotGame> inbox(g, Box::square(box));
    BoundedSolver<RobotGame> free(g);
    Position start = initial_position(g);
    bool member = attractor_win_rank(g, reg, start).has_value();
    if (member) EXPECT_TRUE(free.rank(start, 8 * box).has_value()) << i;
    EXPECT_EQ(member, inbox.rank(start, 8 * box).has_value()) << i;
  }
}

TEST(Attractor, StartAtOriginNeedsARound) {
  RobotGame g = small_game({Vec2(1, 0)}, {Vec2(2, 2)}, Vec2(0, 0));
  Region r = attractor(g, 3);
  EXPECT_TRUE(r.contains(initial_position(g)));
  EXPECT_FALSE(attractor_win_rank(g, r, initial_position(g)).has_value());
  RobotGame h = small_game({Vec2(1, 0)}, {Vec2(-1, 0)}, Vec2(0, 0));
  EXPECT_EQ(attractor_win_rank(h, attractor(h, 3), initial_position(h)), 1);
}

TEST(Attractor, StatefulGame) {
  auto p = build_pipeline(corpus::load("zz2"));
  Region r = attractor(p.rgs, 8);
  EXPECT_TRUE(r.contains(initial_position(p.rgs)));
  BoundedSolver<RgsGame> s(p.rgs, Box::square(8));
  EXPECT_EQ(attractor_win_rank(p.rgs, r, initial_position(p.rgs)).value(), static_cast<int>(s.rank(initial_position(p.rgs), 20).value()));
}

TEST(Verify, SmallMachinePasses) {
  for (const auto& scenario : all_scenarios()) {
    VerifyOptions opt;
    opt.samples = 1;
    auto r = verify_lemma(corpus::load("zz2"), scenario, opt);
    EXPECT_TRUE(r.passed) << r.str();
    // zz2 never offers a flag mismatch, so L2 is vacuous there
    if (scenario != "L2") EXPECT_GT(r.checks, 0u) << scenario;
  }
}

TEST(Verify, FlagMismatchIsPunished) {
  auto r = verify_lemma(corpus::load("pingpong"), "L2");
  EXPECT_GT(r.checks, 0u);
}

TEST(Verify, IncrementerDeviationsHaveNoWin) {
  auto r = verify_lemma(corpus::load("incrementer"), "L2");
  EXPECT_TRUE(r.passed);
}

TEST(Verify, FailureCarriesTrace) {
  VerifyOptions opt;
  opt.samples = 1;
  try {
    verify_lemma(corpus::load("c2_first"), "L6", opt);
    FAIL() << "expected a counterexample";
  } catch (const ScenarioFailure& e) {
    EXPECT_FALSE(e.report.passed);
    EXPECT_FALSE(e.report.counterexample.empty());
  }
}
