#pragma once

// Desk-scale checks of the strategy lemmas on concrete machines. Each scenario
// builds the pipeline, plays the proof strategies and cross-checks the claimed
// outcome with the bounded minimax oracle.
//
//   L1/L5  honest play reproduces the machine verdict (RGS / RG)
//   L2/L6  a wrong Eve move is punished: invariant holds, no Eve win
//   L3/L7  Adam's check after correct play is answered: Eve drains in time
//   L4/L8  premature emptying / state-defence is punished

#include "robotgames/solver.hpp"
#include "robotgames/strategies.hpp"

#include <functional>
#include <set>

namespace robotgames {

struct LemmaReport {
  std::string scenario;
  bool passed = true;
  std::size_t checks = 0;
  std::vector<std::string> notes;
  std::vector<std::string> failures;
  std::string counterexample;  // trace of the first failure, if any

  std::string str() const {
    std::ostringstream os;
    os << scenario << ": " << (passed ? "ok" : "FAILED") << " (" << checks << " checks)";
    for (const auto& n : notes) os << "\n  " << n;
    for (const auto& f : failures) os << "\n  failure: " << f;
    if (!counterexample.empty()) os << "\n  trace: " << counterexample;
    return os.str();
  }
};

struct ScenarioFailure : std::runtime_error {
  LemmaReport report;
  explicit ScenarioFailure(LemmaReport r) : std::runtime_error(r.str()), report(std::move(r)) {}
};

struct VerifyOptions {
  std::size_t depth = 4;             // rounds in which deviations / checks are injected
  std::size_t max_trace_moves = 24;  // length of explored traces, counted from the start
  std::size_t horizon = 12;          // minimax horizon
  long box = 32;                     // RGS minimax box in counter units
  long rg_box = 1;                   // RG minimax box, in units of (4, 4*8^n)
  std::size_t samples = 4;           // sampled continuations per RG deviation
  std::uint64_t seed = 20240901;
};

inline const std::vector<std::string>& all_scenarios() {
  static const std::vector<std::string> names{"L1", "L2", "L3", "L4", "L5", "L6", "L7", "L8"};
  return names;
}

template <class Seq>
std::string describe_moves(const Seq& moves) {
  std::ostringstream os;
  for (std::size_t i = 0; i < moves.size(); ++i) os << (i ? " " : "") << (i % 2 ? "E" : "A") << moves[i];
  return os.str();
}

/// Holds one machine's pipeline and the cached solvers.
class LemmaVerifier {
 public:
  LemmaVerifier(const MinskyMachine& m, VerifyOptions opt)
      : p_(build_pipeline(m)),
        opt_(opt),
        rgs_solver_(p_.rgs, Box{Int(4 * opt.box), Int(opt.box)}),
        rg_solver_(p_.rg.game, Box{Int(4 * opt.rg_box), 4 * pow8(p_.rg.numbering.n) * opt.rg_box}) {}

  const Pipeline& pipeline() const { return p_; }

  LemmaReport run(const std::string& scenario) {
    LemmaReport r;
    r.scenario = scenario;
    report_ = &r;
    if (scenario == "L1") honest_rgs();
    else if (scenario == "L2") rgs_deviations(false);
    else if (scenario == "L3") rgs_checks();
    else if (scenario == "L4") rgs_deviations(true);
    else if (scenario == "L5") honest_rg();
    else if (scenario == "L6") rg_deviations(false);
    else if (scenario == "L7") rg_checks();
    else if (scenario == "L8") rg_deviations(true);
    else throw std::invalid_argument("unknown scenario " + scenario);
    report_ = nullptr;
    return r;
  }

 private:
  // -------------------------------------------------------------------------
  // bookkeeping

  void check(bool ok, const std::string& what, const std::string& trace = "") {
    ++report_->checks;
    if (ok) return;
    report_->passed = false;
    if (report_->failures.size() < 20) report_->failures.push_back(what);
    if (report_->counterexample.empty()) report_->counterexample = trace;
  }
  void note(std::string s) { report_->notes.push_back(std::move(s)); }

  RunResult machine_run(std::size_t steps) const { return run_machine(p_.machine, steps); }

  // The RGS win round of honest play is the machine's zero-zero step minus one:
  // the initial configuration already records the first machine step.
  std::optional<std::size_t> expected_rgs_win(std::size_t rounds) const {
    auto run = machine_run(rounds + 1);
    if (run.outcome != RunOutcome::ZeroZero) return std::nullopt;
    return run.step - 1;
  }

  // Honest play stops where the machine reaches its sink: from there on Eve
  // has no correct move.
  std::size_t honest_rounds(std::size_t limit) const {
    auto run = machine_run(limit + 1);
    if (run.outcome == RunOutcome::Sink) return std::min(limit, run.step - 1);
    return limit;
  }

  // Honest line of at most `rounds` rounds. When it was cut short by the sink,
  // Adam's zero move of the next round is appended so that every Eve move of
  // that round can be enumerated as a deviation.
  template <class Game>
  PlayTrace deviation_line(const Game& g, Strategy<Game>& adam, Strategy<Game>& eve, std::size_t rounds) const {
    std::size_t cap = honest_rounds(rounds);
    PlayTrace line = play(g, adam, eve, cap);
    if (!line.verdict.eve_won() && cap < rounds) {
      Move a = Move::plain(zero_move());
      line.positions.push_back(apply(g, line.positions.back(), a));
      line.moves.push_back(a);
    }
    return line;
  }

  static std::size_t deviation_rounds(const PlayTrace& line) {
    if (line.verdict.eve_won()) return line.verdict.round;
    return (line.moves.size() + 1) / 2;
  }

  // Injection rounds: up to the win, or up to the round in which Eve stands at
  // the sink.
  static std::size_t injection_rounds(const PlayTrace& line, std::size_t rounds) {
    if (line.verdict.eve_won()) return line.verdict.round;
    return std::min(rounds, line.moves.size() / 2 + 1);
  }

  static std::optional<Move> honest_move(const PlayTrace& line, std::size_t r) {
    if (2 * r - 1 < line.moves.size()) return line.moves[2 * r - 1];
    return std::nullopt;
  }

  // -------------------------------------------------------------------------
  // L1

  void honest_rgs() {
    const std::size_t rounds = opt_.depth + opt_.horizon;
    auto expected = expected_rgs_win(rounds);
    auto run = machine_run(rounds + 1);

    AdamRgsReferee referee;
    EveRgsStrategy eve;
    PlayTrace t = play(p_.rgs, referee, eve, honest_rounds(rounds));
    std::string trace = describe_moves(t.moves);
    if (expected) {
      check(t.verdict == Verdict{Verdict::Kind::EveWinsAt, *expected},
            "honest RGS play should win at round " + std::to_string(*expected), trace);
    } else {
      check(!t.verdict.eve_won(), "honest RGS play must not win when the machine has no zero-zero", trace);
    }
    check(!referee.punishing(), "referee punished honest play", trace);

    ConstantStrategy<RgsGame> zero(Move::plain(zero_move()));
    EveRgsStrategy eve2;
    PlayTrace t2 = play(p_.rgs, zero, eve2, honest_rounds(rounds));
    check(t2.verdict == t.verdict, "honest play against the zero Adam differs from play against the referee");

    // position after round r mirrors machine step r+1
    for (std::size_t r = 1; 2 * r < t.positions.size(); ++r) {
      if (r + 1 >= run.trace.size()) break;
      const auto& cfg = run.trace[r + 1];
      const auto& pos = t.positions[2 * r];
      auto want = FlaggedState::sim(cfg.state, flag_of(cfg.c1), flag_of(cfg.c2)).name();
      check(pos.state == want && pos.vec == Vec2(4 * cfg.c1, cfg.c2),
            "round " + std::to_string(r) + " does not mirror machine step " + std::to_string(r + 1), trace);
      check(mod_floor(pos.vec.x, 4) == 0, "first counter not a multiple of 4 on the honest line", trace);
    }
    note("honest RGS verdict " + verdict_str(t.verdict) + ", machine " + outcome_str(run));
  }

  // -------------------------------------------------------------------------
  // L2 / L4

  void rgs_deviations(bool premature) {
    const std::size_t rounds = opt_.depth;
    AdamRgsReferee ref;
    EveRgsStrategy eve;
    PlayTrace line = deviation_line(p_.rgs, ref, eve, rounds);
    std::size_t last = deviation_rounds(line);
    std::size_t deviations = 0, explored = 0, terminal = 0;

    for (std::size_t r = 1; r <= last; ++r) {
      std::vector<Move> prefix(line.moves.begin(), line.moves.begin() + static_cast<long>(2 * r - 1));
      const Position& at = line.positions[2 * r - 1];
      auto honest = honest_move(line, r);
      for (const auto& m : legal_moves(p_.rgs, at)) {
        if (m == honest) continue;
        auto t = parse_flagged_name(*m.target);
        if (premature != t->top) continue;
        if (apply(p_.rgs, at, m).vec.is_zero()) {
          ++terminal;
          continue;
        }
        ++deviations;
        std::vector<Move> moves = prefix;
        moves.push_back(m);
        AdamRgsReferee referee;
        referee.init(p_.rgs, initial_position(p_.rgs));
        for (const auto& mv : moves) referee.observe(mv);
        std::string trace = describe_moves(moves);
        check(referee.punishing(), "referee did not react to deviation " + trace, trace);
        Position after = referee.position();
        check(!after.vec.is_zero(), "deviation itself reached the zero vector", trace);
        check(!rgs_solver_.rank(after, opt_.horizon),
              "minimax finds an Eve win after deviation " + trace, trace);
        explored += explore_rgs(referee, moves);
      }
    }
    note(std::to_string(deviations) + " deviations in rounds 1.." + std::to_string(last) + ", " +
         std::to_string(explored) + " positions explored, " + std::to_string(terminal) +
         " alternative winning moves skipped");
  }

  // Breadth-first over all Eve continuations against the referee, deduplicated
  // on positions (the punishing referee is positional).
  std::size_t explore_rgs(const AdamRgsReferee& start, const std::vector<Move>& prefix) {
    struct Node {
      AdamRgsReferee ref;
      std::vector<Move> moves;
    };
    std::vector<Node> frontier{{start, prefix}};
    std::unordered_set<Position, PositionHash> seen{start.position()};
    std::size_t explored = 0;
    while (!frontier.empty()) {
      std::vector<Node> next;
      for (auto& node : frontier) {
        if (node.moves.size() + 2 > opt_.max_trace_moves) continue;
        Move a = node.ref.propose();
        node.ref.observe(a);
        node.moves.push_back(a);
        const Position& eve_turn = node.ref.position();
        ++explored;
        if (!rgs_punishment_holds(eve_turn)) {
          std::string trace = describe_moves(node.moves);
          check(false, "mod-4 invariant broken at Eve's turn", trace);
          continue;
        }
        for (const auto& m : legal_moves(p_.rgs, eve_turn)) {
          Position after = apply(p_.rgs, eve_turn, m);
          if (after.vec.is_zero()) {
            auto moves = node.moves;
            moves.push_back(m);
            check(false, "Eve reached the zero vector after punishment", describe_moves(moves));
            continue;
          }
          if (!seen.insert(after).second) continue;
          Node child{node.ref, node.moves};
          child.ref.observe(m);
          child.moves.push_back(m);
          next.push_back(std::move(child));
        }
      }
      frontier = std::move(next);
    }
    ++report_->checks;
    return explored;
  }

  // -------------------------------------------------------------------------
  // L3

  void rgs_checks() {
    const std::size_t rounds = opt_.depth;
    ConstantStrategy<RgsGame> zero(Move::plain(zero_move()));
    EveRgsStrategy eve;
    PlayTrace line = play(p_.rgs, zero, eve, honest_rounds(rounds));
    std::size_t last = injection_rounds(line, rounds);
    std::size_t injections = 0, worst_slack = 0;
    for (std::size_t r = 1; r <= last; ++r) {
      std::vector<Move> prefix(line.moves.begin(), line.moves.begin() + static_cast<long>(2 * (r - 1)));
      const Position& at = line.positions[2 * (r - 1)];
      std::size_t bound = drain_bound(at.vec.x, at.vec.y);
      EveRgsStrategy e;
      e.init(p_.rgs, initial_position(p_.rgs));
      for (const auto& m : prefix) e.observe(m);
      std::vector<Move> moves = prefix;
      std::map<std::pair<std::string, std::string>, std::optional<std::size_t>> memo;
      auto worst = worst_case_rgs(e, Move::plain(positivity_check()), bound, moves, memo);
      ++injections;
      std::string trace = describe_moves(moves);
      check(worst.has_value(), "Eve does not drain within " + std::to_string(bound) +
                                   " rounds after a check at round " + std::to_string(r), trace);
      if (worst) worst_slack = std::max(worst_slack, *worst);
      Position eve_turn = apply(p_.rgs, at, Move::plain(positivity_check()));
      auto k = rgs_solver_.rank(eve_turn, bound);
      check(k.has_value(), "minimax finds no Eve win within the drain bound after the check at round " +
                               std::to_string(r), trace);
    }
    note(std::to_string(injections) + " check injections; longest drain " + std::to_string(worst_slack) +
         " rounds");
  }

  std::size_t drain_bound(const Int& x, const Int& c2) const {
    Int b = x / 4 + c2 + 2;
    return b.convert_to<std::size_t>();
  }

  // Worst case, over all of Adam's continuations (starting with `first`), of
  // the number of rounds Eve's strategy needs to win; nullopt if some branch
  // exceeds `budget`.
  template <class Game, class EveStrat, class Memo>
  std::optional<std::size_t> worst_case(const Game& g, const EveStrat& eve, const Move& first, std::size_t budget,
                                        std::vector<Move>& moves, Memo& memo,
                                        const std::function<std::string(const EveStrat&)>& key) {
    if (budget == 0) return std::nullopt;
    auto memo_key = std::make_pair(key(eve) + "|" + to_decimal(first.delta.x) + "," + to_decimal(first.delta.y),
                                   std::to_string(budget));
    if (auto it = memo.find(memo_key); it != memo.end()) return it->second;
    EveStrat e = eve;
    e.observe(first);
    Move reply;
    try {
      reply = e.propose();
    } catch (const NoApplicableMove&) {
      memo[memo_key] = std::nullopt;
      return std::nullopt;
    }
    if (!is_legal(g, e.position(), reply)) return memo[memo_key] = std::nullopt;
    moves.push_back(first);
    moves.push_back(reply);
    e.observe(reply);
    std::optional<std::size_t> out;
    if (e.position().vec.is_zero()) {
      out = 1;
    } else {
      std::size_t worst = 0;
      bool ok = true;
      for (const auto& a : legal_moves(g, e.position())) {
        auto sub = worst_case(g, e, a, budget - 1, moves, memo, key);
        if (!sub) {
          ok = false;
          break;
        }
        worst = std::max(worst, *sub);
      }
      if (ok) out = worst + 1;
    }
    if (out) {
      moves.pop_back();
      moves.pop_back();
    }
    memo[memo_key] = out;
    return out;
  }

  template <class Memo>
  std::optional<std::size_t> worst_case_rgs(const EveRgsStrategy& eve, const Move& first, std::size_t budget,
                                            std::vector<Move>& moves, Memo& memo) {
    std::function<std::string(const EveRgsStrategy&)> key = [](const EveRgsStrategy& e) {
      std::ostringstream os;
      os << e.position();
      return os.str();
    };
    return worst_case(p_.rgs, eve, first, budget, moves, memo, key);
  }

  // -------------------------------------------------------------------------
  // L5

  RgContext ctx() const { return RgContext{&p_.rgs, &p_.rg}; }

  void honest_rg() {
    const std::size_t rounds = opt_.depth + opt_.horizon;
    auto rgs_win = expected_rgs_win(rounds);
    auto run = machine_run(rounds + 1);
    const auto& num = p_.rg.numbering;
    const Int big = 4 * pow8(num.n);

    AdamRgReferee referee(ctx());
    EveRgStrategy eve(ctx());
    PlayTrace t = play(p_.rg.game, referee, eve, honest_rounds(rounds + 1));
    std::string trace = describe_moves(t.moves);
    if (rgs_win) {
      check(t.verdict.eve_won() && t.verdict.round == *rgs_win + 1,
            "honest RG play should win one round after the RGS", trace);
    } else {
      check(!t.verdict.eve_won(), "honest RG play must not win when the machine has no zero-zero", trace);
    }
    check(referee.mode() == AdamRgReferee::Mode::Honest, "RG referee punished honest play", trace);
    check(referee.ledger_y() == t.positions.back().vec.y, "referee ledger disagrees with the vector", trace);

    for (std::size_t r = 1; 2 * r < t.positions.size(); ++r) {
      if (r + 1 >= run.trace.size() || (rgs_win && r > *rgs_win)) break;
      const auto& cfg = run.trace[r + 1];
      const auto& pos = t.positions[2 * r];
      std::size_t s = num.of(FlaggedState::sim(cfg.state, flag_of(cfg.c1), flag_of(cfg.c2)).name());
      Vec2 want(4 * cfg.c1, big * cfg.c2 + pow8(s) - 1);
      check(pos.vec == want, "RG round " + std::to_string(r) + " does not encode machine step " +
                                 std::to_string(r + 1),
            trace);
    }

    ConstantStrategy<RobotGame> zero(Move::plain(zero_move()));
    EveRgStrategy eve2(ctx());
    PlayTrace t2 = play(p_.rg.game, zero, eve2, honest_rounds(rounds + 1));
    check(t2.verdict == t.verdict, "RG play against the zero Adam differs from play against the referee");
    note("honest RG verdict " + verdict_str(t.verdict) + ", machine " + outcome_str(run));
  }

  // -------------------------------------------------------------------------
  // L6 / L8

  void rg_deviations(bool premature) {
    const std::size_t rounds = opt_.depth;
    const auto& g = p_.rg.game;
    const std::size_t n = p_.rg.numbering.n;
    AdamRgReferee ref(ctx());
    EveRgStrategy eve(ctx());
    PlayTrace line = deviation_line(g, ref, eve, rounds);
    std::size_t last = deviation_rounds(line);
    std::size_t deviations = 0, sampled = 0, alternatives = 0, at_zero = 0;
    std::map<std::string, std::size_t> by_mode;
    std::mt19937_64 rng(opt_.seed);

    for (std::size_t r = 1; r <= last; ++r) {
      std::vector<Move> prefix(line.moves.begin(), line.moves.begin() + static_cast<long>(2 * r - 1));
      auto honest = honest_move(line, r);
      EveRgStrategy probe(ctx());
      probe.init(g, initial_position(g));
      for (const auto& mv : prefix) probe.observe(mv);
      const auto& book = probe.book();
      AdamRgReferee before(ctx());
      before.init(g, initial_position(g));
      for (const auto& mv : prefix) before.observe(mv);
      for (const auto& v : g.eve_moves) {
        Move m = Move::plain(v);
        if (m == honest) continue;
        const RgMoveInfo& info = p_.rg.eve_info.at(v);
        if (premature != info.cancels.has_value()) continue;
        std::vector<Move> moves = prefix;
        moves.push_back(m);
        AdamRgReferee referee = before;
        referee.observe(m);
        std::string trace = describe_moves(moves);
        auto mode = referee.mode();
        bool lands_at_zero = false;
        if (!premature && !book.draining && info.kind == RgMoveKind::Simulation && info.from == book.state && info.to) {
          FlaggedState t = ctx().state(*info.to);
          if (!t.top && flags_match(t, book.x + info.dx, book.c2 + info.dc2)) {
            // another correct simulating move, not a deviation
            ++alternatives;
            check(mode == AdamRgReferee::Mode::Honest, "correct regular move punished: " + trace, trace);
            continue;
          }
          lands_at_zero = book.x + info.dx == 0 && book.c2 + info.dc2 == 0;
        }
        ++deviations;
        ++by_mode[to_string(mode)];
        if (premature) {
          check(mode == AdamRgReferee::Mode::PrematurePunish, "premature defence not recognised: " + trace, trace);
        } else {
          check(mode == AdamRgReferee::Mode::PositivityPunish || mode == AdamRgReferee::Mode::CheckPunish,
                "deviation not punished: " + trace, trace);
        }
        if (lands_at_zero) {
          // The machine really is at zero-zero: Eve finishes from the
          // mislabelled state through base-8 carries, so no punishment claim.
          ++at_zero;
          continue;
        }
        Position after = referee.position();
        check(!after.vec.is_zero(), "deviation itself reached the zero vector", trace);
        check(!rg_solver_.rank(after, opt_.horizon), "minimax finds an Eve win after deviation " + trace, trace);
        sampled += sample_rg(referee, moves, rng);
      }
    }
    std::string modes;
    for (const auto& [k, c] : by_mode) modes += " " + k + "=" + std::to_string(c);
    note(std::to_string(deviations) + " deviations in rounds 1.." + std::to_string(last) + ";" + modes + "; " +
         std::to_string(sampled) + " sampled continuations, " + std::to_string(alternatives) +
         " correct alternatives, " + std::to_string(at_zero) + " mislabelled zero-zero configurations");
    (void)n;
  }

  // Greedy and seeded random Eve continuations against the referee.
  std::size_t sample_rg(const AdamRgReferee& start, const std::vector<Move>& prefix, std::mt19937_64& rng) {
    const auto& g = p_.rg.game;
    const std::size_t n = p_.rg.numbering.n;
    std::size_t runs = 0;
    for (std::size_t s = 0; s <= opt_.samples; ++s) {
      AdamRgReferee ref = start;
      std::vector<Move> moves = prefix;
      std::unique_ptr<Strategy<RobotGame>> eve;
      if (s == 0) eve = std::make_unique<GreedyStrategy<RobotGame>>();
      else eve = std::make_unique<RandomStrategy<RobotGame>>(rng());
      eve->init(g, initial_position(g));
      for (const auto& m : prefix) eve->observe(m);
      ++runs;
      while (moves.size() + 2 <= opt_.max_trace_moves) {
        Move a = ref.propose();
        ref.observe(a);
        eve->observe(a);
        moves.push_back(a);
        if (!rg_referee_invariant(ref.mode(), ref.position(), n)) {
          check(false, std::string("referee invariant broken in mode ") + to_string(ref.mode()),
                describe_moves(moves));
          break;
        }
        Move e = eve->propose();
        ref.observe(e);
        eve->observe(e);
        moves.push_back(e);
        if (ref.position().vec.is_zero()) {
          check(false, "Eve reached the zero vector after punishment", describe_moves(moves));
          break;
        }
      }
      ++report_->checks;
    }
    return runs;
  }

  // -------------------------------------------------------------------------
  // L7

  void rg_checks() {
    const std::size_t rounds = opt_.depth;
    const auto& g = p_.rg.game;
    const auto& num = p_.rg.numbering;
    ConstantStrategy<RobotGame> zero(Move::plain(zero_move()));
    EveRgStrategy eve(ctx());
    PlayTrace line = play(g, zero, eve, honest_rounds(rounds));
    std::size_t last = injection_rounds(line, rounds);
    std::size_t injections = 0, longest = 0;

    std::function<std::string(const EveRgStrategy&)> key = [](const EveRgStrategy& e) {
      std::ostringstream os;
      const auto& b = e.book();
      os << e.position() << "|" << b.draining << "|" << b.state << "|" << b.x << "|" << b.c2;
      return os.str();
    };

    for (std::size_t r = 1; r <= last; ++r) {
      std::vector<Move> prefix(line.moves.begin(), line.moves.begin() + static_cast<long>(2 * (r - 1)));
      const Position& at = line.positions[2 * (r - 1)];
      EveRgStrategy base(ctx());
      base.init(g, initial_position(g));
      for (const auto& m : prefix) base.observe(m);
      std::size_t bound = drain_bound(base.book().x, base.book().c2);

      std::vector<Vec2> injected{positivity_check()};
      for (std::size_t i : num.checkable()) injected.push_back(p_.rg.check(i));
      for (const auto& a : injected) {
        ++injections;
        std::vector<Move> moves = prefix;
        std::map<std::pair<std::string, std::string>, std::optional<std::size_t>> memo;
        auto worst = worst_case(g, base, Move::plain(a), bound, moves, memo, key);
        std::string trace = describe_moves(moves);
        check(worst.has_value(), "Eve does not win within " + std::to_string(bound) + " rounds after Adam's " +
                                     describe_adam(a) + " at round " + std::to_string(r),
              trace);
        if (worst) longest = std::max(longest, *worst);
        Position eve_turn = apply(g, at, Move::plain(a));
        if (bound <= opt_.horizon) {
          check(drain_solver(base.book().x, base.book().c2).rank(eve_turn, bound).has_value(),
                "minimax finds no Eve win within the drain bound after " + describe_adam(a), trace);
        }
      }
    }
    note(std::to_string(injections) + " check injections; longest defence " + std::to_string(longest) + " rounds");
  }

  // RG solver whose box holds every position of a drain from (x, c2).
  BoundedSolver<RobotGame>& drain_solver(const Int& x, const Int& c2) {
    Box box{x + 1, 4 * pow8(p_.rg.numbering.n) * (c2 + 1)};
    std::string key = to_decimal(box.x_bound) + "/" + to_decimal(box.y_bound);
    auto it = drain_solvers_.find(key);
    if (it == drain_solvers_.end()) it = drain_solvers_.emplace(key, BoundedSolver<RobotGame>(p_.rg.game, box)).first;
    return it->second;
  }

  std::string describe_adam(const Vec2& a) const {
    if (auto i = ctx().check_index(a)) return "Check(" + std::to_string(*i) + ")";
    std::ostringstream os;
    os << a;
    return os.str();
  }

  static std::string verdict_str(const Verdict& v) {
    std::ostringstream os;
    os << v;
    return os.str();
  }
  static std::string outcome_str(const RunResult& r) {
    switch (r.outcome) {
      case RunOutcome::ZeroZero: return "ZeroZeroAt(" + std::to_string(r.step) + ")";
      case RunOutcome::Sink: return "SinkAt(" + std::to_string(r.step) + ")";
      case RunOutcome::Exhausted: return "Exhausted";
    }
    return "?";
  }

  Pipeline p_;
  VerifyOptions opt_;
  BoundedSolver<RgsGame> rgs_solver_;
  BoundedSolver<RobotGame> rg_solver_;
  std::map<std::string, BoundedSolver<RobotGame>> drain_solvers_;
  LemmaReport* report_ = nullptr;
};

/// Runs one scenario; throws ScenarioFailure carrying the report on failure.
inline LemmaReport verify_lemma(const MinskyMachine& m, const std::string& scenario, VerifyOptions opt = {}) {
  LemmaVerifier v(m, opt);
  LemmaReport r = v.run(scenario);
  if (!r.passed) throw ScenarioFailure(std::move(r));
  return r;
}

}  // namespace robotgames
