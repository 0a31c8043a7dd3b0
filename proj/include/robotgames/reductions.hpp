#pragma once

// The lowering pipeline:
//
//   machine --normalize_zero_zero--> machine      (zero-zero iff halting)
//   machine --add_flags-----------> flagged machine
//   flagged --rgs_from_2cm--------> robot game with states
//   RGS     --rg_from_rgs---------> stateless 2D robot game (+ state numbering)
//   RG      --matrix_from_rg------> 3x3 matrix game
//
// plus the update-vector algebra used by the RG encoding and move counting.

#include "robotgames/models.hpp"

#include <set>
#include <unordered_map>
#include <unordered_set>

namespace robotgames {

struct ReductionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotIncrementFirst : ReductionError {
  using ReductionError::ReductionError;
};
struct WrongShape : ReductionError {
  using ReductionError::ReductionError;
};
struct IndexOutOfRange : ReductionError {
  using ReductionError::ReductionError;
};

// ---------------------------------------------------------------------------
// Zero-zero normalization

namespace detail {

class FreshNames {
 public:
  explicit FreshNames(const std::vector<StateId>& taken) : used_(taken.begin(), taken.end()) {}

  StateId make(const std::string& hint) {
    StateId name = hint;
    for (int k = 2; used_.count(name) != 0; ++k) name = hint + "." + std::to_string(k);
    used_.insert(name);
    return name;
  }

 private:
  std::set<StateId> used_;
};

}  // namespace detail

/// Builds a machine whose run reaches a configuration with both counters zero
/// (after step 0) exactly when the input machine reaches its sink.
///
/// c1 carries a shift token (+1) for the whole run. A c1 zero test is done by
/// raising c2 first, removing the token, testing, restoring the token and
/// lowering c2 again, so both counters are never zero at the same time. Entering
/// the old sink starts a drain that empties c2 and then c1, and the token is
/// removed only on the last step, which lands in the fresh sink.
inline MinskyMachine normalize_zero_zero(const MinskyMachine& m) {
  require_valid(m);
  detail::FreshNames fresh(m.states);
  const Instruction inc1{Op::Inc, Counter::C1}, dec1{Op::Dec, Counter::C1}, zt1{Op::ZeroTest, Counter::C1};
  const Instruction inc2{Op::Inc, Counter::C2}, dec2{Op::Dec, Counter::C2}, zt2{Op::ZeroTest, Counter::C2};

  MinskyMachine out;
  const StateId start = fresh.make("nz_start");
  const StateId d1 = fresh.make("nz_drain2");
  const StateId d2 = fresh.make("nz_drain1");
  const StateId d3 = fresh.make("nz_drain1_lift");
  const StateId d4 = fresh.make("nz_drain1_test");
  const StateId d5 = fresh.make("nz_drain1_more");
  const StateId d6 = fresh.make("nz_drain1_done");
  const StateId d7 = fresh.make("nz_drain1_lower");
  const StateId fin = fresh.make("nz_final");

  auto redirect = [&](const StateId& s) { return s == m.sink ? d1 : s; };
  auto add = [&](const StateId& src, Instruction ins, const StateId& dst) {
    out.transitions.push_back({src, ins, dst});
  };

  out.states.push_back(start);
  out.initial = start;
  out.sink = fin;
  add(start, inc1, redirect(m.initial));

  for (const auto& s : m.states) {
    if (s == m.sink) continue;
    out.states.push_back(s);
    auto outs = m.outgoing(s);
    if (outs.size() == 1) {
      add(s, outs[0]->instruction, redirect(outs[0]->target));
      continue;
    }
    const Transition* dec = outs[0]->instruction.op == Op::Dec ? outs[0] : outs[1];
    const Transition* zero = outs[0]->instruction.op == Op::Dec ? outs[1] : outs[0];
    if (dec->instruction.counter == Counter::C2) {
      add(s, dec2, redirect(dec->target));
      add(s, zt2, redirect(zero->target));
      continue;
    }
    const StateId lift = fresh.make(s + ".lift");
    const StateId test = fresh.make(s + ".test");
    const StateId pos = fresh.make(s + ".pos");
    const StateId pos_lower = fresh.make(s + ".pos_lower");
    const StateId nil = fresh.make(s + ".nil");
    const StateId nil_lower = fresh.make(s + ".nil_lower");
    for (const auto& g : {lift, test, pos, pos_lower, nil, nil_lower}) out.states.push_back(g);
    add(s, inc2, lift);
    add(lift, dec1, test);  // removes the token; c1 is at least 1 here
    add(lift, zt1, test);
    add(test, dec1, pos);
    add(test, zt1, nil);
    add(pos, inc1, pos_lower);
    add(pos_lower, dec2, redirect(dec->target));
    add(pos_lower, zt2, redirect(dec->target));
    add(nil, inc1, nil_lower);
    add(nil_lower, dec2, redirect(zero->target));
    add(nil_lower, zt2, redirect(zero->target));
  }

  for (const auto& g : {d1, d2, d3, d4, d5, d6, d7, fin}) out.states.push_back(g);
  add(d1, dec2, d1);
  add(d1, zt2, d2);
  add(d2, inc2, d3);
  add(d3, dec1, d4);
  add(d3, zt1, d4);
  add(d4, dec1, d5);
  add(d4, zt1, d6);
  add(d5, inc1, d7);
  add(d7, dec2, d2);
  add(d7, zt2, d2);
  add(d6, dec2, fin);
  add(d6, zt2, fin);
  return out;
}

// ---------------------------------------------------------------------------
// Flagged machines

/// A state annotated with sign flags. Emptying-gadget states have `top` set;
/// `primed` only applies to them.
struct FlaggedState {
  StateId base;
  Flag c1 = Flag::Zero;
  Flag c2 = Flag::Zero;
  bool top = false;
  bool primed = false;

  static FlaggedState sim(StateId base, Flag a, Flag b) { return {std::move(base), a, b, false, false}; }
  static FlaggedState emptying(Flag a, Flag b, bool primed = false) { return {"", a, b, true, primed}; }

  std::string flags() const { return {flag_char(c1), flag_char(c2)}; }

  /// sim states render as `base[ab]`, emptying states as `!T[ab]` / `!T'[ab]`.
  /// Machine identifiers cannot contain '!', '[' or ']', so this is injective.
  std::string name() const {
    if (top) return std::string(primed ? "!T'[" : "!T[") + flags() + "]";
    return base + "[" + flags() + "]";
  }

  friend bool operator==(const FlaggedState&, const FlaggedState&) = default;
};

inline std::optional<FlaggedState> parse_flagged_name(const std::string& name) {
  if (name.size() < 5 || name.back() != ']') return std::nullopt;
  std::size_t open = name.size() - 4;
  if (name[open] != '[') return std::nullopt;
  auto flag = [](char ch) -> std::optional<Flag> {
    if (ch == '0') return Flag::Zero;
    if (ch == '+') return Flag::Plus;
    return std::nullopt;
  };
  auto a = flag(name[open + 1]);
  auto b = flag(name[open + 2]);
  if (!a || !b) return std::nullopt;
  std::string head = name.substr(0, open);
  if (head == "!T") return FlaggedState::emptying(*a, *b, false);
  if (head == "!T'") return FlaggedState::emptying(*a, *b, true);
  if (head.empty() || head.find_first_of("![]") != std::string::npos) return std::nullopt;
  return FlaggedState::sim(head, *a, *b);
}

struct FlaggedTransition {
  FlaggedState source;
  Instruction instruction;
  FlaggedState target;

  friend bool operator==(const FlaggedTransition&, const FlaggedTransition&) = default;
};

/// Output of the flag transform. Deliberately nondeterministic on decrements:
/// both target flag choices are present.
struct FlaggedMachine {
  MinskyMachine base;
  std::vector<FlaggedState> states;  // base declaration order x (00, 0+, +0, ++)
  std::vector<FlaggedTransition> transitions;

  FlaggedState initial() const { return FlaggedState::sim(base.initial, Flag::Zero, Flag::Zero); }

  friend bool operator==(const FlaggedMachine&, const FlaggedMachine&) = default;
};

inline constexpr std::array<Flag, 2> kFlags{Flag::Zero, Flag::Plus};

inline FlaggedMachine add_flags(const MinskyMachine& m) {
  require_valid(m);
  FlaggedMachine fm;
  fm.base = m;
  for (const auto& s : m.states) {
    for (Flag a : kFlags) {
      for (Flag b : kFlags) fm.states.push_back(FlaggedState::sim(s, a, b));
    }
  }
  auto add = [&](const StateId& s, Flag a, Flag b, Instruction ins, const StateId& t, Flag ta, Flag tb) {
    fm.transitions.push_back({FlaggedState::sim(s, a, b), ins, FlaggedState::sim(t, ta, tb)});
  };
  for (const auto& tr : m.transitions) {
    const auto& [s, ins, t] = tr;
    bool first = ins.counter == Counter::C1;
    for (Flag a : kFlags) {
      for (Flag b : kFlags) {
        switch (ins.op) {
          case Op::Inc:
            if (first) {
              add(s, a, b, ins, t, Flag::Plus, b);
            } else {
              add(s, a, b, ins, t, a, Flag::Plus);
            }
            break;
          case Op::Dec:
            // source carries + on the decremented counter; target flag on it is free
            if (first) {
              add(s, Flag::Plus, b, ins, t, a, b);
            } else {
              add(s, a, Flag::Plus, ins, t, a, b);
            }
            break;
          case Op::ZeroTest:
            if (first && a == Flag::Zero) add(s, Flag::Zero, b, ins, t, Flag::Zero, b);
            if (!first && b == Flag::Zero) add(s, a, Flag::Zero, ins, t, a, Flag::Zero);
            break;
        }
      }
    }
  }
  return fm;
}

struct FlaggedConfig {
  FlaggedState state;
  Int c1 = 0;
  Int c2 = 0;
};

/// Runs the flagged machine choosing, on every step, the transition whose
/// target flags match the signs of the counters after the step. Stops early if
/// no such transition exists (which means the flags went out of sync).
inline std::vector<FlaggedConfig> run_flagged(const FlaggedMachine& fm, std::size_t max_steps) {
  std::vector<FlaggedConfig> trace{{fm.initial(), 0, 0}};
  for (std::size_t k = 0; k < max_steps; ++k) {
    const auto& cur = trace.back();
    if (cur.state.base == fm.base.sink) break;
    const FlaggedTransition* chosen = nullptr;
    FlaggedConfig next;
    for (const auto& t : fm.transitions) {
      if (!(t.source == cur.state)) continue;
      const Int& c = t.instruction.counter == Counter::C1 ? cur.c1 : cur.c2;
      if (t.instruction.op == Op::Dec && c <= 0) continue;
      if (t.instruction.op == Op::ZeroTest && c != 0) continue;
      MachineConfig after = apply_transition(Transition{cur.state.base, t.instruction, t.target.base},
                                             MachineConfig{cur.state.base, cur.c1, cur.c2});
      if (t.target.c1 == flag_of(after.c1) && t.target.c2 == flag_of(after.c2)) {
        chosen = &t;
        next = FlaggedConfig{t.target, after.c1, after.c2};
        break;
      }
    }
    if (chosen == nullptr) break;
    trace.push_back(std::move(next));
  }
  return trace;
}

// ---------------------------------------------------------------------------
// Robot game with states

inline const std::vector<Vec2>& positivity_adam_moves() {
  static const std::vector<Vec2> moves{Vec2(0, 0), Vec2(1, 0)};
  return moves;
}

/// Vector of Eve's simulating move for a machine instruction; c1 moves by 4.
inline Vec2 simulating_vector(Instruction ins) {
  int d = ins.op == Op::Inc ? 1 : ins.op == Op::Dec ? -1 : 0;
  return ins.counter == Counter::C1 ? Vec2(4 * d, 0) : Vec2(0, d);
}

inline RgsGame rgs_from_2cm(const FlaggedMachine& fm) {
  const MinskyMachine& m = fm.base;
  auto first = m.outgoing(m.initial);
  if (m.initial == m.sink || first.size() != 1 || first[0]->instruction.op != Op::Inc) {
    throw NotIncrementFirst("the machine's first instruction must be an increment");
  }

  RgsGame g;
  for (const auto& s : fm.states) g.states.push_back(s.name());
  for (Flag a : kFlags) {
    for (Flag b : kFlags) g.states.push_back(FlaggedState::emptying(a, b).name());
  }
  g.adam_moves = positivity_adam_moves();

  for (const auto& t : fm.transitions) {
    g.eve_moves.push_back({t.source.name(), simulating_vector(t.instruction), t.target.name()});
  }

  const Flag Z = Flag::Zero, P = Flag::Plus;
  auto top = [](Flag a, Flag b) { return FlaggedState::emptying(a, b).name(); };
  for (int e = 0; e <= 1; ++e) {
    for (Flag a : kFlags) {
      for (Flag b : kFlags) g.eve_moves.push_back({top(P, P), Vec2(-4 - e, -1), top(a, b)});
    }
    for (Flag a : kFlags) g.eve_moves.push_back({top(P, Z), Vec2(-4 - e, 0), top(a, Z)});
    for (Flag b : kFlags) g.eve_moves.push_back({top(Z, P), Vec2(-e, -1), top(Z, b)});
    g.eve_moves.push_back({top(Z, Z), Vec2(-e, 0), top(Z, Z)});
  }
  for (const auto& s : fm.states) g.eve_moves.push_back({s.name(), Vec2(-1, 0), top(s.c1, s.c2)});

  Instruction ins = first[0]->instruction;
  const StateId& t = first[0]->target;
  if (ins.counter == Counter::C1) {
    g.initial_state = FlaggedState::sim(t, P, Z).name();
    g.initial = Vec2(4, 0);
  } else {
    g.initial_state = FlaggedState::sim(t, Z, P).name();
    g.initial = Vec2(0, 1);
  }
  g.normalize();
  return g;
}

// ---------------------------------------------------------------------------
// State numbering and update vectors

/// Integers for the RG encoding: emptying states at 0 and n-6..n-1, simulation
/// states at 1..m in declaration order, n = m + 7.
struct StateNumbering {
  std::size_t m = 0;
  std::size_t n = 7;
  std::vector<StateId> names;  // index -> name
  std::unordered_map<StateId, std::size_t> index;

  static StateNumbering for_simulation_states(const std::vector<StateId>& sims) {
    StateNumbering num;
    num.m = sims.size();
    num.n = num.m + 7;
    num.names.resize(num.n);
    num.names[0] = FlaggedState::emptying(Flag::Zero, Flag::Zero).name();
    for (std::size_t i = 0; i < sims.size(); ++i) num.names[i + 1] = sims[i];
    const Flag Z = Flag::Zero, P = Flag::Plus;
    num.names[num.n - 6] = FlaggedState::emptying(Z, P, true).name();
    num.names[num.n - 5] = FlaggedState::emptying(Z, P).name();
    num.names[num.n - 4] = FlaggedState::emptying(P, Z, true).name();
    num.names[num.n - 3] = FlaggedState::emptying(P, Z).name();
    num.names[num.n - 2] = FlaggedState::emptying(P, P, true).name();
    num.names[num.n - 1] = FlaggedState::emptying(P, P).name();
    for (std::size_t i = 0; i < num.n; ++i) {
      if (!num.index.emplace(num.names[i], i).second) throw WrongShape("duplicate state name " + num.names[i]);
    }
    return num;
  }

  std::size_t of(const StateId& name) const {
    auto it = index.find(name);
    if (it == index.end()) throw IndexOutOfRange("state " + name + " is not numbered");
    return it->second;
  }

  std::size_t top(Flag a, Flag b, bool primed = false) const {
    if (a == Flag::Zero && b == Flag::Zero) {
      if (primed) throw IndexOutOfRange("the primed emptying state for 00 does not exist");
      return 0;
    }
    std::size_t base = a == Flag::Zero ? n - 5 : (b == Flag::Zero ? n - 3 : n - 1);
    return primed ? base - 1 : base;
  }

  /// Indices of the six states that Adam can check.
  std::vector<std::size_t> checkable() const { return {n - 6, n - 5, n - 4, n - 3, n - 2, n - 1}; }
  bool is_checkable(std::size_t i) const { return i + 6 >= n && i < n; }
  bool is_simulation(std::size_t i) const { return i >= 1 && i <= m; }
};

/// Symbolic update vector: Add1(x), Add2(x), Move(j,k) or Check(i).
struct UpdateVector {
  enum class Kind { Add1, Add2, Move, Check };
  Kind kind = Kind::Add1;
  Int amount = 0;
  std::size_t from = 0;
  std::size_t to = 0;

  static UpdateVector add1(Int x) { return {Kind::Add1, std::move(x), 0, 0}; }
  static UpdateVector add2(Int x) { return {Kind::Add2, std::move(x), 0, 0}; }
  static UpdateVector move(std::size_t j, std::size_t k) { return {Kind::Move, 0, j, k}; }
  static UpdateVector check(std::size_t i) { return {Kind::Check, 0, i, 0}; }
};

inline Vec2 update_vector(std::size_t n, const UpdateVector& u) {
  switch (u.kind) {
    case UpdateVector::Kind::Add1: return Vec2(u.amount, 0);
    case UpdateVector::Kind::Add2: return Vec2(0, 4 * u.amount * pow8(n));
    case UpdateVector::Kind::Move:
      if (u.from >= n || u.to >= n) throw IndexOutOfRange("Move index outside [0, n)");
      return Vec2(0, pow8(u.to) - pow8(u.from));
    case UpdateVector::Kind::Check:
      if (u.from + 6 < n || u.from >= n) throw IndexOutOfRange("Check index outside [n-6, n-1]");
      return Vec2(0, -5 * pow8(u.from) - pow8(n));
  }
  return {};
}

inline Vec2 update_vector(const StateNumbering& num, const UpdateVector& u) { return update_vector(num.n, u); }

inline Vec2 apply_sequence(const StateNumbering& num, Vec2 start, const std::vector<UpdateVector>& forms,
                           std::vector<Vec2>* steps = nullptr) {
  if (steps) steps->push_back(start);
  for (const auto& f : forms) {
    start += update_vector(num, f);
    if (steps) steps->push_back(start);
  }
  return start;
}

// ---------------------------------------------------------------------------
// Stateless robot game

enum class RgMoveKind { Simulation, Connector, Emptying, Finish, StateDefence, CheckResponse };

/// Symbolic content of one of Eve's RG vectors. The vector equals
///   Add1(dx) + Add2(dc2) + sum of Move(from, to) - Check(cancels) (if any).
struct RgMoveInfo {
  RgMoveKind kind = RgMoveKind::Simulation;
  Int dx = 0;
  Int dc2 = 0;
  std::optional<std::size_t> from;
  std::optional<std::size_t> to;
  std::optional<std::size_t> cancels;
};

struct RgReduction {
  RobotGame game;
  StateNumbering numbering;
  std::unordered_map<Vec2, RgMoveInfo, Vec2Hash> eve_info;

  Vec2 check(std::size_t i) const { return update_vector(numbering, UpdateVector::check(i)); }
};

inline RgReduction rg_from_rgs(const RgsGame& g) {
  if (g.adam_moves != positivity_adam_moves()) throw WrongShape("Adam's moves must be exactly {(0,0),(1,0)}");

  std::vector<StateId> sims;
  std::set<std::string> tops;
  for (const auto& s : g.states) {
    auto fs = parse_flagged_name(s);
    if (!fs) throw WrongShape("state " + s + " carries no positivity flags");
    if (fs->top) {
      if (fs->primed) throw WrongShape("primed emptying state in an RGS input");
      tops.insert(s);
    } else {
      sims.push_back(s);
    }
  }
  if (tops.size() != 4) throw WrongShape("expected the four emptying states");
  auto init_fs = parse_flagged_name(g.initial_state);
  if (!init_fs || init_fs->top) throw WrongShape("initial state must be a simulation state");

  RgReduction out;
  out.numbering = StateNumbering::for_simulation_states(sims);
  const StateNumbering& num = out.numbering;
  const std::size_t n = num.n;
  const Int big = 4 * pow8(n);
  const Flag Z = Flag::Zero, P = Flag::Plus;

  auto add = [&](RgMoveInfo info) {
    Vec2 v(info.dx, info.dc2 * big);
    if (info.from && info.to) v += update_vector(num, UpdateVector::move(*info.from, *info.to));
    if (info.cancels) v -= update_vector(num, UpdateVector::check(*info.cancels));
    if (out.eve_info.emplace(v, info).second) out.game.eve_moves.push_back(v);
  };
  auto info = [](RgMoveKind kind, Int dx, Int dc2, std::optional<std::size_t> from, std::optional<std::size_t> to,
                 std::optional<std::size_t> cancels = std::nullopt) {
    return RgMoveInfo{kind, std::move(dx), std::move(dc2), from, to, cancels};
  };

  // Regular images of simulating moves and of the connectors into the gadget.
  for (const auto& mv : g.eve_moves) {
    auto src = *parse_flagged_name(mv.source);
    auto dst = parse_flagged_name(mv.target);
    if (src.top) continue;  // the old emptying gadget is replaced below
    if (!dst) throw WrongShape("move to unflagged state " + mv.target);
    if (dst->top) {
      if (mv.delta != Vec2(-1, 0) || dst->c1 != src.c1 || dst->c2 != src.c2) {
        throw WrongShape("unexpected move into the emptying gadget from " + mv.source);
      }
      add(info(RgMoveKind::Connector, -1, 0, num.of(mv.source), num.top(dst->c1, dst->c2)));
    } else {
      add(info(RgMoveKind::Simulation, mv.delta.x, mv.delta.y, num.of(mv.source), num.of(mv.target)));
    }
  }

  // Self-loop-free emptying gadget, cancelling each alpha in A1.
  const std::size_t t00 = 0;
  const std::vector<std::size_t> pp{num.top(P, P), num.top(P, P, true)};
  const std::vector<std::size_t> p0{num.top(P, Z), num.top(P, Z, true)};
  const std::vector<std::size_t> zp{num.top(Z, P), num.top(Z, P, true)};
  auto partner = [&](std::size_t j) {
    for (const auto* fam : {&pp, &p0, &zp}) {
      if ((*fam)[0] == j) return (*fam)[1];
      if ((*fam)[1] == j) return (*fam)[0];
    }
    return j;
  };
  for (const auto& alpha : positivity_adam_moves()) {
    for (std::size_t j : pp) {
      for (std::size_t k : {partner(j), p0[0], p0[1], zp[0], zp[1], t00}) {
        add(info(RgMoveKind::Emptying, -4 - alpha.x, -1, j, k));
      }
    }
    for (std::size_t j : p0) {
      for (std::size_t k : {partner(j), t00}) add(info(RgMoveKind::Emptying, -4 - alpha.x, 0, j, k));
    }
    for (std::size_t j : zp) {
      for (std::size_t k : {partner(j), t00}) add(info(RgMoveKind::Emptying, -alpha.x, -1, j, k));
    }
  }

  // Finish moves and state-defence moves out of every simulation state.
  const auto checks = num.checkable();
  for (const auto& s : sims) {
    auto fs = *parse_flagged_name(s);
    std::size_t idx = num.of(s);
    if (fs.c1 == Z && fs.c2 == Z) {
      for (const auto& alpha : positivity_adam_moves()) add(info(RgMoveKind::Finish, -alpha.x, 0, idx, t00));
      for (std::size_t i : checks) add(info(RgMoveKind::StateDefence, 0, 0, idx, t00, i));
    } else {
      for (bool primed : {false, true}) {
        std::size_t k = num.top(fs.c1, fs.c2, primed);
        for (std::size_t i : checks) {
          if (k != i) add(info(RgMoveKind::StateDefence, 0, 0, idx, k, i));
        }
      }
    }
  }

  // Responses to a state-check while inside the gadget.
  for (std::size_t i : checks) {
    for (int e1 = 0; e1 <= 1; ++e1) {
      for (int e2 = 0; e2 <= 1; ++e2) {
        add(info(RgMoveKind::CheckResponse, -4 * e1, -e2, std::nullopt, std::nullopt, i));
      }
    }
    for (std::size_t j : pp) {
      for (std::size_t k : checks) {
        if (j != k && i != k) add(info(RgMoveKind::CheckResponse, -4, 1, j, k, i));
      }
    }
    for (std::size_t j : pp) add(info(RgMoveKind::CheckResponse, -4, -1, j, t00, i));
    for (std::size_t j : p0) add(info(RgMoveKind::CheckResponse, -4, 0, j, t00, i));
    for (std::size_t j : zp) add(info(RgMoveKind::CheckResponse, 0, -1, j, t00, i));
  }

  out.game.adam_moves = positivity_adam_moves();
  for (std::size_t i : checks) out.game.adam_moves.push_back(out.check(i));

  const std::size_t s0 = num.of(g.initial_state);
  out.game.initial = Vec2(g.initial.x, g.initial.y * big) + update_vector(num, UpdateVector::move(t00, s0));
  out.game.normalize();
  return out;
}

// ---------------------------------------------------------------------------
// Matrix games

inline Mat3 move_matrix(const Vec2& v) {
  return Mat3{{{1, 0, 0}, {v.x, 1, v.y}, {0, 0, 1}}};
}

inline Vec3 embed(const Vec2& v) { return Vec3{v.x, 1, v.y}; }

inline MatrixGame matrix_from_rg(const RobotGame& g) {
  MatrixGame mg;
  for (const auto& a : g.adam_moves) mg.adam_mats.push_back(move_matrix(a));
  for (const auto& e : g.eve_moves) mg.eve_mats.push_back(move_matrix(e));
  mg.initial = embed(g.initial);
  mg.target = Vec3{0, 1, 0};
  mg.normalize();
  return mg;
}

/// Inverse of matrix_from_rg, for matrix games of exactly that shape.
inline std::optional<RobotGame> rg_of_matrix(const MatrixGame& mg) {
  auto vec_of = [](const Mat3& m) -> std::optional<Vec2> {
    Vec2 v(m[1][0], m[1][2]);
    if (move_matrix(v) != m) return std::nullopt;
    return v;
  };
  if (mg.target != Vec3{0, 1, 0} || mg.initial[1] != 1) return std::nullopt;
  RobotGame g;
  g.initial = Vec2(mg.initial[0], mg.initial[2]);
  for (const auto& [mats, out] : {std::pair{&mg.adam_mats, &g.adam_moves}, std::pair{&mg.eve_mats, &g.eve_moves}}) {
    for (const auto& m : *mats) {
      auto v = vec_of(m);
      if (!v) return std::nullopt;
      out->push_back(*v);
    }
  }
  g.normalize();
  return g;
}

// ---------------------------------------------------------------------------
// Move counting

struct MoveCount {
  std::size_t adam = 0;
  std::size_t eve = 0;
  std::size_t machine_states = 0;
  std::size_t eve_bound = 0;  // 58m + 227

  bool adam_is_eight() const { return adam == 8; }
  bool eve_within_bound() const { return eve <= eve_bound; }
};

inline std::size_t eve_move_bound(std::size_t m) { return 58 * m + 227; }

inline MoveCount count_moves(const RobotGame& g, std::size_t machine_states) {
  RobotGame copy = g;
  copy.normalize();
  return MoveCount{copy.adam_moves.size(), copy.eve_moves.size(), machine_states, eve_move_bound(machine_states)};
}

// ---------------------------------------------------------------------------
// Whole pipeline

struct Pipeline {
  MinskyMachine machine;
  FlaggedMachine flagged;
  RgsGame rgs;
  RgReduction rg;
  MatrixGame matrix;
};

inline Pipeline build_pipeline(const MinskyMachine& m) {
  Pipeline p;
  p.machine = m;
  p.flagged = add_flags(m);
  p.rgs = rgs_from_2cm(p.flagged);
  p.rg = rg_from_rgs(p.rgs);
  p.matrix = matrix_from_rg(p.rg.game);
  return p;
}

}  // namespace robotgames
