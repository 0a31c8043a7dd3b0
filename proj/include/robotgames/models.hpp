#pragma once

// Two-counter Minsky machines and the three game formalisms the reductions
// produce: robot games with states, stateless robot games and matrix games.

#include "robotgames/bigint.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

namespace robotgames {

using StateId = std::string;

struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IllegalConfig : ModelError {
  using ModelError::ModelError;
};
struct InvalidMachine : ModelError {
  using ModelError::ModelError;
};

// ---------------------------------------------------------------------------
// Counter machines

enum class Counter { C1, C2 };
enum class Op { Inc, Dec, ZeroTest };

struct Instruction {
  Op op;
  Counter counter;

  friend bool operator==(const Instruction&, const Instruction&) = default;
  friend auto operator<=>(const Instruction&, const Instruction&) = default;
};

/// Text label used by the machine file grammar: c1++, c1--, c1==0, ...
inline std::string label(Instruction ins) {
  std::string s = ins.counter == Counter::C1 ? "c1" : "c2";
  switch (ins.op) {
    case Op::Inc: return s + "++";
    case Op::Dec: return s + "--";
    case Op::ZeroTest: return s + "==0";
  }
  return s;
}

inline std::optional<Instruction> parse_label(std::string_view text) {
  if (text.size() < 4 || text[0] != 'c') return std::nullopt;
  Counter c;
  if (text[1] == '1') {
    c = Counter::C1;
  } else if (text[1] == '2') {
    c = Counter::C2;
  } else {
    return std::nullopt;
  }
  std::string_view rest = text.substr(2);
  if (rest == "++") return Instruction{Op::Inc, c};
  if (rest == "--") return Instruction{Op::Dec, c};
  if (rest == "==0") return Instruction{Op::ZeroTest, c};
  return std::nullopt;
}

struct Transition {
  StateId source;
  Instruction instruction;
  StateId target;

  friend bool operator==(const Transition&, const Transition&) = default;
};

/// Deterministic two-counter machine. State order is declaration order.
struct MinskyMachine {
  std::vector<StateId> states;
  StateId initial;
  StateId sink;
  std::vector<Transition> transitions;

  bool has_state(const StateId& s) const { return std::find(states.begin(), states.end(), s) != states.end(); }

  std::vector<const Transition*> outgoing(const StateId& s) const {
    std::vector<const Transition*> out;
    for (const auto& t : transitions) {
      if (t.source == s) out.push_back(&t);
    }
    return out;
  }

  friend bool operator==(const MinskyMachine&, const MinskyMachine&) = default;
};

struct Violation {
  StateId state;
  std::string reason;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }

  std::string str() const {
    std::string out;
    for (const auto& v : violations) {
      if (!out.empty()) out += "; ";
      out += v.state + ": " + v.reason;
    }
    return out;
  }
};

inline ValidationReport validate_machine(const MinskyMachine& m) {
  ValidationReport report;
  auto add = [&](const StateId& s, std::string reason) { report.violations.push_back({s, std::move(reason)}); };

  std::map<StateId, int> seen;
  for (const auto& s : m.states) {
    if (++seen[s] == 2) add(s, "state declared more than once");
  }
  if (!m.has_state(m.initial)) add(m.initial, "initial state is not declared");
  if (!m.has_state(m.sink)) add(m.sink, "sink state is not declared");
  for (const auto& t : m.transitions) {
    if (!m.has_state(t.source)) add(t.source, "transition from undeclared state");
    if (!m.has_state(t.target)) add(t.target, "transition to undeclared state");
  }

  for (const auto& s : m.states) {
    auto out = m.outgoing(s);
    if (s == m.sink) {
      if (!out.empty()) add(s, "sink state has outgoing transitions");
      continue;
    }
    if (out.size() == 1) {
      if (out[0]->instruction.op != Op::Inc) add(s, "a single outgoing transition must be an increment");
    } else if (out.size() == 2) {
      auto a = out[0]->instruction;
      auto b = out[1]->instruction;
      bool paired = a.counter == b.counter &&
                    ((a.op == Op::Dec && b.op == Op::ZeroTest) || (a.op == Op::ZeroTest && b.op == Op::Dec));
      if (!paired) add(s, "two outgoing transitions must be a decrement and a zero test on the same counter");
    } else {
      add(s, "expected one increment or a decrement/zero-test pair, found " + std::to_string(out.size()) +
                 " outgoing transitions");
    }
  }
  return report;
}

inline void require_valid(const MinskyMachine& m) {
  auto report = validate_machine(m);
  if (!report.ok()) throw InvalidMachine("invalid machine: " + report.str());
}

struct MachineConfig {
  StateId state;
  Int c1 = 0;
  Int c2 = 0;

  friend bool operator==(const MachineConfig&, const MachineConfig&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const MachineConfig& c) {
  return os << "(" << c.state << ",(" << c.c1 << "," << c.c2 << "))";
}

struct AtSink {
  friend bool operator==(AtSink, AtSink) = default;
};

using StepResult = std::variant<MachineConfig, AtSink>;

/// The unique transition enabled at `cfg`, or nullptr at the sink.
inline const Transition* enabled_transition(const MinskyMachine& m, const MachineConfig& cfg) {
  if (cfg.state == m.sink) return nullptr;
  for (const auto& t : m.transitions) {
    if (t.source != cfg.state) continue;
    const Int& c = t.instruction.counter == Counter::C1 ? cfg.c1 : cfg.c2;
    switch (t.instruction.op) {
      case Op::Inc: return &t;
      case Op::Dec:
        if (c > 0) return &t;
        break;
      case Op::ZeroTest:
        if (c == 0) return &t;
        break;
    }
  }
  throw IllegalConfig("no transition enabled at state " + cfg.state);
}

inline MachineConfig apply_transition(const Transition& t, const MachineConfig& cfg) {
  MachineConfig next{t.target, cfg.c1, cfg.c2};
  Int& c = t.instruction.counter == Counter::C1 ? next.c1 : next.c2;
  if (t.instruction.op == Op::Inc) ++c;
  if (t.instruction.op == Op::Dec) --c;
  check_int_size(c);
  return next;
}

inline StepResult step_machine(const MinskyMachine& m, const MachineConfig& cfg) {
  if (!m.has_state(cfg.state)) throw IllegalConfig("unknown state " + cfg.state);
  if (cfg.c1 < 0 || cfg.c2 < 0) throw IllegalConfig("negative counter");
  const Transition* t = enabled_transition(m, cfg);
  if (t == nullptr) return AtSink{};
  return apply_transition(*t, cfg);
}

enum class RunOutcome { ZeroZero, Sink, Exhausted };

struct RunResult {
  RunOutcome outcome = RunOutcome::Exhausted;
  std::size_t step = 0;  // meaningful for ZeroZero and Sink
  std::vector<MachineConfig> trace;
};

/// Runs from (initial,(0,0)). Step 0 never counts as a zero-zero hit; when the
/// sink is entered with both counters zero the zero-zero outcome wins.
inline RunResult run_machine(const MinskyMachine& m, std::size_t max_steps) {
  require_valid(m);
  RunResult r;
  r.trace.push_back(MachineConfig{m.initial, 0, 0});
  if (m.initial == m.sink) {
    r.outcome = RunOutcome::Sink;
    return r;
  }
  for (std::size_t k = 1; k <= max_steps; ++k) {
    auto next = step_machine(m, r.trace.back());
    if (std::holds_alternative<AtSink>(next)) break;  // unreachable: sink is detected on entry
    r.trace.push_back(std::get<MachineConfig>(std::move(next)));
    const auto& c = r.trace.back();
    if (c.c1 == 0 && c.c2 == 0) {
      r.outcome = RunOutcome::ZeroZero;
      r.step = k;
      return r;
    }
    if (c.state == m.sink) {
      r.outcome = RunOutcome::Sink;
      r.step = k;
      return r;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Vectors and matrices over the integers

struct Vec2 {
  Int x = 0;
  Int y = 0;

  Vec2() = default;
  Vec2(Int x_, Int y_) : x(std::move(x_)), y(std::move(y_)) {}

  bool is_zero() const { return x == 0 && y == 0; }

  Vec2& operator+=(const Vec2& o) {
    x += o.x;
    y += o.y;
    check_int_size(x);
    check_int_size(y);
    return *this;
  }
  Vec2& operator-=(const Vec2& o) {
    x -= o.x;
    y -= o.y;
    check_int_size(x);
    check_int_size(y);
    return *this;
  }
  friend Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
  friend Vec2 operator-(Vec2 a, const Vec2& b) { return a -= b; }
  friend Vec2 operator-(const Vec2& a) { return Vec2(-a.x, -a.y); }

  friend bool operator==(const Vec2&, const Vec2&) = default;
  friend bool operator<(const Vec2& a, const Vec2& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }
};

inline std::ostream& operator<<(std::ostream& os, const Vec2& v) { return os << "(" << v.x << "," << v.y << ")"; }

struct Vec2Hash {
  std::size_t operator()(const Vec2& v) const noexcept {
    IntHash h;
    return IntHash::mix(h(v.x) + 0x632be59bd9b4e019ULL) ^ h(v.y);
  }
};

namespace detail {

// Fixed-width vector for hot loops whose values are known to fit.
struct Narrow {
  __int128 x = 0, y = 0;

  bool is_zero() const { return x == 0 && y == 0; }
  friend Narrow operator+(const Narrow& a, const Narrow& b) { return {a.x + b.x, a.y + b.y}; }
  friend Narrow operator-(const Narrow& a, const Narrow& b) { return {a.x - b.x, a.y - b.y}; }
  friend Narrow operator-(const Narrow& a) { return {-a.x, -a.y}; }
  friend bool operator==(const Narrow&, const Narrow&) = default;
};

struct NarrowHash {
  std::size_t operator()(const Narrow& v) const noexcept {
    auto part = [](__int128 z) {
      auto u = static_cast<unsigned __int128>(z);
      return IntHash::mix(static_cast<std::uint64_t>(u) ^ IntHash::mix(static_cast<std::uint64_t>(u >> 64)));
    };
    return static_cast<std::size_t>(IntHash::mix(part(v.x) + 0x632be59bd9b4e019ULL) ^ part(v.y));
  }
};

inline constexpr std::size_t narrow_bits = 120;

inline bool fits_narrow(const Int& v) { return v == 0 || boost::multiprecision::msb(abs(v)) < narrow_bits; }

inline __int128 to_narrow_int(const Int& v) {
  Int a = abs(v);
  const Int mask = (Int(1) << 64) - 1;
  auto lo = static_cast<std::uint64_t>(Int(a & mask));
  auto hi = static_cast<std::uint64_t>(Int(a >> 64));
  __int128 r = static_cast<__int128>((static_cast<unsigned __int128>(hi) << 64) | lo);
  return v < 0 ? -r : r;
}

inline Int from_narrow_int(__int128 v) {
  auto u = static_cast<unsigned __int128>(v < 0 ? -v : v);
  Int r = (Int(static_cast<std::uint64_t>(u >> 64)) << 64) | Int(static_cast<std::uint64_t>(u));
  return v < 0 ? Int(-r) : r;
}

inline Narrow to_narrow(const Vec2& v) { return {to_narrow_int(v.x), to_narrow_int(v.y)}; }
inline Vec2 from_narrow(const Narrow& v) { return Vec2(from_narrow_int(v.x), from_narrow_int(v.y)); }

}  // namespace detail

/// Sorts and deduplicates in place; move sets have set semantics.
template <class T, class Less = std::less<>>
void normalize_set(std::vector<T>& items, Less less = {}) {
  std::sort(items.begin(), items.end(), less);
  items.erase(std::unique(items.begin(), items.end()), items.end());
}

using Vec3 = std::array<Int, 3>;
using Mat3 = std::array<std::array<Int, 3>, 3>;

/// Row vector times matrix.
inline Vec3 multiply(const Vec3& v, const Mat3& m) {
  Vec3 out{0, 0, 0};
  for (std::size_t col = 0; col < 3; ++col) {
    for (std::size_t row = 0; row < 3; ++row) out[col] += v[row] * m[row][col];
    check_int_size(out[col]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Games

enum class Flag { Zero, Plus };

inline char flag_char(Flag f) { return f == Flag::Zero ? '0' : '+'; }
inline Flag flag_of(const Int& v) { return v > 0 ? Flag::Plus : Flag::Zero; }

struct RgsMove {
  StateId source;
  Vec2 delta;
  StateId target;

  friend bool operator==(const RgsMove&, const RgsMove&) = default;
  friend bool operator<(const RgsMove& a, const RgsMove& b) {
    if (a.source != b.source) return a.source < b.source;
    if (a.delta != b.delta) return a.delta < b.delta;
    return a.target < b.target;
  }
};

/// Robot game with states. Adam is stateless; only Eve has control states.
struct RgsGame {
  std::vector<StateId> states;
  std::vector<Vec2> adam_moves;
  std::vector<RgsMove> eve_moves;
  StateId initial_state;
  Vec2 initial;

  void normalize() {
    normalize_set(adam_moves);
    normalize_set(eve_moves);
  }

  friend bool operator==(const RgsGame&, const RgsGame&) = default;
};

/// Stateless two-dimensional robot game.
struct RobotGame {
  std::vector<Vec2> adam_moves;
  std::vector<Vec2> eve_moves;
  Vec2 initial;

  void normalize() {
    normalize_set(adam_moves);
    normalize_set(eve_moves);
  }

  friend bool operator==(const RobotGame&, const RobotGame&) = default;
};

struct MatrixGame {
  std::vector<Mat3> adam_mats;
  std::vector<Mat3> eve_mats;
  Vec3 initial{0, 0, 0};
  Vec3 target{0, 0, 0};

  void normalize() {
    normalize_set(adam_mats);
    normalize_set(eve_mats);
  }

  friend bool operator==(const MatrixGame&, const MatrixGame&) = default;
};

}  // namespace robotgames
