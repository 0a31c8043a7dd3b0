#pragma once

// Turn-based play: Adam moves first each round, Eve wins when her move leaves
// the zero vector. Works for robot games with states and stateless robot games;
// matrix games are played through the (u,1,v) embedding.

#include "robotgames/reductions.hpp"

#include <memory>
#include <sstream>

namespace robotgames {

struct IllegalMove : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct StrategyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Turn { Adam, Eve };

struct Move {
  Vec2 delta;
  std::optional<StateId> source;  // Eve's moves in a game with states
  std::optional<StateId> target;

  static Move plain(Vec2 v) { return Move{std::move(v), std::nullopt, std::nullopt}; }
  static Move of(const RgsMove& m) { return Move{m.delta, m.source, m.target}; }

  friend bool operator==(const Move&, const Move&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Move& m) {
  if (m.source) return os << "(" << *m.source << "," << m.delta << "," << m.target.value_or("?") << ")";
  return os << m.delta;
}

struct Position {
  Turn turn = Turn::Adam;
  std::optional<StateId> state;
  Vec2 vec;

  friend bool operator==(const Position&, const Position&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Position& p) {
  os << (p.turn == Turn::Adam ? "Adam" : "Eve") << " to move at ";
  if (p.state) os << "(" << *p.state << "," << p.vec << ")";
  else os << p.vec;
  return os;
}

struct PositionHash {
  std::size_t operator()(const Position& p) const noexcept {
    std::size_t h = Vec2Hash{}(p.vec) ^ (p.turn == Turn::Eve ? 0x51ed27u : 0u);
    if (p.state) h ^= std::hash<std::string>{}(*p.state) * 31u;
    return h;
  }
};

// ---------------------------------------------------------------------------
// Rules

inline Position initial_position(const RgsGame& g) { return Position{Turn::Adam, g.initial_state, g.initial}; }
inline Position initial_position(const RobotGame& g) { return Position{Turn::Adam, std::nullopt, g.initial}; }

inline std::vector<Move> legal_moves(const RgsGame& g, const Position& pos) {
  std::vector<Move> out;
  if (pos.turn == Turn::Adam) {
    for (const auto& a : g.adam_moves) out.push_back(Move::plain(a));
    return out;
  }
  for (const auto& m : g.eve_moves) {
    if (pos.state && m.source == *pos.state) out.push_back(Move::of(m));
  }
  return out;
}

inline std::vector<Move> legal_moves(const RobotGame& g, const Position& pos) {
  std::vector<Move> out;
  for (const auto& v : pos.turn == Turn::Adam ? g.adam_moves : g.eve_moves) out.push_back(Move::plain(v));
  return out;
}

// Legal moves by index into the mover's move list, without copying them.
template <class F>
void visit_legal(const RgsGame& g, const Position& pos, F&& f) {
  if (pos.turn == Turn::Adam) {
    for (std::size_t i = 0; i < g.adam_moves.size(); ++i) f(i, g.adam_moves[i]);
    return;
  }
  for (std::size_t i = 0; i < g.eve_moves.size(); ++i) {
    if (pos.state && g.eve_moves[i].source == *pos.state) f(i, g.eve_moves[i].delta);
  }
}

template <class F>
void visit_legal(const RobotGame& g, const Position& pos, F&& f) {
  const auto& set = pos.turn == Turn::Adam ? g.adam_moves : g.eve_moves;
  for (std::size_t i = 0; i < set.size(); ++i) f(i, set[i]);
}

inline Move legal_move_at(const RgsGame& g, const Position& pos, std::size_t i) {
  return pos.turn == Turn::Adam ? Move::plain(g.adam_moves[i]) : Move::of(g.eve_moves[i]);
}

inline Move legal_move_at(const RobotGame& g, const Position& pos, std::size_t i) {
  return Move::plain(pos.turn == Turn::Adam ? g.adam_moves[i] : g.eve_moves[i]);
}

inline bool is_legal(const RgsGame& g, const Position& pos, const Move& m) {
  if (pos.turn == Turn::Adam) {
    return !m.source && std::find(g.adam_moves.begin(), g.adam_moves.end(), m.delta) != g.adam_moves.end();
  }
  if (!m.source || !m.target || !pos.state || *m.source != *pos.state) return false;
  RgsMove wanted{*m.source, m.delta, *m.target};
  return std::find(g.eve_moves.begin(), g.eve_moves.end(), wanted) != g.eve_moves.end();
}

inline bool is_legal(const RobotGame& g, const Position& pos, const Move& m) {
  if (m.source || m.target) return false;
  const auto& set = pos.turn == Turn::Adam ? g.adam_moves : g.eve_moves;
  return std::find(set.begin(), set.end(), m.delta) != set.end();
}

/// Applies a move without the legality check.
inline Position advance(const Position& pos, const Move& m) {
  Position next = pos;
  next.vec += m.delta;
  if (pos.turn == Turn::Eve && m.target) next.state = m.target;
  next.turn = pos.turn == Turn::Adam ? Turn::Eve : Turn::Adam;
  return next;
}

template <class Game>
Position apply(const Game& g, const Position& pos, const Move& m) {
  if (!is_legal(g, pos, m)) {
    std::ostringstream os;
    os << "move " << m << " is not legal at " << pos;
    throw IllegalMove(os.str());
  }
  return advance(pos, m);
}

// ---------------------------------------------------------------------------
// Strategies and play

/// History-observing move proposer. The base class tracks the current
/// position; subclasses react to moves in on_observe and answer propose().
template <class Game>
class Strategy {
 public:
  virtual ~Strategy() = default;

  void init(const Game& g, const Position& start) {
    game_ = &g;
    pos_ = start;
    on_init();
  }

  /// The move is trusted; play_rounds checks legality before broadcasting.
  void observe(const Move& m) {
    Position before = pos_;
    pos_ = advance(pos_, m);
    on_observe(before, m);
  }

  virtual Move propose() = 0;
  virtual std::unique_ptr<Strategy> clone() const = 0;

  const Position& position() const { return pos_; }

 protected:
  virtual void on_init() {}
  virtual void on_observe(const Position& /*before*/, const Move& /*m*/) {}

  const Game& game() const { return *game_; }

 private:
  const Game* game_ = nullptr;
  Position pos_;
};

template <class Game, class Derived>
class StrategyBase : public Strategy<Game> {
 public:
  std::unique_ptr<Strategy<Game>> clone() const override {
    return std::make_unique<Derived>(static_cast<const Derived&>(*this));
  }
};

struct Verdict {
  enum class Kind { EveWinsAt, Ongoing, EveStuck };
  Kind kind = Kind::Ongoing;
  std::size_t round = 0;

  bool eve_won() const { return kind == Kind::EveWinsAt; }
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Verdict& v) {
  switch (v.kind) {
    case Verdict::Kind::EveWinsAt: return os << "EveWinsAt(" << v.round << ")";
    case Verdict::Kind::Ongoing: return os << "Ongoing";
    case Verdict::Kind::EveStuck: return os << "EveStuck(" << v.round << ")";
  }
  return os;
}

struct PlayTrace {
  std::vector<Position> positions;
  std::vector<Move> moves;
  Verdict verdict;
};

template <class Game>
void play_rounds(const Game& g, Strategy<Game>& adam, Strategy<Game>& eve, std::size_t first_round,
                 std::size_t max_rounds, PlayTrace& trace) {
  auto step = [&](Strategy<Game>& who) {
    Move m = who.propose();
    const Position& pos = trace.positions.back();
    if (!is_legal(g, pos, m)) {
      std::ostringstream os;
      os << "strategy proposed illegal move " << m << " at " << pos;
      throw StrategyError(os.str());
    }
    trace.positions.push_back(advance(pos, m));
    trace.moves.push_back(m);
    adam.observe(m);
    eve.observe(m);
  };
  for (std::size_t r = first_round; r <= max_rounds; ++r) {
    step(adam);
    bool stuck = true;
    visit_legal(g, trace.positions.back(), [&](std::size_t, const Vec2&) { stuck = false; });
    if (stuck) {
      trace.verdict = Verdict{Verdict::Kind::EveStuck, r};
      return;
    }
    step(eve);
    if (trace.positions.back().vec.is_zero()) {
      trace.verdict = Verdict{Verdict::Kind::EveWinsAt, r};
      return;
    }
  }
  trace.verdict = Verdict{Verdict::Kind::Ongoing, 0};
}

/// Alternates Adam then Eve from the initial position for at most max_rounds.
template <class Game>
PlayTrace play(const Game& g, Strategy<Game>& adam, Strategy<Game>& eve, std::size_t max_rounds) {
  PlayTrace trace;
  trace.positions.push_back(initial_position(g));
  adam.init(g, trace.positions.back());
  eve.init(g, trace.positions.back());
  play_rounds(g, adam, eve, 1, max_rounds, trace);
  return trace;
}

/// Re-applies the moves of a trace from the initial position.
template <class Game>
std::vector<Position> replay(const Game& g, const std::vector<Move>& moves) {
  std::vector<Position> out{initial_position(g)};
  for (const auto& m : moves) out.push_back(apply(g, out.back(), m));
  return out;
}

// ---------------------------------------------------------------------------
// Matrix games through the embedding

/// Vector trace of a matrix play: initial vector times each move's matrix.
inline std::vector<Vec3> matrix_trace(const Vec3& initial, const std::vector<Mat3>& mats) {
  std::vector<Vec3> out{initial};
  for (const auto& m : mats) out.push_back(multiply(out.back(), m));
  return out;
}

/// First round at which the target vector appears right after Eve's matrix.
inline std::optional<std::size_t> matrix_win_round(const MatrixGame& g, const std::vector<Vec3>& trace) {
  for (std::size_t i = 2; i < trace.size(); i += 2) {
    if (trace[i] == g.target) return i / 2;
  }
  return std::nullopt;
}

}  // namespace robotgames
