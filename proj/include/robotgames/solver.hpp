#pragma once

// Independent oracles for the reachability objective: a bounded-horizon
// minimax solved by backward induction over winning sets, and a box-bounded
// attractor over an explicitly enumerated position space.

#include "robotgames/engine.hpp"

#include <deque>
#include <limits>
#include <variant>

namespace robotgames {

struct Box {
  Int x_bound = 0;
  Int y_bound = 0;

  static Box square(const Int& b) { return Box{b, b}; }
  bool contains(const Vec2& v) const { return abs(v.x) <= x_bound && abs(v.y) <= y_bound; }
};

struct SolveResult {
  enum class Kind { EveWinsWithin, NoEveWinWithin };
  Kind kind = Kind::NoEveWinWithin;
  std::size_t rounds = 0;  // k for a win, the horizon otherwise
  // For an Adam-to-move win: one winning Eve reply per Adam move.
  std::vector<std::pair<Move, Move>> witness;

  bool eve_wins() const { return kind == Kind::EveWinsWithin; }
};

inline std::ostream& operator<<(std::ostream& os, const SolveResult& r) {
  return os << (r.eve_wins() ? "EveWinsWithin(" : "NoEveWinWithin(") << r.rounds << ")";
}

namespace detail {

struct StatefulMoves {
  std::vector<StateId> names;
  std::vector<Vec2> adam;
  std::vector<std::vector<std::pair<Vec2, std::size_t>>> eve;  // by source
  std::vector<std::vector<std::pair<Vec2, std::size_t>>> eve_into;  // by target: (delta, source)

  std::size_t state_of(const Position& p) const {
    if (!p.state) return 0;
    auto it = std::find(names.begin(), names.end(), *p.state);
    if (it == names.end()) throw IllegalMove("unknown state " + *p.state);
    return static_cast<std::size_t>(it - names.begin());
  }

  std::optional<StateId> name(std::size_t s) const {
    if (names.empty()) return std::nullopt;
    return names[s];
  }

  static StatefulMoves of(const RgsGame& g) {
    StatefulMoves sm;
    sm.names = g.states;
    sm.adam = g.adam_moves;
    normalize_set(sm.adam);
    sm.eve.resize(sm.names.size());
    sm.eve_into.resize(sm.names.size());
    std::unordered_map<StateId, std::size_t> idx;
    for (std::size_t i = 0; i < sm.names.size(); ++i) idx[sm.names[i]] = i;
    for (const auto& m : g.eve_moves) {
      std::size_t s = idx.at(m.source), t = idx.at(m.target);
      sm.eve[s].push_back({m.delta, t});
      sm.eve_into[t].push_back({m.delta, s});
    }
    return sm;
  }

  static StatefulMoves of(const RobotGame& g) {
    StatefulMoves sm;
    sm.adam = g.adam_moves;
    normalize_set(sm.adam);
    std::vector<Vec2> eve = g.eve_moves;
    normalize_set(eve);
    sm.eve.resize(1);
    sm.eve_into.resize(1);
    for (const auto& e : eve) {
      sm.eve[0].push_back({e, 0});
      sm.eve_into[0].push_back({e, 0});
    }
    return sm;
  }

  std::size_t size() const { return eve.size(); }
};

}  // namespace detail

namespace detail {

template <class V>
struct VecTraits;

template <>
struct VecTraits<Vec2> {
  using Hash = Vec2Hash;
  using Bounds = Vec2;
  static Vec2 of(const Vec2& v) { return v; }
  static Vec2 back(const Vec2& v) { return v; }
  static bool within(const Vec2& v, const Bounds& b) { return abs(v.x) <= b.x && abs(v.y) <= b.y; }
};

template <>
struct VecTraits<Narrow> {
  using Hash = NarrowHash;
  using Bounds = Narrow;
  static Narrow of(const Vec2& v) { return to_narrow(v); }
  static Vec2 back(const Narrow& v) { return from_narrow(v); }
  static bool within(const Narrow& v, const Bounds& b) {
    return v.x <= b.x && -v.x <= b.x && v.y <= b.y && -v.y <= b.y;
  }
};

/// Winning layers over one vector representation. D_k = {-e} + (W_{k-1} - e),
/// W_k = {v : v + a in D_k for all a}, extended semi-naively.
template <class V>
class Layers {
 public:
  using T = VecTraits<V>;

  Layers(const StatefulMoves& sm, const std::optional<Box>& box)
      : w_(sm.size()), d_(sm.size()), dw_(sm.size()), eve_(sm.size()), eve_into_(sm.size()) {
    for (const auto& a : sm.adam) adam_.push_back(T::of(a));
    for (std::size_t s = 0; s < sm.size(); ++s) {
      for (const auto& [e, t] : sm.eve[s]) eve_[s].push_back({T::of(e), t});
      for (const auto& [e, src] : sm.eve_into[s]) eve_into_[s].push_back({T::of(e), src});
    }
    if (box) bounds_ = T::of(Vec2(box->x_bound, box->y_bound));
  }

  std::optional<std::size_t> lookup(bool adam_turn, std::size_t s, const Vec2& v) const {
    const auto& table = adam_turn ? w_[s] : d_[s];
    auto it = table.find(T::of(v));
    if (it == table.end()) return std::nullopt;
    return it->second;
  }

  // Index of an Eve move from s that wins within k rounds from u.
  std::optional<std::size_t> winning_reply(std::size_t s, const Vec2& u_, std::size_t k) const {
    V u = T::of(u_);
    for (std::size_t i = 0; i < eve_[s].size(); ++i) {
      const auto& [e, t] = eve_[s][i];
      V w = u + e;
      bool win = w.is_zero();
      if (!win && k > 1) {
        auto it = w_[t].find(w);
        win = it != w_[t].end() && it->second <= k - 1;
      }
      if (win) return i;
    }
    return std::nullopt;
  }

  std::size_t winning_set_size() const {
    std::size_t total = 0;
    for (const auto& w : w_) total += w.size();
    return total;
  }

  void step(std::size_t k) {
    const std::size_t S = w_.size();
    std::vector<std::vector<V>> new_d(S);
    auto add_d = [&](std::size_t s, V u) {
      if (!in_box(u)) return;
      if (d_[s].emplace(u, k).second) new_d[s].push_back(std::move(u));
    };
    if (k == 1) {
      for (std::size_t s = 0; s < S; ++s) {
        for (const auto& [e, t] : eve_[s]) add_d(s, -e);
      }
    } else {
      for (std::size_t t = 0; t < S; ++t) {
        for (const auto& w : dw_[t]) {
          for (const auto& [e, s] : eve_into_[t]) add_d(s, w - e);
        }
      }
    }
    for (std::size_t s = 0; s < S; ++s) {
      dw_[s].clear();
      for (const auto& u : new_d[s]) {
        for (const auto& a : adam_) {
          V v = u - a;
          if (!in_box(v) || w_[s].count(v) != 0) continue;
          bool all = true;
          for (const auto& b : adam_) {
            if (d_[s].count(v + b) == 0) {
              all = false;
              break;
            }
          }
          if (all) {
            w_[s].emplace(v, k);
            dw_[s].push_back(std::move(v));
          }
        }
      }
    }
  }

 private:
  using Table = std::unordered_map<V, std::size_t, typename T::Hash>;

  bool in_box(const V& v) const { return !bounds_ || T::within(v, *bounds_); }

  std::vector<Table> w_;
  std::vector<Table> d_;
  std::vector<std::vector<V>> dw_;
  std::vector<V> adam_;
  std::vector<std::vector<std::pair<V, std::size_t>>> eve_;
  std::vector<std::vector<std::pair<V, std::size_t>>> eve_into_;
  std::optional<typename T::Bounds> bounds_;
};

// Every stored vector lies in the box, and intermediate sums add at most two
// moves to it.
inline bool narrow_ok(const StatefulMoves& sm, const std::optional<Box>& box) {
  if (!box) return false;
  Int widest = max(box->x_bound, box->y_bound);
  auto widen = [&](const Vec2& v) { widest = max(widest, max(abs(v.x), abs(v.y))); };
  for (const auto& a : sm.adam) widen(a);
  for (const auto& moves : sm.eve) {
    for (const auto& [e, t] : moves) widen(e);
  }
  return fits_narrow(4 * widest);
}

}  // namespace detail

/// Bounded minimax by backward induction. W_k(s) holds the Adam-to-move
/// vectors at state s from which Eve forces a win within k rounds; D_k(s) the
/// Eve-to-move ones. Layers are cached, so repeated queries on one game share
/// the work. With a box, positions outside it count as lost for Eve, and the
/// layers use 128-bit arithmetic when the box allows it.
template <class Game>
class BoundedSolver {
 public:
  explicit BoundedSolver(const Game& g, std::optional<Box> box = std::nullopt)
      : moves_(detail::StatefulMoves::of(g)), box_(std::move(box)), layers_(make_layers(moves_, box_)) {}

  void extend_to(std::size_t horizon) {
    while (computed_ < horizon) {
      const std::size_t k = ++computed_;
      std::visit([k](auto& l) { l.step(k); }, layers_);
    }
  }

  std::size_t computed() const { return computed_; }

  /// Rank (rounds to a forced win) of a position, if at most `horizon`.
  std::optional<std::size_t> rank(const Position& p, std::size_t horizon) {
    extend_to(horizon);
    if (box_ && !box_->contains(p.vec)) return std::nullopt;
    std::size_t s = moves_.state_of(p);
    auto r = std::visit([&](const auto& l) { return l.lookup(p.turn == Turn::Adam, s, p.vec); }, layers_);
    if (!r || *r > horizon) return std::nullopt;
    return r;
  }

  SolveResult solve(const Position& p, std::size_t horizon) {
    SolveResult r;
    auto k = rank(p, horizon);
    if (!k) {
      r.rounds = horizon;
      return r;
    }
    r.kind = SolveResult::Kind::EveWinsWithin;
    r.rounds = *k;
    if (p.turn == Turn::Adam) {
      std::size_t s = moves_.state_of(p);
      for (const auto& a : moves_.adam) {
        Vec2 u = p.vec + a;
        auto i = std::visit([&](const auto& l) { return l.winning_reply(s, u, *k); }, layers_);
        if (!i) continue;
        const auto& [e, t] = moves_.eve[s][*i];
        Move reply = moves_.names.empty() ? Move::plain(e) : Move{e, moves_.names[s], moves_.names[t]};
        r.witness.push_back({Move::plain(a), reply});
      }
    }
    return r;
  }

  std::size_t winning_set_size() const {
    return std::visit([](const auto& l) { return l.winning_set_size(); }, layers_);
  }

 private:
  using AnyLayers = std::variant<detail::Layers<Vec2>, detail::Layers<detail::Narrow>>;

  static AnyLayers make_layers(const detail::StatefulMoves& sm, const std::optional<Box>& box) {
    if (detail::narrow_ok(sm, box)) return detail::Layers<detail::Narrow>(sm, box);
    return detail::Layers<Vec2>(sm, box);
  }

  detail::StatefulMoves moves_;
  std::optional<Box> box_;
  std::size_t computed_ = 0;
  AnyLayers layers_;
};

template <class Game>
SolveResult minimax_winner(const Game& g, const Position& p, std::size_t horizon,
                           std::optional<Box> box = std::nullopt) {
  BoundedSolver<Game> solver(g, std::move(box));
  return solver.solve(p, horizon);
}

// ---------------------------------------------------------------------------
// Attractor

/// Positions inside a square box from which Eve forces the target without the
/// play leaving the box. Adam-to-move positions with vector zero are targets.
struct Region {
  long bound = 0;
  std::vector<StateId> states;  // empty for a stateless game
  // rank per node; -1 outside the region
  std::vector<int> adam_rank;
  std::vector<int> eve_rank;

  std::size_t stride() const { return static_cast<std::size_t>(2 * bound + 1); }

  std::optional<std::size_t> node(const Position& p) const {
    if (abs(p.vec.x) > bound || abs(p.vec.y) > bound) return std::nullopt;
    std::size_t s = 0;
    if (p.state) {
      auto it = std::find(states.begin(), states.end(), *p.state);
      if (it == states.end()) return std::nullopt;
      s = static_cast<std::size_t>(it - states.begin());
    }
    long x = p.vec.x.convert_to<long>() + bound, y = p.vec.y.convert_to<long>() + bound;
    return (s * stride() + static_cast<std::size_t>(x)) * stride() + static_cast<std::size_t>(y);
  }

  bool contains(const Position& p) const { return rank(p).has_value(); }

  std::optional<int> rank(const Position& p) const {
    auto id = node(p);
    if (!id) return std::nullopt;
    int r = p.turn == Turn::Adam ? adam_rank[*id] : eve_rank[*id];
    if (r < 0) return std::nullopt;
    return r;
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (int r : adam_rank) n += r >= 0;
    for (int r : eve_rank) n += r >= 0;
    return n;
  }
};

template <class Game>
Region attractor(const Game& g, long bound) {
  auto sm = detail::StatefulMoves::of(g);
  Region reg;
  reg.bound = bound;
  reg.states = sm.names;
  const std::size_t S = sm.size();
  const long w = 2 * bound + 1;
  const std::size_t cells = static_cast<std::size_t>(w * w);
  reg.adam_rank.assign(S * cells, -1);
  reg.eve_rank.assign(S * cells, -1);

  auto inside = [&](const Int& x, const Int& y) { return abs(x) <= bound && abs(y) <= bound; };
  auto id = [&](std::size_t s, long x, long y) {
    return (s * static_cast<std::size_t>(w) + static_cast<std::size_t>(x + bound)) * static_cast<std::size_t>(w) +
           static_cast<std::size_t>(y + bound);
  };

  // Adam nodes whose successors all stay in the box start with a counter of
  // |A|; the others can never be attracted.
  std::vector<int> pending(S * cells, -1);
  for (std::size_t s = 0; s < S; ++s) {
    for (long x = -bound; x <= bound; ++x) {
      for (long y = -bound; y <= bound; ++y) {
        bool stays = true;
        for (const auto& a : sm.adam) stays = stays && inside(a.x + x, a.y + y);
        pending[id(s, x, y)] = stays ? static_cast<int>(sm.adam.size()) : -1;
      }
    }
  }

  struct Item {
    bool adam;
    std::size_t s;
    long x, y;
  };
  std::deque<Item> work;
  for (std::size_t s = 0; s < S; ++s) {
    reg.adam_rank[id(s, 0, 0)] = 0;
    work.push_back({true, s, 0, 0});
  }
  while (!work.empty()) {
    Item it = work.front();
    work.pop_front();
    if (it.adam) {
      int r = reg.adam_rank[id(it.s, it.x, it.y)];
      for (const auto& [e, src] : sm.eve_into[it.s]) {
        Int px = Int(it.x) - e.x, py = Int(it.y) - e.y;
        if (!inside(px, py)) continue;
        std::size_t node = id(src, px.convert_to<long>(), py.convert_to<long>());
        if (reg.eve_rank[node] >= 0) continue;
        reg.eve_rank[node] = r + 1;
        work.push_back({false, src, px.convert_to<long>(), py.convert_to<long>()});
      }
    } else {
      int r = reg.eve_rank[id(it.s, it.x, it.y)];
      for (const auto& a : sm.adam) {
        Int px = Int(it.x) - a.x, py = Int(it.y) - a.y;
        if (!inside(px, py)) continue;
        long lx = px.convert_to<long>(), ly = py.convert_to<long>();
        std::size_t node = id(it.s, lx, ly);
        if (reg.adam_rank[node] >= 0 || pending[node] <= 0) continue;
        if (--pending[node] == 0) {
          reg.adam_rank[node] = r;
          work.push_back({true, it.s, lx, ly});
        }
      }
    }
  }
  return reg;
}

/// Rounds Eve needs from `p` under the play rule, where a zero vector only
/// counts after her move: a start at the origin must still survive one round.
template <class Game>
std::optional<int> attractor_win_rank(const Game& g, const Region& reg, const Position& p) {
  if (p.turn == Turn::Eve || !p.vec.is_zero()) return reg.rank(p);
  int worst = 0;
  bool lost = false;
  visit_legal(g, p, [&](std::size_t, const Vec2& a) {
    auto r = reg.rank(Position{Turn::Eve, p.state, p.vec + a});
    if (r) worst = std::max(worst, *r);
    else lost = true;
  });
  if (lost) return std::nullopt;
  return worst;
}

}  // namespace robotgames
