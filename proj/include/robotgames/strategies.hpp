#pragma once

// Strategies read off the correctness proofs of the reductions, plus a few
// generic ones (constant, random, greedy, scripted) used by tests and the CLI.

#include "robotgames/engine.hpp"

#include <random>

namespace robotgames {

struct NoApplicableMove : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Generic strategies

template <class Game>
class ConstantStrategy : public StrategyBase<Game, ConstantStrategy<Game>> {
 public:
  explicit ConstantStrategy(Move m) : move_(std::move(m)) {}
  Move propose() override { return move_; }

 private:
  Move move_;
};

template <class Game>
class FirstLegalStrategy : public StrategyBase<Game, FirstLegalStrategy<Game>> {
 public:
  Move propose() override {
    auto moves = legal_moves(this->game(), this->position());
    if (moves.empty()) throw NoApplicableMove("no legal move");
    return moves.front();
  }
};

template <class Game>
class RandomStrategy : public StrategyBase<Game, RandomStrategy<Game>> {
 public:
  explicit RandomStrategy(std::uint64_t seed) : rng_(seed) {}

  Move propose() override {
    std::vector<std::size_t> legal;
    visit_legal(this->game(), this->position(), [&](std::size_t i, const Vec2&) { legal.push_back(i); });
    if (legal.empty()) throw NoApplicableMove("no legal move");
    std::uniform_int_distribution<std::size_t> pick(0, legal.size() - 1);
    return legal_move_at(this->game(), this->position(), legal[pick(rng_)]);
  }

 private:
  std::mt19937_64 rng_;
};

/// Picks the move whose result has the smallest |x| + |y| (first on ties).
template <class Game>
class GreedyStrategy : public StrategyBase<Game, GreedyStrategy<Game>> {
 public:
  Move propose() override {
    const Vec2& v = this->position().vec;
    std::optional<std::size_t> best;
    Int best_norm = -1;
    visit_legal(this->game(), this->position(), [&](std::size_t i, const Vec2& d) {
      Int norm = abs(v.x + d.x) + abs(v.y + d.y);
      if (!best || norm < best_norm) {
        best_norm = std::move(norm);
        best = i;
      }
    });
    if (!best) throw NoApplicableMove("no legal move");
    return legal_move_at(this->game(), this->position(), *best);
  }
};

/// Plays a fixed prefix of moves, then hands over to another strategy. The
/// follower observes the whole play, including the prefix.
template <class Game>
class ScriptedStrategy : public Strategy<Game> {
 public:
  ScriptedStrategy(std::vector<Move> prefix, std::unique_ptr<Strategy<Game>> then)
      : prefix_(std::move(prefix)), then_(std::move(then)) {}
  ScriptedStrategy(const ScriptedStrategy& o)
      : Strategy<Game>(o), prefix_(o.prefix_), used_(o.used_), then_(o.then_ ? o.then_->clone() : nullptr) {}

  Move propose() override {
    if (used_ < prefix_.size()) return prefix_[used_];
    if (!then_) throw NoApplicableMove("script exhausted");
    return then_->propose();
  }

  std::unique_ptr<Strategy<Game>> clone() const override { return std::make_unique<ScriptedStrategy>(*this); }

 protected:
  void on_init() override {
    used_ = 0;
    if (then_) then_->init(this->game(), this->position());
  }
  void on_observe(const Position& before, const Move& m) override {
    if (used_ < prefix_.size() && m == prefix_[used_]) ++used_;
    (void)before;
    if (then_) then_->observe(m);
  }

 private:
  std::vector<Move> prefix_;
  std::size_t used_ = 0;
  std::unique_ptr<Strategy<Game>> then_;
};

// ---------------------------------------------------------------------------
// Robot game with states

inline const Vec2& zero_move() {
  static const Vec2 z(0, 0);
  return z;
}
inline const Vec2& positivity_check() {
  static const Vec2 p(1, 0);
  return p;
}

inline bool flags_match(const FlaggedState& s, const Int& c1, const Int& c2) {
  return s.c1 == flag_of(c1) && s.c2 == flag_of(c2);
}

/// Eve in the game with states: simulates the machine while Adam plays (0,0)
/// and empties the counters after his first positivity check.
class EveRgsStrategy : public StrategyBase<RgsGame, EveRgsStrategy> {
 public:
  Move propose() override {
    const Position& pos = position();
    auto fs = parse_flagged_name(pos.state.value_or(""));
    if (!fs) throw NoApplicableMove("unflagged state");
    const Int& e = last_adam_.x;
    const Vec2& v = pos.vec;

    if (!fs->top) {
      if (last_adam_ == zero_move()) {
        for (const auto& m : legal_moves(game(), pos)) {
          auto t = parse_flagged_name(*m.target);
          if (t && !t->top && flags_match(*t, v.x + m.delta.x, v.y + m.delta.y)) return m;
        }
      }
      // connector; also the only option once the machine has halted
      return find(Vec2(-1, 0), FlaggedState::emptying(fs->c1, fs->c2).name());
    }

    Vec2 d(-e, 0);
    if (fs->c1 == Flag::Plus) d.x -= 4;
    if (fs->c2 == Flag::Plus) d.y -= 1;
    Vec2 after = v + d;
    return find(d, FlaggedState::emptying(flag_of(after.x), flag_of(after.y)).name());
  }

 protected:
  void on_init() override { last_adam_ = zero_move(); }
  void on_observe(const Position& before, const Move& m) override {
    if (before.turn == Turn::Adam) last_adam_ = m.delta;
  }

 private:
  Move find(const Vec2& delta, const StateId& target) const {
    Move m{delta, position().state, target};
    if (!is_legal(game(), position(), m)) {
      std::ostringstream os;
      os << "no move " << m << " at " << position();
      throw NoApplicableMove(os.str());
    }
    return m;
  }

  Vec2 last_adam_;
};

/// Adam in the game with states: plays (0,0) while Eve's flags are right and
/// switches for good to the mod-4 policy once she errs or empties early.
class AdamRgsReferee : public StrategyBase<RgsGame, AdamRgsReferee> {
 public:
  Move propose() override {
    if (!punishing_) return Move::plain(zero_move());
    return Move::plain(mod_floor(position().vec.x, 4) == 3 ? zero_move() : positivity_check());
  }

  bool punishing() const { return punishing_; }
  std::size_t moves_seen() const { return moves_seen_; }
  std::optional<std::size_t> punished_after() const { return punished_after_; }

 protected:
  void on_init() override {
    punishing_ = false;
    moves_seen_ = 0;
    punished_after_.reset();
  }
  void on_observe(const Position& before, const Move& m) override {
    ++moves_seen_;
    if (before.turn != Turn::Eve || punishing_) return;
    auto t = parse_flagged_name(m.target.value_or(""));
    const Vec2& v = position().vec;
    if (!t || t->top || !flags_match(*t, v.x, v.y)) {
      punishing_ = true;
      punished_after_ = moves_seen_;
    }
  }

 private:
  bool punishing_ = false;
  std::size_t moves_seen_ = 0;
  std::optional<std::size_t> punished_after_;
};

/// RGS punishment invariant: the first counter is not a multiple of 4.
inline bool rgs_punishment_holds(const Position& p) { return mod_floor(p.vec.x, 4) != 0; }

// ---------------------------------------------------------------------------
// Stateless robot game

/// Shared view of the RG construction used by both RG strategies.
struct RgContext {
  const RgsGame* rgs = nullptr;
  const RgReduction* rg = nullptr;

  const StateNumbering& num() const { return rg->numbering; }

  std::optional<std::size_t> check_index(const Vec2& adam_move) const {
    for (std::size_t i : num().checkable()) {
      if (rg->check(i) == adam_move) return i;
    }
    return std::nullopt;
  }

  Vec2 compose(const Int& dx, const Int& dc2, std::size_t from, std::size_t to) const {
    return Vec2(dx, dc2 * 4 * pow8(num().n)) + update_vector(num(), UpdateVector::move(from, to));
  }

  FlaggedState state(std::size_t idx) const { return *parse_flagged_name(num().names.at(idx)); }
};

/// RG second-counter punishment invariant: y mod 4*8^n lies outside [0, 8^n).
inline bool rg_punishment_holds(const Position& p, std::size_t n) {
  return mod_floor(p.vec.y, 4 * pow8(n)) >= pow8(n);
}

/// Eve in the stateless game. Mirrors the RGS simulation through regular
/// moves, finishes at s00 with zero counters, answers a positivity check by
/// entering the emptying gadget and a state-check with a state-defence move,
/// then drains the counters while cancelling each of Adam's moves.
class EveRgStrategy : public StrategyBase<RobotGame, EveRgStrategy> {
 public:
  explicit EveRgStrategy(RgContext ctx) : ctx_(ctx) {}

  Move propose() override {
    Plan p = plan();
    pending_ = p.next;
    if (!is_legal(game(), position(), Move::plain(p.delta))) {
      std::ostringstream os;
      os << "planned vector " << p.delta << " is not one of Eve's moves";
      throw NoApplicableMove(os.str());
    }
    return Move::plain(p.delta);
  }

  struct Book {
    bool draining = false;
    std::size_t state = 0;  // numbered state: simulation state or gadget state
    Int x = 0;              // first counter (already scaled by 4)
    Int c2 = 0;
  };
  const Book& book() const { return book_; }

 protected:
  void on_init() override {
    const auto& num = ctx_.num();
    book_ = Book{false, num.of(ctx_.rgs->initial_state), ctx_.rgs->initial.x, ctx_.rgs->initial.y};
    last_adam_ = zero_move();
    pending_.reset();
  }
  void on_observe(const Position& before, const Move& m) override {
    if (before.turn == Turn::Adam) {
      last_adam_ = m.delta;
      return;
    }
    if (pending_) {
      book_ = *pending_;
    } else {
      // replayed without propose(): follow the move if it is the planned one
      Plan p = plan();
      if (p.delta == m.delta) book_ = p.next;
    }
    pending_.reset();
  }

 private:
  struct Plan {
    Vec2 delta;
    Book next;
  };

  Plan plan() const {
    const auto& num = ctx_.num();
    auto check = ctx_.check_index(last_adam_);
    Vec2 cancel = check ? ctx_.rg->check(*check) : last_adam_;
    FlaggedState fs = ctx_.state(book_.state);
    const std::size_t s = book_.state;
    const Int& x = book_.x;
    const Int& c2 = book_.c2;

    if (!book_.draining) {
      bool at_zero = fs.c1 == Flag::Zero && fs.c2 == Flag::Zero && x == 0 && c2 == 0;
      if (at_zero) return {ctx_.compose(0, 0, s, 0) - cancel, Book{true, 0, 0, 0}};
      if (check) {
        std::size_t k = num.top(fs.c1, fs.c2);
        if (k == *check) k = num.top(fs.c1, fs.c2, true);
        return {ctx_.compose(0, 0, s, k) - cancel, Book{true, k, x, c2}};
      }
      if (last_adam_ == zero_move()) {
        for (const auto& mv : ctx_.rgs->eve_moves) {
          if (mv.source != num.names[s]) continue;
          auto t = parse_flagged_name(mv.target);
          if (!t || t->top || !flags_match(*t, x + mv.delta.x, c2 + mv.delta.y)) continue;
          return {ctx_.compose(mv.delta.x, mv.delta.y, s, num.of(mv.target)),
                  Book{false, num.of(mv.target), x + mv.delta.x, c2 + mv.delta.y}};
        }
      }
      std::size_t k = num.top(fs.c1, fs.c2);
      return {ctx_.compose(-1, 0, s, k), Book{true, k, x, c2}};
    }

    const bool p1 = fs.c1 == Flag::Plus, p2 = fs.c2 == Flag::Plus;
    if (check) {
      // stay put while both flagged counters remain positive, else finish
      Int dx = (p1 && x > 4) ? -4 : 0;
      Int dy = (p2 && c2 > 1) ? -1 : 0;
      if (dx != 0 || dy != 0) return {Vec2(dx, dy * 4 * pow8(num.n)) - cancel, Book{true, s, x + dx, c2 + dy}};
      Int fx = p1 ? -4 : 0;
      Int fy = p2 ? -1 : 0;
      return {ctx_.compose(fx, fy, s, 0) - cancel, Book{true, 0, x + fx, c2 + fy}};
    }
    Int dx = p1 ? -4 : 0;
    Int dy = p2 ? -1 : 0;
    Int nx = x + dx, ny = c2 + dy;
    std::size_t k;
    if (nx > 0 && ny > 0) {
      k = partner(s);
    } else if (nx > 0 || ny > 0) {
      Flag a = flag_of(nx), b = flag_of(ny);
      k = (a == fs.c1 && b == fs.c2) ? partner(s) : num.top(a, b);
    } else {
      k = 0;
    }
    return {ctx_.compose(dx, dy, s, k) - cancel, Book{true, k, nx, ny}};
  }

  std::size_t partner(std::size_t j) const {
    const std::size_t n = ctx_.num().n;
    // the checkable block pairs (n-6,n-5), (n-4,n-3), (n-2,n-1)
    return (j - (n - 6)) % 2 == 0 ? j + 1 : j - 1;
  }

  RgContext ctx_;
  Book book_;
  Vec2 last_adam_;
  std::optional<Book> pending_;
};

/// Adam in the stateless game. Keeps a ledger of the symbolic content of every
/// move (state coefficients, check balance, second counter) and punishes the
/// first incorrect move of Eve according to its kind.
class AdamRgReferee : public StrategyBase<RobotGame, AdamRgReferee> {
 public:
  enum class Mode { Honest, PositivityPunish, CheckPunish, PrematurePunish };

  explicit AdamRgReferee(RgContext ctx) : ctx_(ctx) {}

  /// The interval rule, unless a two-ply lookahead shows it unsafe. A move is
  /// safe when Eve cannot reach the zero vector with her reply, the mode's
  /// invariant holds at her turn, and after each of her replies Adam again
  /// has such a move. Falls back to one ply, then to the interval rule.
  Move propose() override {
    Move preferred = interval_move();
    if (mode_ == Mode::Honest) return preferred;
    std::vector<Vec2> order{preferred.delta, ctx_.rg->check(target_check())};
    for (std::size_t i : ctx_.num().checkable()) order.push_back(ctx_.rg->check(i));
    order.push_back(positivity_check());
    order.push_back(zero_move());
    const Vec2& v = position().vec;
    for (const auto& a : order) {
      if (safe_two_ply(v + a)) return Move::plain(a);
    }
    for (const auto& a : order) {
      if (safe(v + a)) return Move::plain(a);
    }
    return preferred;
  }

  Move interval_move() const {
    const auto& num = ctx_.num();
    const Vec2& v = position().vec;
    switch (mode_) {
      case Mode::Honest: return Move::plain(zero_move());
      case Mode::PositivityPunish:
        return Move::plain(mod_floor(v.x, 4) == 3 ? zero_move() : positivity_check());
      case Mode::CheckPunish:
      case Mode::PrematurePunish: {
        const Int p = pow8(num.n);
        const Int r = mod_floor(v.y, 4 * p);
        const Vec2 chk = ctx_.rg->check(target_check());
        if (r < p) return Move::plain(chk);
        if (mode_ == Mode::PrematurePunish || r >= 3 * p) return Move::plain(zero_move());
        return Move::plain(mod_floor(v.y + chk.y, 4 * p) >= p ? chk : zero_move());
      }
    }
    return Move::plain(zero_move());
  }

  // `u` is the vector at Eve's turn.
  bool safe(const Vec2& u) const { return holds(residue(u)) && losing_->count(u) == 0; }

  bool safe_two_ply(const Vec2& u) const {
    if (narrow_ && detail::fits_narrow(u.x) && detail::fits_narrow(u.y)) return safe_two_ply_narrow(u);
    const Int ru = residue(u);
    if (!holds(ru) || losing_->count(u) != 0) return false;
    const auto& eve = game().eve_moves;
    const auto& adam = game().adam_moves;
    for (std::size_t i = 0; i < eve.size(); ++i) {
      Int rw = wrap(ru + tables_->eve[i]);
      bool answer = false;
      for (std::size_t j = 0; j < adam.size() && !answer; ++j) {
        if (!holds(wrap(rw + tables_->adam[j]))) continue;
        answer = losing_->count(u + eve[i] + adam[j]) == 0;
      }
      if (!answer) return false;
    }
    return true;
  }

  bool safe_two_ply_narrow(const Vec2& u_) const {
    using detail::Narrow;
    const Narrow u = detail::to_narrow(u_);
    const auto& t = *tables_;
    const __int128 m = detail::to_narrow_int(modulus()), p8 = detail::to_narrow_int(p8_);
    const bool positivity = mode_ == Mode::PositivityPunish;
    auto holds_n = [&](__int128 r) { return positivity ? r != 0 : r >= p8; };
    auto wrap_n = [&](__int128 r) { return r >= m ? r - m : r; };
    const __int128 ru = detail::to_narrow_int(residue(u_));
    if (!holds_n(ru) || losing_narrow_->count(u) != 0) return false;
    for (std::size_t i = 0; i < t.eve_n.size(); ++i) {
      __int128 rw = wrap_n(ru + t.eve_r[i]);
      Narrow w = u + t.eve_n[i];
      bool answer = false;
      for (std::size_t j = 0; j < t.adam_n.size() && !answer; ++j) {
        if (!holds_n(wrap_n(rw + t.adam_r[j]))) continue;
        answer = losing_narrow_->count(w + t.adam_n[j]) == 0;
      }
      if (!answer) return false;
    }
    return true;
  }

  // The invariant only looks at x mod 4 or y mod 4*8^n.
  Int modulus() const { return mode_ == Mode::PositivityPunish ? Int(4) : 4 * p8_; }
  Int residue(const Vec2& u) const { return mod_floor(mode_ == Mode::PositivityPunish ? u.x : u.y, modulus()); }
  Int wrap(Int r) const {
    const Int m = modulus();
    if (r >= m) r -= m;
    return r;
  }
  bool holds(const Int& r) const { return mode_ == Mode::PositivityPunish ? r != 0 : r >= p8_; }

  struct Residues {
    std::vector<Int> eve, adam;
    // 128-bit copies, filled when the game allows them
    std::vector<__int128> eve_r, adam_r;
    std::vector<detail::Narrow> eve_n, adam_n;
  };
  void build_residues() {
    auto t = std::make_shared<Residues>();
    for (const auto& e : game().eve_moves) t->eve.push_back(residue(e));
    for (const auto& a : game().adam_moves) t->adam.push_back(residue(a));
    if (narrow_) {
      for (const auto& r : t->eve) t->eve_r.push_back(detail::to_narrow_int(r));
      for (const auto& r : t->adam) t->adam_r.push_back(detail::to_narrow_int(r));
      for (const auto& e : game().eve_moves) t->eve_n.push_back(detail::to_narrow(e));
      for (const auto& a : game().adam_moves) t->adam_n.push_back(detail::to_narrow(a));
    }
    tables_ = std::move(t);
  }

  Mode mode() const { return mode_; }
  std::optional<std::size_t> punished_after() const { return punished_after_; }
  const std::vector<long>& coefficients() const { return coef_; }
  const std::vector<long>& check_balance() const { return checks_; }
  const Int& second_counter() const { return c2_; }

  /// Lowest checkable index whose coefficient is nonzero, else n-1.
  std::size_t target_check() const {
    for (std::size_t i : ctx_.num().checkable()) {
      if (coef_[i] != 0) return i;
    }
    return ctx_.num().n - 1;
  }

  bool ledger_corrupt() const {
    if (coef_[0] == 0) return true;
    for (std::size_t j = 1; j < coef_.size(); ++j) {
      if (coef_[j] < 0) return true;
    }
    return false;
  }

  /// Reconstructs y from the ledger; equals the actual y on every play.
  Int ledger_y() const {
    const auto& num = ctx_.num();
    Int y = c2_ * 4 * pow8(num.n);
    for (std::size_t j = 0; j < coef_.size(); ++j) y += Int(coef_[j]) * pow8(j);
    for (std::size_t i = 0; i < checks_.size(); ++i) y += Int(checks_[i]) * (5 * pow8(i) + pow8(num.n));
    return y;
  }

 protected:
  void on_init() override {
    const auto& num = ctx_.num();
    auto losing = std::make_shared<std::unordered_set<Vec2, Vec2Hash>>();
    for (const auto& e : game().eve_moves) losing->insert(-e);
    p8_ = pow8(num.n);
    narrow_ = detail::fits_narrow(4 * p8_);
    for (const auto& v : *losing) narrow_ = narrow_ && detail::fits_narrow(v.x) && detail::fits_narrow(v.y);
    for (const auto& a : game().adam_moves) narrow_ = narrow_ && detail::fits_narrow(a.x) && detail::fits_narrow(a.y);
    if (narrow_) {
      auto ln = std::make_shared<std::unordered_set<detail::Narrow, detail::NarrowHash>>();
      for (const auto& v : *losing) ln->insert(detail::to_narrow(v));
      losing_narrow_ = std::move(ln);
    }
    losing_ = std::move(losing);
    coef_.assign(num.n, 0);
    checks_.assign(num.n, 0);
    current_ = num.of(ctx_.rgs->initial_state);
    coef_[0] = -1;
    coef_[current_] += 1;
    c2_ = ctx_.rgs->initial.y;
    mode_ = Mode::Honest;
    moves_seen_ = 0;
    punished_after_.reset();
  }

  void on_observe(const Position& before, const Move& m) override {
    ++moves_seen_;
    if (before.turn == Turn::Adam) {
      if (auto i = ctx_.check_index(m.delta)) checks_[*i] -= 1;
      return;
    }
    auto it = ctx_.rg->eve_info.find(m.delta);
    if (it == ctx_.rg->eve_info.end()) return;
    const RgMoveInfo& info = it->second;
    c2_ += info.dc2;
    if (info.from && info.to && *info.from != *info.to) {
      coef_[*info.from] -= 1;
      coef_[*info.to] += 1;
    }
    if (info.cancels) checks_[*info.cancels] += 1;
    if (mode_ != Mode::Honest || position().vec.is_zero()) return;

    const auto& num = ctx_.num();
    if (info.cancels) {
      punish(Mode::PrematurePunish);
    } else if (ledger_corrupt()) {
      punish(Mode::CheckPunish);
    } else if (!info.to || !num.is_simulation(*info.to)) {
      punish(Mode::PositivityPunish);
    } else if (!flags_match(ctx_.state(*info.to), position().vec.x, c2_)) {
      punish(Mode::PositivityPunish);
    } else {
      current_ = *info.to;
    }
  }

 private:
  void punish(Mode m) {
    mode_ = m;
    punished_after_ = moves_seen_;
    build_residues();
  }

  RgContext ctx_;
  std::vector<long> coef_;
  std::vector<long> checks_;
  std::size_t current_ = 0;
  Int c2_ = 0;
  Mode mode_ = Mode::Honest;
  std::shared_ptr<const std::unordered_set<Vec2, Vec2Hash>> losing_;  // vectors Eve zeroes in one move
  std::shared_ptr<const std::unordered_set<detail::Narrow, detail::NarrowHash>> losing_narrow_;
  bool narrow_ = false;  // 128-bit lookahead applies
  Int p8_;
  std::shared_ptr<const Residues> tables_;  // move residues for the current mode
  std::size_t moves_seen_ = 0;
  std::optional<std::size_t> punished_after_;
};

/// The invariant a referee in the given mode maintains at Eve's turns.
inline bool rg_referee_invariant(AdamRgReferee::Mode mode, const Position& p, std::size_t n) {
  switch (mode) {
    case AdamRgReferee::Mode::Honest: return true;
    case AdamRgReferee::Mode::PositivityPunish: return rgs_punishment_holds(p);
    case AdamRgReferee::Mode::CheckPunish:
    case AdamRgReferee::Mode::PrematurePunish: return rg_punishment_holds(p, n);
  }
  return true;
}

inline const char* to_string(AdamRgReferee::Mode m) {
  switch (m) {
    case AdamRgReferee::Mode::Honest: return "honest";
    case AdamRgReferee::Mode::PositivityPunish: return "positivity-punish";
    case AdamRgReferee::Mode::CheckPunish: return "check-punish";
    case AdamRgReferee::Mode::PrematurePunish: return "premature-punish";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Factories

inline std::unique_ptr<Strategy<RgsGame>> eve_rgs_strategy() { return std::make_unique<EveRgsStrategy>(); }
inline std::unique_ptr<Strategy<RgsGame>> adam_rgs_referee() { return std::make_unique<AdamRgsReferee>(); }
inline std::unique_ptr<Strategy<RobotGame>> eve_rg_strategy(const Pipeline& p) {
  return std::make_unique<EveRgStrategy>(RgContext{&p.rgs, &p.rg});
}
inline std::unique_ptr<Strategy<RobotGame>> adam_rg_referee(const Pipeline& p) {
  return std::make_unique<AdamRgReferee>(RgContext{&p.rgs, &p.rg});
}

template <class Game>
std::unique_ptr<Strategy<Game>> always(Vec2 v) {
  return std::make_unique<ConstantStrategy<Game>>(Move::plain(std::move(v)));
}

}  // namespace robotgames
