#pragma once

// Machine text format and JSON game files.
//
// Machine grammar, one directive per line, '#' starts a comment:
//   states: <id>+
//   init: <id>
//   sink: <id>
//   trans: <src> <label> <dst>      label in c1++ c1-- c1==0 c2++ c2-- c2==0
//
// Game files carry big integers as decimal strings and list move sets sorted
// by their decimal renderings so that emitting a game is byte-stable.

#include "robotgames/reductions.hpp"

#include <json.hpp>

#include <sstream>
#include <variant>

namespace robotgames {

struct ParseError : std::runtime_error {
  std::size_t line;
  std::string reason;
  ParseError(std::size_t line_, std::string reason_)
      : std::runtime_error(line_ ? "line " + std::to_string(line_) + ": " + reason_ : reason_),
        line(line_),
        reason(std::move(reason_)) {}
};

struct ValidationError : std::runtime_error {
  ValidationReport report;
  explicit ValidationError(ValidationReport r) : std::runtime_error("invalid machine: " + r.str()), report(std::move(r)) {}
};

inline bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s) {
    bool ok = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9') || ch == '_' ||
              ch == '.' || ch == '-';
    if (!ok) return false;
  }
  return true;
}

/// Parses without validating the machine-level rules.
inline MinskyMachine parse_machine_unchecked(const std::string& text) {
  MinskyMachine m;
  bool have_init = false, have_sink = false;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::string directive;
    if (!(ls >> directive)) continue;
    std::vector<std::string> args;
    for (std::string a; ls >> a;) args.push_back(a);
    auto ident = [&](const std::string& s) {
      if (!is_identifier(s)) throw ParseError(lineno, "malformed state identifier '" + s + "'");
      return s;
    };
    if (directive == "states:") {
      if (args.empty()) throw ParseError(lineno, "states: needs at least one identifier");
      for (const auto& a : args) m.states.push_back(ident(a));
    } else if (directive == "init:" || directive == "sink:") {
      if (args.size() != 1) throw ParseError(lineno, directive + " takes exactly one identifier");
      bool& seen = directive == "init:" ? have_init : have_sink;
      if (seen) throw ParseError(lineno, "duplicate " + directive + " directive");
      seen = true;
      (directive == "init:" ? m.initial : m.sink) = ident(args[0]);
    } else if (directive == "trans:") {
      if (args.size() != 3) throw ParseError(lineno, "trans: takes <src> <label> <dst>");
      auto ins = parse_label(args[1]);
      if (!ins) throw ParseError(lineno, "unknown label '" + args[1] + "'");
      m.transitions.push_back({ident(args[0]), *ins, ident(args[2])});
    } else {
      throw ParseError(lineno, "unknown directive '" + directive + "'");
    }
  }
  if (!have_init) throw ParseError(0, "missing init: directive");
  if (!have_sink) throw ParseError(0, "missing sink: directive");
  return m;
}

inline MinskyMachine parse_machine(const std::string& text) {
  MinskyMachine m = parse_machine_unchecked(text);
  auto report = validate_machine(m);
  if (!report.ok()) throw ValidationError(std::move(report));
  return m;
}

inline std::string machine_text(const MinskyMachine& m) {
  std::ostringstream os;
  os << "states:";
  for (const auto& s : m.states) os << " " << s;
  os << "\ninit: " << m.initial << "\nsink: " << m.sink << "\n";
  for (const auto& t : m.transitions) os << "trans: " << t.source << " " << label(t.instruction) << " " << t.target << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// JSON

using Json = nlohmann::ordered_json;
using AnyGame = std::variant<RgsGame, RobotGame, MatrixGame>;

namespace detail {

inline Json vec_json(const Vec2& v) { return Json{{"x", to_decimal(v.x)}, {"y", to_decimal(v.y)}}; }

inline std::pair<std::string, std::string> vec_key(const Vec2& v) { return {to_decimal(v.x), to_decimal(v.y)}; }

inline Json vec_set_json(std::vector<Vec2> vs) {
  std::sort(vs.begin(), vs.end(), [](const Vec2& a, const Vec2& b) { return vec_key(a) < vec_key(b); });
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(vec_json(v));
  return out;
}

inline Json vec3_json(const Vec3& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(to_decimal(e));
  return out;
}

inline Json mat_json(const Mat3& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(vec3_json(row));
  return out;
}

inline Json mat_set_json(std::vector<Mat3> ms) {
  auto key = [](const Mat3& m) {
    std::vector<std::string> k;
    for (const auto& row : m) {
      for (const auto& e : row) k.push_back(to_decimal(e));
    }
    return k;
  };
  std::sort(ms.begin(), ms.end(), [&](const Mat3& a, const Mat3& b) { return key(a) < key(b); });
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(mat_json(m));
  return out;
}

inline Int int_of(const Json& j, const char* what) {
  if (!j.is_string()) throw ParseError(0, std::string(what) + " must be a decimal string");
  try {
    return parse_decimal(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, std::string(what) + ": " + e.what());
  }
}

inline const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(0, std::string("missing field '") + name + "'");
  return j.at(name);
}

inline Vec2 vec_of(const Json& j) { return Vec2(int_of(field(j, "x"), "x"), int_of(field(j, "y"), "y")); }

inline std::vector<Vec2> vec_set_of(const Json& j) {
  if (!j.is_array()) throw ParseError(0, "expected an array of vectors");
  std::vector<Vec2> out;
  for (const auto& e : j) out.push_back(vec_of(e));
  return out;
}

inline Vec3 vec3_of(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw ParseError(0, "expected a 3-vector");
  return Vec3{int_of(j[0], "entry"), int_of(j[1], "entry"), int_of(j[2], "entry")};
}

inline Mat3 mat_of(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw ParseError(0, "expected a 3x3 matrix");
  return Mat3{vec3_of(j[0]), vec3_of(j[1]), vec3_of(j[2])};
}

inline std::string str_of(const Json& j, const char* what) {
  if (!j.is_string()) throw ParseError(0, std::string(what) + " must be a string");
  return j.get<std::string>();
}

}  // namespace detail

inline Json game_json(const RgsGame& g) {
  using namespace detail;
  Json j;
  j["kind"] = "rgs";
  j["states"] = g.states;
  j["adam"] = vec_set_json(g.adam_moves);
  std::vector<RgsMove> eve = g.eve_moves;
  auto key = [](const RgsMove& m) { return std::make_tuple(m.source, to_decimal(m.delta.x), to_decimal(m.delta.y), m.target); };
  std::sort(eve.begin(), eve.end(), [&](const RgsMove& a, const RgsMove& b) { return key(a) < key(b); });
  Json moves = Json::array();
  for (const auto& m : eve) {
    moves.push_back(Json{{"source", m.source}, {"x", to_decimal(m.delta.x)}, {"y", to_decimal(m.delta.y)}, {"target", m.target}});
  }
  j["eve"] = moves;
  j["initial"] = Json{{"state", g.initial_state}, {"x", to_decimal(g.initial.x)}, {"y", to_decimal(g.initial.y)}};
  return j;
}

inline Json game_json(const RobotGame& g) {
  using namespace detail;
  Json j;
  j["kind"] = "rg";
  j["adam"] = vec_set_json(g.adam_moves);
  j["eve"] = vec_set_json(g.eve_moves);
  j["initial"] = vec_json(g.initial);
  return j;
}

inline Json game_json(const MatrixGame& g) {
  using namespace detail;
  Json j;
  j["kind"] = "matrix";
  j["adam"] = mat_set_json(g.adam_mats);
  j["eve"] = mat_set_json(g.eve_mats);
  j["initial"] = vec3_json(g.initial);
  j["target"] = vec3_json(g.target);
  return j;
}

template <class Game>
std::string emit_game(const Game& g) {
  return game_json(g).dump(2) + "\n";
}

inline std::string emit_game(const AnyGame& g) {
  return std::visit([](const auto& x) { return emit_game(x); }, g);
}

inline AnyGame load_game(const std::string& text) {
  using namespace detail;
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("malformed JSON: ") + e.what());
  }
  std::string kind = str_of(field(j, "kind"), "kind");
  if (kind == "rgs") {
    RgsGame g;
    const Json& states = field(j, "states");
    if (!states.is_array()) throw ParseError(0, "states must be an array");
    for (const auto& s : states) g.states.push_back(str_of(s, "state"));
    g.adam_moves = vec_set_of(field(j, "adam"));
    const Json& eve = field(j, "eve");
    if (!eve.is_array()) throw ParseError(0, "eve must be an array");
    for (const auto& m : eve) {
      RgsMove mv{str_of(field(m, "source"), "source"), vec_of(m), str_of(field(m, "target"), "target")};
      for (const auto* s : {&mv.source, &mv.target}) {
        if (std::find(g.states.begin(), g.states.end(), *s) == g.states.end()) {
          throw ParseError(0, "move refers to undeclared state " + *s);
        }
      }
      g.eve_moves.push_back(std::move(mv));
    }
    const Json& init = field(j, "initial");
    g.initial_state = str_of(field(init, "state"), "state");
    g.initial = vec_of(init);
    g.normalize();
    return g;
  }
  if (kind == "rg") {
    RobotGame g;
    g.adam_moves = vec_set_of(field(j, "adam"));
    g.eve_moves = vec_set_of(field(j, "eve"));
    g.initial = vec_of(field(j, "initial"));
    g.normalize();
    return g;
  }
  if (kind == "matrix") {
    MatrixGame g;
    for (const char* side : {"adam", "eve"}) {
      const Json& arr = field(j, side);
      if (!arr.is_array()) throw ParseError(0, std::string(side) + " must be an array");
      auto& dst = std::string(side) == "adam" ? g.adam_mats : g.eve_mats;
      for (const auto& m : arr) dst.push_back(mat_of(m));
    }
    g.initial = vec3_of(field(j, "initial"));
    g.target = vec3_of(field(j, "target"));
    g.normalize();
    return g;
  }
  throw ParseError(0, "unknown game kind '" + kind + "'");
}

inline std::string emit_flagged(const FlaggedMachine& fm) {
  Json j;
  j["kind"] = "flagged";
  Json states = Json::array();
  for (const auto& s : fm.states) states.push_back(s.name());
  j["states"] = states;
  j["initial"] = fm.initial().name();
  Json ts = Json::array();
  for (const auto& t : fm.transitions) {
    ts.push_back(Json{{"source", t.source.name()}, {"label", label(t.instruction)}, {"target", t.target.name()}});
  }
  j["transitions"] = ts;
  return j.dump(2) + "\n";
}

}  // namespace robotgames
