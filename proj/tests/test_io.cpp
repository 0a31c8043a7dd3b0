#include "corpus.hpp"

#include <gtest/gtest.h>

using namespace robotgames;

namespace {

const char* kSmall =
    "# small\n"
    "states: s0 s1 halt\n"
    "init: s0\n"
    "sink: halt\n"
    "trans: s0 c1++ s1\n"
    "trans: s1 c2-- s0   # loop\n"
    "trans: s1 c2==0 halt\n";

}  // namespace

TEST(Parse, ReadsMachineText) {
  MinskyMachine m = parse_machine(kSmall);
  EXPECT_EQ(m.states, (std::vector<std::string>{"s0", "s1", "halt"}));
  EXPECT_EQ(m.initial, "s0");
  EXPECT_EQ(m.sink, "halt");
  ASSERT_EQ(m.transitions.size(), 3u);
  EXPECT_EQ(m.transitions[1], (Transition{"s1", {Op::Dec, Counter::C2}, "s0"}));
  EXPECT_EQ(m.transitions[2].instruction, (Instruction{Op::ZeroTest, Counter::C2}));
}

TEST(Parse, UnknownCounterIsParseError) {
  std::string text = "states: a b\ninit: a\nsink: b\ntrans: a c3++ b\n";
  try {
    parse_machine(text);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line, 4u);
  }
}

TEST(Parse, MissingHeaderIsParseError) {
  EXPECT_THROW(parse_machine("states: a b\nsink: b\ntrans: a c1++ b\n"), ParseError);
  EXPECT_THROW(parse_machine("states: a b\ninit: a\nsink: b\nfoo: a\n"), ParseError);
}

TEST(Parse, LoneDecrementIsValidationError) {
  std::string text = "states: a b\ninit: a\nsink: b\ntrans: a c1-- b\n";
  EXPECT_THROW(parse_machine(text), ValidationError);
  EXPECT_NO_THROW(parse_machine_unchecked(text));
}

TEST(Parse, MachineTextRoundTrips) {
  for (const auto& [name, m] : corpus::all()) {
    EXPECT_EQ(parse_machine(machine_text(m)), m) << name;
    EXPECT_EQ(machine_text(parse_machine(machine_text(m))), machine_text(m)) << name;
  }
}

TEST(Json, IntegersAreDecimalStrings) {
  RobotGame g{{Vec2(0, 0)}, {Vec2(-1, 0)}, Vec2(0, 318767167)};
  g.normalize();
  Json j = game_json(g);
  EXPECT_EQ(j["initial"]["x"], "0");
  EXPECT_EQ(j["initial"]["y"], "318767167");
  EXPECT_EQ(j["kind"], "rg");
}

TEST(Json, EveryStageRoundTrips) {
  for (const auto& name : {"zz2", "countdown", "two_counters", "wide"}) {
    auto p = build_pipeline(corpus::load(name));
    EXPECT_EQ(std::get<RgsGame>(load_game(emit_game(p.rgs))), p.rgs) << name;
    EXPECT_EQ(std::get<RobotGame>(load_game(emit_game(p.rg.game))), p.rg.game) << name;
    EXPECT_EQ(std::get<MatrixGame>(load_game(emit_game(p.matrix))), p.matrix) << name;
  }
}

TEST(Json, EmissionIsByteStable) {
  auto p = build_pipeline(corpus::load("pingpong"));
  for (const std::string& text : {emit_game(p.rgs), emit_game(p.rg.game), emit_game(p.matrix)}) {
    EXPECT_EQ(emit_game(load_game(text)), text);
  }
  EXPECT_EQ(emit_flagged(p.flagged), emit_flagged(add_flags(corpus::load("pingpong"))));
}

TEST(Json, MalformedInputIsParseError) {
  EXPECT_THROW(load_game("{"), ParseError);
  EXPECT_THROW(load_game(R"({"kind":"rg","adam":[],"eve":[],"initial":{"x":"1","y":"2x"}})"), ParseError);
  EXPECT_THROW(load_game(R"({"kind":"rg","adam":[],"eve":[],"initial":{"x":1,"y":"2"}})"), ParseError);
  EXPECT_THROW(load_game(R"({"kind":"cube"})"), ParseError);
  EXPECT_THROW(load_game(R"({"kind":"rgs","states":["a"],"adam":[],
      "eve":[{"source":"a","x":"0","y":"0","target":"b"}],"initial":{"state":"a","x":"0","y":"0"}})"),
               ParseError);
}
