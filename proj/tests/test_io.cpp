#include "localchrom/families.hpp"
#include "localchrom/io.hpp"

#include <gtest/gtest.h>

using namespace localchrom;

TEST(Io, ParseTriangle) {
  Graph g = parse_graph("3 3\n0 1\n0 2\n1 2\n");
  EXPECT_EQ(g, complete_graph(3));
}

TEST(Io, RoundTrip) {
  for (const auto& id : list_families()) {
    Graph g = generate(id);
    std::string text = emit_graph(g);
    EXPECT_EQ(parse_graph(text), g);
    EXPECT_EQ(emit_graph(parse_graph(text)), text);
    EXPECT_EQ(parse_graph_compact(emit_graph_compact(g)), g);
  }
}

TEST(Io, StrictErrors) {
  EXPECT_THROW(parse_graph("2 1\n1 1\n"), ParseError);      // self-loop
  EXPECT_THROW(parse_graph("3 1\n2 1\n"), ParseError);      // u > v
  EXPECT_THROW(parse_graph("3 1\n0 3\n"), ParseError);      // out of range
  EXPECT_THROW(parse_graph("3 2\n0 1\n0 1\n"), ParseError); // duplicate
  EXPECT_THROW(parse_graph("3 2\n0 1\n"), ParseError);      // missing edge line
  EXPECT_THROW(parse_graph("3 1\n0 1\n1 2\n"), ParseError); // trailing content
  EXPECT_THROW(parse_graph("3\n"), ParseError);             // malformed header
  EXPECT_THROW(parse_graph("x 0\n"), ParseError);
  EXPECT_THROW(parse_graph("3 1\n0 -1\n"), ParseError);
  EXPECT_THROW(parse_graph("300 0\n"), ParseError);
  EXPECT_THROW(parse_graph(""), ParseError);
  try {
    parse_graph("2 1\n1 1\n");
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("self-loop"), std::string::npos);
  }
}

TEST(Io, BlankLinesAllowed) {
  EXPECT_EQ(parse_graph("\n3 1\n\n0 1\n\n"), parse_graph("3 1\n0 1\n"));
}

TEST(Io, WeightedGraphs) {
  auto wg = parse_weighted_graph("3 3\n0 1\n0 2\n1 2\n0 1/2\n1 1/3\n2 2\n");
  EXPECT_EQ(wg.weight(0), make_rational(1, 2));
  EXPECT_EQ(wg.weight(2), 2);
  EXPECT_EQ(parse_weighted_graph(emit_weighted_graph(wg)).weights(), wg.weights());
  EXPECT_THROW(parse_weighted_graph("2 1\n0 1\n1 1\n0 1\n"), ParseError);  // out of order
  EXPECT_THROW(parse_weighted_graph("2 1\n0 1\n0 1\n1 -1\n"), ParseError);
  EXPECT_THROW(parse_weighted_graph("2 1\n0 1\n0 1\n1 1/0\n"), ParseError);
}

TEST(Io, Dot) {
  std::string dot = to_dot(complete_graph(2), "K2");
  EXPECT_NE(dot.find("graph K2 {"), std::string::npos);
  EXPECT_NE(dot.find("0 -- 1;"), std::string::npos);
}
