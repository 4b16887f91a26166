#pragma once

#include <string>
#include <vector>

#include "strata/af.hpp"
#include "strata/io.hpp"
#include "strata/systemz.hpp"

namespace fixtures {

using strata::AF;

inline AF make(std::vector<std::string> args, std::vector<std::pair<std::string, std::string>> attacks) {
  return AF(std::move(args), attacks);
}

// A1<->A2, A2->A3, A3->A4, A4<->A5, A5->A3
inline AF fig1() {
  return make({"A1", "A2", "A3", "A4", "A5"},
              {{"A1", "A2"}, {"A2", "A1"}, {"A2", "A3"}, {"A3", "A4"}, {"A4", "A5"}, {"A5", "A4"}, {"A5", "A3"}});
}

inline AF fig2() { return make({"A1", "A2", "A3"}, {{"A1", "A2"}, {"A1", "A3"}, {"A2", "A3"}}); }

inline AF fig3() {
  return make({"A1", "A2", "A3", "A4", "A5"},
              {{"A1", "A2"}, {"A2", "A3"}, {"A3", "A4"}, {"A4", "A3"}, {"A4", "A5"}, {"A5", "A3"}});
}

// Three arguments attacking each other, no self-loops.
inline AF fig4() {
  return make({"A1", "A2", "A3"},
              {{"A1", "A2"}, {"A2", "A1"}, {"A1", "A3"}, {"A3", "A1"}, {"A2", "A3"}, {"A3", "A2"}});
}

inline AF fig6() {
  return make({"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8"},
              {{"A8", "A7"}, {"A7", "A4"}, {"A6", "A5"}, {"A5", "A3"}, {"A3", "A2"}, {"A4", "A2"},
               {"A2", "A1"}, {"A4", "A4"}, {"A3", "A3"}});
}

// A unattacked, A->C, C->B.
inline AF vp3() { return make({"A", "B", "C"}, {{"A", "C"}, {"C", "B"}}); }

inline AF self_attacker() { return make({"a"}, {{"a", "a"}}); }

inline const char* penguin_text = "(b | p)\n(!f | p)\n(f | b)\n";

// Atom order p, b, f so that worlds come out as pbf, pb-f, ..., -p-b-f.
inline strata::KnowledgeBase penguin() {
  return strata::parse_kb(penguin_text, strata::AtomSet({"p", "b", "f"}));
}

inline const std::vector<std::string> penguin_worlds{"pbf",  "pb-f",  "p-bf",  "p-b-f",
                                                     "-pbf", "-pb-f", "-p-bf", "-p-b-f"};

// The edges of the induced-framework figure, transcribed node by node.
inline std::vector<std::pair<std::string, std::string>> penguin_edges() {
  return {
      {"-p-b-f", "pb-f"}, {"-p-b-f", "-pb-f"}, {"-p-b-f", "pbf"}, {"-p-b-f", "p-bf"}, {"-p-b-f", "p-b-f"},
      {"-p-bf", "pb-f"}, {"-p-bf", "-pb-f"}, {"-p-bf", "pbf"}, {"-p-bf", "p-bf"}, {"-p-bf", "p-b-f"},
      {"-pbf", "pb-f"}, {"-pbf", "-pb-f"}, {"-pbf", "pbf"}, {"-pbf", "p-bf"}, {"-pbf", "p-b-f"},
      {"pb-f", "pbf"}, {"pb-f", "p-bf"}, {"pb-f", "p-b-f"},
      {"-pb-f", "pbf"}, {"-pb-f", "p-bf"}, {"-pb-f", "p-b-f"},
  };
}

}  // namespace fixtures
