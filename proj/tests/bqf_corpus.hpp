#pragma once

#include "nsa/bqf.hpp"

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace nsa::testing {

struct CorpusEntry {
  bool expected = false;
  std::string text;
};

inline std::vector<CorpusEntry> load_bqf_corpus() {
  std::ifstream in(std::string(NSA_TEST_DATA_DIR) + "/bqf_corpus.txt");
  if (!in) throw std::runtime_error("cannot open bqf_corpus.txt");
  std::vector<CorpusEntry> out;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    auto bar = line.find('|');
    out.push_back({line.substr(0, bar).find("true") != std::string::npos, line.substr(bar + 1)});
  }
  return out;
}

inline bqf::Bindings corpus_bindings() {
  using bqf::parse_entity;
  return {
      {"A", parse_entity("{a, b}")},
      {"B", parse_entity("{a, b, c}")},
      {"U", parse_entity("{a, b, c, d}")},
      {"E", parse_entity("{}")},
      {"P", parse_entity("{<a, b>, <b, c>}")},
      {"F", parse_entity("{<a, a>, <b, a>}")},
      {"D", parse_entity("{{a}, {a, b}, {c}}")},
  };
}

}  // namespace nsa::testing
