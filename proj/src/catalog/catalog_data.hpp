#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "catalog.hpp"

namespace ppsym::data {

// Textual class entries; catalog.cpp parses and binds them.

struct GenText {
  std::string name;
  std::string origin;  // class superscript of the label; empty for k
  std::string printed;
  std::string corrected;
  ConformalKind kind = ConformalKind::Killing;
  std::string psi;
  std::string corrected_psi;
  std::string note;
  bool fit = true;
  /// Pairs with generators of the same table default to a zero bracket.
  bool tabled = true;
  bool printed_rules = false;
};

struct FamText {
  std::string name;
  std::string combination;  // "k:c1, X2:c2"
  std::string printed;
  std::string corrected;
  std::string note;
};

struct ComText {
  std::string a;
  std::string b;
  std::string printed;
  std::string corrected;
  std::string note;
};

struct RuleText {
  std::string fn;
  std::string replacement;  // in u
  std::string printed;      // empty: same as replacement
  int order = 2;
};

struct ClassText {
  std::string id;
  std::string title;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::pair<std::string, std::string>> defs;  // expanded in order
  std::map<std::string, int> functions;
  std::string H;
  std::vector<RuleText> rules;
  std::vector<std::string> exclusions;
  bool shared_jets = false;
  /// Non-empty for constant plane waves: d_a, e_a are replaced by the closed-form basis.
  std::array<std::string, 3> plane_wave_constant;
  std::vector<GenText> gens;
  std::vector<FamText> fams;
  std::vector<ComText> coms;
  int t5 = 0;
  int t5c = -1;
  std::string t5note;
  std::vector<std::string> constraints;
};

const std::vector<ClassText>& classes();

}  // namespace ppsym::data
