#pragma once

#include "localchrom/graph.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace localchrom {

// Vertex labels follow the figures: a0..a6 are vertices 0..6 around the
// 7-cycle, and the extra vertex of H2PLUS / H2PLUS_AUG / COUNTEREXAMPLE8 is 7.
enum class FamilyTag { H0, H1, H2, H2PLUS, C7BAR, WHEEL, ANDRASFAI, DELTA, H2PLUS_AUG, COUNTEREXAMPLE8 };

struct FamilyId {
  FamilyTag tag;
  int param = 0;  // k for WHEEL, i for ANDRASFAI, l for DELTA

  bool parametric() const {
    return tag == FamilyTag::WHEEL || tag == FamilyTag::ANDRASFAI || tag == FamilyTag::DELTA;
  }

  void validate() const {
    switch (tag) {
      case FamilyTag::WHEEL:
        if (param < 3) throw std::invalid_argument("WHEEL(k) needs k >= 3");
        break;
      case FamilyTag::ANDRASFAI:
        if (param < 1) throw std::invalid_argument("ANDRASFAI(i) needs i >= 1");
        break;
      case FamilyTag::DELTA:
        if (param < 2) throw std::invalid_argument("DELTA(l) needs l >= 2");
        break;
      default:
        break;
    }
  }

  std::string to_string() const;
  friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

namespace detail {

struct TagName {
  FamilyTag tag;
  std::string_view name;
};

inline constexpr TagName kTagNames[] = {
    {FamilyTag::H0, "H0"},
    {FamilyTag::H1, "H1"},
    {FamilyTag::H2, "H2"},
    {FamilyTag::H2PLUS, "H2PLUS"},
    {FamilyTag::C7BAR, "C7BAR"},
    {FamilyTag::WHEEL, "WHEEL"},
    {FamilyTag::ANDRASFAI, "ANDRASFAI"},
    {FamilyTag::DELTA, "DELTA"},
    {FamilyTag::H2PLUS_AUG, "H2PLUS_AUG"},
    {FamilyTag::COUNTEREXAMPLE8, "COUNTEREXAMPLE8"},
};

inline std::string_view tag_name(FamilyTag tag) {
  for (const auto& entry : kTagNames)
    if (entry.tag == tag) return entry.name;
  return "?";
}

inline Graph seven_cycle_plus(std::initializer_list<Edge> chords, int extra = 0) {
  Graph g(7 + extra);
  for (int i = 0; i < 7; ++i) g.add_edge(i, (i + 1) % 7);
  for (auto [u, v] : chords) g.add_edge(u, v);
  return g;
}

}  // namespace detail

inline std::string FamilyId::to_string() const {
  std::string out(detail::tag_name(tag));
  if (parametric()) out += "(" + std::to_string(param) + ")";
  return out;
}

/// Parses "H2PLUS", "WHEEL(7)", "delta(3)" (case-insensitive).
inline FamilyId parse_family_id(std::string_view text) {
  std::string upper;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)))
      upper += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  std::string name = upper;
  int param = 0;
  bool has_param = false;
  if (auto open = upper.find('('); open != std::string::npos) {
    if (upper.back() != ')') throw std::invalid_argument("malformed family id '" + std::string(text) + "'");
    name = upper.substr(0, open);
    std::string digits = upper.substr(open + 1, upper.size() - open - 2);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw std::invalid_argument("malformed family parameter in '" + std::string(text) + "'");
    param = std::stoi(digits);
    has_param = true;
  }
  for (const auto& entry : detail::kTagNames) {
    if (entry.name != name) continue;
    FamilyId id{entry.tag, param};
    if (id.parametric() != has_param)
      throw std::invalid_argument(has_param ? "family " + name + " takes no parameter"
                                            : "family " + name + " needs a parameter");
    id.validate();
    return id;
  }
  throw std::invalid_argument("unknown family '" + std::string(text) + "'");
}

inline Graph generate(const FamilyId& id) {
  id.validate();
  switch (id.tag) {
    case FamilyTag::H0:
      return detail::seven_cycle_plus({{5, 0}, {0, 2}, {1, 3}, {4, 6}});
    case FamilyTag::H1:
      return detail::seven_cycle_plus({{3, 5}, {5, 0}, {0, 2}, {2, 4}, {6, 1}});
    case FamilyTag::H2:
      return detail::seven_cycle_plus({{1, 3}, {3, 5}, {5, 0}, {0, 2}, {2, 4}, {4, 6}});
    case FamilyTag::H2PLUS: {
      Graph g = detail::seven_cycle_plus({{1, 3}, {3, 5}, {5, 0}, {0, 2}, {2, 4}, {4, 6}}, 1);
      for (int a : {0, 2, 5}) g.add_edge(7, a);
      return g;
    }
    case FamilyTag::C7BAR:
      return cycle_power(7, 2);
    case FamilyTag::WHEEL: {
      int k = id.param;
      Graph g(k + 1);
      for (int i = 0; i < k; ++i) {
        g.add_edge(i, (i + 1) % k);
        g.add_edge(i, k);
      }
      return g;
    }
    case FamilyTag::ANDRASFAI: {
      int i = id.param;
      if (i == 1) return complete_graph(2);  // complement of C_2^0, which cycle_power cannot build
      return complement(cycle_power(3 * i - 1, i - 1));
    }
    case FamilyTag::DELTA:
      return complement(cycle_power(4 * id.param - 1, id.param - 1));
    case FamilyTag::H2PLUS_AUG: {
      Graph g = generate({FamilyTag::H2PLUS});
      g.add_edge(7, 3);
      g.add_edge(7, 4);
      g.add_edge(2, 6);
      g.add_edge(1, 5);
      return g;
    }
    case FamilyTag::COUNTEREXAMPLE8: {
      Graph g = detail::seven_cycle_plus({{1, 3}, {3, 5}, {5, 0}, {0, 2}, {2, 4}, {4, 6}}, 1);
      for (int a : {6, 0, 1, 3}) g.add_edge(7, a);
      return g;
    }
  }
  throw std::logic_error("unhandled family tag");
}

inline Graph generate(std::string_view id) { return generate(parse_family_id(id)); }

/// Representative ids for `families list`; parametric families shown at small parameters.
inline std::vector<FamilyId> list_families() {
  return {{FamilyTag::H0},           {FamilyTag::H1},       {FamilyTag::H2},
          {FamilyTag::H2PLUS},       {FamilyTag::C7BAR},    {FamilyTag::WHEEL, 5},
          {FamilyTag::WHEEL, 7},     {FamilyTag::ANDRASFAI, 2}, {FamilyTag::ANDRASFAI, 3},
          {FamilyTag::DELTA, 2},     {FamilyTag::DELTA, 3}, {FamilyTag::DELTA, 4},
          {FamilyTag::H2PLUS_AUG},   {FamilyTag::COUNTEREXAMPLE8}};
}

}  // namespace localchrom
