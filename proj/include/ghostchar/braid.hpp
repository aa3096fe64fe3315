#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace ghostchar {

// Braid word on `strands` strands; letter s > 0 is sigma_s, s < 0 its inverse.
struct BraidWord {
  int strands = 0;
  std::vector<int> letters;

  std::string to_string() const;
  bool operator==(const BraidWord&) const = default;
};

// Accepts "m: s1 s2 ..." or "torus p q" (the closure of (sigma_1 ... sigma_{p-1})^q).
BraidWord parse_braid(std::string_view text);

// perm[p-1] is the bottom position reached by the strand starting at top position p.
std::vector<int> closure_permutation(const BraidWord& braid);

struct Crossing {
  int over = 0;  // arc labels
  int in = 0;
  int out = 0;
  int sign = 1;
  int position = 0;   // index in the braid word
  int generator = 0;  // |letter|
  bool closure = false;  // outgoing under-arc runs to the bottom of the braid
  int over_segment = 0;  // open-braid segment labels
  int in_segment = 0;
  int out_segment = 0;
};

// Diagram of a braid closure. Left-edge arcs are those crossing the top of the braid.
struct Diagram {
  BraidWord braid;
  int strands = 0;
  int arc_count = 0;
  std::vector<Crossing> crossings;
  std::vector<int> left_edge_arcs;      // arc at each top position
  std::vector<int> bottom_segments;     // open-braid segment at each bottom position
  std::vector<int> segment_arc;         // index: segment label, value: arc label
  std::vector<int> closure_permutation;

  nlohmann::json to_json() const;
};

Diagram build_diagram(const BraidWord& braid);

struct Letter {
  int generator = 0;
  int exponent = 1;
  bool operator==(const Letter&) const = default;
};

// Freely reduced word in a free group on integer-labelled generators.
class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(std::vector<Letter> letters);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  bool contains(int generator) const;
  int occurrences(int generator) const;

  GroupWord inverse() const;
  GroupWord cyclically_reduced() const;
  // Replaces every occurrence of `generator` by `image`.
  GroupWord substitute(int generator, const GroupWord& image) const;
  friend GroupWord operator*(const GroupWord& a, const GroupWord& b);
  bool operator==(const GroupWord&) const = default;
  bool operator<(const GroupWord& o) const;

  static GroupWord generator(int g, int exponent = 1);
  std::string to_string(const std::function<std::string(int)>& name) const;
  nlohmann::json to_json() const;

 private:
  std::vector<Letter> letters_;
};

struct GroupPresentation {
  std::vector<int> generators;
  std::vector<GroupWord> relators;

  std::size_t generator_count() const { return generators.size(); }
  std::string generator_name(int g) const { return "m" + std::to_string(g); }
  nlohmann::json to_json() const;
};

// Relator of one crossing: m_i^s m_j m_i^-s m_k^-1 with s the crossing sign.
GroupWord wirtinger_relator(const Crossing& c);

// Crossings in relator order: non-closure crossings by outgoing arc, then closure crossings
// by outgoing arc.
std::vector<std::size_t> relator_order(const Diagram& d);

// Wirtinger presentation; optionally without the final relator.
GroupPresentation wirtinger_presentation(const Diagram& d, bool drop_last = true);
// Wirtinger presentation without the relator at `index` in relator order.
GroupPresentation wirtinger_presentation_without(const Diagram& d, std::size_t index);

}  // namespace ghostchar
