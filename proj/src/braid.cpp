#include "ghostchar/braid.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ghostchar {

std::string BraidWord::to_string() const {
  std::ostringstream os;
  os << strands << ":";
  for (int s : letters) os << " " << s;
  return os.str();
}

namespace {

std::vector<std::string> tokens_of(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

int to_int(const std::string& tok) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed braid token '" + tok + "'");
  }
  if (used != tok.size()) throw std::invalid_argument("malformed braid token '" + tok + "'");
  return v;
}

}  // namespace

BraidWord parse_braid(std::string_view text) {
  BraidWord b;
  auto toks = tokens_of(text);
  if (!toks.empty() && toks[0] == "torus") {
    if (toks.size() != 3) throw std::invalid_argument("expected 'torus p q'");
    int p = to_int(toks[1]);
    int q = to_int(toks[2]);
    if (p < 2 || q < 1) throw std::invalid_argument("torus parameters must satisfy p >= 2, q >= 1");
    b.strands = p;
    for (int r = 0; r < q; ++r)
      for (int s = 1; s < p; ++s) b.letters.push_back(s);
  } else {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("expected 'm: s1 s2 ...'");
    auto head = tokens_of(text.substr(0, colon));
    if (head.size() != 1) throw std::invalid_argument("expected a strand count before ':'");
    b.strands = to_int(head[0]);
    if (b.strands < 1) throw std::invalid_argument("strand count must be positive");
    for (const auto& tok : tokens_of(text.substr(colon + 1))) {
      int s = to_int(tok);
      if (s == 0 || std::abs(s) >= b.strands)
        throw std::invalid_argument("letter " + tok + " out of range for " +
                                    std::to_string(b.strands) + " strands");
      b.letters.push_back(s);
    }
  }
  auto perm = closure_permutation(b);
  int p = 1, len = 0;
  do {
    p = perm[p - 1];
    ++len;
  } while (p != 1);
  if (len != b.strands) throw std::invalid_argument("braid closure is a link, not a knot");
  return b;
}

std::vector<int> closure_permutation(const BraidWord& braid) {
  // strand_at[q] = top position of the strand currently at position q
  std::vector<int> strand_at(braid.strands);
  std::iota(strand_at.begin(), strand_at.end(), 1);
  for (int s : braid.letters) {
    int k = std::abs(s) - 1;
    std::swap(strand_at[k], strand_at[k + 1]);
  }
  std::vector<int> perm(braid.strands);
  for (int q = 0; q < braid.strands; ++q) perm[strand_at[q] - 1] = q + 1;
  return perm;
}

Diagram build_diagram(const BraidWord& braid) {
  const int m = braid.strands;
  Diagram d;
  d.braid = braid;
  d.strands = m;
  d.closure_permutation = closure_permutation(braid);

  const int segments = m + static_cast<int>(braid.letters.size());
  std::vector<int> parent(segments + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };

  std::vector<int> pos(m);
  std::iota(pos.begin(), pos.end(), 1);
  for (std::size_t t = 0; t < braid.letters.size(); ++t) {
    int s = braid.letters[t];
    int k = std::abs(s) - 1;
    int fresh = m + static_cast<int>(t) + 1;
    Crossing c;
    c.sign = s > 0 ? 1 : -1;
    c.position = static_cast<int>(t);
    c.generator = std::abs(s);
    c.out_segment = fresh;
    if (s > 0) {
      c.over_segment = pos[k];
      c.in_segment = pos[k + 1];
      pos[k] = fresh;
      pos[k + 1] = c.over_segment;
    } else {
      c.over_segment = pos[k + 1];
      c.in_segment = pos[k];
      pos[k] = c.over_segment;
      pos[k + 1] = fresh;
    }
    d.crossings.push_back(c);
  }
  d.bottom_segments = pos;
  // Bottom position p continues at top position p.
  for (int p = 0; p < m; ++p) parent[find(pos[p])] = find(p + 1);

  std::vector<int> root_arc(segments + 1, 0);
  int next = 0;
  for (int p = 1; p <= m; ++p) {
    int r = find(p);
    if (!root_arc[r]) root_arc[r] = ++next;
    d.left_edge_arcs.push_back(root_arc[r]);
  }
  for (const auto& c : d.crossings) {
    int r = find(c.out_segment);
    if (!root_arc[r]) root_arc[r] = ++next;
  }
  d.arc_count = next;
  d.segment_arc.assign(segments + 1, 0);
  for (int s = 1; s <= segments; ++s) d.segment_arc[s] = root_arc[find(s)];

  std::vector<bool> reaches_top(segments + 1, false);
  for (int p = 1; p <= m; ++p) reaches_top[find(p)] = true;
  for (auto& c : d.crossings) {
    c.over = d.segment_arc[c.over_segment];
    c.in = d.segment_arc[c.in_segment];
    c.out = d.segment_arc[c.out_segment];
    c.closure = reaches_top[find(c.out_segment)];
  }
  return d;
}

nlohmann::json Diagram::to_json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : crossings)
    cs.push_back({{"over", c.over},
                  {"in", c.in},
                  {"out", c.out},
                  {"sign", c.sign},
                  {"position", c.position},
                  {"generator", c.generator},
                  {"closure", c.closure}});
  return {{"braid", braid.to_string()},
          {"strands", strands},
          {"arcs", arc_count},
          {"crossings", cs},
          {"left_edge_arcs", left_edge_arcs},
          {"closure_permutation", closure_permutation}};
}

GroupWord::GroupWord(std::vector<Letter> letters) {
  for (const auto& l : letters) {
    if (l.exponent == 0) continue;
    if (!letters_.empty() && letters_.back().generator == l.generator) {
      letters_.back().exponent += l.exponent;
      if (letters_.back().exponent == 0) letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
  // Expand to unit exponents.
  std::vector<Letter> units;
  for (const auto& l : letters_)
    for (int k = 0; k < std::abs(l.exponent); ++k) units.push_back({l.generator, l.exponent > 0 ? 1 : -1});
  letters_ = std::move(units);
}

GroupWord GroupWord::generator(int g, int exponent) { return GroupWord({{g, exponent}}); }

bool GroupWord::contains(int generator) const { return occurrences(generator) > 0; }

int GroupWord::occurrences(int generator) const {
  return static_cast<int>(std::count_if(letters_.begin(), letters_.end(),
                                        [&](const Letter& l) { return l.generator == generator; }));
}

GroupWord GroupWord::inverse() const {
  std::vector<Letter> out;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back({it->generator, -it->exponent});
  return GroupWord(std::move(out));
}

GroupWord GroupWord::cyclically_reduced() const {
  std::size_t lo = 0, hi = letters_.size();
  while (hi - lo >= 2 && letters_[lo].generator == letters_[hi - 1].generator &&
         letters_[lo].exponent == -letters_[hi - 1].exponent) {
    ++lo;
    --hi;
  }
  return GroupWord(std::vector<Letter>(letters_.begin() + static_cast<long>(lo),
                                       letters_.begin() + static_cast<long>(hi)));
}

GroupWord GroupWord::substitute(int generator, const GroupWord& image) const {
  std::vector<Letter> out;
  GroupWord inv = image.inverse();
  for (const auto& l : letters_) {
    if (l.generator != generator) {
      out.push_back(l);
      continue;
    }
    const auto& src = l.exponent > 0 ? image.letters_ : inv.letters_;
    out.insert(out.end(), src.begin(), src.end());
  }
  return GroupWord(std::move(out));
}

GroupWord operator*(const GroupWord& a, const GroupWord& b) {
  std::vector<Letter> out = a.letters_;
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return GroupWord(std::move(out));
}

bool GroupWord::operator<(const GroupWord& o) const {
  return std::lexicographical_compare(
      letters_.begin(), letters_.end(), o.letters_.begin(), o.letters_.end(),
      [](const Letter& x, const Letter& y) {
        return std::pair(x.generator, x.exponent) < std::pair(y.generator, y.exponent);
      });
}

std::string GroupWord::to_string(const std::function<std::string(int)>& name) const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) os << " ";
    os << name(letters_[k].generator);
    if (letters_[k].exponent < 0) os << "^-1";
  }
  return os.str();
}

nlohmann::json GroupWord::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& l : letters_) out.push_back(l.exponent > 0 ? l.generator : -l.generator);
  return out;
}

nlohmann::json GroupPresentation::to_json() const {
  nlohmann::json rels = nlohmann::json::array();
  for (const auto& r : relators)
    rels.push_back(r.to_string([this](int g) { return generator_name(g); }));
  return {{"generators", generators}, {"relators", rels}};
}

GroupWord wirtinger_relator(const Crossing& c) {
  return GroupWord({{c.over, c.sign}, {c.in, 1}, {c.over, -c.sign}, {c.out, -1}});
}

std::vector<std::size_t> relator_order(const Diagram& d) {
  std::vector<std::size_t> idx(d.crossings.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const Crossing& x = d.crossings[a];
    const Crossing& y = d.crossings[b];
    if (x.closure != y.closure) return !x.closure;
    return x.out < y.out;
  });
  return idx;
}

GroupPresentation wirtinger_presentation_without(const Diagram& d, std::size_t index) {
  GroupPresentation p;
  for (int g = 1; g <= d.arc_count; ++g) p.generators.push_back(g);
  auto order = relator_order(d);
  for (std::size_t k = 0; k < order.size(); ++k)
    if (k != index) p.relators.push_back(wirtinger_relator(d.crossings[order[k]]));
  return p;
}

GroupPresentation wirtinger_presentation(const Diagram& d, bool drop_last) {
  if (drop_last && !d.crossings.empty()) return wirtinger_presentation_without(d, d.crossings.size() - 1);
  return wirtinger_presentation_without(d, d.crossings.size());
}

}  // namespace ghostchar
