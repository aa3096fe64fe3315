#include "ghostchar/cover.hpp"

#include <algorithm>
#include <stdexcept>

namespace ghostchar {

namespace {

// Generator defined by a relator W m_k^-1 with m_k absent from W, or 0.
int defined_generator(const GroupWord& r) {
  if (r.empty()) return 0;
  const Letter& last = r.letters().back();
  if (last.exponent != -1) return 0;
  return r.occurrences(last.generator) == 1 ? last.generator : 0;
}

GroupWord defining_word(const GroupWord& r) {
  std::vector<Letter> w(r.letters().begin(), r.letters().end() - 1);
  return GroupWord(std::move(w));
}

}  // namespace

TietzeResult tietze_reduce(const GroupPresentation& pres, int keep) {
  TietzeResult out;
  GroupPresentation p = pres;
  while (true) {
    int best = 0;
    std::size_t where = 0;
    for (std::size_t k = 0; k < p.relators.size(); ++k) {
      int g = defined_generator(p.relators[k]);
      if (g > keep && g > best) {
        best = g;
        where = k;
      }
    }
    if (!best) break;
    GroupWord image = defining_word(p.relators[where]);
    p.relators.erase(p.relators.begin() + static_cast<long>(where));
    for (auto& r : p.relators) r = r.substitute(best, image);
    p.generators.erase(std::remove(p.generators.begin(), p.generators.end(), best), p.generators.end());
    out.eliminated.push_back(best);
  }
  std::vector<int> left;
  for (int g : p.generators)
    if (keep > 0 && g > keep) left.push_back(g);
  if (!left.empty()) {
    out.diagnostic = "no eliminable relator for generators";
    for (int g : left) out.diagnostic += " m" + std::to_string(g);
  }
  out.presentation = std::move(p);
  return out;
}

GroupWord fox_rewrite(const GroupWord& word, int base) {
  if (word.length() % 2) throw std::invalid_argument("fox_rewrite needs an even-length word");
  std::vector<Letter> out;
  const auto& ls = word.letters();
  for (std::size_t k = 0; k < ls.size(); k += 2) {
    if (ls[k].generator != base) out.push_back({ls[k].generator, -1});
    if (ls[k + 1].generator != base) out.push_back({ls[k + 1].generator, 1});
  }
  return GroupWord(std::move(out));
}

std::string CoverPresentation::name(int g) const {
  // The three generators of a four-strand cover keep their conventional names.
  if (base == 1) {
    if (g == 2) return "x";
    if (g == 3) return "y";
    if (g == 4) return "z";
  }
  return "x" + std::to_string(g);
}

std::string CoverPresentation::relator_string(std::size_t k) const {
  return relators.at(k).cyclically_reduced().to_string([this](int g) { return name(g); });
}

nlohmann::json CoverPresentation::to_json() const {
  nlohmann::json gens = nlohmann::json::array();
  for (int g : generators) gens.push_back(name(g));
  nlohmann::json rels = nlohmann::json::array();
  nlohmann::json text = nlohmann::json::array();
  for (std::size_t k = 0; k < relators.size(); ++k) {
    nlohmann::json word = nlohmann::json::array();
    for (const auto& l : relators[k].letters()) word.push_back({name(l.generator), l.exponent});
    rels.push_back(word);
    text.push_back(relator_string(k));
  }
  return {{"generators", gens}, {"relators", rels}, {"relator_text", text}};
}

CoverPresentation branched_cover_presentation(const GroupPresentation& pres) {
  CoverPresentation cover;
  if (pres.generators.empty()) return cover;
  cover.base = *std::min_element(pres.generators.begin(), pres.generators.end());
  for (int g : pres.generators)
    if (g != cover.base) cover.generators.push_back(g);
  const GroupWord m = GroupWord::generator(cover.base);
  std::vector<GroupWord> words;
  for (const auto& r : pres.relators) words.push_back(fox_rewrite(r, cover.base));
  for (const auto& r : pres.relators) words.push_back(fox_rewrite(m * r * m.inverse(), cover.base));
  for (auto& w : words) {
    if (w.empty()) continue;
    if (std::find(cover.relators.begin(), cover.relators.end(), w) != cover.relators.end()) continue;
    cover.relators.push_back(std::move(w));
  }
  return cover;
}

CoverComputation compute_cover(const Diagram& d, std::optional<std::size_t> dropped) {
  CoverComputation out;
  out.wirtinger = dropped ? wirtinger_presentation_without(d, *dropped) : wirtinger_presentation(d, true);
  out.tietze = tietze_reduce(out.wirtinger, d.strands);
  out.cover = branched_cover_presentation(out.tietze.presentation);
  return out;
}

std::vector<Integer> smith_diagonal(std::vector<std::vector<Integer>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<Integer> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Pivot: smallest nonzero magnitude in the remaining block.
    while (true) {
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) {
        for (std::size_t k = t; k < std::min(rows, cols); ++k) diag.push_back(0);
        return diag;
      }
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        Integer q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        Integer q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility of the remaining block by the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols && divides; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
            divides = false;
          }
      if (divides) break;
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

std::vector<Integer> abelian_invariants(const CoverPresentation& pres) {
  std::vector<std::vector<Integer>> m;
  for (const auto& r : pres.relators) {
    std::vector<Integer> row(pres.generators.size(), 0);
    for (const auto& l : r.letters()) {
      auto it = std::find(pres.generators.begin(), pres.generators.end(), l.generator);
      row[static_cast<std::size_t>(it - pres.generators.begin())] += l.exponent;
    }
    m.push_back(std::move(row));
  }
  std::vector<Integer> diag = smith_diagonal(m);
  while (diag.size() < pres.generators.size()) diag.push_back(0);
  std::vector<Integer> out;
  for (const auto& d : diag)
    if (d != 1) out.push_back(d);
  return out;
}

Integer first_homology_order(const CoverPresentation& pres) {
  Integer order = 1;
  for (const auto& d : abelian_invariants(pres)) {
    if (d == 0) return 0;
    order *= d;
  }
  return order;
}

}  // namespace ghostchar
