#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ghostchar/braid.hpp"
#include "ghostchar/numeric.hpp"

namespace ghostchar {

struct TietzeResult {
  GroupPresentation presentation;
  std::vector<int> eliminated;  // in elimination order
  std::string diagnostic;
};

// Eliminates, highest label first, every generator above `keep` that some relator
// W m_k^-1 defines (m_k not in W). keep = 0 allows every generator.
TietzeResult tietze_reduce(const GroupPresentation& pres, int keep = 0);

// Pairs consecutive letters: (m_a^e, m_b^d) -> x_a^-1 x_b with x_{base} trivial.
// Output letters carry the arc label a of x_a. Throws on odd length.
GroupWord fox_rewrite(const GroupWord& word, int base = 1);

// Presentation of the fundamental group of the 2-fold branched cover, on x_i = m_base m_i.
struct CoverPresentation {
  int base = 1;
  std::vector<int> generators;  // arc labels i, for x_i
  std::vector<GroupWord> relators;

  std::string name(int generator) const;
  std::string relator_string(std::size_t k) const;
  nlohmann::json to_json() const;
};

CoverPresentation branched_cover_presentation(const GroupPresentation& pres);

struct CoverComputation {
  GroupPresentation wirtinger;
  TietzeResult tietze;
  CoverPresentation cover;
};

// Wirtinger presentation without one relator (default: the last in relator order), Tietze
// reduction down to the left-edge generators, then Fox rewriting.
CoverComputation compute_cover(const Diagram& d, std::optional<std::size_t> dropped = std::nullopt);

// Invariant factors of the abelianization (0 entries for free summands).
std::vector<Integer> abelian_invariants(const CoverPresentation& pres);
// Order of H1, or 0 when infinite.
Integer first_homology_order(const CoverPresentation& pres);

// Smith normal form diagonal of an integer matrix.
std::vector<Integer> smith_diagonal(std::vector<std::vector<Integer>> m);

}  // namespace ghostchar
