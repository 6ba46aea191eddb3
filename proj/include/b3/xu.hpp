#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "b3/braid.hpp"

namespace b3 {

// Knobs for the bounded conjugacy-representative search.
struct SearchOptions {
  int slack = 2;                       // extra length allowed above the anchor
  uint64_t visited_cap = 10'000'000;   // SearchBudgetExceeded beyond this
};

// All words one rewriting move away from w. Moves:
//   (R)   positive braid-relation swap   a_i a_{i-1} <-> a_{i+1} a_i
//   (R-)  negative swap                  a_{i-1}^-1 a_i^-1 <-> a_i^-1 a_{i+1}^-1
//   (M)   mixed slides                   a_i^-1 a_{i+1} <-> a_{i-1} a_i^-1
//                                        a_{i+1}^-1 a_i <-> a_i a_{i-1}^-1
//   (C)   free cancellation of one adjacent inverse pair
//   (I)   insertion of one adjacent inverse pair
//   (Cyc) cyclic rotation by one letter
// Every move preserves the conjugacy class of the closure.
std::vector<BandWord> neighbor_moves(const BandWord& w);

// Result of the search: the canonical (lexicographically least) shortest
// representative plus the whole minimal-length layer the search saw, closed
// under index relabeling. The layer is sorted and duplicate-free.
struct ShortestRep {
  BandWord rep;
  std::vector<BandWord> minimal_layer;
};

// Breadth-first search over neighbor_moves starting at free_reduce(w), never
// visiting words longer than the current anchor length + slack; restarts the
// anchor whenever a strictly shorter word appears. Deterministic. Throws
// SearchBudgetExceeded when the visited cap is hit (or when a reduced input
// exceeds the 21-letter packed-word bound).
ShortestRep shortest_conjugacy_search(const BandWord& w,
                                      const SearchOptions& opts = {});
BandWord shortest_conjugacy_rep(const BandWord& w,
                                const SearchOptions& opts = {});

namespace detail {

// Packed-word search core shared with the harness. layer is the sorted
// minimal layer; collected holds every visited word of length <= collect_upto
// (class memoing), empty when collect_upto is 0.
struct PackedSearchResult {
  std::vector<uint64_t> layer;
  std::vector<uint64_t> collected;
};

PackedSearchResult packed_conjugacy_search(uint64_t start,
                                           const SearchOptions& opts,
                                           int collect_upto);

}  // namespace detail

enum class XuKind { AlphaDP, NAlphaD, NP };
const char* to_string(XuKind k);

// Classified shortest conjugacy representative:
//   AlphaDP: source = (a2 a1)^d P          (pure positive; d may be 0)
//   NAlphaD: source = N (a1^-1 a2^-1)^d    (pure negative; d may be 0)
//   NP:      source = N P                  (both parts nonempty)
// P is positive and nondecreasing (successive syllable indices step forward
// in the cyclic order 1 -> 2 -> 3 -> 1); N is negative with N^-1
// nondecreasing (indices step backward).
struct XuForm {
  XuKind kind = XuKind::AlphaDP;
  int d = 0;
  BandWord N, P;
  BandWord source;
  // For NP words: every N|P split found in the minimal layer, sorted; the
  // top-term computation tries them in order until a grading pattern fits.
  std::vector<std::pair<BandWord, BandWord>> np_presentations;

  BandWord assemble() const;
};

// Classify a shortest representative (normally the output of
// shortest_conjugacy_rep). Scans the whole minimal layer of the class and
// keeps the parse with the largest alpha-power. Throws NotXuForm when no
// word in the layer matches any of the three shapes (a shortest-search
// failure; raise the slack).
XuForm classify_xu(const BandWord& w, const SearchOptions& opts = {});
// Same, reusing an already-computed minimal layer.
XuForm classify_from_layer(const std::vector<BandWord>& minimal_layer);

enum class Orientation { Positive, Negative };

// Run-length view of a one-signed strictly nondecreasing word.
struct Syllables {
  std::vector<std::pair<int, int>> runs;  // (generator index, exponent >= 1)
  int k = 0;     // complete 3-syllable cycles
  int tail = 0;  // extra syllables beyond the last complete cycle: 0, 1, 2
  int j = 0;     // generator index the pattern starts at; 0 for the empty word

  int count() const { return static_cast<int>(runs.size()); }
  std::vector<int> exponents() const;
  int max_exponent() const;  // 0 for the empty word
  // Two cyclically consecutive exponents both equal to 1 (the wrap pair
  // counts); meaningful for tail-0 patterns.
  bool has_adjacent_units_cyclic() const;
};

// Throws NotMonotone if p is not a nondecreasing word of that orientation.
Syllables syllable_decompose(const BandWord& p, Orientation orientation);

// Collapse every maximal run a_i^-k to a single a_i^-1. Throws NotNegative
// if a positive letter is present.
BandWord ut_reduce(const BandWord& n);

struct LinkStats {
  int components = 0;
  int euler = 0;
  int genus = 0;
};

// euler = 3 - l(source), components from the closure permutation,
// genus = (components - euler) / 2. Requires a shortest representative.
LinkStats link_stats(const XuForm& x);
LinkStats link_stats_of_word(const BandWord& shortest);

}  // namespace b3
