#include "b3/xu.hpp"

#include <algorithm>
#include <array>

#include "b3/packed_word.hpp"

namespace b3 {

namespace {

// Two-letter rewrites. The three spellings of alpha (a2a1, a3a2, a1a3) are
// mutually interchangeable, likewise the spellings of alpha^-1; the mixed
// slides pair up as listed in the header. Codes: a1=0 a1^-1=1 a2=2 a2^-1=3
// a3=4 a3^-1=5.
struct PairRules {
  uint8_t count = 0;
  uint8_t repl[2][2];
};

const std::array<std::array<PairRules, 6>, 6>& pair_table() {
  static const auto table = [] {
    std::array<std::array<PairRules, 6>, 6> t{};
    auto add = [&t](int x, int y, int a, int b) {
      PairRules& r = t[x][y];
      r.repl[r.count][0] = static_cast<uint8_t>(a);
      r.repl[r.count][1] = static_cast<uint8_t>(b);
      ++r.count;
    };
    // (R): a2a1 = a3a2 = a1a3
    add(2, 0, 4, 2); add(2, 0, 0, 4);
    add(4, 2, 2, 0); add(4, 2, 0, 4);
    add(0, 4, 2, 0); add(0, 4, 4, 2);
    // (R-): a1^-1 a2^-1 = a2^-1 a3^-1 = a3^-1 a1^-1
    add(1, 3, 3, 5); add(1, 3, 5, 1);
    add(3, 5, 1, 3); add(3, 5, 5, 1);
    add(5, 1, 1, 3); add(5, 1, 3, 5);
    // (M): a_i^-1 a_{i+1} <-> a_{i-1} a_i^-1
    add(1, 2, 4, 1); add(4, 1, 1, 2);
    add(3, 4, 0, 3); add(0, 3, 3, 4);
    add(5, 0, 2, 5); add(2, 5, 5, 0);
    // (M): a_{i+1}^-1 a_i <-> a_i a_{i-1}^-1
    add(3, 0, 0, 5); add(0, 5, 3, 0);
    add(5, 2, 2, 1); add(2, 1, 5, 2);
    add(1, 4, 4, 3); add(4, 3, 1, 4);
    return t;
  }();
  return table;
}

uint8_t shift_code(uint8_t code, int by) {
  int idx = (code >> 1) + by;
  idx = ((idx % 3) + 3) % 3;
  return static_cast<uint8_t>(2 * idx + (code & 1));
}

PackedWord shift_packed(PackedWord p, int by) {
  uint8_t buf[kMaxPackedLen];
  const int len = unpack_letters(p, buf);
  for (int i = 0; i < len; ++i) buf[i] = shift_code(buf[i], by);
  return pack_letters(buf, len);
}

PackedWord free_reduce_packed(PackedWord p) {
  uint8_t buf[kMaxPackedLen];
  const int len = unpack_letters(p, buf);
  uint8_t out[kMaxPackedLen];
  int m = 0;
  for (int i = 0; i < len; ++i) {
    if (m > 0 && (out[m - 1] ^ 1) == buf[i])
      --m;
    else
      out[m++] = buf[i];
  }
  return pack_letters(out, m);
}

int succ(int i) { return i % 3 + 1; }
int pred(int i) { return (i + 1) % 3 + 1; }

// Strictly nondecreasing: successive syllable indices step forward (positive
// words) or backward (negative words) in the cyclic order.
bool valid_monotone(const BandWord& w, size_t from, size_t to, int sign) {
  int prev = 0;
  for (size_t i = from; i < to; ++i) {
    if (w[i].sign() != sign) return false;
    const int idx = w[i].index();
    if (prev != 0 && idx != prev) {
      const int want = sign > 0 ? succ(prev) : pred(prev);
      if (idx != want) return false;
    }
    prev = idx;
  }
  return true;
}

BandWord rotated(const BandWord& w, size_t by) {
  BandWord r;
  r.reserve(w.size());
  r.insert(r.end(), w.begin() + by, w.end());
  r.insert(r.end(), w.begin(), w.begin() + by);
  return r;
}

const Gen kA1{1, 1}, kA2{2, 1};
const Gen kA1i{1, -1}, kA2i{2, -1};

}  // namespace

namespace {

// Flat 6-bit pair-rewrite table for the packed fast path: index is the two
// letter codes (x << 3) | y, entries are replacement 6-bit combos.
struct FlatPairRules {
  uint8_t count = 0;
  uint8_t repl[2] = {0, 0};
};

const std::array<FlatPairRules, 64>& flat_pair_table() {
  static const auto table = [] {
    std::array<FlatPairRules, 64> t{};
    const auto& src = pair_table();
    for (int x = 0; x < 6; ++x)
      for (int y = 0; y < 6; ++y) {
        FlatPairRules& f = t[(x << 3) | y];
        const PairRules& r = src[x][y];
        f.count = r.count;
        for (int i = 0; i < r.count; ++i)
          f.repl[i] =
              static_cast<uint8_t>((r.repl[i][0] << 3) | r.repl[i][1]);
      }
    return t;
  }();
  return table;
}

// Open-addressing set of packed words (0 is the empty slot sentinel; the
// packed encoding never produces 0).
class PackedSet {
 public:
  explicit PackedSet(size_t pow2 = 1 << 12) { reset(pow2); }

  void reset(size_t pow2) {
    slots_.assign(pow2, 0);
    mask_ = pow2 - 1;
    count_ = 0;
  }

  size_t size() const { return count_; }
  const std::vector<PackedWord>& slots() const { return slots_; }

  bool insert(PackedWord w) {
    size_t h = PackedWordHash{}(w) & mask_;
    while (slots_[h] != 0) {
      if (slots_[h] == w) return false;
      h = (h + 1) & mask_;
    }
    slots_[h] = w;
    if (++count_ * 4 > slots_.size() * 3) grow();
    return true;
  }

 private:
  void grow() {
    std::vector<PackedWord> old = std::move(slots_);
    reset(old.size() * 2);
    for (PackedWord w : old)
      if (w != 0) {
        size_t h = PackedWordHash{}(w) & mask_;
        while (slots_[h] != 0) h = (h + 1) & mask_;
        slots_[h] = w;
        ++count_;
      }
  }

  std::vector<PackedWord> slots_;
  size_t mask_ = 0;
  size_t count_ = 0;
};

// Children of p with length <= max_len, emitted in a fixed order entirely by
// bit surgery: pair rewrites and cancellations left to right, the two
// rotations, then insertions.
template <typename F>
void for_each_packed_neighbor(PackedWord p, int max_len, F&& emit) {
  const int len = packed_len(p);
  const auto& table = flat_pair_table();
  for (int i = 0; i + 1 < len; ++i) {
    const int sh = 3 * (len - 2 - i);
    const uint32_t two = static_cast<uint32_t>((p >> sh) & 0x3F);
    const FlatPairRules& rules = table[two];
    const PackedWord cleared = p & ~(PackedWord(0x3F) << sh);
    for (int r = 0; r < rules.count; ++r)
      if (emit(cleared | (PackedWord(rules.repl[r]) << sh))) return;
    if (((two >> 3) ^ 1) == (two & 7)) {
      const PackedWord high = p >> (sh + 6);
      const PackedWord low = p & ((PackedWord(1) << sh) - 1);
      if (emit((high << sh) | low)) return;
    }
  }
  if (len >= 2) {
    const int top = 3 * (len - 1);
    const PackedWord first = (p >> top) & 7;
    const PackedWord body =
        (p & ((PackedWord(1) << top) - 1)) | (PackedWord(1) << top);
    if (emit((body << 3) | first)) return;
    const PackedWord last = p & 7;
    const PackedWord low2 = (p >> 3) & ((PackedWord(1) << top) - 1);
    if (emit((PackedWord(1) << (top + 3)) | (last << top) | low2)) return;
  }
  if (len + 2 <= max_len) {
    for (int pos = 0; pos <= len; ++pos) {
      const int sh = 3 * (len - pos);
      const PackedWord high = p >> sh;
      const PackedWord low = p & ((PackedWord(1) << sh) - 1);
      for (uint32_t c = 0; c < 6; ++c) {
        const PackedWord pair = (PackedWord(c) << 3) | (c ^ 1);
        if (emit((((high << 6) | pair) << sh) | low)) return;
      }
    }
  }
}

}  // namespace

PackedWord pack_word(const BandWord& w) {
  if (w.size() > kMaxPackedLen)
    throw SearchBudgetExceeded(
        "word of length " + std::to_string(w.size()) +
        " exceeds the packed search bound of 21 letters");
  uint8_t buf[kMaxPackedLen];
  for (size_t i = 0; i < w.size(); ++i) buf[i] = w[i].code();
  return pack_letters(buf, static_cast<int>(w.size()));
}

BandWord unpack_word(PackedWord p) {
  uint8_t buf[kMaxPackedLen];
  const int len = unpack_letters(p, buf);
  BandWord w;
  w.reserve(len);
  for (int i = 0; i < len; ++i) w.push_back(Gen::from_code(buf[i]));
  return w;
}

std::vector<BandWord> neighbor_moves(const BandWord& w) {
  std::vector<PackedWord> packed;
  for_each_packed_neighbor(pack_word(w), kMaxPackedLen, [&](PackedWord v) {
    packed.push_back(v);
    return false;
  });
  std::sort(packed.begin(), packed.end());
  packed.erase(std::unique(packed.begin(), packed.end()), packed.end());
  std::vector<BandWord> out;
  out.reserve(packed.size());
  for (PackedWord p : packed) out.push_back(unpack_word(p));
  return out;
}


namespace detail {

// Bounded breadth-first search with restart: whenever a strictly shorter
// word appears, re-anchor there and start over. On a stable anchor the whole
// ball of length <= anchor + slack is exhausted and the minimal layer is
// returned, closed under index relabeling. collect_upto > 0 additionally
// records every visited word of at most that length (class memoing).
PackedSearchResult packed_conjugacy_search(PackedWord start,
                                           const SearchOptions& opts,
                                           int collect_upto) {
  PackedSearchResult result;
  uint64_t visited_count = 0;
  PackedWord cur = free_reduce_packed(start);
  auto note = [&](PackedWord v) {
    if (collect_upto > 0 && packed_len(v) <= collect_upto)
      result.collected.push_back(v);
  };
  note(cur);
  PackedSet visited;
  std::vector<PackedWord> queue;
  queue.reserve(1 << 12);
  for (;;) {
    const int anchor = packed_len(cur);
    if (anchor <= 1) {
      result.layer = {cur, shift_packed(cur, 1), shift_packed(cur, 2)};
      break;
    }
    const int bound = anchor + opts.slack;
    if (bound > kMaxPackedLen)
      throw SearchBudgetExceeded(
          "search ball exceeds the packed bound of 21 letters");
    visited.reset(1 << 12);
    queue.clear();
    visited.insert(cur);
    queue.push_back(cur);
    size_t qi = 0;
    PackedWord shorter = 0;
    bool over_budget = false;
    while (qi < queue.size() && shorter == 0) {
      const PackedWord u = queue[qi++];
      for_each_packed_neighbor(u, bound, [&](PackedWord v) {
        if (!visited.insert(v)) return false;
        if (++visited_count > opts.visited_cap) {
          over_budget = true;
          return true;
        }
        note(v);
        if (packed_len(v) < anchor) {
          shorter = v;
          return true;
        }
        queue.push_back(v);
        return false;
      });
      if (over_budget)
        throw SearchBudgetExceeded("visited-set cap of " +
                                   std::to_string(opts.visited_cap) +
                                   " words exceeded");
    }
    if (shorter != 0) {
      cur = free_reduce_packed(shorter);
      note(cur);
      continue;
    }
    result.layer.reserve(visited.size() / 8 + 4);
    for (PackedWord v : visited.slots())
      if (v != 0 && packed_len(v) == anchor) result.layer.push_back(v);
    const size_t n0 = result.layer.size();
    for (size_t i = 0; i < n0; ++i) {
      result.layer.push_back(shift_packed(result.layer[i], 1));
      result.layer.push_back(shift_packed(result.layer[i], 2));
    }
    break;
  }
  std::sort(result.layer.begin(), result.layer.end());
  result.layer.erase(std::unique(result.layer.begin(), result.layer.end()),
                     result.layer.end());
  return result;
}

}  // namespace detail

ShortestRep shortest_conjugacy_search(const BandWord& w,
                                      const SearchOptions& opts) {
  const BandWord reduced = free_reduce(w);
  detail::PackedSearchResult r =
      detail::packed_conjugacy_search(pack_word(reduced), opts, 0);
  ShortestRep out;
  out.minimal_layer.reserve(r.layer.size());
  for (PackedWord p : r.layer) out.minimal_layer.push_back(unpack_word(p));
  out.rep = out.minimal_layer.front();
  return out;
}

BandWord shortest_conjugacy_rep(const BandWord& w, const SearchOptions& opts) {
  return shortest_conjugacy_search(w, opts).rep;
}

const char* to_string(XuKind k) {
  switch (k) {
    case XuKind::AlphaDP: return "AlphaDP";
    case XuKind::NAlphaD: return "NAlphaD";
    default: return "NP";
  }
}

BandWord XuForm::assemble() const {
  BandWord w;
  if (kind == XuKind::AlphaDP) {
    for (int i = 0; i < d; ++i) {
      w.push_back(kA2);
      w.push_back(kA1);
    }
    w.insert(w.end(), P.begin(), P.end());
  } else if (kind == XuKind::NAlphaD) {
    w = N;
    for (int i = 0; i < d; ++i) {
      w.push_back(kA1i);
      w.push_back(kA2i);
    }
  } else {
    w = N;
    w.insert(w.end(), P.begin(), P.end());
  }
  return w;
}

XuForm classify_from_layer(const std::vector<BandWord>& layer) {
  if (layer.empty()) throw NotXuForm("empty minimal layer");
  int negatives = 0;
  for (Gen g : layer.front())
    if (g.sign() < 0) ++negatives;
  const size_t len = layer.front().size();

  if (negatives == 0) {
    // alpha^d P: maximal leading literal (a2 a1)^d over all rotations of all
    // layer words, remainder a nondecreasing positive word.
    bool found = false;
    XuForm best;
    for (const BandWord& u : layer) {
      const size_t n = u.size();
      for (size_t rot = 0; rot < std::max<size_t>(n, 1); ++rot) {
        BandWord r = n ? rotated(u, rot) : u;
        size_t d = 0;
        while (2 * (d + 1) <= n && r[2 * d] == kA2 && r[2 * d + 1] == kA1) ++d;
        if (!valid_monotone(r, 2 * d, n, +1)) continue;
        BandWord p(r.begin() + 2 * d, r.end());
        if (!found || static_cast<int>(d) > best.d ||
            (static_cast<int>(d) == best.d && p < best.P)) {
          best.kind = XuKind::AlphaDP;
          best.d = static_cast<int>(d);
          best.P = std::move(p);
          best.N.clear();
          best.source = std::move(r);
          found = true;
        }
      }
    }
    if (!found) throw NotXuForm("no alpha^d P parse in the minimal layer");
    return best;
  }

  if (negatives == static_cast<int>(len)) {
    // N alpha^-d: maximal trailing literal (a1^-1 a2^-1)^d, leading part a
    // nondecreasing negative word.
    bool found = false;
    XuForm best;
    for (const BandWord& u : layer) {
      const size_t n = u.size();
      for (size_t rot = 0; rot < n; ++rot) {
        BandWord r = rotated(u, rot);
        size_t d = 0;
        while (2 * (d + 1) <= n && r[n - 2 * d - 2] == kA1i &&
               r[n - 2 * d - 1] == kA2i)
          ++d;
        if (!valid_monotone(r, 0, n - 2 * d, -1)) continue;
        BandWord nn(r.begin(), r.end() - 2 * d);
        if (!found || static_cast<int>(d) > best.d ||
            (static_cast<int>(d) == best.d && nn < best.N)) {
          best.kind = XuKind::NAlphaD;
          best.d = static_cast<int>(d);
          best.N = std::move(nn);
          best.P.clear();
          best.source = std::move(r);
          found = true;
        }
      }
    }
    if (!found) throw NotXuForm("no N alpha^-d parse in the minimal layer");
    return best;
  }

  // Mixed: rotations splitting as one negative arc followed by one positive
  // arc, both nondecreasing.
  std::vector<std::pair<BandWord, BandWord>> splits;
  for (const BandWord& u : layer) {
    const size_t n = u.size();
    for (size_t rot = 0; rot < n; ++rot) {
      if (u[rot].sign() > 0) continue;
      if (u[(rot + n - 1) % n].sign() < 0) continue;
      BandWord r = rotated(u, rot);
      size_t split = 0;
      while (split < n && r[split].sign() < 0) ++split;
      bool ok = true;
      for (size_t i = split; i < n; ++i)
        if (r[i].sign() < 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
      if (!valid_monotone(r, 0, split, -1)) continue;
      if (!valid_monotone(r, split, n, +1)) continue;
      splits.emplace_back(BandWord(r.begin(), r.begin() + split),
                          BandWord(r.begin() + split, r.end()));
    }
  }
  std::sort(splits.begin(), splits.end());
  splits.erase(std::unique(splits.begin(), splits.end()), splits.end());
  if (splits.empty()) throw NotXuForm("no N P split in the minimal layer");
  XuForm best;
  best.kind = XuKind::NP;
  best.d = 0;
  best.N = splits.front().first;
  best.P = splits.front().second;
  best.source = best.N;
  best.source.insert(best.source.end(), best.P.begin(), best.P.end());
  best.np_presentations = std::move(splits);
  return best;
}

XuForm classify_xu(const BandWord& w, const SearchOptions& opts) {
  return classify_from_layer(shortest_conjugacy_search(w, opts).minimal_layer);
}

std::vector<int> Syllables::exponents() const {
  std::vector<int> e;
  e.reserve(runs.size());
  for (const auto& [idx, exp] : runs) e.push_back(exp);
  return e;
}

int Syllables::max_exponent() const {
  int m = 0;
  for (const auto& [idx, exp] : runs) m = std::max(m, exp);
  return m;
}

bool Syllables::has_adjacent_units_cyclic() const {
  const size_t n = runs.size();
  if (n < 2) return false;
  for (size_t i = 0; i < n; ++i)
    if (runs[i].second == 1 && runs[(i + 1) % n].second == 1) return true;
  return false;
}

Syllables syllable_decompose(const BandWord& p, Orientation orientation) {
  const int sign = orientation == Orientation::Positive ? 1 : -1;
  Syllables s;
  for (Gen g : p) {
    if (g.sign() != sign)
      throw NotMonotone("letter of the wrong sign in " +
                        std::string(sign > 0 ? "positive" : "negative") +
                        " word");
    if (!s.runs.empty() && s.runs.back().first == g.index()) {
      ++s.runs.back().second;
      continue;
    }
    if (!s.runs.empty()) {
      const int prev = s.runs.back().first;
      const int want = sign > 0 ? succ(prev) : pred(prev);
      if (g.index() != want)
        throw NotMonotone("syllable indices do not step cyclically");
    }
    s.runs.emplace_back(g.index(), 1);
  }
  s.k = static_cast<int>(s.runs.size()) / 3;
  s.tail = static_cast<int>(s.runs.size()) % 3;
  s.j = s.runs.empty() ? 0 : s.runs.front().first;
  return s;
}

BandWord ut_reduce(const BandWord& n) {
  BandWord out;
  for (Gen g : n) {
    if (g.sign() > 0) throw NotNegative("positive letter in negative word");
    if (!out.empty() && out.back() == g) continue;
    out.push_back(g);
  }
  return out;
}

LinkStats link_stats_of_word(const BandWord& shortest) {
  LinkStats s;
  s.euler = 3 - static_cast<int>(shortest.size());
  s.components = closure_components(shortest);
  const int diff = s.components - s.euler;
  if (diff % 2 != 0)
    throw NonIntegerGenus("components - euler is odd");
  s.genus = diff / 2;
  return s;
}

LinkStats link_stats(const XuForm& x) { return link_stats_of_word(x.source); }

}  // namespace b3
