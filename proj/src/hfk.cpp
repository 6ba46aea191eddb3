#include "b3/hfk.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>

#include "b3/alexander.hpp"

namespace b3 {

GradedModule GradedModule::f(int alexander, int maslov, long long rank) {
  GradedModule m(alexander);
  m.add(maslov, rank);
  return m;
}

long long GradedModule::rank(int maslov) const {
  auto it = parts_.find(maslov);
  return it == parts_.end() ? 0 : it->second;
}

long long GradedModule::total_rank() const {
  long long t = 0;
  for (const auto& [m, r] : parts_) t += r;
  return t;
}

long long GradedModule::euler_number() const {
  long long e = 0;
  for (const auto& [m, r] : parts_) e += (((m % 2) + 2) % 2 == 0) ? r : -r;
  return e;
}

void GradedModule::add(int maslov, long long rank) {
  if (rank < 0) throw Error("negative rank");
  if (rank == 0) return;
  parts_[maslov] += rank;
}

GradedModule GradedModule::mirror_reflected() const {
  GradedModule out(alexander_);
  for (const auto& [m, r] : parts_) out.parts_[2 * alexander_ - m] = r;
  return out;
}

std::string GradedModule::str() const {
  if (parts_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "F";
    if (it->second != 1) os << "^" << it->second;
    os << "[" << it->first << "]";
  }
  return os.str();
}

GradedModule dirsum(const GradedModule& a, const GradedModule& b) {
  if (a.alexander() != b.alexander())
    throw GradingMismatch("dirsum at different Alexander gradings");
  GradedModule out = a;
  for (const auto& [m, r] : b.parts()) out.add(m, r);
  return out;
}

GradedModule tensor(const GradedModule& a, const GradedModule& b) {
  GradedModule out(a.alexander() + b.alexander());
  for (const auto& [m1, r1] : a.parts())
    for (const auto& [m2, r2] : b.parts()) out.add(m1 + m2, r1 * r2);
  return out;
}

GradedModule shift(const GradedModule& a, int s) {
  GradedModule out(a.alexander());
  for (const auto& [m, r] : a.parts()) out.add(m + s, r);
  return out;
}

namespace {

int succ(int i) { return i % 3 + 1; }

// Merge the wrap run of a positive staircase word viewed cyclically.
std::vector<std::pair<int, int>> cyclic_runs(const Syllables& syl) {
  auto runs = syl.runs;
  if (runs.size() >= 2 && runs.front().first == runs.back().first) {
    runs.front().second += runs.back().second;
    runs.pop_back();
  }
  return runs;
}

BandWord staircase_word(const std::vector<int>& exps, int start_index = 1) {
  BandWord w;
  int idx = start_index;
  for (int e : exps) {
    for (int t = 0; t < e; ++t) w.emplace_back(idx, 1);
    idx = succ(idx);
  }
  return w;
}

std::vector<int> rotated_exps(const std::vector<int>& e, size_t by) {
  std::vector<int> r;
  r.reserve(e.size());
  for (size_t i = 0; i < e.size(); ++i) r.push_back(e[(by + i) % e.size()]);
  return r;
}

// Merge Maslov summands, allowing negative intermediate contributions from
// the rank formulas; a negative final rank means the formula cannot apply.
GradedModule module_from_parts(int alex,
                               std::initializer_list<std::pair<int, long long>> parts,
                               const char* what) {
  std::map<int, long long> acc;
  for (const auto& [m, r] : parts) acc[m] += r;
  GradedModule out(alex);
  for (const auto& [m, r] : acc) {
    if (r < 0)
      throw Unsupported(std::string(what) + ": rank formula went negative");
    out.add(m, r);
  }
  return out;
}

GradedModule unlink_top(int components) {
  GradedModule m = GradedModule::f(0, 0, 1);
  const GradedModule factor =
      dirsum(GradedModule::f(0, 0, 1), GradedModule::f(0, -1, 1));
  for (int i = 1; i < components; ++i) m = tensor(m, factor);
  return m;
}

struct SingleNegPattern {
  BandWord N, P;
  Syllables syl;
};

// A presentation a_i^-1 * P with P starting at a_{i+2} and ending on a full
// cycle or a single-generator tail (the shapes the single-negative formulas
// cover).
std::optional<SingleNegPattern> find_single_negative_pattern(const XuForm& x) {
  for (const auto& [N, P] : x.np_presentations) {
    const int i = N.front().index();
    Syllables syl = syllable_decompose(P, Orientation::Positive);
    if (syl.j != succ(succ(i))) continue;
    if (syl.tail == 2) continue;
    return SingleNegPattern{N, P, std::move(syl)};
  }
  return std::nullopt;
}

struct FixedTuple {
  std::array<int, 6> exps;
  long long rank_neg1;
  long long rank_zero;
  const char* tag;
};

// Double-cycle staircase words with all exponents <= 2 and no two cyclically
// adjacent exponents equal to 1; these five cyclic classes exhaust that set.
constexpr FixedTuple kDoubleCycleTable[] = {
    {{2, 1, 2, 1, 2, 2}, 1, 5, "viii"},
    {{2, 1, 2, 1, 2, 1}, 2, 5, "ix"},
    {{2, 2, 2, 2, 2, 1}, 2, 7, "x"},
    {{2, 1, 2, 2, 1, 2}, 3, 7, "xi"},
    {{2, 2, 2, 2, 2, 2}, 3, 9, "xii"},
};

GradedModule top_impl(const XuForm& x, const LinkStats& stats,
                      const std::vector<BandWord>* layer,
                      const SearchOptions& opts, bool allow_mirror);

HfkPrediction predict_impl(const XuForm& x, const LinkStats& stats,
                           const std::vector<BandWord>* layer,
                           const SearchOptions& opts, bool allow_mirror);

std::vector<BandWord> mirror_layer_of(const XuForm& x,
                                      const std::vector<BandWord>* layer,
                                      const SearchOptions& opts) {
  std::vector<BandWord> out;
  if (layer) {
    out.reserve(layer->size());
    for (const BandWord& u : *layer) out.push_back(invert_word(u));
    std::sort(out.begin(), out.end());
  } else {
    out = shortest_conjugacy_search(invert_word(x.source), opts).minimal_layer;
  }
  return out;
}

HfkPrediction predict_positive(const XuForm& x, const LinkStats& stats) {
  const int g = stats.genus;
  HfkPrediction pred;
  if (x.d >= 2) {
    pred.case_tag = "i";
    pred.top = GradedModule::f(g, 0);
    pred.second = GradedModule::f(g - 1, -1, zeta(x.source));
    return pred;
  }
  if (x.d == 1) {
    const Syllables syl = syllable_decompose(x.P, Orientation::Positive);
    const int s = syl.count();
    const long long z = zeta(x.source);
    pred.top = GradedModule::f(g, 0);
    if (s % 3 == 1 || s == 0) {
      pred.case_tag = "ii";
      pred.second = GradedModule::f(g - 1, -1, z);
    } else {
      pred.case_tag = "iii";
      const int k = (s % 3 == 2) ? (s - 2) / 3 : s / 3 - 1;
      const long long extra = (k % 2 == 1) ? z + 1 : z - 1;
      pred.second =
          module_from_parts(g - 1, {{k - 1, 1}, {-1, extra}}, "case iii");
    }
    return pred;
  }

  // Pure nondecreasing positive word (d = 0).
  const Syllables syl = syllable_decompose(x.P, Orientation::Positive);
  const auto cyc = cyclic_runs(syl);
  const int sc = static_cast<int>(cyc.size());
  if (sc == 1) {
    pred.case_tag = "xiv";
    pred.top = GradedModule::f(g, 0);
    pred.second = split_torus_second_term(static_cast<int>(x.source.size()));
    pred.notes.push_back("split torus family a1^n");
    return pred;
  }
  if (sc % 3 != 0)
    throw Unsupported("positive word with a cyclic skip survived the alpha-power scan");

  const int k = sc / 3;
  pred.top = GradedModule::f(g, 0);
  pred.top.add(k - 1, 1);
  std::vector<int> exps;
  exps.reserve(cyc.size());
  for (const auto& [idx, e] : cyc) exps.push_back(e);

  const bool units = [&] {
    for (size_t i = 0; i < exps.size(); ++i)
      if (exps[i] == 1 && exps[(i + 1) % exps.size()] == 1) return true;
    return false;
  }();

  if (k == 1 || (k == 2 && units)) {
    pred.case_tag = "vii";
    long long rank;
    if (k == 1) {
      rank = zeta(x.source);
    } else {
      // The k = 2 top is F[0] + F[1] with vanishing Euler characteristic, so
      // the Alexander polynomial's top degree sits at A = g-1 and the rank
      // must be read there, not one below the top.
      const LaurentPoly q = canonicalize_poly(alexander_poly(x.source));
      if (q.is_zero())
        throw ZeroAlexander("zeta undefined: Alexander polynomial is zero");
      Coeff c = q.coeff(q.max_exp());
      if (c < 0) c = -c;
      rank = static_cast<long long>(c);
      pred.notes.push_back(
          "rank read at the genus-aligned top coefficient (degree gap below g)");
    }
    pred.second = GradedModule::f(g - 1, -1, rank);
    return pred;
  }

  if (k == 2) {
    const int maxe = *std::max_element(exps.begin(), exps.end());
    if (maxe > 2) {
      // Rotate so the first exponent exceeds 2, then peel one letter off the
      // leading run in the positive and negative directions.
      std::vector<int> best;
      for (size_t r = 0; r < exps.size(); ++r) {
        if (exps[r] <= 2) continue;
        auto t = rotated_exps(exps, r);
        if (best.empty() || t < best) best = std::move(t);
      }
      const int n1 = best[0], m1 = best[1], l1 = best[2];
      const int n2 = best[3], m2 = best[4], l2 = best[5];
      auto append_run = [](BandWord& w, int idx, int e) {
        for (int t = 0; t < e; ++t) w.emplace_back(idx, 1);
      };
      BandWord wp = {Gen(2, 1), Gen(1, 1), Gen(2, 1), Gen(1, 1)};  // alpha^2
      append_run(wp, 3, n1 - 3);
      append_run(wp, 2, m1);
      append_run(wp, 3, l1);
      append_run(wp, 1, n2);
      append_run(wp, 2, m2);
      append_run(wp, 3, l2);
      BandWord wm = {Gen(2, -1)};
      append_run(wm, 1, 2);
      append_run(wm, 2, m1);
      append_run(wm, 3, l1);
      append_run(wm, 1, n2);
      append_run(wm, 2, m2);
      append_run(wm, 3, l2);
      append_run(wm, 1, n1 - 2);
      const long long zp = zeta(wp), zm = zeta(wm);
      const long long dc = stats.components - closure_components(wp);
      pred.case_tag = "xiii-a";
      pred.second = module_from_parts(
          g - 1, {{-1, zp + dc}, {0, zm + dc}}, "case xiii-a");
      return pred;
    }
    for (const FixedTuple& f : kDoubleCycleTable) {
      for (size_t r = 0; r < exps.size(); ++r) {
        auto t = rotated_exps(exps, r);
        if (std::equal(t.begin(), t.end(), f.exps.begin())) {
          pred.case_tag = f.tag;
          pred.second = GradedModule::f(g - 1, -1, f.rank_neg1);
          pred.second.add(0, f.rank_zero);
          return pred;
        }
      }
    }
    throw Unsupported("double-cycle exponent pattern not recognized");
  }

  // k > 2: stabilize with one extra positive or negative a2 letter.
  {
    std::vector<int> best = exps;
    for (size_t r = 1; r < exps.size(); ++r) {
      auto t = rotated_exps(exps, r);
      if (t < best) best = std::move(t);
    }
    const BandWord wpat = staircase_word(best);
    BandWord wp = {Gen(2, 1)};
    wp.insert(wp.end(), wpat.begin(), wpat.end());
    BandWord wm = {Gen(2, -1)};
    wm.insert(wm.end(), wpat.begin(), wpat.end());
    const long long zp = zeta(wp), zm = zeta(wm);
    const long long dc = stats.components - closure_components(wp);
    pred.case_tag = "xiii-b";
    const long long r1 = (k % 2 == 0) ? 1 + zp + dc : zp + dc - 1;
    const long long r2 = (k % 2 == 0) ? 1 + zm + dc : zm + dc - 1;
    pred.second =
        module_from_parts(g - 1, {{-1, r1}, {k - 2, r2}}, "case xiii-b");
    return pred;
  }
}

HfkPrediction predict_single_negative(const XuForm& x,
                                      const LinkStats& stats) {
  const int g = stats.genus;
  auto pat = find_single_negative_pattern(x);
  if (!pat)
    throw Unsupported(
        "no a_i^-1 staircase presentation among the N|P splits");
  const long long z = zeta(x.source);
  HfkPrediction pred;
  const int k = pat->syl.k;
  pred.top = GradedModule::f(g, k);
  if (pat->syl.count() == 1) {
    pred.case_tag = "vi";
    pred.second = GradedModule::f(g - 1, -1, z);
    return pred;
  }
  pred.case_tag = "v";
  const long long extra = (k % 2 == 0) ? z + 1 : z - 1;
  pred.second = module_from_parts(g - 1, {{0, 1}, {k - 1, extra}}, "case v");
  return pred;
}

HfkPrediction predict_np_general(const XuForm& x, const LinkStats& stats) {
  const int g = stats.genus;
  std::optional<int> p;
  for (const auto& [N, P] : x.np_presentations) {
    try {
      p = np_top_grading(N, syllable_decompose(P, Orientation::Positive));
      break;
    } catch (const PatternMismatch&) {
    }
  }
  if (!p)
    throw Unsupported(
        "no N|P split matches the staircase grading patterns");
  HfkPrediction pred;
  pred.case_tag = "iv";
  pred.top = GradedModule::f(g, *p);
  pred.second = GradedModule::f(g - 1, *p - 1, zeta(x.source));
  return pred;
}

HfkPrediction predict_mirror(const XuForm& x, const LinkStats&,
                             const std::vector<BandWord>* layer,
                             const SearchOptions& opts, bool allow_mirror) {
  if (!allow_mirror) throw Unsupported("mirror dispatch recursed");
  const std::vector<BandWord> mlayer = mirror_layer_of(x, layer, opts);
  const XuForm mform = classify_from_layer(mlayer);
  const LinkStats mstats = link_stats(mform);
  HfkPrediction mpred = predict_impl(mform, mstats, &mlayer, opts, false);
  HfkPrediction pred;
  pred.case_tag = "xv";
  pred.supported = mpred.supported;
  pred.top = mpred.top.mirror_reflected();
  pred.second = mpred.second.mirror_reflected();
  pred.notes.push_back(std::string("mirror of case ") + mpred.case_tag);
  pred.notes.push_back(
      "maslov transported by m -> 2A - m at each Alexander grading A");
  for (auto& n : mpred.notes) pred.notes.push_back("mirror: " + n);
  return pred;
}

GradedModule top_impl(const XuForm& x, const LinkStats& stats,
                      const std::vector<BandWord>* layer,
                      const SearchOptions& opts, bool allow_mirror) {
  const int g = stats.genus;
  if (x.source.size() <= 1) return unlink_top(stats.components);
  switch (x.kind) {
    case XuKind::AlphaDP: {
      if (x.d > 0) return GradedModule::f(g, 0);
      const Syllables syl = syllable_decompose(x.P, Orientation::Positive);
      const auto cyc = cyclic_runs(syl);
      const int sc = static_cast<int>(cyc.size());
      if (sc > 1 && sc % 3 == 0) {
        GradedModule top = GradedModule::f(g, 0);
        top.add(sc / 3 - 1, 1);
        return top;
      }
      return GradedModule::f(g, 0);
    }
    case XuKind::NP: {
      if (x.N.size() == 1) {
        auto pat = find_single_negative_pattern(x);
        if (!pat)
          throw Unsupported(
              "no a_i^-1 staircase presentation among the N|P splits");
        return GradedModule::f(g, pat->syl.k);
      }
      if (x.P.size() == 1) break;  // mirror route below
      for (const auto& [N, P] : x.np_presentations) {
        try {
          return GradedModule::f(
              g, np_top_grading(N, syllable_decompose(P, Orientation::Positive)));
        } catch (const PatternMismatch&) {
        }
      }
      throw Unsupported("no N|P split matches the staircase grading patterns");
    }
    case XuKind::NAlphaD: break;  // mirror route below
  }
  if (!allow_mirror) throw Unsupported("mirror dispatch recursed");
  const std::vector<BandWord> mlayer = mirror_layer_of(x, layer, opts);
  const XuForm mform = classify_from_layer(mlayer);
  const LinkStats mstats = link_stats(mform);
  return top_impl(mform, mstats, &mlayer, opts, false).mirror_reflected();
}

HfkPrediction predict_impl(const XuForm& x, const LinkStats& stats,
                           const std::vector<BandWord>* layer,
                           const SearchOptions& opts, bool allow_mirror) {
  const int g = stats.genus;
  if (x.source.size() <= 1) {
    HfkPrediction pred;
    pred.case_tag = "unlink";
    pred.top = unlink_top(stats.components);
    pred.second = GradedModule(g - 1);
    pred.notes.push_back(x.source.empty() ? "three-component unlink"
                                          : "two-component unlink");
    return pred;
  }
  try {
    switch (x.kind) {
      case XuKind::AlphaDP:
        return predict_positive(x, stats);
      case XuKind::NAlphaD:
        return predict_mirror(x, stats, layer, opts, allow_mirror);
      case XuKind::NP: {
        if (x.N.size() == 1) return predict_single_negative(x, stats);
        if (x.P.size() == 1)
          return predict_mirror(x, stats, layer, opts, allow_mirror);
        return predict_np_general(x, stats);
      }
    }
    throw Error("unreachable dispatch");
  } catch (const Unsupported& e) {
    HfkPrediction pred;
    pred.case_tag = "unsupported";
    pred.supported = false;
    pred.second = GradedModule(g - 1);
    pred.notes.push_back(e.what());
    try {
      pred.top = top_impl(x, stats, layer, opts, allow_mirror);
      pred.notes.push_back("top term still derived");
    } catch (...) {
      pred.top = GradedModule(g);
    }
    return pred;
  } catch (const ZeroAlexander& e) {
    HfkPrediction pred;
    pred.case_tag = "unsupported";
    pred.supported = false;
    pred.second = GradedModule(g - 1);
    pred.notes.push_back(std::string("split closure: ") + e.what());
    try {
      pred.top = top_impl(x, stats, layer, opts, allow_mirror);
      pred.notes.push_back("top term still derived");
    } catch (...) {
      pred.top = GradedModule(g);
    }
    return pred;
  }
}

}  // namespace

int np_top_grading(const BandWord& N, const Syllables& P) {
  if (N.empty()) throw PatternMismatch("empty negative part");
  if (P.runs.empty()) throw PatternMismatch("empty positive part");
  Syllables nsyl;
  try {
    nsyl = syllable_decompose(N, Orientation::Negative);
  } catch (const NotMonotone&) {
    throw PatternMismatch("negative part is not nondecreasing");
  }
  const int tail = P.tail;
  const auto f = [tail](int x) { return x - (x + tail) / 3; };
  const int s = static_cast<int>(ut_reduce(N).size()) / 2;
  const int nstart = N.front().index();
  const int ln = static_cast<int>(N.size());
  if (nstart == succ(P.j)) return P.k - 1 + ln + f(s);
  if (nstart == succ(succ(P.j))) {
    if (s < 1)
      throw PatternMismatch("single-run negative part on the descending branch");
    return P.k - 1 + ln - f(s - 1);
  }
  throw PatternMismatch("negative part starts at the pattern generator");
}

GradedModule top_term(const XuForm& x, const LinkStats& stats,
                      const SearchOptions& opts) {
  return top_impl(x, stats, nullptr, opts, true);
}

HfkPrediction second_term(const XuForm& x, const LinkStats& stats,
                          const SearchOptions& opts) {
  return predict_impl(x, stats, nullptr, opts, true);
}

HfkPrediction predict_hfk(const XuForm& x, const LinkStats& stats,
                          const std::vector<BandWord>* layer,
                          const SearchOptions& opts) {
  return predict_impl(x, stats, layer, opts, true);
}

GradedModule split_torus_second_term(int n) {
  if (n < 1) throw Error("split torus family needs n >= 1");
  const int components = (n % 2 == 0) ? 3 : 2;
  const int prime_factors = (n >= 2) ? 1 : 0;
  const int genus = (components - (3 - n)) / 2;
  GradedModule base =
      GradedModule::f(genus - 1, -1, prime_factors + components - 2);
  const GradedModule factor =
      dirsum(GradedModule::f(0, 0, 1), GradedModule::f(0, -1, 1));
  return tensor(base, factor);
}

GradedModule mirror_transport(const GradedModule& m, int genus) {
  GradedModule out(m.alexander());
  for (const auto& [mm, r] : m.parts()) out.add(2 * (genus - 1) - mm, r);
  return out;
}

ConsistencyReport euler_consistency_check(const HfkPrediction& pred,
                                          const LaurentPoly& delta) {
  ConsistencyReport rep;
  if (delta.is_zero()) {
    rep.detail = "Alexander polynomial is zero";
    return rep;
  }
  const LaurentPoly q = canonicalize_poly(delta);
  const long long eg = pred.top.euler_number();
  const long long eg1 = pred.second.euler_number();
  const Coeff c1 = q.coeff(q.max_exp());
  const Coeff c2 = q.coeff(q.max_exp() - 1);
  std::ostringstream os;
  os << "(e_g, e_{g-1}) = (" << eg << ", " << eg1 << "), top coefficients ("
     << c1 << ", " << c2 << ")";
  if (eg != 0) {
    if ((Coeff(eg) == c1 && Coeff(eg1) == c2) ||
        (Coeff(-eg) == c1 && Coeff(-eg1) == c2)) {
      rep.passed = true;
      rep.detail = os.str();
    } else {
      rep.detail = "mismatch: " + os.str();
    }
    return rep;
  }
  if (eg1 != 0) {
    if (Coeff(eg1) == c1 || Coeff(-eg1) == c1) {
      rep.passed = true;
      rep.detail = os.str() + "; top euler characteristic vanishes, anchored at g-1";
    } else {
      rep.detail = "mismatch (anchored at g-1): " + os.str();
    }
    return rep;
  }
  rep.passed = true;
  rep.detail = "both euler characteristics vanish; no constraint";
  return rep;
}

}  // namespace b3
