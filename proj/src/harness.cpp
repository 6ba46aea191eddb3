#include "b3/harness.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <unordered_map>

#include "b3/packed_word.hpp"

namespace b3 {

namespace {

Analysis analyze_with_layer(const BandWord& input,
                            const std::vector<BandWord>& layer,
                            const SearchOptions& opts) {
  Analysis a;
  a.input = input;
  a.rep = layer.front();
  a.form = classify_from_layer(layer);
  a.stats = link_stats(a.form);
  a.delta = canonicalize_poly(alexander_poly(a.rep));
  if (!a.delta.is_zero()) a.zeta_value = zeta_of_delta(a.delta);
  a.prediction = predict_hfk(a.form, a.stats, &layer, opts);
  return a;
}

CheckResult check_euler(const Analysis& a) {
  if (!a.prediction.supported) {
    std::string why = a.prediction.notes.empty() ? "no diagnostic"
                                                 : a.prediction.notes.front();
    return {CheckStatus::Skipped, "unsupported dispatch: " + why};
  }
  if (a.delta.is_zero())
    return {CheckStatus::Skipped, "split closure (Delta = 0)"};
  ConsistencyReport r = euler_consistency_check(a.prediction, a.delta);
  return {r.passed ? CheckStatus::Pass : CheckStatus::Fail, r.detail};
}

CheckResult check_mirror(const BandWord& w) {
  const LaurentPoly lhs = canonicalize_poly(alexander_poly(invert_word(w)));
  const LaurentPoly rhs = canonicalize_poly(alexander_poly(w).reciprocal());
  if (lhs == rhs) return {CheckStatus::Pass, ""};
  return {CheckStatus::Fail, "Delta(w^-1)(t) = " + lhs.str() +
                                 " but Delta(w)(t^-1) = " + rhs.str()};
}

CheckResult check_stability(const BandWord& rep, const SearchOptions& opts) {
  // The slack-s representative is already minimal in its ball; re-search from
  // it with slack s+2 and require the same length.
  SearchOptions wide = opts;
  wide.slack = opts.slack + 2;
  const BandWord r = shortest_conjugacy_rep(rep, wide);
  if (r.size() == rep.size()) return {CheckStatus::Pass, ""};
  std::ostringstream os;
  os << "slack " << opts.slack << " gives length " << rep.size() << ", slack "
     << wide.slack << " gives " << r.size();
  return {CheckStatus::Fail, os.str()};
}

CheckResult check_conjugacy(const BandWord& w, const Analysis& base,
                            const SearchOptions& opts) {
  std::mt19937_64 rng(0x9E3779B97F4A7C15ULL ^ pack_word(free_reduce(w)));
  for (int trial = 0; trial < 2; ++trial) {
    BandWord u;
    const int len = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < len; ++i)
      u.push_back(Gen::from_code(static_cast<uint8_t>(rng() % 6)));
    BandWord v = u;
    v.insert(v.end(), w.begin(), w.end());
    const BandWord ui = invert_word(u);
    v.insert(v.end(), ui.begin(), ui.end());

    const LaurentPoly dv = canonicalize_poly(alexander_poly(v));
    if (dv != base.delta)
      return {CheckStatus::Fail,
              "Delta not conjugation-invariant under u = " + render_word(u)};
    ShortestRep sr = shortest_conjugacy_search(v, opts);
    if (sr.rep != base.rep)
      return {CheckStatus::Fail,
              "representative changed under u = " + render_word(u) + ": " +
                  render_word(sr.rep) + " vs " + render_word(base.rep)};
    const XuForm f = classify_from_layer(sr.minimal_layer);
    if (f.kind != base.form.kind || f.d != base.form.d ||
        f.N != base.form.N || f.P != base.form.P)
      return {CheckStatus::Fail,
              "classification changed under u = " + render_word(u)};
  }
  return {CheckStatus::Pass, ""};
}

ValidationReport validate_with_layer(const BandWord& w,
                                     const std::vector<BandWord>& layer,
                                     const std::vector<std::string>& checks,
                                     const SearchOptions& opts) {
  ValidationReport rep;
  rep.word = w;
  std::optional<Analysis> analysis;
  std::string analysis_error;
  try {
    analysis = analyze_with_layer(w, layer, opts);
    rep.case_tag = analysis->prediction.case_tag;
  } catch (const Error& e) {
    analysis_error = e.what();
    rep.case_tag = "error";
  }
  for (const std::string& name : checks) {
    CheckResult r;
    try {
      if (!analysis) {
        r = {CheckStatus::Fail, "pipeline failed: " + analysis_error};
      } else if (name == "euler") {
        r = check_euler(*analysis);
      } else if (name == "mirror") {
        r = check_mirror(w);
      } else if (name == "shortest-stability") {
        r = check_stability(analysis->rep, opts);
      } else if (name == "conjugacy-invariance") {
        r = check_conjugacy(w, *analysis, opts);
      } else {
        r = {CheckStatus::Fail, "unknown check name"};
      }
    } catch (const Error& e) {
      r = {CheckStatus::Fail, std::string("check raised: ") + e.what()};
    }
    rep.checks.emplace_back(name, std::move(r));
  }
  return rep;
}

}  // namespace

Analysis analyze(const BandWord& w, const SearchOptions& opts) {
  ShortestRep sr = shortest_conjugacy_search(w, opts);
  return analyze_with_layer(w, sr.minimal_layer, opts);
}

void for_each_word(int max_len,
                   const std::function<void(const BandWord&)>& fn) {
  BandWord w;
  fn(w);
  for (int len = 1; len <= max_len; ++len) {
    std::vector<uint8_t> digits(len, 0);
    for (;;) {
      w.clear();
      for (uint8_t d : digits) w.push_back(Gen::from_code(d));
      fn(w);
      int i = len - 1;
      while (i >= 0 && digits[i] == 5) digits[i--] = 0;
      if (i < 0) break;
      ++digits[i];
    }
  }
}

std::vector<BandWord> enumerate_words(int max_len) {
  std::vector<BandWord> out;
  for_each_word(max_len, [&](const BandWord& w) { out.push_back(w); });
  return out;
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    default: return "skipped";
  }
}

bool ValidationReport::all_passed() const {
  for (const auto& [name, r] : checks)
    if (r.status == CheckStatus::Fail) return false;
  return true;
}

ValidationReport validate_word(const BandWord& w,
                               const std::vector<std::string>& checks,
                               const SearchOptions& opts) {
  try {
    ShortestRep sr = shortest_conjugacy_search(w, opts);
    return validate_with_layer(w, sr.minimal_layer, checks, opts);
  } catch (const Error& e) {
    ValidationReport rep;
    rep.word = w;
    rep.case_tag = "error";
    for (const std::string& name : checks)
      rep.checks.emplace_back(
          name, CheckResult{CheckStatus::Fail,
                            std::string("search failed: ") + e.what()});
    return rep;
  }
}

FleetSummary run_fleet(const FleetOptions& opts, std::ostream* progress) {
  const auto t0 = std::chrono::steady_clock::now();
  FleetSummary sum;
  std::unordered_map<PackedWord, uint32_t, PackedWordHash> class_of;
  std::unordered_map<PackedWord, uint32_t, PackedWordHash> rep_to_class;
  uint32_t next_class = 0;
  uint64_t processed = 0;

  auto tally = [&](const ValidationReport& rep) {
    sum.case_tags[rep.case_tag]++;
    bool failed = false;
    for (const auto& [name, r] : rep.checks) {
      switch (r.status) {
        case CheckStatus::Pass: ++sum.checks_passed; break;
        case CheckStatus::Fail: ++sum.checks_failed; failed = true; break;
        case CheckStatus::Skipped:
          ++sum.checks_skipped;
          sum.skip_reasons[name + ": " + r.detail]++;
          break;
      }
    }
    if (failed) sum.failures.push_back(rep);
  };

  for_each_word(opts.max_len, [&](const BandWord& w) {
    ++sum.words_seen;
    if (progress && (++processed & 0xFFFF) == 0)
      *progress << "  ... " << processed << " words, " << sum.classes_seen
                << " classes\r" << std::flush;
    if (!opts.dedup) {
      tally(validate_word(w, opts.checks, opts.search));
      return;
    }
    try {
      const PackedWord key = pack_word(free_reduce(w));
      if (class_of.count(key)) return;
      detail::PackedSearchResult sr =
          detail::packed_conjugacy_search(key, opts.search, opts.max_len);
      const PackedWord rep = sr.layer.front();
      auto [it, fresh] = rep_to_class.try_emplace(
          rep, static_cast<uint32_t>(next_class));
      const uint32_t id = it->second;
      class_of.emplace(key, id);
      for (PackedWord p : sr.collected) class_of.emplace(p, id);
      for (PackedWord p : sr.layer)
        if (packed_len(p) <= opts.max_len) class_of.emplace(p, id);
      if (!fresh) return;  // conjugate of an already-validated class
      ++next_class;
      ++sum.classes_seen;
      std::vector<BandWord> layer;
      layer.reserve(sr.layer.size());
      for (PackedWord p : sr.layer) layer.push_back(unpack_word(p));
      tally(validate_with_layer(w, layer, opts.checks, opts.search));
    } catch (const Error& e) {
      ++sum.classes_seen;
      ValidationReport rep;
      rep.word = w;
      rep.case_tag = "error";
      for (const std::string& name : opts.checks)
        rep.checks.emplace_back(
            name, CheckResult{CheckStatus::Fail,
                              std::string("search failed: ") + e.what()});
      tally(rep);
    }
  });
  if (progress) *progress << std::endl;
  sum.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return sum;
}

namespace {

void strip(std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  const auto e = s.find_last_not_of(" \t\r\n");
  s = (b == std::string::npos) ? std::string() : s.substr(b, e - b + 1);
}

}  // namespace

std::vector<ReferenceRecord> import_reference(std::istream& in) {
  std::vector<ReferenceRecord> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto fail = [lineno](const std::string& msg) {
      throw FormatError("reference table line " + std::to_string(lineno) +
                        ": " + msg);
    };
    std::string s = line;
    strip(s);
    if (s.empty() || s[0] == '#') continue;
    const auto semi = s.find(';');
    if (semi == std::string::npos) fail("missing ';' separator");
    ReferenceRecord rec;
    rec.word_text = s.substr(0, semi);
    strip(rec.word_text);
    try {
      rec.word = parse_word(rec.word_text);
    } catch (const SyntaxError& e) {
      fail(e.what());
    }
    size_t i = semi + 1;
    auto skip_ws = [&] {
      while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    };
    auto read_int = [&](const char* what) -> long long {
      skip_ws();
      const size_t start = i;
      if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
      const size_t digits_start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i == digits_start) fail(std::string("expected integer for ") + what);
      return std::stoll(s.substr(start, i - start));
    };
    skip_ws();
    while (i < s.size()) {
      if (s[i] != '(') fail("expected '('");
      ++i;
      const long long a = read_int("alexander grading");
      skip_ws();
      if (i >= s.size() || s[i] != ',') fail("expected ',' after alexander grading");
      ++i;
      const long long m = read_int("maslov grading");
      skip_ws();
      if (i >= s.size() || s[i] != ',') fail("expected ',' after maslov grading");
      ++i;
      const long long r = read_int("rank");
      skip_ws();
      if (i >= s.size() || s[i] != ')') fail("expected ')'");
      ++i;
      if (r <= 0) fail("rank must be positive");
      for (const auto& [pa, pm, pr] : rec.groups)
        if (pa == a && pm == m) fail("duplicate (alexander, maslov) pair");
      rec.groups.emplace_back(static_cast<int>(a), static_cast<int>(m), r);
      skip_ws();
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<ReferenceRecord> import_reference_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open reference table: " + path);
  return import_reference(in);
}

CompareReport compare_reference(const std::vector<ReferenceRecord>& records,
                                const SearchOptions& opts) {
  CompareReport rep;
  rep.records = records.size();
  for (const ReferenceRecord& rec : records) {
    try {
      const Analysis a = analyze(rec.word, opts);
      const int g = a.stats.genus;
      if (!a.prediction.supported) {
        std::string why = a.prediction.notes.empty()
                              ? "no diagnostic"
                              : a.prediction.notes.front();
        rep.mismatches.push_back(
            {rec.word_text, "prediction unsupported: " + why});
        continue;
      }
      std::map<std::pair<int, int>, long long> expected, got;
      for (const auto& [ga, gm, gr] : rec.groups)
        if (ga == g || ga == g - 1) expected[{ga, gm}] = gr;
      for (const auto& [m, r] : a.prediction.top.parts()) got[{g, m}] = r;
      for (const auto& [m, r] : a.prediction.second.parts())
        got[{g - 1, m}] = r;
      std::ostringstream detail;
      for (const auto& [key, r] : expected) {
        auto it = got.find(key);
        const long long have = it == got.end() ? 0 : it->second;
        if (have != r)
          detail << "(A=" << key.first << ",M=" << key.second
                 << "): predicted rank " << have << ", reference rank " << r
                 << "; ";
      }
      for (const auto& [key, r] : got) {
        if (!expected.count(key))
          detail << "(A=" << key.first << ",M=" << key.second
                 << "): predicted rank " << r << ", reference rank 0; ";
      }
      if (!detail.str().empty())
        rep.mismatches.push_back({rec.word_text, detail.str()});
    } catch (const Error& e) {
      rep.mismatches.push_back(
          {rec.word_text, std::string("pipeline failed: ") + e.what()});
    }
  }
  return rep;
}

}  // namespace b3
