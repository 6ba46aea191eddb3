#include "b3/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "b3/harness.hpp"

namespace b3 {

namespace {

using Json = nlohmann::ordered_json;

Json poly_json(const LaurentPoly& p) {
  Json arr = Json::array();
  for (const auto& [e, c] : p.terms()) arr.push_back({e, c.str()});
  return arr;
}

Json module_json(const GradedModule& m) {
  Json arr = Json::array();
  for (const auto& [maslov, rank] : m.parts())
    arr.push_back({m.alexander(), maslov, rank});
  return arr;
}

Json record_json(const Analysis& a) {
  Json j;
  j["word"] = render_word(a.input);
  j["xu_kind"] = to_string(a.form.kind);
  j["d"] = a.form.d;
  j["N"] = render_word(a.form.N);
  j["P"] = render_word(a.form.P);
  j["components"] = a.stats.components;
  j["euler"] = a.stats.euler;
  j["genus"] = a.stats.genus;
  j["alexander"] = poly_json(a.delta);
  if (a.zeta_value)
    j["zeta"] = *a.zeta_value;
  else
    j["zeta"] = nullptr;
  j["top"] = module_json(a.prediction.top);
  j["second"] = module_json(a.prediction.second);
  j["case_tag"] = a.prediction.case_tag;
  j["supported"] = a.prediction.supported;
  j["notes"] = a.prediction.notes;
  return j;
}

void print_analysis_text(const Analysis& a, std::ostream& out) {
  out << "word:        " << render_word(a.input) << "\n";
  out << "shortest:    " << render_word(a.rep) << "  (length "
      << a.rep.size() << ")\n";
  out << "xu form:     " << to_string(a.form.kind) << "  d=" << a.form.d
      << "  N=" << render_word(a.form.N) << "  P=" << render_word(a.form.P)
      << "\n";
  out << "link:        components=" << a.stats.components
      << "  euler=" << a.stats.euler << "  genus=" << a.stats.genus << "\n";
  out << "alexander:   " << a.delta.str() << "\n";
  if (a.zeta_value)
    out << "zeta:        " << *a.zeta_value << "\n";
  else
    out << "zeta:        undefined (split closure)\n";
  out << "top:         " << a.prediction.top.str() << "  at A=" << a.stats.genus
      << "\n";
  out << "second:      " << a.prediction.second.str()
      << "  at A=" << a.stats.genus - 1 << "\n";
  out << "case:        " << a.prediction.case_tag;
  if (!a.prediction.supported && a.prediction.case_tag != "unsupported")
    out << "  (unsupported)";
  out << "\n";
  for (const std::string& n : a.prediction.notes) out << "note:        " << n << "\n";
}

struct GlobalFlags {
  std::string format = "text";
  int slack = 2;
  uint64_t cap = 10'000'000;
  SearchOptions search() const { return SearchOptions{slack, cap}; }
  bool json() const { return format == "json"; }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Xu normal forms, Alexander polynomials and knot Floer "
               "homology predictions for closed 3-braids"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags flags;
  app.add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--slack", flags.slack,
                 "Extra length allowed in the conjugacy search")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--cap", flags.cap, "Visited-word cap for the search")
      ->capture_default_str();

  std::string word_text;
  auto* classify = app.add_subcommand("classify", "Xu normal form and link stats");
  classify->add_option("word", word_text, "Braid word, e.g. \"a1 a2^-1\"");

  auto* alex = app.add_subcommand("alexander", "Canonical Alexander polynomial");
  alex->add_option("word", word_text, "Braid word");

  auto* hfk = app.add_subcommand("hfk", "Top and second-to-top Floer groups");
  hfk->add_option("word", word_text, "Braid word");

  int max_len = 6;
  std::string checks_csv = "euler,mirror,shortest-stability,conjugacy-invariance";
  bool no_dedup = false;
  auto* scan = app.add_subcommand("scan", "Property fleet over all words up to a length");
  scan->add_option("--max-len", max_len, "Maximum word length")
      ->required()
      ->check(CLI::NonNegativeNumber);
  scan->add_option("--checks", checks_csv, "Comma-separated check list")
      ->capture_default_str();
  scan->add_flag("--no-dedup", no_dedup,
                 "Validate every word instead of one per conjugacy class");

  std::string ref_path;
  auto* compare = app.add_subcommand("compare", "Compare predictions against a reference table");
  compare->add_option("--ref", ref_path, "Reference table file")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help
      out << app.help() << std::flush;
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const SearchOptions search = flags.search();

  try {
    if (classify->parsed() || alex->parsed() || hfk->parsed()) {
      const BandWord w = parse_word(word_text);
      const Analysis a = analyze(w, search);
      if (classify->parsed() && !flags.json()) {
        out << "word:        " << render_word(a.input) << "\n";
        out << "shortest:    " << render_word(a.rep) << "  (length "
            << a.rep.size() << ")\n";
        out << "xu form:     " << to_string(a.form.kind) << "  d=" << a.form.d
            << "  N=" << render_word(a.form.N)
            << "  P=" << render_word(a.form.P) << "\n";
        out << "link:        components=" << a.stats.components
            << "  euler=" << a.stats.euler << "  genus=" << a.stats.genus
            << "\n";
      } else if (alex->parsed() && !flags.json()) {
        out << "alexander:   " << a.delta.str() << "\n";
        if (a.zeta_value)
          out << "zeta:        " << *a.zeta_value << "\n";
        else
          out << "zeta:        undefined (split closure)\n";
      } else if (hfk->parsed() && !flags.json()) {
        print_analysis_text(a, out);
      } else {
        out << record_json(a).dump(2) << "\n";
      }
      return 0;
    }

    if (scan->parsed()) {
      FleetOptions fopts;
      fopts.max_len = max_len;
      fopts.dedup = !no_dedup;
      fopts.search = search;
      fopts.checks.clear();
      std::stringstream ss(checks_csv);
      std::string item;
      while (std::getline(ss, item, ','))
        if (!item.empty()) fopts.checks.push_back(item);
      const FleetSummary sum = run_fleet(fopts, flags.json() ? nullptr : &err);
      if (flags.json()) {
        Json j;
        j["max_len"] = fopts.max_len;
        j["words"] = sum.words_seen;
        j["classes"] = sum.classes_seen;
        j["passed"] = sum.checks_passed;
        j["failed"] = sum.checks_failed;
        j["skipped"] = sum.checks_skipped;
        j["skip_reasons"] = sum.skip_reasons;
        j["case_tags"] = sum.case_tags;
        Json fails = Json::array();
        for (const auto& f : sum.failures) {
          Json jf;
          jf["word"] = render_word(f.word);
          jf["case_tag"] = f.case_tag;
          Json cs = Json::array();
          for (const auto& [name, r] : f.checks)
            cs.push_back({name, to_string(r.status), r.detail});
          jf["checks"] = cs;
          fails.push_back(jf);
        }
        j["failures"] = fails;
        out << j.dump(2) << "\n";
      } else {
        out << "words:    " << sum.words_seen << "\n";
        out << "classes:  " << sum.classes_seen << "\n";
        out << "checks:   " << sum.checks_passed << " passed, "
            << sum.checks_failed << " failed, " << sum.checks_skipped
            << " skipped\n";
        for (const auto& [reason, n] : sum.skip_reasons)
          out << "  skip (" << n << "): " << reason << "\n";
        out << "cases:\n";
        for (const auto& [tag, n] : sum.case_tags)
          out << "  " << tag << ": " << n << "\n";
        for (const auto& f : sum.failures) {
          out << "FAIL " << render_word(f.word) << " [" << f.case_tag << "]\n";
          for (const auto& [name, r] : f.checks)
            if (r.status == CheckStatus::Fail)
              out << "  " << name << ": " << r.detail << "\n";
        }
        out << "time:     " << sum.seconds << " s\n";
      }
      return sum.checks_failed == 0 ? 0 : 1;
    }

    if (compare->parsed()) {
      const auto records = import_reference_file(ref_path);
      const CompareReport rep = compare_reference(records, search);
      if (flags.json()) {
        Json j;
        j["records"] = rep.records;
        Json mism = Json::array();
        for (const auto& m : rep.mismatches)
          mism.push_back({{"word", m.word}, {"detail", m.detail}});
        j["mismatches"] = mism;
        out << j.dump(2) << "\n";
      } else {
        out << "records:    " << rep.records << "\n";
        out << "mismatches: " << rep.mismatches.size() << "\n";
        for (const auto& m : rep.mismatches)
          out << "MISMATCH " << m.word << ": " << m.detail << "\n";
      }
      return rep.mismatches.empty() ? 0 : 1;
    }
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace b3
