#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "latcover/catalog.hpp"
#include "latcover/covering.hpp"
#include "latcover/forms.hpp"
#include "latcover/groebner.hpp"
#include "latcover/modular.hpp"

namespace latcover::cli {

namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::string format = "text";
  unsigned threads = 1;
  std::string out_path;
  std::string in_path;
  int slots = 6;
  bool raw_count = false;
  int modulus = 0;  // 0: every modulus
  std::string coeffs, conj = "1,0;0,1", variant = "d3";
  std::string f, g;
  std::int64_t n = 10;
  std::int64_t m = -1;  // -1: default 6n
};

std::string timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

unsigned effective_threads(unsigned flag) {
  if (const char* env = std::getenv("LATTICE_COVER_THREADS"); env && *env) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 1024)
      throw std::invalid_argument(std::string("LATTICE_COVER_THREADS must be a positive integer, got '") + env + "'");
    return static_cast<unsigned>(v);
  }
  return flag == 0 ? 1 : flag;
}

// Collects the reports of one command and renders them.
struct Output {
  std::string command;
  unsigned threads = 1;
  std::vector<Json> reports;
  std::vector<std::string> text;
  Json extra = Json::object();
  bool passed = true;

  void add(const Report& r) {
    passed = passed && r.passed();
    reports.push_back(r.to_json());
    text.push_back(r.to_text());
  }
  void add(const ScanReport& r) {
    passed = passed && r.passed();
    reports.push_back(r.to_json());
    text.push_back(r.to_text());
  }

  void render(std::ostream& out, const std::string& format) const {
    if (format == "json") {
      Json j;
      j["command"] = command;
      j["timestamp"] = timestamp();
      j["threads"] = threads;
      j["passed"] = passed;
      for (const auto& [k, v] : extra.items()) j[k] = v;
      j["reports"] = reports;
      out << j.dump(2) << "\n";
      return;
    }
    for (const std::string& t : text) out << t;
    if (!reports.empty()) out << (passed ? "ALL CHECKS PASSED\n" : "SOME CHECKS FAILED\n");
  }
};

Catalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_catalog(ss.str());
}

Report raw_count_report(std::size_t raw) {
  Report r;
  r.title = "search output";
  r.add("raw_solution_count", raw == 6131, "found " + std::to_string(raw) + ", expected 6131");
  return r;
}

void run_enumerate(const RunConfig& cfg, Output& o, std::ostream& out) {
  const EnumerationResult res = enumerate_minimal_coverings(o.threads);
  const Catalog cat = build_catalog(res, o.threads);
  std::map<std::size_t, std::size_t> by_len;
  for (const CatalogEntry& e : cat.entries) ++by_len[e.length()];

  if (!cfg.out_path.empty()) {
    std::ofstream f(cfg.out_path);
    if (!f) throw std::runtime_error("cannot write " + cfg.out_path);
    f << serialize(cat);
  }
  if (cfg.format == "json") {
    if (cfg.raw_count) o.extra["raw_count"] = res.raw_count;
    o.extra["minimal_count"] = cat.entries.size();
    for (const auto& [k, v] : by_len) o.extra["by_length"][std::to_string(k)] = v;
    if (cfg.out_path.empty()) {
      o.extra["catalog"] = Json::array();
      for (const CatalogEntry& e : cat.entries) o.extra["catalog"].push_back(serialize(e));
    } else {
      o.extra["out"] = cfg.out_path;
    }
    return;
  }
  if (cfg.raw_count) out << "raw solutions: " << res.raw_count << "\n";
  out << "minimal coverings: " << cat.entries.size() << " (";
  bool first = true;
  for (const auto& [k, v] : by_len) {
    out << (first ? "" : ", ") << "length " << k << ": " << v;
    first = false;
  }
  out << ")\n";
  if (cfg.out_path.empty()) out << serialize(cat);
  else out << "catalog written to " << cfg.out_path << "\n";
}

void modular_reports(int modulus, Output& o) {
  if (modulus == 0 || modulus == 3) {
    o.add(scan_lZxnx(3));
    o.add(scan_triple_vanishing_mod3());
  }
  if (modulus == 0 || modulus == 4) o.add(scan_lZxnx(4));
  if (modulus == 0 || modulus == 5) o.add(scan_lZxnx(5));
  if (modulus == 0 || modulus == 9) {
    for (const ResidueTuple& rep : {ResidueTuple::make(0, 1, 0, 1, 3), ResidueTuple::make(1, 1, 1, 1, 3),
                                    ResidueTuple::make(1, 2, 1, 2, 3)})
      o.add(scan_messfor9(rep));
    o.add(scan_ABCD_mod9());
  }
}

Report forms_report() {
  Report r;
  r.title = "extraordinariness examples";
  const auto verdict = [](const BinaryForm& f, const RatMat2& t, Variant v) {
    return extraordinary_by_C3(f, t, v).extraordinary;
  };
  r.add("F0 extraordinary", verdict(form_F0(), RatMat2::identity(), Variant::D3), "XY(X+Y), Aut = D3");
  r.add("F_{1,0} extraordinary", verdict(sextic(1, 0), sextic_conjugator(), Variant::D6),
        "Aut = T^-1 D6 T with T = diag(1,-1)");
  r.add("XY(X+3Y) not extraordinary", !verdict(parse_form("0,1,3,0"), RatMat2::diag(Rat(1, 3), Rat(1)), Variant::D3),
        "Aut = T^-1 D3 T with T = diag(1/3,1)");
  return r;
}

Variant parse_variant(const std::string& v) {
  if (v == "d3" || v == "D3") return Variant::D3;
  if (v == "d6" || v == "D6") return Variant::D6;
  throw CLI::ValidationError("--variant", "must be d3 or d6");
}

void run_form_check(const RunConfig& cfg, Output& o) {
  const BinaryForm f = parse_form(cfg.coeffs);
  const RatMat2 t = parse_ratmat2(cfg.conj);
  const ExtraordinaryVerdict v = extraordinary_by_C3(f, t, parse_variant(cfg.variant));
  Report r;
  r.title = "form " + to_string(f);
  std::string detail;
  for (std::size_t i = 0; i < v.order3.size(); ++i)
    detail += (detail.empty() ? "" : "; ") + to_string(v.order3[i].matrix) + " case " + to_string(v.cases[i]);
  r.add("conjugation verified", true, "every element of T^-1 G T fixes the form");
  r.add("disc nonzero", discriminant(f) != 0, "disc = " + to_string(discriminant(f)));
  r.data["extraordinary"] = v.extraordinary;
  r.data["order3"] = detail;
  o.extra["extraordinary"] = v.extraordinary;
  o.add(r);
  o.text.back() += std::string("  verdict: ") + (v.extraordinary ? "extraordinary" : "not extraordinary") +
                   " (order-3 elements: " + detail + ")\n";
}

void run_form_compare(const RunConfig& cfg, Output& o) {
  const BinaryForm f = parse_form(cfg.f), g = parse_form(cfg.g);
  const ValueComparison c =
      cross_value_check(f, g, cfg.n, cfg.m < 0 ? std::nullopt : std::optional<std::int64_t>(cfg.m));
  o.add(c.report);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Lattice coverings of Z^2 and the verification scripts around them", "latcover"};
  app.require_subcommand(1);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--threads", cfg.threads, "Worker threads (LATTICE_COVER_THREADS overrides)")
      ->check(CLI::Range(1u, 1024u));

  auto* enumerate = app.add_subcommand("enumerate", "Run the covering search and print the minimal catalog");
  enumerate->add_option("--slots", cfg.slots, "Number of slots (only 6 is supported)")->check(CLI::IsMember({6}));
  enumerate->add_option("--out", cfg.out_path, "Write the catalog to this file");
  enumerate->add_flag("--raw-count", cfg.raw_count, "Also print the pre-prune solution count");

  auto* vcat = app.add_subcommand("verify-catalog", "Check a catalog against the minimal-covering lemmas");
  vcat->add_option("--in", cfg.in_path, "Catalog file (default: regenerate)");

  auto* vmod = app.add_subcommand("verify-modular", "Run the finite congruence scans");
  vmod->add_option("--modulus", cfg.modulus, "3, 4, 5 or 9 (default: all)")->check(CLI::IsMember({3, 4, 5, 9}));

  app.add_subcommand("verify-groebner", "Check ideal membership of 3 for the twenty lemma systems");

  auto* form = app.add_subcommand("form", "Binary form utilities");
  form->require_subcommand(1);
  auto* fcheck = form->add_subcommand("check", "Extraordinariness verdict for F with Aut(F) = T^-1 G T");
  fcheck->add_option("--coeffs", cfg.coeffs, "Coefficients, highest X power first")->required();
  fcheck->add_option("--conj", cfg.conj, "Conjugating matrix T as a,b;c,d");
  fcheck->add_option("--variant", cfg.variant, "d3 or d6")->check(CLI::IsMember({"d3", "d6", "D3", "D6"}));
  auto* fcompare = form->add_subcommand("compare", "Compare value sets on boxes");
  fcompare->add_option("--f", cfg.f, "Coefficients of F")->required();
  fcompare->add_option("--g", cfg.g, "Coefficients of G")->required();
  fcompare->add_option("--n", cfg.n, "Value box radius")->check(CLI::Range(0, 1000));
  fcompare->add_option("--m", cfg.m, "Search box radius (default 6n)")->check(CLI::Range(0, 6000));

  app.add_subcommand("verify-all", "Every acceptance check in one run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  Output o;
  try {
    o.threads = effective_threads(cfg.threads);
    if (enumerate->parsed()) {
      o.command = "enumerate";
      run_enumerate(cfg, o, out);
    } else if (vcat->parsed()) {
      o.command = "verify-catalog";
      if (cfg.in_path.empty()) {
        o.add(verify_lemma_counts(generate_catalog(o.threads)));
      } else {
        o.extra["in"] = cfg.in_path;
        o.add(verify_lemma_counts(load_catalog(cfg.in_path)));
      }
    } else if (vmod->parsed()) {
      o.command = "verify-modular";
      modular_reports(cfg.modulus, o);
    } else if (app.got_subcommand("verify-groebner")) {
      o.command = "verify-groebner";
      o.add(verify_groebner_lemmas());
    } else if (fcheck->parsed()) {
      o.command = "form check";
      run_form_check(cfg, o);
    } else if (fcompare->parsed()) {
      o.command = "form compare";
      run_form_compare(cfg, o);
    } else {
      o.command = "verify-all";
      const EnumerationResult res = enumerate_minimal_coverings(o.threads);
      o.add(raw_count_report(res.raw_count));
      o.add(verify_lemma_counts(build_catalog(res, o.threads)));
      modular_reports(0, o);
      o.add(verify_groebner_lemmas());
      o.add(forms_report());
      o.add(cross_value_check(form_F0(), dagger(form_F0()), 10, 60).report);
    }
  } catch (const CatalogParseError& e) {
    err << "latcover: catalog parse error: " << e.what() << "\n";
    return kExitError;
  } catch (const ForcingListExhausted& e) {
    err << "latcover: " << e.what() << "\n";
    return kExitError;
  } catch (const CLI::ValidationError& e) {
    err << "latcover: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "latcover: " << e.what() << "\n";
    return kExitError;
  }

  if (o.command == "enumerate" && cfg.format == "text") return kExitOk;
  o.render(out, cfg.format);
  return o.passed ? kExitOk : kExitFailed;
}

}  // namespace latcover::cli
