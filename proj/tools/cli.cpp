#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "legdet/bigmat.hpp"
#include "legdet/ecount.hpp"
#include "legdet/error.hpp"
#include "legdet/legmat.hpp"

namespace legdet::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { kTable, kJson, kCsv };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<CurveParams> params_from(const std::optional<i64>& c, const std::optional<i64>& d) {
  if (!c && !d) return std::nullopt;
  if (!c) throw UsageError("--d needs --c");
  return CurveParams{*c, d.value_or(1)};
}

u64 require_odd_prime(u64 p) {
  if (p < 3 || !is_prime(p)) throw UsageError(std::to_string(p) + " is not an odd prime");
  return p;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

Json report_json(const VerificationReport& r, bool timing) {
  Json j;
  j["theorem_id"] = to_string(r.theorem);
  j["p"] = r.p;
  if (r.params) j["params"] = {{"c", r.params->c}, {"d", r.params->d}};
  else j["params"] = nullptr;
  j["verdict"] = to_string(r.verdict);
  if (r.skipped()) j["skip_reason"] = to_string(r.skip_reason);
  else j["skip_reason"] = nullptr;
  j["detail"] = r.detail;
  Json w = Json::object();
  for (const auto& [name, value] : r.computed) w[name] = format_witness(value);
  j["witnesses"] = std::move(w);
  if (timing) j["elapsed_s"] = r.elapsed.count();
  return j;
}

void print_table_row(std::ostream& out, const VerificationReport& r) {
  char head[64];
  std::snprintf(head, sizeof head, "%-22s p=%-5llu ", std::string(to_string(r.theorem)).c_str(),
                static_cast<unsigned long long>(r.p));
  out << head;
  if (r.params) out << "(c,d)=(" << r.params->c << "," << r.params->d << ") ";
  if (r.passed()) {
    out << "pass";
    for (const auto& [name, value] : r.computed) out << ' ' << name << '=' << format_witness(value);
  } else if (r.failed()) {
    out << "FAIL " << r.detail;
  } else {
    out << "skipped (" << to_string(r.skip_reason) << ": " << r.detail << ")";
  }
  out << '\n';
}

void print_csv_row(std::ostream& out, const VerificationReport& r) {
  std::string witnesses;
  for (const auto& [name, value] : r.computed) {
    if (!witnesses.empty()) witnesses += ';';
    witnesses += name + "=" + format_witness(value);
  }
  out << to_string(r.theorem) << ',' << r.p << ',';
  if (r.params) out << r.params->c << ',' << r.params->d;
  else out << ',';
  out << ',' << to_string(r.verdict) << ',' << to_string(r.skip_reason) << ','
      << csv_quote(r.detail) << ',' << csv_quote(witnesses) << '\n';
}

struct DetArgs {
  std::string kind;
  u64 p = 0;
  std::optional<i64> c;
  std::optional<i64> d;
  bool full = false;
};

int cmd_det(const DetArgs& args, const SizeCaps& caps, std::ostream& out) {
  auto tag = parse_matrix_tag(args.kind);
  if (!tag) throw UsageError("unknown matrix kind '" + args.kind + "'");
  if (args.full) {
    if (*tag != MatrixTag::kSunCD && *tag != MatrixTag::kSunCDFull) {
      throw UsageError("--full applies to --kind cd only");
    }
    tag = MatrixTag::kSunCDFull;
  }
  const u64 p = require_odd_prime(args.p);
  MatrixKind kind = MatrixKind::simple(*tag);
  if (*tag == MatrixTag::kSunCD || *tag == MatrixTag::kSunCDFull) {
    if (!args.c) throw UsageError("--kind cd needs --c (and optionally --d)");
    kind.params = CurveParams{*args.c, args.d.value_or(1)};
  }
  const u64 cap = is_full_size(*tag) ? caps.full_max_p : caps.reduced_max_p;
  if (p > cap) throw Error(Errc::kSizeCap, "p = " + std::to_string(p) + " is above the cap " + std::to_string(cap));
  const PrimeContext ctx(p);
  const IntMatrix m = build(kind, ctx, static_cast<std::size_t>(p) + 1);
  std::size_t plus = 0, minus = 0, zero = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      const int s = sgn(m(i, j));
      (s > 0 ? plus : s < 0 ? minus : zero) += 1;
    }
  }
  out << "kind: " << to_string(*tag) << "  p: " << p;
  if (kind.params) out << "  (c,d): (" << kind.params->c << "," << kind.params->d << ")";
  out << "  dimension: " << m.size() << '\n';
  out << "entries: +1 " << plus << ", -1 " << minus << ", 0 " << zero << '\n';
  out << "det: " << det_exact(m).get_str() << '\n';
  return 0;
}

struct VerifyArgs {
  std::vector<std::string> theorems;
  std::optional<u64> p;
  u64 pmin = 3;
  std::optional<u64> pmax;
  std::optional<i64> c;
  std::optional<i64> d;
  unsigned workers = 1;
  bool json = false;
  bool csv = false;
  bool timing = false;
};

int cmd_verify(const VerifyArgs& args, const SizeCaps& caps, std::ostream& out) {
  std::vector<TheoremId> ids;
  for (const auto& name : args.theorems) {
    if (name == "all") {
      const auto all = all_theorems();
      ids.insert(ids.end(), all.begin(), all.end());
      continue;
    }
    const auto id = parse_theorem_id(name);
    if (!id) throw UsageError("unknown theorem id '" + name + "'");
    ids.push_back(*id);
  }
  u64 pmin = args.pmin;
  u64 pmax = 0;
  if (args.p) {
    pmin = pmax = require_odd_prime(*args.p);
  } else if (args.pmax) {
    pmax = *args.pmax;
  } else {
    throw UsageError("give --p or --pmax");
  }
  if (pmin == 0 || pmin > pmax) throw UsageError("need 0 < pmin <= pmax");
  if (args.workers == 0) throw UsageError("--workers must be at least 1");
  const auto params = params_from(args.c, args.d);
  const Format format = args.json ? Format::kJson : args.csv ? Format::kCsv : Format::kTable;

  const auto start = std::chrono::steady_clock::now();
  SweepSummary total;
  if (format == Format::kCsv) out << "theorem_id,p,c,d,verdict,skip_reason,detail,witnesses\n";
  for (TheoremId id : ids) {
    const SweepResult res = sweep(id, pmin, pmax, params, {args.workers, caps});
    for (const auto& r : res.reports) {
      switch (format) {
        case Format::kJson: out << report_json(r, args.timing).dump() << '\n'; break;
        case Format::kCsv: print_csv_row(out, r); break;
        case Format::kTable: print_table_row(out, r); break;
      }
    }
    total.passed += res.summary.passed;
    total.failed += res.summary.failed;
    total.skipped += res.summary.skipped;
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (format == Format::kJson) {
    Json s;
    s["summary"] = {{"pass", total.passed}, {"fail", total.failed}, {"skipped", total.skipped}};
    if (args.timing) s["wall_s"] = wall;
    out << s.dump() << '\n';
  } else if (format == Format::kTable) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "summary: %zu pass, %zu fail, %zu skipped in %.2f s\n",
                  total.passed, total.failed, total.skipped, wall);
    out << buf;
  } else if (args.timing) {
    out << "# wall_s=" << wall << '\n';
  }
  return total.failed == 0 ? 0 : 2;
}

struct SearchArgs {
  i64 c = 0;
  i64 d = 1;
  u64 pmin = 5;
  u64 pmax = 1000;
  unsigned workers = 1;
  std::optional<u64> certify_max;
  bool json = false;
};

std::string_view certification_name(Certification c) {
  switch (c) {
    case Certification::kCertified: return "det-certified";
    case Certification::kFailed: return "det-NONZERO";
    case Certification::kNotAttempted: return "";
  }
  return "";
}

int cmd_search(const SearchArgs& args, const SizeCaps& caps, std::ostream& out) {
  if (args.workers == 0) throw UsageError("--workers must be at least 1");
  const CurveParams cd{args.c, args.d};
  SearchOptions options;
  options.workers = args.workers;
  options.certify_max_p = args.certify_max.value_or(caps.full_max_p);
  const auto found = search_supersingular(cd, args.pmin, args.pmax, options);

  std::size_t eligible = 0;
  for (u64 p : primes_in_range(args.pmin, args.pmax)) eligible += cd.is_elliptic_mod(p) ? 1 : 0;
  std::size_t failed = 0;
  for (const auto& hit : found) failed += hit.certification == Certification::kFailed ? 1 : 0;
  const double density = eligible == 0 ? 0.0 : static_cast<double>(found.size()) / static_cast<double>(eligible);

  if (args.json) {
    for (const auto& hit : found) {
      Json j;
      j["c"] = cd.c;
      j["d"] = cd.d;
      j["p"] = hit.p;
      j["certification"] = hit.certification == Certification::kCertified ? "certified"
                           : hit.certification == Certification::kFailed  ? "failed"
                                                                           : "not-attempted";
      out << j.dump() << '\n';
    }
    Json s;
    s["summary"] = {{"found", found.size()}, {"eligible", eligible}, {"density", density}};
    out << s.dump() << '\n';
  } else {
    for (const auto& hit : found) {
      out << hit.p;
      const auto flag = certification_name(hit.certification);
      if (!flag.empty()) out << ' ' << flag;
      out << '\n';
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu supersingular primes among %zu eligible in [%llu, %llu], density %.4f\n",
                  found.size(), eligible, static_cast<unsigned long long>(args.pmin),
                  static_cast<unsigned long long>(args.pmax), density);
    out << buf;
  }
  return failed == 0 ? 0 : 2;
}

}  // namespace

SizeCaps caps_from_env(const char* value) {
  SizeCaps caps;
  if (value == nullptr || *value == '\0') return caps;
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(value, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("LEGDET_MAX_P is not a number: ") + value);
  }
  if (used != std::string(value).size() || v == 0) {
    throw std::invalid_argument(std::string("LEGDET_MAX_P must be a positive integer: ") + value);
  }
  caps.full_max_p = v;
  caps.reduced_max_p = v;
  return caps;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Legendre-symbol determinants and theorem checks", "legdet"};
  app.require_subcommand(1);

  DetArgs det;
  auto* det_cmd = app.add_subcommand("det", "Exact determinant of one matrix");
  det_cmd->add_option("--kind", det.kind, "carlitz, c1, c2, c3, s1, tp, cd, cdfull, w, y")->required();
  det_cmd->add_option("--p", det.p, "Odd prime")->required();
  det_cmd->add_option("--c", det.c, "c for the cd families");
  det_cmd->add_option("--d", det.d, "d for the cd families (default 1)");
  det_cmd->add_flag("--full", det.full, "Index the cd family from 0 instead of 1");

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Check theorems over a prime or a range");
  ver_cmd->add_option("--thm", ver.theorems, "Theorem ids, comma separated, or 'all'")
      ->required()
      ->delimiter(',');
  ver_cmd->add_option("--p", ver.p, "Single prime");
  ver_cmd->add_option("--pmin", ver.pmin, "Range start (default 3)");
  ver_cmd->add_option("--pmax", ver.pmax, "Range end");
  ver_cmd->add_option("--c", ver.c, "Parameter c");
  ver_cmd->add_option("--d", ver.d, "Parameter d (default 1)");
  ver_cmd->add_option("--workers", ver.workers, "Worker threads");
  auto* json_flag = ver_cmd->add_flag("--json", ver.json, "Line-delimited JSON records");
  ver_cmd->add_flag("--csv", ver.csv, "CSV records")->excludes(json_flag);
  ver_cmd->add_flag("--timing", ver.timing, "Include timings in JSON/CSV output");

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search-ss", "Search supersingular primes of y^2 = x(dx^2+cx+1)");
  search_cmd->add_option("--c", search.c, "Parameter c")->required();
  search_cmd->add_option("--d", search.d, "Parameter d (default 1)");
  search_cmd->add_option("--pmin", search.pmin, "Range start (default 5)");
  search_cmd->add_option("--pmax", search.pmax, "Range end (default 1000)");
  search_cmd->add_option("--workers", search.workers, "Worker threads");
  search_cmd->add_option("--certify-max", search.certify_max,
                         "Certify det [c,d]_p = 0 for p up to this (default: full-size cap)");
  search_cmd->add_flag("--json", search.json, "Line-delimited JSON records");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    const SizeCaps caps = caps_from_env(std::getenv("LEGDET_MAX_P"));
    if (*det_cmd) return cmd_det(det, caps, out);
    if (*ver_cmd) return cmd_verify(ver, caps, out);
    return cmd_search(search, caps, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace legdet::cli
