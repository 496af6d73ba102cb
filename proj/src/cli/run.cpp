#include "morita/cli/run.hpp"

#include <CLI11.hpp>

#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "morita/classify.hpp"
#include "morita/error.hpp"
#include "morita/io/json.hpp"
#include "morita/poisson/homology.hpp"
#include "morita/traces.hpp"

namespace morita::cli {

using nlohmann::json;

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Rejection: return "rejection";
  }
  return "fail";
}

json RunReport::to_json() const {
  return {{"command", command},
          {"status", std::string(cli::to_string(status))},
          {"payload", payload},
          {"diagnostics", diagnostics}};
}

namespace {

using morita::to_string;

enum class Format { Json, Csv };

struct Tabular {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void write_csv(std::ostream& out, const Tabular& t) {
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_field(cells[i]);
    out << "\n";
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
}

std::string joined(const std::vector<std::string>& parts, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::vector<std::string> poly_strings(const Poly& p) {
  std::vector<std::string> v;
  for (const auto& c : p.coefficients()) v.push_back(to_string(c));
  return v;
}

std::vector<Integer> parse_nvec(const std::string& text) {
  std::vector<Integer> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const Rational r = parse_rational(item);
    if (!is_integer(r)) throw Error(Errc::InvalidArgument, "--nvec entries must be integers");
    out.push_back(num(r));
  }
  return out;
}

bool is_usage_error(Errc c) {
  switch (c) {
    case Errc::InvalidArgument:
    case Errc::MalformedFile:
    case Errc::DimensionOdd:
    case Errc::NotSymplectic:
    case Errc::OrderCapExceeded:
    case Errc::ZeroDenominator:
    case Errc::WeightMismatch:
    case Errc::TrivialPartition:
      return true;
    default:
      return false;
  }
}

// --- traces ----------------------------------------------------------------

struct Output {
  RunReport report;
  std::optional<Tabular> table;
};

Output cmd_traces(int n) {
  Output o;
  o.report.command = "traces";
  o.report.payload["n"] = n;
  json rows = json::array();
  Tabular t{{"partition", "dim", "F", "G", "a"}, {}};
  for (const auto& lambda : nontrivial_partitions(n)) {
    const Poly f = content_polynomial(lambda);
    const RationalFunction g = g_function(lambda);
    const auto a = a_coefficients(lambda);
    json aj = json::array();
    std::vector<std::string> as;
    for (const auto& v : a) {
      aj.push_back(io::to_json(v));
      as.push_back(v.str());
    }
    rows.push_back({{"partition", io::to_json(lambda)},
                    {"dim", io::to_json(dimension(lambda))},
                    {"F", io::to_json(f)},
                    {"G", io::to_json(g)},
                    {"a", aj}});
    t.rows.push_back({io::to_json(lambda).dump(), dimension(lambda).str(), joined(poly_strings(f)),
                      to_string(g), joined(as)});
  }
  o.report.payload["rows"] = rows;
  o.table = std::move(t);
  return o;
}

// --- verify ----------------------------------------------------------------

// One row per n: {n, checked, pass, detail}.
Output cmd_verify(const std::string& check, int max_n) {
  Output o;
  o.report.command = "verify " + check;
  o.report.payload["check"] = check;
  o.report.payload["max_n"] = max_n;
  json rows = json::array();
  Tabular t{{"n", "checked", "pass", "detail"}, {}};

  for (int n = 2; n <= max_n; ++n) {
    long checked = 0;
    bool pass = true;
    std::string detail;
    try {
      if (check == "divisibility") {
        const Integer scale = Integer(n) * (n - 1);
        for (const auto& lambda : nontrivial_partitions(n))
          for (const auto& a : a_coefficients(lambda)) {
            ++checked;
            if (a % scale != 0) {
              pass = false;
              detail = "a = " + a.str() + " for " + to_string(lambda) + " not divisible by " + scale.str();
            }
          }
      } else if (check == "sum-identity") {
        const auto r = verify_sum_identity(n);
        checked = 1;
        pass = r.pass;
        detail = r.detail;
      } else if (check == "triangularity") {
        const ZMatrix h = hook_matrix(n);
        for (Eigen::Index m = 0; m < h.rows(); ++m)
          for (Eigen::Index k = 0; k <= m; ++k) {
            ++checked;
            const bool ok = k < m ? h(m, k) == 0 : h(m, k) != 0;
            if (!ok) {
              pass = false;
              detail = "hook row " + std::to_string(m + 1) + " column " + std::to_string(k + 1);
            }
          }
        invert_hook_matrix(n);  // throws if the inverse does not recombine
      } else if (check == "routes") {
        for (const auto& lambda : nontrivial_partitions(n)) {
          a_coefficients(lambda);  // throws on any disagreement
          checked += n - 1;
        }
      }
    } catch (const Error& e) {
      pass = false;
      detail = e.what();
    }
    if (!pass) o.report.fail("n = " + std::to_string(n) + ": " + detail);
    rows.push_back({{"n", n}, {"checked", checked}, {"pass", pass}, {"detail", detail}});
    t.rows.push_back({std::to_string(n), std::to_string(checked), pass ? "true" : "false", detail});
  }
  o.report.payload["rows"] = rows;
  o.table = std::move(t);
  return o;
}

// --- classify --------------------------------------------------------------

Output cmd_classify(int n, const std::string& nvec) {
  Output o;
  o.report.command = "classify";
  const auto v = KTheoryVector::from_coords(n, parse_nvec(nvec));
  const auto data = build_f(v);
  json a = json::array();
  for (const auto& x : data.a) a.push_back(io::to_json(x));
  o.report.payload = {{"n", n}, {"nvec", io::to_json(v)}, {"a", a}, {"f", io::to_json(data.f)}};

  const auto remark = remark_identity_check(v);
  o.report.payload["remark_identity"] = {{"pass", remark.pass}, {"detail", remark.detail}};
  if (!remark.pass) o.report.fail(remark.detail);

  const Derivation d = derive_relation(v);
  if (const auto* rels = std::get_if<std::vector<Relation>>(&d)) {
    json rj = json::array();
    for (const auto& r : *rels) rj.push_back(io::to_json(r));
    o.report.payload["relations"] = rj;
  } else {
    const auto& rej = std::get<Rejection>(d);
    o.report.payload["rejection"] = io::to_json(rej);
    if (o.report.status == Status::Pass) o.report.status = Status::Rejection;
    o.report.diagnostics.push_back("rejected: " + std::string(to_string(rej.reason)));
  }
  return o;
}

Output cmd_classify_search(int n, int bound) {
  Output o;
  o.report.command = "classify search";
  const auto found = search_relations(n, bound);
  json rels = json::array();
  for (const auto& [rel, witnesses] : found) {
    bool consistent = true;
    json wj = json::array();
    for (const auto& w : witnesses) {
      if (kostka_shift(w) != rel.s) consistent = false;
      json coords = json::array();
      for (const auto& c : w.coords()) coords.push_back(io::to_json(c));
      wj.push_back(coords);
    }
    if (!consistent) o.report.fail("shift of " + to_string(rel) + " disagrees with sum K n");
    json rj = io::to_json(rel);
    rj["kostka_consistent"] = consistent;
    rj["witness_count"] = witnesses.size();
    rj["witnesses"] = wj;
    rels.push_back(rj);
  }
  json basis = json::array();
  for (const auto& p : nontrivial_partitions(n)) basis.push_back(io::to_json(p));
  o.report.payload = {{"n", n}, {"bound", bound}, {"basis", basis}, {"relations", rels}};
  return o;
}

// --- iso-obstruction -------------------------------------------------------

Output cmd_iso(int n, long l_min, long l_max) {
  Output o;
  o.report.command = "iso-obstruction";
  json rows = json::array();
  Tabular t{{"l", "sign", "value", "expected", "pass"}, {}};
  for (long l = l_min; l <= l_max; ++l)
    for (int sign : {1, -1}) {
      const Rational value = iso_obstruction(n, l, sign);
      Rational expected = Rational(factorial(static_cast<unsigned>(n - 1)));
      const Rational base = Rational(-sign) * n * l;
      for (int i = 0; i < n; ++i) expected *= base;
      const bool pass = value == expected && ((value != 0) == (l != 0));
      if (!pass) o.report.fail("l = " + std::to_string(l) + ", sign = " + std::to_string(sign));
      rows.push_back({{"l", l}, {"sign", sign}, {"value", io::to_json(value)},
                      {"expected", io::to_json(expected)}, {"pass", pass}});
      t.rows.push_back({std::to_string(l), std::to_string(sign), to_string(value), to_string(expected),
                        pass ? "true" : "false"});
    }
  o.report.payload = {{"n", n}, {"l_min", l_min}, {"l_max", l_max}, {"rows", rows}};
  o.table = std::move(t);
  return o;
}

// --- hp0 -------------------------------------------------------------------

Output cmd_hp0(const std::string& path, int max_degree, bool dual_check) {
  Output o;
  o.report.command = "hp0";
  const auto spec = io::parse_group_file(path);
  const auto action = poisson::close_group(spec.generators, spec.form);
  const auto dims = poisson::hp0_dims(action, max_degree);
  o.report.payload = io::to_json(dims);
  o.report.payload["group_order"] = action.order();
  if (!dims.stabilized()) o.report.diagnostics.push_back("dims have not visibly stabilized by the cutoff");
  if (dual_check) {
    const auto d = poisson::duality_check(action, max_degree);
    o.report.payload["dual_check"] = {{"pass", d.pass},
                                      {"invariant_pass", d.invariant_pass},
                                      {"functional_solutions", d.solutions},
                                      {"invariant_functional_solutions", d.invariant_solutions}};
    if (!d.pass) o.report.fail("graded dims differ from functional-equation solution counts");
  }
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact trace, K-theory and Poisson homology computations for rational Cherednik algebras of S_n",
               "morita"};
  app.require_subcommand(1);

  std::function<Output()> job;
  Format format = Format::Json;
  const std::map<std::string, Format> formats{{"json", Format::Json}, {"csv", Format::Csv}};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json (default) or csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  int n = 0, max_n = 8, bound = 0, max_degree = 0;
  long l_min = -5, l_max = 5;
  std::string nvec, group, check;
  bool dual = false;

  auto* traces = app.add_subcommand("traces", "content polynomials, G functions and a coefficients");
  traces->add_option("--n", n, "weight n")->required()->check(CLI::Range(1, 40));
  add_format(traces);
  traces->callback([&] { job = [&] { return cmd_traces(n); }; });

  auto* verify = app.add_subcommand("verify", "exact identity suites over n = 2..max-n");
  verify->add_option("check", check, "divisibility | sum-identity | triangularity | routes")
      ->required()
      ->check(CLI::IsMember({"divisibility", "sum-identity", "triangularity", "routes"}));
  verify->add_option("--max-n", max_n, "largest n")->check(CLI::Range(2, 40));
  add_format(verify);
  verify->callback([&] { job = [&] { return cmd_verify(check, max_n); }; });

  auto* classify = app.add_subcommand("classify", "parameter relation forced by K-theory data");
  classify->add_option("--n", n, "weight n")->check(CLI::Range(2, 40));
  classify->add_option("--nvec", nvec, "comma-separated n_lambda in descending lexicographic order of the nontrivial partitions");
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--n", n, "weight n")->required()->check(CLI::Range(2, 12));
    sub->add_option("--bound", bound, "box half-width")->required()->check(CLI::NonNegativeNumber);
    sub->callback([&] { job = [&] { return cmd_classify_search(n, bound); }; });
  };
  add_search(classify->add_subcommand("search", "exhaustive search over a box of K-theory vectors"));
  classify->require_subcommand(0, 1);
  classify->callback([&] {
    if (job) return;
    if (n == 0 || nvec.empty()) throw CLI::ValidationError("classify needs --n and --nvec (or the search subcommand)");
    job = [&] { return cmd_classify(n, nvec); };
  });
  add_search(app.add_subcommand("classify-search", "same as 'classify search'"));

  auto* iso = app.add_subcommand("iso-obstruction", "evaluate the isomorphism obstruction for l in a range");
  iso->add_option("--n", n, "weight n")->required()->check(CLI::Range(2, 40));
  iso->add_option("--l-min", l_min, "smallest l");
  iso->add_option("--l-max", l_max, "largest l");
  add_format(iso);
  iso->callback([&] {
    if (l_min > l_max) throw CLI::ValidationError("--l-min must not exceed --l-max");
    job = [&] { return cmd_iso(n, l_min, l_max); };
  });

  auto* hp0 = app.add_subcommand("hp0", "graded dimensions of A/{A,A} for a finite symplectic group");
  hp0->add_option("--group", group, "group-action JSON file")->required();
  hp0->add_option("--max-degree", max_degree, "largest degree")->required()->check(CLI::Range(0, 40));
  hp0->add_flag("--dual-check", dual, "compare with the functional-equation solution counts");
  hp0->callback([&] { job = [&] { return cmd_hp0(group, max_degree, dual); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (!job) {
    err << "error: nothing to run\n";
    return kExitUsage;
  }

  Output result;
  try {
    result = job();
  } catch (const Error& e) {
    if (is_usage_error(e.code())) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    }
    result.report.command = "error";
    result.report.fail(e.what());
  } catch (const std::exception& e) {
    result.report.command = "error";
    result.report.fail(e.what());
  }

  if (format == Format::Csv && result.table && result.report.status == Status::Pass) {
    write_csv(out, *result.table);
  } else {
    if (format == Format::Csv && !result.table) err << "note: no tabular form, writing JSON\n";
    out << result.report.to_json().dump(2) << "\n";
  }
  return result.report.status == Status::Pass ? kExitPass : kExitFail;
}

}  // namespace morita::cli
