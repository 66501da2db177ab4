#include "cyclefact/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <istream>
#include <iterator>
#include <json.hpp>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "cyclefact/bijection.hpp"
#include "cyclefact/cactus.hpp"
#include "cyclefact/enumeration.hpp"
#include "cyclefact/genfunc.hpp"
#include "cyclefact/io.hpp"
#include "cyclefact/selftest.hpp"

namespace cyclefact {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kDomainFailure = 1;
constexpr int kUsage = 2;

/// Input that could not be read; mapped to the usage exit code.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
auto parse_input(F&& parse) -> decltype(parse()) {
  try {
    return parse();
  } catch (const ParseError& e) {
    throw InputError(e.what());
  } catch (const json::exception& e) {
    throw InputError(std::string("bad JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

using Profiles = std::map<HeadTailProfile, BigInt>;

json profiles_json(const Profiles& profiles) {
  json rows = json::array();
  for (const auto& [profile, count] : profiles)
    rows.push_back({{"heads", profile.heads.to_string()},
                    {"tails", profile.tails.to_string()},
                    {"count", count.str()}});
  return rows;
}

struct MethodResult {
  std::string name;
  BigInt count;
  std::optional<Profiles> profiles;
};

MethodResult run_method(const std::string& method, const TypeVector& alpha, bool with_profiles) {
  const int truncation = std::max(1, alpha.weight());
  MethodResult result{method, 0, std::nullopt};
  if (method == "genfunc") {
    result.count = coefficient_of(xi_series(truncation), alpha);
    if (with_profiles) {
      Profiles p = profile_coefficients(g_series(truncation), alpha);
      result.profiles = std::move(p);
    }
  } else if (method == "trees") {
    result.count = count_trees(alpha);
    if (with_profiles)
      result.profiles = count_by_profile(alpha);
  } else {
    const int n = alpha.weight() + 1;
    const auto classes = brute_force_classes(alpha, n, {oracle_cap_from_env(), true});
    result.count = classes.size();
    if (with_profiles) {
      Profiles p;
      for (const auto& f : classes)
        p[heads_and_tails(f).profile] += 1;
      result.profiles = std::move(p);
    }
  }
  return result;
}

int cmd_count(const std::string& alpha_text, const std::string& method, bool with_profiles, bool as_json,
              std::ostream& out, std::ostream& err) {
  const TypeVector alpha = parse_input([&] { return parse_type_vector(alpha_text); });
  const int n = alpha.weight() + 1;

  std::vector<MethodResult> results;
  std::string skipped;
  if (method == "all") {
    results.push_back(run_method("genfunc", alpha, with_profiles));
    results.push_back(run_method("trees", alpha, with_profiles));
    const int cap = oracle_cap_from_env();
    if (n <= cap)
      results.push_back(run_method("oracle", alpha, with_profiles));
    else
      skipped = "oracle skipped, n=" + std::to_string(n) + " above cap " + std::to_string(cap);
  } else {
    try {
      results.push_back(run_method(method, alpha, with_profiles));
    } catch (const OracleTooLarge& e) {
      err << "error: " << e.what() << '\n';
      return kDomainFailure;
    }
  }

  bool agree = true;
  for (const auto& r : results)
    agree = agree && r.count == results.front().count && r.profiles == results.front().profiles;

  if (as_json) {
    json doc{{"alpha", alpha.to_string()}, {"n", n}, {"agree", agree}};
    json methods = json::object();
    for (const auto& r : results)
      methods[r.name] = r.count.str();
    doc["methods"] = methods;
    if (agree)
      doc["count"] = results.front().count.str();
    if (!skipped.empty())
      doc["note"] = skipped;
    if (with_profiles) {
      json by_method = json::object();
      for (const auto& r : results)
        by_method[r.name] = profiles_json(*r.profiles);
      doc["profiles"] = agree ? profiles_json(*results.front().profiles) : by_method;
    }
    out << doc.dump(2) << '\n';
  } else {
    if (!agree) {
      out << "mismatch:";
      for (const auto& r : results)
        out << ' ' << r.name << '=' << r.count.str();
      out << '\n';
    } else {
      out << results.front().count.str();
      if (results.size() > 1) {
        out << " (";
        for (std::size_t i = 0; i < results.size(); ++i)
          out << (i ? ", " : "") << results[i].name;
        out << " agree" << (skipped.empty() ? "" : "; " + skipped) << ')';
      }
      out << '\n';
      if (with_profiles)
        for (const auto& [profile, count] : *results.front().profiles)
          out << profile.to_string() << ' ' << count.str() << '\n';
    }
  }
  return agree ? kOk : kDomainFailure;
}

int cmd_enumerate(const std::string& alpha_text, const std::string& format, bool as_json, std::ostream& out) {
  const TypeVector alpha = parse_input([&] { return parse_type_vector(alpha_text); });
  json rows = json::array();
  for_each_tree(alpha, [&](const PlaneTree& tree) {
    if (format == "tree") {
      if (as_json)
        rows.push_back(tree_to_json(tree));
      else
        out << tree_to_json(tree).dump() << '\n';
    } else {
      const std::string text = tree_to_factorization(tree).to_string();
      if (as_json)
        rows.push_back(text);
      else
        out << text << '\n';
    }
  });
  if (as_json)
    out << json{{"alpha", alpha.to_string()}, {"n", alpha.weight() + 1}, {"classes", rows}}.dump(2) << '\n';
  return kOk;
}

int check_multiset(const std::string& text, std::optional<int> n_opt, bool as_json, std::ostream& out) {
  const auto cycles = parse_input([&] { return parse_multiset(text); });
  int n = 1;
  for (const auto& c : cycles)
    n = std::max(n, c.max_point());
  if (n_opt) {
    if (*n_opt < n)
      throw InputError("--n is smaller than the largest point");
    n = *n_opt;
  }
  const ArrangeabilityReport report = is_arrangeable(cycles, n);
  std::optional<Factorization> arranged;
  if (report.ok())
    arranged = canonical_form(arrange(cycles, n));
  if (as_json) {
    json doc{{"kind", "multiset"}, {"n", n}, {"arrangeable", report.ok()},
             {"violated", report.violated()}, {"diagnosis", report.describe()}};
    if (arranged)
      doc["factorization"] = arranged->to_string();
    out << doc.dump(2) << '\n';
  } else {
    out << report.describe();
    if (arranged)
      out << "; arranges to " << arranged->to_string();
    out << '\n';
  }
  return report.ok() ? kOk : kDomainFailure;
}

int check_factorization(const std::string& text, std::optional<int> n_opt, bool as_json, std::ostream& out) {
  const Factorization f = parse_input([&] { return parse_factorization(text, n_opt); });
  const Permutation value = evaluate(f);
  const Permutation target = Permutation::ncycle(f.n());
  const bool minimal = is_minimal_ncycle_factorization(f);
  const TypeVector alpha = type_of(f);
  std::optional<HeadsAndTails> ht;
  if (minimal)
    ht = heads_and_tails(f);

  if (as_json) {
    json doc{{"kind", "factorization"}, {"n", f.n()},          {"evaluates_to", value.to_string()},
             {"is_ncycle", value == target}, {"minimal", minimal}, {"type", alpha.to_string()}};
    if (ht) {
      doc["heads"] = format_multiset(ht->heads);
      doc["tails"] = format_multiset(ht->tails);
      doc["profile"] = {{"heads", ht->profile.heads.to_string()}, {"tails", ht->profile.tails.to_string()}};
      doc["canonical"] = canonical_form(f).to_string();
    }
    out << doc.dump(2) << '\n';
  } else {
    out << "evaluates to " << value.to_string() << "; ";
    if (ht) {
      out << "minimal; heads=" << ht->heads.size() << " tails=" << ht->tails.size() << '\n';
      out << "type " << alpha.to_string() << '\n';
      out << "heads " << format_multiset(ht->heads) << '\n';
      out << "tails " << format_multiset(ht->tails) << '\n';
      out << "canonical " << canonical_form(f).to_string() << '\n';
    } else if (value == target) {
      out << "not minimal (type " << alpha.to_string() << ")\n";
    } else {
      out << "not a factorization of " << target.to_string() << '\n';
    }
  }
  return minimal ? kOk : kDomainFailure;
}

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

int cmd_check(const std::string& input, std::optional<int> n_opt, bool as_json, std::ostream& out) {
  const std::string text = trim(input);
  if (!text.empty() && text.front() == '{')
    return check_multiset(text, n_opt, as_json, out);
  return check_factorization(text, n_opt, as_json, out);
}

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

int cmd_convert(const std::string& input, const std::string& from, const std::string& to,
                std::optional<int> n_opt, bool as_json, std::istream& in, std::ostream& out,
                std::ostream& err) {
  const std::string text = trim(input == "-" ? read_all(in) : input);
  PlaneTree tree;
  if (from == "fact") {
    const Factorization f = parse_input([&] { return parse_factorization(text, n_opt); });
    if (!is_minimal_ncycle_factorization(f)) {
      err << "error: " << f.to_string() << " is not a minimal factorization of "
          << Permutation::ncycle(f.n()).to_string() << '\n';
      return kDomainFailure;
    }
    tree = factorization_to_tree(f);
  } else if (from == "tree") {
    tree = parse_input([&] { return tree_from_json(json::parse(text)); });
  } else {
    const Cactus cactus = parse_input([&] { return cactus_from_json(json::parse(text)); });
    tree = cactus_to_tree(cactus);
  }

  if (to == "fact") {
    const Factorization f = tree_to_factorization(tree);
    if (as_json)
      out << json{{"n", f.n()}, {"factorization", f.to_string()}}.dump(2) << '\n';
    else
      out << f.to_string() << '\n';
  } else if (to == "tree") {
    out << tree_to_json(tree).dump(2) << '\n';
  } else if (to == "cactus") {
    out << cactus_to_json(tree_to_cactus(tree)).dump(2) << '\n';
  } else {
    const std::string dot = to == "dot" ? tree_to_dot(tree) : cactus_to_dot(tree_to_cactus(tree));
    if (as_json)
      out << json{{"dot", dot}}.dump(2) << '\n';
    else
      out << dot;
  }
  return kOk;
}

int cmd_series(const std::string& which, int weight, bool as_json, std::ostream& out) {
  const MultiSeries series = which == "xi"  ? xi_series(weight)
                             : which == "f" ? f_series(weight).f
                                            : g_series(weight);
  if (as_json)
    out << series_to_json(series).dump(2) << '\n';
  else
    out << series.to_string() << '\n';
  return kOk;
}

int cmd_selftest(int max_weight, bool as_json, std::ostream& out) {
  SelfTestOptions options;
  options.max_weight = max_weight;
  options.oracle_cap = oracle_cap_from_env();
  std::ostringstream log;
  const auto checks = run_selftest(options, log);
  const bool passed = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
  if (as_json) {
    json rows = json::array();
    for (const auto& c : checks)
      rows.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}, {"seconds", c.seconds}});
    out << json{{"max_weight", max_weight}, {"passed", passed}, {"checks", rows}}.dump(2) << '\n';
  } else {
    out << log.str() << (passed ? "selftest passed" : "selftest FAILED") << '\n';
  }
  return passed ? kOk : kDomainFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inequivalent minimal factorizations of the n-cycle (1 2 ... n)", "cyclefact"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");

  std::string alpha_text;
  std::string method = "genfunc";
  bool with_profiles = false;
  auto* count = app.add_subcommand("count", "Count inequivalent factorizations of a type, e.g. a2=3,a3=1");
  count->add_option("alpha", alpha_text, "Type vector")->required();
  count->add_option("--method", method, "Counting route")
      ->check(CLI::IsMember({"genfunc", "trees", "oracle", "all"}));
  count->add_flag("--profiles", with_profiles, "Break the count down by head/tail profile");
  count->add_flag("--json", as_json, "Machine-readable output");

  std::string format = "fact";
  auto* enumerate = app.add_subcommand("enumerate", "List one canonical factorization per class");
  enumerate->add_option("alpha", alpha_text, "Type vector")->required();
  enumerate->add_option("--format", format, "Output form")->check(CLI::IsMember({"fact", "tree"}));
  enumerate->add_flag("--json", as_json, "Machine-readable output");

  std::string check_text;
  std::optional<int> n_opt;
  auto* check = app.add_subcommand("check", "Evaluate a factorization or diagnose a multiset {(..),(..)}");
  check->add_option("input", check_text, "Cycle text")->required();
  check->add_option("--n", n_opt, "Ambient size")->check(CLI::PositiveNumber);
  check->add_flag("--json", as_json, "Machine-readable output");

  std::string input = "-";
  std::string from = "fact";
  std::string to = "tree";
  auto* convert = app.add_subcommand("convert", "Convert between factorization, tree and cactus forms");
  convert->add_option("input", input, "Input text, or - for stdin");
  convert->add_option("--from", from, "Input form")->check(CLI::IsMember({"fact", "tree", "cactus"}));
  convert->add_option("--to", to, "Output form")
      ->check(CLI::IsMember({"fact", "tree", "cactus", "dot", "cactus-dot"}));
  convert->add_option("--n", n_opt, "Ambient size for factorization input")->check(CLI::PositiveNumber);
  convert->add_flag("--json", as_json, "Machine-readable output");

  std::string which = "xi";
  int weight = 3;
  auto* series = app.add_subcommand("series", "Print a truncated generating function");
  series->add_option("which", which, "xi, f or g")->check(CLI::IsMember({"xi", "f", "g"}));
  series->add_option("--weight", weight, "Truncation weight")->check(CLI::Range(1, 12));
  series->add_flag("--json", as_json, "Machine-readable output");

  int max_weight = 4;
  auto* selftest = app.add_subcommand("selftest", "Cross-check all counting routes and bijections");
  selftest->add_option("--max-weight", max_weight, "Largest <alpha> checked")->check(CLI::Range(1, 6));
  selftest->add_flag("--json", as_json, "Machine-readable output");

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i)
    args.emplace_back(argv[i]);
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*count)
      return cmd_count(alpha_text, method, with_profiles, as_json, out, err);
    if (*enumerate)
      return cmd_enumerate(alpha_text, format, as_json, out);
    if (*check)
      return cmd_check(check_text, n_opt, as_json, out);
    if (*convert)
      return cmd_convert(input, from, to, n_opt, as_json, in, out, err);
    if (*series)
      return cmd_series(which, weight, as_json, out);
    return cmd_selftest(max_weight, as_json, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomainFailure;
  }
}

}  // namespace cyclefact
