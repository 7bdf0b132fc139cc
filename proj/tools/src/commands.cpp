#include "commands.hpp"

#include "bollobas/certificate.hpp"
#include "bollobas/constructions.hpp"
#include "bollobas/errors.hpp"
#include "bollobas/events.hpp"
#include "bollobas/exact.hpp"
#include "bollobas/io.hpp"
#include "bollobas/rng.hpp"
#include "bollobas/search.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <optional>
#include <sstream>

namespace bollobas::cli {

namespace {

struct UsageError : Error {
  using Error::Error;
};

struct Globals {
  std::string input;
  std::uint64_t seed = 0;
  std::string output = "-";
  std::string format = "json";
  bool timing = false;
};

struct Outcome {
  Json results;
  std::string verdict;
  int code = kPass;
};

struct Input {
  std::string bytes;
  Json doc;
};

Input load_input(const Globals& g, std::istream& in) {
  if (g.input.empty()) throw UsageError("this command needs --input <path|->");
  Input out;
  if (g.input == "-") {
    out.bytes.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream f(g.input, std::ios::binary);
    if (!f) throw UsageError("cannot open input '" + g.input + "'");
    out.bytes.assign(std::istreambuf_iterator<char>(f), {});
  }
  try {
    out.doc = Json::parse(out.bytes);
  } catch (const Json::parse_error& e) {
    throw ParseError(g.input + ": " + e.what());
  }
  return out;
}

// Reports from `construct` can be fed straight back in.
const Json& unwrap(const Json& doc, const char* key) {
  if (doc.is_object() && doc.contains("results") && doc["results"].is_object() &&
      doc["results"].contains(key)) {
    return doc["results"][key];
  }
  return doc;
}

TupleType parse_type(const std::string& text) {
  std::vector<int> sizes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      sizes.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad tuple type '" + text + "': expected comma-separated integers");
    }
  }
  return TupleType(std::move(sizes));
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::exception&) {
    throw UsageError("bad range '" + text + "': expected a or a..b");
  }
}

Outcome cmd_verify(const Json& doc, const std::string& mode) {
  const Family f = family_from_json(unwrap(doc, "family"));
  const SystemCheck check = mode == "skew" ? is_skew_bollobas(f) : is_bollobas(f);
  Json results{{"mode", mode}, {"n", f.n()}, {"d", f.arity()}, {"size", f.size()}, {"check", to_json(check)}};
  return {std::move(results), check ? "pass" : "violation", check ? kPass : kViolation};
}

Outcome cmd_sum(const Json& doc, const std::string& which) {
  const Family f = family_from_json(unwrap(doc, "family"));
  Rational value;
  Rational bound = 1;
  std::string hypothesis;
  bool holds = false;
  if (which == "conjecture") {
    value = bollobas_sum(f);
    bound = recursive_bound(f.n(), f.arity());
    hypothesis = "bollobas";
    holds = static_cast<bool>(is_bollobas(f));
  } else if (which == "skew") {
    value = skew_sum(f);
    hypothesis = "skew";
    holds = static_cast<bool>(is_skew_bollobas(f));
  } else {
    value = pair_weighted_sum(f);
    hypothesis = "skew";
    holds = static_cast<bool>(is_skew_bollobas(f));
  }
  const bool within = value <= bound;
  Json results{{"which", which},
               {"n", f.n()},
               {"d", f.arity()},
               {"size", f.size()},
               {"value", to_string(value)},
               {"value_decimal", to_decimal(value, 6)},
               {"bound", to_string(bound)},
               {"hypothesis", {{"system", hypothesis}, {"holds", holds}}}};
  if (which == "conjecture") results["exceeds_one"] = value > 1;
  return {std::move(results), within ? "within-bound" : "exceeds-bound", within ? kPass : kViolation};
}

struct ConstructArgs {
  std::string kind;
  std::string type;
  int n = 0;
  int d = 3;
  std::size_t target = 16;
  std::string system = "skew";
  bool lift = false;
  int ambient = 0;
};

Outcome cmd_construct(const ConstructArgs& a, std::uint64_t seed) {
  std::optional<Family> f;
  if (a.kind == "example1") {
    if (a.type.empty()) throw UsageError("construct example1 needs --type");
    f = example1(parse_type(a.type));
  } else if (a.kind == "example2") {
    if (a.n < 1) throw UsageError("construct example2 needs --n >= 1");
    f = example2(a.n);
  } else {
    if (a.n < 1) throw UsageError("construct random needs --n >= 1");
    RandomFamilyOptions opts;
    opts.arity = a.d;
    if (!a.type.empty()) {
      opts.type = parse_type(a.type);
      opts.arity = opts.type->arity();
    }
    opts.seed = derive_seed(seed, "construct");
    opts.target = a.target;
    f = a.system == "bollobas" ? random_bollobas_family(GroundSet(a.n), opts)
                               : random_skew_family(GroundSet(a.n), opts);
  }
  Json results{{"kind", a.kind}, {"size", f->size()}};
  if (a.lift || a.ambient > 0) {
    const auto s = lift_to_spaces(*f, a.ambient > 0 ? std::optional<int>(a.ambient) : std::nullopt);
    results["subspace_family"] = to_json(s);
  } else {
    results["family"] = to_json(*f);
  }
  return {std::move(results), "pass", kPass};
}

struct SearchArgs {
  int n = 0;
  std::string type;
  std::string mode = "bollobas";
  std::uint64_t node_budget = 0;
  bool exhaustive = false;
};

Outcome cmd_search(const SearchArgs& a) {
  if (a.type.empty()) throw UsageError("search needs --type");
  const TupleType t = parse_type(a.type);
  SearchOptions opts;
  opts.node_budget = a.node_budget;
  opts.stop_at_bound = !a.exhaustive;
  const GroundSet ground(a.n);
  const SearchResult r = a.mode == "skew" ? max_skew_uniform(ground, t, opts) : max_bollobas_uniform(ground, t, opts);
  Json results = to_json(r);
  results["mode"] = a.mode;
  results["n"] = a.n;
  results["type"] = t.sizes();
  results["tight"] = BigInteger(r.max_size) == r.bound;
  const bool within = BigInteger(r.max_size) <= r.bound;
  return {std::move(results), within ? "within-bound" : "exceeds-bound", within ? kPass : kViolation};
}

Outcome cmd_simulate(const Json& doc, const std::string& mode, std::uint64_t trials, unsigned threads,
                     std::uint64_t seed) {
  const Family f = family_from_json(unwrap(doc, "family"));
  const EventReport r = monte_carlo(f, event_mode_from_string(mode), trials, derive_seed(seed, "simulate"), threads);
  Json results = to_json(r);
  Rational formula_total = 0;
  std::uint64_t hit_total = 0;
  for (std::size_t i = 0; i < r.hits.size(); ++i) {
    formula_total += r.formula_values[i];
    hit_total += r.hits[i];
  }
  results["formula_total"] = to_string(formula_total);
  results["hit_total"] = hit_total;
  const bool clean = r.cross_tuple_collisions == 0 && r.variant_overlaps == 0;
  return {std::move(results), clean ? "pass" : "violation", clean ? kPass : kViolation};
}

Outcome cmd_certify(const Json& doc, int ambient, int max_retries, std::uint64_t seed) {
  const Json& sets = unwrap(doc, "family");
  const Json& spaces = unwrap(doc, "subspace_family");
  SubspaceFamily s(0, 2);
  bool lifted = false;
  if (spaces.is_object() && spaces.contains("entries")) {
    s = subspace_family_from_json(spaces);
  } else if (sets.is_object() && sets.contains("tuples")) {
    s = lift_to_spaces(family_from_json(sets), ambient > 0 ? std::optional<int>(ambient) : std::nullopt);
    lifted = true;
  } else {
    throw ParseError("input: expected a family ('tuples') or a subspace family ('entries')");
  }
  const Certificate c = certify(s, derive_seed(seed, "certify"), max_retries);
  Json results = to_json(c);
  results["lifted"] = lifted;
  results["ambient"] = s.ambient_dim();
  return {std::move(results), c.pass ? "pass" : "fail", c.pass ? kPass : kViolation};
}

Outcome cmd_bounds(const std::string& ns, const std::string& ds) {
  const auto [n_lo, n_hi] = parse_range(ns);
  const auto [d_lo, d_hi] = parse_range(ds);
  Json rows = Json::array();
  for (int d = d_lo; d <= d_hi; ++d) {
    for (int n = n_lo; n <= n_hi; ++n) {
      const Rational b = recursive_bound(n, d);
      rows.push_back(Json{{"n", n}, {"d", d}, {"bound", to_string(b)}, {"decimal", to_decimal(b, 6)}});
    }
  }
  return {Json{{"rows", std::move(rows)}}, "pass", kPass};
}

void write_report(const Globals& g, const Json& report, std::ostream& out) {
  const std::string text = report.dump(2) + "\n";
  if (g.output.empty() || g.output == "-") {
    out << text;
    return;
  }
  std::ofstream f(g.output, std::ios::binary);
  if (!f) throw UsageError("cannot open output '" + g.output + "'");
  f << text;
}

} // namespace

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("sha256 failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return hex.str();
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  CLI::App app{"Bollobás systems of d-tuples: verification, sums, constructions, search, "
               "simulation and certificates"};
  app.name("bollobas");
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--input", g.input, "Input JSON path, or - for stdin");
  app.add_option("--seed", g.seed, "Root seed for every random stage");
  app.add_option("--output", g.output, "Report path, or - for stdout");
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"json"}));
  app.add_flag("--timing", g.timing, "Print elapsed time to stderr");

  std::string verify_mode = "bollobas";
  auto* verify = app.add_subcommand("verify", "Check the (skew) Bollobás condition");
  verify->add_option("--mode", verify_mode)->check(CLI::IsMember({"bollobas", "skew"}));

  std::string which = "conjecture";
  auto* sum = app.add_subcommand("sum", "Exact weighted sums against their bounds");
  sum->add_option("--which", which)->check(CLI::IsMember({"conjecture", "skew", "pair_weighted"}));

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build example or random families");
  construct->add_option("kind", ca.kind)->required()->check(CLI::IsMember({"example1", "example2", "random"}));
  construct->add_option("--type", ca.type, "Part sizes, e.g. 1,1,1");
  construct->add_option("--n", ca.n, "Ground set size");
  construct->add_option("--d", ca.d, "Arity for random families")->check(CLI::Range(2, 64));
  construct->add_option("--target", ca.target, "Target size for random families");
  construct->add_option("--system", ca.system)->check(CLI::IsMember({"skew", "bollobas"}));
  construct->add_flag("--lift", ca.lift, "Emit the coordinate-subspace lift");
  construct->add_option("--ambient", ca.ambient, "Ambient dimension of the lift (implies --lift)");

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Exact maximum uniform systems");
  search->add_option("--n", sa.n)->required();
  search->add_option("--type", sa.type)->required();
  search->add_option("--mode", sa.mode)->check(CLI::IsMember({"bollobas", "skew"}));
  search->add_option("--node-budget", sa.node_budget);
  search->add_flag("--exhaustive", sa.exhaustive, "Keep searching after reaching the bound");

  std::string sim_mode = "skew";
  std::uint64_t trials = 100000;
  unsigned threads = 0;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo delimiter-permutation events");
  simulate->add_option("--mode", sim_mode)->check(CLI::IsMember({"skew", "d3", "general"}));
  simulate->add_option("--trials", trials);
  simulate->add_option("--threads", threads, "Worker threads (0 = hardware); never changes the report");

  int ambient = 0;
  int max_retries = kDefaultMaxRetries;
  auto* cert = app.add_subcommand("certify", "Independence certificate for a uniform family");
  cert->add_option("--ambient", ambient, "Ambient dimension when lifting a set family");
  cert->add_option("--max-retries", max_retries);

  std::string bound_n = "1..8";
  std::string bound_d = "3";
  auto* bounds = app.add_subcommand("bounds", "Tabulate the recursive bound");
  bounds->add_option("--n", bound_n, "a or a..b");
  bounds->add_option("--d", bound_d, "a or a..b");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    std::optional<Input> input;
    auto need_input = [&]() -> const Json& {
      input = load_input(g, in);
      return input->doc;
    };

    Outcome o;
    if (*verify) o = cmd_verify(need_input(), verify_mode);
    else if (*sum) o = cmd_sum(need_input(), which);
    else if (*construct) o = cmd_construct(ca, g.seed);
    else if (*search) o = cmd_search(sa);
    else if (*simulate) o = cmd_simulate(need_input(), sim_mode, trials, threads, g.seed);
    else if (*cert) o = cmd_certify(need_input(), ambient, max_retries, g.seed);
    else o = cmd_bounds(bound_n, bound_d);

    Json report{{"command", args},
                {"seed", g.seed},
                {"input", input ? Json{{"sha256", sha256_hex(input->bytes)}, {"bytes", input->bytes.size()}}
                                : Json(nullptr)},
                {"results", std::move(o.results)},
                {"verdict", o.verdict}};
    write_report(g, report, out);
    if (g.timing) {
      const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
      err << "elapsed_ms: " << ms.count() << "\n";
    }
    return o.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

} // namespace bollobas::cli
