// gaussrd: command-line front end for the Gaussian multiuser successive
// refinement toolkit.
//
// Every JSON command echoes an "inputs" object whose keys are exactly the
// keys accepted by --scenario, so an output can be fed back as a scenario.
// Flags given on the command line override scenario values.
//
// Exit codes: 0 success, 1 usage or parse error, 2 infeasible input,
// 3 verification failure. Errors go to stderr as {"error": ..., "message": ...}.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gaussrd/analysis.hpp"
#include "gaussrd/discrete_json.hpp"
#include "gaussrd/gaussrd.hpp"
#include "gaussrd/verify.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace gaussrd;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitVerify = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void print_error(std::string_view kind, std::string_view message) {
  Json e;
  e["error"] = kind;
  e["message"] = message;
  std::cerr << e.dump() << '\n';
}

double parse_number(std::string_view text, std::string_view what) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw UsageError("cannot parse '" + std::string(text) + "' as a number for " + std::string(what));
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto comma = s.find(',', start);
    parts.push_back(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

bool is_unconstrained_token(std::string_view t) {
  return t == "inf" || t == "unconstrained" || t == "none" || t == "null";
}

/// Flag values as raw strings, keyed by scenario key. Filled by CLI11 and
/// overlaid on the scenario object.
class Flags {
 public:
  enum class Kind { Number, Integer, List, DList, Text };

  void add(CLI::App* app, const std::string& key, Kind kind, const std::string& help) {
    std::string name = "--" + key;
    std::replace(name.begin(), name.end(), '_', '-');
    kinds_[key] = kind;
    app->add_option(name, values_[key], help);
  }

  void add_scenario(CLI::App* app) {
    app->add_option("--scenario", scenario_, "JSON file with the same keys as the output's \"inputs\" block");
  }

  Json merged() const {
    Json in = Json::object();
    if (!scenario_.empty()) in = load(scenario_);
    for (const auto& [key, raw] : values_) {
      if (raw.empty()) continue;
      in[key] = convert(key, kinds_.at(key), raw);
    }
    return in;
  }

 private:
  static Json load(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open scenario file " + path);
    Json j;
    try {
      j = Json::parse(f);
    } catch (const nlohmann::json::parse_error& e) {
      throw UsageError("scenario file " + path + ": " + e.what());
    }
    if (!j.is_object()) throw UsageError("scenario file must hold a JSON object");
    return j;
  }

  static Json convert(const std::string& key, Kind kind, const std::string& raw) {
    switch (kind) {
      case Kind::Text: return raw;
      case Kind::Number: return parse_number(raw, key);
      case Kind::Integer: {
        const double v = parse_number(raw, key);
        if (v != std::floor(v)) throw UsageError(key + " must be an integer");
        return static_cast<long long>(v);
      }
      case Kind::List: {
        Json arr = Json::array();
        for (auto part : split(raw)) arr.push_back(parse_number(part, key));
        return arr;
      }
      case Kind::DList: {
        Json arr = Json::array();
        bool first = true;
        for (auto part : split(raw)) {
          if (first && is_unconstrained_token(part)) {
            arr.push_back(nullptr);
          } else {
            arr.push_back(parse_number(part, key));
          }
          first = false;
        }
        return arr;
      }
    }
    return raw;
  }

  std::map<std::string, std::string> values_;
  std::map<std::string, Kind> kinds_;
  std::string scenario_;
};

// --- typed access to the merged inputs --------------------------------------

double number(Json& in, const std::string& key, std::optional<double> fallback = std::nullopt) {
  if (!in.contains(key)) {
    if (!fallback) throw UsageError("missing required input '" + key + "'");
    in[key] = *fallback;
  }
  if (!in[key].is_number()) throw UsageError("input '" + key + "' must be a number");
  return in[key].get<double>();
}

long long integer(Json& in, const std::string& key, long long fallback) {
  if (!in.contains(key)) in[key] = fallback;
  if (!in[key].is_number_integer()) throw UsageError("input '" + key + "' must be an integer");
  return in[key].get<long long>();
}

std::vector<double> list(Json& in, const std::string& key, std::size_t size,
                         std::optional<std::vector<double>> fallback = std::nullopt) {
  if (!in.contains(key)) {
    if (!fallback) throw UsageError("missing required input '" + key + "'");
    in[key] = *fallback;
  }
  const Json& v = in[key];
  if (!v.is_array()) throw UsageError("input '" + key + "' must be an array");
  if (size != 0 && v.size() != size) {
    throw UsageError("input '" + key + "' needs " + std::to_string(size) + " values");
  }
  if (v.empty()) throw UsageError("input '" + key + "' must not be empty");
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number()) throw UsageError("input '" + key + "' must hold numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

/// Distortion list whose first entry may be null (unconstrained d1).
std::pair<FirstLayerDistortion, std::vector<double>> dlist(Json& in, const std::string& key, std::size_t size) {
  if (!in.contains(key)) throw UsageError("missing required input '" + key + "'");
  const Json& v = in[key];
  if (!v.is_array() || v.size() != size) {
    throw UsageError("input '" + key + "' needs " + std::to_string(size) + " values (d1 may be null)");
  }
  FirstLayerDistortion d1 = kUnconstrained;
  if (!v[0].is_null()) {
    if (!v[0].is_number()) throw UsageError("d1 must be a number or null");
    d1 = v[0].get<double>();
  }
  std::vector<double> rest;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!v[i].is_number()) throw UsageError("input '" + key + "' must hold numbers");
    rest.push_back(v[i].get<double>());
  }
  return {d1, rest};
}

RateUnit unit(Json& in) {
  if (!in.contains("unit")) in["unit"] = "nats";
  if (!in["unit"].is_string()) throw UsageError("unit must be \"nats\" or \"bits\"");
  const auto u = parse_rate_unit(in["unit"].get<std::string>());
  if (!u) throw UsageError("unit must be \"nats\" or \"bits\"");
  return *u;
}

double to_nats(double r, RateUnit u) { return convert_rate(r, u, RateUnit::Nats); }
double from_nats(double r, RateUnit u) { return convert_rate(r, RateUnit::Nats, u); }

RateTuple rate_tuple(const std::vector<double>& r, RateUnit u) {
  return convert_rates({r[0], r[1], r[2], r[3]}, u, RateUnit::Nats);
}

Json finite_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json header(const std::string& command, const Json& in) {
  Json out;
  out["command"] = command;
  out["unit"] = in.at("unit");
  // Sorted keys, so a scenario fed back in echoes byte-identically.
  out["inputs"] = Json::parse(nlohmann::json::parse(in.dump()).dump());
  return out;
}

void emit(const Json& out) { std::cout << out.dump(2) << '\n'; }

// --- commands -----------------------------------------------------------------

int cmd_dr_bound(Json in) {
  const RateUnit u = unit(in);
  const GaussianSource source(number(in, "var", 1.0));
  const RateTuple rates = rate_tuple(list(in, "rates", 4), u);
  const auto [d1, rest] = dlist(in, "d", 3);
  const auto r = dr_bound(source, rates, d1, rest[0], rest[1]);
  Json out = header("dr-bound", in);
  out["d1_star"] = r.d1_star;
  out["d2_hat"] = r.d2_hat;
  out["d3_hat"] = r.d3_hat;
  out["pi"] = r.pi;
  out["delta"] = r.delta;
  out["regime"] = to_string(r.regime);
  out["d4_bound"] = r.d4_bound;
  emit(out);
  return kExitOk;
}

int cmd_rd_bound(Json in) {
  const RateUnit u = unit(in);
  const GaussianSource source(number(in, "var", 1.0));
  const double r1 = to_nats(number(in, "r1"), u);
  const double r4 = to_nats(number(in, "r4"), u);
  const auto [d1, rest] = dlist(in, "d", 4);
  const auto r = rd_bound(source, r1, r4, {d1, rest[0], rest[1], rest[2]});
  Json out = header("rd-bound", in);
  out["r1_star"] = from_nats(r.r1_star, u);
  out["d1_star"] = r.d1_star;
  out["d4_hat"] = r.d4_hat;
  out["r2_bound"] = from_nats(r.r2_bound, u);
  out["r3_bound"] = from_nats(r.r3_bound, u);
  out["low_threshold"] = r.low_threshold;
  out["harmonic_threshold"] = r.harmonic_threshold;
  out["sum_bound"] = from_nats(r.sum_bound, u);
  out["excess"] = from_nats(r.excess, u);
  out["regime"] = to_string(r.regime);
  emit(out);
  return kExitOk;
}

int cmd_channel(Json in) {
  const RateUnit u = unit(in);
  const GaussianSource source(number(in, "var", 1.0));
  const RateTuple rates = rate_tuple(list(in, "rates", 4), u);
  const auto d = list(in, "d", 2);
  const auto cert = certify_achievability(source, rates, d[0], d[1]);
  Json out = header("channel", in);
  const auto& ch = cert.channel;
  out["channel"] = {{"sigma1_sq", finite_or_null(ch.sigma1_sq)},
                    {"sigma2_sq", finite_or_null(ch.sigma2_sq)},
                    {"sigma3_sq", finite_or_null(ch.sigma3_sq)},
                    {"sigma4_sq", finite_or_null(ch.sigma4_sq)},
                    {"rho", ch.rho},
                    {"d4_star", ch.d4_star}};
  if (cert.adjustment) {
    out["adjustment"] = {{"d2_prime", cert.adjustment->d2_prime}, {"d3_prime", cert.adjustment->d3_prime}};
  } else {
    out["adjustment"] = nullptr;
  }
  out["achieved"] = {{"d1", *cert.achieved.d1},
                     {"d2", cert.achieved.d2},
                     {"d3", cert.achieved.d3},
                     {"d4", cert.achieved.d4}};
  out["d4_bound"] = cert.bound.d4_bound;
  out["closed_form_d4"] = cert.closed_form_d4;
  out["regime"] = to_string(cert.bound.regime);
  out["matches_bound"] = cert.matches_bound;
  emit(out);
  return kExitOk;
}

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

int cmd_sweep_fig3(Json in) {
  const RateUnit u = unit(in);
  const GaussianSource source(number(in, "var", 1.0));
  const RateTuple rates = rate_tuple(list(in, "rates", 4, std::vector<double>{
      from_nats(1.0, u), from_nats(0.5, u), from_nats(1.0, u), from_nats(0.5, u)}), u);
  const long long points = integer(in, "points", 200);
  if (points < 2 || points > 1000000) throw Error(ErrorKind::InvalidArgument, "points must lie in 2..1000000");
  const auto rows = fig3_sweep(source, rates, static_cast<int>(points));
  std::string text = "# unit=" + std::string(to_string(u)) + " inputs=" + in.dump() + "\n";
  text += "d3,d4_wz,d4_md,gap\n";
  for (const auto& r : rows) {
    text += fmt12(r.d3) + ',' + fmt12(r.d4_wz) + ',' + fmt12(r.d4_md) + ',' + fmt12(r.gap) + '\n';
  }
  std::cout << text;
  return kExitOk;
}

int cmd_discrete(Json in) {
  const RateUnit u = unit(in);
  if (!in.contains("pmf")) throw UsageError("missing required input 'pmf'");
  Json& p = in["pmf"];
  if (p.is_string()) {
    std::ifstream f(p.get<std::string>());
    if (!f) throw UsageError("cannot open pmf file " + p.get<std::string>());
    try {
      p = Json::parse(f);
    } catch (const nlohmann::json::parse_error& e) {
      throw UsageError(std::string("pmf file: ") + e.what());
    }
  }
  if (!p.is_object()) throw UsageError("pmf must be a JSON object or a file path");
  const PmfDocument doc = pmf_from_json(nlohmann::json::parse(p.dump()));
  const auto b = eval_region_bounds(doc.pmf);
  Json out = header("discrete", in);
  out["bounds"] = {{"b1", from_nats(b.b1, u)},
                   {"b12", from_nats(b.b12, u)},
                   {"b13", from_nats(b.b13, u)},
                   {"b123", from_nats(b.b123, u)},
                   {"b1234", from_nats(b.b1234, u)}};
  if (doc.decoders) {
    const auto d = eval_distortions(doc.pmf, *doc.decoders);
    out["distortions"] = {{"d1", *d.d1}, {"d2", d.d2}, {"d3", d.d3}, {"d4", d.d4}};
  }
  if (in.contains("rates")) {
    const RateTuple r = rate_tuple(list(in, "rates", 4), u);
    validate(r);
    out["rates_in_region"] = rates_in_region(b, r);
  }
  emit(out);
  return kExitOk;
}

int cmd_loss(Json in) {
  const RateUnit u = unit(in);
  const GaussianSource source(number(in, "var", 1.0));
  const double alpha = number(in, "alpha", 1.0);
  const double r3 = to_nats(number(in, "r3", from_nats(1.0, u)), u);
  const auto r1s = list(in, "r1", 0, std::vector<double>{from_nats(1, u), from_nats(2, u), from_nats(4, u),
                                                         from_nats(8, u)});
  Json out = header("loss", in);
  Json rows = Json::array();
  for (double r1_in : r1s) {
    const double r1 = to_nats(r1_in, u);
    const auto l = fixed_channel_loss(source, r1, r3, {alpha});
    rows.push_back({{"r1", r1_in},
                    {"ratio", l.ratio},
                    {"d2_floor", l.d2_floor},
                    {"d2_star", l.d2_star},
                    {"single_layer_gap", std::expm1(2.0 * alpha * r1)}});
  }
  out["rows"] = rows;
  emit(out);
  return kExitOk;
}

int cmd_mdcr(Json in) {
  const RateUnit u = unit(in);
  const GaussianSource source(number(in, "var", 1.0));
  const double r2 = to_nats(number(in, "r2", from_nats(0.5, u)), u);
  const double r3 = to_nats(number(in, "r3", from_nats(0.5, u)), u);
  const double beta = number(in, "beta", 0.5);
  const double d2 = number(in, "d2", 0.45);
  const double d3 = number(in, "d3", 0.45);
  const auto r4s = list(in, "r4", 0, std::vector<double>{0.0, from_nats(0.1, u), from_nats(0.2, u), from_nats(0.4, u)});
  Json out = header("mdcr", in);
  Json rows = Json::array();
  for (double r4_in : r4s) {
    const auto c = mdcr_compare(source, r2, r3, to_nats(r4_in, u), {beta}, d2, d3);
    rows.push_back({{"r4", r4_in}, {"d4_mdcr", c.d4_mdcr}, {"d4_md", c.d4_md}, {"ratio", c.ratio}});
  }
  out["rows"] = rows;
  emit(out);
  return kExitOk;
}

int cmd_asymptote(Json in) {
  const RateUnit u = unit(in);
  AsymptoticConfig c;
  c.b = number(in, "b", 1.0);
  c.eta = number(in, "eta", 0.0);
  c.eta1 = number(in, "eta1", c.eta);
  const auto grid_in = list(in, "grid", 0, std::vector<double>{from_nats(1, u), from_nats(2, u), from_nats(4, u),
                                                               from_nats(8, u)});
  std::vector<double> grid;
  for (double r : grid_in) grid.push_back(to_nats(r, u));
  const auto rows = asymptote_convergence(c, grid);
  Json out = header("asymptote", in);
  Json arr = Json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    c.r_prime = r.r_prime;
    arr.push_back({{"r_prime", grid_in[i]},
                   {"exact_md", r.exact_md},
                   {"asymptote_md", r.asymptote_md},
                   {"ratio_md", r.ratio_md},
                   {"exact_mdcr", r.exact_mdcr},
                   {"asymptote_mdcr", r.asymptote_mdcr},
                   {"ratio_mdcr", r.ratio_mdcr},
                   {"product_bound", high_rate_asymptote(c).product_bound}});
  }
  out["rows"] = arr;
  emit(out);
  return kExitOk;
}

long long default_seed() {
  if (const char* env = std::getenv("GAUSSRD_SEED"); env && *env) {
    const double v = parse_number(env, "GAUSSRD_SEED");
    if (v < 0 || v != std::floor(v)) throw UsageError("GAUSSRD_SEED must be a non-negative integer");
    return static_cast<long long>(v);
  }
  return 20070601;
}

int cmd_verify(Json in) {
  const long long seed = integer(in, "seed", default_seed());
  const long long density = integer(in, "grid_density", 6);
  if (seed < 0) throw UsageError("seed must be non-negative");
  if (density < 1 || density > 64) throw UsageError("grid_density must lie in 1..64");
  const auto summary = run_verification(static_cast<std::uint64_t>(seed), static_cast<int>(density));
  Json out;
  out["command"] = "verify";
  out["inputs"] = Json::parse(nlohmann::json::parse(in.dump()).dump());
  Json checks = Json::array();
  std::size_t failed = 0;
  for (const auto& c : summary.checks) {
    checks.push_back({{"name", c.name},
                      {"tolerance", c.tolerance},
                      {"worst_residual", c.worst_residual},
                      {"cases", c.cases},
                      {"failures", c.failures},
                      {"passed", c.passed()}});
    if (!c.passed()) ++failed;
  }
  out["checks"] = checks;
  const auto& eq = summary.equivalence;
  Json regimes = Json::object();
  for (const auto& [tag, n] : eq.regime_counts) regimes[std::string(to_string(tag))] = n;
  out["equivalence"] = {{"points", eq.points},   {"evaluated", eq.evaluated}, {"skipped", eq.skipped},
                        {"boundary", eq.boundary}, {"members", eq.members},     {"regimes", regimes}};
  out["passed"] = summary.checks.size() - failed;
  out["failed"] = failed;
  emit(out);
  return failed == 0 ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rate-distortion bounds for Gaussian two-user, two-layer successive refinement"};
  app.require_subcommand(1);
  using K = Flags::Kind;

  struct Command {
    CLI::App* sub;
    Flags flags;
    int (*run)(Json);
  };
  std::vector<std::unique_ptr<Command>> commands;
  const auto add = [&](const char* name, const char* help, int (*run)(Json)) {
    auto c = std::make_unique<Command>();
    c->sub = app.add_subcommand(name, help);
    c->run = run;
    c->flags.add_scenario(c->sub);
    c->flags.add(c->sub, "unit", K::Text, "rate unit: nats (default) or bits");
    commands.push_back(std::move(c));
    return commands.back().get();
  };

  auto* dr = add("dr-bound", "minimal d4 for given rates and d1, d2, d3", cmd_dr_bound);
  dr->flags.add(dr->sub, "var", K::Number, "source variance (default 1)");
  dr->flags.add(dr->sub, "rates", K::List, "R1,R2,R3,R4");
  dr->flags.add(dr->sub, "d", K::DList, "d1,d2,d3 (d1 may be 'inf' for unconstrained)");

  auto* rd = add("rd-bound", "rate bounds for given R1, R4 and distortions", cmd_rd_bound);
  rd->flags.add(rd->sub, "var", K::Number, "source variance (default 1)");
  rd->flags.add(rd->sub, "r1", K::Number, "first-layer rate R1");
  rd->flags.add(rd->sub, "r4", K::Number, "refinement rate R4");
  rd->flags.add(rd->sub, "d", K::DList, "d1,d2,d3,d4 (d1 may be 'inf')");

  auto* ch = add("channel", "construct and certify the Gaussian test channel", cmd_channel);
  ch->flags.add(ch->sub, "var", K::Number, "source variance (default 1)");
  ch->flags.add(ch->sub, "rates", K::List, "R1,R2,R3,R4");
  ch->flags.add(ch->sub, "d", K::List, "d2,d3");

  auto* sw = add("sweep-fig3", "CSV of WZ vs MD central distortion along d3", cmd_sweep_fig3);
  sw->flags.add(sw->sub, "var", K::Number, "source variance (default 1)");
  sw->flags.add(sw->sub, "rates", K::List, "R1,R2,R3,R4 (default 1,0.5,1,0.5 nats)");
  sw->flags.add(sw->sub, "points", K::Integer, "grid points (default 200)");

  auto* di = add("discrete", "rate bounds and distortions of a finite-alphabet pmf", cmd_discrete);
  di->flags.add(di->sub, "pmf", K::Text, "pmf JSON file");
  di->flags.add(di->sub, "rates", K::List, "optional R1,R2,R3,R4 to test for membership");

  auto* lo = add("loss", "fixed-channel loss on d2 over R1", cmd_loss);
  lo->flags.add(lo->sub, "var", K::Number, "source variance (default 1)");
  lo->flags.add(lo->sub, "alpha", K::Number, "rate ratio alpha (default 1)");
  lo->flags.add(lo->sub, "r3", K::Number, "R3 (default 1 nat)");
  lo->flags.add(lo->sub, "r1", K::List, "R1 grid (default 1,2,4,8 nats)");

  auto* md = add("mdcr", "MD with central refinement vs plain MD over R4", cmd_mdcr);
  md->flags.add(md->sub, "var", K::Number, "source variance (default 1)");
  md->flags.add(md->sub, "r2", K::Number, "R2 (default 0.5 nats)");
  md->flags.add(md->sub, "r3", K::Number, "R3 (default 0.5 nats)");
  md->flags.add(md->sub, "r4", K::List, "R4 grid (default 0,0.1,0.2,0.4 nats)");
  md->flags.add(md->sub, "beta", K::Number, "refinement split (default 0.5)");
  md->flags.add(md->sub, "d2", K::Number, "side distortion d2 (default 0.45)");
  md->flags.add(md->sub, "d3", K::Number, "side distortion d3 (default 0.45)");

  auto* as = add("asymptote", "exact vs asymptotic balanced central distortion", cmd_asymptote);
  as->flags.add(as->sub, "b", K::Number, "side distortion scale b >= 1 (default 1)");
  as->flags.add(as->sub, "eta", K::Number, "eta in [0,1) (default 0)");
  as->flags.add(as->sub, "eta1", K::Number, "eta1 in [0,eta] (default eta)");
  as->flags.add(as->sub, "grid", K::List, "R' grid (default 1,2,4,8 nats)");

  auto* ve = app.add_subcommand("verify", "run the self-check suite");
  auto vc = std::make_unique<Command>();
  vc->sub = ve;
  vc->run = cmd_verify;
  vc->flags.add_scenario(ve);
  vc->flags.add(ve, "seed", K::Integer, "seed (default $GAUSSRD_SEED or 20070601)");
  vc->flags.add(ve, "grid_density", K::Integer, "equivalence grid density (default 6)");
  commands.push_back(std::move(vc));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("UsageError", e.what());
    return kExitUsage;
  }

  for (const auto& c : commands) {
    if (!c->sub->parsed()) continue;
    try {
      return c->run(c->flags.merged());
    } catch (const UsageError& e) {
      print_error("UsageError", e.what());
      return kExitUsage;
    } catch (const Error& e) {
      print_error(to_string(e.kind()), e.what());
      return kExitInfeasible;
    } catch (const nlohmann::json::exception& e) {
      print_error("UsageError", e.what());
      return kExitUsage;
    }
  }
  return kExitUsage;
}
