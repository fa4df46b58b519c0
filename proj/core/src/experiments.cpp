#include "polyslice/experiments.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "parallel.hpp"
#include "polyslice/errors.hpp"
#include "polyslice/norm_space.hpp"
#include "polyslice/serialize.hpp"
#include "polyslice/slice.hpp"

namespace polyslice {
namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

class RowSink {
 public:
  RowSink(std::string experiment, int n, Params params)
      : experiment_(std::move(experiment)), n_(n), params_(std::move(params)) {}

  void check(std::string quantity, const Scalar& value, Relation rel, const Scalar& bound, bool asserted = true) {
    rows_.push_back({experiment_, n_, params_, std::move(quantity), value, rel, bound, asserted,
                     holds(value, rel, bound)});
  }

  std::vector<ReportRow> take() { return std::move(rows_); }

 private:
  std::string experiment_;
  int n_;
  Params params_;
  std::vector<ReportRow> rows_;
};

Report make_report(ExperimentConfig config, std::vector<ReportRow> rows, std::vector<std::string> notes = {}) {
  return Report{std::move(config), std::move(rows), std::move(notes)};
}

Scalar exact(double v) { return Scalar(v); }

const Scalar kSlackExact = Scalar(1, 1000000000);

void add_sampling_row(RowSink& sink, const VPolytope& slice, const PolyhedralNormSpace& space,
                      const DiameterResult& diam, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) return;
  const double sampled = sample_diameter_lower_bound(slice, space, trials, seed);
  sink.check("sampled_diameter", exact(sampled), Relation::kLe, diam.value + kSlackExact);
}

Scalar random_rational(std::mt19937_64& rng) {
  const long num = static_cast<long>(rng() % 41) - 20;
  const long den = static_cast<long>(rng() % 12) + 1;
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

Scalar max_abs_tail(const Vec& x) {
  Scalar m = 0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    Scalar a = abs(x[i]);
    if (a > m) m = std::move(a);
  }
  return m;
}

std::vector<Scalar> parse_scalar_list(const std::string& text) {
  std::vector<Scalar> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(parse_scalar(item));
  }
  return out;
}

Report merge(ExperimentConfig config, std::vector<Report> parts) {
  Report out{std::move(config), {}, {}};
  for (auto& p : parts) {
    out.rows.insert(out.rows.end(), std::make_move_iterator(p.rows.begin()), std::make_move_iterator(p.rows.end()));
    out.notes.insert(out.notes.end(), p.notes.begin(), p.notes.end());
  }
  return out;
}

}  // namespace

std::string relation_symbol(Relation rel) {
  switch (rel) {
    case Relation::kLe:
      return "<=";
    case Relation::kLt:
      return "<";
    case Relation::kGe:
      return ">=";
    case Relation::kEq:
      return "==";
  }
  return "?";
}

bool holds(const Scalar& value, Relation rel, const Scalar& bound) {
  switch (rel) {
    case Relation::kLe:
      return value <= bound;
    case Relation::kLt:
      return value < bound;
    case Relation::kGe:
      return value >= bound;
    case Relation::kEq:
      return value == bound;
  }
  return false;
}

bool Report::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return !r.asserted || r.pass; });
}

std::string Report::verdict() const { return passed() ? "pass" : "fail"; }

Vec functional_from_spec(const std::string& spec, std::size_t dim, std::uint64_t seed) {
  if (spec == "e1") return Vec::unit(dim, 0);
  if (spec == "e1+e2") {
    if (dim < 2) throw InvalidArgument("functional e1+e2 needs dimension >= 2");
    return Vec::unit(dim, 0) + Vec::unit(dim, 1);
  }
  if (spec == "random") {
    std::mt19937_64 rng(seed);
    Vec g(dim);
    while (g.is_zero()) {
      for (std::size_t i = 0; i < dim; ++i) g[i] = random_rational(rng);
    }
    return g;
  }
  Vec g(parse_scalar_list(spec));
  if (g.size() != dim) {
    throw InvalidArgument("functional has " + std::to_string(g.size()) + " coordinates, expected " +
                          std::to_string(dim));
  }
  return g;
}

Report run_thm1(int n, const Scalar& epsilon, const std::optional<Scalar>& r_opt,
                const std::optional<Scalar>& delta_opt, std::size_t trials, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("thm1 needs N >= 1");
  if (sgn(epsilon) <= 0) throw InvalidArgument("thm1 needs epsilon > 0");
  const Scalar r = r_opt.value_or(epsilon / 4);
  const Scalar delta = delta_opt.value_or(epsilon / 10);
  if (sgn(r) <= 0 || sgn(delta) <= 0) throw InvalidArgument("thm1 needs r > 0 and delta > 0");
  const Scalar budget = 2 * r + 3 * delta;
  if (budget >= epsilon) {
    throw InvalidArgument("thm1 needs 2r + 3delta < epsilon (got " + format_scalar(budget) + ")");
  }

  const auto space = make_space_ii(n, r);
  const std::size_t d = space.dim();
  Vec f(d);
  f[d - 1] = 1 + r;
  const VPolytope ball = enumerate_vertices(unit_ball(space));
  const VPolytope slice = enumerate_vertices(make_slice(space, ball, SliceSpec(f, delta)));
  const DiameterResult diam = diameter(slice, space);

  RowSink sink("thm1", n,
               {{"epsilon", format_scalar(epsilon)}, {"r", format_scalar(r)}, {"delta", format_scalar(delta)}});
  sink.check("diameter", diam.value, Relation::kLe, budget);
  sink.check("diameter", diam.value, Relation::kLt, epsilon);
  add_sampling_row(sink, slice, space, diam, trials, seed);

  ExperimentConfig cfg{.experiment = "thm1", .n = n, .r = r, .delta = delta, .epsilon = epsilon};
  return make_report(std::move(cfg), sink.take());
}

Report run_prop2(int n, const Scalar& r, const std::string& g_spec, const Scalar& alpha, std::size_t trials,
                 std::uint64_t seed) {
  if (sgn(r) <= 0 || r >= 1) throw InvalidArgument("prop2 needs 0 < r < 1");
  if (sgn(alpha) <= 0) throw InvalidArgument("prop2 needs alpha > 0");
  const auto space = make_space_ii(n, r);
  const VPolytope ball = enumerate_vertices(unit_ball(space));
  Vec g = functional_from_spec(g_spec, space.dim(), seed);
  // A random direction is rescaled onto the dual sphere: sup g(B) = 1.
  if (g_spec == "random") g /= support(ball, g).value;
  const VPolytope slice = enumerate_vertices(make_slice(space, ball, SliceSpec(g, alpha)));
  const DiameterResult diam = diameter(slice, space);
  const Scalar bound = 2 * (1 - r);

  RowSink sink("prop2", n,
               {{"r", format_scalar(r)}, {"alpha", format_scalar(alpha)}, {"g", nlohmann::json(to_json(g)).dump()}});
  std::vector<std::string> notes;
  ExperimentConfig cfg{.experiment = "prop2", .n = n, .r = r, .g = g_spec, .alpha = alpha, .seed = seed};
  try {
    const auto cert = lower_bound_certificate(space, g, alpha, r);
    sink.check("certificate_plus_in_slice", Scalar(cert.plus_in_slice ? 1 : 0), Relation::kEq, Scalar(1));
    sink.check("certificate_minus_in_slice", Scalar(cert.minus_in_slice ? 1 : 0), Relation::kEq, Scalar(1));
    sink.check("certificate_reverified", Scalar(verify_certificate(space, cert) ? 1 : 0), Relation::kEq, Scalar(1));
    sink.check("diameter", diam.value, Relation::kGe, bound);
    notes.push_back("N=" + std::to_string(n) + ": certificate built from " + cert.point_rule + " point x = " +
                    to_json(cert.x).dump() + ", y = " + to_json(cert.y).dump());
  } catch (const DimensionTooSmall& e) {
    // Finite truncation obstruction: reported, not asserted.
    sink.check("certificate_dimension_too_small", Scalar(1), Relation::kEq, Scalar(1), false);
    sink.check("diameter", diam.value, Relation::kGe, bound, false);
    notes.push_back("N=" + std::to_string(n) + ": dimension-too-small: " + e.what());
  }
  sink.check("diameter", diam.value, Relation::kLe, Scalar(2));
  add_sampling_row(sink, slice, space, diam, trials, seed);
  return make_report(std::move(cfg), sink.take(), std::move(notes));
}

Report run_prop3(int n, const std::vector<Scalar>& epsilons, const std::vector<Scalar>& omega_in, std::size_t trials,
                 std::uint64_t seed) {
  if (n < 2) throw InvalidArgument("prop3 needs N >= 2");
  if (epsilons.empty()) throw InvalidArgument("prop3 needs at least one epsilon");
  const std::vector<Scalar> omega = omega_in.empty() ? default_omega(n) : omega_in;
  const auto space = make_space_vii(n, omega);
  const Vec e1 = Vec::unit(space.dim(), 0);
  const auto profile = diameter_profile(space, e1, epsilons);

  std::vector<ReportRow> rows;
  bool four_holds = true;
  Scalar worst_ratio = 0;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    const Scalar& eps = profile[i].alpha;
    const DiameterResult& diam = profile[i].result;
    RowSink sink("prop3", n, {{"epsilon", format_scalar(eps)}});
    sink.check("diameter", diam.value, Relation::kLe, 6 * eps);
    sink.check("diameter_ratio", diam.value / eps, Relation::kLe, Scalar(6));
    sink.check("diameter_four_eps", diam.value, Relation::kLe, 4 * eps, false);
    if (i > 0) sink.check("diameter_monotone", diam.value, Relation::kLe, profile[i - 1].result.value);

    const VPolytope& slice = profile[i].slice;
    Scalar tail = 0;
    Scalar head = slice.vertices().front()[0];
    for (const auto& v : slice.vertices()) {
      Scalar t = max_abs_tail(v);
      if (t > tail) tail = std::move(t);
      if (v[0] < head) head = v[0];
    }
    sink.check("vertex_max_tail_coordinate", tail, Relation::kLe, 3 * eps);
    sink.check("vertex_min_first_coordinate", head, Relation::kGe, 1 - eps);
    add_sampling_row(sink, slice, space, diam, trials, seed);

    four_holds = four_holds && diam.value <= 4 * eps;
    if (diam.value / eps > worst_ratio) worst_ratio = diam.value / eps;
    auto part = sink.take();
    rows.insert(rows.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  std::vector<std::string> notes{"N=" + std::to_string(n) + ": max diam/epsilon = " + format_scalar(worst_ratio) +
                                 "; constant 4 " + (four_holds ? "holds" : "does not hold") +
                                 " empirically; constant 6 is asserted"};
  ExperimentConfig cfg{.experiment = "prop3", .n = n, .epsilons = epsilons, .omega = omega};
  if (!omega_in.empty()) cfg.omega_rule = "list";
  return make_report(std::move(cfg), std::move(rows), std::move(notes));
}

Report run_verify_ext(int n, const Scalar& r) {
  const auto space = make_space_ii(n, r);
  const auto& gens = space.generators();
  const VPolytope ext = extreme_points(gens);
  std::vector<Vec> expected(gens.begin(), gens.end());
  std::sort(expected.begin(), expected.end());

  RowSink sink("verify-ext", n, {{"r", format_scalar(r)}});
  sink.check("extreme_point_count", Scalar(static_cast<long>(ext.size())), Relation::kEq,
             Scalar(4L * n + 2));
  sink.check("extreme_set_equals_generators", Scalar(ext.vertices() == expected ? 1 : 0), Relation::kEq, Scalar(1));

  std::vector<Vec> injected = expected;
  Vec midpoint(space.dim());
  midpoint[space.dim() - 1] = 1;
  injected.push_back(midpoint);
  const VPolytope reduced = extreme_points(injected);
  const bool dropped = std::find(reduced.vertices().begin(), reduced.vertices().end(), midpoint) ==
                       reduced.vertices().end();
  sink.check("injected_point_dropped", Scalar(dropped ? 1 : 0), Relation::kEq, Scalar(1));

  ExperimentConfig cfg{.experiment = "verify-ext", .n = n, .r = r};
  return make_report(std::move(cfg), sink.take());
}

Report run_sandwich(int n, const Scalar& r, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw InvalidArgument("sandwich needs trials >= 1");
  const auto space = make_space_ii(n, r);
  const std::size_t d = space.dim();
  std::mt19937_64 rng(seed);
  long lower_violations = 0;
  long upper_violations = 0;
  std::optional<Scalar> min_ratio;
  std::optional<Scalar> max_ratio;
  for (std::size_t t = 0; t < trials; ++t) {
    Vec z(d);
    for (std::size_t i = 0; i < d; ++i) {
      if (rng() % 5 != 0) z[i] = random_rational(rng);
    }
    const Scalar one = reference_product_norm(z, d - 1);
    const Scalar poly = space.norm(z);
    if (!(one <= poly)) ++lower_violations;
    if (!(poly <= (1 + r) * one)) ++upper_violations;
    if (sgn(one) != 0) {
      const Scalar ratio = poly / one;
      if (!min_ratio || ratio < *min_ratio) min_ratio = ratio;
      if (!max_ratio || ratio > *max_ratio) max_ratio = ratio;
    }
  }
  RowSink sink("sandwich", n, {{"r", format_scalar(r)}, {"trials", std::to_string(trials)}});
  sink.check("lower_violations", Scalar(lower_violations), Relation::kEq, Scalar(0));
  sink.check("upper_violations", Scalar(upper_violations), Relation::kEq, Scalar(0));
  if (min_ratio) sink.check("min_ratio", *min_ratio, Relation::kGe, Scalar(1));
  if (max_ratio) sink.check("max_ratio", *max_ratio, Relation::kLe, 1 + r);
  sink.check("zero_vector_norm", space.norm(Vec(d)), Relation::kEq, Scalar(0));
  Vec beta = Vec::unit(d, d - 1);
  sink.check("beta_unit_ratio", space.norm(beta) / reference_product_norm(beta, d - 1), Relation::kEq, 1 + r);

  ExperimentConfig cfg{.experiment = "sandwich", .n = n, .r = r, .trials = trials, .seed = seed};
  return make_report(std::move(cfg), sink.take());
}

Report run_experiment(const ExperimentConfig& config) {
  const std::string& name = config.experiment;
  std::vector<int> grid;
  if (config.n) {
    grid.push_back(*config.n);
  } else if (name == "thm1" || name == "prop2" || name == "verify-ext" || name == "sandwich") {
    grid = {1, 2, 3, 4, 5, 6};
  } else {
    grid.push_back(4);  // prop3
  }
  const Scalar r = config.r.value_or(Scalar(1, 10));

  std::vector<Scalar> omega;
  if (config.omega_rule == "list") {
    if (config.omega.empty()) throw InvalidArgument("omega rule 'list' needs omega values");
    omega = config.omega;
  } else if (config.omega_rule != "default") {
    throw InvalidArgument("unknown omega rule '" + config.omega_rule + "'");
  }

  std::function<Report(int)> one;
  if (name == "thm1") {
    const Scalar eps = config.epsilon.value_or(Scalar(1, 2));
    one = [&, eps](int n) { return run_thm1(n, eps, config.r, config.delta, config.trials.value_or(10000), config.seed); };
  } else if (name == "prop2") {
    const Scalar alpha = config.alpha.value_or(Scalar(1, 2));
    one = [&, alpha](int n) { return run_prop2(n, r, config.g, alpha, config.trials.value_or(10000), config.seed); };
  } else if (name == "prop3") {
    std::vector<Scalar> eps = config.epsilons;
    if (eps.empty() && config.epsilon) eps.push_back(*config.epsilon);
    if (eps.empty()) eps = {Scalar(1, 10), Scalar(1, 20), Scalar(1, 40), Scalar(1, 80)};
    one = [&, eps](int n) { return run_prop3(n, eps, omega, config.trials.value_or(10000), config.seed); };
  } else if (name == "verify-ext") {
    one = [&](int n) { return run_verify_ext(n, r); };
  } else if (name == "sandwich") {
    one = [&](int n) { return run_sandwich(n, r, config.trials.value_or(1000), config.seed); };
  } else {
    throw InvalidArgument("unknown experiment '" + name + "'");
  }

  std::vector<Report> parts(grid.size());
  detail::parallel_for(grid.size(), [&](std::size_t i) { parts[i] = one(grid[i]); });
  Report out = merge(config, std::move(parts));
  if (name == "prop2" && grid.size() > 1) {
    std::optional<int> smallest;
    for (const auto& row : out.rows) {
      if (row.quantity == "certificate_reverified" && row.pass && (!smallest || row.n < *smallest)) smallest = row.n;
    }
    out.notes.push_back(smallest ? "smallest N with a certificate: " + std::to_string(*smallest)
                                 : "no N in the sweep admits a certificate");
  }
  return out;
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
  ExperimentConfig c;
  c.experiment = j.at("experiment").get<std::string>();
  if (j.contains("N") && !j.at("N").is_null()) c.n = j.at("N").get<int>();
  auto opt_scalar = [&](const char* key, std::optional<Scalar>& out) {
    if (j.contains(key) && !j.at(key).is_null()) out = scalar_from_json(j.at(key));
  };
  opt_scalar("r", c.r);
  opt_scalar("delta", c.delta);
  opt_scalar("epsilon", c.epsilon);
  opt_scalar("alpha", c.alpha);
  if (j.contains("epsilons")) {
    for (const auto& e : j.at("epsilons")) c.epsilons.push_back(scalar_from_json(e));
  }
  c.omega_rule = j.value("omega_rule", std::string("default"));
  if (j.contains("omega")) {
    for (const auto& w : j.at("omega")) c.omega.push_back(scalar_from_json(w));
  }
  c.g = j.value("g", std::string("e1"));
  if (j.contains("trials") && !j.at("trials").is_null()) c.trials = j.at("trials").get<std::size_t>();
  c.seed = j.value("seed", std::uint64_t{1});
  c.format = j.value("format", std::string("csv"));
  c.output_path = j.value("output_path", std::string());
  return c;
}

nlohmann::json to_json(const ExperimentConfig& c) {
  nlohmann::json j{{"experiment", c.experiment}, {"omega_rule", c.omega_rule}, {"g", c.g},
                   {"seed", c.seed},             {"format", c.format}};
  j["N"] = c.n ? nlohmann::json(*c.n) : nlohmann::json(nullptr);
  auto opt = [&](const char* key, const std::optional<Scalar>& v) {
    j[key] = v ? to_json(*v) : nlohmann::json(nullptr);
  };
  opt("r", c.r);
  opt("delta", c.delta);
  opt("epsilon", c.epsilon);
  opt("alpha", c.alpha);
  nlohmann::json eps = nlohmann::json::array();
  for (const auto& e : c.epsilons) eps.push_back(to_json(e));
  j["epsilons"] = std::move(eps);
  nlohmann::json omega = nlohmann::json::array();
  for (const auto& w : c.omega) omega.push_back(to_json(w));
  j["omega"] = std::move(omega);
  j["trials"] = c.trials ? nlohmann::json(*c.trials) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const Report& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    rows.push_back({{"experiment", r.experiment},
                    {"N", r.n},
                    {"params", std::move(params)},
                    {"quantity", r.quantity},
                    {"exact_value", format_scalar(r.value)},
                    {"decimal_value", format_decimal(r.value)},
                    {"relation", relation_symbol(r.relation)},
                    {"bound", format_scalar(r.bound)},
                    {"asserted", r.asserted},
                    {"pass", r.pass}});
  }
  return {{"config", to_json(report.config)},
          {"rows", std::move(rows)},
          {"notes", report.notes},
          {"verdict", report.verdict()}};
}

std::string to_csv(const Report& report) {
  std::ostringstream out;
  out << "experiment,N,params,quantity,exact_value,decimal_value,relation,bound,asserted,pass\n";
  for (const auto& r : report.rows) {
    std::string params;
    for (const auto& [k, v] : r.params) {
      if (!params.empty()) params += ';';
      params += k + '=' + v;
    }
    // Params may hold JSON arrays with commas; quote the field.
    std::string quoted = "\"";
    for (char c : params) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    quoted += '"';
    out << r.experiment << ',' << r.n << ',' << quoted << ',' << r.quantity << ',' << format_scalar(r.value) << ','
        << format_decimal(r.value) << ',' << relation_symbol(r.relation) << ',' << format_scalar(r.bound) << ','
        << (r.asserted ? "true" : "false") << ',' << (r.pass ? "true" : "false") << '\n';
  }
  return out.str();
}

bool recheck_report(const nlohmann::json& report) {
  bool all = true;
  for (const auto& row : report.at("rows")) {
    const std::string rel = row.at("relation").get<std::string>();
    Relation relation;
    if (rel == "<=") {
      relation = Relation::kLe;
    } else if (rel == "<") {
      relation = Relation::kLt;
    } else if (rel == ">=") {
      relation = Relation::kGe;
    } else if (rel == "==") {
      relation = Relation::kEq;
    } else {
      return false;
    }
    const bool pass = holds(parse_scalar(row.at("exact_value").get<std::string>()), relation,
                            parse_scalar(row.at("bound").get<std::string>()));
    if (pass != row.at("pass").get<bool>()) return false;
    if (row.at("asserted").get<bool>() && !pass) all = false;
  }
  return report.at("verdict").get<std::string>() == (all ? "pass" : "fail");
}

}  // namespace polyslice
