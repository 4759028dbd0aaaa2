#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>

#include <spdlog/spdlog.h>

#include "nskernel/boundary.hpp"
#include "nskernel/experiments.hpp"
#include "nskernel/extremal.hpp"
#include "nskernel/geometry.hpp"
#include "nskernel/io.hpp"
#include "nskernel/metric.hpp"
#include "nskernel_cli/cli.hpp"

namespace nskernel::cli {

namespace {

namespace fs = std::filesystem;

struct Loaded {
  std::shared_ptr<const Kernel> kernel;
  std::shared_ptr<const KernelModel> model;  // null for closed kernels
};

Json certificate_json(const Loaded& k) {
  if (!k.model) return {{"closed_form", true}};
  Json c = to_json(k.model->certificate());
  c["closed_form"] = false;
  c["N"] = k.model->truncation();
  return c;
}

// All artifact writes go through here.
class Artifacts {
 public:
  Artifacts(const CommandContext& ctx, const RunConfig& cfg, Json certificate)
      : dir_(ctx.out_dir), hash_(cfg.hash), certificate_(std::move(certificate)) {
    fs::create_directories(dir_);
  }

  void json(const std::string& name, Json body) const {
    Json doc;
    doc["config_hash"] = hash_;
    doc["certificate"] = certificate_;
    for (auto& [k, v] : body.items()) doc[k] = v;
    std::ofstream f(path(name), std::ios::binary);
    f << doc.dump(2) << '\n';
    check(f, name);
  }

  // CSV with a leading '#' line carrying the hash and certificate.
  void csv(const std::string& name, const std::vector<std::string>& header,
           const std::vector<std::vector<double>>& rows) const {
    std::ofstream f(path(name), std::ios::binary);
    f << "# config_hash=" << hash_ << " certificate=" << certificate_.dump() << '\n';
    CsvWriter w(f, header);
    for (const auto& r : rows) w.row(r);
    check(f, name);
  }

  void plot(const std::string& name, const std::string& xlabel, const std::string& ylabel,
            const std::vector<std::pair<double, double>>& xy) const {
    std::ofstream f(path(name), std::ios::binary);
    f << "# config_hash=" << hash_ << '\n' << "# " << xlabel << ' ' << ylabel << '\n';
    for (const auto& [x, y] : xy) f << format_double(x) << ' ' << format_double(y) << '\n';
    check(f, name);
  }

  std::string path(const std::string& name) const { return (fs::path(dir_) / name).string(); }

 private:
  static void check(const std::ofstream& f, const std::string& name) {
    if (!f) throw Error("failed to write " + name);
    spdlog::info("wrote {}", name);
  }

  std::string dir_;
  std::string hash_;
  Json certificate_;
};

BuildOptions build_options(const RunConfig& cfg, const CommandContext& ctx) {
  BuildOptions b = cfg.build;
  b.threads = ctx.threads;
  return b;
}

std::shared_ptr<const KernelModel> model_for(const RunConfig& cfg, const CommandContext& ctx) {
  if (!ctx.model_path.empty()) {
    auto m = std::make_shared<KernelModel>(load_model(ctx.model_path));
    if (!(m->domain() == cfg.domain) || m->order() != cfg.d)
      throw ContractViolation("model file " + ctx.model_path + " does not match the configured domain and d");
    spdlog::info("loaded model {} ({} moments)", ctx.model_path, m->indices().size());
    return m;
  }
  spdlog::info("building series model N={} for {}", cfg.N, cfg.domain.describe());
  return std::make_shared<KernelModel>(build_model(cfg.domain, cfg.d, cfg.N, build_options(cfg, ctx)));
}

Loaded kernel_for(const RunConfig& cfg, const CommandContext& ctx) {
  const bool series = !ctx.model_path.empty() || cfg.kernel == KernelChoice::Series ||
                      (cfg.kernel == KernelChoice::Auto && cfg.domain.type() == DomainType::SmoothReinhardt);
  if (series) {
    auto m = model_for(cfg, ctx);
    return {m, m};
  }
  return {std::make_shared<ClosedKernel>(ClosedKernel::for_domain(cfg.domain, cfg.d)), nullptr};
}

std::vector<std::string> coord_header(const std::string& name, int n) {
  std::vector<std::string> h;
  for (int i = 1; i <= n; ++i) {
    h.push_back(name + std::to_string(i) + "_re");
    h.push_back(name + std::to_string(i) + "_im");
  }
  return h;
}

void push_coords(std::vector<double>& row, const CVector& z) {
  for (Complex c : z) {
    row.push_back(c.real());
    row.push_back(c.imag());
  }
}

std::vector<CPoint> points_or_origin(const RunConfig& cfg) {
  if (!cfg.points.empty()) return cfg.points;
  return {CPoint::Zero(cfg.domain.dimension())};
}

CVector unit_vector(int n) {
  CVector e = CVector::Zero(n);
  e[0] = 1.0;
  return e;
}

const Json& block(const RunConfig& cfg, const char* name) {
  static const Json empty = Json::object();
  return cfg.raw.contains(name) ? cfg.raw[name] : empty;
}

void cmd_build(const RunConfig& cfg, const CommandContext& ctx) {
  const KernelModel m = build_model(cfg.domain, cfg.d, cfg.N, build_options(cfg, ctx));
  const Loaded l{nullptr, std::make_shared<KernelModel>(m)};
  Artifacts out(ctx, cfg, certificate_json(l));
  save_model(m, out.path("model.txt"));
  spdlog::info("wrote model.txt");
  out.json("build.json", {{"domain", to_json(cfg.domain)},
                          {"d", cfg.d},
                          {"N", cfg.N},
                          {"moments", m.indices().size()},
                          {"model", "model.txt"}});
}

void cmd_kernel(const RunConfig& cfg, const CommandContext& ctx) {
  const Loaded k = kernel_for(cfg, ctx);
  const int n = cfg.domain.dimension();
  const auto pts = points_or_origin(cfg);
  auto header = coord_header("z", n);
  if (!cfg.w.empty())
    for (auto& h : coord_header("w", n)) header.push_back(h);
  for (const char* h : {"K_re", "K_im", "tail", "certified"}) header.push_back(h);
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const CPoint w = cfg.w.empty() ? pts[i] : cfg.w[i];
    const KernelValue v = k.kernel->evaluate(pts[i], w);
    std::vector<double> r;
    push_coords(r, pts[i]);
    if (!cfg.w.empty()) push_coords(r, w);
    r.insert(r.end(), {v.value.real(), v.value.imag(), v.tail, v.certified ? 1.0 : 0.0});
    rows.push_back(r);
  }
  Artifacts(ctx, cfg, certificate_json(k)).csv("kernel.csv", header, rows);
}

void cmd_metric(const RunConfig& cfg, const CommandContext& ctx) {
  const Loaded k = kernel_for(cfg, ctx);
  const int n = cfg.domain.dimension();
  const CVector v = cfg.v.value_or(unit_vector(n));
  auto header = coord_header("z", n);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      header.push_back("g" + std::to_string(a) + std::to_string(b) + "_re");
      header.push_back("g" + std::to_string(a) + std::to_string(b) + "_im");
    }
  for (const char* h : {"det_G", "beta", "R", "Ric", "relative_tail"}) header.push_back(h);
  std::vector<std::vector<double>> rows;
  for (const CPoint& z : points_or_origin(cfg)) {
    const MetricPointData m = metric_tensor(*k.kernel, z);
    std::vector<double> r;
    push_coords(r, z);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) r.insert(r.end(), {m.G(a, b).real(), m.G(a, b).imag()});
    r.insert(r.end(),
             {m.det_G, beta_invariant(m), sectional_curvature(m, v), ricci_curvature(m, v), m.relative_tail});
    rows.push_back(r);
  }
  Artifacts(ctx, cfg, certificate_json(k)).csv("metric.csv", header, rows);
}

void cmd_curvature(const RunConfig& cfg, const CommandContext& ctx) {
  const Loaded k = kernel_for(cfg, ctx);
  const int n = cfg.domain.dimension();
  std::vector<CVector> vs = cfg.vectors;
  if (vs.empty()) vs.push_back(cfg.v.value_or(unit_vector(n)));
  auto header = coord_header("z", n);
  for (auto& h : coord_header("v", n)) header.push_back(h);
  for (const char* h : {"tau", "R", "Ric"}) header.push_back(h);
  std::vector<std::vector<double>> rows;
  for (const CPoint& z : points_or_origin(cfg)) {
    const MetricPointData m = metric_tensor(*k.kernel, z);
    for (const CVector& v : vs) {
      std::vector<double> r;
      push_coords(r, z);
      push_coords(r, v);
      r.insert(r.end(), {vector_length(m, v), sectional_curvature(m, v), ricci_curvature(m, v)});
      rows.push_back(r);
    }
  }
  Artifacts(ctx, cfg, certificate_json(k)).csv("curvature.csv", header, rows);
}

void cmd_extremal(const RunConfig& cfg, const CommandContext& ctx) {
  const auto model = model_for(cfg, ctx);
  const int n = cfg.domain.dimension();
  const CVector v = cfg.v.value_or(unit_vector(n));
  Json reports = Json::array();
  for (const CPoint& p : points_or_origin(cfg)) reports.push_back(to_json(extremal_identity_report(*model, p, v)));
  Json body{{"reports", reports}};
  const Json& mono = block(cfg, "monotonicity");
  if (!mono.empty()) {
    check_object(mono, "config.monotonicity", {"outer"}, {"N"});
    const DomainSpec outer = domain_from_json(mono["outer"], "config.monotonicity.outer");
    const int N = mono.contains("N") ? int_field(mono, "N", "config.monotonicity") : model->truncation();
    const KernelModel om = build_model(outer, cfg.d, N, build_options(cfg, ctx));
    Json checks = Json::array();
    for (const CPoint& p : points_or_origin(cfg)) {
      Json c = to_json(monotonicity_check(*model, om, p, v));
      c["p"] = to_json(p);
      checks.push_back(c);
    }
    body["monotonicity"] = {{"outer", to_json(outer)}, {"checks", checks}};
  }
  Artifacts(ctx, cfg, certificate_json({model, model})).json("extremal.json", body);
}

// Random point of the domain with gauge below `radius`.
CPoint random_point(const DomainSpec& domain, double radius, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const int n = domain.dimension();
  CPoint z(n);
  for (int i = 0; i < n; ++i) z[i] = Complex(g(rng), g(rng));
  return z * (radius * u(rng) / domain.gauge(z));
}

CVector random_vector(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CVector v(n);
  for (int i = 0; i < n; ++i) v[i] = Complex(g(rng), g(rng));
  return v / v.norm();
}

void cmd_transform(const RunConfig& cfg, const CommandContext& ctx) {
  const Json& t = block(cfg, "transform");
  check_object(t, "config.transform", {"map"},
               {"diagonal", "matrix", "target", "points", "vectors", "kinds", "random", "radius"});
  const int n = cfg.domain.dimension();
  const std::string map = t["map"].is_string() ? t["map"].get<std::string>() : "";
  std::mt19937_64 rng(cfg.seed);
  const int random = t.contains("random") ? int_field(t, "random", "config.transform") : 0;
  const double radius = t.contains("radius") ? number_field(t, "radius", "config.transform") : 0.7;

  std::optional<Biholo> f;
  std::shared_ptr<const Kernel> src, dst;
  std::shared_ptr<const KernelModel> src_model, dst_model;
  std::vector<CPoint> pts;
  if (map == "cayley") {
    // Siegel domain to the unit ball, both sides closed form.
    f = cayley_data(n);
    src = std::make_shared<ClosedKernel>(ClosedKernel::siegel(n, cfg.d));
    dst = std::make_shared<ClosedKernel>(ClosedKernel::ball(n, cfg.d));
    for (int i = 0; i < random; ++i) pts.push_back(cayley(random_point(DomainSpec::ball(n), radius, rng)));
  } else {
    if (!t.contains("target")) throw SchemaError("config.transform.target", "missing required field");
    const DomainSpec target = domain_from_json(t["target"], "config.transform.target");
    if (map == "dilation") {
      if (!t.contains("diagonal")) throw SchemaError("config.transform.diagonal", "missing required field");
      f = Biholo::dilation(point_field(t["diagonal"], "config.transform.diagonal", n));
    } else if (map == "linear") {
      if (!t.contains("matrix")) throw SchemaError("config.transform.matrix", "missing required field");
      const auto rows = point_list(t["matrix"], "config.transform.matrix", n);
      if (static_cast<int>(rows.size()) != n) throw SchemaError("config.transform.matrix", "expected n rows");
      CMatrix a(n, n);
      for (int i = 0; i < n; ++i) a.row(i) = rows[static_cast<std::size_t>(i)].transpose();
      f = Biholo::linear(a);
    } else {
      throw SchemaError("config.transform.map", "expected one of cayley, dilation, linear");
    }
    const Loaded s = kernel_for(cfg, ctx);
    RunConfig tcfg = cfg;
    tcfg.domain = target;
    const Loaded d = kernel_for(tcfg, CommandContext{ctx.out_dir, "", ctx.threads});
    src = s.kernel;
    dst = d.kernel;
    if (t.contains("kinds")) {
      src_model = s.model ? s.model : model_for(cfg, CommandContext{ctx.out_dir, "", ctx.threads});
      dst_model = d.model ? d.model : model_for(tcfg, CommandContext{ctx.out_dir, "", ctx.threads});
    }
    for (int i = 0; i < random; ++i) pts.push_back(random_point(cfg.domain, radius, rng));
  }
  if (t.contains("points")) {
    const auto extra = point_list(t["points"], "config.transform.points", n);
    pts.insert(pts.end(), extra.begin(), extra.end());
  }
  if (pts.empty()) throw SchemaError("config.transform.points", "no points given and random = 0");
  std::vector<CVector> vecs;
  if (t.contains("vectors")) vecs = point_list(t["vectors"], "config.transform.vectors", n);
  while (vecs.size() < pts.size()) vecs.push_back(random_vector(n, rng));

  std::vector<MinIntegralKind> kinds;
  if (t.contains("kinds")) {
    if (!t["kinds"].is_array()) throw SchemaError("config.transform.kinds", "expected a list of names");
    for (const Json& k : t["kinds"]) {
      if (!k.is_string()) throw SchemaError("config.transform.kinds", "expected a list of names");
      kinds.push_back(MinIntegralKind::parse(k.get<std::string>()));
    }
  }
  Json rows = Json::array();
  double worst = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const CPoint& z = pts[i];
    const CPoint& w = pts[(i + 1) % pts.size()];
    Json r{{"z", to_json(z)},
           {"v", to_json(vecs[i])},
           {"kernel", transform_kernel_residual(*f, *src, *dst, z, w)},
           {"metric", transform_metric_residual(*f, *src, *dst, z, vecs[i])}};
    worst = std::max({worst, r["kernel"].get<double>(), r["metric"].get<double>()});
    for (const MinIntegralKind& k : kinds) {
      const double res = transform_min_integral_residual(*f, *src_model, *dst_model, k, z, vecs[i]);
      r["min_integral_" + k.name()] = res;
      worst = std::max(worst, res);
    }
    rows.push_back(r);
  }
  Loaded cert{src, src_model};
  Artifacts(ctx, cfg, certificate_json(cert))
      .json("transform.json", {{"map", f->name()}, {"rows", rows}, {"max_residual", worst}});
  spdlog::info("max transformation residual {}", worst);
}

void cmd_pinchuk(const RunConfig& cfg, const CommandContext& ctx) {
  const Json& b = block(cfg, "pinchuk");
  check_object(b, "config.pinchuk", {"zeta"}, {"reference", "deltas"});
  const int n = cfg.domain.dimension();
  const CPoint zeta = point_field(b["zeta"], "config.pinchuk.zeta", n);
  const CPoint ref = b.contains("reference") ? point_field(b["reference"], "config.pinchuk.reference", n) : zeta;
  const PinchukMap map = pinchuk_normalize(cfg.domain, zeta, ref);
  Json body{{"map", to_json(map)}, {"normal_form", to_json(normal_form_check(map))}};
  if (b.contains("deltas")) {
    Json frames = Json::array();
    int j = 0;
    for (double delta : number_list(b["deltas"], "config.pinchuk.deltas"))
      frames.push_back(to_json(scaling_frame(cfg.domain, zeta, delta, j++)));
    body["frames"] = frames;
  }
  Artifacts(ctx, cfg, {{"closed_form", true}}).json("pinchuk.json", body);
}

void cmd_asymptotics(const RunConfig& cfg, const CommandContext& ctx) {
  const Json& b = block(cfg, "asymptotics");
  check_object(b, "config.asymptotics", {"p0"}, {"v", "deltas", "trailing", "tolerance", "max_relative_tail"});
  const int n = cfg.domain.dimension();
  const Loaded k = kernel_for(cfg, ctx);
  const CPoint p0 = point_field(b["p0"], "config.asymptotics.p0", n);
  const CVector v = b.contains("v") ? point_field(b["v"], "config.asymptotics.v", n) : cfg.v.value_or(unit_vector(n));
  std::vector<double> deltas;
  if (b.contains("deltas")) {
    deltas = number_list(b["deltas"], "config.asymptotics.deltas");
  } else {
    for (int i = 0; i <= 10; ++i) deltas.push_back(std::ldexp(1e-3, -i));
  }
  AsymptoticsOptions opt;
  opt.threads = ctx.threads;
  opt.tolerance = k.model ? 1e-3 : 1e-6;
  if (b.contains("trailing")) opt.trailing = int_field(b, "trailing", "config.asymptotics");
  if (b.contains("tolerance")) opt.tolerance = number_field(b, "tolerance", "config.asymptotics");
  if (b.contains("max_relative_tail"))
    opt.max_relative_tail = number_field(b, "max_relative_tail", "config.asymptotics");
  const AsymptoticsResult r = asymptotics_sweep(cfg.domain, *k.kernel, p0, v, deltas, opt);

  Artifacts out(ctx, cfg, certificate_json(k));
  std::vector<std::string> header{"delta"};
  for (int t = 0; t < kAsymptoticTags; ++t) header.emplace_back(1, asymptotic_tag(t));
  header.insert(header.end(), {"relative_tail", "certified"});
  std::vector<std::vector<double>> rows;
  for (const AsymptoticsRow& row : r.rows) {
    std::vector<double> x{row.delta};
    x.insert(x.end(), row.qty.begin(), row.qty.end());
    x.insert(x.end(), {row.relative_tail, row.certified ? 1.0 : 0.0});
    rows.push_back(x);
  }
  out.csv("asymptotics.csv", header, rows);
  out.json("asymptotics_verdict.json", to_json(r));
  for (int t = 0; t < kAsymptoticTags; ++t) {
    std::vector<std::pair<double, double>> xy;
    for (const AsymptoticsRow& row : r.rows) xy.emplace_back(row.delta, row.qty[t]);
    out.plot(std::string("asymptotics_") + asymptotic_tag(t) + ".dat", "delta", std::string(1, asymptotic_tag(t)),
             xy);
  }
  for (const TagVerdict& tv : r.verdicts)
    spdlog::info("({}) limit {} target {} rel {} {}", tv.tag, tv.limit, tv.target, tv.relative_error,
                 tv.pass ? "pass" : "FAIL");
}

void cmd_ramadanov(const RunConfig& cfg, const CommandContext& ctx) {
  const Json& b = block(cfg, "ramadanov");
  check_object(b, "config.ramadanov", {"family", "grid"}, {"j_max", "boundary_samples", "epsilon_gate"});
  std::vector<DomainSpec> family;
  if (b["family"].is_string()) {
    if (b["family"].get<std::string>() != "discs")
      throw SchemaError("config.ramadanov.family", "expected \"discs\" or a list of domains");
    family = disc_family(b.contains("j_max") ? int_field(b, "j_max", "config.ramadanov") : 12);
  } else if (b["family"].is_array()) {
    for (std::size_t i = 0; i < b["family"].size(); ++i)
      family.push_back(domain_from_json(b["family"][i], "config.ramadanov.family[" + std::to_string(i) + "]"));
  } else {
    throw SchemaError("config.ramadanov.family", "expected \"discs\" or a list of domains");
  }
  const Json& g = b["grid"];
  check_object(g, "config.ramadanov.grid", {"radius", "steps"});
  const auto grid = compact_grid(cfg.domain.dimension(), number_field(g, "radius", "config.ramadanov.grid"),
                                 int_field(g, "steps", "config.ramadanov.grid"));
  RamadanovOptions opt;
  opt.truncation = cfg.N;
  opt.build = build_options(cfg, ctx);
  opt.threads = ctx.threads;
  if (b.contains("boundary_samples")) opt.boundary_samples = int_field(b, "boundary_samples", "config.ramadanov");
  if (b.contains("epsilon_gate")) opt.epsilon_gate = number_field(b, "epsilon_gate", "config.ramadanov");
  const RamadanovResult r = ramadanov_run(family, cfg.domain, cfg.d, grid, opt);
  Artifacts out(ctx, cfg, {{"N", cfg.N}, {"closed_form_when_available", true}});
  std::vector<std::vector<double>> rows;
  for (const RamadanovRow& row : r.rows)
    rows.push_back({double(row.j), row.contains_grid ? 1.0 : 0.0, row.epsilon, row.sup_diff});
  out.csv("ramadanov.csv", {"j", "contains_grid", "epsilon", "sup_diff"}, rows);
  out.json("ramadanov.json", to_json(r));
}

void cmd_completeness(const RunConfig& cfg, const CommandContext& ctx) {
  const Json& b = block(cfg, "completeness");
  check_object(b, "config.completeness", {"p0", "s_values"}, {"rel_tol"});
  const Loaded k = kernel_for(cfg, ctx);
  const CPoint p0 = point_field(b["p0"], "config.completeness.p0", cfg.domain.dimension());
  const double rel = b.contains("rel_tol") ? number_field(b, "rel_tol", "config.completeness") : 1e-11;
  const CompletenessResult r =
      completeness_probe(*k.kernel, p0, number_list(b["s_values"], "config.completeness.s_values"), rel);
  Artifacts out(ctx, cfg, certificate_json(k));
  std::vector<std::vector<double>> rows;
  for (const CompletenessRow& row : r.rows)
    rows.push_back({row.s, row.length, row.log_scale, row.s > 0.0 ? row.length / std::atanh(row.s) : 0.0});
  out.csv("completeness.csv", {"s", "length", "log_scale", "length_over_atanh"}, rows);
  out.json("completeness.json", to_json(r));
}

void cmd_selberg(const RunConfig& cfg, const CommandContext& ctx) {
  const Json& b = block(cfg, "selberg");
  check_object(b, "config.selberg", {"s"}, {"w", "tol"});
  const int s = int_field(b, "s", "config.selberg");
  const double tol = b.contains("tol") ? number_field(b, "tol", "config.selberg") : 1e-10;
  std::vector<CPoint> ws{CPoint::Zero(cfg.domain.dimension())};
  if (b.contains("w")) ws = point_list(b["w"], "config.selberg.w", cfg.domain.dimension());
  Json rows = Json::array();
  for (const CPoint& w : ws) {
    const double c = selberg_constant(cfg.domain, s, w, tol);
    std::printf("%s\n", format_double(c).c_str());
    rows.push_back({{"w", to_json(w)}, {"value", c}});
  }
  Artifacts(ctx, cfg, {{"closed_form", true}}).json("selberg.json", {{"s", s}, {"values", rows}});
}

const std::map<std::string, std::function<void(const RunConfig&, const CommandContext&)>>& table() {
  static const std::map<std::string, std::function<void(const RunConfig&, const CommandContext&)>> t{
      {"build", cmd_build},         {"kernel", cmd_kernel},           {"metric", cmd_metric},
      {"curvature", cmd_curvature}, {"extremal", cmd_extremal},       {"transform", cmd_transform},
      {"pinchuk", cmd_pinchuk},     {"asymptotics", cmd_asymptotics}, {"ramadanov", cmd_ramadanov},
      {"completeness", cmd_completeness}, {"selberg", cmd_selberg}};
  return t;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"build",    "kernel",      "metric",    "curvature",
                                              "extremal", "transform",   "pinchuk",   "asymptotics",
                                              "ramadanov", "completeness", "selberg"};
  return names;
}

void run_command(const std::string& command, const RunConfig& config, const CommandContext& ctx) {
  const auto it = table().find(command);
  if (it == table().end()) throw ContractViolation("unknown command " + command);
  spdlog::debug("config hash {}", config.hash);
  it->second(config, ctx);
}

}  // namespace nskernel::cli
