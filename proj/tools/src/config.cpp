#include "nskernel_cli/config.hpp"

#include <fstream>

namespace nskernel::cli {

std::vector<double> number_list(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) throw SchemaError(path, "expected a nonempty list of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw SchemaError(path + "[" + std::to_string(i) + "]", "expected a number");
    out.push_back(j[i].get<double>());
  }
  return out;
}

CPoint point_field(const Json& j, const std::string& path, int n) {
  const CVector v = cvector_from_json(j, path);
  if (v.size() != n) throw SchemaError(path, "expected " + std::to_string(n) + " coordinates");
  return v;
}

std::vector<CPoint> point_list(const Json& j, const std::string& path, int n) {
  if (!j.is_array() || j.empty()) throw SchemaError(path, "expected a nonempty list of points");
  std::vector<CPoint> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(point_field(j[i], path + "[" + std::to_string(i) + "]", n));
  return out;
}

RunConfig parse_config(const Json& doc) {
  check_object(doc, "config", {"domain"},
               {"d", "N", "tol", "seed", "output", "kernel", "build", "points", "w", "v", "vectors", "transform",
                "pinchuk", "asymptotics", "ramadanov", "completeness", "selberg", "monotonicity"});
  RunConfig c;
  c.raw = doc;
  c.hash = config_hash(doc);
  c.domain = domain_from_json(doc["domain"], "config.domain");
  const int n = c.domain.dimension();
  if (doc.contains("d")) c.d = int_field(doc, "d", "config");
  if (c.d < 0) throw SchemaError("config.d", "order must be nonnegative");
  if (doc.contains("N")) c.N = int_field(doc, "N", "config");
  if (c.N < 0) throw SchemaError("config.N", "truncation must be nonnegative");
  if (doc.contains("tol")) c.tol = number_field(doc, "tol", "config");
  if (!(c.tol > 0.0)) throw SchemaError("config.tol", "tolerance must be positive");
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) throw SchemaError("config.seed", "expected a nonnegative integer");
    c.seed = doc["seed"].get<std::uint64_t>();
  }
  if (doc.contains("output") && !doc["output"].is_string()) throw SchemaError("config.output", "expected a string");
  if (doc.contains("kernel")) {
    const Json& k = doc["kernel"];
    const std::string s = k.is_string() ? k.get<std::string>() : "";
    if (s == "auto") c.kernel = KernelChoice::Auto;
    else if (s == "closed") c.kernel = KernelChoice::Closed;
    else if (s == "series") c.kernel = KernelChoice::Series;
    else throw SchemaError("config.kernel", "expected one of auto, closed, series");
  }
  c.build.tol = c.tol;
  if (doc.contains("build")) {
    const Json& b = doc["build"];
    check_object(b, "config.build", {},
                 {"cert_radius", "quadrature_points", "max_depth", "tail_samples", "base_extra", "allow_large"});
    if (b.contains("cert_radius")) c.build.cert_radius = number_field(b, "cert_radius", "config.build");
    if (b.contains("quadrature_points"))
      c.build.quadrature_points = int_field(b, "quadrature_points", "config.build");
    if (b.contains("max_depth")) c.build.max_depth = int_field(b, "max_depth", "config.build");
    if (b.contains("tail_samples")) c.build.tail_samples = int_field(b, "tail_samples", "config.build");
    if (b.contains("base_extra")) c.build.base_extra = int_field(b, "base_extra", "config.build");
    if (b.contains("allow_large")) {
      if (!b["allow_large"].is_boolean()) throw SchemaError("config.build.allow_large", "expected a boolean");
      c.build.allow_large = b["allow_large"].get<bool>();
    }
  }
  if (doc.contains("points")) c.points = point_list(doc["points"], "config.points", n);
  if (doc.contains("w")) {
    c.w = point_list(doc["w"], "config.w", n);
    if (c.w.size() != c.points.size()) throw SchemaError("config.w", "needs one entry per point");
  }
  if (doc.contains("v")) c.v = point_field(doc["v"], "config.v", n);
  if (doc.contains("vectors")) c.vectors = point_list(doc["vectors"], "config.vectors", n);
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open config " + path);
  Json doc;
  try {
    doc = Json::parse(f);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("config", std::string("not valid JSON: ") + e.what());
  }
  return parse_config(doc);
}

}  // namespace nskernel::cli
