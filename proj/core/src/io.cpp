#include "nskernel/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "nskernel/multiindex.hpp"

namespace nskernel {

SchemaError::SchemaError(const std::string& path, const std::string& what)
    : ContractViolation(path + ": " + what), path_(path) {}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

Json to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Json to_json(const CVector& v) {
  Json out = Json::array();
  for (Complex c : v) out.push_back(to_json(c));
  return out;
}

Json to_json(const CMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(to_json(CVector(m.row(i).transpose())));
  return out;
}

Complex complex_from_json(const Json& j, const std::string& path) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw SchemaError(path, "expected a number or [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

CVector cvector_from_json(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) throw SchemaError(path, "expected a nonempty list of complex numbers");
  CVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    v[static_cast<Eigen::Index>(i)] = complex_from_json(j[i], path + "[" + std::to_string(i) + "]");
  return v;
}

void check_object(const Json& j, const std::string& path, std::initializer_list<std::string_view> required,
                  std::initializer_list<std::string_view> optional) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  for (std::string_view k : required)
    if (!j.contains(std::string(k))) throw SchemaError(path + "." + std::string(k), "missing required field");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (std::string_view k : required) known = known || k == key;
    for (std::string_view k : optional) known = known || k == key;
    if (!known) throw SchemaError(path + "." + key, "unknown field");
  }
}

double number_field(const Json& j, const std::string& key, const std::string& path) {
  const Json& v = j.at(key);
  if (!v.is_number()) throw SchemaError(path + "." + key, "expected a number");
  return v.get<double>();
}

int int_field(const Json& j, const std::string& key, const std::string& path) {
  const Json& v = j.at(key);
  if (!v.is_number_integer()) throw SchemaError(path + "." + key, "expected an integer");
  return v.get<int>();
}

Json to_json(const DomainSpec& domain) {
  Json j;
  j["type"] = to_string(domain.type());
  j["n"] = domain.dimension();
  if (domain.type() == DomainType::DiagonalBall) j["scales"] = domain.scales();
  if (domain.type() == DomainType::SmoothReinhardt) {
    Json terms = Json::array();
    for (const RhoTerm& t : domain.rho().terms()) terms.push_back({{"exponents", t.exponents}, {"coeff", t.coeff}});
    j["rho_coeffs"] = terms;
  }
  return j;
}

DomainSpec domain_from_json(const Json& j, const std::string& path) {
  check_object(j, path, {"type", "n"}, {"scales", "rho_coeffs"});
  if (!j["type"].is_string()) throw SchemaError(path + ".type", "expected a string");
  DomainType type;
  try {
    type = domain_type_from_string(j["type"].get<std::string>());
  } catch (const Error& e) {
    throw SchemaError(path + ".type", e.what());
  }
  const int n = int_field(j, "n", path);
  if (n < 1) throw SchemaError(path + ".n", "dimension must be positive");
  auto forbid = [&](const char* key) {
    if (j.contains(key)) throw SchemaError(path + "." + key, "not allowed for type " + to_string(type));
  };
  switch (type) {
    case DomainType::Ball:
      forbid("scales");
      forbid("rho_coeffs");
      return DomainSpec::ball(n);
    case DomainType::Polydisc:
      forbid("scales");
      forbid("rho_coeffs");
      return DomainSpec::polydisc(n);
    case DomainType::DiagonalBall: {
      forbid("rho_coeffs");
      if (!j.contains("scales")) throw SchemaError(path + ".scales", "missing required field");
      const Json& s = j["scales"];
      if (!s.is_array() || static_cast<int>(s.size()) != n)
        throw SchemaError(path + ".scales", "expected " + std::to_string(n) + " numbers");
      std::vector<double> scales;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (!s[i].is_number()) throw SchemaError(path + ".scales[" + std::to_string(i) + "]", "expected a number");
        scales.push_back(s[i].get<double>());
      }
      return DomainSpec::diagonal_ball(scales);
    }
    case DomainType::SmoothReinhardt: {
      forbid("scales");
      if (!j.contains("rho_coeffs")) throw SchemaError(path + ".rho_coeffs", "missing required field");
      const Json& t = j["rho_coeffs"];
      if (!t.is_array() || t.empty()) throw SchemaError(path + ".rho_coeffs", "expected a nonempty list");
      std::vector<RhoTerm> terms;
      for (std::size_t i = 0; i < t.size(); ++i) {
        const std::string p = path + ".rho_coeffs[" + std::to_string(i) + "]";
        check_object(t[i], p, {"exponents", "coeff"});
        const Json& e = t[i]["exponents"];
        if (!e.is_array() || static_cast<int>(e.size()) != n)
          throw SchemaError(p + ".exponents", "expected " + std::to_string(n) + " integers");
        RhoTerm term;
        for (const Json& x : e) {
          if (!x.is_number_integer() || x.get<int>() < 0)
            throw SchemaError(p + ".exponents", "expected nonnegative integers");
          term.exponents.push_back(x.get<int>());
        }
        term.coeff = number_field(t[i], "coeff", p);
        terms.push_back(term);
      }
      return DomainSpec::smooth_reinhardt(n, terms);
    }
  }
  throw SchemaError(path + ".type", "unsupported domain type");
}

Json to_json(const ModelCertificate& c) {
  return {{"cert_radius", c.cert_radius},
          {"tail_bound", c.tail_bound},
          {"tail_bound_relative", c.tail_bound_relative},
          {"weight_error", c.weight_error},
          {"samples", c.samples}};
}

Json to_json(const MinIntegralResult& r) {
  return {{"kind", r.kind.name()},  {"p", to_json(r.p)},        {"v", to_json(r.v)},
          {"value", r.value},       {"residuals", r.residuals}, {"N", r.truncation},
          {"value_lower", r.value_lower}, {"drift", r.drift}};
}

Json to_json(const IdentityReport& r) {
  Json entries = Json::array();
  for (const IdentityEntry& e : r.entries)
    entries.push_back({{"name", e.name}, {"lhs", e.lhs}, {"rhs", e.rhs}, {"residual", e.residual}});
  Json integrals = Json::array();
  for (const MinIntegralResult& m : r.integrals) integrals.push_back(to_json(m));
  return {{"p", to_json(r.p)},
          {"v", to_json(r.v)},
          {"N", r.truncation},
          {"identities", entries},
          {"integrals", integrals},
          {"max_residual", r.max_residual},
          {"max_drift", r.max_drift}};
}

Json to_json(const MonotonicityReport& r) {
  Json entries = Json::array();
  for (const MonotonicityEntry& e : r.entries)
    entries.push_back({{"name", e.name}, {"inner", e.inner}, {"outer", e.outer}, {"holds", e.holds}});
  return {{"entries", entries}, {"all_hold", r.all_hold}};
}

Json to_json(const MetricPointData& m) {
  return {{"z", to_json(m.z)},       {"d", m.order},
          {"K", m.K},                {"G", to_json(m.G)},
          {"det_G", m.det_G},        {"beta", beta_invariant(m)},
          {"relative_tail", m.relative_tail}, {"certified", m.certified}};
}

Json to_json(const PinchukMap& m) {
  return {{"zeta", to_json(m.zeta)},
          {"reference", to_json(m.reference)},
          {"rotation", to_json(m.rotation)},
          {"rho_scale", m.rho_scale},
          {"P", to_json(m.P)},
          {"a1", to_json(m.a1)},
          {"b1", to_json(m.b1)},
          {"Lambda", to_json(m.Lambda)},
          {"U", to_json(m.U)},
          {"jacobian_at_zeta", to_json(m.h.jacobian(m.zeta))},
          {"defining_function", m.rho.label()}};
}

Json to_json(const NormalFormReport& r) {
  return {{"origin_residual", r.origin_residual},     {"value_residual", r.value_residual},
          {"gradient_residual", r.gradient_residual}, {"q_residual", r.q_residual},
          {"h_residual", r.h_residual},               {"normal_image_residual", r.normal_image_residual},
          {"max_jet_residual", r.max_jet_residual()}};
}

Json to_json(const ScalingFrame& f) {
  return {{"j", f.j},
          {"p", to_json(f.p)},
          {"zeta", to_json(f.zeta)},
          {"delta", f.delta},
          {"eta", f.eta},
          {"T", to_json(f.T)},
          {"S", to_json(f.S)},
          {"T_h_p", to_json(f.dilation()(f.pinchuk.h(f.p)))},
          {"pinchuk", to_json(f.pinchuk)}};
}

Json to_json(const AsymptoticsResult& r) {
  auto row_json = [](const AsymptoticsRow& row) {
    Json q;
    for (int t = 0; t < kAsymptoticTags; ++t) q[std::string(1, asymptotic_tag(t))] = row.qty[t];
    return Json{{"delta", row.delta},
                {"relative_tail", row.relative_tail},
                {"certified", row.certified},
                {"qty", q}};
  };
  Json verdicts = Json::array();
  for (const TagVerdict& v : r.verdicts)
    verdicts.push_back({{"tag", std::string(1, v.tag)},
                        {"limit", v.limit},
                        {"limit_error", v.limit_error},
                        {"target", v.target},
                        {"relative_error", v.relative_error},
                        {"pass", v.pass},
                        {"variable", v.variable}});
  Json rows = Json::array();
  for (const AsymptoticsRow& row : r.rows) rows.push_back(row_json(row));
  Json dropped = Json::array();
  for (const AsymptoticsRow& row : r.dropped) dropped.push_back(row.delta);
  return {{"n", r.n},
          {"d", r.d},
          {"p0", to_json(r.p0)},
          {"v", to_json(r.v)},
          {"v_normal_norm", r.v_normal.norm()},
          {"levi", r.levi},
          {"defining_function", r.defining_function},
          {"window", {r.window_min, r.window_max}},
          {"rows", rows},
          {"dropped_deltas", dropped},
          {"verdicts", verdicts},
          {"all_pass", r.all_pass()}};
}

Json to_json(const RamadanovResult& r) {
  Json rows = Json::array();
  for (const RamadanovRow& row : r.rows)
    rows.push_back({{"j", row.j},
                    {"domain", row.domain},
                    {"contains_grid", row.contains_grid},
                    {"epsilon", row.epsilon},
                    {"sup_diff", row.sup_diff}});
  return {{"d", r.d}, {"rows", rows}, {"first_valid", r.first_valid}, {"monotone", r.monotone},
          {"final_sup", r.final_sup}};
}

Json to_json(const CompletenessResult& r) {
  Json rows = Json::array();
  for (const CompletenessRow& row : r.rows)
    rows.push_back({{"s", row.s}, {"length", row.length}, {"log_scale", row.log_scale}});
  return {{"p0", to_json(r.p0)},         {"rows", rows},
          {"fitted_c", r.fitted_c},     {"c_min", r.c_min},
          {"increasing", r.increasing}, {"dominates", r.dominates}};
}

namespace {

constexpr const char* kModelMagic = "nskernel-model";
constexpr int kModelVersion = 1;

}  // namespace

void save_model(const KernelModel& model, std::ostream& out) {
  const ModelCertificate& c = model.certificate();
  out << kModelMagic << ' ' << kModelVersion << '\n';
  out << "type " << to_string(model.domain().type()) << '\n';
  out << "n " << model.dimension() << '\n';
  out << "d " << model.order() << '\n';
  out << "N " << model.truncation() << '\n';
  out << "tol " << format_double(model.tolerance()) << '\n';
  out << "tail_bound " << format_double(c.tail_bound) << '\n';
  out << "tail_bound_relative " << format_double(c.tail_bound_relative) << '\n';
  out << "cert_radius " << format_double(c.cert_radius) << '\n';
  out << "weight_error " << format_double(c.weight_error) << '\n';
  out << "samples " << c.samples << '\n';
  out << "domain " << to_json(model.domain()).dump() << '\n';
  out << "moments " << model.indices().size() << '\n';
  for (std::size_t k = 0; k < model.indices().size(); ++k) {
    for (int a : model.indices()[k].entries()) out << a << ' ';
    out << format_double(model.log_moments()[k]) << '\n';
  }
}

void save_model(const KernelModel& model, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open " + path + " for writing");
  save_model(model, f);
  if (!f) throw Error("write to " + path + " failed");
}

KernelModel load_model(std::istream& in) {
  auto fail = [](const std::string& what) -> KernelModel { throw SchemaError("model", what); };
  std::string line;
  if (!std::getline(in, line)) return fail("empty model file");
  {
    std::istringstream is(line);
    std::string magic;
    int version = 0;
    is >> magic >> version;
    if (magic != kModelMagic) return fail("not a model file");
    if (version != kModelVersion) return fail("unsupported model version " + std::to_string(version));
  }
  std::map<std::string, std::string> header;
  std::size_t count = 0;
  while (std::getline(in, line)) {
    const auto sp = line.find(' ');
    if (sp == std::string::npos) return fail("malformed header line '" + line + "'");
    const std::string key = line.substr(0, sp);
    const std::string value = line.substr(sp + 1);
    if (key == "moments") {
      count = std::stoul(value);
      break;
    }
    header[key] = value;
  }
  for (const char* key : {"type", "n", "d", "N", "tol", "tail_bound", "domain"})
    if (!header.count(key)) return fail(std::string("missing header field ") + key);
  const DomainSpec domain = domain_from_json(Json::parse(header["domain"]), "model.domain");
  if (to_string(domain.type()) != header["type"] || std::to_string(domain.dimension()) != header["n"])
    return fail("header type/n disagree with the domain record");
  const int n = domain.dimension();
  const int d = std::stoi(header["d"]);
  const int N = std::stoi(header["N"]);
  auto num = [&](const char* key, double fallback) {
    return header.count(key) ? std::stod(header[key]) : fallback;
  };
  ModelCertificate cert;
  cert.tail_bound = num("tail_bound", 0.0);
  cert.tail_bound_relative = num("tail_bound_relative", 0.0);
  cert.cert_radius = num("cert_radius", 0.5);
  cert.weight_error = num("weight_error", 0.0);
  cert.samples = static_cast<int>(num("samples", 0.0));

  const std::vector<MultiIndex> expected = enumerate_multiindices(n, N);
  if (count != expected.size()) return fail("moment count does not match n and N");
  std::unordered_map<MultiIndex, double, MultiIndexHash> table;
  for (std::size_t k = 0; k < count; ++k) {
    if (!std::getline(in, line)) return fail("truncated moment table");
    std::istringstream is(line);
    std::vector<int> e(static_cast<std::size_t>(n));
    for (int& a : e) is >> a;
    std::string value;
    is >> value;
    if (!is && !is.eof()) return fail("malformed moment line " + std::to_string(k));
    double lg = 0.0;
    const auto res = std::from_chars(value.data(), value.data() + value.size(), lg);
    if (res.ec != std::errc()) return fail("malformed moment value on line " + std::to_string(k));
    table[MultiIndex(e)] = lg;
  }
  std::vector<double> logs;
  logs.reserve(count);
  for (const MultiIndex& a : expected) {
    const auto it = table.find(a);
    if (it == table.end()) return fail("missing moment " + a.to_string());
    logs.push_back(it->second);
  }
  return KernelModel(domain, d, N, std::stod(header["tol"]), std::move(logs), cert);
}

KernelModel load_model(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open " + path);
  return load_model(f);
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = digits[h & 0xf];
  return out;
}

std::string config_hash(const Json& config) { return fnv1a_hex(config.dump()); }

CsvWriter::CsvWriter(std::ostream& out, std::vector<std::string> header) : out_(out), columns_(header.size()) {
  row(header);
}

void CsvWriter::row(const std::vector<double>& values) {
  std::vector<std::string> cells;
  cells.reserve(values.size());
  for (double v : values) cells.push_back(format_double(v));
  row(cells);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  if (cells.size() != columns_) throw ContractViolation("CSV row width differs from the header");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ << ',';
    out_ << cells[i];
  }
  out_ << '\n';
}

}  // namespace nskernel
