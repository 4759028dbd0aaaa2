#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "nskernel/domain.hpp"
#include "nskernel/errors.hpp"
#include "nskernel/experiments.hpp"
#include "nskernel/extremal.hpp"
#include "nskernel/geometry.hpp"
#include "nskernel/kernel.hpp"
#include "nskernel/metric.hpp"
#include "nskernel/types.hpp"

namespace nskernel {

using Json = nlohmann::ordered_json;

// Invalid document; the message starts with the JSON path of the offending field.
class SchemaError : public ContractViolation {
 public:
  SchemaError(const std::string& path, const std::string& what);
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Shortest round-trip decimal form.
std::string format_double(double x);

// Complex numbers are [re, im]; vectors are lists of those; matrices are
// row-major lists of rows.
Json to_json(Complex c);
Json to_json(const CVector& v);
Json to_json(const CMatrix& m);
Complex complex_from_json(const Json& j, const std::string& path);
CVector cvector_from_json(const Json& j, const std::string& path);

// Key checks for an object at `path`: all required keys present, nothing else
// beyond the optional keys.
void check_object(const Json& j, const std::string& path, std::initializer_list<std::string_view> required,
                  std::initializer_list<std::string_view> optional = {});
double number_field(const Json& j, const std::string& key, const std::string& path);
int int_field(const Json& j, const std::string& key, const std::string& path);

Json to_json(const DomainSpec& domain);
DomainSpec domain_from_json(const Json& j, const std::string& path = "domain");

Json to_json(const ModelCertificate& cert);
Json to_json(const MinIntegralResult& r);
Json to_json(const IdentityReport& r);
Json to_json(const MonotonicityReport& r);
Json to_json(const MetricPointData& m);
Json to_json(const PinchukMap& m);
Json to_json(const NormalFormReport& r);
Json to_json(const ScalingFrame& f);
Json to_json(const AsymptoticsResult& r);
Json to_json(const RamadanovResult& r);
Json to_json(const CompletenessResult& r);

// Text model format: header lines "key value", then one line per moment with
// the multi-index entries followed by log gamma_alpha.
void save_model(const KernelModel& model, std::ostream& out);
void save_model(const KernelModel& model, const std::string& path);
KernelModel load_model(std::istream& in);
KernelModel load_model(const std::string& path);

// 64-bit FNV-1a of the bytes, as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);
std::string config_hash(const Json& config);

// Comma-separated, '.' decimal, header row, LF line endings.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, std::vector<std::string> header);
  void row(const std::vector<double>& values);
  void row(const std::vector<std::string>& cells);
  std::size_t columns() const { return columns_; }

 private:
  std::ostream& out_;
  std::size_t columns_;
};

}  // namespace nskernel
