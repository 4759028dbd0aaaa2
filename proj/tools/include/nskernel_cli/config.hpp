#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nskernel/domain.hpp"
#include "nskernel/io.hpp"
#include "nskernel/kernel.hpp"

namespace nskernel::cli {

enum class KernelChoice { Auto, Closed, Series };

struct RunConfig {
  Json raw;
  std::string hash;
  DomainSpec domain = DomainSpec::ball(1);
  int d = 0;
  int N = 30;
  double tol = 1e-12;
  std::uint64_t seed = 1;
  KernelChoice kernel = KernelChoice::Auto;
  BuildOptions build;
  std::vector<CPoint> points;
  std::vector<CPoint> w;
  std::optional<CVector> v;
  std::vector<CVector> vectors;
};

// Parses and validates the document; unknown fields raise SchemaError.
RunConfig parse_config(const Json& doc);
RunConfig load_config(const std::string& path);

std::vector<CPoint> point_list(const Json& j, const std::string& path, int n);
CPoint point_field(const Json& j, const std::string& path, int n);
std::vector<double> number_list(const Json& j, const std::string& path);

}  // namespace nskernel::cli
