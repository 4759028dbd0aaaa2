#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "nskernel/errors.hpp"
#include "nskernel_cli/cli.hpp"

using namespace nskernel;
using namespace nskernel::cli;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("nskernel_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string schema_path(const char* text) {
  try {
    parse_config(Json::parse(text));
  } catch (const SchemaError& e) {
    return e.path();
  }
  return "accepted";
}

int run_main(std::vector<std::string> args) {
  args.insert(args.begin(), "nskernel");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  return main_entry(static_cast<int>(argv.size()), argv.data());
}

}  // namespace

TEST(Config, RejectsBadDocuments) {
  EXPECT_EQ(schema_path(R"({})"), "config.domain");
  EXPECT_EQ(schema_path(R"({"domain":{"type":"ball","n":2},"extra":1})"), "config.extra");
  EXPECT_EQ(schema_path(R"({"domain":{"type":"ball","n":2},"d":-1})"), "config.d");
  EXPECT_EQ(schema_path(R"({"domain":{"type":"ball","n":2},"d":0.5})"), "config.d");
  EXPECT_EQ(schema_path(R"({"domain":{"type":"ball","n":2},"kernel":"exact"})"), "config.kernel");
  EXPECT_EQ(schema_path(R"({"domain":{"type":"ball","n":2},"points":[[0.1]]})"), "config.points[0]");
  EXPECT_EQ(schema_path(R"({"domain":{"type":"ball","n":2},"build":{"radius":0.5}})"), "config.build.radius");
  EXPECT_EQ(schema_path(R"({"domain":{"type":"ball","n":1},"points":[[0.1]],"w":[[0.1],[0.2]]})"), "config.w");
  EXPECT_EQ(schema_path(R"({"domain":{"type":"ball","n":1}})"), "accepted");
}

TEST(Config, ParsesFields) {
  const RunConfig c = parse_config(Json::parse(
      R"({"domain":{"type":"diagonal_ball","n":2,"scales":[4,1]},"d":1,"N":12,"seed":7,"points":[[0.1,[0.2,0.1]]],"v":[1,0]})"));
  EXPECT_EQ(c.domain, DomainSpec::diagonal_ball({4.0, 1.0}));
  EXPECT_EQ(c.d, 1);
  EXPECT_EQ(c.N, 12);
  EXPECT_EQ(c.seed, 7u);
  ASSERT_EQ(c.points.size(), 1u);
  EXPECT_EQ(c.points[0][1], Complex(0.2, 0.1));
  ASSERT_TRUE(c.v.has_value());
  EXPECT_EQ(c.hash.size(), 16u);
}

TEST(Commands, BuildSingleMoment) {
  const fs::path dir = scratch("build");
  const RunConfig c = parse_config(Json::parse(R"({"domain":{"type":"ball","n":1},"N":0})"));
  run_command("build", c, {dir.string(), "", 1});
  const KernelModel m = load_model((dir / "model.txt").string());
  ASSERT_EQ(m.indices().size(), 1u);
  EXPECT_NEAR(m.moment(0), kPi, 1e-14);
  const Json b = Json::parse(slurp(dir / "build.json"));
  EXPECT_EQ(b["config_hash"], c.hash);
}

TEST(Commands, RerunsAreByteIdentical) {
  const char* text =
      R"({"domain":{"type":"smooth_reinhardt","n":2,"rho_coeffs":[{"exponents":[1,0],"coeff":1},{"exponents":[0,1],"coeff":1},{"exponents":[2,0],"coeff":0.1},{"exponents":[0,0],"coeff":-1}]},
          "N":8,"tol":1e-10,"points":[[0.1,0.2],[[0.0,0.3],0.1]],"v":[1,0]})";
  const RunConfig c = parse_config(Json::parse(text));
  const fs::path a = scratch("serial"), b = scratch("parallel"), r = scratch("rerun");
  for (const auto& cmd : {"build", "kernel", "metric", "curvature"}) {
    run_command(cmd, c, {a.string(), "", 1});
    run_command(cmd, c, {b.string(), "", 4});
    run_command(cmd, c, {r.string(), "", 4});
  }
  for (const auto& f : {"model.txt", "build.json", "kernel.csv", "metric.csv", "curvature.csv"}) {
    EXPECT_EQ(slurp(a / f), slurp(b / f)) << f;
    EXPECT_EQ(slurp(b / f), slurp(r / f)) << f;
  }
  const std::string csv = slurp(a / "kernel.csv");
  EXPECT_EQ(csv.rfind("# config_hash=" + c.hash, 0), 0u);
}

TEST(Commands, LoadedModelGivesSameKernel) {
  const fs::path dir = scratch("model");
  const RunConfig c = parse_config(
      Json::parse(R"({"domain":{"type":"ball","n":2},"d":1,"N":10,"kernel":"series","points":[[0.1,0.2]]})"));
  run_command("build", c, {dir.string(), "", 1});
  run_command("kernel", c, {dir.string(), "", 1});
  const std::string built = slurp(dir / "kernel.csv");
  run_command("kernel", c, {dir.string(), (dir / "model.txt").string(), 1});
  EXPECT_EQ(slurp(dir / "kernel.csv"), built);
  const RunConfig other = parse_config(
      Json::parse(R"({"domain":{"type":"ball","n":2},"d":0,"N":10,"kernel":"series","points":[[0.1,0.2]]})"));
  EXPECT_THROW(run_command("kernel", other, {dir.string(), (dir / "model.txt").string(), 1}), ContractViolation);
}

TEST(Commands, ExitCodes) {
  const fs::path dir = scratch("exit");
  {
    std::ofstream(dir / "bad.json") << R"({"domain":{"type":"ball","n":2},"bogus":true})";
    std::ofstream(dir / "ok.json") << R"({"domain":{"type":"ball","n":1},"selberg":{"s":2}})";
    std::ofstream(dir / "far.json") << R"({"domain":{"type":"ball","n":1},"points":[[2.0]]})";
  }
  EXPECT_EQ(run_main({"kernel", "--config", (dir / "bad.json").string(), "--out", dir.string()}), kExitContract);
  EXPECT_EQ(run_main({"selberg", "--config", (dir / "ok.json").string(), "--out", dir.string()}), kExitOk);
  EXPECT_TRUE(fs::exists(dir / "selberg.json"));
  EXPECT_NE(run_main({"kernel", "--config", (dir / "far.json").string(), "--out", dir.string()}), kExitOk);
  EXPECT_NE(run_main({"nonsense", "--config", (dir / "ok.json").string()}), kExitOk);
}
