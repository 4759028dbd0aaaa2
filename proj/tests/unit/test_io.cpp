#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "generators.hpp"
#include "nskernel/io.hpp"

using namespace nskernel;

TEST(Io, FormatDoubleRoundTrips) {
  gen::Gen g(1);
  for (int i = 0; i < 200; ++i) {
    const double x = g.normal() * std::pow(10.0, g.integer(-300, 300));
    EXPECT_EQ(std::stod(format_double(x)), x);
  }
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(std::numeric_limits<double>::quiet_NaN()), "nan");
  EXPECT_EQ(format_double(-std::numeric_limits<double>::infinity()), "-inf");
}

TEST(Io, Fnv1aVectors) {
  EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a_hex("a"), "af63dc4c8601ec8c");
  EXPECT_EQ(fnv1a_hex("foobar"), "85944171f73967e8");
  const Json a = Json::parse(R"({"domain":{"type":"ball","n":2},"d":1})");
  const Json b = Json::parse(R"({"d":1,"domain":{"type":"ball","n":2}})");
  EXPECT_EQ(config_hash(a), config_hash(a));
  EXPECT_NE(config_hash(a), config_hash(b));
}

TEST(Io, ComplexAndVectors) {
  CVector v(2);
  v << Complex(1.5, -2.0), Complex(0.0, 3.0);
  const Json j = to_json(v);
  EXPECT_EQ(j.dump(), "[[1.5,-2.0],[0.0,3.0]]");
  EXPECT_EQ(cvector_from_json(j, "v"), v);
  EXPECT_EQ(complex_from_json(Json(2.5), "x"), Complex(2.5, 0.0));
  try {
    complex_from_json(Json::parse("[1, 2, 3]"), "config.v[0]");
    FAIL();
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.path(), "config.v[0]");
  }
}

TEST(Io, DomainRoundTrip) {
  const std::vector<DomainSpec> ds{
      DomainSpec::ball(3), DomainSpec::polydisc(2), DomainSpec::diagonal_ball({4.0, 1.0}),
      DomainSpec::smooth_reinhardt(2, {{{1, 0}, 1.0}, {{0, 1}, 1.0}, {{2, 0}, 0.1}, {{0, 0}, -1.0}})};
  for (const auto& D : ds) {
    const Json j = to_json(D);
    EXPECT_EQ(domain_from_json(Json::parse(j.dump())), D) << j.dump();
  }
}

TEST(Io, DomainSchemaErrors) {
  auto path_of = [](const char* text) {
    try {
      domain_from_json(Json::parse(text));
    } catch (const SchemaError& e) {
      return e.path();
    } catch (const std::exception& e) {
      return std::string("other: ") + e.what();
    }
    return std::string("accepted");
  };
  EXPECT_EQ(path_of(R"({"type":"ball"})"), "domain.n");
  EXPECT_EQ(path_of(R"({"type":"ball","n":2,"colour":1})"), "domain.colour");
  EXPECT_EQ(path_of(R"({"type":"Sphere","n":2})"), "domain.type");
  EXPECT_EQ(path_of(R"({"type":"ball","n":"two"})"), "domain.n");
  EXPECT_EQ(path_of(R"([1,2])"), "domain");
}

TEST(Io, CheckObject) {
  const Json j = Json::parse(R"({"a":1,"b":2})");
  EXPECT_NO_THROW(check_object(j, "x", {"a"}, {"b"}));
  EXPECT_THROW(check_object(j, "x", {"a"}), SchemaError);
  EXPECT_THROW(check_object(j, "x", {"a", "b", "c"}), SchemaError);
  EXPECT_EQ(int_field(j, "a", "x"), 1);
  EXPECT_EQ(number_field(j, "b", "x"), 2.0);
  EXPECT_THROW(int_field(Json::parse(R"({"a":1.5})"), "a", "x"), SchemaError);
}

TEST(Io, ModelRoundTrip) {
  const KernelModel m = build_model(DomainSpec::diagonal_ball({2.0, 0.5}), 1, 12);
  std::stringstream ss;
  save_model(m, ss);
  const std::string text = ss.str();
  EXPECT_EQ(text.rfind("nskernel-model 1\n", 0), 0u);
  const KernelModel back = load_model(ss);
  EXPECT_EQ(back.domain(), m.domain());
  EXPECT_EQ(back.order(), 1);
  EXPECT_EQ(back.truncation(), 12);
  EXPECT_EQ(back.log_moments(), m.log_moments());
  EXPECT_EQ(back.certificate().tail_bound, m.certificate().tail_bound);
  std::stringstream again;
  save_model(back, again);
  EXPECT_EQ(again.str(), text);

  std::stringstream bad("nskernel-model 9\n");
  EXPECT_THROW(load_model(bad), SchemaError);
  std::stringstream cut(text.substr(0, text.size() - 40));
  EXPECT_THROW(load_model(cut), SchemaError);
}

TEST(Io, ReportsSerialize) {
  const KernelModel m = build_model(DomainSpec::ball(2), 1, 10);
  CVector v(2);
  v << 1.0, 0.0;
  const Json j = to_json(extremal_identity_report(m, CPoint::Zero(2), v));
  EXPECT_TRUE(j.contains("identities"));
  EXPECT_EQ(j["identities"].size(), 7u);
  const Json mj = to_json(metric_tensor(m, CPoint::Zero(2)));
  EXPECT_EQ(mj["G"].size(), 2u);
}

TEST(Io, CsvWriter) {
  std::ostringstream os;
  CsvWriter w(os, {"x", "y"});
  w.row(std::vector<double>{0.5, -1e-300});
  w.row(std::vector<std::string>{"a", "b"});
  EXPECT_EQ(os.str(), "x,y\n0.5,-1e-300\na,b\n");
  EXPECT_THROW(w.row(std::vector<double>{1.0}), ContractViolation);
}
