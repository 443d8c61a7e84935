#include <gtest/gtest.h>

#include "kpair/json_io.hpp"

using namespace kpair;
using namespace kpair::json_io;

namespace {

pairability::MeasurementPattern sample_pattern() {
  const PairList pairs{{0, 8}, {4, 12}};
  return pairability::build_pattern(pairs, pairability::choose_c_vectors(pairs, 4), 4);
}

}  // namespace

TEST(PatternJson, RoundTrip) {
  const auto p = sample_pattern();
  const auto j = to_json(p);
  EXPECT_TRUE(is_valid_pattern_json(j));
  const auto back = pattern_from_json(j);
  EXPECT_EQ(back.e_set, p.e_set);
  EXPECT_EQ(back.x_set, p.x_set);
  EXPECT_EQ(back.z_set, p.z_set);
  EXPECT_EQ(back.to_string(), p.to_string());
  EXPECT_EQ(j["basis"].size(), p.x_set.size() + p.z_set.size());
}

TEST(PatternJson, YBasisSurvives) {
  auto p = pairability::MeasurementPattern::with_bases({std::nullopt, Basis::Y, Basis::X, std::nullopt}, {0, 3});
  const auto back = pattern_from_json(to_json(p));
  EXPECT_EQ(back.to_string(), ".YX.");
}

TEST(PatternJson, ErrorsNameTheField) {
  auto j = to_json(sample_pattern());
  auto expect_field = [](const json& doc, const std::string& field) {
    try {
      pattern_from_json(doc);
      ADD_FAILURE() << "accepted a document with a bad " << field;
    } catch (const std::invalid_argument& e) {
      EXPECT_NE(std::string(e.what()).find(field), std::string::npos) << e.what();
    }
  };
  auto bad = j;
  bad.erase("n");
  expect_field(bad, "\"n\"");
  bad = j;
  bad["X"] = "1,2";
  expect_field(bad, "\"X\"");
  bad = j;
  bad["Z"].push_back(-1);
  expect_field(bad, "\"Z\"");
  bad = j;
  bad["basis"]["1"] = "Q";
  expect_field(bad, "basis");
  bad = j;
  bad["basis"]["q"] = "X";
  expect_field(bad, "basis");
  EXPECT_FALSE(is_valid_pattern_json(json::array()));
  bad = j;
  bad.erase("basis");
  EXPECT_FALSE(is_valid_pattern_json(bad));
}

TEST(CertificateJson, RoundTrip) {
  const PairList pairs{{0, 8}, {4, 12}};
  const auto p = sample_pattern();
  const auto code = codes::rm_code(1, 4);
  const auto cert = *pairability::verify_css_conditions(code, p, pairs);
  const auto j = to_json(cert);
  ASSERT_EQ(j["f"].size(), 2U);
  EXPECT_EQ(j["f"][0].get<std::string>().size(), 16U);
  const auto back = certificate_from_json(j);
  EXPECT_EQ(back.f, cert.f);
  EXPECT_EQ(back.fbar, cert.fbar);
  EXPECT_THROW(certificate_from_json(json{{"f", json::array()}}), std::invalid_argument);
  EXPECT_THROW(certificate_from_json(json{{"f", {1}}, {"fbar", json::array()}}), std::invalid_argument);
}

TEST(TranscriptJson, Fields) {
  const PairList pairs{{0, 8}, {4, 12}};
  const auto p = sample_pattern();
  const auto code = codes::rm_code(1, 4);
  const auto cert = *pairability::verify_css_conditions(code, p, pairs);
  const auto t = locc::run_protocol(code, p, pairs, cert, 3);
  const auto j = to_json(t);
  EXPECT_EQ(j["seed"], 3);
  EXPECT_EQ(j["measurements"].size(), 12U);
  EXPECT_EQ(j["verdict"], json::array({true, true}));
  EXPECT_TRUE(j["success"].get<bool>());
  EXPECT_EQ(to_json(pairs), json::parse("[[0,8],[4,12]]"));
}

TEST(ReportJson, Fields) {
  netroute::RoutePlan plan{{{0, 1, 2}}, 1};
  EXPECT_EQ(to_json(plan), json::parse(R"({"paths":[[0,1,2]],"congestion":1})"));
  search::PairabilityReport r;
  r.tuples.push_back({{{0, 1}, {2, 3}}, std::nullopt});
  const auto j = to_json(r);
  EXPECT_EQ(j["checked"], 1);
  EXPECT_FALSE(j["all_succeeded"].get<bool>());
  EXPECT_TRUE(j["tuples"][0]["pattern"].is_null());
}
