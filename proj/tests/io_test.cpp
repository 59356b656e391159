#include <gtest/gtest.h>

#include "qh/io.hpp"

using namespace qh;

TEST(IoJson, PolynomialRoundTrip) {
  Polynomial f(2);
  Monomial m(2);
  m.holo = {2, 0};
  m.anti = {0, 1};
  f.add_term(m, Complex(1.5, -2.0));
  Monomial k(2);
  k.holo = {0, 1};
  f.add_term(k, Complex(0, 1));

  Json j = poly_to_json(f);
  Polynomial g = poly_from_json(j);
  EXPECT_LT(max_coeff_diff(f, g), 1e-15);
  EXPECT_EQ(j.at("d").get<int>(), 2);
  // purely holomorphic terms omit the antiholomorphic exponents
  bool found_pure = false;
  for (const auto& t : j.at("terms"))
    if (!t.contains("b")) found_pure = true;
  EXPECT_TRUE(found_pure);
}

TEST(IoJson, ComplexForms) {
  EXPECT_EQ(complex_from_json(Json(2.5)), Complex(2.5, 0));
  EXPECT_EQ(complex_from_json(Json::array({1.0, -1.0})), Complex(1, -1));
  EXPECT_THROW(complex_from_json(Json::array({1.0, 2.0, 3.0})), Error);
  EXPECT_THROW(complex_from_json(Json::object()), Error);
}

TEST(IoJson, SignedZeroNormalized) {
  Json j = complex_to_json(Complex(-0.0, 1.0));
  std::string text = j.dump();
  EXPECT_EQ(text.find("-0"), std::string::npos) << text;
}

TEST(IoJson, PolynomialValidation) {
  EXPECT_THROW(poly_from_json(Json::object()), Error);
  Json bad = {{"d", 2}, {"terms", Json::array({{{"a", {1}}, {"c", {1.0, 0.0}}}})}};
  EXPECT_THROW(poly_from_json(bad), Error);  // wrong exponent length
  Json neg = {{"d", 1}, {"terms", Json::array({{{"a", {-1}}, {"c", {1.0, 0.0}}}})}};
  EXPECT_THROW(poly_from_json(neg), Error);
}

TEST(IoJson, MapRoundTrip) {
  Polynomial e1 = Polynomial::variable(2, 0) + Polynomial::variable(2, 1);
  Polynomial e2 = Polynomial::variable(2, 0) * Polynomial::variable(2, 1);
  PolynomialMap B({e1, e2});
  PolynomialMap C = map_from_json(map_to_json(B));
  ASSERT_EQ(C.size(), 2u);
  EXPECT_LT(max_coeff_diff(C.components[0], e1), 1e-15);
  EXPECT_EQ(C.degrees, B.degrees);
}

TEST(IoGroup, ConfigFamilies) {
  GroupSpecConfig s = group_config_from_json({{"family", "symmetric"}, {"d", 3}});
  EXPECT_EQ(build_group(s).size(), 6);

  GroupSpecConfig c = group_config_from_json({{"family", "cyclic"}, {"orders", {2, 2}}});
  EXPECT_EQ(build_group(c).size(), 4);

  GroupSpecConfig w = group_config_from_json({{"family", "wreath"}, {"d", 2}, {"m", 2}});
  EXPECT_EQ(build_group(w).size(), 8);

  EXPECT_THROW(group_config_from_json({{"family", "dihedral"}, {"d", 2}}), Error);
  EXPECT_THROW(group_config_from_json(Json::object()), Error);
}

TEST(IoGroup, CustomGeneratorsWithUserMap) {
  // one generator: the swap matrix [[0, 1], [1, 0]] with [re, im] entries
  Json row0 = Json::array({Json::array({0.0, 0.0}), Json::array({1.0, 0.0})});
  Json row1 = Json::array({Json::array({1.0, 0.0}), Json::array({0.0, 0.0})});
  Json swap = Json::array({row0, row1});
  Json j;
  j["family"] = "custom";
  j["generators"] = Json::array({swap});
  Polynomial e1 = Polynomial::variable(2, 0) + Polynomial::variable(2, 1);
  Polynomial e2 = Polynomial::variable(2, 0) * Polynomial::variable(2, 1);
  j["basic_map"] = map_to_json(PolynomialMap({e1, e2}));
  GroupSpecConfig cfg = group_config_from_json(j);
  GroupContext ctx = build_context(cfg);
  EXPECT_EQ(ctx.group.size(), 2);
  EXPECT_EQ(ctx.basic.source, "user");
}

TEST(IoReports, JsonAndCsv) {
  CheckReport r;
  r.name = "sample";
  r.verdict = "PASS";
  r.max_deviation = 0.0;
  r.exact_region_size = 7;
  r.notes = {"first, with comma", "second \"quoted\""};
  Json j = report_to_json(r);
  EXPECT_EQ(j.at("verdict"), "PASS");
  EXPECT_EQ(j.at("exact_region_size").get<long long>(), 7);

  std::string csv = reports_to_csv({r});
  EXPECT_NE(csv.find("name,verdict,max_deviation,exact_region_size,notes"), std::string::npos);
  EXPECT_NE(csv.find("\"first, with comma; second \"\"quoted\"\"\""), std::string::npos);
}

TEST(IoDescribe, SymmetricTwoShape) {
  GroupContext ctx = build_context(group_config_from_json({{"family", "symmetric"}, {"d", 2}}));
  Json j = describe_to_json(ctx);
  EXPECT_EQ(j.at("order").get<int>(), 2);
  EXPECT_EQ(j.at("family"), "symmetric");
  EXPECT_EQ(j.at("characters").size(), 2u);
  EXPECT_EQ(j.at("hyperplanes").size(), 1u);
  EXPECT_EQ(j.at("basic_map").at("degrees").get<std::vector<int>>(), (std::vector<int>{1, 2}));
}

TEST(IoFiles, MissingFileFails) {
  EXPECT_THROW(load_json_file("/nonexistent/path.json"), Error);
  EXPECT_THROW(parse_json_text("{not json"), Error);
}
