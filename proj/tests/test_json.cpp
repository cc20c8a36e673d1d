#include <doctest.h>

#include "seshadri/json_io.hpp"

using namespace seshadri;

namespace {
SurfaceData p2 = SurfaceData::p2();
}

TEST_CASE("candidate sets serialize deterministically with fixed key order") {
  CandidateSet cs = enumerate_homogeneous(p2, 10, EnumParams::from_mu(Rational(21), 10));
  std::string a = render_json(candidate_set_json(cs));
  std::string b = render_json(candidate_set_json(
      enumerate_homogeneous(p2, 10, EnumParams::from_mu(Rational(21), 10))));
  CHECK(a == b);
  CHECK(a.rfind("{\"n\":10,\"delta\":\"10/209\",\"mu\":\"21\",\"candidates\":", 0) == 0);
  CHECK(a.find("{\"t\":3,\"m\":1,\"k\":0,\"ratio\":\"3/10\"}") != std::string::npos);
  CHECK(a.find("\"ratios\":[\"3/10\",\"11/35\",\"41/130\"]") != std::string::npos);
  CHECK(a.find("\"truncated\":false") != std::string::npos);
}

TEST_CASE("bound results serialize with the exact rational as the normative field") {
  std::string s = render_json(bound_result_json(cor13_bound(16)));
  CHECK(s.rfind("{\"n\":16,\"method\":\"cor13\",\"epsilon_lower_sq\":\"335/5376\",\"strict\":false,"
                "\"exact\":false,\"epsilon_lower_decimal\":\"0.249627698974\",\"audit\":[]}",
                0) == 0);
}

TEST_CASE("general candidates carry their multiplicity vector") {
  WeightVector w = WeightVector::homogeneous(2);
  CandidateSet cs = enumerate_general(p2, w, Rational(Int(2), Int(3)), Int(kDefaultGeneralCap));
  std::string s = render_json(candidate_set_json(cs));
  CHECK(s.find("{\"t\":1,\"h\":[1,1],\"ratio\":\"1/2\"}") != std::string::npos);
}

TEST_CASE("surface config round trip") {
  OrderedJson j;
  j["L2"] = 4;
  j["LK"] = -6;
  j["pa"] = 0;
  j["degree_unit"] = 2;
  j["rank1"] = true;
  j["mode"] = "RANK1";
  SurfaceData s = surface_from_json(j);
  CHECK(s.l2 == 4);
  CHECK(s.degree_unit == 2);
  CHECK(s.mode == SurfaceMode::Rank1);

  OrderedJson bad = j;
  bad.erase("mode");
  CHECK_THROWS_AS(surface_from_json(bad), std::invalid_argument);

  OrderedJson preset;
  preset["preset"] = "p2";
  CHECK(surface_from_json(preset).mode == SurfaceMode::P2);
  preset["preset"] = "p3";
  CHECK_THROWS_AS(surface_from_json(preset), std::invalid_argument);
}

TEST_CASE("hypothesis reports serialize row by row") {
  CertificateStore store = CertificateStore::p2_builtins(16);
  HypothesisReport rep = check_hypotheses(TheoremId::B, p2, 16, Rational(21), store);
  std::string s = render_json(hypothesis_report_json(rep));
  CHECK(s.find("\"theorem\":\"B\"") != std::string::npos);
  CHECK(s.find("\"passed\":true") != std::string::npos);
  CHECK(s.find("doublepoint") != std::string::npos);
}
