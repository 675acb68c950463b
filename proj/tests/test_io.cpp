#include <gtest/gtest.h>

#include "pbent/io.hpp"
#include "pbent/random.hpp"

using namespace pbent;

TEST(ParseTt, Valid) {
  const auto t = parse_tt("3 2\n000012021");
  EXPECT_EQ(t.params.p(), 3);
  EXPECT_EQ(t.params.n(), 2);
  EXPECT_EQ(t[4], 1);
  EXPECT_EQ(parse_tt("# comment\n\n3 2\n\n000012021\n"), t);
  EXPECT_EQ(parse_tt(format_tt(t)), t);
}

TEST(ParseTt, HighDigits) {
  const auto prm = Params::make(13, 1);
  const auto t = TruthTable::from_function(prm, [](Index x) { return static_cast<int>(x); });
  EXPECT_EQ(tt_digits(t), "0123456789abc");
  EXPECT_EQ(parse_tt(format_tt(t)), t);
}

TEST(ParseTt, Errors) {
  try {
    parse_tt("3 2\n0000120");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  try {
    parse_tt("3 2\n000012031");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 8u);
  }
  EXPECT_THROW(parse_tt("3\n000"), ParseError);
  EXPECT_THROW(parse_tt("x y\n000"), ParseError);
  EXPECT_THROW(parse_tt(""), ParseError);
  EXPECT_THROW(parse_tt("3 2\n000012021\n000012021"), ParseError);
  EXPECT_THROW(parse_tt("4 1\n0123"), ParseError);
}

TEST(SpectrumJson, ZeroTable) {
  const auto s = walsh_spectrum(TruthTable::zeros(Params::make(3, 1)));
  const auto j = nlohmann::json::parse(spectrum_json_text(s));
  EXPECT_EQ(j["p"], 3);
  EXPECT_EQ(j["n"], 1);
  EXPECT_EQ(j["convention"], std::string(kSpectrumConvention));
  EXPECT_EQ(j["values"], nlohmann::json::parse("[[3,0],[0,0],[0,0]]"));
}

TEST(SpectrumJson, RoundTrip) {
  Rng rng(51);
  for (int p : {2, 3, 5}) {
    const auto prm = Params::make(p, 2);
    const auto s = dft_fast(random_signal(rng, prm));
    EXPECT_EQ(spectrum_from_json(nlohmann::json::parse(spectrum_json_text(s))), s);
  }
}

TEST(SpectrumJson, Errors) {
  EXPECT_THROW(spectrum_from_json(nlohmann::json::parse(R"({"p":3,"n":1,"values":[[1,0]]})")), InvalidArgument);
  EXPECT_THROW(spectrum_from_json(nlohmann::json::parse(R"({"p":3,"n":1,"values":[[1],[0],[0]]})")), InvalidArgument);
  EXPECT_THROW(spectrum_from_json(nlohmann::json::parse(R"({"p":3})")), InvalidArgument);
  EXPECT_THROW(spectrum_from_json(nlohmann::json::parse(R"({"p":4,"n":1,"values":[]})")), InvalidArgument);
}

TEST(NeighborReportJson, KeysAndOrder) {
  const auto j = neighbor_report_to_json(q0_neighbor_report(3, 1));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"p", "d", "base", "census_size", "formula_value", "alt_value", "verdict",
                                            "per_subspace", "shortfalls", "members"}));
  EXPECT_EQ(j["verdict"], "matches_neither");
  EXPECT_EQ(j["census_size"], 18);
  EXPECT_EQ(j["members"].size(), 18u);
}
