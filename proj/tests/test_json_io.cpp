#include <doctest.h>

#include <json.hpp>

#include "t2r/json_io.hpp"
#include "t2r/mixing.hpp"

using namespace t2r;
using nlohmann::json;

TEST_CASE("element round trip") {
  GroupEnumeration e(2, 3);
  e.for_each([&](std::uint64_t, const ColoredPermutation& g) {
    CHECK(element_from_json(element_to_json(g)) == g);
  });

  const json j = json::parse(element_to_json(parse_word("2~1 1", 2)));
  CHECK(j["n"] == 2);
  CHECK(j["p"] == 2);
  REQUIRE(j["word"].size() == 2);
  CHECK(j["word"][0][0] == 1);  // color
  CHECK(j["word"][0][1] == 2);  // value
  CHECK(j["word"][1][0] == 0);
  CHECK(j["word"][1][1] == 1);
}

TEST_CASE("algebra round trip") {
  const AlgebraElement B2 = build_B(2, 3, 2);
  CHECK(algebra_from_json(algebra_to_json(B2)) == B2);

  AlgebraElement mixed(3, 2);
  mixed.add(parse_word("2 1 3", 2), make_rat(-7, 3));
  mixed.add(parse_word("1 2 3", 2), make_rat(1, 48));
  CHECK(algebra_from_json(algebra_to_json(mixed)) == mixed);

  const json j = json::parse(algebra_to_json(mixed));
  REQUIRE(j["terms"].size() == 2);
  // canonical order: identity word sorts first
  CHECK(j["terms"][0]["num"] == "1");
  CHECK(j["terms"][0]["den"] == "48");
  CHECK(j["terms"][1]["num"] == "-7");
  CHECK(j["terms"][1]["den"] == "3");

  // term order tracks the canonical enumeration
  const json jb = json::parse(algebra_to_json(B2));
  GroupEnumeration e(3, 2);
  std::uint64_t prev = 0;
  bool first = true;
  for (const auto& term : jb["terms"]) {
    std::vector<ColoredLetter> word;
    for (const auto& lt : term["word"])
      word.push_back({lt[0].get<int>(), lt[1].get<int>()});
    const std::uint64_t idx = e.index_of(ColoredPermutation(3, 2, word));
    if (!first) CHECK(idx > prev);
    prev = idx;
    first = false;
  }
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(element_from_json("not json at all"), UsageError);
  CHECK_THROWS_AS(element_from_json("{\"p\":2,\"n\":2}"), UsageError);  // no word
  CHECK_THROWS_AS(element_from_json("{\"p\":2,\"n\":2,\"word\":[[0,1],[0,1]]}"), UsageError);
  CHECK_THROWS_AS(element_from_json("{\"p\":2,\"n\":2,\"word\":[[5,1],[0,2]]}"), UsageError);
  CHECK_THROWS_AS(algebra_from_json("{\"p\":2,\"n\":2}"), UsageError);
  CHECK_THROWS_AS(
      algebra_from_json("{\"p\":2,\"n\":1,\"terms\":[{\"word\":[[0,1]],\"num\":\"1\",\"den\":\"0\"}]}"),
      UsageError);
}

TEST_CASE("spectrum schema") {
  const json j = json::parse(spectrum_to_json(multiplicity_report(3, 2, "charpoly")));
  CHECK(j["n"] == 3);
  CHECK(j["p"] == 2);
  CHECK(j["method"] == "charpoly");
  CHECK(j["factored"] == "(x-6)(x-4)^3(x-2)^15x^29");
  REQUIRE(j["eigenvalues"].size() == 4);
  CHECK(j["eigenvalues"][0]["value"] == 6);
  CHECK(j["eigenvalues"][0]["i"] == 3);
  CHECK(j["eigenvalues"][0]["multiplicity"] == "1");
  CHECK(j["eigenvalues"][3]["multiplicity"] == "29");
  REQUIRE(j.contains("char_poly"));
  CHECK(j["char_poly"].size() == 49);
  CHECK(j["char_poly"][0] == "1");
}

TEST_CASE("tv record schema") {
  const json j = json::parse(tv_records_to_json(tv_curve(3, 2, {0, 10}, "exact")));
  REQUIRE(j.size() == 2);
  CHECK(j[0]["k"] == 0);
  CHECK(j[0]["tv_exact_num"] == "47");
  CHECK(j[0]["tv_exact_den"] == "48");
  CHECK(j[0]["mode"] == "exact");
  CHECK(j[1]["threshold_A"] == 3);
  CHECK(j[1]["tv_exact_num"] == "341");
  CHECK(j[1]["tv_exact_den"] == "13122");

  const json jl = json::parse(tv_records_to_json(tv_curve(3, 2, {10}, "logspace")));
  CHECK(jl[0]["tv_exact_den"] == "");
  CHECK(jl[0]["mode"] == "logspace");
}
