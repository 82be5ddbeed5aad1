#include <string>
#include <vector>

#include "catch_amalgamated.hpp"
#include "support/print.hpp"
#include "json.hpp"

#include "satsemi/errors.hpp"
#include "satsemi/format.hpp"
#include "satsemi/sat_tree.hpp"

using satsemi::Element;
using satsemi::NumericalSemigroup;

TEST_CASE("records", "[format]") {
  auto s = NumericalSemigroup::from_small_elements(7, {4, 6});
  auto r = satsemi::make_record(s);
  CHECK(r.frobenius == 7);
  CHECK(r.small_elements == std::vector<Element>{4, 6});
  CHECK(r.gaps == std::vector<Element>{1, 2, 3, 5, 7});
  CHECK(r.msg == std::vector<Element>{4, 6, 9, 11});
  REQUIRE(r.sat_msg);
  CHECK(*r.sat_msg == std::vector<Element>{4, 6});
  CHECK(r.rank == 2U);
  CHECK(r.genus == 5);
  CHECK(r.multiplicity == 4);
  CHECK(r.embedding_dimension == 4);

  auto plain = satsemi::make_record(NumericalSemigroup::from_small_elements(12, {7, 8, 9, 11}));
  CHECK_FALSE(plain.sat_msg);
  CHECK_FALSE(plain.rank);
}

TEST_CASE("text lines", "[format]") {
  auto s = NumericalSemigroup::from_small_elements(7, {4, 6});
  CHECK(satsemi::to_text_line(satsemi::make_record(s))
        == "0,4,6,8→ | msg=⟨4,6,9,11⟩ | g=5 | rank=2");
  CHECK(satsemi::canonical_text(s) == "⟨4,6,9,11⟩ | F=7");
  auto colored = satsemi::to_text_line(satsemi::make_record(s), true);
  CHECK(colored.find("\x1b[1m") == 0);
  auto plain = satsemi::make_record(NumericalSemigroup::from_small_elements(12, {7, 8, 9, 11}));
  auto line  = satsemi::to_text_line(plain);
  CHECK(line.substr(line.size() - 6) == "rank=-");
}

TEST_CASE("json", "[format]") {
  auto s = NumericalSemigroup::from_small_elements(7, {4, 6});
  auto j = nlohmann::json::parse(satsemi::to_json(satsemi::make_record(s)));
  CHECK(j["frobenius"] == 7);
  CHECK(j["sat_msg"] == nlohmann::json::array({4, 6}));
  CHECK(j["rank"] == 2);
  CHECK(j["embedding_dimension"] == 4);

  auto minimal = nlohmann::json::parse(satsemi::to_json(s));
  CHECK(minimal.size() == 5);
  CHECK(minimal["msg"] == nlohmann::json::array({4, 6, 9, 11}));

  std::string text = satsemi::to_json(satsemi::make_record(s));
  CHECK(text.find("\"frobenius\"") < text.find("\"small_elements\""));
  CHECK(text.find("\"genus\"") < text.find("\"rank\""));
}

TEST_CASE("json round trip over Sat(F)", "[format][property]") {
  for (Element f = 1; f <= 14; ++f) {
    std::vector<satsemi::OutputRecord> records;
    for (auto const& s : satsemi::enumerate_sat(f)) {
      CHECK(satsemi::semigroup_from_json(satsemi::to_json(s)) == s);
      CHECK(satsemi::semigroup_from_json(satsemi::to_json(satsemi::make_record(s))) == s);
      auto record = satsemi::make_record(s);
      CHECK(satsemi::make_record(satsemi::semigroup_from_json(satsemi::to_json(record))) == record);
      records.push_back(record);
    }
    auto list = nlohmann::json::parse(satsemi::to_json(records));
    CHECK(list.size() == records.size());
  }
  CHECK_THROWS_AS(satsemi::semigroup_from_json("{"), satsemi::Error);
  CHECK_THROWS_AS(satsemi::semigroup_from_json(R"({"frobenius": 7})"), satsemi::Error);
  CHECK_THROWS_AS(satsemi::semigroup_from_json(R"({"frobenius": 4, "small_elements": [2]})"),
                  satsemi::Error);
}

TEST_CASE("csv", "[format]") {
  CHECK(satsemi::csv_header() == "frobenius,genus,multiplicity,edim,rank,small_elements,msg,sat_msg");
  auto s = NumericalSemigroup::from_small_elements(7, {4, 6});
  CHECK(satsemi::to_csv_row(satsemi::make_record(s)) == "7,5,4,4,2,4;6,4;6;9;11,4;6");
  auto plain = satsemi::make_record(NumericalSemigroup::from_small_elements(12, {7, 8, 9, 11}));
  auto row   = satsemi::to_csv_row(plain);
  CHECK(row.substr(0, 10) == "12,8,7,5,,");
  CHECK(row.back() == ',');
}
