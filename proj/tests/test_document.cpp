#include <string>

#include "doctest.h"
#include "veronese/document.hpp"

using namespace veronese;

TEST_CASE("parse a veronese document") {
  std::string text = R"({"ring":{"blocks":[5]},
    "veronese":[{"support":[1,2,3],"power":1},
                {"support":[1,4,5],"power":1},
                {"support":[2,3,5],"power":1}]})";
  IdealDocument doc = parse_document(text);
  CHECK(doc.ring.nvars() == 5);
  REQUIRE(doc.veronese.has_value());
  CHECK(doc.veronese->pieces.size() == 3);
  CHECK(doc.veronese->pieces[0].support == std::vector<int>{0, 1, 2});  // 0-based inside
  CHECK(build_ideal(doc).ngens() == 7);
}

TEST_CASE("parse a fat point document") {
  IdealDocument doc = parse_document(R"({"ring":{"blocks":[2,2]},"fatpoints":{"mults":[1,1]}})");
  CHECK(doc.ring.nblocks() == 2);
  CHECK(doc.ring.names() == std::vector<std::string>{"x0", "x1", "y0", "y1"});
  REQUIRE(doc.fatpoint_mults.has_value());
  CHECK(build_ideal(doc).ngens() == 4);
}

TEST_CASE("parse explicit generators and a complex") {
  IdealDocument gens = parse_document(R"({"ring":{"blocks":[4]},"gens":[[1,0,1,0],[0,1,0,1]]})");
  CHECK(build_ideal(gens).ngens() == 2);

  IdealDocument cx = parse_document(
      R"({"ring":{"blocks":[6]},"complex":{"nonfaces":[[1,4,5],[1,2,6],[1,3,5]]}})");
  REQUIRE(cx.nonfaces.has_value());
  MonomialIdeal I = build_ideal(cx);
  CHECK(I.ngens() == 3);
  CHECK(I.ring().nvars() == 6);
}

TEST_CASE("power defaults to one") {
  IdealDocument doc = parse_document(R"({"ring":{"blocks":[3]},"veronese":[{"support":[1,2]}]})");
  CHECK(doc.veronese->pieces[0].power == 1);
}

TEST_CASE("custom variable names survive") {
  IdealDocument doc = parse_document(
      R"({"ring":{"blocks":[2],"names":["s","t"]},"gens":[[1,1]]})");
  CHECK(doc.ring.names() == std::vector<std::string>{"s", "t"});
  CHECK(build_ideal(doc).ring().format(build_ideal(doc).gens()[0]) == "s*t");
}

TEST_CASE("round trips") {
  for (const char* text : {
           R"({"ring":{"blocks":[5]},"veronese":[{"support":[1,2,3],"power":2}]})",
           R"({"ring":{"blocks":[4]},"gens":[[1,0,1,0],[0,1,0,1]]})",
           R"({"ring":{"blocks":[2,2]},"fatpoints":{"mults":[2,1]}})",
           R"({"ring":{"blocks":[4]},"complex":{"nonfaces":[[1,3],[2,4]]}})",
       }) {
    IdealDocument doc = parse_document(text);
    CHECK(parse_document(serialize_document(doc)) == doc);
  }
}

TEST_CASE("rejects malformed documents") {
  SUBCASE("broken JSON reports the line") {
    try {
      parse_document("{\n  \"ring\": {\n  ,\n}");
      FAIL("expected a parse error");
    } catch (const SpecError& e) {
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
  }
  SUBCASE("index out of range") {
    CHECK_THROWS_WITH_AS(
        parse_document(R"({"ring":{"blocks":[5]},"veronese":[{"support":[0],"power":1}]})"),
        "index 0 in 'veronese.support' is out of range 1..5", SpecError);
    CHECK_THROWS_AS(
        parse_document(R"({"ring":{"blocks":[3]},"complex":{"nonfaces":[[4]]}})"), SpecError);
  }
  SUBCASE("payload count") {
    CHECK_THROWS_AS(parse_document(R"({"ring":{"blocks":[2]}})"), SpecError);
    CHECK_THROWS_AS(parse_document(
                        R"({"ring":{"blocks":[2]},"gens":[[1,0]],"fatpoints":{"mults":[1]}})"),
                    SpecError);
  }
  SUBCASE("unknown fields") {
    CHECK_THROWS_AS(parse_document(R"({"ring":{"blocks":[2]},"gens":[[1,0]],"extra":1})"),
                    SpecError);
    CHECK_THROWS_AS(parse_document(R"({"ring":{"blocks":[2],"foo":1},"gens":[[1,0]]})"),
                    SpecError);
  }
  SUBCASE("wrong exponent row length") {
    CHECK_THROWS_AS(parse_document(R"({"ring":{"blocks":[3]},"gens":[[1,0]]})"), SpecError);
  }
  SUBCASE("validation runs on payloads") {
    // comparable nonfaces and oversized point sets are caught at parse time
    CHECK_THROWS_AS(
        parse_document(R"({"ring":{"blocks":[4]},"complex":{"nonfaces":[[1,2],[1,2,3]]}})"),
        SpecError);
    CHECK_THROWS_AS(
        parse_document(R"({"ring":{"blocks":[2,2]},"fatpoints":{"mults":[1,1,1]}})"),
        SpecError);
  }
}
