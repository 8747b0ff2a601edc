#include <doctest.h>

#include "tnq/error.hpp"
#include "tnq/quiver.hpp"

using namespace tnq;
using json = nlohmann::ordered_json;

TEST_CASE("quiver json parse") {
  json j = json::parse(R"({"vertices":["v1"],"arrows":[
      {"src":"v1","tgt":"v1"},{"src":"v1","tgt":"v1"}]})");
  Quiver q = Quiver::from_json(j);
  CHECK(q.vcount() == 1);
  CHECK(q.acount() == 2);
  CHECK(q.loops(0) == 2);
}

TEST_CASE("quiver schema errors") {
  CHECK_THROWS_AS(Quiver::from_json(json::parse(R"({"vertices":["a","a"],"arrows":[]})")), Error);
  CHECK_THROWS_AS(
      Quiver::from_json(json::parse(R"({"vertices":["a"],"arrows":[{"src":"a","tgt":"b"}]})")),
      Error);
  CHECK_THROWS_AS(Quiver::from_json(json::parse(R"({"vertices":[],"arrows":[]})")), Error);
  CHECK_THROWS_AS(Quiver::from_json(json::parse(R"({"vertices":["a"]})")), Error);
}

TEST_CASE("arrow counting") {
  Quiver q = Quiver::make({"a", "b"}, {{"a", "b"}, {"b", "a"}, {"a", "a"}});
  CHECK(q.loops(0) == 1);
  CHECK(q.loops(1) == 0);
  CHECK(q.arrows_from_to(0, 1) == 1);
  CHECK(q.arrows_from_to(1, 0) == 1);
  CHECK(q.arrows_between(0, 1) == 2);
}

TEST_CASE("canonical hash ignores declaration order, keeps orientation") {
  Quiver q1 = Quiver::make({"a", "b"}, {{"a", "b"}, {"a", "a"}});
  Quiver q2 = Quiver::make({"b", "a"}, {{"a", "a"}, {"a", "b"}});
  Quiver rev = Quiver::make({"a", "b"}, {{"b", "a"}, {"a", "a"}});
  CHECK(q1.canonical_hash() == q2.canonical_hash());
  CHECK(q1.canonical_hash() != rev.canonical_hash());
}

TEST_CASE("dim vector json and text parsing") {
  Quiver q = Quiver::make({"v1", "v2"}, {{"v1", "v2"}});
  DimVector d = DimVector::from_json(q, json::parse(R"({"v1":2,"v2":1})"));
  CHECK(d.v == std::vector<Int>{2, 1});
  CHECK(DimVector::parse(q, "2,1") == d);
  CHECK(DimVector::parse(q, "v2=1,v1=2") == d);
  CHECK_THROWS_AS(DimVector::parse(q, "2"), Error);         // wrong arity
  CHECK_THROWS_AS(DimVector::parse(q, "v3=1,v1=2,v2=1"), Error);
  CHECK_THROWS_AS(DimVector::from_json(q, json::parse(R"({"v1":2})")), Error);
  CHECK_THROWS_AS(DimVector::from_json(q, json::parse(R"({"v1":-1,"v2":0})")), Error);
}

TEST_CASE("restriction keeps inner arrows only") {
  Quiver q = Quiver::make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "a"}});
  Quiver sub = q.restricted({0, 1});
  CHECK(sub.vcount() == 2);
  CHECK(sub.acount() == 2);  // a->b and the loop
  CHECK(sub.loops(0) == 1);
}

TEST_CASE("doubling reverses every arrow") {
  Quiver q = path_quiver(2);
  Quiver d = q.doubled();
  CHECK(d.acount() == 2);
  CHECK(d.arrows_from_to(0, 1) == 1);
  CHECK(d.arrows_from_to(1, 0) == 1);
}

TEST_CASE("builders") {
  CHECK(loop_quiver(3).loops(0) == 3);
  CHECK(cycle_quiver(3).acount() == 3);
  CHECK(kronecker_quiver(2).arrows_between(0, 1) == 2);
  Quiver q = quiver_from_counts({2, 2}, {{0, 1}, {0, 0}});
  CHECK(q.loops(0) == 2);
  CHECK(q.arrows_between(0, 1) == 1);
}
