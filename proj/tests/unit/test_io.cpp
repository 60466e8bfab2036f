#include <doctest.h>

#include "bicrit/io.hpp"

using namespace bicrit;
using bicrit::io::json;

TEST_CASE("integers are decimal strings") {
  const Int big = pow(Int(10), 35) + 7;
  auto j = io::to_json(big);
  CHECK(j.is_string());
  CHECK(io::int_from_json(j) == big);
  CHECK(io::int_from_json(json(42)) == 42);
  CHECK_THROWS_AS(io::int_from_json(json(1.5)), ParseError);
  CHECK_THROWS_AS(io::int_from_json(json("1e3")), ParseError);
  CHECK_THROWS_AS(io::parse("{\"a\": "), ParseError);
}

TEST_CASE("instances round-trip with every kind of metadata") {
  std::vector<Instance> all = {
      gen_strong({1, 1, 2, 2}, 2),
      gen_weak({1, 1, 2}),
      gen_lex_gadget(make_instance({{4, 5}, {3, 6}, {3, 9}}), 3),
      gen_apriori_scaled(make_instance({{1, 2}, {3, 1}}), 2),
      make_instance({{1, 2}}, Variant::constraint_opt(3)),
  };
  for (const auto& inst : all) {
    const std::string text = io::to_json(inst).dump();
    auto back = io::instance_from_json(io::parse(text));
    REQUIRE(back.size() == inst.size());
    for (std::size_t x = 0; x < inst.size(); ++x) {
      CHECK(back.jobs[x].id == inst.jobs[x].id);
      CHECK(back.jobs[x].proc == inst.jobs[x].proc);
      CHECK(back.jobs[x].due == inst.jobs[x].due);
      CHECK(back.jobs[x].tag == inst.jobs[x].tag);
    }
    CHECK(back.variant == inst.variant);
    CHECK(back.meta == inst.meta);
    CHECK(io::to_json(back).dump() == text);
  }
}

TEST_CASE("instance parsing rejects bad input") {
  CHECK_THROWS_AS(io::instance_from_json(io::parse(R"({"jobs": [{"id": 0, "p": 1.5, "d": "2"}]})")), ParseError);
  CHECK_THROWS_AS(io::instance_from_json(io::parse(R"({"jobs": [{"id": 0, "p": "1"}]})")), ParseError);
  CHECK_THROWS_AS(io::instance_from_json(io::parse(R"([1, 2])")), ParseError);
  auto ok = io::instance_from_json(io::parse(R"({"jobs": [{"id": 3, "p": "1", "d": 2}]})"));
  CHECK(ok.jobs.at(0).id == 3);
  CHECK(ok.variant.kind == VariantKind::None);
}

TEST_CASE("candidates round-trip") {
  auto sc = StrongCandidate::uniform(3, 2, Choice::Neg);
  sc.star[1][1] = Choice::Pos;
  CHECK(io::strong_candidate_from_json(io::to_json(sc)) == sc);
  WeakCandidate wc{{Choice::Pos, Choice::Neg}, {Choice::Neg, Choice::Pos}};
  CHECK(io::weak_candidate_from_json(io::to_json(wc)) == wc);
  CHECK_THROWS_AS(io::weak_candidate_from_json(io::parse(R"({"star": ["Pos"], "main": ["Maybe"]})")), ParseError);
}

TEST_CASE("sources") {
  ThreePartitionSource s{{1, 1, 1}, 1, std::vector<IndexSet>{{1, 2, 3}}};
  auto f = io::source_from_json(io::to_json(s));
  CHECK(f.kind == "threepartition");
  CHECK(f.m == 1);
  CHECK(f.a == std::vector<Int>{1, 1, 1});
  PartitionSource p{{1, 1, 2}, IndexSet{3}};
  CHECK(io::source_from_json(io::to_json(p)).kind == "partition");
  CHECK(io::solution_to_json(p)["solution"] == json::array({3}));
}
