#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "bicrit/integer.hpp"
#include "bicrit/model.hpp"
#include "bicrit/rng.hpp"

using namespace bicrit;

TEST_CASE("Int arithmetic is exact and checked") {
  const Int big = pow(Int(10), 30);
  CHECK(big.to_string() == "1000000000000000000000000000000");
  CHECK(Int::parse("-123456789012345678901234567890") == -Int::parse("123456789012345678901234567890"));
  CHECK(big / Int(7) * Int(7) + big % Int(7) == big);
  CHECK_THROWS_AS(Int::max() + Int(1), OverflowError);
  CHECK_THROWS_AS(Int::min() - Int(1), OverflowError);
  CHECK_THROWS_AS(pow(Int(10), 39), OverflowError);
  CHECK_THROWS_AS(Int(1) / Int(0), std::domain_error);
  CHECK_THROWS_AS(Int::parse("12a"), ParseError);
  CHECK_THROWS_AS(Int::parse(""), ParseError);
  CHECK_THROWS_AS(Int::parse("1.5"), ParseError);
  CHECK(Int::parse(Int::max().to_string()) == Int::max());
  CHECK(Int::parse(Int::min().to_string()) == Int::min());
  CHECK(Int(-5) < Int(3));
  CHECK(abs(Int(-5)) == 5);
}

TEST_CASE("evaluate on small instances") {
  auto one = make_instance({{3, 5}});
  auto e1 = evaluate(one, Schedule{{0}});
  CHECK(e1.completion[0] == 3);
  CHECK(e1.tmax == 0);
  CHECK(e1.num_tardy == 0);

  auto three = make_instance({{2, 2}, {3, 4}, {2, 5}});
  auto e = evaluate(three, Schedule{{0, 1, 2}});
  CHECK(e.completion == std::vector<Int>{2, 5, 7});
  CHECK(e.tardiness == std::vector<Int>{0, 1, 2});
  CHECK(e.tmax == 2);
  CHECK(e.num_tardy == 2);
  CHECK(e.tardy_set == std::vector<int>{1, 2});
  CHECK(is_feasible_tmax(e, 2));
  CHECK_FALSE(is_feasible_tmax(e, 1));
}

TEST_CASE("C equal to d counts as early") {
  auto inst = make_instance({{4, 4}});
  CHECK(evaluate(inst, Schedule{{0}}).num_tardy == 0);
}

TEST_CASE("evaluate rejects orders that are not permutations") {
  auto inst = make_instance({{1, 1}, {1, 1}});
  CHECK_THROWS_AS(evaluate(inst, Schedule{{0}}), PermutationError);
  CHECK_THROWS_AS(evaluate(inst, Schedule{{0, 0}}), PermutationError);
  CHECK_THROWS_AS(evaluate(inst, Schedule{{0, 2}}), PermutationError);
}

TEST_CASE("evaluation invariants on random orders") {
  Rng rng(7);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = static_cast<int>(rng.uniform(1, 9));
    std::vector<std::pair<Int, Int>> jobs;
    for (int x = 0; x < n; ++x) jobs.emplace_back(rng.uniform(0, 20), rng.uniform(0, 30));
    auto inst = make_instance(jobs);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    auto e = evaluate(inst, Schedule{order});

    // Second prefix-sum routine, position by position.
    long long t = 0, tmax = 0;
    int tardy = 0;
    for (int id : order) {
      t += jobs[id].first.to_int64();
      CHECK(e.completion[id] == t);
      const long long late = std::max(0LL, t - jobs[id].second.to_int64());
      CHECK(e.tardiness[id] == late);
      tmax = std::max(tmax, late);
      tardy += late > 0;
    }
    CHECK(e.tmax == tmax);
    CHECK(e.num_tardy == tardy);
    CHECK(e.completion[order.back()] == inst.total_proc());

    if (n >= 3) {
      auto swapped = order;
      const auto k = static_cast<std::size_t>(rng.below(n - 1));
      std::swap(swapped[k], swapped[k + 1]);
      auto e2 = evaluate(inst, Schedule{swapped});
      for (int id = 0; id < n; ++id)
        if (id != order[k] && id != order[k + 1]) CHECK(e2.completion[id] == e.completion[id]);
    }
    CHECK(evaluate(inst, Schedule{order}) == e);
  }
}

TEST_CASE("validate_instance findings") {
  auto good = make_instance({{1, 2}, {2, 3}, {3, 4}});
  CHECK(validate_instance(good).empty());

  auto dup = good;
  dup.jobs[1].id = 0;
  auto r = validate_instance(dup);
  REQUIRE(r.findings.size() == 1);
  CHECK(r.findings[0].code == FindingCode::DuplicateId);
  CHECK_FALSE(r.ok());

  auto neg = good;
  neg.jobs[2].proc = -1;
  CHECK(validate_instance(neg).findings.at(0).code == FindingCode::NegativeProc);

  auto bigk = good;
  bigk.variant = Variant::constraint_decision(0, 5);
  auto rk = validate_instance(bigk);
  REQUIRE(rk.findings.size() == 1);
  CHECK(rk.findings[0].code == FindingCode::KExceedsJobCount);
  CHECK(rk.findings[0].severity == Severity::Warning);
  CHECK(rk.ok());

  Instance empty;
  CHECK(validate_instance(empty).findings.at(0).code == FindingCode::EmptyInstance);

  auto missing = good;
  missing.variant = Variant{VariantKind::ConstraintOpt, {}, {}, {}, {}};
  CHECK(validate_instance(missing).findings.at(0).code == FindingCode::MissingParameter);

  auto zero_w = good;
  zero_w.variant = Variant::weighted_sum(0, 1);
  CHECK(validate_instance(zero_w).findings.at(0).code == FindingCode::NonPositiveWeight);
}

TEST_CASE("labels") {
  CHECK(label({TagKind::NumberStar, 2, 1}) == "J*_{2,1}");
  CHECK(label({TagKind::NegNumber, 3, 2}) == "~J_{3,2}");
  CHECK(label({TagKind::DelimiterStar, 0, 2}) == "D*_{2}");
  for (int k = 0; k < kTagKindCount; ++k) {
    auto kind = static_cast<TagKind>(k);
    CHECK(tag_kind_from_string(to_string(kind)) == kind);
  }
}
