#include <doctest.h>

#include <cstdlib>

#include "gibbsfrag/lattice.hpp"

using namespace gibbsfrag;

namespace {

// independent second-kind recursion, kept local to the tests
long local_stirling2(int n, int k) {
  if (k < 1 || k > n) return 0;
  if (n == 1) return 1;
  return k * local_stirling2(n - 1, k) + local_stirling2(n - 1, k - 1);
}

std::vector<Rat> cycle_weights(int n) {
  std::vector<Rat> w{Rat(1)};
  for (int j = 2; j <= n; ++j) w.push_back(w.back() * (j - 1));
  return w;
}

}  // namespace

TEST_CASE("set partition canonical form") {
  const auto p = SetPartition::of_blocks(4, {{4, 2}, {3, 1}});
  CHECK(p.blocks() == std::vector<std::vector<int>>{{1, 3}, {2, 4}});
  CHECK(p.rgs() == std::vector<int>{0, 1, 0, 1});
  CHECK(p.rgs_string() == "0101");
  CHECK(p.block_of(4) == 1);
  CHECK(p == SetPartition::of_rgs({0, 1, 0, 1}));

  CHECK_THROWS_AS(SetPartition::of_blocks(3, {{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(SetPartition::of_blocks(3, {{1, 2}, {2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(SetPartition::of_rgs({1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(SetPartition::of_rgs({0, 2}), std::invalid_argument);

  CHECK(SetPartition::single_block(3) == SetPartition::of_rgs({0, 0, 0}));
  CHECK(SetPartition::singletons(3) == SetPartition::of_rgs({0, 1, 2}));

  SUBCASE("element deletion and insertion") {
    CHECK(p.without(4) == SetPartition::of_blocks(3, {{1, 3}, {2}}));
    const auto q = SetPartition::of_blocks(3, {{1, 3}, {2}});
    CHECK(q.with_singleton(4) == SetPartition::of_blocks(4, {{1, 3}, {2}, {4}}));
    CHECK(q.with_joined(4, 2) == SetPartition::of_blocks(4, {{1, 3}, {2, 4}}));
  }
}

TEST_CASE("partition enumeration") {
  SUBCASE("small layer in RGS-lex order") {
    const auto layer = enumerate_partitions(3, 2);
    REQUIRE(layer.size() == 3);
    CHECK(layer[0] == SetPartition::of_blocks(3, {{1, 2}, {3}}));
    CHECK(layer[1] == SetPartition::of_blocks(3, {{1, 3}, {2}}));
    CHECK(layer[2] == SetPartition::of_blocks(3, {{1}, {2, 3}}));
  }

  SUBCASE("one-block layer") {
    CHECK(enumerate_partitions(5, 1) == std::vector<SetPartition>{SetPartition::single_block(5)});
  }

  SUBCASE("counts match the independent recursion up to n = 12") {
    for (int n = 1; n <= 12; ++n) {
      for (int k = 1; k <= n; ++k) {
        long count = 0;
        for_each_rgs(n, k, [&](const std::vector<int>&) { ++count; });
        CAPTURE(n);
        CAPTURE(k);
        CHECK(count == local_stirling2(n, k));
        CHECK(partition_count(n, k) == count);
      }
    }
  }
}

TEST_CASE("partition cover relation") {
  const auto whole = SetPartition::single_block(3);
  CHECK(covers(whole, SetPartition::of_blocks(3, {{1, 2}, {3}})));
  CHECK(covers(whole, SetPartition::of_blocks(3, {{1, 3}, {2}})));
  CHECK(covers(whole, SetPartition::of_blocks(3, {{1}, {2, 3}})));
  CHECK_FALSE(covers(whole, SetPartition::singletons(3)));
  // refinement but two splits away
  CHECK_FALSE(covers(SetPartition::single_block(4), SetPartition::of_rgs({0, 1, 2, 0})));
  // block count adjacent but not a refinement
  CHECK_FALSE(covers(SetPartition::of_rgs({0, 0, 1, 1}), SetPartition::of_rgs({0, 1, 2, 1})));
}

TEST_CASE("record set of a partition") {
  CHECK(record_set(SetPartition::singletons(4)) == RecordVector::from_bitstring("1111"));
  CHECK(record_set(SetPartition::single_block(4)) == RecordVector::from_bitstring("1000"));
  CHECK(record_set(SetPartition::of_blocks(4, {{1, 3}, {2, 4}})) ==
        RecordVector::from_bitstring("1100"));
}

TEST_CASE("gibbs partition law") {
  SUBCASE("cycle weights on four elements") {
    const auto layer = gibbs_partition_law(cycle_weights(4), 4, 2);
    CHECK(layer.probs.size() == 7);
    const int i = layer.index_of(SetPartition::of_blocks(4, {{1, 2, 3}, {4}}));
    REQUIRE(i >= 0);
    CHECK(layer.probs[i] == Rat(2, 11));
    const int j = layer.index_of(SetPartition::of_blocks(4, {{1, 2}, {3, 4}}));
    REQUIRE(j >= 0);
    CHECK(layer.probs[j] == Rat(1, 11));
  }

  SUBCASE("unit weights are uniform") {
    const auto layer = gibbs_partition_law(std::vector<Rat>(5, Rat(1)), 5, 3);
    for (const Rat& p : layer.probs) CHECK(p == Rat(1, 25));
  }

  SUBCASE("k = n is a point mass") {
    const auto layer = gibbs_partition_law(cycle_weights(4), 4, 4);
    CHECK(layer.size() == 1);
    CHECK(layer.states[0] == SetPartition::singletons(4));
  }
}

TEST_CASE("record law oracle") {
  SUBCASE("cycle weights reproduce the n=4 record masses") {
    const auto layer = record_law_oracle(cycle_weights(4), 4, 2);
    CHECK(layer.states == std::vector<RecordVector>{RecordVector::from_bitstring("1100"),
                                                    RecordVector::from_bitstring("1010"),
                                                    RecordVector::from_bitstring("1001")});
    CHECK(layer.probs == std::vector<Rat>{Rat(6, 11), Rat(3, 11), Rat(2, 11)});
  }

  SUBCASE("unit weights on three elements") {
    const auto layer = record_law_oracle(std::vector<Rat>(3, Rat(1)), 3, 2);
    CHECK(layer.states == std::vector<RecordVector>{RecordVector::from_bitstring("110"),
                                                    RecordVector::from_bitstring("101")});
    CHECK(layer.probs == std::vector<Rat>{Rat(2, 3), Rat(1, 3)});
  }

  SUBCASE("k = n pushes to all ones") {
    const auto layer = record_law_oracle(cycle_weights(3), 3, 3);
    CHECK(layer.size() == 1);
    CHECK(layer.states[0] == RecordVector::from_bitstring("111"));
  }

  SUBCASE("cycle-weight pushforward equals the conditioned Bernoulli layers, n <= 8") {
    for (int n = 1; n <= 8; ++n) {
      std::vector<Rat> p;
      for (int i = 1; i <= n; ++i) p.emplace_back(1, i);
      const auto w = cycle_weights(n);
      for (int k = 1; k <= n; ++k) {
        CAPTURE(n);
        CAPTURE(k);
        CHECK(record_law_oracle(w, n, k) == conditional_bernoulli(p, k));
      }
    }
  }
}

TEST_CASE("layer state guard") {
  CHECK(layer_state_guard() == 5000000);
  setenv("GIBBSFRAG_GUARD", "10", 1);
  CHECK(layer_state_guard() == 10);
  CHECK_THROWS_AS(enumerate_partitions(10, 5), guard_error);          // 42525 states
  CHECK_THROWS_AS(gibbs_partition_law(cycle_weights(10), 10, 5), guard_error);
  setenv("GIBBSFRAG_GUARD", "nonsense", 1);
  CHECK_THROWS_AS(layer_state_guard(), guard_error);
  unsetenv("GIBBSFRAG_GUARD");
  CHECK_NOTHROW(enumerate_partitions(6, 3));
}

TEST_CASE("partition strassen explorer") {
  SUBCASE("unit weights, small sizes, all levels feasible") {
    const auto report = partition_strassen_explore(std::vector<Rat>(5, Rat(1)), 5);
    CHECK(report.levels.size() == 4);
    CHECK(report.all_feasible());
    CHECK(report.levels[0].lower_states == 1);
    CHECK(report.levels[0].upper_states == 15);
    CHECK(report.levels[0].edge_count == 15);
  }

  SUBCASE("cycle weights match the fragmentation guarantee") {
    const auto report = partition_strassen_explore(cycle_weights(6), 6);
    CHECK(report.all_feasible());
  }

  SUBCASE("two elements are trivially feasible") {
    const auto report = partition_strassen_explore(std::vector<Rat>(2, Rat(1)), 2);
    CHECK(report.all_feasible());
    CHECK(report.levels.size() == 1);
  }
}
