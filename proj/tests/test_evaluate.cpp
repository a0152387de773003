// Copyright 2026 The ackfund Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "ackfund/evaluate.hpp"

using namespace ackfund;
using evaluate::ConfusionCounts;
using evaluate::EvalPair;
using evaluate::FunderSet;

namespace {

// Independent slow-path oracle used to cross-check the implementation on
// small corpora: recomputes everything from first principles.
struct Oracle {
  std::int64_t tp = 0, fp = 0, fn = 0, tn = 0;
  double accuracy = 0.0, missed = 0.0, extra = 0.0;

  explicit Oracle(const std::vector<EvalPair>& pairs) {
    std::int64_t equal = 0, any_missed = 0, any_extra = 0, tps = 0;
    for (const auto& [sys, ref] : pairs) {
      if (!sys.empty() && !ref.empty()) {
        ++tp;
        ++tps;
        FunderSet inter;
        std::set_intersection(sys.begin(), sys.end(), ref.begin(), ref.end(),
                              std::inserter(inter, inter.begin()));
        const bool m = inter.size() < ref.size();
        const bool e = inter.size() < sys.size();
        if (!m && !e) ++equal;
        if (m) ++any_missed;
        if (e) ++any_extra;
      } else if (!sys.empty()) {
        ++fp;
      } else if (!ref.empty()) {
        ++fn;
      } else {
        ++tn;
      }
    }
    if (tps > 0) {
      accuracy = static_cast<double>(equal) / static_cast<double>(tps);
      missed = static_cast<double>(any_missed) / static_cast<double>(tps);
      extra = static_cast<double>(any_extra) / static_cast<double>(tps);
    }
  }
};

std::vector<EvalPair> random_pairs(std::mt19937& rng, int max_pairs, int max_funders) {
  std::uniform_int_distribution<int> pair_count(0, max_pairs);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<EvalPair> pairs;
  const int n = pair_count(rng);
  for (int i = 0; i < n; ++i) {
    FunderSet sys;
    FunderSet ref;
    for (int f = 0; f < max_funders; ++f) {
      const std::string id = "f" + std::to_string(f);
      if (coin(rng) != 0) sys.insert(id);
      if (coin(rng) != 0) ref.insert(id);
    }
    pairs.emplace_back(std::move(sys), std::move(ref));
  }
  return pairs;
}

}  // namespace

TEST_CASE("confusion counts on hand-built pairs") {
  const std::vector<EvalPair> pairs = {
      {{"a"}, {"a"}},  // tp
      {{"a"}, {}},     // fp
      {{}, {"b"}},     // fn
      {{}, {}},        // tn
  };
  const ConfusionCounts counts = evaluate::compute_confusion(pairs);
  CHECK(counts.tp == 1);
  CHECK(counts.fp == 1);
  CHECK(counts.fn == 1);
  CHECK(counts.tn == 1);
  CHECK(counts.total() == 4);
}

TEST_CASE("all-empty pairs are all true negatives") {
  const std::vector<EvalPair> pairs(7, EvalPair{});
  const ConfusionCounts counts = evaluate::compute_confusion(pairs);
  CHECK(counts.tn == 7);
  CHECK(counts.tp + counts.fp + counts.fn == 0);
}

TEST_CASE("published recall and precision figures reproduce") {
  ConfusionCounts medline;
  medline.tp = 1639;
  medline.fn = 2275;
  medline.fp = 73;
  CHECK(evaluate::recall(medline) == doctest::Approx(0.419).epsilon(0.0025));
  CHECK(evaluate::precision(medline) == doctest::Approx(0.957).epsilon(0.0025));

  ConfusionCounts wos;
  wos.tp = 3524;
  wos.fn = 274;
  wos.fp = 212;
  CHECK(evaluate::recall(wos) == doctest::Approx(0.928).epsilon(0.0025));
  CHECK(evaluate::precision(wos) == doctest::Approx(0.943).epsilon(0.0025));
}

TEST_CASE("degenerate perfect scores") {
  ConfusionCounts counts;
  counts.tp = 5;
  CHECK(evaluate::recall(counts) == 1.0);
  counts.tp = 1;
  CHECK(evaluate::precision(counts) == 1.0);
}

TEST_CASE("undefined metrics are errors, not defaults") {
  ConfusionCounts counts;
  counts.tn = 10;
  CHECK_THROWS_AS(evaluate::recall(counts), MetricUndefinedError);
  CHECK_THROWS_AS(evaluate::precision(counts), MetricUndefinedError);
  CHECK_THROWS_AS(evaluate::list_accuracy({}), MetricUndefinedError);
  CHECK_THROWS_AS(evaluate::funder_stats({}), MetricUndefinedError);
}

TEST_CASE("recall and precision stay within [0,1] and hit 1 only when clean") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> count(0, 50);
  for (int trial = 0; trial < 200; ++trial) {
    ConfusionCounts counts;
    counts.tp = count(rng);
    counts.fp = count(rng);
    counts.fn = count(rng);
    if (counts.tp + counts.fn > 0) {
      const double r = evaluate::recall(counts);
      CHECK(r >= 0.0);
      CHECK(r <= 1.0);
      CHECK((r == 1.0) == (counts.fn == 0));
    }
    if (counts.tp + counts.fp > 0) {
      const double p = evaluate::precision(counts);
      CHECK(p >= 0.0);
      CHECK(p <= 1.0);
      CHECK((p == 1.0) == (counts.fp == 0));
    }
  }
}

TEST_CASE("list accuracy on the two-pair hand enumeration") {
  const std::vector<EvalPair> pairs = {
      {{"a"}, {"a", "b"}},  // missed one
      {{"a", "b"}, {"a"}},  // extra one
  };
  const auto la = evaluate::list_accuracy(pairs);
  CHECK(la.accuracy == 0.0);
  CHECK(la.missed_any == 0.5);
  CHECK(la.extra_any == 0.5);
}

TEST_CASE("list accuracy identity case") {
  const std::vector<EvalPair> pairs = {{{"a"}, {"a"}}, {{"b", "c"}, {"b", "c"}}};
  const auto la = evaluate::list_accuracy(pairs);
  CHECK(la.accuracy == 1.0);
  CHECK(la.missed_any == 0.0);
  CHECK(la.extra_any == 0.0);
}

TEST_CASE("a 68-of-100 equal-set fixture scores 0.680 exactly") {
  std::vector<EvalPair> pairs;
  for (int i = 0; i < 68; ++i) pairs.push_back({{"a"}, {"a"}});
  for (int i = 0; i < 20; ++i) pairs.push_back({{"a"}, {"a", "b"}});
  for (int i = 0; i < 12; ++i) pairs.push_back({{"a", "c"}, {"a"}});
  const auto la = evaluate::list_accuracy(pairs);
  CHECK(la.accuracy == doctest::Approx(0.68).epsilon(1e-12));
}

TEST_CASE("accuracy decomposition: equal plus flawed is one") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    auto pairs = random_pairs(rng, 12, 4);
    std::erase_if(pairs, [](const EvalPair& p) {
      return p.first.empty() || p.second.empty();
    });
    if (pairs.empty()) continue;
    const auto la = evaluate::list_accuracy(pairs);
    // accuracy == fraction(neither missed nor extra)
    const Oracle oracle(pairs);
    CHECK(la.accuracy == doctest::Approx(oracle.accuracy).epsilon(1e-12));
    std::int64_t flawed = 0;
    for (const auto& [sys, ref] : pairs) {
      if (sys != ref) ++flawed;
    }
    CHECK(la.accuracy + static_cast<double>(flawed) / static_cast<double>(pairs.size()) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("funder stats basic arithmetic") {
  const auto stats = evaluate::funder_stats({{"a", "b"}, {"a", "b", "c", "d"}});
  CHECK(stats.mean == doctest::Approx(3.0));
  CHECK(stats.max == 4);
  CHECK(stats.distinct == 4);
  const auto single = evaluate::funder_stats({{"a", "b", "c"}});
  CHECK(single.stddev == 0.0);
  CHECK(single.mean == doctest::Approx(3.0));
}

TEST_CASE("funder stats match an independent recomputation on a fixed fixture") {
  std::mt19937 rng(123);
  std::uniform_int_distribution<int> size(0, 9);
  std::vector<FunderSet> sets;
  for (int i = 0; i < 20; ++i) {
    FunderSet set;
    const int n = size(rng);
    for (int f = 0; f < n; ++f) set.insert("f" + std::to_string((i * 3 + f) % 11));
    sets.push_back(std::move(set));
  }
  const auto stats = evaluate::funder_stats(sets);
  // Oracle: direct definition.
  double sum = 0.0;
  std::int64_t max = 0;
  FunderSet all;
  for (const auto& set : sets) {
    sum += static_cast<double>(set.size());
    max = std::max<std::int64_t>(max, static_cast<std::int64_t>(set.size()));
    all.insert(set.begin(), set.end());
  }
  const double mean = sum / 20.0;
  double sq = 0.0;
  for (const auto& set : sets) {
    sq += (static_cast<double>(set.size()) - mean) * (static_cast<double>(set.size()) - mean);
  }
  CHECK(stats.mean == doctest::Approx(mean).epsilon(1e-12));
  CHECK(stats.stddev == doctest::Approx(std::sqrt(sq / 20.0)).epsilon(1e-12));
  CHECK(stats.max == max);
  CHECK(stats.distinct == static_cast<std::int64_t>(all.size()));
}

TEST_CASE("confusion is permutation-invariant and merges over partitions") {
  std::mt19937 rng(55);
  for (int trial = 0; trial < 100; ++trial) {
    auto pairs = random_pairs(rng, 30, 4);
    const ConfusionCounts whole = evaluate::compute_confusion(pairs);

    auto shuffled = pairs;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(evaluate::compute_confusion(shuffled) == whole);

    // Any split recombines exactly.
    std::uniform_int_distribution<std::size_t> cut(0, pairs.size());
    const std::size_t k = cut(rng);
    const std::vector<EvalPair> left(pairs.begin(), pairs.begin() + k);
    const std::vector<EvalPair> right(pairs.begin() + k, pairs.end());
    CHECK(evaluate::compute_confusion(left) + evaluate::compute_confusion(right) ==
          whole);
  }
}

TEST_CASE("metrics agree with the brute-force oracle on small corpora") {
  std::mt19937 rng(808);
  for (int trial = 0; trial < 500; ++trial) {
    const auto pairs = random_pairs(rng, 10, 4);
    const Oracle oracle(pairs);
    const ConfusionCounts counts = evaluate::compute_confusion(pairs);
    CHECK(counts.tp == oracle.tp);
    CHECK(counts.fp == oracle.fp);
    CHECK(counts.fn == oracle.fn);
    CHECK(counts.tn == oracle.tn);
    if (counts.tp + counts.fn > 0) {
      CHECK(evaluate::recall(counts) ==
            doctest::Approx(static_cast<double>(oracle.tp) /
                            static_cast<double>(oracle.tp + oracle.fn)));
    }
    std::vector<EvalPair> tp_pairs;
    for (const auto& pair : pairs) {
      if (!pair.first.empty() && !pair.second.empty()) tp_pairs.push_back(pair);
    }
    if (!tp_pairs.empty()) {
      const auto la = evaluate::list_accuracy(tp_pairs);
      CHECK(la.accuracy == doctest::Approx(oracle.accuracy).epsilon(1e-12));
      CHECK(la.missed_any == doctest::Approx(oracle.missed).epsilon(1e-12));
      CHECK(la.extra_any == doctest::Approx(oracle.extra).epsilon(1e-12));
    }
  }
}

TEST_CASE("omission estimators reproduce the published arithmetic") {
  const auto no_ack = evaluate::estimate_unreported_funding(0.62, 0.18, std::nullopt,
                                                            1310, 7510);
  CHECK(no_ack.estimate == doctest::Approx(0.112).epsilon(0.01));
  CHECK(no_ack.corpus_share == doctest::Approx(0.019).epsilon(0.05));

  const auto ack_only =
      evaluate::estimate_unreported_funding(0.84, 0.14, 0.31, 2286, 7510);
  CHECK(ack_only.estimate == doctest::Approx(0.036).epsilon(0.02));
  CHECK(ack_only.corpus_share == doctest::Approx(0.011).epsilon(0.15));
}

TEST_CASE("omission estimator degenerate and invalid inputs") {
  const auto zero = evaluate::estimate_unreported_funding(1.0, 0.0, std::nullopt, 10, 100);
  CHECK(zero.estimate == 0.0);
  CHECK(zero.corpus_share == 0.0);
  CHECK_THROWS_AS(
      evaluate::estimate_unreported_funding(1.2, 0.5, std::nullopt, 10, 100),
      ValidationError);
  CHECK_THROWS_AS(
      evaluate::estimate_unreported_funding(0.5, 0.5, std::nullopt, 0, 100),
      ValidationError);
}

TEST_CASE("build_report assembles counts, rates and stats") {
  const std::vector<EvalPair> pairs = {
      {{"a"}, {"a"}},           // tp, equal
      {{"a", "b"}, {"a"}},      // tp, extra
      {{"c"}, {}},              // fp
      {{}, {"d"}},              // fn
      {{}, {}},                 // tn
  };
  const auto report = evaluate::build_report(pairs);
  CHECK(report.counts.tp == 2);
  CHECK(report.counts.fp == 1);
  CHECK(report.counts.fn == 1);
  CHECK(report.counts.tn == 1);
  CHECK(report.recall == doctest::Approx(2.0 / 3.0));
  CHECK(report.precision == doctest::Approx(2.0 / 3.0));
  CHECK(report.list_accuracy == doctest::Approx(0.5));
  CHECK(report.extra_any == doctest::Approx(0.5));
  CHECK(report.missed_any == 0.0);
  CHECK(report.max_funders == 2);
  CHECK(report.distinct_funders == 3);  // a, b, c in system sets
  CHECK(report.mean_funders == doctest::Approx(4.0 / 3.0));
}
