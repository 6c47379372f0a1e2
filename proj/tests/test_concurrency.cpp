#include "doctest.h"

#include <atomic>
#include <thread>
#include <vector>

#include "linkpoly/rational_links.hpp"
#include "linkpoly/signed_tutte.hpp"

using namespace linkpoly;

TEST_CASE("concurrent registration is idempotent") {
  Registry reg = make_registry();
  constexpr int kThreads = 8;
  constexpr int kNames = 40;
  std::vector<std::vector<int>> indices(kThreads,
                                        std::vector<int>(kNames, -1));
  std::vector<std::thread> workers;
  for (int t = 0; t < kThreads; ++t) {
    workers.emplace_back([&, t] {
      for (int i = 0; i < kNames; ++i)
        indices[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)] =
            reg->intern("v" + std::to_string(i));
    });
  }
  for (auto& w : workers) w.join();
  for (int t = 1; t < kThreads; ++t)
    CHECK(indices[static_cast<std::size_t>(t)] == indices[0]);
  for (int i = 0; i < kNames; ++i)
    CHECK(reg->name(indices[0][static_cast<std::size_t>(i)]) ==
          "v" + std::to_string(i));
}

TEST_CASE("shared memo under concurrent evaluation stays consistent") {
  Registry reg = make_registry();
  const QRing br = QRing::bracket(reg);
  QMemo memo;

  // every thread evaluates an overlapping slice of words through the same
  // memo; results must match a fresh single-threaded evaluation
  std::vector<RationalWord> words;
  for (int a = 1; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) {
      if (b == 0) continue;
      for (int c = 1; c <= 2; ++c) words.push_back(RationalWord{{a, b, c}});
    }

  std::vector<MultiPoly> expected;
  expected.reserve(words.size());
  for (const RationalWord& w : words)
    expected.push_back(bracket_rational_oracle(w, br, nullptr));

  std::atomic<int> failures{0};
  std::vector<std::thread> workers;
  for (int t = 0; t < 6; ++t) {
    workers.emplace_back([&] {
      for (std::size_t i = 0; i < words.size(); ++i) {
        const MultiPoly got = bracket_rational_oracle(words[i], br, &memo);
        if (got != expected[i]) failures.fetch_add(1);
      }
    });
  }
  for (auto& w : workers) w.join();
  CHECK(failures.load() == 0);
  CHECK(memo.size() > 0);
}
