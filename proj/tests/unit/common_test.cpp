/* Copyright 2026 The pbe Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <doctest.h>

#include <atomic>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pbe/common.hpp"

using namespace pbe;

TEST_CASE("rng streams repeat for equal seeds") {
  Rng a(42), b(42), c(43);
  std::vector<std::uint64_t> xa, xb, xc;
  for (int i = 0; i < 8; ++i) {
    xa.push_back(a.next());
    xb.push_back(b.next());
    xc.push_back(c.next());
  }
  CHECK(xa == xb);
  CHECK(xa != xc);
}

TEST_CASE("rng ranges are inclusive and bounded") {
  Rng rng(1);
  std::set<std::int64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const auto v = rng.between(-2, 2);
    REQUIRE(v >= -2);
    REQUIRE(v <= 2);
    seen.insert(v);
    const double u = rng.uniform();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
  }
  CHECK(seen.size() == 5);
}

TEST_CASE("weighted never picks a zero weight") {
  Rng rng(9);
  const std::vector<double> w{0.0, 3.0, 0.0, 1.0};
  std::size_t ones = 0;
  for (int i = 0; i < 4000; ++i) {
    const auto k = rng.weighted(w);
    REQUIRE((k == 1 || k == 3));
    ones += k == 1;
  }
  // 3:1 odds; 4000 draws put the share of index 1 well inside [0.70, 0.80]
  CHECK(ones / 4000.0 == doctest::Approx(0.75).epsilon(0.07));
}

TEST_CASE("fnv1a matches the published test vectors") {
  CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a("foobar") == 0x85944171f73967e8ULL);
  CHECK(hex64(0xabcULL) == "0000000000000abc");
}

TEST_CASE("mix_seed separates salts") {
  CHECK(mix_seed(1, std::uint64_t{2}) != mix_seed(1, std::uint64_t{3}));
  CHECK(mix_seed(1, std::string_view("task-a")) != mix_seed(1, std::string_view("task-b")));
  CHECK(mix_seed(5, std::string_view("x")) == mix_seed(5, std::string_view("x")));
}

TEST_CASE("base64 round trip and rfc4648 vectors") {
  auto enc = [](std::string_view s) {
    return base64_encode(std::span(reinterpret_cast<const std::uint8_t*>(s.data()), s.size()));
  };
  CHECK(enc("") == "");
  CHECK(enc("f") == "Zg==");
  CHECK(enc("fo") == "Zm8=");
  CHECK(enc("foobar") == "Zm9vYmFy");
  const auto back = base64_decode("Zm9vYg==");
  CHECK(std::string(back.begin(), back.end()) == "foob");
  CHECK_THROWS_AS(base64_decode("Zm9v!"), Error);
}

TEST_CASE("parallel_for visits every index once") {
  std::vector<std::atomic<int>> hits(257);
  parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i]++; });
  for (auto& h : hits) CHECK(h.load() == 1);
}

TEST_CASE("parallel_for rethrows the lowest failing index") {
  try {
    parallel_for(100, 8, [](std::size_t i) {
      if (i == 17 || i == 60) throw std::runtime_error(std::to_string(i));
    });
    FAIL("expected a throw");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()) == "17");
  }
}
