#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "levy/rng.hpp"

using levy::RngStream;

TEST_CASE("identical (seed, stream) reproduces identical sequences") {
  RngStream a(42, 7), b(42, 7);
  for (int i = 0; i < 1000; ++i) REQUIRE(a.next_u64() == b.next_u64());
}

TEST_CASE("distinct streams differ and do not collide") {
  RngStream a(42, 0), b(42, 1), c(43, 0);
  std::set<std::uint64_t> firsts;
  for (std::uint64_t s = 0; s < 200; ++s) firsts.insert(RngStream(42, s).next_u64());
  REQUIRE(firsts.size() == 200);
  REQUIRE(a.next_u64() != b.next_u64());
  REQUIRE(RngStream(42, 0).next_u64() != c.next_u64());
}

TEST_CASE("uniform01 stays inside the open interval") {
  RngStream r(1, 0);
  for (int i = 0; i < 200000; ++i) {
    const double u = r.uniform01();
    REQUIRE(u > 0.0);
    REQUIRE(u < 1.0);
  }
}

TEST_CASE("stream moments are sane") {
  RngStream r(987, 3);
  const int n = 200000;
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = r.uniform01();
    sum += u;
    sum2 += u * u;
  }
  const double mean = sum / n;
  const double var = sum2 / n - mean * mean;
  REQUIRE(std::abs(mean - 0.5) < 0.005);
  REQUIRE(std::abs(var - 1.0 / 12.0) < 0.005);

  double nsum = 0.0, nsum2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = r.normal01();
    nsum += x;
    nsum2 += x * x;
  }
  REQUIRE(std::abs(nsum / n) < 0.01);
  REQUIRE(std::abs(nsum2 / n - 1.0) < 0.02);
}
