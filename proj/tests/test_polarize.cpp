#include <cmath>
#include <random>

#include "doctest.h"
#include "pdpolar/polarize.hpp"

using namespace pdpolar;

TEST_CASE("geometry validation") {
  CHECK_THROWS_AS(CodeGeometry(0, 0.3), std::invalid_argument);
  CHECK_THROWS_AS(CodeGeometry(-3, 0.3), std::invalid_argument);
  CHECK_THROWS_AS(CodeGeometry(100, 0.3), std::invalid_argument);
  CHECK_THROWS_AS(CodeGeometry(4, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(CodeGeometry(4, 0.0), std::invalid_argument);
  const CodeGeometry g(5, 0.25);
  CHECK(g.n == 32);
}

TEST_CASE("exact recursion matches the hand-computed tables") {
  const auto k1 = polarize_exact(0.5, CodeGeometry(1, 0.3));
  CHECK(k1.values == std::vector<double>{0.75, 0.25});

  const auto k2 = polarize_exact(0.5, CodeGeometry(2, 0.3));
  CHECK(k2.values == std::vector<double>{0.9375, 0.5625, 0.4375, 0.0625});
  CHECK(k2.mode == TableMode::erasure_exact);
  CHECK(k2.mc_samples == 0);

  const auto zeros = polarize_exact(0.0, CodeGeometry(3, 0.3));
  for (const double v : zeros.values) CHECK(v == 0.0);

  const auto ones = polarize_exact(1.0, CodeGeometry(3, 0.3));
  for (const double v : ones.values) CHECK(v == 1.0);
}

TEST_CASE("exact recursion conserves the base parameter") {
  for (int k = 1; k <= 16; ++k) {
    const CodeGeometry g(k, 0.3);
    for (int b = 0; b <= 10; ++b) {
      const double base = b / 10.0;
      const auto table = polarize_exact(base, g);
      CHECK(std::abs(table_mean(table) - base) <= 1e-9);
      // Absolute form: the value sum stays pinned to n * base.
      CHECK(std::abs(table_mean(table) * static_cast<double>(g.n) -
                     base * static_cast<double>(g.n)) <= 1e-9);
      for (const double v : table.values) {
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
      }
    }
  }
}

TEST_CASE("polarization progresses with depth") {
  auto band_fraction = [](const SyntheticTable& t) {
    std::size_t c = 0;
    for (const double v : t.values)
      if (v > 0.01 && v < 0.99) ++c;
    return static_cast<double>(c) / static_cast<double>(t.values.size());
  };
  const double at8 = band_fraction(polarize_exact(0.5, CodeGeometry(8, 0.3)));
  const double at16 =
      band_fraction(polarize_exact(0.5, CodeGeometry(16, 0.3)));
  CHECK(at16 < at8);

  const double u8 = unpolarized_fraction(polarize_exact(0.5, CodeGeometry(8, 0.3)));
  const double u16 =
      unpolarized_fraction(polarize_exact(0.5, CodeGeometry(16, 0.3)));
  CHECK(u16 < u8);
}

TEST_CASE("good-set classification") {
  SyntheticTable table{CodeGeometry(2, 0.25), 0.5, TableMode::erasure_exact,
                       0, {0.9375, 0.5625, 0.4375, 0.0625}};
  // threshold 2^{-4^0.25} ~= 0.3752; only sqrt(0.0625) = 0.25 is below.
  CHECK(classify_good(table).to_indices() == std::vector<std::uint32_t>{3});

  table.values = {0.0, 0.0, 0.0, 0.0};
  CHECK(classify_good(table).count() == 4);

  table.values = {1.0, 1.0, 1.0, 1.0};
  CHECK(classify_good(table).empty());
}

TEST_CASE("good and bad sets partition the indices") {
  std::mt19937_64 eng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 2 + static_cast<int>(eng() % 9);
    const double base = static_cast<double>(eng() >> 11) * 0x1.0p-53;
    const auto table = polarize_exact(base, CodeGeometry(k, 0.3));
    const IndexSet good = classify_good(table);
    CHECK(good.count() + good.complement().count() == table.geometry.n);
  }
}

TEST_CASE("a worse base parameter never grows the good set") {
  std::mt19937_64 eng(17);
  const CodeGeometry g(9, 0.3);
  for (int trial = 0; trial < 50; ++trial) {
    double b1 = static_cast<double>(eng() >> 11) * 0x1.0p-53;
    double b2 = static_cast<double>(eng() >> 11) * 0x1.0p-53;
    if (b1 > b2) std::swap(b1, b2);
    const auto g1 = classify_good(polarize_exact(b1, g));
    const auto g2 = classify_good(polarize_exact(b2, g));
    CHECK(g1.count() >= g2.count());
    CHECK(g2.is_subset_of(g1));
  }
}

TEST_CASE("classification works below the subnormal range") {
  // At k=20 and beta approaching 0.5 the threshold 2^{-n^beta} underflows
  // a double; zero fidelities must still classify as good.
  SyntheticTable table{CodeGeometry(20, 0.49), 0.5, TableMode::erasure_exact,
                       0, {}};
  table.values.assign(table.geometry.n, 1.0);
  table.values[0] = 0.0;
  table.values[1] = 1e-300;
  const IndexSet good = classify_good(table);
  CHECK(good.contains(0));
  CHECK(!good.contains(2));
}

TEST_CASE("monte carlo density evolution") {
  const CodeGeometry g(2, 0.3);

  SUBCASE("degenerate bases are exact") {
    const auto zeros = polarize_mc(0.0, g, 2000, 1);
    for (const double v : zeros.values) CHECK(v == 0.0);
    const auto ones = polarize_mc(1.0, g, 2000, 1);
    for (const double v : ones.values) CHECK(v == 1.0);
  }

  SUBCASE("sample floor is enforced") {
    CHECK_THROWS_WITH_AS(polarize_mc(0.5, g, 999, 1),
                         doctest::Contains("insufficient samples"),
                         std::invalid_argument);
  }

  SUBCASE("deterministic given the seed") {
    const auto a = polarize_mc(0.3, g, 5000, 42);
    const auto b = polarize_mc(0.3, g, 5000, 42);
    CHECK(a.values == b.values);
    CHECK(a.mode == TableMode::mc_density_evolution);
    CHECK(a.mc_samples == 5000);
  }

  SUBCASE("matches the exact recursion within tolerance") {
    const auto exact = polarize_exact(0.5, g);
    const auto mc = polarize_mc(0.5, g, 100000, 9);
    for (std::size_t i = 0; i < g.n; ++i)
      CHECK(std::abs(mc.values[i] - exact.values[i]) <= 0.02);
  }
}

TEST_CASE("monte carlo covers deeper trees on erasure inputs") {
  // Seed-averaged agreement at k=8 and 1e5 samples.
  const CodeGeometry g(8, 0.3);
  const auto exact = polarize_exact(0.5, g);
  std::vector<double> mean(g.n, 0.0);
  const int seeds = 5;
  for (int s = 0; s < seeds; ++s) {
    const auto mc = polarize_mc(0.5, g, 100000, 1000 + s);
    for (std::size_t i = 0; i < g.n; ++i) mean[i] += mc.values[i] / seeds;
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < g.n; ++i)
    worst = std::max(worst, std::abs(mean[i] - exact.values[i]));
  CHECK(worst <= 0.02);
}
