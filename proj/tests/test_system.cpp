#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ltv/system.hpp"
#include "testutil.hpp"

using namespace ltv;
namespace fs = std::filesystem;

TEST_CASE("validate accepts the demo system and rejects broken ones") {
  CHECK_NOTHROW(validate(testutil::demo_a(2.0), 50));

  const LtvSystem bad = LtvSystem::first_order(CoefficientSequence::closed_form("k"),
                                               CoefficientSequence::constant(1.0), 0.0, "bad");
  try {
    validate(bad, 1);
    FAIL("expected LeadingCoefficientZero");
  } catch (const LeadingCoefficientZero& e) {
    CHECK(e.k == 0);
  }

  const LtvSystem pole = LtvSystem::first_order(CoefficientSequence::closed_form("1/(k-3)"),
                                                CoefficientSequence::constant(1.0), 0.0, "pole");
  try {
    validate(pole, 5);
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    REQUIRE(e.k.has_value());
    CHECK(*e.k == 3);
  }
}

TEST_CASE("system construction enforces shape") {
  CHECK_THROWS_AS(LtvSystem({}, {}, "empty"), InvalidArgument);
  CHECK_THROWS_AS(LtvSystem({CoefficientSequence::constant(1.0)}, {1.0}, "extra"),
                  InvalidArgument);
  const LtvSystem z = LtvSystem::zero_order(CoefficientSequence::constant(2.0), "Z");
  CHECK(z.order() == 0);
  CHECK(z.initial_state().empty());
}

TEST_CASE("simulate reproduces hand-applied recursion steps") {
  // unit-sample input, nonzero initial state: first two steps by hand
  const LtvSystem a = testutil::demo_a(2.0);
  const Signal y = simulate(a, Signal::unit_sample(0, 10), 10);
  CHECK(y[0] == 2.0);
  CHECK(y[1] == -1.0);                                // (1 - 1*2) / 1
  CHECK(y[2] == doctest::Approx(4.0 / std::exp(1.0)).epsilon(1e-15));  // (0 - 4*(-1)) / e
}

TEST_CASE("simulate edge cases") {
  const LtvSystem a = testutil::demo_a(0.0);
  SUBCASE("zero input and zero state give zero output") {
    const Signal y = simulate(a, Signal::zeros(20), 20);
    for (long k = 0; k <= 20; ++k) CHECK(y[k] == 0.0);
  }
  SUBCASE("order zero divides pointwise") {
    const LtvSystem z = LtvSystem::zero_order(CoefficientSequence::constant(2.0), "Z");
    std::vector<double> x(11, 4.0);
    const Signal y = simulate(z, Signal(std::move(x)), 10);
    for (long k = 0; k <= 10; ++k) CHECK(y[k] == 2.0);
  }
  SUBCASE("horizon shorter than the order is rejected") {
    CHECK_THROWS_AS(simulate(a, Signal::zeros(0), 0), InvalidArgument);
  }
  SUBCASE("input must cover the horizon") {
    CHECK_THROWS_AS(simulate(a, Signal::zeros(5), 10), InvalidArgument);
  }
}

TEST_CASE("simulate matches the independent recursion oracle") {
  Rng rng(101);
  const long K = 40;
  for (int trial = 0; trial < 20; ++trial) {
    const int order = 1 + trial % 2;
    const LtvSystem sys = testutil::random_system(rng, order, K, 0.3, false, "S");
    const Signal x = testutil::random_signal(rng, K);
    const Signal y = simulate(sys, x, K);
    const std::vector<double> expected = testutil::recursion_oracle(
        order, [&](int i, long k) { return sys.coeff(i).at(k); }, sys.initial_state(),
        x.samples(), K);
    for (long k = 0; k <= K; ++k) CHECK(y[k] == expected[static_cast<std::size_t>(k)]);
  }
}

TEST_CASE("unit samples") {
  CHECK(Signal::unit_sample(0, 2).samples() == std::vector<double>{1, 0, 0});
  CHECK(Signal::unit_sample(2, 2).samples() == std::vector<double>{0, 0, 1});
  CHECK_THROWS_AS(Signal::unit_sample(3, 2), InvalidArgument);
}

TEST_CASE("impulse responses of the demo pair") {
  const LtvSystem a = testutil::demo_a(2.0);  // stored state must be ignored
  const Signal ha = impulse_response(a, 0, 5);
  CHECK(ha[0] == 0.0);
  CHECK(ha[1] == 1.0);  // 1 / e^0
  CHECK(ha[2] == doctest::Approx(-4.0 / std::exp(1.0)).epsilon(1e-15));

  const Signal hb = impulse_response(testutil::demo_b(2.0), 0, 5);
  CHECK(hb[1] == 0.5);  // 1 / (2 e^0)
}

TEST_CASE("convolution with the simulated kernel reproduces simulate") {
  const LtvSystem b = testutil::demo_b(0.0);
  const long K = 30;

  // unit-sample responses as a dense kernel
  std::vector<Signal> columns;
  for (long l = 0; l <= K; ++l) columns.push_back(impulse_response(b, l, K));
  const auto h = [&](long k, long l) { return columns[static_cast<std::size_t>(l)][k]; };

  SUBCASE("sifting") {
    const Signal y = convolve(h, Signal::unit_sample(3, K), K);
    for (long k = 0; k <= K; ++k) CHECK(y[k] == columns[3][k]);
  }
  SUBCASE("zero input") {
    const Signal y = convolve(h, Signal::zeros(K), K);
    for (long k = 0; k <= K; ++k) CHECK(y[k] == 0.0);
  }
  SUBCASE("superposition equals direct simulation") {
    Rng rng(7);
    const Signal x = testutil::random_signal(rng, K);
    const Signal direct = simulate(b.with_zero_state(), x, K);
    const Signal summed = convolve(h, x, K);
    for (long k = 0; k <= K; ++k) {
      CHECK(approx_equal(direct[k], summed[k], Tolerance{1e-9, 1e-12}));
    }
  }
}

TEST_CASE("zero-state responses are linear") {
  Rng rng(42);
  const long K = 30;
  for (int trial = 0; trial < 10; ++trial) {
    const LtvSystem sys =
        testutil::random_first_order(rng, K, 0.1, 0.0, "S").with_zero_state();
    const Signal x1 = testutil::random_signal(rng, K);
    const Signal x2 = testutil::random_signal(rng, K);
    const double u = rng.uniform(-2.0, 2.0);
    const double v = rng.uniform(-2.0, 2.0);
    const Signal combined = simulate(sys, u * x1 + v * x2, K);
    const Signal separate = u * simulate(sys, x1, K) + v * simulate(sys, x2, K);
    CHECK(approx_equal(combined, separate, Tolerance{1e-9, 1e-12}));
  }
}

TEST_CASE("full response = zero-state + zero-input response") {
  Rng rng(43);
  const long K = 30;
  for (int trial = 0; trial < 10; ++trial) {
    const int order = 1 + trial % 2;
    const LtvSystem sys = testutil::random_system(rng, order, K, 0.3, true, "S");
    const Signal x = testutil::random_signal(rng, K);
    const Signal full = simulate(sys, x, K);
    const Signal zero_state = simulate(sys.with_zero_state(), x, K);
    const Signal zero_input = simulate(sys, Signal::zeros(K), K);
    CHECK(approx_equal(full, zero_state + zero_input, Tolerance{1e-9, 1e-12}));
  }
}

TEST_CASE("causality: later inputs cannot reach earlier outputs") {
  Rng rng(44);
  const long K = 30;
  const long m = 12;
  for (int trial = 0; trial < 5; ++trial) {
    const int order = 1 + trial % 2;
    const LtvSystem sys = testutil::random_system(rng, order, K, 0.3, true, "S");
    const Signal x1 = testutil::random_signal(rng, K);
    std::vector<double> tail_changed = x1.samples();
    for (long k = m + 1; k <= K; ++k) tail_changed[k] = rng.uniform(-1.0, 1.0);
    const Signal y1 = simulate(sys, x1, K);
    const Signal y2 = simulate(sys, Signal(std::move(tail_changed)), K);
    for (long k = 0; k <= m + order; ++k) CHECK(y1[k] == y2[k]);
  }
}

TEST_CASE("any output value is reachable by choosing the right input sample") {
  Rng rng(45);
  const long K = 20;
  for (int trial = 0; trial < 5; ++trial) {
    const int order = 1 + trial % 2;
    // contracting systems: per-step gain below 1 keeps the arithmetic well
    // conditioned, so the forced sample lands on the target to full precision
    std::vector<CoefficientSequence> coeffs;
    for (int i = 0; i < order; ++i) {
      std::vector<double> t(K + 1);
      for (double& v : t) v = rng.uniform(-1.0, 1.0);
      coeffs.push_back(CoefficientSequence::tabulated(std::move(t)));
    }
    std::vector<double> lead(K + 1);
    for (double& v : lead) v = rng.sign() * rng.uniform(2.0, 3.0);
    coeffs.push_back(CoefficientSequence::tabulated(std::move(lead)));
    std::vector<double> state(order);
    for (double& v : state) v = rng.uniform(-1.0, 1.0);
    const LtvSystem sys(std::move(coeffs), std::move(state), "S");
    const long k0 = rng.integer(0, K - order);
    const double target = rng.uniform(-5.0, 5.0);

    // outputs up to k0+order-1 do not depend on x(k0)
    Signal x = testutil::random_signal(rng, K);
    const Signal y_free = simulate(sys, x, K);
    double forced = sys.coeff(order).at(k0) * target;
    for (int i = 0; i < order; ++i) forced += sys.coeff(i).at(k0) * y_free[k0 + i];
    std::vector<double> samples = x.samples();
    samples[static_cast<std::size_t>(k0)] = forced;
    const Signal y = simulate(sys, Signal(std::move(samples)), K);
    CHECK(y[k0 + order] == doctest::Approx(target).epsilon(1e-9));
  }
}

TEST_CASE("CSV round-trips exactly and is byte-stable") {
  const fs::path dir = fs::temp_directory_path() / "ltv_csv_test";
  fs::create_directories(dir);
  const Signal s(std::vector<double>{0.1, -1.0 / 3.0, 1e-300, 2.5e17, 0.0,
                                     3.141592653589793, -0.0, 123456789.123456789});
  const fs::path p1 = dir / "a.csv";
  const fs::path p2 = dir / "b.csv";
  write_csv(p1, s);
  write_csv(p2, s);

  const Signal back = read_csv(p1);
  REQUIRE(back.size() == s.size());
  for (long k = 0; k <= s.horizon(); ++k) CHECK(back[k] == s[k]);

  std::ifstream f1(p1, std::ios::binary), f2(p2, std::ios::binary);
  std::stringstream b1, b2;
  b1 << f1.rdbuf();
  b2 << f2.rdbuf();
  CHECK(b1.str() == b2.str());
  CHECK(b1.str().rfind("k,value\n", 0) == 0);
  fs::remove_all(dir);
}

TEST_CASE("signals reject non-finite samples") {
  CHECK_THROWS_AS(Signal({1.0, std::nan("")}), NonFiniteResult);
  CHECK_THROWS_AS(Signal(std::vector<double>{}), InvalidArgument);
}
