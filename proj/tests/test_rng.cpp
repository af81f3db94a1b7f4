#include <doctest.h>

#include <cmath>

#include "nwsp/rng.hpp"

using namespace nwsp;

TEST_CASE("identical seeds give identical streams") {
    Rng a(42), b(42);
    for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("different seeds diverge immediately") {
    Rng a(1), b(2);
    CHECK(a.next_u64() != b.next_u64());
}

TEST_CASE("unit draws lie in (0, 1]") {
    Rng rng(7);
    for (int i = 0; i < 10000; ++i) {
        double u = rng.next_unit();
        CHECK(u > 0.0);
        CHECK(u <= 1.0);
    }
}

TEST_CASE("geometric with p = 1 is always 1") {
    Rng rng(3);
    GeometricParam p{1, 1};
    for (int i = 0; i < 100; ++i) CHECK(sample_geometric(rng, p, 1000) == 1);
}

TEST_CASE("geometric mean matches 1/p") {
    Rng rng(11);
    GeometricParam p{1, 2};
    const int samples = 100000;
    double sum = 0;
    for (int i = 0; i < samples; ++i)
        sum += static_cast<double>(static_cast<long long>(sample_geometric(rng, p, 1 << 20)));
    double mean = sum / samples;
    // Var = (1-p)/p^2 = 2; 3 sigma of the mean ~ 0.0134 < 0.02
    CHECK(std::abs(mean - 2.0) < 2e-2);
}

TEST_CASE("geometric pmf at k = 3 for p = 1/10") {
    Rng rng(13);
    GeometricParam p{1, 10};
    const int samples = 100000;
    int hits = 0;
    for (int i = 0; i < samples; ++i)
        if (sample_geometric(rng, p, 1 << 20) == 3) ++hits;
    double freq = static_cast<double>(hits) / samples;
    double expect = 0.1 * 0.9 * 0.9;  // 0.081
    double sigma = std::sqrt(expect * (1 - expect) / samples);
    CHECK(std::abs(freq - expect) < 3 * sigma);
}

TEST_CASE("clamp holds always") {
    Rng rng(17);
    GeometricParam p{1, 1000000};
    for (int i = 0; i < 2000; ++i) CHECK(sample_geometric(rng, p, 37) <= 37);
}

TEST_CASE("ball radius parameter folds log2 of the global size") {
    GeometricParam p = ball_radius_param(1024, 800);
    // 80 * log2(1024) / 800 = 1 exactly
    CHECK(p.p() == doctest::Approx(1.0));
    GeometricParam q = ball_radius_param(1024, 80000);
    CHECK(q.p() == doctest::Approx(0.01));
}
