#include <doctest.h>

#include <cmath>
#include <random>

#include "ormer/baselines.hpp"
#include "ormer/errors.hpp"
#include "test_util.hpp"

using namespace ormer;
using test::fq;
using test::fqi;

TEST_CASE("twap of a constant feed is the constant") {
    TwapAccumulator twap;
    for (int64_t t = 0; t <= 30; t += 5) twap.update(t, fqi(100));
    CHECK(twap.query(30) == fqi(100));
    CHECK(twap.query(10) == fqi(100));
}

TEST_CASE("twap time-weights a step") {
    TwapAccumulator twap;
    twap.update(0, fqi(100));
    twap.update(10, fqi(200));
    twap.update(20, fqi(200));
    CHECK(twap.query(20) == fqi(150));
}

TEST_CASE("twap dilutes a one-second spike") {
    TwapAccumulator twap;
    for (int64_t t = 0; t <= 25; ++t) {
        twap.update(t, t == 12 ? fqi(1000) : fqi(100));
    }
    // (24*100 + 1*1000) / 25
    CHECK(twap.query(25) == fqi(136));
}

TEST_CASE("twap requires history behind the window start") {
    TwapAccumulator twap;
    twap.update(100, fqi(50));
    twap.update(110, fqi(50));
    CHECK_THROWS_AS(twap.query(60), Error);
    CHECK(twap.query_clamped(60) == fqi(50));
}

TEST_CASE("twap rejects non-monotonic updates") {
    TwapAccumulator twap;
    twap.update(10, fqi(1));
    CHECK_THROWS_AS(twap.update(10, fqi(1)), Error);
    CHECK_THROWS_AS(twap.update(9, fqi(1)), Error);
}

TEST_CASE("twap is linear in price scaling") {
    std::mt19937_64 gen(55);
    TwapAccumulator a, b;
    int64_t t = 0;
    for (int i = 0; i < 200; ++i) {
        t += 1 + static_cast<int64_t>(gen() % 10);
        int64_t p = 50 + static_cast<int64_t>(gen() % 100);
        a.update(t, fqi(p));
        b.update(t, fqi(3 * p));
    }
    FixedQ64 qa = a.query(300);
    FixedQ64 qb = b.query(300);
    CHECK(std::abs(qb.to_double() - 3.0 * qa.to_double()) < 1e-9);
}

TEST_CASE("twap ring capacity bounds the checkpoint history") {
    TwapAccumulator twap(16);
    for (int64_t t = 0; t < 100; ++t) twap.update(t, fqi(5));
    CHECK(twap.checkpoint_count() == 16);
    CHECK_THROWS_AS(twap.query(80), Error);  // history evicted
    CHECK(twap.query(10) == fqi(5));
}

TEST_CASE("ema basics") {
    Ema ema(fq("0.5"));
    CHECK(ema.update(fqi(100)) == fqi(100));  // seeded with the first value
    CHECK(ema.update(fqi(200)) == fqi(150));

    Ema pass_through(fqi(1));
    pass_through.update(fqi(3));
    CHECK(pass_through.update(fqi(77)) == fqi(77));

    Ema constant(fq("0.125"));
    for (int i = 0; i < 50; ++i) CHECK(constant.update(fqi(42)) == fqi(42));
}

TEST_CASE("ema alpha from window and monotone step response") {
    Ema ema = Ema::from_window(9);
    CHECK(ema.alpha().to_double() == doctest::Approx(0.2).epsilon(1e-12));
    ema.update(fqi(100));
    double prev = 100.0;
    for (int i = 0; i < 100; ++i) {
        double v = ema.update(fqi(200)).to_double();
        CHECK(v > prev - 1e-12);
        CHECK(v <= 200.0);
        prev = v;
    }
    CHECK(prev > 199.9);
}

TEST_CASE("ema rejects bad alpha") {
    CHECK_THROWS_AS(Ema(fqi(0)), Error);
    CHECK_THROWS_AS(Ema(fq("1.5")), Error);
}

TEST_CASE("true median basics") {
    CHECK(true_median({fqi(1), fqi(2), fqi(3), fqi(4), fqi(5)}) == fqi(3));
    CHECK(true_median({fqi(1), fqi(2), fqi(3), fqi(4)}) == fq("2.5"));
    CHECK(true_median({fqi(100), fqi(100), fqi(1000), fqi(100), fqi(100)}) ==
          fqi(100));
    CHECK_THROWS_AS(true_median({}), Error);
}

TEST_CASE("median buffer slides") {
    MedianBuffer buf(3);
    CHECK_THROWS_AS(buf.median(), Error);
    buf.push(fqi(10));
    CHECK(buf.median() == fqi(10));
    buf.push(fqi(20));
    buf.push(fqi(30));
    CHECK(buf.median() == fqi(20));
    buf.push(fqi(90));  // evicts 10
    CHECK(buf.median() == fqi(30));
}

TEST_CASE("median survives extreme replacements below the breakdown point") {
    std::mt19937_64 gen(2);
    for (int trial = 0; trial < 100; ++trial) {
        size_t window = 5 + gen() % 20;
        std::vector<FixedQ64> values;
        for (size_t i = 0; i < window; ++i) {
            values.push_back(fqi(100 + static_cast<int64_t>(i)));
        }
        FixedQ64 clean = true_median(values);

        size_t k = (window - 1) / 2;
        // replace k values that are not the median order statistic
        std::vector<FixedQ64> attacked = values;
        size_t replaced = 0;
        for (size_t i = 0; i < window && replaced < k; ++i) {
            if (values[i] == clean) continue;
            bool low_side = values[i] < clean;
            attacked[i] = low_side ? fqi(1) : fqi(1000000);
            ++replaced;
        }
        FixedQ64 dirty = true_median(attacked);
        CHECK(dirty == clean);
    }
}
