#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "ormer/errors.hpp"
#include "ormer/fixed_point.hpp"
#include "test_util.hpp"

using namespace ormer;
using test::fq;
using test::fqi;
using test::i128;

namespace {

Errc thrown_code(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an ormer::Error");
    return Errc::overflow;
}

}  // namespace

TEST_CASE("multiplication identities") {
    CHECK(fp_mul(fqi(1), fqi(1)) == fqi(1));
    CHECK(fp_mul(fq("2.5"), fqi(4)) == fqi(10));
    CHECK(fp_mul(fqi(0), fq("123456.789")) == fqi(0));
    CHECK(fp_mul(fq("-2.5"), fqi(4)) == fqi(-10));
}

TEST_CASE("division identities") {
    CHECK(fp_div(fqi(10), fqi(2)) == fqi(5));
    CHECK(fp_div(fq("123.25"), fq("123.25")) == fqi(1));
    CHECK(fp_div(fq("-7.5"), fq("2.5")) == fqi(-3));
    CHECK(thrown_code([] { fp_div(fqi(1), fqi(0)); }) == Errc::division_by_zero);
}

TEST_CASE("floor semantics on negative results") {
    // -1/3 floors away from zero by one raw unit relative to 1/3.
    FixedQ64 third = fp_div(fqi(1), fqi(3));
    FixedQ64 neg_third = fp_div(fqi(-1), fqi(3));
    CHECK(neg_third.raw == -third.raw - 1);

    FixedQ64 prod = fp_mul(fq("-0.5"), third);
    FixedQ64 pos = fp_mul(fq("0.5"), third);
    CHECK(prod.raw == -pos.raw - 1);
}

struct RawVector {
    const char* a;
    const char* b;
    const char* mul;  // nullptr = overflow expected
    const char* div;
};

// Frozen against an arbitrary-precision oracle over the raw representation.
static const RawVector kVectors[] = {
    {"0x9269e0d37f2a74de452e6b438", "-0x2d74d0cf3a3802f595c5bb0",
     "-0x19ff6beb98c4bde8bafb9146879bdee2", "-0x33891bcfa328e5f40aa"},
    {"0x71818e811892f902bd23f0824", "-0x3666af2c9098a337e18b10b",
     "-0x181edb59556a1685fb84378699cc31bb", "-0x21622a6e33a54288bb1"},
    {"-0xb94f2ab6490fc98a5e9ff5ca6", "-0x3029cf00d62f2566ac0b70f",
     "0x22dd1b87a3785cb4f8a97aa162e7f136", "0x3d8f6f91d2a08a8f27c"},
    {"-0xc9a7325eb6a19f50a6c42fb31", "-0x3413284c7672e6f06142534",
     "0x29050d6254efb69854b4dd4d1d6c765f", "0x3df53c0813838ea816c"},
    {"0x22217beaddbc496cb8e81973e", "0xef8aa3922766581e27a1c0",
     "0x1fefbe8bdfde46251c886b1a7d62574", "0x2479d1e14ca6bfeadb0"},
    {"-0x45168456b2f1257d07092faa8", "0x1f55720301850c5a38fd547",
     "-0x874c945470fc4db91205ab53110a869", "-0x2347496a6418a7baf28"},
    {"0x84392b09c47055dff4948fe6b4f832", "-0x89449",
     "-0x46e60197d0edca4ad9b", nullptr},
    {"-0x5c8175f2b692b425dda6b0a8c17289", "-0x22933",
     "0xc7e61593cbbd465faf", nullptr},
    {"-0x13cf9734c5e0eceaa8c51d27064cb37",
     "0x1bebf148e7e96d54006d7b3429ed479d", nullptr, "-0xb5a2f1288755ead"},
    {"-0x2e1c8b119f55f2cf6703b8bc1f12150f",
     "0x1cb14d8cbb66ecb350c1eb4401b03670", nullptr, "-0x19b6a1330491fcfde"},
    {"-0x34c3cab3", "0x2246595dfaac9912d17bf6b19", "-0x71080e0a335a512f",
     "-0x1"},
    {"0xab38105", "-0x792cadf506e3e43c2e9412996", "-0x510b61b16209684f",
     "-0x1"},
    {"-0x298378df87dc6f73", "-0x4e1ad87ec4cfbb8b", "0xcaa6949deb56742",
     "0x881113eb62e75b97"},
    {"0xcd2ee163858c2e6e", "-0xd23ee3c934f4f041", "-0xa882dcd00fc363a0",
     "-0xf9d5f2ec067b3cb2"},
    {"0xfd560f64be3dd7ffa98b485de", "-0x2ac838546a1aa",
     "-0x2a564180ea85d7dfb5b801", "-0x5ebea59e3e39e50eea9d3c0be884d"},
    {"0xfe9e4b2dd1525e9d3d1f7fbe4", "0x10c2ca8778c54",
     "0x10aba2177ab7f55ecf3e66", "0xf30f2e71114eda858de46159bd3d0"},
};

TEST_CASE("frozen raw vectors") {
    for (const auto& v : kVectors) {
        FixedQ64 a = FixedQ64::from_raw(i128(v.a));
        FixedQ64 b = FixedQ64::from_raw(i128(v.b));
        if (v.mul != nullptr) {
            CHECK(fp_mul(a, b).raw == i128(v.mul));
        } else {
            CHECK(thrown_code([&] { fp_mul(a, b); }) == Errc::overflow);
        }
        if (v.div != nullptr) {
            CHECK(fp_div(a, b).raw == i128(v.div));
        } else {
            CHECK(thrown_code([&] { fp_div(a, b); }) == Errc::overflow);
        }
    }
}

TEST_CASE("overflow paths") {
    FixedQ64 big = FixedQ64::from_raw(i128("0x70000000000000000000000000000000"));
    CHECK(thrown_code([&] { fp_add(big, big); }) == Errc::overflow);
    CHECK(thrown_code([&] { fp_mul(big, fqi(4)); }) == Errc::overflow);
    CHECK(thrown_code([&] { fp_div(big, fq("0.125")); }) == Errc::overflow);
}

TEST_CASE("mul/div are monotone for positive operands") {
    std::mt19937_64 gen(2024);
    for (int i = 0; i < 500; ++i) {
        int64_t a = static_cast<int64_t>(gen() % 1000000) + 1;
        int64_t b = a + 1 + static_cast<int64_t>(gen() % 1000);
        int64_t c = static_cast<int64_t>(gen() % 100000) + 1;
        CHECK(fp_mul(fqi(a), fqi(c)) < fp_mul(fqi(b), fqi(c)));
        CHECK(fp_div(fqi(a), fqi(c)) < fp_div(fqi(b), fqi(c)));
        CHECK(fp_div(fqi(c), fqi(b)) <= fp_div(fqi(c), fqi(a)));
    }
}

TEST_CASE("division and multiplication invert within tolerance") {
    std::mt19937_64 gen(77);
    for (int i = 0; i < 2000; ++i) {
        FixedQ64 a = FixedQ64::from_raw(static_cast<int128_t>(gen()) << (gen() % 30));
        FixedQ64 b = FixedQ64::from_raw(static_cast<int128_t>(gen() | 1));
        FixedQ64 q = fp_div(a, b);
        FixedQ64 back = fp_mul(q, b);
        double err = std::abs(fp_sub(back, a).to_double());
        double scale = std::max(1.0, std::abs(a.to_double()));
        CHECK(err / scale < 1e-15);
    }
}

TEST_CASE("decimal parse and format") {
    CHECK(fq("100").raw == fqi(100).raw);
    CHECK(fq("1.5").raw == (static_cast<int128_t>(3) << 63));
    CHECK(fq("-2.25").raw == -(static_cast<int128_t>(9) << 62));
    CHECK(fq("0.5").to_decimal() == "0.5");
    CHECK(fqi(42).to_decimal() == "42");
    CHECK(fq("-3.125").to_decimal() == "-3.125");

    CHECK(thrown_code([] { fq("abc"); }) == Errc::parse_error);
    CHECK(thrown_code([] { fq(""); }) == Errc::parse_error);
    CHECK(thrown_code([] { fq("1.2.3"); }) == Errc::parse_error);
    CHECK(thrown_code([] { fq("9223372036854775808"); }) == Errc::overflow);
}

TEST_CASE("decimal round-trip is exact for arbitrary raws") {
    std::mt19937_64 gen(31337);
    for (int i = 0; i < 5000; ++i) {
        int128_t raw = static_cast<int128_t>(gen());
        raw = (raw << 32) ^ static_cast<int64_t>(gen());
        FixedQ64 v = FixedQ64::from_raw(raw);
        CHECK(FixedQ64::parse_decimal(v.to_decimal()).raw == v.raw);
    }
}

TEST_CASE("from_ratio") {
    CHECK(FixedQ64::from_ratio(1, 2) == fq("0.5"));
    CHECK(FixedQ64::from_ratio(-3, 4) == fq("-0.75"));
    CHECK(FixedQ64::from_ratio(10, 5) == fqi(2));
}
