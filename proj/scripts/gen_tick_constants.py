#!/usr/bin/env python3
"""Generate fixed-point constants for base-1.0001 tick conversion.

Emits include/ormer/tick_constants.hpp with Q128.128 encodings of
1.0001^(2^k) and 1.0001^(-2^k) for k in [0, 18], plus sqrt(1.0001),
as little-endian 64-bit limb arrays. Run from the repository root.
"""

import os
from decimal import Decimal, getcontext, ROUND_HALF_EVEN

getcontext().prec = 120

BASE = Decimal("1.0001")
SCALE = 1 << 128
K_MAX = 18
MASK64 = (1 << 64) - 1


def to_limbs(x: Decimal) -> list[int]:
    n = int((x * SCALE).to_integral_value(rounding=ROUND_HALF_EVEN))
    assert 0 < n < (1 << 256), f"value out of 256-bit range: {x}"
    return [(n >> (64 * i)) & MASK64 for i in range(4)]


def fmt_limbs(limbs: list[int]) -> str:
    return "{" + ", ".join(f"0x{v:016x}ull" for v in limbs) + "}"


def main() -> None:
    pos = [BASE ** (1 << k) for k in range(K_MAX + 1)]
    neg = [Decimal(1) / p for p in pos]
    sqrt_step = BASE.sqrt()

    out = os.path.join(os.path.dirname(__file__), "..", "include", "ormer",
                       "tick_constants.hpp")
    os.makedirs(os.path.dirname(out), exist_ok=True)
    with open(out, "w") as f:
        f.write("// Generated by scripts/gen_tick_constants.py. Do not edit.\n")
        f.write("#pragma once\n\n#include <array>\n#include <cstdint>\n\n")
        f.write("namespace ormer::detail {\n\n")
        f.write("// 1.0001^(2^k) in unsigned Q128.128, little-endian 64-bit limbs.\n")
        f.write("inline constexpr std::array<std::array<uint64_t, 4>, %d> kPowPos = {{\n"
                % (K_MAX + 1))
        for k, p in enumerate(pos):
            f.write("    %s,  // k = %d\n" % (fmt_limbs(to_limbs(p)), k))
        f.write("}};\n\n")
        f.write("// 1.0001^(-2^k) in unsigned Q128.128.\n")
        f.write("inline constexpr std::array<std::array<uint64_t, 4>, %d> kPowNeg = {{\n"
                % (K_MAX + 1))
        for k, p in enumerate(neg):
            f.write("    %s,  // k = %d\n" % (fmt_limbs(to_limbs(p)), k))
        f.write("}};\n\n")
        f.write("// 1.0001^(1/2) in unsigned Q128.128; the midpoint step for rounding.\n")
        f.write("inline constexpr std::array<uint64_t, 4> kSqrtStep =\n    %s;\n\n"
                % fmt_limbs(to_limbs(sqrt_step)))
        f.write("}  // namespace ormer::detail\n")
    print(f"wrote {os.path.normpath(out)}")


if __name__ == "__main__":
    main()
