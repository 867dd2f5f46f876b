// Generated by scripts/gen_tick_constants.py. Do not edit.
#pragma once

#include <array>
#include <cstdint>

namespace ormer::detail {

// 1.0001^(2^k) in unsigned Q128.128, little-endian 64-bit limbs.
inline constexpr std::array<std::array<uint64_t, 4>, 19> kPowPos = {{
    {0x295e9e1b089a0275ull, 0x00068db8bac710cbull, 0x0000000000000001ull, 0x0000000000000000ull},  // k = 0
    {0x6b30fb7581b74fb8ull, 0x000d1b9c68abe5f7ull, 0x0000000000000001ull, 0x0000000000000000ull},  // k = 1
    {0x30516e519450a146ull, 0x001a37e4a234cb08ull, 0x0000000000000001ull, 0x0000000000000000ull},  // k = 2
    {0xa25ab46019279f90ull, 0x00347278ab0e92adull, 0x0000000000000001ull, 0x0000000000000000ull},  // k = 3
    {0xa5d7fdc2ccf5998full, 0x0068efb00a525480ull, 0x0000000000000001ull, 0x0000000000000000ull},  // k = 4
    {0xdf9daaa568442ce5ull, 0x00d20a63b4173839ull, 0x0000000000000001ull, 0x0000000000000000ull},  // k = 5
    {0x9738df5e966396f0ull, 0x01a4c11c742dd772ull, 0x0000000000000001ull, 0x0000000000000000ull},  // k = 6
    {0xdc0d6de43d0881d3ull, 0x034c35c31f64cfa6ull, 0x0000000000000001ull, 0x0000000000000000ull},  // k = 7
    {0x81bed5a32b0fce74ull, 0x06a34b78c8aaffbfull, 0x0000000000000001ull, 0x0000000000000000ull},  // k = 8
    {0x9ae771b16294a7ebull, 0x0d72a6a46ccd8bceull, 0x0000000000000001ull, 0x0000000000000000ull},  // k = 9
    {0xdc757faa33154df7ull, 0x1b9a258e63928596ull, 0x0000000000000001ull, 0x0000000000000000ull},  // k = 10
    {0x3cd17be5c343d452ull, 0x3a2e2bda04f8379full, 0x0000000000000001ull, 0x0000000000000000ull},  // k = 11
    {0x77f2ab42e87cf512ull, 0x81954be69e0da8feull, 0x0000000000000001ull, 0x0000000000000000ull},  // k = 12
    {0x8025287709061f74ull, 0x44c2655d185a0290ull, 0x0000000000000002ull, 0x0000000000000000ull},  // k = 13
    {0x616779e807e264b2ull, 0x25816eeb9f935b1cull, 0x0000000000000005ull, 0x0000000000000000ull},  // k = 14
    {0xd31ae06501b81fa8ull, 0x7c8d00b551684ff4ull, 0x000000000000001aull, 0x0000000000000000ull},  // k = 15
    {0x590c66cde3d18ca0ull, 0x893d0b2df7c97884ull, 0x00000000000002bdull, 0x0000000000000000ull},  // k = 16
    {0x2152dccf4128f29eull, 0xe1e19e448cf8b95dull, 0x0000000000078278ull, 0x0000000000000000ull},  // k = 17
    {0x3a21b785e9f303f8ull, 0x57501416feade319ull, 0x00000038651b58d4ull, 0x0000000000000000ull},  // k = 18
}};

// 1.0001^(-2^k) in unsigned Q128.128.
inline constexpr std::array<std::array<uint64_t, 4>, 19> kPowNeg = {{
    {0x59a46990580e213aull, 0xfff97272373d4132ull, 0x0000000000000000ull, 0x0000000000000000ull},  // k = 0
    {0xef12357cf3c7fdccull, 0xfff2e50f5f656932ull, 0x0000000000000000ull, 0x0000000000000000ull},  // k = 1
    {0x1c3624eaa0941cd0ull, 0xffe5caca7e10e4e6ull, 0x0000000000000000ull, 0x0000000000000000ull},  // k = 2
    {0xc9db58835c926644ull, 0xffcb9843d60f6159ull, 0x0000000000000000ull, 0x0000000000000000ull},  // k = 3
    {0x472e6896dfb254c0ull, 0xff973b41fa98c081ull, 0x0000000000000000ull, 0x0000000000000000ull},  // k = 4
    {0x43ec78b326b52861ull, 0xff2ea16466c96a38ull, 0x0000000000000000ull, 0x0000000000000000ull},  // k = 5
    {0x11c461f1969c3053ull, 0xfe5dee046a99a2a8ull, 0x0000000000000000ull, 0x0000000000000000ull},  // k = 6
    {0xdcffc83b479aa3a4ull, 0xfcbe86c7900a88aeull, 0x0000000000000000ull, 0x0000000000000000ull},  // k = 7
    {0x6f2b074cf7815e54ull, 0xf987a7253ac41317ull, 0x0000000000000000ull, 0x0000000000000000ull},  // k = 8
    {0x940c7a398e4b70f3ull, 0xf3392b0822b70005ull, 0x0000000000000000ull, 0x0000000000000000ull},  // k = 9
    {0x43b29c7fa6e889d9ull, 0xe7159475a2c29b74ull, 0x0000000000000000ull, 0x0000000000000000ull},  // k = 10
    {0x845ad8f792aa5825ull, 0xd097f3bdfd2022b8ull, 0x0000000000000000ull, 0x0000000000000000ull},  // k = 11
    {0x8a65dc1f90e061e5ull, 0xa9f746462d870fdfull, 0x0000000000000000ull, 0x0000000000000000ull},  // k = 12
    {0x90bb3df62baf32f7ull, 0x70d869a156d2a1b8ull, 0x0000000000000000ull, 0x0000000000000000ull},  // k = 13
    {0x81231505542fcfa6ull, 0x31be135f97d08fd9ull, 0x0000000000000000ull, 0x0000000000000000ull},  // k = 14
    {0xc677de54f3e99bc9ull, 0x09aa508b5b7a84e1ull, 0x0000000000000000ull, 0x0000000000000000ull},  // k = 15
    {0x6699c329225ee604ull, 0x005d6af8dedb8119ull, 0x0000000000000000ull, 0x0000000000000000ull},  // k = 16
    {0x1ea926041bedfe98ull, 0x00002216e584f5faull, 0x0000000000000000ull, 0x0000000000000000ull},  // k = 17
    {0x91f7dc42444e8fa2ull, 0x00000000048a1703ull, 0x0000000000000000ull, 0x0000000000000000ull},  // k = 18
}};

// 1.0001^(1/2) in unsigned Q128.128; the midpoint step for rounding.
inline constexpr std::array<uint64_t, 4> kSqrtStep =
    {0xe55ad00f5c38565cull, 0x000346d6ff11672aull, 0x0000000000000001ull, 0x0000000000000000ull};

}  // namespace ormer::detail
