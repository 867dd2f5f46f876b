#include "ormer/u256.hpp"

#include <algorithm>
#include <cassert>

#include "ormer/errors.hpp"

namespace ormer {

uint64_t Word256::get_bits(unsigned lo, unsigned width) const {
    assert(width >= 1 && width <= 64 && lo + width <= 256);
    unsigned li = lo / 64;
    unsigned sh = lo % 64;
    uint64_t v = limb[li] >> sh;
    if (sh != 0 && li + 1 < 4 && sh + width > 64) {
        v |= limb[li + 1] << (64 - sh);
    }
    if (width < 64) {
        v &= (uint64_t{1} << width) - 1;
    }
    return v;
}

void Word256::set_bits(unsigned lo, unsigned width, uint64_t value) {
    assert(width >= 1 && width <= 64 && lo + width <= 256);
    uint64_t mask = width == 64 ? ~uint64_t{0} : (uint64_t{1} << width) - 1;
    value &= mask;
    unsigned li = lo / 64;
    unsigned sh = lo % 64;
    limb[li] = (limb[li] & ~(mask << sh)) | (value << sh);
    if (sh != 0 && sh + width > 64) {
        unsigned spill = sh + width - 64;
        uint64_t hi_mask = (spill == 64) ? ~uint64_t{0} : (uint64_t{1} << spill) - 1;
        limb[li + 1] = (limb[li + 1] & ~hi_mask) | (value >> (64 - sh));
    }
}

Word256 Word256::operator<<(unsigned n) const {
    if (n == 0) return *this;
    if (n >= 256) return {};
    Word256 r{};
    unsigned ls = n / 64, bs = n % 64;
    for (int i = 3; i >= static_cast<int>(ls); --i) {
        uint64_t v = limb[i - ls] << bs;
        if (bs != 0 && i - static_cast<int>(ls) - 1 >= 0) {
            v |= limb[i - ls - 1] >> (64 - bs);
        }
        r.limb[i] = v;
    }
    return r;
}

Word256 Word256::operator>>(unsigned n) const {
    if (n == 0) return *this;
    if (n >= 256) return {};
    Word256 r{};
    unsigned ls = n / 64, bs = n % 64;
    for (unsigned i = 0; i + ls < 4; ++i) {
        uint64_t v = limb[i + ls] >> bs;
        if (bs != 0 && i + ls + 1 < 4) {
            v |= limb[i + ls + 1] << (64 - bs);
        }
        r.limb[i] = v;
    }
    return r;
}

Word256 Word256::operator|(const Word256& o) const {
    Word256 r;
    for (int i = 0; i < 4; ++i) r.limb[i] = limb[i] | o.limb[i];
    return r;
}

Word256 Word256::operator&(const Word256& o) const {
    Word256 r;
    for (int i = 0; i < 4; ++i) r.limb[i] = limb[i] & o.limb[i];
    return r;
}

int Word256::cmp(const Word256& o) const {
    for (int i = 3; i >= 0; --i) {
        if (limb[i] != o.limb[i]) return limb[i] < o.limb[i] ? -1 : 1;
    }
    return 0;
}

Word256 Word256::add(const Word256& a, const Word256& b, bool& carry) {
    Word256 r;
    uint128_t c = 0;
    for (int i = 0; i < 4; ++i) {
        uint128_t s = static_cast<uint128_t>(a.limb[i]) + b.limb[i] + c;
        r.limb[i] = static_cast<uint64_t>(s);
        c = s >> 64;
    }
    carry = c != 0;
    return r;
}

Word256 Word256::sub(const Word256& a, const Word256& b, bool& borrow) {
    Word256 r;
    uint128_t bw = 0;
    for (int i = 0; i < 4; ++i) {
        uint128_t d = static_cast<uint128_t>(a.limb[i]) - b.limb[i] - bw;
        r.limb[i] = static_cast<uint64_t>(d);
        bw = (d >> 64) ? 1 : 0;
    }
    borrow = bw != 0;
    return r;
}

std::string Word256::to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s(64, '0');
    for (int i = 0; i < 4; ++i) {
        uint64_t v = limb[3 - i];
        for (int j = 0; j < 16; ++j) {
            s[i * 16 + j] = digits[(v >> (60 - 4 * j)) & 0xf];
        }
    }
    return s;
}

Word256 Word256::from_hex(std::string_view hex) {
    if (hex.size() != 64) {
        raise(Errc::parse_error, "slot hex must be 64 characters");
    }
    Word256 w;
    for (size_t i = 0; i < 64; ++i) {
        char c = hex[i];
        uint64_t d;
        if (c >= '0' && c <= '9') d = c - '0';
        else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
        else raise(Errc::parse_error, "invalid hex digit in slot word");
        unsigned bit = 252 - 4 * static_cast<unsigned>(i);
        w.limb[bit / 64] |= d << (bit % 64);
    }
    return w;
}

std::array<uint64_t, 8> mul_full(const Word256& a, const Word256& b) {
    std::array<uint64_t, 8> r{};
    for (int i = 0; i < 4; ++i) {
        uint64_t carry = 0;
        for (int j = 0; j < 4; ++j) {
            uint128_t cur = static_cast<uint128_t>(a.limb[i]) * b.limb[j] +
                            r[i + j] + carry;
            r[i + j] = static_cast<uint64_t>(cur);
            carry = static_cast<uint64_t>(cur >> 64);
        }
        r[i + 4] = carry;
    }
    return r;
}

namespace {

// Knuth algorithm D with 32-bit digits: numerator up to 8 digits after
// normalization, divisor up to 4.
void divmnu32(uint32_t q[], uint32_t r[], const uint32_t u[], const uint32_t v[],
              int m, int n) {
    constexpr uint64_t kBase = uint64_t{1} << 32;

    if (n == 1) {
        uint64_t rem = 0;
        for (int j = m - 1; j >= 0; --j) {
            uint64_t cur = (rem << 32) | u[j];
            q[j] = static_cast<uint32_t>(cur / v[0]);
            rem = cur % v[0];
        }
        r[0] = static_cast<uint32_t>(rem);
        for (int i = 1; i < 4; ++i) r[i] = 0;
        return;
    }

    int s = __builtin_clz(v[n - 1]);  // normalize so v[n-1] has its top bit set
    uint32_t vn[4];
    for (int i = n - 1; i > 0; --i) {
        vn[i] = (s == 0) ? v[i]
                         : (v[i] << s) | (v[i - 1] >> (32 - s));
    }
    vn[0] = v[0] << s;

    uint32_t un[9];
    un[m] = (s == 0) ? 0 : u[m - 1] >> (32 - s);
    for (int i = m - 1; i > 0; --i) {
        un[i] = (s == 0) ? u[i]
                         : (u[i] << s) | (u[i - 1] >> (32 - s));
    }
    un[0] = u[0] << s;

    for (int j = m - n; j >= 0; --j) {
        uint64_t top = (static_cast<uint64_t>(un[j + n]) << 32) | un[j + n - 1];
        uint64_t qhat = top / vn[n - 1];
        uint64_t rhat = top % vn[n - 1];
        while (qhat >= kBase ||
               qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
            qhat -= 1;
            rhat += vn[n - 1];
            if (rhat >= kBase) break;
        }

        int64_t borrow = 0;
        for (int i = 0; i < n; ++i) {
            uint64_t p = qhat * vn[i];
            int64_t t = static_cast<int64_t>(un[i + j]) - borrow -
                        static_cast<int64_t>(p & 0xffffffffu);
            un[i + j] = static_cast<uint32_t>(t);
            borrow = static_cast<int64_t>(p >> 32) - (t >> 32);
        }
        int64_t t = static_cast<int64_t>(un[j + n]) - borrow;
        un[j + n] = static_cast<uint32_t>(t);

        q[j] = static_cast<uint32_t>(qhat);
        if (t < 0) {  // qhat was one too large; add back
            q[j] -= 1;
            uint64_t c = 0;
            for (int i = 0; i < n; ++i) {
                uint64_t sum = static_cast<uint64_t>(un[i + j]) + vn[i] + c;
                un[i + j] = static_cast<uint32_t>(sum);
                c = sum >> 32;
            }
            un[j + n] = static_cast<uint32_t>(un[j + n] + c);
        }
    }

    for (int i = 0; i < n; ++i) {
        r[i] = (s == 0) ? un[i]
                        : static_cast<uint32_t>(
                              (un[i] >> s) |
                              (static_cast<uint64_t>(un[i + 1]) << (32 - s)));
    }
    for (int i = n; i < 4; ++i) r[i] = 0;
}

}  // namespace

DivMod256 divmod(const Word256& num, uint128_t den) {
    if (den == 0) {
        raise(Errc::division_by_zero, "divmod by zero");
    }
    uint32_t u[8], v[4];
    for (int i = 0; i < 8; ++i) {
        u[i] = static_cast<uint32_t>(num.limb[i / 2] >> (32 * (i % 2)));
    }
    for (int i = 0; i < 4; ++i) {
        v[i] = static_cast<uint32_t>(den >> (32 * i));
    }
    int m = 8;
    while (m > 1 && u[m - 1] == 0) --m;
    int n = 4;
    while (n > 1 && v[n - 1] == 0) --n;

    uint32_t q[8] = {0}, r[4] = {0};
    if (m < n) {
        DivMod256 out;
        out.quotient = Word256{};
        out.remainder = num.low128();
        return out;
    }
    divmnu32(q, r, u, v, m, n);

    DivMod256 out;
    for (int i = 0; i < 8; ++i) {
        out.quotient.limb[i / 2] |= static_cast<uint64_t>(q[i]) << (32 * (i % 2));
    }
    out.remainder = 0;
    for (int i = 3; i >= 0; --i) {
        out.remainder = (out.remainder << 32) | r[i];
    }
    return out;
}

}  // namespace ormer
