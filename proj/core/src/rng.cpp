// SPDX-License-Identifier: MIT
// Copyright (c) 2026 relaylink contributors

#include "relaylink/rng.hpp"

#include <cmath>
#include <numbers>

namespace relaylink::rng {

namespace {

constexpr std::uint32_t kMult0 = 0xD2511F53u;
constexpr std::uint32_t kMult1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi,
                    std::uint32_t& lo) {
    const std::uint64_t prod = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(prod >> 32);
    lo = static_cast<std::uint32_t>(prod);
}

inline Counter round_once(const Counter& c, const Key& k) {
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kMult0, c[0], hi0, lo0);
    mulhilo(kMult1, c[2], hi1, lo1);
    return {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}

}  // namespace

Counter philox4x32_10(Counter ctr, Key key) {
    for (int r = 0; r < 10; ++r) {
        ctr = round_once(ctr, key);
        key[0] += kWeyl0;
        key[1] += kWeyl1;
    }
    return ctr;
}

TrialStream::TrialStream(std::uint64_t seed, std::uint64_t trial,
                         std::uint32_t attempt)
    : key_{static_cast<std::uint32_t>(seed),
           static_cast<std::uint32_t>(seed >> 32)},
      trial_lo_(static_cast<std::uint32_t>(trial)),
      trial_hi_(static_cast<std::uint32_t>(trial >> 32)),
      attempt_(attempt) {}

std::pair<double, double> TrialStream::normal_pair() {
    const Counter out =
        philox4x32_10({trial_lo_, trial_hi_, block_++, attempt_}, key_);
    const std::uint64_t a =
        (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
    const std::uint64_t b =
        (static_cast<std::uint64_t>(out[2]) << 32) | out[3];
    // 53-bit uniforms; the half-ulp offset keeps u1 strictly inside (0,1)
    const double u1 =
        (static_cast<double>(a >> 11) + 0.5) * 0x1.0p-53;
    const double u2 = static_cast<double>(b >> 11) * 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double th = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(th), r * std::sin(th)};
}

}  // namespace relaylink::rng
