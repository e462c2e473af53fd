// SPDX-License-Identifier: MIT
// Copyright (c) 2026 relaylink contributors
//
// Counter-based random numbers. Every draw is a pure function of
// (seed, trial, attempt, block), which makes simulation results independent
// of worker count and lets any trial be reproduced in isolation.

#ifndef RELAYLINK_RNG_HPP
#define RELAYLINK_RNG_HPP

#include <array>
#include <cstdint>
#include <utility>

namespace relaylink::rng {

using Counter = std::array<std::uint32_t, 4>;
using Key = std::array<std::uint32_t, 2>;

// One 10-round Philox-4x32 block: 128 bits of counter -> 128 random bits.
Counter philox4x32_10(Counter ctr, Key key);

// Standard normal pairs for one simulation trial. Counter layout:
// words 0-1 = trial index, word 2 = block index, word 3 = attempt
// (bumped when a degenerate draw forces a redraw); key = seed.
class TrialStream {
public:
    TrialStream(std::uint64_t seed, std::uint64_t trial,
                std::uint32_t attempt = 0);

    // One Box-Muller pair from one Philox block.
    std::pair<double, double> normal_pair();

    std::uint32_t blocks_used() const { return block_; }

private:
    Key key_;
    std::uint32_t trial_lo_, trial_hi_, attempt_;
    std::uint32_t block_ = 0;
};

}  // namespace relaylink::rng

#endif  // RELAYLINK_RNG_HPP
