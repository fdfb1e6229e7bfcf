// Copyright 2026 The stancemix Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <vector>

namespace stancemix {

// SplitMix64. Hand-rolled instead of <random> because results must be
// bit-identical across standard libraries and platforms; the standard
// distributions are implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound). bound must be > 0. Rejection sampling keeps the
    // draw unbiased.
    std::uint64_t next_below(std::uint64_t bound) {
        std::uint64_t threshold = (0ULL - bound) % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    double next_unit() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // Stable derivation of independent streams (per fold, per tree, per
    // one-vs-rest submodel) so concurrent schedules cannot change results.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
        Rng r(seed ^ (0x6a09e667f3bcc909ULL + stream * 0x9e3779b97f4a7c15ULL));
        r.next();
        return r.next();
    }

private:
    std::uint64_t state_;
};

}  // namespace stancemix
