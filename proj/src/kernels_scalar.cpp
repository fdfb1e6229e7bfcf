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

#include <bit>

#include "stancemix/kernels.hpp"

// Reference kernels. Plain sequential loops; these define the semantics the
// SIMD variants are tested against.

namespace stancemix::kernels::scalar {

float dot(const float* a, const float* b, std::size_t n) {
    float acc = 0.0f;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

void axpy(float alpha, const float* x, float* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale(float* x, float alpha, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

std::uint64_t hamming(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords) {
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < nwords; ++i) {
        count += static_cast<std::uint64_t>(std::popcount(a[i] ^ b[i]));
    }
    return count;
}

std::uint64_t popcount(const std::uint64_t* a, std::size_t nwords) {
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < nwords; ++i) {
        count += static_cast<std::uint64_t>(std::popcount(a[i]));
    }
    return count;
}

}  // namespace stancemix::kernels::scalar
