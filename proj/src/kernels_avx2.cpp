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

// Compiled with -mavx2 -mfma -mpopcnt. Only ever called after the dispatcher
// has confirmed AVX2 support at runtime.

#include <immintrin.h>

#include <bit>

#include "stancemix/kernels.hpp"

namespace stancemix::kernels::avx2 {

float dot(const float* a, const float* b, std::size_t n) {
    __m256 acc0 = _mm256_setzero_ps();
    __m256 acc1 = _mm256_setzero_ps();
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        acc0 = _mm256_fmadd_ps(_mm256_loadu_ps(a + i), _mm256_loadu_ps(b + i), acc0);
        acc1 = _mm256_fmadd_ps(_mm256_loadu_ps(a + i + 8), _mm256_loadu_ps(b + i + 8), acc1);
    }
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_ps(_mm256_loadu_ps(a + i), _mm256_loadu_ps(b + i), acc0);
    }
    __m256 acc = _mm256_add_ps(acc0, acc1);
    __m128 lo = _mm256_castps256_ps128(acc);
    __m128 hi = _mm256_extractf128_ps(acc, 1);
    __m128 sum4 = _mm_add_ps(lo, hi);
    __m128 sum2 = _mm_add_ps(sum4, _mm_movehl_ps(sum4, sum4));
    __m128 sum1 = _mm_add_ss(sum2, _mm_shuffle_ps(sum2, sum2, 0x55));
    float acc_s = _mm_cvtss_f32(sum1);
    for (; i < n; ++i) acc_s += a[i] * b[i];
    return acc_s;
}

void axpy(float alpha, const float* x, float* y, std::size_t n) {
    __m256 va = _mm256_set1_ps(alpha);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 vy = _mm256_loadu_ps(y + i);
        vy = _mm256_fmadd_ps(va, _mm256_loadu_ps(x + i), vy);
        _mm256_storeu_ps(y + i, vy);
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

void scale(float* x, float alpha, std::size_t n) {
    __m256 va = _mm256_set1_ps(alpha);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        _mm256_storeu_ps(x + i, _mm256_mul_ps(_mm256_loadu_ps(x + i), va));
    }
    for (; i < n; ++i) x[i] *= alpha;
}

namespace {

inline std::uint64_t popcount256(__m256i v) {
    alignas(32) std::uint64_t w[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(w), v);
    return static_cast<std::uint64_t>(std::popcount(w[0])) + std::popcount(w[1]) +
           std::popcount(w[2]) + std::popcount(w[3]);
}

}  // namespace

std::uint64_t hamming(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords) {
    std::uint64_t count = 0;
    std::size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        count += popcount256(_mm256_xor_si256(va, vb));
    }
    for (; i < nwords; ++i) {
        count += static_cast<std::uint64_t>(std::popcount(a[i] ^ b[i]));
    }
    return count;
}

std::uint64_t popcount(const std::uint64_t* a, std::size_t nwords) {
    std::uint64_t count = 0;
    std::size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        count += popcount256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i)));
    }
    for (; i < nwords; ++i) {
        count += static_cast<std::uint64_t>(std::popcount(a[i]));
    }
    return count;
}

}  // namespace stancemix::kernels::avx2
