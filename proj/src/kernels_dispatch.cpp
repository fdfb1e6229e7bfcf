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

#include <cstdlib>
#include <string_view>

#include "stancemix/kernels.hpp"

namespace stancemix::kernels {

namespace {

struct Table {
    float (*dot)(const float*, const float*, std::size_t);
    void (*axpy)(float, const float*, float*, std::size_t);
    void (*scale)(float*, float, std::size_t);
    std::uint64_t (*hamming)(const std::uint64_t*, const std::uint64_t*, std::size_t);
    std::uint64_t (*popcount)(const std::uint64_t*, std::size_t);
    std::string_view name;
};

constexpr Table kScalar{scalar::dot, scalar::axpy, scalar::scale,
                        scalar::hamming, scalar::popcount, "scalar"};

#if defined(STANCEMIX_HAVE_AVX2_TU)
constexpr Table kAvx2{avx2::dot, avx2::axpy, avx2::scale,
                      avx2::hamming, avx2::popcount, "avx2"};

bool cpu_has_avx2() {
#if defined(__GNUC__) || defined(__clang__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}
#endif

const Table* select_default() {
#if defined(STANCEMIX_HAVE_AVX2_TU)
    const char* env = std::getenv("STANCEMIX_KERNELS");
    if (env != nullptr && std::string_view(env) == "scalar") return &kScalar;
    if (cpu_has_avx2()) return &kAvx2;
#endif
    return &kScalar;
}

const Table* g_active = select_default();

}  // namespace

float dot(const float* a, const float* b, std::size_t n) { return g_active->dot(a, b, n); }
void axpy(float alpha, const float* x, float* y, std::size_t n) { g_active->axpy(alpha, x, y, n); }
void scale(float* x, float alpha, std::size_t n) { g_active->scale(x, alpha, n); }
std::uint64_t hamming(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords) {
    return g_active->hamming(a, b, nwords);
}
std::uint64_t popcount(const std::uint64_t* a, std::size_t nwords) {
    return g_active->popcount(a, nwords);
}

std::string_view backend() { return g_active->name; }

bool set_backend(std::string_view name) {
    if (name == "scalar") {
        g_active = &kScalar;
        return true;
    }
#if defined(STANCEMIX_HAVE_AVX2_TU)
    if (name == "avx2" && cpu_has_avx2()) {
        g_active = &kAvx2;
        return true;
    }
#endif
    return false;
}

}  // namespace stancemix::kernels
