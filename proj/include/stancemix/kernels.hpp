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

#include <cstddef>
#include <cstdint>
#include <string_view>

// Arithmetic inner loops of the classifiers. Every kernel has a scalar
// reference implementation and, on x86-64, an AVX2 variant; the active
// backend is picked once at startup from cpuid (override with the
// STANCEMIX_KERNELS environment variable or set_backend()). The AVX2 float
// kernels may round differently from the scalar ones (reassociated sums);
// integer kernels match bit for bit.

namespace stancemix::kernels {

namespace scalar {
float dot(const float* a, const float* b, std::size_t n);
void axpy(float alpha, const float* x, float* y, std::size_t n);
void scale(float* x, float alpha, std::size_t n);
std::uint64_t hamming(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords);
std::uint64_t popcount(const std::uint64_t* a, std::size_t nwords);
}  // namespace scalar

#if defined(STANCEMIX_HAVE_AVX2_TU)
namespace avx2 {
float dot(const float* a, const float* b, std::size_t n);
void axpy(float alpha, const float* x, float* y, std::size_t n);
void scale(float* x, float alpha, std::size_t n);
std::uint64_t hamming(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords);
std::uint64_t popcount(const std::uint64_t* a, std::size_t nwords);
}  // namespace avx2
#endif

// Dispatched entry points.
float dot(const float* a, const float* b, std::size_t n);
void axpy(float alpha, const float* x, float* y, std::size_t n);
void scale(float* x, float alpha, std::size_t n);
std::uint64_t hamming(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords);
std::uint64_t popcount(const std::uint64_t* a, std::size_t nwords);

// Name of the active backend: "scalar" or "avx2".
std::string_view backend();

// Force a backend by name. Returns false (and leaves the dispatch table
// unchanged) if the backend is unknown or unsupported on this CPU.
bool set_backend(std::string_view name);

}  // namespace stancemix::kernels
