/*
 *   Copyright 2026 The fingroup authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "fingroup/kernels.hpp"

#include <cstdlib>

namespace fingroup::kernels {

#if !defined(FINGROUP_HAVE_AVX2)
const Backend* avx2_backend() { return nullptr; }
#endif

bool avx2_available() {
#if defined(FINGROUP_HAVE_AVX2)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

namespace {

bool simd_disabled_by_env() {
    const char* env = std::getenv("FINGROUP_NO_SIMD");
    return env != nullptr && env[0] != '\0' && env[0] != '0';
}

const Backend* pick_backend() {
    if (!simd_disabled_by_env() && avx2_available()) {
        return avx2_backend();
    }
    return &scalar_backend();
}

} // namespace

const Backend& active_backend() {
    static const Backend* backend = pick_backend();
    return *backend;
}

} // namespace fingroup::kernels
