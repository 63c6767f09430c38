// Copyright 2026 The crtft Authors
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

#include "crtft/kernels.hpp"

#include <atomic>
#include <stdexcept>

namespace crtft::kernels {

const Ops& scalar_ops();  // kernels_scalar.cpp
const Ops* avx2_ops();    // kernels_avx2.cpp, null when compiled out

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend detect() { return available(Backend::Avx2) ? Backend::Avx2 : Backend::Scalar; }

std::atomic<Backend>& current() {
    static std::atomic<Backend> backend{detect()};
    return backend;
}

}  // namespace

bool available(Backend b) {
    switch (b) {
        case Backend::Scalar: return true;
        case Backend::Avx2: return avx2_ops() != nullptr && cpu_has_avx2();
    }
    return false;
}

const Ops& ops(Backend b) {
    if (!available(b))
        throw std::runtime_error("kernel backend not available on this machine");
    return b == Backend::Avx2 ? *avx2_ops() : scalar_ops();
}

const Ops& ops() { return ops(current().load(std::memory_order_relaxed)); }

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
    if (!available(b))
        throw std::runtime_error("kernel backend not available on this machine");
    current().store(b, std::memory_order_relaxed);
}

}  // namespace crtft::kernels
