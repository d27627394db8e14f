#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace polyideal::kernels {

// Exponent vectors are dense, fixed-width and zero-padded so that every
// kernel can process them in whole 256-bit lanes.
inline constexpr std::size_t kWidth = 64;
using Exponent = std::uint16_t;

// One table per instruction set. All entries operate on kWidth exponents.
struct MonomialKernels {
    std::string_view name;
    // a | b, i.e. a[k] <= b[k] for all k
    bool (*divides)(const Exponent* a, const Exponent* b);
    void (*lcm)(const Exponent* a, const Exponent* b, Exponent* out);
    // Returns false if any exponent overflows; out is unspecified then.
    bool (*multiply)(const Exponent* a, const Exponent* b, Exponent* out);
    // Precondition: b | a.
    void (*quotient)(const Exponent* a, const Exponent* b, Exponent* out);
    std::uint32_t (*degree)(const Exponent* a);
    bool (*coprime)(const Exponent* a, const Exponent* b);
    bool (*equal)(const Exponent* a, const Exponent* b);
    Exponent (*max_exponent)(const Exponent* a);
};

const MonomialKernels& scalar();

// nullptr when the binary was built without AVX2 support or the CPU lacks it.
const MonomialKernels* avx2();

// The table used by Monomial. Chosen once: AVX2 when available unless the
// environment variable POLYIDEAL_KERNELS is set to "scalar".
const MonomialKernels& active();

}  // namespace polyideal::kernels
