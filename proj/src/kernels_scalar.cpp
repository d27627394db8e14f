#include "polyideal/kernels.hpp"

#include <cstdlib>
#include <limits>
#include <string_view>

namespace polyideal::kernels {

namespace {

bool divides(const Exponent* a, const Exponent* b) {
    for (std::size_t k = 0; k < kWidth; ++k)
        if (a[k] > b[k]) return false;
    return true;
}

void lcm(const Exponent* a, const Exponent* b, Exponent* out) {
    for (std::size_t k = 0; k < kWidth; ++k) out[k] = a[k] > b[k] ? a[k] : b[k];
}

bool multiply(const Exponent* a, const Exponent* b, Exponent* out) {
    bool ok = true;
    for (std::size_t k = 0; k < kWidth; ++k) {
        std::uint32_t s = std::uint32_t{a[k]} + b[k];
        ok &= s <= std::numeric_limits<Exponent>::max();
        out[k] = static_cast<Exponent>(s);
    }
    return ok;
}

void quotient(const Exponent* a, const Exponent* b, Exponent* out) {
    for (std::size_t k = 0; k < kWidth; ++k) out[k] = static_cast<Exponent>(a[k] - b[k]);
}

std::uint32_t degree(const Exponent* a) {
    std::uint32_t d = 0;
    for (std::size_t k = 0; k < kWidth; ++k) d += a[k];
    return d;
}

bool coprime(const Exponent* a, const Exponent* b) {
    for (std::size_t k = 0; k < kWidth; ++k)
        if (a[k] != 0 && b[k] != 0) return false;
    return true;
}

bool equal(const Exponent* a, const Exponent* b) {
    for (std::size_t k = 0; k < kWidth; ++k)
        if (a[k] != b[k]) return false;
    return true;
}

Exponent max_exponent(const Exponent* a) {
    Exponent m = 0;
    for (std::size_t k = 0; k < kWidth; ++k) m = a[k] > m ? a[k] : m;
    return m;
}

const MonomialKernels kScalar{"scalar", divides, lcm,   multiply, quotient,
                              degree,   coprime, equal, max_exponent};

}  // namespace

const MonomialKernels& scalar() { return kScalar; }

namespace detail {
const MonomialKernels* avx2_table();
}

const MonomialKernels* avx2() { return detail::avx2_table(); }

const MonomialKernels& active() {
    static const MonomialKernels& table = [] () -> const MonomialKernels& {
        const char* env = std::getenv("POLYIDEAL_KERNELS");
        if (env != nullptr && std::string_view(env) == "scalar") return kScalar;
        if (const MonomialKernels* simd = avx2()) return *simd;
        return kScalar;
    }();
    return table;
}

}  // namespace polyideal::kernels
