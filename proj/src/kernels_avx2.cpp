#include "polyideal/kernels.hpp"

#if defined(POLYIDEAL_HAVE_AVX2)
#include <immintrin.h>
#endif

namespace polyideal::kernels::detail {

#if defined(POLYIDEAL_HAVE_AVX2)

namespace {

constexpr std::size_t kLanes = kWidth / 16;

inline __m256i load(const Exponent* p, std::size_t lane) {
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + 16 * lane));
}

inline void store(Exponent* p, std::size_t lane, __m256i v) {
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(p + 16 * lane), v);
}

inline bool all_ones(__m256i v) { return _mm256_movemask_epi8(v) == -1; }

bool divides(const Exponent* a, const Exponent* b) {
    for (std::size_t l = 0; l < kLanes; ++l) {
        __m256i vb = load(b, l);
        if (!all_ones(_mm256_cmpeq_epi16(_mm256_max_epu16(load(a, l), vb), vb))) return false;
    }
    return true;
}

void lcm(const Exponent* a, const Exponent* b, Exponent* out) {
    for (std::size_t l = 0; l < kLanes; ++l) store(out, l, _mm256_max_epu16(load(a, l), load(b, l)));
}

bool multiply(const Exponent* a, const Exponent* b, Exponent* out) {
    __m256i clean = _mm256_set1_epi16(-1);
    for (std::size_t l = 0; l < kLanes; ++l) {
        __m256i va = load(a, l), vb = load(b, l);
        __m256i wrapped = _mm256_add_epi16(va, vb);
        __m256i saturated = _mm256_adds_epu16(va, vb);
        clean = _mm256_and_si256(clean, _mm256_cmpeq_epi16(wrapped, saturated));
        store(out, l, wrapped);
    }
    return all_ones(clean);
}

void quotient(const Exponent* a, const Exponent* b, Exponent* out) {
    for (std::size_t l = 0; l < kLanes; ++l) store(out, l, _mm256_sub_epi16(load(a, l), load(b, l)));
}

std::uint32_t degree(const Exponent* a) {
    const __m256i ones = _mm256_set1_epi16(1);
    __m256i acc = _mm256_setzero_si256();
    for (std::size_t l = 0; l < kLanes; ++l) {
        // madd treats lanes as signed; split off the high bit to stay exact.
        __m256i v = load(a, l);
        __m256i lo = _mm256_and_si256(v, _mm256_set1_epi16(0x7fff));
        __m256i hi = _mm256_srli_epi16(v, 15);
        acc = _mm256_add_epi32(acc, _mm256_madd_epi16(lo, ones));
        acc = _mm256_add_epi32(acc, _mm256_slli_epi32(_mm256_madd_epi16(hi, ones), 15));
    }
    __m128i s = _mm_add_epi32(_mm256_castsi256_si128(acc), _mm256_extracti128_si256(acc, 1));
    s = _mm_add_epi32(s, _mm_shuffle_epi32(s, 0x4e));
    s = _mm_add_epi32(s, _mm_shuffle_epi32(s, 0xb1));
    return static_cast<std::uint32_t>(_mm_cvtsi128_si32(s));
}

bool coprime(const Exponent* a, const Exponent* b) {
    for (std::size_t l = 0; l < kLanes; ++l) {
        __m256i m = _mm256_min_epu16(load(a, l), load(b, l));
        if (!_mm256_testz_si256(m, m)) return false;
    }
    return true;
}

bool equal(const Exponent* a, const Exponent* b) {
    for (std::size_t l = 0; l < kLanes; ++l)
        if (!all_ones(_mm256_cmpeq_epi16(load(a, l), load(b, l)))) return false;
    return true;
}

Exponent max_exponent(const Exponent* a) {
    __m256i m = load(a, 0);
    for (std::size_t l = 1; l < kLanes; ++l) m = _mm256_max_epu16(m, load(a, l));
    __m128i s = _mm_max_epu16(_mm256_castsi256_si128(m), _mm256_extracti128_si256(m, 1));
    // minpos on the complement yields the maximum.
    s = _mm_minpos_epu16(_mm_xor_si128(s, _mm_set1_epi16(-1)));
    return static_cast<Exponent>(~_mm_extract_epi16(s, 0));
}

const MonomialKernels kAvx2{"avx2", divides, lcm,   multiply, quotient,
                            degree, coprime, equal, max_exponent};

}  // namespace

const MonomialKernels* avx2_table() {
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported ? &kAvx2 : nullptr;
}

#else

const MonomialKernels* avx2_table() { return nullptr; }

#endif

}  // namespace polyideal::kernels::detail
