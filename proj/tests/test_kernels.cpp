#include <doctest.h>

#include <array>
#include <random>

#include "polyideal/kernels.hpp"

using namespace polyideal::kernels;

namespace {

using Vec = std::array<Exponent, kWidth>;

// Exponent vectors in a few regimes: sparse small, dense small, and values
// near the top of the range where carries and sign bits matter.
Vec draw(std::mt19937_64& rng, int regime) {
    Vec v{};
    for (auto& x : v) {
        switch (regime) {
            case 0: x = rng() % 4 == 0 ? static_cast<Exponent>(rng() % 3) : 0; break;
            case 1: x = static_cast<Exponent>(rng() % 16); break;
            default: x = static_cast<Exponent>(65535 - rng() % 40000); break;
        }
    }
    return v;
}

void check_agree(const MonomialKernels& ref, const MonomialKernels& alt, const Vec& a, const Vec& b) {
    CHECK(ref.divides(a.data(), b.data()) == alt.divides(a.data(), b.data()));
    CHECK(ref.coprime(a.data(), b.data()) == alt.coprime(a.data(), b.data()));
    CHECK(ref.equal(a.data(), b.data()) == alt.equal(a.data(), b.data()));
    CHECK(ref.degree(a.data()) == alt.degree(a.data()));
    CHECK(ref.max_exponent(a.data()) == alt.max_exponent(a.data()));

    Vec x{}, y{};
    ref.lcm(a.data(), b.data(), x.data());
    alt.lcm(a.data(), b.data(), y.data());
    CHECK(x == y);

    const bool ok_ref = ref.multiply(a.data(), b.data(), x.data());
    const bool ok_alt = alt.multiply(a.data(), b.data(), y.data());
    CHECK(ok_ref == ok_alt);
    if (ok_ref) CHECK(x == y);

    ref.lcm(a.data(), b.data(), x.data());
    Vec q1{}, q2{};
    ref.quotient(x.data(), b.data(), q1.data());
    alt.quotient(x.data(), b.data(), q2.data());
    CHECK(q1 == q2);
}

}  // namespace

TEST_CASE("scalar kernels on hand-made vectors") {
    const auto& k = scalar();
    Vec a{}, b{};
    a[0] = 2;
    a[5] = 1;
    b[0] = 3;
    b[5] = 1;
    b[63] = 7;
    CHECK(k.divides(a.data(), b.data()));
    CHECK_FALSE(k.divides(b.data(), a.data()));
    CHECK(k.degree(b.data()) == 11);
    CHECK(k.max_exponent(b.data()) == 7);
    CHECK_FALSE(k.coprime(a.data(), b.data()));
    Vec c{};
    c[1] = 4;
    CHECK(k.coprime(a.data(), c.data()));

    Vec big{};
    big[10] = 65535;
    Vec one{};
    one[10] = 1;
    Vec out{};
    CHECK_FALSE(k.multiply(big.data(), one.data(), out.data()));
    CHECK(k.degree(big.data()) == 65535);
}

TEST_CASE("active table honours the build and the CPU") {
    const auto& k = active();
    if (avx2() == nullptr) CHECK(k.name == "scalar");
    else CHECK((k.name == "avx2" || k.name == "scalar"));
}

TEST_CASE("avx2 kernels agree with the scalar reference") {
    const MonomialKernels* simd = avx2();
    if (simd == nullptr) {
        MESSAGE("AVX2 kernels unavailable on this build or CPU; equivalence not exercised");
        return;
    }
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 3000; ++trial) {
        const int ra = trial % 3, rb = (trial / 3) % 3;
        Vec a = draw(rng, ra), b = draw(rng, rb);
        check_agree(scalar(), *simd, a, b);
        // Pairs that differ in one slot exercise the early exits.
        Vec c = a;
        c[rng() % kWidth] += 1;
        check_agree(scalar(), *simd, a, c);
        check_agree(scalar(), *simd, a, a);
    }
    // Every single-slot position, including the last lane.
    for (std::size_t k = 0; k < kWidth; ++k) {
        Vec a{}, b{};
        a[k] = 65535;
        b[k] = 1;
        check_agree(scalar(), *simd, a, b);
        check_agree(scalar(), *simd, b, a);
    }
}
