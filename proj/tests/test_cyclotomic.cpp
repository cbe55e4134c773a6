#include <doctest.h>

#include <atomic>
#include <random>
#include <thread>
#include <vector>

#include "qsigma/cyclotomic.hpp"

using namespace qsigma;

TEST_SUITE("cyclotomic") {

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Int>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<Int>{1, 1});
    CHECK(cyclotomic_polynomial(3) == std::vector<Int>{1, 1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<Int>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<Int>{1, -1, 1});
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(8) == 4);
    CHECK(euler_phi(12) == 4);
}

TEST_CASE("reduction examples") {
    // t=4: 1 + zeta^2 = 0
    CHECK(CycNum::reduce(4, {Rat(1), Rat(0), Rat(1)}).is_zero());
    // t=2: zeta = -1
    CycNum z2 = CycNum::zeta_pow(2, 1);
    CHECK(z2.is_rational());
    CHECK(z2.rational_value() == Rat(-1));
    // t=3: 1 + zeta + zeta^2 = 0
    CHECK(CycNum::reduce(3, {Rat(1), Rat(1), Rat(1)}).is_zero());
    // zeta^t reduces to 1
    for (unsigned t = 1; t <= 9; ++t) {
        CHECK(CycNum::zeta_pow(t, static_cast<long>(t)) == CycNum(t, Rat(1)));
    }
}

TEST_CASE("zeta has exact multiplicative order t") {
    for (unsigned t = 2; t <= 10; ++t) {
        CycNum one(t, Rat(1));
        CycNum power = one;
        for (unsigned k = 1; k < t; ++k) {
            power *= CycNum::zeta_pow(t, 1);
            CHECK_FALSE(power == one);
        }
        power *= CycNum::zeta_pow(t, 1);
        CHECK(power == one);
    }
}

TEST_CASE("ring laws on random samples") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long> coeff(-4, 4);
    for (unsigned t : {2u, 3u, 4u, 5u, 6u, 8u}) {
        const unsigned deg = euler_phi(t);
        auto random_elem = [&] {
            std::vector<Rat> c(deg);
            for (Rat& x : c) x = Rat(coeff(rng));
            return CycNum::reduce(t, std::move(c));
        };
        for (int iter = 0; iter < 50; ++iter) {
            CycNum a = random_elem(), b = random_elem(), c = random_elem();
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            CHECK(a + b == b + a);
        }
    }
}

TEST_CASE("galois substitution") {
    CycNum z = CycNum::zeta_pow(4, 1);
    CHECK(z.galois(3) == CycNum::zeta_pow(4, 3));
    CycNum mixed = CycNum(4, Rat(2)) + z * Rat(5);
    CHECK(mixed.galois(3) == CycNum(4, Rat(2)) + CycNum::zeta_pow(4, 3) * Rat(5));
    // galois(1) is the identity
    CHECK(mixed.galois(1) == mixed);
}

TEST_CASE("pretty printing") {
    CHECK(CycNum(3).to_string() == "0");
    CHECK(CycNum(4, Rat(-2)).to_string() == "-2");
    CHECK((CycNum(4, Rat(1)) + CycNum::zeta_pow(4, 1) * Rat(-1)).to_string() == "1 - z");
}

TEST_CASE("shared polynomial cache is safe under concurrent use") {
    std::vector<std::thread> workers;
    std::atomic<bool> ok{true};
    for (int w = 0; w < 8; ++w)
        workers.emplace_back([&ok, w] {
            for (unsigned t = 2; t <= 12; ++t) {
                CycNum z = CycNum::zeta_pow(t, 1 + w);
                CycNum power(t, Rat(1));
                for (unsigned k = 0; k < t; ++k) power *= z;
                CycNum expected = CycNum::zeta_pow(t, static_cast<long>(t) * (1 + w));
                if (!(power == expected)) ok = false;
            }
        });
    for (auto& th : workers) th.join();
    CHECK(ok);
}

}  // TEST_SUITE
