#include <doctest.h>

#include <algorithm>
#include <random>

#include "qsigma/witness.hpp"
#include "support/random_inputs.hpp"

using namespace qsigma;
namespace ts = qsigma::testsupport;

namespace {

std::shared_ptr<const ConstGroup> plain_group(unsigned t) { return ConstGroup::Builder(t).build(); }

FactoredRatFun mobius_example_a() {
    FactoredRatFun a(plain_group(2), {"r1"});
    a.add_factor(0, 1, 0, Int(1));
    a.add_factor(0, 0, 0, Int(-1));
    return a;
}

/// a = -qz over a group where -1 is realized as zeta^{t/2} (t even) or a
/// declared order-2 symbol (t odd).
FactoredRatFun theta_equation(unsigned t) {
    if (t % 2 == 0) {
        auto g = plain_group(t);
        FactoredRatFun a(g, {});
        a.set_z_power(Int(1));
        a.set_constant(const_mul(g->zeta_power(t / 2), g->q_power(1)));
        return a;
    }
    ConstGroup::Builder b(t);
    std::size_t idx = b.add_symbol("m");
    std::vector<Int> rel(idx + 1, Int(0));
    rel[idx] = 2;
    b.add_relation(std::move(rel));
    auto g = b.build();
    FactoredRatFun a(g, {});
    a.set_z_power(Int(1));
    a.set_constant(const_mul(g->generator(idx), g->q_power(1)));
    return a;
}

ExponentSummary summary_of(const std::vector<std::vector<long>>& a, unsigned t) {
    ExponentSummary s;
    s.t = t;
    s.orbit_count = a.size();
    for (const auto& row : a) {
        std::vector<Int> r;
        for (long x : row) r.emplace_back(x);
        s.a.push_back(std::move(r));
    }
    return s;
}

}  // namespace

TEST_SUITE("criterion") {

TEST_CASE("exponent_summary examples") {
    SUBCASE("running example (z+1)/(z-1), t=2") {
        ExponentSummary s = exponent_summary(mobius_example_a());
        REQUIRE(s.orbit_count == 1);
        CHECK(s.a[0] == std::vector<Int>{Int(-1), Int(1)});
        CHECK(s.window == 0);
    }
    SUBCASE("z - c at t=3") {
        FactoredRatFun a(plain_group(3), {"c"});
        a.add_factor(0, 0, 0, Int(1));
        ExponentSummary s = exponent_summary(a);
        CHECK(s.a[0] == std::vector<Int>{Int(1), Int(0), Int(0)});
    }
    SUBCASE("(z-c)(z+c) at t=4 with zeta=i: same orbit, a = (1,0,1,0)") {
        FactoredRatFun a(plain_group(4), {"c"});
        a.add_factor(0, 0, 0, Int(1));
        a.add_factor(0, 2, 0, Int(1));  // -c = zeta^2 c
        ExponentSummary s = exponent_summary(a);
        CHECK(s.a[0] == std::vector<Int>{Int(1), Int(0), Int(1), Int(0)});
    }
    SUBCASE("summary sums exponents over d and tracks the window") {
        FactoredRatFun a(plain_group(2), {"r"});
        a.add_factor(0, 0, -2, Int(3));
        a.add_factor(0, 0, 1, Int(-1));
        ExponentSummary s = exponent_summary(a);
        CHECK(s.a[0] == std::vector<Int>{Int(2), Int(0)});
        CHECK(s.window == 1);  // d in [-N-1, N] needs N >= max(1, 2-1)
    }
}

TEST_CASE("build_D examples") {
    SUBCASE("a = (-1, 1), t=2: column (0, -2)") {
        DMatrix d = build_D(summary_of({{-1, 1}}, 2));
        CHECK(d.d[0][0].is_zero());
        CHECK(d.d[1][0] == CycNum(2, Rat(-2)));
        CHECK(d.zero_rows() == std::vector<unsigned>{0});
    }
    SUBCASE("a = (1, 0, 0), t=3: all-ones column") {
        DMatrix d = build_D(summary_of({{1, 0, 0}}, 3));
        for (unsigned k = 0; k < 3; ++k) CHECK(d.d[k][0] == CycNum(3, Rat(1)));
        CHECK(d.zero_rows().empty());
    }
    SUBCASE("a = (1, 0, 1, 0), t=4: column (2, 0, 2, 0)") {
        DMatrix d = build_D(summary_of({{1, 0, 1, 0}}, 4));
        CHECK(d.d[0][0] == CycNum(4, Rat(2)));
        CHECK(d.d[1][0].is_zero());
        CHECK(d.d[2][0] == CycNum(4, Rat(2)));
        CHECK(d.d[3][0].is_zero());
        CHECK(d.zero_rows() == std::vector<unsigned>{1, 3});
    }
    SUBCASE("row 0 equals the integer column sums") {
        std::mt19937 rng(7);
        std::uniform_int_distribution<long> dist(-4, 4);
        for (unsigned t = 2; t <= 6; ++t) {
            std::vector<std::vector<long>> rows(2, std::vector<long>(t));
            for (auto& row : rows)
                for (long& x : row) x = dist(rng);
            DMatrix d = build_D(summary_of(rows, t));
            for (std::size_t i = 0; i < rows.size(); ++i) {
                long sum = 0;
                for (long x : rows[i]) sum += x;
                CHECK(d.d[0][i] == CycNum(t, Rat(sum)));
            }
        }
    }
}

TEST_CASE("dft identity") {
    SUBCASE("worked calculation for (-1, 1)") { CHECK(dft_identity_check(summary_of({{-1, 1}}, 2))); }
    SUBCASE("random row at t=3") {
        CHECK(dft_identity_check(summary_of({{2, -1, 4}}, 3)));
    }
    SUBCASE("zero row") { CHECK(dft_identity_check(summary_of({{0, 0, 0, 0}}, 4))); }
    SUBCASE("random rows across t") {
        std::mt19937 rng(99);
        std::uniform_int_distribution<long> dist(-5, 5);
        for (unsigned t = 2; t <= 8; ++t)
            for (int iter = 0; iter < 20; ++iter) {
                std::vector<std::vector<long>> rows(1 + iter % 2, std::vector<long>(t));
                for (auto& row : rows)
                    for (long& x : row) x = dist(rng);
                CHECK(dft_identity_check(summary_of(rows, t)));
            }
    }
}

TEST_CASE("decide: reference examples") {
    SUBCASE("(z+1)/(z-1), t=2, lambda=1: dependent, Case 1, zero row {0}") {
        Verdict v = decide(mobius_example_a());
        CHECK(v.dependent);
        CHECK(v.tag == CaseTag::case1);
        CHECK(v.zero_rows == std::vector<unsigned>{0});
        REQUIRE(v.witness.has_value());
        CHECK(v.witness->phi.n == std::vector<Int>{Int(1), Int(1)});
        CHECK(v.witness->b.factors().empty());
        CHECK(v.witness->b.z_power() == 0);
        CHECK(verify(mobius_example_a(), *v.witness));
    }
    SUBCASE("theta equation -qz: dependent, Case 2, phi = x^t sigma_zeta(x)^{-t}, b = 1") {
        for (unsigned t : {2u, 3u, 4u, 6u}) {
            FactoredRatFun a = theta_equation(t);
            Verdict v = decide(a);
            CHECK(v.dependent);
            CHECK(v.tag == CaseTag::case2);
            REQUIRE(v.witness.has_value());
            std::vector<Int> expected(t, Int(0));
            expected[0] = Int(t);
            expected[1] = Int(-static_cast<long>(t));
            CHECK(v.witness->phi.n == expected);
            CHECK(v.witness->b.factors().empty());
            CHECK(v.witness->b.z_power() == 0);
            CHECK(verify(a, *v.witness));
        }
    }
    SUBCASE("z - c: independent for any t") {
        for (unsigned t : {2u, 3u, 5u}) {
            FactoredRatFun a(plain_group(t), {"c"});
            a.add_factor(0, 0, 0, Int(1));
            Verdict v = decide(a);
            CHECK_FALSE(v.dependent);
            CHECK(v.tag == CaseTag::case1);
            CHECK(v.zero_rows.empty());
            CHECK_FALSE(v.witness.has_value());
        }
    }
    SUBCASE("a = lambda with lambda^u = q^v: dependent with b a power of z") {
        ConstGroup::Builder b(2);
        std::size_t idx = b.add_symbol("lam");
        b.add_relation({Int(-2), Int(0), Int(2)});  // lam^2 = q^2
        auto g = b.build();
        FactoredRatFun a(g, {});
        a.set_constant(g->generator(idx));
        Verdict v = decide(a);
        CHECK(v.dependent);
        CHECK(v.tag == CaseTag::case1);
        REQUIRE(v.witness.has_value());
        CHECK(v.witness->b.factors().empty());
        CHECK(verify(a, *v.witness));
        // phi(a) = lam^{sum n} must equal q^{M}: the synthesized pair is
        // phi = x^2, b = z^2 after content reduction.
        CHECK(v.witness->phi.n == std::vector<Int>{Int(2), Int(0)});
        CHECK(v.witness->b.z_power() == 2);
    }
    SUBCASE("t < 2 rejected") {
        FactoredRatFun a(plain_group(1), {});
        CHECK_THROWS_AS((void)decide(a), std::invalid_argument);
    }
}

TEST_CASE("decide invariances") {
    std::mt19937 rng(31419);
    ts::RandomInputOptions opt;
    opt.t_max = 5;
    for (int iter = 0; iter < 150; ++iter) {
        FactoredRatFun f = ts::random_ratfun(rng, opt);
        Verdict v = decide(f);
        // Orbit relabeling: reverse the orbit order.
        FactoredRatFun rev(f.group_ptr(),
                           {f.orbit_names().rbegin(), f.orbit_names().rend()});
        rev.set_constant(f.constant());
        rev.set_z_power(f.z_power());
        for (const auto& [ref, s] : f.factors())
            rev.add_factor(f.orbit_count() - 1 - ref.orbit, ref.zeta_exp, ref.q_exp, s);
        Verdict vr = decide(rev);
        CHECK(v.dependent == vr.dependent);
        CHECK(v.zero_rows == vr.zero_rows);
        // Global shift of all q-exponents.
        FactoredRatFun shifted(f.group_ptr(), f.orbit_names());
        shifted.set_constant(f.constant());
        shifted.set_z_power(f.z_power());
        for (const auto& [ref, s] : f.factors()) shifted.add_factor(ref.orbit, ref.zeta_exp, ref.q_exp + 3, s);
        Verdict vs = decide(shifted);
        CHECK(v.dependent == vs.dependent);
        CHECK(v.zero_rows == vs.zero_rows);
    }
}

TEST_CASE("declared-but-unused orbits do not change the verdict") {
    std::mt19937 rng(515);
    ts::RandomInputOptions opt;
    opt.t_max = 4;
    for (int iter = 0; iter < 50; ++iter) {
        FactoredRatFun f = ts::random_ratfun(rng, opt);
        std::vector<std::string> names = f.orbit_names();
        names.push_back("unused");
        FactoredRatFun padded(f.group_ptr(), names);
        padded.set_constant(f.constant());
        padded.set_z_power(f.z_power());
        for (const auto& [ref, s] : f.factors()) padded.add_factor(ref.orbit, ref.zeta_exp, ref.q_exp, s);
        Verdict v = decide(f);
        Verdict vp = decide(padded);
        CHECK(v.dependent == vp.dependent);
        CHECK(v.zero_rows == vp.zero_rows);
    }
}

TEST_CASE("pairwise-distinct corollary") {
    // Orbits each holding a single factor of exponent +-1: independent in
    // Case 1 with lambda of finite order.
    std::mt19937 rng(606);
    std::uniform_int_distribution<long> coin(0, 1);
    for (int iter = 0; iter < 100; ++iter) {
        std::uniform_int_distribution<unsigned> tdist(2, 6);
        const unsigned t = tdist(rng);
        auto g = plain_group(t);
        std::uniform_int_distribution<std::size_t> rdist(1, 3);
        const std::size_t orbits = rdist(rng);
        std::vector<std::string> names;
        for (std::size_t i = 0; i < orbits; ++i) names.push_back("r" + std::to_string(i));
        FactoredRatFun a(g, names);
        std::uniform_int_distribution<unsigned> kdist(0, t - 1);
        std::uniform_int_distribution<long> ddist(-2, 2);
        for (std::size_t i = 0; i < orbits; ++i)
            a.add_factor(i, kdist(rng), ddist(rng), Int(coin(rng) ? 1 : -1));
        a.set_constant(g->zeta_power(kdist(rng)));  // finite-order lambda
        Verdict v = decide(a);
        CHECK(v.tag == CaseTag::case1);
        CHECK_FALSE(v.dependent);
    }
}

}  // TEST_SUITE
