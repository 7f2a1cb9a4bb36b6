#include "locsig/germ.hpp"

#include "locsig/catalog.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace locsig;
using locsig::test::random_nonzero_rational;
using locsig::test::random_rational;
using locsig::test::WarningCapture;

namespace {

FiberGerm nodal_g3() {
    FiberGerm g;
    g.label = "F0";
    g.genus = 3;
    g.euler_top = -3;
    g.ss_delta = {1, 0};
    g.degrees = {{"HYPERELLIPTIC_G3", 0}, {"HYPERFLEX", 0}};
    return g;
}

FiberGerm hyperflex_g3() {
    FiberGerm g;
    g.label = "Fhf";
    g.genus = 3;
    g.euler_top = -4;
    g.ss_delta = {0, 0};
    g.degrees = {{"HYPERELLIPTIC_G3", 0}, {"HYPERFLEX", 1}};
    return g;
}

FiberGerm random_germ(std::mt19937_64& rng, int genus) {
    FiberGerm g;
    g.label = "rand";
    g.genus = genus;
    g.pseudo_period = 1 + static_cast<long long>(rng() % 4);
    g.chi_local = random_rational(rng, 10, 6);
    g.euler_top = (2 - 2 * genus) + static_cast<long long>(rng() % 7);
    g.ss_delta.assign(static_cast<std::size_t>(delta_count(genus)), 0);
    for (auto& d : g.ss_delta)
        d = static_cast<long long>(rng() % 4);
    return g;
}

} // namespace

TEST_SUITE("germ") {

TEST_CASE("lambda_hat on the semi-stable model") {
    WarningCapture warnings;
    DivisorRep h3(3, 9, {1, 3}, "HYPERELLIPTIC_G3");
    DivisorRep hf(3, 308, {32, 76}, "HYPERFLEX");

    CHECK(lambda_hat(h3, nodal_g3()) == Rational(1, 9));
    CHECK(lambda_hat(hf, hyperflex_g3()) == Rational(1, 308));
    CHECK(lambda_hat(hf, hyperflex_g3(), 1) == Rational(1, 308));
    CHECK(lambda_hat(h3, hyperflex_g3()) == Rational(0));

    FiberGerm wrong_genus = nodal_g3();
    wrong_genus.genus = 2;
    wrong_genus.ss_delta = {1, 0};
    CHECK_THROWS_AS(lambda_hat(h3, wrong_genus), std::invalid_argument);

    FiberGerm no_degree = nodal_g3();
    no_degree.degrees.clear();
    CHECK_THROWS_AS(lambda_hat(hf, no_degree), std::invalid_argument);
    CHECK(lambda_hat(hf, no_degree, 0) == Rational(32, 308));
}

TEST_CASE("lambda_local adds chi and divides by the pseudo-period") {
    DivisorRep hf(3, 308, {32, 76}, "HYPERFLEX");
    CHECK(lambda_local(hf, nodal_g3()) == Rational(8, 77));

    FiberGerm smooth = hyperflex_g3();
    smooth.degrees["HYPERFLEX"] = 0;
    CHECK(lambda_local(hf, smooth) == Rational(0));

    // hand evaluation: ((4 + 1*2 + 2*1)/10)/3 + 1 = 4/15 + 1 = 19/15
    FiberGerm synthetic;
    synthetic.label = "synthetic";
    synthetic.genus = 2;
    synthetic.pseudo_period = 3;
    synthetic.chi_local = 1;
    synthetic.euler_top = 0;
    synthetic.ss_delta = {2, 1};
    DivisorRep rep(2, 10, {1, 2}, "D");
    CHECK(lambda_local(rep, synthetic, 4) == Rational(19, 15));
}

TEST_CASE("delta_local is the Euler excess of the central fiber") {
    CHECK(delta_local(nodal_g3()) == Rational(1));

    FiberGerm smooth = hyperflex_g3();
    CHECK(delta_local(smooth) == Rational(0));

    // two elliptic components joined in one node:
    // e_top = e(C1) + e(C2) - #nodes = 0 + 0 - 1
    const long long euler_by_additivity = 0 + 0 - 1;
    FiberGerm f1;
    f1.label = "F1";
    f1.genus = 2;
    f1.euler_top = euler_by_additivity;
    f1.ss_delta = {0, 1};
    CHECK(delta_local(f1) == Rational(1));

    // independent of N and of the semi-stable data
    FiberGerm twisted = f1;
    twisted.pseudo_period = 7;
    twisted.ss_delta = {5, 2};
    CHECK(delta_local(twisted) == delta_local(f1));
}

TEST_CASE("sigma_local reproduces the worked genus-3 values") {
    WarningCapture warnings;
    DivisorRep h3(3, 9, {1, 3}, "HYPERELLIPTIC_G3");
    DivisorRep hf(3, 308, {32, 76}, "HYPERFLEX");

    CHECK(sigma_local(h3, nodal_g3()) == Rational(-5, 9));
    CHECK(sigma_local(h3, hyperflex_g3()) == Rational(0));
    CHECK(sigma_local(hf, hyperflex_g3()) == Rational(1, 77));
    CHECK(sigma_local(hf, nodal_g3()) == Rational(-45, 77));
}

TEST_CASE("sigma_local for the genus-2 bielliptic representatives") {
    WarningCapture warnings;
    FiberGerm f1;
    f1.genus = 2;
    f1.euler_top = -1;
    f1.ss_delta = {0, 1};
    f1.degrees = {{"BIELLIPTIC_G2", 0}};
    CHECK(sigma_local(bielliptic_g2_rep1(), f1) == Rational(-9, 5));
    CHECK(sigma_local(bielliptic_g2_rep0(), f1) == Rational(-1));
}

TEST_CASE("lambda_g2 matches the zero-divisor localization") {
    FiberGerm f0;
    f0.genus = 2;
    f0.euler_top = -1;
    f0.ss_delta = {1, 0};
    CHECK(lambda_g2(f0) == Rational(1, 10));

    FiberGerm f1 = f0;
    f1.ss_delta = {0, 1};
    CHECK(lambda_g2(f1) == Rational(1, 5));

    FiberGerm smooth;
    smooth.genus = 2;
    smooth.euler_top = -2;
    smooth.ss_delta = {0, 0};
    CHECK(lambda_g2(smooth) == Rational(0));

    CHECK_THROWS_AS(lambda_g2(nodal_g3()), std::invalid_argument);

    // the same value through the generic path: rep of the relation
    // 10*lambda - delta_0 - 2*delta_1 with no divisor to meet
    DivisorRep zero_rep(2, 10, {1, 2});
    std::mt19937_64 rng(77);
    for (int i = 0; i < 100; ++i) {
        FiberGerm g = random_germ(rng, 2);
        CHECK(lambda_local(zero_rep, g) == lambda_g2(g));
    }
}

TEST_CASE("horikawa index for the standard genus-2 germs") {
    FiberGerm f0;
    f0.genus = 2;
    f0.euler_top = -1;
    f0.ss_delta = {1, 0};
    CHECK(horikawa_index_g2(f0) == Rational(0));

    FiberGerm f1 = f0;
    f1.ss_delta = {0, 1};
    CHECK(horikawa_index_g2(f1) == Rational(1));

    FiberGerm smooth;
    smooth.genus = 2;
    smooth.euler_top = -2;
    CHECK(horikawa_index_g2(smooth) == Rational(0));

    CHECK_THROWS_AS(horikawa_index_g2(nodal_g3()), std::invalid_argument);
}

TEST_CASE("negative horikawa index warns but returns") {
    WarningCapture warnings;
    FiberGerm odd;
    odd.label = "impossible";
    odd.genus = 2;
    odd.euler_top = -1;   // delta = 1 with no semi-stable nodes
    odd.ss_delta = {0, 0};
    CHECK(horikawa_index_g2(odd) == Rational(-1));
    REQUIRE(warnings.messages.size() == 1);
    CHECK(warnings.messages[0].find("impossible") != std::string::npos);
    CHECK(warnings.messages[0].find("Horikawa") != std::string::npos);
}

TEST_CASE("sigma - horikawa = -6 lambda for genus 2") {
    std::mt19937_64 rng(31);
    WarningCapture warnings;
    for (int i = 0; i < 200; ++i) {
        FiberGerm g = random_germ(rng, 2);
        const Rational lambda = lambda_g2(g);
        const Rational sigma = Rational(4) * lambda - delta_local(g);
        CHECK(sigma - horikawa_index_g2(g) == Rational(-6) * lambda);
    }
}

TEST_CASE("euler_local bookkeeping") {
    // semi-stable germ: N = 1 and the derived e_top(F^) equals e_top(F)
    FiberGerm f0 = nodal_g3();
    CHECK(euler_local(f0) == Rational(0));

    // N = 3 splits the excess: delta - (sum ss_delta)/N
    FiberGerm g;
    g.genus = 2;
    g.pseudo_period = 3;
    g.euler_top = 1;       // delta = 3
    g.ss_delta = {2, 1};   // derived e_top(F^) = -2 + 3 = 1
    CHECK(euler_local(g) == Rational(3) - Rational(3, 3));

    // an explicit e_top(F^) overrides the derivation
    g.euler_top_ss = 7;    // excess 9
    CHECK(euler_local(g) == Rational(3) - Rational(9, 3));
}

TEST_CASE("local signature defect via both expressions") {
    FiberGerm semistable = nodal_g3();
    CHECK(local_signature_defect(semistable) == Rational(0));

    FiberGerm zero;
    zero.genus = 2;
    zero.euler_top = -2;
    zero.chi_local = 0;
    zero.c1_sq = Rational(0);
    CHECK(local_signature_defect(zero) == Rational(0));

    // chi = 1, e_F = 2, c1^2 = 10: defect 2 both ways, 12 = 10 + 2
    FiberGerm g;
    g.label = "defect2";
    g.genus = 2;
    g.chi_local = 1;
    g.euler_top = 0;       // delta = 2 = e_F at N = 1
    g.ss_delta = {0, 0};
    g.c1_sq = Rational(10);
    g.validate();
    const Rational lsd = local_signature_defect(g);
    CHECK(lsd == Rational(2));
    CHECK(lsd == Rational(4) * g.chi_local - euler_local(g));
    CHECK(lsd == (*g.c1_sq - Rational(2) * euler_local(g)) / Rational(3));

    g.c1_sq = Rational(11);
    CHECK_THROWS_AS(local_signature_defect(g), std::domain_error);
    CHECK_THROWS_AS(g.validate(), std::domain_error);
}

TEST_CASE("representative scaling leaves lambda_hat unchanged") {
    std::mt19937_64 rng(53);
    WarningCapture warnings;
    for (int i = 0; i < 200; ++i) {
        const int genus = 2 + static_cast<int>(rng() % 4);
        FiberGerm germ = random_germ(rng, genus);
        Rational a = random_nonzero_rational(rng);
        std::vector<Rational> b;
        for (int j = 0; j < delta_count(genus); ++j)
            b.push_back(random_rational(rng));
        Rational degree = random_rational(rng);
        Rational c = random_nonzero_rational(rng);
        std::vector<Rational> cb;
        for (const auto& coeff : b)
            cb.push_back(c * coeff);
        CHECK(lambda_hat(DivisorRep(genus, c * a, cb), germ, c * degree) ==
              lambda_hat(DivisorRep(genus, a, b), germ, degree));
    }
}

TEST_CASE("local_profile ties the invariants together") {
    WarningCapture warnings;
    DivisorRep hf(3, 308, {32, 76}, "HYPERFLEX");
    auto profile = local_profile(hf, nodal_g3());
    CHECK(profile.lambda_D == Rational(8, 77));
    CHECK(profile.delta == Rational(1));
    CHECK(profile.sigma == Rational(-45, 77));
    CHECK(profile.sigma == Rational(4) * profile.lambda_D - profile.delta);
    CHECK_FALSE(profile.horikawa.has_value());
    CHECK(profile.lsd == Rational(0));

    FiberGerm f0;
    f0.genus = 2;
    f0.euler_top = -1;
    f0.ss_delta = {1, 0};
    f0.degrees = {{"BIELLIPTIC_G2", 0}};
    auto g2_profile = local_profile(bielliptic_g2_rep0(), f0);
    REQUIRE(g2_profile.horikawa.has_value());
    CHECK(*g2_profile.horikawa == Rational(0));
    CHECK(g2_profile.sigma == Rational(-4, 5));
}

TEST_CASE("germ validation rejects malformed data") {
    FiberGerm g = nodal_g3();
    g.validate();

    FiberGerm bad_period = g;
    bad_period.pseudo_period = 0;
    CHECK_THROWS_AS(bad_period.validate(), std::invalid_argument);

    FiberGerm bad_len = g;
    bad_len.ss_delta = {1};
    CHECK_THROWS_AS(bad_len.validate(), std::invalid_argument);

    FiberGerm bad_delta = g;
    bad_delta.ss_delta = {-1, 0};
    CHECK_THROWS_AS(bad_delta.validate(), std::invalid_argument);

    FiberGerm bad_degree = g;
    bad_degree.degrees["HYPERFLEX"] = Rational(-1);
    CHECK_THROWS_AS(bad_degree.validate(), std::invalid_argument);

    FiberGerm empty_ok = g;
    empty_ok.ss_delta.clear();   // empty means all zero
    empty_ok.validate();
    CHECK(empty_ok.ss_delta_at(0) == 0);
    CHECK(delta_local(empty_ok) == Rational(1));
}

} // TEST_SUITE
