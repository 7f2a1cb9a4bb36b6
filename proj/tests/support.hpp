#pragma once

#include "locsig/fibration.hpp"
#include "locsig/rational.hpp"
#include "locsig/warnings.hpp"

#include <random>
#include <string>
#include <vector>

namespace locsig::test {

/// Captures library warnings for the lifetime of the object.
struct WarningCapture {
    std::vector<std::string> messages;

    WarningCapture() {
        set_warning_handler([this](const std::string& m) { messages.push_back(m); });
    }
    ~WarningCapture() { set_warning_handler(nullptr); }

    WarningCapture(const WarningCapture&) = delete;
    WarningCapture& operator=(const WarningCapture&) = delete;
};

inline Rational random_rational(std::mt19937_64& rng, long long num_bound = 1000,
                                long long den_bound = 60) {
    std::uniform_int_distribution<long long> num(-num_bound, num_bound);
    std::uniform_int_distribution<long long> den(1, den_bound);
    return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937_64& rng, long long num_bound = 1000,
                                        long long den_bound = 60) {
    for (;;) {
        Rational r = random_rational(rng, num_bound, den_bound);
        if (!r.is_zero())
            return r;
    }
}

struct LocalizationInstance {
    Fibration fibration;
    DivisorRep rep;
};

/// Random germ multiset plus the unique base-genus-1 surface data whose
/// globals equal the germ sums, so verify_localization passes. The
/// representative has every b_i nonzero, which makes any single
/// ss_delta[0] perturbation visible in the chi identity.
inline LocalizationInstance random_localizing_instance(std::mt19937_64& rng) {
    const int genus = 2 + static_cast<int>(rng() % 4);
    const auto coords = static_cast<std::size_t>(delta_count(genus));

    std::vector<Rational> b;
    for (std::size_t i = 0; i < coords; ++i)
        b.push_back(random_nonzero_rational(rng, 12, 5));
    DivisorRep rep(genus, random_nonzero_rational(rng, 20, 8), std::move(b), "D");

    Fibration fib;
    fib.genus = genus;
    fib.base_genus = 1;   // kills the (g-1)(b-1) corrections

    const int germ_count = 1 + static_cast<int>(rng() % 4);
    Rational lambda_sum, delta_sum;
    for (int k = 0; k < germ_count; ++k) {
        FiberGerm germ;
        germ.label = "G" + std::to_string(k);
        germ.genus = genus;
        germ.pseudo_period = 1 + static_cast<long long>(rng() % 3);
        germ.chi_local = Rational(static_cast<long long>(rng() % 5), 1 + static_cast<long long>(rng() % 4));
        germ.euler_top = (2 - 2 * genus) + static_cast<long long>(rng() % 6);
        germ.ss_delta.assign(coords, 0);
        for (auto& d : germ.ss_delta)
            d = static_cast<long long>(rng() % 4);
        germ.degrees["D"] = Rational(static_cast<long long>(rng() % 9), 1 + static_cast<long long>(rng() % 3));
        const long long mult = 1 + static_cast<long long>(rng() % 3);
        lambda_sum += Rational(mult) * lambda_local(rep, germ);
        delta_sum += Rational(mult) * delta_local(germ);
        fib.fibers.push_back({std::move(germ), mult});
    }

    // integer top-up so chi(O_S) exists: floor(lambda_sum) + 1
    BigInt floor_val = lambda_sum.numerator() / lambda_sum.denominator();
    if (lambda_sum.sign() < 0 && !lambda_sum.is_integer())
        floor_val -= 1;
    const Rational target(floor_val + 1);
    FiberGerm filler;
    filler.label = "filler";
    filler.genus = genus;
    filler.chi_local = target - lambda_sum;
    filler.euler_top = 2 - 2 * genus;
    filler.ss_delta.assign(coords, 0);
    filler.degrees["D"] = Rational(0);
    fib.fibers.push_back({std::move(filler), 1});

    fib.chi_O = target.numerator().convert_to<long long>();
    fib.euler_top = delta_sum.numerator().convert_to<long long>();
    fib.canonical_sq = 12 * fib.chi_O - fib.euler_top;
    return LocalizationInstance{std::move(fib), std::move(rep)};
}

} // namespace locsig::test
