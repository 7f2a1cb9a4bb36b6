#pragma once

/**
 * @file germ.hpp
 * @brief Local invariants of a relatively minimal fiber germ.
 *
 * A germ F of genus g with pseudo-period N compares to its semi-stable
 * model F^. The library computes, per divisor representative
 * D = a*lambda - sum b_i*delta_i:
 *
 *   lambda_hat = (deg_D(F^) + sum_i b_i * delta_i(F^)) / a
 *   lambda_D   = chi_F + lambda_hat / N
 *   delta      = e_top(F) - (2 - 2g)
 *   sigma_D    = 4*lambda_D - delta
 *
 * plus the genus-2 Horikawa index 10*lambda - delta and the local
 * signature defect 4*chi_F - e_F.
 */

#include "locsig/picard.hpp"
#include "locsig/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace locsig {

/**
 * Local data of a relatively minimal fiber germ.
 *
 * ss_delta holds the semi-stable boundary degrees delta_i(F^), indexed
 * 0..[g/2]; an empty vector means all zero. degrees maps divisor keys to
 * the intersection degree deg_D(F^) of the semi-stable moduli arc with
 * that divisor. Intersection degrees are inputs, never derived.
 *
 * The Euler number of the semi-stable fiber defaults to
 * (2-2g) + sum_i delta_i(F^); euler_top_ss overrides that bookkeeping
 * when supplied.
 */
struct FiberGerm {
    std::string label;
    int genus = 2;
    long long pseudo_period = 1;             // N >= 1
    Rational chi_local{};                    // chi_F
    long long euler_top = 0;                 // e_top(F)
    std::optional<Rational> c1_sq{};         // consistency-checked when present
    std::vector<long long> ss_delta{};       // delta_i(F^), all >= 0
    std::optional<long long> euler_top_ss{}; // e_top(F^) override
    std::map<std::string, Rational> degrees{};

    /// Throws std::invalid_argument on structural problems and
    /// std::domain_error when a supplied c1_sq violates
    /// 12*chi_F = c1_sq + e_F.
    void validate() const;

    long long ss_delta_at(int i) const;
    long long ss_delta_total() const;
    long long euler_top_ss_value() const;
    std::optional<Rational> degree(std::string_view key) const;
};

/// Localization of the representative on the semi-stable model:
/// (degree + sum_i b_i * delta_i(F^)) / a.
Rational lambda_hat(const DivisorRep& rep, const FiberGerm& germ, const Rational& degree);

/// Same, taking the degree from germ.degrees via rep.degree_key()
/// (identically 0 for a representative without a degree key).
Rational lambda_hat(const DivisorRep& rep, const FiberGerm& germ);

/// chi_F + lambda_hat / N.
Rational lambda_local(const DivisorRep& rep, const FiberGerm& germ, const Rational& degree);
Rational lambda_local(const DivisorRep& rep, const FiberGerm& germ);

/// e_top(F) - (2 - 2g); independent of N and of the semi-stable data.
Rational delta_local(const FiberGerm& germ);

/// Local signature 4*lambda_D - delta.
Rational sigma_local(const DivisorRep& rep, const FiberGerm& germ, const Rational& degree);
Rational sigma_local(const DivisorRep& rep, const FiberGerm& germ);

/// Genus-2 standard localization chi_F + (delta_0(F^) + 2*delta_1(F^))/(10N).
Rational lambda_g2(const FiberGerm& germ);

/// Genus-2 Horikawa index 10*lambda - delta. Negative values are
/// geometrically impossible and raise a warning, not an error.
Rational horikawa_index_g2(const FiberGerm& germ);

/// e_F = (e_top(F) - (2-2g)) - (1/N)(e_top(F^) - (2-2g)).
Rational euler_local(const FiberGerm& germ);

/// Local signature defect 4*chi_F - e_F. When c1_sq is present the
/// equivalent form (c1_sq - 2*e_F)/3 is checked against it; an
/// inconsistent (chi, e_F, c1_sq) triple throws std::domain_error.
Rational local_signature_defect(const FiberGerm& germ);

struct LocalProfile {
    Rational lambda_D;
    Rational delta;
    Rational sigma;                   // always 4*lambda_D - delta
    std::optional<Rational> horikawa; // genus 2 only
    Rational lsd;
};

LocalProfile local_profile(const DivisorRep& rep, const FiberGerm& germ);

} // namespace locsig
