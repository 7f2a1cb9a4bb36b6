#pragma once

/**
 * @file fibration.hpp
 * @brief Global invariants of a fibered surface and the
 *        global = sum-of-local verification.
 *
 * For a genus-g fibration over a base of genus b:
 *
 *   chi_f  = chi(O_S) - (g-1)(b-1)
 *   e_f    = e_top(S) - 4(g-1)(b-1)
 *   K_f^2  = K_S^2 - 8(g-1)(b-1)
 *   Sign   = K_f^2 - 8*chi_f
 *
 * consistent via Noether's formula 12*chi_f = K_f^2 + e_f, and the
 * localization identities chi_f = sum lambda_D, e_f = sum delta,
 * Sign = sum sigma_D over the fiber germs.
 */

#include "locsig/germ.hpp"
#include "locsig/picard.hpp"
#include "locsig/rational.hpp"

#include <string>
#include <vector>

namespace locsig {

struct FiberEntry {
    FiberGerm germ;
    long long multiplicity = 1;   // number of fibers of this type
};

struct Fibration {
    int genus = 2;
    int base_genus = 0;
    long long chi_O = 0;          // chi(O_S)
    long long euler_top = 0;      // e_top(S)
    long long canonical_sq = 0;   // K_S^2
    std::vector<FiberEntry> fibers;

    void validate() const;
};

Rational chi_f(const Fibration& fib);
Rational e_f(const Fibration& fib);
Rational k_f_sq(const Fibration& fib);

/// (K_f^2 + e_f) - 12*chi_f; zero for consistent surface data.
Rational noether_residual(const Fibration& fib);

struct RelativeInvariants {
    Rational k_f_sq;
    Rational sign;
};

/// K_f^2 and Sign(S) = K_f^2 - 8*chi_f. Throws std::domain_error when
/// the input surface data violates Noether's formula (which is also
/// exactly when Sign would differ from 4*chi_f - e_f).
RelativeInvariants relative_invariants(const Fibration& fib);

/// Boundary degrees delta_i(f), defaulted from the germ sums
/// sum_p mult_p * delta_i(F^_p) / N_p.
std::vector<Rational> boundary_degrees(const Fibration& fib);

/// Degree of the representative on the fibration:
/// a*lambda(f) - sum_i b_i*delta_i(f), with lambda(f) = chi_f.
Rational divisor_degree(const Fibration& fib, const DivisorRep& rep);
Rational divisor_degree(const Fibration& fib, const DivisorRep& rep,
                        const Rational& lambda_f, const std::vector<Rational>& delta_f);

struct IdentityCheck {
    std::string name;    // "noether", "chi", "euler", "signature"
    Rational lhs;        // global value
    Rational rhs;        // localized sum (for noether: 12*chi_f)
    Rational residual;   // lhs - rhs
    bool pass = false;   // residual == 0
};

struct GermContribution {
    std::string label;
    long long multiplicity = 0;
    LocalProfile profile;
};

struct LocalizationReport {
    Rational chi;
    Rational euler;
    Rational k_sq;
    Rational sign;
    std::vector<GermContribution> germs;
    std::vector<IdentityCheck> checks;
    bool all_pass = false;
};

/// Checks chi_f = sum lambda_D, e_f = sum delta, Sign = sum sigma_D
/// (plus Noether on the surface data), reporting exact residuals
/// instead of failing, so callers can pinpoint which input is wrong.
/// Throws std::invalid_argument when a germ lacks the intersection
/// degree the representative needs.
LocalizationReport verify_localization(const Fibration& fib, const DivisorRep& rep);

} // namespace locsig
