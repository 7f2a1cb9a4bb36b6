#include "locsig/fibration.hpp"

#include <stdexcept>

namespace locsig {

namespace {

long long base_factor(const Fibration& fib) {
    return static_cast<long long>(fib.genus - 1) * static_cast<long long>(fib.base_genus - 1);
}

} // namespace

void Fibration::validate() const {
    if (genus < 2)
        throw std::invalid_argument("fibration genus must be >= 2, got " + std::to_string(genus));
    if (base_genus < 0)
        throw std::invalid_argument("base genus must be >= 0, got " + std::to_string(base_genus));
    for (const auto& entry : fibers) {
        if (entry.multiplicity < 1)
            throw std::invalid_argument("fiber multiplicity must be >= 1 (germ " + entry.germ.label + ")");
        if (entry.germ.genus != genus)
            throw std::invalid_argument("germ " + entry.germ.label + " has genus " +
                                        std::to_string(entry.germ.genus) + ", fibration has genus " +
                                        std::to_string(genus));
        entry.germ.validate();
    }
}

Rational chi_f(const Fibration& fib) { return Rational(fib.chi_O - base_factor(fib)); }

Rational e_f(const Fibration& fib) { return Rational(fib.euler_top - 4 * base_factor(fib)); }

Rational k_f_sq(const Fibration& fib) { return Rational(fib.canonical_sq - 8 * base_factor(fib)); }

Rational noether_residual(const Fibration& fib) {
    return k_f_sq(fib) + e_f(fib) - Rational(12) * chi_f(fib);
}

RelativeInvariants relative_invariants(const Fibration& fib) {
    const Rational residual = noether_residual(fib);
    if (!residual.is_zero())
        throw std::domain_error("inconsistent surface data: K_f^2 + e_f - 12*chi_f = " + residual.str());
    const Rational k2 = k_f_sq(fib);
    return RelativeInvariants{k2, k2 - Rational(8) * chi_f(fib)};
}

std::vector<Rational> boundary_degrees(const Fibration& fib) {
    std::vector<Rational> degrees(static_cast<std::size_t>(delta_count(fib.genus)), Rational(0));
    for (const auto& entry : fib.fibers) {
        for (std::size_t i = 0; i < degrees.size(); ++i) {
            const long long d = entry.germ.ss_delta_at(static_cast<int>(i));
            if (d != 0)
                degrees[i] += Rational(entry.multiplicity * d, entry.germ.pseudo_period);
        }
    }
    return degrees;
}

Rational divisor_degree(const Fibration& fib, const DivisorRep& rep) {
    return divisor_degree(fib, rep, chi_f(fib), boundary_degrees(fib));
}

Rational divisor_degree(const Fibration& fib, const DivisorRep& rep,
                        const Rational& lambda_f, const std::vector<Rational>& delta_f) {
    if (rep.genus() != fib.genus)
        throw std::invalid_argument("representative genus " + std::to_string(rep.genus()) +
                                    " does not match fibration genus " + std::to_string(fib.genus));
    if (delta_f.size() != rep.b().size())
        throw std::invalid_argument("divisor_degree: expected " + std::to_string(rep.b().size()) +
                                    " boundary degrees, got " + std::to_string(delta_f.size()));
    Rational degree = rep.a() * lambda_f;
    for (std::size_t i = 0; i < delta_f.size(); ++i)
        degree -= rep.b()[i] * delta_f[i];
    return degree;
}

LocalizationReport verify_localization(const Fibration& fib, const DivisorRep& rep) {
    fib.validate();
    if (rep.genus() != fib.genus)
        throw std::invalid_argument("representative genus " + std::to_string(rep.genus()) +
                                    " does not match fibration genus " + std::to_string(fib.genus));

    LocalizationReport report;
    report.chi = chi_f(fib);
    report.euler = e_f(fib);
    report.k_sq = k_f_sq(fib);
    report.sign = report.k_sq - Rational(8) * report.chi;

    Rational lambda_sum, delta_sum, sigma_sum;
    for (const auto& entry : fib.fibers) {
        GermContribution row;
        row.label = entry.germ.label;
        row.multiplicity = entry.multiplicity;
        row.profile = local_profile(rep, entry.germ);
        const Rational mult(entry.multiplicity);
        lambda_sum += mult * row.profile.lambda_D;
        delta_sum += mult * row.profile.delta;
        sigma_sum += mult * row.profile.sigma;
        report.germs.push_back(std::move(row));
    }

    auto check = [](std::string name, Rational lhs, Rational rhs) {
        IdentityCheck c;
        c.residual = lhs - rhs;
        c.pass = c.residual.is_zero();
        c.name = std::move(name);
        c.lhs = std::move(lhs);
        c.rhs = std::move(rhs);
        return c;
    };
    report.checks.push_back(check("noether", report.k_sq + report.euler, Rational(12) * report.chi));
    report.checks.push_back(check("chi", report.chi, lambda_sum));
    report.checks.push_back(check("euler", report.euler, delta_sum));
    report.checks.push_back(check("signature", report.sign, sigma_sum));

    report.all_pass = true;
    for (const auto& c : report.checks)
        report.all_pass = report.all_pass && c.pass;
    return report;
}

} // namespace locsig
