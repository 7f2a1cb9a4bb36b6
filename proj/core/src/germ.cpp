#include "locsig/germ.hpp"

#include "locsig/warnings.hpp"

#include <stdexcept>

namespace locsig {

namespace {

std::string germ_name(const FiberGerm& germ) {
    return germ.label.empty() ? std::string("<unnamed germ>") : germ.label;
}

void require_matching_genus(const DivisorRep& rep, const FiberGerm& germ) {
    if (rep.genus() != germ.genus)
        throw std::invalid_argument("representative genus " + std::to_string(rep.genus()) +
                                    " does not match germ genus " + std::to_string(germ.genus) +
                                    " (" + germ_name(germ) + ")");
}

void require_genus2(const FiberGerm& germ, const char* op) {
    if (germ.genus != 2)
        throw std::invalid_argument(std::string(op) + " is defined for genus 2 only, germ " +
                                    germ_name(germ) + " has genus " + std::to_string(germ.genus));
}

} // namespace

void FiberGerm::validate() const {
    const auto m = static_cast<std::size_t>(delta_count(genus));
    if (pseudo_period < 1)
        throw std::invalid_argument("germ " + germ_name(*this) + ": pseudo-period must be >= 1");
    if (!ss_delta.empty() && ss_delta.size() != m)
        throw std::invalid_argument("germ " + germ_name(*this) + ": ss_delta needs " +
                                    std::to_string(m) + " entries, got " +
                                    std::to_string(ss_delta.size()));
    for (auto d : ss_delta)
        if (d < 0)
            throw std::invalid_argument("germ " + germ_name(*this) + ": negative ss_delta entry");
    for (const auto& [key, deg] : degrees)
        if (deg.sign() < 0)
            throw std::invalid_argument("germ " + germ_name(*this) + ": negative intersection degree under '" +
                                        key + "'");
    if (c1_sq) {
        const Rational e = euler_local(*this);
        if (Rational(12) * chi_local != *c1_sq + e)
            throw std::domain_error("germ " + germ_name(*this) +
                                    ": inconsistent invariants, 12*chi = " + (Rational(12) * chi_local).str() +
                                    " but c1^2 + e_F = " + (*c1_sq + e).str());
    }
}

long long FiberGerm::ss_delta_at(int i) const {
    if (i < 0)
        throw std::out_of_range("negative boundary index");
    const auto idx = static_cast<std::size_t>(i);
    return idx < ss_delta.size() ? ss_delta[idx] : 0;
}

long long FiberGerm::ss_delta_total() const {
    long long total = 0;
    for (auto d : ss_delta)
        total += d;
    return total;
}

long long FiberGerm::euler_top_ss_value() const {
    if (euler_top_ss)
        return *euler_top_ss;
    return (2 - 2 * static_cast<long long>(genus)) + ss_delta_total();
}

std::optional<Rational> FiberGerm::degree(std::string_view key) const {
    auto it = degrees.find(std::string(key));
    if (it == degrees.end())
        return std::nullopt;
    return it->second;
}

Rational lambda_hat(const DivisorRep& rep, const FiberGerm& germ, const Rational& degree) {
    require_matching_genus(rep, germ);
    Rational sum = degree;
    const auto& b = rep.b();
    for (std::size_t i = 0; i < b.size(); ++i)
        sum += b[i] * Rational(germ.ss_delta_at(static_cast<int>(i)));
    return sum / rep.a();
}

namespace {

Rational resolve_degree(const DivisorRep& rep, const FiberGerm& germ) {
    if (!rep.degree_key())
        return 0;   // zero divisor, nothing to intersect
    auto deg = germ.degree(*rep.degree_key());
    if (!deg)
        throw std::invalid_argument("germ " + germ_name(germ) + " carries no intersection degree under '" +
                                    *rep.degree_key() + "'");
    return *deg;
}

} // namespace

Rational lambda_hat(const DivisorRep& rep, const FiberGerm& germ) {
    return lambda_hat(rep, germ, resolve_degree(rep, germ));
}

Rational lambda_local(const DivisorRep& rep, const FiberGerm& germ, const Rational& degree) {
    return germ.chi_local + lambda_hat(rep, germ, degree) / Rational(germ.pseudo_period);
}

Rational lambda_local(const DivisorRep& rep, const FiberGerm& germ) {
    return lambda_local(rep, germ, resolve_degree(rep, germ));
}

Rational delta_local(const FiberGerm& germ) {
    return Rational(germ.euler_top) - Rational(2 - 2 * static_cast<long long>(germ.genus));
}

Rational sigma_local(const DivisorRep& rep, const FiberGerm& germ, const Rational& degree) {
    return Rational(4) * lambda_local(rep, germ, degree) - delta_local(germ);
}

Rational sigma_local(const DivisorRep& rep, const FiberGerm& germ) {
    return sigma_local(rep, germ, resolve_degree(rep, germ));
}

Rational lambda_g2(const FiberGerm& germ) {
    require_genus2(germ, "lambda_g2");
    const Rational weighted = Rational(germ.ss_delta_at(0)) + Rational(2) * Rational(germ.ss_delta_at(1));
    return germ.chi_local + weighted / Rational(10 * germ.pseudo_period);
}

Rational horikawa_index_g2(const FiberGerm& germ) {
    require_genus2(germ, "horikawa_index_g2");
    const Rational index = Rational(10) * lambda_g2(germ) - delta_local(germ);
    if (index.sign() < 0)
        emit_warning("germ " + germ_name(germ) + " has negative Horikawa index " + index.str() +
                     "; such a germ is not geometrically realizable");
    return index;
}

Rational euler_local(const FiberGerm& germ) {
    const long long shift = 2 - 2 * static_cast<long long>(germ.genus);
    const Rational outer = Rational(germ.euler_top - shift);
    const Rational inner = Rational(germ.euler_top_ss_value() - shift);
    return outer - inner / Rational(germ.pseudo_period);
}

Rational local_signature_defect(const FiberGerm& germ) {
    const Rational e = euler_local(germ);
    const Rational lsd = Rational(4) * germ.chi_local - e;
    if (germ.c1_sq) {
        if (Rational(12) * germ.chi_local != *germ.c1_sq + e)
            throw std::domain_error("germ " + germ_name(germ) +
                                    ": inconsistent invariants, 12*chi = " +
                                    (Rational(12) * germ.chi_local).str() + " but c1^2 + e_F = " +
                                    (*germ.c1_sq + e).str());
        const Rational via_chern = (*germ.c1_sq - Rational(2) * e) / Rational(3);
        if (via_chern != lsd)
            throw std::domain_error("germ " + germ_name(germ) + ": the two defect expressions disagree");
    }
    return lsd;
}

LocalProfile local_profile(const DivisorRep& rep, const FiberGerm& germ) {
    LocalProfile profile;
    profile.lambda_D = lambda_local(rep, germ);
    profile.delta = delta_local(germ);
    profile.sigma = Rational(4) * profile.lambda_D - profile.delta;
    if (germ.genus == 2)
        profile.horikawa = horikawa_index_g2(germ);
    profile.lsd = local_signature_defect(germ);
    return profile;
}

} // namespace locsig
