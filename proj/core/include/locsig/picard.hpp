#pragma once

/**
 * @file picard.hpp
 * @brief The rational Picard group of the moduli space of stable genus-g
 *        curves, in (lambda, delta_0..delta_[g/2]) coordinates.
 *
 * For genus >= 3 the coordinates form a free basis. For genus 2 classes
 * are taken modulo the relation 10*lambda = delta_0 + 2*delta_1, and
 * normal_form() eliminates lambda.
 */

#include "locsig/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace locsig {

/// Number of boundary coordinates delta_0..delta_[g/2] for a given genus.
int delta_count(int genus);

class DivisorClass {
public:
    DivisorClass(int genus, Rational lambda_coeff, std::vector<Rational> delta_coeffs);

    int genus() const { return genus_; }
    const Rational& lambda() const { return lambda_; }
    const std::vector<Rational>& deltas() const { return deltas_; }
    const Rational& delta(int i) const;

    /// Coordinate-wise zero test on the raw coordinates.
    bool is_zero() const;

    /// Raw coordinate equality; use classes_equal() for equality modulo
    /// the genus-2 relation.
    friend bool operator==(const DivisorClass& a, const DivisorClass& b);
    friend bool operator!=(const DivisorClass& a, const DivisorClass& b) { return !(a == b); }

private:
    int genus_;
    Rational lambda_;
    std::vector<Rational> deltas_;
};

DivisorClass make_class(int genus, Rational lambda_coeff, std::vector<Rational> delta_coeffs);
DivisorClass zero_class(int genus);
DivisorClass lambda_class(int genus);
DivisorClass boundary_class(int genus, int i);

DivisorClass add(const DivisorClass& x, const DivisorClass& y);
DivisorClass scale(const Rational& c, const DivisorClass& x);
DivisorClass operator+(const DivisorClass& x, const DivisorClass& y);
DivisorClass operator-(const DivisorClass& x, const DivisorClass& y);
DivisorClass operator-(const DivisorClass& x);

/// Genus 2: substitutes lambda = (delta_0 + 2*delta_1)/10, returning the
/// unique representative with lambda coefficient 0. Genus >= 3: identity.
DivisorClass normal_form(const DivisorClass& x);

/// Equality in the Picard group (modulo the genus-2 relation).
/// Throws on genus mismatch.
bool classes_equal(const DivisorClass& x, const DivisorClass& y);

/**
 * A chosen representative a*lambda - sum_i b_i*delta_i of a divisor
 * class. Distinct representatives of one class localize differently for
 * genus 2, so representatives are first-class values.
 *
 * The b_i are signed; a warning is emitted when any b_i <= 0 since the
 * effective-divisor shape normally has all b_i > 0.
 *
 * degree_key names the intersection-degree entry a fiber germ must carry
 * for this representative. An empty degree_key means the zero divisor:
 * the degree is identically 0 (used for the genus-2 relation itself).
 */
class DivisorRep {
public:
    DivisorRep(int genus, Rational a, std::vector<Rational> b,
               std::optional<std::string> degree_key = std::nullopt);

    int genus() const { return genus_; }
    const Rational& a() const { return a_; }
    const std::vector<Rational>& b() const { return b_; }
    const std::optional<std::string>& degree_key() const { return degree_key_; }

    DivisorRep with_degree_key(std::optional<std::string> key) const;

private:
    int genus_;
    Rational a_;
    std::vector<Rational> b_;
    std::optional<std::string> degree_key_;
};

/// The induced class a*lambda - sum_i b_i*delta_i.
DivisorClass rep_to_class(const DivisorRep& r);

} // namespace locsig
