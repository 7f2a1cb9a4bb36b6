#pragma once

/**
 * @file catalog.hpp
 * @brief Published effective divisor classes on the moduli space of
 *        stable curves, as exact rational constants.
 *
 * Covered entries:
 *   E_MINUS / E_PLUS      exceptional-Weierstrass-point loci, genus >= 3,
 *                         closed-form coefficient families in the genus
 *   HYPERELLIPTIC_G3      genus-3 hyperelliptic locus
 *   HYPERFLEX             genus-3 plane quartics with a hyperflex
 *   BIELLIPTIC_G2         genus-2 bielliptic locus (three standard shapes)
 */

#include "locsig/picard.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace locsig {

enum class WeierstrassKind { minus, plus };

/// Class of the locus of curves with an exceptional Weierstrass point
/// (kind selects type g-1 or type g+1). Requires genus >= 3; both loci
/// are empty for genus 2.
DivisorClass exceptional_weierstrass_class(int genus, WeierstrassKind kind);

/// 9*lambda - delta_0 - 3*delta_1, the reduced genus-3 hyperelliptic class.
DivisorClass hyperelliptic_g3();

/// E_PLUS minus E_MINUS at genus 3: 308*lambda - 32*delta_0 - 76*delta_1.
DivisorClass hyperflex_class();

/// Genus-2 bielliptic class in boundary coordinates: (3/2)*delta_0 + 6*delta_1.
DivisorClass bielliptic_g2_class();

/// Representative 30*lambda - (3/2)*delta_0.
DivisorRep bielliptic_g2_rep0();

/// Representative 15*lambda + 3*delta_1.
DivisorRep bielliptic_g2_rep1();

struct CatalogEntry {
    std::string name;      // stable key, e.g. "HYPERFLEX"
    std::string display;   // e.g. "E_{3,1}"
    int genus = 0;
    DivisorClass divisor_class;
    DivisorRep default_rep;
    std::string multiplicity_note;
};

/// All catalog entries defined at the given genus (>= 2).
std::vector<CatalogEntry> catalog_for_genus(int genus);

std::optional<CatalogEntry> find_catalog_entry(std::string_view name, int genus);

} // namespace locsig
