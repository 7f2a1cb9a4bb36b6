#include "locsig/catalog.hpp"

#include <stdexcept>

namespace locsig {

DivisorClass exceptional_weierstrass_class(int genus, WeierstrassKind kind) {
    if (genus < 3)
        throw std::invalid_argument("exceptional Weierstrass loci need genus >= 3 "
                                    "(both are empty for genus 2), got genus " +
                                    std::to_string(genus));
    const BigInt g = genus;
    const int m = delta_count(genus);
    Rational lambda;
    std::vector<Rational> deltas(static_cast<std::size_t>(m), Rational(0));
    if (kind == WeierstrassKind::minus) {
        lambda = Rational(g * g * (g - 1) * (3 * g - 1), 2);
        deltas[0] = -Rational((g - 1) * (g - 1) * g * (g + 1), 6);
        for (int i = 1; i < m; ++i)
            deltas[static_cast<std::size_t>(i)] =
                -Rational(BigInt(i) * (g - i) * g * (g * g + g - 4), 2);
    } else {
        lambda = Rational((g + 1) * (g + 2) * (3 * g * g + 3 * g + 2), 2);
        deltas[0] = -Rational(g * (g + 1) * (g + 1) * (g + 2), 6);
        for (int i = 1; i < m; ++i)
            deltas[static_cast<std::size_t>(i)] =
                -Rational(BigInt(i) * (g - i) * (g + 1) * (g + 2) * (g + 2), 2);
    }
    return DivisorClass(genus, lambda, std::move(deltas));
}

DivisorClass hyperelliptic_g3() { return make_class(3, 9, {-1, -3}); }

DivisorClass hyperflex_class() {
    return exceptional_weierstrass_class(3, WeierstrassKind::plus) -
           exceptional_weierstrass_class(3, WeierstrassKind::minus);
}

DivisorClass bielliptic_g2_class() { return make_class(2, 0, {Rational(3, 2), 6}); }

DivisorRep bielliptic_g2_rep0() { return DivisorRep(2, 30, {Rational(3, 2), 0}, "BIELLIPTIC_G2"); }

DivisorRep bielliptic_g2_rep1() { return DivisorRep(2, 15, {0, -3}, "BIELLIPTIC_G2"); }

namespace {

DivisorRep default_rep_for(const std::string& name, const DivisorClass& cls) {
    std::vector<Rational> b;
    b.reserve(cls.deltas().size());
    for (const auto& d : cls.deltas())
        b.push_back(-d);
    return DivisorRep(cls.genus(), cls.lambda(), std::move(b), name);
}

std::string subscript(int genus, int kind) {
    return "{" + std::to_string(genus) + "," + (kind < 0 ? std::string("-1") : std::string("1")) + "}";
}

} // namespace

std::vector<CatalogEntry> catalog_for_genus(int genus) {
    delta_count(genus);   // rejects genus < 2
    std::vector<CatalogEntry> entries;
    if (genus == 2) {
        entries.push_back(CatalogEntry{
            "BIELLIPTIC_G2", "B_2", 2, bielliptic_g2_class(), bielliptic_g2_rep0(),
            "bielliptic locus; one class with three standard shapes, and the two "
            "lambda-representatives localize differently"});
        return entries;
    }
    auto e_minus = exceptional_weierstrass_class(genus, WeierstrassKind::minus);
    auto e_plus = exceptional_weierstrass_class(genus, WeierstrassKind::plus);
    entries.push_back(CatalogEntry{
        "E_MINUS", "E_" + subscript(genus, -1), genus, e_minus, default_rep_for("E_MINUS", e_minus),
        genus == 3 ? "equals the hyperelliptic locus as a set but counts it with multiplicity 8"
                   : "multiplicity 1 around general points"});
    entries.push_back(CatalogEntry{
        "E_PLUS", "E_" + subscript(genus, 1), genus, e_plus, default_rep_for("E_PLUS", e_plus),
        "multiplicity 1 around general points"});
    if (genus == 3) {
        auto h3 = hyperelliptic_g3();
        auto hf = hyperflex_class();
        entries.push_back(CatalogEntry{
            "HYPERELLIPTIC_G3", "H_3", 3, h3, default_rep_for("HYPERELLIPTIC_G3", h3),
            "reduced hyperelliptic locus; E_{3,-1} = 8 H_3 as divisors"});
        entries.push_back(CatalogEntry{
            "HYPERFLEX", "HF", 3, hf, default_rep_for("HYPERFLEX", hf),
            "plane quartics with a hyperflex; multiplicity 1 around general points"});
    }
    return entries;
}

std::optional<CatalogEntry> find_catalog_entry(std::string_view name, int genus) {
    for (auto& entry : catalog_for_genus(genus))
        if (entry.name == name)
            return entry;
    return std::nullopt;
}

} // namespace locsig
