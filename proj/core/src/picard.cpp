#include "locsig/picard.hpp"

#include "locsig/warnings.hpp"

#include <stdexcept>
#include <utility>

namespace locsig {

int delta_count(int genus) {
    if (genus < 2)
        throw std::invalid_argument("genus must be at least 2, got " + std::to_string(genus));
    return genus / 2 + 1;
}

DivisorClass::DivisorClass(int genus, Rational lambda_coeff, std::vector<Rational> delta_coeffs)
    : genus_(genus), lambda_(std::move(lambda_coeff)), deltas_(std::move(delta_coeffs)) {
    const auto expected = static_cast<std::size_t>(delta_count(genus));
    if (deltas_.size() != expected)
        throw std::invalid_argument("genus " + std::to_string(genus) + " class needs " +
                                    std::to_string(expected) + " delta coefficients, got " +
                                    std::to_string(deltas_.size()));
}

const Rational& DivisorClass::delta(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= deltas_.size())
        throw std::out_of_range("delta index " + std::to_string(i) + " out of range");
    return deltas_[static_cast<std::size_t>(i)];
}

bool DivisorClass::is_zero() const {
    if (!lambda_.is_zero())
        return false;
    for (const auto& d : deltas_)
        if (!d.is_zero())
            return false;
    return true;
}

bool operator==(const DivisorClass& a, const DivisorClass& b) {
    return a.genus_ == b.genus_ && a.lambda_ == b.lambda_ && a.deltas_ == b.deltas_;
}

DivisorClass make_class(int genus, Rational lambda_coeff, std::vector<Rational> delta_coeffs) {
    return DivisorClass(genus, std::move(lambda_coeff), std::move(delta_coeffs));
}

DivisorClass zero_class(int genus) {
    return DivisorClass(genus, 0, std::vector<Rational>(static_cast<std::size_t>(delta_count(genus)), Rational(0)));
}

DivisorClass lambda_class(int genus) {
    return DivisorClass(genus, 1, std::vector<Rational>(static_cast<std::size_t>(delta_count(genus)), Rational(0)));
}

DivisorClass boundary_class(int genus, int i) {
    std::vector<Rational> deltas(static_cast<std::size_t>(delta_count(genus)), Rational(0));
    if (i < 0 || static_cast<std::size_t>(i) >= deltas.size())
        throw std::invalid_argument("boundary index " + std::to_string(i) + " out of range for genus " +
                                    std::to_string(genus));
    deltas[static_cast<std::size_t>(i)] = 1;
    return DivisorClass(genus, 0, std::move(deltas));
}

namespace {

void require_same_genus(int gx, int gy, const char* op) {
    if (gx != gy)
        throw std::invalid_argument(std::string(op) + ": genus mismatch (" + std::to_string(gx) +
                                    " vs " + std::to_string(gy) + ")");
}

} // namespace

DivisorClass add(const DivisorClass& x, const DivisorClass& y) {
    require_same_genus(x.genus(), y.genus(), "add");
    std::vector<Rational> deltas;
    deltas.reserve(x.deltas().size());
    for (std::size_t i = 0; i < x.deltas().size(); ++i)
        deltas.push_back(x.deltas()[i] + y.deltas()[i]);
    return DivisorClass(x.genus(), x.lambda() + y.lambda(), std::move(deltas));
}

DivisorClass scale(const Rational& c, const DivisorClass& x) {
    std::vector<Rational> deltas;
    deltas.reserve(x.deltas().size());
    for (const auto& d : x.deltas())
        deltas.push_back(c * d);
    return DivisorClass(x.genus(), c * x.lambda(), std::move(deltas));
}

DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) { return add(x, y); }

DivisorClass operator-(const DivisorClass& x, const DivisorClass& y) { return add(x, scale(-1, y)); }

DivisorClass operator-(const DivisorClass& x) { return scale(-1, x); }

DivisorClass normal_form(const DivisorClass& x) {
    if (x.genus() != 2)
        return x;
    // lambda = (delta_0 + 2*delta_1)/10
    const Rational& a = x.lambda();
    std::vector<Rational> deltas{x.delta(0) + a / 10, x.delta(1) + a * Rational(2, 10)};
    return DivisorClass(2, 0, std::move(deltas));
}

bool classes_equal(const DivisorClass& x, const DivisorClass& y) {
    require_same_genus(x.genus(), y.genus(), "classes_equal");
    return normal_form(x) == normal_form(y);
}

DivisorRep::DivisorRep(int genus, Rational a, std::vector<Rational> b,
                       std::optional<std::string> degree_key)
    : genus_(genus), a_(std::move(a)), b_(std::move(b)), degree_key_(std::move(degree_key)) {
    const auto expected = static_cast<std::size_t>(delta_count(genus));
    if (b_.size() != expected)
        throw std::invalid_argument("genus " + std::to_string(genus) + " representative needs " +
                                    std::to_string(expected) + " b coefficients, got " +
                                    std::to_string(b_.size()));
    if (a_.is_zero())
        throw std::invalid_argument("divisor representative with a = 0");
    for (std::size_t i = 0; i < b_.size(); ++i) {
        if (b_[i].sign() <= 0)
            emit_warning("divisor representative (genus " + std::to_string(genus) + ") has b_" +
                         std::to_string(i) + " = " + b_[i].str() + " <= 0");
    }
}

DivisorRep DivisorRep::with_degree_key(std::optional<std::string> key) const {
    DivisorRep copy = *this;
    copy.degree_key_ = std::move(key);
    return copy;
}

DivisorClass rep_to_class(const DivisorRep& r) {
    std::vector<Rational> deltas;
    deltas.reserve(r.b().size());
    for (const auto& coeff : r.b())
        deltas.push_back(-coeff);
    return DivisorClass(r.genus(), r.a(), std::move(deltas));
}

} // namespace locsig
