#ifndef CODEDESIGN_POLY_HPP
#define CODEDESIGN_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "codedesign/field.hpp"

namespace codedesign {

// Dense univariate polynomial. Coefficients ascending by degree, always
// normalized (no trailing zeros), so the zero polynomial is an empty vector
// and degree() == -1 for it.
struct Poly {
    std::vector<FieldElement> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    FieldElement coeff(std::size_t i) const {
        return i < c.size() ? c[i] : FieldElement{0};
    }
    FieldElement lead() const { return c.back(); }

    friend bool operator==(const Poly&, const Poly&) = default;
};

// Polynomial arithmetic over one field. Holds a pointer to the context, so
// the context must outlive the ring; rings are cheap to copy.
class PolyRing {
public:
    explicit PolyRing(const FieldContext& F) : F_(&F) {}

    const FieldContext& field() const { return *F_; }

    Poly make(std::vector<FieldElement> coeffs) const;
    Poly zero() const { return {}; }
    Poly one() const { return {{F_->one()}}; }
    Poly x() const { return {{F_->zero(), F_->one()}}; }
    Poly constant(FieldElement a) const;
    // lead * x^deg
    Poly monomial(unsigned deg, FieldElement lead) const;

    Poly add(const Poly& a, const Poly& b) const;
    Poly sub(const Poly& a, const Poly& b) const;
    Poly neg(const Poly& a) const;
    Poly mul(const Poly& a, const Poly& b) const;
    Poly scale(FieldElement s, const Poly& a) const;
    // a * x^k
    Poly shift(const Poly& a, unsigned k) const;

    FieldElement eval(const Poly& a, FieldElement x) const;

    // Quotient and remainder; b must be nonzero, deg r < deg b.
    std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) const;
    // Exact quotient; throws MismatchError if b does not divide a.
    Poly div_exact(const Poly& a, const Poly& b) const;

    Poly gcd(const Poly& a, const Poly& b) const;  // monic unless zero

    // Truncated extended Euclid: runs the remainder sequence a, b, ... and
    // returns the first entry r with deg r < stop_degree together with the
    // cofactors satisfying u*a + v*b = r. With stop_degree <= 0 this is the
    // full extended gcd (not normalized to monic).
    struct PartialGcd {
        Poly r, u, v;
    };
    PartialGcd gcd_partial(const Poly& a, const Poly& b, int stop_degree) const;

    // prod (x - r_j) over the given roots.
    Poly from_roots(const std::vector<FieldElement>& roots) const;
    // prod (x + a_j): the sign convention used by the row polynomials.
    Poly from_constraint_roots(const std::vector<FieldElement>& points) const;

    // Unique polynomial of degree < points.size() through all (x_i, y_i);
    // the x_i must be pairwise distinct.
    Poly interpolate(
        const std::vector<std::pair<FieldElement, FieldElement>>& points) const;

    std::string to_string(const Poly& a) const;

private:
    const FieldContext* F_;
};

}  // namespace codedesign

#endif
