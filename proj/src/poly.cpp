#include "codedesign/poly.hpp"

#include <algorithm>
#include <cassert>

#include "codedesign/common.hpp"

namespace codedesign {

namespace {

void normalize(std::vector<FieldElement>& c) {
    while (!c.empty() && c.back().v == 0) c.pop_back();
}

}  // namespace

Poly PolyRing::make(std::vector<FieldElement> coeffs) const {
    normalize(coeffs);
    return {std::move(coeffs)};
}

Poly PolyRing::constant(FieldElement a) const {
    if (F_->is_zero(a)) return {};
    return {{a}};
}

Poly PolyRing::monomial(unsigned deg, FieldElement lead) const {
    if (F_->is_zero(lead)) return {};
    std::vector<FieldElement> c(deg + 1, F_->zero());
    c[deg] = lead;
    return {std::move(c)};
}

Poly PolyRing::add(const Poly& a, const Poly& b) const {
    std::vector<FieldElement> c(std::max(a.c.size(), b.c.size()), F_->zero());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = F_->add(a.coeff(i), b.coeff(i));
    normalize(c);
    return {std::move(c)};
}

Poly PolyRing::neg(const Poly& a) const {
    std::vector<FieldElement> c(a.c);
    for (auto& x : c) x = F_->neg(x);
    return {std::move(c)};
}

Poly PolyRing::sub(const Poly& a, const Poly& b) const { return add(a, neg(b)); }

Poly PolyRing::mul(const Poly& a, const Poly& b) const {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<FieldElement> c(a.c.size() + b.c.size() - 1, F_->zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].v == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            c[i + j] = F_->add(c[i + j], F_->mul(a.c[i], b.c[j]));
    }
    normalize(c);
    return {std::move(c)};
}

Poly PolyRing::scale(FieldElement s, const Poly& a) const {
    if (F_->is_zero(s)) return {};
    std::vector<FieldElement> c(a.c);
    for (auto& x : c) x = F_->mul(s, x);
    return {std::move(c)};
}

Poly PolyRing::shift(const Poly& a, unsigned k) const {
    if (a.is_zero() || k == 0) return a;
    std::vector<FieldElement> c(a.c.size() + k, F_->zero());
    std::copy(a.c.begin(), a.c.end(), c.begin() + k);
    return {std::move(c)};
}

FieldElement PolyRing::eval(const Poly& a, FieldElement x) const {
    FieldElement r = F_->zero();
    for (std::size_t i = a.c.size(); i-- > 0;)
        r = F_->add(F_->mul(r, x), a.c[i]);
    return r;
}

std::pair<Poly, Poly> PolyRing::divmod(const Poly& a, const Poly& b) const {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {zero(), a};
    const FieldElement ilead = F_->inv(b.lead());
    std::vector<FieldElement> rem(a.c);
    std::vector<FieldElement> quo(a.c.size() - b.c.size() + 1, F_->zero());
    for (std::size_t i = rem.size(); i-- > 0;) {
        if (i + 1 < b.c.size()) break;
        FieldElement f = F_->mul(rem[i], ilead);
        if (f.v != 0) {
            std::size_t shift = i - (b.c.size() - 1);
            quo[shift] = f;
            for (std::size_t j = 0; j < b.c.size(); ++j)
                rem[shift + j] = F_->sub(rem[shift + j], F_->mul(f, b.c[j]));
        }
    }
    normalize(rem);
    normalize(quo);
    return {{std::move(quo)}, {std::move(rem)}};
}

Poly PolyRing::div_exact(const Poly& a, const Poly& b) const {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw MismatchError("polynomial division left a remainder");
    return q;
}

Poly PolyRing::gcd(const Poly& a, const Poly& b) const {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    if (!x.is_zero() && x.lead().v != 1) x = scale(F_->inv(x.lead()), x);
    return x;
}

PolyRing::PartialGcd PolyRing::gcd_partial(const Poly& a, const Poly& b,
                                           int stop_degree) const {
    // Invariants through the loop: u0*a + v0*b = r0, u1*a + v1*b = r1.
    Poly r0 = a, u0 = one(), v0 = zero();
    Poly r1 = b, u1 = zero(), v1 = one();
    while (r0.degree() >= stop_degree) {
        if (r1.is_zero()) break;
        auto [q, r2] = divmod(r0, r1);
        Poly u2 = sub(u0, mul(q, u1));
        Poly v2 = sub(v0, mul(q, v1));
        r0 = std::move(r1);
        u0 = std::move(u1);
        v0 = std::move(v1);
        r1 = std::move(r2);
        u1 = std::move(u2);
        v1 = std::move(v2);
    }
    if (r0.degree() >= stop_degree) {
        // Sequence bottomed out at a nonzero gcd of degree >= stop_degree.
        return {r1, u1, v1};  // r1 is zero here
    }
    return {r0, u0, v0};
}

Poly PolyRing::from_roots(const std::vector<FieldElement>& roots) const {
    Poly p = one();
    for (auto r : roots) p = mul(p, make({F_->neg(r), F_->one()}));
    return p;
}

Poly PolyRing::from_constraint_roots(
    const std::vector<FieldElement>& points) const {
    Poly p = one();
    for (auto a : points) p = mul(p, make({a, F_->one()}));
    return p;
}

Poly PolyRing::interpolate(
    const std::vector<std::pair<FieldElement, FieldElement>>& points) const {
    std::vector<FieldElement> xs;
    xs.reserve(points.size());
    for (auto& [x, y] : points) xs.push_back(x);
    const Poly master = from_roots(xs);
    Poly acc = zero();
    for (auto& [x, y] : points) {
        if (F_->is_zero(y)) continue;
        Poly num = div_exact(master, make({F_->neg(x), F_->one()}));
        FieldElement denom = eval(num, x);
        if (F_->is_zero(denom))
            throw std::invalid_argument("interpolation nodes must be distinct");
        acc = add(acc, scale(F_->mul(y, F_->inv(denom)), num));
    }
    return acc;
}

std::string PolyRing::to_string(const Poly& a) const {
    if (a.is_zero()) return "0";
    std::string out;
    for (std::size_t i = a.c.size(); i-- > 0;) {
        if (a.c[i].v == 0) continue;
        if (!out.empty()) out += " + ";
        const bool unit = a.c[i].v == 1;
        if (i == 0 || !unit) out += std::to_string(a.c[i].v);
        if (i > 0) {
            if (!unit) out += "*";
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace codedesign
