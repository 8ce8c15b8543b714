#ifndef CODEDESIGN_FIELD_HPP
#define CODEDESIGN_FIELD_HPP

#include <cstdint>
#include <vector>

#include "codedesign/common.hpp"

namespace codedesign {

// One element of GF(p^m). The value is the canonical base-p packing of the
// coefficient vector: v = sum coeffs[i] * p^i, every coeffs[i] in [0, p).
// Equality is representation equality; arithmetic goes through the owning
// FieldContext (an element does not know its field).
struct FieldElement {
    std::uint64_t v = 0;
    friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

enum class FieldPolicy { SmallestPrime, SmallestPrimePower, Forced };

// Immutable description of GF(p^m) plus its arithmetic. For m >= 2 the field
// is F_p[x]/(modulus) with a monic irreducible modulus found deterministically
// (least encoding among monic irreducibles of degree m). Small extension
// fields carry exp/log tables; prime fields always use direct modular
// arithmetic, which keeps the 61-bit identity-testing prime cheap to build.
class FieldContext {
public:
    // policy Forced requires forced_q to be a prime power >= min_size.
    static FieldContext make(std::uint64_t min_size, FieldPolicy policy,
                             std::uint64_t forced_q = 0);
    static FieldContext prime_field(std::uint64_t p);
    static FieldContext extension_field(std::uint64_t p, unsigned m);

    // Relaxed-degree construction for internal scratch fields (identity
    // testing over an extension of the design field). Not part of the user
    // surface; still bounded by q <= 2^62.
    static FieldContext extension_field_internal(std::uint64_t p, unsigned m);

    std::uint64_t p() const { return p_; }
    unsigned m() const { return m_; }
    std::uint64_t q() const { return q_; }
    // Ascending-degree coefficients, length m+1, monic; empty when m == 1.
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }

    FieldElement zero() const { return {0}; }
    FieldElement one() const { return {1}; }
    bool is_zero(FieldElement a) const { return a.v == 0; }

    FieldElement element(std::uint64_t encoding) const;  // bounds-checked
    FieldElement scalar(std::uint64_t c) const { return {c % p_}; }

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement inv(FieldElement a) const;  // throws std::domain_error on 0
    FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
    FieldElement pow(FieldElement a, std::uint64_t e) const;

    std::vector<std::uint64_t> coeffs(FieldElement a) const;
    FieldElement from_coeffs(const std::vector<std::uint64_t>& digits) const;

    // All q elements in encoding order: 0, 1, 2, ...
    std::vector<FieldElement> enumerate() const;

    bool same_field(const FieldContext& o) const {
        return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_;
    }

private:
    FieldContext() = default;
    static FieldContext build(std::uint64_t p, unsigned m, bool internal);
    void build_tables();
    FieldElement mul_generic(FieldElement a, FieldElement b) const;

    std::uint64_t p_ = 0;
    unsigned m_ = 1;
    std::uint64_t q_ = 0;
    std::vector<std::uint64_t> modulus_;
    // exp_[i] = g^i for a fixed primitive g, i in [0, q-1); log_ inverts it.
    std::vector<std::uint64_t> exp_;
    std::vector<std::uint64_t> log_;
};

namespace numbers {

bool is_prime(std::uint64_t n);
std::uint64_t next_prime(std::uint64_t n);                   // least prime >= n
std::uint64_t next_prime_power(std::uint64_t n);             // least prime power >= n
bool is_prime_power(std::uint64_t n, std::uint64_t* base, unsigned* exponent);
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t mod);

}  // namespace numbers

}  // namespace codedesign

#endif
