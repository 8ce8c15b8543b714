#include "codedesign/field.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

namespace codedesign {

namespace numbers {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % mod);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t mod) {
    std::uint64_t r = 1 % mod;
    a %= mod;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, mod);
        a = mulmod(a, a, mod);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin; this base set decides every n < 2^64.
bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i + 1 < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::uint64_t next_prime(std::uint64_t n) {
    if (n < 2) return 2;
    for (std::uint64_t c = n;; ++c) {
        if (is_prime(c)) return c;
    }
}

namespace {

// Floor of the e-th root, exact via binary search (no floating point).
std::uint64_t iroot(std::uint64_t n, unsigned e) {
    if (e == 1) return n;
    std::uint64_t lo = 1, hi = n;
    while (lo < hi) {
        std::uint64_t mid = lo + (hi - lo + 1) / 2;
        // Does mid^e fit and stay <= n?
        unsigned __int128 acc = 1;
        bool over = false;
        for (unsigned i = 0; i < e; ++i) {
            acc *= mid;
            if (acc > n) {
                over = true;
                break;
            }
        }
        if (over)
            hi = mid - 1;
        else
            lo = mid;
    }
    return lo;
}

}  // namespace

bool is_prime_power(std::uint64_t n, std::uint64_t* base, unsigned* exponent) {
    if (n < 2) return false;
    if (is_prime(n)) {
        if (base) *base = n;
        if (exponent) *exponent = 1;
        return true;
    }
    for (unsigned e = 2; e < 64; ++e) {
        std::uint64_t r = iroot(n, e);
        if (r < 2) break;
        unsigned __int128 acc = 1;
        for (unsigned i = 0; i < e; ++i) acc *= r;
        if (acc == n && is_prime(r)) {
            if (base) *base = r;
            if (exponent) *exponent = e;
            return true;
        }
    }
    return false;
}

std::uint64_t next_prime_power(std::uint64_t n) {
    if (n < 2) return 2;
    for (std::uint64_t c = n;; ++c) {
        if (is_prime_power(c, nullptr, nullptr)) return c;
    }
}

}  // namespace numbers

namespace {

using Digits = std::vector<std::uint64_t>;

// --- dense polynomials over Z_p, used only for modulus search ------------
// Coefficients ascending, no trailing zeros. p here is always <= 2^20 so
// products of two residues fit comfortably in 64 bits.

void trim(Digits& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Digits poly_mul(const Digits& a, const Digits& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Digits r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return r;
}

Digits poly_mod(Digits a, const Digits& f, std::uint64_t p) {
    // f monic.
    assert(!f.empty() && f.back() == 1);
    while (a.size() >= f.size()) {
        std::uint64_t c = a.back();
        std::size_t shift = a.size() - f.size();
        if (c != 0) {
            for (std::size_t i = 0; i + 1 < f.size(); ++i) {
                std::uint64_t t = c * f[i] % p;
                std::uint64_t& dst = a[shift + i];
                dst = (dst + p - t) % p;
            }
        }
        a.pop_back();
        trim(a);
    }
    return a;
}

Digits poly_mulmod(const Digits& a, const Digits& b, const Digits& f,
                   std::uint64_t p) {
    return poly_mod(poly_mul(a, b, p), f, p);
}

Digits poly_powmod(Digits base, std::uint64_t e, const Digits& f,
                   std::uint64_t p) {
    Digits r = {1};
    base = poly_mod(std::move(base), f, p);
    while (e > 0) {
        if (e & 1) r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

Digits poly_gcd(Digits a, Digits b, std::uint64_t p) {
    while (!b.empty()) {
        // Make b monic so poly_mod applies.
        std::uint64_t lead = b.back();
        if (lead != 1) {
            std::uint64_t il = numbers::powmod(lead, p - 2, p);
            for (auto& c : b) c = c * il % p;
        }
        Digits r = poly_mod(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Rabin's test: f (monic, degree m) is irreducible over Z_p iff
// x^(p^m) == x (mod f) and gcd(x^(p^(m/l)) - x, f) = 1 for each prime l | m.
bool poly_irreducible(const Digits& f, std::uint64_t p) {
    const unsigned m = static_cast<unsigned>(f.size()) - 1;
    if (m == 0) return false;
    const Digits x = {0, 1};

    // Frobenius powers by repeated p-th powering: frob[j] = x^(p^j) mod f.
    std::vector<Digits> frob(m + 1);
    frob[0] = poly_mod(x, f, p);
    for (unsigned j = 1; j <= m; ++j)
        frob[j] = poly_powmod(frob[j - 1], p, f, p);

    if (frob[m] != poly_mod(x, f, p)) return false;

    unsigned mm = m;
    for (unsigned l = 2; l * l <= mm; ++l) {
        if (mm % l != 0) continue;
        while (mm % l == 0) mm /= l;
        Digits g = frob[m / l];
        // g - x
        if (g.size() < 2) g.resize(2, 0);
        g[1] = (g[1] + p - 1) % p;
        trim(g);
        Digits d = poly_gcd(f, std::move(g), p);
        if (d.size() != 1) return false;
    }
    if (mm > 1) {
        Digits g = frob[m / mm];
        if (g.size() < 2) g.resize(2, 0);
        g[1] = (g[1] + p - 1) % p;
        trim(g);
        Digits d = poly_gcd(f, std::move(g), p);
        if (d.size() != 1) return false;
    }
    return true;
}

Digits decode_digits(std::uint64_t v, std::uint64_t p, unsigned m) {
    Digits d(m, 0);
    for (unsigned i = 0; i < m; ++i) {
        d[i] = v % p;
        v /= p;
    }
    return d;
}

// Least monic irreducible of degree m, ordered by the base-p encoding of the
// lower coefficients. Existence is classical; the loop always terminates.
Digits find_modulus(std::uint64_t p, unsigned m) {
    unsigned __int128 count = 1;
    for (unsigned i = 0; i < m; ++i) count *= p;
    for (unsigned __int128 c = 0; c < count; ++c) {
        Digits f = decode_digits(static_cast<std::uint64_t>(c), p, m);
        f.push_back(1);
        if (poly_irreducible(f, p)) return f;
    }
    throw SearchBugError("no irreducible polynomial of degree " +
                         std::to_string(m) + " over GF(" + std::to_string(p) +
                         ")");
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

}  // namespace

FieldContext FieldContext::build(std::uint64_t p, unsigned m, bool internal) {
    if (!numbers::is_prime(p)) {
        throw std::invalid_argument("field characteristic must be prime, got " +
                                    std::to_string(p));
    }
    if (m == 0) throw std::invalid_argument("field extension degree must be >= 1");
    if (m == 1) {
        if (p > kMaxPrime)
            throw CapExceededError("prime field size exceeds 2^62");
    } else {
        if (p > kMaxPrimeExt)
            throw CapExceededError(
                "extension field characteristic exceeds 2^20");
        const unsigned degree_cap = internal ? 2 * kMaxExtDegree : kMaxExtDegree;
        if (m > degree_cap)
            throw CapExceededError("extension degree " + std::to_string(m) +
                                   " exceeds cap " + std::to_string(degree_cap));
    }
    unsigned __int128 q = 1;
    for (unsigned i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxFieldSize) throw CapExceededError("field size exceeds 2^62");
    }

    FieldContext F;
    F.p_ = p;
    F.m_ = m;
    F.q_ = static_cast<std::uint64_t>(q);
    if (m >= 2) {
        F.modulus_ = find_modulus(p, m);
        if (F.q_ <= kTableFieldCap) F.build_tables();
    }
    return F;
}

FieldContext FieldContext::prime_field(std::uint64_t p) { return build(p, 1, false); }

FieldContext FieldContext::extension_field(std::uint64_t p, unsigned m) {
    return build(p, m, false);
}

FieldContext FieldContext::extension_field_internal(std::uint64_t p, unsigned m) {
    return build(p, m, true);
}

FieldContext FieldContext::make(std::uint64_t min_size, FieldPolicy policy,
                                std::uint64_t forced_q) {
    if (min_size < 2) min_size = 2;
    if (min_size > kMaxFieldSize)
        throw CapExceededError("requested field size exceeds 2^62");
    switch (policy) {
        case FieldPolicy::SmallestPrime:
            return prime_field(numbers::next_prime(min_size));
        case FieldPolicy::SmallestPrimePower: {
            std::uint64_t q = min_size;
            for (;;) {
                std::uint64_t p = 0;
                unsigned m = 0;
                if (numbers::is_prime_power(q, &p, &m)) {
                    // Skip prime powers our extension caps rule out, e.g.
                    // 2^40 is a prime power but m = 40 is not constructible.
                    if (m == 1 || (p <= kMaxPrimeExt && m <= kMaxExtDegree))
                        return build(p, m, false);
                }
                ++q;
            }
        }
        case FieldPolicy::Forced: {
            std::uint64_t p = 0;
            unsigned m = 0;
            if (!numbers::is_prime_power(forced_q, &p, &m))
                throw std::invalid_argument(
                    "forced field size " + std::to_string(forced_q) +
                    " is not a prime power");
            if (forced_q < min_size)
                throw InfeasibleError("forced field size " +
                                      std::to_string(forced_q) +
                                      " is below the required minimum " +
                                      std::to_string(min_size));
            return build(p, m, false);
        }
    }
    throw std::logic_error("unreachable field policy");
}

void FieldContext::build_tables() {
    // Find a primitive element by order testing against q-1's prime factors.
    const std::uint64_t n = q_ - 1;
    const auto factors = distinct_prime_factors(n);
    std::uint64_t g = 0;
    for (std::uint64_t cand = 1; cand < q_; ++cand) {
        FieldElement c{cand};
        bool primitive = true;
        for (std::uint64_t f : factors) {
            if (pow(c, n / f).v == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            g = cand;
            break;
        }
    }
    assert(g != 0);

    exp_.assign(n, 0);
    log_.assign(q_, 0);
    FieldElement acc = one();
    for (std::uint64_t i = 0; i < n; ++i) {
        exp_[i] = acc.v;
        log_[acc.v] = i;
        acc = mul_generic(acc, FieldElement{g});
    }
    assert(acc.v == 1);
}

FieldElement FieldContext::element(std::uint64_t encoding) const {
    if (encoding >= q_)
        throw std::invalid_argument("element encoding " +
                                    std::to_string(encoding) +
                                    " out of range for field of size " +
                                    std::to_string(q_));
    return {encoding};
}

FieldElement FieldContext::add(FieldElement a, FieldElement b) const {
    assert(a.v < q_ && b.v < q_);
    if (m_ == 1) {
        std::uint64_t s = a.v + b.v;  // p <= 2^62, no overflow
        if (s >= p_) s -= p_;
        return {s};
    }
    if (p_ == 2) return {a.v ^ b.v};
    std::uint64_t r = 0, scale = 1, av = a.v, bv = b.v;
    for (unsigned i = 0; i < m_; ++i) {
        std::uint64_t s = av % p_ + bv % p_;
        if (s >= p_) s -= p_;
        r += s * scale;
        av /= p_;
        bv /= p_;
        scale *= p_;
    }
    return {r};
}

FieldElement FieldContext::neg(FieldElement a) const {
    assert(a.v < q_);
    if (m_ == 1) return {a.v == 0 ? 0 : p_ - a.v};
    if (p_ == 2) return a;
    std::uint64_t r = 0, scale = 1, av = a.v;
    for (unsigned i = 0; i < m_; ++i) {
        std::uint64_t d = av % p_;
        r += (d == 0 ? 0 : p_ - d) * scale;
        av /= p_;
        scale *= p_;
    }
    return {r};
}

FieldElement FieldContext::sub(FieldElement a, FieldElement b) const {
    return add(a, neg(b));
}

FieldElement FieldContext::mul_generic(FieldElement a, FieldElement b) const {
    // Schoolbook product of digit vectors, then reduction by the monic
    // modulus. Only reached for m >= 2, so p <= 2^20 and products fit.
    Digits da = decode_digits(a.v, p_, m_);
    Digits db = decode_digits(b.v, p_, m_);
    Digits prod(2 * m_ - 1, 0);
    for (unsigned i = 0; i < m_; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < m_; ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    }
    for (unsigned i = 2 * m_ - 2; i >= m_; --i) {
        std::uint64_t c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (unsigned t = 0; t < m_; ++t) {
            std::uint64_t sub = c * modulus_[t] % p_;
            std::uint64_t& dst = prod[i - m_ + t];
            dst = (dst + p_ - sub) % p_;
        }
    }
    std::uint64_t r = 0, scale = 1;
    for (unsigned i = 0; i < m_; ++i) {
        r += prod[i] * scale;
        scale *= p_;
    }
    return {r};
}

FieldElement FieldContext::mul(FieldElement a, FieldElement b) const {
    assert(a.v < q_ && b.v < q_);
    if (m_ == 1) return {numbers::mulmod(a.v, b.v, p_)};
    if (!exp_.empty()) {
        if (a.v == 0 || b.v == 0) return {0};
        std::uint64_t e = log_[a.v] + log_[b.v];
        if (e >= q_ - 1) e -= q_ - 1;
        return {exp_[e]};
    }
    return mul_generic(a, b);
}

FieldElement FieldContext::inv(FieldElement a) const {
    if (a.v == 0) throw std::domain_error("division by zero field element");
    if (m_ == 1) return {numbers::powmod(a.v, p_ - 2, p_)};
    if (!exp_.empty()) {
        std::uint64_t e = (q_ - 1 - log_[a.v]) % (q_ - 1);
        return {exp_[e]};
    }
    return pow(a, q_ - 2);
}

FieldElement FieldContext::pow(FieldElement a, std::uint64_t e) const {
    if (m_ == 1) return {numbers::powmod(a.v, e, p_)};
    FieldElement r = one();
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::vector<std::uint64_t> FieldContext::coeffs(FieldElement a) const {
    assert(a.v < q_);
    return decode_digits(a.v, p_, m_);
}

FieldElement FieldContext::from_coeffs(
    const std::vector<std::uint64_t>& digits) const {
    if (digits.size() > m_)
        throw std::invalid_argument("coefficient vector longer than degree");
    std::uint64_t r = 0, scale = 1;
    for (unsigned i = 0; i < m_; ++i) {
        std::uint64_t d = i < digits.size() ? digits[i] % p_ : 0;
        r += d * scale;
        scale *= p_;
    }
    return {r};
}

std::vector<FieldElement> FieldContext::enumerate() const {
    if (q_ > kMaxBruteforceWork)
        throw CapExceededError("field too large to enumerate");
    std::vector<FieldElement> all(q_);
    for (std::uint64_t i = 0; i < q_; ++i) all[i] = {i};
    return all;
}

}  // namespace codedesign
