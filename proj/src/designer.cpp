#include "codedesign/designer.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>

#include "codedesign/oracle.hpp"
#include "codedesign/poly.hpp"
#include "codedesign/rng.hpp"
#include "codedesign/sylvester.hpp"

namespace codedesign {
namespace {

constexpr std::uint64_t kPointStream = 0x706f696e7473ull;
constexpr std::uint64_t kCertStream = 0x63657274ull;

// Certification fields smaller than this leave Schwartz-Zippel too little
// room; the oracle extends the design field until it clears the bar.
constexpr std::uint64_t kMinCertField = 1ull << 17;

constexpr long kMaxCertCalls = 1'000'000;

Poly powmod_in_ring(const PolyRing& R, Poly base, std::uint64_t e,
                    const Poly& f) {
    Poly acc = R.one();
    base = R.divmod(base, f).second;
    while (e > 0) {
        if (e & 1) acc = R.divmod(R.mul(acc, base), f).second;
        base = R.divmod(R.mul(base, base), f).second;
        e >>= 1;
    }
    return acc;
}

// Decides whether the coefficient determinant, with a prefix of the points
// pinned and the rest left open, is still a nonzero polynomial. Open points
// are drawn fresh per trial; pinned design-field values are carried across
// by a ring embedding when the work field is a proper extension.
class CertOracle {
public:
    CertOracle(const FieldContext& design, GeneralInstance rows, DetRng rng)
        : design_(&design), rows_(std::move(rows)), rng_(rng) {
        if (design.q() >= kMinCertField) return;
        unsigned s = 1;
        std::uint64_t size = design.q();
        while (size < kMinCertField) {
            size *= design.q();
            ++s;
        }
        ext_.emplace(
            FieldContext::extension_field_internal(design.p(), design.m() * s));
        if (design.m() > 1) find_theta();
    }

    // A full assignment has no open points, so one evaluation is exact.
    bool alive(const std::vector<FieldElement>& pinned, int trials) {
        const FieldContext& K = work();
        std::vector<FieldElement> point(rows_.n);
        for (std::size_t i = 0; i < pinned.size(); ++i)
            point[i] = lift(pinned[i]);
        if (pinned.size() == point.size()) trials = 1;
        for (int t = 0; t < trials; ++t) {
            for (std::size_t i = pinned.size(); i < point.size(); ++i)
                point[i] = K.element(rng_.next_below(K.q()));
            if (!K.is_zero(sylvester_det(K, rows_, point))) return true;
        }
        return false;
    }

private:
    const FieldContext& work() const { return ext_ ? *ext_ : *design_; }

    FieldElement lift(FieldElement a) const {
        if (!ext_) return a;
        if (design_->m() == 1) return ext_->scalar(a.v);
        FieldElement acc = ext_->zero();
        auto digits = design_->coeffs(a);
        for (std::size_t i = digits.size(); i-- > 0;)
            acc = ext_->add(ext_->mul(acc, theta_), ext_->scalar(digits[i]));
        return acc;
    }

    // Plants the design modulus in the extension and splits off one root by
    // random gcds. The modulus is irreducible over the prime field and its
    // degree divides the extension degree, so it factors into distinct
    // linear pieces here and each split succeeds with constant probability.
    void find_theta() {
        const FieldContext& K = *ext_;
        PolyRing R(K);
        std::vector<FieldElement> cs;
        cs.reserve(design_->modulus().size());
        for (std::uint64_t d : design_->modulus()) cs.push_back(K.scalar(d));
        Poly f = R.make(std::move(cs));
        DetRng rng = rng_.fork(0x74686574ull);
        for (int guard = 0; f.degree() > 1; ++guard) {
            if (guard > 256)
                throw SearchBugError(
                    "embedding root search did not converge");
            Poly g;
            if (K.p() == 2) {
                std::vector<FieldElement> uc(f.degree());
                for (auto& c : uc) c = K.element(rng.next_below(K.q()));
                Poly u = R.make(std::move(uc));
                Poly acc = u;
                Poly pw = u;
                for (unsigned i = 1; i < K.m(); ++i) {
                    pw = R.divmod(R.mul(pw, pw), f).second;
                    acc = R.add(acc, pw);
                }
                g = R.gcd(acc, f);
            } else {
                FieldElement a = K.element(rng.next_below(K.q()));
                Poly w = powmod_in_ring(R, R.make({a, K.one()}),
                                        (K.q() - 1) / 2, f);
                g = R.gcd(R.sub(w, R.one()), f);
            }
            if (g.degree() > 0 && g.degree() < f.degree())
                f = 2 * g.degree() <= f.degree() ? g : R.div_exact(f, g);
        }
        theta_ = K.neg(K.div(f.c[0], f.c[1]));
    }

    const FieldContext* design_;
    std::optional<FieldContext> ext_;
    FieldElement theta_{0};
    GeneralInstance rows_;
    DetRng rng_;
};

std::vector<FieldElement> random_distinct(const FieldContext& F, DetRng& rng,
                                          int n) {
    std::vector<FieldElement> out;
    out.reserve(n);
    std::uint64_t q = F.q();
    if (q <= (1ull << 16) || q < 2 * static_cast<std::uint64_t>(n)) {
        for (std::uint64_t e : rng.sample_distinct(q, n))
            out.push_back(F.element(e));
        return out;
    }
    std::unordered_set<std::uint64_t> seen;
    while (out.size() < static_cast<std::size_t>(n)) {
        std::uint64_t e = rng.next_below(q);
        if (seen.insert(e).second) out.push_back(F.element(e));
    }
    return out;
}

std::vector<FieldElement> search_points(const FieldContext& F,
                                        const std::vector<IndexSet>& extended,
                                        int n, const DesignOptions& opts,
                                        bool guaranteed, SearchStats* stats) {
    const int ell = static_cast<int>(extended.size());
    DetRng rng(opts.seed, kPointStream);

    auto accepts = [&](const std::vector<FieldElement>& alpha) {
        return !F.is_zero(coefficient_matrix(F, extended, alpha).det());
    };

    for (int a = 0; a < opts.random_attempts; ++a) {
        std::vector<FieldElement> alpha = random_distinct(F, rng, n);
        stats->random_attempts_used = a + 1;
        if (accepts(alpha)) return alpha;
    }
    stats->systematic = true;

    // Systematic phase: fix one point at a time, keeping the determinant
    // polynomial alive in the open variables. Each point occurs in at most
    // ell - 1 of the completed sets, so at most ell - 1 values kill the
    // polynomial and at most n - 1 are already taken; a pool of n + ell - 1
    // distinct candidates per position cannot run dry.
    GeneralInstance rows;
    rows.k = ell;
    rows.n = n;
    rows.rows.reserve(extended.size());
    for (const auto& s : extended) rows.rows.push_back({s, 1});
    CertOracle cert(F, rows, DetRng(opts.seed, kCertStream));

    std::uint64_t pool = F.q();
    if (guaranteed)
        pool = std::min<std::uint64_t>(pool,
                                       static_cast<std::uint64_t>(n) + ell - 1);
    auto bail = [&] {
        if (guaranteed)
            throw SearchBugError(
                "point search failed in a field large enough to guarantee "
                "success");
        throw InfeasibleError(
            "no valid point assignment found; field size " +
            std::to_string(F.q()) + " is below the guaranteed size " +
            std::to_string(static_cast<std::uint64_t>(n) + ell - 1));
    };

    long calls = 0;
    std::vector<FieldElement> alpha;
    alpha.reserve(n);
    std::vector<char> used(pool, 0);
    std::function<bool()> extend = [&] {
        if (alpha.size() == static_cast<std::size_t>(n)) return accepts(alpha);
        for (std::uint64_t idx = 0; idx < pool; ++idx) {
            if (used[idx]) continue;
            alpha.push_back(F.element(idx));
            if (++calls > kMaxCertCalls) bail();
            if (cert.alive(alpha, opts.pit_trials)) {
                used[idx] = 1;
                if (extend()) return true;
                used[idx] = 0;
            }
            alpha.pop_back();
        }
        return false;
    };
    if (extend()) return alpha;
    bail();
    return {};  // unreachable
}

}  // namespace

std::vector<IndexSet> complete_sets(const ConstraintInstance& inst,
                                    const Caps& caps) {
    inst.validate();
    if (inst.k != compute_ell(inst, caps))
        throw std::invalid_argument("complete_sets: instance must be feasible");
    const std::size_t target = static_cast<std::size_t>(inst.k) - 1;
    ConstraintInstance work = inst;
    for (int i = 0; i < inst.k; ++i) {
        for (int j = 0; j < inst.n && work.sets[i].size() < target; ++j) {
            if (work.sets[i].contains(j)) continue;
            work.sets[i].insert(j);
            if (!check_gmmds(work, caps).ok) work.sets[i].erase(j);
        }
        if (work.sets[i].size() != target)
            throw SearchBugError(
                "set completion dead-ended on a feasible family");
    }
    return work.sets;
}

FieldMatrix coefficient_matrix(const FieldContext& F,
                               const std::vector<IndexSet>& sets,
                               const std::vector<FieldElement>& alpha) {
    const std::size_t ell = sets.size();
    PolyRing R(F);
    FieldMatrix t(F, ell, ell);
    for (std::size_t i = 0; i < ell; ++i) {
        if (sets[i].size() + 1 != ell)
            throw std::invalid_argument(
                "coefficient_matrix: sets must have size ell - 1");
        std::vector<FieldElement> pts;
        pts.reserve(sets[i].size());
        for (int j : sets[i].elements()) pts.push_back(alpha.at(j));
        Poly f = R.from_constraint_roots(pts);
        for (std::size_t c = 0; c < ell; ++c) t.at(i, c) = f.coeff(c);
    }
    return t;
}

CodeDesign design_code(const ConstraintInstance& inst,
                       const DesignOptions& opts, const Caps& caps) {
    inst.validate();
    const int n = inst.n;
    const int ell = compute_ell(inst, caps);
    const int distance = singleton_upper_bound(n, ell);
    if (distance < 1)
        throw InfeasibleError("zero pattern admits no code: ell = " +
                              std::to_string(ell) + " exceeds n = " +
                              std::to_string(n));

    std::vector<IndexSet> extended =
        complete_sets(pad_to_ell(inst, ell), caps);

    const std::uint64_t min_size = static_cast<std::uint64_t>(n) + ell - 1;
    std::shared_ptr<const FieldContext> field;
    bool guaranteed = true;
    if (opts.policy == FieldPolicy::Forced) {
        // A forced field only has to seat n distinct points; below the
        // guaranteed size the search may still get lucky.
        field = std::make_shared<FieldContext>(
            FieldContext::make(std::max<std::uint64_t>(2, n),
                               FieldPolicy::Forced, opts.forced_q));
        guaranteed = field->q() >= min_size;
    } else {
        field = std::make_shared<FieldContext>(FieldContext::make(
            std::max<std::uint64_t>(2, min_size), opts.policy));
    }

    SearchStats stats;
    std::vector<FieldElement> alpha =
        search_points(*field, extended, n, opts, guaranteed, &stats);

    FieldMatrix t_full = coefficient_matrix(*field, extended, alpha);
    auto t_inv = t_full.inverse();
    if (!t_inv)
        throw SearchBugError(
            "accepted points left the coefficient matrix singular");

    std::vector<FieldElement> beta(n);
    for (int j = 0; j < n; ++j) beta[j] = field->neg(alpha[j]);
    FieldMatrix generator_full =
        t_full.mul(FieldMatrix::vandermonde(*field, ell, beta));
    FieldMatrix generator(*field, inst.k, n);
    for (int i = 0; i < inst.k; ++i)
        for (int j = 0; j < n; ++j) generator.at(i, j) = generator_full.at(i, j);
    if (!verify_zero_pattern(generator, inst))
        throw SearchBugError(
            "constructed generator violates its own zero pattern");

    return CodeDesign{inst,
                      opts,
                      std::move(field),
                      ell,
                      distance,
                      std::move(extended),
                      std::move(alpha),
                      std::move(t_full),
                      std::move(*t_inv),
                      std::move(generator_full),
                      std::move(generator),
                      stats};
}

std::vector<FieldElement> evaluation_points(const CodeDesign& d) {
    std::vector<FieldElement> beta(d.alpha.size());
    for (std::size_t j = 0; j < beta.size(); ++j)
        beta[j] = d.field->neg(d.alpha[j]);
    return beta;
}

std::vector<FieldElement> encode(const CodeDesign& d,
                                 const std::vector<FieldElement>& message) {
    if (message.size() != static_cast<std::size_t>(d.instance.k))
        throw std::invalid_argument("encode: message must have k symbols");
    return d.generator.left_mul(message);
}

std::optional<std::vector<FieldElement>> decode(
    const CodeDesign& d, const std::vector<FieldElement>& received) {
    const FieldContext& F = *d.field;
    const int n = d.instance.n;
    const int ell = d.ell;
    const int k = d.instance.k;
    if (received.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("decode: received word must have n symbols");
    PolyRing R(F);
    std::vector<FieldElement> beta = evaluation_points(d);

    std::vector<std::pair<FieldElement, FieldElement>> pts(n);
    for (int j = 0; j < n; ++j) pts[j] = {beta[j], received[j]};
    Poly g1 = R.interpolate(pts);

    // Truncated Euclid on (prod (x - beta_j), interpolant): the first
    // remainder under (n + ell) / 2 divided by its interpolant cofactor is
    // the message polynomial whenever the error count is within radius.
    Poly f;
    if (!g1.is_zero()) {
        Poly g0 = R.from_roots(beta);
        auto eea = R.gcd_partial(g0, g1, (n + ell + 1) / 2);
        if (eea.v.is_zero()) return std::nullopt;
        auto [quot, rem] = R.divmod(eea.r, eea.v);
        if (!rem.is_zero()) return std::nullopt;
        f = std::move(quot);
    }
    if (f.degree() > ell - 1) return std::nullopt;

    int mismatches = 0;
    for (int j = 0; j < n; ++j)
        if (R.eval(f, beta[j]) != received[j]) ++mismatches;
    if (mismatches > correctable_errors(d)) return std::nullopt;

    // Codeword found; pull it back through T and insist the padding rows
    // carried no payload.
    std::vector<FieldElement> z(ell, F.zero());
    for (int i = 0; i <= f.degree(); ++i) z[i] = f.c[i];
    std::vector<FieldElement> m_full = d.t_full_inverse.left_mul(z);
    for (int i = k; i < ell; ++i)
        if (!F.is_zero(m_full[i])) return std::nullopt;
    m_full.resize(k);
    return m_full;
}

}  // namespace codedesign
