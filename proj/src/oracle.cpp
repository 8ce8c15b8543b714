#include "codedesign/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

#include "codedesign/sylvester.hpp"

namespace codedesign {

int min_distance_bruteforce(const FieldMatrix& g, const Caps& caps,
                            int early_exit_at) {
    const auto& F = g.field();
    const std::size_t k = g.rows();
    const std::size_t n = g.cols();
    if (k == 0) throw std::invalid_argument("generator needs at least one row");

    unsigned __int128 work = 1;
    for (std::size_t i = 0; i < k; ++i) {
        work *= F.q();
        if (work > caps.bruteforce)
            throw CapExceededError("distance scan over q^k messages exceeds cap");
    }

    // Odometer over message digits, least significant first; the codeword
    // follows incrementally, so each step costs O(n) regardless of carries.
    std::vector<std::uint64_t> digits(k, 0);
    std::vector<FieldElement> word(n, F.zero());
    int best = static_cast<int>(n) + 1;
    const std::uint64_t total = static_cast<std::uint64_t>(work);
    for (std::uint64_t step = 1; step < total; ++step) {
        std::size_t i = 0;
        for (;; ++i) {
            std::uint64_t old = digits[i];
            std::uint64_t next = old + 1 == F.q() ? 0 : old + 1;
            digits[i] = next;
            FieldElement delta = F.sub(F.element(next), F.element(old));
            for (std::size_t j = 0; j < n; ++j)
                word[j] = F.add(word[j], F.mul(delta, g.at(i, j)));
            if (next != 0) break;  // no carry
        }
        int weight = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (word[j].v != 0) ++weight;
        if (weight < best) {
            best = weight;
            if (best == 0) return 0;
            if (early_exit_at > 0 && best <= early_exit_at) return best;
        }
    }
    assert(best <= static_cast<int>(n));
    return best;
}

bool verify_zero_pattern(const FieldMatrix& g, const ConstraintInstance& inst) {
    inst.validate();
    if (g.rows() != static_cast<std::size_t>(inst.k) ||
        g.cols() != static_cast<std::size_t>(inst.n))
        return false;
    for (int i = 0; i < inst.k; ++i)
        for (int j : inst.sets[i].elements())
            if (g.at(i, j).v != 0) return false;
    return true;
}

OracleReport verify_design(const FieldMatrix& g, const ConstraintInstance& inst,
                           const Caps& caps) {
    OracleReport rep;
    rep.ell = compute_ell(inst, caps);
    rep.expected_distance = singleton_upper_bound(inst.n, rep.ell);

    rep.pattern_ok = verify_zero_pattern(g, inst);
    if (!rep.pattern_ok) {
        rep.detail = "zero pattern violated or shape mismatch";
        return rep;
    }
    rep.rank_ok = g.rank() == static_cast<std::size_t>(inst.k);
    if (!rep.rank_ok) {
        rep.detail = "generator rows are dependent";
        return rep;
    }
    try {
        rep.distance = min_distance_bruteforce(g, caps);
    } catch (const CapExceededError&) {
        rep.distance_skipped = true;
        rep.ok = true;  // pattern and rank hold; distance unknown
        return rep;
    }
    if (*rep.distance != rep.expected_distance) {
        rep.detail = "distance " + std::to_string(*rep.distance) +
                     " differs from target " +
                     std::to_string(rep.expected_distance);
        return rep;
    }
    rep.ok = true;
    return rep;
}

bool det_identity_oracle(const GeneralInstance& inst, std::uint64_t seed,
                         int trials) {
    inst.validate();
    static const FieldContext F =
        FieldContext::prime_field((1ull << 61) - 1);
    DetRng rng(seed, 0x6f7261636c65ull);  // fixed stream, one per oracle call
    for (int t = 0; t < trials; ++t) {
        std::vector<FieldElement> alpha;
        alpha.reserve(inst.n);
        for (int j = 0; j < inst.n; ++j)
            alpha.push_back(F.element(rng.next_below(F.q())));
        if (!F.is_zero(sylvester_det(F, inst, alpha))) return true;
    }
    return false;
}

std::vector<GeneralInstance> enumerate_general_instances(int k_max, int n_max,
                                                         const Caps& caps) {
    if (k_max < 1 || n_max < 0)
        throw std::invalid_argument("enumeration needs k_max >= 1, n_max >= 0");
    if (k_max > caps.enum_k || n_max > caps.enum_n)
        throw CapExceededError("instance enumeration beyond caps");

    std::vector<GeneralInstance> out;
    for (int k = 1; k <= k_max; ++k) {
        for (int n = 0; n <= n_max; ++n) {
            // Compositions of k, first part outermost, each part >= 1.
            std::vector<int> parts;
            auto emit_sets = [&](auto&& self, std::size_t row,
                                 GeneralInstance& inst) -> void {
                if (row == parts.size()) {
                    out.push_back(inst);
                    return;
                }
                const int limit = k - parts[row];
                for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
                    if (std::popcount(mask) > limit) continue;
                    IndexSet s(n);
                    for (int j = 0; j < n; ++j)
                        if (mask & (1ull << j)) s.insert(j);
                    inst.rows[row] = {std::move(s), parts[row]};
                    self(self, row + 1, inst);
                }
            };
            auto compose = [&](auto&& self, int remaining) -> void {
                if (remaining == 0) {
                    GeneralInstance inst;
                    inst.k = k;
                    inst.n = n;
                    inst.rows.assign(parts.size(), {IndexSet(n), 1});
                    for (std::size_t i = 0; i < parts.size(); ++i)
                        inst.rows[i].multiplicity = parts[i];
                    emit_sets(emit_sets, 0, inst);
                    return;
                }
                for (int part = 1; part <= remaining; ++part) {
                    parts.push_back(part);
                    self(self, remaining - part);
                    parts.pop_back();
                }
            };
            compose(compose, k);
        }
    }
    return out;
}

namespace {

ConstraintInstance sample_instance(int k, int n, DetRng& rng, int density_pct,
                                   int max_set_size) {
    ConstraintInstance inst{k, n, {}};
    for (int i = 0; i < k; ++i) {
        IndexSet s(n);
        for (int j = 0; j < n; ++j)
            if (rng.next_below(100) < static_cast<std::uint64_t>(density_pct) &&
                static_cast<int>(s.size()) < max_set_size)
                s.insert(j);
        inst.sets.push_back(std::move(s));
    }
    return inst;
}

}  // namespace

ConstraintInstance random_feasible_instance(int k, int n, DetRng& rng,
                                            int density_pct, const Caps& caps) {
    if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
    for (int attempt = 0; attempt < 10000; ++attempt) {
        auto inst = sample_instance(k, n, rng, density_pct, n);
        if (compute_ell(inst, caps) <= n) return inst;
    }
    throw InfeasibleError("no feasible instance found for k = " +
                          std::to_string(k) + ", n = " + std::to_string(n));
}

ConstraintInstance random_gmmds_instance(int k, int n, DetRng& rng,
                                         int density_pct, const Caps& caps) {
    if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
    for (int attempt = 0; attempt < 10000; ++attempt) {
        auto inst = sample_instance(k, n, rng, density_pct, k - 1);
        if (check_gmmds(inst, caps).ok) return inst;
    }
    throw InfeasibleError("no fully feasible instance found for k = " +
                          std::to_string(k) + ", n = " + std::to_string(n));
}

}  // namespace codedesign
