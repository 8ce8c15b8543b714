#include "codedesign/constraints.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>
#include <string>

namespace codedesign {

IndexSet::IndexSet(std::size_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {}

IndexSet IndexSet::of(std::size_t universe, std::initializer_list<int> xs) {
    IndexSet s(universe);
    for (int x : xs) s.insert(x);
    return s;
}

IndexSet IndexSet::from_indices(std::size_t universe,
                                const std::vector<int>& xs) {
    IndexSet s(universe);
    for (int x : xs) s.insert(x);
    return s;
}

bool IndexSet::contains(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= universe_) return false;
    return (words_[i / 64] >> (i % 64)) & 1;
}

void IndexSet::insert(int i) {
    if (i < 0 || static_cast<std::size_t>(i) >= universe_)
        throw std::out_of_range("index " + std::to_string(i) +
                                " outside universe of size " +
                                std::to_string(universe_));
    words_[i / 64] |= 1ull << (i % 64);
}

void IndexSet::erase(int i) {
    if (i < 0 || static_cast<std::size_t>(i) >= universe_) return;
    words_[i / 64] &= ~(1ull << (i % 64));
}

std::size_t IndexSet::size() const {
    std::size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

void IndexSet::intersect_with(const IndexSet& o) {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
}

void IndexSet::union_with(const IndexSet& o) {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
}

bool IndexSet::is_subset_of(const IndexSet& o) const {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~o.words_[i]) return false;
    return true;
}

IndexSet IndexSet::intersection(const IndexSet& a, const IndexSet& b) {
    IndexSet r = a;
    r.intersect_with(b);
    return r;
}

std::vector<int> IndexSet::elements() const {
    std::vector<int> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits) {
            int b = std::countr_zero(bits);
            out.push_back(static_cast<int>(w * 64 + b));
            bits &= bits - 1;
        }
    }
    return out;
}

void ConstraintInstance::validate() const {
    if (k < 1) throw std::invalid_argument("instance needs k >= 1");
    if (n < 1) throw std::invalid_argument("instance needs n >= 1");
    if (k > n)
        throw std::invalid_argument("instance needs k <= n, got k = " +
                                    std::to_string(k) + ", n = " +
                                    std::to_string(n));
    if (sets.size() != static_cast<std::size_t>(k))
        throw std::invalid_argument("expected k = " + std::to_string(k) +
                                    " constraint sets, got " +
                                    std::to_string(sets.size()));
    for (const auto& s : sets) {
        if (s.universe() != static_cast<std::size_t>(n))
            throw std::invalid_argument(
                "constraint set universe does not match n");
    }
}

void GeneralInstance::validate() const {
    if (rows.empty()) throw std::invalid_argument("instance needs rows");
    if (n < 0) throw std::invalid_argument("instance needs n >= 0");
    int total = 0;
    for (const auto& [s, r] : rows) {
        if (r < 1) throw std::invalid_argument("multiplicities must be >= 1");
        if (s.universe() != static_cast<std::size_t>(n))
            throw std::invalid_argument(
                "constraint set universe does not match n");
        total += r;
    }
    if (total != k)
        throw std::invalid_argument(
            "multiplicities sum to " + std::to_string(total) +
            " but k = " + std::to_string(k));
    for (const auto& [s, r] : rows) {
        if (static_cast<int>(s.size()) > k - r)
            throw std::invalid_argument(
                "set of size " + std::to_string(s.size()) +
                " with multiplicity " + std::to_string(r) +
                " leaves no room in k = " + std::to_string(k));
    }
}

namespace {

void require_enumerable(int k, const Caps& caps) {
    if (k > caps.subset_enum)
        throw CapExceededError("subset sweep over k = " + std::to_string(k) +
                               " rows exceeds cap " +
                               std::to_string(caps.subset_enum));
}

}  // namespace

EllReport compute_ell_report(const ConstraintInstance& inst, const Caps& caps) {
    inst.validate();
    require_enumerable(inst.k, caps);
    EllReport best;
    best.ell = 0;

    std::vector<int> chosen;
    auto dfs = [&](auto&& self, int next, const IndexSet& inter) -> void {
        int depth = static_cast<int>(chosen.size());
        if (depth > 0) {
            int value = static_cast<int>(inter.size()) + depth;
            if (value > best.ell) {
                best.ell = value;
                best.witness = chosen;
            }
        }
        for (int j = next; j < inst.k; ++j) {
            IndexSet next_inter =
                depth == 0 ? inst.sets[j] : IndexSet::intersection(inter, inst.sets[j]);
            // Everything below adds at most (k - j - 1) extra members while
            // the intersection only shrinks.
            int bound = static_cast<int>(next_inter.size()) + depth + 1 +
                        (inst.k - j - 1);
            if (bound <= best.ell) continue;
            chosen.push_back(j);
            self(self, j + 1, next_inter);
            chosen.pop_back();
        }
    };
    dfs(dfs, 0, IndexSet(inst.n));
    return best;
}

int compute_ell(const ConstraintInstance& inst, const Caps& caps) {
    return compute_ell_report(inst, caps).ell;
}

CheckReport check_gmmds(const ConstraintInstance& inst, const Caps& caps) {
    inst.validate();
    require_enumerable(inst.k, caps);
    CheckReport report;

    std::vector<int> chosen;
    auto dfs = [&](auto&& self, int next, const IndexSet& inter) -> bool {
        int depth = static_cast<int>(chosen.size());
        if (depth > 0 &&
            static_cast<int>(inter.size()) > inst.k - depth) {
            report.ok = false;
            report.witness = chosen;
            return true;
        }
        for (int j = next; j < inst.k; ++j) {
            IndexSet next_inter =
                depth == 0 ? inst.sets[j] : IndexSet::intersection(inter, inst.sets[j]);
            // Largest reachable |intersection| + |Omega| in this subtree.
            int bound = static_cast<int>(next_inter.size()) + depth + 1 +
                        (inst.k - j - 1);
            if (bound <= inst.k) continue;
            chosen.push_back(j);
            if (self(self, j + 1, next_inter)) return true;
            chosen.pop_back();
        }
        return false;
    };
    dfs(dfs, 0, IndexSet(inst.n));
    return report;
}

CheckReport check_general(const GeneralInstance& inst, const Caps& caps) {
    inst.validate();
    const int m = static_cast<int>(inst.rows.size());
    require_enumerable(m, caps);
    CheckReport report;

    std::vector<int> suffix_weight(m + 1, 0);
    for (int i = m - 1; i >= 0; --i)
        suffix_weight[i] = suffix_weight[i + 1] + inst.rows[i].multiplicity;

    std::vector<int> chosen;
    auto dfs = [&](auto&& self, int next, const IndexSet& inter, int weight,
                   int cap) -> bool {
        // cap = max over chosen of |S_i| + r_i; grows monotonically along a
        // branch, so pruning against the current cap is sound.
        int depth = static_cast<int>(chosen.size());
        if (depth > 0 && static_cast<int>(inter.size()) + weight > cap) {
            report.ok = false;
            report.witness = chosen;
            return true;
        }
        for (int j = next; j < m; ++j) {
            const auto& [s, r] = inst.rows[j];
            IndexSet next_inter =
                depth == 0 ? s : IndexSet::intersection(inter, s);
            int next_weight = weight + r;
            int next_cap = std::max(cap, static_cast<int>(s.size()) + r);
            if (static_cast<int>(next_inter.size()) + next_weight +
                    suffix_weight[j + 1] <=
                next_cap)
                continue;
            chosen.push_back(j);
            if (self(self, j + 1, next_inter, next_weight, next_cap)) return true;
            chosen.pop_back();
        }
        return false;
    };
    dfs(dfs, 0, IndexSet(inst.n), 0, 0);
    return report;
}

ConstraintInstance pad_to_ell(const ConstraintInstance& inst, int ell) {
    inst.validate();
    if (ell < inst.k)
        throw std::invalid_argument("cannot pad an instance down");
    ConstraintInstance out = inst;
    out.k = ell;
    out.sets.resize(ell, IndexSet(inst.n));
    return out;
}

}  // namespace codedesign
