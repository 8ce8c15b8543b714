#ifndef CODEDESIGN_CONSTRAINTS_HPP
#define CODEDESIGN_CONSTRAINTS_HPP

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "codedesign/common.hpp"

namespace codedesign {

// Subset of {0, ..., universe-1}, packed into 64-bit words. All positions in
// this project are 0-based; the JSON layer keeps the same convention.
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(std::size_t universe);
    static IndexSet of(std::size_t universe, std::initializer_list<int> xs);
    static IndexSet from_indices(std::size_t universe,
                                 const std::vector<int>& xs);

    std::size_t universe() const { return universe_; }
    bool contains(int i) const;
    void insert(int i);
    void erase(int i);
    std::size_t size() const;
    bool empty() const { return size() == 0; }

    void intersect_with(const IndexSet& o);
    void union_with(const IndexSet& o);
    bool is_subset_of(const IndexSet& o) const;
    static IndexSet intersection(const IndexSet& a, const IndexSet& b);

    std::vector<int> elements() const;  // ascending

    friend bool operator==(const IndexSet&, const IndexSet&) = default;

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

// Support constraints for a k x n generator matrix: row i may be nonzero
// only outside S_i (S_i is the forced-zero column set of row i).
struct ConstraintInstance {
    int k = 0;
    int n = 0;
    std::vector<IndexSet> sets;  // size k, each over universe n

    void validate() const;  // throws std::invalid_argument on shape errors
};

// Constraint sets with multiplicities, the shape the block determinant
// identity is stated over. Total row count is sum of multiplicities.
struct WeightedSet {
    IndexSet set;
    int multiplicity = 1;
};

struct GeneralInstance {
    int k = 0;  // equals the sum of multiplicities
    int n = 0;
    std::vector<WeightedSet> rows;

    void validate() const;
};

// ell = max over nonempty subsets Omega of |intersection of S_i| + |Omega|.
// Cost is a DFS over at most 2^k nodes with pruning; k above caps.subset_enum
// is rejected.
int compute_ell(const ConstraintInstance& inst, const Caps& caps = {});

struct EllReport {
    int ell = 0;
    std::vector<int> witness;  // lexicographically first subset attaining ell
};
EllReport compute_ell_report(const ConstraintInstance& inst,
                             const Caps& caps = {});

// Largest distance any code with this zero pattern can reach: n + 1 - ell.
// Values <= 0 mean no code with independent rows fits the pattern.
inline int singleton_upper_bound(int n, int ell) { return n + 1 - ell; }

struct CheckReport {
    bool ok = true;
    std::vector<int> witness;  // lexicographically first violating subset
};

// Every nonempty Omega must satisfy |intersection| <= k - |Omega|.
CheckReport check_gmmds(const ConstraintInstance& inst, const Caps& caps = {});

// Weighted version: |intersection| + sum of multiplicities over Omega must
// stay within max over Omega of (|S_i| + r_i).
CheckReport check_general(const GeneralInstance& inst, const Caps& caps = {});

// Append empty sets until there are ell rows. Requires ell >= k; the result
// keeps k' = ell and the same n.
ConstraintInstance pad_to_ell(const ConstraintInstance& inst, int ell);

}  // namespace codedesign

#endif
