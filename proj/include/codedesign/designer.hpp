#ifndef CODEDESIGN_DESIGNER_HPP
#define CODEDESIGN_DESIGNER_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "codedesign/common.hpp"
#include "codedesign/constraints.hpp"
#include "codedesign/field.hpp"
#include "codedesign/matrix.hpp"

namespace codedesign {

struct DesignOptions {
    FieldPolicy policy = FieldPolicy::SmallestPrimePower;
    std::uint64_t forced_q = 0;  // read only when policy == FieldPolicy::Forced
    std::uint64_t seed = 0;
    // Full random tuples tried before the systematic search takes over.
    int random_attempts = 64;
    // Probabilistic certificates per candidate point in the systematic search.
    int pit_trials = 6;
};

struct SearchStats {
    int random_attempts_used = 0;  // tuples drawn in the random phase
    bool systematic = false;       // certified scan finished the job
};

// A finished construction. The user-facing generator is `generator` (k x n);
// the square coefficient matrix and its inverse are kept alongside the full
// ell x n matrix so encoding and decoding can run without refactorizations.
//
// The field lives behind a shared_ptr because every matrix member holds a
// pointer to it; moving or copying the design must not invalidate them.
struct CodeDesign {
    ConstraintInstance instance;
    DesignOptions options;
    std::shared_ptr<const FieldContext> field;
    int ell = 0;
    int distance = 0;                 // n - ell + 1
    std::vector<IndexSet> extended;   // ell sets, each of size ell - 1
    std::vector<FieldElement> alpha;  // n distinct points
    FieldMatrix t_full;               // ell x ell, invertible
    FieldMatrix t_full_inverse;
    FieldMatrix generator_full;       // ell x n
    FieldMatrix generator;            // first k rows of generator_full
    SearchStats search;
};

// Grows every set of a feasible square instance (ell == k) until each has
// exactly k - 1 elements, re-verifying feasibility after every insertion.
// Throws SearchBugError if some set cannot be grown; the feasible families
// with all sets of size k - 1 are exactly the completions of smaller ones,
// so a dead end would mean a defect here or in the checker.
std::vector<IndexSet> complete_sets(const ConstraintInstance& inst,
                                    const Caps& caps = {});

// Row i = ascending coefficients of prod_{j in sets[i]} (x + alpha[j]).
// All sets must have size ell - 1 so the matrix comes out square.
FieldMatrix coefficient_matrix(const FieldContext& F,
                               const std::vector<IndexSet>& sets,
                               const std::vector<FieldElement>& alpha);

// End-to-end construction: computes ell, rejects instances with ell > n,
// pads and completes the zero sets, picks a field of size at least
// n + ell - 1 under the requested policy, searches for points making the
// coefficient matrix invertible, and assembles G = T V with column j of V
// running over powers of -alpha[j]. Throws InfeasibleError when no code of
// positive distance exists (or a forced field is too small to admit one)
// and SearchBugError when a search that theory guarantees to succeed fails.
CodeDesign design_code(const ConstraintInstance& inst,
                       const DesignOptions& opts = {}, const Caps& caps = {});

// Distinct points column j of the generator is evaluated at (-alpha[j]).
std::vector<FieldElement> evaluation_points(const CodeDesign& d);

inline int correctable_errors(const CodeDesign& d) {
    return (d.distance - 1) / 2;
}

// message has k symbols, codeword has n.
std::vector<FieldElement> encode(const CodeDesign& d,
                                 const std::vector<FieldElement>& message);

// Bounded-distance decoding of up to correctable_errors(d) symbol errors.
// Returns the unique message whose codeword is within that radius of the
// received word, or nullopt when none exists.
std::optional<std::vector<FieldElement>> decode(
    const CodeDesign& d, const std::vector<FieldElement>& received);

}  // namespace codedesign

#endif
