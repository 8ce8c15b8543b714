#ifndef CODEDESIGN_ORACLE_HPP
#define CODEDESIGN_ORACLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "codedesign/constraints.hpp"
#include "codedesign/matrix.hpp"
#include "codedesign/rng.hpp"

namespace codedesign {

// Exact minimum weight over all q^k - 1 nonzero messages, by enumeration.
// Returns 0 when the rows are dependent (some nonzero message encodes to the
// zero word). Work q^k above caps.bruteforce is refused.
//
// early_exit_at > 0 stops the scan at the first codeword of weight <=
// early_exit_at. The result is then the weight of that codeword: an upper
// bound for the true distance, and equal to it whenever the result exceeds
// early_exit_at.
int min_distance_bruteforce(const FieldMatrix& g, const Caps& caps = {},
                            int early_exit_at = 0);

// Does g have zeros everywhere the instance demands them?
bool verify_zero_pattern(const FieldMatrix& g, const ConstraintInstance& inst);

// Everything the independent checker can say about a finished design.
// distance is empty when the brute-force scan was refused by caps; ok then
// covers the pattern and rank checks only.
struct OracleReport {
    bool pattern_ok = false;
    bool rank_ok = false;
    int ell = 0;
    int expected_distance = 0;
    std::optional<int> distance;
    bool distance_skipped = false;
    bool ok = false;
    std::string detail;  // first failure in words, empty when ok
};

OracleReport verify_design(const FieldMatrix& g, const ConstraintInstance& inst,
                           const Caps& caps = {});

// Randomized check that the block determinant is not identically zero as a
// polynomial in the points. Evaluates at uniform points of a fixed 61-bit
// prime field: any nonzero hit certifies "nonzero"; all-zero across the
// trials reports "identically zero", wrong with probability at most
// (degree / q)^trials, vanishingly small here.
bool det_identity_oracle(const GeneralInstance& inst, std::uint64_t seed,
                         int trials);

// Every weighted instance with 1 <= k <= k_max, 0 <= n <= n_max, in a fixed
// deterministic order. Sizes grow fast; k_max beyond caps.enum_k is refused.
std::vector<GeneralInstance> enumerate_general_instances(int k_max, int n_max,
                                                         const Caps& caps = {});

// Rejection-samples a constraint instance whose distance budget is positive
// (ell <= n), so a code with at least distance 1 exists for it. Each column
// joins each set with probability density_pct / 100.
ConstraintInstance random_feasible_instance(int k, int n, DetRng& rng,
                                            int density_pct = 33,
                                            const Caps& caps = {});

// Rejection-samples an instance that passes the full feasibility check with
// |S_i| <= k - 1, the regime where the code comes out MDS.
ConstraintInstance random_gmmds_instance(int k, int n, DetRng& rng,
                                         int density_pct = 33,
                                         const Caps& caps = {});

}  // namespace codedesign

#endif
