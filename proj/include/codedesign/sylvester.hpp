#ifndef CODEDESIGN_SYLVESTER_HPP
#define CODEDESIGN_SYLVESTER_HPP

#include <optional>
#include <vector>

#include "codedesign/constraints.hpp"
#include "codedesign/matrix.hpp"
#include "codedesign/poly.hpp"

namespace codedesign {

// Block polynomial of row group i: p_i = x^(k - |S_i| - r_i) * prod over
// j in S_i of (x + alpha_j). Monic of degree k - r_i.
Poly row_poly(const PolyRing& R, const GeneralInstance& inst, int i,
              const std::vector<FieldElement>& alpha);

// The k x k block Toeplitz matrix: group i holds the coefficient rows of
// x^(r_i - 1) * p_i down to x^0 * p_i, coefficients in descending degree
// (column c is the coefficient of x^(k-1-c)).
FieldMatrix build_sylvester(const FieldContext& F, const GeneralInstance& inst,
                            const std::vector<FieldElement>& alpha);

FieldElement sylvester_det(const FieldContext& F, const GeneralInstance& inst,
                           const std::vector<FieldElement>& alpha);

// Reads a left null vector back as cofactor polynomials: q_i collects the
// entries of group i, so deg q_i <= r_i - 1 and sum q_i * p_i = 0.
std::vector<Poly> vector_to_polys(const PolyRing& R, const GeneralInstance& inst,
                                  const std::vector<FieldElement>& y);

// Null vector of the matrix converted to polynomial form, or nullopt when
// the determinant is nonzero.
std::optional<std::vector<Poly>> sylvester_dependency(
    const FieldContext& F, const GeneralInstance& inst,
    const std::vector<FieldElement>& alpha);

// Structural certificate for an instance failing the weighted feasibility
// condition: the row groups of the violating subset, truncated to their
// nonzero column window, annihilate an evaluation matrix w, which caps
// their rank below the row count r0. Built for any alpha, zeros and repeats
// included; no determinant needed.
struct RankWitness {
    std::vector<int> omega;  // violating subset, lexicographically first
    FieldMatrix m0;          // r0 x k' stack of the violating row groups
    FieldMatrix w;           // k' x |S_0| powers of -alpha_j, m0 * w = 0
    int r0 = 0;
    int rank_bound = 0;      // k' - |S_0|, always < r0
};

std::optional<RankWitness> rank_deficiency_witness(
    const FieldContext& F, const GeneralInstance& inst,
    const std::vector<FieldElement>& alpha, const Caps& caps = {});

}  // namespace codedesign

#endif
