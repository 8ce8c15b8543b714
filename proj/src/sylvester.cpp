#include "codedesign/sylvester.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace codedesign {

namespace {

void require_alpha(const GeneralInstance& inst,
                   const std::vector<FieldElement>& alpha) {
    if (alpha.size() != static_cast<std::size_t>(inst.n))
        throw std::invalid_argument("expected one evaluation point per column");
}

}  // namespace

Poly row_poly(const PolyRing& R, const GeneralInstance& inst, int i,
              const std::vector<FieldElement>& alpha) {
    const auto& [s, r] = inst.rows[i];
    std::vector<FieldElement> pts;
    for (int j : s.elements()) pts.push_back(alpha[j]);
    Poly base = R.from_constraint_roots(pts);
    unsigned shift = static_cast<unsigned>(inst.k - static_cast<int>(s.size()) - r);
    return R.shift(base, shift);
}

FieldMatrix build_sylvester(const FieldContext& F, const GeneralInstance& inst,
                            const std::vector<FieldElement>& alpha) {
    inst.validate();
    require_alpha(inst, alpha);
    PolyRing R(F);
    const int k = inst.k;
    FieldMatrix m(F, k, k);
    int row = 0;
    for (std::size_t i = 0; i < inst.rows.size(); ++i) {
        const int r_i = inst.rows[i].multiplicity;
        Poly p = row_poly(R, inst, static_cast<int>(i), alpha);
        assert(p.degree() == k - r_i);  // monic by construction
        for (int t = r_i - 1; t >= 0; --t, ++row) {
            // Row for x^t * p: coefficient of x^(k-1-c) lands in column c.
            for (int c = 0; c < k; ++c) {
                int deg = k - 1 - c - t;
                if (deg >= 0) m.at(row, c) = p.coeff(deg);
            }
        }
    }
    assert(row == k);
    return m;
}

FieldElement sylvester_det(const FieldContext& F, const GeneralInstance& inst,
                           const std::vector<FieldElement>& alpha) {
    return build_sylvester(F, inst, alpha).det();
}

std::vector<Poly> vector_to_polys(const PolyRing& R, const GeneralInstance& inst,
                                  const std::vector<FieldElement>& y) {
    if (y.size() != static_cast<std::size_t>(inst.k))
        throw std::invalid_argument("null vector length must equal k");
    std::vector<Poly> qs;
    std::size_t row = 0;
    for (const auto& [s, r] : inst.rows) {
        std::vector<FieldElement> c(r, R.field().zero());
        for (int t = r - 1; t >= 0; --t, ++row) c[t] = y[row];
        qs.push_back(R.make(std::move(c)));
    }
    return qs;
}

std::optional<std::vector<Poly>> sylvester_dependency(
    const FieldContext& F, const GeneralInstance& inst,
    const std::vector<FieldElement>& alpha) {
    FieldMatrix m = build_sylvester(F, inst, alpha);
    auto y = m.left_nullspace_vector();
    if (!y) return std::nullopt;
    PolyRing R(F);
    return vector_to_polys(R, inst, *y);
}

std::optional<RankWitness> rank_deficiency_witness(
    const FieldContext& F, const GeneralInstance& inst,
    const std::vector<FieldElement>& alpha, const Caps& caps) {
    require_alpha(inst, alpha);
    auto rep = check_general(inst, caps);
    if (rep.ok) return std::nullopt;

    const int k = inst.k;
    RankWitness wit{rep.witness, FieldMatrix(F, 0, 0), FieldMatrix(F, 0, 0), 0, 0};

    IndexSet inter = inst.rows[wit.omega[0]].set;
    int r0 = 0, kp = 0;  // kp = max over the subset of |S_i| + r_i
    for (int i : wit.omega) {
        inter.intersect_with(inst.rows[i].set);
        r0 += inst.rows[i].multiplicity;
        kp = std::max(kp, static_cast<int>(inst.rows[i].set.size()) +
                              inst.rows[i].multiplicity);
    }
    wit.r0 = r0;
    wit.rank_bound = kp - static_cast<int>(inter.size());

    // Stack the row groups of the violating subset, keeping only the first
    // kp columns. The dropped tail is zero on these rows: each carries a
    // polynomial divisible by x^(k - kp).
    FieldMatrix full = build_sylvester(F, inst, alpha);
    wit.m0 = FieldMatrix(F, r0, kp);
    std::vector<int> group_start(inst.rows.size() + 1, 0);
    for (std::size_t i = 0; i < inst.rows.size(); ++i)
        group_start[i + 1] = group_start[i] + inst.rows[i].multiplicity;
    int out = 0;
    for (int i : wit.omega)
        for (int t = 0; t < inst.rows[i].multiplicity; ++t, ++out)
            for (int c = 0; c < kp; ++c)
                wit.m0.at(out, c) = full.at(group_start[i] + t, c);

    // One kernel column per member of the common intersection: the rows of
    // m0, read as polynomials after the x^(k - kp) factor is stripped, still
    // vanish at each -alpha_j, so column j holds powers of -alpha_j. The
    // powers ascend toward the low-degree side, never below zero.
    const auto common = inter.elements();
    wit.w = FieldMatrix(F, kp, common.size());
    for (std::size_t col = 0; col < common.size(); ++col) {
        FieldElement base = F.neg(alpha[common[col]]);
        FieldElement acc = F.one();
        for (int c = kp - 1; c >= 0; --c) {
            wit.w.at(c, col) = acc;  // base^(kp-1-c)
            acc = F.mul(acc, base);
        }
    }

    return wit;
}

}  // namespace codedesign
