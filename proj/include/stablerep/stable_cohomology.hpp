#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stablerep/characters.hpp"
#include "stablerep/errors.hpp"
#include "stablerep/report.hpp"

namespace stablerep {

/// K_{p,q}(n) = H(n)^{⊗p} ⊗ (H(n)^*)^{⊗q}, kept only as a label.
struct SymbolicCoefficient {
    int p = 0;
    int q = 0;
    std::optional<int> n;

    std::string to_string() const;
    friend bool operator==(const SymbolicCoefficient&, const SymbolicCoefficient&) = default;
};

struct StableCohomologyResult {
    SymbolicCoefficient coefficient;
    int degree = 0;
    BiClassFunction character{0, 0};
    PairDecomposition decomposition;
    BigInt dimension = 0;

    int p() const noexcept { return coefficient.p; }
    int q() const noexcept { return coefficient.q; }
    bool is_zero() const { return dimension == 0; }
    /// Smallest n with 2·degree ≤ n − p − q − 3.
    int valid_n_bound() const { return 2 * degree + p() + q() + 3; }
    std::string valid_range() const;

    friend bool operator==(const StableCohomologyResult&, const StableCohomologyResult&) = default;
};

/// sgn_p ⊗ Q P_{p,q} in degree p − q, zero elsewhere and whenever q > p.
StableCohomologyResult stable_cohomology(int p, int q, int degree, const Budget& budget = {});

json to_json(const StableCohomologyResult& r);
StableCohomologyResult stable_cohomology_from_json(const json& j);

/// dim [Sym(V[2]^{⊕(q+1)} ⊕ Sym^{≥2}(V[2]))]_{2p}, checked against
/// Σ_λ m_λ dim S_λ(Q^d) with m_λ the multiplicity of S^λ in
/// ⊕_i C(q,i) · Res_{Σ_p} Q P_{p,i}. Throws OracleDisagreement on mismatch.
BigInt hom_side_total(int p, int q, int d, const Budget& budget = {});

/// Σ_k [Sym(Sym^{>0}(V[2]))]_{2(p-k)} · dim Sym^k(V^{⊕q}) against the
/// single series coefficient.
Report step1_dimension_identity(int p, int q, int d);

/// Recovers Q P_{p,q} from the Hom-space character by subtracting the
/// induced lower terms, and compares classwise with direct enumeration.
Report theorem_a_induction_check(int p, int q, const Budget& budget = {});

struct DimensionRow {
    int p = 0;
    int q = 0;
    int degree = 0;
    BigInt dimension = 0;
    int minimal_n = 0;

    friend bool operator==(const DimensionRow&, const DimensionRow&) = default;
};

std::vector<DimensionRow> dimension_table(int p_max, int q_max, const Budget& budget = {});
json to_json(const std::vector<DimensionRow>& table);
std::vector<DimensionRow> dimension_table_from_json(const json& j);

}  // namespace stablerep
