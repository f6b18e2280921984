#pragma once

#include <map>
#include <vector>

#include "stablerep/characters.hpp"
#include "stablerep/errors.hpp"
#include "stablerep/exact.hpp"
#include "stablerep/labeled_partitions.hpp"
#include "stablerep/modules.hpp"
#include "stablerep/report.hpp"

namespace stablerep {

/// A generator [ω; m] of F_W(V): label index ω in the alphabet for part size
/// deg m, and m a monomial in e_0..e_{d-1} given as sorted variable indices.
struct FWSymbol {
    int label = 0;
    std::vector<int> variables;

    friend auto operator<=>(const FWSymbol&, const FWSymbol&) = default;
};

/// The V-degree-p piece of F_W(V) = Sym(⊕_i W_i ⊗ Sym^i V) for the standard
/// alphabet. Basis: multisets of symbols (sorted symbol ids) of total degree p.
struct FWGradedPiece {
    int p = 0;
    int q = 0;
    int d = 0;
    std::vector<FWSymbol> symbols;
    std::map<FWSymbol, std::size_t> symbol_index;
    std::vector<std::vector<std::size_t>> monomials;
    std::map<std::vector<std::size_t>, std::size_t> monomial_index;
    ExplicitModule module;  // gl_d acting by derivations

    std::size_t dimension() const noexcept { return monomials.size(); }
    /// Torus weight of a basis monomial.
    Weight weight(std::size_t monomial) const;
};

FWGradedPiece build_fw_piece(int p, int q, int d, const Budget& budget = {});

/// Σ over labeled-partition shapes of Π_parts (|Ω_i| · dim Sym^i Q^d),
/// computed without building the basis.
BigInt fw_piece_dimension(int p, int q, int d);

/// Φ_{P,l} : (Q^d)^{⊗p} → F_W(V)_p on the standard basis (one entry per column).
ExactMatrix phi_matrix(const FWGradedPiece& piece, const GeneralLabeledPartition& x);

/// Φ ∘ E_ij = E_ij ∘ Φ for every generator.
bool phi_is_equivariant(const FWGradedPiece& piece, const ExplicitModule& tensor_power, const ExactMatrix& phi);

struct HomDimension {
    std::size_t by_highest_weights = 0;
    std::size_t by_characters = 0;
};

/// dim Hom_gl((Q^d)^{⊗p}, F_W(V)_p) two ways; throws OracleDisagreement when
/// they differ.
HomDimension hom_space_dimension_gl(int p, int q, int d, const Budget& budget = {});

/// Σ_p × Σ_q character of Hom_gl((Q^d)^{⊗p}, F_W(V)_p) read off the weight
/// (1^p) space, where both groups permute monomials. Needs d ≥ p.
BiClassFunction fw_weight_space_bicharacter(const FWGradedPiece& piece);

/// Rank of {Φ_x : x ∈ P_p(Ω)} against |P_p(Ω)| and the Hom dimension.
Report verify_rw_prop(int p, int q, int d, const Budget& budget = {});

/// Character of Q P_p(Ω), of ⊕_i Ind Q P_{p,i} and of the Hom space, classwise,
/// plus the splitting bijection and the total dimension.
Report verify_splitting_lemma(int p, int q, int d, const Budget& budget = {});

}  // namespace stablerep
