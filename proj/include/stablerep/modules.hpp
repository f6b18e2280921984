#pragma once

#include <map>
#include <optional>
#include <vector>

#include "stablerep/characters.hpp"
#include "stablerep/errors.hpp"
#include "stablerep/exact.hpp"
#include "stablerep/partitions.hpp"
#include "stablerep/report.hpp"

namespace stablerep {

using Weight = std::vector<int>;
using WeightMultiset = std::map<Weight, BigInt>;

/// A finite-dimensional Q-vector space with exact matrices for the adjacent
/// transpositions s_0..s_{r-2} of Σ_r and/or the elementary matrices E_ij of
/// gl_d. Either action may be absent (symmetric_degree / gl_rank of 0).
struct ExplicitModule {
    std::size_t dimension = 0;
    int symmetric_degree = 0;
    std::vector<ExactMatrix> sym_generators;
    int gl_rank = 0;
    std::vector<ExactMatrix> gl_generators;  // E_ij at i * gl_rank + j
    std::optional<int> grading;

    const ExactMatrix& gl(int i, int j) const { return gl_generators.at(static_cast<std::size_t>(i * gl_rank + j)); }
};

/// Trivial 1-dimensional module: Σ_r acts trivially, gl_d by zero.
ExplicitModule trivial_module(int symmetric_degree, int gl_rank);

/// (Q^d)^{⊗r}: Σ_r permutes tensor factors, gl_d acts by derivations.
/// Basis vector for the word (w_1..w_r) has index Σ w_k d^{r-1-k}.
ExplicitModule tensor_power_module(int d, int r, const Budget& budget = {});

/// S^λ as the left ideal Q[Σ_r]·c_λ, c_λ the Young symmetrizer of the
/// row-reading tableau.
ExplicitModule specht_module(const Partition& lambda, const Budget& budget = {});

/// S_λ(Q^d) as the image of c_λ on tensor space, basis chosen weight space by
/// weight space so the torus acts diagonally.
ExplicitModule schur_apply(const Partition& lambda, int d, const Budget& budget = {});

/// Matrix of a permutation on a module with a Σ_r action, as a product of
/// adjacent-transposition generators.
ExactMatrix permutation_matrix(const ExplicitModule& m, const Permutation& sigma);

/// Values of the Σ_r character on every cycle type.
ClassFunction module_character(const ExplicitModule& m);

bool satisfies_coxeter_relations(const ExplicitModule& m);
bool satisfies_gl_relations(const ExplicitModule& m);
bool actions_commute(const ExplicitModule& m);

/// Torus weight of each basis vector when every E_ii is diagonal, else nullopt.
std::optional<std::vector<Weight>> diagonal_weights(const ExplicitModule& m);

/// Weight multiset: read off a diagonal torus, or else by simultaneous
/// eigenspace dimensions of E_11..E_dd. Throws NonPolynomialAction on
/// negative or non-integral weights.
WeightMultiset torus_weights(const ExplicitModule& m);

/// Greedy decomposition of a weight multiset into Schur characters.
IrredDecomposition decompose_weights(const WeightMultiset& weights, int d);

/// gl_d-isotypic decomposition by torus weights.
IrredDecomposition gl_decompose(const ExplicitModule& m);

/// dim of the joint kernel of the raising operators E_{i,i+1} on the
/// weight-λ space: the number of copies of S_λ(Q^d). Needs a diagonal torus.
std::size_t highest_weight_multiplicity(const ExplicitModule& m, const Partition& lambda);

/// dim Hom_gl(source, target) as Σ_λ hw_λ(source) · hw_λ(target).
std::size_t hom_dimension_by_highest_weights(const ExplicitModule& source, const ExplicitModule& target);

/// dim Hom_gl(source, target) by solving, for weight-preserving maps X, the
/// linear system X E = E X for every off-diagonal generator. Unknown count is
/// Σ_μ dim(target_μ)·dim(source_μ), so this is for small modules.
std::size_t intertwiner_dimension(const ExplicitModule& source, const ExplicitModule& target, const Budget& budget = {});

/// Λ^r(Q^dV ⊗ Q^dW) against ⊕_{|λ|=r} S_λ(Q^dV) ⊗ S_{λ^T}(Q^dW): dimensions and
/// GL×GL bi-weight multisets.
Report verify_cauchy(int r, int dV, int dW, const Budget& budget = {});

/// (Q^d)^{⊗r} against ⊕ S_λ(Q^d) ⊗ S^λ: trace of each cycle type on each
/// weight space, plus recovery of the bi-decomposition from those traces.
Report verify_schur_weyl(int r, int d, const Budget& budget = {});

/// Graded-piece identity (i) and alternating resolution identity (ii) for a
/// split extension 0 → Q^dA → Q^{dA+dC} → Q^dC → 0, at dimension level.
Report split_extension_filtration_check(const Partition& lambda, int dA, int dC, const Budget& budget = {});

}  // namespace stablerep
