#pragma once

#include <map>
#include <utility>
#include <vector>

#include "stablerep/exact.hpp"
#include "stablerep/partitions.hpp"

namespace stablerep {

/// Conjugacy classes of Σ_r (cycle types) in canonical order.
const std::vector<Partition>& conjugacy_classes(int degree);
std::size_t class_index(const Partition& cycle_type);

/// A rational-valued class function on Σ_r, stored densely over all cycle
/// types in canonical order.
class ClassFunction {
public:
    explicit ClassFunction(int degree);
    ClassFunction(int degree, std::vector<Rational> values);

    int degree() const noexcept { return degree_; }
    const std::vector<Rational>& values() const noexcept { return values_; }

    const Rational& operator[](const Partition& cycle_type) const;
    Rational& operator[](const Partition& cycle_type);
    const Rational& at_identity() const { return values_.back(); }

    ClassFunction& operator+=(const ClassFunction& other);
    ClassFunction& operator-=(const ClassFunction& other);
    friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
    friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
    friend ClassFunction operator*(const Rational& s, ClassFunction a);
    /// Pointwise product (character of the tensor product).
    friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
    friend bool operator==(const ClassFunction&, const ClassFunction&) = default;

private:
    int degree_;
    std::vector<Rational> values_;
};

/// A class function on Σ_p × Σ_q, indexed by pairs of cycle types.
class BiClassFunction {
public:
    BiClassFunction(int p, int q);

    int p() const noexcept { return p_; }
    int q() const noexcept { return q_; }

    const Rational& operator()(const Partition& sigma_type, const Partition& tau_type) const;
    Rational& operator()(const Partition& sigma_type, const Partition& tau_type);
    const Rational& at_identity() const { return values_.back(); }

    BiClassFunction& operator+=(const BiClassFunction& other);
    BiClassFunction& operator-=(const BiClassFunction& other);
    friend BiClassFunction operator+(BiClassFunction a, const BiClassFunction& b) { return a += b; }
    friend BiClassFunction operator-(BiClassFunction a, const BiClassFunction& b) { return a -= b; }
    friend bool operator==(const BiClassFunction&, const BiClassFunction&) = default;

private:
    std::size_t index(const Partition& sigma_type, const Partition& tau_type) const;

    int p_;
    int q_;
    std::vector<Rational> values_;
};

/// External tensor product a ⊠ b.
BiClassFunction outer_product(const ClassFunction& a, const ClassFunction& b);

/// Multiplicities keyed by Partition or pair of partitions. Multiplicities
/// are signed so virtual characters can be represented; zero entries are
/// never stored.
template <class Key>
class Decomposition {
public:
    void add(const Key& key, const BigInt& multiplicity) {
        if (multiplicity == 0) return;
        auto& slot = terms_[key];
        slot += multiplicity;
        if (slot == 0) terms_.erase(key);
    }
    BigInt multiplicity(const Key& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? BigInt(0) : it->second;
    }
    const std::map<Key, BigInt>& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    friend bool operator==(const Decomposition&, const Decomposition&) = default;

private:
    std::map<Key, BigInt> terms_;
};

using PartitionPair = std::pair<Partition, Partition>;
using IrredDecomposition = Decomposition<Partition>;
using PairDecomposition = Decomposition<PartitionPair>;

/// Genuine mode rejects negative multiplicities; both modes reject
/// non-integral ones.
enum class DecomposeMode { Genuine, Virtual };

/// χ^λ by the Murnaghan–Nakayama rule (memoized, thread-safe cache).
ClassFunction irreducible_character(const Partition& lambda);
ClassFunction trivial_character(int degree);
ClassFunction sign_character(int degree);
ClassFunction regular_character(int degree);

Rational inner_product(const ClassFunction& a, const ClassFunction& b);
Rational inner_product(const BiClassFunction& a, const BiClassFunction& b);

IrredDecomposition decompose(const ClassFunction& f, DecomposeMode mode = DecomposeMode::Genuine);
PairDecomposition decompose(const BiClassFunction& f, DecomposeMode mode = DecomposeMode::Genuine);

ClassFunction character_of(const IrredDecomposition& d, int degree);
BiClassFunction character_of(const PairDecomposition& d, int p, int q);

/// Σ mult · dim S^λ (resp. dim S^λ · dim S^μ).
BigInt dimension_of(const IrredDecomposition& d);
BigInt dimension_of(const PairDecomposition& d);

/// Ind from Σ_i × Σ_{q-i} to Σ_q of a class function on the Young subgroup.
ClassFunction induce(const BiClassFunction& f, int q);

/// Restriction of a Σ_q class function to Σ_i × Σ_{q-i}.
BiClassFunction restrict_to_young(const ClassFunction& g, int i);

/// For f on Σ_p × Σ_i: Ind from Σ_p × Σ_i × Σ_{q-i} to Σ_p × Σ_q of
/// f ⊠ trivial, the second factor being induced and the first untouched.
BiClassFunction induce_second_factor(const BiClassFunction& f, int q);

/// Multiplies each value by sign(σ) of the first factor.
BiClassFunction twist_first_by_sign(const BiClassFunction& f);

/// Littlewood–Richardson coefficient c^λ_{μν}, counting LR skew tableaux of
/// shape λ/μ and content ν.
BigInt lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// ⟨χ^λ, Ind(χ^μ ⊠ χ^ν)⟩, the character-theoretic route to the same number.
BigInt lr_coefficient_via_characters(const Partition& lambda, const Partition& mu, const Partition& nu);

/// S_{λ/μ} = ⊕ c^λ_{μν} S_ν.
IrredDecomposition skew_schur_decompose(const SkewShape& shape);

/// Coefficients 0..max_degree of Π_i (1 - x^i)^{-g_i}, where g_i =
/// generators[i] (index 0 ignored). This is the Hilbert series of a free
/// commutative algebra on g_i generators in degree i.
std::vector<BigInt> sym_algebra_series(const std::vector<BigInt>& generators, int max_degree);

/// dim [Sym^•(V[2]^{⊕q} ⊕ Sym^{•>0}(V[2]))]_{2p} for dim V = d. Every
/// generator is in even total degree, so the count is a plain Hilbert series
/// coefficient in x = t^2.
BigInt graded_sym_algebra_dimension(int d, int q, int p);

}  // namespace stablerep
