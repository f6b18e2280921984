#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "stablerep/exact.hpp"

namespace stablerep {

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// dropped on construction, so structural equality is partition equality.
///
/// Ordering: first by weight, then reverse lexicographic within a weight, so
/// (3) < (2,1) < (1,1,1). Every ordered container of partitions in the library
/// therefore lists keys in the canonical order.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// "5,3,1"; the empty partition is spelled "0" (an empty string is also accepted).
    static Partition parse(std::string_view text);
    std::string to_string() const;

    const std::vector<int>& parts() const noexcept { return parts_; }
    int weight() const noexcept { return weight_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// i-th part, 0 past the end.
    int part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    /// Cell-wise containment of Young diagrams.
    bool contains(const Partition& inner) const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// Partition made of all parts of a and b (the cycle type of a disjoint product).
Partition join(const Partition& a, const Partition& b);

/// The shape λ/μ; construction checks μ ⊆ λ.
class SkewShape {
public:
    SkewShape(Partition outer, Partition inner);

    const Partition& outer() const noexcept { return outer_; }
    const Partition& inner() const noexcept { return inner_; }
    int size() const noexcept { return outer_.weight() - inner_.weight(); }

private:
    Partition outer_;
    Partition inner_;
};

/// All partitions of n in canonical (reverse lexicographic) order.
std::vector<Partition> enumerate_partitions(int n);

/// All partitions contained in λ, in canonical order.
std::vector<Partition> subpartitions(const Partition& lambda);

Partition transpose(const Partition& lambda);

int hook_length(const Partition& lambda, int row, int col);

/// Number of standard Young tableaux, via the hook-length formula.
BigInt specht_dimension(const Partition& lambda);

/// dim S_λ(Q^d) by the hook-content formula; 0 exactly when length(λ) > d.
BigInt schur_gl_dimension(const Partition& lambda, int d);

BigInt factorial(int n);
BigInt binomial(long n, long k);

/// |{σ : cycle type σ = ρ}| = |ρ|! / z_ρ.
BigInt class_size(const Partition& cycle_type);
/// Centralizer order z_ρ = Π i^{m_i} m_i!.
BigInt centralizer_order(const Partition& cycle_type);
/// Sign of any permutation with this cycle type.
int cycle_type_sign(const Partition& cycle_type);

/// Weight multiplicities of S_λ(Q^d): the number of semistandard tableaux
/// of shape λ, entries in 1..d, for each content vector (length d).
std::map<std::vector<int>, BigInt> schur_weight_multiplicities(const Partition& lambda, int d);

/// All weak compositions of n into d parts, lexicographically decreasing.
std::vector<std::vector<int>> compositions(int n, int d);

/// Dominant weight (weakly decreasing) viewed as a partition.
bool is_dominant(const std::vector<int>& weight);

// Permutations are stored 0-based as the image list: perm[i] = σ(i).
using Permutation = std::vector<int>;

Permutation identity_permutation(int n);
Permutation compose(const Permutation& outer, const Permutation& inner);  // outer ∘ inner
Permutation inverse(const Permutation& perm);
Partition cycle_type(const Permutation& perm);
int sign(const Permutation& perm);
/// The standard representative: cycles on consecutive blocks (0 1 .. ρ1-1)(ρ1 ..)...
Permutation cycle_type_representative(const Partition& cycle_type);
/// Adjacent transposition (i i+1), 0-based.
Permutation adjacent_transposition(int n, int i);
/// All n! permutations in lexicographic order, and the inverse lookup.
std::vector<Permutation> all_permutations(int n);
std::size_t permutation_rank(const Permutation& perm);

}  // namespace stablerep
