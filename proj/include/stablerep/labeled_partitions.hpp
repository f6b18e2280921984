#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "stablerep/characters.hpp"
#include "stablerep/errors.hpp"
#include "stablerep/partitions.hpp"
#include "stablerep/report.hpp"

namespace stablerep {

/// Set partition of {0..p-1}: each part sorted, parts ordered by their
/// minimum. Text and JSON forms are 1-based.
using SetPartition = std::vector<std::vector<int>>;

/// All set partitions of {0..p-1} in canonical form (restricted growth order).
std::vector<SetPartition> enumerate_set_partitions(int p);

/// Sorts each part and orders parts by minimum.
SetPartition canonical_set_partition(SetPartition parts);

/// Per-size label alphabets Ω_1, Ω_2, ...; sizes past the end of the list use
/// the last alphabet. Index 0 of every alphabet is the "unlabeled" symbol.
class LabelAlphabet {
public:
    explicit LabelAlphabet(std::vector<std::vector<std::string>> per_size);

    /// Ω_1 = {*, 1, .., q}, Ω_i = {*} for i >= 2. Label k sits at index k.
    static LabelAlphabet standard(int q);

    std::size_t size_for(int part_size) const;
    const std::string& name(int part_size, int index) const;
    int index_of(int part_size, std::string_view name) const;

    /// q for a standard alphabet, -1 otherwise (no Σ_q action).
    int q() const noexcept { return q_; }

private:
    std::vector<std::vector<std::string>> per_size_;
    int q_ = -1;
};

/// An element of P_p(Ω_1, Ω_2, ...): labels[k] indexes the alphabet for the
/// size of part k. Labels may repeat across parts.
struct GeneralLabeledPartition {
    SetPartition base;
    std::vector<int> labels;

    friend auto operator<=>(const GeneralLabeledPartition&, const GeneralLabeledPartition&) = default;
};

/// An element of P_{p,I}: labels[k] is 0 for an unlabeled part, otherwise a
/// label in 1..q; the non-zero labels are pairwise distinct.
struct QLabeledPartition {
    SetPartition base;
    std::vector<int> labels;

    friend auto operator<=>(const QLabeledPartition&, const QLabeledPartition&) = default;
};

int ground_set_size(const SetPartition& base);

std::vector<GeneralLabeledPartition> enumerate_general(int p, const LabelAlphabet& alphabet, const Budget& budget = {});

/// P_{p,q}: at least q parts, labels 1..q on q distinct parts.
std::vector<QLabeledPartition> enumerate_pq(int p, int q, const Budget& budget = {});

/// P_{p,I} for an arbitrary label set I ⊆ [q].
std::vector<QLabeledPartition> enumerate_p_labels(int p, const std::vector<int>& label_set, const Budget& budget = {});

/// (σ, τ) acting by permuting ground elements and numeric labels. τ may be
/// empty when no label is numeric.
GeneralLabeledPartition act(const Permutation& sigma, const Permutation& tau, const GeneralLabeledPartition& x);
QLabeledPartition act(const Permutation& sigma, const Permutation& tau, const QLabeledPartition& x);

/// Each labeled part of size i becomes i singletons carrying that label;
/// unlabeled parts are kept.
GeneralLabeledPartition splitting_map(const QLabeledPartition& x);

enum class BicharacterSource {
    General,    ///< Q P_p(Ω) for the standard alphabet
    LabeledPQ,  ///< Q P_{p,q}
};

/// Fixed-point counts of the standard class representatives.
BiClassFunction permutation_bicharacter(int p, int q, BicharacterSource source, const Budget& budget = {});

/// Fixed points of an arbitrary pair (σ, τ), for representative-independence checks.
std::size_t fixed_point_count(const std::vector<GeneralLabeledPartition>& elements, const Permutation& sigma, const Permutation& tau);
std::size_t fixed_point_count(const std::vector<QLabeledPartition>& elements, const Permutation& sigma, const Permutation& tau);

/// ⊕_{i=0}^{q} Ind_{Σ_p×Σ_i×Σ_{q-i}}^{Σ_p×Σ_q} Q P_{p,i}.
BiClassFunction induced_splitting_bicharacter(int p, int q, const Budget& budget = {});

/// Text syntax: "{1,2|3}:labels=2,*" (parts in canonical order, one label per
/// part, "*" unlabeled). The ":labels=" suffix may be dropped when every part
/// is unlabeled.
std::string format_labeled(const GeneralLabeledPartition& x, const LabelAlphabet& alphabet);
std::string format_labeled(const QLabeledPartition& x);
GeneralLabeledPartition parse_general_labeled(std::string_view text, const LabelAlphabet& alphabet);
QLabeledPartition parse_q_labeled(std::string_view text);

/// JSON: array of {"part": [1-based elements], "label": "*" | name}.
json labeled_to_json(const GeneralLabeledPartition& x, const LabelAlphabet& alphabet);
json labeled_to_json(const QLabeledPartition& x);
GeneralLabeledPartition general_labeled_from_json(const json& j, const LabelAlphabet& alphabet);
QLabeledPartition q_labeled_from_json(const json& j);

}  // namespace stablerep
