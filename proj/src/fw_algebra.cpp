#include "stablerep/fw_algebra.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace stablerep {

namespace {

std::size_t word_count(int d, int p) {
    std::size_t n = 1;
    for (int k = 0; k < p; ++k) n *= static_cast<std::size_t>(d);
    return n;
}

std::vector<int> word_of(std::size_t index, int d, int p) {
    std::vector<int> w(p);
    for (int k = p - 1; k >= 0; --k) {
        w[k] = static_cast<int>(index % static_cast<std::size_t>(d));
        index /= static_cast<std::size_t>(d);
    }
    return w;
}

std::vector<std::size_t> sorted_ids(std::vector<std::size_t> ids) {
    std::sort(ids.begin(), ids.end());
    return ids;
}

/// E_ij (e_j ↦ e_i) applied to one basis monomial, by Leibniz over the
/// symbol factors and over the variables inside each symbol.
std::map<std::size_t, Rational> derivation(const FWGradedPiece& piece, std::size_t monomial, int i, int j) {
    std::map<std::size_t, Rational> out;
    const auto& ids = piece.monomials[monomial];
    for (std::size_t k = 0; k < ids.size(); ++k) {
        const FWSymbol& s = piece.symbols[ids[k]];
        const long count = std::count(s.variables.begin(), s.variables.end(), j);
        if (count == 0) continue;
        FWSymbol image = s;
        *std::find(image.variables.begin(), image.variables.end(), j) = i;
        std::sort(image.variables.begin(), image.variables.end());
        std::vector<std::size_t> next = ids;
        next[k] = piece.symbol_index.at(image);
        out[piece.monomial_index.at(sorted_ids(std::move(next)))] += count;
    }
    return out;
}

HomDimension hom_dimension(const FWGradedPiece& piece, const Budget& budget) {
    const ExplicitModule source = tensor_power_module(piece.d, piece.p, budget);
    HomDimension out;
    out.by_highest_weights = hom_dimension_by_highest_weights(source, piece.module);
    const IrredDecomposition a = gl_decompose(source);
    const IrredDecomposition b = gl_decompose(piece.module);
    BigInt total = 0;
    for (const auto& [lambda, mult] : a.terms()) total += mult * b.multiplicity(lambda);
    out.by_characters = total.get_ui();
    if (out.by_highest_weights != out.by_characters) {
        throw Error(ErrorKind::OracleDisagreement, "Hom dimension: highest weights give " + std::to_string(out.by_highest_weights) +
                                                       ", characters give " + std::to_string(out.by_characters));
    }
    return out;
}

/// Word indices ordered by decreasing number of distinct letters, so that
/// flattened Φ vectors lead with their multilinear entries.
std::vector<std::size_t> word_positions(int d, int p) {
    const std::size_t n = word_count(d, p);
    std::vector<std::size_t> order(n);
    std::vector<int> distinct(n);
    for (std::size_t b = 0; b < n; ++b) {
        auto w = word_of(b, d, p);
        std::sort(w.begin(), w.end());
        distinct[b] = static_cast<int>(std::unique(w.begin(), w.end()) - w.begin());
        order[b] = b;
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return distinct[a] > distinct[b]; });
    std::vector<std::size_t> position(n);
    for (std::size_t k = 0; k < n; ++k) position[order[k]] = k;
    return position;
}

}  // namespace

Weight FWGradedPiece::weight(std::size_t monomial) const {
    Weight w(d, 0);
    for (std::size_t id : monomials[monomial]) {
        for (int v : symbols[id].variables) ++w[v];
    }
    return w;
}

BigInt fw_piece_dimension(int p, int q, int d) {
    if (p < 0 || q < 0 || d < 1) throw Error(ErrorKind::InvalidArgument, "F_W piece needs p, q >= 0 and d >= 1");
    const LabelAlphabet alphabet = LabelAlphabet::standard(q);
    std::vector<BigInt> generators(static_cast<std::size_t>(p) + 1, 0);
    for (int i = 1; i <= p; ++i) generators[i] = BigInt(static_cast<unsigned long>(alphabet.size_for(i))) * binomial(d + i - 1, i);
    return sym_algebra_series(generators, p)[p];
}

FWGradedPiece build_fw_piece(int p, int q, int d, const Budget& budget) {
    const BigInt expected = fw_piece_dimension(p, q, d);
    if (expected > BigInt(static_cast<unsigned long>(budget.max_dimension))) {
        throw Error(ErrorKind::SizeBudgetExceeded, "F_W piece (p=" + std::to_string(p) + ", q=" + std::to_string(q) + ", d=" +
                                                       std::to_string(d) + ") has dimension " + expected.get_str() +
                                                       " > budget " + std::to_string(budget.max_dimension));
    }
    FWGradedPiece piece;
    piece.p = p;
    piece.q = q;
    piece.d = d;
    const LabelAlphabet alphabet = LabelAlphabet::standard(q);

    for (int i = 1; i <= p; ++i) {
        std::vector<int> vars(i, 0);
        std::function<void(int, int)> rec = [&](int slot, int lo) {
            if (slot == i) {
                for (std::size_t l = 0; l < alphabet.size_for(i); ++l) piece.symbols.push_back({static_cast<int>(l), vars});
                return;
            }
            for (int v = lo; v < d; ++v) {
                vars[slot] = v;
                rec(slot + 1, v);
            }
        };
        rec(0, 0);
    }
    std::sort(piece.symbols.begin(), piece.symbols.end());
    for (std::size_t k = 0; k < piece.symbols.size(); ++k) piece.symbol_index.emplace(piece.symbols[k], k);

    std::vector<std::size_t> current;
    std::function<void(int, std::size_t)> rec = [&](int remaining, std::size_t lo) {
        if (remaining == 0) {
            piece.monomial_index.emplace(current, piece.monomials.size());
            piece.monomials.push_back(current);
            return;
        }
        for (std::size_t s = lo; s < piece.symbols.size(); ++s) {
            const int deg = static_cast<int>(piece.symbols[s].variables.size());
            if (deg > remaining) continue;
            current.push_back(s);
            rec(remaining - deg, s);
            current.pop_back();
        }
    };
    rec(p, 0);

    const std::size_t dim = piece.monomials.size();
    piece.module.dimension = dim;
    piece.module.gl_rank = d;
    piece.module.grading = p;
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            ExactMatrix e(dim, dim);
            for (std::size_t b = 0; b < dim; ++b) {
                for (const auto& [row, v] : derivation(piece, b, i, j)) e.add_to(row, b, v);
            }
            piece.module.gl_generators.push_back(std::move(e));
        }
    }
    return piece;
}

ExactMatrix phi_matrix(const FWGradedPiece& piece, const GeneralLabeledPartition& x) {
    if (ground_set_size(x.base) != piece.p) throw Error(ErrorKind::DegreeMismatch, "labeled partition size differs from the F_W degree");
    const std::size_t cols = word_count(piece.d, piece.p);
    ExactMatrix phi(piece.dimension(), cols);
    for (std::size_t b = 0; b < cols; ++b) {
        const auto w = word_of(b, piece.d, piece.p);
        std::vector<std::size_t> ids;
        for (std::size_t k = 0; k < x.base.size(); ++k) {
            FWSymbol s{x.labels[k], {}};
            for (int e : x.base[k]) s.variables.push_back(w[e]);
            std::sort(s.variables.begin(), s.variables.end());
            ids.push_back(piece.symbol_index.at(s));
        }
        phi.set(piece.monomial_index.at(sorted_ids(std::move(ids))), b, 1);
    }
    return phi;
}

bool phi_is_equivariant(const FWGradedPiece& piece, const ExplicitModule& tensor_power, const ExactMatrix& phi) {
    for (int i = 0; i < piece.d; ++i) {
        for (int j = 0; j < piece.d; ++j) {
            if (!(phi * tensor_power.gl(i, j) == piece.module.gl(i, j) * phi)) return false;
        }
    }
    return true;
}

HomDimension hom_space_dimension_gl(int p, int q, int d, const Budget& budget) {
    return hom_dimension(build_fw_piece(p, q, d, budget), budget);
}

BiClassFunction fw_weight_space_bicharacter(const FWGradedPiece& piece) {
    const int p = piece.p;
    if (piece.d < p) throw Error(ErrorKind::InvalidArgument, "the (1^p) weight space needs d >= p");
    Weight target(piece.d, 0);
    for (int k = 0; k < p; ++k) target[k] = 1;
    std::vector<std::size_t> multilinear;
    for (std::size_t b = 0; b < piece.dimension(); ++b) {
        if (piece.weight(b) == target) multilinear.push_back(b);
    }
    BiClassFunction out(p, piece.q);
    for (const auto& s : conjugacy_classes(p)) {
        const Permutation sigma = cycle_type_representative(s);
        for (const auto& t : conjugacy_classes(piece.q)) {
            const Permutation tau = cycle_type_representative(t);
            long fixed = 0;
            for (std::size_t b : multilinear) {
                std::vector<std::size_t> ids;
                for (std::size_t id : piece.monomials[b]) {
                    FWSymbol image = piece.symbols[id];
                    for (int& v : image.variables) v = sigma[v];
                    std::sort(image.variables.begin(), image.variables.end());
                    if (image.variables.size() == 1 && image.label > 0) image.label = tau[image.label - 1] + 1;
                    ids.push_back(piece.symbol_index.at(image));
                }
                if (sorted_ids(std::move(ids)) == piece.monomials[b]) ++fixed;
            }
            out(s, t) = fixed;
        }
    }
    return out;
}

Report verify_rw_prop(int p, int q, int d, const Budget& budget) {
    const auto elements = enumerate_general(p, LabelAlphabet::standard(q), budget);
    const FWGradedPiece piece = build_fw_piece(p, q, d, budget);
    budget.require_dimension(word_count(d, p), "tensor power source");
    const HomDimension hom = hom_dimension(piece, budget);

    const auto position = word_positions(d, p);
    const std::size_t dim = piece.dimension();
    std::vector<SparseVector> family;
    family.reserve(elements.size());
    for (const auto& x : elements) {
        const ExactMatrix phi = phi_matrix(piece, x);
        SparseVector flat;
        for (std::size_t row = 0; row < phi.rows(); ++row) {
            for (const auto& [col, v] : phi.row(row)) flat.emplace_back(position[col] * dim + row, v);
        }
        std::sort(flat.begin(), flat.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        family.push_back(std::move(flat));
    }
    const std::size_t r = sparse_rank(family);
    const bool injective = r == elements.size();
    const bool surjective = r == hom.by_highest_weights;

    Report report;
    report.claim = "phi : Q P_p(Omega) -> Hom_gl(V^p, F_W(V)) is an isomorphism";
    report.left = {{"rank", r}};
    report.right = {{"labeled_partitions", elements.size()}, {"hom_dimension", hom.by_highest_weights}};
    report.pass = injective && surjective;
    report.witnesses = {{"p", p},
                        {"q", q},
                        {"d", d},
                        {"hypothesis_holds", d >= p},
                        {"injective", injective},
                        {"surjective", surjective},
                        {"fw_dimension", dim},
                        {"hom_dimension_by_characters", hom.by_characters}};
    return report;
}

Report verify_splitting_lemma(int p, int q, int d, const Budget& budget) {
    if (d < p) throw Error(ErrorKind::InvalidArgument, "splitting lemma check needs d >= p");
    const LabelAlphabet alphabet = LabelAlphabet::standard(q);
    const BiClassFunction general = permutation_bicharacter(p, q, BicharacterSource::General, budget);
    const BiClassFunction induced = induced_splitting_bicharacter(p, q, budget);
    const FWGradedPiece piece = build_fw_piece(p, q, d, budget);
    const BiClassFunction hom_character = fw_weight_space_bicharacter(piece);
    const HomDimension hom = hom_dimension(piece, budget);

    // splitting map on ⊔_{I ⊆ [q]} P_{p,I} against P_p(Ω)
    std::set<GeneralLabeledPartition> image;
    std::size_t domain = 0;
    for (unsigned mask = 0; mask < (1u << q); ++mask) {
        std::vector<int> labels;
        for (int k = 0; k < q; ++k) {
            if (mask & (1u << k)) labels.push_back(k + 1);
        }
        if (static_cast<int>(labels.size()) > p) continue;
        for (const auto& x : enumerate_p_labels(p, labels, budget)) {
            image.insert(splitting_map(x));
            ++domain;
        }
    }
    const auto all = enumerate_general(p, alphabet, budget);
    const bool injective = image.size() == domain;
    const bool bijective = injective && image == std::set<GeneralLabeledPartition>(all.begin(), all.end());

    json table = json::array();
    bool classwise = true;
    for (const auto& s : conjugacy_classes(p)) {
        for (const auto& t : conjugacy_classes(q)) {
            const bool agree = general(s, t) == induced(s, t) && induced(s, t) == hom_character(s, t);
            classwise = classwise && agree;
            table.push_back({{"sigma_class", s.to_string()},
                             {"tau_class", t.to_string()},
                             {"labeled_partitions", rational_to_json(general(s, t))},
                             {"induced", rational_to_json(induced(s, t))},
                             {"hom", rational_to_json(hom_character(s, t))}});
        }
    }
    const BigInt total = induced.at_identity().get_num();
    const bool dimension_ok = total == BigInt(static_cast<unsigned long>(hom.by_highest_weights));

    Report report;
    report.claim = "sum_i Ind Q P_{p,i} = Hom_gl(V^p, F_W(V)) as Sigma_p x Sigma_q representations";
    report.left = bi_class_function_to_json(induced);
    report.right = bi_class_function_to_json(hom_character);
    report.pass = classwise && dimension_ok && bijective;
    report.witnesses = {{"p", p},
                        {"q", q},
                        {"d", d},
                        {"classwise", table},
                        {"classwise_equal", classwise},
                        {"induced_dimension", big_to_json(total)},
                        {"hom_dimension", hom.by_highest_weights},
                        {"splitting_injective", injective},
                        {"splitting_bijective", bijective}};
    return report;
}

}  // namespace stablerep
