#include "stablerep/modules.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_map>

namespace stablerep {

namespace {

using GroupAlgebraElement = std::vector<std::pair<Permutation, int>>;

std::size_t checked_power(int base, int exponent) {
    std::size_t out = 1;
    for (int k = 0; k < exponent; ++k) {
        if (out > (std::size_t{1} << 40)) return out;
        out *= static_cast<std::size_t>(base);
    }
    return out;
}

/// Permutations of [0, n) preserving every block.
std::vector<Permutation> block_stabilizer(int n, const std::vector<std::vector<int>>& blocks) {
    std::vector<Permutation> out{identity_permutation(n)};
    for (const auto& block : blocks) {
        std::vector<int> arrangement = block;
        std::vector<Permutation> next;
        std::sort(arrangement.begin(), arrangement.end());
        do {
            for (const auto& base : out) {
                Permutation p = base;
                for (std::size_t k = 0; k < block.size(); ++k) p[block[k]] = arrangement[k];
                next.push_back(std::move(p));
            }
        } while (std::next_permutation(arrangement.begin(), arrangement.end()));
        out = std::move(next);
    }
    return out;
}

/// c_λ = a_λ b_λ for the tableau filled 0..r-1 along rows; R ∩ C = {id} so
/// the products p∘q are pairwise distinct.
GroupAlgebraElement young_symmetrizer(const Partition& lambda) {
    const int r = lambda.weight();
    std::vector<std::vector<int>> rows;
    std::vector<std::vector<int>> cols(lambda.empty() ? 0 : lambda.part(0));
    int next = 0;
    for (int i = 0; i < lambda.length(); ++i) {
        rows.emplace_back();
        for (int j = 0; j < lambda.part(i); ++j) {
            rows.back().push_back(next);
            cols[j].push_back(next);
            ++next;
        }
    }
    const auto row_group = block_stabilizer(r, rows);
    const auto col_group = block_stabilizer(r, cols);
    GroupAlgebraElement c;
    c.reserve(row_group.size() * col_group.size());
    for (const auto& p : row_group) {
        for (const auto& q : col_group) c.emplace_back(compose(p, q), sign(q));
    }
    return c;
}

std::vector<int> word_of(std::size_t index, int d, int r) {
    std::vector<int> w(r);
    for (int k = r - 1; k >= 0; --k) {
        w[k] = static_cast<int>(index % d);
        index /= d;
    }
    return w;
}

std::size_t index_of(const std::vector<int>& w, int d) {
    std::size_t index = 0;
    for (int letter : w) index = index * d + letter;
    return index;
}

Weight content_of(const std::vector<int>& w, int d) {
    Weight mu(d, 0);
    for (int letter : w) ++mu[letter];
    return mu;
}

/// Factor in position k moves to position π(k).
std::vector<int> permute_word(const Permutation& pi, const std::vector<int>& w) {
    std::vector<int> out(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) out[pi[k]] = w[k];
    return out;
}

SparseVector sorted_sparse(std::map<std::size_t, Rational>& acc) {
    SparseVector out;
    for (auto& [k, v] : acc) {
        if (v != 0) out.emplace_back(k, std::move(v));
    }
    return out;
}

/// E_ij on tensor space applied to a vector over word indices.
SparseVector derivation_on_words(const SparseVector& v, int i, int j, int d, int r) {
    std::map<std::size_t, Rational> acc;
    for (const auto& [index, coeff] : v) {
        std::vector<int> w = word_of(index, d, r);
        for (int k = 0; k < r; ++k) {
            if (w[k] != j) continue;
            w[k] = i;
            acc[index_of(w, d)] += coeff;
            w[k] = j;
        }
    }
    return sorted_sparse(acc);
}

/// Assembles a matrix from its columns.
ExactMatrix from_columns(std::size_t rows, const std::vector<SparseVector>& columns) {
    std::vector<SparseVector> row_data(rows);
    for (std::size_t c = 0; c < columns.size(); ++c) {
        for (const auto& [r, v] : columns[c]) row_data[r].emplace_back(c, v);
    }
    ExactMatrix m(rows, columns.size());
    for (std::size_t r = 0; r < rows; ++r) m.set_row(r, std::move(row_data[r]));
    return m;
}

}  // namespace

ExplicitModule trivial_module(int symmetric_degree, int gl_rank) {
    ExplicitModule m;
    m.dimension = 1;
    m.symmetric_degree = symmetric_degree;
    for (int i = 0; i + 1 < symmetric_degree; ++i) m.sym_generators.push_back(ExactMatrix::identity(1));
    m.gl_rank = gl_rank;
    m.gl_generators.assign(static_cast<std::size_t>(gl_rank * gl_rank), ExactMatrix(1, 1));
    m.grading = 0;
    return m;
}

ExplicitModule tensor_power_module(int d, int r, const Budget& budget) {
    if (d < 1 || r < 0) throw Error(ErrorKind::InvalidArgument, "tensor_power_module: need d >= 1, r >= 0");
    const std::size_t dim = checked_power(d, r);
    budget.require_dimension(dim, "tensor power (Q^" + std::to_string(d) + ")^{⊗" + std::to_string(r) + "}");
    ExplicitModule m;
    m.dimension = dim;
    m.symmetric_degree = r;
    m.gl_rank = d;
    m.grading = r;
    for (int s = 0; s + 1 < r; ++s) {
        const Permutation swap = adjacent_transposition(r, s);
        ExactMatrix g(dim, dim);
        for (std::size_t b = 0; b < dim; ++b) g.set(index_of(permute_word(swap, word_of(b, d, r)), d), b, 1);
        m.sym_generators.push_back(std::move(g));
    }
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            std::vector<SparseVector> columns(dim);
            for (std::size_t b = 0; b < dim; ++b) columns[b] = derivation_on_words({{b, Rational(1)}}, i, j, d, r);
            m.gl_generators.push_back(from_columns(dim, columns));
        }
    }
    return m;
}

ExplicitModule specht_module(const Partition& lambda, const Budget& budget) {
    const int r = lambda.weight();
    if (r > budget.max_specht_degree) {
        throw Error(ErrorKind::SizeBudgetExceeded, "specht_module: |λ| = " + std::to_string(r) + " exceeds bound " +
                                                       std::to_string(budget.max_specht_degree));
    }
    const std::size_t group_order = factorial(r).get_ui();
    budget.require_dimension(group_order, "group algebra Q[Σ_" + std::to_string(r) + "]");

    std::map<std::size_t, Rational> acc;
    for (const auto& [g, s] : young_symmetrizer(lambda)) acc[permutation_rank(g)] += s;
    const SparseVector c = sorted_sparse(acc);

    const auto perms = all_permutations(r);
    auto left_multiply = [&](const Permutation& s, const SparseVector& v) {
        std::map<std::size_t, Rational> out;
        for (const auto& [g, coeff] : v) out[permutation_rank(compose(s, perms[g]))] += coeff;
        return sorted_sparse(out);
    };

    std::vector<Permutation> gens;
    for (int i = 0; i + 1 < r; ++i) gens.push_back(adjacent_transposition(r, i));

    // The left ideal is the closure of c under the generators.
    EchelonBasis basis;
    std::deque<SparseVector> queue;
    if (basis.insert(c)) queue.push_back(c);
    while (!queue.empty()) {
        SparseVector v = std::move(queue.front());
        queue.pop_front();
        for (const auto& s : gens) {
            SparseVector w = left_multiply(s, v);
            if (basis.insert(w)) queue.push_back(std::move(w));
        }
    }

    ExplicitModule m;
    m.dimension = basis.size();
    m.symmetric_degree = r;
    m.grading = r;
    for (const auto& s : gens) {
        std::vector<SparseVector> columns(basis.size());
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const auto coords = basis.coordinates(left_multiply(s, basis.vector(k)));
            if (!coords) throw Error(ErrorKind::OracleDisagreement, "Specht module is not closed under Σ_r");
            for (std::size_t l = 0; l < coords->size(); ++l) {
                if ((*coords)[l] != 0) columns[k].emplace_back(l, (*coords)[l]);
            }
        }
        m.sym_generators.push_back(from_columns(basis.size(), columns));
    }
    return m;
}

ExplicitModule schur_apply(const Partition& lambda, int d, const Budget& budget) {
    if (d < 1) throw Error(ErrorKind::InvalidArgument, "schur_apply: d must be positive");
    const int r = lambda.weight();
    const std::size_t ambient = checked_power(d, r);
    budget.require_dimension(ambient, "tensor space for S_" + lambda.to_string() + "(Q^" + std::to_string(d) + ")");
    const GroupAlgebraElement c = young_symmetrizer(lambda);

    const auto weights = compositions(r, d);
    std::map<Weight, EchelonBasis> blocks;
    for (std::size_t w = 0; w < ambient; ++w) {
        const std::vector<int> word = word_of(w, d, r);
        std::map<std::size_t, Rational> acc;
        for (const auto& [g, s] : c) acc[index_of(permute_word(g, word), d)] += s;
        blocks[content_of(word, d)].insert(sorted_sparse(acc));
    }

    // Module basis: blocks in the order of `weights`.
    std::map<Weight, std::size_t> offset;
    std::size_t dim = 0;
    for (const auto& mu : weights) {
        offset[mu] = dim;
        dim += blocks[mu].size();
    }

    ExplicitModule m;
    m.dimension = dim;
    m.gl_rank = d;
    m.grading = r;
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            std::vector<SparseVector> columns(dim);
            for (const auto& mu : weights) {
                const EchelonBasis& source = blocks[mu];
                if (source.size() == 0) continue;
                Weight target = mu;
                if (i != j) {
                    if (target[j] == 0) continue;
                    --target[j];
                    ++target[i];
                }
                const EchelonBasis& image_block = blocks[target];
                for (std::size_t k = 0; k < source.size(); ++k) {
                    const SparseVector image = derivation_on_words(source.vector(k), i, j, d, r);
                    if (image.empty()) continue;
                    const auto coords = image_block.coordinates(image);
                    if (!coords) throw Error(ErrorKind::OracleDisagreement, "Schur module is not gl-stable");
                    for (std::size_t l = 0; l < coords->size(); ++l) {
                        if ((*coords)[l] != 0) columns[offset[mu] + k].emplace_back(offset[target] + l, (*coords)[l]);
                    }
                }
            }
            for (auto& col : columns) std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            m.gl_generators.push_back(from_columns(dim, columns));
        }
    }
    return m;
}

ExactMatrix permutation_matrix(const ExplicitModule& m, const Permutation& sigma) {
    if (static_cast<int>(sigma.size()) != m.symmetric_degree) {
        throw Error(ErrorKind::DegreeMismatch, "permutation of the wrong degree for this module");
    }
    // Bubble sort: σ∘s_{i1}∘...∘s_{im} = id, hence ρ(σ) = ρ(s_im)...ρ(s_i1).
    Permutation a = sigma;
    ExactMatrix result = ExactMatrix::identity(m.dimension);
    bool swapped = true;
    while (swapped) {
        swapped = false;
        for (std::size_t i = 0; i + 1 < a.size(); ++i) {
            if (a[i] > a[i + 1]) {
                std::swap(a[i], a[i + 1]);
                result = m.sym_generators[i] * result;
                swapped = true;
            }
        }
    }
    return result;
}

ClassFunction module_character(const ExplicitModule& m) {
    ClassFunction f(m.symmetric_degree);
    for (const auto& rho : conjugacy_classes(m.symmetric_degree)) f[rho] = permutation_matrix(m, cycle_type_representative(rho)).trace();
    return f;
}

bool satisfies_coxeter_relations(const ExplicitModule& m) {
    const auto& s = m.sym_generators;
    const ExactMatrix id = ExactMatrix::identity(m.dimension);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!(s[i] * s[i] == id)) return false;
        if (i + 1 < s.size()) {
            const ExactMatrix st = s[i] * s[i + 1];
            if (!(st * st * st == id)) return false;
        }
        for (std::size_t j = i + 2; j < s.size(); ++j) {
            if (!(s[i] * s[j] == s[j] * s[i])) return false;
        }
    }
    return true;
}

bool satisfies_gl_relations(const ExplicitModule& m) {
    const int d = m.gl_rank;
    const ExactMatrix zero(m.dimension, m.dimension);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            for (int k = 0; k < d; ++k) {
                for (int l = 0; l < d; ++l) {
                    ExactMatrix expected = zero;
                    if (j == k) expected = expected + m.gl(i, l);
                    if (l == i) expected = expected - m.gl(k, j);
                    if (!(commutator(m.gl(i, j), m.gl(k, l)) == expected)) return false;
                }
            }
        }
    }
    return true;
}

bool actions_commute(const ExplicitModule& m) {
    for (const auto& s : m.sym_generators) {
        for (const auto& e : m.gl_generators) {
            if (!(s * e == e * s)) return false;
        }
    }
    return true;
}

std::optional<std::vector<Weight>> diagonal_weights(const ExplicitModule& m) {
    const int d = m.gl_rank;
    std::vector<Weight> weights(m.dimension, Weight(d, 0));
    for (int i = 0; i < d; ++i) {
        const ExactMatrix& h = m.gl(i, i);
        for (std::size_t b = 0; b < m.dimension; ++b) {
            const auto& row = h.row(b);
            if (row.empty()) continue;
            if (row.size() != 1 || row.front().first != b) return std::nullopt;
            const Rational& value = row.front().second;
            if (value.get_den() != 1) {
                throw Error(ErrorKind::NonPolynomialAction, "non-integral torus weight " + value.get_str());
            }
            weights[b][i] = static_cast<int>(value.get_num().get_si());
        }
    }
    return weights;
}

WeightMultiset torus_weights(const ExplicitModule& m) {
    if (m.gl_rank == 0) throw Error(ErrorKind::InvalidArgument, "module carries no gl action");
    const int d = m.gl_rank;
    WeightMultiset out;
    if (auto diagonal = diagonal_weights(m)) {
        for (const auto& w : *diagonal) {
            if (std::any_of(w.begin(), w.end(), [](int x) { return x < 0; })) {
                throw Error(ErrorKind::NonPolynomialAction, "negative torus weight");
            }
            out[w] += 1;
        }
        return out;
    }
    // Non-diagonal torus: the module must be homogeneous, Σ E_ii = r·id.
    ExactMatrix total(m.dimension, m.dimension);
    for (int i = 0; i < d; ++i) total = total + m.gl(i, i);
    const Rational r = m.dimension == 0 ? Rational(0) : total.at(0, 0);
    if (!(total == r * ExactMatrix::identity(m.dimension)) || r.get_den() != 1 || r < 0) {
        throw Error(ErrorKind::NonPolynomialAction, "torus is neither diagonal nor a homogeneous polynomial action");
    }
    std::size_t found = 0;
    for (const auto& mu : compositions(static_cast<int>(r.get_num().get_si()), d)) {
        std::vector<ExactMatrix> shifted;
        for (int i = 0; i < d; ++i) shifted.push_back(m.gl(i, i) - Rational(mu[i]) * ExactMatrix::identity(m.dimension));
        const std::size_t dim = kernel_dimension(shifted, m.dimension);
        if (dim) {
            out[mu] = dim;
            found += dim;
        }
    }
    if (found != m.dimension) throw Error(ErrorKind::NonPolynomialAction, "torus action is not diagonalizable over polynomial weights");
    return out;
}

IrredDecomposition decompose_weights(const WeightMultiset& weights, int d) {
    WeightMultiset remaining = weights;
    std::erase_if(remaining, [](const auto& e) { return e.second == 0; });
    IrredDecomposition out;
    while (!remaining.empty()) {
        // The lexicographically largest weight of a Weyl-invariant multiset is dominant.
        const Weight top = remaining.rbegin()->first;
        const BigInt mult = remaining.rbegin()->second;
        if (!is_dominant(top) || mult < 0) {
            throw Error(ErrorKind::NonPolynomialAction, "weight multiset is not a sum of Schur characters");
        }
        const Partition lambda{std::vector<int>(top)};
        out.add(lambda, mult);
        for (const auto& [w, k] : schur_weight_multiplicities(lambda, d)) {
            BigInt& slot = remaining[w];
            slot -= mult * k;
            if (slot < 0) throw Error(ErrorKind::NonPolynomialAction, "weight multiset is not a sum of Schur characters");
            if (slot == 0) remaining.erase(w);
        }
    }
    return out;
}

IrredDecomposition gl_decompose(const ExplicitModule& m) { return decompose_weights(torus_weights(m), m.gl_rank); }

namespace {

std::size_t highest_weight_multiplicity(const ExplicitModule& m, const std::vector<Weight>& weights, const Weight& lambda) {
    std::unordered_map<std::size_t, std::size_t> local;
    for (std::size_t b = 0; b < weights.size(); ++b) {
        if (weights[b] == lambda) local.emplace(b, local.size());
    }
    if (local.empty()) return 0;
    std::vector<SparseVector> rows;
    for (int i = 0; i + 1 < m.gl_rank; ++i) {
        const ExactMatrix& raise = m.gl(i, i + 1);
        for (std::size_t row = 0; row < raise.rows(); ++row) {
            SparseVector restricted;
            for (const auto& [col, v] : raise.row(row)) {
                if (auto it = local.find(col); it != local.end()) restricted.emplace_back(it->second, v);
            }
            if (restricted.empty()) continue;
            std::sort(restricted.begin(), restricted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            rows.push_back(std::move(restricted));
        }
    }
    return local.size() - sparse_rank(rows);
}

std::vector<Weight> require_diagonal(const ExplicitModule& m) {
    if (m.gl_rank == 0) throw Error(ErrorKind::InvalidArgument, "module carries no gl action");
    auto w = diagonal_weights(m);
    if (!w) throw Error(ErrorKind::InvalidArgument, "highest-weight computations need a diagonal torus");
    return *w;
}

}  // namespace

std::size_t highest_weight_multiplicity(const ExplicitModule& m, const Partition& lambda) {
    if (lambda.length() > m.gl_rank) return 0;
    Weight target(m.gl_rank, 0);
    for (int i = 0; i < lambda.length(); ++i) target[i] = lambda.part(i);
    return highest_weight_multiplicity(m, require_diagonal(m), target);
}

std::size_t hom_dimension_by_highest_weights(const ExplicitModule& source, const ExplicitModule& target) {
    if (source.gl_rank != target.gl_rank) throw Error(ErrorKind::InvalidArgument, "gl ranks differ");
    const auto source_weights = require_diagonal(source);
    const auto target_weights = require_diagonal(target);
    std::set<Weight> dominant;
    for (const auto& w : source_weights) {
        if (is_dominant(w)) dominant.insert(w);
    }
    std::size_t total = 0;
    for (const auto& lambda : dominant) {
        const std::size_t a = highest_weight_multiplicity(source, source_weights, lambda);
        if (a == 0) continue;
        total += a * highest_weight_multiplicity(target, target_weights, lambda);
    }
    return total;
}

std::size_t intertwiner_dimension(const ExplicitModule& source, const ExplicitModule& target, const Budget& budget) {
    const int d = source.gl_rank;
    if (d != target.gl_rank) throw Error(ErrorKind::InvalidArgument, "gl ranks differ");
    const auto sw = require_diagonal(source);
    const auto tw = require_diagonal(target);

    // Unknown X[a][b] for weight(a) == weight(b).
    std::map<Weight, std::vector<std::size_t>> source_by_weight;
    std::map<Weight, std::vector<std::size_t>> target_by_weight;
    for (std::size_t b = 0; b < sw.size(); ++b) source_by_weight[sw[b]].push_back(b);
    for (std::size_t a = 0; a < tw.size(); ++a) target_by_weight[tw[a]].push_back(a);
    std::vector<std::size_t> position_in_weight(std::max(sw.size(), tw.size()), 0);
    std::vector<std::size_t> source_pos(sw.size());
    std::vector<std::size_t> target_pos(tw.size());
    std::map<Weight, std::size_t> offset;
    std::size_t unknowns = 0;
    for (const auto& [w, sources] : source_by_weight) {
        auto it = target_by_weight.find(w);
        if (it == target_by_weight.end()) continue;
        offset[w] = unknowns;
        for (std::size_t k = 0; k < sources.size(); ++k) source_pos[sources[k]] = k;
        for (std::size_t k = 0; k < it->second.size(); ++k) target_pos[it->second[k]] = k;
        unknowns += sources.size() * it->second.size();
    }
    budget.require_dimension(unknowns, "intertwiner system");
    auto unknown = [&](std::size_t a, std::size_t b) -> std::optional<std::size_t> {
        if (tw[a] != sw[b]) return std::nullopt;
        auto it = offset.find(tw[a]);
        if (it == offset.end()) return std::nullopt;
        return it->second + target_pos[a] * source_by_weight[sw[b]].size() + source_pos[b];
    };

    std::vector<SparseVector> equations;
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (i == j) continue;  // diagonal generators hold by weight preservation
            const ExactMatrix source_cols = source.gl(i, j).transpose();
            const ExactMatrix& target_gen = target.gl(i, j);
            for (std::size_t c = 0; c < sw.size(); ++c) {
                Weight shifted = sw[c];
                if (shifted[j] == 0) continue;
                --shifted[j];
                ++shifted[i];
                auto targets = target_by_weight.find(shifted);
                if (targets == target_by_weight.end()) continue;
                for (std::size_t a : targets->second) {
                    // (X E_src - E_tgt X)[a][c]
                    std::map<std::size_t, Rational> acc;
                    for (const auto& [b, v] : source_cols.row(c)) {
                        if (auto u = unknown(a, b)) acc[*u] += v;
                    }
                    for (const auto& [b, v] : target_gen.row(a)) {
                        if (auto u = unknown(b, c)) acc[*u] -= v;
                    }
                    SparseVector row = sorted_sparse(acc);
                    if (!row.empty()) equations.push_back(std::move(row));
                }
            }
        }
    }
    return unknowns - sparse_rank(equations);
}

Report verify_cauchy(int r, int dV, int dW, const Budget& budget) {
    if (r < 0 || dV < 1 || dW < 1) throw Error(ErrorKind::InvalidArgument, "verify_cauchy: need r >= 0, dV, dW >= 1");
    const int cells = dV * dW;
    const BigInt left_dim = binomial(cells, r);
    if (left_dim > BigInt(static_cast<unsigned long>(budget.max_dimension))) {
        throw Error(ErrorKind::SizeBudgetExceeded, "Λ^" + std::to_string(r) + " of a " + std::to_string(cells) +
                                                       "-dimensional space exceeds the budget");
    }

    // Left side: basis of Λ^r(V⊗W) is r-subsets of the grid of e_i⊗f_j.
    WeightMultiset left_weights;
    std::size_t left_count = 0;
    std::vector<int> chosen;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(chosen.size()) == r) {
            Weight w(dV + dW, 0);
            for (int cell : chosen) {
                ++w[cell / dW];
                ++w[dV + cell % dW];
            }
            left_weights[w] += 1;
            ++left_count;
            return;
        }
        for (int cell = start; cell < cells; ++cell) {
            chosen.push_back(cell);
            rec(cell + 1);
            chosen.pop_back();
        }
    };
    rec(0);

    WeightMultiset right_weights;
    BigInt right_dim = 0;
    json terms = json::array();
    for (const auto& lambda : enumerate_partitions(r)) {
        const Partition lt = transpose(lambda);
        const BigInt a = schur_gl_dimension(lambda, dV);
        const BigInt b = schur_gl_dimension(lt, dW);
        right_dim += a * b;
        terms.push_back({{"lambda", lambda.to_string()}, {"dim_V_side", big_to_json(a)}, {"dim_W_side", big_to_json(b)}});
        if (a == 0 || b == 0) continue;
        const auto wv = schur_weight_multiplicities(lambda, dV);
        const auto ww = schur_weight_multiplicities(lt, dW);
        for (const auto& [x, kx] : wv) {
            for (const auto& [y, ky] : ww) {
                Weight w = x;
                w.insert(w.end(), y.begin(), y.end());
                right_weights[w] += kx * ky;
            }
        }
    }

    Report report;
    report.claim = "Λ^" + std::to_string(r) + "(Q^" + std::to_string(dV) + "⊗Q^" + std::to_string(dW) +
                   ") ≅ ⊕_{|λ|=" + std::to_string(r) + "} S_λ(Q^" + std::to_string(dV) + ")⊗S_{λ^T}(Q^" + std::to_string(dW) + ")";
    report.left = {{"dimension", big_to_json(left_dim)}, {"distinct_biweights", left_weights.size()}};
    report.right = {{"dimension", big_to_json(right_dim)}, {"distinct_biweights", right_weights.size()}};
    report.pass = left_dim == right_dim && BigInt(static_cast<unsigned long>(left_count)) == left_dim &&
                  left_weights == right_weights;
    report.witnesses = {{"terms", terms}, {"biweights_agree", left_weights == right_weights}};
    return report;
}

Report verify_schur_weyl(int r, int d, const Budget& budget) {
    const ExplicitModule tensor = tensor_power_module(d, r, budget);
    const auto weights = *diagonal_weights(tensor);
    const auto& classes = conjugacy_classes(r);
    const auto all_weights = compositions(r, d);

    std::map<Partition, std::map<Weight, BigInt>> kostka;
    for (const auto& lambda : enumerate_partitions(r)) {
        for (const auto& [w, k] : schur_weight_multiplicities(lambda, d)) kostka[lambda][w] = k;
    }

    // trace_on_weight[μ] is the Σ_r class function on the weight-μ space.
    std::map<Weight, ClassFunction> trace_on_weight;
    for (const auto& mu : all_weights) trace_on_weight.emplace(mu, ClassFunction(r));
    bool traces_agree = true;
    json mismatches = json::array();
    for (const auto& rho : classes) {
        const ExactMatrix p = permutation_matrix(tensor, cycle_type_representative(rho));
        for (std::size_t b = 0; b < tensor.dimension; ++b) trace_on_weight.at(weights[b])[rho] += p.at(b, b);
        for (const auto& mu : all_weights) {
            Rational expected = 0;
            for (const auto& lambda : classes) {
                auto it = kostka[lambda].find(mu);
                if (it != kostka[lambda].end()) expected += Rational(it->second) * irreducible_character(lambda)[rho];
            }
            if (trace_on_weight.at(mu)[rho] != expected) {
                traces_agree = false;
                mismatches.push_back({{"class", rho.to_string()}, {"weight", mu}});
            }
        }
    }

    // Recover the GL×Σ_r decomposition: unwind the unitriangular Kostka
    // matrix over dominant weights, then split each piece into Σ_r irreducibles.
    PairDecomposition recovered;
    std::map<Partition, ClassFunction> isotypic;
    for (const auto& nu : classes) {
        if (nu.length() > d) continue;
        Weight nu_weight(d, 0);
        for (int i = 0; i < nu.length(); ++i) nu_weight[i] = nu.part(i);
        ClassFunction piece = trace_on_weight.at(nu_weight);
        for (const auto& [lambda, a] : isotypic) {
            auto it = kostka[lambda].find(nu_weight);
            if (it != kostka[lambda].end()) piece -= Rational(it->second) * a;
        }
        const IrredDecomposition row = decompose(piece, DecomposeMode::Virtual);
        for (const auto& [mu, m] : row.terms()) recovered.add({nu, mu}, m);
        isotypic.emplace(nu, std::move(piece));
    }
    PairDecomposition expected;
    BigInt right_dim = 0;
    for (const auto& lambda : classes) {
        right_dim += schur_gl_dimension(lambda, d) * specht_dimension(lambda);
        if (lambda.length() <= d) expected.add({lambda, lambda}, 1);
    }

    Report report;
    report.claim = "(Q^" + std::to_string(d) + ")^{⊗" + std::to_string(r) + "} ≅ ⊕_{|λ|=" + std::to_string(r) + "} S_λ⊗S^λ";
    report.left = {{"dimension", tensor.dimension}, {"decomposition", decomposition_to_json(recovered)}};
    report.right = {{"dimension", big_to_json(right_dim)}, {"decomposition", decomposition_to_json(expected)}};
    report.pass = traces_agree && right_dim == BigInt(static_cast<unsigned long>(tensor.dimension)) && recovered == expected;
    report.witnesses = {{"classes_checked", classes.size()}, {"weights_checked", all_weights.size()}, {"trace_mismatches", mismatches}};
    return report;
}

Report split_extension_filtration_check(const Partition& lambda, int dA, int dC, const Budget& budget) {
    if (dA < 1 || dC < 1) throw Error(ErrorKind::InvalidArgument, "split_extension_filtration_check: need dA, dC >= 1");
    const int dB = dA + dC;
    budget.require_dimension(checked_power(dB, lambda.weight()), "tensor space for S_λ(Q^" + std::to_string(dB) + ")");

    BigInt graded_sum = 0;
    BigInt alternating_sum = 0;
    json terms = json::array();
    for (const auto& mu : subpartitions(lambda)) {
        const IrredDecomposition skew = skew_schur_decompose(SkewShape(lambda, mu));
        BigInt skew_on_a = 0;
        BigInt skew_on_b = 0;
        for (const auto& [nu, c] : skew.terms()) {
            skew_on_a += c * schur_gl_dimension(nu, dA);
            skew_on_b += c * schur_gl_dimension(nu, dB);
        }
        const BigInt graded = skew_on_a * schur_gl_dimension(mu, dC);
        const BigInt resolution = skew_on_b * schur_gl_dimension(transpose(mu), dC);
        graded_sum += graded;
        if (mu.weight() % 2 == 0) alternating_sum += resolution;
        else alternating_sum -= resolution;
        terms.push_back({{"mu", mu.to_string()},
                         {"graded_piece", big_to_json(graded)},
                         {"resolution_term", big_to_json(resolution)}});
    }

    const BigInt dim_b = schur_gl_dimension(lambda, dB);
    const BigInt dim_a = schur_gl_dimension(lambda, dA);
    const std::size_t explicit_b = schur_apply(lambda, dB, budget).dimension;
    const std::size_t explicit_a = schur_apply(lambda, dA, budget).dimension;

    Report report;
    report.claim = "S_" + lambda.to_string() + " on 0→Q^" + std::to_string(dA) + "→Q^" + std::to_string(dB) + "→Q^" +
                   std::to_string(dC) + "→0: filtration and resolution identities";
    report.left = {{"dim_S_lambda_B", big_to_json(dim_b)}, {"dim_S_lambda_A", big_to_json(dim_a)}};
    report.right = {{"graded_pieces_sum", big_to_json(graded_sum)}, {"resolution_euler_sum", big_to_json(alternating_sum)}};
    const bool identity_i = dim_b == graded_sum;
    const bool identity_ii = dim_a == alternating_sum;
    const bool explicit_ok = BigInt(static_cast<unsigned long>(explicit_b)) == dim_b &&
                             BigInt(static_cast<unsigned long>(explicit_a)) == dim_a;
    report.pass = identity_i && identity_ii && explicit_ok;
    report.witnesses = {{"identity_i", identity_i},
                        {"identity_ii", identity_ii},
                        {"explicit_dim_S_lambda_B", explicit_b},
                        {"explicit_dim_S_lambda_A", explicit_a},
                        {"terms", terms}};
    return report;
}

}  // namespace stablerep
