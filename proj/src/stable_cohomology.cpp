#include "stablerep/stable_cohomology.hpp"

#include <algorithm>

#include "stablerep/fw_algebra.hpp"
#include "stablerep/labeled_partitions.hpp"

namespace stablerep {

namespace {

BiClassFunction pq_character(int p, int i, const Budget& budget) {
    return permutation_bicharacter(p, i, BicharacterSource::LabeledPQ, budget);
}

/// dim Sym^k of an n-dimensional space.
BigInt sym_power_dimension(long n, long k) {
    if (k == 0) return 1;
    if (n == 0) return 0;
    return binomial(n + k - 1, k);
}

}  // namespace

std::string SymbolicCoefficient::to_string() const {
    const std::string h = n ? "H(" + std::to_string(*n) + ")" : std::string("H(n)");
    return h + "^{⊗" + std::to_string(p) + "} ⊗ (" + h + "^*)^{⊗" + std::to_string(q) + "}";
}

std::string StableCohomologyResult::valid_range() const {
    return "2*" + std::to_string(degree) + " <= n - " + std::to_string(p()) + " - " + std::to_string(q()) + " - 3";
}

StableCohomologyResult stable_cohomology(int p, int q, int degree, const Budget& budget) {
    if (p < 0 || q < 0) throw Error(ErrorKind::InvalidArgument, "p and q must be non-negative");
    StableCohomologyResult out;
    out.coefficient = {p, q, std::nullopt};
    out.degree = degree;
    out.character = BiClassFunction(p, q);
    if (q > p || degree != p - q) return out;
    out.character = twist_first_by_sign(pq_character(p, q, budget));
    out.decomposition = decompose(out.character, DecomposeMode::Genuine);
    out.dimension = out.character.at_identity().get_num();
    if (dimension_of(out.decomposition) != out.dimension) {
        throw Error(ErrorKind::OracleDisagreement, "decomposition does not reproduce the dimension");
    }
    return out;
}

json to_json(const StableCohomologyResult& r) {
    return {{"p", r.p()},
            {"q", r.q()},
            {"degree", r.degree},
            {"dimension", big_to_json(r.dimension)},
            {"valid_n_bound", r.valid_n_bound()},
            {"decomposition", decomposition_to_json(r.decomposition)},
            {"character", bi_class_function_to_json(r.character)}};
}

StableCohomologyResult stable_cohomology_from_json(const json& j) {
    StableCohomologyResult r;
    r.coefficient = {j.at("p").get<int>(), j.at("q").get<int>(), std::nullopt};
    r.degree = j.at("degree").get<int>();
    r.dimension = big_from_json(j.at("dimension"));
    r.decomposition = pair_decomposition_from_json(j.at("decomposition"));
    r.character = bi_class_function_from_json(j.at("character"), r.p(), r.q());
    if (j.at("valid_n_bound").get<int>() != r.valid_n_bound()) {
        throw Error(ErrorKind::InvalidArgument, "valid_n_bound inconsistent with p, q, degree");
    }
    return r;
}

BigInt hom_side_total(int p, int q, int d, const Budget& budget) {
    if (p < 0 || q < 0 || d < 1) throw Error(ErrorKind::InvalidArgument, "hom_side_total needs p, q >= 0 and d >= 1");
    std::vector<BigInt> generators(static_cast<std::size_t>(p) + 1, 0);
    for (int i = 1; i <= p; ++i) generators[i] = i == 1 ? BigInt((q + 1) * d) : binomial(d + i - 1, i);
    const BigInt series = sym_algebra_series(generators, p)[p];

    ClassFunction restricted(p);
    for (int i = 0; i <= std::min(p, q); ++i) {
        const BiClassFunction f = pq_character(p, i, budget);
        const Partition identity{std::vector<int>(static_cast<std::size_t>(i), 1)};
        for (const auto& s : conjugacy_classes(p)) restricted[s] += Rational(binomial(q, i)) * f(s, identity);
    }
    BigInt assembled = 0;
    const IrredDecomposition multiplicities = decompose(restricted);
    for (const auto& [lambda, mult] : multiplicities.terms()) assembled += mult * schur_gl_dimension(lambda, d);

    if (series != assembled) {
        throw Error(ErrorKind::OracleDisagreement, "hom_side_total: series gives " + series.get_str() + ", labeled partitions give " +
                                                       assembled.get_str());
    }
    return series;
}

Report step1_dimension_identity(int p, int q, int d) {
    if (p < 0 || q < 0 || d < 1) throw Error(ErrorKind::InvalidArgument, "step1 identity needs p, q >= 0 and d >= 1");
    BigInt left = 0;
    json terms = json::array();
    for (int k = 0; k <= p; ++k) {
        const BigInt a = graded_sym_algebra_dimension(d, 0, p - k);
        const BigInt b = sym_power_dimension(static_cast<long>(q) * d, k);
        left += a * b;
        terms.push_back({{"k", k}, {"sym_sym", big_to_json(a)}, {"sym_linear", big_to_json(b)}});
    }
    const BigInt right = graded_sym_algebra_dimension(d, q, p);
    Report report;
    report.claim = "sum_k [Sym(Sym^{>0} V[2])]_{2(p-k)} Sym^k(V[2]^q) = [Sym(V[2]^q + Sym^{>0} V[2])]_{2p}";
    report.left = big_to_json(left);
    report.right = big_to_json(right);
    report.pass = left == right;
    report.witnesses = {{"p", p}, {"q", q}, {"d", d}, {"terms", terms}};
    return report;
}

Report theorem_a_induction_check(int p, int q, const Budget& budget) {
    if (q < 0 || q > p) throw Error(ErrorKind::InvalidArgument, "induction check needs 0 <= q <= p");
    const FWGradedPiece piece = build_fw_piece(p, q, std::max(p, 1), budget);
    const BiClassFunction total = fw_weight_space_bicharacter(piece);
    BiClassFunction residue = total;
    for (int i = 0; i < q; ++i) residue -= induce_second_factor(pq_character(p, i, budget), q);
    const BiClassFunction direct = pq_character(p, q, budget);

    json table = json::array();
    for (const auto& s : conjugacy_classes(p)) {
        for (const auto& t : conjugacy_classes(q)) {
            table.push_back({{"sigma_class", s.to_string()},
                             {"tau_class", t.to_string()},
                             {"residue", rational_to_json(residue(s, t))},
                             {"direct", rational_to_json(direct(s, t))}});
        }
    }
    Report report;
    report.claim = "Hom character minus sum_{i<q} Ind Q P_{p,i} equals Q P_{p,q}";
    report.left = bi_class_function_to_json(residue);
    report.right = bi_class_function_to_json(direct);
    report.pass = residue == direct;
    report.witnesses = {{"p", p},
                        {"q", q},
                        {"total_dimension", rational_to_json(total.at_identity())},
                        {"residue_dimension", rational_to_json(residue.at_identity())},
                        {"classwise", table}};
    return report;
}

std::vector<DimensionRow> dimension_table(int p_max, int q_max, const Budget& budget) {
    if (p_max < 0 || q_max < 0) throw Error(ErrorKind::InvalidArgument, "table bounds must be non-negative");
    std::vector<DimensionRow> rows;
    for (int p = 0; p <= p_max; ++p) {
        for (int q = 0; q <= std::min(p, q_max); ++q) {
            DimensionRow row;
            row.p = p;
            row.q = q;
            row.degree = p - q;
            row.dimension = static_cast<unsigned long>(enumerate_pq(p, q, budget).size());
            row.minimal_n = 2 * row.degree + p + q + 3;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

json to_json(const std::vector<DimensionRow>& table) {
    json out = json::array();
    for (const auto& row : table) {
        out.push_back({{"p", row.p},
                       {"q", row.q},
                       {"degree", row.degree},
                       {"dimension", big_to_json(row.dimension)},
                       {"minimal_n", row.minimal_n}});
    }
    return out;
}

std::vector<DimensionRow> dimension_table_from_json(const json& j) {
    std::vector<DimensionRow> rows;
    for (const auto& e : j) {
        rows.push_back({e.at("p").get<int>(), e.at("q").get<int>(), e.at("degree").get<int>(), big_from_json(e.at("dimension")),
                        e.at("minimal_n").get<int>()});
    }
    return rows;
}

}  // namespace stablerep
