#include "stablerep/characters.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>

#include "stablerep/errors.hpp"

namespace stablerep {

namespace {

std::mutex& cache_mutex() {
    static std::mutex m;
    return m;
}

BigInt require_integer(const Rational& value, DecomposeMode mode, const std::string& what) {
    if (value.get_den() != 1) {
        throw Error(ErrorKind::NonIntegralMultiplicity, what + " has multiplicity " + value.get_str());
    }
    if (mode == DecomposeMode::Genuine && value < 0) {
        throw Error(ErrorKind::NegativeMultiplicity, what + " has multiplicity " + value.get_str());
    }
    return value.get_num();
}

// Murnaghan–Nakayama on beta-sets: removing a rim hook of length k moves one
// bead from b to b-k; the sign counts the beads jumped over.
long long mn_value(const std::vector<int>& beta, const std::vector<int>& rho, std::size_t next,
                   std::map<std::pair<std::vector<int>, std::size_t>, long long>& memo) {
    if (next == rho.size()) return 1;
    auto key = std::make_pair(beta, next);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int k = rho[next];
    const std::set<int> beads(beta.begin(), beta.end());
    long long total = 0;
    for (int b : beta) {
        const int target = b - k;
        if (target < 0 || beads.count(target)) continue;
        int jumped = 0;
        for (int c : beta) {
            if (c > target && c < b) ++jumped;
        }
        std::vector<int> moved = beta;
        std::replace(moved.begin(), moved.end(), b, target);
        std::sort(moved.begin(), moved.end(), std::greater<>());
        const long long sub = mn_value(moved, rho, next + 1, memo);
        total += (jumped % 2 == 0) ? sub : -sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

ClassFunction compute_irreducible(const Partition& lambda) {
    const int r = lambda.weight();
    const int len = lambda.length();
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i) beta[i] = lambda.part(i) + len - 1 - i;
    std::map<std::pair<std::vector<int>, std::size_t>, long long> memo;
    const auto& classes = conjugacy_classes(r);
    std::vector<Rational> values;
    values.reserve(classes.size());
    for (const auto& rho : classes) {
        // largest parts first keeps the branching small
        values.emplace_back(static_cast<long>(mn_value(beta, rho.parts(), 0, memo)));
        memo.clear();
    }
    return ClassFunction(r, std::move(values));
}

}  // namespace

const std::vector<Partition>& conjugacy_classes(int degree) {
    if (degree < 0) throw Error(ErrorKind::InvalidArgument, "negative symmetric group degree");
    static std::map<int, std::vector<Partition>> cache;
    std::lock_guard lock(cache_mutex());
    auto it = cache.find(degree);
    if (it == cache.end()) it = cache.emplace(degree, enumerate_partitions(degree)).first;
    return it->second;
}

std::size_t class_index(const Partition& cycle_type) {
    const auto& classes = conjugacy_classes(cycle_type.weight());
    auto it = std::lower_bound(classes.begin(), classes.end(), cycle_type);
    return static_cast<std::size_t>(it - classes.begin());
}

ClassFunction::ClassFunction(int degree) : degree_(degree), values_(conjugacy_classes(degree).size(), 0) {}

ClassFunction::ClassFunction(int degree, std::vector<Rational> values) : degree_(degree), values_(std::move(values)) {
    if (values_.size() != conjugacy_classes(degree).size()) {
        throw Error(ErrorKind::InvalidArgument, "class function needs one value per cycle type");
    }
}

const Rational& ClassFunction::operator[](const Partition& cycle_type) const {
    if (cycle_type.weight() != degree_) throw Error(ErrorKind::DegreeMismatch, "cycle type of wrong weight");
    return values_[class_index(cycle_type)];
}

Rational& ClassFunction::operator[](const Partition& cycle_type) {
    if (cycle_type.weight() != degree_) throw Error(ErrorKind::DegreeMismatch, "cycle type of wrong weight");
    return values_[class_index(cycle_type)];
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& other) {
    if (other.degree_ != degree_) throw Error(ErrorKind::DegreeMismatch, "adding class functions of different degree");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
    return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& other) {
    if (other.degree_ != degree_) throw Error(ErrorKind::DegreeMismatch, "subtracting class functions of different degree");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
    return *this;
}

ClassFunction operator*(const Rational& s, ClassFunction a) {
    for (auto& v : a.values_) v *= s;
    return a;
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
    if (a.degree_ != b.degree_) throw Error(ErrorKind::DegreeMismatch, "multiplying class functions of different degree");
    ClassFunction out(a.degree_);
    for (std::size_t i = 0; i < a.values_.size(); ++i) out.values_[i] = a.values_[i] * b.values_[i];
    return out;
}

BiClassFunction::BiClassFunction(int p, int q)
    : p_(p), q_(q), values_(conjugacy_classes(p).size() * conjugacy_classes(q).size(), 0) {}

std::size_t BiClassFunction::index(const Partition& sigma_type, const Partition& tau_type) const {
    if (sigma_type.weight() != p_ || tau_type.weight() != q_) {
        throw Error(ErrorKind::DegreeMismatch, "cycle type pair of wrong weights");
    }
    return class_index(sigma_type) * conjugacy_classes(q_).size() + class_index(tau_type);
}

const Rational& BiClassFunction::operator()(const Partition& s, const Partition& t) const { return values_[index(s, t)]; }
Rational& BiClassFunction::operator()(const Partition& s, const Partition& t) { return values_[index(s, t)]; }

BiClassFunction& BiClassFunction::operator+=(const BiClassFunction& other) {
    if (other.p_ != p_ || other.q_ != q_) throw Error(ErrorKind::DegreeMismatch, "adding bi-class functions of different degrees");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
    return *this;
}

BiClassFunction& BiClassFunction::operator-=(const BiClassFunction& other) {
    if (other.p_ != p_ || other.q_ != q_) throw Error(ErrorKind::DegreeMismatch, "subtracting bi-class functions of different degrees");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
    return *this;
}

BiClassFunction outer_product(const ClassFunction& a, const ClassFunction& b) {
    BiClassFunction out(a.degree(), b.degree());
    for (const auto& s : conjugacy_classes(a.degree())) {
        for (const auto& t : conjugacy_classes(b.degree())) out(s, t) = a[s] * b[t];
    }
    return out;
}

ClassFunction irreducible_character(const Partition& lambda) {
    static std::map<Partition, ClassFunction> cache;
    {
        std::lock_guard lock(cache_mutex());
        if (auto it = cache.find(lambda); it != cache.end()) return it->second;
    }
    ClassFunction chi = compute_irreducible(lambda);
    std::lock_guard lock(cache_mutex());
    return cache.emplace(lambda, std::move(chi)).first->second;
}

ClassFunction trivial_character(int degree) {
    ClassFunction f(degree);
    for (const auto& rho : conjugacy_classes(degree)) f[rho] = 1;
    return f;
}

ClassFunction sign_character(int degree) {
    ClassFunction f(degree);
    for (const auto& rho : conjugacy_classes(degree)) f[rho] = cycle_type_sign(rho);
    return f;
}

ClassFunction regular_character(int degree) {
    ClassFunction f(degree);
    f[conjugacy_classes(degree).back()] = Rational(factorial(degree));
    return f;
}

Rational inner_product(const ClassFunction& a, const ClassFunction& b) {
    if (a.degree() != b.degree()) {
        throw Error(ErrorKind::DegreeMismatch, "inner product of class functions on Σ_" + std::to_string(a.degree()) +
                                                   " and Σ_" + std::to_string(b.degree()));
    }
    Rational sum = 0;
    for (const auto& rho : conjugacy_classes(a.degree())) sum += Rational(class_size(rho)) * a[rho] * b[rho];
    return sum / Rational(factorial(a.degree()));
}

Rational inner_product(const BiClassFunction& a, const BiClassFunction& b) {
    if (a.p() != b.p() || a.q() != b.q()) throw Error(ErrorKind::DegreeMismatch, "inner product of bi-class functions");
    Rational sum = 0;
    for (const auto& s : conjugacy_classes(a.p())) {
        const BigInt cs = class_size(s);
        for (const auto& t : conjugacy_classes(a.q())) sum += Rational(cs * class_size(t)) * a(s, t) * b(s, t);
    }
    return sum / Rational(factorial(a.p()) * factorial(a.q()));
}

IrredDecomposition decompose(const ClassFunction& f, DecomposeMode mode) {
    IrredDecomposition out;
    for (const auto& lambda : conjugacy_classes(f.degree())) {
        const Rational m = inner_product(f, irreducible_character(lambda));
        out.add(lambda, require_integer(m, mode, "irreducible " + lambda.to_string()));
    }
    return out;
}

PairDecomposition decompose(const BiClassFunction& f, DecomposeMode mode) {
    PairDecomposition out;
    for (const auto& lambda : conjugacy_classes(f.p())) {
        const ClassFunction chi_l = irreducible_character(lambda);
        for (const auto& mu : conjugacy_classes(f.q())) {
            const Rational m = inner_product(f, outer_product(chi_l, irreducible_character(mu)));
            out.add({lambda, mu}, require_integer(m, mode, "irreducible (" + lambda.to_string() + ")⊠(" + mu.to_string() + ")"));
        }
    }
    return out;
}

ClassFunction character_of(const IrredDecomposition& d, int degree) {
    ClassFunction f(degree);
    for (const auto& [lambda, m] : d.terms()) {
        if (lambda.weight() != degree) throw Error(ErrorKind::DegreeMismatch, "decomposition key of wrong weight");
        f += Rational(m) * irreducible_character(lambda);
    }
    return f;
}

BiClassFunction character_of(const PairDecomposition& d, int p, int q) {
    BiClassFunction f(p, q);
    for (const auto& [key, m] : d.terms()) {
        const BiClassFunction term = outer_product(irreducible_character(key.first), irreducible_character(key.second));
        for (const auto& s : conjugacy_classes(p)) {
            for (const auto& t : conjugacy_classes(q)) f(s, t) += Rational(m) * term(s, t);
        }
    }
    return f;
}

BigInt dimension_of(const IrredDecomposition& d) {
    BigInt total = 0;
    for (const auto& [lambda, m] : d.terms()) total += m * specht_dimension(lambda);
    return total;
}

BigInt dimension_of(const PairDecomposition& d) {
    BigInt total = 0;
    for (const auto& [key, m] : d.terms()) total += m * specht_dimension(key.first) * specht_dimension(key.second);
    return total;
}

ClassFunction induce(const BiClassFunction& f, int q) {
    if (f.p() + f.q() != q) throw Error(ErrorKind::DegreeMismatch, "induce: Young subgroup does not sit in Σ_q");
    // Ind(f)(γ) = z_γ Σ_{α∪β=γ} f(α,β) / (z_α z_β)
    ClassFunction out(q);
    for (const auto& alpha : conjugacy_classes(f.p())) {
        const BigInt za = centralizer_order(alpha);
        for (const auto& beta : conjugacy_classes(f.q())) {
            const Partition gamma = join(alpha, beta);
            out[gamma] += Rational(centralizer_order(gamma)) * f(alpha, beta) / Rational(za * centralizer_order(beta));
        }
    }
    return out;
}

BiClassFunction restrict_to_young(const ClassFunction& g, int i) {
    const int q = g.degree();
    if (i < 0 || i > q) throw Error(ErrorKind::InvalidArgument, "restrict_to_young: need 0 <= i <= q");
    BiClassFunction out(i, q - i);
    for (const auto& alpha : conjugacy_classes(i)) {
        for (const auto& beta : conjugacy_classes(q - i)) out(alpha, beta) = g[join(alpha, beta)];
    }
    return out;
}

BiClassFunction induce_second_factor(const BiClassFunction& f, int q) {
    const int i = f.q();
    if (i > q) throw Error(ErrorKind::InvalidArgument, "induce_second_factor: i > q");
    BiClassFunction out(f.p(), q);
    for (const auto& sigma : conjugacy_classes(f.p())) {
        for (const auto& alpha : conjugacy_classes(i)) {
            const BigInt za = centralizer_order(alpha);
            for (const auto& beta : conjugacy_classes(q - i)) {
                const Partition gamma = join(alpha, beta);
                out(sigma, gamma) += Rational(centralizer_order(gamma)) * f(sigma, alpha) / Rational(za * centralizer_order(beta));
            }
        }
    }
    return out;
}

BiClassFunction twist_first_by_sign(const BiClassFunction& f) {
    BiClassFunction out = f;
    for (const auto& s : conjugacy_classes(f.p())) {
        if (cycle_type_sign(s) > 0) continue;
        for (const auto& t : conjugacy_classes(f.q())) out(s, t) = -f(s, t);
    }
    return out;
}

BigInt lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (mu.weight() + nu.weight() != lambda.weight()) return 0;
    if (!lambda.contains(mu) || !lambda.contains(nu)) return 0;
    const int rows = lambda.length();
    const int letters = nu.length();
    // cells[r][c] for c in [mu_r, lambda_r); filled in reading order:
    // rows top to bottom, each row right to left.
    std::vector<std::vector<int>> cells(rows);
    for (int r = 0; r < rows; ++r) cells[r].assign(lambda.part(r), 0);
    std::vector<int> count(letters + 1, 0);
    BigInt total = 0;
    std::function<void(int, int)> place = [&](int r, int c) {
        if (r == rows) {
            total += 1;
            return;
        }
        if (c < mu.part(r)) {
            place(r + 1, r + 1 < rows ? lambda.part(r + 1) - 1 : 0);
            return;
        }
        int high = letters;
        if (c + 1 < lambda.part(r)) high = std::min(high, cells[r][c + 1]);
        int low = 1;
        if (r > 0 && c >= mu.part(r - 1)) low = cells[r - 1][c] + 1;
        for (int v = low; v <= high; ++v) {
            if (count[v] + 1 > nu.part(v - 1)) continue;
            if (v > 1 && count[v] + 1 > count[v - 1]) continue;
            cells[r][c] = v;
            ++count[v];
            place(r, c - 1);
            --count[v];
        }
        cells[r][c] = 0;
    };
    if (rows == 0) return nu.empty() ? BigInt(1) : BigInt(0);
    place(0, lambda.part(0) - 1);
    return total;
}

BigInt lr_coefficient_via_characters(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (mu.weight() + nu.weight() != lambda.weight()) return 0;
    const ClassFunction induced =
        induce(outer_product(irreducible_character(mu), irreducible_character(nu)), lambda.weight());
    const Rational m = inner_product(induced, irreducible_character(lambda));
    return require_integer(m, DecomposeMode::Genuine, "LR coefficient");
}

IrredDecomposition skew_schur_decompose(const SkewShape& shape) {
    IrredDecomposition out;
    for (const auto& nu : enumerate_partitions(shape.size())) {
        out.add(nu, lr_coefficient(shape.outer(), shape.inner(), nu));
    }
    return out;
}

std::vector<BigInt> sym_algebra_series(const std::vector<BigInt>& generators, int max_degree) {
    std::vector<BigInt> series(max_degree + 1, 0);
    series[0] = 1;
    for (int i = 1; i <= max_degree && i < static_cast<int>(generators.size()); ++i) {
        const BigInt& g = generators[i];
        if (g == 0) continue;
        if (g < 0) throw Error(ErrorKind::InvalidArgument, "negative generator count");
        // (1 - x^i)^{-g} = Σ_k C(g+k-1, k) x^{ik}
        std::vector<BigInt> factor(max_degree + 1, 0);
        BigInt coeff = 1;
        for (int k = 0; k * i <= max_degree; ++k) {
            factor[k * i] = coeff;
            coeff = coeff * (g + k) / (k + 1);
        }
        std::vector<BigInt> product(max_degree + 1, 0);
        for (int a = 0; a <= max_degree; ++a) {
            if (series[a] == 0) continue;
            for (int b = 0; a + b <= max_degree; b += i) product[a + b] += series[a] * factor[b];
        }
        series = std::move(product);
    }
    return series;
}

BigInt graded_sym_algebra_dimension(int d, int q, int p) {
    if (d < 1 || q < 0) throw Error(ErrorKind::InvalidArgument, "graded_sym_algebra_dimension: need d >= 1, q >= 0");
    if (p < 0) return 0;
    // series truncated at x^p, i.e. t^{2p+1}
    std::vector<BigInt> generators(p + 1, 0);
    for (int i = 1; i <= p; ++i) generators[i] = binomial(d + i - 1, i);
    if (p >= 1) generators[1] += BigInt(q) * d;
    return sym_algebra_series(generators, p)[p];
}

}  // namespace stablerep
