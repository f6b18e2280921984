#include "stablerep/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "stablerep/errors.hpp"

namespace stablerep {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw Error(ErrorKind::InvalidArgument, "partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw Error(ErrorKind::InvalidArgument, "partition parts must be weakly decreasing");
        }
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    if (text.empty() || text == "0") return Partition{};
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        const std::string_view token = text.substr(start, comma - start);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
            throw Error(ErrorKind::InvalidArgument, "cannot parse partition '" + std::string(text) + "'");
        }
        parts.push_back(value);
        start = comma + 1;
    }
    std::vector<int> cleaned = parts;
    while (!cleaned.empty() && cleaned.back() == 0) cleaned.pop_back();
    if (std::find(cleaned.begin(), cleaned.end(), 0) != cleaned.end()) {
        throw Error(ErrorKind::InvalidArgument, "zero part inside partition '" + std::string(text) + "'");
    }
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (std::size_t i = 0; i < inner.parts_.size(); ++i) {
        if (inner.parts_[i] > parts_[i]) return false;
    }
    return true;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
    // reverse lexicographic: the lexicographically larger sequence comes first
    return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(), a.parts_.begin(), a.parts_.end());
}

Partition join(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

SkewShape::SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_)) {
        throw Error(ErrorKind::InvalidArgument,
                    "skew shape " + outer_.to_string() + "/" + inner_.to_string() + " has inner not contained in outer");
    }
}

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw Error(ErrorKind::InvalidArgument, "enumerate_partitions: negative n");
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            rec(remaining - part, part);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Partition> subpartitions(const Partition& lambda) {
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(std::size_t, int)> rec = [&](std::size_t row, int max_part) {
        if (row == lambda.parts().size()) {
            out.emplace_back(current);
            return;
        }
        for (int part = std::min(max_part, lambda.parts()[row]); part >= 0; --part) {
            current.push_back(part);
            rec(row + 1, part);
            current.pop_back();
        }
    };
    rec(0, lambda.empty() ? 0 : lambda.parts()[0]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Partition transpose(const Partition& lambda) {
    std::vector<int> columns(lambda.empty() ? 0 : lambda.parts()[0], 0);
    for (int part : lambda.parts()) {
        for (int j = 0; j < part; ++j) ++columns[j];
    }
    return Partition(std::move(columns));
}

int hook_length(const Partition& lambda, int row, int col) {
    const Partition t = transpose(lambda);
    return (lambda.part(row) - col - 1) + (t.part(col) - row - 1) + 1;
}

BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

BigInt specht_dimension(const Partition& lambda) {
    const Partition t = transpose(lambda);
    BigInt hooks = 1;
    for (int i = 0; i < lambda.length(); ++i) {
        for (int j = 0; j < lambda.part(i); ++j) hooks *= (lambda.part(i) - j - 1) + (t.part(j) - i - 1) + 1;
    }
    return factorial(lambda.weight()) / hooks;
}

BigInt schur_gl_dimension(const Partition& lambda, int d) {
    if (d < 1) throw Error(ErrorKind::InvalidArgument, "schur_gl_dimension: d must be positive");
    if (lambda.length() > d) return 0;
    const Partition t = transpose(lambda);
    BigInt num = 1;
    BigInt den = 1;
    for (int i = 0; i < lambda.length(); ++i) {
        for (int j = 0; j < lambda.part(i); ++j) {
            num *= d + j - i;
            den *= (lambda.part(i) - j - 1) + (t.part(j) - i - 1) + 1;
        }
    }
    return num / den;
}

BigInt centralizer_order(const Partition& cycle_type) {
    BigInt z = 1;
    std::map<int, int> multiplicity;
    for (int part : cycle_type.parts()) ++multiplicity[part];
    for (const auto& [part, m] : multiplicity) {
        for (int k = 0; k < m; ++k) z *= part;
        z *= factorial(m);
    }
    return z;
}

BigInt class_size(const Partition& cycle_type) { return factorial(cycle_type.weight()) / centralizer_order(cycle_type); }

int cycle_type_sign(const Partition& cycle_type) {
    return (cycle_type.weight() - cycle_type.length()) % 2 == 0 ? 1 : -1;
}

std::map<std::vector<int>, BigInt> schur_weight_multiplicities(const Partition& lambda, int d) {
    std::map<std::vector<int>, BigInt> weights;
    if (lambda.length() > d) return weights;
    // Fill row by row, left to right: weakly increasing rows, strictly increasing columns.
    std::vector<std::vector<int>> tableau(lambda.length());
    for (int i = 0; i < lambda.length(); ++i) tableau[i].assign(lambda.part(i), 0);
    std::vector<int> content(d, 0);
    std::function<void(int, int)> rec = [&](int row, int col) {
        if (row == lambda.length()) {
            weights[content] += 1;
            return;
        }
        if (col == lambda.part(row)) {
            rec(row + 1, 0);
            return;
        }
        int low = 1;
        if (col > 0) low = std::max(low, tableau[row][col - 1]);
        if (row > 0) low = std::max(low, tableau[row - 1][col] + 1);
        for (int v = low; v <= d; ++v) {
            tableau[row][col] = v;
            ++content[v - 1];
            rec(row, col + 1);
            --content[v - 1];
        }
    };
    rec(0, 0);
    return weights;
}

std::vector<std::vector<int>> compositions(int n, int d) {
    std::vector<std::vector<int>> out;
    if (d <= 0) {
        if (n == 0) out.emplace_back();
        return out;
    }
    std::vector<int> current(d, 0);
    std::function<void(int, int)> rec = [&](int slot, int remaining) {
        if (slot == d - 1) {
            current[slot] = remaining;
            out.push_back(current);
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            current[slot] = v;
            rec(slot + 1, remaining - v);
        }
    };
    rec(0, n);
    return out;
}

bool is_dominant(const std::vector<int>& weight) {
    return std::is_sorted(weight.begin(), weight.end(), std::greater<>());
}

Permutation identity_permutation(int n) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
    Permutation out(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
    return out;
}

Permutation inverse(const Permutation& perm) {
    Permutation out(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) out[perm[i]] = static_cast<int>(i);
    return out;
}

Partition cycle_type(const Permutation& perm) {
    std::vector<bool> seen(perm.size(), false);
    std::vector<int> lengths;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return Partition(std::move(lengths));
}

int sign(const Permutation& perm) { return cycle_type_sign(cycle_type(perm)); }

Permutation cycle_type_representative(const Partition& type) {
    Permutation p(type.weight());
    int start = 0;
    for (int len : type.parts()) {
        for (int k = 0; k < len; ++k) p[start + k] = start + (k + 1) % len;
        start += len;
    }
    return p;
}

Permutation adjacent_transposition(int n, int i) {
    Permutation p = identity_permutation(n);
    std::swap(p[i], p[i + 1]);
    return p;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    Permutation p = identity_permutation(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::size_t permutation_rank(const Permutation& perm) {
    // Lehmer code in the factorial number system matches lexicographic order.
    const std::size_t n = perm.size();
    std::size_t rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t smaller = 0;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (perm[j] < perm[i]) ++smaller;
        }
        rank = rank * (n - i) + smaller;
    }
    return rank;
}

}  // namespace stablerep
