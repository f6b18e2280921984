#include "stablerep/exact.hpp"

#include <algorithm>
#include <map>

#include "stablerep/errors.hpp"

namespace stablerep {

namespace {

template <class Scalar>
std::vector<std::pair<std::size_t, Scalar>> merge_combination(
    const Scalar& a, const std::vector<std::pair<std::size_t, Scalar>>& x,
    const Scalar& b, const std::vector<std::pair<std::size_t, Scalar>>& y) {
    // a*x + b*y
    std::vector<std::pair<std::size_t, Scalar>> out;
    out.reserve(x.size() + y.size());
    auto ix = x.begin();
    auto iy = y.begin();
    while (ix != x.end() || iy != y.end()) {
        if (iy == y.end() || (ix != x.end() && ix->first < iy->first)) {
            out.emplace_back(ix->first, a * ix->second);
            ++ix;
        } else if (ix == x.end() || iy->first < ix->first) {
            out.emplace_back(iy->first, b * iy->second);
            ++iy;
        } else {
            Scalar value = a * ix->second + b * iy->second;
            if (value != 0) out.emplace_back(ix->first, std::move(value));
            ++ix;
            ++iy;
        }
    }
    return out;
}

void make_primitive(SparseIntVector& row) {
    if (row.empty()) return;
    BigInt g = 0;
    for (const auto& [_, value] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), value.get_mpz_t());
        if (g == 1) break;
    }
    if (row.front().second < 0) g = -g;
    if (g != 1) {
        for (auto& entry : row) mpz_divexact(entry.second.get_mpz_t(), entry.second.get_mpz_t(), g.get_mpz_t());
    }
}

}  // namespace

void axpy(SparseVector& dst, const Rational& factor, const SparseVector& src) {
    if (factor == 0 || src.empty()) return;
    dst = merge_combination(Rational(1), dst, factor, src);
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(i, 1);
    return m;
}

ExactMatrix ExactMatrix::from_dense(const std::vector<std::vector<Rational>>& dense) {
    const std::size_t rows = dense.size();
    const std::size_t cols = rows == 0 ? 0 : dense.front().size();
    ExactMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (dense[i].size() != cols) throw Error(ErrorKind::InvalidArgument, "ragged dense matrix");
        for (std::size_t j = 0; j < cols; ++j) {
            if (dense[i][j] != 0) m.data_[i].emplace_back(j, dense[i][j]);
        }
    }
    return m;
}

Rational ExactMatrix::at(std::size_t i, std::size_t j) const {
    const auto& r = data_.at(i);
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const auto& e, std::size_t k) { return e.first < k; });
    if (it != r.end() && it->first == j) return it->second;
    return 0;
}

void ExactMatrix::set(std::size_t i, std::size_t j, const Rational& value) {
    if (i >= rows_ || j >= cols_) throw Error(ErrorKind::InvalidArgument, "matrix index out of range");
    auto& r = data_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const auto& e, std::size_t k) { return e.first < k; });
    if (it != r.end() && it->first == j) {
        if (value == 0) r.erase(it);
        else it->second = value;
    } else if (value != 0) {
        r.emplace(it, j, value);
    }
}

void ExactMatrix::add_to(std::size_t i, std::size_t j, const Rational& value) {
    if (value == 0) return;
    set(i, j, at(i, j) + value);
}

void ExactMatrix::set_row(std::size_t i, SparseVector entries) {
    if (i >= rows_) throw Error(ErrorKind::InvalidArgument, "row index out of range");
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVector cleaned;
    for (auto& [j, v] : entries) {
        if (j >= cols_) throw Error(ErrorKind::InvalidArgument, "column index out of range");
        if (!cleaned.empty() && cleaned.back().first == j) cleaned.back().second += v;
        else cleaned.emplace_back(j, std::move(v));
    }
    std::erase_if(cleaned, [](const auto& e) { return e.second == 0; });
    data_[i] = std::move(cleaned);
}

std::size_t ExactMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
}

bool ExactMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const auto& r) { return r.empty(); });
}

Rational ExactMatrix::trace() const {
    Rational t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
    return t;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (const auto& [j, v] : data_[i]) t.data_[j].emplace_back(i, v);
    }
    return t;
}

SparseVector ExactMatrix::apply(const SparseVector& v) const {
    // Column access is awkward in row-major form; the dense accumulator is
    // indexed by row.
    SparseVector out;
    for (std::size_t i = 0; i < rows_; ++i) {
        Rational acc = 0;
        auto iv = v.begin();
        for (const auto& [j, a] : data_[i]) {
            while (iv != v.end() && iv->first < j) ++iv;
            if (iv == v.end()) break;
            if (iv->first == j) acc += a * iv->second;
        }
        if (acc != 0) out.emplace_back(i, std::move(acc));
    }
    return out;
}

std::vector<std::vector<Rational>> ExactMatrix::to_dense() const {
    std::vector<std::vector<Rational>> dense(rows_, std::vector<Rational>(cols_, 0));
    for (std::size_t i = 0; i < rows_; ++i) {
        for (const auto& [j, v] : data_[i]) dense[i][j] = v;
    }
    return dense;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::InvalidArgument, "matrix product shape mismatch");
    ExactMatrix c(a.rows_, b.cols_);
    std::map<std::size_t, Rational> acc;
    for (std::size_t i = 0; i < a.rows_; ++i) {
        acc.clear();
        for (const auto& [k, av] : a.data_[i]) {
            for (const auto& [j, bv] : b.data_[k]) acc[j] += av * bv;
        }
        for (auto& [j, v] : acc) {
            if (v != 0) c.data_[i].emplace_back(j, std::move(v));
        }
    }
    return c;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::InvalidArgument, "matrix sum shape mismatch");
    ExactMatrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) c.data_[i] = merge_combination(Rational(1), a.data_[i], Rational(1), b.data_[i]);
    return c;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::InvalidArgument, "matrix difference shape mismatch");
    ExactMatrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) c.data_[i] = merge_combination(Rational(1), a.data_[i], Rational(-1), b.data_[i]);
    return c;
}

ExactMatrix operator*(const Rational& s, const ExactMatrix& a) {
    ExactMatrix c(a.rows_, a.cols_);
    if (s == 0) return c;
    for (std::size_t i = 0; i < a.rows_; ++i) {
        c.data_[i] = a.data_[i];
        for (auto& e : c.data_[i]) e.second *= s;
    }
    return c;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) { return a * b - b * a; }

SparseIntVector primitive_integer_row(const SparseVector& row) {
    BigInt common = 1;
    for (const auto& [_, v] : row) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), v.get_den_mpz_t());
    SparseIntVector out;
    out.reserve(row.size());
    for (const auto& [j, v] : row) {
        BigInt scaled = common / v.get_den();
        scaled *= v.get_num();
        out.emplace_back(j, std::move(scaled));
    }
    make_primitive(out);
    return out;
}

std::size_t sparse_rank(std::span<const SparseVector> rows) {
    std::map<std::size_t, SparseIntVector> pivots;
    for (const auto& input : rows) {
        SparseIntVector row = primitive_integer_row(input);
        while (!row.empty()) {
            auto it = pivots.find(row.front().first);
            if (it == pivots.end()) {
                const std::size_t lead = row.front().first;
                pivots.emplace(lead, std::move(row));
                break;
            }
            const BigInt a = it->second.front().second;
            const BigInt b = -row.front().second;
            row = merge_combination(a, row, b, it->second);
            make_primitive(row);
        }
    }
    return pivots.size();
}

std::size_t rank(const ExactMatrix& m) {
    std::vector<SparseVector> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (!m.row(i).empty()) rows.push_back(m.row(i));
    }
    return sparse_rank(rows);
}

std::size_t bareiss_rank(std::vector<std::vector<BigInt>> a) {
    const std::size_t rows = a.size();
    if (rows == 0) return 0;
    const std::size_t cols = a.front().size();
    BigInt prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                BigInt v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = std::move(v);
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

SparseVector EchelonBasis::reduce(SparseVector v) const {
    for (std::size_t k = 0; k < basis_.size() && !v.empty(); ++k) {
        auto it = std::lower_bound(v.begin(), v.end(), pivots_[k],
                                   [](const auto& e, std::size_t key) { return e.first < key; });
        if (it == v.end() || it->first != pivots_[k]) continue;
        const Rational factor = -it->second;
        axpy(v, factor, basis_[k]);
    }
    return v;
}

bool EchelonBasis::insert(SparseVector v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    const std::size_t lead = v.front().first;
    const Rational inv = 1 / v.front().second;
    for (auto& e : v) e.second *= inv;
    for (auto& b : basis_) {
        auto it = std::lower_bound(b.begin(), b.end(), lead,
                                   [](const auto& e, std::size_t key) { return e.first < key; });
        if (it != b.end() && it->first == lead) {
            const Rational factor = -it->second;
            axpy(b, factor, v);
        }
    }
    basis_.push_back(std::move(v));
    pivots_.push_back(lead);
    return true;
}

std::optional<std::vector<Rational>> EchelonBasis::coordinates(const SparseVector& v) const {
    std::vector<Rational> coords(basis_.size(), 0);
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        auto it = std::lower_bound(v.begin(), v.end(), pivots_[k],
                                   [](const auto& e, std::size_t key) { return e.first < key; });
        if (it != v.end() && it->first == pivots_[k]) coords[k] = it->second;
    }
    if (!reduce(v).empty()) return std::nullopt;
    return coords;
}

std::size_t kernel_dimension(std::span<const ExactMatrix> maps, std::size_t source_dim) {
    std::vector<SparseVector> rows;
    for (const auto& m : maps) {
        if (m.cols() != source_dim) throw Error(ErrorKind::InvalidArgument, "kernel_dimension: source mismatch");
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (!m.row(i).empty()) rows.push_back(m.row(i));
        }
    }
    return source_dim - sparse_rank(rows);
}

}  // namespace stablerep
