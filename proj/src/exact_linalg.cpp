#include "gfc/exact_linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gfc {

RatMatrix RatMatrix::from_dense(const DenseMatrix& d, std::size_t cols) {
    if (!d.empty()) cols = d[0].size();
    RatMatrix m(d.size(), cols);
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i].size() != cols) throw std::invalid_argument("from_dense: ragged rows");
        for (std::size_t j = 0; j < cols; ++j)
            if (d[i][j] != 0) m.entries_.emplace(Key{i, j}, d[i][j]);
    }
    return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.entries_.emplace(Key{i, i}, Rational(1));
    return m;
}

Rational RatMatrix::at(std::size_t i, std::size_t j) const {
    auto it = entries_.find(Key{i, j});
    return it == entries_.end() ? Rational(0) : it->second;
}

void RatMatrix::set(std::size_t i, std::size_t j, const Rational& v) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("RatMatrix::set");
    Rational c = v;
    c.canonicalize();
    if (c == 0)
        entries_.erase(Key{i, j});
    else
        entries_[Key{i, j}] = std::move(c);
}

void RatMatrix::add(std::size_t i, std::size_t j, const Rational& v) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("RatMatrix::add");
    Rational c = v;
    c.canonicalize();
    if (c == 0) return;
    auto [it, inserted] = entries_.try_emplace(Key{i, j}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) entries_.erase(it);
    }
}

DenseMatrix RatMatrix::to_dense() const {
    DenseMatrix d(rows_, RationalVector(cols_));
    for (const auto& [k, v] : entries_) d[k.first][k.second] = v;
    return d;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (const auto& [k, v] : entries_) t.entries_.emplace(Key{k.second, k.first}, v);
    return t;
}

RationalVector RatMatrix::apply(const RationalVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("RatMatrix::apply: dimension mismatch");
    RationalVector out(rows_);
    for (const auto& [k, x] : entries_) out[k.first] += x * v[k.second];
    return out;
}

RationalVector RatMatrix::column(std::size_t j) const {
    RationalVector out(rows_);
    for (const auto& [k, x] : entries_)
        if (k.second == j) out[k.first] = x;
    return out;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("RatMatrix product: dimension mismatch");
    std::vector<std::vector<std::pair<std::size_t, const Rational*>>> brows(b.rows_);
    for (const auto& [k, v] : b.entries_) brows[k.first].emplace_back(k.second, &v);
    RatMatrix c(a.rows_, b.cols_);
    for (const auto& [k, v] : a.entries_)
        for (const auto& [j, w] : brows[k.second]) c.add(k.first, j, v * *w);
    return c;
}

RrefResult rref(const DenseMatrix& input, std::size_t cols) {
    DenseMatrix m = input;
    std::size_t row = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        const Rational inv = 1 / m[row][col];
        for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0) continue;
            const Rational factor = m[i][col];
            for (std::size_t j = col; j < cols; ++j)
                if (m[row][j] != 0) m[i][j] -= factor * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    return RrefResult{std::move(m), std::move(pivots)};
}

std::size_t rank_bareiss(const RatMatrix& in) {
    const std::size_t rows = in.rows();
    const std::size_t cols = in.cols();
    if (rows == 0 || cols == 0 || in.is_zero()) return 0;

    std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols));
    {
        std::vector<Integer> denom_lcm(rows, Integer(1));
        for (const auto& [k, v] : in.entries()) mpz_lcm(denom_lcm[k.first].get_mpz_t(), denom_lcm[k.first].get_mpz_t(), v.get_den_mpz_t());
        for (const auto& [k, v] : in.entries()) m[k.first][k.second] = v.get_num() * (denom_lcm[k.first] / v.get_den());
    }

    Integer prev(1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t p = row;
        while (p < rows && m[p][col] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[row]);
        const Integer& pivot = m[row][col];
        for (std::size_t i = row + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                Integer t = m[i][j] * pivot - m[i][col] * m[row][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][col] = 0;
        }
        prev = pivot;
        ++row;
    }
    return row;
}

std::size_t rank_gauss(const RatMatrix& m) { return rref(m.to_dense(), m.cols()).pivots.size(); }

std::optional<std::size_t> rank_mod_prime(const RatMatrix& in, std::uint64_t p) {
    using u128 = unsigned __int128;
    const std::size_t rows = in.rows();
    const std::size_t cols = in.cols();
    std::vector<std::vector<std::uint64_t>> m(rows, std::vector<std::uint64_t>(cols, 0));
    Integer modulus;
    mpz_set_ui(modulus.get_mpz_t(), p);
    for (const auto& [k, v] : in.entries()) {
        Integer num = v.get_num() % modulus;
        if (num < 0) num += modulus;
        Integer den = v.get_den() % modulus;
        if (den == 0) return std::nullopt;
        Integer inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
        Integer r = (num * inv) % modulus;
        m[k.first][k.second] = mpz_get_ui(r.get_mpz_t());
    }
    auto mulmod = [p](std::uint64_t a, std::uint64_t b) { return static_cast<std::uint64_t>((u128)a * b % p); };
    auto powmod = [&](std::uint64_t a, std::uint64_t e) {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mulmod(r, a);
            a = mulmod(a, a);
            e >>= 1;
        }
        return r;
    };
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[row]);
        const std::uint64_t inv = powmod(m[row][col], p - 2);
        for (std::size_t i = row + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            const std::uint64_t factor = mulmod(m[i][col], inv);
            for (std::size_t j = col; j < cols; ++j) {
                const std::uint64_t sub = mulmod(factor, m[row][j]);
                m[i][j] = m[i][j] >= sub ? m[i][j] - sub : m[i][j] + (p - sub);
            }
        }
        ++row;
    }
    return row;
}

std::size_t rank(const RatMatrix& m) {
    const std::size_t bound = std::min(m.rows(), m.cols());
    if (bound == 0 || m.is_zero()) return 0;
    if (auto r = rank_mod_prime(m, kRankPrime); r && *r == bound) return bound;
    return rank_bareiss(m);
}

namespace {

using SparseRow = std::map<std::size_t, Rational>;

// Reduced row echelon form of a sparse matrix, rows keyed by pivot column.
std::map<std::size_t, SparseRow> sparse_rref(const RatMatrix& m) {
    std::vector<SparseRow> rows(m.rows());
    for (const auto& [k, v] : m.entries()) rows[k.first].emplace(k.second, v);

    std::map<std::size_t, SparseRow> echelon;
    for (auto& row : rows) {
        // Clear pivot columns left to right; pivot rows only reach further right.
        auto it = row.begin();
        while (it != row.end()) {
            auto piv = echelon.find(it->first);
            if (piv == echelon.end()) {
                ++it;
                continue;
            }
            const Rational factor = it->second;
            const std::size_t col = it->first;
            for (const auto& [j, v] : piv->second) {
                Rational& slot = row[j];
                slot -= factor * v;
                if (slot == 0) row.erase(j);
            }
            it = row.upper_bound(col);
        }
        if (row.empty()) continue;
        const Rational inv = 1 / row.begin()->second;
        for (auto& [j, v] : row) v *= inv;
        echelon.emplace(row.begin()->first, std::move(row));
    }

    // Back substitution, last pivot first.
    for (auto it = echelon.rbegin(); it != echelon.rend(); ++it) {
        SparseRow& row = it->second;
        for (auto entry = row.upper_bound(it->first); entry != row.end();) {
            auto piv = echelon.find(entry->first);
            if (piv == echelon.end()) {
                ++entry;
                continue;
            }
            const Rational factor = entry->second;
            const std::size_t col = entry->first;
            for (const auto& [j, v] : piv->second) {
                Rational& slot = row[j];
                slot -= factor * v;
                if (slot == 0) row.erase(j);
            }
            entry = row.upper_bound(col);
        }
    }
    return echelon;
}

}  // namespace

std::vector<RationalVector> kernel_basis(const RatMatrix& m) {
    const std::size_t cols = m.cols();
    const auto echelon = sparse_rref(m);
    std::vector<std::size_t> free_index(cols, cols);
    std::size_t n_free = 0;
    for (std::size_t c = 0; c < cols; ++c)
        if (!echelon.count(c)) free_index[c] = n_free++;

    DenseMatrix raw(n_free, RationalVector(cols));
    for (std::size_t c = 0; c < cols; ++c)
        if (free_index[c] < cols) raw[free_index[c]][c] = 1;
    for (const auto& [pivot, row] : echelon)
        for (const auto& [j, v] : row)
            if (j != pivot) raw[free_index[j]][pivot] = -v;
    return rref(raw, cols).rows;
}

std::vector<RationalVector> column_space_basis(const RatMatrix& m) {
    return rref(m.transpose().to_dense(), m.rows()).rows;
}

std::optional<RationalVector> in_column_span(const RatMatrix& m, const RationalVector& v) {
    if (v.size() != m.rows()) throw std::invalid_argument("in_column_span: dimension mismatch");
    const std::size_t cols = m.cols();
    DenseMatrix aug = m.to_dense();
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(v[i]);
    if (aug.empty()) return RationalVector(cols);
    const auto reduced = rref(aug, cols + 1);
    RationalVector x(cols);
    for (std::size_t i = 0; i < reduced.pivots.size(); ++i) {
        if (reduced.pivots[i] == cols) return std::nullopt;
        x[reduced.pivots[i]] = reduced.rows[i][cols];
    }
    return x;
}

Rational determinant(DenseMatrix m) {
    const std::size_t n = m.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        if (m[col].size() != n) throw std::invalid_argument("determinant: matrix is not square");
        std::size_t p = col;
        while (p < n && m[p][col] == 0) ++p;
        if (p == n) return 0;
        if (p != col) {
            std::swap(m[p], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m[i][col] == 0) continue;
            const Rational factor = m[i][col] / m[col][col];
            for (std::size_t j = col; j < n; ++j) m[i][j] -= factor * m[col][j];
        }
    }
    return det;
}

std::string to_matrix_text(const RatMatrix& m) {
    std::ostringstream os;
    os << m.rows() << ' ' << m.cols() << '\n';
    for (const auto& [k, v] : m.entries()) os << k.first << ' ' << k.second << ' ' << to_fraction_string(v) << '\n';
    return os.str();
}

RatMatrix parse_matrix_text(const std::string& text) {
    std::istringstream is(text);
    std::size_t rows = 0, cols = 0;
    if (!(is >> rows >> cols)) throw std::invalid_argument("matrix text: missing header");
    RatMatrix m(rows, cols);
    std::size_t i = 0, j = 0;
    std::string value;
    while (is >> i >> j >> value) {
        if (i >= rows || j >= cols) throw std::invalid_argument("matrix text: index out of range");
        m.set(i, j, parse_fraction(value));
    }
    if (!is.eof()) throw std::invalid_argument("matrix text: malformed entry");
    return m;
}

}  // namespace gfc
