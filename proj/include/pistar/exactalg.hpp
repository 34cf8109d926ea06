#pragma once

// Dense linear algebra over a prime field F_p with p < 2^32.
//
// Matrices are plain values; the field is passed explicitly to every
// arithmetic routine so that one Mat type serves any prime.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pistar/errors.hpp"

namespace pistar {

using elem_t = std::uint64_t;

inline constexpr elem_t kDefaultPrime = 2147483647ULL; // 2^31 - 1

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

class Field {
public:
    explicit Field(elem_t p = kDefaultPrime) : p_(p) {
        if (p < 3 || p >= (1ULL << 32) || !is_prime(p))
            throw InvalidArgument("field modulus must be an odd prime below 2^32, got " +
                                  std::to_string(p));
    }

    elem_t prime() const noexcept { return p_; }

    elem_t add(elem_t a, elem_t b) const noexcept {
        elem_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    elem_t sub(elem_t a, elem_t b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    elem_t neg(elem_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    elem_t mul(elem_t a, elem_t b) const noexcept { return (a * b) % p_; }

    elem_t pow(elem_t a, std::uint64_t e) const noexcept {
        elem_t r = 1;
        a %= p_;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    elem_t inv(elem_t a) const {
        if (a % p_ == 0) throw InvalidArgument("inverse of zero in F_p");
        return pow(a, p_ - 2);
    }

    /// Reduce a signed integer into [0, p).
    elem_t from_int(long long v) const noexcept {
        long long r = v % static_cast<long long>(p_);
        return static_cast<elem_t>(r < 0 ? r + static_cast<long long>(p_) : r);
    }

    friend bool operator==(const Field&, const Field&) = default;

private:
    elem_t p_;
};

/// A field together with a seeded pseudo-random stream. Identical seeds and
/// identical call sequences yield identical streams.
class FieldCtx {
public:
    explicit FieldCtx(Field field = Field{}, std::uint64_t seed = 0) : field_(field) { reseed(seed, 0); }

    /// Independent stream for (seed, stream index); used for per-trial contexts.
    static FieldCtx derived(Field field, std::uint64_t seed, std::uint64_t stream) {
        FieldCtx ctx(field);
        ctx.reseed(seed, stream);
        return ctx;
    }

    const Field& field() const noexcept { return field_; }

    elem_t random_element() {
        std::uniform_int_distribution<elem_t> dist(0, field_.prime() - 1);
        return dist(rng_);
    }

    elem_t random_nonzero() {
        std::uniform_int_distribution<elem_t> dist(1, field_.prime() - 1);
        return dist(rng_);
    }

    std::uint64_t next_u64() { return rng_(); }

private:
    void reseed(std::uint64_t seed, std::uint64_t stream) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                          0x5eedu};
        rng_.seed(seq);
    }

    Field field_;
    std::mt19937_64 rng_;
};

/// Randomized answers are recomputed over `trials` independent streams
/// derived from `seed`.
struct TrialConfig {
    std::uint64_t seed = 0;
    int trials = 7;

    FieldCtx context(const Field& f, std::uint64_t trial, std::uint64_t salt = 0) const {
        return FieldCtx::derived(f, seed ^ (salt * 0x9E3779B97F4A7C15ULL), trial);
    }
};

class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    /// Entries are reduced into the field (negative literals allowed).
    static Mat from_rows(const Field& f, std::initializer_list<std::initializer_list<long long>> rows) {
        std::size_t r = rows.size();
        std::size_t c = r ? rows.begin()->size() : 0;
        Mat m(r, c);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != c) throw InvalidArgument("ragged matrix literal");
            std::size_t j = 0;
            for (long long v : row) m(i, j++) = f.from_int(v);
            ++i;
        }
        return m;
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return data_.empty(); }

    elem_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    elem_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const elem_t> values() const noexcept { return data_; }
    std::span<elem_t> values() noexcept { return data_; }

    bool is_zero() const noexcept {
        return std::all_of(data_.begin(), data_.end(), [](elem_t v) { return v == 0; });
    }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        Mat b(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }

    void set_block(std::size_t r0, std::size_t c0, const Mat& b) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }

    std::vector<elem_t> column(std::size_t j) const {
        std::vector<elem_t> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    static Mat from_columns(std::size_t rows, const std::vector<std::vector<elem_t>>& cols) {
        Mat m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        return m;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < rows_; ++i) {
            os << (i ? ",[" : "[");
            for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
            os << ']';
        }
        os << ']';
        return os.str();
    }

    friend bool operator==(const Mat&, const Mat&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<elem_t> data_;
};

inline Mat mul(const Field& f, const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) throw InvalidArgument("mul: inner dimensions differ");
    Mat c(a.rows(), b.cols());
    const elem_t p = f.prime();
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            elem_t aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = (c(i, j) + aik * b(k, j)) % p;
        }
    return c;
}

inline Mat add(const Field& f, const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidArgument("add: shapes differ");
    Mat c(a.rows(), a.cols());
    auto out = c.values();
    auto x = a.values();
    auto y = b.values();
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(x[i], y[i]);
    return c;
}

inline Mat sub(const Field& f, const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidArgument("sub: shapes differ");
    Mat c(a.rows(), a.cols());
    auto out = c.values();
    auto x = a.values();
    auto y = b.values();
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(x[i], y[i]);
    return c;
}

inline Mat scale(const Field& f, elem_t s, const Mat& a) {
    Mat c = a;
    for (auto& v : c.values()) v = f.mul(s, v);
    return c;
}

inline Mat negate(const Field& f, const Mat& a) { return scale(f, f.neg(1), a); }

inline Mat random_mat(std::size_t rows, std::size_t cols, FieldCtx& ctx) {
    Mat m(rows, cols);
    for (auto& v : m.values()) v = ctx.random_element();
    return m;
}

/// Block-diagonal matrix from square or rectangular blocks.
inline Mat block_diagonal(const std::vector<Mat>& blocks) {
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    Mat m(r, c);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        m.set_block(r0, c0, b);
        r0 += b.rows();
        c0 += b.cols();
    }
    return m;
}

struct Echelon {
    Mat reduced;                     // reduced row echelon form
    std::vector<std::size_t> pivots; // pivot column of each nonzero row
};

inline Echelon rref(const Field& f, Mat a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    const elem_t p = f.prime();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a(piv, c) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(a(piv, j), a(r, j));
        elem_t inv = f.inv(a(r, c));
        for (std::size_t j = c; j < cols; ++j) a(r, j) = f.mul(a(r, j), inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            elem_t factor = a(i, c);
            if (factor == 0) continue;
            elem_t nf = p - factor;
            for (std::size_t j = c; j < cols; ++j)
                if (a(r, j)) a(i, j) = (a(i, j) + nf * a(r, j)) % p;
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), std::move(pivots)};
}

inline std::size_t rank(const Field& f, const Mat& a) { return rref(f, a).pivots.size(); }

/// Columns form a basis of ker A; column count is cols(A) - rank(A).
inline Mat kernel_basis(const Field& f, const Mat& a) {
    Echelon e = rref(f, a);
    const std::size_t n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Mat k(n, free_cols.size());
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        std::size_t fc = free_cols[j];
        k(fc, j) = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) k(e.pivots[r], j) = f.neg(e.reduced(r, fc));
    }
    return k;
}

/// Columns of A at pivot positions: a basis of the column space.
inline Mat column_space(const Field& f, const Mat& a) {
    Echelon e = rref(f, a);
    Mat b(a.rows(), e.pivots.size());
    for (std::size_t j = 0; j < e.pivots.size(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i) b(i, j) = a(i, e.pivots[j]);
    return b;
}

/// Horizontal concatenation [A | B]; row counts must agree.
inline Mat hcat(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw InvalidArgument("hcat: row counts differ");
    Mat m(a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

struct AffineSolution {
    std::vector<elem_t> particular; // A * particular = b
    Mat kernel;                     // columns span ker A
};

/// Solves A x = b. Returns nullopt when b is outside the column space.
inline std::optional<AffineSolution> solve_affine(const Field& f, const Mat& a, std::span<const elem_t> b) {
    if (b.size() != a.rows()) throw InvalidArgument("solve_affine: rows(A) != len(b)");
    Mat aug(a.rows(), a.cols() + 1);
    aug.set_block(0, 0, a);
    for (std::size_t i = 0; i < b.size(); ++i) aug(i, a.cols()) = b[i];
    Echelon e = rref(f, aug);
    if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
    std::vector<elem_t> x(a.cols(), 0);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, a.cols());
    return AffineSolution{std::move(x), kernel_basis(f, a)};
}

/// The unique X with A X = B, for A of full column rank. Throws when no
/// solution exists or A has a nontrivial kernel.
inline Mat solve_unique(const Field& f, const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw InvalidArgument("solve_unique: row counts differ");
    Echelon e = rref(f, hcat(a, b));
    const std::size_t n = a.cols();
    std::size_t lead = 0;
    while (lead < e.pivots.size() && e.pivots[lead] < n) ++lead;
    if (lead != n) throw InternalAssertion("solve_unique: coefficient matrix lacks full column rank");
    if (lead != e.pivots.size()) throw InternalAssertion("solve_unique: system is inconsistent");
    return e.reduced.block(0, n, n, b.cols());
}

} // namespace pistar
