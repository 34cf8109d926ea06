#pragma once

// Assembly of linear maps between direct sums of matrix spaces.
//
// Every Hom/Ext computation in the engine has the shape
//   (F_b)_b  |->  ( sum of  L * F_b  and  F_b * R  terms )_o
// with unknown matrices F_b. LinearMapBuilder writes the coefficient matrix of
// such a map directly; matrices are vectorized row-major, blocks concatenated.

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "pistar/exactalg.hpp"

namespace pistar {

class BlockLayout {
public:
    BlockLayout() = default;

    std::size_t add(std::size_t rows, std::size_t cols) {
        shapes_.emplace_back(rows, cols);
        offsets_.push_back(total_);
        total_ += rows * cols;
        return shapes_.size() - 1;
    }

    std::size_t count() const noexcept { return shapes_.size(); }
    std::size_t total() const noexcept { return total_; }
    std::size_t rows(std::size_t b) const { return shapes_[b].first; }
    std::size_t cols(std::size_t b) const { return shapes_[b].second; }
    std::size_t offset(std::size_t b) const { return offsets_[b]; }

    std::vector<Mat> unflatten(std::span<const elem_t> v) const {
        std::vector<Mat> out;
        out.reserve(count());
        for (std::size_t b = 0; b < count(); ++b) {
            Mat m(rows(b), cols(b));
            std::copy_n(v.begin() + static_cast<std::ptrdiff_t>(offset(b)), rows(b) * cols(b),
                        m.values().begin());
            out.push_back(std::move(m));
        }
        return out;
    }

    std::vector<elem_t> flatten(const std::vector<Mat>& blocks) const {
        if (blocks.size() != count()) throw InvalidArgument("flatten: block count mismatch");
        std::vector<elem_t> v(total_, 0);
        for (std::size_t b = 0; b < count(); ++b) {
            if (blocks[b].rows() != rows(b) || blocks[b].cols() != cols(b))
                throw InvalidArgument("flatten: block shape mismatch");
            std::copy(blocks[b].values().begin(), blocks[b].values().end(),
                      v.begin() + static_cast<std::ptrdiff_t>(offset(b)));
        }
        return v;
    }

    /// Columns of `basis` (in this layout) as lists of blocks.
    std::vector<std::vector<Mat>> unflatten_columns(const Mat& basis) const {
        std::vector<std::vector<Mat>> out;
        for (std::size_t j = 0; j < basis.cols(); ++j) out.push_back(unflatten(basis.column(j)));
        return out;
    }

private:
    std::vector<std::pair<std::size_t, std::size_t>> shapes_;
    std::vector<std::size_t> offsets_;
    std::size_t total_ = 0;
};

class LinearMapBuilder {
public:
    LinearMapBuilder(const Field& f, BlockLayout in, BlockLayout out)
        : f_(f), in_(std::move(in)), out_(std::move(out)), m_(out_.total(), in_.total()) {}

    /// out[o] += coeff * L * in[b]
    void add_left(std::size_t o, std::size_t b, const Mat& l, elem_t coeff = 1) {
        const std::size_t c = in_.cols(b);
        if (out_.cols(o) != c || l.rows() != out_.rows(o) || l.cols() != in_.rows(b))
            throw InvalidArgument("add_left: shape mismatch");
        for (std::size_t i = 0; i < l.rows(); ++i)
            for (std::size_t k = 0; k < l.cols(); ++k) {
                elem_t v = f_.mul(coeff, l(i, k));
                if (v == 0) continue;
                for (std::size_t j = 0; j < c; ++j) {
                    elem_t& cell = m_(out_.offset(o) + i * c + j, in_.offset(b) + k * c + j);
                    cell = f_.add(cell, v);
                }
            }
    }

    /// out[o] += coeff * in[b] * R
    void add_right(std::size_t o, std::size_t b, const Mat& r, elem_t coeff = 1) {
        const std::size_t rows = in_.rows(b);
        if (out_.rows(o) != rows || r.rows() != in_.cols(b) || r.cols() != out_.cols(o))
            throw InvalidArgument("add_right: shape mismatch");
        const std::size_t oc = out_.cols(o), ic = in_.cols(b);
        for (std::size_t k = 0; k < r.rows(); ++k)
            for (std::size_t j = 0; j < r.cols(); ++j) {
                elem_t v = f_.mul(coeff, r(k, j));
                if (v == 0) continue;
                for (std::size_t i = 0; i < rows; ++i) {
                    elem_t& cell = m_(out_.offset(o) + i * oc + j, in_.offset(b) + i * ic + k);
                    cell = f_.add(cell, v);
                }
            }
    }

    const Mat& matrix() const noexcept { return m_; }
    const BlockLayout& domain() const noexcept { return in_; }
    const BlockLayout& codomain() const noexcept { return out_; }

private:
    Field f_;
    BlockLayout in_;
    BlockLayout out_;
    Mat m_;
};

} // namespace pistar
