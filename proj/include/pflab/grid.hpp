#ifndef PFLAB_GRID_HPP
#define PFLAB_GRID_HPP

#include <cstddef>
#include <vector>

#include "pflab/errors.hpp"
#include "pflab/scalar.hpp"

namespace pflab {

// Triangle-packed grid over cells (k, l) with k, l >= 0 and k + l <= extent.
template <Field S>
class TriGrid {
public:
    TriGrid() : extent_(-1) {}
    explicit TriGrid(long extent, const S& fill = S(0)) : extent_(extent) {
        if (extent >= 0)
            data_.assign(static_cast<std::size_t>((extent + 1) * (extent + 2) / 2), fill);
    }

    long extent() const { return extent_; }
    bool contains(long k, long l) const { return k >= 0 && l >= 0 && k + l <= extent_; }

    S& at(long k, long l) { return data_[index(k, l)]; }
    const S& at(long k, long l) const { return data_[index(k, l)]; }

private:
    std::size_t index(long k, long l) const {
        if (!contains(k, l)) throw RangeError("TriGrid access outside k+l <= extent");
        const long s = k + l;
        return static_cast<std::size_t>(s * (s + 1) / 2 + k);
    }

    long extent_;
    std::vector<S> data_;
};

// Dense rectangular grid over (k, l) in [0, rows) x [0, cols).
template <Field S>
class RectGrid {
public:
    RectGrid() : rows_(0), cols_(0) {}
    RectGrid(std::size_t rows, std::size_t cols, const S& fill = S(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    S& at(std::size_t k, std::size_t l) { return data_[k * cols_ + l]; }
    const S& at(std::size_t k, std::size_t l) const { return data_[k * cols_ + l]; }

private:
    std::size_t rows_, cols_;
    std::vector<S> data_;
};

} // namespace pflab

#endif
