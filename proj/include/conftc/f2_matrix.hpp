#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace conftc {

/// Bit-packed vector over F2.
class F2Vector {
public:
    F2Vector() = default;
    explicit F2Vector(int size) : size_(size), words_(word_count(size), 0) {}

    int size() const { return size_; }
    bool get(int i) const { return (words_[static_cast<size_t>(i >> 6)] >> (i & 63)) & 1; }
    void set(int i, bool b) {
        const uint64_t mask = 1ull << (i & 63);
        if (b)
            words_[static_cast<size_t>(i >> 6)] |= mask;
        else
            words_[static_cast<size_t>(i >> 6)] &= ~mask;
    }
    void flip(int i) { words_[static_cast<size_t>(i >> 6)] ^= 1ull << (i & 63); }

    void operator^=(const F2Vector& o) {
        for (size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    }
    bool is_zero() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }
    /// Index of the lowest set bit, or -1.
    int first_set() const;
    bool operator==(const F2Vector& o) const { return size_ == o.size_ && words_ == o.words_; }

    std::vector<int> support() const;
    static F2Vector from_support(int size, const std::vector<int>& support);

private:
    static size_t word_count(int size) { return static_cast<size_t>((size + 63) / 64); }
    int size_ = 0;
    std::vector<uint64_t> words_;
};

/// Row-major bit-packed matrix over F2.
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows), F2Vector(cols)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool get(int r, int c) const { return data_[static_cast<size_t>(r)].get(c); }
    void set(int r, int c, bool b) { data_[static_cast<size_t>(r)].set(c, b); }
    void flip(int r, int c) { data_[static_cast<size_t>(r)].flip(c); }
    const F2Vector& row(int r) const { return data_[static_cast<size_t>(r)]; }
    F2Vector& row(int r) { return data_[static_cast<size_t>(r)]; }

    F2Vector multiply(const F2Vector& v) const;
    F2Matrix transposed() const;

    static F2Matrix identity(int n);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<F2Vector> data_;
};

struct F2RankResult {
    int rank = 0;
    std::vector<F2Vector> kernel;  // basis of the right kernel
};

/// Rank and kernel basis by word-packed elimination with column pivoting in
/// input order; deterministic.
F2RankResult f2_rank(const F2Matrix& m);

/// Incrementally built echelon basis of a subspace of F2^n. Each inserted
/// vector may carry an augmentation tag; reduction accumulates the tags of
/// the basis vectors it subtracts, which turns reduce() into a coordinate
/// map over the inserted generators.
class F2Echelon {
public:
    explicit F2Echelon(int dim, int aug_width = 0) : dim_(dim), aug_width_(aug_width) {}

    /// Residue of v modulo the current subspace.
    F2Vector reduce(const F2Vector& v) const;

    /// (residue, accumulated augmentation of subtracted basis vectors).
    std::pair<F2Vector, F2Vector> reduce_tracked(const F2Vector& v) const;

    /// Insert v (with tag); returns true if it enlarged the subspace.
    bool insert(const F2Vector& v, const F2Vector& aug);
    bool insert(const F2Vector& v) { return insert(v, F2Vector(aug_width_)); }

    int rank() const { return static_cast<int>(rows_.size()); }
    int dim() const { return dim_; }

private:
    int dim_;
    int aug_width_;
    std::map<int, std::pair<F2Vector, F2Vector>> rows_;  // pivot -> (vector, tag)
};

}  // namespace conftc
