#include "conftc/f2_matrix.hpp"

#include <bit>

namespace conftc {

int F2Vector::first_set() const {
    for (size_t w = 0; w < words_.size(); ++w) {
        if (words_[w]) {
            const int bit = std::countr_zero(words_[w]);
            const int idx = static_cast<int>(w) * 64 + bit;
            return idx < size_ ? idx : -1;
        }
    }
    return -1;
}

std::vector<int> F2Vector::support() const {
    std::vector<int> out;
    for (int i = 0; i < size_; ++i)
        if (get(i)) out.push_back(i);
    return out;
}

F2Vector F2Vector::from_support(int size, const std::vector<int>& support) {
    F2Vector v(size);
    for (int i : support) v.flip(i);
    return v;
}

F2Vector F2Matrix::multiply(const F2Vector& v) const {
    F2Vector out(rows_);
    for (int r = 0; r < rows_; ++r) {
        F2Vector tmp = data_[static_cast<size_t>(r)];
        // parity of <row, v>
        int parity = 0;
        for (int i : tmp.support()) parity ^= v.get(i) ? 1 : 0;
        if (parity) out.set(r, true);
    }
    return out;
}

F2Matrix F2Matrix::transposed() const {
    F2Matrix out(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c : data_[static_cast<size_t>(r)].support()) out.set(c, r, true);
    return out;
}

F2Matrix F2Matrix::identity(int n) {
    F2Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

F2RankResult f2_rank(const F2Matrix& m) {
    const int rows = m.rows();
    const int cols = m.cols();
    std::vector<F2Vector> work;
    work.reserve(static_cast<size_t>(rows));
    for (int r = 0; r < rows; ++r) work.push_back(m.row(r));

    std::vector<int> pivot_col;  // pivot column of each eliminated row
    std::vector<int> pivot_row;
    int next_row = 0;
    for (int c = 0; c < cols; ++c) {
        int sel = -1;
        for (int r = next_row; r < rows; ++r)
            if (work[static_cast<size_t>(r)].get(c)) { sel = r; break; }
        if (sel == -1) continue;
        std::swap(work[static_cast<size_t>(sel)], work[static_cast<size_t>(next_row)]);
        for (int r = 0; r < rows; ++r)
            if (r != next_row && work[static_cast<size_t>(r)].get(c))
                work[static_cast<size_t>(r)] ^= work[static_cast<size_t>(next_row)];
        pivot_col.push_back(c);
        pivot_row.push_back(next_row);
        ++next_row;
    }

    F2RankResult res;
    res.rank = next_row;
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[static_cast<size_t>(c)]) continue;
        F2Vector v(cols);
        v.set(c, true);
        for (size_t k = 0; k < pivot_col.size(); ++k)
            if (work[static_cast<size_t>(pivot_row[k])].get(c))
                v.set(pivot_col[k], true);
        res.kernel.push_back(std::move(v));
    }
    return res;
}

F2Vector F2Echelon::reduce(const F2Vector& v) const { return reduce_tracked(v).first; }

std::pair<F2Vector, F2Vector> F2Echelon::reduce_tracked(const F2Vector& v) const {
    F2Vector residue = v;
    F2Vector combo(aug_width_);
    // ascending pivot order: each stored row only touches bits >= its pivot,
    // so a single sweep clears every pivot position and the residue is the
    // canonical coset representative
    for (const auto& [piv, entry] : rows_) {
        if (residue.get(piv)) {
            residue ^= entry.first;
            combo ^= entry.second;
        }
    }
    return {residue, combo};
}

bool F2Echelon::insert(const F2Vector& v, const F2Vector& aug) {
    F2Vector residue = v;
    F2Vector combo = aug;
    while (true) {
        const int p = residue.first_set();
        if (p < 0) return false;
        auto it = rows_.find(p);
        if (it == rows_.end()) {
            rows_.emplace(p, std::make_pair(std::move(residue), std::move(combo)));
            return true;
        }
        residue ^= it->second.first;
        combo ^= it->second.second;
    }
}

}  // namespace conftc
