#include "conftc/int_matrix.hpp"

#include <algorithm>
#include <set>

namespace conftc {

IntMat IntMat::operator*(const IntMat& o) const {
    IntMat out(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const Int& v = at(r, k);
            if (v == 0) continue;
            for (int c = 0; c < o.cols_; ++c) out.at(r, c) += v * o.at(k, c);
        }
    return out;
}

Int IntMat::determinant() const {
    if (rows_ != cols_) throw InvalidInputError("determinant of a non-square matrix");
    const int n = rows_;
    if (n == 0) return 1;
    IntMat w = *this;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (w.at(k, k) == 0) {
            int swap = -1;
            for (int r = k + 1; r < n; ++r)
                if (w.at(r, k) != 0) { swap = r; break; }
            if (swap == -1) return 0;
            for (int c = 0; c < n; ++c) std::swap(w.at(k, c), w.at(swap, c));
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r) {
            for (int c = k + 1; c < n; ++c) {
                Int num = w.at(r, c) * w.at(k, k) - w.at(r, k) * w.at(k, c);
                w.at(r, c) = num / prev;  // exact by Bareiss
            }
            w.at(r, k) = 0;
        }
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : Int(-w.at(n - 1, n - 1));
}

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::vector<Int> SNFResult::torsion() const {
    std::vector<Int> out;
    for (const Int& d : diag)
        if (d > 1) out.push_back(d);
    return out;
}

namespace {

/// Sparse working matrix: rows as ordered col->value maps plus, per column,
/// the set of rows holding a nonzero. Keeps pivot search and column
/// operations proportional to the nonzero count.
class SparseWork {
public:
    SparseWork(int rows, int cols, const std::vector<Triplet>& entries)
        : R(rows), C(cols), row_(static_cast<size_t>(rows)), colrows_(static_cast<size_t>(cols)) {
        for (const Triplet& t : entries) {
            if (t.value == 0) continue;
            Int& slot = row_[static_cast<size_t>(t.row)][t.col];
            slot += t.value;
            if (slot == 0) row_[static_cast<size_t>(t.row)].erase(t.col);
        }
        for (int r = 0; r < R; ++r)
            for (auto& [c, v] : row_[static_cast<size_t>(r)]) colrows_[static_cast<size_t>(c)].insert(r);
    }

    Int get(int r, int c) const {
        auto it = row_[static_cast<size_t>(r)].find(c);
        return it == row_[static_cast<size_t>(r)].end() ? Int(0) : it->second;
    }

    void set(int r, int c, const Int& v) {
        if (v == 0) {
            row_[static_cast<size_t>(r)].erase(c);
            colrows_[static_cast<size_t>(c)].erase(r);
        } else {
            row_[static_cast<size_t>(r)][c] = v;
            colrows_[static_cast<size_t>(c)].insert(r);
        }
    }

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (auto& [c, v] : row_[static_cast<size_t>(i)]) colrows_[static_cast<size_t>(c)].erase(i);
        for (auto& [c, v] : row_[static_cast<size_t>(j)]) colrows_[static_cast<size_t>(c)].erase(j);
        std::swap(row_[static_cast<size_t>(i)], row_[static_cast<size_t>(j)]);
        for (auto& [c, v] : row_[static_cast<size_t>(i)]) colrows_[static_cast<size_t>(c)].insert(i);
        for (auto& [c, v] : row_[static_cast<size_t>(j)]) colrows_[static_cast<size_t>(c)].insert(j);
    }

    void swap_cols(int i, int j) {
        if (i == j) return;
        std::set<int> touched = colrows_[static_cast<size_t>(i)];
        for (int r : colrows_[static_cast<size_t>(j)]) touched.insert(r);
        for (int r : touched) {
            auto& m = row_[static_cast<size_t>(r)];
            Int vi = 0, vj = 0;
            if (auto it = m.find(i); it != m.end()) vi = it->second;
            if (auto it = m.find(j); it != m.end()) vj = it->second;
            if (vi != 0) m[j] = vi; else m.erase(j);
            if (vj != 0) m[i] = vj; else m.erase(i);
        }
        std::swap(colrows_[static_cast<size_t>(i)], colrows_[static_cast<size_t>(j)]);
    }

    void negate_row(int i) {
        for (auto& [c, v] : row_[static_cast<size_t>(i)]) v = -v;
    }

    /// row i += c * row j
    void row_addmul(int i, int j, const Int& c) {
        for (const auto& [col, v] : row_[static_cast<size_t>(j)]) {
            Int& slot = row_[static_cast<size_t>(i)][col];
            slot += c * v;
            if (slot == 0) {
                row_[static_cast<size_t>(i)].erase(col);
                colrows_[static_cast<size_t>(col)].erase(i);
            } else {
                colrows_[static_cast<size_t>(col)].insert(i);
            }
        }
    }

    /// col i += c * col j
    void col_addmul(int i, int j, const Int& c) {
        const std::set<int> rows_j = colrows_[static_cast<size_t>(j)];
        for (int r : rows_j) {
            const Int vj = get(r, j);
            Int slot = get(r, i) + c * vj;
            set(r, i, slot);
        }
    }

    const std::map<int, Int>& row(int r) const { return row_[static_cast<size_t>(r)]; }
    const std::set<int>& col_rows(int c) const { return colrows_[static_cast<size_t>(c)]; }

    /// Smallest-absolute-value nonzero in the trailing submatrix, ties broken
    /// by (row, col); returns false when the submatrix is zero.
    bool find_pivot(int from, int& pr, int& pc) const {
        bool found = false;
        Int best;
        for (int r = from; r < R; ++r) {
            for (const auto& [c, v] : row_[static_cast<size_t>(r)]) {
                if (c < from) continue;
                Int a = abs(v);
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pr = r;
                    pc = c;
                }
            }
        }
        return found;
    }

    const int R;
    const int C;

private:
    std::vector<std::map<int, Int>> row_;
    std::vector<std::set<int>> colrows_;
};

Int nearest_quotient(const Int& a, const Int& b) {
    // q minimizing |a - q b|
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r * 2 > abs(b)) q += b > 0 ? 1 : -1;
    return q;
}

}  // namespace

SNFResult smith_normal_form(int rows, int cols, const std::vector<Triplet>& entries,
                            const SNFOptions& opts) {
    SparseWork m(rows, cols, entries);
    SNFResult res;
    res.rows = rows;
    res.cols = cols;
    if (opts.witnesses) {
        res.U = IntMat::identity(rows);
        res.V = IntMat::identity(cols);
    }

    auto rec_swap = [&](int i, int j) {
        if (i == j) return;
        if (opts.row_script) res.row_script.push_back({RowOp::Swap, i, j, 0});
        if (res.U)
            for (int c = 0; c < rows; ++c) std::swap(res.U->at(i, c), res.U->at(j, c));
    };
    auto rec_negate = [&](int i) {
        if (opts.row_script) res.row_script.push_back({RowOp::Negate, i, 0, 0});
        if (res.U)
            for (int c = 0; c < rows; ++c) res.U->at(i, c) = -res.U->at(i, c);
    };
    auto rec_addmul = [&](int i, int j, const Int& c) {
        if (opts.row_script) res.row_script.push_back({RowOp::AddMul, i, j, c});
        if (res.U)
            for (int col = 0; col < rows; ++col) res.U->at(i, col) += c * res.U->at(j, col);
    };
    auto rec_col_swap = [&](int i, int j) {
        if (res.V && i != j)
            for (int r = 0; r < cols; ++r) std::swap(res.V->at(r, i), res.V->at(r, j));
    };
    auto rec_col_addmul = [&](int i, int j, const Int& c) {
        if (res.V)
            for (int r = 0; r < cols; ++r) res.V->at(r, i) += c * res.V->at(r, j);
    };

    const int bound = std::min(rows, cols);
    int pos = 0;
    while (pos < bound) {
        int pr, pc;
        if (!m.find_pivot(pos, pr, pc)) break;
        m.swap_rows(pos, pr);
        rec_swap(pos, pr);
        m.swap_cols(pos, pc);
        rec_col_swap(pos, pc);

        bool settled = false;
        while (!settled) {
            settled = true;
            const Int pivot = m.get(pos, pos);

            // clear the pivot column with row operations
            bool swapped = false;
            std::vector<int> col_targets(m.col_rows(pos).begin(), m.col_rows(pos).end());
            for (int r : col_targets) {
                if (r == pos) continue;
                const Int v = m.get(r, pos);
                if (v == 0) continue;
                const Int q = nearest_quotient(v, pivot);
                if (q != 0) {
                    m.row_addmul(r, pos, -q);
                    rec_addmul(r, pos, -q);
                }
                if (m.get(r, pos) != 0) {
                    // strictly smaller remainder becomes the new pivot
                    m.swap_rows(pos, r);
                    rec_swap(pos, r);
                    swapped = true;
                    break;
                }
            }
            if (swapped) {
                settled = false;
                continue;
            }

            // clear the pivot row with column operations
            std::vector<int> row_targets;
            for (const auto& [c, v] : m.row(pos))
                if (c != pos) row_targets.push_back(c);
            for (int c : row_targets) {
                const Int v = m.get(pos, c);
                if (v == 0) continue;
                const Int q = nearest_quotient(v, m.get(pos, pos));
                if (q != 0) {
                    m.col_addmul(c, pos, -q);
                    rec_col_addmul(c, pos, -q);
                }
                if (m.get(pos, c) != 0) {
                    m.swap_cols(pos, c);
                    rec_col_swap(pos, c);
                    settled = false;
                    break;
                }
            }
            if (!settled) continue;

            // the pivot must divide the whole trailing submatrix before we
            // advance, which is what forces the divisibility chain
            const Int p = m.get(pos, pos);
            bool bumped = false;
            for (int r = pos + 1; r < rows && !bumped; ++r) {
                for (const auto& [c, v] : m.row(r)) {
                    if (c <= pos) continue;
                    if (v % p != 0) {
                        m.row_addmul(pos, r, 1);
                        rec_addmul(pos, r, 1);
                        bumped = true;
                        break;
                    }
                }
            }
            if (bumped) settled = false;
        }
        ++pos;
    }

    for (int i = 0; i < pos; ++i) {
        Int d = m.get(i, i);
        if (d < 0) {
            m.negate_row(i);
            rec_negate(i);
            d = -d;
        }
        res.diag.push_back(d);
    }
    return res;
}

SNFResult smith_normal_form(const IntMat& mat, const SNFOptions& opts) {
    std::vector<Triplet> entries;
    for (int r = 0; r < mat.rows(); ++r)
        for (int c = 0; c < mat.cols(); ++c)
            if (mat.at(r, c) != 0) {
                if (!mat.at(r, c).fits_slong_p())
                    throw InvalidInputError("dense SNF entry does not fit a long");
                entries.push_back({r, c, mat.at(r, c).get_si()});
            }
    return smith_normal_form(mat.rows(), mat.cols(), entries, opts);
}

void apply_row_script(const std::vector<RowOp>& script, std::vector<Int>& v) {
    for (const RowOp& op : script) {
        switch (op.kind) {
            case RowOp::Swap:
                std::swap(v[static_cast<size_t>(op.i)], v[static_cast<size_t>(op.j)]);
                break;
            case RowOp::Negate:
                v[static_cast<size_t>(op.i)] = -v[static_cast<size_t>(op.i)];
                break;
            case RowOp::AddMul:
                v[static_cast<size_t>(op.i)] += op.c * v[static_cast<size_t>(op.j)];
                break;
        }
    }
}

bool in_column_image(const SNFResult& snf, const std::vector<Int>& z) {
    if (static_cast<int>(z.size()) != snf.rows)
        throw InvalidInputError("vector length does not match the factored matrix");
    std::vector<Int> w = z;
    apply_row_script(snf.row_script, w);
    for (int i = 0; i < snf.rank(); ++i)
        if (w[static_cast<size_t>(i)] % snf.diag[static_cast<size_t>(i)] != 0) return false;
    for (int i = snf.rank(); i < snf.rows; ++i)
        if (w[static_cast<size_t>(i)] != 0) return false;
    return true;
}

}  // namespace conftc
