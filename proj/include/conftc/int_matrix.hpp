#pragma once

#include <map>
#include <optional>
#include <vector>

#include "conftc/common.hpp"

namespace conftc {

/// Dense matrix of arbitrary-precision integers.
class IntMat {
public:
    IntMat() = default;
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int r, int c) { return a_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)]; }
    const Int& at(int r, int c) const {
        return a_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)];
    }

    IntMat operator*(const IntMat& o) const;
    bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    Int determinant() const;

    static IntMat identity(int n);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> a_;
};

struct Triplet {
    int row;
    int col;
    long value;
};

/// Elementary row operation, recorded in application order. Replaying a
/// script on a column vector reproduces the action of the accumulated
/// unimodular row transform.
struct RowOp {
    enum Kind { Swap, Negate, AddMul } kind;
    int i;
    int j;      // Swap/AddMul partner
    Int c;      // AddMul coefficient: row i += c * row j
};

struct SNFOptions {
    bool witnesses = false;   // build U, V with U*m*V diagonal
    bool row_script = false;  // record row operations for later replay
};

struct SNFResult {
    int rows = 0;
    int cols = 0;
    std::vector<Int> diag;  // invariant factors d1 | d2 | ..., all positive
    std::optional<IntMat> U;
    std::optional<IntMat> V;
    std::vector<RowOp> row_script;

    int rank() const { return static_cast<int>(diag.size()); }
    /// Invariant factors greater than one.
    std::vector<Int> torsion() const;
};

/// Smith normal form over Z with smallest-nonzero-pivot selection. The
/// elimination runs on a sparse row map, so incidence-like inputs stay fast.
SNFResult smith_normal_form(int rows, int cols, const std::vector<Triplet>& entries,
                            const SNFOptions& opts = {});
SNFResult smith_normal_form(const IntMat& m, const SNFOptions& opts = {});

/// Apply a recorded row script to a vector.
void apply_row_script(const std::vector<RowOp>& script, std::vector<Int>& v);

/// Does  m x = z  have an integer solution, given the SNF of m with a
/// recorded row script? Column operations only change variables, so z is in
/// the column image iff U z is compatible with the diagonal.
bool in_column_image(const SNFResult& snf, const std::vector<Int>& z);

}  // namespace conftc
