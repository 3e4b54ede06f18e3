#pragma once

#include <memory>
#include <vector>

#include "conftc/cube_complex.hpp"
#include "conftc/f2_matrix.hpp"
#include "conftc/int_matrix.hpp"

namespace conftc {

enum class Coeff { F2, Z };

struct HomologyOptions {
    /// Build degree-1 cycle representatives (and, over F2, the class
    /// coordinate map). Skipping them avoids kernel tracking on large
    /// complexes whose classes are only ever tested for bounding.
    bool representatives = true;
};

/// Homology of a cube complex: Betti numbers per degree, torsion invariant
/// factors (Z coefficients), degree-1 cycle representatives, and exact class
/// comparison of cycles.
class HomologyResult {
public:
    Coeff coefficients() const { return coeff_; }
    int top_degree() const { return static_cast<int>(betti_.size()) - 1; }
    const std::vector<int>& betti() const { return betti_; }
    int betti_number(int degree) const;
    /// Invariant factors > 1 of H_degree (always empty over F2).
    std::vector<Int> torsion(int degree) const;

    /// Degree-1 representatives spanning the free part of H_1.
    const std::vector<SparseChain>& h1_representatives() const { return reps1_; }

    bool is_cycle(int degree, const SparseChain& z) const;
    bool is_boundary(int degree, const SparseChain& z) const;
    /// True iff a - b bounds over the active coefficients. Throws on
    /// non-cycle input.
    bool class_equal(int degree, const SparseChain& a, const SparseChain& b) const;

    /// Canonical coordinates of a degree-1 cycle's class over the
    /// representative basis (F2 coefficients only).
    F2Vector h1_class_coords_f2(const SparseChain& z) const;

    friend HomologyResult homology(const CubeComplex& c, Coeff coeff, const HomologyOptions& opts);

private:
    Coeff coeff_ = Coeff::F2;
    std::vector<int> betti_;
    std::vector<int> cell_counts_;
    std::vector<std::vector<Int>> torsion_;       // per degree
    std::vector<std::vector<Triplet>> boundary_;  // copy of the complex's operators
    std::vector<SparseChain> reps1_;

    // Z: SNF of each boundary operator with a row script for image tests
    std::vector<SNFResult> snf_;
    // F2: image echelon of each d_{degree+1}, plus the tracked quotient
    // echelon for degree 1
    std::vector<std::shared_ptr<F2Echelon>> image_f2_;
    std::shared_ptr<F2Echelon> quotient1_f2_;

    SparseChain boundary_apply(int degree, const SparseChain& z) const;
    F2Vector to_f2(int degree, const SparseChain& z) const;
};

HomologyResult homology(const CubeComplex& c, Coeff coeff, const HomologyOptions& opts = {});

}  // namespace conftc
