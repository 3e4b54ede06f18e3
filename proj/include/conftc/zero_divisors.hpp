#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "conftc/common.hpp"

namespace conftc {

/// Collection of 2-element subsets of {1..k}. Partition: members pairwise
/// disjoint; cover: members exhaust the ground set.
class PairSet {
public:
    using Pair = std::pair<int, int>;  // normalized i < j

    PairSet() = default;
    PairSet(int ground_size, std::vector<Pair> pairs);
    static PairSet empty(int ground_size) { return PairSet(ground_size, {}); }

    int ground_size() const { return k_; }
    int size() const { return static_cast<int>(pairs_.size()); }
    const std::vector<Pair>& pairs() const { return pairs_; }
    bool contains(const Pair& p) const;

    bool is_partition() const { return is_partition_; }
    bool is_cover() const { return is_cover_; }

    /// Members shared with another pair set.
    bool disjoint_from(const PairSet& o) const;

    bool operator==(const PairSet& o) const { return k_ == o.k_ && pairs_ == o.pairs_; }
    bool operator<(const PairSet& o) const;

    std::string to_string() const;

private:
    int k_ = 0;
    std::vector<Pair> pairs_;
    bool is_partition_ = true;
    bool is_cover_ = false;
};

/// Square-free product of Gauss classes, one per pair; degree = pair count.
using Monomial = PairSet;

/// Product of two monomials; nullopt when a pair repeats (squares vanish).
std::optional<Monomial> monomial_product(const Monomial& a, const Monomial& b);

/// Formal F2 sum of r-tuples of monomials, slot j in tensor factor j.
/// Identical terms cancel in pairs on insertion.
class TensorWord {
public:
    using Term = std::vector<Monomial>;

    TensorWord(int ground_size, int arity) : k_(ground_size), r_(arity) {}
    static TensorWord zero(int ground_size, int arity) { return TensorWord(ground_size, arity); }
    static TensorWord unit(int ground_size, int arity);

    int ground_size() const { return k_; }
    int arity() const { return r_; }
    int term_count() const { return static_cast<int>(terms_.size()); }
    const std::set<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// XOR a term into the sum.
    void toggle(const Term& t);

    TensorWord operator+(const TensorWord& o) const;
    TensorWord operator*(const TensorWord& o) const;
    bool operator==(const TensorWord& o) const { return k_ == o.k_ && r_ == o.r_ && terms_ == o.terms_; }

    /// Restriction along the diagonal: multiply all slots together. The
    /// result is an F2 sum of monomials; words built from zeta factors
    /// restrict to zero, which is the computable zero-divisor property.
    std::set<Monomial> diagonal_restriction() const;

    std::string to_string() const;

private:
    int k_;
    int r_;
    std::set<Term> terms_;
};

/// Tensor factor of torus classes, one partial binary partition per slot.
struct TorusTuple {
    int ground_size = 0;
    std::vector<PairSet> slots;

    TorusTuple(int k, std::vector<PairSet> s);
};

/// alpha_{ij} in slot a plus alpha_{ij} in slot b (all other slots 1).
TensorWord zeta(int ground_size, int arity, int slot_a, int slot_b, PairSet::Pair p);

/// Product over the pairs of a partial binary partition of the zeta factors.
TensorWord zeta_lambda(const PairSet& lambda, int slot_a, int slot_b, int arity);

/// Closed-form subset-sum expansion of the same element: alpha_mu in slot a
/// and alpha_{mu^c} in slot b, summed over subsets mu of lambda. Kept as an
/// independent route for cross-checking zeta_lambda.
TensorWord zeta_lambda_expansion(const PairSet& lambda, int slot_a, int slot_b, int arity);

/// Kronecker pairing of a word against a torus tuple: a term evaluates to 1
/// exactly when its monomial in every slot equals that slot's partition, and
/// the results are summed mod 2.
int pair_with_torus(const TensorWord& w, const TorusTuple& t);

/// Evaluate the pairing of zeta^{12}_{l1} zeta^{12}_{l2} prod_j zeta^{(j-1)j}_{lj}
/// against tau_{l1} x ... x tau_{lr}. Requires l1 and l2 orthogonal; the
/// result is always 1 in that case.
int verify_orthogonal_lemma(int ground_size, const std::vector<PairSet>& lambdas);

/// The consecutive-pairs partition {{1,2},{3,4},...} and the shifted
/// partition {{2,3},...,{2d,1}} of {1..2d}; orthogonal for d > 1.
std::pair<PairSet, PairSet> orthogonal_pair(int d);

}  // namespace conftc
