#include "conftc/homology.hpp"

#include <algorithm>
#include <queue>

namespace conftc {

namespace {

/// Rational row echelon used to pick a maximal independent subset of
/// candidate coordinate vectors.
class RatEchelon {
public:
    bool insert(std::vector<Rat> v) {
        while (true) {
            int p = -1;
            for (size_t i = 0; i < v.size(); ++i)
                if (v[i] != 0) { p = static_cast<int>(i); break; }
            if (p == -1) return false;
            auto it = rows_.find(p);
            if (it == rows_.end()) {
                const Rat lead = v[static_cast<size_t>(p)];
                for (auto& x : v) x /= lead;
                rows_.emplace(p, std::move(v));
                return true;
            }
            const Rat f = v[static_cast<size_t>(p)];
            for (size_t i = 0; i < v.size(); ++i) v[i] -= f * it->second[i];
        }
    }

private:
    std::map<int, std::vector<Rat>> rows_;
};

}  // namespace

int HomologyResult::betti_number(int degree) const {
    if (degree < 0 || degree > top_degree()) return 0;
    return betti_[static_cast<size_t>(degree)];
}

std::vector<Int> HomologyResult::torsion(int degree) const {
    if (degree < 0 || degree >= static_cast<int>(torsion_.size())) return {};
    return torsion_[static_cast<size_t>(degree)];
}

SparseChain HomologyResult::boundary_apply(int degree, const SparseChain& z) const {
    SparseChain out;
    if (degree <= 0 || degree >= static_cast<int>(boundary_.size())) return out;
    // index triplets on demand; chains are tiny compared to the operator
    for (const Triplet& t : boundary_[static_cast<size_t>(degree)]) {
        auto it = z.find(t.col);
        if (it == z.end()) continue;
        Int& slot = out[t.row];
        slot += Int(t.value) * it->second;
        if (slot == 0) out.erase(t.row);
    }
    return out;
}

F2Vector HomologyResult::to_f2(int degree, const SparseChain& z) const {
    F2Vector v(cell_counts_[static_cast<size_t>(degree)]);
    for (const auto& [idx, coeff] : z)
        if (coeff % 2 != 0) v.flip(idx);
    return v;
}

bool HomologyResult::is_cycle(int degree, const SparseChain& z) const {
    if (degree < 0 || degree > top_degree()) return false;
    if (coeff_ == Coeff::Z) return boundary_apply(degree, z).empty();
    const SparseChain b = boundary_apply(degree, z);
    for (const auto& [idx, c] : b)
        if (c % 2 != 0) return false;
    return true;
}

bool HomologyResult::is_boundary(int degree, const SparseChain& z) const {
    if (!is_cycle(degree, z)) throw InvalidInputError("non-cycle input to a class comparison");
    const int n = cell_counts_[static_cast<size_t>(degree)];
    if (coeff_ == Coeff::F2) {
        const F2Vector v = to_f2(degree, z);
        if (degree + 1 >= static_cast<int>(image_f2_.size()) || !image_f2_[static_cast<size_t>(degree) + 1])
            return v.is_zero();
        return image_f2_[static_cast<size_t>(degree) + 1]->reduce(v).is_zero();
    }
    if (degree + 1 >= static_cast<int>(snf_.size())) {
        for (const auto& [idx, cv] : z)
            if (cv != 0) return false;
        return true;
    }
    std::vector<Int> dense(static_cast<size_t>(n));
    for (const auto& [idx, c] : z) dense[static_cast<size_t>(idx)] = c;
    return in_column_image(snf_[static_cast<size_t>(degree) + 1], dense);
}

bool HomologyResult::class_equal(int degree, const SparseChain& a, const SparseChain& b) const {
    if (!is_cycle(degree, a) || !is_cycle(degree, b))
        throw InvalidInputError("non-cycle input to a class comparison");
    SparseChain diff = a;
    for (const auto& [idx, c] : b) {
        Int& slot = diff[idx];
        slot -= c;
        if (slot == 0) diff.erase(idx);
    }
    return is_boundary(degree, diff);
}

F2Vector HomologyResult::h1_class_coords_f2(const SparseChain& z) const {
    if (coeff_ != Coeff::F2) throw InvalidInputError("class coordinates need F2 coefficients");
    if (!quotient1_f2_) throw InvalidInputError("representatives were not built");
    if (!is_cycle(1, z)) throw InvalidInputError("non-cycle input to a class comparison");
    F2Vector v = to_f2(1, z);
    if (image_f2_.size() > 2 && image_f2_[2]) v = image_f2_[2]->reduce(v);
    auto [residue, combo] = quotient1_f2_->reduce_tracked(v);
    if (!residue.is_zero())
        throw InvalidInputError("cycle class escapes the representative basis");
    return combo;
}

HomologyResult homology(const CubeComplex& c, Coeff coeff, const HomologyOptions& opts) {
    HomologyResult H;
    H.coeff_ = coeff;
    const int D = c.top_dim();
    H.cell_counts_.resize(static_cast<size_t>(D) + 1);
    for (int d = 0; d <= D; ++d) H.cell_counts_[static_cast<size_t>(d)] = c.cell_count(d);
    H.boundary_.resize(static_cast<size_t>(D) + 1);
    for (int d = 1; d <= D; ++d) H.boundary_[static_cast<size_t>(d)] = c.boundary(d);

    std::vector<int> rank(static_cast<size_t>(D) + 2, 0);
    if (coeff == Coeff::Z) {
        H.snf_.resize(static_cast<size_t>(D) + 1);
        for (int d = 1; d <= D; ++d) {
            SNFOptions so;
            so.row_script = true;
            H.snf_[static_cast<size_t>(d)] =
                smith_normal_form(H.cell_counts_[static_cast<size_t>(d) - 1],
                                  H.cell_counts_[static_cast<size_t>(d)],
                                  H.boundary_[static_cast<size_t>(d)], so);
            rank[static_cast<size_t>(d)] = H.snf_[static_cast<size_t>(d)].rank();
        }
    } else {
        H.image_f2_.resize(static_cast<size_t>(D) + 1);
        for (int d = 1; d <= D; ++d) {
            F2Matrix m(H.cell_counts_[static_cast<size_t>(d) - 1], H.cell_counts_[static_cast<size_t>(d)]);
            for (const Triplet& t : H.boundary_[static_cast<size_t>(d)]) m.flip(t.row, t.col);
            rank[static_cast<size_t>(d)] = f2_rank(m).rank;
            auto ech = std::make_shared<F2Echelon>(H.cell_counts_[static_cast<size_t>(d) - 1]);
            std::vector<F2Vector> cols(static_cast<size_t>(H.cell_counts_[static_cast<size_t>(d)]),
                                       F2Vector(H.cell_counts_[static_cast<size_t>(d) - 1]));
            for (const Triplet& t : H.boundary_[static_cast<size_t>(d)]) cols[static_cast<size_t>(t.col)].flip(t.row);
            for (auto& col : cols) ech->insert(col);
            H.image_f2_[static_cast<size_t>(d)] = std::move(ech);
        }
    }

    H.betti_.resize(static_cast<size_t>(D) + 1);
    H.torsion_.resize(static_cast<size_t>(D) + 1);
    for (int d = 0; d <= D; ++d) {
        H.betti_[static_cast<size_t>(d)] = H.cell_counts_[static_cast<size_t>(d)] -
                                           rank[static_cast<size_t>(d)] - rank[static_cast<size_t>(d) + 1];
        if (coeff == Coeff::Z && d + 1 <= D)
            H.torsion_[static_cast<size_t>(d)] = H.snf_[static_cast<size_t>(d) + 1].torsion();
    }

    if (opts.representatives && D >= 1 && H.betti_[1] > 0) {
        // fundamental cycle basis of the 1-skeleton
        const int n0 = H.cell_counts_[0];
        const int n1 = H.cell_counts_[1];
        std::vector<int> head(static_cast<size_t>(n1), -1), tail(static_cast<size_t>(n1), -1);
        for (const Triplet& t : H.boundary_[1]) {
            if (t.value > 0)
                head[static_cast<size_t>(t.col)] = t.row;
            else
                tail[static_cast<size_t>(t.col)] = t.row;
        }
        std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(n0));  // (1-cell, other end)
        for (int e = 0; e < n1; ++e) {
            adj[static_cast<size_t>(tail[static_cast<size_t>(e)])].push_back({e, head[static_cast<size_t>(e)]});
            adj[static_cast<size_t>(head[static_cast<size_t>(e)])].push_back({e, tail[static_cast<size_t>(e)]});
        }
        std::vector<int> parent_edge(static_cast<size_t>(n0), -1);
        std::vector<int> parent(static_cast<size_t>(n0), -1);
        std::vector<int> depth(static_cast<size_t>(n0), -1);
        std::vector<bool> in_tree(static_cast<size_t>(n1), false);
        for (int s = 0; s < n0; ++s) {
            if (depth[static_cast<size_t>(s)] != -1) continue;
            depth[static_cast<size_t>(s)] = 0;
            std::queue<int> q;
            q.push(s);
            while (!q.empty()) {
                const int v = q.front();
                q.pop();
                for (auto [e, w] : adj[static_cast<size_t>(v)]) {
                    if (depth[static_cast<size_t>(w)] != -1) continue;
                    depth[static_cast<size_t>(w)] = depth[static_cast<size_t>(v)] + 1;
                    parent[static_cast<size_t>(w)] = v;
                    parent_edge[static_cast<size_t>(w)] = e;
                    in_tree[static_cast<size_t>(e)] = true;
                    q.push(w);
                }
            }
        }
        auto add_tree_path = [&](SparseChain& z, int from, int to) {
            // walk both ends to their common ancestor, adding +1 for tree
            // edges traversed head-to-tail direction "from -> to"
            int a = from, b = to;
            std::vector<std::pair<int, int>> up_a, up_b;  // (edge, direction sign)
            while (a != b) {
                if (depth[static_cast<size_t>(a)] >= depth[static_cast<size_t>(b)]) {
                    const int e = parent_edge[static_cast<size_t>(a)];
                    const int sign = head[static_cast<size_t>(e)] == a ? -1 : 1;  // leaving a upward
                    up_a.push_back({e, sign});
                    a = parent[static_cast<size_t>(a)];
                } else {
                    const int e = parent_edge[static_cast<size_t>(b)];
                    const int sign = head[static_cast<size_t>(e)] == b ? 1 : -1;  // arriving at b downward
                    up_b.push_back({e, sign});
                    b = parent[static_cast<size_t>(b)];
                }
            }
            for (auto [e, s] : up_a) {
                Int& slot = z[e];
                slot += s;
                if (slot == 0) z.erase(e);
            }
            for (auto [e, s] : up_b) {
                Int& slot = z[e];
                slot += s;
                if (slot == 0) z.erase(e);
            }
        };

        std::vector<SparseChain> fundamental;
        for (int e = 0; e < n1; ++e) {
            if (in_tree[static_cast<size_t>(e)]) continue;
            SparseChain z;
            z[e] = 1;  // tail -> head
            add_tree_path(z, head[static_cast<size_t>(e)], tail[static_cast<size_t>(e)]);
            fundamental.push_back(std::move(z));
        }

        const int want = H.betti_[1];
        if (coeff == Coeff::F2) {
            H.quotient1_f2_ = std::make_shared<F2Echelon>(n1, want);
            for (const SparseChain& z : fundamental) {
                if (static_cast<int>(H.reps1_.size()) == want) break;
                F2Vector v = H.to_f2(1, z);
                if (D >= 2) v = H.image_f2_[2]->reduce(v);
                F2Vector tag(want);
                tag.set(static_cast<int>(H.reps1_.size()), true);
                if (H.quotient1_f2_->insert(v, tag)) H.reps1_.push_back(z);
            }
        } else {
            RatEchelon ech;
            for (const SparseChain& z : fundamental) {
                if (static_cast<int>(H.reps1_.size()) == want) break;
                std::vector<Int> dense(static_cast<size_t>(n1));
                for (const auto& [idx, cv] : z) dense[static_cast<size_t>(idx)] = cv;
                std::vector<Rat> coords;
                if (D >= 2) {
                    apply_row_script(H.snf_[2].row_script, dense);
                    for (int i = H.snf_[2].rank(); i < n1; ++i)
                        coords.emplace_back(dense[static_cast<size_t>(i)]);
                } else {
                    for (const Int& x : dense) coords.emplace_back(x);
                }
                if (ech.insert(std::move(coords))) H.reps1_.push_back(z);
            }
        }
    }
    return H;
}

}  // namespace conftc
