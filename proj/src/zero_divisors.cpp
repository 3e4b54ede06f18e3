#include "conftc/zero_divisors.hpp"

#include <algorithm>
#include <sstream>

namespace conftc {

PairSet::PairSet(int ground_size, std::vector<Pair> pairs) : k_(ground_size) {
    for (auto& [i, j] : pairs) {
        if (i > j) std::swap(i, j);
        if (i == j || i < 1 || j > k_)
            throw InvalidInputError("pair {" + std::to_string(i) + "," + std::to_string(j) +
                                    "} is not a 2-subset of the ground set");
    }
    std::sort(pairs.begin(), pairs.end());
    for (size_t i = 1; i < pairs.size(); ++i)
        if (pairs[i] == pairs[i - 1]) throw InvalidInputError("repeated pair in pair set");
    pairs_ = std::move(pairs);

    std::vector<int> count(static_cast<size_t>(k_) + 1, 0);
    for (const auto& [i, j] : pairs_) {
        ++count[static_cast<size_t>(i)];
        ++count[static_cast<size_t>(j)];
    }
    is_partition_ = true;
    is_cover_ = k_ > 0;
    for (int v = 1; v <= k_; ++v) {
        if (count[static_cast<size_t>(v)] > 1) is_partition_ = false;
        if (count[static_cast<size_t>(v)] == 0) is_cover_ = false;
    }
}

bool PairSet::contains(const Pair& p) const {
    return std::binary_search(pairs_.begin(), pairs_.end(), p);
}

bool PairSet::disjoint_from(const PairSet& o) const {
    for (const Pair& p : pairs_)
        if (o.contains(p)) return false;
    return true;
}

bool PairSet::operator<(const PairSet& o) const {
    if (k_ != o.k_) return k_ < o.k_;
    return pairs_ < o.pairs_;
}

std::string PairSet::to_string() const {
    std::ostringstream out;
    out << "{";
    for (size_t i = 0; i < pairs_.size(); ++i) {
        if (i) out << ",";
        out << "{" << pairs_[i].first << "," << pairs_[i].second << "}";
    }
    out << "}";
    return out.str();
}

std::optional<Monomial> monomial_product(const Monomial& a, const Monomial& b) {
    if (a.ground_size() != b.ground_size())
        throw InvalidInputError("monomial product across different ground sets");
    if (!a.disjoint_from(b)) return std::nullopt;  // a repeated Gauss class squares to zero
    std::vector<PairSet::Pair> pairs = a.pairs();
    pairs.insert(pairs.end(), b.pairs().begin(), b.pairs().end());
    return Monomial(a.ground_size(), std::move(pairs));
}

TensorWord TensorWord::unit(int ground_size, int arity) {
    TensorWord w(ground_size, arity);
    w.toggle(Term(static_cast<size_t>(arity), Monomial::empty(ground_size)));
    return w;
}

void TensorWord::toggle(const Term& t) {
    if (static_cast<int>(t.size()) != r_)
        throw InvalidInputError("term arity does not match the word");
    for (const Monomial& m : t)
        if (m.ground_size() != k_)
            throw InvalidInputError("term ground set does not match the word");
    auto it = terms_.find(t);
    if (it == terms_.end())
        terms_.insert(t);
    else
        terms_.erase(it);
}

TensorWord TensorWord::operator+(const TensorWord& o) const {
    if (k_ != o.k_ || r_ != o.r_) throw InvalidInputError("word shapes do not match");
    TensorWord out = *this;
    for (const Term& t : o.terms_) out.toggle(t);
    return out;
}

TensorWord TensorWord::operator*(const TensorWord& o) const {
    if (k_ != o.k_ || r_ != o.r_) throw InvalidInputError("word shapes do not match");
    TensorWord out(k_, r_);
    for (const Term& s : terms_) {
        for (const Term& t : o.terms_) {
            Term product;
            product.reserve(static_cast<size_t>(r_));
            bool dead = false;
            for (int slot = 0; slot < r_ && !dead; ++slot) {
                auto m = monomial_product(s[static_cast<size_t>(slot)], t[static_cast<size_t>(slot)]);
                if (!m)
                    dead = true;
                else
                    product.push_back(std::move(*m));
            }
            if (!dead) out.toggle(product);
        }
    }
    return out;
}

std::set<Monomial> TensorWord::diagonal_restriction() const {
    std::set<Monomial> out;
    for (const Term& t : terms_) {
        std::optional<Monomial> acc = Monomial::empty(k_);
        for (const Monomial& m : t) {
            acc = monomial_product(*acc, m);
            if (!acc) break;
        }
        if (!acc) continue;
        auto it = out.find(*acc);
        if (it == out.end())
            out.insert(std::move(*acc));
        else
            out.erase(it);
    }
    return out;
}

std::string TensorWord::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first_term = true;
    for (const Term& t : terms_) {
        if (!first_term) out << " + ";
        first_term = false;
        for (int slot = 0; slot < r_; ++slot) {
            if (slot) out << "(x)";
            const Monomial& m = t[static_cast<size_t>(slot)];
            if (m.size() == 0)
                out << "1";
            else {
                for (const auto& [i, j] : m.pairs()) out << "a" << i << j;
            }
        }
    }
    return out.str();
}

TorusTuple::TorusTuple(int k, std::vector<PairSet> s) : ground_size(k), slots(std::move(s)) {
    for (const PairSet& p : slots) {
        if (p.ground_size() != k)
            throw InvalidInputError("torus slot ground set does not match");
        if (!p.is_partition())
            throw InvalidInputError("torus classes are indexed by partial binary partitions");
    }
}

TensorWord zeta(int ground_size, int arity, int slot_a, int slot_b, PairSet::Pair p) {
    if (slot_a == slot_b) throw InvalidInputError("zeta needs two distinct slots");
    if (slot_a < 1 || slot_b > arity || slot_a > slot_b)
        throw InvalidInputError("zeta slots must satisfy 1 <= a < b <= r");
    const Monomial alpha(ground_size, {p});
    TensorWord w(ground_size, arity);
    TensorWord::Term t(static_cast<size_t>(arity), Monomial::empty(ground_size));
    t[static_cast<size_t>(slot_a) - 1] = alpha;
    w.toggle(t);
    TensorWord::Term s(static_cast<size_t>(arity), Monomial::empty(ground_size));
    s[static_cast<size_t>(slot_b) - 1] = alpha;
    w.toggle(s);
    return w;
}

TensorWord zeta_lambda(const PairSet& lambda, int slot_a, int slot_b, int arity) {
    if (!lambda.is_partition())
        throw InvalidInputError("zeta_lambda is indexed by partial binary partitions");
    TensorWord w = TensorWord::unit(lambda.ground_size(), arity);
    for (const auto& p : lambda.pairs())
        w = w * zeta(lambda.ground_size(), arity, slot_a, slot_b, p);
    return w;
}

TensorWord zeta_lambda_expansion(const PairSet& lambda, int slot_a, int slot_b, int arity) {
    if (!lambda.is_partition())
        throw InvalidInputError("zeta_lambda is indexed by partial binary partitions");
    if (slot_a < 1 || slot_b > arity || slot_a >= slot_b)
        throw InvalidInputError("zeta slots must satisfy 1 <= a < b <= r");
    const int n = lambda.size();
    TensorWord w(lambda.ground_size(), arity);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<PairSet::Pair> mu, mu_c;
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i))
                mu.push_back(lambda.pairs()[static_cast<size_t>(i)]);
            else
                mu_c.push_back(lambda.pairs()[static_cast<size_t>(i)]);
        }
        TensorWord::Term t(static_cast<size_t>(arity), Monomial::empty(lambda.ground_size()));
        t[static_cast<size_t>(slot_a) - 1] = Monomial(lambda.ground_size(), std::move(mu));
        t[static_cast<size_t>(slot_b) - 1] = Monomial(lambda.ground_size(), std::move(mu_c));
        w.toggle(t);
    }
    return w;
}

int pair_with_torus(const TensorWord& w, const TorusTuple& t) {
    if (w.ground_size() != t.ground_size || w.arity() != static_cast<int>(t.slots.size()))
        throw InvalidInputError("word and torus tuple shapes do not match");
    // slotwise rule <alpha_mu, tau_lambda> = [mu == lambda]: a term counts
    // exactly when it coincides with the tuple
    int parity = 0;
    for (const TensorWord::Term& term : w.terms()) {
        bool all = true;
        for (size_t slot = 0; slot < t.slots.size(); ++slot)
            if (!(term[slot] == t.slots[slot])) { all = false; break; }
        if (all) parity ^= 1;
    }
    return parity;
}

int verify_orthogonal_lemma(int ground_size, const std::vector<PairSet>& lambdas) {
    const int r = static_cast<int>(lambdas.size());
    if (r < 2) throw PreconditionError("the pairing statement needs r >= 2 partitions");
    for (const PairSet& l : lambdas) {
        if (!l.is_partition())
            throw PreconditionError("every lambda must be a partial binary partition");
        if (l.ground_size() != ground_size)
            throw InvalidInputError("lambda ground sets do not match");
    }
    if (!lambdas[0].disjoint_from(lambdas[1]))
        throw PreconditionError("lambda_1 and lambda_2 must be orthogonal");

    TensorWord product = zeta_lambda(lambdas[0], 1, 2, r) * zeta_lambda(lambdas[1], 1, 2, r);
    for (int j = 3; j <= r; ++j)
        product = product * zeta_lambda(lambdas[static_cast<size_t>(j) - 1], j - 1, j, r);
    return pair_with_torus(product, TorusTuple(ground_size, lambdas));
}

std::pair<PairSet, PairSet> orthogonal_pair(int d) {
    if (d <= 1)
        throw PreconditionError("orthogonal binary partitions of {1..2d} need d > 1; "
                                "the consecutive and shifted partitions coincide for d = 1");
    std::vector<PairSet::Pair> consecutive, shifted;
    for (int i = 1; i <= d; ++i) consecutive.push_back({2 * i - 1, 2 * i});
    for (int i = 1; i < d; ++i) shifted.push_back({2 * i, 2 * i + 1});
    shifted.push_back({2 * d, 1});
    return {PairSet(2 * d, std::move(consecutive)), PairSet(2 * d, std::move(shifted))};
}

}  // namespace conftc
