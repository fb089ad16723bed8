#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mlqs/polynomial.hpp"
#include "mlqs/word.hpp"

namespace mlqs {

// A sigma-twisted multiline queue of a given type: queues (q_1, ..., q_{L-1})
// with |q_i| = p_{sigma(i)}. The class count L may exceed the trimmed type
// length by one (top multiplicity zero), in which case the last queue is the
// full site set.
class MLQ {
public:
    MLQ(int n, std::vector<Queue> queues, TypeVector type, std::vector<int> twist = {});
    // Deduce the type from weakly increasing queue sizes; identity twist.
    static MLQ ordinary(int n, std::vector<Queue> queues);

    int n() const { return n_; }
    int num_classes() const { return static_cast<int>(queues_.size()) + 1; }
    int num_queues() const { return static_cast<int>(queues_.size()); }
    const std::vector<Queue>& queues() const { return queues_; }
    const Queue& queue(int i) const { return queues_[i - 1]; }
    const TypeVector& type() const { return type_; }
    const std::vector<int>& twist() const { return twist_; }
    bool ordinary_twist() const;

    Word apply(const Word& u) const;
    Polynomial weight() const;   // a single monomial in x_1..x_n

    std::string to_json() const;
    static MLQ from_json(const std::string& text);

    bool operator==(const MLQ&) const = default;

private:
    int n_ = 0;
    std::vector<Queue> queues_;
    TypeVector type_;
    std::vector<int> twist_;
};

Word mlq_apply(const MLQ& q, const Word& u);
Polynomial mlq_weight(const MLQ& q);

// Every sigma-twisted MLQ of the given type and class count, exactly once.
// Order is deterministic: per level the queues run through ascending bitmask
// values, with level 1 varying slowest.
void enumerate_mlqs(const TypeVector& m, int ell, const std::vector<int>& twist, int n,
                    const std::function<void(const MLQ&)>& fn);
long long count_mlqs(const TypeVector& m, int ell, int n);

// Spectral weight <u>_sigma: the sum of wt(q) over sigma-twisted MLQs of the
// type of u with q(1^n) = u.
Polynomial spectral_weight(const Word& u, const std::vector<int>& twist = {});
// Same but with a declared class count (the degenerate reading where the top
// multiplicity is zero and the last queue is forced to be [n]).
Polynomial spectral_weight_declared(const Word& u, int ell, const std::vector<int>& twist = {});
// One pass over the enumeration, bucketed by output word.
std::map<Word, Polynomial> spectral_weight_table(const TypeVector& m, int ell,
                                                 const std::vector<int>& twist, int n);

// The witness MLQ with q_k = {i : u_i <= k}; it maps 1^n to u and has weight
// prod_j x_j^(L - u_j), so <u> never vanishes for packed u.
MLQ witness_mlq(const Word& u);

// Descending blocks q_i^(j) of sizes m_1, ..., m_i; blocks[i-1][j-1] lists
// q_i^(j) in decreasing order.
struct BlockDecomposition {
    std::vector<std::vector<std::vector<int>>> blocks;
};
BlockDecomposition block_decomposition(const MLQ& q);

bool is_interlacing(const MLQ& q);
bool weakly_decreasing_up_to(const Word& u, int t);

// succeq: equal sizes and componentwise >= after sorting descending (the
// bijection criterion). gg: every element of a exceeds every element of b.
bool dominates(const std::vector<int>& a, const std::vector<int>& b);
bool strictly_above(const std::vector<int>& a, const std::vector<int>& b);

// Canonical labeling f_k on q_k: label of site j is the j-th letter of
// q_k(...q_1(1^n)...). The recursive variant rebuilds it by the bully-path
// procedure; the two must agree on ordinary MLQs.
std::vector<std::map<int, int>> canonical_labeling(const MLQ& q);
std::vector<std::map<int, int>> canonical_labeling_recursive(const MLQ& q);

std::string render_graveyard(const MLQ& q);
std::string render_queue_diagram(const Queue& q, const Word& u);

}  // namespace mlqs
