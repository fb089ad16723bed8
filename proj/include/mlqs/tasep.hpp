#pragma once

#include <gmpxx.h>

#include <map>
#include <random>
#include <vector>

#include "mlqs/polynomial.hpp"
#include "mlqs/word.hpp"

namespace mlqs {

using Rational = mpq_class;
using RationalMatrix = std::vector<std::vector<Rational>>;
using PolyMatrix = std::vector<std::vector<Polynomial>>;

// All words of a fixed type on the ring, in lexicographic order.
class StateSpace {
public:
    StateSpace(TypeVector m, int n);

    int n() const { return n_; }
    const TypeVector& type() const { return m_; }
    int size() const { return static_cast<int>(words_.size()); }
    const std::vector<Word>& words() const { return words_; }
    const Word& word(int idx) const { return words_[idx]; }
    int index_of(const Word& w) const;

private:
    TypeVector m_;
    int n_ = 0;
    std::vector<Word> words_;
    std::map<Word, int> index_;
};

// Row-stochastic transition matrix of the multispecies TASEP: a uniform site
// i swaps u_i u_{i+1} when u_i > u_{i+1}, else the chain holds.
RationalMatrix transition_matrix(const StateSpace& space);

// Intertwining operators, stored as [target][source] so that composition is
// matrix multiplication. For the identities the transition matrix enters as
// its transpose (the operator u |-> sum_v P(u->v) v).
// Phi_i merges at partial sum i (valid when i is a partial sum of the type);
// Psi_i / PsiTilde_i sum over all i-queues (valid when i is not).
RationalMatrix phi_operator(const StateSpace& from, const StateSpace& to, int i);
RationalMatrix psi_operator(const StateSpace& from, const StateSpace& to, int i);
PolyMatrix psi_tilde_operator(const StateSpace& from, const StateSpace& to, int i);

RationalMatrix operator_of_transition(const RationalMatrix& row_stochastic);
RationalMatrix rat_mul(const RationalMatrix& a, const RationalMatrix& b);
PolyMatrix poly_mul(const PolyMatrix& a, const PolyMatrix& b);

// Unique stationary row vector, exact, normalized to sum 1. Solved by
// fraction-free (Bareiss) elimination on the integer matrix n(M^T - I).
std::vector<Rational> stationary_distribution(const StateSpace& space);

// One move of the queue-driven chain: a uniformly random i-queue q, then
// merge class t = min{k : p_k >= i} of q(u). i must be a partial sum of the
// type of u. Deterministic for a fixed generator state.
Word queue_chain_step(const Word& u, int i, std::mt19937_64& rng);

std::string rational_str(const Rational& r);
// mpq_class has no long long constructor; desk-scale counts fit in long.
Rational make_rational(long long num, long long den = 1);

}  // namespace mlqs
