#include "mlqs/tasep.hpp"

#include <algorithm>
#include <stdexcept>

namespace mlqs {

StateSpace::StateSpace(TypeVector m, int n) : m_(std::move(m)), n_(n) {
    if (m_.total() != n_) throw std::invalid_argument("StateSpace: type does not sum to n");
    std::vector<int> letters;
    for (int c = 1; c <= m_.num_classes(); ++c)
        for (int k = 0; k < m_.multiplicity(c); ++k) letters.push_back(c);
    do {
        words_.push_back(Word(letters));
    } while (std::next_permutation(letters.begin(), letters.end()));
    for (int i = 0; i < size(); ++i) index_[words_[i]] = i;
}

int StateSpace::index_of(const Word& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) throw std::invalid_argument("StateSpace: word not in the space");
    return it->second;
}

RationalMatrix transition_matrix(const StateSpace& space) {
    const int N = space.size();
    const int n = space.n();
    RationalMatrix M(N, std::vector<Rational>(N, 0));
    const Rational step(1, n);
    for (int ui = 0; ui < N; ++ui) {
        const Word& u = space.word(ui);
        for (int i = 1; i <= n; ++i) {
            if (u.letter(i) > u.letter(i + 1)) {
                std::vector<int> v = u.letters();
                std::swap(v[i - 1], v[i % n]);
                M[ui][space.index_of(Word(v))] += step;
            } else {
                M[ui][ui] += step;
            }
        }
    }
    return M;
}

RationalMatrix phi_operator(const StateSpace& from, const StateSpace& to, int i) {
    if (!from.type().is_partial_sum(i) || i <= 0 || i >= from.n())
        throw std::invalid_argument("phi_operator: i is not an inner partial sum of the type");
    if (to.type() != from.type().merged_at(i))
        throw std::invalid_argument("phi_operator: target space has the wrong type");
    RationalMatrix M(to.size(), std::vector<Rational>(from.size(), 0));
    for (int ui = 0; ui < from.size(); ++ui)
        M[to.index_of(merge_at(from.word(ui), i))][ui] = 1;
    return M;
}

static void check_queue_size(const StateSpace& from, const StateSpace& to, int i) {
    if (i <= 0 || i >= from.n() || from.type().is_partial_sum(i))
        throw std::invalid_argument("psi_operator: i must split a class of the type");
    if (to.type() != from.type().split_at(i))
        throw std::invalid_argument("psi_operator: target space has the wrong type");
}

RationalMatrix psi_operator(const StateSpace& from, const StateSpace& to, int i) {
    check_queue_size(from, to, i);
    RationalMatrix M(to.size(), std::vector<Rational>(from.size(), 0));
    std::vector<int> comb(i);
    for (int ui = 0; ui < from.size(); ++ui) {
        const Word& u = from.word(ui);
        // All i-subsets of [n].
        for (int t = 0; t < i; ++t) comb[t] = t + 1;
        while (true) {
            M[to.index_of(queue_apply(Queue(comb), u))][ui] += 1;
            int t = i - 1;
            while (t >= 0 && comb[t] == from.n() - i + t + 1) --t;
            if (t < 0) break;
            ++comb[t];
            for (int s = t + 1; s < i; ++s) comb[s] = comb[s - 1] + 1;
        }
    }
    return M;
}

PolyMatrix psi_tilde_operator(const StateSpace& from, const StateSpace& to, int i) {
    check_queue_size(from, to, i);
    const int n = from.n();
    PolyMatrix M(to.size(), std::vector<Polynomial>(from.size(), Polynomial(n)));
    std::vector<int> comb(i);
    for (int ui = 0; ui < from.size(); ++ui) {
        const Word& u = from.word(ui);
        for (int t = 0; t < i; ++t) comb[t] = t + 1;
        while (true) {
            Queue q(comb);
            Monomial w(n);
            for (int s : q.sites()) w.multiply_by_variable(s);
            M[to.index_of(queue_apply(q, u))][ui] += Polynomial::monomial(w);
            int t = i - 1;
            while (t >= 0 && comb[t] == n - i + t + 1) --t;
            if (t < 0) break;
            ++comb[t];
            for (int s = t + 1; s < i; ++s) comb[s] = comb[s - 1] + 1;
        }
    }
    return M;
}

RationalMatrix operator_of_transition(const RationalMatrix& row_stochastic) {
    const int N = static_cast<int>(row_stochastic.size());
    RationalMatrix M(N, std::vector<Rational>(N, 0));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) M[j][i] = row_stochastic[i][j];
    return M;
}

RationalMatrix rat_mul(const RationalMatrix& a, const RationalMatrix& b) {
    const int R = static_cast<int>(a.size());
    const int K = static_cast<int>(b.size());
    const int C = static_cast<int>(b[0].size());
    RationalMatrix out(R, std::vector<Rational>(C, 0));
    for (int i = 0; i < R; ++i)
        for (int k = 0; k < K; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < C; ++j)
                if (b[k][j] != 0) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

PolyMatrix poly_mul(const PolyMatrix& a, const PolyMatrix& b) {
    const int R = static_cast<int>(a.size());
    const int K = static_cast<int>(b.size());
    const int C = static_cast<int>(b[0].size());
    int ambient = 0;
    for (const auto& row : a)
        for (const auto& p : row) ambient = std::max(ambient, p.ambient());
    PolyMatrix out(R, std::vector<Polynomial>(C, Polynomial(ambient)));
    for (int i = 0; i < R; ++i)
        for (int k = 0; k < K; ++k) {
            if (a[i][k].is_zero()) continue;
            for (int j = 0; j < C; ++j)
                if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

std::vector<Rational> stationary_distribution(const StateSpace& space) {
    const int N = space.size();
    const int n = space.n();
    RationalMatrix M = transition_matrix(space);
    // B = n (M^T - I), integer entries; solve B x = 0.
    std::vector<std::vector<mpz_class>> B(N, std::vector<mpz_class>(N, 0));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            Rational e = M[j][i] * n - (i == j ? n : 0);
            if (e.get_den() != 1) throw std::logic_error("stationary: non-integer scaled entry");
            B[i][j] = e.get_num();
        }
    const std::vector<std::vector<mpz_class>> B0 = B;
    // Fraction-free (Bareiss) elimination; every division is exact and
    // checked.
    std::vector<int> pivot_col(N, -1);
    mpz_class prev = 1, quo, rem;
    int row = 0;
    for (int col = 0; col < N && row < N; ++col) {
        int pr = -1;
        for (int r = row; r < N; ++r)
            if (B[r][col] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(B[row], B[pr]);
        for (int r = row + 1; r < N; ++r) {
            for (int c = col + 1; c < N; ++c) {
                mpz_class v = B[row][col] * B[r][c] - B[r][col] * B[row][c];
                mpz_tdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                if (rem != 0) throw std::logic_error("stationary: inexact Bareiss division");
                B[r][c] = quo;
            }
            B[r][col] = 0;
        }
        prev = B[row][col];
        pivot_col[row] = col;
        ++row;
    }
    const int rank = row;
    if (rank != N - 1) throw std::logic_error("stationary: kernel is not one-dimensional");
    // The single free column is the one never used as a pivot.
    std::vector<char> is_pivot(N, 0);
    for (int r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = 1;
    int free_col = 0;
    while (is_pivot[free_col]) ++free_col;
    std::vector<Rational> x(N, 0);
    x[free_col] = 1;
    for (int r = rank - 1; r >= 0; --r) {
        int pc = pivot_col[r];
        Rational s = 0;
        for (int c = pc + 1; c < N; ++c)
            if (x[c] != 0) s += Rational(B[r][c]) * x[c];
        x[pc] = -s / Rational(B[r][pc]);
    }
    // The kernel vector must annihilate the original matrix.
    for (int r = 0; r < N; ++r) {
        Rational s = 0;
        for (int c = 0; c < N; ++c)
            if (x[c] != 0) s += Rational(B0[r][c]) * x[c];
        if (s != 0) throw std::logic_error("stationary: solve verification failed");
    }
    Rational total = 0;
    for (const Rational& v : x) total += v;
    if (total == 0) throw std::logic_error("stationary: degenerate kernel vector");
    for (Rational& v : x) {
        v /= total;
        v.canonicalize();
        if (v < 0) throw std::logic_error("stationary: negative entry");
    }
    return x;
}

Word queue_chain_step(const Word& u, int i, std::mt19937_64& rng) {
    const int n = u.size();
    TypeVector m = u.type();
    int t = m.class_of_partial_sum(i);
    if (t < 1) throw std::invalid_argument("queue_chain_step: i is not a partial sum");
    // Uniform i-subset of [n] by sequential inclusion.
    std::vector<int> sites;
    int need = i;
    for (int s = 1; s <= n && need > 0; ++s) {
        std::uniform_int_distribution<int> dist(0, n - s);
        if (dist(rng) < need) {
            sites.push_back(s);
            --need;
        }
    }
    return merge_classes(queue_apply(Queue(sites), u), t);
}

std::string rational_str(const Rational& r) {
    return r.get_str();
}

Rational make_rational(long long num, long long den) {
    Rational r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

}  // namespace mlqs
