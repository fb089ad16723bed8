#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>

#include "mlqs/multiline.hpp"
#include "mlqs/tasep.hpp"

using namespace mlqs;

TEST_CASE("state spaces") {
    StateSpace s(TypeVector({1, 2, 1}), 4);
    CHECK(s.size() == 12);
    CHECK(s.word(0) == Word::parse("1223"));
    CHECK(s.index_of(Word::parse("3221")) == 11);
    CHECK_THROWS_AS(s.index_of(Word::parse("1111")), std::invalid_argument);
    StateSpace trivial(TypeVector({4}), 4);
    CHECK(trivial.size() == 1);
}

TEST_CASE("transition matrix rows") {
    StateSpace s(TypeVector({1, 1, 1}), 3);
    RationalMatrix M = transition_matrix(s);
    for (int i = 0; i < s.size(); ++i) {
        Rational total = 0;
        for (int j = 0; j < s.size(); ++j) total += M[i][j];
        CHECK(total == 1);
    }
    // 321 moves to 231 and 312 with probability 1/3 each, stays with 1/3.
    int u = s.index_of(Word::parse("321"));
    CHECK(M[u][s.index_of(Word::parse("231"))] == Rational(1, 3));
    CHECK(M[u][s.index_of(Word::parse("312"))] == Rational(1, 3));
    CHECK(M[u][u] == Rational(1, 3));
}

TEST_CASE("transition matrix for (1,2,1): 1223 holds w.p. 3/4 and hops to 3221") {
    StateSpace s(TypeVector({1, 2, 1}), 4);
    RationalMatrix M = transition_matrix(s);
    int u = s.index_of(Word::parse("1223"));
    CHECK(M[u][u] == Rational(3, 4));
    CHECK(M[u][s.index_of(Word::parse("3221"))] == Rational(1, 4));
    // Single-class space: absorbing.
    StateSpace t(TypeVector({4}), 4);
    CHECK(transition_matrix(t) == RationalMatrix{{1}});
}

TEST_CASE("phi operator merges") {
    StateSpace from(TypeVector({1, 1}), 2);
    StateSpace to(TypeVector({2}), 2);
    RationalMatrix phi = phi_operator(from, to, 1);
    CHECK(phi == RationalMatrix{{1, 1}});
    CHECK_THROWS_AS(phi_operator(from, to, 2), std::invalid_argument);
}

TEST_CASE("psi operator column sums count the queues") {
    const int n = 4;
    StateSpace from(TypeVector({2, 2}), n);
    StateSpace to(TypeVector({1, 1, 2}), n);
    RationalMatrix psi = psi_operator(from, to, 1);
    for (int u = 0; u < from.size(); ++u) {
        Rational total = 0;
        for (int v = 0; v < to.size(); ++v) total += psi[v][u];
        CHECK(total == n);   // C(4,1) queues
    }
}

TEST_CASE("psi tilde expands single queues and composes to spectral weights") {
    const int n = 4;
    StateSpace s0(TypeVector({4}), n);
    StateSpace s1(TypeVector({1, 3}), n);
    StateSpace s2(TypeVector({1, 2, 1}), n);
    PolyMatrix t1 = psi_tilde_operator(s0, s1, 1);
    PolyMatrix t3 = psi_tilde_operator(s1, s2, 3);
    // PsiTilde_1 on 1111: four single-site queues.
    Polynomial total(n);
    for (int v = 0; v < s1.size(); ++v) total += t1[v][0];
    Polynomial evars(n);
    for (int i = 1; i <= n; ++i) evars += Polynomial::variable(n, i);
    CHECK(total == evars);
    // Coefficient of eps_2312 in PsiTilde_3 PsiTilde_1 eps_1111 is <2312>.
    PolyMatrix prod = poly_mul(t3, t1);
    CHECK(prod[s2.index_of(Word::parse("2312"))][0] == spectral_weight(Word::parse("2312")));
}

TEST_CASE("stationary distribution, three species on three sites") {
    StateSpace s(TypeVector({1, 1, 1}), 3);
    std::vector<Rational> pi = stationary_distribution(s);
    Rational total = 0;
    for (const Rational& p : pi) total += p;
    CHECK(total == 1);
    // Proportional to MLQ counts at x = 1 (9 MLQs in total).
    auto table = spectral_weight_table(TypeVector({1, 1, 1}), 3, {}, 3);
    for (int i = 0; i < s.size(); ++i)
        CHECK(pi[i] == make_rational(table.at(s.word(i)).eval_all_ones(), 9));
}

TEST_CASE("stationary distribution, type (1,2,1)") {
    StateSpace s(TypeVector({1, 2, 1}), 4);
    std::vector<Rational> pi = stationary_distribution(s);
    CHECK(pi[s.index_of(Word::parse("2312"))] == Rational(1, 8));
    StateSpace point(TypeVector({3}), 3);
    CHECK(stationary_distribution(point) == std::vector<Rational>{1});
}

TEST_CASE("queue chain step") {
    Word u = Word::parse("2312");
    std::mt19937_64 rng(7);
    CHECK_THROWS_AS(queue_chain_step(u, 2, rng), std::invalid_argument);
    // i = n: the full queue is forced and the step is lazy.
    for (int t = 0; t < 5; ++t) CHECK(queue_chain_step(u, 4, rng) == u);
    // i = 1: lands among the four single-queue images, reproducibly.
    std::mt19937_64 a(123), b(123);
    for (int t = 0; t < 20; ++t) {
        Word x = queue_chain_step(u, 1, a);
        CHECK(x == queue_chain_step(u, 1, b));
        CHECK(x.type() == u.type());
    }
}

TEST_CASE("queue chain preserves the stationary law exactly") {
    // One-step kernel of the queue-driven chain for i=1, m=(1,2,1):
    // Q(u, v) = #{1-queues q : merge(q(u)) = v} / 4; check pi Q = pi.
    const int n = 4;
    StateSpace s(TypeVector({1, 2, 1}), n);
    std::vector<Rational> pi = stationary_distribution(s);
    for (int i : {1, 3}) {
        int t = s.type().class_of_partial_sum(i);
        RationalMatrix Q(s.size(), std::vector<Rational>(s.size(), 0));
        long long total = 0;
        std::vector<int> comb;
        auto all_queues = [&](auto&& self, int from, int left) -> void {
            if (left == 0) {
                ++total;
                return;
            }
            for (int v = from; v <= n - left + 1; ++v) {
                comb.push_back(v);
                self(self, v + 1, left - 1);
                comb.pop_back();
            }
        };
        all_queues(all_queues, 1, i);
        const long queue_count = static_cast<long>(total);
        for (int ui = 0; ui < s.size(); ++ui) {
            std::vector<int> sel;
            auto rec = [&](auto&& self, int from, int left) -> void {
                if (left == 0) {
                    Word v = merge_classes(queue_apply(Queue(sel), s.word(ui)), t);
                    Q[ui][s.index_of(v)] += Rational(1, queue_count);
                    return;
                }
                for (int val = from; val <= n - left + 1; ++val) {
                    sel.push_back(val);
                    self(self, val + 1, left - 1);
                    sel.pop_back();
                }
            };
            rec(rec, 1, i);
        }
        for (int j = 0; j < s.size(); ++j) {
            Rational acc = 0;
            for (int k = 0; k < s.size(); ++k) acc += pi[k] * Q[k][j];
            CHECK(acc == pi[j]);
        }
    }
}

TEST_CASE("rational strings") {
    CHECK(rational_str(Rational(3, 4)) == "3/4");
    CHECK(rational_str(Rational(2)) == "2");
}
