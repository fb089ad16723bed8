#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "mlqs/multiline.hpp"

using namespace mlqs;

namespace {
Polynomial x(int n, int i) { return Polynomial::variable(n, i); }

MLQ mlq_of(int n, std::initializer_list<Queue> qs) {
    return MLQ::ordinary(n, std::vector<Queue>(qs));
}
}

TEST_CASE("mlq apply") {
    CHECK(mlq_of(4, {Queue{3}, Queue{1, 3, 4}}).apply(Word::parse("1111")) ==
          Word::parse("2312"));
    CHECK(mlq_of(3, {}).apply(Word::parse("111")) == Word::parse("111"));
    // Appendix thread-decomposition MLQ; image computed by a hand run of the
    // two-phase algorithm.
    Word out = mlq_of(4, {Queue{2}, Queue{1, 2, 3}, Queue{2, 3, 4}}).apply(Word::parse("1111"));
    CHECK(out == Word::parse("4122"));
    CHECK(out.type() == TypeVector({1, 2, 0, 1}));
}

TEST_CASE("mlq weight") {
    const int n = 4;
    CHECK(mlq_of(n, {Queue{3}, Queue{1, 3, 4}}).weight() ==
          x(n, 1) * x(n, 3) * x(n, 3) * x(n, 4));
    CHECK(mlq_of(n, {}).weight() == Polynomial::one(n));
    CHECK(mlq_of(n, {Queue{2}, Queue{1, 3, 4}}).weight() ==
          x(n, 1) * x(n, 2) * x(n, 3) * x(n, 4));
}

TEST_CASE("mlq validation") {
    CHECK_THROWS_AS(MLQ(4, {Queue{1}, Queue{2}}, TypeVector({1, 2, 1})),
                    std::invalid_argument);
    CHECK_THROWS_AS(MLQ(4, {Queue{1, 3, 4}, Queue{2}}, TypeVector({1, 2, 1})),
                    std::invalid_argument);
    // The twisted version accepts swapped sizes.
    MLQ twisted(4, {Queue{1, 3, 4}, Queue{3}}, TypeVector({1, 2, 1}), {2, 1});
    CHECK(twisted.apply(Word::parse("1111")) == Word::parse("2312"));
}

TEST_CASE("enumeration counts") {
    CHECK(count_mlqs(TypeVector({1, 2, 1}), 3, 4) == 16);
    int seen = 0;
    enumerate_mlqs(TypeVector({1, 2, 1}), 3, {}, 4, [&](const MLQ&) { ++seen; });
    CHECK(seen == 16);
    CHECK(count_mlqs(TypeVector({4}), 1, 4) == 1);
    CHECK(count_mlqs(TypeVector({2, 2}), 2, 4) == 6);
}

TEST_CASE("spectral weight of 2312") {
    const int n = 4;
    Polynomial want = x(n, 1) * x(n, 3) * x(n, 3) * x(n, 4) +
                      x(n, 1) * x(n, 2) * x(n, 3) * x(n, 4);
    CHECK(spectral_weight(Word::parse("2312")) == want);
    CHECK(spectral_weight(Word::parse("2312"), {2, 1}) == want);
    CHECK(spectral_weight(Word::parse("11111")) == Polynomial::one(5));
    CHECK_THROWS_AS(spectral_weight(Word::parse("131")), std::invalid_argument);
}

TEST_CASE("spectral weight of 13234") {
    const int n = 5;
    Polynomial head = x(n, 1) * x(n, 2) * x(n, 3) * x(n, 3) * x(n, 4);
    Polynomial tail = x(n, 1) * x(n, 1) + x(n, 1) * x(n, 4) + x(n, 1) * x(n, 5) +
                      x(n, 4) * x(n, 5) + x(n, 5) * x(n, 5);
    CHECK(spectral_weight(Word::parse("13234")) == head * tail);
}

TEST_CASE("spectral weight table buckets the full enumeration") {
    TypeVector m({1, 2, 1});
    auto table = spectral_weight_table(m, 3, {}, 4);
    Polynomial total(4);
    long long count = 0;
    for (auto& [word, p] : table) {
        CHECK(word.type() == m);
        count += p.eval_all_ones();
    }
    CHECK(count == 16);
    CHECK(table.at(Word::parse("2312")) == spectral_weight(Word::parse("2312")));
}

TEST_CASE("bitmask kernel agrees with the object route") {
    // spectral_weight_table runs on the mask kernel; rebuild it through
    // enumerate_mlqs + queue_apply and compare, for every packed type at
    // n <= 4.
    for (int n = 1; n <= 4; ++n) {
        for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
            std::vector<int> parts;
            int run = 1;
            for (int i = 0; i < n - 1; ++i) {
                if ((mask >> i) & 1u) ++run;
                else {
                    parts.push_back(run);
                    run = 1;
                }
            }
            parts.push_back(run);
            TypeVector m(parts);
            auto fast = spectral_weight_table(m, m.num_classes(), {}, n);
            std::map<Word, Polynomial> slow;
            enumerate_mlqs(m, m.num_classes(), {}, n, [&](const MLQ& q) {
                Word u = q.apply(Word::ones(n));
                auto [it, fresh] = slow.try_emplace(u, Polynomial(n));
                it->second += q.weight();
            });
            CHECK(fast == slow);
        }
    }
}

TEST_CASE("declared class count differs by the full-queue factor") {
    // With a vanishing top multiplicity the forced last queue contributes
    // x_1 ... x_n.
    const int n = 3;
    Word u = Word::parse("121");
    Polynomial base = spectral_weight(u);
    Polynomial declared = spectral_weight_declared(u, 3);
    CHECK(declared == base * (x(n, 1) * x(n, 2) * x(n, 3)));
}

TEST_CASE("block decomposition, generic n=15 example") {
    MLQ q = mlq_of(15, {Queue{2, 4, 9, 12}, Queue{1, 5, 6, 8, 12, 15},
                        Queue{1, 2, 4, 5, 8, 9, 13, 14}});
    CHECK(q.type() == TypeVector({4, 2, 2, 7}));
    BlockDecomposition d = block_decomposition(q);
    CHECK(d.blocks[2][0] == std::vector<int>{14, 13, 9, 8});
    CHECK(d.blocks[2][1] == std::vector<int>{5, 4});
    CHECK(d.blocks[2][2] == std::vector<int>{2, 1});
    CHECK(d.blocks[1][0] == std::vector<int>{15, 12, 8, 6});
    CHECK(d.blocks[1][1] == std::vector<int>{5, 1});
    CHECK_FALSE(is_interlacing(q));
}

TEST_CASE("block decomposition, interlacing n=15 example") {
    MLQ q = mlq_of(15, {Queue{9, 12, 13}, Queue{7, 8, 11, 12, 14},
                        Queue{1, 3, 5, 6, 8, 10, 11, 14, 15}});
    CHECK(q.type() == TypeVector({3, 2, 4, 6}));
    BlockDecomposition d = block_decomposition(q);
    CHECK(d.blocks[2][2] == std::vector<int>{6, 5, 3, 1});
    CHECK(d.blocks[2][1] == std::vector<int>{10, 8});
    CHECK(d.blocks[2][0] == std::vector<int>{15, 14, 11});
    CHECK(is_interlacing(q));
    // Single queue: vacuously interlacing, one block.
    MLQ single = mlq_of(5, {Queue{2, 4}});
    CHECK(is_interlacing(single));
    CHECK(block_decomposition(single).blocks[0][0] == std::vector<int>{4, 2});
}

TEST_CASE("interlacing MLQs carry block labels in the graveyard") {
    MLQ q = mlq_of(15, {Queue{9, 12, 13}, Queue{7, 8, 11, 12, 14},
                        Queue{1, 3, 5, 6, 8, 10, 11, 14, 15}});
    auto labels = canonical_labeling(q);
    BlockDecomposition d = block_decomposition(q);
    for (int i = 1; i <= q.num_queues(); ++i)
        for (int j = 1; j <= i; ++j)
            for (int site : d.blocks[i - 1][j - 1]) CHECK(labels[i - 1].at(site) == j);
}

TEST_CASE("weakly decreasing up to a level") {
    CHECK(weakly_decreasing_up_to(Word::parse("5455433225215"), 4));
    CHECK_FALSE(weakly_decreasing_up_to(Word::parse("5455433225215"), 5));
    CHECK(weakly_decreasing_up_to(Word::parse("12"), 0));
    CHECK_FALSE(weakly_decreasing_up_to(Word::parse("12"), 2));
}

TEST_CASE("canonical labeling") {
    MLQ q = mlq_of(4, {Queue{2}, Queue{1, 2, 3}, Queue{2, 3, 4}});
    auto f = canonical_labeling(q);
    CHECK(f == canonical_labeling_recursive(q));
    CHECK(f[0].at(2) == 1);
    // Single queue: all labels 1.
    MLQ single = mlq_of(6, {Queue{2, 5}});
    auto g = canonical_labeling(single);
    for (auto& [site, label] : g[0]) CHECK(label == 1);
}

TEST_CASE("graveyard rendering") {
    MLQ q = mlq_of(4, {Queue{3}, Queue{1, 3, 4}});
    CHECK(render_graveyard(q) == "[ ] [ ] (1) [ ]\n(2) [ ] (1) (2)");
    CHECK(render_graveyard(mlq_of(5, {})) == "");
}

TEST_CASE("queue diagram rendering") {
    std::string s = render_queue_diagram(Queue{1, 4, 8, 9}, Word::parse("346613321"));
    CHECK(s ==
          " 3   4   6   6   1   3   3   2   1 \n"
          "(2) [ ] [ ] (3) [ ] [ ] [ ] (1) (1)");
}

TEST_CASE("mlq json round trip") {
    MLQ q(4, {Queue{1, 3, 4}, Queue{2}}, TypeVector({1, 2, 1}), {2, 1});
    CHECK(MLQ::from_json(q.to_json()) == q);
    MLQ plain = mlq_of(4, {Queue{3}, Queue{1, 3, 4}});
    CHECK(MLQ::from_json(plain.to_json()) == plain);
}

TEST_CASE("witness mlq") {
    Word u = Word::parse("2312");
    MLQ w = witness_mlq(u);
    CHECK(w.apply(Word::parse("1111")) == u);
    const int n = 4;
    CHECK(w.weight() == x(n, 1) * x(n, 3) * x(n, 3) * x(n, 4));
}
