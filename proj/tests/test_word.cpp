#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "mlqs/word.hpp"

using namespace mlqs;

TEST_CASE("word type") {
    CHECK(Word::parse("346613321").type() == TypeVector({2, 1, 3, 1, 0, 2}));
    CHECK(Word::parse("11111").type() == TypeVector({5}));
    CHECK(Word::parse("2312").type() == TypeVector({1, 2, 1}));
    CHECK(TypeVector({2, 1, 3, 1, 0, 2}).packed() == false);
    CHECK(TypeVector({1, 2, 1}).packed());
}

TEST_CASE("partial sums") {
    TypeVector m({2, 1, 3, 1, 0, 2});
    CHECK(m.partial_sum(2) == 3);
    CHECK(m.partial_sum(3) == 6);
    CHECK(m.partial_sum(0) == 0);
    CHECK(m.partial_sum(6) == 9);
    CHECK(m.partial_sum(12) == 9);
    CHECK(m.is_partial_sum(3));
    CHECK(!m.is_partial_sum(5));
}

TEST_CASE("queue action, first-queue example") {
    CHECK(queue_apply(Queue{1, 4, 8, 9}, Word::parse("346613321")) ==
          Word::parse("277344511"));
    CHECK(queue_apply(Queue{1, 4, 5, 9, 10}, Word::parse("3455313321")) ==
          Word::parse("2663344511"));
}

TEST_CASE("queue action, degenerate queues") {
    Word u = Word::parse("2312");
    CHECK(queue_apply(Queue::full(4), u) == u);
    CHECK(queue_apply(Queue{}, Word::parse("1111")) == Word::parse("2222"));
}

TEST_CASE("type after a queue splits one class") {
    Word u = Word::parse("346613321");
    Word v = queue_apply(Queue{1, 4, 8, 9}, u);
    CHECK(v.type() == TypeVector({2, 1, 1, 2, 1, 0, 2}));
}

TEST_CASE("merges") {
    CHECK(merge_classes(Word::parse("3566413321"), 3) == Word::parse("3455313321"));
    CHECK(merge_classes(Word::parse("2773345611"), 4) == Word::parse("2663344511"));
    CHECK(merge_classes(Word::parse("121"), 2) == Word::parse("121"));
    CHECK_THROWS_AS(merge_classes(Word::parse("121"), 0), std::invalid_argument);

    CHECK(merge_at(Word::parse("2773345611"), 6) == Word::parse("2663344511"));
    Word u = Word::parse("2312");
    CHECK(merge_at(u, 4) == u);
    CHECK_THROWS_AS(merge_at(u, 2), std::invalid_argument);

    CHECK(merge_set(Word::parse("54663261"), {1, 4}) == Word::parse("33442141"));
}

TEST_CASE("contragredient duals") {
    CHECK(contragredient_word(Word::parse("2312"), 3) == Word::parse("2312"));
    CHECK_THROWS_AS(contragredient_word(Word::parse("2312"), 2), std::invalid_argument);
    CHECK(contragredient_queue(Queue{1, 4, 8, 9}, 9) == Queue{3, 4, 5, 7, 8});
    CHECK(contragredient_queue(Queue{}, 6) == Queue::full(6));
    // Involution.
    Queue q{2, 5};
    CHECK(contragredient_queue(contragredient_queue(q, 6), 6) == q);
    Word w = Word::parse("13223");
    CHECK(contragredient_word(contragredient_word(w, 3), 3) == w);
}

TEST_CASE("type merge and split") {
    TypeVector m({1, 2, 1});
    CHECK(m.merged(1) == TypeVector({3, 1}));
    CHECK(m.merged_at(3) == TypeVector({1, 3}));
    CHECK(m.split_at(2) == TypeVector({1, 1, 1, 1}));
    CHECK_THROWS_AS(m.split_at(3), std::invalid_argument);
}

TEST_CASE("parsing and printing") {
    CHECK(Word::parse("346613321").str() == "346613321");
    CHECK(Word(std::vector<int>{1, 12, 3}).str() == "1,12,3");
    CHECK(Word::parse("1,12,3") == Word(std::vector<int>{1, 12, 3}));
    CHECK(Queue::parse("1,4,8,9") == Queue{1, 4, 8, 9});
    CHECK(Queue::parse("").empty());
    CHECK(Queue{1, 4, 8, 9}.str() == "1,4,8,9");
    CHECK_THROWS_AS(Word::parse("10"), std::invalid_argument);
    CHECK_THROWS_AS(Queue({2, 2}), std::invalid_argument);
}

TEST_CASE("plain application has no length limit") {
    // 70 sites: beyond the bitmask kernels, fine for direct application.
    std::vector<int> letters(70, 1);
    Word u(letters);
    Word v = queue_apply(Queue{1, 35}, u);
    int ones = 0;
    for (int i = 1; i <= 70; ++i) ones += v.letter(i) == 1;
    CHECK(ones == 2);
    CHECK(v.letter(1) == 1);
    CHECK(v.letter(35) == 1);
}

TEST_CASE("cyclic letter access") {
    Word u = Word::parse("2312");
    CHECK(u.letter(5) == u.letter(1));
    CHECK(u.letter(0) == u.letter(4));
}
