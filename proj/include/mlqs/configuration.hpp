#pragma once

#include <string>
#include <vector>

#include "mlqs/multiline.hpp"
#include "mlqs/word.hpp"

namespace mlqs {

// A pair of queues acting on words by C(u) = q2(q1(u)).
struct Configuration {
    Queue q1, q2;
    int n = 0;

    Word apply(const Word& u) const { return queue_apply(q2, queue_apply(q1, u)); }
    Polynomial weight() const;
    bool operator==(const Configuration&) const = default;
};

// SP(q1, q2): the cyclic parenthesis sequence contributed by the sites, its
// matching, and the unmatched symbols. A site in q1 only contributes "(",
// in q2 only ")", in both a matched pair "()".
struct ParenthesisRecord {
    struct Symbol {
        int site;
        bool open;
        bool operator==(const Symbol&) const = default;
    };
    std::vector<Symbol> symbols;   // circle order
    std::vector<int> match;        // partner index, -1 when unmatched
    std::vector<int> unmatched;    // symbol indices, circle order

    std::vector<int> unbalanced_sites() const;
    // Sequence with matched pairs carrying matching ids, e.g. "(1 (2 )2 )1 (- ".
    std::string trace() const;
};

// Matching computed through the shifted-periodic Motzkin-path heights: with
// drift d = |q1| - |q2| > 0 an opening symbol is unmatched exactly when the
// path never returns to its starting height within one period. The matched
// pairs are then recovered by a linear scan cut at an unmatched symbol (no
// matched pair wraps across one).
ParenthesisRecord sp_record(const Configuration& c);

// Toggles the unbalanced sites between the two levels; an involution that
// preserves the weight and the action on every word.
Configuration dual_configuration(const Configuration& c);

// Plain tuples of queues: the symmetric-group action does not preserve queue
// sizes levelwise, so it lives on untyped tuples.
using QueueTuple = std::vector<Queue>;

QueueTuple s_action(int i, const QueueTuple& qs, int n);
MLQ s_action(int i, const MLQ& q);
// Apply generators right-to-left: word (i1, ..., im) acts as s_{i1} ... s_{im}.
QueueTuple apply_perm(const std::vector<int>& gen_word, QueueTuple qs, int n);

// Reading the k x n {0,circle} matrix of the tuple column by column, top to
// bottom; 0 stands for the blank letter.
std::vector<int> word_encoding(const QueueTuple& qs, int n);
// The co-plactic operator on reading words: letters i / i+1 are
// parenthesized and matched by a linear stack scan; of the leftover block
// ")...)(...(" the outer min-count pairs close around the wrap, and each
// surviving symbol toggles to the neighboring row slot of its column. With
// equally many i and i+1 the word is unchanged. Serves as the independent
// oracle for s_action; shares no matching code with sp_record.
std::vector<int> sigma_i_word(int i, std::vector<int> w);

// [w]_k: the sites of the k smallest letters; k must be a partial sum of the
// type of w.
Queue lower_set(const Word& w, int k);

// The cyclic shift zeta: words rotate left, queue sites decrement mod n.
Word cyclic_shift(const Word& w);
Queue cyclic_shift_queue(const Queue& q, int n);
QueueTuple cyclic_shift_tuple(const QueueTuple& qs, int n);

}  // namespace mlqs
