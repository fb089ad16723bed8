#pragma once

#include <string>
#include <vector>

namespace mlqs {

// Multiplicity vector m = (m_1, m_2, ...) of a word, trailing zeros trimmed.
// p_i denotes the partial sum m_1 + ... + m_i.
class TypeVector {
public:
    TypeVector() = default;
    explicit TypeVector(std::vector<int> multiplicities);

    int num_classes() const { return static_cast<int>(mult_.size()); }
    int multiplicity(int cls) const;
    int partial_sum(int i) const;
    int total() const { return total_; }
    bool packed() const;
    // m_i > 0 for all i < num_classes(); the top multiplicity may vanish only
    // after trimming, so this is what "packed below the top class" means for a
    // declared class count one above num_classes().
    bool packed_below(int ell) const;
    bool is_partial_sum(int k) const;
    // Smallest j >= 0 with p_j = k, or -1 if k is not a partial sum.
    int class_of_partial_sum(int k) const;
    // Smallest j >= 1 with p_j = k (k = 0 qualifies when m_1 = 0).
    int merge_class_of(int k) const;
    std::vector<int> partial_sums() const;
    const std::vector<int>& multiplicities() const { return mult_; }

    TypeVector merged(int i) const;          // classes i and i+1 collapse
    TypeVector merged_at(int k) const;       // merge at partial sum k
    TypeVector split_at(int k) const;        // insert k as a new partial sum

    bool operator==(const TypeVector&) const = default;
    std::string str() const;

private:
    std::vector<int> mult_;
    int total_ = 0;
};

// Word u = u_1 ... u_n on the cyclic lattice Z/nZ. Letters are >= 1 and
// sites are 1-based; indices wrap, so letter(n + k) == letter(k).
class Word {
public:
    Word() = default;
    explicit Word(std::vector<int> letters);

    // Contiguous digit string when all letters are <= 9, otherwise
    // comma-separated integers.
    static Word parse(const std::string& text);
    static Word ones(int n) { return Word(std::vector<int>(n, 1)); }

    int size() const { return static_cast<int>(letters_.size()); }
    int letter(int site) const;             // cyclic, 1-based
    const std::vector<int>& letters() const { return letters_; }
    int max_letter() const;
    TypeVector type() const;
    bool packed() const;
    std::string str() const;

    bool operator==(const Word&) const = default;
    bool operator<(const Word& other) const { return letters_ < other.letters_; }

private:
    std::vector<int> letters_;
};

// A queue is a subset of the sites [n], stored as a sorted list.
class Queue {
public:
    Queue() = default;
    explicit Queue(std::vector<int> sites);
    Queue(std::initializer_list<int> sites);

    static Queue parse(const std::string& text);    // "1,4,8,9"; "" is empty
    static Queue full(int n);
    static Queue from_mask(unsigned long long mask);  // bit i <-> site i+1

    int size() const { return static_cast<int>(sites_.size()); }
    bool empty() const { return sites_.empty(); }
    bool contains(int site) const;
    const std::vector<int>& sites() const { return sites_; }
    int max_site() const { return sites_.empty() ? 0 : sites_.back(); }
    unsigned long long mask() const;
    std::string str() const;

    bool operator==(const Queue&) const = default;
    bool operator<(const Queue& other) const { return sites_ < other.sites_; }

private:
    std::vector<int> sites_;
};

// The two-phase queue action v = q(u), evaluated with the canonical ordering
// permutation (letters ascending, ties by ascending site). The result does
// not depend on the tie-breaking; queue_apply_with_order exists so tests can
// sweep every admissible permutation.
Word queue_apply(const Queue& q, const Word& u);
Word queue_apply_with_order(const Queue& q, const Word& u,
                            const std::vector<int>& order);

Word merge_classes(const Word& u, int i);                   // all letters > i drop by 1
Word merge_at(const Word& u, int k);                        // decrement all but the k smallest
Word merge_set(const Word& u, const std::vector<int>& T);   // largest class first

// Contragredient duals: u*_i = ell + 1 - u_{n+1-i} and i in q* iff n+1-i not in q.
Word contragredient_word(const Word& u, int num_classes);
Queue contragredient_queue(const Queue& q, int n);

}  // namespace mlqs
