#include "mlqs/word.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mlqs {

TypeVector::TypeVector(std::vector<int> multiplicities) : mult_(std::move(multiplicities)) {
    for (int m : mult_)
        if (m < 0) throw std::invalid_argument("TypeVector: negative multiplicity");
    while (!mult_.empty() && mult_.back() == 0) mult_.pop_back();
    total_ = std::accumulate(mult_.begin(), mult_.end(), 0);
}

int TypeVector::multiplicity(int cls) const {
    if (cls < 1 || cls > num_classes()) return 0;
    return mult_[cls - 1];
}

int TypeVector::partial_sum(int i) const {
    if (i < 0) throw std::invalid_argument("partial_sum: negative index");
    if (i >= num_classes()) return total_;
    int s = 0;
    for (int j = 0; j < i; ++j) s += mult_[j];
    return s;
}

bool TypeVector::packed() const {
    return std::all_of(mult_.begin(), mult_.end(), [](int m) { return m > 0; });
}

bool TypeVector::packed_below(int ell) const {
    if (ell < num_classes() || ell > num_classes() + 1) return false;
    for (int i = 0; i + 1 < ell; ++i)
        if (multiplicity(i + 1) == 0) return false;
    return true;
}

bool TypeVector::is_partial_sum(int k) const { return class_of_partial_sum(k) >= 0; }

int TypeVector::class_of_partial_sum(int k) const {
    if (k == 0) return 0;
    return merge_class_of(k);
}

int TypeVector::merge_class_of(int k) const {
    int s = 0;
    for (int j = 1; j <= num_classes(); ++j) {
        s += mult_[j - 1];
        if (s == k) return j;
        if (s > k) return -1;
    }
    return -1;
}

std::vector<int> TypeVector::partial_sums() const {
    std::vector<int> p(num_classes());
    int s = 0;
    for (int j = 0; j < num_classes(); ++j) {
        s += mult_[j];
        p[j] = s;
    }
    return p;
}

TypeVector TypeVector::merged(int i) const {
    if (i < 1) throw std::invalid_argument("TypeVector::merged: class index must be >= 1");
    std::vector<int> m = mult_;
    if (i < num_classes()) {
        m[i - 1] += m[i];
        m.erase(m.begin() + i);
    }
    return TypeVector(m);
}

TypeVector TypeVector::merged_at(int k) const {
    int j = class_of_partial_sum(k);
    if (j < 1) throw std::invalid_argument("TypeVector::merged_at: not a partial sum");
    return merged(j);
}

TypeVector TypeVector::split_at(int k) const {
    if (k <= 0 || k >= total_ || is_partial_sum(k))
        throw std::invalid_argument("TypeVector::split_at: k must lie strictly inside a class");
    std::vector<int> m;
    int s = 0;
    for (int j = 0; j < num_classes(); ++j) {
        if (s < k && k < s + mult_[j]) {
            m.push_back(k - s);
            m.push_back(s + mult_[j] - k);
        } else {
            m.push_back(mult_[j]);
        }
        s += mult_[j];
    }
    return TypeVector(m);
}

std::string TypeVector::str() const {
    std::ostringstream os;
    os << '(';
    for (int j = 0; j < num_classes(); ++j) {
        if (j) os << ',';
        os << mult_[j];
    }
    os << ')';
    return os.str();
}

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw std::invalid_argument("Word: empty");
    for (int a : letters_)
        if (a < 1) throw std::invalid_argument("Word: letters must be >= 1");
}

Word Word::parse(const std::string& text) {
    std::vector<int> letters;
    if (text.find(',') != std::string::npos) {
        std::istringstream is(text);
        std::string tok;
        while (std::getline(is, tok, ',')) letters.push_back(std::stoi(tok));
    } else {
        for (char c : text) {
            if (c < '1' || c > '9') throw std::invalid_argument("Word::parse: bad digit");
            letters.push_back(c - '0');
        }
    }
    return Word(letters);
}

int Word::letter(int site) const {
    int n = size();
    int i = ((site - 1) % n + n) % n;
    return letters_[i];
}

int Word::max_letter() const { return *std::max_element(letters_.begin(), letters_.end()); }

TypeVector Word::type() const {
    std::vector<int> m(max_letter(), 0);
    for (int a : letters_) ++m[a - 1];
    return TypeVector(m);
}

bool Word::packed() const { return type().packed(); }

std::string Word::str() const {
    std::ostringstream os;
    if (max_letter() <= 9) {
        for (int a : letters_) os << a;
    } else {
        for (int i = 0; i < size(); ++i) {
            if (i) os << ',';
            os << letters_[i];
        }
    }
    return os.str();
}

Queue::Queue(std::vector<int> sites) : sites_(std::move(sites)) {
    std::sort(sites_.begin(), sites_.end());
    for (std::size_t i = 0; i < sites_.size(); ++i) {
        if (sites_[i] < 1) throw std::invalid_argument("Queue: sites must be >= 1");
        if (i > 0 && sites_[i] == sites_[i - 1])
            throw std::invalid_argument("Queue: duplicate site");
    }
}

Queue::Queue(std::initializer_list<int> sites) : Queue(std::vector<int>(sites)) {}

Queue Queue::parse(const std::string& text) {
    std::vector<int> sites;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (!tok.empty()) sites.push_back(std::stoi(tok));
    }
    return Queue(sites);
}

Queue Queue::full(int n) {
    std::vector<int> sites(n);
    std::iota(sites.begin(), sites.end(), 1);
    return Queue(sites);
}

Queue Queue::from_mask(unsigned long long mask) {
    std::vector<int> sites;
    for (int i = 0; mask >> i; ++i)
        if ((mask >> i) & 1ULL) sites.push_back(i + 1);
    return Queue(sites);
}

bool Queue::contains(int site) const {
    return std::binary_search(sites_.begin(), sites_.end(), site);
}

unsigned long long Queue::mask() const {
    unsigned long long m = 0;
    for (int s : sites_) {
        if (s > 64) throw std::domain_error("Queue::mask: site beyond 64");
        m |= 1ULL << (s - 1);
    }
    return m;
}

std::string Queue::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < sites_.size(); ++i) {
        if (i) os << ',';
        os << sites_[i];
    }
    return os.str();
}

Word queue_apply_with_order(const Queue& q, const Word& u, const std::vector<int>& order) {
    const int n = u.size();
    const int r = q.size();
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("queue_apply: ordering has wrong length");
    for (int i = 0; i + 1 < n; ++i)
        if (u.letter(order[i]) > u.letter(order[i + 1]))
            throw std::invalid_argument("queue_apply: ordering is not weakly increasing");
    if (!q.empty() && q.max_site() > n)
        throw std::invalid_argument("queue_apply: queue site beyond word length");

    std::vector<int> v(n, 0);
    std::vector<char> in_q(n + 1, 0);
    for (int s : q.sites()) in_q[s] = 1;

    // Phase I: the last n - r sites in decreasing order; each is matched to
    // the first unset off-queue site weakly to its left (cyclically).
    for (int t = n - 1; t >= r; --t) {
        int i = order[t];
        int j = i;
        while (in_q[j] || v[j - 1] != 0) {
            j = (j == 1) ? n : j - 1;
        }
        v[j - 1] = u.letter(i) + 1;
    }
    // Phase II: the first r sites in increasing order; each is matched to the
    // first unset on-queue site weakly to its right (cyclically).
    for (int t = 0; t < r; ++t) {
        int i = order[t];
        int j = i;
        while (!in_q[j] || v[j - 1] != 0) {
            j = (j == n) ? 1 : j + 1;
        }
        v[j - 1] = u.letter(i);
    }
    return Word(v);
}

Word queue_apply(const Queue& q, const Word& u) {
    const int n = u.size();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return u.letter(a) < u.letter(b); });
    return queue_apply_with_order(q, u, order);
}

Word merge_classes(const Word& u, int i) {
    if (i < 1) throw std::invalid_argument("merge_classes: class index must be >= 1");
    std::vector<int> v = u.letters();
    for (int& a : v)
        if (a > i) --a;
    return Word(v);
}

Word merge_at(const Word& u, int k) {
    TypeVector m = u.type();
    int j = m.merge_class_of(k);
    if (j < 1)
        throw std::invalid_argument("merge_at: k=" + std::to_string(k) +
                                    " is not a partial sum of the word type");
    return merge_classes(u, j);
}

Word merge_set(const Word& u, const std::vector<int>& T) {
    std::vector<int> sorted = T;
    std::sort(sorted.begin(), sorted.end());
    Word v = u;
    for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) v = merge_classes(v, *it);
    return v;
}

Word contragredient_word(const Word& u, int num_classes) {
    const int n = u.size();
    if (u.max_letter() > num_classes)
        throw std::invalid_argument("contragredient_word: letter exceeds class count");
    std::vector<int> v(n);
    for (int i = 1; i <= n; ++i) v[i - 1] = num_classes + 1 - u.letter(n + 1 - i);
    return Word(v);
}

Queue contragredient_queue(const Queue& q, int n) {
    if (!q.empty() && q.max_site() > n)
        throw std::invalid_argument("contragredient_queue: site beyond n");
    std::vector<int> sites;
    for (int i = 1; i <= n; ++i)
        if (!q.contains(n + 1 - i)) sites.push_back(i);
    return Queue(sites);
}

}  // namespace mlqs
