#include "mlqs/multiline.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace mlqs {

static std::vector<int> identity_perm(int k) {
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 1);
    return p;
}

static bool is_permutation_of(const std::vector<int>& p, int k) {
    if (static_cast<int>(p.size()) != k) return false;
    std::vector<char> seen(k + 1, 0);
    for (int v : p) {
        if (v < 1 || v > k || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

MLQ::MLQ(int n, std::vector<Queue> queues, TypeVector type, std::vector<int> twist)
    : n_(n), queues_(std::move(queues)), type_(std::move(type)), twist_(std::move(twist)) {
    const int ell = static_cast<int>(queues_.size()) + 1;
    if (twist_.empty()) twist_ = identity_perm(ell - 1);
    if (!is_permutation_of(twist_, ell - 1))
        throw std::invalid_argument("MLQ: twist is not a permutation of the levels");
    if (type_.total() != n_) throw std::invalid_argument("MLQ: type does not sum to n");
    if (ell < type_.num_classes() || ell > type_.num_classes() + 1)
        throw std::invalid_argument("MLQ: queue count does not fit the type");
    for (int i = 1; i <= ell - 1; ++i) {
        const Queue& q = queues_[i - 1];
        if (!q.empty() && q.max_site() > n_)
            throw std::invalid_argument("MLQ: queue site beyond n");
        if (q.size() != type_.partial_sum(twist_[i - 1]))
            throw std::invalid_argument("MLQ: queue size does not match the twisted type");
    }
}

MLQ MLQ::ordinary(int n, std::vector<Queue> queues) {
    std::vector<int> m;
    int prev = 0;
    for (const Queue& q : queues) {
        if (q.size() < prev)
            throw std::invalid_argument("MLQ::ordinary: queue sizes must weakly increase");
        m.push_back(q.size() - prev);
        prev = q.size();
    }
    m.push_back(n - prev);
    return MLQ(n, std::move(queues), TypeVector(m));
}

bool MLQ::ordinary_twist() const {
    for (int i = 0; i < static_cast<int>(twist_.size()); ++i)
        if (twist_[i] != i + 1) return false;
    return true;
}

Word MLQ::apply(const Word& u) const {
    Word w = u;
    for (const Queue& q : queues_) w = queue_apply(q, w);
    return w;
}

Polynomial MLQ::weight() const {
    Monomial m(n_);
    for (const Queue& q : queues_)
        for (int s : q.sites()) m.multiply_by_variable(s);
    return Polynomial::monomial(m);
}

std::string MLQ::to_json() const {
    nlohmann::json j;
    j["n"] = n_;
    j["queues"] = nlohmann::json::array();
    for (const Queue& q : queues_) j["queues"].push_back(q.sites());
    j["twist"] = twist_;
    return j.dump();
}

MLQ MLQ::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    int n = j.at("n").get<int>();
    std::vector<Queue> queues;
    for (const auto& q : j.at("queues")) queues.push_back(Queue(q.get<std::vector<int>>()));
    std::vector<int> twist;
    if (j.contains("twist")) twist = j["twist"].get<std::vector<int>>();
    if (twist.empty() || std::is_sorted(twist.begin(), twist.end()))
        return MLQ::ordinary(n, std::move(queues));
    // A genuine twist needs the type; recover it from the sorted queue sizes.
    std::vector<int> sizes;
    for (const Queue& q : queues) sizes.push_back(q.size());
    std::sort(sizes.begin(), sizes.end());
    std::vector<int> m;
    int prev = 0;
    for (int s : sizes) {
        m.push_back(s - prev);
        prev = s;
    }
    m.push_back(n - prev);
    return MLQ(n, std::move(queues), TypeVector(m), twist);
}

Word mlq_apply(const MLQ& q, const Word& u) { return q.apply(u); }
Polynomial mlq_weight(const MLQ& q) { return q.weight(); }

// Ascending-bitmask enumeration of r-subsets of [n] (Gosper's hack).
static void for_each_subset(int n, int r, const std::function<void(unsigned long long)>& fn) {
    if (r == 0) {
        fn(0);
        return;
    }
    if (r > n) return;
    unsigned long long mask = (1ULL << r) - 1;
    const unsigned long long limit = 1ULL << n;
    while (mask < limit) {
        fn(mask);
        unsigned long long c = mask & -mask;
        unsigned long long ripple = mask + c;
        mask = (((mask ^ ripple) >> 2) / c) | ripple;
    }
}

namespace {

// Enumeration kernel: queues as bitmasks (bit i <-> site i+1), words as flat
// int arrays, the two-phase matching done with bit scans. Letters stay small
// (at most one above the level count), so ordering is a counting sort.
struct MaskKernel {
    int n = 0;
    unsigned long long all = 0;
    std::vector<int> counts, order;

    explicit MaskKernel(int n_)
        : n(n_), all(n_ == 64 ? ~0ULL : (1ULL << n_) - 1), counts(2 * n_ + 3), order(n_) {}

    void apply(unsigned long long q, const int* u, int* v) {
        int max_letter = 0;
        for (int i = 0; i < n; ++i) max_letter = std::max(max_letter, u[i]);
        for (int a = 0; a <= max_letter; ++a) counts[a] = 0;
        for (int i = 0; i < n; ++i) ++counts[u[i]];
        int pos = 0;
        for (int a = 1; a <= max_letter; ++a) {
            int c = counts[a];
            counts[a] = pos;
            pos += c;
        }
        for (int i = 0; i < n; ++i) order[counts[u[i]]++] = i;
        unsigned long long off_unset = all & ~q;
        unsigned long long on_unset = q;
        const int r = __builtin_popcountll(q);
        for (int t = n - 1; t >= r; --t) {
            int i = order[t];
            unsigned long long low =
                off_unset & (i >= 63 ? ~0ULL : ((1ULL << (i + 1)) - 1));
            unsigned long long pick = low ? low : off_unset;
            int j = 63 - __builtin_clzll(pick);
            off_unset &= ~(1ULL << j);
            v[j] = u[i] + 1;
        }
        for (int t = 0; t < r; ++t) {
            int i = order[t];
            unsigned long long high = on_unset & ~((1ULL << i) - 1);
            unsigned long long pick = high ? high : on_unset;
            int j = __builtin_ctzll(pick);
            on_unset &= ~(1ULL << j);
            v[j] = u[i];
        }
    }
};

// Walk every mask tuple with the given level sizes (level 1 slowest), feeding
// the leaf the output letters and the exponent vector of the tuple weight.
void enumerate_images(const TypeVector& m, int ell, const std::vector<int>& twist, int n,
                      const std::function<void(const int* letters, const std::vector<int>& exps)>& leaf) {
    if (n > 63) throw std::domain_error("enumeration kernel limited to n <= 63");
    std::vector<int> sizes(ell - 1);
    for (int i = 0; i < ell - 1; ++i) sizes[i] = m.partial_sum(twist[i]);
    std::vector<std::vector<int>> words(ell);
    words[0].assign(n, 1);
    for (int i = 1; i < ell; ++i) words[i].assign(n, 0);
    std::vector<int> exps(n, 0);
    MaskKernel kernel(n);

    auto rec = [&](auto&& self, int level) -> void {
        if (level == ell - 1) {
            leaf(words[level].data(), exps);
            return;
        }
        const int r = sizes[level];
        auto step = [&](unsigned long long mask) {
            for (unsigned long long b = mask; b; b &= b - 1)
                ++exps[__builtin_ctzll(b)];
            kernel.apply(mask, words[level].data(), words[level + 1].data());
            self(self, level + 1);
            for (unsigned long long b = mask; b; b &= b - 1)
                --exps[__builtin_ctzll(b)];
        };
        if (r == 0) {
            step(0);
            return;
        }
        if (r > n) return;
        unsigned long long mask = (1ULL << r) - 1;
        const unsigned long long limit = 1ULL << n;
        while (mask < limit) {
            step(mask);
            unsigned long long c = mask & -mask;
            unsigned long long ripple = mask + c;
            mask = (((mask ^ ripple) >> 2) / c) | ripple;
        }
    };
    rec(rec, 0);
}

std::vector<int> checked_twist(const TypeVector& m, int ell, const std::vector<int>& twist,
                               int n) {
    if (m.total() != n) throw std::invalid_argument("mlq enumeration: type does not sum to n");
    if (ell < m.num_classes() || ell > m.num_classes() + 1)
        throw std::invalid_argument("mlq enumeration: class count does not fit the type");
    std::vector<int> tw = twist.empty() ? identity_perm(ell - 1) : twist;
    if (!is_permutation_of(tw, ell - 1))
        throw std::invalid_argument("mlq enumeration: bad twist");
    return tw;
}

}  // namespace

void enumerate_mlqs(const TypeVector& m, int ell, const std::vector<int>& twist, int n,
                    const std::function<void(const MLQ&)>& fn) {
    if (n > 63) throw std::domain_error("enumerate_mlqs: n beyond the bitmask kernel limit");
    if (m.total() != n) throw std::invalid_argument("enumerate_mlqs: type does not sum to n");
    if (ell < m.num_classes() || ell > m.num_classes() + 1)
        throw std::invalid_argument("enumerate_mlqs: class count does not fit the type");
    std::vector<int> tw = twist.empty() ? identity_perm(ell - 1) : twist;
    if (!is_permutation_of(tw, ell - 1))
        throw std::invalid_argument("enumerate_mlqs: bad twist");
    std::vector<int> sizes(ell - 1);
    for (int i = 0; i < ell - 1; ++i) sizes[i] = m.partial_sum(tw[i]);

    std::vector<Queue> queues(ell - 1);
    auto rec = [&](auto&& self, int level) -> void {
        if (level == ell - 1) {
            fn(MLQ(n, queues, m, tw));
            return;
        }
        for_each_subset(n, sizes[level], [&](unsigned long long mask) {
            queues[level] = Queue::from_mask(mask);
            self(self, level + 1);
        });
    };
    rec(rec, 0);
}

long long count_mlqs(const TypeVector& m, int ell, int n) {
    auto binom = [](int a, int b) {
        long long r = 1;
        for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
        return r;
    };
    long long total = 1;
    for (int i = 1; i <= ell - 1; ++i) total *= binom(n, m.partial_sum(i));
    return total;
}

std::map<Word, Polynomial> spectral_weight_table(const TypeVector& m, int ell,
                                                 const std::vector<int>& twist, int n) {
    std::vector<int> tw = checked_twist(m, ell, twist, n);
    std::map<std::vector<int>, std::map<std::vector<int>, std::int64_t, std::greater<>>> acc;
    enumerate_images(m, ell, tw, n, [&](const int* letters, const std::vector<int>& exps) {
        auto& bucket = acc[std::vector<int>(letters, letters + n)];
        auto [it, fresh] = bucket.try_emplace(exps, 0);
        it->second = checked_add(it->second, 1);
    });
    std::map<Word, Polynomial> table;
    for (auto& [letters, bucket] : acc) {
        Polynomial p(n);
        for (auto& [e, c] : bucket) p.add_term(Monomial(e), c);
        table.emplace(Word(letters), std::move(p));
    }
    return table;
}

Polynomial spectral_weight_declared(const Word& u, int ell, const std::vector<int>& twist) {
    if (!u.packed()) throw std::invalid_argument("spectral_weight: word is not packed");
    const int n = u.size();
    TypeVector m = u.type();
    if (ell < m.num_classes() || ell > m.num_classes() + 1)
        throw std::invalid_argument("spectral_weight: declared class count does not fit");
    std::vector<int> tw = checked_twist(m, ell, twist, n);
    const std::vector<int>& target = u.letters();
    std::map<std::vector<int>, std::int64_t, std::greater<>> acc;
    enumerate_images(m, ell, tw, n, [&](const int* letters, const std::vector<int>& exps) {
        if (std::equal(target.begin(), target.end(), letters)) {
            auto [it, fresh] = acc.try_emplace(exps, 0);
            it->second = checked_add(it->second, 1);
        }
    });
    Polynomial p(n);
    for (auto& [e, c] : acc) p.add_term(Monomial(e), c);
    return p;
}

Polynomial spectral_weight(const Word& u, const std::vector<int>& twist) {
    return spectral_weight_declared(u, u.type().num_classes(), twist);
}

MLQ witness_mlq(const Word& u) {
    if (!u.packed()) throw std::invalid_argument("witness_mlq: word is not packed");
    const int n = u.size();
    const int ell = u.max_letter();
    std::vector<Queue> queues;
    for (int k = 1; k <= ell - 1; ++k) {
        std::vector<int> sites;
        for (int i = 1; i <= n; ++i)
            if (u.letter(i) <= k) sites.push_back(i);
        queues.push_back(Queue(sites));
    }
    return MLQ(n, std::move(queues), u.type());
}

BlockDecomposition block_decomposition(const MLQ& q) {
    if (!q.ordinary_twist())
        throw std::invalid_argument("block_decomposition: MLQ must be untwisted");
    const TypeVector& m = q.type();
    if (!m.packed_below(q.num_classes()))
        throw std::invalid_argument("block_decomposition: type must be packed below the top");
    BlockDecomposition d;
    for (int i = 1; i <= q.num_queues(); ++i) {
        std::vector<int> desc = q.queue(i).sites();
        std::sort(desc.rbegin(), desc.rend());
        std::vector<std::vector<int>> row;
        int pos = 0;
        for (int j = 1; j <= i; ++j) {
            int mj = m.multiplicity(j);
            row.emplace_back(desc.begin() + pos, desc.begin() + pos + mj);
            pos += mj;
        }
        d.blocks.push_back(std::move(row));
    }
    return d;
}

bool dominates(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    std::vector<int> x = a, y = b;
    std::sort(x.rbegin(), x.rend());
    std::sort(y.rbegin(), y.rend());
    for (std::size_t k = 0; k < x.size(); ++k)
        if (x[k] < y[k]) return false;
    return true;
}

bool strictly_above(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.empty() || b.empty()) return true;
    return *std::min_element(a.begin(), a.end()) > *std::max_element(b.begin(), b.end());
}

bool is_interlacing(const MLQ& q) {
    BlockDecomposition d = block_decomposition(q);
    for (int i = 2; i <= q.num_queues(); ++i)
        for (int j = 1; j <= i - 1; ++j) {
            const auto& qi_j = d.blocks[i - 1][j - 1];
            const auto& qprev_j = d.blocks[i - 2][j - 1];
            const auto& qi_next = d.blocks[i - 1][j];
            if (!dominates(qi_j, qprev_j)) return false;
            if (!strictly_above(qprev_j, qi_next)) return false;
        }
    return true;
}

bool weakly_decreasing_up_to(const Word& u, int t) {
    int prev = 0;
    bool first = true;
    for (int i = 1; i <= u.size(); ++i) {
        int a = u.letter(i);
        if (a > t) continue;
        if (!first && a > prev) return false;
        prev = a;
        first = false;
    }
    return true;
}

std::vector<std::map<int, int>> canonical_labeling(const MLQ& q) {
    std::vector<std::map<int, int>> labels;
    Word w = Word::ones(q.n());
    for (int k = 1; k <= q.num_queues(); ++k) {
        w = queue_apply(q.queue(k), w);
        std::map<int, int> f;
        for (int s : q.queue(k).sites()) f[s] = w.letter(s);
        labels.push_back(std::move(f));
    }
    return labels;
}

std::vector<std::map<int, int>> canonical_labeling_recursive(const MLQ& q) {
    if (!q.ordinary_twist())
        throw std::invalid_argument("canonical_labeling_recursive: MLQ must be untwisted");
    const int n = q.n();
    std::vector<std::map<int, int>> labels;
    std::map<int, int> prev;  // f_k on q_k
    for (int k = 0; k < q.num_queues(); ++k) {
        const Queue& next = q.queue(k + 1);
        std::map<int, int> f;
        // Sites of q_k by increasing label, ties by site; each bullies its way
        // to the first free site of q_{k+1} weakly to the right.
        std::vector<std::pair<int, int>> order;  // (label, site)
        for (auto& [site, lab] : prev) order.push_back({lab, site});
        std::sort(order.begin(), order.end());
        for (auto& [lab, site] : order) {
            int j = site;
            while (!next.contains(j) || f.count(j)) j = (j == n) ? 1 : j + 1;
            f[j] = lab;
        }
        for (int s : next.sites())
            if (!f.count(s)) f[s] = k + 1;
        labels.push_back(f);
        prev = std::move(f);
    }
    return labels;
}

static int digits(int v) {
    int d = 1;
    while (v >= 10) {
        v /= 10;
        ++d;
    }
    return d;
}

static std::string grid_row(int n, const std::function<std::string(int)>& cell) {
    std::ostringstream os;
    for (int s = 1; s <= n; ++s) {
        if (s > 1) os << ' ';
        os << cell(s);
    }
    return os.str();
}

static std::string pad_center(const std::string& s, int width) {
    int total = width - static_cast<int>(s.size());
    int left = total / 2;
    return std::string(left, ' ') + s + std::string(total - left, ' ');
}

std::string render_graveyard(const MLQ& q) {
    if (q.num_queues() == 0) return "";
    auto labels = canonical_labeling(q);
    int width = 1;
    for (const auto& f : labels)
        for (auto& [site, lab] : f) width = std::max(width, digits(lab));
    std::ostringstream os;
    for (int i = 0; i < q.num_queues(); ++i) {
        if (i) os << '\n';
        os << grid_row(q.n(), [&](int s) {
            auto it = labels[i].find(s);
            if (it != labels[i].end()) return "(" + pad_center(std::to_string(it->second), width) + ")";
            return "[" + std::string(width, ' ') + "]";
        });
    }
    return os.str();
}

std::string render_queue_diagram(const Queue& q, const Word& u) {
    Word v = queue_apply(q, u);
    int width = 1;
    for (int s = 1; s <= u.size(); ++s)
        width = std::max({width, digits(u.letter(s)), digits(v.letter(s))});
    std::ostringstream os;
    os << grid_row(u.size(), [&](int s) {
        return " " + pad_center(std::to_string(u.letter(s)), width) + " ";
    });
    os << '\n';
    os << grid_row(u.size(), [&](int s) {
        if (q.contains(s)) return "(" + pad_center(std::to_string(v.letter(s)), width) + ")";
        return "[" + std::string(width, ' ') + "]";
    });
    return os.str();
}

}  // namespace mlqs
