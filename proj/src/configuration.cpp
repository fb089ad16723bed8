#include "mlqs/configuration.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mlqs {

Polynomial Configuration::weight() const {
    Monomial m(n);
    for (int s : q1.sites()) m.multiply_by_variable(s);
    for (int s : q2.sites()) m.multiply_by_variable(s);
    return Polynomial::monomial(m);
}

std::vector<int> ParenthesisRecord::unbalanced_sites() const {
    std::vector<int> sites;
    for (int idx : unmatched) sites.push_back(symbols[idx].site);
    std::sort(sites.begin(), sites.end());
    sites.erase(std::unique(sites.begin(), sites.end()), sites.end());
    return sites;
}

std::string ParenthesisRecord::trace() const {
    // Matched pairs share a numeric id; unmatched symbols carry '-'.
    std::vector<int> pair_id(symbols.size(), 0);
    int next = 0;
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (match[i] >= 0 && pair_id[i] == 0 && pair_id[match[i]] == 0) {
            ++next;
            pair_id[i] = pair_id[match[i]] = next;
        }
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (i) os << ' ';
        os << (symbols[i].open ? '(' : ')');
        if (match[i] < 0) os << '-';
        else os << pair_id[i];
    }
    return os.str();
}

// Unmatched openers when the total drift is positive (more opens than
// closes): prefix heights over two periods; an open starting at height h is
// unmatched iff no later height within a full period comes back to h. Since
// every period climbs by the drift, the suffix minimum over the doubled
// array is exactly the windowed minimum.
static std::vector<char> unmatched_opens(const std::vector<int>& delta) {
    const int T = static_cast<int>(delta.size());
    std::vector<int> s(2 * T + 1, 0);
    for (int t = 0; t < 2 * T; ++t) s[t + 1] = s[t] + delta[t % T];
    std::vector<int> sufmin(2 * T + 2, 1 << 30);
    for (int t = 2 * T; t >= 0; --t) sufmin[t] = std::min(s[t], sufmin[t + 1]);
    std::vector<char> un(T, 0);
    for (int t = 0; t < T; ++t)
        if (delta[t] == 1 && sufmin[t + 1] > s[t]) un[t] = 1;
    return un;
}

ParenthesisRecord sp_record(const Configuration& c) {
    const int n = c.n;
    if ((!c.q1.empty() && c.q1.max_site() > n) || (!c.q2.empty() && c.q2.max_site() > n))
        throw std::invalid_argument("sp_record: site beyond n");
    ParenthesisRecord rec;
    for (int j = 1; j <= n; ++j) {
        bool a = c.q1.contains(j), b = c.q2.contains(j);
        if (a) rec.symbols.push_back({j, true});
        if (b) rec.symbols.push_back({j, false});
    }
    const int T = static_cast<int>(rec.symbols.size());
    rec.match.assign(T, -1);
    if (T == 0) return rec;

    const int d = c.q1.size() - c.q2.size();
    std::vector<char> is_unmatched(T, 0);
    if (d > 0) {
        std::vector<int> delta(T);
        for (int t = 0; t < T; ++t) delta[t] = rec.symbols[t].open ? 1 : -1;
        is_unmatched = unmatched_opens(delta);
    } else if (d < 0) {
        // Reverse and flip; matching structure is preserved.
        std::vector<int> delta(T);
        for (int t = 0; t < T; ++t) delta[t] = rec.symbols[T - 1 - t].open ? -1 : 1;
        std::vector<char> rev = unmatched_opens(delta);
        for (int t = 0; t < T; ++t) is_unmatched[t] = rev[T - 1 - t];
    }

    // Cut point: just past an unmatched symbol if any, otherwise at a global
    // minimum of the height profile; no matched pair crosses the cut.
    int cut = 0;
    if (d != 0) {
        for (int t = 0; t < T; ++t)
            if (is_unmatched[t]) {
                cut = t + 1;
                break;
            }
    } else {
        int h = 0, best = 0, arg = 0;
        for (int t = 0; t < T; ++t) {
            h += rec.symbols[t].open ? 1 : -1;
            if (h < best) {
                best = h;
                arg = t + 1;
            }
        }
        cut = arg;
    }
    std::vector<int> stack;
    for (int off = 0; off < T; ++off) {
        int t = (cut + off) % T;
        if (is_unmatched[t]) continue;
        if (rec.symbols[t].open) {
            stack.push_back(t);
        } else {
            if (stack.empty()) throw std::logic_error("sp_record: inconsistent matching");
            rec.match[t] = stack.back();
            rec.match[stack.back()] = t;
            stack.pop_back();
        }
    }
    if (!stack.empty()) throw std::logic_error("sp_record: inconsistent matching");
    for (int t = 0; t < T; ++t)
        if (is_unmatched[t]) rec.unmatched.push_back(t);
    return rec;
}

Configuration dual_configuration(const Configuration& c) {
    ParenthesisRecord rec = sp_record(c);
    std::vector<int> toggled = rec.unbalanced_sites();
    auto toggle = [&](const Queue& from, const Queue& other) {
        std::vector<int> sites;
        for (int j = 1; j <= c.n; ++j) {
            bool unb = std::binary_search(toggled.begin(), toggled.end(), j);
            bool in = unb ? other.contains(j) : from.contains(j);
            if (in) sites.push_back(j);
        }
        return Queue(sites);
    };
    return Configuration{toggle(c.q1, c.q2), toggle(c.q2, c.q1), c.n};
}

QueueTuple s_action(int i, const QueueTuple& qs, int n) {
    if (i < 1 || i + 1 > static_cast<int>(qs.size()))
        throw std::invalid_argument("s_action: index out of range");
    Configuration c{qs[i - 1], qs[i], n};
    Configuration d = dual_configuration(c);
    QueueTuple out = qs;
    out[i - 1] = d.q1;
    out[i] = d.q2;
    return out;
}

MLQ s_action(int i, const MLQ& q) {
    QueueTuple out = s_action(i, q.queues(), q.n());
    std::vector<int> twist = q.twist();
    std::swap(twist[i - 1], twist[i]);
    return MLQ(q.n(), std::move(out), q.type(), std::move(twist));
}

QueueTuple apply_perm(const std::vector<int>& gen_word, QueueTuple qs, int n) {
    for (auto it = gen_word.rbegin(); it != gen_word.rend(); ++it)
        qs = s_action(*it, qs, n);
    return qs;
}

std::vector<int> word_encoding(const QueueTuple& qs, int n) {
    const int k = static_cast<int>(qs.size());
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(k) * n);
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= k; ++i) w.push_back(qs[i - 1].contains(j) ? i : 0);
    return w;
}

std::vector<int> sigma_i_word(int i, std::vector<int> w) {
    std::vector<int> open_stack;
    std::vector<int> unmatched_close;
    for (int pos = 0; pos < static_cast<int>(w.size()); ++pos) {
        if (w[pos] == i) {
            open_stack.push_back(pos);
        } else if (w[pos] == i + 1) {
            if (!open_stack.empty()) open_stack.pop_back();
            else unmatched_close.push_back(pos);
        }
    }
    // The leftover reads )^a (^b in position order. The word lives on a
    // circle, so the last min(a,b) opens close the first min(a,b) closes
    // around the wrap; with equal counts nothing remains and the word is
    // unchanged. Each surviving symbol toggles, stepping to the neighboring
    // row slot of its column: an i becomes an i+1 one position later, an
    // i+1 becomes an i one position earlier.
    const int a = static_cast<int>(unmatched_close.size());
    const int b = static_cast<int>(open_stack.size());
    for (int t = 0; t < b - a; ++t) {
        int pos = open_stack[t];
        if (pos + 1 >= static_cast<int>(w.size()) || w[pos + 1] != 0)
            throw std::invalid_argument("sigma_i_word: not a reading word");
        w[pos] = 0;
        w[pos + 1] = i + 1;
    }
    for (int t = b; t < a; ++t) {
        int pos = unmatched_close[t];
        if (pos == 0 || w[pos - 1] != 0)
            throw std::invalid_argument("sigma_i_word: not a reading word");
        w[pos] = 0;
        w[pos - 1] = i;
    }
    return w;
}

Queue lower_set(const Word& w, int k) {
    if (k == 0) return Queue{};
    TypeVector m = w.type();
    int j = m.class_of_partial_sum(k);
    if (j < 0)
        throw std::invalid_argument("lower_set: k=" + std::to_string(k) +
                                    " is not a partial sum of the word type");
    std::vector<int> sites;
    for (int i = 1; i <= w.size(); ++i)
        if (w.letter(i) <= j) sites.push_back(i);
    return Queue(sites);
}

Word cyclic_shift(const Word& w) {
    std::vector<int> v(w.letters().begin() + 1, w.letters().end());
    v.push_back(w.letters().front());
    return Word(v);
}

Queue cyclic_shift_queue(const Queue& q, int n) {
    std::vector<int> sites;
    for (int s : q.sites()) sites.push_back(s == 1 ? n : s - 1);
    return Queue(sites);
}

QueueTuple cyclic_shift_tuple(const QueueTuple& qs, int n) {
    QueueTuple out;
    for (const Queue& q : qs) out.push_back(cyclic_shift_queue(q, n));
    return out;
}

}  // namespace mlqs
