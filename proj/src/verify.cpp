#include "mlqs/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "mlqs/configuration.hpp"
#include "mlqs/lattice.hpp"
#include "mlqs/multiline.hpp"
#include "mlqs/polynomial.hpp"
#include "mlqs/tableau.hpp"
#include "mlqs/tasep.hpp"
#include "mlqs/word.hpp"

namespace mlqs::verify {

namespace {

struct Checker {
    long long checks = 0;
    bool pass = true;
    std::string detail;

    void expect(bool ok, const std::function<std::string()>& what) {
        ++checks;
        if (!ok && pass) {
            pass = false;
            detail = what();
        }
    }
    void expect(bool ok, const std::string& what) {
        expect(ok, [&] { return what; });
    }
};

void for_each_word(int n, int max_letter, const std::function<void(const Word&)>& fn) {
    std::vector<int> letters(n, 1);
    while (true) {
        fn(Word(letters));
        int i = n - 1;
        while (i >= 0 && letters[i] == max_letter) letters[i--] = 1;
        if (i < 0) break;
        ++letters[i];
    }
}

void for_each_packed_word(int n, const std::function<void(const Word&)>& fn) {
    for_each_word(n, n, [&](const Word& u) {
        if (u.packed()) fn(u);
    });
}

// Compositions of n (packed types).
std::vector<TypeVector> packed_types(int n) {
    std::vector<TypeVector> out;
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
        out.push_back(TypeVector(parts));
    }
    return out;
}

std::vector<std::vector<int>> permutations_of(int k) {
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 1);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

void for_each_queue(int n, const std::function<void(const Queue&)>& fn) {
    for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) fn(Queue::from_mask(mask));
}

// Every ordering of the sites with weakly increasing letters: the product of
// permutations within each letter class.
void for_each_admissible_order(const Word& u, const std::function<void(const std::vector<int>&)>& fn) {
    const int n = u.size();
    std::vector<std::vector<int>> groups;
    for (int letter = 1; letter <= u.max_letter(); ++letter) {
        std::vector<int> g;
        for (int i = 1; i <= n; ++i)
            if (u.letter(i) == letter) g.push_back(i);
        if (!g.empty()) groups.push_back(g);
    }
    std::vector<int> order;
    order.reserve(n);
    auto rec = [&](auto&& self, std::size_t gi) -> void {
        if (gi == groups.size()) {
            fn(order);
            return;
        }
        std::vector<int> g = groups[gi];
        do {
            order.insert(order.end(), g.begin(), g.end());
            self(self, gi + 1);
            order.resize(order.size() - g.size());
        } while (std::next_permutation(g.begin(), g.end()));
    };
    rec(rec, 0);
}

TypeVector predicted_queue_type(const TypeVector& m, int r) {
    int t = 1;
    while (m.partial_sum(t) < r) ++t;
    std::vector<int> out;
    for (int j = 1; j < t; ++j) out.push_back(m.multiplicity(j));
    out.push_back(r - m.partial_sum(t - 1));
    out.push_back(m.partial_sum(t) - r);
    for (int j = t + 1; j <= m.num_classes(); ++j) out.push_back(m.multiplicity(j));
    return TypeVector(out);
}

// ---------------------------------------------------------------- core ----

Checker core_order_independence(const Options& opt) {
    Checker c;
    for (int n = 1; n <= opt.n; ++n) {
        for_each_word(n, n, [&](const Word& u) {
            for_each_queue(n, [&](const Queue& q) {
                Word canon = queue_apply(q, u);
                for_each_admissible_order(u, [&](const std::vector<int>& order) {
                    c.expect(queue_apply_with_order(q, u, order) == canon, [&] {
                        return "order dependence at u=" + u.str() + " q=" + q.str();
                    });
                });
            });
        });
    }
    return c;
}

Checker core_type_law(const Options& opt) {
    Checker c;
    for (int n = 1; n <= opt.n; ++n) {
        for_each_word(n, n, [&](const Word& u) {
            TypeVector m = u.type();
            for_each_queue(n, [&](const Queue& q) {
                TypeVector got = queue_apply(q, u).type();
                TypeVector want = predicted_queue_type(m, q.size());
                c.expect(got == want, [&] {
                    return "type law fails at u=" + u.str() + " q=" + q.str() + ": got " +
                           got.str() + " want " + want.str();
                });
            });
        });
    }
    return c;
}

Checker core_duality(const Options& opt) {
    Checker c;
    const int ell = 3;
    for (int n = 1; n <= std::min(opt.n, 5); ++n) {
        for_each_word(n, ell, [&](const Word& u) {
            Word ustar = contragredient_word(u, ell);
            for_each_queue(n, [&](const Queue& q) {
                Queue qstar = contragredient_queue(q, n);
                // q(u) is treated as a word with ell+1 classes even when it
                // only has ell (the q = [n] degeneracy).
                Word lhs = contragredient_word(queue_apply(q, u), ell + 1);
                Word rhs = queue_apply(qstar, ustar);
                c.expect(lhs == rhs, [&] {
                    return "duality fails at u=" + u.str() + " q=" + q.str();
                });
            });
        });
    }
    return c;
}

Checker core_merge_commutation(const Options& opt) {
    Checker c;
    for (int n = 1; n <= std::min(opt.n, 5); ++n) {
        for_each_word(n, n, [&](const Word& u) {
            std::vector<int> ks = u.type().partial_sums();
            for_each_queue(n, [&](const Queue& q) {
                Word qu = queue_apply(q, u);
                for (int k : ks) {
                    c.expect(merge_at(qu, k) == queue_apply(q, merge_at(u, k)), [&] {
                        return "merge commutation fails at u=" + u.str() + " q=" + q.str() +
                               " k=" + std::to_string(k);
                    });
                }
            });
        });
    }
    return c;
}

// ---------------------------------------------------------------- poly ----

Checker poly_newton(const Options&) {
    Checker c;
    for (int N = 1; N <= 6; ++N) {
        Polynomial sum(N);
        for (int k = 0; k <= N; ++k) {
            Polynomial term =
                elementary_sym_prefix(k, N, N) * complete_hom_prefix(N - k, N, N);
            sum += (k % 2 == 0) ? term : -term;
        }
        c.expect(sum.is_zero(), "e/h alternating identity fails at N=" + std::to_string(N));
    }
    return c;
}

Polynomial random_poly(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> nterms(0, 8), expd(0, 3), coeffd(-99, 99);
    Polynomial p(n);
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        std::vector<int> e(n);
        for (int& v : e) v = expd(rng);
        int coeff = coeffd(rng);
        if (coeff != 0) p.add_term(Monomial(e), coeff);
    }
    return p;
}

Checker poly_roundtrip(const Options& opt) {
    Checker c;
    std::mt19937_64 rng(opt.seed);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 5);
        Polynomial p = random_poly(rng, n);
        c.expect(Polynomial::parse(p.str(), n) == p,
                 [&] { return "text round-trip fails for " + p.str(); });
        c.expect(Polynomial::from_json(p.to_json()) == p,
                 [&] { return "json round-trip fails for " + p.str(); });
    }
    return c;
}

Checker poly_det_multilinear(const Options& opt) {
    Checker c;
    std::mt19937_64 rng(opt.seed + 1);
    auto rand_small = [&](int n) {
        std::uniform_int_distribution<int> nterms(0, 2), expd(0, 2), coeffd(-3, 3);
        Polynomial p(n);
        int t = nterms(rng);
        for (int i = 0; i < t; ++i) {
            std::vector<int> e(n);
            for (int& v : e) v = expd(rng);
            int coeff = coeffd(rng);
            if (coeff != 0) p.add_term(Monomial(e), coeff);
        }
        return p;
    };
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 3;
        std::vector<std::vector<Polynomial>> M(3, std::vector<Polynomial>(3, Polynomial(n)));
        for (auto& row : M)
            for (auto& e : row) e = rand_small(n);
        Polynomial d = poly_det(M);
        auto scaled = M;
        for (auto& e : scaled[1]) e = e * 7;
        c.expect(poly_det(scaled) == d * 7, "row scaling fails");
        auto swapped = M;
        std::swap(swapped[0], swapped[2]);
        c.expect(poly_det(swapped) == -d, "row swap sign fails");
        auto added = M;
        std::vector<Polynomial> extra(3, Polynomial(n));
        for (auto& e : extra) e = rand_small(n);
        for (int j = 0; j < 3; ++j) added[1][j] = M[1][j] + extra[j];
        auto other = M;
        other[1] = extra;
        c.expect(poly_det(added) == d + poly_det(other), "row additivity fails");
    }
    return c;
}

// ----------------------------------------------------------------- mlq ----

Checker mlq_sigma_independence(const Options& opt) {
    Checker c;
    for (int n = 1; n <= opt.n; ++n) {
        for (const TypeVector& m : packed_types(n)) {
            int ell = m.num_classes();
            auto base = spectral_weight_table(m, ell, {}, n);
            for (const auto& twist : permutations_of(ell - 1)) {
                auto table = spectral_weight_table(m, ell, twist, n);
                c.expect(table == base, [&] {
                    std::ostringstream os;
                    os << "sigma-independence fails for type " << m.str() << " twist (";
                    for (int v : twist) os << v << ' ';
                    os << ")";
                    return os.str();
                });
            }
        }
    }
    return c;
}

// Words u of type m with merge at class i giving v.
std::vector<Word> merge_preimages(const Word& v, const TypeVector& m, int i) {
    std::vector<Word> out;
    std::vector<int> positions;   // sites of v carrying letter i
    for (int s = 1; s <= v.size(); ++s)
        if (v.letter(s) == i) positions.push_back(s);
    const int take = m.multiplicity(i + 1);   // these become i+1 in u
    std::vector<int> comb(take);
    std::vector<char> chosen(positions.size(), 0);
    auto emit = [&] {
        std::vector<int> letters = v.letters();
        for (int& a : letters)
            if (a > i) ++a;
        for (std::size_t t = 0; t < positions.size(); ++t)
            if (chosen[t]) letters[positions[t] - 1] = i + 1;
            else letters[positions[t] - 1] = i;
        Word u(letters);
        if (u.type() == m) out.push_back(u);
    };
    auto rec = [&](auto&& self, int from, int left) -> void {
        if (left == 0) {
            emit();
            return;
        }
        for (int t = from; t <= static_cast<int>(positions.size()) - left; ++t) {
            chosen[t] = 1;
            self(self, t + 1, left - 1);
            chosen[t] = 0;
        }
    };
    rec(rec, 0, take);
    return out;
}

bool check_merge_instance(Checker& c, const Word& v, const TypeVector& m, int i) {
    const int n = v.size();
    Polynomial lhs = spectral_weight(v) * elementary_sym_prefix(m.partial_sum(i), n, n);
    Polynomial rhs(n);
    for (const Word& u : merge_preimages(v, m, i)) rhs += spectral_weight(u);
    bool ok = lhs == rhs;
    c.expect(ok, [&] {
        return "merge theorem fails at v=" + v.str() + " type " + m.str() +
               " i=" + std::to_string(i);
    });
    return ok;
}

Checker mlq_merge_theorem(const Options& opt) {
    Checker c;
    // Displayed n=5 instance.
    {
        Polynomial lhs =
            spectral_weight(Word::parse("13234")) * elementary_sym_prefix(3, 5, 5);
        Polynomial rhs =
            spectral_weight(Word::parse("13245")) + spectral_weight(Word::parse("14235"));
        c.expect(lhs == rhs, "merge theorem fails on the 13234/13245/14235 instance");
    }
    // Exhaustive for n <= 4, sampled at n = 5.
    for (int n = 2; n <= std::min(opt.n, 4); ++n) {
        for (const TypeVector& m : packed_types(n)) {
            if (m.num_classes() < 2) continue;
            for (int i = 1; i < m.num_classes(); ++i) {
                TypeVector merged = m.merged(i);
                for_each_packed_word(n, [&](const Word& v) {
                    if (v.type() == merged) check_merge_instance(c, v, m, i);
                });
            }
        }
    }
    if (opt.n >= 5) {
        std::mt19937_64 rng(opt.seed + 2);
        auto types = packed_types(5);
        for (int trial = 0; trial < 12; ++trial) {
            TypeVector m = types[rng() % types.size()];
            if (m.num_classes() < 2) continue;
            int i = 1 + static_cast<int>(rng() % (m.num_classes() - 1));
            TypeVector merged = m.merged(i);
            StateSpace target(merged, 5);
            const Word& v = target.word(rng() % target.size());
            check_merge_instance(c, v, m, i);
        }
    }
    return c;
}

Checker mlq_merge_corollary(const Options& opt) {
    Checker c;
    const int n = 5;
    // The displayed chain: v = 12123, m = (1,1,1,1,1), T = {1,3}.
    {
        Polynomial e1 = elementary_sym_prefix(1, n, n), e3 = elementary_sym_prefix(3, n, n);
        Polynomial lhs = spectral_weight(Word::parse("12123")) * e1 * e3;
        Polynomial rhs(n);
        for (const char* w : {"13245", "14235", "23145", "24135"})
            rhs += spectral_weight(Word::parse(w));
        c.expect(lhs == rhs, "merge corollary fails on the 12123 instance");
        Polynomial step = spectral_weight(Word::parse("12123")) * e1;
        Polynomial two =
            spectral_weight(Word::parse("13234")) + spectral_weight(Word::parse("23134"));
        c.expect(step == two, "merge corollary chain step fails (12123 * e1)");
    }
    // Random small instances.
    std::mt19937_64 rng(opt.seed + 3);
    for (int trial = 0; trial < 8; ++trial) {
        int nn = 3 + static_cast<int>(rng() % std::max(1, opt.n - 2));
        auto types = packed_types(nn);
        TypeVector m = types[rng() % types.size()];
        if (m.num_classes() < 2) continue;
        std::vector<int> T;
        for (int t = 1; t < m.num_classes(); ++t)
            if (rng() % 2) T.push_back(t);
        if (T.empty()) T.push_back(1 + static_cast<int>(rng() % (m.num_classes() - 1)));
        TypeVector merged = m;
        for (auto it = T.rbegin(); it != T.rend(); ++it) merged = merged.merged(*it);
        StateSpace target(merged, nn);
        const Word& v = target.word(rng() % target.size());
        Polynomial lhs = spectral_weight(v);
        for (int t : T) lhs *= elementary_sym_prefix(m.partial_sum(t), nn, nn);
        Polynomial rhs(nn);
        StateSpace source(m, nn);
        for (const Word& u : source.words())
            if (merge_set(u, T) == v) rhs += spectral_weight(u);
        c.expect(lhs == rhs, [&] {
            return "merge corollary fails at v=" + v.str() + " type " + m.str();
        });
    }
    return c;
}

// Ordinary MLQ types to sweep: packed compositions and their one-longer
// variants with a vanishing top multiplicity.
std::vector<std::pair<TypeVector, int>> mlq_type_sweep(int n) {
    std::vector<std::pair<TypeVector, int>> out;
    for (const TypeVector& m : packed_types(n)) {
        out.push_back({m, m.num_classes()});
        out.push_back({m, m.num_classes() + 1});
    }
    return out;
}

Checker mlq_interlacing(const Options& opt) {
    Checker c;
    for (int n = 1; n <= std::min(opt.n, 5); ++n) {
        for (auto& [m, ell] : mlq_type_sweep(n)) {
            const Word ones = Word::ones(n);
            enumerate_mlqs(m, ell, {}, n, [&](const MLQ& q) {
                Word u = q.apply(ones);
                bool alpha = u.type() == m && weakly_decreasing_up_to(u, ell - 1);
                bool beta = is_interlacing(q);
                c.expect(alpha == beta, [&] {
                    return "interlacing equivalence fails for " + q.to_json();
                });
            });
        }
    }
    return c;
}

Checker mlq_labeling(const Options& opt) {
    Checker c;
    for (int n = 1; n <= std::min(opt.n, 5); ++n) {
        for (auto& [m, ell] : mlq_type_sweep(n)) {
            enumerate_mlqs(m, ell, {}, n, [&](const MLQ& q) {
                c.expect(canonical_labeling(q) == canonical_labeling_recursive(q), [&] {
                    return "labeling mismatch for " + q.to_json();
                });
            });
        }
    }
    return c;
}

Checker mlq_nonvanishing(const Options& opt) {
    Checker c;
    for (int n = 1; n <= std::min(opt.n, 5); ++n) {
        for_each_packed_word(n, [&](const Word& u) {
            MLQ w = witness_mlq(u);
            c.expect(w.apply(Word::ones(n)) == u,
                     [&] { return "witness MLQ misses " + u.str(); });
            Monomial expect(n);
            int ell = u.max_letter();
            for (int j = 1; j <= n; ++j)
                for (int t = 0; t < ell - u.letter(j); ++t) expect.multiply_by_variable(j);
            c.expect(w.weight() == Polynomial::monomial(expect),
                     [&] { return "witness weight wrong for " + u.str(); });
        });
    }
    return c;
}

// ----------------------------------------------------------------- rmx ----

Checker rmx_dual_involution(const Options& opt) {
    Checker c;
    auto check = [&](const Configuration& conf) {
        Configuration dual = dual_configuration(conf);
        c.expect(dual_configuration(dual) == conf,
                 [&] { return "dual involution fails at q1=" + conf.q1.str() + " q2=" + conf.q2.str(); });
        c.expect(dual.weight() == conf.weight(),
                 [&] { return "dual weight fails at q1=" + conf.q1.str() + " q2=" + conf.q2.str(); });
        c.expect(std::abs(conf.q1.size() - conf.q2.size()) ==
                     static_cast<int>(sp_record(conf).unmatched.size()),
                 [&] { return "unmatched count wrong at q1=" + conf.q1.str() + " q2=" + conf.q2.str(); });
    };
    for (int n = 1; n <= std::min(opt.n, 6); ++n)
        for_each_queue(n, [&](const Queue& q1) {
            for_each_queue(n, [&](const Queue& q2) { check({q1, q2, n}); });
        });
    std::mt19937_64 rng(opt.seed + 4);
    for (int n : {7, 8})
        for (int trial = 0; trial < 20000; ++trial) {
            Queue q1 = Queue::from_mask(rng() & ((1ULL << n) - 1));
            Queue q2 = Queue::from_mask(rng() & ((1ULL << n) - 1));
            check({q1, q2, n});
        }
    return c;
}

Checker rmx_action_invariance(const Options& opt) {
    Checker c;
    for (int n = 1; n <= std::min(opt.n, 5); ++n) {
        for_each_queue(n, [&](const Queue& q1) {
            for_each_queue(n, [&](const Queue& q2) {
                Configuration conf{q1, q2, n};
                Configuration dual = dual_configuration(conf);
                for_each_word(n, 3, [&](const Word& w) {
                    c.expect(conf.apply(w) == dual.apply(w), [&] {
                        return "C'(w) != C(w) at q1=" + q1.str() + " q2=" + q2.str() +
                               " w=" + w.str();
                    });
                });
            });
        });
    }
    return c;
}

Checker rmx_braid(const Options& opt) {
    Checker c;
    for (int n = 1; n <= std::min(opt.n, 6); ++n) {
        for_each_queue(n, [&](const Queue& q1) {
            for_each_queue(n, [&](const Queue& q2) {
                for_each_queue(n, [&](const Queue& q3) {
                    QueueTuple qs{q1, q2, q3};
                    QueueTuple a = s_action(1, s_action(2, s_action(1, qs, n), n), n);
                    QueueTuple b = s_action(2, s_action(1, s_action(2, qs, n), n), n);
                    c.expect(a == b, [&] {
                        return "braid fails at (" + q1.str() + ")(" + q2.str() + ")(" +
                               q3.str() + ")";
                    });
                });
            });
        });
    }
    return c;
}

Checker rmx_word_oracle(const Options& opt) {
    Checker c;
    for (int n = 1; n <= std::min(opt.n, 5); ++n) {
        std::vector<Queue> all;
        for_each_queue(n, [&](const Queue& q) { all.push_back(q); });
        for (int k = 2; k <= 3; ++k) {
            std::vector<int> idx(k, 0);
            while (true) {
                QueueTuple qs;
                for (int t = 0; t < k; ++t) qs.push_back(all[idx[t]]);
                for (int i = 1; i < k; ++i) {
                    QueueTuple norm = qs;
                    if (qs[i - 1].size() != qs[i].size()) {
                        // Rotate an unbalanced site of levels (i, i+1) to site 1.
                        auto unb =
                            sp_record({qs[i - 1], qs[i], n}).unbalanced_sites();
                        for (int shift = 0; shift < unb.front() - 1; ++shift)
                            norm = cyclic_shift_tuple(norm, n);
                    }
                    c.expect(word_encoding(s_action(i, norm, n), n) ==
                                 sigma_i_word(i, word_encoding(norm, n)),
                             [&] {
                                 std::ostringstream os;
                                 os << "word oracle fails, n=" << n << " i=" << i << " tuple";
                                 for (const Queue& q : norm) os << " (" << q.str() << ")";
                                 return os.str();
                             });
                }
                int t = k - 1;
                while (t >= 0 && idx[t] + 1 == static_cast<int>(all.size())) idx[t--] = 0;
                if (t < 0) break;
                ++idx[t];
            }
        }
    }
    return c;
}

Checker rmx_lower_set(const Options& opt) {
    Checker c;
    for (int n = 1; n <= std::min(opt.n, 5); ++n) {
        for_each_packed_word(n, [&](const Word& u) {
            std::vector<int> ks{0};
            for (int p : u.type().partial_sums()) ks.push_back(p);
            for_each_queue(n, [&](const Queue& q) {
                Word qu = queue_apply(q, u);
                for (int k : ks) {
                    Configuration conf{lower_set(u, k), q, n};
                    c.expect(dual_configuration(conf).q2 == lower_set(qu, k), [&] {
                        return "lower-set proposition fails at u=" + u.str() +
                               " q=" + q.str() + " k=" + std::to_string(k);
                    });
                }
            });
        });
    }
    return c;
}

Checker rmx_reconstruction(const Options& opt) {
    Checker c;
    for (int n = 1; n <= std::min(opt.n, 5); ++n) {
        for_each_packed_word(n, [&](const Word& u) {
            // Rebuild the word from its lower sets.
            TypeVector m = u.type();
            std::vector<int> letters(n, 0);
            for (int i = 1; i <= m.num_classes(); ++i) {
                Queue hi = lower_set(u, m.partial_sum(i));
                Queue lo = lower_set(u, m.partial_sum(i - 1));
                for (int s : hi.sites())
                    if (!lo.contains(s)) letters[s - 1] = i;
            }
            c.expect(Word(letters) == u, [&] { return "reconstruction fails at " + u.str(); });
        });
    }
    return c;
}

Checker rmx_duality_compat(const Options& opt) {
    Checker c;
    for (int n = 1; n <= std::min(opt.n, 5); ++n) {
        for_each_queue(n, [&](const Queue& q1) {
            for_each_queue(n, [&](const Queue& q2) {
                Configuration conf{q1, q2, n};
                Configuration dual = dual_configuration(conf);
                Configuration star{contragredient_queue(q1, n), contragredient_queue(q2, n), n};
                Configuration want{contragredient_queue(dual.q1, n),
                                   contragredient_queue(dual.q2, n), n};
                c.expect(dual_configuration(star) == want, [&] {
                    return "contragredient/dual compatibility fails at q1=" + q1.str() +
                           " q2=" + q2.str();
                });
            });
        });
    }
    return c;
}

Checker rmx_cyclic_symmetry(const Options& opt) {
    Checker c;
    for (int n = 2; n <= std::min(opt.n, 5); ++n) {
        for (const TypeVector& m : packed_types(n)) {
            int ell = m.num_classes();
            for (const auto& twist : permutations_of(ell - 1)) {
                auto table = spectral_weight_table(m, ell, twist, n);
                for (const auto& [u, swt] : table) {
                    Word shifted = cyclic_shift(u);
                    auto it = table.find(shifted);
                    c.expect(it != table.end() && swt.shift_variables(-1) == it->second, [&] {
                        return "cyclic symmetry fails at u=" + u.str();
                    });
                }
            }
        }
    }
    return c;
}

// ------------------------------------------------------------------ jt ----

Checker jt_lgv(const Options& opt) {
    Checker c;
    std::mt19937_64 rng(opt.seed + 5);
    int done = 0;
    while (done < 50) {
        int k = 1 + static_cast<int>(rng() % 3);
        // Staircase endpoints inside a 6x6 box with y in [1, 6].
        VertexTuple A(k), B(k);
        int ax = 1 + static_cast<int>(rng() % 5);
        int ay = 1;
        for (int i = 0; i < k; ++i) {
            A[i] = {ax, ay};
            ax -= static_cast<int>(rng() % 2);
            ay += static_cast<int>(rng() % 2);
        }
        bool ok = true;
        int bx = 6, by = 1 + static_cast<int>(rng() % 2);
        for (int i = 0; i < k; ++i) {
            B[i] = {bx, by};
            bx -= static_cast<int>(rng() % 2);
            by += 1 + static_cast<int>(rng() % 2);
            if (B[i].x < A[i].x || B[i].y < A[i].y) ok = false;
            if (B[i].y > 6) ok = false;
        }
        if (!ok || !lgv_admissible(A, B)) continue;
        ++done;
        bool admissible = false;
        Polynomial det = lgv_determinant(A, B, 6, &admissible);
        c.expect(admissible, "generated tuple not admissible");
        c.expect(det == nilp_sum(A, B, 6), [&] {
            std::ostringstream os;
            os << "LGV identity fails for tuple";
            for (int i = 0; i < k; ++i)
                os << " A" << i << "=(" << A[i].x << ',' << A[i].y << ")->B" << i << "=("
                   << B[i].x << ',' << B[i].y << ")";
            return os.str();
        });
    }
    return c;
}

void for_each_pseudo_partition(int max_total, const std::function<void(const PseudoPartition&)>& fn) {
    PseudoPartition lambda;
    auto rec = [&](auto&& self, int total) -> void {
        if (!lambda.empty()) fn(lambda);
        int cap = lambda.empty() ? max_total : lambda.back() + 1;
        for (int next = 1; next <= std::min(cap, max_total - total); ++next) {
            lambda.push_back(next);
            self(self, total + next);
            lambda.pop_back();
        }
    };
    rec(rec, 0);
    (void)max_total;
}

Checker jt_tableau_det(const Options&) {
    Checker c;
    const int N = 5;
    for_each_pseudo_partition(6, [&](const PseudoPartition& lambda) {
        const int k = static_cast<int>(lambda.size());
        if (k > N) return;
        // All strictly increasing surfaces in [N].
        std::vector<int> s(k);
        auto rec = [&](auto&& self, int pos, int from) -> void {
            if (pos == k) {
                c.expect(sst_sum_enumerated(lambda, s, N) == sst_sum_determinant(lambda, s, N),
                         [&] {
                             std::ostringstream os;
                             os << "tableau determinant fails at lambda=(";
                             for (int v : lambda) os << v << ' ';
                             os << ") s=(";
                             for (int v : s) os << v << ' ';
                             os << ")";
                             return os.str();
                         });
                return;
            }
            for (int v = from; v <= N; ++v) {
                s[pos] = v;
                self(self, pos + 1, v + 1);
            }
        };
        rec(rec, 0, 1);
    });
    return c;
}

Checker jt_determinant(const Options& opt) {
    Checker c;
    for (int n = 1; n <= opt.n; ++n) {
        // Types (m_1, ..., m_{ell-1}) with all parts positive and sum r <= n.
        for (int r = 1; r <= n; ++r) {
            for (unsigned mask = 0; mask < (1u << (r - 1)); ++mask) {
                std::vector<int> parts;
                int run = 1;
                for (int i = 0; i < r - 1; ++i) {
                    if ((mask >> i) & 1u) ++run;
                    else {
                        parts.push_back(run);
                        run = 1;
                    }
                }
                parts.push_back(run);
                const int ell = static_cast<int>(parts.size()) + 1;
                std::vector<int> mult = parts;
                mult.push_back(n - r);
                TypeVector m{mult};
                auto table = spectral_weight_table(m, ell, {}, n);
                // v: parts[j] copies of letter ell-1-j ... descending.
                std::vector<int> v;
                for (int j = static_cast<int>(parts.size()); j >= 1; --j)
                    for (int t = 0; t < parts[j - 1]; ++t) v.push_back(j);
                std::vector<int> comb(r);
                for (int t = 0; t < r; ++t) comb[t] = t + 1;
                while (true) {
                    SurfaceSpec spec{comb, v, ell};
                    Word u = u_of_v(spec, n);
                    c.expect(table.count(u) && jt_spectral_weight(spec, n) == table.at(u), [&] {
                        return "determinant theorem fails at u=" + u.str() +
                               " n=" + std::to_string(n);
                    });
                    int t = r - 1;
                    while (t >= 0 && comb[t] == n - r + t + 1) --t;
                    if (t < 0) break;
                    ++comb[t];
                    for (int s2 = t + 1; s2 < r; ++s2) comb[s2] = comb[s2 - 1] + 1;
                }
            }
        }
    }
    return c;
}

Checker jt_p_bijection(const Options& opt) {
    Checker c;
    for (int n = 1; n <= std::min(opt.n, 5); ++n) {
        for (auto& [m, ell] : mlq_type_sweep(n)) {
            if (ell < 2) continue;
            const Word ones = Word::ones(n);
            enumerate_mlqs(m, ell, {}, n, [&](const MLQ& q) {
                Tableau t = tableau_of_mlq(q);
                c.expect(t.weight(n) == q.weight(),
                         [&] { return "P not weight-preserving for " + q.to_json(); });
                std::vector<int> top = q.queue(ell - 1).sites();
                c.expect(t.surface() == top,
                         [&] { return "P surface wrong for " + q.to_json(); });
                bool inter = is_interlacing(q);
                c.expect(t.semistandard() == inter,
                         [&] { return "P semistandardness mismatch for " + q.to_json(); });
                c.expect(mlq_of_tableau(t, m, ell, n) == q,
                         [&] { return "P not injective on " + q.to_json(); });
                if (inter) {
                    Word u = q.apply(ones);
                    std::vector<int> small;
                    for (int s = 1; s <= n; ++s)
                        if (u.letter(s) <= ell - 1) small.push_back(s);
                    c.expect(small == top, [&] {
                        return "interlacing letters not on the top queue for " + q.to_json();
                    });
                }
            });
        }
    }
    return c;
}

Checker jt_lacunar(const Options&) {
    Checker c;
    const int n = 8;
    const std::vector<int> B{1, 2, 5, 6, 8};
    const std::vector<int> T{1, 4};
    c.expect(is_lacunar(T) && !is_lacunar({1, 2}), "lacunarity test broken");
    c.expect(merged_w0_word(B, T, n) == Word::parse("33442141"),
             "merged w0 word is not 33442141");
    Polynomial psi = psi_T(B, T, n);
    Polynomial e1 = elementary_sym_prefix(1, n, n), e4 = elementary_sym_prefix(4, n, n);
    Polynomial brute = spectral_weight(Word::parse("33442141"));
    c.expect(psi == e1 * e4 * brute, "psi(T) != e1 e4 <33442141>");
    // The displayed 5x5 determinant, columns h_i[1], h_i[2], h_i[5], h_i[6], h_i[8].
    auto h = [&](int i, int k) { return complete_hom_prefix(i, k, n); };
    std::vector<std::vector<Polynomial>> mat = {
        {h(0, 1), h(-1, 2), h(-1, 5), h(-1, 6), h(-2, 8)},
        {h(1, 1), h(0, 2), h(0, 5), h(0, 6), h(-1, 8)},
        {h(2, 1), h(1, 2), h(1, 5), h(1, 6), h(0, 8)},
        {h(3, 1), h(2, 2), h(2, 5), h(2, 6), h(1, 8)},
        {h(4, 1), h(3, 2), h(3, 5), h(3, 6), h(2, 8)},
    };
    Monomial xb(n);
    for (int b : B) xb.multiply_by_variable(b);
    Polynomial displayed = Polynomial::monomial(xb) * e1 * e4 * poly_det(mat);
    c.expect(psi == displayed, "psi(T) != displayed 5x5 determinant expression");
    return c;
}

Checker jt_lacunar_chain(const Options&) {
    Checker c;
    const int n = 8;
    const std::vector<int> B{1, 2, 5, 6, 8};
    const std::vector<int> T{1, 4};
    c.expect(sigma_S_word(B, {}, n) == Word::parse("54663261"), "sigma_emptyset word wrong");
    c.expect(sigma_S_word(B, {4}, n) == Word::parse("45663261"), "sigma_{4} word wrong");
    c.expect(sigma_S_word(B, {1}, n) == Word::parse("54663162"), "sigma_{1} word wrong");
    c.expect(sigma_S_word(B, T, n) == Word::parse("45663162"), "sigma_{1,4} word wrong");
    Polynomial e1 = elementary_sym_prefix(1, n, n), e4 = elementary_sym_prefix(4, n, n);
    Polynomial a = spectral_weight(Word::parse("44553251"));
    Polynomial b = spectral_weight(Word::parse("44553152"));
    Polynomial low = spectral_weight(Word::parse("33442141"));
    c.expect(low * e1 == a + b, "chain step <33442141> e1 != <44553251> + <44553152>");
    c.expect(psi_T(B, T, n) == e4 * (a + b), "psi(T) != e4 (<44553251> + <44553152>)");
    c.expect(psi_T(B, {}, n) == spectral_weight_declared(Word::parse("54663261"), 6),
             "psi(empty) != <w0>");
    return c;
}

// --------------------------------------------------------------- tasep ----

std::vector<std::pair<TypeVector, std::vector<int>>> tasep_types(int n) {
    // Pairs (type, S) with S the merged-set encoding.
    std::vector<std::pair<TypeVector, std::vector<int>>> out;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> S;
        for (int i = 1; i <= n - 1; ++i)
            if ((mask >> (i - 1)) & 1u) S.push_back(i);
        // Type with partial sums [n-1] \ S.
        std::vector<int> parts;
        int prev = 0;
        for (int p = 1; p <= n - 1; ++p)
            if (!((mask >> (p - 1)) & 1u)) {
                parts.push_back(p - prev);
                prev = p;
            }
        parts.push_back(n - prev);
        out.push_back({TypeVector(parts), S});
    }
    return out;
}

Checker tasep_stationary(const Options& opt) {
    Checker c;
    for (int n = 2; n <= std::min(opt.n, 5); ++n) {
        for (const TypeVector& m : packed_types(n)) {
            StateSpace space(m, n);
            std::vector<Rational> pi = stationary_distribution(space);
            auto table = spectral_weight_table(m, m.num_classes(), {}, n);
            long long total = 0;
            std::vector<long long> counts(space.size(), 0);
            for (int i = 0; i < space.size(); ++i) {
                auto it = table.find(space.word(i));
                counts[i] = it == table.end() ? 0 : it->second.eval_all_ones();
                total += counts[i];
            }
            for (int i = 0; i < space.size(); ++i) {
                c.expect(pi[i] == make_rational(counts[i], total), [&] {
                    return "stationary != MLQ counts at " + space.word(i).str() + " type " +
                           m.str();
                });
            }
        }
    }
    return c;
}

Checker tasep_intertwining(const Options& opt) {
    Checker c;
    for (int n = 2; n <= std::min(opt.n, 5); ++n) {
        for (auto& [m, S] : tasep_types(n)) {
            StateSpace space(m, n);
            RationalMatrix M = operator_of_transition(transition_matrix(space));
            for (int i = 1; i <= n - 1; ++i) {
                bool in_S = std::find(S.begin(), S.end(), i) != S.end();
                if (!in_S) {
                    // Phi_i: merge at partial sum i.
                    StateSpace target(m.merged_at(i), n);
                    RationalMatrix tm = operator_of_transition(transition_matrix(target));
                    RationalMatrix phi = phi_operator(space, target, i);
                    c.expect(rat_mul(phi, M) == rat_mul(tm, phi), [&] {
                        return "Phi intertwining fails, type " + m.str() + " i=" +
                               std::to_string(i);
                    });
                } else {
                    StateSpace target(m.split_at(i), n);
                    RationalMatrix tm = operator_of_transition(transition_matrix(target));
                    RationalMatrix psi = psi_operator(space, target, i);
                    c.expect(rat_mul(psi, M) == rat_mul(tm, psi), [&] {
                        return "Psi intertwining fails, type " + m.str() + " i=" +
                               std::to_string(i);
                    });
                }
            }
        }
    }
    return c;
}

Checker tasep_psi_tilde_commute(const Options& opt) {
    Checker c;
    for (int n = 2; n <= std::min(opt.n, 5); ++n) {
        for (auto& [m, S] : tasep_types(n)) {
            for (std::size_t a = 0; a < S.size(); ++a)
                for (std::size_t b = a + 1; b < S.size(); ++b) {
                    int i = S[a], j = S[b];
                    StateSpace src(m, n);
                    StateSpace via_i(m.split_at(i), n);
                    StateSpace via_j(m.split_at(j), n);
                    StateSpace dst(m.split_at(i).split_at(j), n);
                    PolyMatrix left =
                        poly_mul(psi_tilde_operator(via_i, dst, j), psi_tilde_operator(src, via_i, i));
                    PolyMatrix right =
                        poly_mul(psi_tilde_operator(via_j, dst, i), psi_tilde_operator(src, via_j, j));
                    c.expect(left == right, [&] {
                        return "PsiTilde commutativity fails, type " + m.str() + " i=" +
                               std::to_string(i) + " j=" + std::to_string(j);
                    });
                }
        }
    }
    return c;
}

Checker tasep_specialization(const Options& opt) {
    Checker c;
    for (int n = 2; n <= std::min(opt.n, 5); ++n) {
        for (auto& [m, S] : tasep_types(n)) {
            StateSpace space(m, n);
            for (int i : S) {
                StateSpace target(m.split_at(i), n);
                RationalMatrix psi = psi_operator(space, target, i);
                PolyMatrix tilde = psi_tilde_operator(space, target, i);
                for (int r = 0; r < target.size(); ++r)
                    for (int s = 0; s < space.size(); ++s)
                        c.expect(make_rational(tilde[r][s].eval_all_ones()) == psi[r][s],
                                 "PsiTilde at x=1 differs from Psi");
            }
        }
    }
    return c;
}

Checker tasep_sampler(const Options& opt) {
    Checker c;
    const int n = 4;
    TypeVector m{{1, 2, 1}};
    StateSpace space(m, n);
    std::vector<Rational> pi = stationary_distribution(space);
    const long long steps = 100000;
    std::mt19937_64 rng(opt.seed + 6);
    Word u = space.word(0);
    // Burn-in, then count.
    for (int t = 0; t < 1000; ++t) u = queue_chain_step(u, 1, rng);
    std::vector<long long> counts(space.size(), 0);
    for (long long t = 0; t < steps; ++t) {
        u = queue_chain_step(u, 1, rng);
        ++counts[space.index_of(u)];
    }
    for (int i = 0; i < space.size(); ++i) {
        double p = pi[i].get_d();
        double mean = static_cast<double>(steps) * p;
        double sd = std::sqrt(static_cast<double>(steps) * p * (1 - p));
        c.expect(std::abs(counts[i] - mean) <= 3 * sd, [&] {
            std::ostringstream os;
            os << "sampler off at " << space.word(i).str() << ": count " << counts[i]
               << " expected " << mean << " sd " << sd;
            return os.str();
        });
    }
    return c;
}

struct SuiteEntry {
    const char* name;
    Checker (*fn)(const Options&);
};

const SuiteEntry kSuites[] = {
    {"core.order-independence", core_order_independence},
    {"core.type-law", core_type_law},
    {"core.duality", core_duality},
    {"core.merge-commutation", core_merge_commutation},
    {"poly.newton", poly_newton},
    {"poly.roundtrip", poly_roundtrip},
    {"poly.det-multilinear", poly_det_multilinear},
    {"mlq.sigma-independence", mlq_sigma_independence},
    {"mlq.merge-theorem", mlq_merge_theorem},
    {"mlq.merge-corollary", mlq_merge_corollary},
    {"mlq.interlacing", mlq_interlacing},
    {"mlq.labeling", mlq_labeling},
    {"mlq.nonvanishing", mlq_nonvanishing},
    {"rmx.dual-involution", rmx_dual_involution},
    {"rmx.action-invariance", rmx_action_invariance},
    {"rmx.braid", rmx_braid},
    {"rmx.word-oracle", rmx_word_oracle},
    {"rmx.lower-set", rmx_lower_set},
    {"rmx.reconstruction", rmx_reconstruction},
    {"rmx.duality-compat", rmx_duality_compat},
    {"rmx.cyclic-symmetry", rmx_cyclic_symmetry},
    {"jt.lgv", jt_lgv},
    {"jt.tableau-det", jt_tableau_det},
    {"jt.determinant", jt_determinant},
    {"jt.p-bijection", jt_p_bijection},
    {"jt.lacunar", jt_lacunar},
    {"jt.lacunar-chain", jt_lacunar_chain},
    {"tasep.stationary", tasep_stationary},
    {"tasep.intertwining", tasep_intertwining},
    {"tasep.psi-tilde-commute", tasep_psi_tilde_commute},
    {"tasep.specialization", tasep_specialization},
    {"tasep.sampler", tasep_sampler},
};

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const SuiteEntry& e : kSuites) names.push_back(e.name);
    return names;
}

bool has_suite(const std::string& name) {
    for (const SuiteEntry& e : kSuites)
        if (name == e.name) return true;
    return false;
}

Result run_suite(const std::string& name, const Options& opt) {
    for (const SuiteEntry& e : kSuites) {
        if (name != e.name) continue;
        auto t0 = std::chrono::steady_clock::now();
        Checker c = e.fn(opt);
        auto t1 = std::chrono::steady_clock::now();
        Result r;
        r.suite = name;
        r.pass = c.pass;
        r.checks = c.checks;
        r.detail = c.detail;
        r.seconds = std::chrono::duration<double>(t1 - t0).count();
        return r;
    }
    throw std::invalid_argument("unknown verification suite: " + name);
}

std::vector<Result> run_all(const Options& opt) {
    std::vector<Result> out;
    for (const SuiteEntry& e : kSuites) out.push_back(run_suite(e.name, opt));
    return out;
}

}  // namespace mlqs::verify
