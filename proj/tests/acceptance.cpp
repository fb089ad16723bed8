// Acceptance suite: one line per criterion, exit code = number of failures.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "mlqs/configuration.hpp"
#include "mlqs/multiline.hpp"
#include "mlqs/tableau.hpp"
#include "mlqs/verify.hpp"
#include "mlqs/word.hpp"

using namespace mlqs;

namespace {

struct Criterion {
    bool pass = true;
    std::string detail;

    void expect(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
    void merge(const verify::Result& r) {
        if (!r.pass && pass) {
            pass = false;
            detail = r.suite + ": " + r.detail;
        }
    }
};

Criterion golden_examples() {
    Criterion c;
    c.expect(queue_apply(Queue{1, 4, 8, 9}, Word::parse("346613321")) ==
                 Word::parse("277344511"),
             "q(346613321) != 277344511");

    const int n4 = 4;
    Polynomial swt2312 = Polynomial::parse("x1*x3^2*x4 + x1*x2*x3*x4", n4);
    c.expect(spectral_weight(Word::parse("2312")) == swt2312, "<2312> wrong");
    c.expect(spectral_weight(Word::parse("2312"), {2, 1}) == swt2312, "<2312>_{s1} wrong");

    const int n5 = 5;
    Polynomial swt13234 =
        Polynomial::parse("x1*x2*x3^2*x4", n5) *
        Polynomial::parse("x1^2 + x1*x4 + x1*x5 + x4*x5 + x5^2", n5);
    Polynomial swt13245 =
        Polynomial::parse("x1*x2*x3^2*x4", n5) *
        Polynomial::parse("x1^2 + x1*x4 + x1*x5 + x4^2 + x4*x5 + x5^2", n5) *
        Polynomial::parse("x1*x2*x3 + x1*x2*x5 + x1*x3*x5 + x2*x3*x5", n5);
    Polynomial swt14235 =
        Polynomial::parse("x1*x2*x3^2*x4^2", n5) *
        Polynomial::parse(
            "x1^3*x2 + x1^3*x3 + x1^3*x5 + x1^2*x2*x3 + x1^2*x2*x4 + 2*x1^2*x2*x5"
            " + x1^2*x3*x4 + 2*x1^2*x3*x5 + x1^2*x4*x5 + x1^2*x5^2 + x1*x2*x3*x5"
            " + x1*x2*x4*x5 + 2*x1*x2*x5^2 + x1*x3*x4*x5 + 2*x1*x3*x5^2 + x1*x4*x5^2"
            " + x1*x5^3 + x2*x3*x5^2 + x2*x4*x5^2 + x2*x5^3 + x3*x4*x5^2 + x3*x5^3",
            n5);
    c.expect(spectral_weight(Word::parse("13234")) == swt13234, "<13234> wrong");
    c.expect(spectral_weight(Word::parse("13245")) == swt13245, "<13245> wrong");
    c.expect(spectral_weight(Word::parse("14235")) == swt14235, "<14235> wrong");

    Configuration big{Queue{1, 2, 5, 6, 8, 11, 13, 14, 17, 18, 19},
                      Queue{2, 12, 15, 16, 18, 19, 20}, 20};
    c.expect(sp_record(big).unbalanced_sites() == std::vector<int>{1, 5, 6, 8},
             "n=20 unbalanced set wrong");
    Configuration nine{Queue{1, 4, 5, 6}, Queue{2, 3, 4, 6, 7, 8}, 9};
    Configuration dual = dual_configuration(nine);
    c.expect(dual.q1 == Queue{1, 3, 4, 5, 6, 8} && dual.q2 == Queue{2, 4, 6, 7},
             "n=9 dual configuration wrong");
    return c;
}

struct Line {
    int id;
    const char* title;
    double seconds;
    Criterion result;
};

}  // namespace

int main() {
    std::vector<Line> lines;
    auto run = [&](int id, const char* title, auto&& fn) {
        auto t0 = std::chrono::steady_clock::now();
        Criterion c = fn();
        auto t1 = std::chrono::steady_clock::now();
        lines.push_back({id, title, std::chrono::duration<double>(t1 - t0).count(), c});
        std::printf("criterion %d %-34s %s  (%.1fs)\n", id, title,
                    lines.back().result.pass ? "PASS" : "FAIL", lines.back().seconds);
        if (!lines.back().result.pass)
            std::printf("    %s\n", lines.back().result.detail.c_str());
        std::fflush(stdout);
    };
    auto suites = [&](std::initializer_list<const char*> names, int n) {
        Criterion c;
        verify::Options opt;
        opt.n = n;
        for (const char* name : names) c.merge(verify::run_suite(name, opt));
        return c;
    };

    run(1, "golden examples", golden_examples);
    run(2, "sigma-independence (n<=5)", [&] { return suites({"mlq.sigma-independence"}, 5); });
    run(3, "merge theorem + corollary", [&] {
        return suites({"mlq.merge-theorem", "mlq.merge-corollary"}, 5);
    });
    run(4, "Jacobi-Trudi determinant (n<=6)", [&] { return suites({"jt.determinant"}, 6); });
    run(5, "lacunar corollary (n=8)", [&] {
        return suites({"jt.lacunar", "jt.lacunar-chain"}, 5);
    });
    run(6, "R-matrix structure", [&] {
        Criterion c = suites({"rmx.dual-involution", "rmx.braid"}, 6);
        Criterion d = suites({"rmx.action-invariance", "rmx.word-oracle", "rmx.lower-set"}, 5);
        if (!d.pass && c.pass) c = d;
        return c;
    });
    run(7, "LGV and tableau machinery", [&] {
        return suites({"jt.lgv", "jt.tableau-det", "jt.p-bijection", "mlq.interlacing"}, 5);
    });
    run(8, "TASEP", [&] {
        return suites({"tasep.stationary", "tasep.intertwining", "tasep.psi-tilde-commute",
                       "tasep.specialization", "tasep.sampler"},
                      5);
    });
    run(9, "auxiliary lemmas", [&] {
        return suites({"core.order-independence", "core.type-law", "core.duality",
                       "core.merge-commutation", "rmx.cyclic-symmetry", "mlq.labeling"},
                      5);
    });

    int failures = 0;
    for (const Line& l : lines)
        if (!l.result.pass) ++failures;
    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    else std::printf("all 9 criteria passed\n");
    return failures;
}
