#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mlqs/configuration.hpp"
#include "mlqs/lattice.hpp"
#include "mlqs/multiline.hpp"
#include "mlqs/tableau.hpp"
#include "mlqs/tasep.hpp"
#include "mlqs/verify.hpp"
#include "mlqs/word.hpp"

using namespace mlqs;
using nlohmann::json;

namespace {

std::vector<int> parse_ints(const std::string& text) {
    std::vector<int> out;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (!tok.empty()) out.push_back(std::stoi(tok));
    }
    return out;
}

std::vector<Queue> parse_queue_list(const std::string& text) {
    std::vector<Queue> out;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ';')) out.push_back(Queue::parse(tok));
    return out;
}

void print_polynomial(const Polynomial& p, const std::string& format) {
    if (format == "json") std::cout << p.to_json() << "\n";
    else std::cout << p.str() << "\n";
}

json matrix_json(const RationalMatrix& m) {
    json rows = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& v : row) r.push_back(rational_str(v));
        rows.push_back(r);
    }
    return rows;
}

int run_verify(const std::string& suite, const verify::Options& opt) {
    std::vector<verify::Result> results;
    if (suite == "all") {
        results = verify::run_all(opt);
    } else if (verify::has_suite(suite)) {
        results.push_back(verify::run_suite(suite, opt));
    } else {
        std::cerr << "error: unknown suite '" << suite << "'; available:\n";
        for (const auto& name : verify::suite_names()) std::cerr << "  " << name << "\n";
        return 1;
    }
    bool all_pass = true;
    for (const auto& r : results) {
        std::printf("%-28s %s  (%lld checks, %.2fs)\n", r.suite.c_str(),
                    r.pass ? "PASS" : "FAIL", r.checks, r.seconds);
        if (!r.pass) {
            std::printf("    %s\n", r.detail.c_str());
            all_pass = false;
        }
    }
    return all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multiline queues with spectral parameters"};
    app.require_subcommand(1);

    int n = 0;
    std::string format = "text";
    unsigned seed = 20250801;
    app.add_option("-n", n, "ring size")->configurable(false);
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", seed, "random seed");

    // apply
    auto* apply_cmd = app.add_subcommand("apply", "apply a queue or an MLQ to a word");
    std::string apply_queue, apply_word, apply_queues;
    apply_cmd->add_option("--queue", apply_queue, "queue sites, e.g. 1,4,8,9");
    apply_cmd->add_option("--queues", apply_queues, "semicolon-separated queues (an MLQ)");
    apply_cmd->add_option("--word", apply_word, "input word")->required();
    apply_cmd->fallthrough();

    // swt
    auto* swt_cmd = app.add_subcommand("swt", "spectral weight of packed words");
    std::vector<std::string> swt_words;
    std::string swt_sigma;
    int swt_ell = 0;
    swt_cmd->add_option("--word", swt_words, "packed word (repeatable; one type per run)")
        ->required();
    swt_cmd->add_option("--sigma", swt_sigma, "twist permutation, one-line, e.g. 2,1");
    swt_cmd->add_option("--ell", swt_ell, "declared class count (default: from the word)");
    swt_cmd->fallthrough();

    // dual
    auto* dual_cmd = app.add_subcommand("dual", "dual configuration of a queue pair");
    std::string dual_q1, dual_q2;
    bool dual_trace = false;
    dual_cmd->add_option("--q1", dual_q1, "first queue")->required();
    dual_cmd->add_option("--q2", dual_q2, "second queue")->required();
    dual_cmd->add_flag("--trace", dual_trace, "print the parenthesis sequence and matching");
    dual_cmd->fallthrough();

    // braid-check
    auto* braid_cmd = app.add_subcommand("braid-check", "exhaustive braid relation check");
    braid_cmd->fallthrough();

    // jt
    auto* jt_cmd = app.add_subcommand("jt", "Jacobi-Trudi determinant for u(v)");
    std::string jt_sites, jt_values;
    bool jt_brute = false;
    jt_cmd->add_option("--sites", jt_sites, "site set B")->required();
    jt_cmd->add_option("--values", jt_values, "weakly decreasing values v")->required();
    jt_cmd->add_flag("--check-bruteforce", jt_brute, "compare against enumeration");
    jt_cmd->fallthrough();

    // psi
    auto* psi_cmd = app.add_subcommand("psi", "lacunar psi(T) determinant formula");
    std::string psi_sites, psi_lacunar;
    psi_cmd->add_option("--sites", psi_sites, "site set B")->required();
    psi_cmd->add_option("--lacunar", psi_lacunar, "lacunar set T");
    psi_cmd->fallthrough();

    // sst
    auto* sst_cmd = app.add_subcommand("sst", "semistandard tableau sums of a pseudo-partition");
    std::string sst_shape, sst_surface;
    sst_cmd->add_option("--shape", sst_shape, "pseudo-partition row lengths")->required();
    sst_cmd->add_option("--surface", sst_surface, "strictly increasing surface")->required();
    sst_cmd->fallthrough();

    // lgv-check
    auto* lgv_cmd = app.add_subcommand("lgv-check", "random LGV determinant checks");
    lgv_cmd->fallthrough();

    // tasep
    auto* tasep_cmd = app.add_subcommand("tasep", "multispecies TASEP computations");
    tasep_cmd->require_subcommand(1);
    auto* stat_cmd = tasep_cmd->add_subcommand("stationary", "exact stationary distribution");
    std::string stat_type;
    bool stat_compare = false, stat_matrix = false;
    stat_cmd->add_option("--type", stat_type, "type multiplicities, e.g. 1,2,1")->required();
    stat_cmd->add_flag("--compare-swt", stat_compare, "compare with MLQ counts at x=1");
    stat_cmd->add_flag("--matrix", stat_matrix, "also print the transition matrix");
    stat_cmd->fallthrough();
    auto* inter_cmd = tasep_cmd->add_subcommand("check-intertwining", "Phi/Psi intertwining sweep");
    inter_cmd->fallthrough();
    auto* sample_cmd = tasep_cmd->add_subcommand("sample", "run the queue-driven chain");
    std::string sample_type, sample_start;
    int sample_i = 1;
    long long sample_steps = 1000;
    sample_cmd->add_option("--type", sample_type, "type multiplicities")->required();
    sample_cmd->add_option("--start", sample_start, "start word (default: sorted word)");
    sample_cmd->add_option("-i,--queue-size", sample_i, "queue size, a partial sum of the type");
    sample_cmd->add_option("--steps", sample_steps, "number of steps");
    sample_cmd->fallthrough();
    tasep_cmd->fallthrough();

    // render
    auto* render_cmd = app.add_subcommand("render", "graveyard / queue diagrams");
    std::string render_queues, render_queue, render_word, render_json;
    render_cmd->add_option("--queues", render_queues, "semicolon-separated queues (an MLQ)");
    render_cmd->add_option("--json", render_json, "MLQ as JSON");
    render_cmd->add_option("--queue", render_queue, "single queue (with --word)");
    render_cmd->add_option("--word", render_word, "input word (with --queue)");
    render_cmd->fallthrough();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the verification suites");
    std::string verify_suite = "all";
    verify_cmd->add_option("--suite", verify_suite, "suite name or 'all'");
    verify_cmd->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (apply_cmd->parsed()) {
            Word u = Word::parse(apply_word);
            Word v = u;
            if (!apply_queues.empty()) {
                for (const Queue& q : parse_queue_list(apply_queues)) v = queue_apply(q, v);
            } else {
                v = queue_apply(Queue::parse(apply_queue), v);
            }
            if (format == "json") std::cout << json{{"word", v.str()}} << "\n";
            else std::cout << v.str() << "\n";
        } else if (swt_cmd->parsed()) {
            std::vector<int> sigma = parse_ints(swt_sigma);
            if (swt_words.size() == 1) {
                Word u = Word::parse(swt_words.front());
                int ell = swt_ell > 0 ? swt_ell : u.type().num_classes();
                print_polynomial(spectral_weight_declared(u, ell, sigma), format);
            } else {
                // Several words of one type: enumerate once, bucket by image.
                std::vector<Word> words;
                for (const std::string& w : swt_words) words.push_back(Word::parse(w));
                TypeVector m = words.front().type();
                for (const Word& w : words)
                    if (!w.packed() || w.type() != m || w.size() != words.front().size())
                        throw std::invalid_argument(
                            "swt: all words must be packed and of one type");
                int ell = swt_ell > 0 ? swt_ell : m.num_classes();
                auto table = spectral_weight_table(m, ell, sigma, words.front().size());
                for (const Word& w : words) {
                    auto it = table.find(w);
                    Polynomial p =
                        it == table.end() ? Polynomial::zero(w.size()) : it->second;
                    if (format == "json")
                        std::cout << json{{"word", w.str()},
                                          {"swt", json::parse(p.to_json())}}
                                  << "\n";
                    else
                        std::cout << w.str() << "  " << p.str() << "\n";
                }
            }
        } else if (dual_cmd->parsed()) {
            if (n <= 0) throw std::invalid_argument("dual: -n is required");
            Configuration c{Queue::parse(dual_q1), Queue::parse(dual_q2), n};
            Configuration d = dual_configuration(c);
            ParenthesisRecord rec = sp_record(c);
            std::vector<int> unb = rec.unbalanced_sites();
            if (format == "json") {
                json j{{"q1", d.q1.sites()}, {"q2", d.q2.sites()}, {"unbalanced", unb}};
                if (dual_trace) j["trace"] = rec.trace();
                std::cout << j << "\n";
            } else {
                std::cout << "q1' = " << d.q1.str() << "\n";
                std::cout << "q2' = " << d.q2.str() << "\n";
                std::cout << "unbalanced = " << Queue(unb).str() << "\n";
                if (dual_trace) std::cout << rec.trace() << "\n";
            }
        } else if (braid_cmd->parsed()) {
            verify::Options opt{n > 0 ? n : 5, seed};
            return run_verify("rmx.braid", opt);
        } else if (jt_cmd->parsed()) {
            if (n <= 0) throw std::invalid_argument("jt: -n is required");
            std::vector<int> sites = parse_ints(jt_sites), values = parse_ints(jt_values);
            int ell = values.empty() ? 0 : *std::max_element(values.begin(), values.end()) + 1;
            SurfaceSpec spec{sites, values, ell};
            Polynomial det = jt_spectral_weight(spec, n);
            if (jt_brute) {
                Polynomial brute = spectral_weight_declared(u_of_v(spec, n), ell);
                if (det != brute) {
                    std::cerr << "MISMATCH: determinant differs from enumeration\n";
                    return 2;
                }
                std::cerr << "ok: determinant matches enumeration for u = "
                          << u_of_v(spec, n).str() << "\n";
            }
            print_polynomial(det, format);
        } else if (psi_cmd->parsed()) {
            if (n <= 0) throw std::invalid_argument("psi: -n is required");
            print_polynomial(psi_T(parse_ints(psi_sites), parse_ints(psi_lacunar), n), format);
        } else if (sst_cmd->parsed()) {
            std::vector<int> shape = parse_ints(sst_shape), surface = parse_ints(sst_surface);
            int ambient = n > 0 ? n : *std::max_element(surface.begin(), surface.end());
            Polynomial enumerated = sst_sum_enumerated(shape, surface, ambient);
            Polynomial det = sst_sum_determinant(shape, surface, ambient);
            if (format == "json") {
                std::cout << json{{"enumerated", json::parse(enumerated.to_json())},
                                  {"determinant", json::parse(det.to_json())},
                                  {"equal", enumerated == det}}
                          << "\n";
            } else {
                std::cout << "enumeration: " << enumerated.str() << "\n";
                std::cout << "determinant: " << det.str() << "\n";
                std::cout << (enumerated == det ? "equal" : "DIFFER") << "\n";
            }
            if (enumerated != det) return 2;
        } else if (lgv_cmd->parsed()) {
            verify::Options opt{n > 0 ? n : 5, seed};
            return run_verify("jt.lgv", opt);
        } else if (stat_cmd->parsed()) {
            TypeVector m{parse_ints(stat_type)};
            int nn = n > 0 ? n : m.total();
            if (nn != m.total()) throw std::invalid_argument("tasep: type does not sum to n");
            StateSpace space(m, nn);
            std::vector<Rational> pi = stationary_distribution(space);
            bool proportional = true;
            std::vector<long long> counts;
            if (stat_compare) {
                auto table = spectral_weight_table(m, m.num_classes(), {}, nn);
                long long total = 0;
                for (int i = 0; i < space.size(); ++i) {
                    auto it = table.find(space.word(i));
                    counts.push_back(it == table.end() ? 0 : it->second.eval_all_ones());
                    total += counts.back();
                }
                for (int i = 0; i < space.size(); ++i)
                    if (pi[i] != make_rational(counts[i], total)) proportional = false;
            }
            if (format == "json") {
                json j;
                j["states"] = json::array();
                for (int i = 0; i < space.size(); ++i) {
                    json s{{"word", space.word(i).str()}, {"pi", rational_str(pi[i])}};
                    if (stat_compare) s["mlq_count"] = counts[i];
                    j["states"].push_back(s);
                }
                if (stat_compare) j["proportional_to_swt"] = proportional;
                if (stat_matrix) j["transition"] = matrix_json(transition_matrix(space));
                std::cout << j << "\n";
            } else {
                for (int i = 0; i < space.size(); ++i) {
                    std::cout << space.word(i).str() << "  " << rational_str(pi[i]);
                    if (stat_compare) std::cout << "  mlqs=" << counts[i];
                    std::cout << "\n";
                }
                if (stat_compare)
                    std::cout << (proportional ? "stationary matches MLQ counts"
                                               : "MISMATCH with MLQ counts")
                              << "\n";
            }
            if (stat_compare && !proportional) return 2;
        } else if (inter_cmd->parsed()) {
            verify::Options opt{n > 0 ? n : 4, seed};
            int rc = run_verify("tasep.intertwining", opt);
            if (rc) return rc;
            return run_verify("tasep.psi-tilde-commute", opt);
        } else if (sample_cmd->parsed()) {
            TypeVector m{parse_ints(sample_type)};
            int nn = n > 0 ? n : m.total();
            if (nn != m.total()) throw std::invalid_argument("tasep: type does not sum to n");
            StateSpace space(m, nn);
            Word u = sample_start.empty() ? space.word(0) : Word::parse(sample_start);
            std::mt19937_64 rng(seed);
            std::map<Word, long long> counts;
            for (long long t = 0; t < sample_steps; ++t) {
                u = queue_chain_step(u, sample_i, rng);
                ++counts[u];
            }
            if (format == "json") {
                json j = json::array();
                for (auto& [w, c] : counts) j.push_back({{"word", w.str()}, {"count", c}});
                std::cout << j << "\n";
            } else {
                for (auto& [w, c] : counts) std::cout << w.str() << "  " << c << "\n";
            }
        } else if (render_cmd->parsed()) {
            if (!render_json.empty()) {
                std::cout << render_graveyard(MLQ::from_json(render_json)) << "\n";
            } else if (!render_queues.empty()) {
                if (n <= 0) throw std::invalid_argument("render: -n is required with --queues");
                std::cout << render_graveyard(MLQ::ordinary(n, parse_queue_list(render_queues)))
                          << "\n";
            } else if (!render_queue.empty() && !render_word.empty()) {
                std::cout << render_queue_diagram(Queue::parse(render_queue),
                                                  Word::parse(render_word))
                          << "\n";
            } else {
                throw std::invalid_argument("render: need --queues, --json, or --queue/--word");
            }
        } else if (verify_cmd->parsed()) {
            verify::Options opt{n > 0 ? n : 5, seed};
            std::printf("verification at n=%d (expect seconds at n=5, minutes at n=6)\n", opt.n);
            return run_verify(verify_suite, opt);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
