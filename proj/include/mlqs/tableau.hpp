#pragma once

#include <string>
#include <vector>

#include "mlqs/multiline.hpp"
#include "mlqs/polynomial.hpp"
#include "mlqs/word.hpp"

namespace mlqs {

// Row lengths lambda_1, lambda_2, ... with lambda_i + 1 >= lambda_{i+1};
// unlike a partition, a row may exceed its predecessor by one.
using PseudoPartition = std::vector<int>;
bool is_pseudo_partition(const PseudoPartition& lambda);

// English-notation filling of diag(lambda); rows_[i] has lambda_{i+1} entries.
class Tableau {
public:
    Tableau() = default;
    explicit Tableau(std::vector<std::vector<int>> rows);

    int num_rows() const { return static_cast<int>(rows_.size()); }
    PseudoPartition shape() const;
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int entry(int i, int j) const { return rows_[i - 1][j - 1]; }   // 1-based

    bool semistandard() const;    // rows weakly increase, columns strictly (across gaps)
    std::vector<int> surface() const;
    Polynomial weight(int ambient) const;
    std::string str() const;

    bool operator==(const Tableau&) const = default;

private:
    std::vector<std::vector<int>> rows_;
};

std::vector<Tableau> enumerate_sst(const PseudoPartition& lambda, const std::vector<int>& surface);
Polynomial sst_sum_enumerated(const PseudoPartition& lambda, const std::vector<int>& surface,
                              int ambient);
// (prod x_{s_i}) det(h_{lambda_j - j + i - 1}(x_1..x_{s_j})).
Polynomial sst_sum_determinant(const PseudoPartition& lambda, const std::vector<int>& surface,
                               int ambient);

// lambda^m = (1^{m_{L-1}}, 2^{m_{L-2}}, ..., (L-1)^{m_1}).
PseudoPartition pseudo_partition_of_type(const TypeVector& m, int ell);

// The injection P from MLQs of type m to tableaux of shape lambda^m: column j
// stacks the descending blocks q_{L-1}^(L-j), ..., q_j^(1), each written
// increasingly. Weight-preserving; semistandard exactly on interlacing MLQs.
Tableau tableau_of_mlq(const MLQ& q);
MLQ mlq_of_tableau(const Tableau& t, const TypeVector& m, int ell, int n);

// Word u(v): letters v_j at sites b_j and ell everywhere else, for a weakly
// decreasing v covering [ell-1].
struct SurfaceSpec {
    std::vector<int> sites;    // B, strictly increasing
    std::vector<int> values;   // v, weakly decreasing
    int num_classes = 0;       // ell
};
void validate_surface_spec(const SurfaceSpec& spec, int n);
Word u_of_v(const SurfaceSpec& spec, int n);

// (prod_{b in B} x_b) det(h_{gamma_j + i - j - 1}(x_1..x_{b_j})) with
// gamma_j = ell - v_j; equals the spectral weight of u(v) with ell declared
// classes.
Polynomial jt_spectral_weight(const SurfaceSpec& spec, int n);

bool is_lacunar(const std::vector<int>& S);
// One-line sigma_S = (prod_{i in S} s_i) w_0 in S_r, as the word u(v_{sigma_S})
// with ell = r + 1.
Word sigma_S_word(const std::vector<int>& B, const std::vector<int>& S, int n);
// The word \/_T w_0 lifted to W_n (values at B, r - |T| + 1 elsewhere).
Word merged_w0_word(const std::vector<int>& B, const std::vector<int>& T, int n);

// psi(T) = (prod_{t in T} e_t(x_1..x_n)) <\/_T w_0> via the lacunar
// determinant formula with gamma_j = j - #{t in T : t > r - j}.
Polynomial psi_T(const std::vector<int>& B, const std::vector<int>& T, int n);
// Moebius inversion <sigma_S> = sum_{T subset S} (-1)^{|S|-|T|} psi(T);
// S must be lacunar.
Polynomial swt_sigma_S(const std::vector<int>& B, const std::vector<int>& S, int n);

}  // namespace mlqs
