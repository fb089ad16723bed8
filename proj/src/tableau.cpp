#include "mlqs/tableau.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mlqs {

bool is_pseudo_partition(const PseudoPartition& lambda) {
    for (int v : lambda)
        if (v < 1) return false;
    for (std::size_t i = 0; i + 1 < lambda.size(); ++i)
        if (lambda[i + 1] > lambda[i] + 1) return false;
    return true;
}

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    PseudoPartition lambda = shape();
    if (!is_pseudo_partition(lambda))
        throw std::invalid_argument("Tableau: row lengths are not a pseudo-partition");
    for (const auto& row : rows_)
        for (int v : row)
            if (v < 1) throw std::invalid_argument("Tableau: entries must be positive");
}

PseudoPartition Tableau::shape() const {
    PseudoPartition lambda;
    for (const auto& row : rows_) lambda.push_back(static_cast<int>(row.size()));
    return lambda;
}

bool Tableau::semistandard() const {
    for (const auto& row : rows_)
        for (std::size_t j = 0; j + 1 < row.size(); ++j)
            if (row[j] > row[j + 1]) return false;
    // Columns strictly increase between consecutive present cells; gaps in a
    // column still demand strictness, which transitivity gives for free.
    int cols = 0;
    for (const auto& row : rows_) cols = std::max(cols, static_cast<int>(row.size()));
    for (int j = 1; j <= cols; ++j) {
        int prev = 0;
        bool first = true;
        for (int i = 1; i <= num_rows(); ++i) {
            if (static_cast<int>(rows_[i - 1].size()) < j) continue;
            int v = entry(i, j);
            if (!first && v <= prev) return false;
            prev = v;
            first = false;
        }
    }
    return true;
}

std::vector<int> Tableau::surface() const {
    std::vector<int> s;
    for (const auto& row : rows_) s.push_back(row.back());
    return s;
}

Polynomial Tableau::weight(int ambient) const {
    Monomial m(ambient);
    for (const auto& row : rows_)
        for (int v : row) m.multiply_by_variable(v);
    return Polynomial::monomial(m);
}

std::string Tableau::str() const {
    std::ostringstream os;
    for (int i = 0; i < num_rows(); ++i) {
        if (i) os << '\n';
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            if (j) os << ' ';
            os << rows_[i][j];
        }
    }
    return os.str();
}

std::vector<Tableau> enumerate_sst(const PseudoPartition& lambda,
                                   const std::vector<int>& surface) {
    if (!is_pseudo_partition(lambda))
        throw std::invalid_argument("enumerate_sst: bad shape");
    if (lambda.size() != surface.size())
        throw std::invalid_argument("enumerate_sst: surface length mismatch");
    for (std::size_t i = 0; i + 1 < surface.size(); ++i)
        if (surface[i] >= surface[i + 1])
            throw std::invalid_argument("enumerate_sst: surface must strictly increase");
    const int k = static_cast<int>(lambda.size());
    std::vector<std::vector<int>> rows(k);
    for (int i = 0; i < k; ++i) rows[i].assign(lambda[i], 0);
    std::vector<Tableau> out;

    // Nearest filled cell above (i, j), if any.
    auto above = [&](int i, int j) -> int {
        for (int p = i - 1; p >= 0; --p)
            if (static_cast<int>(rows[p].size()) >= j + 1 && rows[p][j] != 0) return rows[p][j];
        return 0;
    };
    auto rec = [&](auto&& self, int i, int j) -> void {
        if (i == k) {
            out.push_back(Tableau(rows));
            return;
        }
        int ni = i, nj = j + 1;
        if (nj == lambda[i]) {
            ni = i + 1;
            nj = 0;
        }
        if (j == lambda[i] - 1) {
            // Rightmost entry pinned by the surface.
            int v = surface[i];
            if (v >= 1 && (j == 0 || rows[i][j - 1] <= v) && above(i, j) < v) {
                rows[i][j] = v;
                self(self, ni, nj);
                rows[i][j] = 0;
            }
            return;
        }
        int lo = std::max(1, j > 0 ? rows[i][j - 1] : 1);
        lo = std::max(lo, above(i, j) + 1);
        // Row entries never exceed the surface entry of their row.
        for (int v = lo; v <= surface[i]; ++v) {
            rows[i][j] = v;
            self(self, ni, nj);
            rows[i][j] = 0;
        }
    };
    rec(rec, 0, 0);
    return out;
}

Polynomial sst_sum_enumerated(const PseudoPartition& lambda, const std::vector<int>& surface,
                              int ambient) {
    Polynomial total(ambient);
    for (const Tableau& t : enumerate_sst(lambda, surface)) total += t.weight(ambient);
    return total;
}

Polynomial sst_sum_determinant(const PseudoPartition& lambda, const std::vector<int>& surface,
                               int ambient) {
    const int k = static_cast<int>(lambda.size());
    if (k == 0) return Polynomial::one(ambient);
    std::vector<std::vector<Polynomial>> mat(k, std::vector<Polynomial>(k));
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            mat[i - 1][j - 1] =
                complete_hom_prefix(lambda[j - 1] - j + i - 1, surface[j - 1], ambient);
    Polynomial det = poly_det(mat);
    Monomial m(ambient);
    for (int s : surface) m.multiply_by_variable(s);
    return det * Polynomial::monomial(m);
}

PseudoPartition pseudo_partition_of_type(const TypeVector& m, int ell) {
    if (!m.packed_below(ell))
        throw std::invalid_argument("pseudo_partition_of_type: type must be packed below ell");
    PseudoPartition lambda;
    for (int v = 1; v <= ell - 1; ++v)
        for (int c = 0; c < m.multiplicity(ell - v); ++c) lambda.push_back(v);
    return lambda;
}

Tableau tableau_of_mlq(const MLQ& q) {
    const int ell = q.num_classes();
    const TypeVector& m = q.type();
    PseudoPartition lambda = pseudo_partition_of_type(m, ell);
    const int k = static_cast<int>(lambda.size());
    BlockDecomposition d = block_decomposition(q);
    std::vector<std::vector<int>> rows(k);
    for (int i = 0; i < k; ++i) rows[i].assign(lambda[i], 0);
    for (int j = 1; j <= ell - 1; ++j) {
        // Column j: blocks q_{ell-1}^(ell-j), q_{ell-2}^(ell-j-1), ..., q_j^(1)
        // stacked top to bottom, each increasing.
        int row = k - m.partial_sum(ell - j);   // first row of column j (0-based)
        for (int h = ell - j; h >= 1; --h) {
            std::vector<int> block = d.blocks[j + h - 2][h - 1];   // q_{j+h-1}^(h)
            std::sort(block.begin(), block.end());
            for (int v : block) rows[row++][j - 1] = v;
        }
    }
    return Tableau(rows);
}

MLQ mlq_of_tableau(const Tableau& t, const TypeVector& m, int ell, int n) {
    PseudoPartition lambda = pseudo_partition_of_type(m, ell);
    if (t.shape() != lambda)
        throw std::invalid_argument("mlq_of_tableau: shape does not match the type");
    const int k = static_cast<int>(lambda.size());
    std::vector<std::vector<int>> queues(ell - 1);
    for (int j = 1; j <= ell - 1; ++j) {
        int row = k - m.partial_sum(ell - j);
        for (int h = ell - j; h >= 1; --h) {
            for (int c = 0; c < m.multiplicity(h); ++c) {
                queues[j + h - 2].push_back(t.entry(row + 1, j));
                ++row;
            }
        }
    }
    std::vector<Queue> qs;
    for (auto& sites : queues) qs.push_back(Queue(sites));
    return MLQ(n, std::move(qs), m);
}

void validate_surface_spec(const SurfaceSpec& spec, int n) {
    const int r = static_cast<int>(spec.sites.size());
    if (r == 0) throw std::invalid_argument("surface spec: empty site set");
    if (spec.values.size() != spec.sites.size())
        throw std::invalid_argument("surface spec: sites and values differ in length");
    for (int i = 0; i < r; ++i) {
        if (spec.sites[i] < 1 || spec.sites[i] > n)
            throw std::invalid_argument("surface spec: site out of range");
        if (i > 0 && spec.sites[i] <= spec.sites[i - 1])
            throw std::invalid_argument("surface spec: sites must strictly increase");
        if (i > 0 && spec.values[i] > spec.values[i - 1])
            throw std::invalid_argument("surface spec: values must weakly decrease");
    }
    std::vector<char> seen(spec.num_classes, 0);
    for (int v : spec.values) {
        if (v < 1 || v > spec.num_classes - 1)
            throw std::invalid_argument("surface spec: value outside [ell-1]");
        seen[v] = 1;
    }
    for (int v = 1; v <= spec.num_classes - 1; ++v)
        if (!seen[v]) throw std::invalid_argument("surface spec: values must cover [ell-1]");
}

Word u_of_v(const SurfaceSpec& spec, int n) {
    validate_surface_spec(spec, n);
    std::vector<int> letters(n, spec.num_classes);
    for (std::size_t j = 0; j < spec.sites.size(); ++j)
        letters[spec.sites[j] - 1] = spec.values[j];
    return Word(letters);
}

Polynomial jt_spectral_weight(const SurfaceSpec& spec, int n) {
    validate_surface_spec(spec, n);
    const int r = static_cast<int>(spec.sites.size());
    std::vector<std::vector<Polynomial>> mat(r, std::vector<Polynomial>(r));
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j) {
            int gamma = spec.num_classes - spec.values[j - 1];
            mat[i - 1][j - 1] =
                complete_hom_prefix(gamma + i - j - 1, spec.sites[j - 1], n);
        }
    Polynomial det = poly_det(mat);
    Monomial m(n);
    for (int b : spec.sites) m.multiply_by_variable(b);
    return det * Polynomial::monomial(m);
}

bool is_lacunar(const std::vector<int>& S) {
    std::vector<int> s = S;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i + 1] == s[i] + 1) return false;
    return true;
}

static std::vector<int> sigma_S_one_line(int r, const std::vector<int>& S) {
    std::vector<int> sigma(r);
    for (int j = 0; j < r; ++j) sigma[j] = r - j;
    for (int i : S) {
        if (i < 1 || i > r - 1) throw std::invalid_argument("sigma_S: index outside [r-1]");
        // Values i+1, i sit at positions r-i, r-i+1; sort them back ascending.
        std::swap(sigma[r - i - 1], sigma[r - i]);
    }
    return sigma;
}

Word sigma_S_word(const std::vector<int>& B, const std::vector<int>& S, int n) {
    if (!is_lacunar(S)) throw std::invalid_argument("sigma_S_word: S must be lacunar");
    const int r = static_cast<int>(B.size());
    std::vector<int> sigma = sigma_S_one_line(r, S);
    std::vector<int> letters(n, r + 1);
    for (int j = 0; j < r; ++j) letters[B[j] - 1] = sigma[j];
    return Word(letters);
}

Word merged_w0_word(const std::vector<int>& B, const std::vector<int>& T, int n) {
    return merge_set(sigma_S_word(B, {}, n), T);
}

Polynomial psi_T(const std::vector<int>& B, const std::vector<int>& T, int n) {
    if (!is_lacunar(T)) throw std::invalid_argument("psi_T: T must be lacunar");
    const int r = static_cast<int>(B.size());
    for (int t : T)
        if (t < 1 || t > r - 1) throw std::invalid_argument("psi_T: T outside [r-1]");
    std::vector<std::vector<Polynomial>> mat(r, std::vector<Polynomial>(r));
    auto gamma = [&](int j) {
        int cnt = 0;
        for (int t : T)
            if (t > r - j) ++cnt;
        return j - cnt;
    };
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j)
            mat[i - 1][j - 1] = complete_hom_prefix(gamma(j) + i - j - 1, B[j - 1], n);
    Polynomial out = poly_det(mat);
    Monomial m(n);
    for (int b : B) m.multiply_by_variable(b);
    out *= Polynomial::monomial(m);
    for (int t : T) out *= elementary_sym_prefix(t, n, n);
    return out;
}

Polynomial swt_sigma_S(const std::vector<int>& B, const std::vector<int>& S, int n) {
    if (!is_lacunar(S)) throw std::invalid_argument("swt_sigma_S: S must be lacunar");
    std::vector<int> s = S;
    std::sort(s.begin(), s.end());
    const int m = static_cast<int>(s.size());
    Polynomial total(n);
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> T;
        for (int i = 0; i < m; ++i)
            if ((mask >> i) & 1u) T.push_back(s[i]);
        Polynomial term = psi_T(B, T, n);
        if ((m - static_cast<int>(T.size())) % 2 == 1) term = -term;
        total += term;
    }
    return total;
}

}  // namespace mlqs
