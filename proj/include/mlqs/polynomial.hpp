#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mlqs {

// Coefficient arithmetic is 64-bit with overflow detection; every identity in
// scope is exact, so a silent wrap would be a correctness bug.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// Exponent vector of fixed ambient size n. Variable indices are cyclic at
// construction time: x_{n+k} = x_k.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int n) : exp_(n, 0) {}
    explicit Monomial(std::vector<int> exponents);
    static Monomial variable(int n, int site);

    int ambient() const { return static_cast<int>(exp_.size()); }
    int exponent(int i) const { return exp_[i - 1]; }   // 1-based
    int degree() const;
    const std::vector<int>& exponents() const { return exp_; }

    Monomial& operator*=(const Monomial& other);
    Monomial operator*(const Monomial& other) const;
    void multiply_by_variable(int site);

    bool operator==(const Monomial&) const = default;
    // Exponent-vector lexicographic; the canonical term order is descending.
    bool lex_greater(const Monomial& other) const { return exp_ > other.exp_; }

private:
    std::vector<int> exp_;
};

// Sparse polynomial with integer coefficients in x_1..x_n. Terms are kept in
// canonical order (exponent-lex descending) with no zero coefficients, so
// equality is term-by-term comparison.
class Polynomial {
public:
    struct Term {
        Monomial mono;
        std::int64_t coeff;
        bool operator==(const Term&) const = default;
    };

    Polynomial() = default;
    explicit Polynomial(int n) : n_(n) {}

    static Polynomial zero(int n) { return Polynomial(n); }
    static Polynomial constant(int n, std::int64_t c);
    static Polynomial one(int n) { return constant(n, 1); }
    static Polynomial monomial(const Monomial& m, std::int64_t c = 1);
    static Polynomial variable(int n, int site);

    int ambient() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    int num_terms() const { return static_cast<int>(terms_.size()); }
    const std::vector<Term>& terms() const { return terms_; }
    int degree() const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial& operator*=(const Polynomial& other);
    Polynomial operator*(std::int64_t c) const;
    void add_term(const Monomial& m, std::int64_t c);

    std::int64_t eval_all_ones() const;
    // Cyclic relabeling x_i -> x_{i+offset}; used for the cyclic-symmetry law.
    Polynomial shift_variables(int offset) const;

    bool operator==(const Polynomial&) const = default;

    std::string str() const;
    static Polynomial parse(const std::string& text, int n);
    std::string to_json() const;
    static Polynomial from_json(const std::string& text);

private:
    int n_ = 0;
    std::vector<Term> terms_;
};

inline Polynomial operator*(std::int64_t c, const Polynomial& p) { return p * c; }

// e_k and h_k on an explicit variable list; both vanish for k < 0, and e_k
// also vanishes for k beyond the list size.
Polynomial elementary_sym(int k, const std::vector<int>& vars, int ambient);
Polynomial complete_hom(int k, const std::vector<int>& vars, int ambient);
// Prefix conveniences: e_k(x_1..x_N), h_k(x_1..x_N).
Polynomial elementary_sym_prefix(int k, int N, int ambient);
Polynomial complete_hom_prefix(int k, int N, int ambient);

// Exact determinant by cofactor expansion, memoized on column subsets.
Polynomial poly_det(const std::vector<std::vector<Polynomial>>& mat);

}  // namespace mlqs
