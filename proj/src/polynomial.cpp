#include "mlqs/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace mlqs {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in add");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in mul");
    return r;
}

Monomial::Monomial(std::vector<int> exponents) : exp_(std::move(exponents)) {
    for (int e : exp_)
        if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
}

Monomial Monomial::variable(int n, int site) {
    Monomial m(n);
    m.multiply_by_variable(site);
    return m;
}

void Monomial::multiply_by_variable(int site) {
    int n = ambient();
    int i = ((site - 1) % n + n) % n;
    ++exp_[i];
}

int Monomial::degree() const {
    int d = 0;
    for (int e : exp_) d += e;
    return d;
}

Monomial& Monomial::operator*=(const Monomial& other) {
    if (ambient() != other.ambient()) throw std::invalid_argument("Monomial: ambient mismatch");
    for (int i = 0; i < ambient(); ++i) exp_[i] += other.exp_[i];
    return *this;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial r = *this;
    r *= other;
    return r;
}

Polynomial Polynomial::constant(int n, std::int64_t c) {
    Polynomial p(n);
    if (c != 0) p.terms_.push_back({Monomial(n), c});
    return p;
}

Polynomial Polynomial::monomial(const Monomial& m, std::int64_t c) {
    Polynomial p(m.ambient());
    if (c != 0) p.terms_.push_back({m, c});
    return p;
}

Polynomial Polynomial::variable(int n, int site) {
    return monomial(Monomial::variable(n, site));
}

int Polynomial::degree() const {
    int d = 0;
    for (const Term& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (other.is_zero()) return *this;
    if (is_zero() && n_ == 0) n_ = other.n_;
    if (n_ != other.n_) throw std::invalid_argument("Polynomial: ambient mismatch");
    std::vector<Term> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < other.terms_.size()) {
        if (terms_[i].mono == other.terms_[j].mono) {
            std::int64_t c = checked_add(terms_[i].coeff, other.terms_[j].coeff);
            if (c != 0) merged.push_back({terms_[i].mono, c});
            ++i, ++j;
        } else if (terms_[i].mono.lex_greater(other.terms_[j].mono)) {
            merged.push_back(terms_[i++]);
        } else {
            merged.push_back(other.terms_[j++]);
        }
    }
    while (i < terms_.size()) merged.push_back(terms_[i++]);
    while (j < other.terms_.size()) merged.push_back(other.terms_[j++]);
    terms_ = std::move(merged);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    Polynomial r = *this;
    r += other;
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (Term& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this += -other; }

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (is_zero() || other.is_zero()) return Polynomial(std::max(n_, other.n_));
    if (n_ != other.n_) throw std::invalid_argument("Polynomial: ambient mismatch");
    std::map<std::vector<int>, std::int64_t, std::greater<>> acc;
    for (const Term& a : terms_)
        for (const Term& b : other.terms_) {
            std::vector<int> e = a.mono.exponents();
            const std::vector<int>& f = b.mono.exponents();
            for (int i = 0; i < n_; ++i) e[i] += f[i];
            auto [it, fresh] = acc.try_emplace(std::move(e), 0);
            it->second = checked_add(it->second, checked_mul(a.coeff, b.coeff));
        }
    Polynomial r(n_);
    for (auto& [e, c] : acc)
        if (c != 0) r.terms_.push_back({Monomial(e), c});
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial Polynomial::operator*(std::int64_t c) const {
    Polynomial r(n_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (Term& t : r.terms_) t.coeff = checked_mul(t.coeff, c);
    return r;
}

void Polynomial::add_term(const Monomial& m, std::int64_t c) { *this += monomial(m, c); }

std::int64_t Polynomial::eval_all_ones() const {
    std::int64_t s = 0;
    for (const Term& t : terms_) s = checked_add(s, t.coeff);
    return s;
}

Polynomial Polynomial::shift_variables(int offset) const {
    Polynomial r(n_);
    std::map<std::vector<int>, std::int64_t, std::greater<>> acc;
    for (const Term& t : terms_) {
        std::vector<int> e(n_);
        for (int i = 0; i < n_; ++i) {
            int j = ((i + offset) % n_ + n_) % n_;
            e[j] = t.mono.exponents()[i];
        }
        acc[std::move(e)] = t.coeff;
    }
    for (auto& [e, c] : acc) r.terms_.push_back({Monomial(e), c});
    return r;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        std::int64_t c = t.coeff;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        std::int64_t a = c < 0 ? -c : c;
        bool printed = false;
        if (a != 1 || t.mono.degree() == 0) {
            os << a;
            printed = true;
        }
        for (int i = 1; i <= n_; ++i) {
            int e = t.mono.exponent(i);
            if (e == 0) continue;
            if (printed) os << "*";
            os << "x" << i;
            if (e > 1) os << "^" << e;
            printed = true;
        }
    }
    return os.str();
}

Polynomial Polynomial::parse(const std::string& text, int n) {
    Polynomial p(n);
    std::string s = text;
    // Tokenize on top-level + / - while keeping signs.
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && s[i] == ' ') ++i; };
    skip_ws();
    if (i < s.size() && s.compare(i, 1, "0") == 0 && i + 1 == s.size()) return p;
    int sign = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        sign = s[i] == '-' ? -1 : 1;
        ++i;
    }
    while (i < s.size()) {
        skip_ws();
        std::int64_t coeff = 1;
        Monomial mono(n);
        bool saw_factor = false;
        while (i < s.size()) {
            skip_ws();
            if (i >= s.size() || s[i] == '+' || s[i] == '-') break;
            if (s[i] == '*') {
                ++i;
                continue;
            }
            if (s[i] == 'x') {
                ++i;
                std::size_t j = i;
                while (j < s.size() && isdigit(s[j])) ++j;
                int var = std::stoi(s.substr(i, j - i));
                i = j;
                int e = 1;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    j = i;
                    while (j < s.size() && isdigit(s[j])) ++j;
                    e = std::stoi(s.substr(i, j - i));
                    i = j;
                }
                for (int t = 0; t < e; ++t) mono.multiply_by_variable(var);
                saw_factor = true;
            } else if (isdigit(s[i])) {
                std::size_t j = i;
                while (j < s.size() && isdigit(s[j])) ++j;
                coeff = checked_mul(coeff, std::stoll(s.substr(i, j - i)));
                i = j;
                saw_factor = true;
            } else {
                throw std::invalid_argument("Polynomial::parse: unexpected character");
            }
        }
        if (!saw_factor) throw std::invalid_argument("Polynomial::parse: empty term");
        p.add_term(mono, sign * coeff);
        skip_ws();
        if (i < s.size()) {
            if (s[i] == '+') sign = 1;
            else if (s[i] == '-') sign = -1;
            else throw std::invalid_argument("Polynomial::parse: expected + or -");
            ++i;
        }
    }
    return p;
}

std::string Polynomial::to_json() const {
    nlohmann::json j;
    j["n"] = n_;
    j["terms"] = nlohmann::json::array();
    for (const Term& t : terms_)
        j["terms"].push_back({{"c", t.coeff}, {"e", t.mono.exponents()}});
    return j.dump();
}

Polynomial Polynomial::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Polynomial p(j.at("n").get<int>());
    for (const auto& t : j.at("terms"))
        p.add_term(Monomial(t.at("e").get<std::vector<int>>()), t.at("c").get<std::int64_t>());
    return p;
}

Polynomial elementary_sym(int k, const std::vector<int>& vars, int ambient) {
    if (k < 0) return Polynomial::zero(ambient);
    if (k == 0) return Polynomial::one(ambient);
    int N = static_cast<int>(vars.size());
    if (k > N) return Polynomial::zero(ambient);
    // e[j] accumulates e_j of the prefix processed so far.
    std::vector<Polynomial> e(k + 1, Polynomial::zero(ambient));
    e[0] = Polynomial::one(ambient);
    for (int v : vars) {
        Polynomial x = Polynomial::variable(ambient, v);
        for (int j = k; j >= 1; --j) e[j] += e[j - 1] * x;
    }
    return e[k];
}

Polynomial complete_hom(int k, const std::vector<int>& vars, int ambient) {
    if (k < 0) return Polynomial::zero(ambient);
    if (k == 0) return Polynomial::one(ambient);
    if (vars.empty()) return Polynomial::zero(ambient);
    // h[j] of the prefix: multiplying in variable x adds h[j] += h[j-1]*x
    // scanned upward.
    std::vector<Polynomial> h(k + 1, Polynomial::zero(ambient));
    h[0] = Polynomial::one(ambient);
    for (int v : vars) {
        Polynomial x = Polynomial::variable(ambient, v);
        for (int j = 1; j <= k; ++j) h[j] += h[j - 1] * x;
    }
    return h[k];
}

static std::vector<int> prefix_vars(int N) {
    std::vector<int> vars(std::max(N, 0));
    for (int i = 0; i < N; ++i) vars[i] = i + 1;
    return vars;
}

Polynomial elementary_sym_prefix(int k, int N, int ambient) {
    return elementary_sym(k, prefix_vars(N), ambient);
}

Polynomial complete_hom_prefix(int k, int N, int ambient) {
    return complete_hom(k, prefix_vars(N), ambient);
}

Polynomial poly_det(const std::vector<std::vector<Polynomial>>& mat) {
    const int k = static_cast<int>(mat.size());
    if (k == 0) throw std::invalid_argument("poly_det: empty matrix");
    int ambient = 0;
    for (const auto& row : mat) {
        if (static_cast<int>(row.size()) != k)
            throw std::invalid_argument("poly_det: matrix is not square");
        for (const auto& p : row) ambient = std::max(ambient, p.ambient());
    }
    // det of the minor on rows r.. and the column subset encoded by mask,
    // expanded along row r = k - popcount(mask).
    std::map<unsigned, Polynomial> memo;
    auto rec = [&](auto&& self, unsigned mask) -> Polynomial {
        if (mask == 0) return Polynomial::one(ambient);
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        int r = k - __builtin_popcount(mask);
        Polynomial d(ambient);
        int sign = 1;
        for (int j = 0; j < k; ++j) {
            if (!((mask >> j) & 1u)) continue;
            if (!mat[r][j].is_zero())
                d += mat[r][j] * self(self, mask & ~(1u << j)) * sign;
            sign = -sign;
        }
        memo.emplace(mask, d);
        return d;
    };
    return rec(rec, (1u << k) - 1u);
}

}  // namespace mlqs
