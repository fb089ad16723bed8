#include "mlqs/lattice.hpp"

#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace mlqs {

Polynomial path_sum(Vertex A, Vertex B, int ambient) {
    if (B.x < A.x || B.y < A.y) return Polynomial::zero(ambient);
    if (A.y < 1) throw std::invalid_argument("path_sum: y-coordinates must be >= 1");
    std::vector<int> vars;
    for (int j = A.y; j <= B.y; ++j) vars.push_back(j);
    return complete_hom(B.x - A.x, vars, ambient);
}

bool is_lattice_path(const LatticePath& p) {
    if (p.empty()) return false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        int dx = p[i + 1].x - p[i].x, dy = p[i + 1].y - p[i].y;
        if (!((dx == 1 && dy == 0) || (dx == 0 && dy == 1))) return false;
    }
    return true;
}

Polynomial path_weight(const LatticePath& p, int ambient) {
    if (!is_lattice_path(p)) throw std::invalid_argument("path_weight: not a lattice path");
    Monomial m(ambient);
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i + 1].x == p[i].x + 1) m.multiply_by_variable(p[i].y);
    return Polynomial::monomial(m);
}

bool paths_disjoint(const LatticePath& p, const LatticePath& q) {
    std::set<std::pair<int, int>> seen;
    for (const Vertex& v : p) seen.insert({v.x, v.y});
    for (const Vertex& v : q)
        if (seen.count({v.x, v.y})) return false;
    return true;
}

namespace {

// DFS over monotone paths A -> B avoiding the used vertex set.
void walk(Vertex at, Vertex B, LatticePath& path, std::set<std::pair<int, int>>& used,
          const std::function<void(const LatticePath&)>& fn) {
    if (at == B) {
        fn(path);
        return;
    }
    for (Vertex next : {Vertex{at.x + 1, at.y}, Vertex{at.x, at.y + 1}}) {
        if (next.x > B.x || next.y > B.y) continue;
        if (used.count({next.x, next.y})) continue;
        used.insert({next.x, next.y});
        path.push_back(next);
        walk(next, B, path, used, fn);
        path.pop_back();
        used.erase({next.x, next.y});
    }
}

}  // namespace

void enumerate_nilps(const VertexTuple& A, const VertexTuple& B,
                     const std::function<void(const std::vector<LatticePath>&)>& fn) {
    if (A.size() != B.size()) throw std::invalid_argument("enumerate_nilps: tuple size mismatch");
    const int k = static_cast<int>(A.size());
    std::vector<LatticePath> paths(k);
    std::set<std::pair<int, int>> used;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == k) {
            fn(paths);
            return;
        }
        if (used.count({A[i].x, A[i].y})) return;
        used.insert({A[i].x, A[i].y});
        LatticePath path{A[i]};
        walk(A[i], B[i], path, used,
             [&](const LatticePath& p) {
                 paths[i] = p;
                 self(self, i + 1);
             });
        used.erase({A[i].x, A[i].y});
    };
    rec(rec, 0);
}

Polynomial nilp_sum(const VertexTuple& A, const VertexTuple& B, int ambient) {
    Polynomial total(ambient);
    std::map<std::vector<int>, std::int64_t, std::greater<>> acc;
    enumerate_nilps(A, B, [&](const std::vector<LatticePath>& paths) {
        Monomial m(ambient);
        for (const LatticePath& p : paths)
            for (std::size_t i = 0; i + 1 < p.size(); ++i)
                if (p[i + 1].x == p[i].x + 1) m.multiply_by_variable(p[i].y);
        auto [it, fresh] = acc.try_emplace(m.exponents(), 0);
        it->second = checked_add(it->second, 1);
    });
    for (auto& [e, c] : acc) total.add_term(Monomial(e), c);
    return total;
}

bool lgv_admissible(const VertexTuple& A, const VertexTuple& B) {
    if (A.size() != B.size()) return false;
    for (std::size_t i = 0; i + 1 < A.size(); ++i) {
        if (A[i].x < A[i + 1].x || A[i].y > A[i + 1].y) return false;
        if (B[i].x < B[i + 1].x || B[i].y > B[i + 1].y) return false;
    }
    return true;
}

Polynomial lgv_determinant(const VertexTuple& A, const VertexTuple& B, int ambient,
                           bool* admissible) {
    if (A.size() != B.size()) throw std::invalid_argument("lgv_determinant: size mismatch");
    if (admissible) *admissible = lgv_admissible(A, B);
    const int k = static_cast<int>(A.size());
    if (k == 0) return Polynomial::one(ambient);
    std::vector<std::vector<Polynomial>> mat(k, std::vector<Polynomial>(k, Polynomial(ambient)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) mat[i][j] = path_sum(A[i], B[j], ambient);
    return poly_det(mat);
}

}  // namespace mlqs
