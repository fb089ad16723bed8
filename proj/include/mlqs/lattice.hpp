#pragma once

#include <functional>
#include <vector>

#include "mlqs/polynomial.hpp"

namespace mlqs {

// The variables in this part of the library are not cyclic: x_j is the
// weight of an east-step at height j, and the ambient size just has to cover
// every referenced index.
struct Vertex {
    int x = 0, y = 0;
    bool operator==(const Vertex&) const = default;
};

using VertexTuple = std::vector<Vertex>;
using LatticePath = std::vector<Vertex>;   // consecutive unit east/north steps

// Sum of wt(p) over monotone paths A -> B: h_{c-a}(x_b, ..., x_d), zero when
// B is unreachable.
Polynomial path_sum(Vertex A, Vertex B, int ambient);

bool is_lattice_path(const LatticePath& p);
Polynomial path_weight(const LatticePath& p, int ambient);
bool paths_disjoint(const LatticePath& p, const LatticePath& q);

// Explicit backtracking enumeration of vertex-disjoint path tuples; the
// independent oracle for the LGV determinant.
void enumerate_nilps(const VertexTuple& A, const VertexTuple& B,
                     const std::function<void(const std::vector<LatticePath>&)>& fn);
Polynomial nilp_sum(const VertexTuple& A, const VertexTuple& B, int ambient);

// Staircase condition of the LGV proposition: x-coordinates weakly decrease
// and y-coordinates weakly increase along both tuples.
bool lgv_admissible(const VertexTuple& A, const VertexTuple& B);
// det(path_sum(A_i, B_j)); equals nilp_sum for admissible tuples. A violated
// condition only triggers the warning flag, the determinant is still returned.
Polynomial lgv_determinant(const VertexTuple& A, const VertexTuple& B, int ambient,
                           bool* admissible = nullptr);

}  // namespace mlqs
