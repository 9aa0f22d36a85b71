#pragma once

#include <string>
#include <vector>

#include "qalg/module.hpp"
#include "qalg/presentation.hpp"

namespace qalg {

// The quadratic algebra C(m), m >= 5: 3m generators in layers S_1..S_{m+1} and 4 + 3m relations.
Presentation build_C(int m);

enum class BVariant {
    Full,   // 14 relations, the rows of psi_2 * psi_1
    Prose,  // the 11 relations without sv - sy1, tw - ty1, ux1 - uy1
};
Presentation build_B(BVariant v = BVariant::Full);

// Generator layers of C(m): layers[i] lists the names in S_{i+1}.
std::vector<std::vector<std::string>> c_layers(int m);

// Named blocks; j is the index parameter for chi_j and zeta_j.
MatrixSpec named_block(const Presentation& p, const std::string& name, int j = 0);

// The complex (P, lambda) over C(m): modules P^0..P^m, maps lambda_1..lambda_m.
ComplexSpec build_C_complex(const Presentation& c, int m);
// The complex (R, psi) over B: modules R^0..R^4, maps psi_1..psi_4.
ComplexSpec build_B_complex(const Presentation& b);

// Ranks of P^0..P^m and their generator degrees.
std::vector<int> c_complex_ranks(int m);
std::vector<int> c_complex_shifts(int m);

// One left-annihilator statement: ann(target) is generated by the rows of `generators`
// (empty generator matrix: the annihilator is zero).
struct AnnihilatorClaim {
    std::string name;
    MatrixSpec target;
    MatrixSpec generators;  // rows live in the source of target; may have zero rows
    bool informational = false;
};
std::vector<AnnihilatorClaim> annihilator_claims(const Presentation& c, int m);

}  // namespace qalg
