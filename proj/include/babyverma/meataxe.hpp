#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "babyverma/linalg.hpp"
#include "babyverma/modrep.hpp"

namespace bv {

struct SimplicityWitness {
  bool simple = false;
  std::optional<std::vector<Vec>> proper_submodule_basis;  // when not simple
  int endomorphism_dim = 0;                                 // when simple
  std::string method;                                       // "norton" or "weight-spin"
};

struct OracleOptions {
  std::uint64_t seed = 0x5eed;
  int dense_limit = 400;   // Norton's test up to this dimension
  int attempts = 40;       // random algebra elements before falling back
  int max_lines = 4096;    // per weight space in the spinning test
};

// Echelon basis of the subspace spanned by the orbit of `seeds` under the matrices.
std::vector<Vec> spin(const Field& F, const std::vector<SparseMatrix>& gens, const std::vector<Vec>& seeds);

// Deterministic irreducibility test. Norton's criterion on random algebra
// elements for small modules; otherwise, or when no element with a simple
// eigenvalue turns up, every highest-weight vector is spun (requires the
// Cartan generators to act diagonally).
SimplicityWitness is_simple(const ModuleRep& M, const OracleOptions& opt = {});

// Norton's test only; nullopt when inconclusive.
std::optional<SimplicityWitness> norton_test(const Field& F, const std::vector<SparseMatrix>& gens, int dim,
                                             const OracleOptions& opt);
// Weight-graded spinning test (raising / lowering / diagonal generator roles).
SimplicityWitness weight_spin_test(const ModuleRep& M, const OracleOptions& opt);

// Dimension of End(M) by solving the commutation equations; dense, small modules only.
int commutant_dim(const Field& F, const std::vector<SparseMatrix>& gens, int dim);

// Whether the subspace spanned by `basis` is invariant under all generators.
bool is_invariant(const Field& F, const std::vector<SparseMatrix>& gens, const std::vector<Vec>& basis);

}  // namespace bv
