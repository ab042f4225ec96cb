#pragma once

#include <optional>
#include <string>
#include <vector>

#include "babyverma/meataxe.hpp"
#include "babyverma/modrep.hpp"

namespace bv {

// (lambda + rho)(h_alpha) = sum coeffs_i x_i + constant, integer coefficients.
struct LinearFactor {
  int root = 0;
  std::vector<int> coeffs;
  int constant = 0;
};

struct RFactorization {
  std::vector<LinearFactor> factors;  // one per complement root, canonical order

  // [{"root": "011", "coeffs": [...], "constant": c}, ...]
  std::string to_json(const RootSystem& sys) const;
  // "(x1+x2+2)^2-1" style text for one factor.
  static std::string describe(const LinearFactor& f, int p);
};

RFactorization r_factorization(const RootSystem& sys, const ParabolicData& pd);
Elem linear_value(const Field& F, const LinearFactor& f, const Weight& lambda);
// l^(p-1) - 1 for l the linear form at lambda.
Elem factor_value(const Field& F, const LinearFactor& f, const Weight& lambda);

struct RVerdict {
  bool simple = false;
  Elem r_value;
  std::vector<int> vanishing_factors;  // roots
};

RVerdict r_product(const Field& F, const RootSystem& sys, const ParabolicData& pd, const Weight& lambda);

// (-1)^t prod over all positive roots, with rho.
Elem full_verma_product(const Field& F, const RootSystem& sys, const Weight& lambda);
// (-1)^s prod over the Levi positive roots, with rho_I.
Elem levi_verma_product(const Field& F, const RootSystem& sys, const ParabolicData& pd, const Weight& lambda);

// chi(h_alpha) != 0 for every complement root.
bool kw_sufficient(const Field& F, const RootSystem& sys, const ParabolicData& pd, const Character& chi);

// Straightened R with chi equals the one with the semisimple part of chi.
bool same_r_as_semisimple(const InductionContext& ctx, const Weight& lambda, const ModuleOptions& opt = {});

enum class OracleVerdict { Off, Simple, NotSimple, Skipped };
const char* verdict_name(OracleVerdict v);

struct EvalOptions {
  bool oracle = true;
  bool straighten = true;
  ModuleOptions module;
  OracleOptions oracle_opt;
};

struct Evaluation {
  Weight lambda;
  RVerdict formula;
  OracleVerdict oracle = OracleVerdict::Off;
  std::uint64_t module_dim = 0;
  int levi_dim = 0;
  int endomorphism_dim = 0;
  std::optional<Elem> r_straight;
  std::optional<Elem> ratio;  // r_straight / formula value when the latter is nonzero
};

Evaluation evaluate(const InductionContext& ctx, const Weight& lambda, const EvalOptions& opt = {});
// In the order of `weights`, computed on up to `jobs` threads.
std::vector<Evaluation> sweep(const InductionContext& ctx, const std::vector<Weight>& weights,
                              const EvalOptions& opt = {}, int jobs = 1);

struct EquivalenceReport {
  int rows = 0;
  int oracle_runs = 0;
  std::vector<std::string> mismatches;
  std::optional<Elem> ratio;  // common ratio when consistent
  bool ratio_constant = true;
};

// Oracle, product and straightened R agree; the ratio is one nonzero constant.
EquivalenceReport check_equivalence(const Field& F, const std::vector<Evaluation>& rows);

}  // namespace bv
