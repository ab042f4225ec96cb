#include "babyverma/rcrit.hpp"

#include <atomic>
#include <sstream>
#include <thread>

#include "babyverma/errors.hpp"
#include "json.hpp"

namespace bv {

namespace {

std::string weight_text(const Field& F, const Weight& w) {
  std::string s;
  for (std::size_t i = 0; i < w.x.size(); ++i) s += (i ? "," : "") + F.format(w.x[i]);
  return s;
}

LinearFactor make_factor(const RootSystem& sys, int alpha, int constant) {
  return LinearFactor{alpha, sys.coroot_coeffs(alpha), constant};
}

Elem signed_product(const Field& F, const std::vector<LinearFactor>& fs, const Weight& lambda) {
  Elem r = Field::one();
  for (const auto& f : fs) r = F.mul(r, factor_value(F, f, lambda));
  return fs.size() % 2 ? F.neg(r) : r;
}

}  // namespace

std::string RFactorization::to_json(const RootSystem& sys) const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& f : factors)
    j.push_back({{"root", root_token(sys.root(f.root))}, {"coeffs", f.coeffs}, {"constant", f.constant}});
  return j.dump();
}

std::string RFactorization::describe(const LinearFactor& f, int p) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (!f.coeffs[i]) continue;
    if (!first) os << '+';
    if (f.coeffs[i] != 1) os << f.coeffs[i];
    os << 'x' << i + 1;
    first = false;
  }
  os << '+' << f.constant << ")^" << p - 1 << "-1";
  return os.str();
}

RFactorization r_factorization(const RootSystem& sys, const ParabolicData& pd) {
  RFactorization r;
  for (int a : pd.complement) r.factors.push_back(make_factor(sys, a, rho_pairing(sys, a)));
  return r;
}

Elem linear_value(const Field& F, const LinearFactor& f, const Weight& lambda) {
  Elem s = F.from_int(f.constant);
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) s = F.add(s, F.mul(F.from_int(f.coeffs[i]), lambda.x[i]));
  return s;
}

Elem factor_value(const Field& F, const LinearFactor& f, const Weight& lambda) {
  return F.sub(F.pow(linear_value(F, f, lambda), F.p() - 1), Field::one());
}

RVerdict r_product(const Field& F, const RootSystem& sys, const ParabolicData& pd, const Weight& lambda) {
  RVerdict v;
  v.r_value = Field::one();
  for (const auto& f : r_factorization(sys, pd).factors) {
    Elem x = factor_value(F, f, lambda);
    if (!x.v) v.vanishing_factors.push_back(f.root);
    v.r_value = F.mul(v.r_value, x);
  }
  v.simple = v.vanishing_factors.empty();
  return v;
}

Elem full_verma_product(const Field& F, const RootSystem& sys, const Weight& lambda) {
  std::vector<LinearFactor> fs;
  for (int a = 0; a < sys.num_positive(); ++a) fs.push_back(make_factor(sys, a, rho_pairing(sys, a)));
  return signed_product(F, fs, lambda);
}

Elem levi_verma_product(const Field& F, const RootSystem& sys, const ParabolicData& pd, const Weight& lambda) {
  std::vector<LinearFactor> fs;
  for (int a : pd.phi_I_plus) fs.push_back(make_factor(sys, a, rho_I_pairing(sys, pd, a)));
  return signed_product(F, fs, lambda);
}

bool kw_sufficient(const Field& F, const RootSystem& sys, const ParabolicData& pd, const Character& chi) {
  for (int a : pd.complement)
    if (!chi.h_value(F, sys, a).v) return false;
  return true;
}

bool same_r_as_semisimple(const InductionContext& ctx, const Weight& lambda, const ModuleOptions& opt) {
  InductionContext semi = ctx;
  semi.chi = ctx.chi.semisimple_part();
  return r_by_straightening(ctx, lambda, opt) == r_by_straightening(semi, lambda, opt);
}

const char* verdict_name(OracleVerdict v) {
  switch (v) {
    case OracleVerdict::Off: return "off";
    case OracleVerdict::Simple: return "simple";
    case OracleVerdict::NotSimple: return "not_simple";
    case OracleVerdict::Skipped: return "skipped";
  }
  return "?";
}

Evaluation evaluate(const InductionContext& ctx, const Weight& lambda, const EvalOptions& opt) {
  const Field& F = ctx.field;
  Evaluation ev;
  ev.lambda = lambda;
  ev.formula = r_product(F, ctx.system(), ctx.pd, lambda);
  if (!opt.oracle && !opt.straighten) return ev;

  ModuleRep L = levi_simple(ctx, lambda, opt.module);
  ev.levi_dim = L.dim;
  ev.module_dim = induced_dim(ctx, L);
  if (opt.straighten) {
    InducedAction Z = induced_action(ctx, L);
    ev.r_straight = r_by_straightening(Z);
    if (ev.formula.r_value.v) ev.ratio = F.div(*ev.r_straight, ev.formula.r_value);
  }
  if (opt.oracle) {
    if (ev.module_dim > opt.module.size_bound) {
      ev.oracle = OracleVerdict::Skipped;
    } else {
      ModuleRep M = induce(ctx, L, opt.module);
      auto w = is_simple(M, opt.oracle_opt);
      ev.oracle = w.simple ? OracleVerdict::Simple : OracleVerdict::NotSimple;
      ev.endomorphism_dim = w.endomorphism_dim;
    }
  }
  return ev;
}

std::vector<Evaluation> sweep(const InductionContext& ctx, const std::vector<Weight>& weights, const EvalOptions& opt,
                              int jobs) {
  std::vector<Evaluation> out(weights.size());
  std::vector<std::exception_ptr> errors(weights.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < weights.size();) {
      try {
        out[i] = evaluate(ctx, weights[i], opt);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(weights.size())));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  // First failure in weight order, so reruns report the same error.
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

EquivalenceReport check_equivalence(const Field& F, const std::vector<Evaluation>& rows) {
  EquivalenceReport rep;
  for (const auto& ev : rows) {
    ++rep.rows;
    const std::string at = "lambda=(" + weight_text(F, ev.lambda) + ")";
    const bool formula = ev.formula.simple;
    if (ev.r_straight && (ev.r_straight->v != 0) != formula)
      rep.mismatches.push_back(at + ": straightened R disagrees with the product");
    if (ev.oracle == OracleVerdict::Simple || ev.oracle == OracleVerdict::NotSimple) {
      ++rep.oracle_runs;
      if ((ev.oracle == OracleVerdict::Simple) != formula)
        rep.mismatches.push_back(at + ": oracle says " + verdict_name(ev.oracle));
    }
    if (ev.ratio) {
      if (!ev.ratio->v) rep.ratio_constant = false;
      if (!rep.ratio) rep.ratio = ev.ratio;
      else if (*rep.ratio != *ev.ratio) rep.ratio_constant = false;
    }
  }
  if (!rep.ratio_constant) rep.mismatches.push_back("ratio of straightened R to the product is not constant");
  return rep;
}

}  // namespace bv
