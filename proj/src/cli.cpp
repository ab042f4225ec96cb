#include "babyverma/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "babyverma/envalg.hpp"
#include "babyverma/errors.hpp"

namespace bv::cli {

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

int to_int(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(std::string("cannot parse ") + what + " '" + s + "'");
  }
}

std::string elem_text(const Field& F, Elem x) { return F.degree() == 1 ? F.format_signed(x) : F.format(x); }

std::string join_weight(const Field& F, const Weight& w, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < w.x.size(); ++i) s += (i ? sep : "") + F.format(w.x[i]);
  return s;
}

std::string I_text(const std::vector<int>& I, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < I.size(); ++i) s += (i ? sep : "") + std::to_string(I[i] + 1);
  return s;
}

std::shared_ptr<const StructureConstants> constants_for(const std::string& type, int max_rank) {
  auto sys = std::make_shared<const RootSystem>(build_root_system(type, max_rank));
  return std::make_shared<const StructureConstants>(sys);
}

EvalOptions eval_options(const RunConfig& cfg, bool oracle) {
  EvalOptions opt;
  opt.oracle = oracle;
  opt.straighten = oracle;
  opt.module.size_bound = cfg.size_bound;
  opt.module.seed = cfg.seed;
  opt.oracle_opt.seed = cfg.seed;
  return opt;
}

// Output goes to --out when given, else to `out`.
struct Sink {
  std::ofstream file;
  std::ostream* os;
  Sink(const std::string& path, std::ostream& out) : os(&out) {
    if (!path.empty()) {
      file.open(path);
      if (!file) throw ConfigError("cannot open output file '" + path + "'");
      os = &file;
    }
  }
};

// ---------------------------------------------------------------- decide

int cmd_decide(const RunConfig& cfg, std::ostream& out) {
  if (cfg.lambda.empty()) throw ConfigError("decide needs --lambda");
  InductionContext ctx = make_context(cfg);
  const Field& F = ctx.field;
  const RootSystem& sys = ctx.system();
  Weight lam = parse_lambda(F, sys.rank(), cfg.lambda);
  if (!lam.compatible(F, ctx.chi)) throw ConfigError("lambda is not compatible with chi (x^p - x != chi(h)^p)");

  out << "type " << sys.label() << "  p " << F.p() << "  e " << F.degree() << "  I {" << I_text(ctx.pd.I, ",")
      << "}  lambda (" << join_weight(F, lam, ",") << ")\n";
  auto fz = r_factorization(sys, ctx.pd);
  for (const auto& f : fz.factors)
    out << "factor " << root_token(sys.root(f.root)) << ": " << RFactorization::describe(f, F.p()) << " = "
        << elem_text(F, factor_value(F, f, lam)) << '\n';
  auto v = r_product(F, sys, ctx.pd, lam);
  if (v.simple) {
    out << "verdict: simple\n";
  } else {
    out << "verdict: not simple; " << v.vanishing_factors.size() << " vanishing factor"
        << (v.vanishing_factors.size() == 1 ? "" : "s") << '\n';
  }
  if (kw_sufficient(F, sys, ctx.pd, ctx.chi)) out << "note: chi(h_a) != 0 on every nilradical root\n";
  if (!cfg.oracle) return kPass;

  auto ev = evaluate(ctx, lam, eval_options(cfg, true));
  out << "levi module dim " << ev.levi_dim << ", induced module dim " << ev.module_dim << '\n';
  out << "straightened R = " << elem_text(F, *ev.r_straight);
  if (ev.ratio) out << " (ratio to product " << elem_text(F, *ev.ratio) << ")";
  out << '\n';
  if (ev.oracle == OracleVerdict::Skipped) {
    out << "oracle: skipped (dim " << ev.module_dim << " exceeds bound " << cfg.size_bound << ")\n";
  } else {
    out << "oracle: " << (ev.oracle == OracleVerdict::Simple ? "simple" : "not simple");
    if (ev.oracle == OracleVerdict::Simple) out << " (End dim " << ev.endomorphism_dim << ")";
    out << '\n';
  }
  auto rep = check_equivalence(F, {ev});
  for (const auto& m : rep.mismatches) out << "MISMATCH " << m << '\n';
  return rep.mismatches.empty() ? kPass : kFalsified;
}

// ---------------------------------------------------------------- scan

int cmd_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  InductionContext ctx = make_context(cfg);
  auto weights = compatible_weights(ctx.field, ctx.chi);
  if (!cfg.lambda.empty()) weights = {parse_lambda(ctx.field, ctx.system().rank(), cfg.lambda)};
  Sink sink(cfg.out, out);
  *sink.os << csv_header() << '\n';
  if (weights.empty()) {
    err << "warning: no weight compatible with chi over GF(" << ctx.field.order() << ")\n";
    return kPass;
  }
  auto rows = sweep(ctx, weights, eval_options(cfg, cfg.oracle), cfg.jobs);
  for (const auto& ev : rows) *sink.os << csv_row(cfg, ctx, ev) << '\n';
  auto rep = check_equivalence(ctx.field, rows);
  for (const auto& m : rep.mismatches) err << "MISMATCH " << m << '\n';
  return rep.mismatches.empty() ? kPass : kFalsified;
}

// ---------------------------------------------------------------- verify

struct Outcome {
  long long configs = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
};

struct VerifyScope {
  std::vector<std::string> types;  // empty: per-check default
  std::vector<int> primes;          // empty: per-check default
  int ranks = 4;
  std::uint64_t seed = 0x5eed;
  std::uint64_t size_bound = 20000;
  int jobs = 1;
};

std::vector<std::string> types_up_to(int rank) {
  std::vector<std::string> out;
  for (int l = 1; l <= rank; ++l) out.push_back("A" + std::to_string(l));
  for (int l = 2; l <= rank; ++l) out.push_back("B" + std::to_string(l));
  for (int l = 2; l <= rank; ++l) out.push_back("C" + std::to_string(l));
  for (int l = 4; l <= rank; ++l) out.push_back("D" + std::to_string(l));
  if (rank >= 6) out.push_back("E6");
  if (rank >= 4) out.push_back("F4");
  out.push_back("G2");
  return out;
}

std::vector<std::string> pick_types(const VerifyScope& s, std::vector<std::string> dflt) {
  return s.types.empty() ? dflt : s.types;
}

std::vector<std::vector<int>> proper_subsets(int l, bool include_empty) {
  std::vector<std::vector<int>> out;
  for (int mask = include_empty ? 0 : 1; mask < (1 << l) - 1; ++mask) {
    std::vector<int> I;
    for (int i = 0; i < l; ++i)
      if (mask >> i & 1) I.push_back(i);
    out.push_back(I);
  }
  return out;
}

// Good primes to use for a type: the requested ones, or the default list,
// falling back to the smallest good prime when none of them is good.
std::vector<int> primes_for(RootKind kind, const VerifyScope& s, std::vector<int> dflt) {
  std::vector<int> want = s.primes.empty() ? dflt : s.primes, out;
  for (int p : want)
    if (is_good_prime(kind, p)) out.push_back(p);
  if (out.empty() && s.primes.empty())
    for (int p = 3; out.empty(); p += 2)
      if (is_good_prime(kind, p)) out.push_back(p);
  return out;
}

std::string where(const RootSystem& sys, int p, const std::vector<int>& I) {
  return sys.label() + " p=" + std::to_string(p) + " I={" + I_text(I, ",") + "}";
}

Outcome check_strings(const VerifyScope& s) {
  Outcome o;
  for (const auto& ty : pick_types(s, types_up_to(s.ranks))) {
    auto sys = build_root_system(ty, std::max(4, s.ranks));
    ++o.configs;
    auto coords = [&](const std::vector<int>& idx) {
      std::vector<std::vector<int>> c;
      for (int i : idx) c.push_back(sys.root(i).coords);
      return c;
    };
    for (int a = 0; a < sys.rank(); ++a)
      for (int b = 0; b < sys.num_positive(); ++b) {
        if (b == a) continue;
        auto st = alpha_string(sys, a, b);
        if (st.isolated || st.base != b) continue;
        auto ext = extended_alpha_string(sys, a, b);
        auto beta = sys.root(b).coords;
        std::string at = sys.label() + " alpha=" + std::to_string(a + 1) + " beta=" + root_token(sys.root(b));
        if (sys.kind() == RootKind::G) {
          using C = std::vector<std::vector<int>>;
          C plain, extended;
          if (a == 0 && beta == std::vector<int>{3, 1}) {
            plain = {{3, 1}, {2, 1}, {1, 1}, {0, 1}};
            extended = {{3, 2}, {3, 1}, {2, 1}, {1, 1}, {0, 1}};
          } else if (a == 1 && beta == std::vector<int>{3, 2}) {
            plain = extended = {{3, 2}, {3, 1}};
          } else if (a == 1 && beta == std::vector<int>{1, 1}) {
            plain = {{1, 1}, {1, 0}};
            extended = {{3, 2}, {3, 1}, {2, 1}, {1, 1}, {1, 0}};
          } else {
            o.failures.push_back(at + ": unexpected non-isolated string");
            continue;
          }
          if (coords(st.members) != plain || coords(ext.members) != extended)
            o.failures.push_back(at + ": G2 string lists differ");
          continue;
        }
        auto down = [&](int k) {
          auto c = beta;
          c[a] -= k;
          return c;
        };
        std::vector<std::vector<int>> two = {beta, down(1)}, three = {beta, down(1), down(2)};
        auto got = coords(st.members);
        if (got != two && got != three) o.failures.push_back(at + ": plain string has an unexpected shape");
        auto top = beta;
        for (auto& x : top) x *= 2;
        top[a] -= 1;
        auto with_top = got;
        with_top.insert(with_top.begin(), top);
        auto e = coords(ext.members);
        if (e != got && e != with_top) o.failures.push_back(at + ": extended string has an unexpected shape");
      }
  }
  return o;
}

Outcome check_chevalley(const VerifyScope& s) {
  Outcome o;
  for (const auto& ty : pick_types(s, types_up_to(s.ranks))) {
    auto sc = constants_for(ty, std::max(4, s.ranks));
    ++o.configs;
    auto rep = verify_chevalley(*sc);
    if (!rep.ok) o.failures.push_back(ty + ": " + rep.failure);
  }
  return o;
}

Outcome check_ftilde(const VerifyScope& s) {
  Outcome o;
  for (const auto& ty : pick_types(s, {"A2", "A3", "B2", "B3", "C3", "G2"})) {
    auto sc = constants_for(ty, std::max(4, s.ranks));
    const auto& sys = sc->system();
    for (int p : primes_for(sys.kind(), s, {3, 5})) {
      EnvelopingAlgebra U(Field::make(p), sc, Character::zero(sys));
      ++o.configs;
      for (int a = 0; a < sys.rank(); ++a)
        for (int b = 0; b < sys.num_positive(); ++b) {
          if (b == a) continue;
          auto st = alpha_string(sys, a, b);
          if (st.isolated || st.base != b) continue;
          if (!ftilde_commutes(U, a, b))
            o.failures.push_back(where(sys, p, {}) + ": [e_a, ftilde] != 0 for alpha=" + std::to_string(a + 1) +
                                 " beta=" + root_token(sys.root(b)));
        }
    }
  }
  return o;
}

template <class Body>
Outcome over_parabolics(const VerifyScope& s, std::vector<std::string> dflt_types, std::vector<int> dflt_primes,
                        bool include_empty, Body body) {
  Outcome o;
  for (const auto& ty : pick_types(s, dflt_types)) {
    auto sc = constants_for(ty, std::max(4, s.ranks));
    const auto& sys = sc->system();
    for (int p : primes_for(sys.kind(), s, dflt_primes))
      for (const auto& I : proper_subsets(sys.rank(), include_empty)) {
        ++o.configs;
        body(sc, p, I, o);
      }
  }
  return o;
}

Outcome check_reorder(const VerifyScope& s) {
  std::mt19937_64 rng(s.seed);
  return over_parabolics(s, {"A2", "A3", "B2", "B3", "C3", "G2"}, {3}, true, [&](auto sc, int p, auto I, Outcome& o) {
    const auto& sys = sc->system();
    EnvelopingAlgebra U(Field::make(p), sc, Character::zero(sys));
    auto pd = parabolic_data(sys, I);
    std::vector<int> perm(pd.complement.size());
    for (int trial = 0; trial < 20; ++trial) {
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      try {
        if (!reorder_constant(U, pd, perm).v) o.failures.push_back(where(sys, p, I) + ": zero reorder constant");
      } catch (const FalsifiedError& e) {
        o.failures.push_back(where(sys, p, I) + ": " + e.what());
      }
    }
  });
}

Outcome check_insertion(const VerifyScope& s) {
  std::mt19937_64 rng(s.seed);
  return over_parabolics(s, {"A2", "A3", "B2", "B3", "C3", "G2"}, {3}, true, [&](auto sc, int p, auto I, Outcome& o) {
    const auto& sys = sc->system();
    EnvelopingAlgebra U(Field::make(p), sc, Character::zero(sys));
    auto pd = parabolic_data(sys, I);
    const auto& order = pd.complement;
    const int n = static_cast<int>(order.size());
    for (int k = 0; k < n; ++k) {
      std::vector<int> exps(n);
      for (int j = 0; j < n; ++j)
        exps[j] = sys.root(order[j]).height >= sys.root(order[k]).height ? p - 1 : static_cast<int>(rng() % p);
      for (int pos = 0; pos <= n; ++pos)
        if (!insertion_vanishes(U, order, exps, k, pos))
          o.failures.push_back(where(sys, p, I) + ": insertion of f_" + root_token(sys.root(order[k])) +
                               " does not vanish");
    }
  });
}

Outcome check_levi(const VerifyScope& s) {
  return over_parabolics(s, {"A2", "A3", "B2", "B3", "C3", "G2"}, {3}, false, [&](auto sc, int p, auto I, Outcome& o) {
    const auto& sys = sc->system();
    EnvelopingAlgebra U(Field::make(p), sc, Character::zero(sys));
    if (!levi_commutes_with_product(U, parabolic_data(sys, I)))
      o.failures.push_back(where(sys, p, I) + ": a Levi root vector does not commute with the f-product");
  });
}

EvalOptions verify_eval(const VerifyScope& s) {
  EvalOptions opt;
  opt.module.size_bound = s.size_bound;
  opt.module.seed = s.seed;
  opt.oracle_opt.seed = s.seed;
  return opt;
}

void record_sweep(const InductionContext& ctx, const std::vector<Evaluation>& rows, Outcome& o,
                  const std::string& at) {
  auto rep = check_equivalence(ctx.field, rows);
  for (const auto& m : rep.mismatches) o.failures.push_back(at + ": " + m);
  int skipped = 0;
  for (const auto& r : rows) skipped += r.oracle == OracleVerdict::Skipped;
  if (skipped) o.notes.push_back(at + ": oracle skipped on " + std::to_string(skipped) + " modules above the bound");
}

Outcome check_equivalence_sweep(const VerifyScope& s) {
  return over_parabolics(s, {"A1", "A2", "B2"}, {3}, true, [&](auto sc, int p, auto I, Outcome& o) {
    auto ctx = InductionContext::make(Field::make(p), sc, Character::zero(sc->system()), I);
    auto rows = sweep(ctx, compatible_weights(ctx.field, ctx.chi), verify_eval(s), s.jobs);
    record_sweep(ctx, rows, o, where(sc->system(), p, I));
  });
}

Outcome check_nilpotent(const VerifyScope& s) {
  return over_parabolics(s, {"A2", "B2"}, {3}, false, [&](auto sc, int p, auto I, Outcome& o) {
    const auto& sys = sc->system();
    for (int i : I) {
      Character chi = Character::zero(sys);
      chi.chi_f[i] = Field::one();
      auto ctx = InductionContext::make(Field::make(p), sc, chi, I);
      auto ws = compatible_weights(ctx.field, chi);
      auto rows = sweep(ctx, ws, verify_eval(s), s.jobs);
      const std::string at = where(sys, p, I) + " chi(f_" + std::to_string(i + 1) + ")=1";
      record_sweep(ctx, rows, o, at);
      for (const auto& w : ws)
        if (!same_r_as_semisimple(ctx, w)) o.failures.push_back(at + ": R differs from the semisimple part");
    }
  });
}

Outcome check_kw(const VerifyScope& s) {
  Outcome o;
  for (const auto& ty : pick_types(s, {"A1", "A2"})) {
    auto sc = constants_for(ty, std::max(4, s.ranks));
    const auto& sys = sc->system();
    for (int p : primes_for(sys.kind(), s, {3})) {
      Field F = Field::make(p, 2);
      // a nonzero trace-zero element: x^p - x = c^p is solvable
      Elem c{};
      for (int i = 1; i < F.order() && !c.v; ++i)
        if (!F.add(F.element(i), F.pow(F.element(i), p)).v || p == 2) c = F.element(i);
      for (const auto& I : proper_subsets(sys.rank(), true)) {
        Character chi = Character::zero(sys);
        chi.chi_h.assign(sys.rank(), c);
        auto pd = parabolic_data(sys, I);
        if (!kw_sufficient(F, sys, pd, chi)) continue;
        ++o.configs;
        auto ctx = InductionContext::make(F, sc, chi, I);
        auto ws = compatible_weights(F, chi);
        auto rows = sweep(ctx, ws, verify_eval(s), s.jobs);
        const std::string at = where(sys, p, I) + " e=2";
        record_sweep(ctx, rows, o, at);
        for (const auto& r : rows)
          if (!r.formula.simple) o.failures.push_back(at + ": formula reports a non-simple module");
      }
    }
  }
  return o;
}

Outcome check_rho(const VerifyScope& s) {
  Outcome o;
  for (const auto& ty : pick_types(s, types_up_to(s.ranks))) {
    auto sys = build_root_system(ty, std::max(4, s.ranks));
    for (const auto& I : proper_subsets(sys.rank(), true)) {
      ++o.configs;
      auto pd = parabolic_data(sys, I);
      for (int a : pd.phi_I_plus)
        if (rho_pairing(sys, a) != rho_I_pairing(sys, pd, a))
          o.failures.push_back(sys.label() + " I={" + I_text(I, ",") + "}: rho and rho_I differ");
    }
  }
  return o;
}

Outcome check_steinberg(const VerifyScope& s) {
  Outcome o;
  for (const auto& ty : pick_types(s, {"A1", "A2", "B2", "G2"})) {
    auto sc = constants_for(ty, std::max(4, s.ranks));
    const auto& sys = sc->system();
    for (int p : primes_for(sys.kind(), s, {3, 5, 7})) {
      ++o.configs;
      auto ctx = InductionContext::make(Field::make(p), sc, Character::zero(sys), {});
      Weight st;
      st.x.assign(sys.rank(), ctx.field.from_int(p - 1));
      auto ev = evaluate(ctx, st, verify_eval(s));
      record_sweep(ctx, {ev}, o, where(sys, p, {}));
      if (!ev.formula.simple) o.failures.push_back(where(sys, p, {}) + ": Steinberg weight not simple by formula");
    }
  }
  return o;
}

using CheckFn = std::function<Outcome(const VerifyScope&)>;

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> r = {
      {"strings", check_strings},     {"chevalley", check_chevalley},
      {"ftilde", check_ftilde},       {"reorder", check_reorder},
      {"insertion", check_insertion}, {"levi", check_levi},
      {"equivalence", check_equivalence_sweep},
      {"nilpotent", check_nilpotent}, {"kw", check_kw},
      {"rho", check_rho},             {"steinberg", check_steinberg},
  };
  return r;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  VerifyScope scope;
  scope.types = split(cfg.types, ',');
  for (const auto& t : scope.types) build_root_system(t, std::max(4, cfg.ranks));  // validate early
  for (const auto& p : split(cfg.primes, ',')) {
    int v = to_int(p, "prime");
    if (!is_prime(v)) throw ConfigError("p = " + p + " is not prime");
    scope.primes.push_back(v);
  }
  scope.ranks = cfg.ranks;
  scope.seed = cfg.seed;
  scope.size_bound = cfg.size_bound;
  scope.jobs = cfg.jobs;

  std::vector<std::string> wanted = cfg.checks == "all" ? check_names() : split(cfg.checks, ',');
  for (const auto& w : wanted)
    if (std::find(check_names().begin(), check_names().end(), w) == check_names().end())
      throw ConfigError("unknown check '" + w + "'");

  bool ok = true;
  std::ostringstream detail;
  out << std::left << std::setw(12) << "check" << std::setw(10) << "configs" << "result\n";
  for (const auto& [name, fn] : registry()) {
    if (std::find(wanted.begin(), wanted.end(), name) == wanted.end()) continue;
    Outcome o = fn(scope);
    ok = ok && o.failures.empty();
    out << std::setw(12) << name << std::setw(10) << o.configs << (o.failures.empty() ? "pass" : "FAIL") << '\n';
    for (const auto& f : o.failures) detail << "  " << name << ": " << f << '\n';
    for (const auto& n : o.notes) detail << "  " << name << " note: " << n << '\n';
  }
  out << detail.str();
  return ok ? kPass : kFalsified;
}

// ---------------------------------------------------------------- export

int cmd_export(const RunConfig& cfg, std::ostream& out) {
  Sink sink(cfg.out, out);
  std::ostream& os = *sink.os;
  if (cfg.what == "roots") {
    os << to_json(build_root_system(cfg.type, cfg.max_rank)) << '\n';
  } else if (cfg.what == "constants") {
    os << constants_for(cfg.type, cfg.max_rank)->to_csv();
  } else if (cfg.what == "factors") {
    auto sys = build_root_system(cfg.type, cfg.max_rank);
    os << r_factorization(sys, parabolic_data(sys, parse_I(sys, cfg.I))).to_json(sys) << '\n';
  } else if (cfg.what == "matrices") {
    if (cfg.lambda.empty()) throw ConfigError("export --what matrices needs --lambda");
    InductionContext ctx = make_context(cfg);
    Weight lam = parse_lambda(ctx.field, ctx.system().rank(), cfg.lambda);
    ModuleOptions mo;
    mo.size_bound = cfg.size_bound;
    mo.seed = cfg.seed;
    ModuleRep Z = induce(ctx, levi_simple(ctx, lam, mo), mo);
    bool found = false;
    for (int lab = 0; lab < ctx.sc->dim(); ++lab) {
      if (!cfg.label.empty() && ctx.sc->name(lab) != cfg.label) continue;
      if (cfg.label.empty() && std::find(Z.generators.begin(), Z.generators.end(), lab) == Z.generators.end())
        continue;
      os << dump_matrix(Z, lab);
      found = true;
    }
    if (!found) throw ConfigError("no basis element named '" + cfg.label + "'");
  } else {
    throw ConfigError("unknown export target '" + cfg.what + "' (roots, constants, factors, matrices)");
  }
  return kPass;
}

void add_problem_options(CLI::App* app, RunConfig& cfg, bool need_lambda) {
  app->add_option("--type", cfg.type, "root system type, e.g. A2, B3, G2")->required();
  app->add_option("--p", cfg.p, "characteristic")->required();
  app->add_option("--e", cfg.e, "extension degree of the working field")->capture_default_str();
  app->add_option("--I", cfg.I, "1-based simple roots of the Levi part, comma separated");
  auto* lam = app->add_option("--lambda", cfg.lambda, "highest weight values x_i, comma separated");
  if (need_lambda) lam->required();
  app->add_option("--chi-h", cfg.chi_h, "chi(h_i), comma separated field elements");
  app->add_option("--chi-f", cfg.chi_f, "chi(f_a) as root:value pairs, e.g. 10:1");
  app->add_option("--max-rank", cfg.max_rank, "largest accepted rank")->capture_default_str();
  app->add_option("--bound", cfg.size_bound, "largest module dimension built explicitly")->capture_default_str();
  app->add_option("--seed", cfg.seed, "seed for the irreducibility test")->capture_default_str();
}

}  // namespace

std::vector<int> parse_I(const RootSystem& sys, std::string_view text) {
  std::vector<int> I;
  for (const auto& tok : split(text, ',')) {
    int i = to_int(tok, "simple root index");
    if (i < 1 || i > sys.rank())
      throw ConfigError("simple root index " + tok + " is outside 1.." + std::to_string(sys.rank()));
    I.push_back(i - 1);
  }
  std::sort(I.begin(), I.end());
  if (std::adjacent_find(I.begin(), I.end()) != I.end()) throw ConfigError("I lists a simple root twice");
  if (static_cast<int>(I.size()) >= sys.rank()) throw ConfigError("I must be a proper subset of the simple roots");
  return I;
}

Weight parse_lambda(const Field& F, int rank, std::string_view text) {
  auto parts = split(text, ',');
  if (static_cast<int>(parts.size()) != rank)
    throw ConfigError("lambda needs " + std::to_string(rank) + " values, got " + std::to_string(parts.size()));
  Weight w;
  for (const auto& s : parts) w.x.push_back(F.parse(s));
  return w;
}

Character parse_chi(const Field& F, const RootSystem& sys, std::string_view chi_h, std::string_view chi_f) {
  Character chi = Character::zero(sys);
  auto hs = split(chi_h, ',');
  if (!hs.empty()) {
    if (static_cast<int>(hs.size()) != sys.rank())
      throw ConfigError("--chi-h needs " + std::to_string(sys.rank()) + " values");
    for (int i = 0; i < sys.rank(); ++i) chi.chi_h[i] = F.parse(hs[i]);
  }
  for (const auto& pair : split(chi_f, ',')) {
    auto colon = pair.find(':');
    if (colon == std::string::npos) throw ConfigError("--chi-f entries look like root:value, got '" + pair + "'");
    int root = -1;
    try {
      root = parse_root_token(sys, pair.substr(0, colon));
    } catch (const DomainError& e) {
      throw ConfigError(e.what());
    }
    chi.chi_f[root] = F.parse(pair.substr(colon + 1));
  }
  return chi;
}

InductionContext make_context(const RunConfig& cfg) {
  if (cfg.e < 1) throw ConfigError("extension degree must be positive");
  auto sc = constants_for(cfg.type, cfg.max_rank);
  Field F = Field::make(cfg.p, cfg.e);
  const auto& sys = sc->system();
  auto I = parse_I(sys, cfg.I);
  Character chi = parse_chi(F, sys, cfg.chi_h, cfg.chi_f);
  return InductionContext::make(F, sc, chi, I);
}

std::string csv_header() {
  return "type,rank,p,e,I,chi,lambda,formula_verdict,oracle_verdict,R_value,ratio_to_product";
}

std::string csv_row(const RunConfig& cfg, const InductionContext& ctx, const Evaluation& ev) {
  (void)cfg;
  const Field& F = ctx.field;
  const auto& sys = ctx.system();
  std::string chi = "h=";
  for (int i = 0; i < sys.rank(); ++i) chi += (i ? ";" : "") + F.format(ctx.chi.chi_h[i]);
  std::string f;
  for (int a = 0; a < sys.num_positive(); ++a)
    if (ctx.chi.chi_f[a].v) f += (f.empty() ? "" : ";") + root_token(sys.root(a)) + ":" + F.format(ctx.chi.chi_f[a]);
  if (!f.empty()) chi += " f=" + f;
  std::ostringstream os;
  os << sys.label() << ',' << sys.rank() << ',' << F.p() << ',' << F.degree() << ',' << I_text(ctx.pd.I, ";") << ','
     << chi << ',' << join_weight(F, ev.lambda, ";") << ',' << (ev.formula.simple ? "simple" : "not_simple") << ','
     << verdict_name(ev.oracle) << ',' << (ev.r_straight ? F.format(*ev.r_straight) : "") << ','
     << (ev.ratio ? F.format(*ev.ratio) : "");
  return os.str();
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [k, v] : registry()) n.push_back(k);
    return n;
  }();
  return names;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Simplicity of induced modules for reduced enveloping algebras"};
  app.require_subcommand(1);

  auto* decide = app.add_subcommand("decide", "decide simplicity for one weight");
  add_problem_options(decide, cfg, true);
  decide->add_flag("--oracle", cfg.oracle, "also build the module and test it directly");

  auto* scan = app.add_subcommand("scan", "CSV over all weights compatible with chi");
  add_problem_options(scan, cfg, false);
  scan->add_flag("--oracle", cfg.oracle, "also build each module and test it directly");
  scan->add_option("--jobs", cfg.jobs, "worker threads")->capture_default_str();
  scan->add_option("--out", cfg.out, "write CSV here instead of standard output");

  auto* verify = app.add_subcommand("verify", "run property checks");
  verify->add_option("--check", cfg.checks, "comma separated checks or 'all'")->capture_default_str();
  verify->add_option("--types", cfg.types, "comma separated types (default depends on the check)");
  verify->add_option("--p", cfg.primes, "comma separated primes (default depends on the check)");
  verify->add_option("--ranks", cfg.ranks, "largest rank for checks over all types")->capture_default_str();
  verify->add_option("--bound", cfg.size_bound, "largest module dimension built explicitly")->capture_default_str();
  verify->add_option("--seed", cfg.seed, "seed for random choices")->capture_default_str();
  verify->add_option("--jobs", cfg.jobs, "worker threads")->capture_default_str();

  auto* exp = app.add_subcommand("export", "write roots, structure constants, factors or matrices");
  exp->add_option("--what", cfg.what, "roots, constants, factors or matrices")->capture_default_str();
  exp->add_option("--type", cfg.type, "root system type")->required();
  exp->add_option("--p", cfg.p, "characteristic (matrices only)");
  exp->add_option("--e", cfg.e, "extension degree (matrices only)");
  exp->add_option("--I", cfg.I, "1-based simple roots of the Levi part");
  exp->add_option("--lambda", cfg.lambda, "highest weight (matrices only)");
  exp->add_option("--chi-h", cfg.chi_h, "chi(h_i) (matrices only)");
  exp->add_option("--chi-f", cfg.chi_f, "chi(f_a) as root:value pairs (matrices only)");
  exp->add_option("--label", cfg.label, "single basis element, e.g. f[11]; default all generators");
  exp->add_option("--max-rank", cfg.max_rank, "largest accepted rank");
  exp->add_option("--bound", cfg.size_bound, "largest module dimension built explicitly");
  exp->add_option("--out", cfg.out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kPass : kConfig;
  }

  try {
    if (cfg.jobs < 1) throw ConfigError("--jobs must be positive");
    if (*decide) return cmd_decide(cfg, out);
    if (*scan) return cmd_scan(cfg, out, err);
    if (*verify) return cmd_verify(cfg, out);
    return cmd_export(cfg, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const DomainError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << '\n';
    return kResource;
  } catch (const FalsifiedError& e) {
    err << "FALSIFIED: " << e.what() << '\n';
    return kFalsified;
  }
}

}  // namespace bv::cli
