#include <algorithm>
#include <set>

#include "babyverma/errors.hpp"
#include "babyverma/rootsys.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace bv;

namespace {

const std::vector<std::string> kTypes = {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2",
                                         "C3", "C4", "D4", "F4", "G2"};

using Coords = std::vector<int>;

Coords R(std::initializer_list<int> c) { return Coords(c); }

int idx(const RootSystem& s, Coords c) {
  auto i = s.find(c);
  REQUIRE(i.has_value());
  return *i;
}

std::vector<Coords> coords_of(const RootSystem& s, const std::vector<int>& ids) {
  std::vector<Coords> out;
  for (int i : ids) out.push_back(s.root(i).coords);
  return out;
}

// Weyl orbit of the simple roots under simple reflections.
std::set<Coords> weyl_orbit_roots(const std::vector<std::vector<int>>& A) {
  const int l = static_cast<int>(A.size());
  std::set<Coords> seen;
  std::vector<Coords> stack;
  for (int i = 0; i < l; ++i) {
    Coords c(l, 0);
    c[i] = 1;
    seen.insert(c);
    stack.push_back(c);
  }
  while (!stack.empty()) {
    Coords b = stack.back();
    stack.pop_back();
    for (int i = 0; i < l; ++i) {
      int pair = 0;
      for (int j = 0; j < l; ++j) pair += b[j] * A[i][j];
      Coords c = b;
      c[i] -= pair;
      if (seen.insert(c).second) stack.push_back(c);
    }
  }
  return seen;
}

// (alpha_i, alpha_j) scaled so that the symmetrization is integral.
std::vector<std::vector<long long>> gram(const std::vector<std::vector<int>>& A) {
  const int l = static_cast<int>(A.size());
  std::vector<long long> d(l, 0);
  d[0] = 12;
  for (int pass = 0; pass < l; ++pass)
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j)
        if (d[i] && !d[j] && A[i][j]) d[j] = d[i] * A[i][j] / A[j][i];
  std::vector<std::vector<long long>> g(l, std::vector<long long>(l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) g[i][j] = d[i] * A[i][j];
  return g;
}

long long form(const std::vector<std::vector<long long>>& g, const Coords& a, const Coords& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * b[j] * g[i][j];
  return s;
}

}  // namespace

TEST_SUITE("rootsys") {
  TEST_CASE("G2, A1 and B2 positive roots") {
    auto g2 = build_root_system("G2");
    std::set<Coords> got;
    for (const auto& r : g2.positive_roots()) got.insert(r.coords);
    CHECK(got == std::set<Coords>{R({1, 0}), R({0, 1}), R({1, 1}), R({2, 1}), R({3, 1}), R({3, 2})});

    auto a1 = build_root_system("A1");
    REQUIRE(a1.num_positive() == 1);
    CHECK(a1.root(0).coords == R({1}));

    auto b2 = build_root_system("B2");
    CHECK(coords_of(b2, {0, 1, 2, 3}) == std::vector<Coords>{R({1, 0}), R({0, 1}), R({1, 1}), R({1, 2})});
  }

  TEST_CASE("root sets agree with the Weyl orbit, counts are classical") {
    std::map<std::string, int> counts = {{"A1", 1}, {"A2", 3},  {"A3", 6},  {"A4", 10}, {"B2", 4},
                                         {"B3", 9}, {"B4", 16}, {"C2", 4},  {"C3", 9},  {"C4", 16},
                                         {"D4", 12}, {"F4", 24}, {"G2", 6}};
    for (const auto& ty : kTypes) {
      CAPTURE(ty);
      auto s = build_root_system(ty);
      CHECK(s.num_positive() == counts[ty]);
      std::set<Coords> pos;
      for (const auto& c : weyl_orbit_roots(s.cartan()))
        if (std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; })) pos.insert(c);
      std::set<Coords> got;
      for (const auto& r : s.positive_roots()) {
        got.insert(r.coords);
        CHECK(r.height == std::accumulate(r.coords.begin(), r.coords.end(), 0));
      }
      CHECK(got == pos);
      for (int i = 0; i + 1 < s.num_positive(); ++i) CHECK(s.root(i).height <= s.root(i + 1).height);
      for (int i = 0; i < s.rank(); ++i) {
        Coords e(s.rank(), 0);
        e[i] = 1;
        CHECK(s.root(i).coords == e);
        CHECK(s.coroot_coeffs(i) == e);
      }
    }
    auto e6 = build_root_system("E6", 6);
    CHECK(e6.num_positive() == 36);
  }

  TEST_CASE("coroot expansions match 2 alpha / (alpha, alpha)") {
    for (const auto& ty : kTypes) {
      CAPTURE(ty);
      auto s = build_root_system(ty);
      auto g = gram(s.cartan());
      for (int a = 0; a < s.num_positive(); ++a) {
        const auto& c = s.root(a).coords;
        long long aa = form(g, c, c);
        for (int i = 0; i < s.rank(); ++i) {
          long long num = c[i] * g[i][i];
          REQUIRE(num % aa == 0);
          CHECK(s.coroot_coeffs(a)[i] == num / aa);
        }
      }
    }
  }

  TEST_CASE("unsupported types") {
    CHECK_THROWS_AS(build_root_system("E8", 8), ConfigError);
    CHECK_THROWS_AS(build_root_system("E7", 8), ConfigError);
    CHECK_THROWS_AS(build_root_system("A5"), ConfigError);
    CHECK_THROWS_AS(build_root_system("D3"), ConfigError);
    CHECK_THROWS_AS(build_root_system("F3"), ConfigError);
    CHECK_THROWS_AS(build_root_system("X2"), ConfigError);
    CHECK_NOTHROW(build_root_system("A5", 5));
  }

  TEST_CASE("alpha-strings") {
    auto g2 = build_root_system("G2");
    auto s = alpha_string(g2, 0, idx(g2, {3, 1}));
    CHECK(coords_of(g2, s.members) == std::vector<Coords>{R({3, 1}), R({2, 1}), R({1, 1}), R({0, 1})});
    CHECK_FALSE(s.isolated);
    auto rebased = alpha_string(g2, 0, idx(g2, {1, 1}));
    CHECK(rebased.members == s.members);

    auto iso = alpha_string(g2, 1, idx(g2, {2, 1}));
    CHECK(iso.isolated);
    CHECK(coords_of(g2, iso.members) == std::vector<Coords>{R({2, 1})});

    auto b2 = build_root_system("B2");
    auto bs = alpha_string(b2, 0, idx(b2, {1, 2}));
    // brute force: neither beta + alpha nor beta - alpha is a root
    CHECK_FALSE(b2.is_root(R({2, 2})));
    CHECK_FALSE(b2.is_root(R({0, 2})));
    CHECK(bs.isolated);

    CHECK_THROWS_AS(alpha_string(b2, 0, 0), DomainError);
    CHECK_THROWS_AS(alpha_string(b2, 2, 1), DomainError);
    CHECK_THROWS_AS(alpha_string(b2, 0, 17), DomainError);
  }

  TEST_CASE("extended alpha-strings") {
    auto b2 = build_root_system("B2");
    auto e = extended_alpha_string(b2, 0, idx(b2, {1, 1}));
    CHECK(coords_of(b2, e.members) == std::vector<Coords>{R({1, 2}), R({1, 1}), R({0, 1})});

    auto a2 = build_root_system("A2");
    auto ea = extended_alpha_string(a2, 0, idx(a2, {1, 1}));
    CHECK(ea.members == alpha_string(a2, 0, idx(a2, {1, 1})).members);

    auto g2 = build_root_system("G2");
    auto eg = extended_alpha_string(g2, 1, idx(g2, {1, 1}));
    CHECK(coords_of(g2, eg.members) ==
          std::vector<Coords>{R({3, 2}), R({3, 1}), R({2, 1}), R({1, 1}), R({1, 0})});
    auto eg1 = extended_alpha_string(g2, 0, idx(g2, {3, 1}));
    CHECK(coords_of(g2, eg1.members) ==
          std::vector<Coords>{R({3, 2}), R({3, 1}), R({2, 1}), R({1, 1}), R({0, 1})});

    CHECK_THROWS_AS(extended_alpha_string(g2, 1, idx(g2, {2, 1})), DomainError);
  }

  TEST_CASE("string classification for every non-G2 type") {
    for (const auto& ty : kTypes) {
      auto s = build_root_system(ty);
      for (int a = 0; a < s.rank(); ++a)
        for (int b = 0; b < s.num_positive(); ++b) {
          if (b == a) continue;
          auto st = alpha_string(s, a, b);
          CHECK(st.members.size() <= 4);
          if (st.isolated || s.kind() == RootKind::G) continue;
          CAPTURE(ty);
          const auto& beta = s.root(st.base).coords;
          std::vector<Coords> plain2 = {beta, beta}, plain3 = {beta, beta, beta};
          plain2[1][a] -= 1;
          plain3[1][a] -= 1;
          plain3[2][a] -= 2;
          auto got = coords_of(s, st.members);
          CHECK((got == plain2 || got == plain3));
          auto ext = coords_of(s, extended_alpha_string(s, a, b).members);
          Coords top(beta.size());
          for (std::size_t i = 0; i < top.size(); ++i) top[i] = 2 * beta[i];
          top[a] -= 1;
          std::vector<Coords> bigger = {top};
          bigger.insert(bigger.end(), got.begin(), got.end());
          CHECK((ext == got || ext == bigger));
        }
    }
  }

  TEST_CASE("G2 nesting of extended strings") {
    auto g2 = build_root_system("G2");
    auto small = extended_alpha_string(g2, 1, idx(g2, {3, 2})).members;
    auto big = extended_alpha_string(g2, 1, idx(g2, {1, 1})).members;
    CHECK(coords_of(g2, small) == std::vector<Coords>{R({3, 2}), R({3, 1})});
    for (int x : small) CHECK(std::find(big.begin(), big.end(), x) != big.end());
  }

  TEST_CASE("parabolic data") {
    auto a2 = build_root_system("A2");
    auto pd = parabolic_data(a2, {});
    CHECK(coords_of(a2, pd.complement) == std::vector<Coords>{R({1, 0}), R({0, 1}), R({1, 1})});
    CHECK(pd.t == 3);
    CHECK(pd.s == 0);
    CHECK(pd.k == 3);

    auto b2 = build_root_system("B2");
    auto pb = parabolic_data(b2, {0});
    CHECK(coords_of(b2, pb.complement) == std::vector<Coords>{R({0, 1}), R({1, 1}), R({1, 2})});

    auto g2 = build_root_system("G2");
    auto pg = parabolic_data(g2, {1});
    CHECK(coords_of(g2, pg.complement) ==
          std::vector<Coords>{R({1, 0}), R({1, 1}), R({2, 1}), R({3, 1}), R({3, 2})});

    CHECK_THROWS_AS(parabolic_data(a2, {0, 1}), DomainError);
    CHECK_THROWS_AS(parabolic_data(a2, {0, 0}), DomainError);
    CHECK_THROWS_AS(parabolic_data(a2, {2}), DomainError);
  }

  TEST_CASE("alpha-orders") {
    auto b2 = build_root_system("B2");
    auto pb = parabolic_data(b2, {1});
    CHECK(coords_of(b2, alpha_order(b2, pb, 1)) == std::vector<Coords>{R({1, 2}), R({1, 1}), R({1, 0})});

    auto a2 = build_root_system("A2");
    auto pa = parabolic_data(a2, {0});
    CHECK(coords_of(a2, alpha_order(a2, pa, 0)) == std::vector<Coords>{R({1, 1}), R({0, 1})});
    CHECK_THROWS_AS(alpha_order(a2, pa, 1), DomainError);

    auto g2 = build_root_system("G2");
    auto pg1 = parabolic_data(g2, {0});
    CHECK(coords_of(g2, alpha_order(g2, pg1, 0)) ==
          std::vector<Coords>{R({3, 2}), R({3, 1}), R({2, 1}), R({1, 1}), R({0, 1})});
    auto pg2 = parabolic_data(g2, {1});
    CHECK(coords_of(g2, alpha_order(g2, pg2, 1)) ==
          std::vector<Coords>{R({3, 2}), R({3, 1}), R({2, 1}), R({1, 1}), R({1, 0})});

    // A3 with I = {alpha_1, alpha_3}, alpha = alpha_2 is not in I; use alpha_1:
    // every complement root lies in some alpha_1 string or is isolated.
    auto a3 = build_root_system("A3");
    auto p3 = parabolic_data(a3, {0, 2});
    auto ord = alpha_order(a3, p3, 0);
    std::vector<int> sorted = ord;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == p3.complement);
  }

  TEST_CASE("closed subsets") {
    auto a2 = build_root_system("A2");
    CHECK(is_closed_subset(a2, {0}));
    CHECK_FALSE(is_closed_subset(a2, {0, 1}));
    for (const auto& ty : kTypes) {
      auto s = build_root_system(ty);
      for (int mask = 0; mask < (1 << s.rank()) - 1; ++mask) {
        std::vector<int> I;
        for (int i = 0; i < s.rank(); ++i)
          if (mask >> i & 1) I.push_back(i);
        auto pd = parabolic_data(s, I);
        CHECK(is_closed_subset(s, pd.complement));
        CHECK(pd.s + pd.k == pd.t);
        // extended strings based in the complement stay inside it
        for (int a : I)
          for (int b : pd.complement) {
            auto st = alpha_string(s, a, b);
            if (st.isolated) continue;
            for (int m : extended_alpha_string(s, a, b).members) CHECK(pd.in_complement(m));
          }
      }
    }
  }

  TEST_CASE("rho pairings") {
    auto a2 = build_root_system("A2");
    CHECK(rho_pairing(a2, 0) == 1);
    CHECK(rho_pairing(a2, 1) == 1);
    CHECK(rho_pairing(a2, idx(a2, {1, 1})) == 2);

    auto b2 = build_root_system("B2");
    auto pd = parabolic_data(b2, {0});
    // half of alpha_1(h_2), from the Cartan matrix directly
    CHECK(rho_I_pairing(b2, pd, 1) * 2 == b2.cartan()[1][0]);
    CHECK(rho_I_pairing(b2, pd, 1) == -1);

    for (const auto& ty : kTypes) {
      auto s = build_root_system(ty);
      for (int mask = 0; mask < (1 << s.rank()) - 1; ++mask) {
        std::vector<int> I;
        for (int i = 0; i < s.rank(); ++i)
          if (mask >> i & 1) I.push_back(i);
        auto p = parabolic_data(s, I);
        for (int a : p.phi_I_plus) CHECK(rho_pairing(s, a) == rho_I_pairing(s, p, a));
      }
    }
  }

  TEST_CASE("JSON export and root tokens") {
    auto b2 = build_root_system("B2");
    auto j = nlohmann::json::parse(to_json(b2));
    CHECK(j["kind"] == "B");
    CHECK(j["rank"] == 2);
    CHECK(j["cartan"] == nlohmann::json::array({{2, -1}, {-2, 2}}));
    CHECK(j["positive_roots"].size() == 4);
    CHECK(j["positive_roots"][3] == nlohmann::json::array({1, 2}));
    CHECK(root_token(b2.root(3)) == "12");
    CHECK(parse_root_token(b2, "12") == 3);
    CHECK_THROWS_AS(parse_root_token(b2, "21"), ConfigError);
    CHECK_THROWS_AS(parse_root_token(b2, "1"), ConfigError);
  }
}
