#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bv {

enum class RootKind { A, B, C, D, E, F, G };

char kind_letter(RootKind k);

// A root as integer coordinates over the simple roots.
struct Root {
  std::vector<int> coords;
  int height = 0;

  Root() = default;
  explicit Root(std::vector<int> c);
  bool positive() const;
  friend bool operator==(const Root& a, const Root& b) { return a.coords == b.coords; }
};

// "A2", "G2", ...
std::pair<RootKind, int> parse_type(std::string_view text);

// Irreducible reduced root system with its positive roots in canonical order:
// ascending height, ties broken by lexicographically descending coordinates
// (so the simple roots come first, in index order).
//
// Cartan convention: cartan[i][j] = alpha_j(h_i), the value of the j-th simple
// root on the i-th simple coroot.
class RootSystem {
 public:
  RootKind kind() const { return kind_; }
  int rank() const { return rank_; }
  std::string label() const;
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<Root>& positive_roots() const { return roots_; }
  int num_positive() const { return static_cast<int>(roots_.size()); }
  const Root& root(int idx) const { return roots_[idx]; }
  // Simple root alpha_{i+1} sits at index i.
  int simple_index(int i) const { return i; }
  bool is_simple(int idx) const { return idx >= 0 && idx < rank_; }

  // Index of a positive root with these coordinates.
  std::optional<int> find(const std::vector<int>& coords) const;
  // Whether coords (of either sign) is a root.
  bool is_root(const std::vector<int>& coords) const;

  // h_alpha = sum_i k_i h_i.
  const std::vector<int>& coroot_coeffs(int idx) const { return coroots_[idx]; }
  // beta(h_alpha) for arbitrary integer weight-lattice coordinates beta.
  int pairing(const std::vector<int>& beta, int alpha_idx) const;
  // beta(h_i).
  int simple_pairing(const std::vector<int>& beta, int i) const;
  // Squared length with short roots normalised to 2.
  int length2(const std::vector<int>& coords) const;
  int inner(const std::vector<int>& a, const std::vector<int>& b) const;
  int max_height() const { return roots_.back().height; }

  friend RootSystem build_root_system(RootKind kind, int rank, int max_rank);

 private:
  RootKind kind_ = RootKind::A;
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> simple_len2_;
  std::vector<Root> roots_;
  std::vector<std::vector<int>> coroots_;
  std::map<std::vector<int>, int> index_;
};

// Builds the positive system by string closure from the simple roots; coroot
// expansions come from the Weyl-group action on the dual system.
// Throws ConfigError for unsupported (kind, rank) or rank > max_rank
// (G2 is always accepted; E7 and E8 are not supported).
RootSystem build_root_system(RootKind kind, int rank, int max_rank = 4);
RootSystem build_root_system(std::string_view type, int max_rank = 4);

// Cartan matrix of the given type in the convention above.
std::vector<std::vector<int>> cartan_matrix(RootKind kind, int rank);

struct AlphaString {
  int alpha = -1;  // simple root index
  int base = -1;   // string top: base + alpha is not a root
  std::vector<int> members;  // base, base - alpha, ...
  bool isolated = false;
};

struct ExtendedAlphaString {
  int alpha = -1;
  int base = -1;
  std::vector<int> members;  // l*base + m*alpha ordered by l desc, then m desc
};

// beta is moved up to the top of its alpha-string before listing.
// Throws DomainError when alpha is not simple, beta == alpha or beta is invalid.
AlphaString alpha_string(const RootSystem& sys, int alpha, int beta);
// Throws DomainError when the plain string is isolated.
ExtendedAlphaString extended_alpha_string(const RootSystem& sys, int alpha, int beta);

struct ParabolicData {
  std::vector<int> I;           // simple indices, ascending
  std::vector<int> phi_I_plus;  // canonical order
  std::vector<int> complement;  // canonical order
  int t = 0, s = 0, k = 0;

  bool in_levi(int root_idx) const;
  bool in_complement(int root_idx) const;
  bool in_I(int simple) const;
};

// Throws DomainError unless I is a proper subset of the simple roots.
ParabolicData parabolic_data(const RootSystem& sys, std::vector<int> I);

// Permutation of pd.complement grouping each maximal extended alpha-string
// (with non-isolated plain string) in extended-string order, followed by the
// remaining roots in canonical order. Throws DomainError unless alpha is in I.
std::vector<int> alpha_order(const RootSystem& sys, const ParabolicData& pd, int alpha);

bool is_closed_subset(const RootSystem& sys, const std::vector<int>& subset);

// rho(h_alpha).
int rho_pairing(const RootSystem& sys, int alpha);
// rho_I(h_alpha) with rho_I half the sum of the positive roots of the Levi.
int rho_I_pairing(const RootSystem& sys, const ParabolicData& pd, int alpha);

// JSON document: kind, rank, cartan, positive_roots.
std::string to_json(const RootSystem& sys);

// Coordinates written as a digit string ("32" = 3 alpha_1 + 2 alpha_2).
std::string root_token(const Root& r);
// Parses a digit string of length rank into a positive root index.
int parse_root_token(const RootSystem& sys, std::string_view token);

}  // namespace bv
