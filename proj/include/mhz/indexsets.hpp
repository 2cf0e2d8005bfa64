#pragma once

#include "mhz/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mhz {

// the point N = (N_1..N_n) at which values are taken (arguments s = -N)
struct MultiIndex {
  explicit MultiIndex(std::vector<long> entries_);
  int dim() const { return static_cast<int>(entries.size()); }
  std::vector<long> entries;
};

// (k_2..k_n); empty when n = 1
struct KVector {
  KVector() = default;
  explicit KVector(std::vector<long> entries_);
  std::vector<long> entries;
  bool operator==(const KVector&) const = default;
};

// shifts alpha = (alpha_1..alpha_n), all positive; the increments
// delta_j = alpha_j - alpha_{j-1} are derived on demand, never stored
struct AlphaVec {
  explicit AlphaVec(std::vector<Rat> alphas_);
  static AlphaVec broadcast(const Rat& value, int n);
  int dim() const { return static_cast<int>(alphas.size()); }
  std::vector<Rat> increments() const; // n-1 entries, delta_2..delta_n
  std::vector<Rat> alphas;
};

// `corrected` assembles increment powers delta_j^..; `paper` keeps the
// published bases alpha_j^.. for side-by-side arbitration
enum class Variant { corrected, paper };
const char* variant_name(Variant v);
Variant parse_variant(const std::string& name);

// d_j = sum_{i=j..n} N_i + (n-j+1) - sum_{i=j+1..n} k_i, for j = 1..n
std::vector<long> denominator_factors(const MultiIndex& N, const KVector& k);

// all k with 0 <= k_j <= d_j(N,k), j = 2..n; k_n chosen outermost since
// d_j depends only on k_{j+1..n}; deterministic order
std::vector<KVector> enumerate_T(const MultiIndex& N);

struct PolarScan {
  bool polar = false;
  std::optional<KVector> witness;
};

// true iff some k with nonvanishing numerator guards has a vanishing d_j
PolarScan is_polar(const MultiIndex& N);

// expansion coefficient A(-N) for the (k, v) term:
//   C(M, v_1) alpha_1^{M - v_1} prod_{j>=2} C(d_j, k_j) C(k_j, v_j) b_j^{k_j - v_j}
// with M = d_1, b_j = delta_j (corrected) or alpha_j (paper), 0^0 = 1
Rat coefficient_A(const MultiIndex& N, const KVector& k,
                  const std::vector<long>& v, const AlphaVec& alpha,
                  Variant variant);

} // namespace mhz
