#include "mhz/indexsets.hpp"

#include <stdexcept>

namespace mhz {

MultiIndex::MultiIndex(std::vector<long> entries_) : entries(std::move(entries_)) {
  if (entries.empty()) throw std::invalid_argument("empty multi-index");
  for (long e : entries)
    if (e < 0) throw std::invalid_argument("multi-index entries must be >= 0");
}

KVector::KVector(std::vector<long> entries_) : entries(std::move(entries_)) {
  for (long e : entries)
    if (e < 0) throw std::invalid_argument("k entries must be >= 0");
}

AlphaVec::AlphaVec(std::vector<Rat> alphas_) : alphas(std::move(alphas_)) {
  if (alphas.empty()) throw std::invalid_argument("empty alpha vector");
  for (const Rat& a : alphas)
    if (a <= 0) throw std::invalid_argument("alpha entries must be positive");
}

AlphaVec AlphaVec::broadcast(const Rat& value, int n) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  return AlphaVec(std::vector<Rat>(n, value));
}

std::vector<Rat> AlphaVec::increments() const {
  std::vector<Rat> d;
  d.reserve(alphas.size() - 1);
  for (size_t j = 1; j < alphas.size(); ++j) d.push_back(alphas[j] - alphas[j - 1]);
  return d;
}

const char* variant_name(Variant v) {
  return v == Variant::corrected ? "corrected" : "paper";
}

Variant parse_variant(const std::string& name) {
  if (name == "corrected") return Variant::corrected;
  if (name == "paper") return Variant::paper;
  throw std::invalid_argument("unknown variant: " + name);
}

std::vector<long> denominator_factors(const MultiIndex& N, const KVector& k) {
  int n = N.dim();
  if (static_cast<int>(k.entries.size()) != n - 1)
    throw std::invalid_argument("k length must be n-1");
  // d_n = N_n + 1,   d_j = N_j + 1 + d_{j+1} - k_{j+1}
  std::vector<long> d(n);
  d[n - 1] = N.entries[n - 1] + 1;
  for (int j = n - 1; j-- > 0;) d[j] = N.entries[j] + 1 + d[j + 1] - k.entries[j];
  return d;
}

namespace {

// Walk k_n, k_{n-1}, .., k_2; the bound d_j is determined by the suffix
// already fixed.  With `guarded` the walk also admits d_j = 0 (forcing
// k_j = 0), the boundary case relevant to the polar scan.
template <class Leaf>
void walk_T(const MultiIndex& N, bool guarded, Leaf&& leaf) {
  int n = N.dim();
  std::vector<long> k(n > 1 ? n - 1 : 0, 0); // k[j-2] holds k_j
  auto rec = [&](auto&& self, int j, long d_next) -> void {
    // d_j for the suffix fixed so far
    long dj = N.entries[j - 1] + 1 + d_next - (j < n ? k[j - 1] : 0);
    if (j == 1) {
      leaf(k, dj);
      return;
    }
    long bound = guarded ? std::max<long>(dj, 0) : dj;
    for (long kj = 0; kj <= bound; ++kj) {
      k[j - 2] = kj;
      self(self, j - 1, dj);
    }
  };
  if (n == 1) {
    leaf(k, N.entries[0] + 1);
    return;
  }
  rec(rec, n, 0); // d_{n+1} treated as 0, k_{n+1} absent
}

} // namespace

std::vector<KVector> enumerate_T(const MultiIndex& N) {
  std::vector<KVector> out;
  walk_T(N, false, [&](const std::vector<long>& k, long) {
    out.push_back(KVector(k));
  });
  return out;
}

PolarScan is_polar(const MultiIndex& N) {
  PolarScan scan;
  walk_T(N, true, [&](const std::vector<long>& k, long) {
    if (scan.polar) return;
    for (long dj : denominator_factors(N, KVector(k)))
      if (dj == 0) {
        scan.polar = true;
        scan.witness = KVector(k);
        return;
      }
  });
  return scan;
}

Rat coefficient_A(const MultiIndex& N, const KVector& k,
                  const std::vector<long>& v, const AlphaVec& alpha,
                  Variant variant) {
  int n = N.dim();
  if (alpha.dim() != n || static_cast<int>(v.size()) != n)
    throw std::invalid_argument("dimension mismatch");
  std::vector<long> d = denominator_factors(N, k);
  for (int j = 2; j <= n; ++j)
    if (k.entries[j - 2] > d[j - 1])
      throw std::invalid_argument("k outside T(N)");
  long M = d[0];
  if (v[0] < 0 || v[0] > M) throw std::invalid_argument("v_1 out of range");
  for (int j = 2; j <= n; ++j)
    if (v[j - 1] < 0 || v[j - 1] > k.entries[j - 2])
      throw std::invalid_argument("v_j out of range");

  std::vector<Rat> bases = variant == Variant::corrected
                               ? alpha.increments()
                               : std::vector<Rat>(alpha.alphas.begin() + 1,
                                                  alpha.alphas.end());
  Rat A = Rat(binomial(static_cast<unsigned long>(M),
                       static_cast<unsigned long>(v[0]))) *
          pow_rat(alpha.alphas[0], static_cast<unsigned long>(M - v[0]));
  for (int j = 2; j <= n; ++j) {
    long kj = k.entries[j - 2];
    A *= Rat(binomial(static_cast<unsigned long>(d[j - 1]),
                      static_cast<unsigned long>(kj)));
    A *= Rat(binomial(static_cast<unsigned long>(kj),
                      static_cast<unsigned long>(v[j - 1])));
    A *= pow_rat(bases[j - 2], static_cast<unsigned long>(kj - v[j - 1]));
  }
  return A;
}

} // namespace mhz
