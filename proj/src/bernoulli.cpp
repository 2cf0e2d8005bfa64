#include "mhz/bernoulli.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace mhz {

Rat poly1_eval(const Poly1& p, const Rat& x) {
  Rat acc(0);
  for (size_t i = p.size(); i-- > 0;) {
    acc *= x;
    acc += p[i];
  }
  return acc;
}

Poly1 poly1_shift(const Poly1& p, const Rat& c) {
  if (p.empty()) return {};
  Poly1 out(p.size(), Rat(0));
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    // p_i (x + c)^i
    for (size_t t = 0; t <= i; ++t)
      out[t] += p[i] * Rat(binomial(static_cast<unsigned long>(i),
                                    static_cast<unsigned long>(t))) *
                pow_rat(c, static_cast<unsigned long>(i - t));
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

Rat poly1_integral_01(const Poly1& p) {
  Rat acc(0);
  for (size_t i = 0; i < p.size(); ++i)
    acc += p[i] / Rat(static_cast<unsigned long>(i + 1));
  return acc;
}

Rat BernoulliCache::number(unsigned long m) {
  std::lock_guard<std::mutex> guard(lock_);
  if (m >= table_.size()) extend(m);
  return table_[m];
}

unsigned long BernoulliCache::computed() const {
  std::lock_guard<std::mutex> guard(lock_);
  return static_cast<unsigned long>(table_.size());
}

void BernoulliCache::extend(unsigned long m) {
  if (table_.empty()) table_.push_back(Rat(1));
  for (unsigned long i = table_.size(); i <= m; ++i) {
    Rat acc(0);
    for (unsigned long j = 0; j < i; ++j)
      acc += Rat(binomial(i + 1, j)) * table_[j];
    acc /= Rat(i + 1);
    table_.push_back(-acc);
  }
}

void BernoulliCache::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) return;
  std::vector<Rat> loaded;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    size_t tab = line.find('\t');
    if (tab == std::string::npos) return; // corrupt: keep nothing
    try {
      unsigned long m = std::stoul(line.substr(0, tab));
      if (m != loaded.size()) return; // must be contiguous from 0
      loaded.push_back(parse_rat(line.substr(tab + 1)));
    } catch (const std::exception&) {
      return;
    }
  }
  if (!loaded.empty() && loaded[0] != 1) return;
  if (loaded.size() > 1 && loaded[1] != Rat(-1, 2)) return;
  // any single corrupted entry breaks one of these: odd entries past B_1
  // vanish, and the last entry must satisfy the recurrence over the prefix
  for (size_t m = 3; m < loaded.size(); m += 2)
    if (loaded[m] != 0) return;
  if (loaded.size() > 2) {
    unsigned long last = static_cast<unsigned long>(loaded.size()) - 1;
    Rat acc(0);
    for (unsigned long j = 0; j < last; ++j)
      acc += Rat(binomial(last + 1, j)) * loaded[j];
    if (loaded[last] != -acc / Rat(last + 1)) return;
  }
  std::lock_guard<std::mutex> guard(lock_);
  if (loaded.size() > table_.size()) table_ = std::move(loaded);
}

bool BernoulliCache::save(const std::string& path) const {
  std::vector<Rat> snapshot;
  {
    std::lock_guard<std::mutex> guard(lock_);
    snapshot = table_;
  }
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return false;
    for (size_t m = 0; m < snapshot.size(); ++m)
      out << m << '\t' << rat_str(snapshot[m]) << '\n';
    if (!out) return false;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    return false;
  }
  return true;
}

BernoulliCache& bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

Rat bernoulli_number(unsigned long m) { return bernoulli_cache().number(m); }

Poly1 bernoulli_polynomial(unsigned long m) {
  Poly1 p(m + 1, Rat(0));
  for (unsigned long j = 0; j <= m; ++j)
    p[m - j] = Rat(binomial(m, j)) * bernoulli_number(j);
  return p;
}

} // namespace mhz
