#include "abseq/weyl.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <set>
#include <thread>

#include "abseq/specialize.hpp"

namespace abseq {

int oracle_cap() {
  if (const char* env = std::getenv("ABS_ORACLE_CAP")) {
    int v = std::atoi(env);
    if (v > 0)
      return v;
  }
  return 10;
}

Permutation identity_permutation(int h) {
  Permutation p(h);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation r(b.size());
  for (std::size_t z = 0; z < b.size(); ++z)
    r[z] = a[b[z]];
  return r;
}

Permutation inverse(const Permutation& w) {
  Permutation r(w.size());
  for (std::size_t z = 0; z < w.size(); ++z)
    r[w[z]] = static_cast<int>(z);
  return r;
}

Permutation transposition(int h, int a, int b) {
  Permutation p = identity_permutation(h);
  std::swap(p[a], p[b]);
  return p;
}

std::int64_t coxeter_length(const Permutation& w) {
  std::int64_t inv = 0;
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b)
      if (w[a] > w[b])
        ++inv;
  return inv;
}

namespace {

// r[i][j] = #{a <= i : w(a) >= j}, flattened.
std::vector<int> rank_matrix(const Permutation& w) {
  const int h = static_cast<int>(w.size());
  std::vector<int> r(h * h, 0);
  std::vector<int> cnt(h, 0);
  for (int i = 0; i < h; ++i) {
    for (int j = 0; j <= w[i]; ++j)
      ++cnt[j];
    std::copy(cnt.begin(), cnt.end(), r.begin() + i * h);
  }
  return r;
}

bool below(const Permutation& u, const std::vector<int>& w_rank) {
  const int h = static_cast<int>(u.size());
  int cnt[64] = {0};
  for (int i = 0; i < h; ++i) {
    for (int j = 0; j <= u[i]; ++j)
      ++cnt[j];
    const int* row = w_rank.data() + i * h;
    for (int j = 0; j < h; ++j)
      if (cnt[j] > row[j])
        return false;
  }
  return true;
}

void check_cap(int h) {
  if (h > oracle_cap())
    throw OracleCapExceeded("height " + std::to_string(h) + " exceeds the oracle cap " +
                            std::to_string(oracle_cap()));
}

} // namespace

bool bruhat_leq(const Permutation& u, const Permutation& w) {
  if (u.size() != w.size())
    throw std::invalid_argument("bruhat_leq needs permutations of equal size");
  return below(u, rank_matrix(w));
}

bool is_coset_rep(const Permutation& w, int c) {
  auto inv = inverse(w);
  for (int k = 0; k + 1 < static_cast<int>(w.size()); ++k)
    if (k + 1 != c && inv[k] > inv[k + 1])
      return false;
  return true;
}

CosetRep jw_from_word(const std::vector<int>& word) {
  const int h = static_cast<int>(word.size());
  const int c = static_cast<int>(std::count(word.begin(), word.end(), 1));
  CosetRep r{Permutation(h), h, c};
  int ones = 0, zeros = 0;
  for (int i = 0; i < h; ++i)
    r.w[i] = word[i] ? ones++ : c + zeros++;
  return r;
}

CosetRep jw_from_abs(const Abs& s, int c) {
  auto w = s.word();
  if (std::count(w.begin(), w.end(), 1) != c)
    throw std::invalid_argument("cut does not match the number of ones");
  return jw_from_word(w);
}

std::vector<int> abs_word_from_jw(const CosetRep& r) {
  std::vector<int> word(r.h);
  for (int i = 0; i < r.h; ++i)
    word[i] = r.w[i] < r.c ? 1 : 0;
  return word;
}

Permutation x_permutation(int h, int c) {
  const int d = h - c;
  Permutation x(h);
  for (int i = 0; i < h; ++i)
    x[i] = i < c ? i + d : i - c;
  return x;
}

Permutation theta(const Permutation& u, int h, int c) {
  Permutation x = x_permutation(h, c);
  return compose(x, compose(u, inverse(x)));
}

std::vector<Permutation> parabolic_subgroup(int h, int c) {
  std::vector<int> left(c), right(h - c);
  std::iota(left.begin(), left.end(), 0);
  std::vector<Permutation> out;
  do {
    std::iota(right.begin(), right.end(), c);
    do {
      Permutation u(left);
      u.insert(u.end(), right.begin(), right.end());
      out.push_back(std::move(u));
    } while (std::next_permutation(right.begin(), right.end()));
  } while (std::next_permutation(left.begin(), left.end()));
  return out;
}

std::vector<CosetRep> all_coset_reps(int h, int c) {
  std::vector<int> word(h, 0);
  std::fill(word.begin(), word.begin() + c, 1);
  std::vector<CosetRep> out;
  // Words in decreasing lexicographic order enumerate every arrangement once.
  do {
    out.push_back(jw_from_word(word));
  } while (std::prev_permutation(word.begin(), word.end()));
  return out;
}

namespace {

struct Twist {
  Permutation u_inv;
  Permutation theta_u;
};

std::vector<Twist> twists(int h, int c) {
  std::vector<Twist> out;
  for (auto& u : parabolic_subgroup(h, c))
    out.push_back({inverse(u), theta(u, h, c)});
  return out;
}

bool specializes_with(const CosetRep& w_prime, const std::vector<int>& w_rank,
                      const std::vector<Twist>& tw) {
  const int h = w_prime.h;
  Permutation y(h);
  for (const auto& t : tw) {
    for (int z = 0; z < h; ++z)
      y[z] = t.u_inv[w_prime.w[t.theta_u[z]]];
    if (below(y, w_rank))
      return true;
  }
  return false;
}

} // namespace

bool specializes(const CosetRep& w_prime, const CosetRep& w) {
  if (w_prime.h != w.h || w_prime.c != w.c)
    throw std::invalid_argument("specializes needs representatives with equal height and cut");
  check_cap(w.h);
  return specializes_with(w_prime, rank_matrix(w.w), twists(w.h, w.c));
}

std::vector<CosetRep> generic_specializations(const CosetRep& w) {
  check_cap(w.h);
  const auto target = coxeter_length(w.w) - 1;
  std::vector<CosetRep> candidates;
  for (auto& r : all_coset_reps(w.h, w.c))
    if (coxeter_length(r.w) == target)
      candidates.push_back(r);
  const auto tw = twists(w.h, w.c);
  const auto w_rank = rank_matrix(w.w);
  std::vector<char> keep(candidates.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t k = next++; k < candidates.size(); k = next++)
      keep[k] = specializes_with(candidates[k], w_rank, tw) ? 1 : 0;
  };
  unsigned n = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < n; ++t)
    pool.emplace_back(worker);
  for (auto& t : pool)
    t.join();
  std::vector<CosetRep> out;
  for (std::size_t k = 0; k < candidates.size(); ++k)
    if (keep[k])
      out.push_back(candidates[k]);
  return out;
}

OracleReport oracle_report(const NewtonPolygon& xi) {
  check_cap(xi.height());
  OracleReport rep;
  rep.xi = xi;
  Abs s = minimal_abs(xi);
  auto w = jw_from_word(s.word());
  std::set<std::vector<int>> oracle, exchanged;
  for (auto& r : generic_specializations(w))
    oracle.insert(abs_word_from_jw(r));
  for (const auto& site : all_sites(shape_of(xi)))
    if (is_good_exchange(s, site))
      exchanged.insert(specialize(s, site).word());
  rep.oracle_words.assign(oracle.begin(), oracle.end());
  rep.exchange_words.assign(exchanged.begin(), exchanged.end());
  rep.equal = oracle == exchanged;
  return rep;
}

std::string word_string(const std::vector<int>& word) {
  std::string s;
  for (int b : word)
    s += static_cast<char>('0' + b);
  return s;
}

} // namespace abseq
