#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "abseq/abs_core.hpp"
#include "abseq/polygon.hpp"

namespace abseq {

// Images of 0..h-1; rendered 1-based.
using Permutation = std::vector<int>;

struct CosetRep {
  Permutation w;
  int h = 0;
  int c = 0;
  bool operator==(const CosetRep&) const = default;
};

class OracleCapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Largest height the brute-force oracle accepts; ABS_ORACLE_CAP overrides the default 10.
int oracle_cap();

Permutation identity_permutation(int h);
Permutation compose(const Permutation& a, const Permutation& b); // a after b
Permutation inverse(const Permutation& w);
Permutation transposition(int h, int a, int b);

std::int64_t coxeter_length(const Permutation& w);
bool bruhat_leq(const Permutation& u, const Permutation& w);

// Minimal representative of W_J w: preimages of each block appear in increasing order.
bool is_coset_rep(const Permutation& w, int c);

CosetRep jw_from_word(const std::vector<int>& word);
CosetRep jw_from_abs(const Abs& s, int c);
std::vector<int> abs_word_from_jw(const CosetRep& r);

Permutation x_permutation(int h, int c);
Permutation theta(const Permutation& u, int h, int c);

// Every u in W_J = S_c x S_d acting on the value blocks.
std::vector<Permutation> parabolic_subgroup(int h, int c);
std::vector<CosetRep> all_coset_reps(int h, int c);

// Some u in W_J has u^-1 w' theta(u) <= w.
bool specializes(const CosetRep& w_prime, const CosetRep& w);
std::vector<CosetRep> generic_specializations(const CosetRep& w);

struct OracleReport {
  NewtonPolygon xi;
  std::vector<std::vector<int>> oracle_words;
  std::vector<std::vector<int>> exchange_words;
  bool equal = false;
};

OracleReport oracle_report(const NewtonPolygon& xi);

std::string word_string(const std::vector<int>& word);

} // namespace abseq
