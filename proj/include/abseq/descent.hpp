#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "abseq/abs_core.hpp"
#include "abseq/polygon.hpp"
#include "abseq/specialize.hpp"

namespace abseq {

struct DescentStep {
  NewtonPolygon xi;
  ExchangeSite site;
  char case_tag = '?';
  Segment rho;
  NewtonPolygon xi_prime;
  ExchangeSite next_site;
  Abs s_minus_minus;
  bool dual_frame = false; // step computed on the dual polygon
  bool guard_used = false; // the threshold-selected case failed and another one matched
};

struct Thresholds {
  std::vector<int> c_list;  // i_1, i_2, ... in order along Q
  std::vector<int> t_sizes; // |T_{i_x}|
  int gamma = 0;
  int d_split = 0; // x with i_x = n1 - gamma
  std::vector<int> d_list;  // j_1, j_2, ... in order along U
  std::vector<int> z_sizes; // |Z_{j_x}|
  int mu = 0;
  int e_split = 0; // x with j_x = 1 + mu
};

// Indices along the two pi-paths of the simple ABS of (m1,n1) with n1 > m1.
struct PathPair {
  std::vector<AbsElement> first;  // P (or U)
  std::vector<AbsElement> second; // Q (or V)
};

PathPair paths_PQ(const Abs& a);
PathPair paths_UV(const Abs& b);

Thresholds thresholds(const NewtonPolygon& xi);

// Good specializations of a polygon, keyed by site.
class DescentCache {
public:
  const std::vector<std::pair<ExchangeSite, Abs>>& good_specializations(const NewtonPolygon& xi);

private:
  std::map<std::string, std::vector<std::pair<ExchangeSite, Abs>>> table_;
};

struct SecondExchange {
  char case_tag = '?';
  Abs s_minus_minus;
};

// S-- for the threshold-selected case; validation is left to split_and_recognize.
SecondExchange second_exchange(const NewtonPolygon& xi, const ExchangeSite& site, const Abs& s_minus);
std::optional<Abs> apply_case(const NewtonPolygon& xi, const ExchangeSite& site, const Abs& s_minus,
                              char case_tag);
char select_case(const NewtonPolygon& xi, const ExchangeSite& site);

// Throws std::runtime_error when S-- is not N_rho plus a good specialization of xi'.
DescentStep split_and_recognize(const Abs& s_minus_minus, const NewtonPolygon& xi,
                                const ExchangeSite& site, char case_tag,
                                DescentCache* cache = nullptr);

struct DescentResult {
  NewtonPolygon zeta;
  std::vector<DescentStep> steps;
};

// Site must be a good exchange of the straddling polygon xi.
DescentResult generic_np(const NewtonPolygon& xi, const ExchangeSite& site,
                         DescentCache* cache = nullptr);

struct ScanReport {
  NewtonPolygon xi;
  int oracle_count = 0;
  int confirmed = 0;
  std::vector<std::vector<int>> counterexamples; // oracle words not predicted
  std::vector<std::vector<int>> unmatched;       // predicted words not found by the oracle
};

// Report only: generic specializations against sums of adjacent-pair specializations.
ScanReport conjecture_scan(const NewtonPolygon& xi, int max_h);

} // namespace abseq
