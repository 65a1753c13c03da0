#pragma once

#include <stdexcept>
#include <vector>

#include "abseq/abs_core.hpp"
#include "abseq/polygon.hpp"

namespace abseq {

enum class SiteClass { H1, H2, H3 };

const char* to_string(SiteClass k);

// Exchange of 0^A_i and 1^B_j.
struct ExchangeSite {
  int i = 0;
  int j = 0;
  SiteClass klass = SiteClass::H1;
  bool operator==(const ExchangeSite&) const = default;
};

// Segment data of a two-summand ABS read from its tags: A is origin 0, B is origin 1.
struct Shape {
  int m1 = 0, n1 = 0, m2 = 0, n2 = 0;
  int h1() const { return m1 + n1; }
  int h2() const { return m2 + n2; }
};

Shape shape_of(const Abs& s);
Shape shape_of(const NewtonPolygon& xi);

// Throws std::invalid_argument when 0^A_i < 1^B_j is not a site of the minimal ABS.
ExchangeSite classify_site(const Shape& sh, int i, int j);
std::vector<ExchangeSite> all_sites(const Shape& sh);

// The dual site on the dual ABS; H3 sites become H1 sites.
ExchangeSite dual_site(const Shape& sh, const ExchangeSite& site);

struct ModificationTrace {
  std::vector<Abs> snapshots;                     // S^(0) .. S^(a+b)
  std::vector<std::vector<AbsElement>> a_sets;    // A^(0) .. A^(a), in snapshot order
  std::vector<std::vector<AbsElement>> b_sets;    // B^(0) .. B^(b)
  int a = 0;
  int b = 0;
  std::vector<AbsElement> i_set;
  std::vector<int> d_a, d_b, dl_a, dl_b;
  bool terminated = true;
  AbsElement zero;      // the exchanged 0
  AbsElement one;       // the exchanged 1
  AbsElement zero_pre;  // pi^{-1} of the exchanged 0 under the modified pi
  AbsElement one_pre;   // pi^{-1} of the exchanged 1
};

class NonTerminationError : public std::runtime_error {
public:
  NonTerminationError(const std::string& what, ModificationTrace partial)
      : std::runtime_error(what), trace(std::move(partial)) {}
  ModificationTrace trace;
};

// Swaps the two elements in the order and rewires pi at their preimages.
// Requires delta(zero) = 0, delta(one) = 1 and zero before one.
Abs small_modification(const Abs& s, const AbsElement& zero, const AbsElement& one);
Abs small_modification(const Abs& s, const ExchangeSite& site);

// Runs the A-phase and B-phase moves on the summand of `zero`.
// Throws NonTerminationError after h*h moves in a phase.
ModificationTrace full_modification(const Abs& s, const AbsElement& zero, const AbsElement& one);
ModificationTrace full_modification(const Abs& s, const ExchangeSite& site);

// Admissible reordering of an ABS whose pi has been rewired.
Abs canonical_sort(const Abs& s);

// Exchange of any 0 before any 1, by sorting.
Abs exchange(const Abs& s, const AbsElement& zero, const AbsElement& one);

Abs specialize(const Abs& s, const ExchangeSite& site);

bool criterion_holds(const ModificationTrace& t);
bool is_good_exchange(const Abs& s, const ExchangeSite& site);

struct GoodExchangeSets {
  std::vector<int> c_prime;          // indices i of 0^A_i
  std::vector<int> d_prime;          // indices j of 1^B_j
  std::vector<int> c;                // C' minus sites with empty A^(0)
  std::vector<int> d;                // D' minus sites with empty B^(0)
  std::vector<ExchangeSite> h3_good; // good sites with n1 < i
  std::vector<ExchangeSite> good;    // every good site
};

GoodExchangeSets good_exchange_sets(const NewtonPolygon& xi);

// eps(z) = position in S^(0) of the z-th element of S'; 1-based images.
std::vector<int> epsilon_permutation(const Abs& s, const ExchangeSite& site);

} // namespace abseq
