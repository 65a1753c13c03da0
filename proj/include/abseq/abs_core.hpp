#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "abseq/polygon.hpp"

namespace abseq {

// One symbol 0^X_i or 1^X_i; origin 0 is tag A, 1 is B, and so on.
struct AbsElement {
  int origin = 0;
  int index = 1;
  int delta = 0;

  std::string tag() const;
  std::string label() const; // e.g. "0^A_6"
  bool operator==(const AbsElement&) const = default;
};

// Elements in order (position = rank) and pi as a permutation of 0-based positions.
struct Abs {
  std::vector<AbsElement> elements;
  std::vector<int> pi;

  int size() const { return static_cast<int>(elements.size()); }
  std::vector<int> word() const;
  std::vector<int> pi_inverse() const;
  // Position of the element with this origin/index, or -1.
  int position_of(int origin, int index) const;
  int position_of(const AbsElement& e) const { return position_of(e.origin, e.index); }
  std::string order_string() const; // labels separated by spaces
  bool operator==(const Abs&) const = default;
};

// One period of the purely periodic expansion 0.b1 b2 ...
struct BinaryWord {
  std::vector<int> bits;
};

// Index form of a DM1 built from a word; maps are 1-based.
struct IndexDm1 {
  int h = 0;
  int c = 0;
  int d = 0;
  std::map<int, int> f_map;
  std::map<int, int> v_map;
};

Abs simple_abs(int m, int n, int origin = 0);

BinaryWord binary_expansion(const Abs& s, int pos);
std::strong_ordering compare_expansions(const BinaryWord& a, const BinaryWord& b);

// Admissible pi for a word: a zero goes to its rank among zeros, a one to d plus its rank among ones.
std::vector<int> canonical_pi(const std::vector<int>& word);

// Admissible ABS carrying the word, elements tagged with one origin and numbered by position.
Abs abs_from_word(const std::vector<int>& word, int origin = 0);

// Reorders s by binary expansion. Ties inside an equal-expansion class are seeded by
// seed_rank on one class of each pi-cycle of classes and carried around by pi.
// Throws std::runtime_error when no admissible order exists, unless relaxed: then every
// class keeps its seed order and pi is replaced by the admissible map of the sorted word.
Abs order_by_expansion(const Abs& s, const std::vector<int>& seed_rank, bool relaxed = false);

Abs direct_sum(const Abs& a, const Abs& b);
Abs minimal_abs(const NewtonPolygon& xi);

std::int64_t length(const Abs& s);
std::int64_t word_length(const std::vector<int>& word);

bool is_admissible(const Abs& s);
IndexDm1 dm1_from_word(const std::vector<int>& word);

Abs dual(const Abs& s);
NewtonPolygon dual_polygon(const NewtonPolygon& xi);

std::vector<Abs> cycle_components(const Abs& s);
std::optional<Segment> identify_simple(const Abs& s);

// Same word and same pi on positions; origin tags ignored.
bool isomorphic(const Abs& a, const Abs& b);

} // namespace abseq
