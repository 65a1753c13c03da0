#include "abseq/abs_core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace abseq {

std::string AbsElement::tag() const {
  if (origin >= 0 && origin < 26)
    return std::string(1, static_cast<char>('A' + origin));
  return "S" + std::to_string(origin);
}

std::string AbsElement::label() const {
  return std::to_string(delta) + "^" + tag() + "_" + std::to_string(index);
}

std::vector<int> Abs::word() const {
  std::vector<int> w;
  w.reserve(elements.size());
  for (const auto& e : elements)
    w.push_back(e.delta);
  return w;
}

std::vector<int> Abs::pi_inverse() const {
  std::vector<int> inv(pi.size());
  for (std::size_t p = 0; p < pi.size(); ++p)
    inv[pi[p]] = static_cast<int>(p);
  return inv;
}

int Abs::position_of(int origin, int index) const {
  for (std::size_t p = 0; p < elements.size(); ++p)
    if (elements[p].origin == origin && elements[p].index == index)
      return static_cast<int>(p);
  return -1;
}

std::string Abs::order_string() const {
  std::ostringstream out;
  for (std::size_t p = 0; p < elements.size(); ++p) {
    if (p)
      out << ' ';
    out << elements[p].label();
  }
  return out.str();
}

Abs simple_abs(int m, int n, int origin) {
  if (!is_valid_segment({m, n}))
    throw std::invalid_argument("simple_abs needs a coprime pair, got (" + std::to_string(m) + "," +
                                std::to_string(n) + ")");
  int h = m + n;
  Abs s;
  for (int i = 1; i <= h; ++i) {
    s.elements.push_back({origin, i, i <= m ? 1 : 0});
    s.pi.push_back(((i - m - 1) % h + h) % h);
  }
  return s;
}

BinaryWord binary_expansion(const Abs& s, int pos) {
  auto inv = s.pi_inverse();
  BinaryWord b;
  int t = pos;
  do {
    t = inv[t];
    b.bits.push_back(s.elements[t].delta);
  } while (t != pos);
  return b;
}

std::strong_ordering compare_expansions(const BinaryWord& a, const BinaryWord& b) {
  if (a.bits.empty() || b.bits.empty())
    return a.bits.size() <=> b.bits.size();
  // Two periodic words agreeing on p+q letters are equal.
  std::size_t n = a.bits.size() + b.bits.size();
  for (std::size_t k = 0; k < n; ++k) {
    int x = a.bits[k % a.bits.size()];
    int y = b.bits[k % b.bits.size()];
    if (x != y)
      return x <=> y;
  }
  return std::strong_ordering::equal;
}

std::vector<int> canonical_pi(const std::vector<int>& word) {
  int h = static_cast<int>(word.size());
  int d = static_cast<int>(std::count(word.begin(), word.end(), 0));
  std::vector<int> pi(h);
  int zeros = 0, ones = 0;
  for (int p = 0; p < h; ++p)
    pi[p] = word[p] == 0 ? zeros++ : d + ones++;
  return pi;
}

Abs abs_from_word(const std::vector<int>& word, int origin) {
  Abs s;
  for (std::size_t p = 0; p < word.size(); ++p)
    s.elements.push_back({origin, static_cast<int>(p) + 1, word[p]});
  s.pi = canonical_pi(word);
  return s;
}

Abs order_by_expansion(const Abs& s, const std::vector<int>& seed_rank, bool relaxed) {
  const int h = s.size();
  auto inv = s.pi_inverse();

  // A 2h prefix decides equality and order of expansions with periods at most h.
  std::vector<std::vector<char>> prefix(h, std::vector<char>(2 * h));
  for (int t = 0; t < h; ++t) {
    int u = t;
    for (int k = 0; k < 2 * h; ++k) {
      u = inv[u];
      prefix[t][k] = static_cast<char>(s.elements[u].delta);
    }
  }
  std::vector<int> ids(h);
  std::iota(ids.begin(), ids.end(), 0);
  std::stable_sort(ids.begin(), ids.end(), [&](int x, int y) { return prefix[x] < prefix[y]; });

  std::vector<int> class_of(h);
  std::vector<std::vector<int>> classes;
  for (int k = 0; k < h; ++k) {
    if (k == 0 || prefix[ids[k]] != prefix[ids[k - 1]])
      classes.emplace_back();
    classes.back().push_back(ids[k]);
    class_of[ids[k]] = static_cast<int>(classes.size()) - 1;
  }
  const int nc = static_cast<int>(classes.size());
  std::vector<int> class_image(nc);
  for (int c = 0; c < nc; ++c) {
    class_image[c] = class_of[s.pi[classes[c].front()]];
    for (int t : classes[c])
      if (class_of[s.pi[t]] != class_image[c] || classes[class_image[c]].size() != classes[c].size())
        throw std::runtime_error("pi does not act on expansion classes");
  }

  std::vector<std::vector<int>> inner(nc);
  if (relaxed) {
    Abs out;
    for (int c = 0; c < nc; ++c) {
      std::vector<int> order = classes[c];
      std::sort(order.begin(), order.end(), [&](int x, int y) { return seed_rank[x] < seed_rank[y]; });
      for (int t : order)
        out.elements.push_back(s.elements[t]);
    }
    out.pi = canonical_pi(out.word());
    return out;
  }
  std::vector<char> done(nc, 0);
  for (int c0 = 0; c0 < nc; ++c0) {
    if (done[c0])
      continue;
    std::vector<int> cycle;
    for (int c = c0; !done[c]; c = class_image[c]) {
      done[c] = 1;
      cycle.push_back(c);
    }
    auto best = [&](int c) {
      int r = seed_rank[classes[c].front()];
      for (int t : classes[c])
        r = std::min(r, seed_rank[t]);
      return r;
    };
    std::size_t base = 0;
    for (std::size_t k = 1; k < cycle.size(); ++k)
      if (best(cycle[k]) < best(cycle[base]))
        base = k;
    std::vector<int> order = classes[cycle[base]];
    std::sort(order.begin(), order.end(), [&](int x, int y) { return seed_rank[x] < seed_rank[y]; });
    const std::vector<int> seed = order;
    for (std::size_t step = 0; step < cycle.size(); ++step) {
      inner[cycle[(base + step) % cycle.size()]] = order;
      for (int& t : order)
        t = s.pi[t];
    }
    if (order != seed)
      throw std::runtime_error("no admissible order: pi permutes an expansion class nontrivially");
  }

  std::vector<int> new_pos(h);
  Abs out;
  for (int c = 0; c < nc; ++c)
    for (int t : inner[c]) {
      new_pos[t] = out.size();
      out.elements.push_back(s.elements[t]);
    }
  out.pi.assign(h, 0);
  for (int t = 0; t < h; ++t)
    out.pi[new_pos[t]] = new_pos[s.pi[t]];
  return out;
}

Abs direct_sum(const Abs& a, const Abs& b) {
  if (!is_admissible(a) || !is_admissible(b))
    throw std::invalid_argument("direct_sum needs admissible summands");
  int max_a = 0;
  for (const auto& e : a.elements)
    max_a = std::max(max_a, e.origin);
  int min_b = b.elements.empty() ? 0 : b.elements.front().origin;
  for (const auto& e : b.elements)
    min_b = std::min(min_b, e.origin);
  int shift = 0;
  for (const auto& e : b.elements)
    for (const auto& f : a.elements)
      if (e.origin == f.origin)
        shift = max_a + 1 - min_b;

  Abs joined = a;
  const int offset = a.size();
  for (const auto& e : b.elements)
    joined.elements.push_back({e.origin + shift, e.index, e.delta});
  for (int p : b.pi)
    joined.pi.push_back(p + offset);
  std::vector<int> seed(joined.size());
  std::iota(seed.begin(), seed.end(), 0);
  Abs out = order_by_expansion(joined, seed);
  if (!is_admissible(out))
    throw std::logic_error("direct sum produced an inadmissible order");
  return out;
}

Abs minimal_abs(const NewtonPolygon& xi) {
  Abs s = simple_abs(xi[0].m, xi[0].n, 0);
  for (std::size_t k = 1; k < xi.size(); ++k)
    s = direct_sum(s, simple_abs(xi[k].m, xi[k].n, static_cast<int>(k)));
  return s;
}

std::int64_t word_length(const std::vector<int>& word) {
  std::int64_t zeros = 0, total = 0;
  for (int b : word) {
    if (b == 0)
      ++zeros;
    else
      total += zeros;
  }
  return total;
}

std::int64_t length(const Abs& s) { return word_length(s.word()); }

bool is_admissible(const Abs& s) {
  if (s.pi.size() != s.elements.size())
    return false;
  return s.pi == canonical_pi(s.word());
}

IndexDm1 dm1_from_word(const std::vector<int>& word) {
  IndexDm1 n;
  n.h = static_cast<int>(word.size());
  n.d = static_cast<int>(std::count(word.begin(), word.end(), 0));
  n.c = n.h - n.d;
  int zeros = 0;
  std::vector<int> ones;
  for (int i = 1; i <= n.h; ++i) {
    if (word[i - 1] == 0)
      n.f_map[i] = ++zeros;
    else
      ones.push_back(i);
  }
  for (int l = 1; l <= n.c; ++l)
    n.v_map[n.d + l] = ones[l - 1];
  return n;
}

Abs dual(const Abs& s) {
  const int h = s.size();
  if (h == 0)
    return s;
  int lo = s.elements.front().origin, hi = lo;
  std::map<int, int> sizes;
  for (const auto& e : s.elements) {
    lo = std::min(lo, e.origin);
    hi = std::max(hi, e.origin);
    ++sizes[e.origin];
  }
  Abs out;
  out.elements.resize(h);
  out.pi.resize(h);
  for (int p = 0; p < h; ++p) {
    const auto& e = s.elements[p];
    out.elements[h - 1 - p] = {lo + hi - e.origin, sizes[e.origin] - e.index + 1, 1 - e.delta};
    out.pi[h - 1 - p] = h - 1 - s.pi[p];
  }
  return out;
}

NewtonPolygon dual_polygon(const NewtonPolygon& xi) {
  std::vector<Segment> segs;
  for (const auto& s : xi.segments())
    segs.push_back({s.n, s.m});
  return make_polygon(segs);
}

std::vector<Abs> cycle_components(const Abs& s) {
  const int h = s.size();
  std::vector<int> comp(h, -1);
  std::vector<std::vector<int>> members;
  for (int p = 0; p < h; ++p) {
    if (comp[p] >= 0)
      continue;
    members.emplace_back();
    for (int t = p; comp[t] < 0; t = s.pi[t]) {
      comp[t] = static_cast<int>(members.size()) - 1;
      members.back().push_back(t);
    }
  }
  std::vector<Abs> out;
  for (auto& mem : members) {
    std::sort(mem.begin(), mem.end());
    std::map<int, int> local;
    for (std::size_t k = 0; k < mem.size(); ++k)
      local[mem[k]] = static_cast<int>(k);
    Abs c;
    for (int p : mem) {
      c.elements.push_back(s.elements[p]);
      c.pi.push_back(local[s.pi[p]]);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::optional<Segment> identify_simple(const Abs& s) {
  auto w = s.word();
  int f = static_cast<int>(std::count(w.begin(), w.end(), 1));
  int g = static_cast<int>(w.size()) - f;
  if (!is_valid_segment({f, g}))
    return std::nullopt;
  if (!isomorphic(s, simple_abs(f, g)))
    return std::nullopt;
  return Segment{f, g};
}

bool isomorphic(const Abs& a, const Abs& b) { return a.word() == b.word() && a.pi == b.pi; }

} // namespace abseq
