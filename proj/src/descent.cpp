#include "abseq/descent.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "abseq/weyl.hpp"

namespace abseq {

namespace {

int simple_image(int index, int m, int h) { return ((index - m - 1) % h + h) % h + 1; }

// pi-path inside a simple ABS from one index to another, inclusive.
std::vector<AbsElement> follow(const Abs& simple, int from, int to) {
  const int h = simple.size();
  int m = 0;
  for (const auto& e : simple.elements)
    m += e.delta;
  const int origin = simple.elements.front().origin;
  std::vector<AbsElement> out;
  int k = from;
  for (int steps = 0; steps < h; ++steps) {
    out.push_back(simple.elements[k - 1]);
    if (k == to)
      return out;
    k = simple_image(k, m, h);
  }
  throw std::logic_error("path from " + AbsElement{origin, from, 0}.label() + " never reaches index " +
                         std::to_string(to));
}

int count_ones(const Abs& s) {
  int m = 0;
  for (const auto& e : s.elements)
    m += e.delta;
  return m;
}

template <class T> int rank_in(const std::vector<T>& v, const T& x) {
  auto it = std::find(v.begin(), v.end(), x);
  return it == v.end() ? 0 : static_cast<int>(it - v.begin()) + 1;
}

int image_size(const ModificationTrace& tr, const std::vector<AbsElement>& set) {
  const Abs& last = tr.snapshots.back();
  std::set<std::pair<int, int>> img;
  for (const auto& e : set) {
    const auto& t = last.elements[last.pi[last.position_of(e)]];
    img.insert({t.origin, t.index});
  }
  return static_cast<int>(img.size());
}

} // namespace

PathPair paths_PQ(const Abs& a) {
  const int h = a.size();
  const int m = count_ones(a);
  const int n = h - m;
  if (m < 1 || n <= m)
    throw std::invalid_argument("paths P, Q need a simple summand with 0 < m < n");
  PathPair pp{follow(a, m, 2 * m + 1), follow(a, m + 1, 2 * m)};
  if (static_cast<int>(pp.first.size() + pp.second.size()) != h)
    throw std::logic_error("paths P and Q do not partition the summand");
  return pp;
}

PathPair paths_UV(const Abs& b) {
  const int h = b.size();
  const int m = count_ones(b);
  const int n = h - m;
  if (n < 1 || m <= n)
    throw std::invalid_argument("paths U, V need a simple summand with 0 < n < m");
  PathPair pp{follow(b, m, m - n + 1), follow(b, m + 1, m - n)};
  if (static_cast<int>(pp.first.size() + pp.second.size()) != h)
    throw std::logic_error("paths U and V do not partition the summand");
  return pp;
}

Thresholds thresholds(const NewtonPolygon& xi) {
  Shape sh = shape_of(xi);
  Abs s = minimal_abs(xi);
  auto g = good_exchange_sets(xi);
  Thresholds th;
  if (!g.c.empty() && !g.d_prime.empty()) {
    auto q = paths_PQ(simple_abs(sh.m1, sh.n1, 0)).second;
    std::vector<std::pair<int, int>> along;
    for (int i : g.c) {
      int r = rank_in(q, AbsElement{0, i, 0});
      if (r == 0)
        throw std::logic_error("element of C outside the path Q");
      along.push_back({r, i});
    }
    std::sort(along.begin(), along.end());
    for (auto [r, i] : along) {
      auto tr = full_modification(s, ExchangeSite{i, g.d_prime.front(), SiteClass::H1});
      th.c_list.push_back(i);
      th.t_sizes.push_back(image_size(tr, tr.a_sets[tr.a - 1]));
    }
    th.gamma = th.t_sizes.front();
    th.d_split = rank_in(th.c_list, sh.n1 - th.gamma);
  }
  if (!g.d.empty() && !g.c_prime.empty()) {
    auto u = paths_UV(simple_abs(sh.m2, sh.n2, 1)).first;
    std::vector<std::pair<int, int>> along;
    for (int j : g.d) {
      int r = rank_in(u, AbsElement{1, j, 1});
      if (r == 0)
        throw std::logic_error("element of D outside the path U");
      along.push_back({r, j});
    }
    std::sort(along.begin(), along.end());
    for (auto [r, j] : along) {
      auto tr = full_modification(s, ExchangeSite{g.c_prime.front(), j, SiteClass::H1});
      th.d_list.push_back(j);
      th.z_sizes.push_back(image_size(tr, tr.b_sets[tr.b - 1]));
    }
    th.mu = th.z_sizes.front();
    th.e_split = rank_in(th.d_list, 1 + th.mu);
  }
  return th;
}

const std::vector<std::pair<ExchangeSite, Abs>>&
DescentCache::good_specializations(const NewtonPolygon& xi) {
  auto key = xi.to_string();
  auto it = table_.find(key);
  if (it != table_.end())
    return it->second;
  std::vector<std::pair<ExchangeSite, Abs>> out;
  Abs s = minimal_abs(xi);
  for (const auto& site : all_sites(shape_of(xi)))
    if (is_good_exchange(s, site))
      out.push_back({site, specialize(s, site)});
  return table_[key] = std::move(out);
}

char select_case(const NewtonPolygon& xi, const ExchangeSite& site) {
  Shape sh = shape_of(xi);
  if (sh.n1 > sh.m1 + 1) {
    if (site.i == sh.n1)
      return 'b';
    auto th = thresholds(xi);
    int x = rank_in(th.c_list, site.i);
    return x != 0 && x <= th.d_split ? 'a' : 'b';
  }
  if (site.j == 1)
    return sh.n2 > 1 || sh.m1 == 0 ? 'd' : 'e';
  auto th = thresholds(xi);
  int x = rank_in(th.d_list, site.j);
  return x != 0 && x <= th.e_split ? 'c' : 'd';
}

std::optional<Abs> apply_case(const NewtonPolygon& xi, const ExchangeSite& site, const Abs& s_minus,
                              char case_tag) {
  Shape sh = shape_of(xi);
  AbsElement zero, one;
  switch (case_tag) {
  case 'a':
    zero = {0, sh.m1 + 1, 0};
    one = {0, sh.m1, 1};
    break;
  case 'b':
    zero = {0, site.i - 1, 0};
    one = {1, site.j, 1};
    break;
  case 'c':
    zero = {1, sh.m2 + 1, 0};
    one = {1, sh.m2, 1};
    break;
  case 'd':
    zero = {0, site.i, 0};
    one = {1, site.j + 1, 1};
    break;
  case 'e':
    zero = {0, sh.h1(), 0};
    one = {1, sh.n2 + 1, 1};
    break;
  default:
    return std::nullopt;
  }
  int zp = s_minus.position_of(zero);
  int op = s_minus.position_of(one);
  if (zp < 0 || op < 0 || s_minus.elements[zp].delta != 0 || s_minus.elements[op].delta != 1 ||
      zp > op)
    return std::nullopt;
  try {
    return exchange(s_minus, zero, one);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

SecondExchange second_exchange(const NewtonPolygon& xi, const ExchangeSite& site, const Abs& s_minus) {
  char tag = select_case(xi, site);
  auto out = apply_case(xi, site, s_minus, tag);
  if (!out)
    throw std::runtime_error(std::string("case (") + tag + ") does not apply at " + xi.to_string());
  return {tag, *out};
}

namespace {

std::optional<NewtonPolygon> reduced_polygon(const Shape& sh, char tag, const Segment& rho) {
  const int f = rho.m, g = rho.n;
  Segment first{sh.m1, sh.n1}, second{sh.m2, sh.n2};
  switch (tag) {
  case 'a':
  case 'b':
    if (f * sh.n1 - g * sh.m1 != 1)
      return std::nullopt;
    first = {sh.m1 - f, sh.n1 - g};
    break;
  case 'c':
  case 'd':
    if (g * sh.m2 - f * sh.n2 != 1)
      return std::nullopt;
    second = {sh.m2 - f, sh.n2 - g};
    break;
  case 'e':
    if (f != 1 || g != 1)
      return std::nullopt;
    first = {sh.m1 - 1, sh.n1 - 1};
    break;
  default:
    return std::nullopt;
  }
  if (!is_valid_segment(first) || !is_valid_segment(second))
    return std::nullopt;
  NewtonPolygon p = make_polygon({first, second});
  if (!is_straddling(p))
    return std::nullopt;
  return p;
}

} // namespace

DescentStep split_and_recognize(const Abs& s_minus_minus, const NewtonPolygon& xi,
                                const ExchangeSite& site, char case_tag, DescentCache* cache) {
  DescentCache local;
  DescentCache& dc = cache ? *cache : local;
  auto comps = cycle_components(s_minus_minus);
  if (comps.size() != 2)
    throw std::runtime_error("S-- has " + std::to_string(comps.size()) + " components, expected 2");
  Shape sh = shape_of(xi);
  for (int k = 0; k < 2; ++k) {
    const Abs& rho_part = comps[k];
    const Abs& psi = comps[1 - k];
    auto rho = identify_simple(rho_part);
    if (!rho)
      continue;
    auto xi_prime = reduced_polygon(sh, case_tag, *rho);
    if (!xi_prime)
      continue;
    for (const auto& [site2, spec] : dc.good_specializations(*xi_prime)) {
      if (!isomorphic(spec, psi))
        continue;
      DescentStep step;
      step.xi = xi;
      step.site = site;
      step.case_tag = case_tag;
      step.rho = *rho;
      step.xi_prime = *xi_prime;
      step.next_site = site2;
      step.s_minus_minus = s_minus_minus;
      return step;
    }
  }
  throw std::runtime_error(std::string("case (") + case_tag + ") at " + xi.to_string() +
                           " does not split as N_rho plus a generic specialization");
}

DescentResult generic_np(const NewtonPolygon& xi, const ExchangeSite& site, DescentCache* cache) {
  DescentCache local;
  DescentCache& dc = cache ? *cache : local;
  if (!is_straddling(xi))
    throw std::invalid_argument(xi.to_string() + " is not a straddling two-segment polygon");
  Shape sh = shape_of(xi);
  ExchangeSite checked = classify_site(sh, site.i, site.j);
  Abs s = minimal_abs(xi);
  if (!is_good_exchange(s, checked))
    throw std::invalid_argument("site (" + std::to_string(site.i) + "," + std::to_string(site.j) +
                                ") is not a good exchange on " + xi.to_string());

  DescentResult res;
  if (xi.height() == 2) {
    res.zeta = make_polygon({{1, 1}});
  } else if (checked.klass == SiteClass::H3) {
    auto sub = generic_np(dual_polygon(xi), dual_site(sh, checked), &dc);
    res.zeta = dual_polygon(sub.zeta);
    res.steps = std::move(sub.steps);
    for (auto& st : res.steps)
      st.dual_frame = !st.dual_frame;
  } else {
    Abs s_minus = specialize(s, checked);
    const char selected = select_case(xi, checked);
    std::optional<DescentStep> step;
    if (auto ss = apply_case(xi, checked, s_minus, selected)) {
      try {
        step = split_and_recognize(*ss, xi, checked, selected, &dc);
      } catch (const std::runtime_error&) {
      }
    }
    for (char tag : std::string("abcde")) {
      if (step)
        break;
      if (tag == selected)
        continue;
      if (auto ss = apply_case(xi, checked, s_minus, tag)) {
        try {
          step = split_and_recognize(*ss, xi, checked, tag, &dc);
          step->guard_used = true;
        } catch (const std::runtime_error&) {
        }
      }
    }
    if (!step)
      throw std::runtime_error("no second exchange splits the generic specialization at " +
                               xi.to_string());
    auto sub = generic_np(step->xi_prime, step->next_site, &dc);
    res.zeta = add(sub.zeta, make_polygon({step->rho}));
    res.steps.push_back(std::move(*step));
    res.steps.insert(res.steps.end(), sub.steps.begin(), sub.steps.end());
  }
  if (!precedes(res.zeta, xi) || res.zeta == xi || !is_saturated(res.zeta, xi))
    throw std::logic_error(res.zeta.to_string() + " is not a saturated polygon below " +
                           xi.to_string());
  return res;
}

ScanReport conjecture_scan(const NewtonPolygon& xi, int max_h) {
  if (xi.size() < 3)
    throw std::invalid_argument("the scan needs at least three segments");
  if (xi.height() > max_h)
    throw std::invalid_argument(xi.to_string() + " exceeds the requested height bound");
  ScanReport rep;
  rep.xi = xi;
  std::set<std::vector<int>> predicted;
  for (std::size_t r = 0; r + 1 < xi.size(); ++r) {
    NewtonPolygon pair = make_polygon({xi[r], xi[r + 1]});
    auto w = jw_from_word(minimal_abs(pair).word());
    for (const auto& spec : generic_specializations(w)) {
      Abs sum = abs_from_word(abs_word_from_jw(spec), 0);
      for (std::size_t k = 0; k < xi.size(); ++k)
        if (k != r && k != r + 1)
          sum = direct_sum(sum, simple_abs(xi[k].m, xi[k].n, 1));
      predicted.insert(sum.word());
    }
  }
  std::set<std::vector<int>> found;
  for (const auto& spec : generic_specializations(jw_from_word(minimal_abs(xi).word()))) {
    auto word = abs_word_from_jw(spec);
    found.insert(word);
    ++rep.oracle_count;
    if (predicted.count(word))
      ++rep.confirmed;
    else
      rep.counterexamples.push_back(word);
  }
  for (const auto& w : predicted)
    if (!found.count(w))
      rep.unmatched.push_back(w);
  return rep;
}

} // namespace abseq
