#include "abseq/specialize.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace abseq {

const char* to_string(SiteClass k) {
  switch (k) {
  case SiteClass::H1:
    return "H1";
  case SiteClass::H2:
    return "H2";
  case SiteClass::H3:
    return "H3";
  }
  return "?";
}

Shape shape_of(const Abs& s) {
  Shape sh;
  for (const auto& e : s.elements) {
    if (e.origin == 0)
      (e.delta ? sh.m1 : sh.n1)++;
    else if (e.origin == 1)
      (e.delta ? sh.m2 : sh.n2)++;
    else
      throw std::invalid_argument("expected an ABS with two summands A and B");
  }
  return sh;
}

Shape shape_of(const NewtonPolygon& xi) {
  if (xi.size() != 2)
    throw std::invalid_argument("expected a two-segment polygon, got " + xi.to_string());
  return {xi[0].m, xi[0].n, xi[1].m, xi[1].n};
}

ExchangeSite classify_site(const Shape& sh, int i, int j) {
  if (sh.m1 < i && i <= sh.n1 && 1 <= j && j <= sh.n2)
    return {i, j, SiteClass::H1};
  if (sh.m1 < i && i <= sh.n1 && sh.n2 < j && j <= sh.m2)
    return {i, j, SiteClass::H2};
  if (sh.n1 < i && i <= sh.h1() && sh.n2 < j && j <= sh.m2)
    return {i, j, SiteClass::H3};
  throw std::invalid_argument("(" + std::to_string(i) + "," + std::to_string(j) +
                              ") is not an exchange site");
}

std::vector<ExchangeSite> all_sites(const Shape& sh) {
  std::vector<ExchangeSite> out;
  for (int i = sh.m1 + 1; i <= sh.h1(); ++i)
    for (int j = 1; j <= sh.m2; ++j)
      if (i <= sh.n1 || j > sh.n2)
        out.push_back(classify_site(sh, i, j));
  return out;
}

ExchangeSite dual_site(const Shape& sh, const ExchangeSite& site) {
  Shape dsh{sh.n2, sh.m2, sh.n1, sh.m1};
  return classify_site(dsh, sh.h2() - site.j + 1, sh.h1() - site.i + 1);
}

namespace {

AbsElement zero_of(const ExchangeSite& site) { return {0, site.i, 0}; }
AbsElement one_of(const ExchangeSite& site) { return {1, site.j, 1}; }

// Order of element ids plus the rewired pi on ids.
struct Working {
  std::vector<AbsElement> label;
  std::vector<int> pi;
  std::vector<int> order;
  std::vector<int> pos;

  void reindex() {
    for (std::size_t p = 0; p < order.size(); ++p)
      pos[order[p]] = static_cast<int>(p);
  }

  Abs snapshot() const {
    Abs a;
    for (int id : order) {
      a.elements.push_back(label[id]);
      a.pi.push_back(pos[pi[id]]);
    }
    return a;
  }

  void move_after(int id, int target) {
    order.erase(order.begin() + pos[id]);
    reindex();
    order.insert(order.begin() + pos[target] + 1, id);
    reindex();
  }

  void move_before(int id, int target) {
    order.erase(order.begin() + pos[id]);
    reindex();
    order.insert(order.begin() + pos[target], id);
    reindex();
  }

  std::vector<AbsElement> labels(std::vector<int> ids) const {
    std::sort(ids.begin(), ids.end(), [&](int x, int y) { return pos[x] < pos[y]; });
    std::vector<AbsElement> out;
    for (int id : ids)
      out.push_back(label[id]);
    return out;
  }
};

Working start(const Abs& s, const AbsElement& zero, const AbsElement& one, int& zid, int& oid) {
  zid = s.position_of(zero);
  oid = s.position_of(one);
  if (zid < 0 || oid < 0)
    throw std::invalid_argument("exchange elements not present in the ABS");
  if (s.elements[zid].delta != 0 || s.elements[oid].delta != 1)
    throw std::invalid_argument("exchange needs a 0 and a 1, got " + s.elements[zid].label() +
                                " and " + s.elements[oid].label());
  if (zid > oid)
    throw std::invalid_argument("exchange needs " + s.elements[zid].label() + " before " +
                                s.elements[oid].label());
  Working w;
  const int h = s.size();
  w.label = s.elements;
  w.pi = s.pi;
  auto inv = s.pi_inverse();
  w.pi[inv[zid]] = oid;
  w.pi[inv[oid]] = zid;
  w.order.resize(h);
  std::iota(w.order.begin(), w.order.end(), 0);
  std::swap(w.order[zid], w.order[oid]);
  w.pos.resize(h);
  w.reindex();
  return w;
}

} // namespace

Abs small_modification(const Abs& s, const AbsElement& zero, const AbsElement& one) {
  int zid, oid;
  return start(s, zero, one, zid, oid).snapshot();
}

Abs small_modification(const Abs& s, const ExchangeSite& site) {
  return small_modification(s, zero_of(site), one_of(site));
}

ModificationTrace full_modification(const Abs& s, const AbsElement& zero, const AbsElement& one) {
  int zid, oid;
  Working w = start(s, zero, one, zid, oid);
  const int h = s.size();
  const int cap = h * h;
  const int summand = s.elements[zid].origin;

  ModificationTrace tr;
  tr.zero = s.elements[zid];
  tr.one = s.elements[oid];
  std::vector<int> pinv(h);
  for (int t = 0; t < h; ++t)
    pinv[w.pi[t]] = t;
  tr.zero_pre = s.elements[pinv[zid]];
  tr.one_pre = s.elements[pinv[oid]];
  tr.snapshots.push_back(w.snapshot());

  // A^(n): same-delta elements of the summand before alpha_n whose image lies after alpha_{n+1}.
  auto a_set = [&](int alpha) {
    std::vector<int> out;
    int next = w.pi[alpha];
    for (int t = 0; t < h; ++t)
      if (w.label[t].origin == summand && w.label[t].delta == w.label[alpha].delta &&
          w.pos[t] < w.pos[alpha] && w.pos[next] < w.pos[w.pi[t]])
        out.push_back(t);
    return out;
  };
  // B^(n): same-delta elements after beta_n whose image lies before beta_{n+1}.
  auto b_set = [&](int beta) {
    std::vector<int> out;
    int next = w.pi[beta];
    for (int t = 0; t < h; ++t)
      if (w.label[t].delta == w.label[beta].delta && w.pos[beta] < w.pos[t] &&
          w.pos[w.pi[t]] < w.pos[next])
        out.push_back(t);
    return out;
  };
  auto finish = [&]() {
    for (int n = 0; n < tr.a; ++n) {
      tr.d_a.push_back(static_cast<int>(tr.a_sets[n].size() - tr.a_sets[n + 1].size()));
      tr.dl_a.push_back(static_cast<int>(length(tr.snapshots[n + 1]) - length(tr.snapshots[n])));
    }
    for (int n = 0; n < tr.b && n + 1 < static_cast<int>(tr.b_sets.size()); ++n) {
      tr.d_b.push_back(static_cast<int>(tr.b_sets[n].size() - tr.b_sets[n + 1].size()));
      tr.dl_b.push_back(static_cast<int>(length(tr.snapshots[tr.a + n + 1]) -
                                         length(tr.snapshots[tr.a + n])));
    }
  };

  int alpha = zid;
  std::vector<int> cur = a_set(alpha);
  tr.a_sets.push_back(w.labels(cur));
  while (!cur.empty()) {
    if (tr.a >= cap) {
      tr.terminated = false;
      finish();
      throw NonTerminationError("A-phase did not terminate", tr);
    }
    int tmax = *std::max_element(cur.begin(), cur.end(),
                                 [&](int x, int y) { return w.pos[x] < w.pos[y]; });
    alpha = w.pi[alpha];
    w.move_after(alpha, w.pi[tmax]);
    ++tr.a;
    tr.snapshots.push_back(w.snapshot());
    cur = a_set(alpha);
    tr.a_sets.push_back(w.labels(cur));
  }

  int beta = oid;
  cur = b_set(beta);
  tr.b_sets.push_back(w.labels(cur));
  for (int t : cur)
    if (w.label[t].origin == summand)
      tr.i_set.push_back(w.label[t]);
  std::sort(tr.i_set.begin(), tr.i_set.end(), [&](const AbsElement& x, const AbsElement& y) {
    return tr.snapshots.back().position_of(x) < tr.snapshots.back().position_of(y);
  });
  while (!cur.empty()) {
    if (tr.b >= cap) {
      tr.terminated = false;
      finish();
      throw NonTerminationError("B-phase did not terminate", tr);
    }
    int tmin = *std::min_element(cur.begin(), cur.end(),
                                 [&](int x, int y) { return w.pos[x] < w.pos[y]; });
    beta = w.pi[beta];
    w.move_before(beta, w.pi[tmin]);
    ++tr.b;
    tr.snapshots.push_back(w.snapshot());
    cur = b_set(beta);
    tr.b_sets.push_back(w.labels(cur));
  }
  finish();
  return tr;
}

ModificationTrace full_modification(const Abs& s, const ExchangeSite& site) {
  return full_modification(s, zero_of(site), one_of(site));
}

Abs canonical_sort(const Abs& s) {
  std::vector<int> seed(s.size());
  std::iota(seed.begin(), seed.end(), 0);
  Abs out;
  try {
    out = order_by_expansion(s, seed);
  } catch (const std::runtime_error&) {
    // pi cycles through an expansion class; only the word is determined.
    out = order_by_expansion(s, seed, true);
  }
  if (!is_admissible(out))
    throw std::runtime_error("no admissible order exists for the rewired ABS");
  return out;
}

Abs exchange(const Abs& s, const AbsElement& zero, const AbsElement& one) {
  return canonical_sort(small_modification(s, zero, one));
}

Abs specialize(const Abs& s, const ExchangeSite& site) {
  Shape sh = shape_of(s);
  ExchangeSite checked = classify_site(sh, site.i, site.j);
  if (checked.klass == SiteClass::H3)
    return dual(specialize(dual(s), dual_site(sh, checked)));
  try {
    return full_modification(s, checked).snapshots.back();
  } catch (const NonTerminationError&) {
    return canonical_sort(small_modification(s, checked));
  }
}

bool criterion_holds(const ModificationTrace& t) {
  for (const auto& set : t.a_sets)
    if (std::find(set.begin(), set.end(), t.one_pre) != set.end())
      return false;
  for (const auto& set : t.b_sets)
    if (std::find(set.begin(), set.end(), t.zero_pre) != set.end())
      return false;
  return true;
}

bool is_good_exchange(const Abs& s, const ExchangeSite& site) {
  Shape sh = shape_of(s);
  ExchangeSite checked = classify_site(sh, site.i, site.j);
  if (checked.klass == SiteClass::H3)
    return is_good_exchange(dual(s), dual_site(sh, checked));
  try {
    return criterion_holds(full_modification(s, checked));
  } catch (const NonTerminationError& e) {
    return criterion_holds(e.trace);
  }
}

GoodExchangeSets good_exchange_sets(const NewtonPolygon& xi) {
  Abs s = minimal_abs(xi);
  Shape sh = shape_of(xi);
  GoodExchangeSets g;
  std::set<int> cp, dp, c, d;
  for (const auto& site : all_sites(sh)) {
    if (!is_good_exchange(s, site))
      continue;
    g.good.push_back(site);
    if (site.klass == SiteClass::H3) {
      g.h3_good.push_back(site);
      continue;
    }
    cp.insert(site.i);
    dp.insert(site.j);
    auto tr = full_modification(s, site);
    if (!tr.a_sets.front().empty())
      c.insert(site.i);
    if (!tr.b_sets.front().empty())
      d.insert(site.j);
  }
  g.c_prime.assign(cp.begin(), cp.end());
  g.d_prime.assign(dp.begin(), dp.end());
  g.c.assign(c.begin(), c.end());
  g.d.assign(d.begin(), d.end());
  return g;
}

std::vector<int> epsilon_permutation(const Abs& s, const ExchangeSite& site) {
  Abs s0 = small_modification(s, site);
  Abs sp = specialize(s, site);
  std::vector<int> eps(s.size());
  for (int z = 0; z < sp.size(); ++z)
    eps[z] = s0.position_of(sp.elements[z]) + 1;
  return eps;
}

} // namespace abseq
