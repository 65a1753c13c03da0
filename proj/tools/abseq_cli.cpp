#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "abseq/abs_core.hpp"
#include "abseq/descent.hpp"
#include "abseq/io.hpp"
#include "abseq/polygon.hpp"
#include "abseq/specialize.hpp"
#include "abseq/weyl.hpp"

using namespace abseq;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kComputation = 2, kOracleCap = 3 };

struct Options {
  std::string xi;
  int i = 0;
  int j = 0;
  bool trace = false;
  bool certify = false;
  bool sweep = false;
  int max_height = 0;
  std::string format = "text";
};

class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

bool as_json(const Options& o) { return o.format == "json"; }

std::string site_string(const ExchangeSite& s) {
  return "(" + std::to_string(s.i) + "," + std::to_string(s.j) + ")";
}

NewtonPolygon two_segment(const Options& o) {
  NewtonPolygon xi = parse_polygon(o.xi);
  if (!is_straddling(xi))
    throw UsageError(xi.to_string() + " is not a two-segment polygon straddling slope 1/2");
  return xi;
}

ExchangeSite site_of(const NewtonPolygon& xi, const Options& o) {
  try {
    return classify_site(shape_of(xi), o.i, o.j);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int cmd_minimal(const Options& o) {
  NewtonPolygon xi = parse_polygon(o.xi);
  Abs s = minimal_abs(xi);
  if (as_json(o)) {
    std::cout << json{{"xi", to_json(xi)}, {"abs", to_json(s)}, {"word", word_string(s.word())},
                      {"length", length(s)}}
                     .dump(2)
              << "\n";
    return kOk;
  }
  std::cout << "xi      " << xi.to_string() << "\n"
            << "order   " << s.order_string() << "\n"
            << "length  " << length(s) << "\n\n"
            << render_diagram(s);
  return kOk;
}

int cmd_exchanges(const Options& o) {
  NewtonPolygon xi = two_segment(o);
  Shape sh = shape_of(xi);
  Abs s = minimal_abs(xi);
  auto g = good_exchange_sets(xi);
  const auto base = length(s);
  json rows = json::array();
  std::ostringstream text;
  text << "xi " << xi.to_string() << "  length " << base << "\n\n";
  text << "site     class  length  good\n";
  for (const auto& site : all_sites(sh)) {
    bool good = is_good_exchange(s, site);
    auto l = length(specialize(s, site));
    json row = to_json(site);
    row["length"] = l;
    row["good"] = good;
    std::string dual_text;
    if (site.klass == SiteClass::H3) {
      auto ds = dual_site(sh, site);
      row["dual_site"] = to_json(ds);
      dual_text = "  dual " + site_string(ds) + " on " + dual_polygon(xi).to_string();
    }
    rows.push_back(row);
    char line[64];
    std::snprintf(line, sizeof line, "%-8s %-6s %6lld  %s", site_string(site).c_str(), to_string(site.klass),
                  static_cast<long long>(l), good ? "yes" : "no");
    text << line << dual_text << "\n";
  }
  auto idx = [](const std::vector<int>& v, const char* tag) {
    std::string out = "{";
    for (std::size_t k = 0; k < v.size(); ++k)
      out += (k ? ", " : "") + std::string(tag) + std::to_string(v[k]);
    return out + "}";
  };
  text << "\nC' = " << idx(g.c_prime, "0^A_") << "\nD' = " << idx(g.d_prime, "1^B_")
       << "\nC  = " << idx(g.c, "0^A_") << "\nD  = " << idx(g.d, "1^B_") << "\nH3 good:";
  json h3 = json::array();
  for (const auto& site : g.h3_good) {
    text << " " << site_string(site);
    h3.push_back(to_json(site));
  }
  text << "\n";
  if (as_json(o))
    std::cout << json{{"xi", to_json(xi)}, {"length", base}, {"sites", rows}, {"c_prime", g.c_prime},
                      {"d_prime", g.d_prime}, {"c", g.c}, {"d", g.d}, {"h3_good", h3}}
                     .dump(2)
              << "\n";
  else
    std::cout << text.str();
  return kOk;
}

int cmd_specialize(const Options& o) {
  NewtonPolygon xi = two_segment(o);
  ExchangeSite site = site_of(xi, o);
  Abs s = minimal_abs(xi);
  Abs result = specialize(s, site);
  bool good = is_good_exchange(s, site);
  json out{{"xi", to_json(xi)}, {"site", to_json(site)}, {"result", to_json(result)},
           {"length_before", length(s)}, {"length_after", length(result)}, {"good", good}};
  std::ostringstream text;
  text << "xi " << xi.to_string() << "  site " << site_string(site) << " " << to_string(site.klass)
       << "\n";
  if (o.trace) {
    Abs base = s;
    ExchangeSite run = site;
    if (site.klass == SiteClass::H3) {
      base = dual(s);
      run = dual_site(shape_of(xi), site);
      text << "H3 site: trace runs on the dual " << dual_polygon(xi).to_string() << " at "
           << site_string(run) << "\n";
      out["trace_frame"] = "dual";
    }
    ModificationTrace tr;
    try {
      tr = full_modification(base, run);
    } catch (const NonTerminationError& e) {
      tr = e.trace;
      text << "modification does not terminate; result taken from the canonical sort\n";
    }
    out["trace"] = to_json(tr);
    for (std::size_t n = 0; n < tr.snapshots.size(); ++n) {
      text << "\nS(" << n << ")  length " << length(tr.snapshots[n]) << "\n" << render_diagram(tr.snapshots[n]);
    }
    text << "\n";
    for (std::size_t n = 0; n < tr.a_sets.size(); ++n)
      text << "A(" << n << ") = " << element_set_string(tr.a_sets[n]) << "\n";
    text << "I = " << element_set_string(tr.i_set) << "\n";
    for (std::size_t n = 0; n < tr.b_sets.size(); ++n)
      text << "B(" << n << ") = " << element_set_string(tr.b_sets[n]) << "\n";
    text << "a = " << tr.a << ", b = " << tr.b << "\n";
  }
  text << "\nS'  " << result.order_string() << "\nlength " << length(s) << " -> " << length(result)
       << (good ? "  (generic)" : "") << "\n";
  if (as_json(o))
    std::cout << out.dump(2) << "\n";
  else
    std::cout << text.str();
  return kOk;
}

int cmd_np(const Options& o) {
  NewtonPolygon xi = two_segment(o);
  ExchangeSite site = site_of(xi, o);
  if (!is_good_exchange(minimal_abs(xi), site))
    throw UsageError("site " + site_string(site) + " is not a good exchange on " + xi.to_string());
  DescentResult res = generic_np(xi, site);
  json out = to_json(res);
  out["xi"] = to_json(xi);
  out["site"] = to_json(site);
  std::ostringstream text;
  text << "xi " << xi.to_string() << "  site " << site_string(site) << "\n\n";
  text << "step  frame  xi                site     case  rho    xi'\n";
  for (std::size_t k = 0; k < res.steps.size(); ++k) {
    const auto& st = res.steps[k];
    char line[160];
    std::snprintf(line, sizeof line, "%-5zu %-6s %-17s %-8s %-5c %-6s %s", k + 1, st.dual_frame ? "dual" : "",
                  st.xi.to_string().c_str(), site_string(st.site).c_str(), st.case_tag,
                  (std::to_string(st.rho.m) + "," + std::to_string(st.rho.n)).c_str(),
                  st.xi_prime.to_string().c_str());
    text << line << "\n";
  }
  text << "\nzeta " << res.zeta.to_string() << "\n";
  if (o.certify) {
    bool saturated = is_saturated(res.zeta, xi);
    out["saturated"] = saturated;
    text << "saturated " << (saturated ? "yes" : "no") << "\n";
    if (xi.height() <= oracle_cap()) {
      bool below = specializes(jw_from_word(minimal_abs(res.zeta).word()), jw_from_word(minimal_abs(xi).word()));
      out["weyl_specializes"] = below;
      text << "w_zeta below w_xi " << (below ? "yes" : "no") << "\n";
    } else {
      out["weyl_specializes"] = nullptr;
      text << "w_zeta below w_xi skipped (height above oracle cap " << oracle_cap() << ")\n";
    }
  }
  if (as_json(o))
    std::cout << out.dump(2) << "\n";
  else
    std::cout << text.str();
  return kOk;
}

int cmd_dual(const Options& o) {
  NewtonPolygon xi = parse_polygon(o.xi);
  Abs s = minimal_abs(xi);
  Abs d = dual(s);
  json out{{"xi", to_json(xi)}, {"dual_xi", to_json(dual_polygon(xi))}, {"dual_abs", to_json(d)},
           {"length", length(s)}, {"dual_length", length(d)}};
  std::ostringstream text;
  text << "xi       " << xi.to_string() << "\ndual xi  " << dual_polygon(xi).to_string() << "\norder    "
       << d.order_string() << "\nlength   " << length(s) << " / " << length(d) << "\n";
  if (o.i || o.j) {
    NewtonPolygon two = two_segment(o);
    ExchangeSite site = site_of(two, o);
    ExchangeSite ds = dual_site(shape_of(two), site);
    out["site"] = to_json(site);
    out["dual_site"] = to_json(ds);
    text << "site     " << site_string(site) << " " << to_string(site.klass) << " -> " << site_string(ds) << " "
         << to_string(ds.klass) << "\n";
  }
  text << "\n" << render_diagram(d);
  if (as_json(o))
    std::cout << out.dump(2) << "\n";
  else
    std::cout << text.str();
  return kOk;
}

int cmd_verify(const Options& o) {
  std::vector<NewtonPolygon> targets;
  if (o.sweep) {
    if (o.max_height < 2)
      throw UsageError("--sweep needs --max-height of at least 2");
    if (o.max_height > oracle_cap())
      throw OracleCapExceeded("height " + std::to_string(o.max_height) + " exceeds the oracle cap " +
                              std::to_string(oracle_cap()));
    for (int h = 2; h <= o.max_height; ++h)
      for (auto& p : straddling_polygons(h))
        targets.push_back(p);
  } else {
    if (o.xi.empty())
      throw UsageError("verify needs --xi or --sweep");
    targets.push_back(two_segment(o));
  }
  json rows = json::array();
  bool all = true;
  std::ostringstream text;
  text << "result  xi                oracle  exchange\n";
  for (const auto& xi : targets) {
    auto rep = oracle_report(xi);
    all = all && rep.equal;
    json row{{"xi", xi.to_string()}, {"pass", rep.equal}, {"oracle", json::array()}, {"exchange", json::array()}};
    for (const auto& w : rep.oracle_words)
      row["oracle"].push_back(word_string(w));
    for (const auto& w : rep.exchange_words)
      row["exchange"].push_back(word_string(w));
    rows.push_back(row);
    char line[96];
    std::snprintf(line, sizeof line, "%-7s %-17s %6zu  %8zu", rep.equal ? "PASS" : "FAIL", xi.to_string().c_str(),
                  rep.oracle_words.size(), rep.exchange_words.size());
    text << line << "\n";
  }
  if (as_json(o))
    std::cout << json{{"results", rows}, {"all_pass", all}}.dump(2) << "\n";
  else
    std::cout << text.str() << (all ? "all polygons agree\n" : "disagreement found\n");
  return all ? kOk : kComputation;
}

int cmd_scan(const Options& o) {
  NewtonPolygon xi = parse_polygon(o.xi);
  int max_h = o.max_height ? o.max_height : oracle_cap();
  ScanReport rep;
  try {
    rep = conjecture_scan(xi, max_h);
  } catch (const OracleCapExceeded&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  json out{{"xi", to_json(xi)}, {"oracle_count", rep.oracle_count}, {"confirmed", rep.confirmed},
           {"counterexamples", json::array()}, {"unmatched", json::array()}};
  for (const auto& w : rep.counterexamples)
    out["counterexamples"].push_back(word_string(w));
  for (const auto& w : rep.unmatched)
    out["unmatched"].push_back(word_string(w));
  if (as_json(o)) {
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  std::cout << "xi " << xi.to_string() << "\ngeneric specializations " << rep.oracle_count << "\nconfirmed "
            << rep.confirmed << "\n";
  for (const auto& w : rep.counterexamples)
    std::cout << "not predicted  " << word_string(w) << "\n";
  for (const auto& w : rep.unmatched)
    std::cout << "not generic    " << word_string(w) << "\n";
  return kOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arrowed binary sequences and generic Newton polygons"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_site = [&](CLI::App* c, bool required) {
    auto* i = c->add_option("--i", o.i, "Index of the exchanged 0^A_i");
    auto* j = c->add_option("--j", o.j, "Index of the exchanged 1^B_j");
    if (required) {
      i->required();
      j->required();
    }
  };

  auto* minimal = app.add_subcommand("minimal", "Minimal ABS of a Newton polygon");
  minimal->add_option("--xi", o.xi, "Polygon as m1,n1+m2,n2")->required();
  add_format(minimal);

  auto* exchanges = app.add_subcommand("exchanges", "Classify every exchange site");
  exchanges->add_option("--xi", o.xi, "Polygon as m1,n1+m2,n2")->required();
  add_format(exchanges);

  auto* spec = app.add_subcommand("specialize", "Exchange 0^A_i and 1^B_j");
  spec->add_option("--xi", o.xi, "Polygon as m1,n1+m2,n2")->required();
  add_site(spec, true);
  spec->add_flag("--trace", o.trace, "Print every step of the full modification");
  add_format(spec);

  auto* np = app.add_subcommand("np", "Newton polygon of a generic specialization");
  np->add_option("--xi", o.xi, "Polygon as m1,n1+m2,n2")->required();
  add_site(np, true);
  np->add_flag("--certify", o.certify, "Check saturation and the Weyl-group order");
  add_format(np);

  auto* dl = app.add_subcommand("dual", "Dual polygon and ABS");
  dl->add_option("--xi", o.xi, "Polygon as m1,n1+m2,n2")->required();
  add_site(dl, false);
  add_format(dl);

  auto* verify = app.add_subcommand("verify", "Compare good exchanges with the Weyl-group oracle");
  verify->add_option("--xi", o.xi, "Polygon as m1,n1+m2,n2");
  verify->add_flag("--sweep", o.sweep, "Every straddling two-segment polygon up to --max-height");
  verify->add_option("--max-height", o.max_height, "Largest height in the sweep");
  add_format(verify);

  auto* scan = app.add_subcommand("scan", "Compare oracle output with sums of adjacent-pair specializations");
  scan->add_option("--xi", o.xi, "Polygon with at least three segments")->required();
  scan->add_option("--max-height", o.max_height, "Height bound (defaults to the oracle cap)");
  add_format(scan);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*minimal)
      return cmd_minimal(o);
    if (*exchanges)
      return cmd_exchanges(o);
    if (*spec)
      return cmd_specialize(o);
    if (*np)
      return cmd_np(o);
    if (*dl)
      return cmd_dual(o);
    if (*verify)
      return cmd_verify(o);
    return cmd_scan(o);
  } catch (const OracleCapExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise ABS_ORACLE_CAP to allow it)\n";
    return kOracleCap;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kComputation;
  }
}
