#include "abseq/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace abseq {

using nlohmann::json;

namespace {

int parse_int(const std::string& text, const std::string& whole) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw ParseError("malformed polygon '" + whole + "': expected m,n+m,n+...");
  try {
    return std::stoi(text);
  } catch (const std::out_of_range&) {
    throw ParseError("malformed polygon '" + whole + "': number out of range");
  }
}

int origin_from_tag(const std::string& tag) {
  if (tag.size() == 1 && tag[0] >= 'A' && tag[0] <= 'Z')
    return tag[0] - 'A';
  if (tag.size() > 1 && tag[0] == 'S')
    return std::stoi(tag.substr(1));
  throw ParseError("unknown origin tag '" + tag + "'");
}

} // namespace

NewtonPolygon parse_polygon(const std::string& text) {
  std::vector<Segment> segs;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, '+')) {
    auto comma = part.find(',');
    if (comma == std::string::npos)
      throw ParseError("malformed polygon '" + text + "': expected m,n+m,n+...");
    segs.push_back({parse_int(part.substr(0, comma), text), parse_int(part.substr(comma + 1), text)});
  }
  if (segs.empty() || text.back() == '+')
    throw ParseError("malformed polygon '" + text + "': expected m,n+m,n+...");
  try {
    return make_polygon(segs);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

json to_json(const NewtonPolygon& xi) {
  json segs = json::array();
  for (const auto& s : xi.segments())
    segs.push_back({s.m, s.n});
  return {{"segments", segs}};
}

NewtonPolygon polygon_from_json(const json& j) {
  std::vector<Segment> segs;
  for (const auto& s : j.at("segments"))
    segs.push_back({s.at(0).get<int>(), s.at(1).get<int>()});
  return make_polygon(segs);
}

json to_json(const Abs& s) {
  json elems = json::array();
  for (const auto& e : s.elements)
    elems.push_back({{"origin", e.tag()}, {"index", e.index}, {"delta", e.delta}});
  json pi = json::array();
  for (int p : s.pi)
    pi.push_back(p + 1);
  return {{"elements", elems}, {"pi", pi}};
}

Abs abs_from_json(const json& j) {
  Abs s;
  for (const auto& e : j.at("elements"))
    s.elements.push_back({origin_from_tag(e.at("origin").get<std::string>()), e.at("index").get<int>(),
                          e.at("delta").get<int>()});
  for (const auto& p : j.at("pi"))
    s.pi.push_back(p.get<int>() - 1);
  if (s.pi.size() != s.elements.size())
    throw ParseError("pi and elements differ in length");
  std::vector<int> sorted = s.pi;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k)
    if (sorted[k] != static_cast<int>(k))
      throw ParseError("pi is not a permutation");
  return s;
}

json to_json(const ExchangeSite& site) {
  return {{"i", site.i}, {"j", site.j}, {"class", to_string(site.klass)}};
}

namespace {

json labels(const std::vector<AbsElement>& set) {
  json out = json::array();
  for (const auto& e : set)
    out.push_back(e.label());
  return out;
}

} // namespace

json to_json(const ModificationTrace& tr) {
  json snaps = json::array();
  for (const auto& s : tr.snapshots)
    snaps.push_back(to_json(s));
  json a_sets = json::array(), b_sets = json::array();
  for (const auto& set : tr.a_sets)
    a_sets.push_back(labels(set));
  for (const auto& set : tr.b_sets)
    b_sets.push_back(labels(set));
  return {{"snapshots", snaps}, {"a_sets", a_sets}, {"b_sets", b_sets}, {"a", tr.a},
          {"b", tr.b},          {"I", labels(tr.i_set)}, {"d_a", tr.d_a}, {"d_b", tr.d_b},
          {"dl_a", tr.dl_a},    {"dl_b", tr.dl_b},       {"terminated", tr.terminated}};
}

json to_json(const DescentResult& res) {
  json steps = json::array();
  for (const auto& st : res.steps)
    steps.push_back({{"xi", st.xi.to_string()},
                     {"site", to_json(st.site)},
                     {"case", std::string(1, st.case_tag)},
                     {"rho", {st.rho.m, st.rho.n}},
                     {"xi_prime", st.xi_prime.to_string()},
                     {"next_site", to_json(st.next_site)},
                     {"dual_frame", st.dual_frame},
                     {"guard_used", st.guard_used}});
  return {{"zeta", to_json(res.zeta)}, {"zeta_text", res.zeta.to_string()}, {"steps", steps}};
}

std::string element_set_string(const std::vector<AbsElement>& set) {
  std::string out = "{";
  for (std::size_t k = 0; k < set.size(); ++k)
    out += (k ? ", " : "") + set[k].label();
  return out + "}";
}

std::string render_diagram(const Abs& s) {
  const int h = s.size();
  std::size_t width = std::to_string(h).size();
  std::vector<std::string> tags;
  for (const auto& e : s.elements) {
    tags.push_back(e.tag() + std::to_string(e.index));
    width = std::max(width, tags.back().size());
  }
  ++width;
  auto cell = [&](const std::string& x) { return std::string(width - x.size(), ' ') + x; };
  std::string pos = "pos  ", delta = "bit  ", tag = "elt  ";
  for (int p = 0; p < h; ++p) {
    pos += cell(std::to_string(p + 1));
    delta += cell(std::to_string(s.elements[p].delta));
    tag += cell(tags[p]);
  }
  std::string arrows = "pi  ";
  for (int p = 0; p < h; ++p)
    arrows += " " + std::to_string(p + 1) + "->" + std::to_string(s.pi[p] + 1);
  return pos + "\n" + delta + "\n" + tag + "\n" + arrows + "\n";
}

} // namespace abseq
