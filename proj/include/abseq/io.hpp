#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "abseq/abs_core.hpp"
#include "abseq/descent.hpp"
#include "abseq/polygon.hpp"
#include "abseq/specialize.hpp"

namespace abseq {

class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// "m1,n1+m2,n2+..."
NewtonPolygon parse_polygon(const std::string& text);

nlohmann::json to_json(const NewtonPolygon& xi);
NewtonPolygon polygon_from_json(const nlohmann::json& j);

// Elements carry letter tags; pi is written 1-based.
nlohmann::json to_json(const Abs& s);
Abs abs_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ExchangeSite& site);
nlohmann::json to_json(const ModificationTrace& tr);
nlohmann::json to_json(const DescentResult& res);

std::string element_set_string(const std::vector<AbsElement>& set);

// Position row, delta row and label row, then pi as 1-based src->dst pairs.
std::string render_diagram(const Abs& s);

} // namespace abseq
