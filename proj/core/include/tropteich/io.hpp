#ifndef TROPTEICH_IO_HPP
#define TROPTEICH_IO_HPP

#include <string>

#include <json.hpp>

#include <tropteich/cone_complex.hpp>
#include <tropteich/free_group.hpp>
#include <tropteich/graph.hpp>
#include <tropteich/marking.hpp>
#include <tropteich/moduli.hpp>
#include <tropteich/tropicalize.hpp>

namespace tropteich {
namespace io {

using json = nlohmann::ordered_json;

// graphs
json graph_to_json(const WeightedGraph& g);
WeightedGraph graph_from_json(const json& j);

// free-group word literals: "x1*x2^-1*x1", trivial word is "1"
std::string word_to_string(const Word& w);
Word word_from_string(int rank, const std::string& s);

// extended rationals: "3/2", "4", "inf"
std::string ext_value_to_string(const ExtValue& v);
ExtValue ext_value_from_string(const std::string& s);

// markings and classes
json marking_to_json(const Marking& m);
json top_class_to_json(const TopClass& t);

// stable models and tropical curves
StableModel model_from_json(const json& j);
json model_to_json(const StableModel& m);
json tropical_to_json(const TropicalCurveExt& c);
json cell_location_to_json(const CellLocation& loc);

// diagrams
json diagram_to_json(const ConeDiagram& d);
std::string diagram_to_dot(const ConeDiagram& d);

// verification reports
json report_to_json(const QuotientReport& r);

} // namespace io
} // namespace tropteich

#endif
