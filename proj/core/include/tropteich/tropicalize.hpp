#ifndef TROPTEICH_TROPICALIZE_HPP
#define TROPTEICH_TROPICALIZE_HPP

#include <map>
#include <optional>
#include <set>
#include <vector>

#include <tropteich/cone_complex.hpp>
#include <tropteich/graph.hpp>

namespace tropteich {

/// Description of a stable model: components of the special fiber with
/// geometric genera, nodes with smoothing parameters, and a valuation mode.
struct StableModel {
    enum class Valuation { PAdic, Explicit, TAdic };

    struct Node {
        int component_a = 0;
        int component_b = 0;
        bool zero_parameter = false; // the symbol ZERO: a persisting node
        Rational parameter = 0;      // ignored when zero_parameter
    };

    std::vector<std::pair<int, int>> components; // (id, geometric genus)
    std::vector<Node> nodes;
    Valuation valuation = Valuation::PAdic;
    long long prime = 2;                      // PAdic
    std::vector<ExtValue> explicit_lengths;   // Explicit, per node
    std::vector<int> t_exponents;             // TAdic, per node
};

/// Tropical curve with extended rational edge lengths (all positive,
/// possibly infinite).
struct TropicalCurveExt {
    WeightedGraph graph;
    std::map<EdgeId, ExtValue> lengths;
};

/// Exact p-adic valuation of a rational; nullopt encodes val(0) = infinity.
std::optional<long long> padic_valuation(const Rational& q, long long p);

/// Dual tropical curve of a stable model: one weight-genus vertex per
/// component, one edge per node, lengths from the chosen valuation.
TropicalCurveExt dual_tropical_curve(const StableModel& m);

/// Location of a tropical curve in the cell structure of a diagram built
/// by build_Mg, with the coordinate orbit under the cell's automorphisms.
struct CellLocation {
    int object_id = 0;
    ExtendedPoint point;
    std::vector<std::map<EdgeId, ExtValue>> orbit; // sorted, distinct
    std::set<EdgeId> face_at_infinity;
};

CellLocation locate_cell(const TropicalCurveExt& c, const ConeDiagram& space);

} // namespace tropteich

#endif
