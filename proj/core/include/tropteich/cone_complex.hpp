#ifndef TROPTEICH_CONE_COMPLEX_HPP
#define TROPTEICH_CONE_COMPLEX_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include <tropteich/contraction.hpp>
#include <tropteich/graph.hpp>

namespace tropteich {

using Rational = boost::multiprecision::cpp_rational;

/// Value in the extended half-line: a nonnegative rational or infinity.
struct ExtValue {
    bool infinite = false;
    Rational value = 0;

    static ExtValue infinity() { return ExtValue{true, 0}; }
    static ExtValue finite(const Rational& q) { return ExtValue{false, q}; }

    bool operator==(const ExtValue&) const = default;
    bool operator<(const ExtValue& o) const {
        if (infinite != o.infinite) return !infinite;
        return value < o.value;
    }
};

/// The orthant cone R_{>=0}^labels; labels are edge ids of a graph.
struct OrthantCone {
    std::vector<EdgeId> labels;

    int dimension() const { return static_cast<int>(labels.size()); }

    bool operator==(const OrthantCone&) const = default;
};

/// Face morphism between orthant cones: an injective map of coordinate
/// labels, sending the source cone isomorphically onto a coordinate face
/// of the target.
struct FaceMap {
    OrthantCone source;
    OrthantCone target;
    std::map<EdgeId, EdgeId> coordinate_map; // source label -> target label

    bool operator==(const FaceMap&) const = default;
};

FaceMap identity_face_map(const OrthantCone& c);

/// compose(outer, inner): inner.target must equal outer.source.
FaceMap compose(const FaceMap& outer, const FaceMap& inner);

/// Diagram of orthant cones and face maps; objects carry the defining
/// graph and a payload key (graph certificate, optionally with a marking
/// class) used for lookups and deterministic export.
struct ConeObject {
    int id = 0;
    OrthantCone cone;
    WeightedGraph graph;
    std::string payload;
};

struct ConeDiagram {
    bool marked = false;
    std::vector<ConeObject> objects;
    std::map<std::pair<int, int>, std::vector<FaceMap>> homs;

    const ConeObject& object(int id) const;
};

/// The face morphism sigma_{target} -> sigma_{source} induced by a weighted
/// edge contraction: the inclusion of the uncontracted edges.
FaceMap face_map_from_contraction(const EdgeContraction& c);

/// True iff the diagram is a poset of cones: every hom-set has at most one
/// element and every self hom-set is exactly the identity.
bool is_cone_complex(const ConeDiagram& d);

/// Replaces each hom-set by its set of distinct coordinate maps.
ConeDiagram coarse_space(const ConeDiagram& d);

/// Object counts per dimension 0..max.
std::vector<int> f_vector(const ConeDiagram& d);

/// All morphisms into the object's cone, as (source object id, map) pairs.
std::vector<std::pair<int, FaceMap>> faces(const ConeDiagram& d, int id);

/// Objects the given one maps into, within the given dimension radius.
std::vector<std::pair<int, FaceMap>> cofaces(const ConeDiagram& d, int id,
                                             int radius);

/// A point of the canonical extension of one cone of a diagram; infinite
/// coordinates encode the face at infinity.
struct ExtendedPoint {
    int object_id = 0;
    std::map<EdgeId, ExtValue> coordinates;

    std::set<EdgeId> face_at_infinity() const;
};

} // namespace tropteich

#endif
