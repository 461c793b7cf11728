#pragma once

#include <string>

#include "json.hpp"
#include "soficshift/covers.hpp"
#include "soficshift/graph.hpp"
#include "soficshift/graph_ops.hpp"
#include "soficshift/invariants.hpp"

namespace soficshift::cli {

using Json = nlohmann::ordered_json;

std::string dot_graph(const LabelledGraph& g);
/// Nodes labelled with display names and grouped by layer when known.
std::string dot_cover(const CoverResult& c);
/// Transitive reduction of the PCG.
std::string dot_pcg(const ProperCommunicationGraph& p);
std::string dot_hasse(const LabelledGraph& g, const IdealLattice& lattice);

Json word_json(const LabelledGraph& g, const Word& w);
Json set_json(const LabelledGraph& g, const VertexSet& s);
Json graph_json(const LabelledGraph& g);
Json predicates_json(const Predicates& p);
Json cover_json(const CoverResult& c);
Json pcg_json(const ProperCommunicationGraph& p);
Json lattice_json(const LabelledGraph& g, const IdealLattice& lattice);

}  // namespace soficshift::cli
