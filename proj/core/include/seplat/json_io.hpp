#pragma once

#include <string>

#include "seplat/appendix.hpp"
#include "seplat/digraph.hpp"
#include "seplat/lattice.hpp"
#include "seplat/menger.hpp"
#include "seplat/oracle.hpp"
#include "seplat/representation.hpp"
#include "seplat/separations.hpp"

namespace seplat {

/// Graph format: {"vertices": [..], "edges": [[from, to], ..], "A": [..],
/// "B": [..]}. Unknown keys and duplicate vertices/edges are rejected.
Digraph digraph_from_json(const std::string& text);
std::string digraph_to_json(const Digraph& d);

/// {"elements": [..labels..], "leq": [[bool]]}
FiniteLattice finite_lattice_from_json(const std::string& text);
std::string finite_lattice_to_json(const FiniteLattice& l);

/// {"elements": [[..vertex labels..]], "leq": [[bool]]}
std::string separation_lattice_to_json(const SeparationLattice& lattice, const Digraph& d);

/// {"separation": [..], "paths": [[..]]}
std::string witness_to_json(const Digraph& d, const OrthogonalityWitness& w);
std::string path_system_to_json(const Digraph& d, const PathSystem& ps);
std::string linkage_to_json(const LinkageWitness& w);

std::string escalante_to_json(const EscalanteReport& report);
std::string figure1_to_json(const Figure1Report& report);
std::string verify_to_json(const oracle::VerifyReport& report);
std::string representation_to_json(const DistributiveRepresentation& rep, const FiniteLattice& l);

/// Hasse diagram of the covering relation, bottom-up.
std::string hasse_dot(const FiniteLattice& l);
std::string hasse_dot(const SeparationLattice& lattice, const Digraph& d);

/// Plain digraph drawing; terminal sets are marked by node shape.
std::string digraph_to_dot(const Digraph& d);

/// Parses a JSON array of vertex labels against d.
VertexSet vertex_set_from_json(const Digraph& d, const std::string& text);

} // namespace seplat
