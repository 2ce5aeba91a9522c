#pragma once

#include <string_view>

#include "cyclebal/signed_digraph.hpp"

namespace cyclebal::fixtures {

/// Three vertices, two positive relations and one negative (undirected).
std::string_view triad_edge_list();
SignedDigraph triad();

/// Alliance (+1) and enmity (-1) relations between the sixteen Gahuku-Gama
/// subtribes (undirected).
std::string_view gahuku_gama_edge_list();
SignedDigraph gahuku_gama();

}  // namespace cyclebal::fixtures
