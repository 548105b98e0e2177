#pragma once

#include "metenum/graph.hpp"
#include "metenum/hypergraph.hpp"
#include "metenum/stream.hpp"

namespace metenum {

enum class Engine {
  kBergeSequential,  // edge-by-edge refinement of the prefix's minimal transversals
  kDfsHittingSet,    // branch on the lowest uncovered edge, keep every member critical
};

const char* to_string(Engine engine);

// Throws kEmptyEdge when some edge is empty (no transversal exists).
SolutionStream enumerate_minimal_transversals(Hypergraph h, Engine engine = Engine::kDfsHittingSet);

// Polynomial delay: vertex-by-vertex extension tree where every maximal independent
// set of G[0..i] has exactly one parent in G[0..i-1].
SolutionStream enumerate_maximal_independent_sets(Graph g);

// Complements of the maximal independent sets.
SolutionStream enumerate_minimal_vertex_covers(Graph g);

}  // namespace metenum
