#pragma once

// Circuit dependency graph of a cobordism, collapsibility, pi-nonsingularity and the
// extraction of a blowup/blowdown sequence from a collapsible cobordism.

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "fancob/cobordism.hpp"

namespace fancob {

using CircuitKey = std::vector<Ray>;

std::string to_string(const CircuitKey& key);

struct CircuitNode {
    CircuitKey key;
    Circuit circuit;
    ConeClass cls;
    /// Maximal cones whose circuit this is, sorted.
    std::vector<SimplicialCone> star;
};

/// Nodes are sorted by key. Edge (a, b) means a cone with circuit b contains a positive ray
/// of circuit a, so a has to be crossed before b.
struct CollapseGraph {
    std::vector<CircuitNode> nodes;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    std::optional<std::size_t> find(const CircuitKey& key) const;
    bool has_edge(std::size_t from, std::size_t to) const;
};

CollapseGraph circuit_graph(const Cobordism& cob);

struct CollapseVerdict {
    bool collapsible;
    /// A topological order of node indices when collapsible, otherwise one directed cycle.
    std::vector<std::size_t> witness;
};

/// Ties in the topological order go to the circuit whose highest ray is lowest.
CollapseVerdict is_collapsible(const CollapseGraph& graph);
CollapseVerdict is_collapsible(const Cobordism& cob);

struct NonsingularVerdict {
    bool nonsingular;
    std::optional<SimplicialCone> witness;
};

NonsingularVerdict is_pi_nonsingular(const Cobordism& cob);

enum class StepKind { Blowup, Blowdown, Flip, Identity };

std::string_view to_string(StepKind k);

struct FactorStep {
    StepKind kind;
    /// Blowup/blowdown center downstairs.
    std::optional<Ray> center;
    CircuitKey circuit;
    Fan result;
};

struct FactorOptions {
    bool record_identity = true;
};

/// Crosses the circuits in collapse order, one star at a time, starting from the bottom fan.
std::vector<FactorStep> extract_factorization(const Cobordism& cob, const FactorOptions& options = {});

}  // namespace fancob
