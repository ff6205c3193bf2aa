#include "fancob/collapse.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace fancob {

std::string to_string(const CircuitKey& key) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < key.size(); ++i) os << (i ? "," : "") << to_string(key[i]);
    os << '}';
    return os.str();
}

std::optional<std::size_t> CollapseGraph::find(const CircuitKey& key) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), key,
                               [](const CircuitNode& n, const CircuitKey& k) { return n.key < k; });
    if (it == nodes.end() || it->key != key) return std::nullopt;
    return static_cast<std::size_t>(it - nodes.begin());
}

bool CollapseGraph::has_edge(std::size_t from, std::size_t to) const {
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(from, to));
}

CollapseGraph circuit_graph(const Cobordism& cob) {
    std::map<CircuitKey, CircuitNode> by_key;
    for (const auto& sigma : cob.fan().max_cones()) {
        auto cc = circuit_of(sigma);
        if (!cc) continue;
        auto [it, inserted] = by_key.try_emplace(cc->circuit.key());
        if (inserted) it->second = {cc->circuit.key(), cc->circuit, class_of(cc->circuit), {}};
        it->second.star.push_back(sigma);
    }
    CollapseGraph g;
    for (auto& [key, node] : by_key) {
        std::sort(node.star.begin(), node.star.end());
        g.nodes.push_back(std::move(node));
    }
    for (std::size_t a = 0; a < g.nodes.size(); ++a)
        for (std::size_t b = 0; b < g.nodes.size(); ++b) {
            if (a == b) continue;
            const bool linked = std::any_of(g.nodes[b].star.begin(), g.nodes[b].star.end(), [&](const SimplicialCone& c) {
                return std::any_of(g.nodes[a].circuit.positive.begin(), g.nodes[a].circuit.positive.end(),
                                   [&](const Ray& r) { return c.has_ray(r); });
            });
            if (linked) g.edges.emplace_back(a, b);
        }
    return g;
}

namespace {

Integer top_height(const CircuitNode& node) {
    Integer h = height(node.key.front());
    for (const auto& r : node.key) h = std::max(h, height(r));
    return h;
}

std::vector<std::size_t> find_cycle(const CollapseGraph& g) {
    const std::size_t n = g.nodes.size();
    std::vector<std::vector<std::size_t>> succ(n);
    for (auto [a, b] : g.edges) succ[a].push_back(b);
    enum Color { White, Grey, Black };
    std::vector<Color> color(n, White);
    std::vector<std::size_t> stack;
    std::vector<std::size_t> cycle;

    auto dfs = [&](auto&& self, std::size_t v) -> bool {
        color[v] = Grey;
        stack.push_back(v);
        for (auto w : succ[v]) {
            if (color[w] == Grey) {
                auto start = std::find(stack.begin(), stack.end(), w);
                cycle.assign(start, stack.end());
                return true;
            }
            if (color[w] == White && self(self, w)) return true;
        }
        stack.pop_back();
        color[v] = Black;
        return false;
    };
    for (std::size_t v = 0; v < n; ++v)
        if (color[v] == White && dfs(dfs, v)) break;
    return cycle;
}

}  // namespace

CollapseVerdict is_collapsible(const CollapseGraph& g) {
    const std::size_t n = g.nodes.size();
    std::vector<std::size_t> indegree(n, 0);
    std::vector<std::vector<std::size_t>> succ(n);
    for (auto [a, b] : g.edges) {
        succ[a].push_back(b);
        ++indegree[b];
    }
    auto priority = [&](std::size_t i) { return std::make_pair(top_height(g.nodes[i]), i); };
    std::set<std::pair<Integer, std::size_t>> ready;
    for (std::size_t i = 0; i < n; ++i)
        if (indegree[i] == 0) ready.insert(priority(i));

    std::vector<std::size_t> order;
    while (!ready.empty()) {
        const std::size_t v = ready.begin()->second;
        ready.erase(ready.begin());
        order.push_back(v);
        for (auto w : succ[v])
            if (--indegree[w] == 0) ready.insert(priority(w));
    }
    if (order.size() == n) return {true, order};
    return {false, find_cycle(g)};
}

CollapseVerdict is_collapsible(const Cobordism& cob) { return is_collapsible(circuit_graph(cob)); }

NonsingularVerdict is_pi_nonsingular(const Cobordism& cob) {
    for (const auto& sigma : cob.fan().max_cones()) {
        const unsigned k = static_cast<unsigned>(sigma.dim());
        for (unsigned mask = 1; mask < (1u << k); ++mask) {
            const SimplicialCone face = sigma.face(mask);
            if (!project(face).independent) continue;
            if (!is_smooth(projected_cone(face))) return {false, face};
        }
    }
    return {true, std::nullopt};
}

std::string_view to_string(StepKind k) {
    switch (k) {
    case StepKind::Blowup: return "Blowup";
    case StepKind::Blowdown: return "Blowdown";
    case StepKind::Flip: return "Flip";
    case StepKind::Identity: return "Identity";
    }
    return "Unknown";
}

std::vector<FactorStep> extract_factorization(const Cobordism& cob, const FactorOptions& options) {
    const CollapseGraph graph = circuit_graph(cob);
    const CollapseVerdict verdict = is_collapsible(graph);
    if (!verdict.collapsible) {
        std::string cycle;
        for (auto i : verdict.witness) cycle += to_string(graph.nodes[i].key) + " -> ";
        fail(ErrorKind::NotCollapsible, "circuit graph has a cycle " + cycle + "...");
    }

    std::set<SimplicialCone> front(cob.bottom().max_cones().begin(), cob.bottom().max_cones().end());
    const Eigen::Index d = cob.base_dim();
    std::vector<FactorStep> steps;
    for (auto index : verdict.witness) {
        const CircuitNode& node = graph.nodes[index];
        std::set<SimplicialCone> lower, upper;
        for (const auto& sigma : node.star) {
            auto drop = [&](const Ray& r) {
                std::vector<Ray> rest;
                for (const auto& x : sigma.rays())
                    if (x != r) rest.push_back(x);
                return projected_cone(SimplicialCone(std::move(rest)));
            };
            for (const auto& p : node.circuit.positive) lower.insert(drop(p));
            for (const auto& n : node.circuit.negative) upper.insert(drop(n));
        }
        for (const auto& c : lower)
            if (!front.count(c))
                fail(ErrorKind::FrontMismatch, "lower face " + to_string(c) + " of circuit " + to_string(node.key) +
                                                   " is not in the current front");
        for (const auto& c : lower) front.erase(c);
        front.insert(upper.begin(), upper.end());

        Fan result(d, std::vector<SimplicialCone>(front.begin(), front.end()));
        const auto report = validate_fan(result);
        if (!report.ok())
            fail(ErrorKind::BrokenFan, "front after circuit " + to_string(node.key) + ": " +
                                           report.violations.front().detail);

        FactorStep step{StepKind::Identity, std::nullopt, node.key, result};
        switch (node.cls) {
        case ConeClass::Up:
            step.kind = StepKind::Blowup;
            step.center = Ray::through(projection(node.circuit.positive.front()));
            break;
        case ConeClass::Down:
            step.kind = StepKind::Blowdown;
            step.center = Ray::through(projection(node.circuit.negative.front()));
            break;
        case ConeClass::UpDown: step.kind = StepKind::Identity; break;
        case ConeClass::Mixed: step.kind = StepKind::Flip; break;
        default:
            fail(ErrorKind::AssertionFailed, "circuit " + to_string(node.key) + " is one-sided");
        }
        if (step.kind == StepKind::Identity && !options.record_identity) continue;
        steps.push_back(std::move(step));
    }
    if (!fans_equal(Fan(d, std::vector<SimplicialCone>(front.begin(), front.end())), cob.top()))
        fail(ErrorKind::FrontMismatch, "final front differs from the top fan");
    return steps;
}

}  // namespace fancob
