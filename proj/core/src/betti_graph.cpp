#include "grassbs/betti_graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "grassbs/matching.hpp"

namespace grassbs {

BettiGraph build_graph(const RankBettiTable& table) {
    if (table.k() != table.n())
        throw std::invalid_argument("build_graph: Betti graphs require a square (k, k) context");
    BettiGraph graph;
    graph.k = table.k();
    for (const auto& [key, value] : table.entries()) {
        if (value < 0) throw std::invalid_argument("build_graph: negative entry");
        if (!is_integer(value))
            throw std::invalid_argument("build_graph: non-integer entry; scale the table first");
        Int count = to_integer(value);
        if (!count.fits_sint_p())
            throw std::invalid_argument("build_graph: entry too large to expand into vertices");
        for (int c = 0; c < count.get_si(); ++c) graph.vertices.push_back({key.i, key.lambda, c});
    }
    for (std::size_t u = 0; u < graph.vertices.size(); ++u)
        for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
            const auto& lower = graph.vertices[u];
            const auto& upper = graph.vertices[v];
            if (upper.i == lower.i + 1 && strictly_contains(lower.lambda, upper.lambda))
                graph.edges.push_back({static_cast<int>(u), static_cast<int>(v)});
        }
    return graph;
}

namespace {

struct Bipartition {
    std::vector<int> left;   // vertex indices with even i, canonical order
    std::vector<int> right;  // odd i
    std::vector<int> side_index;  // vertex -> index within its side
    std::vector<std::vector<int>> adj;  // left-side adjacency (right side indices)
};

Bipartition split(const BettiGraph& graph) {
    Bipartition b;
    b.side_index.assign(graph.vertices.size(), -1);
    for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
        bool even = ((graph.vertices[v].i % 2) + 2) % 2 == 0;
        auto& side = even ? b.left : b.right;
        b.side_index[v] = static_cast<int>(side.size());
        side.push_back(static_cast<int>(v));
    }
    b.adj.assign(b.left.size(), {});
    for (const auto& [u, v] : graph.edges) {
        int even_vertex = (((graph.vertices[static_cast<std::size_t>(u)].i % 2) + 2) % 2 == 0) ? u : v;
        int odd_vertex = even_vertex == u ? v : u;
        b.adj[static_cast<std::size_t>(b.side_index[static_cast<std::size_t>(even_vertex)])]
            .push_back(b.side_index[static_cast<std::size_t>(odd_vertex)]);
    }
    for (auto& list : b.adj) std::sort(list.begin(), list.end());
    return b;
}

}  // namespace

GraphMatching max_matching(const BettiGraph& graph) {
    Bipartition b = split(graph);
    BipartiteMatching m = max_bipartite_matching(static_cast<int>(b.left.size()),
                                                 static_cast<int>(b.right.size()), b.adj);
    GraphMatching out;
    for (std::size_t l = 0; l < b.left.size(); ++l) {
        int r = m.left_match[l];
        if (r < 0) continue;
        int u = b.left[l];
        int v = b.right[static_cast<std::size_t>(r)];
        const auto& vu = graph.vertices[static_cast<std::size_t>(u)];
        const auto& vv = graph.vertices[static_cast<std::size_t>(v)];
        out.pairs.push_back(vu.i < vv.i ? std::make_pair(u, v) : std::make_pair(v, u));
    }
    std::sort(out.pairs.begin(), out.pairs.end());
    out.perfect = 2 * out.pairs.size() == graph.vertices.size();
    return out;
}

std::pair<Rat, Rat> evaluate_certificate(const ConvexityCertificate& certificate,
                                         const RankBettiTable& table) {
    // Gamma is derived from the stored sources, not trusted from the record.
    auto in_sources = [&](int i, const IntSeq& lambda) {
        auto it = certificate.sources.find(i);
        if (it == certificate.sources.end()) return false;
        return std::find(it->second.begin(), it->second.end(), lambda) != it->second.end();
    };
    Rat lhs = 0, rhs = 0;
    for (const auto& [key, value] : table.entries()) {
        bool odd = ((key.i % 2) + 2) % 2 == 1;
        if (odd == certificate.odd_sources) {
            if (in_sources(key.i, key.lambda)) rhs += value;
        } else {
            bool neighbor = false;
            auto below = certificate.sources.find(key.i - 1);
            if (below != certificate.sources.end())
                for (const IntSeq& mu : below->second)
                    if (strictly_contains(mu, key.lambda)) {
                        neighbor = true;
                        break;
                    }
            if (!neighbor) {
                auto above = certificate.sources.find(key.i + 1);
                if (above != certificate.sources.end())
                    for (const IntSeq& mu : above->second)
                        if (strictly_contains(key.lambda, mu)) {
                            neighbor = true;
                            break;
                        }
            }
            if (neighbor) lhs += value;
        }
    }
    return {lhs, rhs};
}

namespace {

Int int_entry(const Rat& value) {
    return to_integer(value);
}

// Scales a rational table to integer entries; returns the factor used.
Int clear_denominators(const RankBettiTable& in, RankBettiTable& out) {
    Int lcm = 1;
    for (const auto& [key, value] : in.entries())
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), mpq_denref(value.get_mpq_t()));
    out = RankBettiTable(in.k(), in.n());
    for (const auto& [key, value] : in.entries()) out.set(key.i, key.lambda, value * Rat(lcm));
    return lcm;
}

// Builds the certificate from the Hall violator on the given side.
ConvexityCertificate violator_certificate(const BettiGraph& graph, const RankBettiTable& table,
                                          const GraphMatching& matching, bool odd_sources) {
    // Re-run the matching oriented so the source side is "left".
    std::vector<int> side, other;
    std::vector<int> side_index(graph.vertices.size(), -1);
    for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
        bool odd = ((graph.vertices[v].i % 2) + 2) % 2 == 1;
        auto& bucket = (odd == odd_sources) ? side : other;
        side_index[v] = static_cast<int>(bucket.size());
        bucket.push_back(static_cast<int>(v));
    }
    std::vector<std::vector<int>> adj(side.size());
    for (const auto& [u, v] : graph.edges) {
        bool u_is_source =
            ((((graph.vertices[static_cast<std::size_t>(u)].i % 2) + 2) % 2 == 1) == odd_sources);
        int s = u_is_source ? u : v;
        int t = u_is_source ? v : u;
        adj[static_cast<std::size_t>(side_index[static_cast<std::size_t>(s)])]
            .push_back(side_index[static_cast<std::size_t>(t)]);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());

    BipartiteMatching m{std::vector<int>(side.size(), -1), std::vector<int>(other.size(), -1), 0};
    for (const auto& [u, v] : matching.pairs) {
        bool u_is_source =
            ((((graph.vertices[static_cast<std::size_t>(u)].i % 2) + 2) % 2 == 1) == odd_sources);
        int s = u_is_source ? u : v;
        int t = u_is_source ? v : u;
        m.left_match[static_cast<std::size_t>(side_index[static_cast<std::size_t>(s)])] =
            side_index[static_cast<std::size_t>(t)];
        m.right_match[static_cast<std::size_t>(side_index[static_cast<std::size_t>(t)])] =
            side_index[static_cast<std::size_t>(s)];
        ++m.size;
    }

    std::vector<int> reachable = alternating_reachable_left(
        static_cast<int>(side.size()), static_cast<int>(other.size()), adj, m);

    ConvexityCertificate cert;
    cert.odd_sources = odd_sources;
    std::map<int, std::set<IntSeq, GradedLex>> sources;
    for (int s : reachable) {
        const auto& vert = graph.vertices[static_cast<std::size_t>(side[static_cast<std::size_t>(s)])];
        sources[vert.i].insert(vert.lambda);
    }

    // Convexify each S_i within the support: adding any support label between
    // two members leaves the neighbor sets unchanged and only grows the
    // source side of the inequality.
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& [i, labels] : sources) {
            for (const auto& [key, value] : table.entries()) {
                if (key.i != i || labels.count(key.lambda)) continue;
                bool above = false, below = false;
                for (const IntSeq& mu : labels) {
                    if (contains(mu, key.lambda)) below = true;
                    if (contains(key.lambda, mu)) above = true;
                    if (above && below) break;
                }
                if (above && below) {
                    labels.insert(key.lambda);
                    changed = true;
                }
            }
        }
    }

    for (const auto& [i, labels] : sources)
        cert.sources[i] = std::vector<IntSeq>(labels.begin(), labels.end());

    // Induced neighbor sets, restricted to the support.
    std::map<int, std::set<IntSeq, GradedLex>> gammas;
    for (const auto& [key, value] : table.entries()) {
        bool odd = ((key.i % 2) + 2) % 2 == 1;
        if (odd == odd_sources) continue;
        bool neighbor = false;
        auto below_it = cert.sources.find(key.i - 1);
        if (below_it != cert.sources.end())
            for (const IntSeq& mu : below_it->second)
                if (strictly_contains(mu, key.lambda)) neighbor = true;
        auto above_it = cert.sources.find(key.i + 1);
        if (!neighbor && above_it != cert.sources.end())
            for (const IntSeq& mu : above_it->second)
                if (strictly_contains(key.lambda, mu)) neighbor = true;
        if (neighbor) gammas[key.i].insert(key.lambda);
    }
    for (const auto& [i, labels] : gammas)
        cert.neighbors[i] = std::vector<IntSeq>(labels.begin(), labels.end());

    auto [lhs, rhs] = evaluate_certificate(cert, table);
    cert.lhs = int_entry(lhs);
    cert.rhs = int_entry(rhs);
    return cert;
}

}  // namespace

MembershipResult derived_cone_membership(const RankBettiTable& input) {
    for (const auto& [key, value] : input.entries())
        if (value < 0) throw std::invalid_argument("derived_cone_membership: negative entry");

    MembershipResult result;
    RankBettiTable table;
    result.scale = clear_denominators(input, table);

    BettiGraph graph = build_graph(table);
    GraphMatching matching = max_matching(graph);

    if (matching.perfect) {
        result.member = true;
        std::map<std::tuple<int, std::vector<int>, std::vector<int>>, Int> agg;
        for (const auto& [u, v] : matching.pairs) {
            const auto& lower = graph.vertices[static_cast<std::size_t>(u)];
            const auto& upper = graph.vertices[static_cast<std::size_t>(v)];
            agg[{lower.i, lower.lambda.parts(), upper.lambda.parts()}] += 1;
        }
        for (const auto& [key, count] : agg)
            result.decomposition.push_back(
                {std::get<0>(key), IntSeq(std::get<1>(key)), IntSeq(std::get<2>(key)), count});
        return result;
    }

    // Count vertices per parity to know which sides can carry a violator.
    std::size_t odd_count = 0;
    for (const auto& vertex : graph.vertices)
        if (((vertex.i % 2) + 2) % 2 == 1) ++odd_count;
    std::size_t even_count = graph.vertices.size() - odd_count;
    std::size_t matched = matching.pairs.size();

    std::vector<ConvexityCertificate> candidates;
    if (odd_count > matched) candidates.push_back(violator_certificate(graph, table, matching, true));
    if (even_count > matched) candidates.push_back(violator_certificate(graph, table, matching, false));
    // Prefer the smaller violator; ties go to the odd-sourced form.
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const ConvexityCertificate& a, const ConvexityCertificate& b) {
                         if (a.rhs != b.rhs) return a.rhs < b.rhs;
                         return a.odd_sources && !b.odd_sources;
                     });
    result.member = false;
    result.certificate = candidates.front();
    return result;
}

Rat rank_condition(const RankBettiTable& table) {
    Rat sum = 0;
    for (const auto& [key, value] : table.entries())
        sum += (((key.i % 2) + 2) % 2 == 0) ? value : -value;
    return sum;
}

InequalityValue antichain_inequality(const RankBettiTable& table, const std::vector<IntSeq>& s) {
    for (const auto& [key, value] : table.entries())
        if (key.i != 0 && key.i != 1)
            throw std::invalid_argument("antichain_inequality: support must lie in columns 0 and 1");
    InequalityValue out{0, 0};
    for (const auto& [key, value] : table.entries()) {
        if (key.i == 1) {
            if (std::find(s.begin(), s.end(), key.lambda) != s.end()) out.rhs += value;
        } else {
            for (const IntSeq& mu : s)
                if (strictly_contains(key.lambda, mu)) {
                    out.lhs += value;
                    break;
                }
        }
    }
    return out;
}

std::string export_dot(const BettiGraph& graph) {
    std::ostringstream os;
    os << "digraph betti {\n";
    for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
        const auto& vert = graph.vertices[v];
        os << "  v" << v << " [label=\"(" << vert.i << ", [";
        for (int j = 0; j < vert.lambda.length(); ++j) {
            if (j) os << ",";
            os << vert.lambda[j];
        }
        os << "]) #" << vert.copy << "\"];\n";
    }
    for (const auto& [u, v] : graph.edges) os << "  v" << v << " -> v" << u << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace grassbs
