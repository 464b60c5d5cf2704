#include "meander/meander.hpp"

#include <numeric>
#include <stdexcept>

namespace meander {

SeaweedType::SeaweedType(Composition top, Composition bottom)
    : top_(std::move(top)), bottom_(std::move(bottom)) {
    if (top_.weight() != bottom_.weight())
        throw std::invalid_argument("weight mismatch: top=" + std::to_string(top_.weight()) +
                                    " bottom=" + std::to_string(bottom_.weight()));
}

namespace {

void add_block_arcs(const Composition& c, std::vector<std::pair<int, int>>& arcs) {
    int offset = 0;
    for (int size : c.parts()) {
        // j + k = 2*offset + size + 1, innermost pairs nested under outermost
        for (int j = 1, k = size; j < k; ++j, --k)
            arcs.emplace_back(offset + j, offset + k);
        offset += size;
    }
}

} // namespace

Meander build_meander(const SeaweedType& s) {
    Meander m;
    m.n = s.n();
    add_block_arcs(s.top(), m.top_arcs);
    add_block_arcs(s.bottom(), m.bottom_arcs);
    return m;
}

ComponentSummary components(const Meander& m) {
    const int n = m.n;
    std::vector<int> parent(static_cast<std::size_t>(n) + 1);
    std::vector<int> degree(static_cast<std::size_t>(n) + 1, 0);
    std::iota(parent.begin(), parent.end(), 0);

    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    };
    auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };

    for (const auto* arcs : {&m.top_arcs, &m.bottom_arcs}) {
        for (const auto& [a, b] : *arcs) {
            unite(a, b);
            ++degree[static_cast<std::size_t>(a)];
            ++degree[static_cast<std::size_t>(b)];
        }
    }

    // a component is a cycle iff every vertex in it has degree 2
    std::vector<int> min_degree(static_cast<std::size_t>(n) + 1, 2);
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v = 1; v <= n; ++v) {
        const int root = find(v);
        seen[static_cast<std::size_t>(root)] = true;
        min_degree[static_cast<std::size_t>(root)] =
            std::min(min_degree[static_cast<std::size_t>(root)], degree[static_cast<std::size_t>(v)]);
    }

    ComponentSummary summary;
    for (int v = 1; v <= n; ++v) {
        if (!seen[static_cast<std::size_t>(v)] || find(v) != v) continue;
        if (min_degree[static_cast<std::size_t>(v)] == 2)
            ++summary.cycles;
        else
            ++summary.paths;
    }
    return summary;
}

int index_dk(const SeaweedType& s) {
    if (s.n() < 1) throw std::invalid_argument("index is undefined for the empty type");
    const ComponentSummary c = components(build_meander(s));
    return 2 * c.cycles + c.paths - 1;
}

int index_formula_2parts(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("block sizes must be positive");
    return std::gcd(a, b) - 1;
}

int index_formula_3parts(int a, int b, int c, ThreePartShape shape) {
    if (a < 1 || b < 1 || c < 1) throw std::invalid_argument("block sizes must be positive");
    if (shape == ThreePartShape::SplitBottom && c >= a + b)
        throw std::invalid_argument("split shape requires c < a + b");
    return std::gcd(a + b, b + c) - 1;
}

bool is_frobenius(const SeaweedType& s) { return index_dk(s) == 0; }

SeaweedType parse_seaweed_type(std::string_view text) {
    // trim surrounding whitespace
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);

    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        throw std::invalid_argument("seaweed type must be written top/bottom");
    if (text.find('/', slash + 1) != std::string_view::npos)
        throw std::invalid_argument("seaweed type must contain exactly one '/'");

    std::string_view top_text = text.substr(0, slash);
    std::string_view bottom_text = text.substr(slash + 1);

    Composition top;
    Composition bottom;
    try {
        top = parse_composition(top_text);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("top: " + std::string(e.what()));
    }
    try {
        bottom = parse_composition(bottom_text);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("bottom: " + std::string(e.what()));
    }
    if (top.empty() != bottom.empty())
        throw std::invalid_argument(top.empty() ? "top: empty composition"
                                                : "bottom: empty composition");
    return SeaweedType(std::move(top), std::move(bottom));
}

std::string to_string(const SeaweedType& s) {
    return to_string(s.top()) + "/" + to_string(s.bottom());
}

} // namespace meander
