#include "meander/winding.hpp"

#include <numeric>
#include <stdexcept>

#include "json.hpp"

#include "meander/errors.hpp"

namespace meander {

std::string to_string(const Move& m) {
    switch (m.kind) {
        case MoveKind::VerticalFlip: return "F_v";
        case MoveKind::ComponentElimination: return "C(" + std::to_string(m.block) + ")";
        case MoveKind::RotationContraction: return "R";
        case MoveKind::BlockElimination: return "B";
        case MoveKind::PureContraction: return "P";
        case MoveKind::HorizontalFlip: return "F_h";
    }
    throw invariant_error("unknown move kind");
}

std::pair<Move, SeaweedType> wind_step(const SeaweedType& s) {
    if (s.n() < 1) throw std::invalid_argument("cannot wind the empty type");

    std::vector<int> top = s.top().parts();
    std::vector<int> bottom = s.bottom().parts();
    const int a1 = top.front();
    const int b1 = bottom.front();

    if (a1 < b1) {
        return {Move{MoveKind::VerticalFlip},
                SeaweedType(Composition(std::move(bottom)), Composition(std::move(top)))};
    }
    if (a1 == b1) {
        top.erase(top.begin());
        bottom.erase(bottom.begin());
        return {Move{MoveKind::ComponentElimination, a1},
                SeaweedType(Composition(std::move(top)), Composition(std::move(bottom)))};
    }
    if (a1 < 2 * b1) {
        top.front() = b1;
        bottom.front() = 2 * b1 - a1;
        return {Move{MoveKind::RotationContraction},
                SeaweedType(Composition(std::move(top)), Composition(std::move(bottom)))};
    }
    if (a1 == 2 * b1) {
        top.front() = b1;
        bottom.erase(bottom.begin());
        return {Move{MoveKind::BlockElimination},
                SeaweedType(Composition(std::move(top)), Composition(std::move(bottom)))};
    }
    // a1 > 2*b1
    top.front() = a1 - 2 * b1;
    top.insert(top.begin() + 1, b1);
    bottom.erase(bottom.begin());
    return {Move{MoveKind::PureContraction},
            SeaweedType(Composition(std::move(top)), Composition(std::move(bottom)))};
}

WindingTrace wind_down(const SeaweedType& s) {
    if (s.n() < 1) throw std::invalid_argument("cannot wind the empty type");
    WindingTrace trace;
    trace.start = s;
    const long cap = 10L * s.n();
    SeaweedType current = s;
    long steps = 0;
    while (!current.empty()) {
        if (++steps > cap)
            throw invariant_error("winding exceeded the step cap of 10*n");
        auto [move, next] = wind_step(current);
        trace.steps.push_back({move, next});
        current = std::move(next);
    }
    return trace;
}

namespace detail {

int winding_index_inplace(std::vector<int>& top_rev, std::vector<int>& bottom_rev, int n) {
    const long cap = 10L * n;
    long steps = 0;
    int contributions = 0;
    while (!top_rev.empty()) {
        if (++steps > cap)
            throw invariant_error("winding exceeded the step cap of 10*n");
        const int a1 = top_rev.back();
        const int b1 = bottom_rev.back();
        if (a1 < b1) {
            top_rev.swap(bottom_rev);
        } else if (a1 == b1) {
            // the dropped block is a standalone a1/a1 meander:
            // floor(a1/2) cycles plus (a1 mod 2) paths
            contributions += 2 * (a1 / 2) + a1 % 2;
            top_rev.pop_back();
            bottom_rev.pop_back();
        } else if (a1 < 2 * b1) {
            top_rev.back() = b1;
            bottom_rev.back() = 2 * b1 - a1;
        } else if (a1 == 2 * b1) {
            top_rev.back() = b1;
            bottom_rev.pop_back();
        } else {
            top_rev.back() = b1;
            top_rev.push_back(a1 - 2 * b1);
            bottom_rev.pop_back();
        }
    }
    return contributions - 1;
}

} // namespace detail

int winding_index(std::span<const int> top, std::span<const int> bottom) {
    const int n = std::accumulate(top.begin(), top.end(), 0);
    if (n != std::accumulate(bottom.begin(), bottom.end(), 0))
        throw std::invalid_argument("weight mismatch between top and bottom");
    if (n < 1) throw std::invalid_argument("cannot wind the empty type");
    std::vector<int> top_rev(top.rbegin(), top.rend());
    std::vector<int> bottom_rev(bottom.rbegin(), bottom.rend());
    return detail::winding_index_inplace(top_rev, bottom_rev, n);
}

int index_via_winding(const SeaweedType& s) {
    if (s.n() < 1) throw std::invalid_argument("cannot wind the empty type");
    return winding_index(s.top().parts(), s.bottom().parts());
}

SeaweedType horizontal_flip(const SeaweedType& s) {
    std::vector<int> top(s.top().parts().rbegin(), s.top().parts().rend());
    std::vector<int> bottom(s.bottom().parts().rbegin(), s.bottom().parts().rend());
    return SeaweedType(Composition(std::move(top)), Composition(std::move(bottom)));
}

std::string trace_to_text(const WindingTrace& t) {
    std::string out;
    for (const auto& step : t.steps)
        out += "MOVE kind=" + to_string(step.move) + " result=" + to_string(step.result) + "\n";
    return out;
}

std::string trace_to_json(const WindingTrace& t) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& step : t.steps)
        steps.push_back({{"kind", to_string(step.move)}, {"result", to_string(step.result)}});
    return steps.dump();
}

} // namespace meander
