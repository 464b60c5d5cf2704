#include "meander/partition.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace meander {

namespace {

int checked_sum(const std::vector<int>& parts) {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view token, const char* what) {
    token = trim(token);
    int value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || token.empty())
        throw std::invalid_argument(std::string(what) + ": invalid part '" + std::string(token) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

} // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (k > 0 && parts_[k - 1] < parts_[k])
            throw std::invalid_argument("partition parts must be non-increasing");
    }
    weight_ = checked_sum(parts_);
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 1) throw std::invalid_argument("composition parts must be positive");
    weight_ = checked_sum(parts_);
}

ColoredPartition::ColoredPartition(std::vector<ColoredPart> parts) : parts_(std::move(parts)) {
    for (const auto& p : parts_) {
        if (p.value < 1) throw std::invalid_argument("colored parts must be positive");
        weight_ += p.value;
    }
    // canonical order: value descending, blue before red at equal value
    std::sort(parts_.begin(), parts_.end(), [](const ColoredPart& a, const ColoredPart& b) {
        if (a.value != b.value) return a.value > b.value;
        return a.color < b.color;
    });
}

std::vector<Partition> enumerate_partitions(int n, std::optional<int> max_part) {
    if (max_part && *max_part < 1)
        throw std::invalid_argument("max_part must be positive");
    std::vector<Partition> out;
    for_each_partition(n, max_part ? *max_part : std::max(n, 1),
                       [&](const std::vector<int>& parts) { out.emplace_back(parts); });
    return out;
}

std::vector<ColoredPartition> enumerate_colored_partitions(int i) {
    if (i < 0) throw std::invalid_argument("colored partition weight must be non-negative");
    std::vector<ColoredPartition> out;
    // blue weight descending; each side in reverse lexicographic order
    for (int blue = i; blue >= 0; --blue) {
        const int red = i - blue;
        for_each_partition(blue, std::max(blue, 1), [&](const std::vector<int>& bp) {
            std::vector<ColoredPart> base;
            base.reserve(bp.size());
            for (int v : bp) base.push_back({v, Color::Blue});
            for_each_partition(red, std::max(red, 1), [&](const std::vector<int>& rp) {
                std::vector<ColoredPart> parts = base;
                for (int v : rp) parts.push_back({v, Color::Red});
                out.emplace_back(std::move(parts));
            });
        });
    }
    return out;
}

Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    const auto& parts = p.parts();
    std::vector<int> conj(static_cast<std::size_t>(parts[0]));
    for (int j = 1; j <= parts[0]; ++j) {
        int count = 0;
        for (int part : parts)
            if (part >= j) ++count;
        conj[static_cast<std::size_t>(j - 1)] = count;
    }
    return Partition(std::move(conj));
}

Composition reverse(const Partition& p) {
    std::vector<int> parts(p.parts().rbegin(), p.parts().rend());
    return Composition(std::move(parts));
}

Partition phi(const ColoredPartition& c) {
    std::vector<int> parts;
    parts.reserve(c.parts().size());
    // canonical input order makes the image non-increasing as-is
    for (const auto& part : c.parts())
        parts.push_back(part.color == Color::Blue ? 2 * part.value + 1 : 2 * part.value);
    return Partition(std::move(parts));
}

Partition psi(const Partition& p) {
    std::vector<int> parts;
    parts.reserve(p.size());
    for (int part : p.parts())
        if (part > 1) parts.push_back(part);
    return Partition(std::move(parts));
}

namespace {

Partition parse_frequency_form(std::string_view text) {
    std::vector<std::pair<int, int>> entries; // (value, frequency)
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
        if (pos >= text.size()) break;
        std::size_t end = pos;
        while (end < text.size() && text[end] != ' ' && text[end] != '\t') ++end;
        std::string_view token = text.substr(pos, end - pos);
        pos = end;
        const auto caret = token.find('^');
        if (caret == std::string_view::npos)
            throw std::invalid_argument("partition: frequency entry '" + std::string(token) +
                                        "' must look like value^count");
        const int value = parse_int(token.substr(0, caret), "partition");
        const int freq = parse_int(token.substr(caret + 1), "partition");
        if (value < 1) throw std::invalid_argument("partition: non-positive part");
        if (freq < 1) throw std::invalid_argument("partition: non-positive frequency");
        entries.emplace_back(value, freq);
    }
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<int> parts;
    for (const auto& [value, freq] : entries)
        parts.insert(parts.end(), static_cast<std::size_t>(freq), value);
    return Partition(std::move(parts));
}

} // namespace

Partition parse_partition(std::string_view text) {
    text = trim(text);
    if (text.empty()) return {};
    if (text.find('^') != std::string_view::npos) return parse_frequency_form(text);
    std::vector<int> parts;
    for (std::string_view token : split(text, ',')) {
        const int value = parse_int(token, "partition");
        if (value < 1) throw std::invalid_argument("partition: non-positive part");
        parts.push_back(value);
    }
    for (std::size_t k = 1; k < parts.size(); ++k)
        if (parts[k - 1] < parts[k])
            throw std::invalid_argument("partition: parts must be non-increasing");
    return Partition(std::move(parts));
}

Composition parse_composition(std::string_view text) {
    text = trim(text);
    if (text.empty()) return {};
    std::vector<int> parts;
    for (std::string_view token : split(text, '|')) {
        const int value = parse_int(token, "composition");
        if (value < 1) throw std::invalid_argument("composition: non-positive part");
        parts.push_back(value);
    }
    return Composition(std::move(parts));
}

namespace {

std::string join(const std::vector<int>& parts, char sep) {
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k > 0) out.push_back(sep);
        out += std::to_string(parts[k]);
    }
    return out;
}

} // namespace

std::string to_string(const Partition& p) { return join(p.parts(), ','); }

std::string to_string(const Composition& c) { return join(c.parts(), '|'); }

} // namespace meander
