#include "dentedhex/tilings.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "dentedhex/error.hpp"
#include "dentedhex/qseries.hpp"

namespace dentedhex {

namespace {

bool contains_row(const std::vector<std::int32_t>& rows, std::int32_t row) {
    return std::binary_search(rows.begin(), rows.end(), row);
}

std::string join(const std::vector<std::int32_t>& v) {
    if (v.empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

std::int32_t parse_int(std::string_view text, std::size_t position) {
    std::int32_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ParseError("malformed integer '" + std::string(text) + "'", position);
    }
    return value;
}

std::vector<std::int32_t> parse_list(std::string_view text, std::size_t position) {
    std::vector<std::int32_t> out;
    if (text == "-") return out;
    std::size_t begin = 0;
    while (true) {
        const std::size_t comma = text.find(',', begin);
        out.push_back(parse_int(text.substr(begin, comma - begin), position + begin));
        if (comma == std::string_view::npos) break;
        begin = comma + 1;
    }
    return out;
}

// Flat indexing of all hexagon cells in scan order.
class CellIndex {
public:
    explicit CellIndex(const Region& r) : x_(r.x()) {
        offsets_.push_back(0);
        for (std::int32_t i = 1; i <= r.h(); ++i) offsets_.push_back(offsets_.back() + 2 * (x_ + i) - 1);
    }

    std::size_t size() const { return static_cast<std::size_t>(offsets_.back()); }

    std::size_t index(const Cell& c) const {
        const std::int32_t base = offsets_[static_cast<std::size_t>(c.row - 1)];
        return static_cast<std::size_t>(c.kind == CellKind::Up ? base + 2 * (c.col - 1) : base + 2 * c.col - 1);
    }

    Cell cell(std::size_t k) const {
        const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), static_cast<std::int32_t>(k));
        const auto row = static_cast<std::int32_t>(it - offsets_.begin());
        const std::int32_t p = static_cast<std::int32_t>(k) - offsets_[static_cast<std::size_t>(row - 1)];
        return p % 2 == 0 ? Cell{CellKind::Up, row, p / 2 + 1} : Cell{CellKind::Down, row, (p + 1) / 2};
    }

private:
    std::int32_t x_;
    std::vector<std::int32_t> offsets_;
};

Lozenge make_lozenge(const Cell& a, const Cell& b) {
    const Cell& up = a.kind == CellKind::Up ? a : b;
    const Cell& down = a.kind == CellKind::Up ? b : a;
    if (down.row == up.row + 1) return {LozengeKind::Vertical, up, down};
    if (down.col == up.col) return {LozengeKind::RightTilted, up, down};
    return {LozengeKind::LeftTilted, up, down};
}

std::vector<Cell> neighbours(const Cell& c) {
    if (c.kind == CellKind::Up) {
        return {{CellKind::Down, c.row, c.col}, {CellKind::Down, c.row + 1, c.col}, {CellKind::Down, c.row, c.col - 1}};
    }
    return {{CellKind::Up, c.row, c.col}, {CellKind::Up, c.row - 1, c.col}, {CellKind::Up, c.row, c.col + 1}};
}

}  // namespace

Region::Region(std::int32_t x, std::int32_t h, std::vector<std::int32_t> left_dents,
               std::vector<std::int32_t> right_dents)
    : x_(x), h_(h), left_(std::move(left_dents)), right_(std::move(right_dents)) {
    if (x_ < 1) throw InvalidArgument("region width x must be >= 1");
    if (h_ < 0) throw InvalidArgument("region height h must be >= 0");
    for (auto* rows : {&left_, &right_}) {
        std::sort(rows->begin(), rows->end());
        if (std::adjacent_find(rows->begin(), rows->end()) != rows->end()) {
            throw InvalidArgument("repeated dent row");
        }
        for (std::int32_t row : *rows) {
            if (row < 1 || row > h_) throw InvalidArgument("dent row " + std::to_string(row) + " outside 1..h");
        }
    }
    if (static_cast<std::int32_t>(left_.size() + right_.size()) != h_) {
        throw InvalidArgument("region needs exactly h dents (|L| + |R| = h)");
    }
}

Region Region::parse(std::string_view spec) {
    std::map<std::string, std::pair<std::string_view, std::size_t>> fields;
    std::size_t pos = 0;
    while (pos < spec.size()) {
        if (spec[pos] == ' ') {
            ++pos;
            continue;
        }
        std::size_t end = spec.find(' ', pos);
        if (end == std::string_view::npos) end = spec.size();
        const std::string_view token = spec.substr(pos, end - pos);
        const std::size_t eq = token.find('=');
        if (eq == std::string_view::npos) throw ParseError("expected key=value", pos);
        const std::string key(token.substr(0, eq));
        if (key != "x" && key != "h" && key != "L" && key != "R") throw ParseError("unknown key '" + key + "'", pos);
        if (!fields.emplace(key, std::make_pair(token.substr(eq + 1), pos + eq + 1)).second) {
            throw ParseError("duplicate key '" + key + "'", pos);
        }
        pos = end;
    }
    for (const char* key : {"x", "h", "L", "R"}) {
        if (!fields.contains(key)) throw ParseError(std::string("missing key '") + key + "'", spec.size());
    }
    auto field = [&](const char* key) { return fields.at(key); };
    return Region(parse_int(field("x").first, field("x").second), parse_int(field("h").first, field("h").second),
                  parse_list(field("L").first, field("L").second), parse_list(field("R").first, field("R").second));
}

std::string Region::to_string() const {
    return "x=" + std::to_string(x_) + " h=" + std::to_string(h_) + " L=" + join(left_) + " R=" + join(right_);
}

bool Region::is_left_dent(std::int32_t row) const { return contains_row(left_, row); }
bool Region::is_right_dent(std::int32_t row) const { return contains_row(right_, row); }

bool Region::in_hexagon(const Cell& c) const {
    if (c.row < 1 || c.row > h_ || c.col < 1) return false;
    return c.kind == CellKind::Up ? c.col <= x_ + c.row : c.col <= x_ + c.row - 1;
}

bool Region::is_dent(const Cell& c) const {
    if (c.kind != CellKind::Up || !in_hexagon(c)) return false;
    return (c.col == 1 && is_left_dent(c.row)) || (c.col == x_ + c.row && is_right_dent(c.row));
}

std::vector<Cell> Region::cells() const {
    std::vector<Cell> out;
    for (std::int32_t i = 1; i <= h_; ++i) {
        for (std::int32_t j = 1; j <= x_ + i; ++j) {
            const Cell up{CellKind::Up, i, j};
            if (!is_dent(up)) out.push_back(up);
            if (j < x_ + i) out.push_back({CellKind::Down, i, j});
        }
    }
    return out;
}

Lozenge Lozenge::from_up(LozengeKind kind, std::int32_t row, std::int32_t col) {
    const Cell up{CellKind::Up, row, col};
    switch (kind) {
        case LozengeKind::Vertical:
            return {kind, up, {CellKind::Down, row + 1, col}};
        case LozengeKind::RightTilted:
            return {kind, up, {CellKind::Down, row, col}};
        case LozengeKind::LeftTilted:
            break;
    }
    return {kind, up, {CellKind::Down, row, col - 1}};
}

std::int32_t lozenge_label(const Region& r, const Lozenge& v) {
    if (v.kind != LozengeKind::Vertical) throw InvalidArgument("only vertical lozenges carry labels");
    return 2 * v.up.col - v.up.row - r.x() - 1;
}

LaurentPoly tiling_weight(const Region& r, const Tiling& t) {
    LaurentPoly w(1);
    for (const auto& l : t.lozenges) {
        if (l.kind == LozengeKind::Vertical) w *= step_weight(lozenge_label(r, l));
    }
    return w;
}

namespace {

// Backtracking core; visit returns false to stop early.
void walk_tilings(const Region& r, const std::function<bool(const Tiling&)>& visit, std::size_t max_cells) {
    const std::vector<Cell> region_cells = r.cells();
    if (region_cells.size() > max_cells) {
        throw TooLarge("region has " + std::to_string(region_cells.size()) + " cells, limit is " +
                       std::to_string(max_cells));
    }
    const CellIndex index(r);
    const std::size_t total = index.size();

    std::vector<bool> covered(total, true);
    std::vector<std::vector<std::size_t>> partners(total);
    for (const Cell& c : region_cells) {
        const std::size_t k = index.index(c);
        covered[k] = false;
        for (const Cell& n : neighbours(c)) {
            if (r.contains(n)) partners[k].push_back(index.index(n));
        }
    }

    auto first_uncovered = [&](std::size_t from) {
        while (from < total && covered[from]) ++from;
        return from;
    };

    struct Frame {
        std::size_t cell;
        std::size_t next_option;
        std::size_t partner;
    };
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    Tiling current;
    const std::size_t first = first_uncovered(0);
    if (first == total) {
        visit(current);
        return;
    }
    std::vector<Frame> stack{{first, 0, kNone}};
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.partner != kNone) {
            covered[f.cell] = false;
            covered[f.partner] = false;
            current.lozenges.pop_back();
            f.partner = kNone;
        }
        const auto& options = partners[f.cell];
        while (f.next_option < options.size() && covered[options[f.next_option]]) ++f.next_option;
        if (f.next_option == options.size()) {
            stack.pop_back();
            continue;
        }
        f.partner = options[f.next_option++];
        covered[f.cell] = true;
        covered[f.partner] = true;
        current.lozenges.push_back(make_lozenge(index.cell(f.cell), index.cell(f.partner)));

        const std::size_t next = first_uncovered(f.cell + 1);
        if (next == total) {
            if (!visit(current)) return;
        } else {
            stack.push_back({next, 0, kNone});
        }
    }
}

}  // namespace

void for_each_tiling(const Region& r, const std::function<void(const Tiling&)>& visit, std::size_t max_cells) {
    walk_tilings(
        r,
        [&](const Tiling& t) {
            visit(t);
            return true;
        },
        max_cells);
}

std::optional<Tiling> first_tiling(const Region& r, std::size_t max_cells) {
    std::optional<Tiling> out;
    walk_tilings(
        r,
        [&](const Tiling& t) {
            out = t;
            return false;
        },
        max_cells);
    return out;
}

std::vector<Tiling> enumerate_tilings(const Region& r, std::size_t max_cells) {
    std::vector<Tiling> out;
    for_each_tiling(r, [&](const Tiling& t) { out.push_back(t); }, max_cells);
    return out;
}

LaurentPoly gf_tilings(const Region& r, std::size_t max_cells) {
    std::map<std::vector<std::int32_t>, std::int64_t> tally;
    for_each_tiling(
        r,
        [&](const Tiling& t) {
            std::vector<std::int32_t> labels;
            for (const auto& l : t.lozenges) {
                if (l.kind == LozengeKind::Vertical) labels.push_back(lozenge_label(r, l));
            }
            std::sort(labels.begin(), labels.end());
            ++tally[labels];
        },
        max_cells);
    LaurentPoly sum;
    for (const auto& [labels, count] : tally) {
        LaurentPoly w(count);
        for (std::int32_t label : labels) w *= step_weight(label);
        sum += w;
    }
    return sum;
}

EndpointConfig region_endpoints(const Region& r) {
    std::vector<std::int32_t> starts, ends;
    for (std::int32_t row = 1; row <= r.h(); ++row) {
        if (!r.is_left_dent(row)) starts.push_back(r.x() + row - 1);
        if (r.is_right_dent(row)) ends.push_back(r.x() + row - 1);
    }
    return EndpointConfig(std::move(starts), std::move(ends));
}

std::vector<LatticePath> tiling_to_paths(const Region& r, const Tiling& t) {
    // Lozenge kind keyed by its up-cell.
    std::map<std::pair<std::int32_t, std::int32_t>, LozengeKind> by_up;
    for (const auto& l : t.lozenges) by_up.emplace(std::make_pair(l.up.row, l.up.col), l.kind);

    std::vector<LatticePath> family;
    for (std::int32_t l = 1; l <= r.h(); ++l) {
        if (r.is_left_dent(l)) continue;
        const std::int32_t a = r.x() + l - 1;
        LatticePath path{{a, a}, {}};
        std::int32_t row = l;
        std::int32_t col = 1;
        while (true) {
            const Cell here{CellKind::Up, row, col};
            if (!r.in_hexagon(here)) throw InvalidTiling("path left the region at row " + std::to_string(row));
            if (r.is_dent(here)) {
                if (col != r.x() + row) throw InvalidTiling("path ran into a left dent");
                break;
            }
            const auto it = by_up.find({row, col});
            if (it == by_up.end()) throw InvalidTiling("uncovered up-triangle");
            if (it->second == LozengeKind::Vertical) {
                path.steps.push_back(Step::Right);
                ++row;
            } else if (it->second == LozengeKind::RightTilted) {
                path.steps.push_back(Step::Down);
            } else {
                throw InvalidTiling("path entered a left-tilted lozenge");
            }
            ++col;
        }
        family.push_back(std::move(path));
    }
    return family;
}

bool is_valid_tiling(const Region& r, const Tiling& t) {
    const CellIndex index(r);
    std::vector<int> cover(index.size(), 0);
    for (const auto& l : t.lozenges) {
        if (!r.contains(l.up) || !r.contains(l.down)) return false;
        if (!(make_lozenge(l.up, l.down) == l)) return false;
        const auto adj = neighbours(l.up);
        if (std::find(adj.begin(), adj.end(), l.down) == adj.end()) return false;
        ++cover[index.index(l.up)];
        ++cover[index.index(l.down)];
    }
    for (const Cell& c : r.cells()) {
        if (cover[index.index(c)] != 1) return false;
    }
    return true;
}

}  // namespace dentedhex
