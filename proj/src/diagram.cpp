#include "fpb/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "fpb/error.hpp"

namespace fpb {

namespace {

struct Segment {
    GridPoint a;
    GridPoint b;
    int band;
    int index;
    bool horizontal() const { return a.y == b.y; }
    int lo_x() const { return std::min(a.x, b.x); }
    int hi_x() const { return std::max(a.x, b.x); }
    int lo_y() const { return std::min(a.y, b.y); }
    int hi_y() const { return std::max(a.y, b.y); }
};

std::vector<Segment> segments(const RectilinearDiagram& d) {
    std::vector<Segment> out;
    for (std::size_t bi = 0; bi < d.bands.size(); ++bi) {
        const auto& p = d.bands[bi].path;
        for (std::size_t k = 0; k + 1 < p.size(); ++k)
            out.push_back({p[k], p[k + 1], static_cast<int>(bi), static_cast<int>(k)});
    }
    return out;
}

int sign(int v) { return (v > 0) - (v < 0); }

std::string where(int band, int segment) {
    return "band " + std::to_string(band + 1) + " segment " + std::to_string(segment + 1);
}

int parse_int(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw Error(ErrorKind::MalformedBand, "bad coordinate '" + std::string(s) + "'");
    return v;
}

// Height of the lowest x-line of a band.
int lowest_height(const Band& b) {
    int h = 0;
    bool any = false;
    for (std::size_t k = 1; k + 1 < b.path.size(); k += 2) {
        if (!any || b.path[k].y < h) h = b.path[k].y;
        any = true;
    }
    return h;
}

}  // namespace

RectilinearDiagram parse_diagram(std::string_view text) {
    RectilinearDiagram d;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
        Band band;
        std::size_t vp = 0;
        while (vp <= line.size()) {
            std::size_t semi = line.find(';', vp);
            if (semi == std::string_view::npos) semi = line.size();
            std::string_view vertex = line.substr(vp, semi - vp);
            vp = semi + 1;
            if (vertex.find_first_not_of(" \t\r") == std::string_view::npos) continue;
            const auto comma = vertex.find(',');
            if (comma == std::string_view::npos)
                throw Error(ErrorKind::MalformedBand, "vertex without comma: '" + std::string(vertex) + "'");
            band.path.push_back({parse_int(vertex.substr(0, comma)), parse_int(vertex.substr(comma + 1))});
        }
        d.bands.push_back(std::move(band));
        if (eol == text.size()) break;
    }
    return d;
}

RectilinearDiagram load_diagram(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_diagram(ss.str());
}

std::string format_diagram(const RectilinearDiagram& d) {
    std::ostringstream os;
    for (const auto& b : d.bands) {
        for (std::size_t k = 0; k < b.path.size(); ++k) os << (k ? "; " : "") << b.path[k].x << ',' << b.path[k].y;
        if (b.connector) os << "  # connector";
        os << '\n';
    }
    return os.str();
}

void validate_diagram(const RectilinearDiagram& d) {
    if (d.bands.empty()) throw Error(ErrorKind::MalformedBand, "diagram has no bands");
    std::vector<int> feet;
    for (std::size_t bi = 0; bi < d.bands.size(); ++bi) {
        const auto& p = d.bands[bi].path;
        const int b = static_cast<int>(bi);
        if (p.size() < 4) throw Error(ErrorKind::MalformedBand, "band " + std::to_string(b + 1) + " has fewer than 4 vertices");
        for (std::size_t k = 0; k + 1 < p.size(); ++k) {
            const bool vertical = p[k].x == p[k + 1].x && p[k].y != p[k + 1].y;
            const bool horizontal = p[k].y == p[k + 1].y && p[k].x != p[k + 1].x;
            if (!vertical && !horizontal)
                throw Error(ErrorKind::MalformedBand, where(b, static_cast<int>(k)) + " is not a nonzero axis-parallel segment");
            if (vertical != (k % 2 == 0))
                throw Error(ErrorKind::MalformedBand, where(b, static_cast<int>(k)) + " breaks the vertical/horizontal alternation");
        }
        if (p.size() % 2 != 0)
            throw Error(ErrorKind::MalformedBand, "band " + std::to_string(b + 1) + " does not end with a vertical segment");
        if (p.front().y != 0 || p.back().y != 0)
            throw Error(ErrorKind::FootOrderViolation, "band " + std::to_string(b + 1) + " does not start and end on the baseline");
        for (std::size_t k = 1; k + 1 < p.size(); ++k)
            if (p[k].y <= 0)
                throw Error(ErrorKind::FootOrderViolation, "band " + std::to_string(b + 1) + " has an interior vertex at height <= 0");
        feet.push_back(p.front().x);
        feet.push_back(p.back().x);
    }
    std::sort(feet.begin(), feet.end());
    if (std::adjacent_find(feet.begin(), feet.end()) != feet.end())
        throw Error(ErrorKind::FootOrderViolation, "two feet share a position on the baseline");

    const auto segs = segments(d);
    for (std::size_t i = 0; i < segs.size(); ++i) {
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            const Segment& s = segs[i];
            const Segment& t = segs[j];
            if (s.band == t.band && std::abs(s.index - t.index) == 1) continue;
            if (s.horizontal() == t.horizontal()) {
                const bool same_line = s.horizontal() ? s.a.y == t.a.y : s.a.x == t.a.x;
                const bool overlap = s.horizontal() ? (s.lo_x() <= t.hi_x() && t.lo_x() <= s.hi_x())
                                                    : (s.lo_y() <= t.hi_y() && t.lo_y() <= s.hi_y());
                if (same_line && overlap)
                    throw Error(ErrorKind::EndpointCrossing, where(s.band, s.index) + " overlaps " + where(t.band, t.index));
                continue;
            }
            const Segment& h = s.horizontal() ? s : t;
            const Segment& v = s.horizontal() ? t : s;
            const int x = v.a.x;
            const int y = h.a.y;
            if (x < h.lo_x() || x > h.hi_x() || y < v.lo_y() || y > v.hi_y()) continue;
            const bool interior = x > h.lo_x() && x < h.hi_x() && y > v.lo_y() && y < v.hi_y();
            if (!interior)
                throw Error(ErrorKind::EndpointCrossing, where(h.band, h.index) + " meets " + where(v.band, v.index) +
                                                             " at a segment endpoint (" + std::to_string(x) + "," +
                                                             std::to_string(y) + ")");
        }
    }

    std::map<int, Segment> heights;
    std::map<int, Segment> columns;
    for (const auto& s : segs) {
        auto& m = s.horizontal() ? heights : columns;
        const int key = s.horizontal() ? s.a.y : s.a.x;
        if (auto [it, fresh] = m.emplace(key, s); !fresh) {
            throw Error(s.horizontal() ? ErrorKind::DuplicateHeight : ErrorKind::DuplicateColumn,
                        where(it->second.band, it->second.index) + " and " + where(s.band, s.index) + " share " +
                            (s.horizontal() ? "height " : "column ") + std::to_string(key));
        }
    }
}

std::vector<XLineClass> classify_xlines(const RectilinearDiagram& d) {
    std::vector<XLineClass> out;
    for (std::size_t bi = 0; bi < d.bands.size(); ++bi) {
        const auto& p = d.bands[bi].path;
        for (std::size_t k = 1; k + 2 < p.size(); k += 2) {
            const Adjacency before = p[k - 1].y > p[k].y ? Adjacency::Ascends : Adjacency::Descends;
            const Adjacency after = p[k + 2].y > p[k + 1].y ? Adjacency::Ascends : Adjacency::Descends;
            const bool rightward = p[k + 1].x > p[k].x;
            XLineClass c;
            c.ref = {static_cast<int>(bi), static_cast<int>(k)};
            c.height = p[k].y;
            c.x_left = std::min(p[k].x, p[k + 1].x);
            c.x_right = std::max(p[k].x, p[k + 1].x);
            c.left = rightward ? before : after;
            c.right = rightward ? after : before;
            out.push_back(c);
        }
    }
    return out;
}

int ascending_adjacencies(const RectilinearDiagram& d) {
    int count = 0;
    for (const auto& c : classify_xlines(d))
        count += (c.left == Adjacency::Ascends) + (c.right == Adjacency::Ascends);
    return count;
}

UnderlyingDiagram foot_matching(const RectilinearDiagram& d) {
    std::vector<std::pair<int, int>> feet;  // (x, band)
    for (std::size_t bi = 0; bi < d.bands.size(); ++bi) {
        feet.emplace_back(d.bands[bi].path.front().x, static_cast<int>(bi));
        feet.emplace_back(d.bands[bi].path.back().x, static_cast<int>(bi));
    }
    std::sort(feet.begin(), feet.end());
    std::vector<int> first(d.bands.size(), 0);
    std::vector<int> partner(feet.size(), 0);
    for (std::size_t k = 0; k < feet.size(); ++k) {
        const auto band = static_cast<std::size_t>(feet[k].second);
        const int pos = static_cast<int>(k) + 1;
        if (first[band] == 0) {
            first[band] = pos;
        } else {
            partner[k] = first[band];
            partner[static_cast<std::size_t>(first[band] - 1)] = pos;
        }
    }
    return UnderlyingDiagram(std::move(partner));
}

RectilinearDiagram compressed(const RectilinearDiagram& d, int spacing) {
    std::vector<int> xs;
    std::vector<int> ys;
    for (const auto& b : d.bands)
        for (const auto& v : b.path) {
            xs.push_back(v.x);
            if (v.y > 0) ys.push_back(v.y);
        }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    auto rank = [](const std::vector<int>& v, int x) {
        return static_cast<int>(std::lower_bound(v.begin(), v.end(), x) - v.begin());
    };
    RectilinearDiagram out = d;
    for (auto& b : out.bands)
        for (auto& v : b.path) {
            v.x = spacing * (rank(xs, v.x) + 1);
            v.y = v.y > 0 ? rank(ys, v.y) + 1 : v.y;
        }
    return out;
}

RectilinearDiagram push_down(const RectilinearDiagram& input, XLineRef site, PushDownStep* step) {
    constexpr int kSpacing = 4;
    RectilinearDiagram d = compressed(input, kSpacing);
    if (site.band < 0 || site.band >= static_cast<int>(d.bands.size()))
        throw Error(ErrorKind::SiteNotEligible, "no band " + std::to_string(site.band + 1));
    const auto classes = classify_xlines(d);
    const auto it = std::find_if(classes.begin(), classes.end(), [&](const XLineClass& c) { return c.ref == site; });
    if (it == classes.end()) throw Error(ErrorKind::SiteNotEligible, where(site.band, site.segment) + " is not an x-line");
    const XLineClass& cls = *it;
    if (cls.flat()) throw Error(ErrorKind::SiteNotEligible, where(site.band, site.segment) + " is already flat");

    const int before_bands = static_cast<int>(d.bands.size());
    const int before_boundary = boundary_components(foot_matching(d));
    const int before_ascending = ascending_adjacencies(d);

    bool covers_column = false;
    for (const auto& s : segments(d))
        if (!s.horizontal() && s.a.x > cls.x_left && s.a.x < cls.x_right) covers_column = true;

    int top = 0;
    for (const auto& b : d.bands)
        for (const auto& v : b.path) top = std::max(top, v.y);

    const auto k = static_cast<std::size_t>(site.segment);
    const std::vector<GridPoint> p = d.bands[static_cast<std::size_t>(site.band)].path;
    const int h = p[k].y;
    const int dir = sign(p[k + 1].x - p[k].x);  // traversal direction along the x-line
    const bool asc_first = p[k - 1].y > h;      // end reached first in traversal
    const bool asc_second = p[k + 2].y > h;

    std::vector<GridPoint> first_piece;
    std::vector<GridPoint> second_piece;
    int connector_a = 0;
    int connector_b = 0;
    PushDownKind kind;

    if (asc_first && asc_second && !covers_column) {
        kind = PushDownKind::Valley;
        first_piece.assign(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(k));
        first_piece.push_back({p[k].x, 0});
        second_piece.push_back({p[k + 1].x, 0});
        second_piece.insert(second_piece.end(), p.begin() + static_cast<std::ptrdiff_t>(k + 2), p.end());
        connector_a = p[k].x - dir;
        connector_b = p[k + 1].x + dir;
    } else {
        // leftmost ascending end
        const bool first_is_left = dir > 0;
        const bool cut_first = asc_first && (!asc_second || first_is_left);
        if (cut_first) {
            const int fresh = p[k].x + dir;
            first_piece.assign(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(k));
            first_piece.push_back({p[k].x, 0});
            second_piece = {{fresh, 0}, {fresh, h}};
            second_piece.insert(second_piece.end(), p.begin() + static_cast<std::ptrdiff_t>(k + 1), p.end());
            connector_a = p[k].x - dir;
            connector_b = p[k].x + 2 * dir;
        } else {
            const int fresh = p[k + 1].x - dir;
            first_piece.assign(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(k + 1));
            first_piece.push_back({fresh, h});
            first_piece.push_back({fresh, 0});
            second_piece.push_back({p[k + 1].x, 0});
            second_piece.insert(second_piece.end(), p.begin() + static_cast<std::ptrdiff_t>(k + 2), p.end());
            connector_a = p[k + 1].x - 2 * dir;
            connector_b = p[k + 1].x + dir;
        }
        kind = (cut_first == (dir > 0)) ? PushDownKind::LeftCorner : PushDownKind::RightCorner;
    }

    const bool was_connector = d.bands[static_cast<std::size_t>(site.band)].connector;
    d.bands[static_cast<std::size_t>(site.band)] = Band{std::move(first_piece), was_connector};
    d.bands.insert(d.bands.begin() + site.band + 1, Band{std::move(second_piece), was_connector});
    const int lo = std::min(connector_a, connector_b);
    const int hi = std::max(connector_a, connector_b);
    d.bands.push_back(Band{{{lo, 0}, {lo, top + 1}, {hi, top + 1}, {hi, 0}}, true});

    RectilinearDiagram out = compressed(d, 1);
    if (step) {
        step->site = site;
        step->kind = kind;
        step->height = cls.height;
        step->bands_before = before_bands;
        step->bands_after = static_cast<int>(out.bands.size());
        step->boundary_before = before_boundary;
        step->boundary_after = boundary_components(foot_matching(out));
        step->ascending_before = before_ascending;
        step->ascending_after = ascending_adjacencies(out);
    }
    return out;
}

std::vector<int> band_order(const RectilinearDiagram& d) {
    std::vector<int> order(d.bands.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return lowest_height(d.bands[static_cast<std::size_t>(a)]) < lowest_height(d.bands[static_cast<std::size_t>(b)]);
    });
    return order;
}

FlatBasketCode read_off(const RectilinearDiagram& d) {
    if (ascending_adjacencies(d) != 0) throw std::logic_error("read_off: diagram is not flat");
    const auto order = band_order(d);
    std::vector<int> label(d.bands.size());
    for (std::size_t r = 0; r < order.size(); ++r) label[static_cast<std::size_t>(order[r])] = static_cast<int>(r) + 1;
    std::vector<std::pair<int, int>> feet;
    for (std::size_t bi = 0; bi < d.bands.size(); ++bi) {
        feet.emplace_back(d.bands[bi].path.front().x, label[bi]);
        feet.emplace_back(d.bands[bi].path.back().x, label[bi]);
    }
    std::sort(feet.begin(), feet.end());
    std::vector<int> word;
    word.reserve(feet.size());
    for (const auto& f : feet) word.push_back(f.second);
    return FlatBasketCode(std::move(word));
}

FlattenResult flatten(const RectilinearDiagram& d) {
    validate_diagram(d);
    RectilinearDiagram cur = compressed(d, 1);
    std::vector<PushDownStep> steps;
    const int budget = ascending_adjacencies(cur);
    while (true) {
        const auto classes = classify_xlines(cur);
        const XLineClass* pick = nullptr;
        for (const auto& c : classes)
            if (!c.flat() && (!pick || c.height < pick->height)) pick = &c;
        if (!pick) break;
        if (static_cast<int>(steps.size()) >= budget) throw std::logic_error("flatten: push-down count exceeded its bound");
        PushDownStep step{};
        cur = push_down(cur, pick->ref, &step);
        steps.push_back(step);
    }
    FlatBasketCode code = read_off(cur);
    return {std::move(code), std::move(cur), std::move(steps)};
}

SeifertMatrix diagram_seifert_matrix(const RectilinearDiagram& input) {
    validate_diagram(input);
    RectilinearDiagram d = input;
    for (auto& b : d.bands)
        if (b.path.front().x > b.path.back().x) std::reverse(b.path.begin(), b.path.end());
    const auto order = band_order(d);
    std::vector<int> index(d.bands.size());
    for (std::size_t r = 0; r < order.size(); ++r) index[static_cast<std::size_t>(order[r])] = static_cast<int>(r);
    const int n = static_cast<int>(d.bands.size());
    SeifertMatrix v = SeifertMatrix::Zero(n, n);

    // Band crossings: the horizontal strand is over. The push-off of the over
    // band links the under band with sign det(under direction, over direction).
    const auto segs = segments(d);
    for (const auto& h : segs) {
        if (!h.horizontal()) continue;
        for (const auto& s : segs) {
            if (s.horizontal()) continue;
            const int x = s.a.x;
            const int y = h.a.y;
            if (x <= h.lo_x() || x >= h.hi_x() || y <= s.lo_y() || y >= s.hi_y()) continue;
            const int over_dx = sign(h.b.x - h.a.x);
            const int under_dy = sign(s.b.y - s.a.y);
            v(index[static_cast<std::size_t>(h.band)], index[static_cast<std::size_t>(s.band)]) += -under_dy * over_dx;
        }
    }

    // Disk chords run from the right foot back to the left foot; where two of
    // them cross, the pushed-off cycle passes over.
    std::vector<std::pair<int, int>> feet(static_cast<std::size_t>(n));
    for (std::size_t bi = 0; bi < d.bands.size(); ++bi)
        feet[static_cast<std::size_t>(index[bi])] = {d.bands[bi].path.front().x, d.bands[bi].path.back().x};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const auto [pi, qi] = feet[static_cast<std::size_t>(i)];
            const auto [pj, qj] = feet[static_cast<std::size_t>(j)];
            const bool interleaved = (pi < pj && pj < qi && qi < qj) || (pj < pi && pi < qj && qj < qi);
            if (interleaved) v(i, j) += pi < pj ? 1 : -1;
        }
    return v;
}

RectilinearDiagram arches_from_code(const FlatBasketCode& code) {
    RectilinearDiagram d;
    for (int label = 1; label <= code.bands(); ++label) {
        const auto f = code.feet(label);
        d.bands.push_back(Band{{{f.first, 0}, {f.first, label}, {f.second, label}, {f.second, 0}}, false});
    }
    return d;
}

}  // namespace fpb
