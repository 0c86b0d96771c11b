#ifndef FPB_DIAGRAM_HPP
#define FPB_DIAGRAM_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "fpb/code.hpp"
#include "fpb/seifert.hpp"

namespace fpb {

struct GridPoint {
    int x;
    int y;
    friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

/// Core of one band: a rectilinear path that leaves the disk at a foot on the
/// baseline y = 0, alternates vertical and horizontal segments at positive
/// heights, and returns to a second foot.
struct Band {
    std::vector<GridPoint> path;
    bool connector = false;  // created by a push-down, routed behind every page
};

/// Normal-form projection of a disk-with-bands Seifert surface. The disk lies
/// below the baseline; at every crossing the horizontal strand is over.
struct RectilinearDiagram {
    std::vector<Band> bands;
};

/// One band per line, "x,y; x,y; ...". Blank lines and '#' comments are
/// ignored. Throws Error(MalformedBand) on unreadable vertices.
RectilinearDiagram parse_diagram(std::string_view text);
RectilinearDiagram load_diagram(const std::string& path);
std::string format_diagram(const RectilinearDiagram& d);

/// Throws Error(FootOrderViolation | MalformedBand | EndpointCrossing |
/// DuplicateHeight | DuplicateColumn) on the first violated condition.
void validate_diagram(const RectilinearDiagram& d);

enum class Adjacency { Descends, Ascends };

/// Horizontal segment `segment` -> `segment + 1` of band `band` (vertex indices).
struct XLineRef {
    int band;
    int segment;
    friend bool operator==(const XLineRef&, const XLineRef&) = default;
};

struct XLineClass {
    XLineRef ref;
    int height;
    int x_left;
    int x_right;
    Adjacency left;
    Adjacency right;
    bool flat() const { return left == Adjacency::Descends && right == Adjacency::Descends; }
};

std::vector<XLineClass> classify_xlines(const RectilinearDiagram& d);

/// Total number of ascending x-line ends. Zero iff the diagram is flat.
int ascending_adjacencies(const RectilinearDiagram& d);

/// Chord diagram of the feet read left to right.
UnderlyingDiagram foot_matching(const RectilinearDiagram& d);

enum class PushDownKind { Valley, LeftCorner, RightCorner };

struct PushDownStep {
    XLineRef site;
    PushDownKind kind;
    int height;
    int bands_before;
    int bands_after;
    int boundary_before;
    int boundary_after;
    int ascending_before;
    int ascending_after;
};

/// Splits the band at a non-flat x-line: the cut ends drop to new feet on the
/// baseline and a connector band, placed behind every other band, is attached
/// with feet flanking the two cut feet. An x-line whose two ends both ascend
/// and that passes over no y-line is removed in one step; otherwise the
/// leftmost ascending end is cut. Throws Error(SiteNotEligible) on a flat
/// x-line. Coordinates of the result are re-compressed onto a small grid.
RectilinearDiagram push_down(const RectilinearDiagram& d, XLineRef site, PushDownStep* step = nullptr);

/// Flat diagram -> code: feet left to right, bands labelled by ascending
/// height of their single x-line. Throws std::logic_error if not flat.
FlatBasketCode read_off(const RectilinearDiagram& d);

struct FlattenResult {
    FlatBasketCode code;
    RectilinearDiagram flat;
    std::vector<PushDownStep> steps;
};

/// Push down the lowest non-flat x-line (leftmost end first) until every
/// x-line is flat, then read off the code.
FlattenResult flatten(const RectilinearDiagram& d);

/// Seifert matrix of the diagram's surface from crossings, in the basis of
/// band cores (oriented from the left foot) closed by disk chords. Rows and
/// columns follow band_order(d).
SeifertMatrix diagram_seifert_matrix(const RectilinearDiagram& d);

/// Bands sorted by the height of their lowest x-line; for a flat diagram this
/// is the labelling used by read_off.
std::vector<int> band_order(const RectilinearDiagram& d);

/// Band paths and feet compressed onto the grid x -> spacing*rank, y -> rank.
RectilinearDiagram compressed(const RectilinearDiagram& d, int spacing = 1);

/// Flat diagram with one arch per label of the code: feet at the code
/// positions, arch height equal to the label.
RectilinearDiagram arches_from_code(const FlatBasketCode& code);

}  // namespace fpb

#endif  // FPB_DIAGRAM_HPP
