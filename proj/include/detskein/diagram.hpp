#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "detskein/tangle.hpp"

namespace detskein {

using ArcId = int;

// Four arc labels counterclockwise, starting at the incoming under-strand.
// Positions 0 and 2 carry the under-strand, 1 and 3 the over-strand.
struct Crossing {
    std::array<ArcId, 4> arcs{};
    friend bool operator==(const Crossing&, const Crossing&) = default;
};

// A deleted disk with four boundary endpoints a (NW), b (NE), c (SW), d (SE).
// Counterclockwise around the disk the endpoints read a, c, d, b.
struct SlotRef {
    std::array<ArcId, 4> endpoints{};
    friend bool operator==(const SlotRef&, const SlotRef&) = default;
};

struct CrossingSite {
    std::size_t index = 0;
};

enum class Smoothing { zero, one };

// A planar diagram in PD form, possibly with tangle slots and crossingless
// loops. Paths are the traced strands (slot to slot) followed by the closed
// components and finally the free loops; `orientation`, when present, holds
// +1 or -1 per path relative to its reference direction.
//
// Reference direction of a path: the one in which every under-pass runs from
// position 0 to position 2. Paths without under-passes leave the first
// occurrence (in listing order) along its arc.
class LinkDiagram {
public:
    LinkDiagram();  // crossingless unknot
    explicit LinkDiagram(std::vector<Crossing> crossings, std::vector<SlotRef> slots = {},
                         int free_loops = 0,
                         std::optional<std::vector<int>> orientation = std::nullopt);

    const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
    const std::vector<SlotRef>& slots() const noexcept { return slots_; }
    int free_loops() const noexcept { return free_loops_; }
    std::size_t arc_count() const noexcept { return arc_count_; }
    std::size_t path_count() const noexcept { return path_count_; }

    bool oriented() const noexcept { return orientation_.has_value(); }
    const std::vector<int>& orientation() const;

    LinkDiagram unoriented() const;
    LinkDiagram with_orientation(std::vector<int> signs) const;

    friend bool operator==(const LinkDiagram&, const LinkDiagram&) = default;

private:
    std::vector<Crossing> crossings_;
    std::vector<SlotRef> slots_;
    int free_loops_ = 1;
    std::optional<std::vector<int>> orientation_;
    std::size_t arc_count_ = 0;
    std::size_t path_count_ = 1;
};

LinkDiagram parse_pd(std::string_view text);
std::string to_pd(const LinkDiagram& d);

int components(const LinkDiagram& d);

LinkDiagram resolve(const LinkDiagram& d, CrossingSite site, Smoothing which);
LinkDiagram crossing_change(const LinkDiagram& d, CrossingSite site);
LinkDiagram oriented_resolve(const LinkDiagram& d, CrossingSite site);
LinkDiagram mirror(const LinkDiagram& d);

// +1 when the over-strand runs from position 3 to position 1.
int crossing_sign(const LinkDiagram& d, CrossingSite site);

LinkDiagram disjoint_union(const LinkDiagram& d1, const LinkDiagram& d2);
LinkDiagram connected_sum(const LinkDiagram& d1, ArcId a1, const LinkDiagram& d2, ArcId a2);
ArcId lowest_arc(const LinkDiagram& d);

// Replace slot `slot` by the compiled word; the tangle's NW, NE, SW, SE
// boundary arcs are joined to endpoints a, b, c, d.
LinkDiagram splice(const LinkDiagram& t, std::size_t slot, const TangleWord& w);
LinkDiagram splice(const LinkDiagram& t, std::size_t slot, const TangleFraction& f);

// Cut out crossing `site` and leave a slot whose 1/1 filling is the original.
LinkDiagram slot_from_crossing(const LinkDiagram& d, CrossingSite site);

// Orientation with every path at its reference direction.
LinkDiagram with_default_orientation(const LinkDiagram& d);

}  // namespace detskein
