#pragma once

// Shared plumbing for diagram surgery: occurrence tables, strand tracing and
// the mutable working form that every operation rebuilds into a diagram.

#include <array>
#include <unordered_map>
#include <vector>

#include "detskein/diagram.hpp"

namespace detskein::detail {

// node < crossing count: a crossing; otherwise slot (node - crossing count).
struct Occ {
    int node = 0;
    int pos = 0;
    friend bool operator==(const Occ&, const Occ&) = default;
};

struct Step {
    ArcId arc;
    Occ from;
    Occ to;
};

struct Path {
    std::vector<Step> steps;
    bool closed = false;
};

class Layout {
public:
    Layout(const std::vector<std::array<ArcId, 4>>& crossings,
           const std::vector<std::array<ArcId, 4>>& slots);

    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    int node_count() const { return static_cast<int>(crossings_.size() + slots_.size()); }
    bool is_slot(int node) const { return node >= crossing_count(); }
    ArcId arc_at(Occ o) const;
    Occ other(Occ o) const;
    const std::unordered_map<ArcId, std::array<Occ, 2>>& arcs() const { return occ_; }

    // Discovery order: strands from slot endpoints, then closed components
    // starting at their first occurrence in listing order.
    std::vector<Path> trace() const;

    // Whether the reference direction is opposite to the discovery
    // direction. Throws ParseError when under-passes disagree.
    bool reference_reversed(const Path& p) const;

    bool planar() const;

private:
    std::vector<std::array<ArcId, 4>> crossings_;
    std::vector<std::array<ArcId, 4>> slots_;
    std::unordered_map<ArcId, std::array<Occ, 2>> occ_;
};

Path reversed(const Path& p);

Layout layout_of(const LinkDiagram& d);

enum class Flow : signed char { unknown = 0, in = 1, out = -1 };

struct WorkNode {
    std::array<ArcId, 4> arc{};
    std::array<Flow, 4> flow{};
};

// Editable diagram. Flows record which way each arc end points; operations
// keep them up to date where they can and leave `unknown` elsewhere.
struct Work {
    std::vector<WorkNode> crossings;
    std::vector<WorkNode> slots;
    std::vector<int> loops;  // orientation sign per free loop
    bool oriented = false;

    ArcId max_label() const;
    void relabel(const std::unordered_map<ArcId, ArcId>& to);
    bool has_occurrence(ArcId a) const;
};

// Flows follow the diagram's orientation, or the reference directions when it
// is unoriented.
Work to_work(const LinkDiagram& d);

// Pick a direction per path (oriented work must be consistent; unoriented
// work follows the first flow on the path), rotate crossings so position 0 is
// the incoming under-strand, renumber arcs by first appearance.
LinkDiagram finalize(Work w);

}  // namespace detskein::detail
