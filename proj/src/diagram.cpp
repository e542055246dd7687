#include "detskein/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "detskein/error.hpp"
#include "detskein/tangle.hpp"
#include "diagram_internal.hpp"
#include "union_find.hpp"

namespace detskein {
namespace detail {

Layout::Layout(const std::vector<std::array<ArcId, 4>>& crossings,
               const std::vector<std::array<ArcId, 4>>& slots)
    : crossings_(crossings), slots_(slots) {
    std::unordered_map<ArcId, int> seen;
    for (int n = 0; n < node_count(); ++n) {
        for (int pos = 0; pos < 4; ++pos) {
            Occ o{n, pos};
            ArcId a = arc_at(o);
            int& k = seen[a];
            if (k >= 2) throw ParseError("arc " + std::to_string(a) + " appears more than twice");
            occ_[a][k++] = o;
        }
    }
    for (const auto& [a, k] : seen) {
        if (k != 2) throw ParseError("arc " + std::to_string(a) + " appears once");
    }
}

ArcId Layout::arc_at(Occ o) const {
    return is_slot(o.node) ? slots_[o.node - crossing_count()][o.pos] : crossings_[o.node][o.pos];
}

Occ Layout::other(Occ o) const {
    const auto& pair = occ_.at(arc_at(o));
    return pair[0] == o ? pair[1] : pair[0];
}

std::vector<Path> Layout::trace() const {
    std::vector<Path> paths;
    std::unordered_set<ArcId> seen;
    auto walk = [&](Occ start) {
        Path p;
        Occ from = start;
        for (;;) {
            Occ to = other(from);
            p.steps.push_back({arc_at(from), from, to});
            seen.insert(arc_at(from));
            if (is_slot(to.node)) break;
            Occ next{to.node, (to.pos + 2) % 4};
            if (next == start) {
                p.closed = true;
                break;
            }
            from = next;
        }
        return p;
    };
    for (int n = crossing_count(); n < node_count(); ++n) {
        for (int pos = 0; pos < 4; ++pos) {
            if (!seen.contains(arc_at({n, pos}))) paths.push_back(walk({n, pos}));
        }
    }
    for (int n = 0; n < crossing_count(); ++n) {
        for (int pos = 0; pos < 4; ++pos) {
            if (!seen.contains(arc_at({n, pos}))) paths.push_back(walk({n, pos}));
        }
    }
    return paths;
}

bool Layout::reference_reversed(const Path& p) const {
    int forward = 0;
    int backward = 0;
    for (const Step& s : p.steps) {
        if (is_slot(s.to.node)) continue;
        if (s.to.pos == 0) ++forward;
        if (s.to.pos == 2) ++backward;
    }
    if (forward > 0 && backward > 0) {
        throw ParseError("under-strand direction is inconsistent along arc " +
                         std::to_string(p.steps.front().arc));
    }
    return backward > 0;
}

bool Layout::planar() const {
    int v = node_count();
    if (v == 0) return true;
    // Counterclockwise successor of each position: crossings 0,1,2,3;
    // slots a, c, d, b.
    static constexpr std::array<int, 4> slot_next{2, 0, 3, 1};
    auto index = [](Occ o) { return o.node * 4 + o.pos; };
    std::vector<bool> used(static_cast<std::size_t>(v) * 4, false);
    int faces = 0;
    for (int n = 0; n < v; ++n) {
        for (int pos = 0; pos < 4; ++pos) {
            Occ start{n, pos};
            if (used[index(start)]) continue;
            ++faces;
            Occ d = start;
            while (!used[index(d)]) {
                used[index(d)] = true;
                Occ o = other(d);
                d = {o.node, is_slot(o.node) ? slot_next[o.pos] : (o.pos + 1) % 4};
            }
        }
    }
    UnionFind<int> pieces;
    for (const auto& [a, pair] : occ_) pieces.unite(pair[0].node, pair[1].node);
    std::unordered_set<int> roots;
    for (int n = 0; n < v; ++n) roots.insert(pieces.find(n));
    int e = static_cast<int>(occ_.size());
    return faces == e - v + 2 * static_cast<int>(roots.size());
}

Path reversed(const Path& p) {
    Path r;
    r.closed = p.closed;
    for (auto it = p.steps.rbegin(); it != p.steps.rend(); ++it) {
        r.steps.push_back({it->arc, it->to, it->from});
    }
    return r;
}

namespace {

std::vector<std::array<ArcId, 4>> arcs_of(const std::vector<Crossing>& xs) {
    std::vector<std::array<ArcId, 4>> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(x.arcs);
    return out;
}

std::vector<std::array<ArcId, 4>> arcs_of(const std::vector<SlotRef>& ss) {
    std::vector<std::array<ArcId, 4>> out;
    out.reserve(ss.size());
    for (const auto& s : ss) out.push_back(s.endpoints);
    return out;
}

std::vector<std::array<ArcId, 4>> arcs_of(const std::vector<WorkNode>& ns) {
    std::vector<std::array<ArcId, 4>> out;
    out.reserve(ns.size());
    for (const auto& n : ns) out.push_back(n.arc);
    return out;
}

Flow& flow_at(Work& w, int crossing_count, Occ o) {
    return o.node < crossing_count ? w.crossings[o.node].flow[o.pos]
                                   : w.slots[o.node - crossing_count].flow[o.pos];
}

// The path as it runs in its reference direction.
Path reference_path(const Layout& l, const Path& p) {
    return l.reference_reversed(p) ? reversed(p) : p;
}

}  // namespace

Layout layout_of(const LinkDiagram& d) {
    return Layout(arcs_of(d.crossings()), arcs_of(d.slots()));
}

ArcId Work::max_label() const {
    ArcId m = 0;
    for (const auto& n : crossings) m = std::max(m, *std::max_element(n.arc.begin(), n.arc.end()));
    for (const auto& n : slots) m = std::max(m, *std::max_element(n.arc.begin(), n.arc.end()));
    return m;
}

void Work::relabel(const std::unordered_map<ArcId, ArcId>& to) {
    auto apply = [&](std::vector<WorkNode>& ns) {
        for (auto& n : ns) {
            for (auto& a : n.arc) {
                if (auto it = to.find(a); it != to.end()) a = it->second;
            }
        }
    };
    apply(crossings);
    apply(slots);
}

bool Work::has_occurrence(ArcId a) const {
    auto in = [a](const std::vector<WorkNode>& ns) {
        return std::any_of(ns.begin(), ns.end(), [a](const WorkNode& n) {
            return std::find(n.arc.begin(), n.arc.end(), a) != n.arc.end();
        });
    };
    return in(crossings) || in(slots);
}

Work to_work(const LinkDiagram& d) {
    Work w;
    for (const auto& x : d.crossings()) w.crossings.push_back({x.arcs, {}});
    for (const auto& s : d.slots()) w.slots.push_back({s.endpoints, {}});
    w.oriented = d.oriented();
    Layout l = layout_of(d);
    std::vector<Path> paths = l.trace();
    for (std::size_t i = 0; i < paths.size(); ++i) {
        Path p = reference_path(l, paths[i]);
        if (d.oriented() && d.orientation()[i] < 0) p = reversed(p);
        for (const Step& s : p.steps) {
            flow_at(w, l.crossing_count(), s.from) = Flow::out;
            flow_at(w, l.crossing_count(), s.to) = Flow::in;
        }
    }
    for (int k = 0; k < d.free_loops(); ++k) {
        w.loops.push_back(d.oriented() ? d.orientation()[paths.size() + k] : 1);
    }
    return w;
}

LinkDiagram finalize(Work w) {
    const int nc = static_cast<int>(w.crossings.size());
    {
        Layout l(arcs_of(w.crossings), arcs_of(w.slots));
        for (Path p : l.trace()) {
            bool forward_ok = true;
            bool backward_ok = true;
            for (const Step& s : p.steps) {
                Flow f = flow_at(w, nc, s.from);
                Flow t = flow_at(w, nc, s.to);
                forward_ok = forward_ok && f != Flow::in && t != Flow::out;
                backward_ok = backward_ok && f != Flow::out && t != Flow::in;
            }
            bool forward = true;
            if (!forward_ok && backward_ok) {
                forward = false;
            } else if (!forward_ok) {
                if (w.oriented) {
                    throw DomainError("orientation is inconsistent along arc " +
                                      std::to_string(p.steps.front().arc));
                }
                for (const Step& s : p.steps) {
                    Flow f = flow_at(w, nc, s.from);
                    if (f != Flow::unknown) {
                        forward = f == Flow::out;
                        break;
                    }
                }
            }
            if (!forward) p = reversed(p);
            for (const Step& s : p.steps) {
                flow_at(w, nc, s.from) = Flow::out;
                flow_at(w, nc, s.to) = Flow::in;
            }
        }
    }
    for (auto& x : w.crossings) {
        if (x.flow[0] == Flow::out) {
            std::rotate(x.arc.begin(), x.arc.begin() + 2, x.arc.end());
            std::rotate(x.flow.begin(), x.flow.begin() + 2, x.flow.end());
        }
    }
    std::unordered_map<ArcId, ArcId> renumber;
    auto number = [&](std::vector<WorkNode>& ns) {
        for (auto& n : ns) {
            for (auto& a : n.arc) {
                auto [it, fresh] = renumber.try_emplace(a, static_cast<ArcId>(renumber.size() + 1));
                a = it->second;
            }
        }
    };
    number(w.crossings);
    number(w.slots);

    std::vector<Crossing> crossings;
    for (const auto& n : w.crossings) crossings.push_back({n.arc});
    std::vector<SlotRef> slots;
    for (const auto& n : w.slots) slots.push_back({n.arc});
    const int loops = static_cast<int>(w.loops.size());
    if (!w.oriented) return LinkDiagram(std::move(crossings), std::move(slots), loops);

    Layout l(arcs_of(w.crossings), arcs_of(w.slots));
    std::vector<int> signs;
    for (const Path& p : l.trace()) {
        Path r = reference_path(l, p);
        signs.push_back(flow_at(w, nc, r.steps.front().from) == Flow::out ? 1 : -1);
    }
    signs.insert(signs.end(), w.loops.begin(), w.loops.end());
    return LinkDiagram(std::move(crossings), std::move(slots), loops, std::move(signs));
}

}  // namespace detail

using detail::Flow;
using detail::Work;
using detail::WorkNode;

LinkDiagram::LinkDiagram() = default;

LinkDiagram::LinkDiagram(std::vector<Crossing> crossings, std::vector<SlotRef> slots,
                         int free_loops, std::optional<std::vector<int>> orientation)
    : crossings_(std::move(crossings)),
      slots_(std::move(slots)),
      free_loops_(free_loops),
      orientation_(std::move(orientation)) {
    if (free_loops_ < 0) throw ParseError("negative free loop count");
    if (crossings_.empty() && slots_.empty() && free_loops_ == 0) {
        throw ParseError("empty diagram");
    }
    std::unordered_map<ArcId, int> count;
    std::unordered_set<ArcId> on_slot;
    for (const auto& x : crossings_) {
        for (ArcId a : x.arcs) ++count[a];
    }
    for (const auto& s : slots_) {
        for (ArcId a : s.endpoints) {
            ++count[a];
            on_slot.insert(a);
        }
    }
    for (const auto& [a, k] : count) {
        if (a <= 0) throw ParseError("arc labels must be positive, got " + std::to_string(a));
        if (k != 2) {
            if (k > 2 && on_slot.contains(a)) {
                throw ParseError("slot endpoint reuse: arc " + std::to_string(a));
            }
            throw ParseError("arc " + std::to_string(a) + " appears " + std::to_string(k) +
                             " times");
        }
    }
    detail::Layout l = detail::layout_of(*this);
    if (!l.planar()) throw ParseError("diagram is not planar");
    auto paths = l.trace();
    for (const auto& p : paths) l.reference_reversed(p);
    arc_count_ = count.size();
    path_count_ = paths.size() + static_cast<std::size_t>(free_loops_);
    if (orientation_) {
        if (orientation_->size() != path_count_) {
            throw ParseError("orientation lists " + std::to_string(orientation_->size()) +
                             " paths, diagram has " + std::to_string(path_count_));
        }
        for (int s : *orientation_) {
            if (s != 1 && s != -1) throw ParseError("orientation signs must be +1 or -1");
        }
    }
}

const std::vector<int>& LinkDiagram::orientation() const {
    if (!orientation_) throw DomainError("diagram is not oriented");
    return *orientation_;
}

LinkDiagram LinkDiagram::unoriented() const {
    LinkDiagram d = *this;
    d.orientation_.reset();
    return d;
}

LinkDiagram LinkDiagram::with_orientation(std::vector<int> signs) const {
    return LinkDiagram(crossings_, slots_, free_loops_, std::move(signs));
}

LinkDiagram with_default_orientation(const LinkDiagram& d) {
    return d.with_orientation(std::vector<int>(d.path_count(), 1));
}

int components(const LinkDiagram& d) {
    if (!d.slots().empty()) throw DomainError("diagram has unfilled slots");
    return static_cast<int>(d.path_count());
}

namespace {

void check_site(const LinkDiagram& d, CrossingSite site) {
    if (site.index >= d.crossings().size()) {
        throw DomainError("crossing " + std::to_string(site.index) + " out of range (diagram has " +
                          std::to_string(d.crossings().size()) + ")");
    }
}

// Remove crossing `index`, joining its positions in the two given pairs.
LinkDiagram smooth(Work w, std::size_t index, std::array<std::array<int, 2>, 2> pairs) {
    WorkNode x = w.crossings[index];
    w.crossings.erase(w.crossings.begin() + static_cast<std::ptrdiff_t>(index));
    UnionFind<ArcId> uf;
    for (const auto& pr : pairs) uf.unite(x.arc[pr[0]], x.arc[pr[1]]);
    std::unordered_map<ArcId, ArcId> to;
    for (ArcId a : x.arc) to[a] = uf.find(a);
    w.relabel(to);
    std::unordered_set<ArcId> roots;
    for (ArcId a : x.arc) roots.insert(uf.find(a));
    for (ArcId r : roots) {
        if (!w.has_occurrence(r)) w.loops.push_back(1);
    }
    return detail::finalize(std::move(w));
}

void rotate_one(WorkNode& n) {
    std::rotate(n.arc.begin(), n.arc.begin() + 1, n.arc.end());
    std::rotate(n.flow.begin(), n.flow.begin() + 1, n.flow.end());
}

}  // namespace

LinkDiagram resolve(const LinkDiagram& d, CrossingSite site, Smoothing which) {
    check_site(d, site);
    Work w = detail::to_work(d);
    w.oriented = false;
    // Zero is the A-smoothing of the Kauffman bracket on X[a,b,c,d]:
    // a joins d and b joins c.
    if (which == Smoothing::zero) return smooth(std::move(w), site.index, {{{0, 3}, {1, 2}}});
    return smooth(std::move(w), site.index, {{{0, 1}, {2, 3}}});
}

LinkDiagram crossing_change(const LinkDiagram& d, CrossingSite site) {
    check_site(d, site);
    Work w = detail::to_work(d);
    rotate_one(w.crossings[site.index]);
    return detail::finalize(std::move(w));
}

LinkDiagram mirror(const LinkDiagram& d) {
    Work w = detail::to_work(d);
    for (auto& x : w.crossings) rotate_one(x);
    return detail::finalize(std::move(w));
}

int crossing_sign(const LinkDiagram& d, CrossingSite site) {
    check_site(d, site);
    if (!d.oriented()) throw DomainError("crossing sign needs an oriented diagram");
    Work w = detail::to_work(d);
    const WorkNode& x = w.crossings[site.index];
    int over_in = x.flow[1] == Flow::in ? 1 : 3;
    if (x.flow[0] != Flow::in) over_in = (over_in + 2) % 4;
    return over_in == 3 ? 1 : -1;
}

LinkDiagram oriented_resolve(const LinkDiagram& d, CrossingSite site) {
    check_site(d, site);
    if (!d.oriented()) throw DomainError("oriented resolution needs an oriented diagram");
    Work w = detail::to_work(d);
    const WorkNode& x = w.crossings[site.index];
    int under_in = x.flow[0] == Flow::in ? 0 : 2;
    int over_in = x.flow[1] == Flow::in ? 1 : 3;
    int under_out = (under_in + 2) % 4;
    int over_out = (over_in + 2) % 4;
    return smooth(std::move(w), site.index, {{{under_in, over_out}, {over_in, under_out}}});
}

namespace {

void append(Work& into, Work from, ArcId offset) {
    for (auto* ns : {&from.crossings, &from.slots}) {
        for (auto& n : *ns) {
            for (auto& a : n.arc) a += offset;
        }
    }
    into.crossings.insert(into.crossings.end(), from.crossings.begin(), from.crossings.end());
    into.slots.insert(into.slots.end(), from.slots.begin(), from.slots.end());
    into.loops.insert(into.loops.end(), from.loops.begin(), from.loops.end());
    into.oriented = into.oriented && from.oriented;
}

LinkDiagram drop_loop(const LinkDiagram& d) {
    std::optional<std::vector<int>> signs;
    if (d.oriented()) {
        signs = d.orientation();
        signs->pop_back();
    }
    return LinkDiagram(d.crossings(), d.slots(), d.free_loops() - 1, std::move(signs));
}

bool has_arc(const LinkDiagram& d, ArcId a) {
    auto l = detail::layout_of(d);
    return l.arcs().contains(a);
}

}  // namespace

LinkDiagram disjoint_union(const LinkDiagram& d1, const LinkDiagram& d2) {
    Work w = detail::to_work(d1);
    append(w, detail::to_work(d2), w.max_label());
    return detail::finalize(std::move(w));
}

ArcId lowest_arc(const LinkDiagram& d) {
    auto l = detail::layout_of(d);
    ArcId best = 0;
    for (const auto& [a, occ] : l.arcs()) {
        if (best == 0 || a < best) best = a;
    }
    return best;
}

LinkDiagram connected_sum(const LinkDiagram& d1, ArcId a1, const LinkDiagram& d2, ArcId a2) {
    // A crossingless operand contributes a round circle: summing with it
    // just absorbs one of its loops.
    if (d2.arc_count() == 0) {
        return d2.free_loops() == 1 ? d1 : disjoint_union(d1, drop_loop(d2));
    }
    if (d1.arc_count() == 0) {
        return d1.free_loops() == 1 ? d2 : disjoint_union(d2, drop_loop(d1));
    }
    if (!has_arc(d1, a1)) throw DomainError("arc " + std::to_string(a1) + " is not in the first diagram");
    if (!has_arc(d2, a2)) throw DomainError("arc " + std::to_string(a2) + " is not in the second diagram");

    Work w = detail::to_work(d1);
    Work w2 = detail::to_work(d2);
    const ArcId offset = w.max_label();
    a2 += offset;
    append(w, std::move(w2), offset);

    // Find the tail and head end of both arcs and swap the heads.
    WorkNode* head1 = nullptr;
    int head1_pos = 0;
    WorkNode* head2 = nullptr;
    int head2_pos = 0;
    for (auto* ns : {&w.crossings, &w.slots}) {
        for (auto& n : *ns) {
            for (int pos = 0; pos < 4; ++pos) {
                if (n.flow[pos] != Flow::in) continue;
                if (n.arc[pos] == a1) {
                    head1 = &n;
                    head1_pos = pos;
                } else if (n.arc[pos] == a2) {
                    head2 = &n;
                    head2_pos = pos;
                }
            }
        }
    }
    head1->arc[head1_pos] = a2;
    head2->arc[head2_pos] = a1;
    return detail::finalize(std::move(w));
}

LinkDiagram splice(const LinkDiagram& t, std::size_t slot, const TangleWord& word) {
    if (slot >= t.slots().size()) {
        throw DomainError("slot " + std::to_string(slot) + " out of range (template has " +
                          std::to_string(t.slots().size()) + ")");
    }
    CompiledTangle ct = compile(word);
    if (t.oriented()) {
        const auto allowed = compatible_classes(t, slot);
        if (std::find(allowed.begin(), allowed.end(), traced_connectivity(ct)) == allowed.end()) {
            throw DomainError("tangle " + to_string(evaluate(word)) + " is not orientation-compatible with slot " +
                              std::to_string(slot));
        }
    }
    Work w = detail::to_work(t);
    const ArcId offset = w.max_label();
    WorkNode s = w.slots[slot];
    w.slots.erase(w.slots.begin() + static_cast<std::ptrdiff_t>(slot));

    UnionFind<ArcId> uf;
    for (int k = 0; k < 4; ++k) uf.unite(ct.boundary[k] + offset, s.arc[k]);
    for (const auto& x : ct.crossings) {
        WorkNode n;
        for (int k = 0; k < 4; ++k) n.arc[k] = x[k] + offset;
        w.crossings.push_back(n);
    }
    std::unordered_map<ArcId, ArcId> to;
    for (ArcId a : s.arc) to[a] = uf.find(a);
    for (ArcId a = 1; a <= ct.arc_count; ++a) to[a + offset] = uf.find(a + offset);
    w.relabel(to);
    std::unordered_set<ArcId> roots;
    for (const auto& [from, root] : to) roots.insert(root);
    std::vector<ArcId> ordered(roots.begin(), roots.end());
    std::sort(ordered.begin(), ordered.end());
    for (ArcId r : ordered) {
        if (!w.has_occurrence(r)) w.loops.push_back(1);
    }
    return detail::finalize(std::move(w));
}

LinkDiagram splice(const LinkDiagram& t, std::size_t slot, const TangleFraction& f) {
    return splice(t, slot, cf_to_word(fraction_to_cf(f)));
}

LinkDiagram slot_from_crossing(const LinkDiagram& d, CrossingSite site) {
    check_site(d, site);
    Work w = detail::to_work(d);
    WorkNode x = w.crossings[site.index];
    w.crossings.erase(w.crossings.begin() + static_cast<std::ptrdiff_t>(site.index));
    // The compiled 1/1 crossing reads SW, SE, NE, NW from position 0.
    static constexpr std::array<int, 4> from_pos{3, 2, 0, 1};
    WorkNode s;
    for (int k = 0; k < 4; ++k) {
        s.arc[k] = x.arc[from_pos[k]];
        s.flow[k] = x.flow[from_pos[k]];
    }
    w.slots.push_back(s);
    return detail::finalize(std::move(w));
}

}  // namespace detskein
