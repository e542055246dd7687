#include "detskein/tangle.hpp"

#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "detskein/diagram.hpp"
#include "detskein/error.hpp"
#include "diagram_internal.hpp"

namespace detskein {

TangleFraction::TangleFraction(std::int64_t p, std::int64_t q) {
    if (p == 0 && q == 0) throw DomainError("0/0 is not a tangle fraction");
    std::int64_t g = std::gcd(p, q);
    p /= g;
    q /= g;
    if (q < 0) {
        p = -p;
        q = -q;
    }
    if (q == 0) p = 1;
    p_ = p;
    q_ = q;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
    return s;
}

std::int64_t parse_int(std::string_view s, std::string_view what) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError("malformed " + std::string(what) + ": '" + std::string(s) + "'");
    }
    return v;
}

bool is_infinity_token(std::string_view s) {
    return s == "inf" || s == "oo" || s == "∞" || s == "1/0";
}

}  // namespace

TangleFraction parse_fraction(std::string_view text) {
    text = trim(text);
    if (is_infinity_token(text)) return TangleFraction::infinity();
    auto slash = text.find('/');
    std::int64_t p = parse_int(text.substr(0, slash), "fraction");
    std::int64_t q = slash == std::string_view::npos ? 1 : parse_int(text.substr(slash + 1), "fraction");
    try {
        return TangleFraction(p, q);
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

std::string to_string(const TangleFraction& f) {
    return std::to_string(f.p()) + "/" + std::to_string(f.q());
}

ContinuedFraction::ContinuedFraction(std::vector<CfTerm> terms) : terms_(std::move(terms)) {
    const std::size_t n = terms_.size();
    if (n % 2 == 0) throw DomainError("continued fraction must have odd length");
    for (std::size_t i = 1; i < n; ++i) {
        if (!terms_[i]) throw DomainError("1/0 may only appear as the first term");
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (*terms_[i] == 0) throw DomainError("interior continued-fraction terms must be nonzero");
    }
    if (n >= 3 && terms_[0] && *terms_[0] == 0) {
        throw DomainError("first term must be nonzero or 1/0");
    }
}

ContinuedFraction parse_continued_fraction(std::string_view text) {
    text = trim(text);
    if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
        throw ParseError("continued fraction must look like (a1,...,an)");
    }
    text = text.substr(1, text.size() - 2);
    std::vector<CfTerm> terms;
    while (true) {
        auto comma = text.find(',');
        std::string_view tok = trim(text.substr(0, comma));
        if (is_infinity_token(tok)) {
            terms.emplace_back(std::nullopt);
        } else {
            terms.emplace_back(parse_int(tok, "continued-fraction term"));
        }
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    try {
        return ContinuedFraction(std::move(terms));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

std::string to_string(const ContinuedFraction& cf) {
    std::string out = "(";
    for (std::size_t i = 0; i < cf.terms().size(); ++i) {
        if (i) out += ",";
        out += cf.terms()[i] ? std::to_string(*cf.terms()[i]) : "inf";
    }
    return out + ")";
}

// The 2x2 matrix product: odd positions add a multiple of q to p
// (horizontal twists), even positions add a multiple of p to q (vertical).
TangleFraction cf_to_fraction(const ContinuedFraction& cf) {
    const auto& a = cf.terms();
    std::int64_t p = a[0] ? *a[0] : 1;
    std::int64_t q = a[0] ? 1 : 0;
    for (std::size_t i = 1; i < a.size(); ++i) {
        if (i % 2 == 1) {
            q += *a[i] * p;
        } else {
            p += *a[i] * q;
        }
    }
    return TangleFraction(p, q);
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t d = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --d;
    return d;
}

}  // namespace

ContinuedFraction fraction_to_cf(const TangleFraction& f) {
    if (f.is_infinity()) return ContinuedFraction({std::nullopt});
    std::vector<std::int64_t> quotients;  // c0; c1, ..., cm
    std::int64_t p = f.p();
    std::int64_t q = f.q();
    while (q != 0) {
        std::int64_t c = floor_div(p, q);
        quotients.push_back(c);
        std::int64_t r = p - c * q;
        p = q;
        q = r;
    }
    std::vector<CfTerm> terms;
    if (quotients.size() % 2 == 0) terms.emplace_back(std::nullopt);
    for (auto it = quotients.rbegin(); it != quotients.rend(); ++it) terms.emplace_back(*it);
    return ContinuedFraction(std::move(terms));
}

void validate(const TangleWord& w) {
    for (std::size_t i = 0; i < w.ops.size(); ++i) {
        if (w.ops[i].count == 0) throw DomainError("twist blocks must be nonzero");
        if (i > 0 && w.ops[i].axis == w.ops[i - 1].axis) {
            throw DomainError("twist blocks must alternate between horizontal and vertical");
        }
    }
}

TangleWord cf_to_word(const ContinuedFraction& cf) {
    TangleWord w;
    const auto& a = cf.terms();
    w.start = a[0] ? TwistAxis::horizontal : TwistAxis::vertical;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i] || *a[i] == 0) continue;
        w.ops.push_back({i % 2 == 0 ? TwistAxis::horizontal : TwistAxis::vertical, *a[i]});
    }
    return w;
}

TangleFraction evaluate(const TangleWord& w) {
    validate(w);
    std::int64_t p = w.start == TwistAxis::horizontal ? 0 : 1;
    std::int64_t q = w.start == TwistAxis::horizontal ? 1 : 0;
    for (const Twist& t : w.ops) {
        if (t.axis == TwistAxis::horizontal) {
            p += t.count * q;
        } else {
            q += t.count * p;
        }
    }
    return TangleFraction(p, q);
}

std::int64_t crossing_count(const TangleWord& w) {
    std::int64_t n = 0;
    for (const Twist& t : w.ops) n += std::llabs(t.count);
    return n;
}

std::string to_string(const TangleWord& w) {
    std::string out = w.start == TwistAxis::horizontal ? "[0]" : "1/[0]";
    for (const Twist& t : w.ops) {
        out += t.axis == TwistAxis::horizontal ? " H" : " V";
        out += std::to_string(t.count);
    }
    return out;
}

// Geometry: a horizontal twist adds a crossing to the right of the current
// tangle (its NW, SW corners take the old NE, SE arcs), a vertical twist adds
// one below (its NW, NE corners take the old SW, SE arcs). A positive twist
// puts the over-strand on the NW-SE diagonal.
CompiledTangle compile(const TangleWord& w) {
    validate(w);
    CompiledTangle t;
    int next = 0;
    auto fresh = [&next] { return ++next; };
    int nw, ne, sw, se;
    if (w.start == TwistAxis::horizontal) {
        nw = ne = fresh();
        sw = se = fresh();
    } else {
        nw = sw = fresh();
        ne = se = fresh();
    }
    for (const Twist& tw : w.ops) {
        const std::int64_t n = std::llabs(tw.count);
        for (std::int64_t k = 0; k < n; ++k) {
            int c_nw, c_ne, c_sw, c_se;
            if (tw.axis == TwistAxis::horizontal) {
                c_nw = ne;
                c_sw = se;
                c_ne = ne = fresh();
                c_se = se = fresh();
            } else {
                c_nw = sw;
                c_ne = se;
                c_sw = sw = fresh();
                c_se = se = fresh();
            }
            if (tw.count > 0) {
                t.crossings.push_back({c_sw, c_se, c_ne, c_nw});
            } else {
                t.crossings.push_back({c_nw, c_sw, c_se, c_ne});
            }
        }
    }
    t.boundary = {nw, ne, sw, se};
    t.arc_count = next;
    return t;
}

ConnectivityClass connectivity(const TangleFraction& f) {
    const bool p_odd = f.p() % 2 != 0;
    const bool q_odd = f.q() % 2 != 0;
    if (!p_odd) return ConnectivityClass::ab_cd;
    if (!q_odd) return ConnectivityClass::ac_bd;
    return ConnectivityClass::ad_bc;
}

ConnectivityClass traced_connectivity(const CompiledTangle& t) {
    // Occurrences: crossings are nodes 0..n-1, the frame is node n.
    const int frame = static_cast<int>(t.crossings.size());
    std::unordered_map<int, std::vector<std::pair<int, int>>> occ;
    for (int c = 0; c < frame; ++c) {
        for (int pos = 0; pos < 4; ++pos) occ[t.crossings[c][pos]].push_back({c, pos});
    }
    for (int pos = 0; pos < 4; ++pos) occ[t.boundary[pos]].push_back({frame, pos});
    std::pair<int, int> at{frame, 0};
    for (;;) {
        const int arc = at.first == frame ? t.boundary[at.second] : t.crossings[at.first][at.second];
        const auto& ends = occ.at(arc);
        auto to = ends[0] == at ? ends[1] : ends[0];
        if (to.first == frame) {
            switch (to.second) {
                case 1: return ConnectivityClass::ab_cd;
                case 2: return ConnectivityClass::ac_bd;
                case 3: return ConnectivityClass::ad_bc;
                default: throw std::logic_error("tangle strand returns to its start");
            }
        }
        at = {to.first, (to.second + 2) % 4};
    }
}

std::string to_string(ConnectivityClass c) {
    switch (c) {
        case ConnectivityClass::ab_cd: return "AB|CD";
        case ConnectivityClass::ac_bd: return "AC|BD";
        case ConnectivityClass::ad_bc: return "AD|BC";
    }
    return "?";
}

OrientationConstraint orientation_class(const TangleFraction& f) {
    if (f.q() % 2 == 0) return OrientationConstraint::unconstrained;
    return f.p() % 2 == 0 ? OrientationConstraint::antiparallel : OrientationConstraint::parallel;
}

OrientationClass parse_orientation_class(std::string_view text) {
    if (text == "parallel") return OrientationClass::parallel;
    if (text == "antiparallel") return OrientationClass::antiparallel;
    throw ParseError("orientation class must be parallel or antiparallel, got '" +
                     std::string(text) + "'");
}

std::string to_string(OrientationClass c) {
    return c == OrientationClass::parallel ? "parallel" : "antiparallel";
}

bool class_allows(OrientationClass c, ConnectivityClass k) {
    if (c == OrientationClass::parallel) return k != ConnectivityClass::ab_cd;
    return k != ConnectivityClass::ad_bc;
}

std::array<bool, 4> slot_exits(const LinkDiagram& t, std::size_t slot) {
    if (!t.oriented()) throw DomainError("template is not oriented");
    if (slot >= t.slots().size()) throw DomainError("slot " + std::to_string(slot) + " out of range");
    detail::Work w = detail::to_work(t);
    std::array<bool, 4> exits{};
    for (int k = 0; k < 4; ++k) exits[k] = w.slots[slot].flow[k] == detail::Flow::out;
    return exits;
}

namespace {

constexpr std::array<std::array<std::array<int, 2>, 2>, 3> kPairs{{
    {{{0, 1}, {2, 3}}},
    {{{0, 2}, {1, 3}}},
    {{{0, 3}, {1, 2}}},
}};

bool pairs_match(const std::array<bool, 4>& exits, ConnectivityClass c) {
    for (const auto& pr : kPairs[static_cast<int>(c)]) {
        if (exits[pr[0]] == exits[pr[1]]) return false;
    }
    return true;
}

}  // namespace

bool orientation_compatible(const LinkDiagram& t, std::size_t slot, const TangleFraction& f) {
    return pairs_match(slot_exits(t, slot), connectivity(f));
}

std::vector<ConnectivityClass> compatible_classes(const LinkDiagram& t, std::size_t slot) {
    auto exits = slot_exits(t, slot);
    std::vector<ConnectivityClass> out;
    for (auto c : {ConnectivityClass::ab_cd, ConnectivityClass::ac_bd, ConnectivityClass::ad_bc}) {
        if (pairs_match(exits, c)) out.push_back(c);
    }
    return out;
}

LinkDiagram orient_for(const LinkDiagram& t, std::size_t slot, OrientationClass cls) {
    if (slot >= t.slots().size()) throw DomainError("slot " + std::to_string(slot) + " out of range");
    LinkDiagram base = with_default_orientation(t.unoriented());
    detail::Layout l = detail::layout_of(base);
    auto paths = l.trace();
    const detail::Occ a{static_cast<int>(t.crossings().size() + slot), 0};
    auto path_of = [&](detail::Occ o) {
        for (std::size_t i = 0; i < paths.size(); ++i) {
            for (const auto& s : paths[i].steps) {
                if (s.from == o || s.to == o) return i;
            }
        }
        throw std::logic_error("slot endpoint on no path");
    };
    const std::size_t pa = path_of(a);
    int second = 1;
    while (path_of({a.node, second}) == pa) ++second;
    const std::size_t pb = path_of({a.node, second});
    auto exits = slot_exits(base, slot);
    std::vector<int> signs = base.orientation();
    signs[pa] = exits[0] ? 1 : -1;
    const bool want_exit = cls == OrientationClass::parallel;
    signs[pb] = exits[second] == want_exit ? 1 : -1;
    return base.with_orientation(std::move(signs));
}

}  // namespace detskein
