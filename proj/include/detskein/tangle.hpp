#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace detskein {

class LinkDiagram;

// Reduced element of Q ∪ {1/0}. The sign lives in the numerator, the
// denominator is never negative and infinity is stored as 1/0.
class TangleFraction {
public:
    TangleFraction() = default;  // 0/1
    TangleFraction(std::int64_t p, std::int64_t q);

    static TangleFraction infinity() { return TangleFraction(1, 0); }

    std::int64_t p() const noexcept { return p_; }
    std::int64_t q() const noexcept { return q_; }
    bool is_infinity() const noexcept { return q_ == 0; }
    TangleFraction operator-() const { return TangleFraction(-p_, q_); }

    friend bool operator==(const TangleFraction&, const TangleFraction&) = default;
    friend auto operator<=>(const TangleFraction&, const TangleFraction&) = default;

private:
    std::int64_t p_ = 0;
    std::int64_t q_ = 1;
};

TangleFraction parse_fraction(std::string_view text);
std::string to_string(const TangleFraction& f);

// A term of a continued fraction; nullopt stands for 1/0 and may only occupy
// the first position.
using CfTerm = std::optional<std::int64_t>;

// (a1, ..., an) = an + 1/(a(n-1) + 1/(... + 1/a1)), n odd.
class ContinuedFraction {
public:
    explicit ContinuedFraction(std::vector<CfTerm> terms);

    const std::vector<CfTerm>& terms() const noexcept { return terms_; }
    friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

private:
    std::vector<CfTerm> terms_;
};

ContinuedFraction parse_continued_fraction(std::string_view text);
std::string to_string(const ContinuedFraction& cf);

TangleFraction cf_to_fraction(const ContinuedFraction& cf);
ContinuedFraction fraction_to_cf(const TangleFraction& f);

enum class TwistAxis { horizontal, vertical };

struct Twist {
    TwistAxis axis;
    std::int64_t count;  // nonzero; the sign picks the crossing handedness
    friend bool operator==(const Twist&, const Twist&) = default;
};

// Starting trivial tangle plus alternating twist blocks. A horizontal start
// is [0] (NW-NE and SW-SE joined), a vertical start is 1/[0].
struct TangleWord {
    TwistAxis start = TwistAxis::horizontal;
    std::vector<Twist> ops;
    friend bool operator==(const TangleWord&, const TangleWord&) = default;
};

void validate(const TangleWord& w);
TangleWord cf_to_word(const ContinuedFraction& cf);
TangleFraction evaluate(const TangleWord& w);
std::int64_t crossing_count(const TangleWord& w);
std::string to_string(const TangleWord& w);

// Crossings of a compiled word, labelled 1..arc_count, together with the arcs
// ending on the boundary in NW, NE, SW, SE order.
struct CompiledTangle {
    std::vector<std::array<int, 4>> crossings;
    std::array<int, 4> boundary{};
    int arc_count = 0;
};

CompiledTangle compile(const TangleWord& w);

enum class ConnectivityClass { ab_cd, ac_bd, ad_bc };

ConnectivityClass connectivity(const TangleFraction& f);
ConnectivityClass traced_connectivity(const CompiledTangle& t);
std::string to_string(ConnectivityClass c);

enum class OrientationClass { parallel, antiparallel };
enum class OrientationConstraint { parallel, antiparallel, unconstrained };

OrientationConstraint orientation_class(const TangleFraction& f);
OrientationClass parse_orientation_class(std::string_view text);
std::string to_string(OrientationClass c);
bool class_allows(OrientationClass c, ConnectivityClass k);

// Slot endpoints a, b, c, d of an oriented template: true where the outside
// strand leaves the disk.
std::array<bool, 4> slot_exits(const LinkDiagram& oriented_template, std::size_t slot);

bool orientation_compatible(const LinkDiagram& oriented_template, std::size_t slot,
                            const TangleFraction& f);

// The two connectivity classes that can fill the slot of an oriented template.
std::vector<ConnectivityClass> compatible_classes(const LinkDiagram& oriented_template,
                                                  std::size_t slot);

// Orient a template so that endpoint a exits and the first endpoint not
// joined to a outside the slot (b unless the outside strand runs from a to b)
// exits (parallel) or enters (antiparallel). Other paths keep their reference
// direction.
LinkDiagram orient_for(const LinkDiagram& t, std::size_t slot, OrientationClass cls);

}  // namespace detskein
