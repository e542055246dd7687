#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "detskein/bigint.hpp"
#include "detskein/diagram.hpp"
#include "detskein/tangle.hpp"

namespace detskein {

class FareyPair {
public:
    FareyPair(TangleFraction first, TangleFraction second);  // |ad - bc| must be 1

    const TangleFraction& first() const noexcept { return first_; }
    const TangleFraction& second() const noexcept { return second_; }

private:
    TangleFraction first_;
    TangleFraction second_;
};

bool is_farey_pair(const TangleFraction& x, const TangleFraction& y);
TangleFraction farey_neighbor(const TangleFraction& f);
TangleFraction mediant(const FareyPair& pair);
TangleFraction partner(const FareyPair& pair);  // (a-c)/(b-d)

enum class SkeinKind { unoriented, oriented };

// Unoriented: first, second and their mediant. Oriented additionally names
// the crossing-change partner of the mediant and the member of the pair that
// is the orientation-consistent resolution.
struct SkeinTriple {
    SkeinKind kind = SkeinKind::unoriented;
    TangleFraction first;
    TangleFraction second;
    TangleFraction mediant;
    std::optional<TangleFraction> partner;
    std::optional<TangleFraction> resolution;
};

SkeinTriple unoriented_triple(const FareyPair& pair);
SkeinTriple oriented_triple(const FareyPair& pair, const LinkDiagram& oriented_template,
                            std::size_t slot);

// det(L(p/q)) = |b*p - sign*a*q| with a, b >= 0.
struct Coefficients {
    BigInt a;
    BigInt b;
    int sign = 1;
    friend bool operator==(const Coefficients&, const Coefficients&) = default;
};

BigInt model_determinant(const Coefficients& c, const TangleFraction& f);
std::string to_string(const Coefficients& c);

class TangleTemplate {
public:
    explicit TangleTemplate(LinkDiagram diagram);

    const LinkDiagram& diagram() const noexcept { return diagram_; }
    std::size_t slot_count() const noexcept { return diagram_.slots().size(); }
    const std::optional<Coefficients>& coefficients(std::size_t slot) const;
    std::optional<TangleFraction> zero_locus(std::size_t slot) const;

    TangleTemplate with_coefficients(std::size_t slot, Coefficients c) const;

private:
    LinkDiagram diagram_;
    std::vector<std::optional<Coefficients>> coeffs_;
};

// Two outside arcs joining a to c and b to d; L(p/q) has determinant |q|.
TangleTemplate closure_template();

LinkDiagram splice(const TangleTemplate& t, std::size_t slot, const TangleWord& w);
BigInt determinant_at(const TangleTemplate& t, std::size_t slot, const TangleFraction& f);

Coefficients fit_coefficients(const TangleTemplate& t, std::size_t slot);
TangleTemplate fitted(const TangleTemplate& t, std::size_t slot);

// The zero of |b*p - sign*a*q|; nullopt only when the coefficients have not
// been fitted.
std::optional<TangleFraction> zero_locus(const Coefficients& c);
std::optional<TangleFraction> zero_locus(const TangleTemplate& t, std::size_t slot);

struct ScanRow {
    TangleFraction x;
    std::vector<TangleFraction> witnesses;  // y with det(L(x, y)) = 0
};

struct ScanReport {
    std::vector<ScanRow> rows;
    std::size_t max_count() const;
};

// Reduced fractions p/q with |p| <= bound, 0 <= q <= bound, sorted by (q, p).
std::vector<TangleFraction> fractions_in_box(std::int64_t bound);

ScanReport two_slot_scan(const TangleTemplate& t, std::size_t slot1, std::size_t slot2,
                         std::int64_t bound);

}  // namespace detskein
