#include "detskein/skein.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "detskein/coloring.hpp"
#include "detskein/error.hpp"

namespace detskein {

bool is_farey_pair(const TangleFraction& x, const TangleFraction& y) {
    const __int128 d = static_cast<__int128>(x.p()) * y.q() - static_cast<__int128>(x.q()) * y.p();
    return d == 1 || d == -1;
}

FareyPair::FareyPair(TangleFraction first, TangleFraction second) : first_(first), second_(second) {
    if (!is_farey_pair(first_, second_)) {
        throw DomainError(to_string(first_) + " and " + to_string(second_) + " are not Farey neighbors");
    }
}

namespace {

// Inverse of a modulo m (m >= 2, gcd(a, m) = 1) in [0, m).
std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
    std::int64_t r0 = ((a % m) + m) % m, r1 = m;
    std::int64_t s0 = 1, s1 = 0;
    while (r1 != 0) {
        std::int64_t k = r0 / r1;
        std::tie(r0, r1) = std::pair{r1, r0 - k * r1};
        std::tie(s0, s1) = std::pair{s1, s0 - k * s1};
    }
    return ((s0 % m) + m) % m;
}

}  // namespace

TangleFraction farey_neighbor(const TangleFraction& f) {
    if (f.is_infinity()) return TangleFraction(0, 1);
    if (f.q() == 1) return TangleFraction::infinity();
    const std::int64_t p = f.p();
    const std::int64_t q = f.q();
    const std::int64_t up = inverse_mod(p, q);  // p*up = 1 (mod q)
    const std::int64_t down = q - up;           // p*down = -1 (mod q)
    if (up <= down) return TangleFraction((p * up - 1) / q, up);
    return TangleFraction((p * down + 1) / q, down);
}

TangleFraction mediant(const FareyPair& pair) {
    return TangleFraction(pair.first().p() + pair.second().p(), pair.first().q() + pair.second().q());
}

TangleFraction partner(const FareyPair& pair) {
    return TangleFraction(pair.first().p() - pair.second().p(), pair.first().q() - pair.second().q());
}

SkeinTriple unoriented_triple(const FareyPair& pair) {
    return {SkeinKind::unoriented, pair.first(), pair.second(), mediant(pair), std::nullopt, std::nullopt};
}

SkeinTriple oriented_triple(const FareyPair& pair, const LinkDiagram& t, std::size_t slot) {
    SkeinTriple out = unoriented_triple(pair);
    out.kind = SkeinKind::oriented;
    if (!orientation_compatible(t, slot, out.mediant)) {
        throw DomainError("mediant " + to_string(out.mediant) + " is not orientation-compatible");
    }
    out.partner = partner(pair);
    const bool first_ok = orientation_compatible(t, slot, pair.first());
    const bool second_ok = orientation_compatible(t, slot, pair.second());
    if (first_ok == second_ok) {
        throw std::logic_error("exactly one member of a Farey pair resolves an oriented mediant");
    }
    out.resolution = first_ok ? pair.first() : pair.second();
    return out;
}

BigInt model_determinant(const Coefficients& c, const TangleFraction& f) {
    BigInt v = c.b * f.p() - c.sign * c.a * f.q();
    return v < 0 ? BigInt(-v) : v;
}

std::string to_string(const Coefficients& c) {
    return "a=" + c.a.str() + " b=" + c.b.str() + " sign=" + (c.sign > 0 ? "+" : "-");
}

TangleTemplate::TangleTemplate(LinkDiagram diagram) : diagram_(std::move(diagram)) {
    if (diagram_.slots().empty()) throw DomainError("a template needs at least one slot");
    coeffs_.resize(diagram_.slots().size());
}

const std::optional<Coefficients>& TangleTemplate::coefficients(std::size_t slot) const {
    if (slot >= coeffs_.size()) throw DomainError("slot " + std::to_string(slot) + " out of range");
    return coeffs_[slot];
}

std::optional<TangleFraction> TangleTemplate::zero_locus(std::size_t slot) const {
    const auto& c = coefficients(slot);
    if (!c) return std::nullopt;
    return detskein::zero_locus(*c);
}

TangleTemplate TangleTemplate::with_coefficients(std::size_t slot, Coefficients c) const {
    TangleTemplate t = *this;
    if (slot >= t.coeffs_.size()) throw DomainError("slot " + std::to_string(slot) + " out of range");
    t.coeffs_[slot] = std::move(c);
    return t;
}

TangleTemplate closure_template() { return TangleTemplate(parse_pd("T[1,2,1,2]")); }

LinkDiagram splice(const TangleTemplate& t, std::size_t slot, const TangleWord& w) {
    return splice(t.diagram(), slot, w);
}

BigInt determinant_at(const TangleTemplate& t, std::size_t slot, const TangleFraction& f) {
    return determinant(splice(t.diagram().unoriented(), slot, f));
}

Coefficients fit_coefficients(const TangleTemplate& t, std::size_t slot) {
    if (t.slot_count() != 1) throw DomainError("fitting needs a template with exactly one slot");
    Coefficients c;
    c.a = determinant_at(t, slot, TangleFraction(0, 1));
    c.b = determinant_at(t, slot, TangleFraction::infinity());
    const BigInt at_one = determinant_at(t, slot, TangleFraction(1, 1));
    const BigInt diff = c.b > c.a ? BigInt(c.b - c.a) : BigInt(c.a - c.b);
    if (at_one == diff) {
        c.sign = 1;
    } else if (at_one == c.a + c.b) {
        c.sign = -1;
    } else {
        throw DomainError("template violates the linear determinant model at 1/1");
    }
    for (TangleFraction probe : {TangleFraction(1, 2), TangleFraction(2, 1), TangleFraction(1, 3)}) {
        if (determinant_at(t, slot, probe) != model_determinant(c, probe)) {
            throw DomainError("template violates the linear determinant model at " + to_string(probe));
        }
    }
    return c;
}

TangleTemplate fitted(const TangleTemplate& t, std::size_t slot) {
    return t.with_coefficients(slot, fit_coefficients(t, slot));
}

std::optional<TangleFraction> zero_locus(const Coefficients& c) {
    if (c.a == 0 && c.b == 0) throw DomainError("both coefficients are zero: every insertion is split");
    if (c.b == 0) return TangleFraction::infinity();
    const BigInt p = c.sign * c.a;
    return TangleFraction(p.convert_to<std::int64_t>(), c.b.convert_to<std::int64_t>());
}

std::optional<TangleFraction> zero_locus(const TangleTemplate& t, std::size_t slot) {
    return t.zero_locus(slot);
}

std::size_t ScanReport::max_count() const {
    std::size_t m = 0;
    for (const auto& r : rows) m = std::max(m, r.witnesses.size());
    return m;
}

std::vector<TangleFraction> fractions_in_box(std::int64_t bound) {
    std::vector<TangleFraction> out;
    if (bound <= 0) return out;
    out.push_back(TangleFraction::infinity());
    for (std::int64_t q = 1; q <= bound; ++q) {
        for (std::int64_t p = -bound; p <= bound; ++p) {
            if (std::gcd(p, q) == 1) out.emplace_back(p, q);
        }
    }
    return out;
}

ScanReport two_slot_scan(const TangleTemplate& t, std::size_t slot1, std::size_t slot2,
                         std::int64_t bound) {
    if (t.slot_count() != 2) throw DomainError("two-slot scan needs a template with exactly two slots");
    if (slot1 >= 2 || slot2 >= 2 || slot1 == slot2) throw DomainError("slots must be 0 and 1");
    const LinkDiagram base = t.diagram().unoriented();
    const std::size_t remaining = slot2 > slot1 ? slot2 - 1 : slot2;
    const auto box = fractions_in_box(bound);
    ScanReport report;
    for (const TangleFraction& x : box) {
        const LinkDiagram half = splice(base, slot1, x);
        ScanRow row{x, {}};
        for (const TangleFraction& y : box) {
            if (determinant(splice(half, remaining, y)) == 0) row.witnesses.push_back(y);
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace detskein
