#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "detskein/diagram.hpp"
#include "detskein/skein.hpp"
#include "detskein/tangle.hpp"

namespace detskein {

enum class CertKind { unoriented, oriented };

struct Justification {
    std::optional<std::string> base;  // set for BASE(name)
    std::size_t i = 0;                 // TRIPLE(i, j) otherwise
    std::size_t j = 0;
    std::optional<std::size_t> resolution;  // oriented triples: i or j

    static Justification make_base(std::string name) { return {std::move(name), 0, 0, std::nullopt}; }
    static Justification make_triple(std::size_t i, std::size_t j,
                                     std::optional<std::size_t> resolution = std::nullopt) {
        return {std::nullopt, i, j, resolution};
    }
    bool is_base() const noexcept { return base.has_value(); }
};

struct CertNode {
    TangleFraction frac;
    std::optional<OrientationClass> orient;
    Justification just;
};

struct Ambient {
    std::string pd;
    Coefficients coeffs;
};

struct Certificate {
    CertKind kind = CertKind::unoriented;
    Ambient ambient;
    std::vector<CertNode> nodes;  // the last node is the target
    // Present on connected-sum lifts: the summand diagram and a certificate
    // for it. Lifted bases are named "summand".
    std::string summand_pd;
    std::vector<Certificate> summand;

    const CertNode& target() const;
};

struct OrientedTarget {
    TangleFraction fraction;
    OrientationConstraint orientation = OrientationConstraint::unconstrained;
};

// The tag a target is certified under: forced by parity when q is odd,
// otherwise the requested one (parallel when unconstrained).
OrientationClass resolve_orientation(const OrientedTarget& t);

Certificate span_certificate(const TangleFraction& target);
Certificate oriented_span_certificate(const OrientedTarget& target);

struct Verdict {
    bool accepted = true;
    int check = 0;  // 1 DAG order, 2 triple identity, 3 nonzero determinant,
                    // 4 orientation, 5 base set
    std::size_t node = 0;
    std::string message;
};

std::string to_string(const Verdict& v);

Verdict verify_certificate(const Certificate& c, const TangleTemplate& ambient);
// Rebuilds and refits the ambient from the recorded PD before verifying.
Verdict verify_certificate(const Certificate& c);

Certificate connected_sum_certificate(const Certificate& c1, const Certificate& c2,
                                      const LinkDiagram& k2);

// The triple (f, companion, companion') used to merge components: for an
// unoriented template f, (p'+mp)/(q'+mq), (p'+(m+1)p)/(q'+(m+1)q); for an
// oriented one the pair (f, (p'+mp)/(q'+mq)) with f as the resolution. m is
// the least value >= m_min whose members avoid the zero locus (and, when
// oriented, make the mediant compatible).
SkeinTriple component_reduction_step(const TangleTemplate& t, std::size_t slot,
                                     const TangleFraction& f, std::int64_t m_min = 0);

std::string to_json(const Certificate& c);
Certificate certificate_from_json(std::string_view text);

}  // namespace detskein
