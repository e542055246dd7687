#include "detskein/certify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "detskein/coloring.hpp"
#include "detskein/error.hpp"

namespace detskein {

const CertNode& Certificate::target() const {
    if (nodes.empty()) throw DomainError("certificate has no nodes");
    return nodes.back();
}

OrientationClass resolve_orientation(const OrientedTarget& t) {
    const OrientationConstraint forced = orientation_class(t.fraction);
    if (forced == OrientationConstraint::unconstrained) {
        return t.orientation == OrientationConstraint::antiparallel ? OrientationClass::antiparallel
                                                                    : OrientationClass::parallel;
    }
    if (t.orientation != OrientationConstraint::unconstrained && t.orientation != forced) {
        throw DomainError(to_string(t.fraction) + " is not orientation-compatible with the requested class");
    }
    return forced == OrientationConstraint::parallel ? OrientationClass::parallel
                                                     : OrientationClass::antiparallel;
}

namespace {

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

Ambient default_ambient() {
    TangleTemplate t = closure_template();
    return {to_pd(t.diagram()), fit_coefficients(t, 0)};
}

// Emits nodes parents-first, sharing every (fraction, tag) once.
class Builder {
public:
    explicit Builder(CertKind kind) {
        cert_.kind = kind;
        cert_.ambient = default_ambient();
    }

    std::size_t unoriented(const TangleFraction& f) {
        Key key{f, -1};
        if (auto it = index_.find(key); it != index_.end()) return it->second;
        if (f.is_infinity()) throw DomainError("1/0 is the zero locus of the ambient template");
        if (f.q() == 1) return emit(key, {f, std::nullopt, Justification::make_base("unknot")});
        // j/k with parents p/q and r/s where qj = -1 (mod k).
        const std::int64_t j = f.p();
        const std::int64_t k = f.q();
        const std::int64_t q = k - inverse_mod(j, k);
        const std::int64_t p = (q * j + 1) / k;
        const std::int64_t r = (j * (k - q) - 1) / k;
        const std::int64_t s = k - q;
        const FareyPair pair{TangleFraction(p, q), TangleFraction(r, s)};
        if (mediant(pair) != f) throw std::logic_error("span recursion lost the mediant");
        const std::size_t a = unoriented(pair.first());
        const std::size_t b = unoriented(pair.second());
        return emit(key, {f, std::nullopt, Justification::make_triple(a, b)});
    }

    std::size_t oriented(const TangleFraction& f, OrientationClass tag) {
        Key key{f, static_cast<int>(tag)};
        if (auto it = index_.find(key); it != index_.end()) return it->second;
        if (!class_allows(tag, connectivity(f))) {
            throw DomainError(to_string(f) + " is not compatible with " + to_string(tag) + " orientation");
        }
        if (f.is_infinity()) throw DomainError("1/0 is the zero locus of the ambient template");
        if (f.q() == 1) return emit(key, {f, tag, Justification::make_base("unknot")});
        if (f.q() == 2) return emit(key, {f, tag, Justification::make_base("hopf")});

        const FareyPair pair = oriented_parents(f, tag);
        const TangleFraction res = class_allows(tag, connectivity(pair.first())) ? pair.first() : pair.second();
        const TangleFraction other = res == pair.first() ? pair.second() : pair.first();
        if (class_allows(tag, connectivity(other))) {
            throw std::logic_error("both members of an oriented pair are compatible");
        }
        const std::size_t a = oriented(partner(pair), tag);
        const std::size_t b = oriented(res, tag);
        return emit(key, {f, tag, Justification::make_triple(a, b, b)});
    }

    Certificate finish() && { return std::move(cert_); }

private:
    using Key = std::pair<TangleFraction, int>;

    // Pair whose mediant is f; its crossing-change partner and compatible
    // member are the parents. Negative numerators mirror the positive case.
    static FareyPair oriented_parents(const TangleFraction& f, OrientationClass tag) {
        if (f.p() < 0) {
            FareyPair m = oriented_parents(-f, tag);
            return FareyPair(-m.first(), -m.second());
        }
        if (f.p() == 1) {
            const std::int64_t n = f.q();
            return FareyPair(TangleFraction(1, n - 1), TangleFraction(0, 1));
        }
        const std::int64_t k = f.p();
        const std::int64_t i = f.q() / k;
        const std::int64_t j = f.q() % k;
        const std::int64_t p = inverse_mod(j, k);
        const std::int64_t q = (p * k * i + p * j - 1) / k;
        const std::int64_t r = k - p;
        const std::int64_t s = (r * k * i + r * j + 1) / k;
        FareyPair pair{TangleFraction(p, q), TangleFraction(r, s)};
        if (mediant(pair) != f) throw std::logic_error("oriented recursion lost the mediant");
        (void)tag;
        return pair;
    }

    std::size_t emit(const Key& key, CertNode node) {
        cert_.nodes.push_back(std::move(node));
        index_.emplace(key, cert_.nodes.size() - 1);
        return cert_.nodes.size() - 1;
    }

    Certificate cert_;
    std::map<Key, std::size_t> index_;
};

}  // namespace

Certificate span_certificate(const TangleFraction& target) {
    Builder b(CertKind::unoriented);
    b.unoriented(target);
    return std::move(b).finish();
}

Certificate oriented_span_certificate(const OrientedTarget& target) {
    const OrientationClass tag = resolve_orientation(target);
    Builder b(CertKind::oriented);
    b.oriented(target.fraction, tag);
    return std::move(b).finish();
}

// ---------------------------------------------------------------------------
// Verification. Deliberately does its own arithmetic on plain integer
// vectors; nothing here goes through FareyPair, mediant or the generator.

namespace {

struct Vec {
    BigInt p;
    BigInt q;
};

Vec vec(const TangleFraction& f) { return {f.p(), f.q()}; }

BigInt cross(const Vec& u, const Vec& v) { return u.p * v.q - u.q * v.p; }

bool same_up_to_sign(const Vec& u, const Vec& v) {
    return (u.p == v.p && u.q == v.q) || (u.p == -v.p && u.q == -v.q);
}

bool unit(const BigInt& x) { return x == 1 || x == -1; }

// One of the three is +-(A +- B) for the other two, which are neighbors.
bool unoriented_identity(const Vec& x, const Vec& y, const Vec& z) {
    const Vec v[3] = {x, y, z};
    for (int t = 0; t < 3; ++t) {
        const Vec& a = v[(t + 1) % 3];
        const Vec& b = v[(t + 2) % 3];
        if (!unit(cross(a, b))) continue;
        for (int s : {1, -1}) {
            if (same_up_to_sign({a.p + s * b.p, a.q + s * b.q}, v[t])) return true;
        }
    }
    return false;
}

// m and x are the crossing-change pair, r their oriented resolution: with
// suitable signs m + x = 2r, and y = m - r completes r to a Farey pair.
std::optional<Vec> oriented_identity(const Vec& m, const Vec& x, const Vec& r) {
    for (int s1 : {1, -1}) {
        for (int s2 : {1, -1}) {
            if (s1 * m.p + s2 * x.p != 2 * r.p || s1 * m.q + s2 * x.q != 2 * r.q) continue;
            Vec y{s1 * m.p - r.p, s1 * m.q - r.q};
            if (unit(cross(r, y))) return y;
        }
    }
    return std::nullopt;
}

ConnectivityClass parity_class(const Vec& v) {
    const bool p_odd = boost::multiprecision::bit_test(v.p < 0 ? BigInt(-v.p) : v.p, 0);
    const bool q_odd = boost::multiprecision::bit_test(v.q < 0 ? BigInt(-v.q) : v.q, 0);
    if (!p_odd) return ConnectivityClass::ab_cd;
    if (!q_odd) return ConnectivityClass::ac_bd;
    return ConnectivityClass::ad_bc;
}

Verdict reject(int check, std::size_t node, std::string message) {
    return {false, check, node, std::move(message)};
}

}  // namespace

std::string to_string(const Verdict& v) {
    if (v.accepted) return "ACCEPT";
    return "REJECT check " + std::to_string(v.check) + " at node " + std::to_string(v.node) + ": " +
           v.message;
}

Verdict verify_certificate(const Certificate& c, const TangleTemplate& ambient) {
    if (ambient.slot_count() != 1) throw DomainError("ambient template must have one slot");
    const auto& coeffs = ambient.coefficients(0);
    if (!coeffs) throw DomainError("ambient template has no fitted coefficients");
    if (c.nodes.empty()) return reject(1, 0, "certificate has no nodes");

    const bool oriented = c.kind == CertKind::oriented;
    // Diagram-level compatibility: which classes each tag lets into the slot.
    std::map<OrientationClass, std::vector<ConnectivityClass>> allowed;
    if (oriented) {
        for (auto tag : {OrientationClass::parallel, OrientationClass::antiparallel}) {
            allowed[tag] = compatible_classes(orient_for(ambient.diagram(), 0, tag), 0);
        }
    }
    auto compatible = [&](OrientationClass tag, const Vec& v) {
        const auto& ks = allowed.at(tag);
        return std::find(ks.begin(), ks.end(), parity_class(v)) != ks.end();
    };
    auto nonzero = [&](const TangleFraction& f) { return model_determinant(*coeffs, f) != 0; };

    bool summand_ok = false;
    if (!c.summand.empty()) {
        const Verdict inner = verify_certificate(c.summand.front());
        summand_ok = inner.accepted;
        if (summand_ok) {
            const Certificate& s = c.summand.front();
            const LinkDiagram k2 = parse_pd(c.summand_pd);
            const LinkDiagram closed = splice(parse_pd(s.ambient.pd), 0, s.target().frac);
            summand_ok = determinant(k2) == determinant(closed) && components(k2) == components(closed);
        }
    }

    for (std::size_t m = 0; m < c.nodes.size(); ++m) {
        const CertNode& n = c.nodes[m];
        if (oriented != n.orient.has_value()) {
            return reject(4, m, oriented ? "missing orientation tag" : "orientation tag on an unoriented certificate");
        }
        if (n.just.is_base()) {
            if (!nonzero(n.frac)) return reject(3, m, "base " + to_string(n.frac) + " has determinant 0");
            if (oriented && !compatible(*n.orient, vec(n.frac))) {
                return reject(4, m, to_string(n.frac) + " is incompatible with " + to_string(*n.orient));
            }
            const std::string& name = *n.just.base;
            const bool ok = (name == "unknot" && n.frac.q() == 1 && c.summand.empty()) ||
                            (name == "hopf" && oriented && n.frac.q() == 2 && c.summand.empty()) ||
                            (name == "summand" && n.frac.q() == 1 && summand_ok);
            if (!ok) return reject(5, m, "base '" + name + "' is not allowed at " + to_string(n.frac));
            continue;
        }

        const std::size_t i = n.just.i;
        const std::size_t j = n.just.j;
        if (i >= m || j >= m) return reject(1, m, "triple refers to a node that is not earlier");
        const CertNode& a = c.nodes[i];
        const CertNode& b = c.nodes[j];
        std::optional<Vec> y;
        if (!oriented) {
            if (!unoriented_identity(vec(a.frac), vec(b.frac), vec(n.frac))) {
                return reject(2, m, "no Farey/mediant relation among " + to_string(a.frac) + ", " +
                                        to_string(b.frac) + ", " + to_string(n.frac));
            }
        } else {
            if (!n.just.resolution || (*n.just.resolution != i && *n.just.resolution != j)) {
                return reject(4, m, "oriented triple does not mark a resolution among its parents");
            }
            const CertNode& r = c.nodes[*n.just.resolution];
            const CertNode& x = *n.just.resolution == i ? b : a;
            y = oriented_identity(vec(n.frac), vec(x.frac), vec(r.frac));
            if (!y) {
                return reject(2, m, "no crossing-change relation among " + to_string(a.frac) + ", " +
                                        to_string(b.frac) + ", " + to_string(n.frac));
            }
        }
        for (const CertNode* member : {&a, &b, &n}) {
            if (!nonzero(member->frac)) {
                return reject(3, m, "member " + to_string(member->frac) + " has determinant 0");
            }
        }
        if (oriented) {
            if (a.orient != n.orient || b.orient != n.orient) {
                return reject(4, m, "triple members carry different orientation tags");
            }
            for (const CertNode* member : {&a, &b, &n}) {
                if (!compatible(*n.orient, vec(member->frac))) {
                    return reject(4, m, to_string(member->frac) + " is incompatible with " + to_string(*n.orient));
                }
            }
            if (compatible(*n.orient, *y)) {
                return reject(4, m, "marked resolution is not the unique compatible smoothing");
            }
        }
    }
    return {};
}

Verdict verify_certificate(const Certificate& c) {
    TangleTemplate t(parse_pd(c.ambient.pd).unoriented());
    const Coefficients refit = fit_coefficients(t, 0);
    if (!(refit == c.ambient.coeffs)) {
        return reject(3, 0, "recorded ambient coefficients (" + to_string(c.ambient.coeffs) +
                                ") differ from the refit (" + to_string(refit) + ")");
    }
    return verify_certificate(c, t.with_coefficients(0, refit));
}

Certificate connected_sum_certificate(const Certificate& c1, const Certificate& c2,
                                      const LinkDiagram& k2) {
    if (c1.kind != CertKind::unoriented) throw DomainError("connected-sum lifts apply to unoriented certificates");
    if (determinant(k2) == 0) throw DomainError("summand has determinant 0");
    for (const Certificate* c : {&c1, &c2}) {
        Verdict v = verify_certificate(*c);
        if (!v.accepted) throw DomainError("input certificate rejected: " + to_string(v));
    }
    const LinkDiagram ambient = parse_pd(c1.ambient.pd).unoriented();
    const LinkDiagram summand = k2.unoriented();
    const LinkDiagram lifted = connected_sum(ambient, lowest_arc(ambient), summand, lowest_arc(summand));
    TangleTemplate t(lifted);

    Certificate out;
    out.kind = CertKind::unoriented;
    out.ambient = {to_pd(lifted), fit_coefficients(t, 0)};
    out.nodes = c1.nodes;
    for (auto& n : out.nodes) {
        if (n.just.is_base()) n.just.base = "summand";
    }
    out.summand_pd = to_pd(summand);
    out.summand.push_back(c2);
    return out;
}

SkeinTriple component_reduction_step(const TangleTemplate& t, std::size_t slot,
                                     const TangleFraction& f, std::int64_t m_min) {
    const auto& coeffs = t.coefficients(slot);
    if (!coeffs) throw DomainError("template coefficients have not been fitted");
    const auto zero = zero_locus(*coeffs);
    if (zero && *zero == f) throw DomainError(to_string(f) + " is the zero locus of the template");
    const TangleFraction nb = farey_neighbor(f);
    auto companion = [&](std::int64_t m) {
        return TangleFraction(nb.p() + m * f.p(), nb.q() + m * f.q());
    };
    const bool oriented = t.diagram().oriented();
    // At most one fraction is excluded, so a short search always succeeds.
    for (std::int64_t m = m_min; m < m_min + 8; ++m) {
        const FareyPair pair(f, companion(m));
        if (!oriented) {
            SkeinTriple tr = unoriented_triple(pair);
            if (zero && (tr.second == *zero || tr.mediant == *zero)) continue;
            return tr;
        }
        if (!orientation_compatible(t.diagram(), slot, f) ||
            orientation_compatible(t.diagram(), slot, pair.second()) ||
            !orientation_compatible(t.diagram(), slot, mediant(pair))) {
            continue;
        }
        SkeinTriple tr = oriented_triple(pair, t.diagram(), slot);
        if (zero && (tr.mediant == *zero || *tr.partner == *zero)) continue;
        return tr;
    }
    throw DomainError("no companion pair avoids the zero locus near m = " + std::to_string(m_min));
}

}  // namespace detskein
