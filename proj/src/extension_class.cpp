#include "cubex/extension_class.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "cubex/errors.hpp"

namespace cubex {

std::string ExtensionClass::name() const {
    switch (kind) {
        case ClassKind::Surjections: return "surjections";
        case ClassKind::SplitEpis: return "split-epis";
        case ClassKind::Isomorphisms: return "isomorphisms";
        case ClassKind::AllMorphisms: return "all-morphisms";
        case ClassKind::SetSplit: return "set-split";
    }
    return "?";
}

ExtensionClass ExtensionClass::parse(const std::string& name) {
    if (name == "surjections") return {ClassKind::Surjections};
    if (name == "split-epis") return {ClassKind::SplitEpis};
    if (name == "isomorphisms") return {ClassKind::Isomorphisms};
    if (name == "all" || name == "all-morphisms") return {ClassKind::AllMorphisms};
    if (name == "set-split") return {ClassKind::SetSplit};
    throw validation_error("unknown extension class '" + name + "'");
}

bool member(const ExtensionClass& E, const FinMorphism& f) {
    switch (E.kind) {
        case ClassKind::Surjections: return is_surjective(f);
        case ClassKind::SplitEpis: return find_section(f).has_value();
        case ClassKind::Isomorphisms: return is_iso(f);
        case ClassKind::AllMorphisms: return true;
        case ClassKind::SetSplit: return find_section(f, true).has_value();
    }
    return false;
}

SquareArrow::SquareArrow(FinMorphism a_, FinMorphism b_, FinMorphism f1_, FinMorphism f0_)
    : a(std::move(a_)), b(std::move(b_)), f1(std::move(f1_)), f0(std::move(f0_)) {
    if (!(f1.dom() == a.dom()) || !(f1.cod() == b.dom()) || !(f0.dom() == a.cod()) ||
        !(f0.cod() == b.cod()))
        throw validation_error("square: endpoints do not match");
    if (!(compose(f0, a) == compose(b, f1)))
        throw validation_error("square does not commute: f0 o a != b o f1");
}

SquareArrow SquareArrow::unchecked(FinMorphism a, FinMorphism b, FinMorphism f1,
                                   FinMorphism f0) {
    SquareArrow s;
    s.a = std::move(a);
    s.b = std::move(b);
    s.f1 = std::move(f1);
    s.f0 = std::move(f0);
    return s;
}

SquareArrow transpose(const SquareArrow& s) {
    return SquareArrow::unchecked(s.f1, s.f0, s.a, s.b);
}

bool is_double_extension(const ExtensionClass& E, const SquareArrow& s, const Caps& caps) {
    if (!member(E, s.a) || !member(E, s.b) || !member(E, s.f1) || !member(E, s.f0))
        return false;
    Cone pb = compute_pullback(s.b, s.f0, caps); // legs: p0 -> dom b, p1 -> dom f0
    auto cmp = mediate(pb, {&s.f1, &s.a});
    return cmp && member(E, *cmp);
}

SquareArrow compose_squares(const SquareArrow& f, const SquareArrow& g) {
    if (!(g.b == f.a))
        throw validation_error("square composition: cod(g) != dom(f)");
    return SquareArrow(g.a, f.b, compose(f.f1, g.f1), compose(f.f0, g.f0));
}

SquareArrow identity_square(const FinMorphism& x) {
    return SquareArrow(x, x, identity(x.dom()), identity(x.cod()));
}

bool is_iso_square(const SquareArrow& s) { return is_iso(s.f1) && is_iso(s.f0); }

std::vector<FinMorphism> all_sections(const FinMorphism& f) {
    std::vector<FinMorphism> out;
    const std::size_t n = f.cod().size();
    std::vector<std::vector<int>> fibres(n);
    for (std::size_t i = 0; i < f.dom().size(); ++i)
        fibres[static_cast<std::size_t>(f(static_cast<int>(i)))].push_back(
            static_cast<int>(i));
    for (const auto& fib : fibres)
        if (fib.empty()) return out;

    std::vector<std::size_t> choice(n, 0);
    while (true) {
        std::vector<int> t(n);
        for (std::size_t i = 0; i < n; ++i) t[i] = fibres[i][choice[i]];
        if (is_homomorphism(f.cod(), f.dom(), t))
            out.emplace_back(f.cod(), f.dom(), t);
        if (n == 0) break;
        std::size_t k = n;
        bool rolled = true;
        while (k > 0) {
            --k;
            if (++choice[k] < fibres[k].size()) {
                rolled = false;
                break;
            }
            choice[k] = 0;
        }
        if (rolled) break;
    }
    return out;
}

std::vector<SquareArrow> all_sections_square(const SquareArrow& s) {
    std::vector<SquareArrow> out;
    const auto s1s = all_sections(s.f1);
    const auto s0s = all_sections(s.f0);
    for (const auto& s1 : s1s)
        for (const auto& s0 : s0s)
            if (compose(s.a, s1) == compose(s0, s.b))
                out.push_back(SquareArrow(s.b, s.a, s1, s0));
    return out;
}

bool has_double_split_structure(const SquareArrow& s) {
    const auto horizontal = all_sections_square(s);
    if (horizontal.empty()) return false;
    const auto vertical = all_sections_square(transpose(s));
    for (const auto& h : horizontal)       // h.f1 = s1 : B1 -> A1, h.f0 = s0 : B0 -> A0
        for (const auto& v : vertical)     // v.f1 = sa : A0 -> A1, v.f0 = sb : B0 -> B1
            if (compose(v.f1, h.f0) == compose(h.f1, v.f0)) return true;
    return false;
}

SquarePullback pullback_squares(const SquareArrow& f, const SquareArrow& g,
                                const Caps& caps) {
    if (!(f.b == g.b))
        throw validation_error("square pullback: codomain arrows differ");
    SquarePullback pb;
    pb.top = compute_pullback(f.f1, g.f1, caps);
    pb.bottom = compute_pullback(f.f0, g.f0, caps);
    const FinMorphism t0 = compose(f.a, pb.top.leg("p0"));
    const FinMorphism t1 = compose(g.a, pb.top.leg("p1"));
    auto vert = mediate(pb.bottom, {&t0, &t1});
    if (!vert)
        throw validation_error("square pullback: vertical fails to factor");
    pb.vertex = *vert;
    pb.to_f = SquareArrow(pb.vertex, f.a, pb.top.leg("p0"), pb.bottom.leg("p0"));
    pb.to_g = SquareArrow(pb.vertex, g.a, pb.top.leg("p1"), pb.bottom.leg("p1"));
    return pb;
}

std::optional<SquareArrow> mediate_squares(const SquarePullback& pb,
                                           const SquareArrow& u, const SquareArrow& v) {
    auto m1 = mediate(pb.top, {&u.f1, &v.f1});
    auto m0 = mediate(pb.bottom, {&u.f0, &v.f0});
    if (!m1 || !m0) return std::nullopt;
    return SquareArrow(u.a, pb.vertex, *m1, *m0);
}

// ---- generic audit ---------------------------------------------------------

namespace {

// The two instantiations of the audit: base morphisms and squares.
struct BaseCat {
    using Obj = FinObject;
    using Mor = FinMorphism;
    ExtensionClass cls;
    Caps caps;

    bool member(const Mor& m) const { return cubex::member(cls, m); }
    static const Obj& dom(const Mor& m) { return m.dom(); }
    static const Obj& cod(const Mor& m) { return m.cod(); }
    static Mor compose(const Mor& f, const Mor& g) { return cubex::compose(f, g); }
    static bool is_iso(const Mor& m) { return cubex::is_iso(m); }
    static std::vector<Mor> sections(const Mor& m) { return all_sections(m); }
    std::string describe(const Mor& m) const { return cubex::describe(m); }
    std::string key(const Mor& m) const { return cubex::canonical_key(m); }
    // f o g == u o v, element-wise, no morphism construction
    static bool compose_equal(const Mor& f, const Mor& g, const Mor& u, const Mor& v) {
        const std::size_t n = g.dom().size();
        for (std::size_t x = 0; x < n; ++x)
            if (f(g(static_cast<int>(x))) != u(v(static_cast<int>(x)))) return false;
        return true;
    }
    // m == f o g, element-wise
    static bool is_composite(const Mor& m, const Mor& f, const Mor& g) {
        const std::size_t n = g.dom().size();
        if (m.table().size() != n) return false;
        for (std::size_t x = 0; x < n; ++x)
            if (m(static_cast<int>(x)) != f(g(static_cast<int>(x)))) return false;
        return true;
    }

    struct Pullback {
        Mor leg_f; // towards dom f
        Mor leg_g; // towards dom g
        std::function<std::optional<Mor>(const Mor&, const Mor&)> mediate;
    };
    Pullback pullback(const Mor& f, const Mor& g) const {
        auto cone = std::make_shared<Cone>(compute_pullback(f, g, caps));
        Pullback pb;
        pb.leg_f = cone->leg("p0");
        pb.leg_g = cone->leg("p1");
        pb.mediate = [cone](const Mor& u, const Mor& v) {
            return cubex::mediate(*cone, {&u, &v});
        };
        return pb;
    }
};

struct SquareCat {
    using Obj = FinMorphism;
    using Mor = SquareArrow;
    ExtensionClass cls;
    Caps caps;

    bool member(const Mor& m) const { return is_double_extension(cls, m, caps); }
    static const Obj& dom(const Mor& m) { return m.a; }
    static const Obj& cod(const Mor& m) { return m.b; }
    static Mor compose(const Mor& f, const Mor& g) { return compose_squares(f, g); }
    static bool is_iso(const Mor& m) { return is_iso_square(m); }
    static std::vector<Mor> sections(const Mor& m) { return all_sections_square(m); }
    std::string describe(const Mor& m) const { return cubex::describe(m); }
    std::string key(const Mor& m) const { return cubex::canonical_key(m); }
    static bool compose_equal(const Mor& f, const Mor& g, const Mor& u, const Mor& v) {
        return BaseCat::compose_equal(f.f1, g.f1, u.f1, v.f1) &&
               BaseCat::compose_equal(f.f0, g.f0, u.f0, v.f0);
    }
    static bool is_composite(const Mor& m, const Mor& f, const Mor& g) {
        return BaseCat::is_composite(m.f1, f.f1, g.f1) &&
               BaseCat::is_composite(m.f0, f.f0, g.f0);
    }

    struct Pullback {
        Mor leg_f;
        Mor leg_g;
        std::function<std::optional<Mor>(const Mor&, const Mor&)> mediate;
    };
    Pullback pullback(const Mor& f, const Mor& g) const {
        auto data = std::make_shared<SquarePullback>(pullback_squares(f, g, caps));
        Pullback pb;
        pb.leg_f = data->to_f;
        pb.leg_g = data->to_g;
        pb.mediate = [data](const Mor& u, const Mor& v) {
            return mediate_squares(*data, u, v);
        };
        return pb;
    }
};

// Keys objects by their full description so morphisms can be bucketed
// by endpoints without repeated deep comparisons.
template <typename Cat>
std::string obj_key(const Cat&, const typename Cat::Obj& o) {
    return canonical_key(o);
}

template <typename Cat>
AuditReport run_audit(const Cat& cat, std::vector<typename Cat::Mor> universe,
                      const std::string& universe_desc) {
    using Mor = typename Cat::Mor;

    // intern endpoint objects
    std::map<std::string, int> obj_ids;
    auto intern = [&](const typename Cat::Obj& o) {
        const auto key = canonical_key(o);
        auto it = obj_ids.find(key);
        if (it != obj_ids.end()) return it->second;
        const int id = static_cast<int>(obj_ids.size());
        obj_ids.emplace(key, id);
        return id;
    };

    std::vector<int> dom_id, cod_id;
    std::map<std::pair<int, int>, std::vector<std::size_t>> by_ends;
    std::map<int, std::vector<std::size_t>> by_cod;
    auto index_morphism = [&](const Mor& m, std::size_t idx) {
        dom_id.push_back(intern(cat.dom(m)));
        cod_id.push_back(intern(cat.cod(m)));
        by_ends[{dom_id[idx], cod_id[idx]}].push_back(idx);
        by_cod[cod_id[idx]].push_back(idx);
    };
    for (std::size_t i = 0; i < universe.size(); ++i) index_morphism(universe[i], i);

    // close under composition, bounded
    bool grew = true;
    while (grew) {
        grew = false;
        const std::size_t n = universe.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (cod_id[j] != dom_id[i]) continue;
                bool present = false;
                for (std::size_t k : by_ends[{dom_id[j], cod_id[i]}])
                    if (Cat::is_composite(universe[k], universe[i], universe[j])) {
                        present = true;
                        break;
                    }
                if (present) continue;
                universe.push_back(cat.compose(universe[i], universe[j]));
                index_morphism(universe.back(), universe.size() - 1);
                grew = true;
                if (universe.size() > cat.caps.universe_cap)
                    throw resource_error("audit universe closure exceeds cap");
            }
    }

    const std::size_t n = universe.size();
    std::vector<char> is_member(n);
    for (std::size_t i = 0; i < n; ++i)
        is_member[i] = cat.member(universe[i]) ? 1 : 0;

    AuditReport report;
    report.class_name = cat.cls.name();
    report.universe = universe_desc + " (" + std::to_string(n) +
                      " morphisms after closure)";

    AxiomFinding e1, e2, e3, e4, e5;
    e1.axiom = "E1";
    e2.axiom = "E2";
    e3.axiom = "E3";
    e4.axiom = "E4";
    e5.axiom = "E5";

    for (std::size_t i = 0; i < n; ++i) {
        if (!Cat::is_iso(universe[i])) continue;
        ++e1.instances;
        if (e1.status != AxiomStatus::Violated && !is_member[i]) {
            e1.status = AxiomStatus::Violated;
            e1.witness = "iso not in class: " + cat.describe(universe[i]);
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        if (!is_member[i]) continue;
        for (std::size_t j : by_cod[cod_id[i]]) {
            ++e2.instances;
            if (e2.status == AxiomStatus::Violated) continue;
            auto pb = cat.pullback(universe[i], universe[j]);
            if (!cat.member(pb.leg_g)) {
                e2.status = AxiomStatus::Violated;
                e2.witness = "pullback of " + cat.describe(universe[i]) + " along " +
                             cat.describe(universe[j]) + " has non-member projection";
            }
        }
    }

    for (std::size_t i = 0; i < n; ++i) {       // outer morphism f
        for (std::size_t j = 0; j < n; ++j) {   // inner morphism g, composite f o g
            if (cod_id[j] != dom_id[i]) continue;
            // the closure guarantees the composite is present
            std::size_t ci = n;
            for (std::size_t k : by_ends[{dom_id[j], cod_id[i]}])
                if (Cat::is_composite(universe[k], universe[i], universe[j])) {
                    ci = k;
                    break;
                }
            const bool cm = ci < n && is_member[ci];
            if (is_member[i] && is_member[j]) {
                ++e3.instances;
                if (e3.status != AxiomStatus::Violated && !cm) {
                    e3.status = AxiomStatus::Violated;
                    e3.witness = "composite of members not a member: g = " +
                                 cat.describe(universe[i]) +
                                 ", f = " + cat.describe(universe[j]);
                }
            }
            if (cm) {
                ++e4.instances;
                if (e4.status != AxiomStatus::Violated && !is_member[i]) {
                    e4.status = AxiomStatus::Violated;
                    e4.witness = "g o f in class but g is not: g = " +
                                 cat.describe(universe[i]) +
                                 ", f = " + cat.describe(universe[j]);
                }
            }
        }
    }

    // E5: split epimorphisms of extensions, assembled from universe maps.
    auto bucket = [&](int d, int c) -> const std::vector<std::size_t>& {
        static const std::vector<std::size_t> empty;
        auto it = by_ends.find({d, c});
        return it == by_ends.end() ? empty : it->second;
    };
    std::vector<std::optional<std::vector<Mor>>> section_cache(n);
    auto sections_of = [&](std::size_t i) -> const std::vector<Mor>& {
        if (!section_cache[i]) section_cache[i] = cat.sections(universe[i]);
        return *section_cache[i];
    };
    std::map<std::pair<std::size_t, std::size_t>, typename Cat::Pullback> pb_cache;
    for (std::size_t ai = 0; ai < n; ++ai) {
        if (!is_member[ai]) continue;
        const auto& alpha = universe[ai];
        for (std::size_t bi = 0; bi < n; ++bi) {
            if (!is_member[bi]) continue;
            const auto& beta = universe[bi];
            for (std::size_t p1 : bucket(dom_id[ai], dom_id[bi])) {
                const auto& phi1 = universe[p1];
                for (std::size_t p0 : bucket(cod_id[ai], cod_id[bi])) {
                    const auto& phi0 = universe[p0];
                    if (!Cat::compose_equal(phi0, alpha, beta, phi1)) continue;
                    // split: a section pair commuting with the verticals
                    bool split = false;
                    for (const auto& s1 : sections_of(p1)) {
                        for (const auto& s0 : sections_of(p0)) {
                            if (Cat::compose_equal(alpha, s1, s0, beta)) {
                                split = true;
                                break;
                            }
                        }
                        if (split) break;
                    }
                    if (!split) continue;
                    ++e5.instances;
                    if (e5.status == AxiomStatus::Violated) continue;
                    bool ok = is_member[p1] && is_member[p0];
                    if (ok) {
                        auto it = pb_cache.find({bi, p0});
                        if (it == pb_cache.end())
                            it = pb_cache.emplace(std::make_pair(bi, p0),
                                                  cat.pullback(beta, phi0)).first;
                        auto cmp = it->second.mediate(phi1, alpha);
                        ok = cmp && cat.member(*cmp);
                    }
                    if (!ok) {
                        e5.status = AxiomStatus::Violated;
                        e5.witness = "split epi of extensions not a double extension: "
                                     "a = " + cat.describe(alpha) +
                                     ", b = " + cat.describe(beta) +
                                     ", f1 = " + cat.describe(phi1) +
                                     ", f0 = " + cat.describe(phi0);
                    }
                }
            }
        }
    }

    report.findings = {e1, e2, e3, e4, e5};
    return report;
}

} // namespace

bool AuditReport::all_verified() const {
    return std::all_of(findings.begin(), findings.end(), [](const AxiomFinding& f) {
        return f.status == AxiomStatus::VerifiedOnUniverse;
    });
}

const AxiomFinding& AuditReport::finding(const std::string& axiom) const {
    for (const auto& f : findings)
        if (f.axiom == axiom) return f;
    throw validation_error("no finding for axiom " + axiom);
}

AuditReport audit_axioms(const ExtensionClass& E, std::vector<FinMorphism> universe,
                         const Caps& caps) {
    BaseCat cat{E, caps};
    return run_audit(cat, std::move(universe), "morphism universe");
}

AuditReport audit_axioms_squares(const ExtensionClass& E,
                                 std::vector<SquareArrow> universe, const Caps& caps) {
    SquareCat cat{E, caps};
    return run_audit(cat, std::move(universe), "square universe");
}

bool check_e5_plus(const ExtensionClass& E, const FinMorphism& a, const FinMorphism& b,
                   const FinMorphism& f, const FinMorphism& k) {
    if (!(b.cod() == a.cod()))
        throw validation_error("e5+: rows must share their base object");
    if (!(f.dom() == a.dom()) || !(f.cod() == b.dom()))
        throw validation_error("e5+: f must map the top row to the bottom row");
    if (!(compose(b, f) == a))
        throw validation_error("e5+: b o f != a");
    const auto ka = compute_kernel(a);
    const auto kb = compute_kernel(b);
    const FinMorphism restricted = restrict_to_kernels(f, ka, kb);
    if (!(restricted == k))
        throw validation_error("e5+: k is not the restriction of f to the kernels");
    if (!is_surjective(a) || !is_surjective(b))
        throw validation_error("e5+: rows are not short exact");
    return !member(E, k) || member(E, f);
}

std::string canonical_key(const SquareArrow& s) {
    return canonical_key(s.a) + "|" + canonical_key(s.b) + "|" + canonical_key(s.f1) +
           "|" + canonical_key(s.f0);
}

std::string describe(const SquareArrow& s) {
    std::ostringstream os;
    os << "[a: " << describe(s.a) << "; b: " << describe(s.b) << "; f1: " << describe(s.f1)
       << "; f0: " << describe(s.f0) << "]";
    return os.str();
}

} // namespace cubex
