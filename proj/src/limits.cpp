#include "cubex/limits.hpp"

#include <algorithm>
#include <sstream>

#include "cubex/errors.hpp"

namespace cubex {

const Caps& default_caps() {
    static const Caps caps;
    return caps;
}

const FinMorphism& Cone::leg(const std::string& node) const {
    auto it = legs.find(node);
    if (it == legs.end())
        throw validation_error("cone has no leg named '" + node + "'");
    return it->second;
}

void FinDiagram::validate() const {
    if (nodes.empty())
        throw validation_error("diagram has no nodes");
    for (const auto& e : edges) {
        auto s = nodes.find(e.src);
        auto d = nodes.find(e.dst);
        if (s == nodes.end() || d == nodes.end())
            throw validation_error("edge '" + e.id + "' references unknown node");
        if (!(e.morphism.dom() == s->second) || !(e.morphism.cod() == d->second))
            throw validation_error("edge '" + e.id +
                                   "': morphism endpoints do not match its nodes");
    }
}

namespace {

std::string tuple_label(const std::vector<FinObject>& objects,
                        const std::vector<int>& tuple) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) os << ",";
        os << objects[i].label(tuple[i]);
    }
    os << ")";
    return os.str();
}

} // namespace

Cone tuple_limit(const std::vector<FinObject>& objects,
                 const std::vector<TupleEquation>& equations,
                 const std::vector<std::string>& leg_names,
                 const Caps& caps) {
    const std::size_t k = objects.size();
    if (leg_names.size() != k)
        throw validation_error("tuple_limit: one leg name per coordinate required");
    for (const auto& eq : equations) {
        if (eq.left >= k || eq.right >= k)
            throw validation_error("tuple_limit: equation coordinate out of range");
        if (!(eq.m_left.dom() == objects[eq.left]) ||
            !(eq.m_right.dom() == objects[eq.right]))
            throw validation_error("tuple_limit: equation morphism domain mismatch");
        if (!(eq.m_left.cod() == eq.m_right.cod()))
            throw validation_error("tuple_limit: equation codomains differ");
    }

    // equations indexed by the later of their two coordinates, so each is
    // checked as soon as both sides are assigned
    std::vector<std::vector<const TupleEquation*>> ready(k);
    for (const auto& eq : equations)
        ready[std::max(eq.left, eq.right)].push_back(&eq);

    std::vector<std::vector<int>> accepted;
    std::vector<int> tuple(k, 0);

    // backtracking enumeration in lexicographic order
    std::size_t pos = 0;
    if (k == 0) {
        accepted.push_back({});
    } else {
        tuple.assign(k, -1);
        while (true) {
            // advance coordinate at `pos`
            ++tuple[pos];
            if (tuple[pos] >= static_cast<int>(objects[pos].size())) {
                if (pos == 0) break;
                tuple[pos] = -1;
                --pos;
                continue;
            }
            bool ok = true;
            for (const auto* eq : ready[pos]) {
                if (eq->m_left(tuple[eq->left]) != eq->m_right(tuple[eq->right])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            if (pos + 1 < k) {
                ++pos;
                continue;
            }
            accepted.push_back(tuple);
            if (accepted.size() > caps.apex_cap)
                throw resource_error("limit apex exceeds cap of " +
                                     std::to_string(caps.apex_cap) + " tuples");
        }
    }

    std::vector<std::string> labels;
    labels.reserve(accepted.size());
    for (const auto& t : accepted) labels.push_back(tuple_label(objects, t));

    // pointwise structure when every coordinate shares one signature
    bool shared = !objects.empty() && objects[0].has_structure();
    if (shared)
        for (const auto& o : objects)
            if (!o.same_signature(objects[0])) shared = false;

    std::optional<FinObject> apex;
    if (shared) {
        std::map<std::vector<int>, int> pos_of;
        for (std::size_t i = 0; i < accepted.size(); ++i)
            pos_of.emplace(accepted[i], static_cast<int>(i));
        const auto& sig = objects[0].structure().signature;
        Structure st;
        st.signature = sig;
        for (std::size_t op = 0; op < sig.ops().size(); ++op) {
            const int arity = sig.ops()[op].arity;
            OpTable tab;
            std::size_t count = 1;
            for (int a = 0; a < arity; ++a) count *= accepted.size();
            tab.entries.reserve(count);
            std::vector<int> args(static_cast<std::size_t>(arity), 0);
            std::vector<int> out(k);
            std::vector<int> comps(static_cast<std::size_t>(arity));
            for (std::size_t p = 0; p < count; ++p) {
                std::size_t rest = p;
                for (int a = arity - 1; a >= 0; --a) {
                    args[static_cast<std::size_t>(a)] =
                        static_cast<int>(rest % accepted.size());
                    rest /= accepted.size();
                }
                for (std::size_t c = 0; c < k; ++c) {
                    for (int a = 0; a < arity; ++a)
                        comps[static_cast<std::size_t>(a)] =
                            accepted[static_cast<std::size_t>(
                                args[static_cast<std::size_t>(a)])][c];
                    out[c] = objects[c].apply(op, comps);
                }
                auto it = pos_of.find(out);
                if (it == pos_of.end())
                    throw validation_error(
                        "limit apex not closed under op '" + sig.ops()[op].name +
                        "' (diagram edges are not homomorphisms?)");
                tab.entries.push_back(it->second);
            }
            st.tables.push_back(std::move(tab));
        }
        apex = FinObject(labels, std::move(st));
    } else {
        apex = FinObject(labels);
    }

    Cone cone;
    cone.apex = std::move(*apex);
    cone.order = leg_names;
    for (std::size_t c = 0; c < k; ++c) {
        std::vector<int> t;
        t.reserve(accepted.size());
        for (const auto& tp : accepted) t.push_back(tp[c]);
        cone.legs.emplace(leg_names[c], FinMorphism(cone.apex, objects[c], std::move(t)));
    }
    return cone;
}

Cone compute_limit(const FinDiagram& d, const Caps& caps) {
    d.validate();
    std::vector<std::string> names;
    std::vector<FinObject> objects;
    std::map<std::string, std::size_t> index;
    for (const auto& [name, obj] : d.nodes) { // std::map iterates in sorted order
        index[name] = objects.size();
        names.push_back(name);
        objects.push_back(obj);
    }
    std::vector<TupleEquation> eqs;
    for (const auto& e : d.edges)
        eqs.push_back(TupleEquation{index.at(e.src), e.morphism, index.at(e.dst),
                                    identity(d.nodes.at(e.dst))});
    return tuple_limit(objects, eqs, names, caps);
}

Cone compute_pullback(const FinMorphism& f, const FinMorphism& g, const Caps& caps) {
    if (!(f.cod() == g.cod()))
        throw validation_error("pullback: codomain mismatch");
    return tuple_limit({f.dom(), g.dom()}, {TupleEquation{0, f, 1, g}}, {"p0", "p1"},
                       caps);
}

Cone compute_kernel_pair(const FinMorphism& f, const Caps& caps) {
    return tuple_limit({f.dom(), f.dom()}, {TupleEquation{0, f, 1, f}}, {"pi0", "pi1"},
                       caps);
}

std::optional<FinMorphism> mediate(const Cone& cone,
                                   const std::vector<const FinMorphism*>& legs) {
    if (legs.size() != cone.legs.size())
        throw validation_error("mediate: wrong number of legs");
    const std::size_t k = legs.size();
    // recover the apex tuples from the projections; legs must target the
    // cone's coordinate objects, for which the coordinates are the indices
    std::vector<const FinMorphism*> proj;
    proj.reserve(k);
    for (const auto& name : cone.order) proj.push_back(&cone.leg(name));
    for (std::size_t c = 0; c < k; ++c)
        if (!(legs[c]->cod() == proj[c]->cod()))
            throw validation_error("mediate: leg " + cone.order[c] +
                                   " targets the wrong object");
    std::map<std::vector<int>, int> pos_of;
    {
        std::vector<int> tuple(k);
        for (std::size_t i = 0; i < cone.apex.size(); ++i) {
            for (std::size_t c = 0; c < k; ++c)
                tuple[c] = (*proj[c])(static_cast<int>(i));
            pos_of.emplace(tuple, static_cast<int>(i));
        }
    }

    const std::size_t dom_size = legs.empty() ? 0 : legs[0]->dom().size();
    for (const auto* l : legs)
        if (l->dom().size() != dom_size)
            throw validation_error("mediate: legs have different domains");

    std::vector<int> t;
    t.reserve(dom_size);
    std::vector<int> tuple(k);
    for (std::size_t x = 0; x < dom_size; ++x) {
        for (std::size_t c = 0; c < k; ++c)
            tuple[c] = (*legs[c])(static_cast<int>(x));
        auto it = pos_of.find(tuple);
        if (it == pos_of.end()) return std::nullopt;
        t.push_back(it->second);
    }
    if (legs.empty()) return std::nullopt;
    return FinMorphism(legs[0]->dom(), cone.apex, std::move(t));
}

} // namespace cubex
