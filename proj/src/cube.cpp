#include "cubex/cube.hpp"

#include <algorithm>
#include <sstream>

#include "cubex/errors.hpp"

namespace cubex {

namespace {

int popcount(SubsetMask s) { return __builtin_popcount(s); }

std::vector<int> subset_indices(SubsetMask s) {
    std::vector<int> out;
    for (int i = 0; s; ++i, s >>= 1)
        if (s & 1u) out.push_back(i);
    return out;
}

} // namespace

std::string subset_key(SubsetMask s) {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (int i : subset_indices(s)) {
        if (!first) os << ",";
        os << i;
        first = false;
    }
    os << "]";
    return os.str();
}

std::optional<SubsetMask> parse_subset_key(const std::string& key, int dim) {
    if (key.size() < 2 || key.front() != '[' || key.back() != ']') return std::nullopt;
    SubsetMask mask = 0;
    std::string inner = key.substr(1, key.size() - 2);
    if (inner.empty()) return mask;
    std::istringstream is(inner);
    std::string part;
    while (std::getline(is, part, ',')) {
        try {
            const int i = std::stoi(part);
            if (i < 0 || i >= dim) return std::nullopt;
            mask |= (1u << i);
        } catch (...) {
            return std::nullopt;
        }
    }
    return mask;
}

Cube::Cube(int dim, std::vector<FinObject> objects, GeneratorMap generators)
    : dim_(dim), objects_(std::move(objects)), generators_(std::move(generators)) {
    validate();
}

Cube Cube::unchecked(int dim, std::vector<FinObject> objects, GeneratorMap generators) {
    Cube c;
    c.dim_ = dim;
    c.objects_ = std::move(objects);
    c.generators_ = std::move(generators);
    if (c.objects_.size() != (1u << dim))
        throw validation_error("cube: expected " + std::to_string(1u << dim) +
                               " objects");
    return c;
}

void Cube::validate() const {
    if (dim_ < 0)
        throw validation_error("cube: negative dimension");
    if (dim_ > default_caps().cube_dim_cap)
        throw resource_error("cube dimension " + std::to_string(dim_) +
                             " exceeds the cap of " +
                             std::to_string(default_caps().cube_dim_cap));
    if (objects_.size() != (1u << dim_))
        throw validation_error("cube: expected " + std::to_string(1u << dim_) +
                               " objects, got " + std::to_string(objects_.size()));
    for (SubsetMask s = 0; s < (1u << dim_); ++s) {
        for (int i = 0; i < dim_; ++i) {
            if (s & (1u << i)) continue;
            auto it = generators_.find({s, i});
            if (it == generators_.end())
                throw validation_error("cube: missing generator " +
                                       subset_key(s | (1u << i)) + " -> " +
                                       subset_key(s));
            const auto& g = it->second;
            if (!(g.dom() == objects_[s | (1u << i)]) || !(g.cod() == objects_[s]))
                throw validation_error("cube: generator " + subset_key(s | (1u << i)) +
                                       " -> " + subset_key(s) +
                                       " has mismatched endpoints");
        }
    }
    // all composition squares commute
    for (SubsetMask s = 0; s < (1u << dim_); ++s)
        for (int i = 0; i < dim_; ++i) {
            if (s & (1u << i)) continue;
            for (int j = i + 1; j < dim_; ++j) {
                if (s & (1u << j)) continue;
                const SubsetMask si = s | (1u << i), sj = s | (1u << j);
                const auto left = compose(generator(s, i), generator(si, j));
                const auto right = compose(generator(s, j), generator(sj, i));
                if (!(left == right))
                    throw validation_error("cube: square does not commute at (S=" +
                                           subset_key(s) + ", i=" + std::to_string(i) +
                                           ", j=" + std::to_string(j) + ")");
            }
        }
}

const FinMorphism& Cube::generator(SubsetMask s, int i) const {
    auto it = generators_.find({s, i});
    if (it == generators_.end())
        throw validation_error("cube: no generator for (S=" + subset_key(s) +
                               ", i=" + std::to_string(i) + ")");
    return it->second;
}

FinMorphism Cube::composite(SubsetMask t, SubsetMask s) const {
    if ((s & t) != s)
        throw validation_error("cube: composite requires S subset of T");
    FinMorphism acc = identity(objects_[t]);
    SubsetMask cur = t;
    for (int i = dim_ - 1; i >= 0; --i) {
        const SubsetMask bit = 1u << i;
        if ((t & bit) && !(s & bit)) {
            const SubsetMask next = cur & ~bit;
            acc = compose(generator(next, i), acc);
            cur = next;
        }
    }
    return acc;
}

Cube point_cube(FinObject x) {
    std::vector<FinObject> objs{std::move(x)};
    return Cube(0, std::move(objs), {});
}

Cube arrow_cube(const FinMorphism& f) {
    std::vector<FinObject> objs{f.cod(), f.dom()};
    Cube::GeneratorMap gen;
    gen.emplace(std::make_pair(SubsetMask{0}, 0), f);
    return Cube(1, std::move(objs), std::move(gen));
}

Cube square_cube(const SquareArrow& s) {
    // direction 1 is the arrow direction: A_{0,1} = dom a, A_{1} = cod a,
    // A_{0} = dom b, A_{} = cod b
    std::vector<FinObject> objs(4);
    objs[0b00] = s.b.cod();
    objs[0b01] = s.b.dom();
    objs[0b10] = s.a.cod();
    objs[0b11] = s.a.dom();
    Cube::GeneratorMap gen;
    gen.emplace(std::make_pair(SubsetMask{0b00}, 0), s.b);
    gen.emplace(std::make_pair(SubsetMask{0b00}, 1), s.f0);
    gen.emplace(std::make_pair(SubsetMask{0b10}, 0), s.a);
    gen.emplace(std::make_pair(SubsetMask{0b01}, 1), s.f1);
    return Cube::unchecked(2, std::move(objs), std::move(gen));
}

SquareArrow cube_to_square(const Cube& c) {
    if (c.dim() != 2)
        throw validation_error("cube_to_square needs dimension 2");
    return SquareArrow::unchecked(c.generator(0b10, 0), c.generator(0b00, 0),
                                  c.generator(0b01, 1), c.generator(0b00, 1));
}

std::vector<ArrowView> arrow_views(const Cube& c) {
    std::vector<ArrowView> views;
    const int n = c.dim();
    if (n == 0) return views;
    for (int dir = 0; dir < n; ++dir) {
        // order-preserving reindexing of n\{dir} onto 0..n-2
        std::vector<int> old_of_new;
        for (int i = 0; i < n; ++i)
            if (i != dir) old_of_new.push_back(i);
        auto expand = [&](SubsetMask small, bool with_dir) {
            SubsetMask big = with_dir ? (1u << dir) : 0u;
            for (int k = 0; k < n - 1; ++k)
                if (small & (1u << k)) big |= (1u << old_of_new[static_cast<std::size_t>(k)]);
            return big;
        };

        const SubsetMask count = 1u << (n - 1);
        std::vector<FinObject> dom_objs(count), cod_objs(count);
        Cube::GeneratorMap dom_gen, cod_gen;
        std::vector<FinMorphism> comps(count);
        for (SubsetMask s = 0; s < count; ++s) {
            dom_objs[s] = c.object(expand(s, true));
            cod_objs[s] = c.object(expand(s, false));
            comps[s] = c.generator(expand(s, false), dir);
            for (int k = 0; k < n - 1; ++k) {
                if (s & (1u << k)) continue;
                const int i = old_of_new[static_cast<std::size_t>(k)];
                dom_gen.emplace(std::make_pair(s, k), c.generator(expand(s, true), i));
                cod_gen.emplace(std::make_pair(s, k), c.generator(expand(s, false), i));
            }
        }
        ArrowView v;
        v.direction = dir;
        v.domain = Cube::unchecked(n - 1, std::move(dom_objs), std::move(dom_gen));
        v.codomain = Cube::unchecked(n - 1, std::move(cod_objs), std::move(cod_gen));
        v.components = std::move(comps);
        views.push_back(std::move(v));
    }
    return views;
}

Cube reassemble(const ArrowView& v) {
    const int n = v.domain.dim() + 1;
    const int dir = v.direction;
    std::vector<int> old_of_new;
    for (int i = 0; i < n; ++i)
        if (i != dir) old_of_new.push_back(i);
    auto expand = [&](SubsetMask small, bool with_dir) {
        SubsetMask big = with_dir ? (1u << dir) : 0u;
        for (int k = 0; k < n - 1; ++k)
            if (small & (1u << k)) big |= (1u << old_of_new[static_cast<std::size_t>(k)]);
        return big;
    };

    std::vector<FinObject> objs(1u << n);
    Cube::GeneratorMap gen;
    const SubsetMask count = 1u << (n - 1);
    for (SubsetMask s = 0; s < count; ++s) {
        objs[expand(s, true)] = v.domain.object(s);
        objs[expand(s, false)] = v.codomain.object(s);
        gen.emplace(std::make_pair(expand(s, false), dir), v.components[s]);
        for (int k = 0; k < n - 1; ++k) {
            if (s & (1u << k)) continue;
            const int i = old_of_new[static_cast<std::size_t>(k)];
            gen.emplace(std::make_pair(expand(s, true), i), v.domain.generator(s, k));
            gen.emplace(std::make_pair(expand(s, false), i), v.codomain.generator(s, k));
        }
    }
    return Cube::unchecked(n, std::move(objs), std::move(gen));
}

namespace {

std::vector<SubsetMask> sublimit_nodes(SubsetMask I) {
    const int size = popcount(I);
    std::vector<SubsetMask> nodes;
    for (SubsetMask j = I;; j = (j - 1) & I) {
        const int pj = popcount(j);
        if (j != I && pj >= size - 2) nodes.push_back(j);
        if (j == 0) break;
    }
    std::sort(nodes.begin(), nodes.end(), [](SubsetMask a, SubsetMask b) {
        if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
        return subset_key(a) < subset_key(b);
    });
    return nodes;
}

} // namespace

Cone sublimit_cone(const Cube& c, SubsetMask I, const Caps& caps) {
    if (I == 0)
        throw validation_error("sublimit: I must be nonempty");
    const int size = popcount(I);
    const auto nodes = sublimit_nodes(I);

    std::vector<FinObject> objects;
    std::vector<std::string> names;
    std::map<SubsetMask, std::size_t> index;
    for (SubsetMask j : nodes) {
        index[j] = objects.size();
        objects.push_back(c.object(j));
        names.push_back(subset_key(j));
    }

    std::vector<TupleEquation> eqs;
    for (SubsetMask j : nodes) {
        if (popcount(j) != size - 1) continue;
        for (SubsetMask j2 : nodes) {
            if (popcount(j2) != size - 2 || (j2 & j) != j2) continue;
            eqs.push_back(TupleEquation{index[j], c.composite(j, j2), index[j2],
                                        identity(c.object(j2))});
        }
    }
    return tuple_limit(objects, eqs, names, caps);
}

SublimitComparison sublimit_comparison(const Cube& c, SubsetMask I, const Caps& caps) {
    SublimitComparison out{sublimit_cone(c, I, caps), std::nullopt};
    std::vector<FinMorphism> legs;
    const auto nodes = sublimit_nodes(I);
    legs.reserve(nodes.size());
    for (SubsetMask j : nodes) legs.push_back(c.composite(I, j));
    std::vector<const FinMorphism*> leg_ptrs;
    for (const auto& l : legs) leg_ptrs.push_back(&l);
    out.comparison = mediate(out.cone, leg_ptrs);
    return out;
}

bool is_extension_limitwise(const Cube& c, const ExtensionClass& E, const Caps& caps) {
    if (c.dim() == 0) return true;
    for (SubsetMask I = 1; I <= c.full(); ++I) {
        const auto sub = sublimit_comparison(c, I, caps);
        if (!sub.comparison || !member(E, *sub.comparison)) return false;
    }
    return true;
}

bool is_extension_inductive(const Cube& c, const ExtensionClass& E, const Caps& caps) {
    if (c.dim() == 0) return true;
    if (c.dim() == 1) return member(E, c.generator(0, 0));
    for (const auto& view : arrow_views(c))
        if (!is_extension_inductive(view.codomain, E, caps)) return false;
    const auto top = sublimit_comparison(c, c.full(), caps);
    return top.comparison && member(E, *top.comparison);
}

Cube permute_cube(const Cube& c, const std::vector<int>& perm) {
    const int n = c.dim();
    if (static_cast<int>(perm.size()) != n)
        throw validation_error("permute_cube: permutation arity mismatch");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)])
            throw validation_error("permute_cube: not a permutation");
        seen[static_cast<std::size_t>(p)] = 1;
    }
    auto map_mask = [&](SubsetMask s) {
        SubsetMask out = 0;
        for (int i = 0; i < n; ++i)
            if (s & (1u << i)) out |= (1u << perm[static_cast<std::size_t>(i)]);
        return out;
    };
    std::vector<FinObject> objs(1u << n);
    Cube::GeneratorMap gen;
    for (SubsetMask s = 0; s < (1u << n); ++s)
        objs[map_mask(s)] = c.object(s);
    for (SubsetMask s = 0; s < (1u << n); ++s)
        for (int i = 0; i < n; ++i) {
            if (s & (1u << i)) continue;
            gen.emplace(std::make_pair(map_mask(s), perm[static_cast<std::size_t>(i)]),
                        c.generator(s, i));
        }
    return Cube::unchecked(n, std::move(objs), std::move(gen));
}

std::string describe(const Cube& c) {
    std::ostringstream os;
    os << "cube(dim=" << c.dim();
    for (SubsetMask s = 0; s <= c.full() && c.dim() > 0; ++s)
        os << ", " << subset_key(s) << "=" << describe(c.object(s));
    if (c.dim() == 0) os << ", []=" << describe(c.object(0));
    os << ")";
    return os.str();
}

} // namespace cubex
