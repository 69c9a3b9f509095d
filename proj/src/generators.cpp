#include "cubex/generators.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <numeric>
#include <sstream>

#include "cubex/errors.hpp"

namespace cubex {

Signature group_signature() {
    return Signature("group", {{"e", 0}, {"inv", 1}, {"mul", 2}});
}

namespace {

FinObject group_from_tables(int n, const std::vector<int>& mul,
                            std::vector<std::string> labels = {}) {
    if (labels.empty())
        for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    // identity and inverses are determined by the multiplication table
    int e = -1;
    for (int c = 0; c < n && e < 0; ++c) {
        bool id = true;
        for (int x = 0; x < n; ++x)
            if (mul[static_cast<std::size_t>(c * n + x)] != x ||
                mul[static_cast<std::size_t>(x * n + c)] != x)
                id = false;
        if (id) e = c;
    }
    if (e < 0) throw validation_error("group table has no identity");
    std::vector<int> inv(static_cast<std::size_t>(n), -1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (mul[static_cast<std::size_t>(x * n + y)] == e &&
                mul[static_cast<std::size_t>(y * n + x)] == e)
                inv[static_cast<std::size_t>(x)] = y;

    Structure st;
    st.signature = group_signature();
    // ops sorted by name: e, inv, mul
    st.tables.resize(3);
    st.tables[0].entries = {e};
    st.tables[1].entries = inv;
    st.tables[2].entries = mul;
    return FinObject(std::move(labels), std::move(st));
}

} // namespace

FinObject cyclic_group(int n) {
    std::vector<int> mul(static_cast<std::size_t>(n * n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            mul[static_cast<std::size_t>(x * n + y)] = (x + y) % n;
    return group_from_tables(n, mul);
}

FinObject klein_four_group() {
    std::vector<int> mul(16);
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) mul[static_cast<std::size_t>(x * 4 + y)] = x ^ y;
    return group_from_tables(4, mul);
}

FinObject symmetric_group_3() {
    // permutations of {0,1,2}: id, (01), (02), (12), (012), (021)
    const std::array<std::array<int, 3>, 6> perms = {{{0, 1, 2},
                                                      {1, 0, 2},
                                                      {2, 1, 0},
                                                      {0, 2, 1},
                                                      {1, 2, 0},
                                                      {2, 0, 1}}};
    auto find = [&](const std::array<int, 3>& p) {
        for (std::size_t i = 0; i < perms.size(); ++i)
            if (perms[i] == p) return static_cast<int>(i);
        return -1;
    };
    std::vector<int> mul(36);
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y) {
            std::array<int, 3> c{};
            for (int t = 0; t < 3; ++t)
                c[static_cast<std::size_t>(t)] =
                    perms[static_cast<std::size_t>(x)]
                         [static_cast<std::size_t>(perms[static_cast<std::size_t>(y)]
                                                       [static_cast<std::size_t>(t)])];
            mul[static_cast<std::size_t>(x * 6 + y)] = find(c);
        }
    return group_from_tables(6, mul);
}

FinObject dihedral_group_4() {
    // elements r^a s^b encoded a + 4b; s r s = r^{-1}
    auto enc = [](int a, int b) { return a + 4 * b; };
    std::vector<int> mul(64);
    for (int a1 = 0; a1 < 4; ++a1)
        for (int b1 = 0; b1 < 2; ++b1)
            for (int a2 = 0; a2 < 4; ++a2)
                for (int b2 = 0; b2 < 2; ++b2) {
                    const int a = (a1 + (b1 ? 4 - a2 : a2)) % 4;
                    const int b = b1 ^ b2;
                    mul[static_cast<std::size_t>(enc(a1, b1) * 8 + enc(a2, b2))] =
                        enc(a, b);
                }
    return group_from_tables(8, mul);
}

FinObject quaternion_group() {
    // 0..7 = 1, -1, i, -i, j, -j, k, -k
    auto unit = [](int x) { return x / 2; };   // 0:1, 1:i, 2:j, 3:k
    auto sign = [](int x) { return x % 2; };   // 0:+, 1:-
    auto enc = [](int u, int s) { return 2 * u + s; };
    // quaternion unit products with signs: table[u][v] = (unit, sign)
    static const int prod_unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int prod_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    // fix i*j=k, j*k=i, k*i=j; squares of i,j,k are -1
    std::vector<int> mul(64);
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            const int u = prod_unit[unit(x)][unit(y)];
            const int s = (sign(x) + sign(y) + prod_sign[unit(x)][unit(y)]) % 2;
            mul[static_cast<std::size_t>(x * 8 + y)] = enc(u, s);
        }
    return group_from_tables(8, mul);
}

FinObject direct_product_group(const FinObject& g, const FinObject& h) {
    const int n = static_cast<int>(g.size());
    const int m = static_cast<int>(h.size());
    std::vector<std::string> labels;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < m; ++y)
            labels.push_back("(" + g.label(x) + "," + h.label(y) + ")");
    const auto& gm = g.structure().tables[2].entries;
    const auto& hm = h.structure().tables[2].entries;
    std::vector<int> mul(static_cast<std::size_t>(n * m * n * m));
    auto enc = [&](int x, int y) { return x * m + y; };
    for (int x1 = 0; x1 < n; ++x1)
        for (int y1 = 0; y1 < m; ++y1)
            for (int x2 = 0; x2 < n; ++x2)
                for (int y2 = 0; y2 < m; ++y2)
                    mul[static_cast<std::size_t>(enc(x1, y1) * n * m + enc(x2, y2))] =
                        enc(gm[static_cast<std::size_t>(x1 * n + x2)],
                            hm[static_cast<std::size_t>(y1 * m + y2)]);
    return group_from_tables(n * m, mul, std::move(labels));
}

std::vector<NamedObject> group_catalog(int max_order) {
    std::vector<NamedObject> out;
    for (int n = 1; n <= std::min(max_order, 8); ++n)
        out.push_back({"Z" + std::to_string(n), cyclic_group(n)});
    if (max_order >= 4) out.push_back({"V4", klein_four_group()});
    if (max_order >= 6) out.push_back({"S3", symmetric_group_3()});
    if (max_order >= 8) {
        out.push_back({"Z4xZ2", direct_product_group(cyclic_group(4), cyclic_group(2))});
        out.push_back({"Z2xZ2xZ2",
                       direct_product_group(klein_four_group(), cyclic_group(2))});
        out.push_back({"D4", dihedral_group_4()});
        out.push_back({"Q8", quaternion_group()});
    }
    return out;
}

std::vector<FinMorphism> all_maps(const FinObject& dom, const FinObject& cod) {
    std::vector<FinMorphism> out;
    const std::size_t n = dom.size(), m = cod.size();
    if (n == 0) {
        out.emplace_back(dom, cod, std::vector<int>{});
        return out;
    }
    if (m == 0) return out;
    std::vector<int> t(n, 0);
    while (true) {
        out.emplace_back(dom, cod, t);
        std::size_t k = n;
        bool done = true;
        while (k > 0) {
            --k;
            if (++t[k] < static_cast<int>(m)) {
                done = false;
                break;
            }
            t[k] = 0;
        }
        if (done) break;
    }
    return out;
}

namespace {

// DFS over table prefixes, pruning with every op constraint that is fully
// determined by the assigned prefix.
void hom_dfs(const FinObject& dom, const FinObject& cod, std::vector<int>& t,
             std::size_t next, std::vector<FinMorphism>& out) {
    const std::size_t n = dom.size();
    if (next == n) {
        if (is_homomorphism(dom, cod, t)) out.emplace_back(dom, cod, t);
        return;
    }
    for (int v = 0; v < static_cast<int>(cod.size()); ++v) {
        t[next] = v;
        // check binary-op closures among assigned elements
        bool ok = true;
        if (dom.has_structure()) {
            const auto& sig = dom.structure().signature;
            for (std::size_t op = 0; op < sig.ops().size() && ok; ++op) {
                const int arity = sig.ops()[op].arity;
                if (arity == 0) {
                    const int c = dom.apply(op, {});
                    if (static_cast<std::size_t>(c) <= next &&
                        t[static_cast<std::size_t>(c)] != cod.apply(op, {}))
                        ok = false;
                } else if (arity == 1) {
                    for (std::size_t x = 0; x <= next && ok; ++x) {
                        const int y = dom.apply(op, {static_cast<int>(x)});
                        if (static_cast<std::size_t>(y) <= next &&
                            t[static_cast<std::size_t>(y)] !=
                                cod.apply(op, {t[x]}))
                            ok = false;
                    }
                } else if (arity == 2) {
                    for (std::size_t x = 0; x <= next && ok; ++x)
                        for (std::size_t y = 0; y <= next && ok; ++y) {
                            const int z =
                                dom.apply(op, {static_cast<int>(x), static_cast<int>(y)});
                            if (static_cast<std::size_t>(z) <= next &&
                                t[static_cast<std::size_t>(z)] !=
                                    cod.apply(op, {t[x], t[y]}))
                                ok = false;
                        }
                }
            }
        }
        if (ok) hom_dfs(dom, cod, t, next + 1, out);
    }
    t[next] = 0;
}

} // namespace

std::vector<FinMorphism> all_homs(const FinObject& dom, const FinObject& cod) {
    std::vector<FinMorphism> out;
    if (!dom.has_structure() || !cod.has_structure()) return all_maps(dom, cod);
    if (dom.size() == 0) {
        out.emplace_back(dom, cod, std::vector<int>{});
        return out;
    }
    if (cod.size() == 0) return out;
    std::vector<int> t(dom.size(), 0);
    hom_dfs(dom, cod, t, 0, out);
    return out;
}

std::vector<FinMorphism> surjective_homs(const FinObject& dom, const FinObject& cod) {
    auto all = all_homs(dom, cod);
    std::vector<FinMorphism> out;
    for (auto& h : all)
        if (is_surjective(h)) out.push_back(std::move(h));
    return out;
}

// ---- random cubes -----------------------------------------------------------

namespace {

int rand_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// A random table dom_size -> cod_size, optionally forced surjective
// (possible only when dom_size >= cod_size).
std::vector<int> random_table(Rng& rng, int dom_size, int cod_size, bool surjective) {
    std::vector<int> t(static_cast<std::size_t>(dom_size));
    if (cod_size == 0) return t; // only valid when dom_size == 0
    for (auto& v : t) v = rand_int(rng, 0, cod_size - 1);
    if (surjective && dom_size >= cod_size) {
        // overwrite a random injection's worth of positions
        std::vector<int> pos(static_cast<std::size_t>(dom_size));
        std::iota(pos.begin(), pos.end(), 0);
        std::shuffle(pos.begin(), pos.end(), rng);
        for (int c = 0; c < cod_size; ++c)
            t[static_cast<std::size_t>(pos[static_cast<std::size_t>(c)])] = c;
    }
    return t;
}

} // namespace

Cube random_set_cube(Rng& rng, int dim, int max_carrier, double surjective_bias) {
    std::vector<FinObject> objects(1u << dim);
    Cube::GeneratorMap gen;
    objects[0] = canonical_set(rand_int(rng, 1, max_carrier));

    std::bernoulli_distribution surj(surjective_bias);
    for (int size = 1; size <= dim; ++size) {
        for (SubsetMask s = 1; s < (1u << dim); ++s) {
            if (__builtin_popcount(s) != size) continue;
            // limit of the already-built boundary
            Cube partial = Cube::unchecked(
                dim, objects, gen); // objects above `s` are placeholders, unused
            const auto sub = sublimit_cone(partial, s);
            const auto& L = sub.apex;
            int carrier;
            if (L.size() == 0) {
                carrier = 0;
            } else {
                carrier = rand_int(rng, 1, max_carrier);
            }
            objects[s] = canonical_set(carrier);
            const auto table =
                random_table(rng, carrier, static_cast<int>(L.size()), surj(rng));
            const FinMorphism h(objects[s], L, table);
            for (int i = 0; i < dim; ++i) {
                if (!(s & (1u << i))) continue;
                const SubsetMask t = s & ~(1u << i);
                gen.emplace(std::make_pair(t, i),
                            compose(sub.leg(subset_key(t)), h));
            }
        }
    }
    return Cube(dim, std::move(objects), std::move(gen));
}

SquareArrow random_set_square(Rng& rng, int max_carrier) {
    const auto c = random_set_cube(rng, 2, max_carrier, 0.6);
    return cube_to_square(c);
}

SquareArrow random_surjective_group_square(Rng& rng, int max_order) {
    const auto catalog = group_catalog(max_order);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const auto& a1 = catalog[static_cast<std::size_t>(
            rand_int(rng, 0, static_cast<int>(catalog.size()) - 1))].object;
        // surjections out of A1
        std::vector<FinMorphism> outgoing;
        for (const auto& target : catalog)
            for (auto& h : surjective_homs(a1, target.object)) outgoing.push_back(h);
        if (outgoing.empty()) continue;
        const auto& a = outgoing[static_cast<std::size_t>(
            rand_int(rng, 0, static_cast<int>(outgoing.size()) - 1))];
        const auto& f1 = outgoing[static_cast<std::size_t>(
            rand_int(rng, 0, static_cast<int>(outgoing.size()) - 1))];
        // candidates (b, f0) with common codomain and b o f1 = f0 o a
        std::vector<std::pair<FinMorphism, FinMorphism>> closers;
        for (const auto& base : catalog) {
            const auto bs = surjective_homs(f1.cod(), base.object);
            const auto f0s = surjective_homs(a.cod(), base.object);
            for (const auto& b : bs)
                for (const auto& f0 : f0s)
                    if (compose(b, f1) == compose(f0, a)) closers.emplace_back(b, f0);
        }
        if (closers.empty()) continue;
        const auto& [b, f0] = closers[static_cast<std::size_t>(
            rand_int(rng, 0, static_cast<int>(closers.size()) - 1))];
        return SquareArrow(a, b, f1, f0);
    }
    throw resource_error("failed to sample a surjective group square");
}

std::vector<SquareArrow> split_epi_of_split_epi_group_squares(int max_order,
                                                              std::size_t limit) {
    std::vector<SquareArrow> out;
    const auto catalog = group_catalog(max_order);
    for (const auto& src : catalog)
        for (const auto& mid : catalog)
            for (const auto& a : surjective_homs(src.object, mid.object))
                for (const auto& base : catalog)
                    for (const auto& f0 : surjective_homs(mid.object, base.object))
                        for (const auto& right : catalog) {
                            const auto f1s = surjective_homs(src.object, right.object);
                            const auto bs = surjective_homs(right.object, base.object);
                            for (const auto& f1 : f1s)
                                for (const auto& b : bs) {
                                    if (!(compose(b, f1) == compose(f0, a))) continue;
                                    SquareArrow s(a, b, f1, f0);
                                    if (!has_double_split_structure(s)) continue;
                                    out.push_back(std::move(s));
                                    if (out.size() >= limit) return out;
                                }
                        }
    return out;
}

// ---- random simplicial groups ------------------------------------------------

namespace {

std::vector<FinMorphism> automorphisms(const FinObject& g) {
    std::vector<FinMorphism> out;
    for (auto& h : all_homs(g, g))
        if (is_iso(h)) out.push_back(std::move(h));
    return out;
}

FinMorphism inverse_iso(const FinMorphism& f) {
    std::vector<int> t(f.cod().size());
    for (std::size_t i = 0; i < f.dom().size(); ++i)
        t[static_cast<std::size_t>(f(static_cast<int>(i)))] = static_cast<int>(i);
    return FinMorphism(f.cod(), f.dom(), std::move(t));
}

// Conjugates every level by a random automorphism (a relabelled but
// isomorphic simplicial object).
TruncatedSimplicial twist_by_automorphisms(Rng& rng, const TruncatedSimplicial& ss) {
    auto d = ss.data();
    std::map<int, FinMorphism> phi, phi_inv;
    for (int n = ss.lowest_level(); n <= ss.level(); ++n) {
        // enumerating automorphisms is only cheap for small carriers
        if (ss.object(n).size() > 8) {
            phi.emplace(n, identity(ss.object(n)));
            phi_inv.emplace(n, identity(ss.object(n)));
            continue;
        }
        const auto autos = automorphisms(ss.object(n));
        const auto& pick = autos[static_cast<std::size_t>(
            rand_int(rng, 0, static_cast<int>(autos.size()) - 1))];
        phi.emplace(n, pick);
        phi_inv.emplace(n, inverse_iso(pick));
    }
    for (auto& [n, fs] : d.faces)
        for (auto& f : fs) f = compose(phi.at(n - 1), compose(f, phi_inv.at(n)));
    for (auto& [n, sgs] : d.degeneracies)
        for (auto& s : sgs) s = compose(phi.at(n + 1), compose(s, phi_inv.at(n)));
    for (auto& [n, s] : d.contraction)
        s = compose(phi.at(n), compose(s, phi_inv.at(n - 1)));
    return TruncatedSimplicial(std::move(d));
}

// Chooser that covers the object by object x H via the projection, with H
// picked to keep the carrier within the bound. Only the base level may get
// a product: each factor multiplies every later simplicial kernel, so
// deeper products blow the carriers up.
CoverChooser product_cover(Rng& rng_ref, int max_total) {
    auto rng = std::make_shared<Rng>(rng_ref()); // derived, reproducible
    auto calls = std::make_shared<int>(0);
    return [rng, calls, max_total](const FinObject& x) {
        std::vector<int> options{1};
        if (static_cast<int>(x.size()) * 2 <= max_total && (*calls)++ < 1)
            options.push_back(2);
        const int h = options[static_cast<std::size_t>(rand_int(
            *rng, 0, static_cast<int>(options.size()) - 1))];
        if (h == 1) return identity(x);
        const auto factor = cyclic_group(h);
        const auto product = direct_product_group(x, factor);
        std::vector<int> t;
        t.reserve(product.size());
        for (std::size_t i = 0; i < x.size(); ++i)
            for (int j = 0; j < h; ++j) t.push_back(static_cast<int>(i));
        return FinMorphism(product, x, std::move(t));
    };
}

} // namespace

TruncatedSimplicial random_simplicial_group(Rng& rng, int level, int max_order) {
    const auto catalog = group_catalog(max_order);
    const auto& base = catalog[static_cast<std::size_t>(
        rand_int(rng, 0, static_cast<int>(catalog.size()) - 1))].object;
    auto ss = tv_resolution(base, ExtensionClass{ClassKind::Surjections},
                            product_cover(rng, max_order), level);
    ss = twist_by_automorphisms(rng, ss);

    // quotient twist: replace the augmentation by a random quotient of it
    std::vector<FinMorphism> quotients;
    for (const auto& target : catalog)
        for (auto& q : surjective_homs(ss.object(-1), target.object))
            quotients.push_back(std::move(q));
    const auto& q = quotients[static_cast<std::size_t>(
        rand_int(rng, 0, static_cast<int>(quotients.size()) - 1))];
    auto d = ss.data();
    d.objects[0] = q.cod();
    d.faces.at(0)[0] = compose(q, ss.face(0, 0));
    return TruncatedSimplicial(std::move(d));
}

TruncatedSimplicial random_contractible_group_instance(Rng& rng, int level,
                                                       int max_order) {
    const auto catalog = group_catalog(max_order);
    const auto& base = catalog[static_cast<std::size_t>(
        rand_int(rng, 0, static_cast<int>(catalog.size()) - 1))].object;
    if (rand_int(rng, 0, 2) == 0)
        return twist_by_automorphisms(rng, constant_simplicial(base, level));
    auto ss = tv_resolution(base, ExtensionClass{ClassKind::Surjections},
                            product_cover(rng, max_order), level + 1);
    return twist_by_automorphisms(rng, shift(ss).shifted);
}

TruncatedSimplicial nerve_of_ordinal2(int level) {
    // monotone 0/1-words of length n+1 at level n
    auto words = [](int len) {
        std::vector<std::string> out;
        for (int ones = len; ones >= 0; --ones) {
            std::string w(static_cast<std::size_t>(len - ones), '0');
            w += std::string(static_cast<std::size_t>(ones), '1');
            out.push_back(w);
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    TruncatedSimplicial::Data d;
    d.flavor = Flavor::Full;
    d.level = level;
    d.augmented = false;
    std::vector<std::vector<std::string>> lv;
    for (int n = 0; n <= level; ++n) {
        lv.push_back(words(n + 1));
        d.objects.emplace_back(lv.back());
    }
    auto index_in = [&](int n, const std::string& w) {
        const auto& v = lv[static_cast<std::size_t>(n)];
        return static_cast<int>(std::find(v.begin(), v.end(), w) - v.begin());
    };
    for (int n = 1; n <= level; ++n) {
        std::vector<FinMorphism> fs;
        for (int i = 0; i <= n; ++i) {
            std::vector<int> t;
            for (const auto& w : lv[static_cast<std::size_t>(n)]) {
                std::string u = w;
                u.erase(static_cast<std::size_t>(i), 1);
                t.push_back(index_in(n - 1, u));
            }
            fs.emplace_back(d.objects[static_cast<std::size_t>(n)],
                            d.objects[static_cast<std::size_t>(n - 1)], std::move(t));
        }
        d.faces.emplace(n, std::move(fs));
    }
    for (int n = 0; n < level; ++n) {
        std::vector<FinMorphism> sgs;
        for (int i = 0; i <= n; ++i) {
            std::vector<int> t;
            for (const auto& w : lv[static_cast<std::size_t>(n)]) {
                std::string u = w;
                u.insert(static_cast<std::size_t>(i), 1, w[static_cast<std::size_t>(i)]);
                t.push_back(index_in(n + 1, u));
            }
            sgs.emplace_back(d.objects[static_cast<std::size_t>(n)],
                             d.objects[static_cast<std::size_t>(n + 1)], std::move(t));
        }
        d.degeneracies.emplace(n, std::move(sgs));
    }
    return TruncatedSimplicial(std::move(d));
}

TruncatedSimplicial constant_simplicial(const FinObject& x, int level) {
    TruncatedSimplicial::Data d;
    d.flavor = Flavor::Full;
    d.level = level;
    d.augmented = true;
    for (int n = -1; n <= level; ++n) d.objects.push_back(x);
    for (int n = 0; n <= level; ++n) {
        d.faces.emplace(n, std::vector<FinMorphism>(static_cast<std::size_t>(n + 1),
                                                    identity(x)));
        d.contraction.emplace(n, identity(x));
    }
    for (int n = 0; n < level; ++n)
        d.degeneracies.emplace(
            n, std::vector<FinMorphism>(static_cast<std::size_t>(n + 1), identity(x)));
    return TruncatedSimplicial(std::move(d));
}

std::vector<FinMorphism> all_set_surjections(int max_size) {
    std::vector<FinObject> sets;
    for (int n = 0; n <= max_size; ++n) sets.push_back(canonical_set(n));
    std::vector<FinMorphism> out;
    for (const auto& d : sets)
        for (const auto& c : sets)
            for (auto& m : all_maps(d, c))
                if (is_surjective(m)) out.push_back(std::move(m));
    return out;
}

std::vector<FinMorphism> all_group_surjections(int max_order) {
    std::vector<FinMorphism> out;
    const auto catalog = group_catalog(max_order);
    for (const auto& d : catalog)
        for (const auto& c : catalog)
            for (auto& m : surjective_homs(d.object, c.object)) out.push_back(std::move(m));
    return out;
}

std::vector<SquareArrow> all_squares_from(const std::vector<FinMorphism>& sides) {
    std::vector<SquareArrow> out;
    for (const auto& a : sides)
        for (const auto& b : sides)
            for (const auto& f1 : sides) {
                if (!(f1.dom() == a.dom()) || !(f1.cod() == b.dom())) continue;
                for (const auto& f0 : sides) {
                    if (!(f0.dom() == a.cod()) || !(f0.cod() == b.cod())) continue;
                    if (!(compose(f0, a) == compose(b, f1))) continue;
                    out.emplace_back(a, b, f1, f0);
                }
            }
    return out;
}

} // namespace cubex
