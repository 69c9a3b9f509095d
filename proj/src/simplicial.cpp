#include "cubex/simplicial.hpp"

#include <algorithm>
#include <sstream>

#include "cubex/errors.hpp"

namespace cubex {

std::string flavor_name(Flavor f) {
    switch (f) {
        case Flavor::Semi: return "semi";
        case Flavor::Quasi: return "quasi";
        case Flavor::Full: return "full";
    }
    return "?";
}

Flavor parse_flavor(const std::string& name) {
    if (name == "semi") return Flavor::Semi;
    if (name == "quasi") return Flavor::Quasi;
    if (name == "full") return Flavor::Full;
    throw validation_error("unknown simplicial flavor '" + name + "'");
}

TruncatedSimplicial::TruncatedSimplicial(Data data) : data_(std::move(data)) {
    const auto violations = validate(*this);
    if (!violations.empty())
        throw validation_error(violations.front().identity);
}

TruncatedSimplicial TruncatedSimplicial::unchecked(Data data) {
    TruncatedSimplicial ss;
    ss.data_ = std::move(data);
    return ss;
}

const FinObject& TruncatedSimplicial::object(int n) const {
    const int idx = data_.augmented ? n + 1 : n;
    if (n < lowest_level() || n > data_.level)
        throw validation_error("no object at level " + std::to_string(n));
    return data_.objects[static_cast<std::size_t>(idx)];
}

const FinMorphism& TruncatedSimplicial::face(int n, int i) const {
    auto it = data_.faces.find(n);
    if (it == data_.faces.end() || i < 0 || i >= static_cast<int>(it->second.size()))
        throw validation_error("no face d_" + std::to_string(i) + " at level " +
                               std::to_string(n));
    return it->second[static_cast<std::size_t>(i)];
}

const FinMorphism& TruncatedSimplicial::degeneracy(int n, int i) const {
    auto it = data_.degeneracies.find(n);
    if (it == data_.degeneracies.end() || i < 0 ||
        i >= static_cast<int>(it->second.size()))
        throw validation_error("no degeneracy s_" + std::to_string(i) + " at level " +
                               std::to_string(n));
    return it->second[static_cast<std::size_t>(i)];
}

namespace {

void note(std::vector<IdentityViolation>& out, std::string text) {
    out.push_back(IdentityViolation{std::move(text)});
}

} // namespace

std::vector<IdentityViolation> validate(const TruncatedSimplicial& ss) {
    std::vector<IdentityViolation> out;
    const auto& d = ss.data();
    const int N = d.level;
    const int lowest = ss.lowest_level();
    const int first_face_level = d.augmented ? 0 : 1;

    if (N < 0) {
        note(out, "level must be nonnegative");
        return out;
    }
    const std::size_t want_objects = static_cast<std::size_t>(N - lowest + 1);
    if (d.objects.size() != want_objects) {
        note(out, "expected " + std::to_string(want_objects) + " objects, got " +
                      std::to_string(d.objects.size()));
        return out;
    }

    // structural checks on faces
    for (int n = first_face_level; n <= N; ++n) {
        auto it = d.faces.find(n);
        if (it == d.faces.end() || static_cast<int>(it->second.size()) != n + 1) {
            note(out, "level " + std::to_string(n) + " must carry " +
                          std::to_string(n + 1) + " faces");
            return out;
        }
        for (int i = 0; i <= n; ++i) {
            const auto& f = it->second[static_cast<std::size_t>(i)];
            if (!(f.dom() == ss.object(n)) || !(f.cod() == ss.object(n - 1))) {
                note(out, "face d_" + std::to_string(i) + " at level " +
                              std::to_string(n) + " has wrong endpoints");
                return out;
            }
        }
    }
    for (const auto& [n, fs] : d.faces)
        if (n < first_face_level || n > N) {
            note(out, "faces at unexpected level " + std::to_string(n));
            return out;
        }

    // face identities
    for (int n = first_face_level + 1; n <= N; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                if (!(compose(ss.face(n - 1, i), ss.face(n, j)) ==
                      compose(ss.face(n - 1, j - 1), ss.face(n, i))))
                    note(out, "simplicial identity d_i d_j = d_{j-1} d_i at n=" +
                                  std::to_string(n) + ", i=" + std::to_string(i) +
                                  ", j=" + std::to_string(j));

    // degeneracies
    if (d.flavor == Flavor::Semi) {
        if (!d.degeneracies.empty())
            note(out, "semi-simplicial object must not carry degeneracies");
    } else {
        for (int n = 0; n < N; ++n) {
            auto it = d.degeneracies.find(n);
            if (it == d.degeneracies.end() ||
                static_cast<int>(it->second.size()) != n + 1) {
                note(out, "level " + std::to_string(n) + " must carry " +
                              std::to_string(n + 1) + " degeneracies");
                return out;
            }
            for (int i = 0; i <= n; ++i) {
                const auto& s = it->second[static_cast<std::size_t>(i)];
                if (!(s.dom() == ss.object(n)) || !(s.cod() == ss.object(n + 1))) {
                    note(out, "degeneracy s_" + std::to_string(i) + " at level " +
                                  std::to_string(n) + " has wrong endpoints");
                    return out;
                }
            }
        }
        for (int n = 0; n < N; ++n)
            for (int j = 0; j <= n; ++j) {
                const auto& sj = ss.degeneracy(n, j);
                for (int i = 0; i <= n + 1; ++i) {
                    const auto lhs = compose(ss.face(n + 1, i), sj);
                    FinMorphism rhs;
                    if (i == j || i == j + 1) {
                        rhs = identity(ss.object(n));
                    } else if (i < j) {
                        rhs = compose(ss.degeneracy(n - 1, j - 1), ss.face(n, i));
                    } else {
                        rhs = compose(ss.degeneracy(n - 1, j), ss.face(n, i - 1));
                    }
                    if (!(lhs == rhs))
                        note(out, "quasi-simplicial identity d_i s_j at n=" +
                                      std::to_string(n) + ", i=" + std::to_string(i) +
                                      ", j=" + std::to_string(j));
                }
            }
        if (d.flavor == Flavor::Full)
            for (int n = 0; n + 1 < N; ++n)
                for (int j = 0; j <= n; ++j)
                    for (int i = 0; i <= j; ++i)
                        if (!(compose(ss.degeneracy(n + 1, i), ss.degeneracy(n, j)) ==
                              compose(ss.degeneracy(n + 1, j + 1), ss.degeneracy(n, i))))
                            note(out,
                                 "simplicial identity s_i s_j = s_{j+1} s_i at n=" +
                                     std::to_string(n) + ", i=" + std::to_string(i) +
                                     ", j=" + std::to_string(j));
    }

    // contraction witness
    if (!d.contraction.empty()) {
        if (!d.augmented) {
            note(out, "contraction witness requires an augmented object");
            return out;
        }
        for (int n = 0; n <= N; ++n)
            if (!d.contraction.count(n)) {
                note(out, "contraction witness missing at level " + std::to_string(n));
                return out;
            }
        for (const auto& [n, s] : d.contraction) {
            if (n < 0 || n > N) {
                note(out, "contraction at unexpected level " + std::to_string(n));
                return out;
            }
            if (!(s.dom() == ss.object(n - 1)) || !(s.cod() == ss.object(n))) {
                note(out, "contraction s_{-1} at level " + std::to_string(n) +
                              " has wrong endpoints");
                return out;
            }
        }
        for (int n = 0; n <= N; ++n) {
            const auto& s = d.contraction.at(n);
            if (!(compose(ss.face(n, 0), s) == identity(ss.object(n - 1))))
                note(out, "contraction identity d_0 s_{-1} = 1 at n=" +
                              std::to_string(n));
            for (int i = 1; i <= n; ++i)
                if (!(compose(ss.face(n, i), s) ==
                      compose(d.contraction.at(n - 1), ss.face(n - 1, i - 1))))
                    note(out, "contraction identity d_i s_{-1} = s_{-1} d_{i-1} at n=" +
                                  std::to_string(n) + ", i=" + std::to_string(i));
        }
    }
    return out;
}

// ---- kernels ----------------------------------------------------------------

KernelObject simplicial_kernel(const TruncatedSimplicial& ss, int n, const Caps& caps) {
    if (n < 0 || n > ss.level() + 1)
        throw validation_error("simplicial kernel index out of range: " +
                               std::to_string(n));
    if (n == 0) {
        if (!ss.augmented())
            throw validation_error("K_0 is the augmentation object");
        Cone cone;
        cone.apex = ss.object(-1);
        return KernelObject{0, std::move(cone)};
    }
    if (!ss.augmented() && n == 1)
        throw validation_error("K_1 needs the augmentation");

    std::vector<FinObject> objects(static_cast<std::size_t>(n + 1), ss.object(n - 1));
    std::vector<std::string> names;
    for (int i = 0; i <= n; ++i) names.push_back("k" + std::to_string(i));
    std::vector<TupleEquation> eqs;
    for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i)
            eqs.push_back(TupleEquation{static_cast<std::size_t>(j), ss.face(n - 1, i),
                                        static_cast<std::size_t>(i),
                                        ss.face(n - 1, j - 1)});
    return KernelObject{n, tuple_limit(objects, eqs, names, caps)};
}

std::optional<FinMorphism> kernel_comparison_opt(const TruncatedSimplicial& ss, int n,
                                                 const Caps& caps) {
    if (n < 0 || n > ss.level())
        throw validation_error("kernel comparison level out of range: " +
                               std::to_string(n));
    if (n == 0) return ss.face(0, 0);
    const auto kernel = simplicial_kernel(ss, n, caps);
    std::vector<const FinMorphism*> legs;
    for (int i = 0; i <= n; ++i) legs.push_back(&ss.face(n, i));
    return mediate(kernel.cone, legs);
}

FinMorphism kernel_comparison(const TruncatedSimplicial& ss, int n, const Caps& caps) {
    auto cmp = kernel_comparison_opt(ss, n, caps);
    if (!cmp)
        throw validation_error("faces at level " + std::to_string(n) +
                               " do not satisfy the kernel relations");
    return *cmp;
}

bool is_exact_at(const TruncatedSimplicial& ss, int n, const ExtensionClass& E,
                 const Caps& caps) {
    auto cmp = kernel_comparison_opt(ss, n, caps);
    return cmp && member(E, *cmp);
}

bool is_resolution(const TruncatedSimplicial& ss, const ExtensionClass& E,
                   const Caps& caps) {
    return !first_exactness_failure(ss, E, caps).has_value();
}

std::optional<int> first_exactness_failure(const TruncatedSimplicial& ss,
                                           const ExtensionClass& E, const Caps& caps) {
    for (int n = 0; n <= ss.level(); ++n)
        if (!is_exact_at(ss, n, E, caps)) return n;
    return std::nullopt;
}

// ---- horns ------------------------------------------------------------------

HornObject horn_object(const TruncatedSimplicial& ss, int n, int k, const Caps& caps) {
    if (n < 1 || n > ss.level() || k < 0 || k > n)
        throw validation_error("horn indices out of range: (" + std::to_string(n) +
                               "," + std::to_string(k) + ")");
    if (n == 1) {
        Cone cone;
        cone.apex = ss.object(0);
        const std::string name = "a" + std::to_string(1 - k);
        cone.order = {name};
        cone.legs.emplace(name, identity(ss.object(0)));
        return HornObject{1, k, std::move(cone)};
    }
    std::vector<int> idx;
    for (int i = 0; i <= n; ++i)
        if (i != k) idx.push_back(i);
    std::vector<FinObject> objects(idx.size(), ss.object(n - 1));
    std::vector<std::string> names;
    std::map<int, std::size_t> pos;
    for (std::size_t p = 0; p < idx.size(); ++p) {
        names.push_back("a" + std::to_string(idx[p]));
        pos[idx[p]] = p;
    }
    std::vector<TupleEquation> eqs;
    for (int j : idx)
        for (int i : idx)
            if (i < j)
                eqs.push_back(TupleEquation{pos[j], ss.face(n - 1, i), pos[i],
                                            ss.face(n - 1, j - 1)});
    return HornObject{n, k, tuple_limit(objects, eqs, names, caps)};
}

std::optional<FinMorphism> horn_comparison_opt(const TruncatedSimplicial& ss, int n,
                                               int k, const Caps& caps) {
    if (n == 1) {
        if (k < 0 || k > 1)
            throw validation_error("horn indices out of range");
        return ss.face(1, k);
    }
    const auto horn = horn_object(ss, n, k, caps);
    std::vector<const FinMorphism*> legs;
    for (int i = 0; i <= n; ++i)
        if (i != k) legs.push_back(&ss.face(n, i));
    return mediate(horn.cone, legs);
}

FinMorphism horn_comparison(const TruncatedSimplicial& ss, int n, int k,
                            const Caps& caps) {
    auto cmp = horn_comparison_opt(ss, n, k, caps);
    if (!cmp)
        throw validation_error("faces at level " + std::to_string(n) +
                               " do not satisfy the horn relations");
    return *cmp;
}

KanReport kan_report(const TruncatedSimplicial& ss, const ExtensionClass& E,
                     const Caps& caps) {
    KanReport report;
    for (int n = 1; n <= ss.level(); ++n)
        for (int k = 0; k <= n; ++k) {
            auto cmp = horn_comparison_opt(ss, n, k, caps);
            const bool ok = cmp && member(E, *cmp);
            report.entries.push_back({n, k, ok});
            if (!ok) report.kan = false;
        }
    return report;
}

bool is_kan(const TruncatedSimplicial& ss, const ExtensionClass& E, const Caps& caps) {
    return kan_report(ss, E, caps).kan;
}

bool faces_in_class(const TruncatedSimplicial& ss, const ExtensionClass& E) {
    const int first = ss.augmented() ? 0 : 1;
    for (int n = first; n <= ss.level(); ++n)
        for (int i = 0; i <= n; ++i)
            if (!member(E, ss.face(n, i))) return false;
    return true;
}

// ---- shift ------------------------------------------------------------------

Shifted shift(const TruncatedSimplicial& ss) {
    if (!ss.augmented())
        throw validation_error("shift needs an augmented object");
    if (ss.level() < 1)
        throw validation_error("shift needs level >= 1");
    const int N = ss.level();

    TruncatedSimplicial::Data d;
    d.flavor = ss.flavor();
    d.level = N - 1;
    d.augmented = true;
    for (int n = -1; n <= N - 1; ++n) d.objects.push_back(ss.object(n + 1));
    for (int n = 0; n <= N - 1; ++n) {
        std::vector<FinMorphism> fs;
        for (int i = 0; i <= n; ++i) fs.push_back(ss.face(n + 1, i + 1));
        d.faces.emplace(n, std::move(fs));
    }
    if (ss.flavor() != Flavor::Semi) {
        for (int n = 0; n < N - 1; ++n) {
            std::vector<FinMorphism> sgs;
            for (int i = 0; i <= n; ++i) sgs.push_back(ss.degeneracy(n + 1, i + 1));
            d.degeneracies.emplace(n, std::move(sgs));
        }
        // s_0 of the original witnesses contractibility of the shift
        for (int n = 0; n <= N - 1; ++n) d.contraction.emplace(n, ss.degeneracy(n, 0));
    }

    Shifted out;
    out.shifted = TruncatedSimplicial(std::move(d));
    out.projection.dom = out.shifted;
    out.projection.cod = ss;
    for (int n = -1; n <= N - 1; ++n)
        out.projection.components.emplace(n, ss.face(n + 1, 0));
    return out;
}

// ---- contractibility --------------------------------------------------------

namespace {

bool contraction_valid(const TruncatedSimplicial& ss,
                       const std::map<int, FinMorphism>& wit) {
    for (int n = 0; n <= ss.level(); ++n) {
        auto it = wit.find(n);
        if (it == wit.end()) return false;
        const auto& s = it->second;
        if (!(s.dom() == ss.object(n - 1)) || !(s.cod() == ss.object(n))) return false;
        if (!(compose(ss.face(n, 0), s) == identity(ss.object(n - 1)))) return false;
        for (int i = 1; i <= n; ++i)
            if (!(compose(ss.face(n, i), s) ==
                  compose(wit.at(n - 1), ss.face(n - 1, i - 1))))
                return false;
    }
    return true;
}

} // namespace

ContractionSearch is_contractible(const TruncatedSimplicial& ss, const Caps& caps) {
    if (!ss.augmented())
        throw validation_error("contractibility is about augmented objects");

    ContractionSearch result;
    if (ss.has_contraction() && contraction_valid(ss, ss.contraction())) {
        result.status = ContractibleStatus::Witness;
        result.witness = ss.contraction();
        return result;
    }

    std::map<int, FinMorphism> wit;
    for (int n = 0; n <= ss.level(); ++n) {
        const auto& dom = ss.object(n - 1);
        const auto& cod = ss.object(n);
        // per-element candidates: intersect the pointwise constraints
        std::vector<std::vector<int>> candidates(dom.size());
        for (std::size_t xi = 0; xi < dom.size(); ++xi) {
            const int x = static_cast<int>(xi);
            for (std::size_t y = 0; y < cod.size(); ++y) {
                const int yi = static_cast<int>(y);
                if (ss.face(n, 0)(yi) != x) continue;
                bool ok = true;
                for (int i = 1; i <= n && ok; ++i)
                    if (ss.face(n, i)(yi) != wit.at(n - 1)(ss.face(n - 1, i - 1)(x)))
                        ok = false;
                if (ok) candidates[xi].push_back(yi);
            }
            if (candidates[xi].empty()) {
                result.status = ContractibleStatus::Absent;
                return result;
            }
        }
        std::size_t space = 1;
        bool overflow = false;
        for (const auto& c : candidates) {
            space *= c.size();
            if (space > caps.contraction_cap) {
                overflow = true;
                break;
            }
        }
        // lexicographically first assignment that is a morphism
        std::vector<std::size_t> choice(dom.size(), 0);
        std::optional<FinMorphism> found;
        std::size_t tried = 0;
        while (true) {
            std::vector<int> t(dom.size());
            for (std::size_t i = 0; i < dom.size(); ++i) t[i] = candidates[i][choice[i]];
            ++tried;
            if (is_homomorphism(dom, cod, t)) {
                found = FinMorphism(dom, cod, std::move(t));
                break;
            }
            if (tried >= caps.contraction_cap) {
                overflow = true;
                break;
            }
            if (dom.size() == 0) break;
            std::size_t k = dom.size();
            bool rolled = true;
            while (k > 0) {
                --k;
                if (++choice[k] < candidates[k].size()) {
                    rolled = false;
                    break;
                }
                choice[k] = 0;
            }
            if (rolled) break;
        }
        if (found) {
            wit.emplace(n, std::move(*found));
            continue;
        }
        result.status =
            overflow ? ContractibleStatus::ExceededCap : ContractibleStatus::Absent;
        return result;
    }
    result.status = ContractibleStatus::Witness;
    result.witness = std::move(wit);
    return result;
}

// ---- truncation functors ----------------------------------------------------

Cube arr_n(const TruncatedSimplicial& ss, int n) {
    if (!ss.augmented())
        throw validation_error("arr_n needs an augmented object");
    if (n < 0 || n > ss.level() + 1)
        throw validation_error("arr_" + std::to_string(n) + " needs level >= " +
                               std::to_string(n - 1));
    std::vector<FinObject> objects(1u << n);
    Cube::GeneratorMap gen;
    for (SubsetMask s = 0; s < (1u << n); ++s)
        objects[s] = ss.object(__builtin_popcount(s) - 1);
    for (SubsetMask s = 0; s < (1u << n); ++s)
        for (int i = 0; i < n; ++i) {
            if (s & (1u << i)) continue;
            const int level = __builtin_popcount(s);
            const int pos = __builtin_popcount(s & ((1u << i) - 1u));
            gen.emplace(std::make_pair(s, i), ss.face(level, pos));
        }
    return Cube::unchecked(n, std::move(objects), std::move(gen));
}

TruncatedSimplicial canonical_augmentation(const TruncatedSimplicial& ss) {
    if (ss.augmented())
        throw validation_error("object is already augmented");
    auto d = ss.data();
    d.augmented = true;
    const FinObject point = one_point_object(ss.object(0).signature_or_null());
    d.objects.insert(d.objects.begin(), point);
    std::vector<int> t(ss.object(0).size(), 0);
    d.faces.emplace(0, std::vector<FinMorphism>{FinMorphism(ss.object(0), point, t)});
    return TruncatedSimplicial(std::move(d));
}

TruncatedSimplicial strip_augmentation(const TruncatedSimplicial& ss) {
    if (!ss.augmented())
        throw validation_error("object is not augmented");
    auto d = ss.data();
    d.augmented = false;
    d.objects.erase(d.objects.begin());
    d.faces.erase(0);
    d.contraction.clear();
    return TruncatedSimplicial(std::move(d));
}

// ---- Tierney-Vogel ----------------------------------------------------------

CoverChooser identity_cover() {
    return [](const FinObject& x) { return identity(x); };
}

TruncatedSimplicial tv_resolution(const FinObject& X, const ExtensionClass& E,
                                  const CoverChooser& chooser, int N, const Caps& caps) {
    if (N < 0) throw validation_error("tv_resolution: negative level");

    TruncatedSimplicial::Data d;
    d.flavor = Flavor::Quasi;
    d.level = N;
    d.augmented = true;
    d.objects.push_back(X);

    std::vector<FinMorphism> covers; // cover at each level 0..N

    auto partial = [&](int built_level) {
        auto copy = d;
        copy.level = built_level;
        copy.degeneracies.clear();
        copy.flavor = Flavor::Semi;
        return TruncatedSimplicial::unchecked(std::move(copy));
    };

    for (int n = 0; n <= N; ++n) {
        FinObject target = X;
        std::optional<KernelObject> kernel;
        if (n > 0) {
            kernel = simplicial_kernel(partial(n - 1), n, caps);
            target = kernel->apex();
        }
        FinMorphism cover = chooser(target);
        if (!(cover.cod() == target))
            throw validation_error("cover chooser returned a morphism onto the wrong "
                                   "object at level " + std::to_string(n));
        if (!member(E, cover))
            throw validation_error("cover at level " + std::to_string(n) +
                                   " is not in the class");
        covers.push_back(cover);
        d.objects.push_back(cover.dom());
        std::vector<FinMorphism> faces;
        if (n == 0) {
            faces.push_back(cover);
        } else {
            for (int i = 0; i <= n; ++i)
                faces.push_back(compose(kernel->leg(i), cover));
        }
        d.faces.emplace(n, std::move(faces));
    }

    // degeneracies through sections of the covers
    for (int n = 0; n < N; ++n) {
        const auto section = find_section(covers[static_cast<std::size_t>(n + 1)]);
        if (!section)
            throw validation_error(
                "cover at level " + std::to_string(n + 1) +
                " has no homomorphic section; cannot induce degeneracies");
        const auto kernel = simplicial_kernel(partial(n), n + 1, caps);
        const auto at = [&](int level, int i) -> const FinMorphism& {
            return d.faces.at(level)[static_cast<std::size_t>(i)];
        };
        std::vector<FinMorphism> sgs;
        for (int i = 0; i <= n; ++i) {
            std::vector<FinMorphism> comps;
            const auto& An = d.objects[static_cast<std::size_t>(n + 1)];
            for (int j = 0; j <= n + 1; ++j) {
                if (j == i || j == i + 1) {
                    comps.push_back(identity(An));
                } else if (j < i) {
                    comps.push_back(compose(
                        d.degeneracies.at(n - 1)[static_cast<std::size_t>(i - 1)],
                        at(n, j)));
                } else {
                    comps.push_back(compose(
                        d.degeneracies.at(n - 1)[static_cast<std::size_t>(i)],
                        at(n, j - 1)));
                }
            }
            std::vector<const FinMorphism*> ptrs;
            for (const auto& c : comps) ptrs.push_back(&c);
            auto u = mediate(kernel.cone, ptrs);
            if (!u)
                throw validation_error("degeneracy tuple fails the kernel relations "
                                       "at level " + std::to_string(n));
            sgs.push_back(compose(*section, *u));
        }
        d.degeneracies.emplace(n, std::move(sgs));
    }

    return TruncatedSimplicial(std::move(d));
}

bool satisfies_full_identities(const TruncatedSimplicial& ss) {
    if (ss.flavor() == Flavor::Semi) return false;
    for (int n = 0; n + 1 < ss.level(); ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                if (!(compose(ss.degeneracy(n + 1, i), ss.degeneracy(n, j)) ==
                      compose(ss.degeneracy(n + 1, j + 1), ss.degeneracy(n, i))))
                    return false;
    return true;
}

// ---- squares object ---------------------------------------------------------

std::vector<SquareArrow> squares_object_exactness(const TruncatedSimplicial& ss,
                                                  const Caps& caps) {
    if (!ss.augmented())
        throw validation_error("the squares object needs an augmented object");
    std::vector<SquareArrow> out;
    if (ss.level() < 1) return out;
    const auto minus = shift(ss).shifted;

    // index 0: the augmentation square of the squares object
    out.push_back(SquareArrow(ss.face(1, 0), ss.face(0, 0), ss.face(1, 1),
                              ss.face(0, 0)));

    for (int n = 1; n <= ss.level() - 1; ++n) {
        const auto k_minus = simplicial_kernel(minus, n, caps);
        const auto k_full = simplicial_kernel(ss, n, caps);
        std::vector<FinMorphism> legs;
        for (int i = 0; i <= n; ++i)
            legs.push_back(compose(ss.face(n, 0), k_minus.leg(i)));
        std::vector<const FinMorphism*> ptrs;
        for (const auto& l : legs) ptrs.push_back(&l);
        auto r = mediate(k_full.cone, ptrs);
        if (!r)
            throw validation_error("squares-object kernel fails to factor at level " +
                                   std::to_string(n));
        out.push_back(SquareArrow(ss.face(n + 1, 0), *r, kernel_comparison(minus, n, caps),
                                  kernel_comparison(ss, n, caps)));
    }
    return out;
}

std::string describe(const TruncatedSimplicial& ss) {
    std::ostringstream os;
    os << flavor_name(ss.flavor()) << "-simplicial(level=" << ss.level();
    os << (ss.augmented() ? ", augmented" : "");
    for (int n = ss.lowest_level(); n <= ss.level(); ++n)
        os << ", |A_" << n << "|=" << ss.object(n).size();
    os << ")";
    return os.str();
}

} // namespace cubex
