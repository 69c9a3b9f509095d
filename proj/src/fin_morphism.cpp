#include "cubex/fin_morphism.hpp"

#include <algorithm>
#include <sstream>

#include "cubex/errors.hpp"

namespace cubex {

FinMorphism::FinMorphism(FinObject dom, FinObject cod, std::vector<int> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
    if (table_.size() != dom_.size())
        throw validation_error("morphism table has " + std::to_string(table_.size()) +
                               " entries for a domain of size " +
                               std::to_string(dom_.size()));
    for (int v : table_)
        if (v < 0 || v >= static_cast<int>(cod_.size()))
            throw validation_error("morphism table entry " + std::to_string(v) +
                                   " out of range for codomain of size " +
                                   std::to_string(cod_.size()));
    if (!dom_.same_signature(cod_))
        throw validation_error("morphism between objects of different signatures");
    if (!is_homomorphism(dom_, cod_, table_))
        throw validation_error("morphism table is not a homomorphism");
}

FinMorphism identity(const FinObject& x) {
    std::vector<int> t(x.size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = static_cast<int>(i);
    return FinMorphism(x, x, std::move(t));
}

FinMorphism compose(const FinMorphism& f, const FinMorphism& g) {
    if (!(g.cod() == f.dom()))
        throw validation_error("composition error: cod(g) != dom(f)");
    std::vector<int> t(g.dom().size());
    for (std::size_t i = 0; i < t.size(); ++i)
        t[i] = f(g(static_cast<int>(i)));
    return FinMorphism(g.dom(), f.cod(), std::move(t));
}

bool is_surjective(const FinMorphism& f) {
    std::vector<char> hit(f.cod().size(), 0);
    for (int v : f.table()) hit[static_cast<std::size_t>(v)] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool is_injective(const FinMorphism& f) {
    std::vector<char> hit(f.cod().size(), 0);
    for (int v : f.table()) {
        if (hit[static_cast<std::size_t>(v)]) return false;
        hit[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

bool is_iso(const FinMorphism& f) {
    return f.dom().size() == f.cod().size() && is_injective(f);
}

bool is_homomorphism(const FinObject& dom, const FinObject& cod,
                     const std::vector<int>& table) {
    if (!dom.has_structure() || !cod.has_structure()) return true;
    const auto& sig = dom.structure().signature;
    for (std::size_t op = 0; op < sig.ops().size(); ++op) {
        const int arity = sig.ops()[op].arity;
        std::vector<int> args(static_cast<std::size_t>(arity), 0);
        std::vector<int> mapped(static_cast<std::size_t>(arity), 0);
        // walk all argument tuples
        bool done = false;
        if (arity > 0 && dom.size() == 0) continue;
        while (!done) {
            for (int k = 0; k < arity; ++k)
                mapped[static_cast<std::size_t>(k)] =
                    table[static_cast<std::size_t>(args[static_cast<std::size_t>(k)])];
            if (table[static_cast<std::size_t>(dom.apply(op, args))] != cod.apply(op, mapped))
                return false;
            int k = arity - 1;
            while (k >= 0) {
                auto& v = args[static_cast<std::size_t>(k)];
                if (++v < static_cast<int>(dom.size())) break;
                v = 0;
                --k;
            }
            done = (k < 0);
            if (arity == 0) done = true;
        }
    }
    return true;
}

std::optional<FinMorphism> find_section(const FinMorphism& f, bool structure_free) {
    const std::size_t n = f.cod().size();
    // candidate values per position: the fibre of f over that element
    std::vector<std::vector<int>> fibres(n);
    for (std::size_t i = 0; i < f.dom().size(); ++i)
        fibres[static_cast<std::size_t>(f(static_cast<int>(i)))].push_back(
            static_cast<int>(i));
    for (const auto& fib : fibres)
        if (fib.empty()) return std::nullopt; // not surjective, no section

    const bool need_hom =
        !structure_free && f.dom().has_structure() && f.cod().has_structure();
    if (!need_hom) {
        std::vector<int> t(n);
        for (std::size_t i = 0; i < n; ++i) t[i] = fibres[i].front();
        if (structure_free) {
            // bypass the hom check: wrap the carriers as plain sets
            FinObject d(f.cod().labels());
            FinObject c(f.dom().labels());
            return FinMorphism(std::move(d), std::move(c), std::move(t));
        }
        return FinMorphism(f.cod(), f.dom(), std::move(t));
    }

    // enumerate fibre products in lexicographic table order
    std::vector<std::size_t> choice(n, 0);
    while (true) {
        std::vector<int> t(n);
        for (std::size_t i = 0; i < n; ++i) t[i] = fibres[i][choice[i]];
        if (is_homomorphism(f.cod(), f.dom(), t))
            return FinMorphism(f.cod(), f.dom(), std::move(t));
        std::size_t k = n;
        while (k > 0) {
            --k;
            if (++choice[k] < fibres[k].size()) break;
            choice[k] = 0;
            if (k == 0) return std::nullopt;
        }
        if (n == 0) return std::nullopt;
    }
}

KernelInclusion compute_kernel(const FinMorphism& f) {
    if (!f.dom().has_structure() || !f.cod().has_structure())
        throw structure_error("kernel needs pointed algebras on both sides");
    const int point = f.cod().designated_constant();
    std::vector<int> members;
    for (std::size_t i = 0; i < f.dom().size(); ++i)
        if (f(static_cast<int>(i)) == point) members.push_back(static_cast<int>(i));

    std::vector<int> back(f.dom().size(), -1);
    for (std::size_t j = 0; j < members.size(); ++j)
        back[static_cast<std::size_t>(members[j])] = static_cast<int>(j);

    std::vector<std::string> labels;
    for (int m : members) labels.push_back(f.dom().label(m));

    const auto& sig = f.dom().structure().signature;
    Structure st;
    st.signature = sig;
    for (std::size_t op = 0; op < sig.ops().size(); ++op) {
        const int arity = sig.ops()[op].arity;
        OpTable tab;
        std::size_t count = 1;
        for (int k = 0; k < arity; ++k) count *= members.size();
        tab.entries.reserve(count);
        std::vector<std::size_t> idx(static_cast<std::size_t>(arity), 0);
        for (std::size_t pos = 0; pos < count; ++pos) {
            std::vector<int> args(static_cast<std::size_t>(arity));
            std::size_t rest = pos;
            for (int k = arity - 1; k >= 0; --k) {
                args[static_cast<std::size_t>(k)] =
                    members[rest % members.size()];
                rest /= members.size();
            }
            const int out = f.dom().apply(op, args);
            if (back[static_cast<std::size_t>(out)] < 0)
                throw structure_error("kernel fibre is not closed under op '" +
                                      sig.ops()[op].name + "'");
            tab.entries.push_back(back[static_cast<std::size_t>(out)]);
        }
        st.tables.push_back(std::move(tab));
    }

    FinObject ker(labels, std::move(st));
    FinMorphism incl(ker, f.dom(), members);
    return {std::move(ker), std::move(incl)};
}

FinMorphism restrict_to_kernels(const FinMorphism& f, const KernelInclusion& ka,
                                const KernelInclusion& kb) {
    std::vector<int> t;
    t.reserve(ka.object.size());
    for (std::size_t j = 0; j < ka.object.size(); ++j) {
        const int image = f(ka.inclusion(static_cast<int>(j)));
        const auto pos = kb.object.index_of(f.cod().label(image));
        if (!pos)
            throw validation_error("morphism does not restrict to the kernels");
        t.push_back(*pos);
    }
    return FinMorphism(ka.object, kb.object, std::move(t));
}

std::string canonical_key(const FinMorphism& f) {
    std::ostringstream os;
    os << canonical_key(f.dom()) << ">" << canonical_key(f.cod()) << "@";
    for (int v : f.table()) os << v << ",";
    return os.str();
}

std::string describe(const FinMorphism& f) {
    std::ostringstream os;
    os << describe(f.dom()) << " -> " << describe(f.cod()) << " [";
    for (std::size_t i = 0; i < f.table().size(); ++i) {
        if (i) os << ",";
        os << f.cod().label(f.table()[i]);
    }
    os << "]";
    return os.str();
}

} // namespace cubex
