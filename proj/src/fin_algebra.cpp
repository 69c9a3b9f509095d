#include "cubex/fin_algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cubex/errors.hpp"

namespace cubex {

Signature::Signature(std::string name, std::vector<OpSymbol> ops)
    : name_(std::move(name)), ops_(std::move(ops)) {
    std::sort(ops_.begin(), ops_.end(),
              [](const OpSymbol& a, const OpSymbol& b) { return a.name < b.name; });
    std::set<std::string> seen;
    for (const auto& op : ops_) {
        if (op.arity < 0)
            throw validation_error("signature '" + name_ + "': op '" + op.name +
                                   "' has negative arity");
        if (!seen.insert(op.name).second)
            throw validation_error("signature '" + name_ + "': duplicate op name '" +
                                   op.name + "'");
    }
    if (is_group()) {
        auto has = [&](const char* n, int k) {
            return std::any_of(ops_.begin(), ops_.end(), [&](const OpSymbol& o) {
                return o.name == n && o.arity == k;
            });
        };
        if (ops_.size() != 3 || !has("e", 0) || !has("inv", 1) || !has("mul", 2))
            throw validation_error(
                "signature 'group' must consist of ops e/0, inv/1, mul/2");
    }
}

std::optional<std::size_t> Signature::first_constant() const {
    for (std::size_t i = 0; i < ops_.size(); ++i)
        if (ops_[i].arity == 0) return i;
    return std::nullopt;
}

std::size_t table_position(const std::vector<int>& args, std::size_t carrier) {
    std::size_t pos = 0;
    for (int a : args) pos = pos * carrier + static_cast<std::size_t>(a);
    return pos;
}

namespace {

std::size_t pow_size(std::size_t base, int exp) {
    std::size_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// Iterates over all index tuples of the given arity; f receives each tuple.
template <typename F>
void for_each_tuple(std::size_t carrier, int arity, F&& f) {
    std::vector<int> tuple(static_cast<std::size_t>(arity), 0);
    if (arity == 0) {
        f(tuple);
        return;
    }
    if (carrier == 0) return;
    while (true) {
        f(tuple);
        int k = arity - 1;
        while (k >= 0) {
            auto& v = tuple[static_cast<std::size_t>(k)];
            if (++v < static_cast<int>(carrier)) break;
            v = 0;
            --k;
        }
        if (k < 0) break;
    }
}

void check_group_axioms(const FinObject& x) {
    const auto& sig = x.structure().signature;
    std::size_t e_op = 0, inv_op = 0, mul_op = 0;
    for (std::size_t i = 0; i < sig.ops().size(); ++i) {
        if (sig.ops()[i].name == "e") e_op = i;
        if (sig.ops()[i].name == "inv") inv_op = i;
        if (sig.ops()[i].name == "mul") mul_op = i;
    }
    const int n = static_cast<int>(x.size());
    auto mul = [&](int a, int b) { return x.apply(mul_op, {a, b}); };
    const int e = x.apply(e_op, {});
    for (int a = 0; a < n; ++a) {
        if (mul(e, a) != a || mul(a, e) != a)
            throw validation_error("group axioms: '" + x.label(a) +
                                   "' does not have e as identity");
        const int ia = x.apply(inv_op, {a});
        if (mul(ia, a) != e || mul(a, ia) != e)
            throw validation_error("group axioms: inv('" + x.label(a) +
                                   "') is not an inverse");
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul(a, mul(b, c)) != mul(mul(a, b), c))
                    throw validation_error("group axioms: associativity fails at ('" +
                                           x.label(a) + "','" + x.label(b) + "','" +
                                           x.label(c) + "')");
    }
}

} // namespace

FinObject::FinObject(std::vector<std::string> labels) : labels_(std::move(labels)) {
    validate();
}

FinObject::FinObject(std::vector<std::string> labels, Structure structure)
    : labels_(std::move(labels)), structure_(std::move(structure)) {
    validate();
}

void FinObject::validate() const {
    std::set<std::string> seen;
    for (const auto& l : labels_)
        if (!seen.insert(l).second)
            throw validation_error("duplicate element label '" + l + "'");
    if (!structure_) return;

    const auto& sig = structure_->signature;
    if (structure_->tables.size() != sig.ops().size())
        throw validation_error("structure has " + std::to_string(structure_->tables.size()) +
                               " tables for " + std::to_string(sig.ops().size()) + " ops");
    if (labels_.empty() && sig.first_constant())
        throw validation_error("empty carrier with a constant in the signature");
    for (std::size_t i = 0; i < sig.ops().size(); ++i) {
        const auto& op = sig.ops()[i];
        const auto& tab = structure_->tables[i].entries;
        const std::size_t want = pow_size(labels_.size(), op.arity);
        if (tab.size() != want)
            throw validation_error("op '" + op.name + "': table has " +
                                   std::to_string(tab.size()) + " entries, expected " +
                                   std::to_string(want));
        for (int v : tab)
            if (v < 0 || v >= static_cast<int>(labels_.size()))
                throw validation_error("op '" + op.name + "': table entry " +
                                       std::to_string(v) + " out of range");
    }
    if (sig.is_group()) check_group_axioms(*this);
}

std::optional<int> FinObject::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<int>(i);
    return std::nullopt;
}

bool FinObject::same_signature(const FinObject& other) const {
    if (!structure_ && !other.structure_) return true;
    if (!structure_ || !other.structure_) return false;
    return structure_->signature == other.structure_->signature;
}

int FinObject::apply(std::size_t op, const std::vector<int>& args) const {
    const auto& tab = structure_->tables[op].entries;
    return tab[table_position(args, labels_.size())];
}

int FinObject::designated_constant() const {
    if (!structure_)
        throw structure_error("object is a plain set, no designated constant");
    auto c = structure_->signature.first_constant();
    if (!c)
        throw structure_error("signature '" + structure_->signature.name() +
                              "' has no constant");
    return apply(*c, {});
}

FinObject canonical_set(int n) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return FinObject(std::move(labels));
}

FinObject one_point_object(const Signature* sig) {
    std::vector<std::string> labels{"*"};
    if (!sig) return FinObject(std::move(labels));
    Structure st;
    st.signature = *sig;
    for (const auto& op : sig->ops()) {
        OpTable tab;
        tab.entries.assign(pow_size(1, op.arity), 0);
        st.tables.push_back(std::move(tab));
    }
    return FinObject(std::move(labels), std::move(st));
}

std::string canonical_key(const FinObject& x) {
    std::ostringstream os;
    for (std::size_t i = 0; i < x.size(); ++i) os << '"' << x.label(static_cast<int>(i)) << '"';
    if (x.has_structure()) {
        const auto& st = x.structure();
        os << "!" << st.signature.name();
        for (std::size_t op = 0; op < st.signature.ops().size(); ++op) {
            os << "/" << st.signature.ops()[op].name << ":";
            for (int v : st.tables[op].entries) os << v << ",";
        }
    }
    return os.str();
}

std::string describe(const FinObject& x) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) os << ",";
        os << x.label(static_cast<int>(i));
    }
    os << "}";
    if (x.has_structure()) os << ":" << x.structure().signature.name();
    return os.str();
}

} // namespace cubex
