#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cubex {

// An operation symbol with its arity. Arity 0 is a constant.
struct OpSymbol {
    std::string name;
    int arity = 0;

    friend bool operator==(const OpSymbol&, const OpSymbol&) = default;
};

// A finite algebraic signature. Ops are kept sorted by name, so two
// signatures are interchangeable iff they compare equal. The name
// "group" is special: objects carrying it are checked against the
// group axioms (ops must be e/0, inv/1, mul/2).
class Signature {
public:
    Signature() = default;
    Signature(std::string name, std::vector<OpSymbol> ops);

    const std::string& name() const { return name_; }
    const std::vector<OpSymbol>& ops() const { return ops_; }
    bool is_group() const { return name_ == "group"; }

    // Index of the first constant (arity-0) op, if any. This is the
    // designated point used by kernels.
    std::optional<std::size_t> first_constant() const;

    friend bool operator==(const Signature&, const Signature&) = default;

private:
    std::string name_;
    std::vector<OpSymbol> ops_; // sorted by name, names unique
};

// One total operation table. For an op of arity k on a carrier of size m
// the table has m^k entries in row-major order: the tuple (i_0,...,i_{k-1})
// sits at position i_0*m^{k-1} + ... + i_{k-1}.
struct OpTable {
    std::vector<int> entries;

    friend bool operator==(const OpTable&, const OpTable&) = default;
};

// The optional algebraic structure of a FinObject: a signature together
// with one table per op, in signature op order.
struct Structure {
    Signature signature;
    std::vector<OpTable> tables;

    friend bool operator==(const Structure&, const Structure&) = default;
};

// An object of the working category: a finite carrier of labelled
// elements, optionally an algebra given by operation tables.
// Elements are addressed by index 0..size-1; labels are unique.
class FinObject {
public:
    FinObject() = default;
    explicit FinObject(std::vector<std::string> labels);
    FinObject(std::vector<std::string> labels, Structure structure);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
    std::optional<int> index_of(const std::string& label) const;

    bool has_structure() const { return structure_.has_value(); }
    const Structure& structure() const { return *structure_; }
    const Signature* signature_or_null() const {
        return structure_ ? &structure_->signature : nullptr;
    }
    bool same_signature(const FinObject& other) const;

    // Applies op number `op` of the signature to the index tuple `args`.
    int apply(std::size_t op, const std::vector<int>& args) const;

    // Index of the designated constant (kernels, canonical augmentation).
    // Throws structure_error if the object is not pointed.
    int designated_constant() const;

    friend bool operator==(const FinObject&, const FinObject&) = default;

private:
    void validate() const;

    std::vector<std::string> labels_;
    std::optional<Structure> structure_;
};

// Carrier {"0","1",...,"n-1"} without structure.
FinObject canonical_set(int n);

// The one-point object of the given signature (all ops land on the
// single element); plain one-point set when sig is null.
FinObject one_point_object(const Signature* sig);

// Row-major position of an index tuple in an op table.
std::size_t table_position(const std::vector<int>& args, std::size_t carrier);

std::string describe(const FinObject& x);

// Injective serialization (labels, signature, all tables); used to key
// objects in indexes where distinct objects must never collide.
std::string canonical_key(const FinObject& x);

} // namespace cubex
