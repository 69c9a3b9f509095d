#pragma once

#include <stdexcept>
#include <string>

namespace cubex {

// Input data violates a structural invariant (bad table, non-commuting
// square, broken simplicial identity, ...). The message names the
// violated invariant and, where applicable, the offending indices.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// A computation would exceed a configured cap (limit apex size,
// search space, universe closure). Never silently truncated.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// An operation needs structure the inputs do not carry,
// e.g. a kernel of a morphism between plain sets.
class structure_error : public std::runtime_error {
public:
    explicit structure_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cubex
