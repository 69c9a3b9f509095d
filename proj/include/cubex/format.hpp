#pragma once

#include <map>
#include <string>
#include <vector>

#include "cubex/errors.hpp"
#include "cubex/simplicial.hpp"

namespace cubex {

// A parsed .cx document: named declarations plus metadata. The format is
// line-oriented with a `cubex-format 1` header; see docs/FORMAT.md.
struct Document {
    int version = 1;
    std::map<std::string, std::string> metadata;
    std::map<std::string, FinObject> objects;
    std::map<std::string, FinMorphism> morphisms;
    std::map<std::string, Cube> cubes;
    std::map<std::string, TruncatedSimplicial> simplicials;

    friend bool operator==(const Document&, const Document&) = default;
};

// Thrown with position information: "line L, column C: message".
class parse_error : public validation_error {
public:
    parse_error(int line, int column, const std::string& message)
        : validation_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// Parses and validates; every module invariant is enforced at load and
// reported with the offending position.
Document parse_document(const std::string& text);

// Canonical form: sorted metadata, declarations sorted by kind then name,
// fixed spacing and quoting. parse(serialize(d)) == d and serialization is
// byte-stable under reparsing.
std::string serialize_document(const Document& doc);

Document load_document(const std::string& path);
void save_document(const Document& doc, const std::string& path);

} // namespace cubex
