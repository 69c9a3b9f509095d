#include "cubex/format.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "cubex/errors.hpp"

namespace cubex {

namespace {

enum class Tok { Ident, Int, String, LBrace, RBrace, LBracket, RBracket, Comma, Arrow, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    long value = 0;
    int line = 1;
    int column = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }
    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        skip_space();
        current_.line = line_;
        current_.column = column_;
        if (pos_ >= text_.size()) {
            current_.kind = Tok::End;
            current_.text = "<end of input>";
            return;
        }
        const char c = text_[pos_];
        if (c == '{') return punct(Tok::LBrace, "{");
        if (c == '}') return punct(Tok::RBrace, "}");
        if (c == '[') return punct(Tok::LBracket, "[");
        if (c == ']') return punct(Tok::RBracket, "]");
        if (c == ',') return punct(Tok::Comma, ",");
        if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
            current_.kind = Tok::Arrow;
            current_.text = "->";
            bump();
            bump();
            return;
        }
        if (c == '"') return lex_string();
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '-' && pos_ + 1 < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))))
            return lex_int();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
            return lex_ident();
        throw parse_error(line_, column_, std::string("unexpected character '") + c + "'");
    }

    void punct(Tok kind, const char* text) {
        current_.kind = kind;
        current_.text = text;
        bump();
    }

    void lex_string() {
        bump(); // opening quote
        std::string out;
        while (pos_ < text_.size() && text_[pos_] != '"') {
            char c = text_[pos_];
            if (c == '\n')
                throw parse_error(line_, column_, "unterminated string");
            if (c == '\\') {
                bump();
                if (pos_ >= text_.size())
                    throw parse_error(line_, column_, "unterminated escape");
                const char e = text_[pos_];
                if (e == '"' || e == '\\')
                    out.push_back(e);
                else
                    throw parse_error(line_, column_, "unknown escape sequence");
            } else {
                out.push_back(c);
            }
            bump();
        }
        if (pos_ >= text_.size())
            throw parse_error(current_.line, current_.column, "unterminated string");
        bump(); // closing quote
        current_.kind = Tok::String;
        current_.text = std::move(out);
    }

    void lex_int() {
        std::string digits;
        if (text_[pos_] == '-') {
            digits.push_back('-');
            bump();
        }
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            digits.push_back(text_[pos_]);
            bump();
        }
        current_.kind = Tok::Int;
        current_.text = digits;
        current_.value = std::stol(digits);
    }

    void lex_ident() {
        std::string out;
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-') {
                // a '-' only continues an identifier when not starting "->"
                if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') break;
                out.push_back(c);
                bump();
            } else {
                break;
            }
        }
        current_.kind = Tok::Ident;
        current_.text = std::move(out);
    }

    void skip_space() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') bump();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                bump();
            } else {
                break;
            }
        }
    }

    void bump() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
    Token current_;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    Document parse() {
        expect_ident("cubex-format");
        const auto version = expect(Tok::Int);
        if (version.value != 1)
            throw parse_error(version.line, version.column,
                              "unsupported format version " + version.text);
        doc_.version = 1;
        while (lex_.peek().kind != Tok::End) {
            const auto head = expect(Tok::Ident);
            if (head.text == "meta")
                parse_meta();
            else if (head.text == "object")
                parse_object(head);
            else if (head.text == "morphism")
                parse_morphism(head);
            else if (head.text == "cube")
                parse_cube(head);
            else if (head.text == "simplicial")
                parse_simplicial(head);
            else
                throw parse_error(head.line, head.column,
                                  "unknown declaration '" + head.text + "'");
        }
        return std::move(doc_);
    }

private:
    Token expect(Tok kind) {
        const auto t = lex_.take();
        if (t.kind != kind)
            throw parse_error(t.line, t.column, "unexpected token '" + t.text + "'");
        return t;
    }

    Token expect_ident(const std::string& word) {
        const auto t = expect(Tok::Ident);
        if (t.text != word)
            throw parse_error(t.line, t.column,
                              "expected '" + word + "', found '" + t.text + "'");
        return t;
    }

    bool peek_ident(const std::string& word) {
        return lex_.peek().kind == Tok::Ident && lex_.peek().text == word;
    }

    std::string fresh_name(const Token& name) {
        if (doc_.objects.count(name.text) || doc_.morphisms.count(name.text) ||
            doc_.cubes.count(name.text) || doc_.simplicials.count(name.text))
            throw parse_error(name.line, name.column,
                              "duplicate declaration name '" + name.text + "'");
        return name.text;
    }

    std::vector<std::string> string_list() {
        expect(Tok::LBracket);
        std::vector<std::string> out;
        while (lex_.peek().kind == Tok::String) out.push_back(lex_.take().text);
        expect(Tok::RBracket);
        return out;
    }

    const FinObject& object_ref(const Token& t) {
        auto it = doc_.objects.find(t.text);
        if (it == doc_.objects.end())
            throw parse_error(t.line, t.column, "unknown object '" + t.text + "'");
        return it->second;
    }

    std::vector<int> table_from_labels(const Token& where,
                                       const std::vector<std::string>& labels,
                                       const FinObject& cod) {
        std::vector<int> table;
        table.reserve(labels.size());
        for (const auto& l : labels) {
            auto idx = cod.index_of(l);
            if (!idx)
                throw parse_error(where.line, where.column,
                                  "label \"" + l + "\" is not an element of the codomain");
            table.push_back(*idx);
        }
        return table;
    }

    void parse_meta() {
        const auto key = expect(Tok::String);
        const auto value = expect(Tok::String);
        if (!doc_.metadata.emplace(key.text, value.text).second)
            throw parse_error(key.line, key.column,
                              "duplicate metadata key \"" + key.text + "\"");
    }

    void parse_object(const Token&) {
        const auto name = expect(Tok::Ident);
        fresh_name(name);
        expect(Tok::LBrace);
        expect_ident("elements");
        std::vector<std::string> labels;
        while (lex_.peek().kind == Tok::String) labels.push_back(lex_.take().text);

        std::optional<Structure> structure;
        if (peek_ident("structure")) {
            lex_.take();
            const auto signame = expect(Tok::Ident);
            expect(Tok::LBrace);
            std::vector<OpSymbol> ops;
            std::vector<std::vector<std::string>> tables;
            while (peek_ident("op")) {
                lex_.take();
                const auto opname = expect(Tok::Ident);
                const auto arity = expect(Tok::Int);
                ops.push_back({opname.text, static_cast<int>(arity.value)});
                tables.push_back(string_list());
            }
            expect(Tok::RBrace);
            try {
                Structure st;
                st.signature = Signature(signame.text, ops);
                // tables arrive in declaration order; realign to the sorted ops
                st.tables.resize(ops.size());
                for (std::size_t p = 0; p < ops.size(); ++p) {
                    std::size_t sorted_pos = 0;
                    for (std::size_t q = 0; q < st.signature.ops().size(); ++q)
                        if (st.signature.ops()[q].name == ops[p].name) sorted_pos = q;
                    OpTable tab;
                    for (const auto& l : tables[p]) {
                        int idx = -1;
                        for (std::size_t e = 0; e < labels.size(); ++e)
                            if (labels[e] == l) idx = static_cast<int>(e);
                        if (idx < 0)
                            throw validation_error("op '" + ops[p].name +
                                                   "': entry \"" + l +
                                                   "\" is not an element");
                        tab.entries.push_back(idx);
                    }
                    st.tables[sorted_pos] = std::move(tab);
                }
                structure = std::move(st);
            } catch (const validation_error& e) {
                throw parse_error(signame.line, signame.column, e.what());
            }
        }
        expect(Tok::RBrace);
        try {
            doc_.objects.emplace(name.text,
                                 structure ? FinObject(labels, *structure)
                                           : FinObject(labels));
        } catch (const validation_error& e) {
            throw parse_error(name.line, name.column, e.what());
        }
    }

    void parse_morphism(const Token&) {
        const auto name = expect(Tok::Ident);
        fresh_name(name);
        expect(Tok::LBrace);
        expect_ident("dom");
        const auto dom = object_ref(expect(Tok::Ident));
        expect_ident("cod");
        const auto cod = object_ref(expect(Tok::Ident));
        expect_ident("map");
        const auto where = lex_.peek();
        const auto labels = string_list();
        expect(Tok::RBrace);
        try {
            doc_.morphisms.emplace(
                name.text, FinMorphism(dom, cod, table_from_labels(where, labels, cod)));
        } catch (const validation_error& e) {
            throw parse_error(name.line, name.column, e.what());
        }
    }

    SubsetMask subset(int dim) {
        const auto open = expect(Tok::LBracket);
        SubsetMask mask = 0;
        bool first = true;
        while (lex_.peek().kind != Tok::RBracket) {
            if (!first) expect(Tok::Comma);
            const auto idx = expect(Tok::Int);
            if (idx.value < 0 || idx.value >= dim)
                throw parse_error(idx.line, idx.column,
                                  "subset index " + idx.text + " out of range");
            if (mask & (1u << idx.value))
                throw parse_error(idx.line, idx.column,
                                  "repeated subset index " + idx.text);
            mask |= (1u << idx.value);
            first = false;
        }
        expect(Tok::RBracket);
        (void)open;
        return mask;
    }

    void parse_cube(const Token&) {
        const auto name = expect(Tok::Ident);
        fresh_name(name);
        expect(Tok::LBrace);
        expect_ident("dim");
        const auto dim_tok = expect(Tok::Int);
        const int dim = static_cast<int>(dim_tok.value);
        if (dim < 0 || dim > default_caps().cube_dim_cap)
            throw parse_error(dim_tok.line, dim_tok.column,
                              "cube dimension out of range");
        std::vector<std::optional<FinObject>> objects(1u << dim);
        while (peek_ident("node")) {
            lex_.take();
            const auto where = lex_.peek();
            const auto mask = subset(dim);
            const auto obj = object_ref(expect(Tok::Ident));
            if (objects[mask])
                throw parse_error(where.line, where.column, "node declared twice");
            objects[mask] = obj;
        }
        Cube::GeneratorMap gen;
        while (peek_ident("edge")) {
            lex_.take();
            const auto where = lex_.peek();
            const auto src = subset(dim);
            expect(Tok::Arrow);
            const auto dst = subset(dim);
            if ((dst & src) != dst || __builtin_popcount(src) != __builtin_popcount(dst) + 1)
                throw parse_error(where.line, where.column,
                                  "edge must remove exactly one index");
            const int removed = __builtin_ctz(src & ~dst);
            const auto labels = string_list();
            if (!objects[src] || !objects[dst])
                throw parse_error(where.line, where.column,
                                  "edge references an undeclared node");
            try {
                gen.emplace(std::make_pair(dst, removed),
                            FinMorphism(*objects[src], *objects[dst],
                                        table_from_labels(where, labels, *objects[dst])));
            } catch (const validation_error& e) {
                throw parse_error(where.line, where.column, e.what());
            }
        }
        expect(Tok::RBrace);
        for (SubsetMask s = 0; s < (1u << dim); ++s)
            if (!objects[s])
                throw parse_error(name.line, name.column,
                                  "cube is missing node " + subset_key(s));
        std::vector<FinObject> objs;
        for (auto& o : objects) objs.push_back(std::move(*o));
        try {
            doc_.cubes.emplace(name.text, Cube(dim, std::move(objs), std::move(gen)));
        } catch (const validation_error& e) {
            throw parse_error(name.line, name.column, e.what());
        }
    }

    void parse_simplicial(const Token&) {
        const auto name = expect(Tok::Ident);
        fresh_name(name);
        expect(Tok::LBrace);
        expect_ident("flavor");
        const auto flavor_tok = expect(Tok::Ident);
        Flavor flavor;
        try {
            flavor = parse_flavor(flavor_tok.text);
        } catch (const validation_error& e) {
            throw parse_error(flavor_tok.line, flavor_tok.column, e.what());
        }
        expect_ident("level");
        const auto level_tok = expect(Tok::Int);
        const int level = static_cast<int>(level_tok.value);
        if (level < 0)
            throw parse_error(level_tok.line, level_tok.column, "negative level");

        std::map<int, FinObject> objects;
        while (peek_ident("object")) {
            lex_.take();
            const auto lvl = expect(Tok::Int);
            if (lvl.value < -1 || lvl.value > level)
                throw parse_error(lvl.line, lvl.column, "object level out of range");
            const auto obj = object_ref(expect(Tok::Ident));
            if (!objects.emplace(static_cast<int>(lvl.value), obj).second)
                throw parse_error(lvl.line, lvl.column, "object level declared twice");
        }
        const bool augmented = objects.count(-1) > 0;
        for (int n = augmented ? -1 : 0; n <= level; ++n)
            if (!objects.count(n))
                throw parse_error(name.line, name.column,
                                  "missing object at level " + std::to_string(n));

        TruncatedSimplicial::Data data;
        data.flavor = flavor;
        data.level = level;
        data.augmented = augmented;
        for (int n = augmented ? -1 : 0; n <= level; ++n)
            data.objects.push_back(objects.at(n));

        std::map<std::pair<int, int>, FinMorphism> faces, degeneracies;
        std::map<int, FinMorphism> contraction;
        auto parse_table = [&](int dom_level, int cod_level,
                               const Token& where) -> FinMorphism {
            if (!objects.count(dom_level) || !objects.count(cod_level))
                throw parse_error(where.line, where.column,
                                  "table references a missing level");
            const auto labels = string_list();
            return FinMorphism(
                objects.at(dom_level), objects.at(cod_level),
                table_from_labels(where, labels, objects.at(cod_level)));
        };
        while (true) {
            if (peek_ident("face")) {
                lex_.take();
                const auto n = expect(Tok::Int);
                const auto i = expect(Tok::Int);
                try {
                    faces.emplace(
                        std::make_pair(static_cast<int>(n.value), static_cast<int>(i.value)),
                        parse_table(static_cast<int>(n.value),
                                    static_cast<int>(n.value) - 1, n));
                } catch (const validation_error& e) {
                    throw parse_error(n.line, n.column, e.what());
                }
            } else if (peek_ident("degeneracy")) {
                lex_.take();
                const auto n = expect(Tok::Int);
                const auto i = expect(Tok::Int);
                try {
                    degeneracies.emplace(
                        std::make_pair(static_cast<int>(n.value), static_cast<int>(i.value)),
                        parse_table(static_cast<int>(n.value),
                                    static_cast<int>(n.value) + 1, n));
                } catch (const validation_error& e) {
                    throw parse_error(n.line, n.column, e.what());
                }
            } else if (peek_ident("contraction")) {
                lex_.take();
                const auto n = expect(Tok::Int);
                try {
                    contraction.emplace(static_cast<int>(n.value),
                                        parse_table(static_cast<int>(n.value) - 1,
                                                    static_cast<int>(n.value), n));
                } catch (const validation_error& e) {
                    throw parse_error(n.line, n.column, e.what());
                }
            } else {
                break;
            }
        }
        expect(Tok::RBrace);

        for (const auto& [key, f] : faces) {
            auto& level_faces = data.faces[key.first];
            if (static_cast<int>(level_faces.size()) != key.second)
                throw parse_error(name.line, name.column,
                                  "faces must be declared in order d_0, d_1, ... per level");
            level_faces.push_back(f);
        }
        for (const auto& [key, s] : degeneracies) {
            auto& level_degs = data.degeneracies[key.first];
            if (static_cast<int>(level_degs.size()) != key.second)
                throw parse_error(name.line, name.column,
                                  "degeneracies must be declared in order per level");
            level_degs.push_back(s);
        }
        data.contraction = std::move(contraction);
        try {
            doc_.simplicials.emplace(name.text, TruncatedSimplicial(std::move(data)));
        } catch (const validation_error& e) {
            throw parse_error(name.line, name.column, e.what());
        }
    }

    Lexer lex_;
    Document doc_;
};

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

// name of a declared object equal to `obj`
const std::string& object_name(const Document& doc, const FinObject& obj,
                               const std::string& context) {
    for (const auto& [name, o] : doc.objects)
        if (o == obj) return name;
    throw validation_error(context + " references an object that is not declared "
                                     "in the document");
}

void write_table(std::ostream& os, const FinMorphism& m) {
    os << "[";
    for (std::size_t i = 0; i < m.table().size(); ++i) {
        if (i) os << " ";
        os << quoted(m.cod().label(m(static_cast<int>(i))));
    }
    os << "]";
}

} // namespace

Document parse_document(const std::string& text) { return Parser(text).parse(); }

std::string serialize_document(const Document& doc) {
    std::ostringstream os;
    os << "cubex-format 1\n";
    for (const auto& [k, v] : doc.metadata)
        os << "meta " << quoted(k) << " " << quoted(v) << "\n";

    for (const auto& [name, obj] : doc.objects) {
        os << "object " << name << " {\n  elements";
        for (const auto& l : obj.labels()) os << " " << quoted(l);
        os << "\n";
        if (obj.has_structure()) {
            const auto& st = obj.structure();
            os << "  structure " << st.signature.name() << " {\n";
            for (std::size_t op = 0; op < st.signature.ops().size(); ++op) {
                os << "    op " << st.signature.ops()[op].name << " "
                   << st.signature.ops()[op].arity << " [";
                const auto& entries = st.tables[op].entries;
                for (std::size_t i = 0; i < entries.size(); ++i) {
                    if (i) os << " ";
                    os << quoted(obj.label(entries[i]));
                }
                os << "]\n";
            }
            os << "  }\n";
        }
        os << "}\n";
    }

    for (const auto& [name, m] : doc.morphisms) {
        os << "morphism " << name << " {\n";
        os << "  dom " << object_name(doc, m.dom(), "morphism " + name) << "\n";
        os << "  cod " << object_name(doc, m.cod(), "morphism " + name) << "\n";
        os << "  map ";
        write_table(os, m);
        os << "\n}\n";
    }

    for (const auto& [name, c] : doc.cubes) {
        os << "cube " << name << " {\n  dim " << c.dim() << "\n";
        for (SubsetMask s = 0; s < (1u << c.dim()); ++s)
            os << "  node " << subset_key(s) << " "
               << object_name(doc, c.object(s), "cube " + name) << "\n";
        for (SubsetMask s = 0; s < (1u << c.dim()); ++s)
            for (int i = 0; i < c.dim(); ++i) {
                if (s & (1u << i)) continue;
                os << "  edge " << subset_key(s | (1u << i)) << " -> " << subset_key(s)
                   << " ";
                write_table(os, c.generator(s, i));
                os << "\n";
            }
        os << "}\n";
    }

    for (const auto& [name, ss] : doc.simplicials) {
        os << "simplicial " << name << " {\n";
        os << "  flavor " << flavor_name(ss.flavor()) << "\n";
        os << "  level " << ss.level() << "\n";
        for (int n = ss.lowest_level(); n <= ss.level(); ++n)
            os << "  object " << n << " "
               << object_name(doc, ss.object(n), "simplicial " + name) << "\n";
        const int first_face = ss.augmented() ? 0 : 1;
        for (int n = first_face; n <= ss.level(); ++n)
            for (int i = 0; i <= n; ++i) {
                os << "  face " << n << " " << i << " ";
                write_table(os, ss.face(n, i));
                os << "\n";
            }
        if (ss.flavor() != Flavor::Semi)
            for (int n = 0; n < ss.level(); ++n)
                for (int i = 0; i <= n; ++i) {
                    os << "  degeneracy " << n << " " << i << " ";
                    write_table(os, ss.degeneracy(n, i));
                    os << "\n";
                }
        for (const auto& [n, s] : ss.contraction()) {
            os << "  contraction " << n << " ";
            write_table(os, s);
            os << "\n";
        }
        os << "}\n";
    }
    return os.str();
}

Document load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw validation_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_document(buffer.str());
}

void save_document(const Document& doc, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw validation_error("cannot write '" + path + "'");
    out << serialize_document(doc);
}

} // namespace cubex
