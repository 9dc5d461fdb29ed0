#include "charmorph/parse.hpp"

#include <sstream>
#include <vector>

#include "charmorph/error.hpp"

namespace charmorph {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view document) {
    std::vector<Line> lines;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= document.size()) {
        std::size_t end = document.find('\n', pos);
        if (end == std::string_view::npos) end = document.size();
        std::string_view raw = document.substr(pos, end - pos);
        ++line_no;
        pos = end + 1;

        if (std::size_t hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        std::istringstream in{std::string(raw)};
        Line line{line_no, {}};
        std::string tok;
        while (in >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        if (end == document.size()) break;
    }
    return lines;
}

unsigned long parse_count(const std::string& tok, const char* what, std::size_t line) {
    try {
        std::size_t used = 0;
        unsigned long v = std::stoul(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(std::string("expected a positive integer for ") + what + ", got '" +
                             tok + "'",
                         line);
    }
}

}  // namespace

FieldPtr parse_field(std::string_view text) {
    std::string s(text);
    for (auto& c : s)
        if (c == ':') c = ' ';
    std::istringstream in(s);
    std::string kind;
    in >> kind;
    if (kind == "rational") {
        std::string rest;
        if (in >> rest) throw ParseError("unexpected token after 'rational': " + rest);
        return Field::rationals();
    }
    unsigned long param = 0;
    if (!(in >> param)) throw ParseError("field '" + kind + "' needs a parameter");
    std::string rest;
    if (in >> rest) throw ParseError("unexpected token after field parameter: " + rest);
    if (kind == "cyclotomic") return Field::cyclotomic(static_cast<unsigned>(param));
    if (kind == "gf") return Field::prime(param);
    throw ParseError("unknown field kind '" + kind + "' (expected rational, cyclotomic or gf)");
}

LinearMap parse_linear_map(std::string_view document) {
    const std::vector<Line> lines = tokenize(document);
    std::size_t at = 0;
    auto next = [&]() -> const Line& {
        if (at >= lines.size())
            throw ParseError("unexpected end of document",
                             lines.empty() ? 1 : lines.back().number);
        return lines[at++];
    };

    const Line& field_line = next();
    if (field_line.tokens[0] != "field")
        throw ParseError("expected 'field ...' header", field_line.number);
    std::string field_spec;
    for (std::size_t i = 1; i < field_line.tokens.size(); ++i) {
        if (i > 1) field_spec += ' ';
        field_spec += field_line.tokens[i];
    }
    FieldPtr f;
    try {
        f = parse_field(field_spec);
    } catch (const ParseError& e) {
        throw ParseError(e.what(), field_line.number);
    } catch (const BadParams& e) {
        throw ParseError(e.what(), field_line.number);
    }

    const Line& d_line = next();
    if (d_line.tokens[0] != "d" || d_line.tokens.size() != 2)
        throw ParseError("expected 'd <count>' header", d_line.number);
    const unsigned long d = parse_count(d_line.tokens[1], "d", d_line.number);
    if (d == 0) throw ParseError("d must be at least 1", d_line.number);

    const Line& dim_line = next();
    if (dim_line.tokens[0] != "dim" || dim_line.tokens.size() != 2)
        throw ParseError("expected 'dim <size>' header", dim_line.number);
    const unsigned long dim = parse_count(dim_line.tokens[1], "dim", dim_line.number);
    if (dim == 0) throw ParseError("dim must be at least 1", dim_line.number);

    std::vector<Matrix> alphas;
    for (unsigned long index = 1; index <= d; ++index) {
        const Line& head = next();
        if (head.tokens[0] != "matrix" || head.tokens.size() != 2)
            throw ParseError("expected 'matrix " + std::to_string(index) + "'", head.number);
        if (parse_count(head.tokens[1], "matrix index", head.number) != index)
            throw ParseError("matrices must appear in order; expected 'matrix " +
                                 std::to_string(index) + "'",
                             head.number);
        std::vector<Scalar> entries;
        entries.reserve(dim * dim);
        for (unsigned long r = 0; r < dim; ++r) {
            const Line& row = next();
            if (row.tokens.size() != dim)
                throw DimensionMismatch("line " + std::to_string(row.number) + ": matrix " +
                                        std::to_string(index) + " row has " +
                                        std::to_string(row.tokens.size()) + " entries, dim is " +
                                        std::to_string(dim));
            for (const auto& tok : row.tokens)
                entries.push_back(Scalar::parse(f, tok, row.number));
        }
        alphas.emplace_back(f, dim, std::move(entries));
    }
    if (at != lines.size())
        throw ParseError("unexpected trailing content", lines[at].number);
    return LinearMap(f, std::move(alphas));
}

std::string render_linear_map(const LinearMap& map) {
    const FieldPtr& f = map.field();
    std::string out = "field ";
    switch (f->kind()) {
        case FieldKind::Rational: out += "rational"; break;
        case FieldKind::Cyclotomic:
            out += "cyclotomic " + std::to_string(f->cyclotomic_order());
            break;
        case FieldKind::Prime: out += "gf " + std::to_string(f->prime_modulus()); break;
    }
    out += "\nd " + std::to_string(map.d());
    out += "\ndim " + std::to_string(map.dim());
    for (std::size_t i = 0; i < map.d(); ++i) {
        out += "\nmatrix " + std::to_string(i + 1);
        for (std::size_t r = 0; r < map.dim(); ++r) {
            out += '\n';
            for (std::size_t c = 0; c < map.dim(); ++c) {
                if (c) out += ' ';
                out += map.alpha(i).at(r, c).str(/*compact=*/true);
            }
        }
    }
    out += '\n';
    return out;
}

}  // namespace charmorph
