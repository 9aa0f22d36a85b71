#include "qalg/presentation.hpp"

#include <cctype>
#include <sstream>
#include <unordered_set>

namespace qalg {

std::string word_to_string(const Word& w, const std::vector<std::string>& names)
{
    if (w.empty())
        return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            out += '*';
        out += names.at(w[i]);
    }
    return out;
}

std::vector<std::string> Presentation::names() const
{
    std::vector<std::string> out;
    out.reserve(generators.size());
    for (const auto& g : generators)
        out.push_back(g.name);
    return out;
}

std::optional<Letter> Presentation::find(std::string_view name) const
{
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i].name == name)
            return static_cast<Letter>(i);
    return std::nullopt;
}

Letter Presentation::index_of(std::string_view name) const
{
    auto i = find(name);
    if (!i)
        throw std::out_of_range("unknown generator '" + std::string(name) + "'");
    return *i;
}

int Presentation::degree(const Word& w) const
{
    int d = 0;
    for (Letter l : w)
        d += generators[l].degree;
    return d;
}

std::vector<int> Presentation::weights() const
{
    std::vector<int> out;
    for (const auto& g : generators)
        out.push_back(g.degree);
    return out;
}

bool Presentation::all_degree_one() const
{
    for (const auto& g : generators)
        if (g.degree != 1)
            return false;
    return true;
}

Letter Presentation::add_generator(std::string name, int degree)
{
    if (find(name))
        throw std::invalid_argument("duplicate generator '" + name + "'");
    if (generators.size() >= Word::kMaxLetters)
        throw std::invalid_argument("too many generators (max " + std::to_string(Word::kMaxLetters) + ")");
    if (degree < 1)
        throw std::invalid_argument("generator degree must be positive");
    generators.push_back({std::move(name), degree});
    return static_cast<Letter>(generators.size() - 1);
}

void Presentation::validate() const
{
    if (generators.empty())
        throw std::invalid_argument("presentation has no generators");
    std::unordered_set<std::string> seen;
    for (const auto& g : generators) {
        if (!seen.insert(g.name).second)
            throw std::invalid_argument("duplicate generator '" + g.name + "'");
        if (g.degree < 1)
            throw std::invalid_argument("generator '" + g.name + "' has non-positive degree");
    }
    for (const auto& r : relations) {
        if (r.is_zero())
            throw std::invalid_argument("zero relation");
        int d = degree(r.leading_word());
        for (const auto& t : r.terms()) {
            for (Letter l : t.word)
                if (l >= generators.size())
                    throw std::invalid_argument("relation uses an undeclared generator");
            if (degree(t.word) != d)
                throw std::invalid_argument("relation is not homogeneous");
        }
        if (d < 2)
            throw std::invalid_argument("relation of degree below 2");
    }
}

ParseError::ParseError(Kind kind, int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         kind_name(kind) + ": " + message),
      kind_(kind), line_(line), column_(column), message_(message)
{
}

const char* ParseError::kind_name(Kind k)
{
    switch (k) {
    case Kind::MalformedToken: return "malformed token";
    case Kind::UnknownKeyword: return "unknown keyword";
    case Kind::UnknownGenerator: return "unknown generator";
    case Kind::DuplicateName: return "duplicate name";
    case Kind::InhomogeneousRelation: return "relation not homogeneous";
    case Kind::LowDegreeRelation: return "relation degree below 2";
    case Kind::ZeroRelation: return "zero relation";
    case Kind::BadField: return "bad field";
    case Kind::BadDegree: return "bad degree";
    case Kind::MissingGenerators: return "missing generators";
    }
    return "error";
}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

struct Token {
    enum class Type { Ident, Number, Plus, Minus, Star, End } type;
    std::string text;
    int column;
};

// Lexer for relation expressions; columns are 1-based within the source line.
std::vector<Token> lex_expression(std::string_view s, int line, int column0)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        int col = column0 + static_cast<int>(i);
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (is_ident_start(c)) {
            std::size_t j = i;
            while (j < s.size() && is_ident_char(s[j]))
                ++j;
            out.push_back({Token::Type::Ident, std::string(s.substr(i, j - i)), col});
            i = j;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
                ++j;
            if (j < s.size() && s[j] == '/') {
                ++j;
                std::size_t k = j;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
                    ++j;
                if (j == k)
                    throw ParseError(ParseError::Kind::MalformedToken, line, col, "fraction without denominator");
            }
            if (j < s.size() && is_ident_start(s[j]))
                throw ParseError(ParseError::Kind::MalformedToken, line, col,
                                 "'" + std::string(s.substr(i, j - i + 1)) + "' (use '*' between coefficient and generator)");
            out.push_back({Token::Type::Number, std::string(s.substr(i, j - i)), col});
            i = j;
        } else if (c == '+') {
            out.push_back({Token::Type::Plus, "+", col});
            ++i;
        } else if (c == '-') {
            out.push_back({Token::Type::Minus, "-", col});
            ++i;
        } else if (c == '*') {
            out.push_back({Token::Type::Star, "*", col});
            ++i;
        } else {
            throw ParseError(ParseError::Kind::MalformedToken, line, col, std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({Token::Type::End, "", column0 + static_cast<int>(s.size())});
    return out;
}

}  // namespace

NcPoly<RationalField> parse_expression(const Presentation& p, std::string_view expr, int line, int column)
{
    RationalField q;
    auto toks = lex_expression(expr, line, column);
    std::size_t pos = 0;
    std::vector<NcPoly<RationalField>::Term> terms;
    auto fail = [&](const Token& t, const std::string& msg) -> ParseError {
        return ParseError(ParseError::Kind::MalformedToken, line, t.column, msg);
    };
    if (toks[0].type == Token::Type::End)
        throw fail(toks[0], "empty expression");
    bool first = true;
    while (toks[pos].type != Token::Type::End) {
        mpq_class sign = 1;
        if (toks[pos].type == Token::Type::Plus || toks[pos].type == Token::Type::Minus) {
            if (toks[pos].type == Token::Type::Minus)
                sign = -1;
            ++pos;
        } else if (!first) {
            throw fail(toks[pos], "expected '+' or '-' before '" + toks[pos].text + "'");
        }
        first = false;
        mpq_class coeff = 1;
        Word w;
        bool have_factor = false;
        if (toks[pos].type == Token::Type::Number) {
            coeff = parse_rational(toks[pos].text);
            ++pos;
            have_factor = true;
            if (toks[pos].type == Token::Type::Star) {
                ++pos;
                if (toks[pos].type != Token::Type::Ident)
                    throw fail(toks[pos], "expected generator after '*'");
            }
        }
        while (toks[pos].type == Token::Type::Ident) {
            auto idx = p.find(toks[pos].text);
            if (!idx)
                throw ParseError(ParseError::Kind::UnknownGenerator, line, toks[pos].column,
                                 "'" + toks[pos].text + "' is not a declared generator");
            try {
                w.push_back(*idx);
            } catch (const DegreeOverflow& e) {
                throw ParseError(ParseError::Kind::MalformedToken, line, toks[pos].column, e.what());
            }
            have_factor = true;
            ++pos;
            if (toks[pos].type == Token::Type::Star) {
                ++pos;
                if (toks[pos].type != Token::Type::Ident)
                    throw fail(toks[pos], "expected generator after '*'");
            } else {
                break;
            }
        }
        if (!have_factor)
            throw fail(toks[pos], toks[pos].type == Token::Type::End ? "expression ends after sign"
                                                                      : "unexpected '" + toks[pos].text + "'");
        if (toks[pos].type != Token::Type::End && toks[pos].type != Token::Type::Plus &&
            toks[pos].type != Token::Type::Minus)
            throw fail(toks[pos], "unexpected '" + toks[pos].text + "'");
        terms.push_back({w, sign * coeff});
    }
    return NcPoly<RationalField>::from_terms(q, std::move(terms));
}

void Presentation::add_relation(std::string_view expr)
{
    auto r = parse_expression(*this, expr);
    if (r.is_zero())
        throw ParseError(ParseError::Kind::ZeroRelation, 1, 1, "relation is zero");
    int d = degree(r.leading_word());
    for (const auto& t : r.terms())
        if (degree(t.word) != d)
            throw ParseError(ParseError::Kind::InhomogeneousRelation, 1, 1,
                             "terms of degrees " + std::to_string(d) + " and " + std::to_string(degree(t.word)));
    if (d < 2)
        throw ParseError(ParseError::Kind::LowDegreeRelation, 1, 1, "relation has degree " + std::to_string(d));
    relations.push_back(make_monic(RationalField{}, r));
}

namespace {

struct Statement {
    std::string text;
    int line;
    int column;  // column of the first character of text
};

std::string_view trim(std::string_view s, std::size_t* lead = nullptr)
{
    std::size_t a = 0;
    while (a < s.size() && std::isspace(static_cast<unsigned char>(s[a])))
        ++a;
    std::size_t b = s.size();
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
        --b;
    if (lead)
        *lead = a;
    return s.substr(a, b - a);
}

std::vector<Statement> split_statements(std::string_view text)
{
    std::vector<Statement> out;
    int line = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        std::string_view ln = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
        ++line;
        if (auto hash = ln.find('#'); hash != std::string_view::npos)
            ln = ln.substr(0, hash);
        std::size_t pos = 0;
        while (pos <= ln.size()) {
            std::size_t semi = ln.find(';', pos);
            std::string_view piece = ln.substr(pos, semi == std::string_view::npos ? std::string_view::npos : semi - pos);
            std::size_t lead = 0;
            auto t = trim(piece, &lead);
            if (!t.empty())
                out.push_back({std::string(t), line, static_cast<int>(pos + lead + 1)});
            if (semi == std::string_view::npos)
                break;
            pos = semi + 1;
        }
        if (nl == std::string_view::npos)
            break;
        start = nl + 1;
    }
    return out;
}

std::vector<std::pair<std::string, int>> words_with_columns(std::string_view s, int column0)
{
    std::vector<std::pair<std::string, int>> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])))
            ++j;
        if (j > i)
            out.emplace_back(std::string(s.substr(i, j - i)), column0 + static_cast<int>(i));
        i = j;
    }
    return out;
}

bool valid_name(const std::string& s)
{
    if (s.empty() || !is_ident_start(s[0]))
        return false;
    for (char c : s)
        if (!is_ident_char(c))
            return false;
    return true;
}

int parse_degree(const std::string& s, int line, int col)
{
    int d = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)) || d > 1000)
            throw ParseError(ParseError::Kind::BadDegree, line, col, "degree must be a positive integer, got '" + s + "'");
        d = d * 10 + (c - '0');
    }
    if (s.empty() || d < 1)
        throw ParseError(ParseError::Kind::BadDegree, line, col, "degree must be a positive integer, got '" + s + "'");
    return d;
}

}  // namespace

Presentation parse_presentation(std::string_view text)
{
    Presentation p;
    std::vector<Statement> rels;
    std::vector<std::pair<Statement, std::vector<std::pair<std::string, int>>>> degs;
    for (const auto& st : split_statements(text)) {
        auto toks = words_with_columns(st.text, st.column);
        const std::string& kw = toks[0].first;
        if (kw == "field") {
            if (toks.size() != 2)
                throw ParseError(ParseError::Kind::BadField, st.line, st.column, "expected 'field p:<prime>' or 'field q'");
            try {
                p.field = FieldSpec::parse(toks[1].first);
            } catch (const FieldError& e) {
                throw ParseError(ParseError::Kind::BadField, st.line, toks[1].second, e.what());
            }
        } else if (kw == "gens") {
            for (std::size_t i = 1; i < toks.size(); ++i) {
                const auto& [name, col] = toks[i];
                if (!valid_name(name))
                    throw ParseError(ParseError::Kind::MalformedToken, st.line, col, "'" + name + "' is not a valid generator name");
                if (p.find(name))
                    throw ParseError(ParseError::Kind::DuplicateName, st.line, col, "generator '" + name + "' declared twice");
                if (p.generators.size() >= Word::kMaxLetters)
                    throw ParseError(ParseError::Kind::MalformedToken, st.line, col, "too many generators");
                p.generators.push_back({name, 1});
            }
        } else if (kw == "deg") {
            degs.push_back({st, toks});
        } else if (kw == "rel") {
            std::size_t off = st.text.find_first_of(" \t", 3);
            if (st.text.size() <= 3 || off == std::string::npos)
                throw ParseError(ParseError::Kind::MalformedToken, st.line, st.column, "empty relation");
            rels.push_back({st.text.substr(off), st.line, st.column + static_cast<int>(off)});
        } else {
            throw ParseError(ParseError::Kind::UnknownKeyword, st.line, st.column, "unknown statement '" + kw + "'");
        }
    }
    if (p.generators.empty())
        throw ParseError(ParseError::Kind::MissingGenerators, 1, 1, "no 'gens' statement");
    for (const auto& [st, toks] : degs) {
        if (toks.size() != 3)
            throw ParseError(ParseError::Kind::BadDegree, st.line, st.column, "expected 'deg all <k>' or 'deg <name> <k>'");
        int d = parse_degree(toks[2].first, st.line, toks[2].second);
        if (toks[1].first == "all") {
            for (auto& g : p.generators)
                g.degree = d;
        } else {
            auto idx = p.find(toks[1].first);
            if (!idx)
                throw ParseError(ParseError::Kind::UnknownGenerator, st.line, toks[1].second,
                                 "'" + toks[1].first + "' is not a declared generator");
            p.generators[*idx].degree = d;
        }
    }
    for (const auto& st : rels) {
        auto r = parse_expression(p, st.text, st.line, st.column);
        if (r.is_zero())
            throw ParseError(ParseError::Kind::ZeroRelation, st.line, st.column, "relation cancels to zero");
        int d = p.degree(r.leading_word());
        for (const auto& t : r.terms())
            if (p.degree(t.word) != d)
                throw ParseError(ParseError::Kind::InhomogeneousRelation, st.line, st.column,
                                 "terms of degrees " + std::to_string(d) + " and " + std::to_string(p.degree(t.word)));
        if (d < 2)
            throw ParseError(ParseError::Kind::LowDegreeRelation, st.line, st.column,
                             "relation has degree " + std::to_string(d));
        p.relations.push_back(make_monic(RationalField{}, r));
    }
    return p;
}

namespace {

template <class K>
std::string relation_string_in(const K& k, const Presentation& p, const NcPoly<RationalField>& r)
{
    auto c = convert_rational(k, r);
    if (!c)
        throw FieldError("relation coefficient not representable in " + p.field.to_string());
    return poly_to_string(k, make_monic(k, *c), p.names());
}

}  // namespace

std::string relation_to_string(const Presentation& p, const NcPoly<RationalField>& r)
{
    if (p.field.kind == FieldSpec::Kind::Rational)
        return relation_string_in(RationalField{}, p, r);
    return relation_string_in(PrimeField(p.field.prime), p, r);
}

std::string to_text(const Presentation& p)
{
    std::ostringstream out;
    out << "field " << p.field.to_string() << '\n';
    out << "gens";
    for (const auto& g : p.generators)
        out << ' ' << g.name;
    out << '\n';
    int common = p.generators.empty() ? 1 : p.generators[0].degree;
    bool uniform = true;
    for (const auto& g : p.generators)
        uniform = uniform && g.degree == common;
    out << "deg all " << (uniform ? common : 1) << '\n';
    if (!uniform)
        for (const auto& g : p.generators)
            if (g.degree != 1)
                out << "deg " << g.name << ' ' << g.degree << '\n';
    // exact coefficients, so the text means the same algebra under any --field
    for (const auto& r : p.relations)
        out << "rel " << poly_to_string(RationalField{}, r, p.names()) << ";\n";
    return out.str();
}

}  // namespace qalg
