#include "qalg/module.hpp"

#include <sstream>
#include <stdexcept>

namespace qalg {

const Block* MatrixSpec::block_at(std::size_t r, std::size_t c) const
{
    for (const auto& b : blocks)
        if (r >= b.row && r < b.row + b.rows && c >= b.col && c < b.col + b.cols)
            return &b;
    return nullptr;
}

void ComplexSpec::check_shapes() const
{
    if (shifts.size() != maps.size() + 1)
        throw std::invalid_argument("complex has " + std::to_string(maps.size()) + " maps but " +
                                    std::to_string(shifts.size()) + " modules");
    for (std::size_t i = 1; i <= maps.size(); ++i) {
        const auto& m = maps[i - 1];
        if (m.rows != shifts[i].size() || m.cols != shifts[i - 1].size())
            throw std::invalid_argument("map " + std::to_string(i) + " is " + std::to_string(m.rows) + "x" +
                                        std::to_string(m.cols) + " but modules have ranks " +
                                        std::to_string(shifts[i].size()) + " and " + std::to_string(shifts[i - 1].size()));
        if (m.entries.size() != m.rows * m.cols)
            throw std::invalid_argument("map " + std::to_string(i) + " has a malformed entry array");
    }
}

std::optional<std::string> check_entry_degrees(const Presentation& p, const ComplexSpec& c)
{
    for (std::size_t i = 1; i <= c.maps.size(); ++i) {
        const auto& m = c.maps[i - 1];
        for (std::size_t r = 0; r < m.rows; ++r)
            for (std::size_t col = 0; col < m.cols; ++col) {
                const auto& e = m.at(r, col);
                int want = c.shifts[i][r] - c.shifts[i - 1][col];
                for (const auto& t : e.terms())
                    if (p.degree(t.word) != want)
                        return "map " + std::to_string(i) + " entry (" + std::to_string(r + 1) + "," +
                               std::to_string(col + 1) + ") has a term of degree " + std::to_string(p.degree(t.word)) +
                               ", expected " + std::to_string(want);
            }
    }
    return std::nullopt;
}

std::optional<std::string> first_constant_entry(const ComplexSpec& c)
{
    for (std::size_t i = 1; i <= c.maps.size(); ++i) {
        const auto& m = c.maps[i - 1];
        for (std::size_t r = 0; r < m.rows; ++r)
            for (std::size_t col = 0; col < m.cols; ++col)
                if (sgn(m.at(r, col).constant_term(RationalField{})) != 0)
                    return "map " + std::to_string(i) + " entry (" + std::to_string(r + 1) + "," +
                           std::to_string(col + 1) + ") has a degree-0 term";
    }
    return std::nullopt;
}

bool is_minimal(const ComplexSpec& c) { return !first_constant_entry(c).has_value(); }

namespace {

[[noreturn]] void fail(int line, const std::string& msg)
{
    throw ParseError(ParseError::Kind::MalformedToken, line, 1, msg);
}

std::vector<std::string> split_ws(const std::string& s)
{
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok)
        out.push_back(tok);
    return out;
}

std::size_t to_index(const std::string& s, int line)
{
    try {
        std::size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size() || v < 0)
            fail(line, "expected a nonnegative integer, got '" + s + "'");
        return static_cast<std::size_t>(v);
    } catch (const std::logic_error&) {
        fail(line, "expected an integer, got '" + s + "'");
    }
}

int to_int(const std::string& s, int line)
{
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size())
            fail(line, "expected an integer, got '" + s + "'");
        return v;
    } catch (const std::logic_error&) {
        fail(line, "expected an integer, got '" + s + "'");
    }
}

}  // namespace

ComplexSpec parse_complex(const Presentation& p, std::string_view text)
{
    ComplexSpec c;
    std::vector<std::optional<std::vector<int>>> modules;
    std::vector<std::optional<MatrixSpec>> maps;
    MatrixSpec* current = nullptr;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line = 0;
    bool ended = false;
    while (std::getline(in, raw)) {
        ++line;
        if (auto h = raw.find('#'); h != std::string::npos)
            raw.erase(h);
        auto toks = split_ws(raw);
        if (toks.empty())
            continue;
        if (ended)
            fail(line, "content after 'end'");
        const std::string& kw = toks[0];
        if (kw == "complex") {
            c.name = toks.size() > 1 ? toks[1] : "";
        } else if (kw == "module") {
            if (toks.size() < 3 || toks[2] != ":")
                fail(line, "expected 'module <i> : <shift>^<count> ...'");
            std::size_t i = to_index(toks[1], line);
            if (modules.size() <= i)
                modules.resize(i + 1);
            if (modules[i])
                fail(line, "module " + toks[1] + " declared twice");
            std::vector<int> shifts;
            for (std::size_t t = 3; t < toks.size(); ++t) {
                auto caret = toks[t].find('^');
                int shift = to_int(toks[t].substr(0, caret), line);
                std::size_t count = caret == std::string::npos ? 1 : to_index(toks[t].substr(caret + 1), line);
                shifts.insert(shifts.end(), count, shift);
            }
            modules[i] = std::move(shifts);
        } else if (kw == "map") {
            if (toks.size() != 6 || toks[2] != "rows" || toks[4] != "cols")
                fail(line, "expected 'map <i> rows <R> cols <C>'");
            std::size_t i = to_index(toks[1], line);
            if (i == 0)
                fail(line, "maps are numbered from 1");
            if (maps.size() < i)
                maps.resize(i);
            if (maps[i - 1])
                fail(line, "map " + toks[1] + " declared twice");
            maps[i - 1] = MatrixSpec(to_index(toks[3], line), to_index(toks[5], line));
            current = &*maps[i - 1];
        } else if (kw == "e") {
            if (!current)
                fail(line, "entry outside of a map");
            auto semi = raw.find(';');
            if (toks.size() < 4)
                fail(line, "expected 'e <row> <col> <expr>;'");
            std::size_t r = to_index(toks[1], line), col = to_index(toks[2], line);
            if (r == 0 || col == 0 || r > current->rows || col > current->cols)
                fail(line, "entry (" + toks[1] + "," + toks[2] + ") out of range");
            // expression: everything after the third token up to ';'
            std::size_t start = 0;
            for (int t = 0; t < 3; ++t) {
                start = raw.find_first_not_of(" \t", start);
                start = raw.find_first_of(" \t", start);
            }
            std::string expr = raw.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
            current->at(r - 1, col - 1) = parse_expression(p, expr, line, static_cast<int>(start) + 1);
        } else if (kw == "end") {
            ended = true;
        } else {
            throw ParseError(ParseError::Kind::UnknownKeyword, line, 1, "unknown statement '" + kw + "'");
        }
    }
    for (std::size_t i = 0; i < modules.size(); ++i) {
        if (!modules[i])
            fail(line, "module " + std::to_string(i) + " missing");
        c.shifts.push_back(*modules[i]);
    }
    for (std::size_t i = 0; i < maps.size(); ++i) {
        if (!maps[i])
            fail(line, "map " + std::to_string(i + 1) + " missing");
        c.maps.push_back(std::move(*maps[i]));
    }
    try {
        c.check_shapes();
    } catch (const std::invalid_argument& e) {
        fail(line, e.what());
    }
    return c;
}

namespace {

std::string shifts_to_text(const std::vector<int>& s)
{
    std::string out;
    for (std::size_t i = 0; i < s.size();) {
        std::size_t j = i;
        while (j < s.size() && s[j] == s[i])
            ++j;
        out += ' ' + std::to_string(s[i]) + '^' + std::to_string(j - i);
        i = j;
    }
    return out;
}

}  // namespace

std::string complex_to_text(const Presentation& p, const ComplexSpec& c)
{
    std::ostringstream out;
    auto names = p.names();
    if (!c.name.empty())
        out << "complex " << c.name << '\n';
    for (std::size_t i = 0; i < c.shifts.size(); ++i)
        out << "module " << i << " :" << shifts_to_text(c.shifts[i]) << '\n';
    for (std::size_t i = 1; i <= c.maps.size(); ++i) {
        const auto& m = c.maps[i - 1];
        out << "map " << i << " rows " << m.rows << " cols " << m.cols << '\n';
        for (std::size_t r = 0; r < m.rows; ++r)
            for (std::size_t col = 0; col < m.cols; ++col)
                if (!m.at(r, col).is_zero())
                    out << "e " << r + 1 << ' ' << col + 1 << ' ' << poly_to_string(RationalField{}, m.at(r, col), names) << ";\n";
    }
    out << "end\n";
    return out.str();
}

}  // namespace qalg
