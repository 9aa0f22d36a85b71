#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qalg/ncpoly.hpp"
#include "qalg/scalar.hpp"
#include "qalg/word.hpp"

namespace qalg {

struct Generator {
    std::string name;
    int degree = 1;
};

// Relations are stored with exact rational coefficients, monic in deglex; they are mapped into
// the active field when an algebra is instantiated.
class Presentation {
public:
    FieldSpec field;
    std::vector<Generator> generators;
    std::vector<NcPoly<RationalField>> relations;

    std::size_t num_generators() const { return generators.size(); }
    std::vector<std::string> names() const;
    std::optional<Letter> find(std::string_view name) const;
    Letter index_of(std::string_view name) const;  // throws std::out_of_range

    int degree(const Word& w) const;
    std::vector<int> weights() const;
    bool all_degree_one() const;

    // Adds a generator at the end of the order; rejects duplicates.
    Letter add_generator(std::string name, int degree = 1);
    // Parses an expression in the relation syntax against the declared generators and appends it
    // after normalization. Throws ParseError.
    void add_relation(std::string_view expr);

    // Checks the structural invariants; throws std::invalid_argument.
    void validate() const;
};

class ParseError : public std::runtime_error {
public:
    enum class Kind {
        MalformedToken,
        UnknownKeyword,
        UnknownGenerator,
        DuplicateName,
        InhomogeneousRelation,
        LowDegreeRelation,
        ZeroRelation,
        BadField,
        BadDegree,
        MissingGenerators,
    };

    ParseError(Kind kind, int line, int column, const std::string& message);

    Kind kind() const { return kind_; }
    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& message() const { return message_; }

    static const char* kind_name(Kind k);

private:
    Kind kind_;
    int line_;
    int column_;
    std::string message_;
};

// Parses the line-oriented presentation format:
//   field p:32003 | field q
//   gens a b c ...
//   deg all 1 | deg <name> <k>
//   rel <expr>;
// Statements end at ';' or at end of line; '#' starts a comment.
Presentation parse_presentation(std::string_view text);

// Parses "[coeff *] name (* name)* (+|- term)*" into a rational polynomial over p's generators.
NcPoly<RationalField> parse_expression(const Presentation& p, std::string_view expr, int line = 1, int column = 1);

// Canonical serialization: relations monic, terms in decreasing deglex order, coefficients as
// exact reduced rationals (independent of the field line).
std::string to_text(const Presentation& p);

// Prints a relation with coefficients mapped into the active field (monic there).
std::string relation_to_string(const Presentation& p, const NcPoly<RationalField>& r);

}  // namespace qalg
