#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qalg/presentation.hpp"
#include "qalg/word.hpp"

namespace qalg {

// A multigrading of the free algebra that every relation respects.
//
// Fine mode: generators are grouped into classes so that in each relation the letters at a given
// position all lie in one class; a word's multidegree is its sequence of classes. Coarse mode: the
// single symbol 0, repeated once per unit of degree, so the multidegree only records the degree.
struct Grading {
    bool fine = false;
    std::vector<Letter> letter_class;
    std::vector<int> letter_weight;
    std::vector<int> class_weight;
    std::vector<std::vector<Letter>> class_members;
    std::vector<std::string> class_names;
    // adjacent[a][b]: some relation has classes a, b at consecutive positions. A pair that is not
    // adjacent is a break: multidegree components factor across it.
    std::vector<std::vector<bool>> adjacent;

    std::size_t num_classes() const { return class_weight.size(); }

    Word class_word(const Word& w) const;
    int degree(const Word& class_word) const;
    // Symbols of the class word consumed by one letter: 1 in fine mode, the weight in coarse mode.
    std::size_t span(Letter l) const { return fine ? 1 : static_cast<std::size_t>(letter_weight[l]); }
    // Letters that can start at position pos of a word with the given class word.
    std::vector<Letter> letters_at(const Word& class_word, std::size_t pos) const;

    bool linked(const Word& class_word) const;
    bool is_break(Letter a, Letter b) const { return !adjacent[a][b]; }

    // All class words of the given degree.
    std::vector<Word> class_words_of_degree(int d) const;
    // Class words of degree exactly d whose consecutive pairs are all adjacent.
    std::vector<Word> linked_words_of_degree(int d) const;

    std::string class_word_to_string(const Word& cw) const;
};

// Fine grading when the relations allow it, otherwise coarse.
Grading make_grading(const Presentation& p);
Grading coarse_grading(const Presentation& p);

}  // namespace qalg
