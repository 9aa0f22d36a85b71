#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qalg {

using Letter = std::uint8_t;

class DegreeOverflow : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A monomial of the free algebra: a short sequence of generator indices, stored inline.
// Also used for multidegrees, where the letters are grading symbols.
class Word {
public:
    static constexpr std::size_t kCapacity = 31;
    static constexpr std::size_t kMaxLetters = 256;

    Word() = default;
    Word(std::initializer_list<Letter> letters)
    {
        for (Letter l : letters)
            push_back(l);
    }
    explicit Word(std::span<const Letter> letters)
    {
        for (Letter l : letters)
            push_back(l);
    }

    static Word letter(Letter l)
    {
        Word w;
        w.push_back(l);
        return w;
    }

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }
    Letter operator[](std::size_t i) const { return data_[i]; }
    Letter front() const { return data_[0]; }
    Letter back() const { return data_[size_ - 1]; }
    std::span<const Letter> letters() const { return {data_.data(), size_}; }
    const Letter* begin() const { return data_.data(); }
    const Letter* end() const { return data_.data() + size_; }

    void push_back(Letter l)
    {
        if (size_ == kCapacity)
            throw DegreeOverflow("word length exceeds " + std::to_string(kCapacity));
        data_[size_++] = l;
    }
    void pop_back() { --size_; }

    Word substr(std::size_t pos, std::size_t len) const
    {
        Word w;
        std::memcpy(w.data_.data(), data_.data() + pos, len);
        w.size_ = static_cast<std::uint8_t>(len);
        return w;
    }
    Word prefix(std::size_t len) const { return substr(0, len); }
    Word suffix(std::size_t len) const { return substr(size_ - len, len); }
    Word drop_front(std::size_t n) const { return substr(n, size_ - n); }

    bool has_suffix(const Word& s) const
    {
        return s.size_ <= size_ && std::memcmp(data_.data() + size_ - s.size_, s.data_.data(), s.size_) == 0;
    }
    bool has_prefix(const Word& s) const
    {
        return s.size_ <= size_ && std::memcmp(data_.data(), s.data_.data(), s.size_) == 0;
    }
    // Occurrence of w starting at pos?
    bool matches_at(const Word& w, std::size_t pos) const
    {
        return pos + w.size_ <= size_ && std::memcmp(data_.data() + pos, w.data_.data(), w.size_) == 0;
    }

    friend Word operator+(const Word& a, const Word& b)
    {
        if (a.size_ + b.size_ > kCapacity)
            throw DegreeOverflow("word length exceeds " + std::to_string(kCapacity));
        Word w = a;
        std::memcpy(w.data_.data() + a.size_, b.data_.data(), b.size_);
        w.size_ = static_cast<std::uint8_t>(a.size_ + b.size_);
        return w;
    }

    friend bool operator==(const Word& a, const Word& b)
    {
        return a.size_ == b.size_ && std::memcmp(a.data_.data(), b.data_.data(), a.size_) == 0;
    }

    std::size_t hash() const
    {
        // FNV-1a
        std::uint64_t h = 1469598103934665603ull ^ size_;
        for (std::size_t i = 0; i < size_; ++i) {
            h ^= data_[i];
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }

private:
    std::array<Letter, kCapacity> data_{};
    std::uint8_t size_ = 0;
};

struct WordHash {
    std::size_t operator()(const Word& w) const { return w.hash(); }
};

// Degree-lexicographic order: longer words are larger; among words of equal length the first
// differing letter decides, and a letter declared earlier (smaller index) is the larger one.
// On homogeneous elements with weighted generators this is the weighted deglex order.
inline int compare_deglex(const Word& a, const Word& b)
{
    if (a.size() != b.size())
        return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i])
            return a[i] > b[i] ? -1 : 1;
    return 0;
}

struct DeglexLess {
    bool operator()(const Word& a, const Word& b) const { return compare_deglex(a, b) < 0; }
};

struct DeglexGreater {
    bool operator()(const Word& a, const Word& b) const { return compare_deglex(a, b) > 0; }
};

// Plain lexicographic order on letter values; used to sort multidegrees deterministically.
struct LexLess {
    bool operator()(const Word& a, const Word& b) const
    {
        if (a.size() != b.size())
            return a.size() < b.size();
        return std::memcmp(a.begin(), b.begin(), a.size()) < 0;
    }
};

// Renders a word as "a*b*c" using generator names; the empty word is "1".
std::string word_to_string(const Word& w, const std::vector<std::string>& names);

}  // namespace qalg

template <>
struct std::hash<qalg::Word> {
    std::size_t operator()(const qalg::Word& w) const { return w.hash(); }
};
