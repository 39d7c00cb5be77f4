#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace jhplab {

// Multiplicity vector over a fixed generator list.
class Word {
public:
    Word() = default;
    explicit Word(std::size_t generators) : mult_(generators, 0) {}
    explicit Word(std::vector<int> mult) : mult_(std::move(mult)) {}

    static Word unit(std::size_t generators, std::size_t index);

    std::size_t size() const { return mult_.size(); }
    int operator[](std::size_t i) const { return mult_[i]; }
    int& operator[](std::size_t i) { return mult_[i]; }
    const std::vector<int>& multiplicities() const { return mult_; }

    bool is_zero() const;
    int total() const;
    int grade(std::span<const int> grades) const;
    // Componentwise comparison.
    bool dominates(const Word& other) const;

    Word& operator+=(const Word& other);
    Word& operator-=(const Word& other);
    friend Word operator+(Word a, const Word& b) { return a += b; }
    friend Word operator-(Word a, const Word& b) { return a -= b; }

    auto operator<=>(const Word&) const = default;
    bool operator==(const Word&) const = default;

    std::string format(std::span<const std::string> names) const;

private:
    std::vector<int> mult_;
};

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
};

} // namespace jhplab
