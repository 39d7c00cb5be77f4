#include "jhplab/word.hpp"

#include <cassert>
#include <numeric>

namespace jhplab {

Word Word::unit(std::size_t generators, std::size_t index)
{
    Word w(generators);
    w.mult_[index] = 1;
    return w;
}

bool Word::is_zero() const
{
    for (int m : mult_)
        if (m != 0)
            return false;
    return true;
}

int Word::total() const
{
    return std::accumulate(mult_.begin(), mult_.end(), 0);
}

int Word::grade(std::span<const int> grades) const
{
    assert(grades.size() == mult_.size());
    int g = 0;
    for (std::size_t i = 0; i < mult_.size(); ++i)
        g += mult_[i] * grades[i];
    return g;
}

bool Word::dominates(const Word& other) const
{
    for (std::size_t i = 0; i < mult_.size(); ++i)
        if (mult_[i] < other.mult_[i])
            return false;
    return true;
}

Word& Word::operator+=(const Word& other)
{
    assert(other.size() == size());
    for (std::size_t i = 0; i < mult_.size(); ++i)
        mult_[i] += other.mult_[i];
    return *this;
}

Word& Word::operator-=(const Word& other)
{
    assert(other.size() == size());
    for (std::size_t i = 0; i < mult_.size(); ++i)
        mult_[i] -= other.mult_[i];
    return *this;
}

std::string Word::format(std::span<const std::string> names) const
{
    std::string out;
    for (std::size_t i = 0; i < mult_.size(); ++i) {
        if (mult_[i] == 0)
            continue;
        if (!out.empty())
            out += '+';
        if (mult_[i] != 1)
            out += std::to_string(mult_[i]) + '*';
        out += i < names.size() ? names[i] : "g" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

std::size_t WordHash::operator()(const Word& w) const noexcept
{
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (int m : w.multiplicities())
        h = (h ^ static_cast<std::size_t>(m + 0x51)) * 0x100000001b3ull;
    return h;
}

} // namespace jhplab
