#include "turaev/word.hpp"

#include <algorithm>

namespace turaev {

FreeWord FreeWord::reduced() const {
  std::vector<Letter> stack;
  stack.reserve(letters_.size());
  for (const auto& l : letters_) {
    if (!stack.empty() && stack.back().gen == l.gen && stack.back().exp == -l.exp)
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return FreeWord(std::move(stack));
}

bool FreeWord::is_reduced() const {
  for (std::size_t i = 1; i < letters_.size(); ++i)
    if (letters_[i].gen == letters_[i - 1].gen && letters_[i].exp == -letters_[i - 1].exp)
      return false;
  return true;
}

FreeWord FreeWord::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return FreeWord(std::move(out));
}

FreeWord FreeWord::operator*(const FreeWord& rhs) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return FreeWord(std::move(out));
}

std::size_t FreeWord::count(std::size_t gen) const {
  return static_cast<std::size_t>(
      std::count_if(letters_.begin(), letters_.end(), [gen](const Letter& l) { return l.gen == gen; }));
}

long FreeWord::exponent_sum(std::size_t gen) const {
  long s = 0;
  for (const auto& l : letters_)
    if (l.gen == gen) s += l.exp;
  return s;
}

}  // namespace turaev
