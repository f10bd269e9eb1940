#include "parry/word.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "parry/errors.hpp"

namespace parry {

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  recount();
}

Word::Word(std::span<const Letter> letters)
    : letters_(letters.begin(), letters.end()) {
  recount();
}

Word::Word(std::initializer_list<Letter> letters) : letters_(letters) {
  recount();
}

Word Word::parse(std::string_view text) {
  std::vector<Letter> out;
  if (text.find(',') == std::string_view::npos) {
    out.reserve(text.size());
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw InvalidInput("invalid letter '" + std::string(1, c) +
                           "' in word \"" + std::string(text) + "\"");
      }
      out.push_back(static_cast<Letter>(c - '0'));
    }
    return Word(std::move(out));
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto token = text.substr(pos, comma - pos);
    unsigned value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() ||
        value > std::numeric_limits<Letter>::max()) {
      throw InvalidInput("invalid letter \"" + std::string(token) +
                         "\" in word \"" + std::string(text) + "\"");
    }
    out.push_back(static_cast<Letter>(value));
    pos = comma + 1;
  }
  return Word(std::move(out));
}

void Word::recount() {
  counts_.clear();
  for (Letter x : letters_) {
    if (x >= counts_.size()) counts_.resize(std::size_t{x} + 1, 0);
    ++counts_[x];
  }
}

Word& Word::push_back(Letter x) {
  letters_.push_back(x);
  if (x >= counts_.size()) counts_.resize(std::size_t{x} + 1, 0);
  ++counts_[x];
  return *this;
}

Word& Word::append(std::span<const Letter> other) {
  letters_.reserve(letters_.size() + other.size());
  for (Letter x : other) push_back(x);
  return *this;
}

Word Word::reversed() const {
  Word r = *this;
  std::reverse(r.letters_.begin(), r.letters_.end());
  return r;
}

bool Word::is_palindrome() const noexcept { return parry::is_palindrome(letters_); }

Word Word::substr(std::size_t pos, std::size_t len) const {
  pos = std::min(pos, letters_.size());
  len = std::min(len, letters_.size() - pos);
  return Word(std::span<const Letter>(letters_).subspan(pos, len));
}

bool Word::starts_with(std::span<const Letter> prefix) const noexcept {
  return prefix.size() <= letters_.size() &&
         std::equal(prefix.begin(), prefix.end(), letters_.begin());
}

bool Word::ends_with(std::span<const Letter> suffix) const noexcept {
  return suffix.size() <= letters_.size() &&
         std::equal(suffix.begin(), suffix.end(),
                    letters_.end() - static_cast<std::ptrdiff_t>(suffix.size()));
}

std::string Word::to_string(std::size_t alphabet_size) const {
  return render(letters_, alphabet_size);
}

Word operator+(Word lhs, std::span<const Letter> rhs) {
  lhs.append(rhs);
  return lhs;
}

Word operator+(Word lhs, const Word& rhs) {
  lhs.append(rhs.letters());
  return lhs;
}

Word power(Letter x, std::size_t count) {
  return Word(std::vector<Letter>(count, x));
}

bool is_palindrome(std::span<const Letter> w) noexcept {
  return std::equal(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(w.size() / 2),
                    w.rbegin());
}

std::string render(std::span<const Letter> w, std::size_t alphabet_size) {
  if (alphabet_size == 0) {
    for (Letter x : w) alphabet_size = std::max<std::size_t>(alphabet_size, x + 1u);
  }
  std::string out;
  if (alphabet_size <= 10) {
    out.reserve(w.size());
    for (Letter x : w) out.push_back(static_cast<char>('0' + x));
    return out;
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(w[i]);
  }
  return out;
}

bool is_central_factor(std::span<const Letter> inner,
                       std::span<const Letter> outer) noexcept {
  if (inner.size() > outer.size() || (outer.size() - inner.size()) % 2 != 0) {
    return false;
  }
  auto offset = (outer.size() - inner.size()) / 2;
  return std::equal(inner.begin(), inner.end(), outer.begin() + static_cast<std::ptrdiff_t>(offset));
}

}  // namespace parry
