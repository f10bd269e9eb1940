#include "parry/substitution.hpp"

#include <algorithm>

#include "json.hpp"
#include "parry/errors.hpp"

namespace parry {

Substitution::Substitution(std::vector<Word> images, Letter axiom)
    : images_(std::move(images)), axiom_(axiom) {
  if (images_.empty()) throw InvalidInput("substitution needs a nonempty alphabet");
  if (axiom_ >= images_.size()) throw InvalidInput("axiom outside the alphabet");
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x].empty()) {
      throw InvalidInput("image of letter " + std::to_string(x) + " is empty");
    }
    for (Letter y : images_[x]) {
      if (y >= images_.size()) {
        throw InvalidInput("image of letter " + std::to_string(x) +
                           " uses a letter outside the alphabet");
      }
    }
  }
  const Word& head = images_[axiom_];
  if (head.size() < 2 || head[0] != axiom_) {
    throw InvalidInput("image of the axiom must start with the axiom and have length >= 2");
  }
}

std::size_t Substitution::max_image_length() const noexcept {
  std::size_t n = 0;
  for (const auto& w : images_) n = std::max(n, w.size());
  return n;
}

Word Substitution::apply(std::span<const Letter> w) const {
  std::vector<Letter> out;
  apply_into(w, out);
  return Word(std::move(out));
}

void Substitution::apply_into(std::span<const Letter> w, std::vector<Letter>& out) const {
  for (Letter x : w) {
    const auto img = images_.at(x).letters();
    out.insert(out.end(), img.begin(), img.end());
  }
}

std::vector<std::vector<std::size_t>> Substitution::incidence_matrix() const {
  const auto k = alphabet_size();
  std::vector<std::vector<std::size_t>> m(k, std::vector<std::size_t>(k, 0));
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < k; ++i) m[i][j] = images_[j].count(static_cast<Letter>(i));
  }
  return m;
}

std::optional<QuadraticParams> Substitution::quadratic_params() const {
  if (alphabet_size() != 2 || axiom_ != 0) return std::nullopt;
  auto zeros_then_one = [](const Word& w) -> std::optional<unsigned> {
    if (w.size() < 2 || w[w.size() - 1] != 1 || w.count(1) != 1) return std::nullopt;
    return static_cast<unsigned>(w.size() - 1);
  };
  auto a = zeros_then_one(images_[0]);
  auto b = zeros_then_one(images_[1]);
  if (!a || !b || *b < 1 || *a < *b + 1) return std::nullopt;
  return QuadraticParams(*a, *b);
}

std::string Substitution::to_json() const {
  nlohmann::json j;
  j["alphabet"] = alphabet_size();
  std::vector<std::string> imgs;
  for (const auto& w : images_) imgs.push_back(w.to_string(alphabet_size()));
  j["images"] = imgs;
  j["axiom"] = axiom_;
  return j.dump();
}

Substitution Substitution::from_json(std::string_view json) {
  try {
    auto j = nlohmann::json::parse(json);
    auto k = j.at("alphabet").get<std::size_t>();
    std::vector<Word> images;
    for (const auto& s : j.at("images")) images.push_back(Word::parse(s.get<std::string>()));
    if (images.size() != k) throw InvalidInput("substitution JSON: image count != alphabet");
    return Substitution(std::move(images), j.value("axiom", Letter{0}));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed substitution JSON: ") + e.what());
  }
}

Substitution quadratic_substitution(const QuadraticParams& params) {
  return Substitution({power(0, params.a()) + Word{1}, power(0, params.b()) + Word{1}}, 0);
}

Substitution parry_substitution(const RenyiExpansion& expansion) {
  if (expansion.is_simple()) {
    throw UnsupportedVariant("simple Parry expansions (finite d_beta(1)) are not supported");
  }
  auto check = parry_check(expansion);
  if (!check) {
    throw InvalidInput("\"" + expansion.to_string() +
                       "\" fails Parry's admissibility test at shift " +
                       std::to_string(*check.violating_shift));
  }
  const std::size_t m = expansion.preperiod_length();
  const std::size_t p = expansion.period_length();
  if (m == 0) throw UnsupportedVariant("purely periodic expansions have no canonical substitution");
  const std::size_t k = m + p;
  if (k > 256) throw UnsupportedVariant("alphabet larger than 256 letters");
  std::vector<Word> images;
  images.reserve(k);
  for (std::size_t j = 0; j + 1 < k; ++j) {
    images.push_back(power(0, expansion.digit(j + 1)) + Word{static_cast<Letter>(j + 1)});
  }
  images.push_back(power(0, expansion.digit(k)) + Word{static_cast<Letter>(m)});
  return Substitution(std::move(images), 0);
}

bool is_primitive(const Substitution& sub) {
  const auto k = sub.alphabet_size();
  // Boolean incidence powers: reach[i][j] iff letter i occurs in phi^n(j).
  std::vector<std::vector<bool>> base(k, std::vector<bool>(k, false));
  for (std::size_t j = 0; j < k; ++j) {
    for (Letter i : sub.image(static_cast<Letter>(j))) base[i][j] = true;
  }
  auto reach = base;
  auto positive = [&](const std::vector<std::vector<bool>>& m) {
    return std::all_of(m.begin(), m.end(),
                       [](const auto& row) { return std::all_of(row.begin(), row.end(), [](bool v) { return v; }); });
  };
  for (std::size_t n = 1; n <= std::max<std::size_t>(k, 1) * std::max<std::size_t>(k, 1); ++n) {
    if (positive(reach)) return true;
    std::vector<std::vector<bool>> next(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t l = 0; l < k; ++l)
        if (reach[i][l])
          for (std::size_t j = 0; j < k; ++j)
            if (base[l][j]) next[i][j] = true;
    reach = std::move(next);
  }
  return positive(reach);
}

FixedPointStream::FixedPointStream(Substitution sub) : sub_(std::move(sub)) {
  const auto head = sub_.image(sub_.axiom()).letters();
  buffer_.assign(head.begin(), head.end());
}

std::span<const Letter> FixedPointStream::prefix(std::size_t length) {
  while (buffer_.size() < length) {
    const auto img = sub_.image(buffer_[cursor_]).letters();
    buffer_.insert(buffer_.end(), img.begin(), img.end());
    ++cursor_;
  }
  return std::span<const Letter>(buffer_).first(length);
}

std::vector<Letter> fixed_point_letters(const Substitution& sub, std::size_t length) {
  std::vector<Letter> out;
  out.reserve(length + sub.max_image_length());
  const auto head = sub.image(sub.axiom()).letters();
  out.assign(head.begin(), head.end());
  for (std::size_t cursor = 1; out.size() < length; ++cursor) {
    const auto img = sub.image(out[cursor]).letters();
    out.insert(out.end(), img.begin(), img.end());
  }
  out.resize(length);
  return out;
}

Word fixed_point_prefix(const Substitution& sub, std::size_t length) {
  return Word(fixed_point_letters(sub, length));
}

}  // namespace parry
