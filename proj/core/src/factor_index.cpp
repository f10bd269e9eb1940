#include "parry/factor_index.hpp"

#include <algorithm>
#include <memory>
#include <numeric>

#include "parry/errors.hpp"

namespace parry {

namespace {

// Prefix doubling over cyclic shifts of text + sentinel, counting sort per round.
std::vector<std::uint32_t> build_suffix_array(std::span<const Letter> text) {
  const std::size_t n = text.size() + 1;
  std::vector<std::uint32_t> s(n);
  for (std::size_t i = 0; i + 1 < n; ++i) s[i] = std::uint32_t{text[i]} + 1;
  s[n - 1] = 0;

  const std::size_t alphabet = 258;
  std::vector<std::uint32_t> p(n), c(n), pn(n), cn(n);
  std::vector<std::uint32_t> cnt(std::max(alphabet, n), 0);
  for (auto x : s) ++cnt[x];
  for (std::size_t i = 1; i < alphabet; ++i) cnt[i] += cnt[i - 1];
  for (std::size_t i = n; i-- > 0;) p[--cnt[s[i]]] = static_cast<std::uint32_t>(i);
  c[p[0]] = 0;
  std::uint32_t classes = 1;
  for (std::size_t i = 1; i < n; ++i) {
    if (s[p[i]] != s[p[i - 1]]) ++classes;
    c[p[i]] = classes - 1;
  }
  for (std::size_t h = 1; h < n && classes < n; h <<= 1) {
    for (std::size_t i = 0; i < n; ++i) {
      pn[i] = static_cast<std::uint32_t>((p[i] + n - h) % n);
    }
    std::fill(cnt.begin(), cnt.begin() + classes, 0);
    for (std::size_t i = 0; i < n; ++i) ++cnt[c[pn[i]]];
    for (std::size_t i = 1; i < classes; ++i) cnt[i] += cnt[i - 1];
    for (std::size_t i = n; i-- > 0;) p[--cnt[c[pn[i]]]] = pn[i];
    cn[p[0]] = 0;
    classes = 1;
    for (std::size_t i = 1; i < n; ++i) {
      auto cur = std::make_pair(c[p[i]], c[(p[i] + h) % n]);
      auto prev = std::make_pair(c[p[i - 1]], c[(p[i - 1] + h) % n]);
      if (cur != prev) ++classes;
      cn[p[i]] = classes - 1;
    }
    c.swap(cn);
  }
  // p[0] is the sentinel.
  return std::vector<std::uint32_t>(p.begin() + 1, p.end());
}

std::vector<std::uint32_t> build_lcp(std::span<const Letter> text,
                                     const std::vector<std::uint32_t>& sa) {
  const std::size_t n = text.size();
  std::vector<std::uint32_t> rank(n), lcp(n, 0);
  for (std::size_t i = 0; i < n; ++i) rank[sa[i]] = static_cast<std::uint32_t>(i);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (rank[i] == 0) {
      k = 0;
      continue;
    }
    std::size_t j = sa[rank[i] - 1];
    while (i + k < n && j + k < n && text[i + k] == text[j + k]) ++k;
    lcp[rank[i]] = static_cast<std::uint32_t>(k);
    if (k) --k;
  }
  return lcp;
}

}  // namespace

FactorIndex::FactorIndex(std::vector<Letter> text)
    : text_(std::move(text)), sa_(build_suffix_array(text_)), lcp_(build_lcp(text_, sa_)) {}

template <class F>
void FactorIndex::for_each_class(std::size_t n, F&& f) const {
  const std::size_t len = text_.size();
  std::size_t begin = 0;
  bool open = false;
  std::size_t run_min = 0;  // min lcp since the last eligible suffix
  std::size_t last = 0;
  for (std::size_t i = 0; i < sa_.size(); ++i) {
    if (i > 0) run_min = std::min<std::size_t>(run_min, lcp_[i]);
    if (len - sa_[i] < n) continue;
    if (!open || run_min < n) {
      if (open) f(begin, last + 1);
      begin = i;
      open = true;
    }
    last = i;
    run_min = len;
  }
  if (open) f(begin, last + 1);
}

std::size_t FactorIndex::distinct_count(std::size_t n) const {
  if (n == 0) return 1;
  std::size_t count = 0;
  for_each_class(n, [&](std::size_t, std::size_t) { ++count; });
  return count;
}

std::vector<Word> FactorIndex::factors(std::size_t n) const {
  if (n == 0) return {Word{}};
  std::vector<Word> out;
  for_each_class(n, [&](std::size_t b, std::size_t) {
    out.emplace_back(std::span<const Letter>(text_).subspan(sa_[b], n));
  });
  return out;
}

bool FactorIndex::contains(std::span<const Letter> w) const {
  if (w.empty()) return true;
  // First suffix whose prefix of length |w| is >= w.
  auto it = std::lower_bound(sa_.begin(), sa_.end(), w, [&](std::uint32_t pos, std::span<const Letter> key) {
    const std::size_t avail = text_.size() - pos;
    const std::size_t m = std::min(avail, key.size());
    for (std::size_t i = 0; i < m; ++i) {
      if (text_[pos + i] != key[i]) return text_[pos + i] < key[i];
    }
    return avail < key.size();
  });
  if (it == sa_.end()) return false;
  const std::size_t pos = *it;
  return text_.size() - pos >= w.size() &&
         std::equal(w.begin(), w.end(), text_.begin() + static_cast<std::ptrdiff_t>(pos));
}

std::size_t FactorIndex::observed_recurrence(std::size_t n) const {
  const std::size_t len = text_.size();
  if (n == 0 || n > len) return 0;
  std::size_t worst = 0;
  std::vector<std::uint32_t> starts;
  for_each_class(n, [&](std::size_t b, std::size_t e) {
    starts.clear();
    for (std::size_t i = b; i < e; ++i) {
      if (len - sa_[i] >= n) starts.push_back(sa_[i]);
    }
    std::sort(starts.begin(), starts.end());
    std::size_t need = std::max<std::size_t>(starts.front() + n, len - starts.back());
    for (std::size_t i = 1; i < starts.size(); ++i) {
      need = std::max<std::size_t>(need, starts[i] - starts[i - 1] + n - 1);
    }
    worst = std::max(worst, need);
  });
  return worst;
}

Language::Language(const Substitution& sub, std::size_t max_length, std::size_t min_prefix)
    : sub_(sub),
      max_length_(max_length),
      index_([&] {
        constexpr std::size_t kLimit = std::size_t{1} << 28;
        std::size_t length = std::max({std::size_t{64} * max_length, std::size_t{1024}, min_prefix});
        FixedPointStream stream(sub);
        auto first = stream.prefix(length);
        auto small = std::make_unique<FactorIndex>(std::vector<Letter>(first.begin(), first.end()));
        for (;;) {
          auto span = stream.prefix(2 * length);
          auto big = std::make_unique<FactorIndex>(std::vector<Letter>(span.begin(), span.end()));
          bool stable = true;
          for (std::size_t n = max_length; n >= 1 && stable; --n) {
            stable = small->distinct_count(n) == big->distinct_count(n);
          }
          if (stable) return std::move(*big);
          length *= 2;
          if (length > kLimit) {
            throw PrecisionError("factor sets did not stabilize below " +
                                 std::to_string(kLimit) + " letters");
          }
          small = std::move(big);
        }
      }()) {}

void Language::check_length(std::size_t n) const {
  if (n > max_length_) {
    throw InvalidInput("length " + std::to_string(n) + " exceeds the language bound " +
                       std::to_string(max_length_));
  }
}

std::size_t Language::complexity(std::size_t n) const {
  check_length(n);
  return index_.distinct_count(n);
}

std::vector<Word> Language::factors(std::size_t n) const {
  check_length(n);
  return index_.factors(n);
}

std::vector<Letter> Language::left_extensions(std::span<const Letter> w) const {
  std::vector<Letter> out;
  std::vector<Letter> probe(w.size() + 1);
  std::copy(w.begin(), w.end(), probe.begin() + 1);
  for (std::size_t x = 0; x < alphabet_size(); ++x) {
    probe[0] = static_cast<Letter>(x);
    if (contains(probe)) out.push_back(static_cast<Letter>(x));
  }
  return out;
}

std::vector<Letter> Language::right_extensions(std::span<const Letter> w) const {
  std::vector<Letter> out;
  std::vector<Letter> probe(w.begin(), w.end());
  probe.push_back(0);
  for (std::size_t x = 0; x < alphabet_size(); ++x) {
    probe.back() = static_cast<Letter>(x);
    if (contains(probe)) out.push_back(static_cast<Letter>(x));
  }
  return out;
}

std::vector<Word> factors_of_length(const Substitution& sub, std::size_t n) {
  return Language(sub, n).factors(n);
}

}  // namespace parry
