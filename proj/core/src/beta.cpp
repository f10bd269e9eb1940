#include "parry/beta.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "parry/errors.hpp"

namespace parry {

namespace {

mpf_class ipow(const mpf_class& x, unsigned long e, unsigned long bits) {
  mpf_class r(0, bits);
  mpf_pow_ui(r.get_mpf_t(), x.get_mpf_t(), e);
  return r;
}

// sum_{i>=0} t_{s+i} inv^{i+1} with t 0-based over preperiod then period^omega.
mpf_class tail_value(const RenyiExpansion& e, std::size_t s, const mpf_class& inv,
                     unsigned long bits) {
  const auto& pre = e.preperiod();
  const auto& per = e.period();
  const std::size_t m = pre.size();
  const std::size_t p = per.size();
  if (s >= m) {
    const std::size_t r = (s - m) % p;
    mpf_class sum(0, bits);
    mpf_class w(inv, bits);
    for (std::size_t j = 0; j < p; ++j) {
      sum += per[(r + j) % p] * w;
      w *= inv;
    }
    mpf_class denom(1, bits);
    denom -= ipow(inv, p, bits);
    return mpf_class(sum / denom, bits);
  }
  mpf_class sum(0, bits);
  mpf_class w(inv, bits);
  for (std::size_t i = 0; i < m - s; ++i) {
    sum += pre[s + i] * w;
    w *= inv;
  }
  // w now holds inv^(m-s+1); the periodic tail needs inv^(m-s).
  sum += ipow(inv, m - s, bits) * tail_value(e, m, inv, bits);
  return sum;
}

void require_admissible(const RenyiExpansion& e) {
  auto check = parry_check(e);
  if (!check) {
    throw InvalidInput("\"" + e.to_string() + "\" is not a Renyi expansion of unity: shift " +
                       std::to_string(*check.violating_shift) + " is not strictly smaller");
  }
}

}  // namespace

unsigned long precision_bits(unsigned digits10) {
  return static_cast<unsigned long>(std::ceil(digits10 * 3.3219280948873623)) + 64;
}

mpf_class pow10_neg(unsigned exponent, unsigned long bits) {
  mpf_class ten(10, bits);
  mpf_class r(1, bits);
  r /= ipow(ten, exponent, bits);
  return r;
}

QuadraticParams::QuadraticParams(unsigned a, unsigned b) : a_(a), b_(b) {
  if (b < 1 || a < b + 1) {
    throw InvalidParams("quadratic parameters need a - 1 >= b >= 1, got a=" +
                        std::to_string(a) + ", b=" + std::to_string(b));
  }
}

std::string QuadraticParams::to_string() const {
  return "(a=" + std::to_string(a_) + ", b=" + std::to_string(b_) + ")";
}

BetaValue::BetaValue(mpf_class value, unsigned precision, std::optional<QuadraticSurd> exact)
    : value_(std::move(value)),
      precision_(precision),
      bits_(precision_bits(precision)),
      exact_(exact) {
  if (precision == 0) throw InvalidInput("precision must be positive");
  value_.set_prec(bits_);
}

mpf_class BetaValue::tolerance() const { return pow10_neg(precision_ / 2, bits_); }

std::string BetaValue::to_string(unsigned digits) const {
  std::ostringstream os;
  os.precision(digits ? digits : precision_);
  os << value_;
  return os.str();
}

BetaValue beta_of(const QuadraticParams& params, unsigned precision) {
  const long long a = params.a();
  const long long b = params.b();
  QuadraticSurd surd{a + 1, 1, (a + 1) * (a + 1) - 4 * (a - b), 2};
  const auto bits = precision_bits(precision);
  mpf_class root(static_cast<long>(surd.d), bits);
  root = sqrt(root);
  mpf_class beta(static_cast<long>(surd.u), bits);
  beta += root;
  beta /= static_cast<long>(surd.w);
  return BetaValue(beta, precision, surd);
}

BetaValue beta_of(const RenyiExpansion& expansion, unsigned precision) {
  require_admissible(expansion);
  if (expansion.preperiod_length() == 1 && expansion.period_length() == 1 &&
      expansion.period()[0] >= 1 && expansion.preperiod()[0] >= expansion.period()[0] + 1) {
    return beta_of(QuadraticParams(expansion.preperiod()[0], expansion.period()[0]), precision);
  }
  const auto bits = precision_bits(precision);
  const Digit t1 = expansion.digit(1);
  mpf_class lo(t1, bits);
  mpf_class hi(t1 + 1, bits);
  if (t1 == 1) lo = mpf_class(1, bits);
  // f(x) = sum t_i x^-i is decreasing on (1, inf); f(beta) = 1.
  for (unsigned long it = 0; it < bits + 8; ++it) {
    mpf_class mid(lo + hi, bits);
    mid /= 2;
    mpf_class inv(1, bits);
    inv /= mid;
    if (tail_value(expansion, 0, inv, bits) > 1) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  mpf_class beta(lo + hi, bits);
  beta /= 2;
  return BetaValue(beta, precision);
}

RenyiExpansion renyi_of_quadratic(const QuadraticParams& params) {
  return RenyiExpansion({params.a()}, {params.b()});
}

mpf_class renyi_series_sum(const RenyiExpansion& expansion, const BetaValue& beta) {
  const auto bits = beta.bits();
  mpf_class inv(1, bits);
  inv /= beta.value();
  const mpf_class cutoff = pow10_neg(beta.precision() + 8, bits);
  mpf_class sum(0, bits);
  mpf_class w(inv, bits);
  Digit bound = 1;
  for (Digit t : expansion.preperiod()) bound = std::max(bound, t);
  for (Digit t : expansion.period()) bound = std::max(bound, t);
  for (std::size_t i = 1;; ++i) {
    sum += expansion.digit(i) * w;
    w *= inv;
    if (i > expansion.preperiod_length() && w * bound < cutoff) break;
  }
  return sum;
}

mpf_class BetaExpansion::reconstruct(const BetaValue& beta) const {
  const auto bits = beta.bits();
  mpf_class sum(0, bits);
  for (Digit d : digits) {
    sum *= beta.value();
    sum += d;
  }
  // sum = sum_j digits[j] beta^(n-1-j); rescale so digits[0] sits at beta^k.
  const long shift = top_exponent - static_cast<long>(digits.size()) + 1;
  if (shift >= 0) {
    sum *= ipow(beta.value(), static_cast<unsigned long>(shift), bits);
  } else {
    sum /= ipow(beta.value(), static_cast<unsigned long>(-shift), bits);
  }
  return sum;
}

std::vector<Digit> BetaExpansion::integer_digits() const {
  if (top_exponent < 0) return {0};
  const auto n = std::min<std::size_t>(digits.size(), static_cast<std::size_t>(top_exponent) + 1);
  std::vector<Digit> out(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(n));
  out.resize(static_cast<std::size_t>(top_exponent) + 1, 0);
  return out;
}

std::string BetaExpansion::to_string() const {
  const bool wide = std::any_of(digits.begin(), digits.end(), [](Digit d) { return d > 9; });
  std::ostringstream os;
  auto put = [&](Digit d, bool first) {
    if (wide && !first) os << ' ';
    os << d;
  };
  int exponent = top_exponent;
  bool first = true;
  if (exponent < 0) {
    os << '0' << '.';
    for (int e = -1; e > exponent; --e) put(0, first), first = false;
  }
  for (std::size_t i = 0; i < digits.size(); ++i) {
    put(digits[i], first);
    first = false;
    if (exponent == 0 && i + 1 < digits.size()) os << '.', first = true;
    --exponent;
  }
  return os.str();
}

BetaExpansion beta_expand(const mpf_class& x, const BetaValue& beta, std::size_t digit_count) {
  if (x < 0) throw InvalidInput("beta_expand needs x >= 0");
  if (digit_count == 0) throw InvalidInput("beta_expand needs digit_count >= 1");
  const auto bits = beta.bits();
  const mpf_class& b = beta.value();
  // Values this close to an integer boundary are treated as on it.
  const mpf_class snap = pow10_neg(beta.precision() * 3 / 4, bits);

  BetaExpansion out;
  out.digits.assign(digit_count, 0);
  if (x == 0) return out;

  // Largest k with beta^k <= x.
  int k = 0;
  mpf_class scaled(x, bits);  // x / beta^k
  while (scaled >= b * (1 - snap)) {
    scaled /= b;
    ++k;
  }
  while (scaled < 1 - snap) {
    scaled *= b;
    --k;
  }
  out.top_exponent = k;

  mpf_class y(scaled / b, bits);  // x / beta^(k+1), in [1/beta, 1)
  const Digit max_digit = static_cast<Digit>(mpf_class(ceil(b)).get_ui()) - 1;
  for (std::size_t i = 0; i < digit_count; ++i) {
    mpf_class by(b * y, bits);
    mpf_class fl(floor(by + snap), bits);
    Digit d = static_cast<Digit>(fl.get_ui());
    if (d > max_digit) {
      throw PrecisionError("beta_expand produced digit " + std::to_string(d) +
                           " > ceil(beta) - 1; increase precision");
    }
    out.digits[i] = d;
    y = by - fl;
    if (y < 0) y = 0;
  }
  return out;
}

std::optional<std::size_t> GapDistances::classify(const mpf_class& gap,
                                                  const mpf_class& tolerance) const {
  std::optional<std::size_t> best;
  mpf_class best_err;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    mpf_class err = abs(gap - values_[k]);
    if (err <= tolerance && (!best || err < best_err)) {
      best = k;
      best_err = err;
    }
  }
  return best;
}

GapDistances gap_distances(const RenyiExpansion& expansion, const BetaValue& beta) {
  const auto bits = beta.bits();
  mpf_class inv(1, bits);
  inv /= beta.value();
  const std::size_t n = expansion.preperiod_length() + expansion.period_length();
  std::vector<mpf_class> values;
  values.reserve(n);
  for (std::size_t k = 0; k < n; ++k) values.push_back(tail_value(expansion, k, inv, bits));
  return GapDistances(std::move(values));
}

namespace {

// Admissible integer digit strings of a fixed length in increasing order.
// A string is admissible iff no suffix, padded with zeros, reaches d_beta(1)
// lexicographically; tracked incrementally as the set of suffix starts still
// tied with a prefix of d_beta(1).
class AdmissibleStrings {
 public:
  AdmissibleStrings(const RenyiExpansion& e, Digit max_digit)
      : expansion_(e), max_digit_(max_digit) {}

  template <class Emit>
  void enumerate(std::size_t length, Emit&& emit) {
    current_.assign(length, 0);
    std::vector<std::size_t> tied;
    step(0, length, tied, emit);
  }

 private:
  template <class Emit>
  void step(std::size_t pos, std::size_t length, const std::vector<std::size_t>& tied,
            Emit& emit) {
    if (pos == length) {
      emit(current_);
      return;
    }
    const Digit first = (pos == 0 && length > 1) ? 1 : 0;
    std::vector<std::size_t> next;
    for (Digit x = first; x <= max_digit_; ++x) {
      next.clear();
      bool ok = true;
      for (std::size_t matched : tied) {
        Digit t = expansion_.digit(matched + 1);
        if (x > t) {
          ok = false;
          break;
        }
        if (x == t) next.push_back(matched + 1);
      }
      if (!ok) break;  // larger x fails too
      Digit t1 = expansion_.digit(1);
      if (x > t1) break;
      if (x == t1) next.push_back(1);
      current_[pos] = x;
      step(pos + 1, length, next, emit);
    }
  }

  const RenyiExpansion& expansion_;
  Digit max_digit_;
  std::vector<Digit> current_;
};

}  // namespace

BetaIntegers beta_integers(const RenyiExpansion& expansion, const BetaValue& beta,
                           std::size_t count, double tolerance) {
  if (count < 2) throw InvalidInput("beta_integers needs count >= 2");
  require_admissible(expansion);
  if (expansion.is_simple()) {
    throw UnsupportedVariant("beta-integers of simple Parry numbers are not supported");
  }
  const auto bits = beta.bits();
  const Digit max_digit = static_cast<Digit>(mpf_class(ceil(beta.value())).get_ui()) - 1;

  struct Entry {
    mpf_class value;
    std::vector<Digit> digits;
    mpz_class p, q;  // value = p + q beta when the exact form is tracked
  };
  std::optional<QuadraticParams> quad;
  if (beta.exact() && expansion.preperiod_length() == 1 && expansion.period_length() == 1) {
    quad.emplace(expansion.preperiod()[0], expansion.period()[0]);
  }

  std::vector<Entry> entries;
  AdmissibleStrings gen(expansion, max_digit);
  for (std::size_t length = 1; entries.size() < count; ++length) {
    gen.enumerate(length, [&](const std::vector<Digit>& digits) {
      Entry e{mpf_class(0, bits), digits, 0, 0};
      for (Digit d : digits) {
        e.value *= beta.value();
        e.value += d;
        if (quad) {
          // (p + q beta) beta + d with beta^2 = (a+1) beta - (a-b)
          mpz_class p = e.p, q = e.q;
          e.p = d - q * (quad->a() - quad->b());
          e.q = p + q * (quad->a() + 1);
        }
      }
      entries.push_back(std::move(e));
    });
    if (length > 64) throw PrecisionError("beta-integer enumeration did not terminate");
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& x, const Entry& y) { return x.value < y.value; });
  entries.resize(count);

  const auto deltas = gap_distances(expansion, beta);
  const mpf_class tol(tolerance, bits);
  BetaIntegers out;
  out.values.reserve(count);
  out.expansions.reserve(count);
  std::vector<Letter> letters;
  letters.reserve(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    if (i > 0) {
      mpf_class gap(entries[i].value - entries[i - 1].value, bits);
      auto k = deltas.classify(gap, tol);
      if (!k) {
        std::ostringstream os;
        os << "gap " << gap << " between beta-integers " << i - 1 << " and " << i
           << " matches no Delta_k within " << tolerance;
        throw PrecisionError(os.str());
      }
      if (quad) {
        mpz_class dp = entries[i].p - entries[i - 1].p;
        mpz_class dq = entries[i].q - entries[i - 1].q;
        std::optional<std::size_t> exact;
        if (dp == 1 && dq == 0) exact = 0;                                // Delta_0 = 1
        if (dp == -static_cast<long>(quad->a()) && dq == 1) exact = 1;  // Delta_1 = beta - a
        if (exact != k) {
          throw PrecisionError("numeric and exact gap classification disagree at index " +
                               std::to_string(i));
        }
      }
      letters.push_back(static_cast<Letter>(*k));
    }
    out.values.push_back(entries[i].value);
    out.expansions.push_back(std::move(entries[i].digits));
  }
  out.gaps = Word(std::move(letters));
  return out;
}

}  // namespace parry
