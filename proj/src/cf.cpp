#include "farey/cf.hpp"

#include <stdexcept>

namespace farey {

CFTuple::CFTuple(std::vector<Int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("CFTuple: empty tuple");
  for (const Int& n : entries_) {
    if (n < 1) throw std::invalid_argument("CFTuple: entries must be positive");
  }
}

Int CFTuple::norm() const {
  Int s = 0;
  for (const Int& n : entries_) s += n;
  return s - 1;
}

std::string CFTuple::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ",";
    out += entries_[i].str();
  }
  out += ")";
  return out;
}

CFTuple CFTuple::parse(std::string_view text) {
  if (text.size() < 3 || text.front() != '(' || text.back() != ')') {
    throw std::invalid_argument("CFTuple: expected \"(n1,n2,...)\"");
  }
  std::vector<Int> entries;
  std::string_view body = text.substr(1, text.size() - 2);
  while (!body.empty()) {
    const auto comma = body.find(',');
    const std::string_view piece =
        comma == std::string_view::npos ? body : body.substr(0, comma);
    try {
      entries.emplace_back(std::string(piece));
    } catch (const std::runtime_error&) {
      throw std::invalid_argument("CFTuple: bad entry '" + std::string(piece) + "'");
    }
    body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
  }
  return CFTuple(std::move(entries));
}

Int continuant(const std::vector<Int>& seq) {
  Int prev = 0;  // K of the sequence shortened by two
  Int cur = 1;   // K of the empty sequence
  for (const Int& n : seq) {
    Int next = n * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Rational cf_value(const std::vector<Int>& digits) {
  // Convergents of [0; m_1, m_2, ...]: p_i = m_i p_{i-1} + p_{i-2}.
  Int num_prev = 1, num = 0;
  Int den_prev = 0, den = 1;
  for (const Int& m : digits) {
    if (m < 1) throw std::invalid_argument("cf_value: digits must be positive");
    Int n2 = m * num + num_prev;
    num_prev = std::move(num);
    num = std::move(n2);
    Int d2 = m * den + den_prev;
    den_prev = std::move(den);
    den = std::move(d2);
  }
  return Rational(std::move(num), std::move(den));
}

std::vector<Int> cf_expand(const Rational& r) {
  if (r.num() <= 0 || r.num() >= r.den()) {
    throw std::domain_error("cf_expand: argument must lie in (0,1)");
  }
  // Euclid's algorithm on (den, num); the final quotient is automatically >= 2
  // for a reduced fraction in (0,1), so the expansion is canonical.
  std::vector<Int> digits;
  Int a = r.den();
  Int b = r.num();
  while (b != 0) {
    digits.push_back(a / b);
    Int rem = a % b;
    a = std::move(b);
    b = std::move(rem);
  }
  return digits;
}

Rational theta(const CFTuple& x) {
  std::vector<Int> digits = x.entries();
  digits.back() += 1;
  return cf_value(digits);
}

CFTuple theta_inverse(const Rational& r) {
  std::vector<Int> digits = cf_expand(r);
  digits.back() -= 1;
  if (digits.back() == 0) digits.pop_back();  // only possible for r = 1/2
  return CFTuple(std::move(digits));
}

CFTuple star(const CFTuple& x, const CFTuple& y) {
  if (y.is_root()) return x;  // (1) is the neutral element
  const std::vector<Int>& xs = x.entries();
  const std::vector<Int>& ys = y.entries();
  std::vector<Int> out;
  out.reserve(xs.size() + ys.size());
  if (x.is_right_child()) {
    // (n_1..n_k) * (m_1..m_l) = (n_1..n_k, m_1 - 1, m_2..m_l),
    // merging across the zero when m_1 = 1.
    out = xs;
    if (ys[0] == 1) {
      out.back() += ys[1];
      out.insert(out.end(), ys.begin() + 2, ys.end());
    } else {
      out.push_back(ys[0] - 1);
      out.insert(out.end(), ys.begin() + 1, ys.end());
    }
  } else {
    // (n_1..n_k) * (m_1..m_l) = (n_1..n_{k-1}, n_k + m_1 - 1, m_2..m_l)
    out = xs;
    out.back() += ys[0] - 1;
    out.insert(out.end(), ys.begin() + 1, ys.end());
  }
  return CFTuple(std::move(out));
}

Rational star_rational(const Rational& a, const Rational& b) {
  return theta(star(theta_inverse(a), theta_inverse(b)));
}

std::string lr_word(const CFTuple& x) {
  const std::vector<Int>& e = x.entries();
  std::string word;
  for (std::size_t i = 0; i < e.size(); ++i) {
    Int run = (i == 0) ? Int(e[i] - 1) : e[i];
    const char letter = (i % 2 == 0) ? 'L' : 'R';
    for (Int j = 0; j < run; ++j) word += letter;
  }
  return word;
}

CFTuple word_to_tuple(std::string_view word) {
  std::vector<Int> runs;
  bool expect_l = true;  // runs alternate starting with an L-run (may be empty)
  std::size_t i = 0;
  while (i < word.size()) {
    const char c = word[i];
    if (c != 'L' && c != 'R') throw std::invalid_argument("word_to_tuple: letters must be L or R");
    if ((c == 'L') != expect_l) {
      runs.push_back(0);  // empty run of the expected letter
      expect_l = !expect_l;
      continue;
    }
    std::size_t j = i;
    while (j < word.size() && word[j] == c) ++j;
    runs.push_back(Int(j - i));
    expect_l = !expect_l;
    i = j;
  }
  if (runs.empty()) runs.push_back(0);
  runs[0] += 1;
  return CFTuple(std::move(runs));
}

}  // namespace farey
