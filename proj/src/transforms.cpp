#include "farey/transforms.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>

namespace farey {

namespace {

// Largest tuple norm jimm_tuple will expand; beyond this the intermediate
// run-of-ones representation is unreasonably large.
constexpr long long kMaxJimmNorm = 1LL << 24;

Rational require_unit_interval(const Rational& r, const char* who) {
  if (r.num() <= 0 || r.num() >= r.den()) {
    throw std::domain_error(std::string(who) + ": value must lie strictly between 0 and 1");
  }
  return r;
}

}  // namespace

CFTuple k_tuple(const CFTuple& x) {
  const auto& e = x.entries();
  if (e[0] > 1) {
    std::vector<Int> out;
    out.reserve(e.size() + 1);
    out.push_back(1);
    out.push_back(e[0] - 1);
    out.insert(out.end(), e.begin() + 1, e.end());
    return CFTuple(std::move(out));
  }
  // First entry 1: (1, 0, n_2, ...) collapses around the zero.
  if (x.length() == 1) return CFTuple::root();
  std::vector<Int> out;
  out.reserve(e.size() - 1);
  out.push_back(e[1] + 1);
  out.insert(out.end(), e.begin() + 2, e.end());
  return CFTuple(std::move(out));
}

Rational k_rational(const Rational& r) {
  require_unit_interval(r, "k_rational");
  return Rational(1) - r;
}

CFTuple flip_tuple(const CFTuple& x) {
  std::vector<Int> out(x.entries().rbegin(), x.entries().rend());
  return CFTuple(std::move(out));
}

Rational flip_rational(const Rational& r) {
  require_unit_interval(r, "flip_rational");
  return theta(flip_tuple(theta_inverse(r)));
}

namespace {

// Raw working form for Jimm: value >= 1 is a literal entry, 0 stands for the
// empty run 1_0 and -1 for the deficient run 1_{-1}.
using Raw = std::vector<long long>;

Raw jimm_build(const CFTuple& x) {
  Int norm = x.norm();
  if (norm > kMaxJimmNorm) {
    throw std::length_error("jimm_tuple: expansion larger than the supported limit");
  }
  const auto& e = x.entries();
  auto run = [](Raw& raw, long long m) {
    // A run 1_m: m literal ones for m >= 1, otherwise a placeholder.
    if (m >= 1) {
      raw.insert(raw.end(), static_cast<std::size_t>(m), 1);
    } else {
      raw.push_back(m);
    }
  };
  Raw raw;
  if (e.size() == 1) {
    run(raw, static_cast<long long>(e[0]));
    return raw;
  }
  run(raw, static_cast<long long>(e.front()) - 1);
  for (std::size_t i = 1; i < e.size(); ++i) {
    raw.push_back(2);
    long long deficit = (i + 1 == e.size()) ? 1 : 2;
    run(raw, static_cast<long long>(e[i]) - deficit);
  }
  return raw;
}

std::string raw_str(const Raw& raw) {
  std::string out = "(";
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (i) out += ",";
    if (raw[i] == 0) {
      out += "1_0";
    } else if (raw[i] == -1) {
      out += "1_{-1}";
    } else {
      out += std::to_string(raw[i]);
    }
  }
  out += ")";
  return out;
}

CFTuple raw_to_tuple(const Raw& raw) {
  if (raw.empty()) throw std::logic_error("jimm_tuple: normalization emptied the tuple");
  std::vector<Int> out;
  out.reserve(raw.size());
  for (long long v : raw) {
    if (v < 1) throw std::logic_error("jimm_tuple: unresolved placeholder after normalization");
    out.push_back(v);
  }
  return CFTuple(std::move(out));
}

// Single left-to-right pass; equivalent to firing the leftmost applicable
// rule repeatedly because no rule ever creates a new placeholder.
Raw jimm_normalize(const Raw& raw) {
  Raw out;
  out.reserve(raw.size());
  for (long long v : raw) {
    if (v == 0) continue;  // 1_0: dropped wherever it sits
    if (v == -1) {
      // 1_{-1}: absorb the left neighbor, discount the next literal.
      if (out.empty()) throw std::logic_error("jimm_tuple: 1_{-1} with no left neighbor");
      long long m = out.back();
      if (m < 1) throw std::logic_error("jimm_tuple: 1_{-1} without a literal left neighbor");
      out.pop_back();
      out.push_back(-(m - 1) - 2);  // stash the pending merge as an offset marker
      continue;
    }
    if (!out.empty() && out.back() <= -2) {
      long long pending = -(out.back() + 2);
      out.pop_back();
      out.push_back(pending + v);  // m + n - 1 with pending = m - 1
      continue;
    }
    out.push_back(v);
  }
  if (!out.empty() && out.back() <= -2) {
    throw std::logic_error("jimm_tuple: 1_{-1} with no right neighbor");
  }
  return out;
}

// Naive leftmost-first rewriting, one rule per step, recording each firing.
Raw jimm_normalize_traced(Raw raw, RewriteTrace& trace) {
  trace.initial = raw_str(raw);
  trace.steps.clear();
  while (true) {
    std::size_t i = 0;
    while (i < raw.size() && raw[i] >= 1) ++i;
    if (i == raw.size()) break;
    RewriteStep step;
    step.index = i;
    if (raw[i] == 0) {
      step.rule = "1_0 drop";
      raw.erase(raw.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      if (i == 0 || i + 1 == raw.size() || raw[i - 1] < 1 || raw[i + 1] < 1) {
        throw std::logic_error("jimm_tuple: 1_{-1} without literal neighbors");
      }
      step.rule = "1_{-1} merge";
      raw[i - 1] = raw[i - 1] + raw[i + 1] - 1;
      raw.erase(raw.begin() + static_cast<std::ptrdiff_t>(i),
                raw.begin() + static_cast<std::ptrdiff_t>(i) + 2);
    }
    step.state = raw_str(raw);
    trace.steps.push_back(std::move(step));
  }
  return raw;
}

}  // namespace

std::string RewriteTrace::str() const {
  std::string out = initial;
  for (const auto& s : steps) {
    out += "\n  --[" + s.rule + " at " + std::to_string(s.index + 1) + "]--> " + s.state;
  }
  return out;
}

CFTuple jimm_tuple(const CFTuple& x) { return raw_to_tuple(jimm_normalize(jimm_build(x))); }

CFTuple jimm_tuple(const CFTuple& x, RewriteTrace& trace) {
  return raw_to_tuple(jimm_normalize_traced(jimm_build(x), trace));
}

Rational jimm_rational(const Rational& r) {
  require_unit_interval(r, "jimm_rational");
  return theta(jimm_tuple(theta_inverse(r)));
}

Mat2 mat2_pow(Mat2 base, Int exp) {
  Mat2 acc{1, 0, 0, 1};
  while (exp > 0) {
    if ((exp & 1) != 0) acc = acc * base;
    exp >>= 1;
    if (exp > 0) base = base * base;
  }
  return acc;
}

Rational jimm_matrix(const Rational& r) {
  if (r.num() <= 0) throw std::domain_error("jimm_matrix: value must be positive");
  // Canonical continued-fraction digits of r, integer part first.
  std::vector<Int> digits;
  Int a = r.num(), b = r.den();
  while (b != 0) {
    digits.push_back(a / b);
    Int t = a % b;
    a = b;
    b = t;
  }
  const bool below_one = digits[0] == 0;
  const Mat2 T{1, 1, 1, 0};
  const Mat2 U{0, 1, 1, 0};
  Mat2 m{1, 0, 0, 1};
  for (std::size_t i = below_one ? 1 : 0; i < digits.size(); ++i) {
    m = m * mat2_pow(T, digits[i]) * U;
  }
  return below_one ? Rational(m.d, m.b) : Rational(m.b, m.d);
}

Rational jimm_extended(const Rational& r) {
  if (r.is_zero()) throw std::domain_error("jimm_extended: undefined at 0");
  if (r.num() < 0) return -jimm_extended(-r).reciprocal();
  if (r.is_one()) return Rational(1);
  if (r.num() > r.den()) return jimm_extended(r.reciprocal()).reciprocal();
  return jimm_rational(r);
}

std::vector<Rational> twisted_calkin_wilf(std::size_t count) {
  std::vector<Rational> cw;
  cw.reserve(count);
  if (count == 0) return cw;
  cw.emplace_back(1);
  for (std::size_t i = 0; cw.size() < count; ++i) {
    const Rational& v = cw[i];
    cw.emplace_back(v.num(), v.num() + v.den());
    if (cw.size() == count) break;
    cw.emplace_back(v.num() + v.den(), v.den());
  }
  for (auto& v : cw) v = jimm_extended(v);
  return cw;
}

CFTuple farey_map_tuple(const CFTuple& x) {
  if (x.is_root()) throw std::domain_error("farey_map_tuple: the root is absorbed");
  std::vector<Int> out = x.entries();
  out[0] -= 1;
  if (out[0] == 0) out.erase(out.begin());
  return CFTuple(std::move(out));
}

Rational farey_map_rational(const Rational& r) {
  require_unit_interval(r, "farey_map_rational");
  Rational one_minus = Rational(1) - r;
  return (r < one_minus) ? r / one_minus : one_minus / r;
}

CFTuple parent_map(const CFTuple& x) {
  if (x.is_root()) throw std::domain_error("parent_map: the root has no parent");
  std::vector<Int> out = x.entries();
  out.back() -= 1;
  if (out.back() == 0) out.pop_back();
  return CFTuple(std::move(out));
}

}  // namespace farey
