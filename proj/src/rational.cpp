#include "latcover/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

namespace latcover {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty rational");
  for (char ch : text) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '/'))
      throw std::invalid_argument("malformed rational: " + std::string(text));
  }
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  Rat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + std::string(text));
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  q.canonicalize();
  return q;
}

std::string to_string(const Rat& q) { return q.get_str(); }

bool is_integer(const Rat& q) { return q.get_den() == 1; }

bool is_half_odd(const Rat& q) { return q.get_den() == 2; }

bool RatMat2::is_integral() const {
  return is_integer(a) && is_integer(b) && is_integer(c) && is_integer(d);
}

RatMat2 RatMat2::inverse() const {
  Rat det_value = det();
  if (det_value == 0) throw std::domain_error("singular matrix has no inverse");
  return {d / det_value, -b / det_value, -c / det_value, a / det_value};
}

RatMat2 RatMat2::operator*(const RatMat2& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

int RatMat2::order(int max_order) const {
  RatMat2 p = *this;
  const RatMat2 id = identity();
  for (int k = 1; k <= max_order; ++k) {
    if (p == id) return k;
    p = p * *this;
  }
  return 0;
}

RatMat2 pow(const RatMat2& m, int k) {
  if (k < 0) return pow(m.inverse(), -k);
  RatMat2 r = RatMat2::identity();
  for (int i = 0; i < k; ++i) r = r * m;
  return r;
}

RatMat2 parse_ratmat2(std::string_view text) {
  auto rows = split(trim(text), ';');
  if (rows.size() != 2) throw std::invalid_argument("matrix needs two rows: " + std::string(text));
  auto r0 = split(rows[0], ',');
  auto r1 = split(rows[1], ',');
  if (r0.size() != 2 || r1.size() != 2)
    throw std::invalid_argument("matrix rows need two entries: " + std::string(text));
  return {parse_rat(r0[0]), parse_rat(r0[1]), parse_rat(r1[0]), parse_rat(r1[1])};
}

std::string to_string(const RatMat2& m) {
  return to_string(m.a) + "," + to_string(m.b) + ";" + to_string(m.c) + "," + to_string(m.d);
}

}  // namespace latcover
