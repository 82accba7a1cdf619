#include "chroma/patterns.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "chroma/errors.hpp"

namespace chroma {

std::vector<int> colors_of(ColorSet s) {
  std::vector<int> out;
  for (int c = 1; s; ++c, s >>= 1)
    if (s & 1U) out.push_back(c);
  return out;
}

ColorSet color_set(const std::vector<int>& colors, int q) {
  ColorSet s = 0;
  for (int c : colors) {
    if (c < 1 || c > q) throw PreconditionError("colour " + std::to_string(c) + " outside 1.." + std::to_string(q));
    s |= color_bit(c);
  }
  return s;
}

std::string color_list(ColorSet s) {
  std::string out;
  for (int c : colors_of(s)) out += (out.empty() ? "" : ",") + std::to_string(c);
  return out;
}

void validate_q(int q) {
  if (q < 3 || q > kMaxColors)
    throw PreconditionError("number of colours must be in 3.." + std::to_string(kMaxColors) + ", got " +
                            std::to_string(q));
}

bool Pattern::dominant() const {
  if (a & b) return false;
  int lo = q / 2, hi = q - q / 2;
  return (size_a() == lo && size_b() == hi) || (size_a() == hi && size_b() == lo);
}

std::string Pattern::to_string() const { return "A=" + color_list(a) + ";B=" + color_list(b); }

bool operator<(const Pattern& x, const Pattern& y) {
  return std::make_tuple(x.size_a(), x.a, x.b) < std::make_tuple(y.size_a(), y.a, y.b);
}

Pattern make_pattern(int q, const std::vector<int>& a, const std::vector<int>& b) {
  validate_q(q);
  Pattern p{q, color_set(a, q), color_set(b, q)};
  if (p.a & p.b) throw PreconditionError("pattern sides must be disjoint");
  return p;
}

Pattern Pattern::parse(const std::string& text, int q) {
  validate_q(q);
  Pattern p{q, 0, 0};
  bool seen_a = false, seen_b = false;
  std::istringstream in(text);
  std::string field;
  while (std::getline(in, field, ';')) {
    auto eq = field.find('=');
    if (eq == std::string::npos) throw PreconditionError("malformed pattern '" + text + "'");
    std::string key = field.substr(0, eq);
    std::vector<int> cols;
    std::istringstream vals(field.substr(eq + 1));
    std::string tok;
    while (std::getline(vals, tok, ',')) {
      try {
        cols.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw PreconditionError("malformed colour '" + tok + "' in pattern");
      }
    }
    if (key == "A") {
      p.a = color_set(cols, q);
      seen_a = true;
    } else if (key == "B") {
      p.b = color_set(cols, q);
      seen_b = true;
    } else {
      throw PreconditionError("unknown pattern field '" + key + "'");
    }
  }
  if (!seen_a || !seen_b) throw PreconditionError("pattern needs both A= and B= fields");
  if (p.a & p.b) throw PreconditionError("pattern sides must be disjoint");
  return p;
}

std::vector<Pattern> enumerate_dominant(int q) {
  validate_q(q);
  if (q > 24) throw ResourceError("dominant pattern enumeration limited to q <= 24");
  std::vector<Pattern> out;
  ColorSet full = all_colors(q);
  int lo = q / 2, hi = q - lo;
  for (ColorSet a = 1; a < full; ++a) {
    int k = color_count(a);
    if (k != lo && k != hi) continue;
    out.push_back({q, a, full & ~a});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Pattern> dominant_class(int q, int cls) {
  std::vector<Pattern> out;
  for (const auto& p : enumerate_dominant(q))
    if (p.pattern_class() == cls) out.push_back(p);
  return out;
}

bool is_p_even(const LatticeGraph& g, VertexId v, const Pattern& p) { return g.parity(v) == p.even_parity(); }

}  // namespace chroma
