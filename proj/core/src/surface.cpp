#include "ncsurf/surface.hpp"

#include <charconv>
#include <regex>

namespace ncsurf {

namespace {

void validate(const Surface& s) {
  if (s.count < 0 || s.beta < 0) throw Error("surface parameters must be non-negative");
  if (!s.orientable && s.count < 1) throw Error("a non-orientable surface needs at least one cross-cap");
}

int parse_int(const std::string& text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error("bad integer in surface descriptor: " + text);
  }
  return value;
}

}  // namespace

Surface Surface::orient(int g, int b) {
  Surface s{true, g, b};
  validate(s);
  return s;
}

Surface Surface::nonorient(int h, int b) {
  Surface s{false, h, b};
  validate(s);
  return s;
}

Surface Surface::capped() const {
  if (beta == 0) throw Error("cannot cap a surface without boundary");
  Surface s = *this;
  --s.beta;
  return s;
}

std::string Surface::descriptor() const {
  return orientable ? "orient:g=" + std::to_string(count) + ",b=" + std::to_string(beta)
                    : "nonorient:h=" + std::to_string(count) + ",b=" + std::to_string(beta);
}

std::string Surface::name() const {
  if (orientable && count == 0 && beta == 1) return "disk";
  if (orientable && count == 0 && beta == 2) return "cylinder";
  if (!orientable && count == 1 && beta == 1) return "mobius";
  if (orientable && count == 1 && beta == 1) return "torus1";
  if (!orientable && count == 2 && beta == 1) return "klein1";
  return descriptor();
}

Surface parse_surface(const std::string& text) {
  if (text == "disk") return Surface::orient(0, 1);
  if (text == "cylinder") return Surface::orient(0, 2);
  if (text == "mobius") return Surface::nonorient(1, 1);
  if (text == "torus1") return Surface::orient(1, 1);
  if (text == "klein1") return Surface::nonorient(2, 1);

  static const std::regex pattern(R"(^(orient|nonorient):([gh])=(-?\d+),b=(-?\d+)$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw Error("malformed surface descriptor: " + text);
  const bool orientable = m[1] == "orient";
  if ((orientable && m[2] != "g") || (!orientable && m[2] != "h")) {
    throw Error("malformed surface descriptor: " + text);
  }
  const int count = parse_int(m[3]);
  const int beta = parse_int(m[4]);
  return orientable ? Surface::orient(count, beta) : Surface::nonorient(count, beta);
}

int euler_characteristic(const Surface& s) { return s.euler_characteristic(); }

bool split_check(const Surface& total, const Surface& v1, const Surface& v2) {
  return total.euler_characteristic() == v1.euler_characteristic() + v2.euler_characteristic() - 2;
}

Rational asymptotic_exponent(const Surface& s) {
  Rational e(-3 * s.euler_characteristic(), 2);
  e.canonicalize();
  return e + s.beta - 1;
}

}  // namespace ncsurf
