#include "b3/braid.hpp"

#include <cctype>

namespace b3 {

Gen::Gen(int index, int sign) {
  if (index < 1 || index > 3 || (sign != 1 && sign != -1))
    throw Error("invalid band generator (index " + std::to_string(index) +
                ", sign " + std::to_string(sign) + ")");
  code_ = static_cast<uint8_t>(2 * (index - 1) + (sign < 0 ? 1 : 0));
}

Gen Gen::from_code(uint8_t code) {
  if (code > 5) throw Error("invalid generator code");
  Gen g;
  g.code_ = code;
  return g;
}

Gen Gen::shifted(int by) const {
  int idx = ((index() - 1 + by) % 3 + 3) % 3;
  return from_code(static_cast<uint8_t>(2 * idx + (code_ & 1)));
}

Perm3::Perm3() : img_{1, 2, 3} {}

Perm3 Perm3::transposition(int a, int b) {
  Perm3 p;
  p.img_[a - 1] = static_cast<uint8_t>(b);
  p.img_[b - 1] = static_cast<uint8_t>(a);
  return p;
}

Perm3 Perm3::then(const Perm3& other) const {
  Perm3 r;
  for (int i = 1; i <= 3; ++i)
    r.img_[i - 1] = static_cast<uint8_t>(other.image(image(i)));
  return r;
}

int Perm3::cycle_count() const {
  bool seen[3] = {false, false, false};
  int cycles = 0;
  for (int i = 1; i <= 3; ++i) {
    if (seen[i - 1]) continue;
    ++cycles;
    for (int j = i; !seen[j - 1]; j = image(j)) seen[j - 1] = true;
  }
  return cycles;
}

BandWord parse_word(std::string_view text) {
  BandWord out;
  size_t i = 0;
  const size_t n = text.size();
  auto fail = [&](const std::string& msg) {
    throw SyntaxError("word syntax error at offset " + std::to_string(i) +
                      ": " + msg);
  };
  auto is_ws = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
  };
  while (i < n) {
    if (is_ws(text[i])) {
      ++i;
      continue;
    }
    char kind = text[i];
    if (kind != 'a' && kind != 's') fail("expected 'a' or 's' token");
    ++i;
    if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
      fail("expected generator index digit");
    int idx = text[i] - '0';
    ++i;
    if (kind == 'a' ? (idx < 1 || idx > 3) : (idx < 1 || idx > 2))
      fail(std::string("index out of range for '") + kind + "' token");
    long long exp = 1;
    if (i < n && text[i] == '^') {
      ++i;
      bool neg = false;
      if (i < n && text[i] == '-') {
        neg = true;
        ++i;
      }
      if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
        fail("expected exponent digits after '^'");
      long long mag = 0;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
        mag = mag * 10 + (text[i] - '0');
        if (mag > 1000000) fail("exponent too large");
        ++i;
      }
      exp = neg ? -mag : mag;
    }
    if (i < n && !is_ws(text[i])) fail("unexpected character inside token");
    int sign = exp < 0 ? -1 : 1;
    long long count = exp < 0 ? -exp : exp;
    for (long long k = 0; k < count; ++k) out.emplace_back(idx, sign);
  }
  return out;
}

std::string render_word(const BandWord& w) {
  std::string out;
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += ' ';
    out += 'a';
    out += static_cast<char>('0' + w[i].index());
    long long e = static_cast<long long>(j - i) * w[i].sign();
    if (e != 1) {
      out += '^';
      out += std::to_string(e);
    }
    i = j;
  }
  return out;
}

std::string render_artin(const ArtinWord& w) {
  std::string out;
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += ' ';
    out += 's';
    out += static_cast<char>('0' + w[i].index);
    long long e = static_cast<long long>(j - i) * w[i].sign;
    if (e != 1) {
      out += '^';
      out += std::to_string(e);
    }
    i = j;
  }
  return out;
}

BandWord artin_band_convert(const ArtinWord& w) {
  BandWord out;
  out.reserve(w.size());
  for (const ArtinGen& g : w) out.emplace_back(g.index, g.sign);
  return out;
}

ArtinWord band_artin_convert(const BandWord& w) {
  ArtinWord out;
  out.reserve(w.size());
  for (Gen g : w) {
    if (g.index() < 3) {
      out.push_back({g.index(), g.sign()});
    } else {
      out.push_back({2, 1});
      out.push_back({1, g.sign()});
      out.push_back({2, -1});
    }
  }
  return out;
}

BandWord invert_word(const BandWord& w) {
  BandWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

Perm3 closure_permutation(const BandWord& w) {
  static const Perm3 t12 = Perm3::transposition(1, 2);
  static const Perm3 t23 = Perm3::transposition(2, 3);
  static const Perm3 t13 = Perm3::transposition(1, 3);
  Perm3 p;
  for (Gen g : w) {
    switch (g.index()) {
      case 1: p = p.then(t12); break;
      case 2: p = p.then(t23); break;
      default: p = p.then(t13); break;
    }
  }
  return p;
}

int closure_components(const BandWord& w) {
  return closure_permutation(w).cycle_count();
}

BandWord free_reduce(const BandWord& w) {
  BandWord out;
  out.reserve(w.size());
  for (Gen g : w) {
    if (!out.empty() && out.back() == g.inverse())
      out.pop_back();
    else
      out.push_back(g);
  }
  return out;
}

BandWord shift_word(const BandWord& w, int by) {
  BandWord out;
  out.reserve(w.size());
  for (Gen g : w) out.push_back(g.shifted(by));
  return out;
}

}  // namespace b3
