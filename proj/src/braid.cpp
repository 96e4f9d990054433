#include "cassonlin/braid.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "cassonlin/errors.hpp"

namespace cassonlin {

namespace {

// Guard against pathological exponents blowing up letter storage.
constexpr long long kMaxExponent = 1'000'000;

}  // namespace

BraidWord::BraidWord(int strand_count, std::vector<BraidLetter> letters)
    : strand_count_(strand_count), letters_(std::move(letters)) {
  if (strand_count_ < 1) throw std::invalid_argument("strand count must be positive");
  for (const auto& l : letters_) {
    if (l.index < 1 || l.index >= strand_count_)
      throw IndexError("braid generator index " + std::to_string(l.index) +
                       " out of range for " + std::to_string(strand_count_) + " strands");
    if (l.sign != 1 && l.sign != -1)
      throw std::invalid_argument("braid letter sign must be +1 or -1");
  }
}

BraidWord BraidWord::inverse() const {
  std::vector<BraidLetter> rev(letters_.rbegin(), letters_.rend());
  for (auto& l : rev) l.sign = -l.sign;
  return BraidWord(strand_count_, std::move(rev));
}

BraidWord BraidWord::operator*(const BraidWord& o) const {
  if (strand_count_ != o.strand_count_)
    throw std::invalid_argument("cannot concatenate braids on different strand counts");
  std::vector<BraidLetter> cat = letters_;
  cat.insert(cat.end(), o.letters_.begin(), o.letters_.end());
  return BraidWord(strand_count_, std::move(cat));
}

std::string BraidWord::str() const {
  std::string out;
  for (std::size_t p = 0; p < letters_.size();) {
    std::size_t q = p;
    while (q < letters_.size() && letters_[q] == letters_[p]) ++q;
    const long long e = static_cast<long long>(q - p) * letters_[p].sign;
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(letters_[p].index);
    if (e != 1) out += '^' + std::to_string(e);
    p = q;
  }
  return out;
}

BraidWord parse_braid(std::string_view text, int strand_count) {
  if (strand_count < 1) throw std::invalid_argument("strand count must be positive");
  std::vector<BraidLetter> letters;
  std::size_t pos = 0;
  const auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  const auto parse_uint = [&](const char* what) -> long long {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw SyntaxError(std::string("expected ") + what + " at offset " + std::to_string(pos));
    long long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > kMaxExponent) throw SyntaxError("number too large in braid word");
      ++pos;
    }
    return v;
  };

  skip_ws();
  if (pos == text.size()) throw SyntaxError("empty braid word");
  while (pos < text.size()) {
    if (text[pos] != 's')
      throw SyntaxError("expected 's' at offset " + std::to_string(pos));
    ++pos;
    const long long index = parse_uint("generator index");
    if (index == 0) throw SyntaxError("generator index must be positive");
    long long exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      long long sign = 1;
      if (pos < text.size() && text[pos] == '-') {
        sign = -1;
        ++pos;
      }
      const long long mag = parse_uint("exponent");
      if (mag == 0) throw SyntaxError("exponent must be nonzero");
      exponent = sign * mag;
    }
    if (index >= strand_count)
      throw IndexError("generator index " + std::to_string(index) + " out of range for " +
                       std::to_string(strand_count) + " strands");
    const int s = exponent > 0 ? 1 : -1;
    for (long long r = 0; r < std::abs(exponent); ++r)
      letters.push_back({static_cast<int>(index), s});
    skip_ws();
  }
  return BraidWord(strand_count, std::move(letters));
}

void FreeWord::push(int letter) {
  if (!w_.empty() && w_.back() == -letter)
    w_.pop_back();
  else
    w_.push_back(letter);
}

FreeWord FreeWord::generator(int index, int exponent) {
  if (index < 1) throw IndexError("free generator index must be positive");
  FreeWord w;
  const int l = exponent >= 0 ? index : -index;
  for (int r = 0; r < std::abs(exponent); ++r) w.push(l);
  return w;
}

FreeWord FreeWord::operator*(const FreeWord& o) const {
  FreeWord out = *this;
  for (int l : o.w_) out.push(l);
  return out;
}

FreeWord FreeWord::inverse() const {
  FreeWord out;
  for (auto it = w_.rbegin(); it != w_.rend(); ++it) out.push(-*it);
  return out;
}

std::string FreeWord::str(int n_generators) const {
  if (w_.empty()) return "1";
  const auto name = [&](int g) -> std::string {
    if (n_generators <= 2) return g == 1 ? "x" : "y";
    return "x" + std::to_string(g);
  };
  std::string out;
  for (std::size_t p = 0; p < w_.size();) {
    std::size_t q = p;
    while (q < w_.size() && w_[q] == w_[p]) ++q;
    const long long e = static_cast<long long>(q - p) * (w_[p] > 0 ? 1 : -1);
    if (!out.empty()) out += ' ';
    out += name(std::abs(w_[p]));
    if (e != 1) out += '^' + std::to_string(e);
    p = q;
  }
  return out;
}

BraidAutomorphism identity_automorphism(int strand_count) {
  BraidAutomorphism a;
  a.strand_count = strand_count;
  for (int g = 1; g <= strand_count; ++g) a.images.push_back(FreeWord::generator(g));
  return a;
}

FreeWord substitute(const FreeWord& w, const std::vector<FreeWord>& images) {
  FreeWord out;
  for (int l : w.letters()) {
    const int g = std::abs(l);
    if (g < 1 || static_cast<std::size_t>(g) > images.size())
      throw IndexError("word uses generator " + std::to_string(g) + " beyond the given images");
    out = out * (l > 0 ? images[g - 1] : images[g - 1].inverse());
  }
  return out;
}

BraidAutomorphism compose(const BraidAutomorphism& first, const BraidAutomorphism& next) {
  if (first.strand_count != next.strand_count)
    throw std::invalid_argument("composing automorphisms of different rank");
  BraidAutomorphism out;
  out.strand_count = first.strand_count;
  out.images.reserve(first.images.size());
  for (const auto& im : first.images) out.images.push_back(substitute(im, next.images));
  return out;
}

namespace {

std::vector<FreeWord> single_letter_images(const BraidLetter& l, int n) {
  std::vector<FreeWord> images;
  images.reserve(n);
  for (int g = 1; g <= n; ++g) images.push_back(FreeWord::generator(g));
  const int i = l.index;
  const FreeWord xi = FreeWord::generator(i);
  const FreeWord xj = FreeWord::generator(i + 1);
  if (l.sign > 0) {
    images[i - 1] = xj;
    images[i] = xj.inverse() * xi * xj;
  } else {
    images[i - 1] = xi * xj * xi.inverse();
    images[i] = xi;
  }
  return images;
}

}  // namespace

BraidAutomorphism artin_action(const BraidWord& b) {
  BraidAutomorphism out = identity_automorphism(b.strand_count());
  for (const auto& l : b.letters()) {
    const auto rule = single_letter_images(l, b.strand_count());
    for (auto& im : out.images) im = substitute(im, rule);
  }
  return out;
}

std::vector<int> braid_permutation(const BraidWord& b) {
  std::vector<int> strand_at_pos(b.strand_count());
  std::iota(strand_at_pos.begin(), strand_at_pos.end(), 1);
  for (const auto& l : b.letters())
    std::swap(strand_at_pos[l.index - 1], strand_at_pos[l.index]);
  return strand_at_pos;
}

std::vector<std::vector<int>> closure_components(const BraidWord& b) {
  const int n = b.strand_count();
  const auto strand_at_pos = braid_permutation(b);
  // Position of each strand at the bottom; closure glues bottom position p
  // back to top position p, so cycles of strand -> bottom position are the
  // components.
  std::vector<int> bottom_pos(n + 1, 0);
  for (int p = 0; p < n; ++p) bottom_pos[strand_at_pos[p]] = p + 1;

  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(n + 1, false);
  for (int s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    std::vector<int> cycle;
    int cur = s;
    while (!seen[cur]) {
      seen[cur] = true;
      cycle.push_back(cur);
      cur = bottom_pos[cur];
    }
    std::sort(cycle.begin(), cycle.end());
    comps.push_back(std::move(cycle));
  }
  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b2) { return a.front() < b2.front(); });
  return comps;
}

int linking_number(const BraidWord& b) {
  const auto comps = closure_components(b);
  if (comps.size() != 2)
    throw NotTwoComponents("closure has " + std::to_string(comps.size()) +
                           " components, need exactly 2");
  const int n = b.strand_count();
  std::vector<int> comp_of(n + 1, 0);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (int s : comps[c]) comp_of[s] = static_cast<int>(c);

  std::vector<int> strand_at_pos(n);
  std::iota(strand_at_pos.begin(), strand_at_pos.end(), 1);
  int total = 0;
  for (const auto& l : b.letters()) {
    const int a = strand_at_pos[l.index - 1];
    const int c = strand_at_pos[l.index];
    if (comp_of[a] != comp_of[c]) total += l.sign;
    std::swap(strand_at_pos[l.index - 1], strand_at_pos[l.index]);
  }
  // Crossings between two closed components pair up.
  if (total % 2 != 0) throw std::logic_error("odd inter-component crossing count");
  return total / 2;
}

}  // namespace cassonlin
