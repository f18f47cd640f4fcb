#include "repalg/words.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace repalg::words {

Word Word::reduce(std::span<const Letter> letters, int n) {
  Word w;
  w.letters_.reserve(letters.size());
  for (const Letter& x : letters) {
    if (x.gen < 1 || (n > 0 && x.gen > n))
      throw std::out_of_range("word: generator index " + std::to_string(x.gen) + " out of range");
    if (x.sign != 1 && x.sign != -1) throw std::invalid_argument("word: letter sign must be +1 or -1");
    if (!w.letters_.empty() && w.letters_.back().gen == x.gen && w.letters_.back().sign == -x.sign)
      w.letters_.pop_back();
    else
      w.letters_.push_back(x);
  }
  return w;
}

Word Word::generator(int l, int sign) {
  Letter x{l, sign};
  return reduce(std::span<const Letter>(&x, 1));
}

int Word::max_generator() const noexcept {
  int m = 0;
  for (const Letter& x : letters_) m = std::max(m, x.gen);
  return m;
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (const Letter& x : letters_) {
    if (!s.empty()) s += ' ';
    s += 'x' + std::to_string(x.gen);
    if (x.sign < 0) s += "^-1";
  }
  return s;
}

Word mul(const Word& a, const Word& b) {
  std::vector<Letter> all(a.letters());
  all.insert(all.end(), b.letters().begin(), b.letters().end());
  return Word::reduce(all);
}

Word inv(const Word& a) {
  std::vector<Letter> r(a.letters().rbegin(), a.letters().rend());
  for (Letter& x : r) x.sign = -x.sign;
  return Word::reduce(r);
}

Word power(const Word& a, long k) {
  Word base = k < 0 ? inv(a) : a;
  Word r;
  for (long i = 0; i < (k < 0 ? -k : k); ++i) r = mul(r, base);
  return r;
}

Word commutator(const Word& a, const Word& b) { return mul(mul(a, b), mul(inv(a), inv(b))); }

Word left_normed(std::span<const Word> ws) {
  if (ws.empty()) throw std::invalid_argument("left_normed: empty list");
  Word r = ws[0];
  for (std::size_t i = 1; i < ws.size(); ++i) r = commutator(r, ws[i]);
  return r;
}

AbelianVector abelianize(const Word& w, int n) {
  AbelianVector v(static_cast<std::size_t>(n), 0);
  for (const Letter& x : w.letters()) {
    if (x.gen > n) throw std::out_of_range("abelianize: generator index exceeds rank");
    v[static_cast<std::size_t>(x.gen - 1)] += x.sign;
  }
  return v;
}

Endo::Endo(std::vector<Word> images) : images_(std::move(images)) {
  for (const Word& w : images_)
    if (w.max_generator() > rank()) throw std::out_of_range("Endo: image uses a generator beyond the rank");
}

Endo Endo::identity(int n) {
  std::vector<Word> im;
  for (int l = 1; l <= n; ++l) im.push_back(Word::generator(l));
  return Endo(std::move(im));
}

bool Endo::fixes_generators() const {
  for (int l = 1; l <= rank(); ++l)
    if (image(l) != Word::generator(l)) return false;
  return true;
}

Word apply_endo(const Endo& e, const Word& w) {
  if (w.max_generator() > e.rank()) throw std::out_of_range("apply_endo: word uses a generator beyond the rank");
  std::vector<Letter> out;
  for (const Letter& x : w.letters()) {
    const Word& im = e.image(x.gen);
    if (x.sign > 0) {
      out.insert(out.end(), im.letters().begin(), im.letters().end());
    } else {
      for (auto it = im.letters().rbegin(); it != im.letters().rend(); ++it) out.push_back({it->gen, -it->sign});
    }
  }
  return Word::reduce(out);
}

Endo compose(const Endo& s, const Endo& t) {
  if (s.rank() != t.rank()) throw std::invalid_argument("compose: rank mismatch");
  std::vector<Word> im;
  for (const Word& w : s.images()) im.push_back(apply_endo(t, w));
  return Endo(std::move(im));
}

AutPair::AutPair(Endo fwd, Endo bwd) : fwd_(std::move(fwd)), bwd_(std::move(bwd)) {
  if (fwd_.rank() != bwd_.rank()) throw std::invalid_argument("AutPair: rank mismatch");
  if (!compose(fwd_, bwd_).fixes_generators() || !compose(bwd_, fwd_).fixes_generators())
    throw std::invalid_argument("AutPair: fwd and bwd are not mutually inverse");
}

AutPair AutPair::identity(int n) { return AutPair(Endo::identity(n), Endo::identity(n), Trusted{}); }

AutPair operator*(const AutPair& a, const AutPair& b) {
  return AutPair(compose(a.fwd_, b.fwd_), compose(b.bwd_, a.bwd_), AutPair::Trusted{});
}

namespace {

Word x(int l, int sign = 1) { return Word::generator(l, sign); }

Word seq(std::initializer_list<Letter> ls) { return Word::reduce(std::vector<Letter>(ls)); }

}  // namespace

AutPair nielsen(char name, int n) {
  if (n < 1) throw std::invalid_argument("nielsen: rank must be positive");
  std::vector<Word> f;
  std::vector<Word> b;
  for (int l = 1; l <= n; ++l) {
    f.push_back(x(l));
    b.push_back(x(l));
  }
  switch (name) {
    case 'P':
      if (n < 2) throw std::invalid_argument("nielsen: P needs n >= 2");
      std::swap(f[0], f[1]);
      std::swap(b[0], b[1]);
      break;
    case 'Q':
      for (int l = 1; l <= n; ++l) {
        f[static_cast<std::size_t>(l - 1)] = x(l % n + 1);
        b[static_cast<std::size_t>(l - 1)] = x((l + n - 2) % n + 1);
      }
      break;
    case 'S':
      f[0] = x(1, -1);
      b[0] = x(1, -1);
      break;
    case 'U':
      if (n < 2) throw std::invalid_argument("nielsen: U needs n >= 2");
      f[0] = seq({{1, 1}, {2, 1}});
      b[0] = seq({{1, 1}, {2, -1}});
      break;
    default:
      throw std::invalid_argument(std::string("nielsen: unknown generator '") + name + "'");
  }
  return AutPair(Endo(std::move(f)), Endo(std::move(b)));
}

AutPair magnus_Kij(int i, int j, int n) {
  if (i < 1 || j < 1 || i > n || j > n || i == j) throw std::invalid_argument("magnus_Kij: invalid indices");
  Endo id = Endo::identity(n);
  std::vector<Word> f = id.images();
  std::vector<Word> b = id.images();
  f[static_cast<std::size_t>(i - 1)] = seq({{j, -1}, {i, 1}, {j, 1}});
  b[static_cast<std::size_t>(i - 1)] = seq({{j, 1}, {i, 1}, {j, -1}});
  return AutPair(Endo(std::move(f)), Endo(std::move(b)));
}

AutPair magnus_Kijl(int i, int j, int l, int n) {
  if (i < 1 || j < 1 || l < 1 || i > n || j > n || l > n || i == j || i == l || j >= l)
    throw std::invalid_argument("magnus_Kijl: invalid indices");
  Endo id = Endo::identity(n);
  std::vector<Word> f = id.images();
  std::vector<Word> b = id.images();
  f[static_cast<std::size_t>(i - 1)] = mul(x(i), commutator(x(j), x(l)));
  b[static_cast<std::size_t>(i - 1)] = mul(x(i), commutator(x(l), x(j)));
  return AutPair(Endo(std::move(f)), Endo(std::move(b)));
}

namespace {

class WordParser {
 public:
  WordParser(std::string_view s, int n) : s_(s), n_(n) {}

  Word parse_all() {
    Word w = parse_sequence();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return w;
  }

 private:
  std::string_view s_;
  int n_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("word syntax error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool at(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  long parse_int() {
    skip_ws();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected integer");
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_++] - '0');
      if (v > 1000000) fail("integer too large");
    }
    return neg ? -v : v;
  }

  Word parse_sequence() {
    Word w;
    while (true) {
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] == ',' || s_[pos_] == ']' || s_[pos_] == ')') return w;
      w = mul(w, parse_item());
    }
  }

  Word parse_item() {
    Word a = parse_atom();
    if (at('^')) {
      ++pos_;
      a = power(a, parse_int());
    }
    return a;
  }

  Word parse_atom() {
    skip_ws();
    char c = s_[pos_];
    if (c == 'x') {
      ++pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected generator index");
      long l = parse_int();
      if (l < 1 || l > n_) fail("generator index out of range 1.." + std::to_string(n_));
      return Word::generator(static_cast<int>(l));
    }
    if (c == '1') {
      ++pos_;
      return Word();
    }
    if (c == '[') {
      ++pos_;
      Word a = parse_sequence();
      if (!at(',')) fail("expected ','");
      ++pos_;
      Word b = parse_sequence();
      if (!at(']')) fail("expected ']'");
      ++pos_;
      return commutator(a, b);
    }
    if (c == '(') {
      ++pos_;
      Word a = parse_sequence();
      if (!at(')')) fail("expected ')'");
      ++pos_;
      return a;
    }
    fail(std::string("unexpected '") + c + "'");
  }
};

}  // namespace

Word parse_word(std::string_view text, int n) { return WordParser(text, n).parse_all(); }

AutWord parse_aut_word(std::string_view text) {
  AutWord out;
  std::istringstream in{std::string(text)};
  std::string tok;
  auto fail = [](const std::string& t, const std::string& why) {
    throw std::invalid_argument("automorphism token '" + t + "': " + why);
  };
  while (in >> tok) {
    if (tok == "id") continue;
    AutToken t;
    std::string body = tok;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      body = tok.substr(0, caret);
      std::string e = tok.substr(caret + 1);
      try {
        std::size_t used = 0;
        long p = std::stol(e, &used);
        if (used != e.size()) fail(tok, "bad exponent");
        if (p == 0 || p > 1000 || p < -1000) fail(tok, "exponent must be a nonzero integer of moderate size");
        t.power = static_cast<int>(p);
      } catch (const std::logic_error&) {
        fail(tok, "bad exponent");
      }
    }
    if (body.empty()) fail(tok, "missing symbol");
    t.symbol = body[0];
    if (t.symbol == 'P' || t.symbol == 'Q' || t.symbol == 'S' || t.symbol == 'U') {
      if (body.size() != 1) fail(tok, "unexpected characters after symbol");
    } else if (t.symbol == 'K') {
      std::string idx = body.substr(1);
      if (!idx.empty() && idx.front() == '(') {
        if (idx.back() != ')') fail(tok, "missing ')'");
        std::istringstream parts(idx.substr(1, idx.size() - 2));
        std::string part;
        while (std::getline(parts, part, ',')) {
          try {
            t.indices.push_back(std::stoi(part));
          } catch (const std::logic_error&) {
            fail(tok, "bad index");
          }
        }
      } else {
        for (char c : idx) {
          if (!std::isdigit(static_cast<unsigned char>(c))) fail(tok, "bad index");
          t.indices.push_back(c - '0');
        }
      }
      if (t.indices.size() != 2 && t.indices.size() != 3) fail(tok, "K needs two or three indices");
    } else {
      fail(tok, "unknown generator symbol");
    }
    out.push_back(std::move(t));
  }
  return out;
}

AutPair to_aut(const AutToken& t, int n) {
  AutPair g = AutPair::identity(n);
  if (t.symbol == 'K') {
    if (t.indices.size() == 2)
      g = magnus_Kij(t.indices[0], t.indices[1], n);
    else if (t.indices.size() == 3)
      g = magnus_Kijl(t.indices[0], t.indices[1], t.indices[2], n);
    else
      throw std::invalid_argument("K needs two or three indices");
  } else {
    g = nielsen(t.symbol, n);
  }
  if (t.power < 0) g = g.inverse();
  AutPair r = AutPair::identity(n);
  for (int k = 0; k < std::abs(t.power); ++k) r = r * g;
  return r;
}

AutPair to_aut(const AutWord& w, int n) {
  AutPair r = AutPair::identity(n);
  for (const AutToken& t : w) r = r * to_aut(t, n);
  return r;
}

AutWord inverse(const AutWord& w) {
  AutWord r(w.rbegin(), w.rend());
  for (AutToken& t : r) t.power = -t.power;
  return r;
}

AutWord concat(const AutWord& a, const AutWord& b) {
  AutWord r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

std::string to_string(const AutToken& t) {
  std::string s(1, t.symbol);
  if (t.symbol == 'K') {
    bool small = std::all_of(t.indices.begin(), t.indices.end(), [](int i) { return i >= 1 && i <= 9; });
    if (small) {
      for (int i : t.indices) s += std::to_string(i);
    } else {
      s += '(';
      for (std::size_t k = 0; k < t.indices.size(); ++k) s += (k ? "," : "") + std::to_string(t.indices[k]);
      s += ')';
    }
  }
  if (t.power != 1) s += "^" + std::to_string(t.power);
  return s;
}

std::string to_string(const AutWord& w) {
  if (w.empty()) return "id";
  std::string s;
  for (const AutToken& t : w) s += (s.empty() ? "" : " ") + to_string(t);
  return s;
}

long Rng::uniform(long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("Rng::uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return lo + static_cast<long>(v % span);
}

Word random_word(Rng& rng, int n, std::size_t max_length) {
  std::size_t len = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(std::max<std::size_t>(max_length, 1))));
  std::vector<Letter> ls;
  for (std::size_t k = 0; k < len; ++k) {
    int g = static_cast<int>(rng.uniform(1, n));
    int s = rng.uniform(0, 1) ? 1 : -1;
    ls.push_back({g, s});
  }
  return Word::reduce(ls);
}

AutWord random_aut_word(Rng& rng, int n, std::size_t length, std::string_view symbols) {
  std::string allowed;
  for (char c : symbols)
    if (c == 'Q' || c == 'S' || ((c == 'P' || c == 'U' || c == 'K') && n >= 2)) allowed += c;
  if (allowed.empty()) throw std::invalid_argument("random_aut_word: no usable symbols for this rank");
  AutWord w;
  for (std::size_t k = 0; k < length; ++k) {
    AutToken t;
    t.symbol = allowed[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(allowed.size()) - 1))];
    t.power = rng.uniform(0, 1) ? 1 : -1;
    if (t.symbol == 'K') {
      bool triple = n >= 3 && rng.uniform(0, 1) == 1;
      int i = static_cast<int>(rng.uniform(1, n));
      if (triple) {
        int j;
        int l;
        do {
          j = static_cast<int>(rng.uniform(1, n));
          l = static_cast<int>(rng.uniform(1, n));
        } while (j >= l || j == i || l == i);
        t.indices = {i, j, l};
      } else {
        int j;
        do {
          j = static_cast<int>(rng.uniform(1, n));
        } while (j == i);
        t.indices = {i, j};
      }
    }
    w.push_back(std::move(t));
  }
  return w;
}

}  // namespace repalg::words
