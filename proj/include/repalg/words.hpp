#pragma once

#include <compare>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace repalg::words {

struct Letter {
  int gen = 1;   // 1-based generator index
  int sign = 1;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Freely reduced word in the free group on x_1, x_2, ...
class Word {
 public:
  Word() = default;

  /// Free reduction of an arbitrary letter sequence. Throws std::out_of_range
  /// for a generator index outside 1..n (n = 0 skips the upper bound check).
  static Word reduce(std::span<const Letter> letters, int n = 0);
  static Word generator(int l, int sign = 1);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  int max_generator() const noexcept;

  /// "x1 x2^-1"; the empty word prints as "1".
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

Word mul(const Word& a, const Word& b);
Word inv(const Word& a);
Word power(const Word& a, long k);
/// [a,b] = a b a^-1 b^-1
Word commutator(const Word& a, const Word& b);
/// [[...[y1,y2],...],yk]; throws std::invalid_argument on an empty list.
Word left_normed(std::span<const Word> ws);

using AbelianVector = std::vector<long long>;
AbelianVector abelianize(const Word& w, int n);

/// Endomorphism of F_n given by the images of the generators.
class Endo {
 public:
  Endo() = default;
  explicit Endo(std::vector<Word> images);
  static Endo identity(int n);

  int rank() const noexcept { return static_cast<int>(images_.size()); }
  const Word& image(int l) const { return images_.at(static_cast<std::size_t>(l - 1)); }
  const std::vector<Word>& images() const noexcept { return images_; }
  bool fixes_generators() const;

  friend bool operator==(const Endo&, const Endo&) = default;

 private:
  std::vector<Word> images_;
};

Word apply_endo(const Endo& e, const Word& w);
/// Right-action convention: apply_endo(compose(s, t), w) = apply_endo(t, apply_endo(s, w)).
Endo compose(const Endo& s, const Endo& t);

/// Automorphism carried together with its inverse.
class AutPair {
 public:
  /// Throws std::invalid_argument unless fwd and bwd are mutually inverse.
  AutPair(Endo fwd, Endo bwd);
  static AutPair identity(int n);

  const Endo& fwd() const noexcept { return fwd_; }
  const Endo& bwd() const noexcept { return bwd_; }
  int rank() const noexcept { return fwd_.rank(); }
  AutPair inverse() const { return AutPair(bwd_, fwd_, Trusted{}); }

  friend bool operator==(const AutPair&, const AutPair&) = default;

 private:
  struct Trusted {};
  AutPair(Endo fwd, Endo bwd, Trusted) : fwd_(std::move(fwd)), bwd_(std::move(bwd)) {}
  friend AutPair operator*(const AutPair& a, const AutPair& b);

  Endo fwd_;
  Endo bwd_;
};

/// Group product ab acting on the right: x^{ab} = (x^a)^b.
AutPair operator*(const AutPair& a, const AutPair& b);

/// Nielsen generators P, Q, S, U of Aut F_n.
AutPair nielsen(char name, int n);
/// K_ij: x_i -> x_j^-1 x_i x_j.
AutPair magnus_Kij(int i, int j, int n);
/// K_ijl: x_i -> x_i [x_j, x_l], j < l.
AutPair magnus_Kijl(int i, int j, int l, int n);

/// Word syntax: "x1 x2^-1 x1", exponents "x1^3", commutators "[x1,x2]" (nestable),
/// parentheses for grouping, "1" for the identity.
Word parse_word(std::string_view text, int n);

/// One generator token of an automorphism word.
struct AutToken {
  char symbol = 'P';        // P, Q, S, U or K
  std::vector<int> indices;  // for K: (i,j) or (i,j,l)
  int power = 1;            // nonzero
  friend bool operator==(const AutToken&, const AutToken&) = default;
};
using AutWord = std::vector<AutToken>;

/// Tokens "P Q S U K12 K123 K(1,2)" separated by whitespace, each optionally
/// followed by "^-1" or "^k"; "id" is the empty word.
AutWord parse_aut_word(std::string_view text);
AutPair to_aut(const AutToken& t, int n);
AutPair to_aut(const AutWord& w, int n);
AutWord inverse(const AutWord& w);
AutWord concat(const AutWord& a, const AutWord& b);
std::string to_string(const AutToken& t);
std::string to_string(const AutWord& w);

/// Seeded generator whose output depends only on the seed (not on the
/// standard library's distribution implementations).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);

 private:
  std::mt19937_64 engine_;
};

Word random_word(Rng& rng, int n, std::size_t max_length);
/// Random word in the given symbols ("PQSU" or including 'K' for Magnus generators).
AutWord random_aut_word(Rng& rng, int n, std::size_t length, std::string_view symbols);

}  // namespace repalg::words
