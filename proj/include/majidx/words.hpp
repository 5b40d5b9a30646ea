#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace majidx {

using Letter = std::int64_t;

/// A finite sequence of pairwise distinct positive integers.
///
/// Positions are 1-based in every public accessor (`letter(1)` is the first
/// letter); `letters()` exposes the underlying 0-based storage. Statistics
/// only look at the relative order of letters, so words need not be
/// permutations of [n].
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);
  Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}

  /// The identity permutation 1 2 ... n.
  static Word identity(std::size_t n);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  std::span<const Letter> letters() const noexcept { return letters_; }

  /// 1-based access; throws InputError when pos is not in [1, size()].
  Letter letter(std::size_t pos) const;

  bool contains(Letter x) const noexcept;
  /// 1-based position of x, or nullopt.
  std::optional<std::size_t> position_of(Letter x) const noexcept;

  Letter max_letter() const;
  Letter min_letter() const;

  /// True iff the letters are exactly 1..size().
  bool is_permutation_of_n() const noexcept;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  struct Unchecked {};
  Word(std::vector<Letter> letters, Unchecked) : letters_(std::move(letters)) {}
  friend Word insert_at(const Word&, std::size_t, Letter);
  friend Word remove_at(const Word&, std::size_t);
  friend class ShuffleStream;

  std::vector<Letter> letters_;
};

/// A sequence of positive integers in which repeats are allowed; permutations
/// of a multiset {1^a1, ..., k^ak} live here.
class MultisetWord {
 public:
  MultisetWord() = default;
  explicit MultisetWord(std::vector<Letter> letters);

  std::size_t size() const noexcept { return letters_.size(); }
  std::span<const Letter> letters() const noexcept { return letters_; }

  friend bool operator==(const MultisetWord&, const MultisetWord&) = default;
  friend auto operator<=>(const MultisetWord&, const MultisetWord&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Strictly increasing list of descent indices, each in [1, len-1].
struct DescentSet {
  std::vector<std::size_t> indices;

  bool contains(std::size_t i) const noexcept;
  bool is_subset_of(std::span<const std::size_t> other) const noexcept;
  std::size_t size() const noexcept { return indices.size(); }
  friend bool operator==(const DescentSet&, const DescentSet&) = default;
};

// Statistics. The span overloads accept any letter sequence (repeats
// included) and use the strict comparison w(i) > w(i+1).
DescentSet descent_set(std::span<const Letter> w);
std::int64_t maj(std::span<const Letter> w) noexcept;
std::int64_t inv(std::span<const Letter> w) noexcept;

inline DescentSet descent_set(const Word& w) { return descent_set(w.letters()); }
inline DescentSet descent_set(const MultisetWord& w) { return descent_set(w.letters()); }
inline std::int64_t maj(const Word& w) noexcept { return maj(w.letters()); }
inline std::int64_t maj(const MultisetWord& w) noexcept { return maj(w.letters()); }
inline std::int64_t inv(const Word& w) noexcept { return inv(w.letters()); }
inline std::int64_t inv(const MultisetWord& w) noexcept { return inv(w.letters()); }

/// Number of descents at index >= k. Requires 1 <= k <= len+1.
std::int64_t d_k(std::span<const Letter> w, std::size_t k);
inline std::int64_t d_k(const Word& w, std::size_t k) { return d_k(w.letters(), k); }

/// Term i counts inversions whose first (larger) letter is i.
/// Requires sigma to be a permutation of [n].
std::vector<std::int64_t> inversion_sequence(const Word& sigma);

/// The permutation of [n] whose inversion sequence is `terms`; the inverse of
/// inversion_sequence. Requires 0 <= terms[i-1] <= i-1.
Word from_inversion_sequence(std::span<const std::int64_t> terms);

/// sigma with r placed at 1-based position k (before sigma(k), or at the end
/// when k = len+1).
Word insert_at(const Word& sigma, std::size_t k, Letter r);

/// sigma with the letter at 1-based position k deleted.
Word remove_at(const Word& sigma, std::size_t k);

/// Subword of sigma made of the letters for which keep(letter) holds.
template <class Pred>
Word subword(const Word& sigma, Pred keep) {
  std::vector<Letter> out;
  out.reserve(sigma.size());
  for (Letter x : sigma.letters())
    if (keep(x)) out.push_back(x);
  return Word(std::move(out));
}

/// {k in [n-1] : k+1 appears left of k}. Equals Des(sigma^-1).
DescentSet inverse_descent_set(const Word& sigma);

/// Group-theoretic inverse of a permutation of [n].
Word inverse(const Word& sigma);

/// Replace each letter x by the index i of the block of the composition
/// `blocks` containing x (block i covers a1+...+a(i-1) < x <= a1+...+ai).
MultisetWord flatten_to_multiset(const Word& sigma, std::span<const std::size_t> blocks);

/// Lazily enumerates all shuffles of theta and pi.
///
/// The positions occupied by pi's letters run through the |pi|-subsets of
/// [|theta|+|pi|] in colex order, so for theta = 12, pi = 3 the stream is
/// 312, 132, 123.
class ShuffleStream {
 public:
  ShuffleStream(Word theta, Word pi);

  /// Writes the next shuffle into `out`; returns false when exhausted.
  bool next(Word& out);

  /// Total number of shuffles, C(|theta|+|pi|, |pi|).
  std::uint64_t count() const noexcept;

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Word;
    using difference_type = std::ptrdiff_t;
    using pointer = const Word*;
    using reference = const Word&;

    iterator() = default;
    explicit iterator(ShuffleStream* owner) : owner_(owner) { ++*this; }
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++() {
      if (!owner_->next(current_)) owner_ = nullptr;
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.owner_ == b.owner_; }

   private:
    ShuffleStream* owner_ = nullptr;
    Word current_;
  };

  iterator begin() { return iterator(this); }
  iterator end() { return iterator(); }

 private:
  void fill(Word& out) const;

  Word theta_;
  Word pi_;
  std::vector<std::size_t> slots_;  // 0-based positions of pi letters
  bool started_ = false;
  bool done_ = false;
};

inline ShuffleStream enumerate_shuffles(Word theta, Word pi) {
  return ShuffleStream(std::move(theta), std::move(pi));
}

// Text format: decimal integers separated by spaces and/or commas. A single
// token of digits is read one digit per letter ("426351").
std::vector<Letter> parse_letters(std::string_view text, bool allow_digit_string);
Word parse_word(std::string_view text);
std::string format_letters(std::span<const Letter> w);
inline std::string format_word(const Word& w) { return format_letters(w.letters()); }

}  // namespace majidx
