#include "majidx/words.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "majidx/error.hpp"

namespace majidx {

namespace {

void require_positive(std::span<const Letter> letters) {
  for (Letter x : letters)
    if (x <= 0) throw InputError("letters must be positive integers, got " + std::to_string(x));
}

void require_permutation_of_n(const Word& sigma, const char* op) {
  if (!sigma.is_permutation_of_n())
    throw InputError(std::string(op) + ": word must be a permutation of 1.." +
                     std::to_string(sigma.size()));
}

}  // namespace

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  require_positive(letters_);
  std::vector<Letter> sorted = letters_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InputError("word letters must be pairwise distinct: " + format_letters(letters_));
}

Word Word::identity(std::size_t n) {
  std::vector<Letter> v(n);
  std::iota(v.begin(), v.end(), Letter{1});
  return Word(std::move(v), Unchecked{});
}

Letter Word::letter(std::size_t pos) const {
  if (pos < 1 || pos > letters_.size())
    throw InputError("position " + std::to_string(pos) + " outside [1, " +
                     std::to_string(letters_.size()) + "]");
  return letters_[pos - 1];
}

bool Word::contains(Letter x) const noexcept {
  return std::find(letters_.begin(), letters_.end(), x) != letters_.end();
}

std::optional<std::size_t> Word::position_of(Letter x) const noexcept {
  auto it = std::find(letters_.begin(), letters_.end(), x);
  if (it == letters_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - letters_.begin()) + 1;
}

Letter Word::max_letter() const {
  if (letters_.empty()) throw InputError("empty word has no maximum letter");
  return *std::max_element(letters_.begin(), letters_.end());
}

Letter Word::min_letter() const {
  if (letters_.empty()) throw InputError("empty word has no minimum letter");
  return *std::min_element(letters_.begin(), letters_.end());
}

bool Word::is_permutation_of_n() const noexcept {
  const auto n = static_cast<Letter>(letters_.size());
  // letters are distinct and positive, so range-checking suffices
  return std::all_of(letters_.begin(), letters_.end(), [n](Letter x) { return x <= n; });
}

MultisetWord::MultisetWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
  require_positive(letters_);
}

bool DescentSet::contains(std::size_t i) const noexcept {
  return std::binary_search(indices.begin(), indices.end(), i);
}

bool DescentSet::is_subset_of(std::span<const std::size_t> other) const noexcept {
  return std::all_of(indices.begin(), indices.end(), [&](std::size_t i) {
    return std::find(other.begin(), other.end(), i) != other.end();
  });
}

DescentSet descent_set(std::span<const Letter> w) {
  DescentSet d;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i - 1] > w[i]) d.indices.push_back(i);
  return d;
}

std::int64_t maj(std::span<const Letter> w) noexcept {
  std::int64_t total = 0;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i - 1] > w[i]) total += static_cast<std::int64_t>(i);
  return total;
}

std::int64_t inv(std::span<const Letter> w) noexcept {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++total;
  return total;
}

std::int64_t d_k(std::span<const Letter> w, std::size_t k) {
  if (k < 1 || k > w.size() + 1)
    throw InputError("d_k: k=" + std::to_string(k) + " outside [1, " +
                     std::to_string(w.size() + 1) + "]");
  std::int64_t count = 0;
  for (std::size_t i = k; i < w.size(); ++i)
    if (w[i - 1] > w[i]) ++count;
  return count;
}

std::vector<std::int64_t> inversion_sequence(const Word& sigma) {
  require_permutation_of_n(sigma, "inversion_sequence");
  const auto w = sigma.letters();
  std::vector<std::int64_t> terms(w.size(), 0);
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++terms[static_cast<std::size_t>(w[i]) - 1];
  return terms;
}

Word from_inversion_sequence(std::span<const std::int64_t> terms) {
  std::vector<Letter> w;
  w.reserve(terms.size());
  for (std::size_t i = 1; i <= terms.size(); ++i) {
    const std::int64_t t = terms[i - 1];
    if (t < 0 || t > static_cast<std::int64_t>(i) - 1)
      throw InputError("inversion sequence term " + std::to_string(i) + " = " +
                       std::to_string(t) + " outside [0, " + std::to_string(i - 1) + "]");
    // letter i goes to the spot with t smaller letters to its right
    w.insert(w.end() - t, static_cast<Letter>(i));
  }
  return Word(std::move(w));
}

Word insert_at(const Word& sigma, std::size_t k, Letter r) {
  if (k < 1 || k > sigma.size() + 1)
    throw InputError("insert_at: position " + std::to_string(k) + " outside [1, " +
                     std::to_string(sigma.size() + 1) + "]");
  if (r <= 0) throw InputError("insert_at: letter must be positive");
  if (sigma.contains(r))
    throw InputError("insert_at: letter " + std::to_string(r) + " already in word");
  std::vector<Letter> out;
  out.reserve(sigma.size() + 1);
  out.insert(out.end(), sigma.letters_.begin(), sigma.letters_.begin() + (k - 1));
  out.push_back(r);
  out.insert(out.end(), sigma.letters_.begin() + (k - 1), sigma.letters_.end());
  return Word(std::move(out), Word::Unchecked{});
}

Word remove_at(const Word& sigma, std::size_t k) {
  if (k < 1 || k > sigma.size())
    throw InputError("remove_at: position " + std::to_string(k) + " outside [1, " +
                     std::to_string(sigma.size()) + "]");
  std::vector<Letter> out = sigma.letters_;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(k - 1));
  return Word(std::move(out), Word::Unchecked{});
}

DescentSet inverse_descent_set(const Word& sigma) {
  require_permutation_of_n(sigma, "inverse_descent_set");
  const auto w = sigma.letters();
  std::vector<std::size_t> pos(w.size() + 1);
  for (std::size_t i = 0; i < w.size(); ++i) pos[static_cast<std::size_t>(w[i])] = i;
  DescentSet d;
  for (std::size_t k = 1; k < w.size(); ++k)
    if (pos[k + 1] < pos[k]) d.indices.push_back(k);
  return d;
}

Word inverse(const Word& sigma) {
  require_permutation_of_n(sigma, "inverse");
  const auto w = sigma.letters();
  std::vector<Letter> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    out[static_cast<std::size_t>(w[i]) - 1] = static_cast<Letter>(i + 1);
  return Word(std::move(out));
}

MultisetWord flatten_to_multiset(const Word& sigma, std::span<const std::size_t> blocks) {
  require_permutation_of_n(sigma, "flatten_to_multiset");
  const std::size_t total = std::accumulate(blocks.begin(), blocks.end(), std::size_t{0});
  if (total != sigma.size())
    throw InputError("flatten_to_multiset: blocks sum to " + std::to_string(total) +
                     ", word has length " + std::to_string(sigma.size()));
  std::vector<Letter> block_of(sigma.size() + 1);
  std::size_t x = 1;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = 0; j < blocks[i]; ++j) block_of[x++] = static_cast<Letter>(i + 1);
  std::vector<Letter> out;
  out.reserve(sigma.size());
  for (Letter l : sigma.letters()) out.push_back(block_of[static_cast<std::size_t>(l)]);
  return MultisetWord(std::move(out));
}

// ---------------------------------------------------------------------------

ShuffleStream::ShuffleStream(Word theta, Word pi) : theta_(std::move(theta)), pi_(std::move(pi)) {
  for (Letter x : pi_.letters())
    if (theta_.contains(x))
      throw InputError("enumerate_shuffles: letter " + std::to_string(x) + " occurs in both words");
}

std::uint64_t ShuffleStream::count() const noexcept {
  const std::uint64_t n = theta_.size() + pi_.size();
  const std::uint64_t a = pi_.size();
  std::uint64_t c = 1;
  for (std::uint64_t i = 1; i <= a; ++i) c = c * (n - a + i) / i;
  return c;
}

bool ShuffleStream::next(Word& out) {
  if (done_) return false;
  const std::size_t a = pi_.size();
  const std::size_t n = theta_.size() + a;
  if (!started_) {
    started_ = true;
    slots_.resize(a);
    std::iota(slots_.begin(), slots_.end(), std::size_t{0});
    fill(out);
    return true;
  }
  // colex successor: bump the lowest slot that has room, reset those below
  std::size_t j = 0;
  while (j < a && slots_[j] + 1 == (j + 1 < a ? slots_[j + 1] : n)) ++j;
  if (j == a) {
    done_ = true;
    return false;
  }
  ++slots_[j];
  for (std::size_t i = 0; i < j; ++i) slots_[i] = i;
  fill(out);
  return true;
}

void ShuffleStream::fill(Word& out) const {
  const std::size_t n = theta_.size() + pi_.size();
  std::vector<Letter>& w = out.letters_;
  w.resize(n);
  std::size_t ti = 0, pj = 0;
  for (std::size_t pos = 0; pos < n; ++pos) {
    if (pj < slots_.size() && slots_[pj] == pos)
      w[pos] = pi_.letters_[pj++];
    else
      w[pos] = theta_.letters_[ti++];
  }
}

// ---------------------------------------------------------------------------

std::vector<Letter> parse_letters(std::string_view text, bool allow_digit_string) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == ' ' || c == ',' || c == '\t' || c == '\n' || c == '\r'; };
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    std::size_t start = i;
    while (i < text.size() && !is_sep(text[i])) ++i;
    if (i > start) tokens.push_back(text.substr(start, i - start));
  }
  const bool separated = text.find_first_of(" ,\t\n\r") != std::string_view::npos;

  std::vector<Letter> out;
  if (allow_digit_string && tokens.size() == 1 && !separated && tokens[0].size() > 1) {
    for (char c : tokens[0]) {
      if (c < '0' || c > '9') throw InputError("malformed word: '" + std::string(text) + "'");
      out.push_back(c - '0');
    }
    return out;
  }
  for (std::string_view tok : tokens) {
    Letter value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw InputError("malformed integer '" + std::string(tok) + "' in '" + std::string(text) + "'");
    out.push_back(value);
  }
  return out;
}

Word parse_word(std::string_view text) { return Word(parse_letters(text, true)); }

std::string format_letters(std::span<const Letter> w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(w[i]);
  }
  return s;
}

}  // namespace majidx
