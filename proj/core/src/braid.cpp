#include "hyperjac/braid.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace hyperjac {

namespace {

void check_letter(int strands, int letter) {
  const int k = letter > 0 ? letter : -letter;
  if (k < 1 || k > strands - 1)
    throw error("braid letter " + std::to_string(letter) +
                " out of range for " + std::to_string(strands) + " strands");
}

}  // namespace

BraidWord::BraidWord(int strands_, std::vector<int> letters_)
    : strands(strands_), letters(std::move(letters_)) {
  if (strands < 2) throw error("braid group needs at least 2 strands");
  for (int l : letters) check_letter(strands, l);
}

Permutation::Permutation(int n) : images_(n) {
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation Permutation::transposition(int n, int a, int b) {
  Permutation p(n);
  std::swap(p.images_[a], p.images_[b]);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw error("permutation size mismatch");
  Permutation out(a.size());
  for (int i = 0; i < a.size(); ++i) out.images_[i] = a.images_[b.images_[i]];
  return out;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < size(); ++i) os << (i ? " " : "") << images_[i] + 1;
  os << "]";
  return os.str();
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) throw error("strand count mismatch in concat");
  std::vector<int> letters = a.letters;
  letters.insert(letters.end(), b.letters.begin(), b.letters.end());
  return BraidWord(a.strands, std::move(letters));
}

BraidWord inverse_word(const BraidWord& w) {
  std::vector<int> letters(w.letters.rbegin(), w.letters.rend());
  for (int& l : letters) l = -l;
  return BraidWord(w.strands, std::move(letters));
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<int> stack;
  stack.reserve(w.letters.size());
  for (int l : w.letters) {
    if (!stack.empty() && stack.back() == -l)
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return BraidWord(w.strands, std::move(stack));
}

Permutation permutation_of(const BraidWord& w) {
  Permutation p(w.strands);
  for (int l : w.letters) {
    const int k = (l > 0 ? l : -l) - 1;  // sigma_k^{+-1} both map to (k, k+1)
    p = compose(p, Permutation::transposition(w.strands, k, k + 1));
  }
  return p;
}

bool is_pure(const BraidWord& w) { return permutation_of(w).is_identity(); }

BraidWord pure_braid_generator(int strands, int i, int j) {
  if (i < 1 || j <= i || j > strands)
    throw error("pure_braid_generator: need 1 <= i < j <= strands");
  std::vector<int> letters;
  for (int k = j - 1; k > i; --k) letters.push_back(k);
  letters.push_back(i);
  letters.push_back(i);
  for (int k = i + 1; k <= j - 1; ++k) letters.push_back(-k);
  return BraidWord(strands, std::move(letters));
}

std::vector<BraidWord> all_pure_braid_generators(int strands) {
  std::vector<BraidWord> gens;
  for (int i = 1; i < strands; ++i)
    for (int j = i + 1; j <= strands; ++j)
      gens.push_back(pure_braid_generator(strands, i, j));
  return gens;
}

BraidWord random_word(int strands, int max_length, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len_dist(1, max_length);
  std::uniform_int_distribution<int> gen_dist(1, strands - 1);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  const int len = len_dist(rng);
  std::vector<int> letters(len);
  for (int& l : letters) {
    l = gen_dist(rng);
    if (sign_dist(rng)) l = -l;
  }
  return BraidWord(strands, std::move(letters));
}

BraidWord parse_word(int strands, std::string_view text) {
  std::vector<int> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
    if (pos >= text.size()) break;
    int value = 0;
    auto [next, ec] =
        std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc() || value == 0)
      throw error("cannot parse braid word at: " + std::string(text.substr(pos)));
    letters.push_back(value);
    pos = static_cast<std::size_t>(next - text.data());
  }
  return BraidWord(strands, std::move(letters));
}

std::string format_word(const BraidWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(w.letters[i]);
  }
  return out;
}

}  // namespace hyperjac
