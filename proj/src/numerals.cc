// Copyright 2026 The Deedscan Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "deedscan/numerals.h"

#include <unordered_map>

#include "deedscan/text.h"

namespace deedscan {

namespace {

enum class AtomKind { kUnit, kTeen, kTens, kHundred, kThousand, kAnd };

struct Atom {
  AtomKind kind;
  int value;
  bool ordinal;
};

constexpr const char *kUnits[] = {"zero", "one", "two",   "three", "four",
                                  "five", "six", "seven", "eight", "nine"};
constexpr const char *kTeens[] = {"ten",     "eleven",  "twelve",
                                  "thirteen", "fourteen", "fifteen",
                                  "sixteen", "seventeen", "eighteen",
                                  "nineteen"};
constexpr const char *kTens[] = {"",      "",      "twenty",  "thirty", "forty",
                                 "fifty", "sixty", "seventy", "eighty", "ninety"};

const std::unordered_map<std::string, Atom> &WordTable() {
  static const auto *table = [] {
    auto *t = new std::unordered_map<std::string, Atom>();
    for (int i = 0; i < 10; ++i) (*t)[kUnits[i]] = {AtomKind::kUnit, i, false};
    for (int i = 0; i < 10; ++i) (*t)[kTeens[i]] = {AtomKind::kTeen, 10 + i, false};
    for (int i = 2; i < 10; ++i) (*t)[kTens[i]] = {AtomKind::kTens, 10 * i, false};
    (*t)["hundred"] = {AtomKind::kHundred, 100, false};
    (*t)["thousand"] = {AtomKind::kThousand, 1000, false};
    (*t)["and"] = {AtomKind::kAnd, 0, false};

    const std::pair<const char *, int> ordinals[] = {
        {"first", 1},        {"second", 2},      {"third", 3},
        {"fourth", 4},       {"fifth", 5},       {"sixth", 6},
        {"seventh", 7},      {"eighth", 8},      {"ninth", 9},
        {"tenth", 10},       {"eleventh", 11},   {"twelfth", 12},
        {"thirteenth", 13},  {"fourteenth", 14}, {"fifteenth", 15},
        {"sixteenth", 16},   {"seventeenth", 17}, {"eighteenth", 18},
        {"nineteenth", 19},  {"twentieth", 20},  {"thirtieth", 30},
        {"fortieth", 40},    {"fiftieth", 50},   {"sixtieth", 60},
        {"seventieth", 70},  {"eightieth", 80},  {"ninetieth", 90},
    };
    for (const auto &[word, value] : ordinals) {
      AtomKind kind = value < 10    ? AtomKind::kUnit
                      : value < 20  ? AtomKind::kTeen
                                    : AtomKind::kTens;
      (*t)[word] = {kind, value, true};
    }
    (*t)["hundredth"] = {AtomKind::kHundred, 100, true};
    (*t)["thousandth"] = {AtomKind::kThousand, 1000, true};
    return t;
  }();
  return *table;
}

// Splits each token on hyphens and maps every piece to an atom. Fails if
// any piece is not a number word.
std::optional<std::vector<Atom>> Atomize(std::span<const std::string> tokens) {
  const auto &table = WordTable();
  std::vector<Atom> atoms;
  for (const std::string &token : tokens) {
    if (token.empty()) return std::nullopt;
    size_t pos = 0;
    while (pos <= token.size()) {
      size_t dash = token.find('-', pos);
      std::string piece =
          token.substr(pos, dash == std::string::npos ? std::string::npos : dash - pos);
      auto it = table.find(piece);
      if (it == table.end()) return std::nullopt;
      // "and" is only ever a token of its own.
      if (it->second.kind == AtomKind::kAnd && piece.size() != token.size()) {
        return std::nullopt;
      }
      atoms.push_back(it->second);
      if (dash == std::string::npos) break;
      pos = dash + 1;
    }
  }
  return atoms;
}

// Recursive-descent parse over atoms that must consume every atom.
class AtomParser {
 public:
  explicit AtomParser(const std::vector<Atom> &atoms) : atoms_(atoms) {}

  std::optional<int> Parse() {
    auto first = BelowThousand();
    if (!first) return std::nullopt;
    int total = *first;
    if (Peek(AtomKind::kThousand)) {
      if (*first < 1 || *first > 99 || ordinal_seen_) return std::nullopt;
      Take();
      total *= 1000;
      if (!Done()) {
        if (ordinal_seen_) return std::nullopt;
        SkipAnd();
        auto rest = BelowThousand();
        if (!rest || *rest < 1) return std::nullopt;
        total += *rest;
      }
    }
    if (!Done()) return std::nullopt;
    return total;
  }

 private:
  bool Done() const { return pos_ == atoms_.size(); }
  bool Peek(AtomKind kind) const {
    return pos_ < atoms_.size() && atoms_[pos_].kind == kind;
  }
  const Atom &Take() {
    const Atom &atom = atoms_[pos_++];
    if (atom.ordinal) ordinal_seen_ = true;
    return atom;
  }
  // An "and" connector is consumed only when something follows it.
  void SkipAnd() {
    if (Peek(AtomKind::kAnd) && pos_ + 1 < atoms_.size()) ++pos_;
  }

  std::optional<int> BelowHundred() {
    if (Done() || ordinal_seen_) return std::nullopt;
    const Atom &atom = atoms_[pos_];
    switch (atom.kind) {
      case AtomKind::kUnit:
      case AtomKind::kTeen:
        Take();
        return atom.value;
      case AtomKind::kTens: {
        Take();
        int value = atom.value;
        if (!ordinal_seen_ && Peek(AtomKind::kUnit) && atoms_[pos_].value > 0) {
          value += Take().value;
        }
        return value;
      }
      default:
        return std::nullopt;
    }
  }

  std::optional<int> BelowThousand() {
    auto value = BelowHundred();
    if (!value) return std::nullopt;
    if (Peek(AtomKind::kHundred)) {
      if (*value < 1 || *value > 9 || ordinal_seen_) return std::nullopt;
      Take();
      *value *= 100;
      if (!Done() && !Peek(AtomKind::kThousand) && !ordinal_seen_) {
        size_t mark = pos_;
        SkipAnd();
        auto rest = BelowHundred();
        if (!rest || *rest < 1) {
          pos_ = mark;
          return std::nullopt;
        }
        *value += *rest;
      }
    }
    return value;
  }

  const std::vector<Atom> &atoms_;
  size_t pos_ = 0;
  bool ordinal_seen_ = false;
};

std::optional<int> ParseWords(std::span<const std::string> tokens) {
  auto atoms = Atomize(tokens);
  if (!atoms || atoms->empty()) return std::nullopt;
  AtomParser parser(*atoms);
  return parser.Parse();
}

// Longest run of number-word tokens accepted as a numeral.
constexpr size_t kMaxWordTokens = 12;

std::string BelowHundredWord(int n) {
  if (n < 10) return kUnits[n];
  if (n < 20) return kTeens[n - 10];
  std::string word = kTens[n / 10];
  if (n % 10 != 0) word += std::string("-") + kUnits[n % 10];
  return word;
}

}  // namespace

const char *NumeralFormName(NumeralForm form) {
  switch (form) {
    case NumeralForm::kArabic: return "arabic";
    case NumeralForm::kWords: return "words";
    case NumeralForm::kMixed: return "mixed";
  }
  return "";
}

std::optional<int> ParseArabic(std::string_view token) {
  size_t digits = 0;
  while (digits < token.size() && token[digits] >= '0' && token[digits] <= '9') {
    ++digits;
  }
  if (digits == 0) return std::nullopt;
  std::string_view suffix = token.substr(digits);
  if (!suffix.empty() && suffix != "st" && suffix != "nd" && suffix != "rd" &&
      suffix != "th") {
    return std::nullopt;
  }
  long long value = 0;
  for (size_t i = 0; i < digits; ++i) {
    value = value * 10 + (token[i] - '0');
    if (value > kMaxNumeral) return std::nullopt;
  }
  return static_cast<int>(value);
}

std::optional<NumeralParse> ParseNumeralPrefix(
    std::span<const std::string> tokens) {
  if (tokens.empty()) return std::nullopt;
  if (auto arabic = ParseArabic(tokens[0])) {
    NumeralParse parse;
    parse.value = *arabic;
    parse.form = NumeralForm::kArabic;
    parse.token_count = 1;
    return parse;
  }
  size_t limit = std::min(tokens.size(), kMaxWordTokens);
  for (size_t k = limit; k >= 1; --k) {
    auto words = ParseWords(tokens.first(k));
    if (!words) continue;
    NumeralParse parse;
    parse.value = *words;
    parse.form = NumeralForm::kWords;
    parse.token_count = k;
    if (k < tokens.size()) {
      if (auto arabic = ParseArabic(tokens[k])) {
        parse.form = NumeralForm::kMixed;
        parse.conflict = *arabic != *words;
        parse.value = *arabic;
        parse.token_count = k + 1;
      }
    }
    return parse;
  }
  return std::nullopt;
}

std::optional<NumeralParse> ParseNumeral(std::span<const std::string> tokens) {
  if (tokens.empty()) return std::nullopt;
  if (tokens.size() == 1) {
    if (auto arabic = ParseArabic(tokens[0])) {
      return NumeralParse{*arabic, NumeralForm::kArabic, false, 1, {}};
    }
  }
  if (auto words = ParseWords(tokens)) {
    return NumeralParse{*words, NumeralForm::kWords, false, tokens.size(), {}};
  }
  if (tokens.size() >= 2) {
    auto arabic = ParseArabic(tokens.back());
    auto words = ParseWords(tokens.first(tokens.size() - 1));
    if (arabic && words) {
      return NumeralParse{*arabic, NumeralForm::kMixed, *arabic != *words,
                          tokens.size(), {}};
    }
  }
  return std::nullopt;
}

std::vector<std::string> RenderNumeral(int n) {
  if (n < 0 || n > kMaxNumeral) {
    throw Error("numeral out of range: " + std::to_string(n));
  }
  if (n == 0) return {"zero"};
  std::vector<std::string> words;
  int thousands = n / 1000;
  int rest = n % 1000;
  if (thousands > 0) {
    words.push_back(BelowHundredWord(thousands));
    words.push_back("thousand");
  }
  if (rest >= 100) {
    words.push_back(kUnits[rest / 100]);
    words.push_back("hundred");
    rest %= 100;
  }
  if (rest > 0) words.push_back(BelowHundredWord(rest));
  return words;
}

std::string RepairOcrDigits(std::string_view token) {
  bool has_digit = false;
  for (char c : token) {
    if (c >= '0' && c <= '9') {
      has_digit = true;
    } else if (c != 'l' && c != 'i' && c != 'o') {
      return std::string(token);
    }
  }
  if (!has_digit) return std::string(token);
  std::string out(token);
  for (char &c : out) {
    if (c == 'l' || c == 'i') c = '1';
    if (c == 'o') c = '0';
  }
  return out;
}

}  // namespace deedscan
