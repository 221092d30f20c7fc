#include "posetpi/presentation.hpp"

#include "posetpi/error.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace posetpi {

GroupPresentation GroupPresentation::make(std::vector<std::string> generators, std::vector<Word> relators) {
  GroupPresentation p;
  p.generators = std::move(generators);
  for (auto& r : relators) {
    for (const Letter& l : r.letters) {
      if (l.generator >= p.generators.size())
        throw Error(ErrorCode::AlphabetMismatch, "relator uses generator index " + std::to_string(l.generator) +
                                                     " but only " + std::to_string(p.generators.size()) +
                                                     " generators exist");
      if (l.exponent != 1 && l.exponent != -1)
        throw Error(ErrorCode::AlphabetMismatch, "letters must have exponent ±1");
    }
    p.relators.push_back(cyclic_reduce(std::move(r)));
  }
  return p;
}

std::string format_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < w.letters.size()) {
    std::size_t j = i;
    while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
    const auto power = static_cast<long>(j - i) * w.letters[i].exponent;
    os << (first ? "" : " ") << names.at(w.letters[i].generator);
    if (power != 1) os << '^' << power;
    first = false;
    i = j;
  }
  return os.str();
}

std::string format_word_compact(const Word& w, const std::vector<std::string>& names) {
  const bool single = std::all_of(names.begin(), names.end(), [](const std::string& n) {
    return n.size() == 1 && std::islower(static_cast<unsigned char>(n[0]));
  });
  if (!single) return format_word(w, names);
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& l : w.letters) {
    const char c = names.at(l.generator)[0];
    out += l.exponent > 0 ? c : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  return out;
}

std::string format_presentation(const GroupPresentation& p) {
  std::string out;
  for (std::size_t i = 0; i < p.generators.size(); ++i) out += (i ? "," : "") + p.generators[i];
  out += " | ";
  for (std::size_t j = 0; j < p.relators.size(); ++j)
    out += (j ? ", " : "") + format_word_compact(p.relators[j], p.generators);
  return out;
}

namespace {

class WordParser {
public:
  WordParser(std::string_view text, std::size_t offset, const std::vector<std::string>& names)
      : text_(text), offset_(offset), names_(names) {}

  Word parse() {
    std::vector<Letter> letters;
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '1') {
      ++pos_;
      skip_space();
      if (pos_ != text_.size()) fail("unexpected input after '1'");
      return {};
    }
    while (pos_ < text_.size()) {
      const auto [gen, inverse] = generator();
      long power = 1;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        power = exponent();
      }
      if (power == 0) fail("zero exponent");
      const int sign = ((power > 0) != inverse) ? 1 : -1;
      for (long k = 0; k < (power > 0 ? power : -power); ++k) letters.push_back({gen, sign});
      skip_space();
    }
    return reduce(Word(std::move(letters)));
  }

private:
  std::string_view text_;
  std::size_t offset_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, what + " at position " + std::to_string(offset_ + pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '*'))
      ++pos_;
  }

  std::pair<std::size_t, bool> generator() {
    const bool inverse = std::isupper(static_cast<unsigned char>(text_[pos_])) != 0;
    std::size_t best = names_.size(), best_len = 0;
    for (std::size_t g = 0; g < names_.size(); ++g) {
      const auto& n = names_[g];
      if (n.size() <= best_len || pos_ + n.size() > text_.size()) continue;
      const char first = static_cast<char>(std::tolower(static_cast<unsigned char>(text_[pos_])));
      if (first == n[0] && text_.substr(pos_ + 1, n.size() - 1) == std::string_view(n).substr(1)) {
        best = g;
        best_len = n.size();
      }
    }
    if (best == names_.size()) fail(std::string("unknown generator starting with '") + text_[pos_] + "'");
    pos_ += best_len;
    return {best, inverse};
  }

  long exponent() {
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.empty() || digits == "-" || digits == "+") fail("expected an exponent");
    return std::stol(digits);
  }
};

bool valid_name(std::string_view n) {
  if (n.empty() || !std::islower(static_cast<unsigned char>(n[0]))) return false;
  return std::all_of(n.begin(), n.end(), [](char c) {
    return std::islower(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::string_view trim(std::string_view s, std::size_t& offset) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
    ++offset;
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Word parse_word(std::string_view text, const std::vector<std::string>& names) {
  std::size_t offset = 0;
  return WordParser(trim(text, offset), offset, names).parse();
}

GroupPresentation parse_presentation(std::string_view text) {
  const std::size_t bar = text.find('|');
  std::string_view gens_part = text.substr(0, bar);
  std::vector<std::string> names;
  std::size_t pos = 0;
  while (pos <= gens_part.size()) {
    const std::size_t comma = std::min(gens_part.find(',', pos), gens_part.size());
    std::size_t offset = pos;
    const auto name = trim(gens_part.substr(pos, comma - pos), offset);
    if (!name.empty() || comma < gens_part.size()) {
      if (!valid_name(name))
        throw Error(ErrorCode::ParseError, "invalid generator name '" + std::string(name) + "' at position " +
                                               std::to_string(offset));
      if (std::find(names.begin(), names.end(), name) != names.end())
        throw Error(ErrorCode::ParseError, "generator '" + std::string(name) + "' declared twice");
      names.emplace_back(name);
    }
    pos = comma + 1;
  }

  std::vector<Word> relators;
  if (bar != std::string_view::npos) {
    const std::string_view rel_part = text.substr(bar + 1);
    pos = 0;
    while (pos <= rel_part.size()) {
      const std::size_t comma = std::min(rel_part.find(',', pos), rel_part.size());
      std::size_t offset = bar + 1 + pos;
      const auto word = trim(rel_part.substr(pos, comma - pos), offset);
      if (!word.empty())
        relators.push_back(WordParser(word, offset, names).parse());
      else if (comma < rel_part.size())
        throw Error(ErrorCode::ParseError, "empty relator at position " + std::to_string(offset));
      pos = comma + 1;
    }
  }
  return GroupPresentation::make(std::move(names), std::move(relators));
}

AbelianizedElement abelianize(const GroupPresentation& p, const Word& w) {
  return {exponent_sums(w, p.rank())};
}

IntMatrix abelianization_relation_matrix(const GroupPresentation& p) {
  IntMatrix m(p.relators.size(), p.rank());
  for (std::size_t j = 0; j < p.relators.size(); ++j) {
    const auto sums = exponent_sums(p.relators[j], p.rank());
    for (std::size_t i = 0; i < sums.size(); ++i) m(j, i) = sums[i];
  }
  return m;
}

AbelianInvariants::AbelianInvariants(const GroupPresentation& p) {
  const SmithForm snf = smith_normal_form(abelianization_relation_matrix(p));
  V_ = snf.V;
  diagonal_ = snf.invariant_factors();
  relation_rank_ = snf.rank;
  for (const auto& d : diagonal_)
    if (d > 1) torsion_.push_back(d);
}

std::vector<Integer> AbelianInvariants::transform(const AbelianizedElement& v) const {
  if (v.exponents.size() != V_.rows())
    throw Error(ErrorCode::AlphabetMismatch, "exponent vector has the wrong length");
  std::vector<Integer> out(V_.cols());
  for (std::size_t i = 0; i < V_.rows(); ++i) {
    if (v.exponents[i] == 0) continue;
    for (std::size_t j = 0; j < V_.cols(); ++j) out[j] += v.exponents[i] * V_(i, j);
  }
  return out;
}

std::vector<Integer> AbelianInvariants::free_part(const AbelianizedElement& v) const {
  auto coords = transform(v);
  return {coords.begin() + static_cast<std::ptrdiff_t>(relation_rank_), coords.end()};
}

bool AbelianInvariants::has_infinite_order(const AbelianizedElement& v) const {
  const auto free = free_part(v);
  return std::any_of(free.begin(), free.end(), [](const Integer& x) { return x != 0; });
}

bool AbelianInvariants::is_trivial(const AbelianizedElement& v) const {
  const auto coords = transform(v);
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (j < relation_rank_) {
      if (coords[j] % diagonal_[j] != 0) return false;
    } else if (coords[j] != 0) {
      return false;
    }
  }
  return true;
}

InfiniteOrderCertificate has_infinite_order_in_abelianization(const GroupPresentation& p, const Word& w) {
  const AbelianInvariants inv(p);
  InfiniteOrderCertificate cert;
  cert.image = abelianize(p, w);
  cert.free_coordinates = inv.free_part(cert.image);
  cert.infinite =
      std::any_of(cert.free_coordinates.begin(), cert.free_coordinates.end(), [](const Integer& x) { return x != 0; });
  return cert;
}

namespace {

// Smallest rotation of w or of w^-1, used to spot relators that are equal up
// to cyclic permutation and inversion.
std::vector<std::pair<std::size_t, int>> cyclic_key(const Word& w) {
  auto encode = [](const Word& x) {
    std::vector<std::pair<std::size_t, int>> out;
    for (const Letter& l : x.letters) out.emplace_back(l.generator, l.exponent);
    return out;
  };
  std::vector<std::pair<std::size_t, int>> best = encode(w);
  const Word inv = invert(w);
  for (std::size_t k = 0; k < w.length(); ++k) {
    best = std::min(best, encode(rotate(w, k)));
    best = std::min(best, encode(rotate(inv, k)));
  }
  return best;
}

}  // namespace

Simplification simplify_presentation(const GroupPresentation& p) {
  const std::size_t k = p.rank();
  std::vector<bool> alive(k, true);
  std::vector<Word> images;
  for (std::size_t g = 0; g < k; ++g) images.push_back(Word::generator(g));
  std::vector<Word> relators = p.relators;

  for (;;) {
    std::vector<Word> kept;
    std::set<std::vector<std::pair<std::size_t, int>>> seen;
    for (auto& r : relators) {
      Word c = cyclic_reduce(std::move(r));
      if (c.empty()) continue;
      if (seen.insert(cyclic_key(c)).second) kept.push_back(std::move(c));
    }
    relators = std::move(kept);

    std::optional<std::pair<std::size_t, Word>> elimination;
    for (const Word& r : relators) {
      if (r.length() == 1) {
        elimination.emplace(r.letters[0].generator, Word{});
      } else if (r.length() == 2 && r.letters[0].generator != r.letters[1].generator) {
        const Letter a = r.letters[0], b = r.letters[1];
        // a b = 1: solve for the higher-indexed letter
        if (b.generator > a.generator)
          elimination.emplace(b.generator, Word::generator(a.generator, b.exponent > 0 ? -a.exponent : a.exponent));
        else
          elimination.emplace(a.generator, Word::generator(b.generator, a.exponent > 0 ? -b.exponent : b.exponent));
      }
      if (elimination) break;
    }
    if (!elimination) break;

    const auto& [g, value] = *elimination;
    std::vector<Word> sub;
    for (std::size_t h = 0; h < k; ++h) sub.push_back(h == g ? value : Word::generator(h));
    for (auto& r : relators) r = substitute(r, sub);
    for (auto& im : images) im = substitute(im, sub);
    alive[g] = false;
  }

  std::vector<std::size_t> new_index(k, k);
  std::vector<std::string> names;
  for (std::size_t g = 0; g < k; ++g)
    if (alive[g]) {
      new_index[g] = names.size();
      names.push_back(p.generators[g]);
    }
  auto reindex = [&](const Word& w) {
    std::vector<Letter> out;
    for (const Letter& l : w.letters) out.push_back({new_index[l.generator], l.exponent});
    return Word(std::move(out));
  };
  Simplification s;
  std::vector<Word> rels;
  for (const auto& r : relators) {
    std::int64_t sum = 0;
    for (const Letter& l : r.letters) sum += l.exponent;
    rels.push_back(reindex(sum < 0 ? invert(r) : r));
  }
  s.presentation = GroupPresentation::make(std::move(names), std::move(rels));
  for (const auto& im : images) s.images.push_back(reindex(im));
  return s;
}

}  // namespace posetpi
