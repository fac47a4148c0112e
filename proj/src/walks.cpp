#include "hecke_walks/walks.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace hw {

namespace {

bool allowed(const Step& s, Side side) {
  // negative side: c^+, f^-; positive side: c^-, f^+.
  const bool plus_crossing = s.crossing() == (s.sign > 0);
  return side == Side::negative ? plus_crossing : !plus_crossing;
}

void check_letters(const AffineWeylGroup& g, const WalkWord& w) {
  for (const auto& s : w.steps)
    if (s.type < 0 || s.type > g.rank() || (s.sign != 1 && s.sign != -1))
      throw std::out_of_range("walk step out of range");
  if (w.omega < 0 || w.omega >= static_cast<int>(g.omega().size())) throw std::out_of_range("omega index out of range");
}

}  // namespace

std::string to_string(const Step& s) {
  return std::string(s.crossing() ? "c" : "f") + std::to_string(s.type) + (s.sign > 0 ? "+" : "-");
}

Step parse_step(const std::string& s) {
  if (s.size() < 3 || (s[0] != 'c' && s[0] != 'f') || (s.back() != '+' && s.back() != '-'))
    throw std::invalid_argument("bad walk step '" + s + "'");
  const std::string digits = s.substr(1, s.size() - 2);
  for (char ch : digits)
    if (ch < '0' || ch > '9') throw std::invalid_argument("bad walk step '" + s + "'");
  if (digits.size() > 2) throw std::invalid_argument("bad walk step '" + s + "'");
  const int type = std::stoi(digits);
  const int sign = s.back() == '+' ? 1 : -1;
  return s[0] == 'c' ? Step::c(type, sign) : Step::f(type, sign);
}

int WalkWord::crossings() const {
  int n = 0;
  for (const auto& s : steps) n += s.crossing();
  return n;
}

std::string to_string(const WalkWord& w) {
  std::string out;
  for (const auto& s : w.steps) out += (out.empty() ? "" : " ") + to_string(s);
  if (w.omega != 0) out += (out.empty() ? "| tau" : " | tau") + std::to_string(w.omega);
  return out.empty() ? "1" : out;
}

WalkWord parse_walk_word(const std::string& s) {
  WalkWord w;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    if (tok == "|") {
      if (!(in >> tok) || tok.rfind("tau", 0) != 0) throw std::invalid_argument("expected tau<k> after '|'");
      try {
        std::size_t used = 0;
        w.omega = std::stoi(tok.substr(3), &used);
        if (used != tok.size() - 3) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw std::invalid_argument("bad omega index '" + tok + "'");
      }
      if (in >> tok) throw std::invalid_argument("trailing input after omega part");
      break;
    }
    if (tok == "1") continue;
    w.steps.push_back(parse_step(tok));
  }
  return w;
}

int first_violation(const AffineWeylGroup& g, const WalkWord& word, const Orientation& o, const AffineElement& start) {
  check_letters(g, word);
  AffineElement cur = start;
  for (std::size_t k = 0; k < word.steps.size(); ++k) {
    const Step& s = word.steps[k];
    if (!allowed(s, side(g, o, wall(g, cur, s.type), cur))) return static_cast<int>(k);
    if (s.crossing()) cur = g.right_reflect(cur, s.type);
  }
  return -1;
}

AffineElement path_end(const AffineWeylGroup& g, const WalkWord& word, const AffineElement& start) {
  check_letters(g, word);
  AffineElement cur = start;
  for (const auto& s : word.steps)
    if (s.crossing()) cur = g.right_reflect(cur, s.type);
  return g.multiply(cur, g.omega()[word.omega].element);
}

Walk::Walk(const AffineWeylGroup& g, WalkWord word, Orientation o, std::optional<AffineElement> start)
    : word_(std::move(word)), orientation_(std::move(o)), start_(start ? *start : g.identity()) {
  const int bad = first_violation(g, word_, orientation_, start_);
  if (bad >= 0)
    throw std::invalid_argument("not an alcove walk: step " + std::to_string(bad) + " (" +
                                to_string(word_.steps[bad]) + ") violates the side condition");
  end_ = path_end(g, word_, start_);
}

Walk non_folded_walk(const AffineWeylGroup& g, const Word& word, const Orientation& o,
                     const std::optional<AffineElement>& start) {
  const auto eps = crossing_signs(g, word.letters, o, start);
  WalkWord w;
  w.omega = word.omega;
  for (std::size_t k = 0; k < eps.size(); ++k) w.steps.push_back(Step::c(word.letters[k], eps[k]));
  return Walk(g, std::move(w), o, start);
}

Walk random_walk(const AffineWeylGroup& g, const Orientation& o, int length, std::uint64_t seed,
                 double fold_probability) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> type(0, g.rank());
  std::bernoulli_distribution fold(fold_probability);
  WalkWord w;
  AffineElement cur = g.identity();
  for (int k = 0; k < length; ++k) {
    const int i = type(rng);
    const bool negative = side(g, o, wall(g, cur, i), cur) == Side::negative;
    if (fold(rng)) {
      w.steps.push_back(Step::f(i, negative ? -1 : 1));
    } else {
      w.steps.push_back(Step::c(i, negative ? 1 : -1));
      cur = g.right_reflect(cur, i);
    }
  }
  return Walk(g, std::move(w), o);
}

WalkWord basis_word(const WalkWord& w) {
  WalkWord b = w;
  for (auto& s : b.steps) s.sign = s.crossing() ? 1 : -1;
  return b;
}

WalkCombination straighten(const AffineWeylGroup& g, const WalkWord& word, const Orientation& o,
                           const std::optional<AffineElement>& start) {
  check_letters(g, word);
  WalkCombination out{o, start ? *start : g.identity(), {}};
  struct Frame {
    WalkWord word;
    std::int64_t coeff;
    std::size_t pos;
    AffineElement cur;
  };
  std::vector<Frame> stack{{word, 1, 0, out.start}};
  while (!stack.empty()) {
    Frame fr = std::move(stack.back());
    stack.pop_back();
    for (; fr.pos < fr.word.steps.size(); ++fr.pos) {
      Step& s = fr.word.steps[fr.pos];
      const Side sd = side(g, o, wall(g, fr.cur, s.type), fr.cur);
      if (!allowed(s, sd)) {
        // The allowed sign for this side: + on the negative side for crossings.
        const int cross_sign = sd == Side::negative ? 1 : -1;
        if (s.crossing()) {
          // c^-+ = c^+- + f^-+; the folding branch keeps the current alcove.
          Frame fold = fr;
          fold.word.steps[fr.pos] = Step::f(s.type, -cross_sign);
          ++fold.pos;
          stack.push_back(std::move(fold));
          s.sign = static_cast<std::int8_t>(cross_sign);
        } else {
          // f^+- = -f^-+.
          s.sign = static_cast<std::int8_t>(-s.sign);
          fr.coeff = -fr.coeff;
        }
      }
      if (s.crossing()) fr.cur = g.right_reflect(fr.cur, s.type);
    }
    auto& c = out.terms[fr.word];
    c += fr.coeff;
    if (c == 0) out.terms.erase(fr.word);
  }
  return out;
}

Walk concatenate(const AffineWeylGroup& g, const Walk& p, const Walk& q) {
  if (!(p.orientation() == q.orientation())) throw std::invalid_argument("concatenate: orientations differ");
  if (!p.orientation().translation_invariant())
    throw std::invalid_argument("concatenate: orientation depends on a base alcove, signs do not transport");
  if (!p.non_folded() || !q.non_folded()) throw std::invalid_argument("concatenate: walks must be non-folded");
  if (!(q.start() == g.identity())) throw std::invalid_argument("concatenate: q must start at the base alcove");
  const auto& tau = g.omega()[p.word().omega];
  WalkWord w = p.word();
  for (Step s : q.word().steps) {
    s.type = static_cast<std::int8_t>(tau.type_permutation[s.type]);
    w.steps.push_back(s);
  }
  w.omega = g.omega_class(g.multiply(tau.element, g.omega()[q.word().omega].element));
  return Walk(g, std::move(w), p.orientation(), p.start());
}

}  // namespace hw
