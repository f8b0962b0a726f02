#include "sccp/semiring.hpp"

#include <stdexcept>

namespace sccp {

const char* semiring_kind_name(SemiringKind k) {
  switch (k) {
    case SemiringKind::Crisp: return "crisp";
    case SemiringKind::Fuzzy: return "fuzzy";
    case SemiringKind::Prob: return "prob";
    case SemiringKind::Weighted: return "weighted";
  }
  return "?";
}

Level Level::crisp(bool b) {
  Level v(SemiringKind::Crisp);
  v.truth_ = b;
  return v;
}

static void check_unit_interval(const Rational& q, const char* kind) {
  if (q.is_negative() || Rational::integer(1) < q)
    throw std::invalid_argument(std::string(kind) + " level out of [0,1]: " + q.str());
}

Level Level::fuzzy(Rational q) {
  check_unit_interval(q, "fuzzy");
  Level v(SemiringKind::Fuzzy);
  v.q_ = q;
  return v;
}

Level Level::prob(Rational q) {
  check_unit_interval(q, "prob");
  Level v(SemiringKind::Prob);
  v.q_ = q;
  return v;
}

Level Level::weighted(Rational q) {
  if (Rational::integer(0) < q)
    throw std::invalid_argument("weighted level must be nonpositive: " + q.str());
  Level v(SemiringKind::Weighted);
  v.q_ = q;
  return v;
}

Level Level::weighted_neg_inf() {
  Level v(SemiringKind::Weighted);
  v.neg_inf_ = true;
  return v;
}

bool Level::operator==(const Level& o) const {
  if (kind_ != o.kind_) return false;
  if (kind_ == SemiringKind::Crisp) return truth_ == o.truth_;
  if (neg_inf_ || o.neg_inf_) return neg_inf_ == o.neg_inf_;
  return q_ == o.q_;
}

std::string Level::str() const {
  if (kind_ == SemiringKind::Crisp) return truth_ ? "true" : "false";
  if (neg_inf_) return "-inf";
  return q_.str();
}

Semiring Semiring::named(std::string_view name) {
  if (name == "crisp") return Semiring(SemiringKind::Crisp);
  if (name == "fuzzy") return Semiring(SemiringKind::Fuzzy);
  if (name == "prob" || name == "probabilistic") return Semiring(SemiringKind::Prob);
  if (name == "weighted") return Semiring(SemiringKind::Weighted);
  throw std::invalid_argument("unknown semiring: " + std::string(name));
}

void Semiring::check(const Level& v, const char* who) const {
  if (v.kind() != kind_)
    throw std::invalid_argument(std::string(who) + ": semiring instance mismatch (" +
                                semiring_kind_name(v.kind()) + " value in " + name() + ")");
}

Level Semiring::bottom() const {
  switch (kind_) {
    case SemiringKind::Crisp: return Level::crisp(false);
    case SemiringKind::Fuzzy: return Level::fuzzy(Rational::integer(0));
    case SemiringKind::Prob: return Level::prob(Rational::integer(0));
    case SemiringKind::Weighted: return Level::weighted_neg_inf();
  }
  throw std::logic_error("bad kind");
}

Level Semiring::top() const {
  switch (kind_) {
    case SemiringKind::Crisp: return Level::crisp(true);
    case SemiringKind::Fuzzy: return Level::fuzzy(Rational::integer(1));
    case SemiringKind::Prob: return Level::prob(Rational::integer(1));
    case SemiringKind::Weighted: return Level::weighted(Rational::integer(0));
  }
  throw std::logic_error("bad kind");
}

Level Semiring::plus(const Level& a, const Level& b) const {
  check(a, "plus");
  check(b, "plus");
  switch (kind_) {
    case SemiringKind::Crisp:
      return Level::crisp(a.truth() || b.truth());
    case SemiringKind::Fuzzy:
    case SemiringKind::Prob:
      return a.rat() < b.rat() ? b : a;
    case SemiringKind::Weighted:
      if (a.is_neg_inf()) return b;
      if (b.is_neg_inf()) return a;
      return a.rat() < b.rat() ? b : a;
  }
  throw std::logic_error("bad kind");
}

Level Semiring::times(const Level& a, const Level& b) const {
  check(a, "times");
  check(b, "times");
  switch (kind_) {
    case SemiringKind::Crisp:
      return Level::crisp(a.truth() && b.truth());
    case SemiringKind::Fuzzy:
      return a.rat() < b.rat() ? a : b;
    case SemiringKind::Prob:
      return Level::prob(a.rat() * b.rat());
    case SemiringKind::Weighted:
      if (a.is_neg_inf() || b.is_neg_inf()) return Level::weighted_neg_inf();
      return Level::weighted(a.rat() + b.rat());
  }
  throw std::logic_error("bad kind");
}

bool Semiring::leq(const Level& a, const Level& b) const {
  return plus(a, b) == b;
}

Level Semiring::glb(std::span<const Level> values) const {
  Level best = top();
  for (const Level& v : values) best = leq(v, best) ? v : best;
  return best;
}

Level Semiring::fold_times(std::span<const Level> values) const {
  Level acc = top();
  for (const Level& v : values) acc = times(acc, v);
  return acc;
}

Level Semiring::parse_level(std::string_view text) const {
  std::string t(text);
  if (t == "top") return top();
  if (t == "bot" || t == "bottom") return bottom();
  switch (kind_) {
    case SemiringKind::Crisp:
      if (t == "true") return Level::crisp(true);
      if (t == "false") return Level::crisp(false);
      throw std::invalid_argument("crisp level must be true or false: " + t);
    case SemiringKind::Fuzzy: return Level::fuzzy(Rational::parse(t));
    case SemiringKind::Prob: return Level::prob(Rational::parse(t));
    case SemiringKind::Weighted:
      if (t == "-inf") return Level::weighted_neg_inf();
      return Level::weighted(Rational::parse(t));
  }
  throw std::logic_error("bad kind");
}

}  // namespace sccp
