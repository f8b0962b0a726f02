#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sccp/rational.hpp"

namespace sccp {

enum class SemiringKind { Crisp, Fuzzy, Prob, Weighted };

const char* semiring_kind_name(SemiringKind k);

// A preference level: one element of a c-semiring carrier. Crisp levels are
// booleans, fuzzy/prob levels are rationals in [0,1], weighted levels are
// nonpositive rationals or the distinguished -inf. Construction validates the
// range so every live Level is a legal carrier element.
class Level {
 public:
  static Level crisp(bool b);
  static Level fuzzy(Rational q);
  static Level prob(Rational q);
  static Level weighted(Rational q);
  static Level weighted_neg_inf();

  SemiringKind kind() const { return kind_; }
  bool truth() const { return truth_; }
  bool is_neg_inf() const { return neg_inf_; }
  const Rational& rat() const { return q_; }

  bool operator==(const Level& o) const;
  bool operator!=(const Level& o) const { return !(*this == o); }

  std::string str() const;

 private:
  Level(SemiringKind k) : kind_(k) {}
  SemiringKind kind_;
  bool truth_ = false;
  bool neg_inf_ = false;
  Rational q_;
};

// The c-semiring <A, +, x, bot, top> with the induced order a <= b iff a+b=b.
// All four shipped instances are total chains, so glb is the order minimum.
// A non-chain user instance would have to bring its own glb.
class Semiring {
 public:
  explicit Semiring(SemiringKind kind) : kind_(kind) {}
  static Semiring named(std::string_view name);  // crisp | fuzzy | prob | weighted

  SemiringKind kind() const { return kind_; }
  std::string name() const { return semiring_kind_name(kind_); }

  Level bottom() const;
  Level top() const;
  bool idempotent_times() const { return kind_ == SemiringKind::Crisp || kind_ == SemiringKind::Fuzzy; }

  Level plus(const Level& a, const Level& b) const;
  Level times(const Level& a, const Level& b) const;
  bool leq(const Level& a, const Level& b) const;  // a + b == b

  // glb of a finite multiset; empty folds to top (likewise fold_times).
  Level glb(std::span<const Level> values) const;
  Level fold_times(std::span<const Level> values) const;

  // Accepts the instance's literal syntax plus the keywords top / bot.
  Level parse_level(std::string_view text) const;

  bool operator==(const Semiring& o) const { return kind_ == o.kind_; }

 private:
  void check(const Level& v, const char* who) const;
  SemiringKind kind_;
};

}  // namespace sccp
