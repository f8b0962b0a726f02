#include "sccp/laws.hpp"

#include <functional>

namespace sccp {

bool LawReport::all_passed() const {
  for (const auto& l : laws)
    if (l.applicable && l.failed > 0) return false;
  return true;
}

static std::uint64_t next_rand(std::uint64_t& state) {
  // splitmix64; deterministic across platforms
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Level random_level(const Semiring& s, std::uint64_t& state) {
  std::uint64_t r = next_rand(state);
  switch (s.kind()) {
    case SemiringKind::Crisp:
      return Level::crisp(r & 1);
    case SemiringKind::Fuzzy:
    case SemiringKind::Prob: {
      std::int64_t den = static_cast<std::int64_t>(r % 12) + 1;
      std::int64_t num = static_cast<std::int64_t>(next_rand(state) % static_cast<std::uint64_t>(den + 1));
      Rational q(num, den);
      return s.kind() == SemiringKind::Fuzzy ? Level::fuzzy(q) : Level::prob(q);
    }
    case SemiringKind::Weighted: {
      if (r % 8 == 0) return Level::weighted_neg_inf();
      std::int64_t den = static_cast<std::int64_t>(r % 6) + 1;
      std::int64_t num = static_cast<std::int64_t>(next_rand(state) % 40);
      return Level::weighted(Rational(-num, den));
    }
  }
  throw std::logic_error("bad kind");
}

LawReport run_law_suite(const Semiring& s, int samples, std::uint64_t seed) {
  LawReport report;
  report.semiring = s.name();
  std::uint64_t state = seed;

  struct Law {
    const char* name;
    bool applicable;
    std::function<bool(const Level&, const Level&, const Level&)> check;
  };

  const bool idem = s.idempotent_times();
  std::vector<Law> laws = {
      {"S2 plus commutative", true,
       [&](const Level& a, const Level& b, const Level&) { return s.plus(a, b) == s.plus(b, a); }},
      {"S2 plus associative", true,
       [&](const Level& a, const Level& b, const Level& c) {
         return s.plus(s.plus(a, b), c) == s.plus(a, s.plus(b, c));
       }},
      {"S2 plus idempotent", true,
       [&](const Level& a, const Level&, const Level&) { return s.plus(a, a) == a; }},
      {"S2 bottom unit of plus", true,
       [&](const Level& a, const Level&, const Level&) { return s.plus(s.bottom(), a) == a; }},
      {"S2 top absorbs plus", true,
       [&](const Level& a, const Level&, const Level&) { return s.plus(s.top(), a) == s.top(); }},
      {"S3 times commutative", true,
       [&](const Level& a, const Level& b, const Level&) { return s.times(a, b) == s.times(b, a); }},
      {"S3 times associative", true,
       [&](const Level& a, const Level& b, const Level& c) {
         return s.times(s.times(a, b), c) == s.times(a, s.times(b, c));
       }},
      {"S3 top unit of times", true,
       [&](const Level& a, const Level&, const Level&) { return s.times(s.top(), a) == a; }},
      {"S3 bottom absorbs times", true,
       [&](const Level& a, const Level&, const Level&) { return s.times(s.bottom(), a) == s.bottom(); }},
      {"S3 times distributes over plus", true,
       [&](const Level& a, const Level& b, const Level& c) {
         return s.times(a, s.plus(b, c)) == s.plus(s.times(a, b), s.times(a, c));
       }},
      {"S4 plus monotone", true,
       [&](const Level& a, const Level& b, const Level& c) {
         if (!s.leq(a, b)) return true;
         return s.leq(s.plus(a, c), s.plus(b, c));
       }},
      {"S4 times monotone", true,
       [&](const Level& a, const Level& b, const Level& c) {
         if (!s.leq(a, b)) return true;
         return s.leq(s.times(a, c), s.times(b, c));
       }},
      {"S5 times intensive", true,
       [&](const Level& a, const Level& b, const Level&) { return s.leq(s.times(a, b), a); }},
      {"S6 bottom/top are extremes", true,
       [&](const Level& a, const Level&, const Level&) {
         return s.leq(s.bottom(), a) && s.leq(a, s.top());
       }},
      {"S7 plus is lub", true,
       [&](const Level& a, const Level& b, const Level& c) {
         Level j = s.plus(a, b);
         if (!s.leq(a, j) || !s.leq(b, j)) return false;
         if (s.leq(a, c) && s.leq(b, c) && !s.leq(j, c)) return false;
         return true;
       }},
      {"S8 plus distributes over times", idem,
       [&](const Level& a, const Level& b, const Level& c) {
         return s.plus(a, s.times(b, c)) == s.times(s.plus(a, b), s.plus(a, c));
       }},
      {"S9 times is glb", idem,
       [&](const Level& a, const Level& b, const Level&) {
         std::vector<Level> vs{a, b};
         return s.times(a, b) == s.glb(vs);
       }},
      {"order substitution (b<=a*c and a<=d imply b<=d*c)", true,
       [&](const Level& a, const Level& b, const Level& c) {
         std::uint64_t st2 = state;
         Level d = random_level(s, st2);
         if (!s.leq(b, s.times(a, c)) || !s.leq(a, d)) return true;
         return s.leq(b, s.times(d, c));
       }},
      {"fold_times below glb (equal when idempotent)", true,
       [&](const Level& a, const Level& b, const Level& c) {
         std::vector<Level> vs{a, b, c};
         Level f = s.fold_times(vs);
         Level g = s.glb(vs);
         if (!s.leq(f, g)) return false;
         if (idem && f != g) return false;
         return true;
       }},
  };

  for (auto& law : laws) report.laws.push_back({law.name, 0, 0, law.applicable});

  for (int i = 0; i < samples; ++i) {
    Level a = random_level(s, state);
    Level b = random_level(s, state);
    Level c = random_level(s, state);
    for (std::size_t j = 0; j < laws.size(); ++j) {
      if (!laws[j].applicable) continue;
      ++report.laws[j].checked;
      if (!laws[j].check(a, b, c)) ++report.laws[j].failed;
    }
  }
  return report;
}

}  // namespace sccp
