// Acceptance suite: one line per criterion, exit status 0 iff every criterion holds.
// All comparisons are exact (integer or rational equality).

#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "mcg/earle.hpp"
#include "mcg/endomorphism.hpp"
#include "mcg/homology.hpp"
#include "mcg/morita.hpp"
#include "mcg/random.hpp"

using namespace mcg;

namespace {

constexpr int kGenusLo = 2;
constexpr int kGenusHi = 6;        // closed-form vector checks
constexpr int kRandomGenusHi = 5;  // random property checks
constexpr int kWordSamples = 200;
constexpr int kPairSamples = 1000;
constexpr int kCocyclePairs = 200;
constexpr int kMaxWordLength = 50;
constexpr int kElementBudget = 6;

struct Outcome {
  bool ok = true;
  long checked = 0;
  std::string detail;

  void expect(bool cond, const std::function<std::string()>& what) {
    ++checked;
    if (!cond && ok) {
      ok = false;
      detail = what();
    }
  }
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  std::printf("[%s] criterion %2d: %s (%ld checks)\n", o.ok ? "PASS" : "FAIL", id, title.c_str(), o.checked);
  if (!o.ok) {
    std::printf("        %s\n", o.detail.c_str());
    ++failures;
  }
}

Word descending_b(Genus g) {
  WordBuilder b(g);
  for (int k = g.value(); k >= 1; --k) b.append(Word::generator(g, {GenKind::B, k}));
  return std::move(b).build();
}

/// x_B o iota, an element of M_{g,1}.
Auto fixed_iota(Genus g) { return compose(inner(descending_b(g).inverse()), jablow(g)); }

HVec int_vector(Genus g, const std::function<std::int64_t(int)>& a_entry,
                const std::function<std::int64_t(int)>& b_entry) {
  HVec v(g);
  for (int k = 1; k <= g.value(); ++k) {
    v[static_cast<std::size_t>(k - 1)] = a_entry(k);
    v[static_cast<std::size_t>(g.value() + k - 1)] = b_entry(k);
  }
  return v;
}

/// (1/(g-1)) times the given integer vector.
QVec over_g_minus_1(Genus g, const HVec& numerators) {
  return mpq_class(1, g.value() - 1) * QVec(numerators);
}

bool is_zeta_power(const Word& w) {
  const Genus g = w.genus();
  const auto period = static_cast<std::size_t>(4 * g.value());
  if (w.size() % period != 0) return false;
  const int m = static_cast<int>(w.size() / period);
  return w == power(zeta(g), m) || w == power(zeta(g), -m);
}

}  // namespace

int main() {
  report(1, "d-values of the three handle words are 4, 2, -2", [] {
    Outcome o;
    const std::pair<const char*, std::int64_t> cases[] = {
        {"B A B a b a b", 4}, {"B A B a b b", 2}, {"B A b a b", -2}};
    for (const auto& [text, expect] : cases) {
      const auto got = d2(TwoGenWord::parse(text));
      o.expect(got == expect, [&] { return std::string(text) + " gave " + std::to_string(got); });
    }
    return o;
  });

  report(2, "f~(iota) = (-2,...,-2, -(2g+2), -2g, ..., -4), g = 2..6", [] {
    Outcome o;
    for (int gv = kGenusLo; gv <= kGenusHi; ++gv) {
      const Genus g(gv);
      const HVec expect = int_vector(g, [](int) { return -2; }, [gv](int k) { return -(2 * gv + 4 - 2 * k); });
      const HVec got = f_tilde(jablow(g));
      o.expect(got == expect, [&] { return "g=" + std::to_string(gv) + ": " + got.str(); });
    }
    return o;
  });

  report(3, "f~(x_B o iota) = (-2,...,-2, -2g, -2g+2, ..., -2), g = 2..6", [] {
    Outcome o;
    for (int gv = kGenusLo; gv <= kGenusHi; ++gv) {
      const Genus g(gv);
      const HVec expect = int_vector(g, [](int) { return -2; }, [gv](int k) { return -(2 * gv + 2 - 2 * k); });
      const HVec got = f_tilde(fixed_iota(g));
      o.expect(got == expect, [&] { return "g=" + std::to_string(gv) + ": " + got.str(); });
    }
    return o;
  });

  report(4, "psi(iota) = (1/(g-1))(1,...,1, -1, -2, ..., -g), g = 2..6", [] {
    Outcome o;
    for (int gv = kGenusLo; gv <= kGenusHi; ++gv) {
      const Genus g(gv);
      const QVec expect = over_g_minus_1(g, int_vector(g, [](int) { return 1; }, [](int k) { return -k; }));
      const QVec got = earle_psi(jablow(g));
      o.expect(got == expect, [&] { return "g=" + std::to_string(gv) + ": " + got.str(); });
    }
    return o;
  });

  report(5, "psi(x_B o iota) = (1/(g-1))(1,...,1, g-2, g-3, ..., -1), g = 2..6", [] {
    Outcome o;
    for (int gv = kGenusLo; gv <= kGenusHi; ++gv) {
      const Genus g(gv);
      const QVec expect =
          over_g_minus_1(g, int_vector(g, [](int) { return 1; }, [gv](int k) { return gv - 1 - k; }));
      const QVec got = earle_psi(fixed_iota(g));
      o.expect(got == expect, [&] { return "g=" + std::to_string(gv) + ": " + got.str(); });
    }
    return o;
  });

  report(6, "f~(inner x) = 2[x], 200 random words per genus, g = 2..5", [] {
    Outcome o;
    for (int gv = kGenusLo; gv <= kRandomGenusHi; ++gv) {
      const Genus g(gv);
      Rng rng(600 + static_cast<std::uint64_t>(gv));
      for (int i = 0; i < kWordSamples; ++i) {
        const Word x = random_word(g, kMaxWordLength, rng);
        o.expect(f_tilde(inner(x)) == 2 * abelianize(x), [&] { return x.str(); });
      }
    }
    return o;
  });

  report(7, "d(xy) = d(x) + d(y) + [x].[y], 1000 random pairs per genus, length <= 50", [] {
    Outcome o;
    for (int gv = kGenusLo; gv <= kRandomGenusHi; ++gv) {
      const Genus g(gv);
      Rng rng(700 + static_cast<std::uint64_t>(gv));
      for (int i = 0; i < kPairSamples; ++i) {
        const Word x = random_word(g, kMaxWordLength, rng);
        const Word y = random_word(g, kMaxWordLength, rng);
        o.expect(dF(x * y) == dF(x) + dF(y) + intersection(abelianize(x), abelianize(y)),
                 [&] { return x.str() + " | " + y.str(); });
      }
    }
    return o;
  });

  report(8, "f~, f, psi satisfy the cocycle rule, 200 random pairs in N per genus", [] {
    Outcome o;
    for (int gv = kGenusLo; gv <= kRandomGenusHi; ++gv) {
      const Genus g(gv);
      Rng rng(800 + static_cast<std::uint64_t>(gv));
      for (int i = 0; i < kCocyclePairs; ++i) {
        const Auto p = random_element(g, rng.between(1, kElementBudget), rng.next());
        const Auto q = random_element(g, rng.between(1, kElementBudget), rng.next());
        const Auto pq = compose(p, q);
        const SpMat rq_inv = induced_matrix(q).inverse();
        const auto where = [&] { return "g=" + std::to_string(gv) + " sample " + std::to_string(i); };
        o.expect(f_tilde(pq) == rq_inv * f_tilde(p) + f_tilde(q), where);
        o.expect(morita_f(pq) == rq_inv * morita_f(p) + morita_f(q), where);
        o.expect(earle_psi(pq) == rq_inv * earle_psi(p) + earle_psi(q), where);
      }
    }
    return o;
  });

  report(9, "f(inner x) = (2-2g)[x] and psi(inner x) = [x], 200 random words per genus", [] {
    Outcome o;
    for (int gv = kGenusLo; gv <= kRandomGenusHi; ++gv) {
      const Genus g(gv);
      Rng rng(900 + static_cast<std::uint64_t>(gv));
      for (int i = 0; i < kWordSamples; ++i) {
        const Word x = random_word(g, kMaxWordLength, rng);
        const Auto ix = inner(x);
        o.expect(morita_f(ix) == (2 - 2 * static_cast<std::int64_t>(gv)) * abelianize(x), [&] { return x.str(); });
        o.expect(earle_psi(ix) == QVec(abelianize(x)), [&] { return x.str(); });
      }
    }
    return o;
  });

  report(10, "iota^2 = id, iota(zeta) witness B_g...B_1 up to zeta powers, f witness-independent", [] {
    Outcome o;
    for (int gv = kGenusLo; gv <= kGenusHi; ++gv) {
      const Genus g(gv);
      const Auto iota = jablow(g);
      o.expect(compose(iota.forward(), iota.forward()).is_identity(), [&] { return "iota^2 != id, g=" + std::to_string(gv); });
      const auto u = conjugator(apply(iota, zeta(g)), zeta(g));
      o.expect(u && is_zeta_power(u->inverse() * descending_b(g)),
               [&] { return "g=" + std::to_string(gv) + " witness " + (u ? u->str() : std::string("none")); });

      Rng rng(1000 + static_cast<std::uint64_t>(gv));
      std::vector<Auto> elements{iota};
      for (int i = 0; i < kCocyclePairs && gv <= kRandomGenusHi; ++i) {
        elements.push_back(random_element(g, rng.between(1, kElementBudget), rng.next()));
      }
      for (const Auto& p : elements) {
        const auto w = in_N(p);
        o.expect(w.has_value(), [] { return std::string("element not in N"); });
        if (!w) continue;
        const HVec base = morita_f(*w);
        for (int m = -2; m <= 2; ++m) {
          const HVec shifted = morita_f(NWitness{p, w->conjugator * power(zeta(g), m)});
          o.expect(shifted == base, [&] { return "g=" + std::to_string(gv) + " m=" + std::to_string(m); });
        }
      }
    }
    return o;
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}
