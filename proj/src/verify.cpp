#include "mcg/verify.hpp"

#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "mcg/earle.hpp"
#include "mcg/endomorphism.hpp"
#include "mcg/homology.hpp"
#include "mcg/morita.hpp"
#include "mcg/random.hpp"
#include "mcg/word.hpp"

namespace mcg::verify {

namespace {

using Check = std::function<std::optional<std::string>(Rng&)>;

std::uint64_t mix(std::uint64_t x) {
  // splitmix64 finalizer
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t name_hash(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ULL;
  return h;
}

class Runner {
 public:
  Runner(std::string suite, const Options& opts, std::vector<PropertyResult>& out)
      : suite_(std::move(suite)), opts_(opts), out_(out) {}

  /// Runs `check` `samples` times, each sample with its own deterministic stream.
  void property(const std::string& name, int g, int samples, const Check& check) {
    PropertyResult r{suite_, name, g, 0, true, {}};
    for (int i = 0; i < samples; ++i) {
      Rng rng(mix(opts_.seed ^ mix(name_hash(name) + static_cast<std::uint64_t>(g) * 1000003ULL +
                                   static_cast<std::uint64_t>(i))));
      std::optional<std::string> bad;
      try {
        bad = check(rng);
      } catch (const std::exception& e) {
        bad = std::string("exception: ") + e.what();
      }
      ++r.checked;
      if (bad) {
        r.passed = false;
        r.counterexample = *bad;
        break;
      }
    }
    out_.push_back(std::move(r));
  }

  const Options& opts() const { return opts_; }

 private:
  std::string suite_;
  const Options& opts_;
  std::vector<PropertyResult>& out_;
};

std::optional<std::string> fail_if(bool bad, const std::function<std::string()>& describe) {
  if (bad) return describe();
  return std::nullopt;
}

Word rand_word(Genus g, const Options& o, Rng& rng) { return random_word(g, o.max_word_length, rng); }

Auto rand_elem(Genus g, const Options& o, Rng& rng) {
  return random_element(g, rng.between(1, o.element_budget), rng.next());
}

std::string show(const Auto& a) {
  std::ostringstream s;
  for (int i = 0; i < a.genus().rank(); ++i) s << (i ? "; " : "") << a.forward().image(i).str();
  return "[" + s.str() + "]";
}

/// True when w is a power of zeta.
bool is_zeta_power(const Word& w) {
  const Genus g = w.genus();
  const auto period = static_cast<std::size_t>(4 * g.value());
  if (w.size() % period != 0) return false;
  const int m = static_cast<int>(w.size() / period);
  return w == power(zeta(g), m) || w == power(zeta(g), -m);
}

Word descending_b(Genus g) {
  WordBuilder b(g);
  for (int k = g.value(); k >= 1; --k) b.append(Word::generator(g, {GenKind::B, k}));
  return std::move(b).build();
}

// ---------------------------------------------------------------------------

void words_suite(Runner& run, Genus g) {
  const Options& o = run.opts();
  const int n = o.samples;
  const int gv = g.value();

  run.property("reduce is idempotent", gv, n, [&](Rng& rng) {
    std::vector<Letter> raw;
    const int len = rng.between(0, o.max_word_length);
    for (int i = 0; i < len; ++i) {
      raw.push_back(Letter::from_slot(static_cast<int>(rng.below(static_cast<std::uint64_t>(g.rank()))),
                                      rng.below(2) ? 1 : -1));
    }
    const Word once = reduce(g, raw);
    return fail_if(reduce(g, once.letters()) != once, [&] { return once.str(); });
  });
  run.property("multiply is associative", gv, n, [&](Rng& rng) {
    const Word x = rand_word(g, o, rng), y = rand_word(g, o, rng), z = rand_word(g, o, rng);
    return fail_if((x * y) * z != x * (y * z), [&] { return x.str() + " | " + y.str() + " | " + z.str(); });
  });
  run.property("identity and inverse laws", gv, n, [&](Rng& rng) {
    const Word x = rand_word(g, o, rng);
    const Word e(g);
    return fail_if(e * x != x || x * e != x || !(x * invert(x)).empty() || !(invert(x) * x).empty(),
                   [&] { return x.str(); });
  });
  run.property("cyclic_reduce contract", gv, n, [&](Rng& rng) {
    const Word v = rand_word(g, o, rng), w = rand_word(g, o, rng);
    const Word x = v * w * v.inverse();
    const auto [core, prefix] = cyclic_reduce(x);
    const bool endpoints_ok = core.size() < 2 || !core.letters().front().cancels(core.letters().back());
    return fail_if(prefix * core * prefix.inverse() != x || !endpoints_ok, [&] { return x.str(); });
  });
  run.property("conjugator finds a sound witness", gv, n, [&](Rng& rng) {
    const Word v = rand_word(g, o, rng), w = rand_word(g, o, rng);
    const Word x = v * w * v.inverse();
    const auto u = conjugator(x, w);
    return fail_if(!u || *u * w * u->inverse() != x, [&] { return x.str() + " ~ " + w.str(); });
  });
  run.property("conjugator never returns a bad witness", gv, n, [&](Rng& rng) {
    const Word x = rand_word(g, o, rng), w = rand_word(g, o, rng);
    const auto u = conjugator(x, w);
    return fail_if(u && *u * w * u->inverse() != x, [&] { return x.str() + " ~ " + w.str(); });
  });
}

void d_function_suite(Runner& run, Genus g) {
  const Options& o = run.opts();
  const int n = o.samples;
  const int gv = g.value();

  run.property("d(xy) = d(x) + d(y) + [x].[y]", gv, n, [&](Rng& rng) {
    const Word x = rand_word(g, o, rng), y = rand_word(g, o, rng);
    const auto lhs = dF(x * y);
    const auto rhs = dF(x) + dF(y) + intersection(abelianize(x), abelianize(y));
    return fail_if(lhs != rhs, [&] { return x.str() + " | " + y.str(); });
  });
  run.property("d(x^-1) = -d(x)", gv, n, [&](Rng& rng) {
    const Word x = rand_word(g, o, rng);
    return fail_if(dF(x.inverse()) != -dF(x), [&] { return x.str(); });
  });
  run.property("abelianize is a homomorphism", gv, n, [&](Rng& rng) {
    const Word x = rand_word(g, o, rng), y = rand_word(g, o, rng);
    return fail_if(abelianize(x * y) != abelianize(x) + abelianize(y), [&] { return x.str() + " | " + y.str(); });
  });
  run.property("intersection is antisymmetric", gv, n, [&](Rng& rng) {
    const HVec x = abelianize(rand_word(g, o, rng)), y = abelianize(rand_word(g, o, rng));
    return fail_if(intersection(x, y) != -intersection(y, x) || intersection(x, x) != 0,
                   [&] { return x.str() + " | " + y.str(); });
  });
}

void cocycle_n_suite(Runner& run, Genus g) {
  const Options& o = run.opts();
  const int n = o.samples;
  const int gv = g.value();

  run.property("f~(phi, .) is additive", gv, n, [&](Rng& rng) {
    const Auto phi = rand_elem(g, o, rng);
    const Word x = rand_word(g, o, rng), y = rand_word(g, o, rng);
    return fail_if(f_tilde_at(phi, x * y) != f_tilde_at(phi, x) + f_tilde_at(phi, y),
                   [&] { return show(phi) + " on " + x.str() + " | " + y.str(); });
  });
  run.property("f~ cocycle identity", gv, n, [&](Rng& rng) {
    const Auto p = rand_elem(g, o, rng), q = rand_elem(g, o, rng);
    const HVec lhs = f_tilde(compose(p, q));
    const HVec rhs = induced_matrix(q).inverse() * f_tilde(p) + f_tilde(q);
    return fail_if(lhs != rhs, [&] { return show(p) + " o " + show(q); });
  });
  run.property("f~(inner x) = 2[x]", gv, n, [&](Rng& rng) {
    const Word x = rand_word(g, o, rng);
    return fail_if(f_tilde(inner(x)) != 2 * abelianize(x), [&] { return x.str(); });
  });
  run.property("rho is functorial and symplectic", gv, n, [&](Rng& rng) {
    const Auto p = rand_elem(g, o, rng), q = rand_elem(g, o, rng);
    const SpMat mp = induced_matrix(p), mq = induced_matrix(q);
    return fail_if(induced_matrix(compose(p, q)) != mp * mq || !is_symplectic(mp),
                   [&] { return show(p) + " o " + show(q); });
  });
  run.property("apply distributes over multiply", gv, n, [&](Rng& rng) {
    const Auto p = rand_elem(g, o, rng);
    const Word x = rand_word(g, o, rng), y = rand_word(g, o, rng);
    return fail_if(apply(p, x * y) != apply(p, x) * apply(p, y),
                   [&] { return show(p) + " on " + x.str() + " | " + y.str(); });
  });
}

void descent_suite(Runner& run, Genus g) {
  const Options& o = run.opts();
  const int n = o.samples;
  const int gv = g.value();

  run.property("f cocycle identity", gv, n, [&](Rng& rng) {
    const Auto p = rand_elem(g, o, rng), q = rand_elem(g, o, rng);
    const HVec lhs = morita_f(compose(p, q));
    const HVec rhs = induced_matrix(q).inverse() * morita_f(p) + morita_f(q);
    return fail_if(lhs != rhs, [&] { return show(p) + " o " + show(q); });
  });
  run.property("f(inner x) = (2-2g)[x]", gv, n, [&](Rng& rng) {
    const Word x = rand_word(g, o, rng);
    return fail_if(morita_f(inner(x)) != (2 - 2 * static_cast<std::int64_t>(gv)) * abelianize(x),
                   [&] { return x.str(); });
  });
  run.property("f is independent of the witness", gv, n, [&](Rng& rng) {
    const Auto p = rand_elem(g, o, rng);
    const auto w = in_N(p);
    if (!w) return std::optional<std::string>("not in N: " + show(p));
    const HVec base = morita_f(*w);
    for (int m = -2; m <= 2; ++m) {
      if (morita_f(NWitness{p, w->conjugator * power(zeta(g), m)}) != base) {
        return std::optional<std::string>(show(p) + " with zeta^" + std::to_string(m));
      }
    }
    return std::optional<std::string>();
  });
  run.property("f = f~ on M_{g,1}", gv, n, [&](Rng& rng) {
    Auto p = rand_elem(g, o, rng);
    const auto w = in_N(p);
    if (!w) return std::optional<std::string>("not in N: " + show(p));
    p = compose(inner(w->conjugator.inverse()), p);
    return fail_if(!in_M_g1(p) || morita_f(p) != f_tilde(p), [&] { return show(p); });
  });
  run.property("f(inner zeta^m) = 0", gv, 1, [&](Rng&) {
    for (int m = -2; m <= 2; ++m) {
      if (!morita_f(inner(power(zeta(g), m))).is_zero()) return std::optional<std::string>("m=" + std::to_string(m));
    }
    return std::optional<std::string>();
  });
}

void earle_suite(Runner& run, Genus g) {
  const Options& o = run.opts();
  const int n = o.samples;
  const int gv = g.value();

  run.property("psi cocycle identity", gv, n, [&](Rng& rng) {
    const Auto p = rand_elem(g, o, rng), q = rand_elem(g, o, rng);
    const QVec lhs = earle_psi(compose(p, q));
    const QVec rhs = induced_matrix(q).inverse() * earle_psi(p) + earle_psi(q);
    return fail_if(lhs != rhs, [&] { return show(p) + " o " + show(q); });
  });
  run.property("psi(inner x) = [x]", gv, n, [&](Rng& rng) {
    const Word x = rand_word(g, o, rng);
    return fail_if(earle_psi(inner(x)) != QVec(abelianize(x)), [&] { return x.str(); });
  });
  run.property("(2g-2) psi is integral", gv, n, [&](Rng& rng) {
    const Auto p = rand_elem(g, o, rng);
    return fail_if(!earle_psi(p).has_canonical_denominator(), [&] { return show(p); });
  });
  run.property("psi + f/(2g-2) = delta a0", gv, n, [&](Rng& rng) {
    const Auto p = rand_elem(g, o, rng);
    const QVec sum = earle_psi(p) + mpq_class(1, 2 * gv - 2) * QVec(morita_f(p)) - coboundary_a0(p);
    return fail_if(!sum.is_zero(), [&] { return show(p); });
  });
}

void reference_vectors_suite(Runner& run, Genus g) {
  const int gv = g.value();
  const auto sz = static_cast<std::size_t>(gv);
  const Auto iota = jablow(g);
  const Word u = descending_b(g);
  const Auto fixed = compose(inner(u.inverse()), iota);

  run.property("d-values of the three handle words", gv, 1, [&](Rng&) {
    const bool ok = d2(TwoGenWord::parse("B A B a b a b")) == 4 && d2(TwoGenWord::parse("B A B a b b")) == 2 &&
                    d2(TwoGenWord::parse("B A b a b")) == -2;
    return fail_if(!ok, [] { return std::string("d-value mismatch"); });
  });
  run.property("iota o iota = id and iota(zeta) ~ zeta via B_g...B_1", gv, 1, [&](Rng&) {
    const auto w = in_N(iota);
    const bool ok = compose(iota.forward(), iota.forward()).is_identity() && w &&
                    is_zeta_power(w->conjugator.inverse() * u) && !in_M_g1(iota) && in_M_g1(fixed);
    return fail_if(!ok, [&] { return w ? w->conjugator.str() : std::string("no witness"); });
  });
  run.property("rho(iota) = -I", gv, 1, [&](Rng&) {
    return fail_if(induced_matrix(iota) != -SpMat::identity(g), [] { return std::string("rho(iota)"); });
  });
  run.property("f~(iota)", gv, 1, [&](Rng&) {
    HVec expect(g);
    for (std::size_t k = 1; k <= sz; ++k) {
      expect[k - 1] = -2;
      expect[sz + k - 1] = -(2 * gv + 4 - 2 * static_cast<std::int64_t>(k));
    }
    const HVec got = f_tilde(iota);
    return fail_if(got != expect, [&] { return got.str() + " != " + expect.str(); });
  });
  run.property("f~(x_B o iota)", gv, 1, [&](Rng&) {
    HVec expect(g);
    for (std::size_t k = 1; k <= sz; ++k) {
      expect[k - 1] = -2;
      expect[sz + k - 1] = -(2 * gv + 2 - 2 * static_cast<std::int64_t>(k));
    }
    const HVec got = f_tilde(fixed);
    return fail_if(got != expect, [&] { return got.str() + " != " + expect.str(); });
  });
  run.property("psi(iota)", gv, 1, [&](Rng&) {
    QVec expect(g);
    for (std::size_t k = 1; k <= sz; ++k) {
      expect[k - 1] = mpq_class(1, gv - 1);
      expect[sz + k - 1] = mpq_class(-static_cast<long>(k), gv - 1);
      expect[sz + k - 1].canonicalize();
    }
    const QVec got = earle_psi(iota);
    return fail_if(got != expect, [&] { return got.str() + " != " + expect.str(); });
  });
  run.property("psi(x_B o iota)", gv, 1, [&](Rng&) {
    QVec expect(g);
    for (std::size_t k = 1; k <= sz; ++k) {
      expect[k - 1] = mpq_class(1, gv - 1);
      expect[sz + k - 1] = mpq_class(gv - 1 - static_cast<long>(k), gv - 1);
      expect[sz + k - 1].canonicalize();
    }
    const QVec got = earle_psi(fixed);
    return fail_if(got != expect, [&] { return got.str() + " != " + expect.str(); });
  });
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"words", "d-function", "cocycle-n", "descent", "earle", "paper-vectors"};
  return names;
}

std::vector<PropertyResult> run_suite(const std::string& suite, const Options& opts) {
  if (opts.genus_lo < 2 || opts.genus_hi < opts.genus_lo) throw std::invalid_argument("bad genus range");
  if (opts.samples < 1) throw std::invalid_argument("samples must be positive");

  std::vector<std::string> todo;
  if (suite == "all") {
    todo = suite_names();
  } else {
    bool known = false;
    for (const auto& s : suite_names()) known = known || s == suite;
    if (!known) throw std::invalid_argument("unknown suite '" + suite + "'");
    todo.push_back(suite);
  }

  std::vector<PropertyResult> out;
  for (const auto& name : todo) {
    Runner run(name, opts, out);
    for (int gv = opts.genus_lo; gv <= opts.genus_hi; ++gv) {
      const Genus g(gv);
      if (name == "words") words_suite(run, g);
      else if (name == "d-function") d_function_suite(run, g);
      else if (name == "cocycle-n") cocycle_n_suite(run, g);
      else if (name == "descent") descent_suite(run, g);
      else if (name == "earle") earle_suite(run, g);
      else reference_vectors_suite(run, g);
    }
  }
  return out;
}

}  // namespace mcg::verify
