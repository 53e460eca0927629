#include "regrep/construction.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "regrep/error.hpp"
#include "regrep/modular.hpp"
#include "regrep/module.hpp"

namespace regrep {

namespace {

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t out = 1;
  for (int i = 0; i < e; ++i) out *= b;
  return out;
}

GroupPtr from_keys(const CodecPtr& codec, std::vector<Key> keys) {
  std::sort(keys.begin(), keys.end());
  return Group::from_elements(codec, std::move(keys));
}

Mat minus_one(const MatCodec& codec, Key g) { return codec.decode(g) - Mat::identity(codec.ring(), codec.n()); }

// Entrywise x / varpi^k for x in varpi^k M_N (any lift).
Mat divide_pi(const Mat& x, int k) {
  Mat out(x.ring(), x.n());
  for (int i = 0; i < x.n(); ++i)
    for (int j = 0; j < x.n(); ++j) out(i, j) = x.ring()->shift_down(x(i, j), k);
  return out;
}

std::string instance(const GroupContext& ctx, const OrbitRep& orbit, const std::string& extra = {}) {
  std::string s = ctx.ring->spec().to_string() + " N=" + std::to_string(ctx.n) + " orbit " + orbit.key();
  if (!extra.empty()) s += " " + extra;
  return s;
}

// Same root of unity: e1 / m1 == e2 / m2 (mod 1).
bool same_root(std::uint64_t e1, std::uint64_t m1, std::uint64_t e2, std::uint64_t m2) {
  const auto m = lcm_u64(m1, m2);
  return (e1 * (m / m1)) % m == (e2 * (m / m2)) % m;
}

}  // namespace

GroupContext make_context(const RingSpec& spec, int n, std::uint64_t cap) {
  GroupContext ctx;
  ctx.ring = Ring::make(spec);
  require(n >= 1 && n <= MatCodec::kMaxN, ErrorCode::BadDegree, "N must be between 1 and 4");
  ctx.n = n;
  ctx.r = ctx.ring->r();
  ctx.l = (ctx.r + 1) / 2;
  ctx.lp = ctx.r / 2;
  const std::uint64_t order = unit_group_order(spec, n);
  require(order <= cap, ErrorCode::CapExceeded, "|G_r| exceeds the enumeration cap");
  ctx.codec = std::make_shared<const MatCodec>(ctx.ring, n);
  const auto& R = ctx.ring;
  std::vector<Key> gens;
  for (Ring::Value a = 1; a < R->size(); ++a) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) {
          Mat g = Mat::identity(R, n);
          g(i, j) = a;
          gens.push_back(ctx.codec->encode(g));
        }
    if (R->is_unit(a)) {
      Mat g = Mat::identity(R, n);
      g(0, 0) = a;
      gens.push_back(ctx.codec->encode(g));
    }
  }
  ctx.G = Group::generate(ctx.codec, gens, cap);
  require(ctx.G->order() == order, ErrorCode::CheckFailed, "generated group has the wrong order");
  const Parahoric amax(R, Flag::maximal(n));
  ctx.K.push_back(ctx.G);
  for (int i = 1; i <= ctx.r; ++i) ctx.K.push_back(from_keys(ctx.codec, amax.enumerate_units(*ctx.codec, i, cap)));
  return ctx;
}

LinearChar psi_beta_character(const GroupContext& ctx, const Mat& beta, const GroupPtr& K) {
  const auto M = ctx.ring->psi_order();
  LinearChar chi{K, M, {}};
  chi.exps.reserve(K->order());
  for (Key g : K->elements()) chi.exps.push_back(ctx.ring->psi_exponent((beta * minus_one(*ctx.codec, g)).trace(), M));
  return chi;
}

RegularDatum build_datum(const GroupContext& ctx, const OrbitRep& orbit, const ConstructionOptions& options) {
  require(ctx.r >= 2, ErrorCode::BadLevel, "the construction needs r >= 2");
  require(orbit.level == ctx.lp, ErrorCode::BadLevel, "orbit must be given at level floor(r/2)");
  require(orbit.regular, ErrorCode::NotRegular, "orbit is not regular");
  const auto& R = ctx.ring;
  const auto& codec = ctx.codec;
  auto form = choose_beta(orbit, R);
  Parahoric amax(R, Flag::maximal(ctx.n));
  Parahoric amin(R, form.lambda.flag());
  const int em = amin.e();
  // C = units of the centralizer algebra.
  std::vector<Key> ckeys;
  for (const auto& v : centralizer_module(form.beta, ctx.r).elements(options.cap)) {
    const Mat c = vec_to_mat(R, ctx.n, v);
    if (c.is_invertible()) ckeys.push_back(codec->encode(c));
  }
  const auto C = from_keys(codec, ckeys);
  const auto in_um = [&](int m) {
    return [&, m](Key k) { return amin.in_radical_power(m, minus_one(*codec, k)); };
  };
  const auto CUm1 = subgroup_where(C, in_um(1));
  const auto CKlp = product_group(C, ctx.K[ctx.lp], options.cap);
  const auto CK1 = intersect(C, ctx.K[1]);
  const auto CKl = intersect(C, ctx.K[ctx.l]);
  const auto JmM = product_group(CUm1, ctx.K[ctx.lp], options.cap);
  GroupPtr Um_j, Um_h, HM, JM, Hm, Jm;
  auto psi = psi_beta_character(ctx, form.beta, ctx.K[ctx.l]);
  LinearChar psi_m;
  if (ctx.r % 2 == 1) {
    Um_j = from_keys(codec, amin.enumerate_units(*codec, em * ctx.lp, options.cap));
    Um_h = from_keys(codec, amin.enumerate_units(*codec, em * ctx.lp + 1, options.cap));
    HM = product_group(CK1, ctx.K[ctx.l], options.cap);
    JM = product_group(CK1, ctx.K[ctx.lp], options.cap);
    Hm = product_group(CUm1, Um_h, options.cap);
    Jm = product_group(CUm1, Um_j, options.cap);
    psi_m = psi_beta_character(ctx, form.beta, Um_h);
  }
  return RegularDatum{orbit, std::move(form), std::move(amax), std::move(amin), C, CKlp, CK1, CKl, CUm1, Um_j, Um_h,
                      HM, JM, Hm, Jm, JmM, std::move(psi), std::move(psi_m)};
}

void check_datum(const GroupContext& ctx, const RegularDatum& d, Ledger& ledger) {
  const auto& R = ctx.ring;
  const auto& codec = *ctx.codec;
  const int n = ctx.n;
  const auto q = R->q();
  // C = o[beta]^x.
  {
    std::set<Key> poly_units;
    std::vector<Mat> powers{Mat::identity(R, n)};
    for (int k = 1; k < n; ++k) powers.push_back(powers.back() * d.form.beta);
    const std::uint64_t total = ipow(R->size(), n);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      Mat x(R, n);
      std::uint64_t c = idx;
      for (int k = 0; k < n; ++k, c /= R->size()) x = x + powers[k].scaled(c % R->size());
      if (x.is_invertible()) poly_units.insert(codec.encode(x));
    }
    const bool ok = std::vector<Key>(poly_units.begin(), poly_units.end()) == d.C->elements() && d.C->is_abelian();
    ledger.add("centralizer-poly", instance(ctx, d.orbit), ok, "|C| = " + std::to_string(d.C->order()));
  }
  {
    bool ok = true;
    for (Key c : d.C->elements()) ok &= d.amin.in_algebra(codec.decode(c));
    ledger.add("centralizer-in-amin", instance(ctx, d.orbit, d.form.lambda.to_string()), ok);
  }
  {
    const int log_m = residue_centralizer_log(d.form);
    const int log_1 = centralizer_module(d.form.beta, 1).log_size();
    ledger.add("residue-centralizer-order", instance(ctx, d.orbit), log_m == n && log_1 == n,
               "log_q |C(beta_m)| = " + std::to_string(log_m) + ", log_q |C(beta_bar)| = " + std::to_string(log_1));
  }
  {
    // psi_{g beta g^-1}(1 + x) = psi_beta(1 + g^-1 x g).
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> pg(0, ctx.G->order() - 1), pk(0, ctx.K[ctx.l]->order() - 1);
    const auto M = R->psi_order();
    bool ok = true;
    for (int s = 0; s < 100; ++s) {
      const Mat g = codec.decode(ctx.G->element(pg(rng)));
      const Mat x = minus_one(codec, ctx.K[ctx.l]->element(pk(rng)));
      const Mat gi = g.inverse();
      ok &= R->psi_exponent((g * d.form.beta * gi * x).trace(), M) == R->psi_exponent((d.form.beta * gi * x * g).trace(), M);
    }
    ok &= d.psi.is_homomorphism();
    ledger.add("psi-beta", instance(ctx, d.orbit, "equivariance"), ok);
  }
  if (ctx.r % 2 == 1) {
    std::string detail;
    bool ok = ctx.l + ctx.lp == ctx.r;
    auto expect = [&](bool cond, const char* what) {
      if (!cond) detail += std::string(what) + "; ";
      ok &= cond;
    };
    expect(d.HM->is_subgroup_of(*d.Hm), "H_M not in H_m");
    expect(d.Jm->is_subgroup_of(*d.JmM), "J_m not in J_mM");
    expect(d.JM->is_subgroup_of(*d.JmM), "J_M not in J_mM");
    expect(d.HM->is_normal_in(*d.CKlp), "H_M not normal in CK^l'");
    expect(d.JM->is_normal_in(*d.CKlp), "J_M not normal in CK^l'");
    expect(ctx.K[ctx.l]->is_subgroup_of(*d.Um_h), "K^l not in U_m^(e l'+1)");
    expect(d.Hm->is_normal_in(*d.Jm) && d.HM->is_normal_in(*d.JM), "H not normal in J");
    int twice = n * n;
    for (const auto& part : d.form.lambda.parts) twice -= part.d * part.d * part.m;
    expect(twice % 2 == 0 && group_index(*d.JmM, *d.Jm) == ipow(q, twice / 2), "[J_mM : J_m] formula");
    ledger.add("subgroup-diagram", instance(ctx, d.orbit), ok, detail);
  }
}

bool sylow_check(const GroupContext& ctx, const RegularDatum& d, Ledger& ledger) {
  const auto index = group_index(*d.CKlp, *d.JmM);
  const auto formula = d.C->order() / d.CUm1->order();
  const bool ok = index == formula && index % ctx.ring->p() != 0;
  ledger.add("sylow", instance(ctx, d.orbit), ok, "[CK^l' : J_mM] = " + std::to_string(index));
  return ok;
}

namespace {

// Coset representatives of J/H, one per coordinate vector.
std::vector<Key> coset_reps(const SymplecticSpace& S) {
  const auto& codec = *S.J()->codec();
  std::vector<Key> reps{codec.identity()};
  for (Key x : S.basis()) {
    std::vector<Key> next;
    for (Key base : reps) {
      Key cur = base;
      for (std::uint64_t a = 0; a < S.p(); ++a, cur = codec.mul(cur, x)) next.push_back(cur);
    }
    reps = std::move(next);
  }
  return reps;
}

// x = z (1 + s) with z in Cpart and s in P^el.
Mat split_off_centralizer(const MatCodec& codec, const Parahoric& A, int el, const GroupPtr& Cpart, Key x) {
  for (Key z : Cpart->elements()) {
    const Mat s = minus_one(codec, codec.mul(codec.inv(z), x));
    if (A.in_radical_power(el, s)) return s;
  }
  throw Error(ErrorCode::CheckFailed, "element of J does not factor as z(1+s)");
}

// theta([x, y]) = psi_beta(1 + (st - ts)) on pairs of coset representatives.
bool check_closed_form(const GroupContext& ctx, const RegularDatum& d, const SymplecticSpace& S, const Parahoric& A,
                       const GroupPtr& Cpart, std::uint64_t pair_limit, std::string& detail) {
  const auto& codec = *ctx.codec;
  const int el = A.e() * ctx.lp;
  const auto reps = coset_reps(S);
  std::vector<Mat> parts;
  for (Key x : reps) parts.push_back(split_off_centralizer(codec, A, el, Cpart, x));
  const auto M = ctx.ring->psi_order();
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, reps.size() - 1);
  const bool exhaustive = reps.size() * reps.size() <= pair_limit;
  const std::uint64_t total = exhaustive ? reps.size() * reps.size() : pair_limit;
  for (std::uint64_t t = 0; t < total; ++t) {
    const std::size_t i = exhaustive ? t / reps.size() : pick(rng);
    const std::size_t j = exhaustive ? t % reps.size() : pick(rng);
    const auto b = S.form(reps[i], reps[j]);
    const Mat st = parts[i] * parts[j] - parts[j] * parts[i];
    const auto e = ctx.ring->psi_exponent((d.form.beta * st).trace(), M);
    if (!same_root(b, S.p(), e, M)) {
      detail = "pair " + std::to_string(i) + "," + std::to_string(j);
      return false;
    }
  }
  return true;
}

// (C n U^1) . rho^-1(C_{A/P}(beta + P)).
GroupPtr radical_by_formula(const GroupContext& ctx, const RegularDatum& d, const Parahoric& A, const GroupPtr& Cpart,
                            const GroupPtr& Uj, std::uint64_t cap) {
  const auto& codec = *ctx.codec;
  const auto pre = subgroup_where(Uj, [&](Key g) {
    const Mat x = divide_pi(minus_one(codec, g), ctx.lp);
    return A.in_radical_power(1, d.form.beta * x - x * d.form.beta);
  });
  return product_group(Cpart, pre, cap);
}

// Number of distinct images of C n U^{el'} in A/P, read off the diagonal blocks mod p.
std::uint64_t centralizer_image(const GroupContext& ctx, const RegularDatum& d, const Parahoric& A) {
  const auto& codec = *ctx.codec;
  std::set<std::vector<Ring::Value>> images;
  for (Key c : d.C->elements()) {
    const Mat x = minus_one(codec, c);
    bool inside = true;
    for (int i = 0; i < ctx.n && inside; ++i)
      for (int j = 0; j < ctx.n && inside; ++j) inside = ctx.ring->valuation(x(i, j)) >= ctx.lp;
    if (!inside || !A.in_radical_power(A.e() * ctx.lp, x)) continue;
    const Mat x0 = divide_pi(x, ctx.lp);
    std::vector<Ring::Value> key;
    for (int i = 0; i < ctx.n; ++i)
      for (int j = 0; j < ctx.n; ++j)
        if (A.block_of(i) == A.block_of(j)) key.push_back(ctx.ring->reduce(x0(i, j), 1));
    images.insert(std::move(key));
  }
  return images.size();
}

bool linear_stable(const LinearChar& chi, const GroupPtr& over) {
  const auto& codec = *chi.group->codec();
  for (Key g : over->generators()) {
    const Key gi = codec.inv(g);
    for (std::size_t i = 0; i < chi.group->order(); ++i)
      if (chi.at(codec.mul(codec.mul(g, chi.group->element(i)), gi)) != chi.exps[i]) return false;
  }
  return true;
}

bool conj_invariant(const ClassFunction& chi, const GroupPtr& over) {
  const auto& H = chi.group();
  const auto& codec = *H->codec();
  for (Key g : over->generators()) {
    const Key gi = codec.inv(g);
    for (std::size_t c = 0; c < H->class_count(); ++c) {
      const Key x = H->classes().reps[c];
      const Key y = codec.mul(codec.mul(g, x), gi);
      if (!H->contains(y) || !(chi.at(y) == chi.at_class(c))) return false;
    }
  }
  return true;
}

std::size_t linear_quotient_count(const GroupPtr& G, const GroupPtr& N, std::uint64_t cap) {
  const auto ND = product_group(N, derived_subgroup(G), cap);
  return group_index(*G, *ND);
}

void finish_census(const GroupContext& ctx, RepReport& report) {
  bool irreducible = true, distinct = true;
  for (std::size_t i = 0; i < report.reps.size(); ++i) {
    irreducible &= inner_int(report.reps[i].character, report.reps[i].character) == 1;
    for (std::size_t j = 0; j < i; ++j) distinct &= !(report.reps[i].character == report.reps[j].character);
  }
  const std::string inst = ctx.ring->spec().to_string() + " N=" + std::to_string(ctx.n) + " orbit " + report.orbit_key;
  report.ledger.add("census", inst + " irreducible", irreducible, std::to_string(report.reps.size()) + " representations");
  report.ledger.add("census", inst + " injective", distinct);
}

void even_pipeline(const GroupContext& ctx, const RegularDatum& d, RepReport& report, const ConstructionOptions& options) {
  const auto exts = extend_linear_through_abelianization(d.CKlp, d.psi);
  const auto expected = linear_quotient_count(d.CKlp, ctx.K[ctx.l], options.cap);
  report.theta_count = 1;
  report.ledger.add("even-pipeline", instance(ctx, d.orbit, "extension count"), exts.size() == expected,
                    std::to_string(exts.size()) + " extensions of psi_beta to CK^l'");
  const auto index = static_cast<std::int64_t>(group_index(*ctx.G, *d.CKlp));
  bool degrees = true;
  for (std::size_t i = 0; i < exts.size(); ++i) {
    auto pi = exts[i].to_class_function().induce_to(ctx.G);
    degrees &= pi.degree() == index;
    report.reps.push_back({0, i, pi.degree(), std::move(pi)});
  }
  report.ledger.add("even-pipeline", instance(ctx, d.orbit, "degrees = [G : CK^l']"), degrees);
}

void odd_pipeline(const GroupContext& ctx, const RegularDatum& d, RepReport& report, const ConstructionOptions& options) {
  Ledger& ledger = report.ledger;
  const auto& codec = *ctx.codec;
  const auto p = ctx.ring->p();
  const auto q = ctx.ring->q();
  const int n = ctx.n;
  // theta_M: every extension of psi_beta to H_M^1.
  const auto thetas = extend_linear_through_abelianization(d.HM, d.psi);
  report.theta_count = thetas.size();
  {
    bool ok = thetas.size() == d.CK1->order() / d.CKl->order();
    for (const auto& t : thetas) ok &= t.restrict_to(ctx.K[ctx.l]).same_as(d.psi);
    // C n U_m^1 fixes psi_beta on U_m^{e l'+1}.
    bool stable = true;
    for (Key c : d.CUm1->generators()) {
      const Key ci = codec.inv(c);
      for (Key k : d.Um_h->elements()) stable &= d.psi_m.at(codec.mul(codec.mul(c, k), codec.mul(ci, codec.inv(k)))) == 0;
    }
    // theta_M(z k) = theta_0(z) psi_beta(k).
    bool split = true;
    for (const auto& t : thetas) {
      const auto theta0 = t.restrict_to(d.CK1);
      split &= theta0.restrict_to(d.CKl).same_as(d.psi.restrict_to(d.CKl));
      for (Key z : d.CK1->elements())
        for (Key k : ctx.K[ctx.l]->generators()) {
          const auto lhs = t.at(codec.mul(z, k));
          const auto rhs = (theta0.at(z) + t.modulus / d.psi.modulus * d.psi.at(k)) % t.modulus;
          split &= lhs == rhs;
        }
    }
    ledger.add("theta-extension", instance(ctx, d.orbit, "count and restriction"), ok,
               std::to_string(thetas.size()) + " extensions to H_M^1");
    ledger.add("theta-extension", instance(ctx, d.orbit, "C n U_m^1 stabilizes psi_beta"), stable);
    ledger.add("theta-extension", instance(ctx, d.orbit, "theta_M = theta_0 psi_beta"), split);
  }
  const auto table = character_table(d.CKlp);
  const auto hat_count = linear_quotient_count(d.CKlp, d.JM, options.cap);
  const auto induce_index = static_cast<std::int64_t>(group_index(*ctx.G, *d.CKlp));
  const std::int64_t deg_M = static_cast<std::int64_t>(ipow(q, n * (n - 1) / 2));
  std::int64_t deg_m = 1;
  for (const auto& part : d.form.lambda.parts) deg_m *= static_cast<std::int64_t>(ipow(q, part.d * part.m * (part.d - 1) / 2));
  bool theta_m_ok = true, dims_ok = true, bridge_ok = true, stab_ok = true, hat_ok = true, nondeg = true;
  std::string detail;
  std::vector<std::size_t> unstable;
  bool idx_ok = true, m_checked = false;
  std::string idx_detail;
  std::size_t agreeing = 0, bridged = 0;
  for (std::size_t t = 0; t < thetas.size(); ++t) {
    const auto& thetaM = thetas[t];
    const SymplecticSpace SM(d.JM, d.HM, thetaM, p);
    nondeg &= SM.radical_dim() == 0;
    if (t == 0) {
      std::string cf;
      const bool ok = check_closed_form(ctx, d, SM, d.amax, d.CK1, options.pair_limit, cf) && SM.check_bilinear();
      ledger.add("commutator-closed-form", instance(ctx, d.orbit, "A_max"), ok, cf);
      const auto RM = SM.preimage(SM.radical());
      const bool rad = radical_by_formula(ctx, d, d.amax, d.CK1, ctx.K[ctx.lp], options.cap)->elements() == RM->elements();
      ledger.add("radical", instance(ctx, d.orbit, "A_max"), rad);
      idx_ok &= group_index(*d.JM, *RM) == ipow(q, n * n - n);
      idx_detail += "[J_M:R] = " + std::to_string(group_index(*d.JM, *RM));
      const auto img = centralizer_image(ctx, d, d.amax);
      ledger.add("centralizer-surjective", instance(ctx, d.orbit, "A_max"), img == ipow(q, n), std::to_string(img) + " images");
    }
    if (SM.radical_dim() != 0) continue;
    const auto etaM = heisenberg_lift(SM, thetaM).eta;
    dims_ok &= etaM.degree() == deg_M;
    stab_ok &= conj_invariant(etaM, d.CKlp);

    // theta_m: an extension to H_m^1, preferably J_m-stable and equal to psi_beta on U_m^{el'+1}.
    std::vector<LinearChar> theta_ms;
    try {
      theta_ms = extend_linear_through_abelianization(d.Hm, thetaM);
    } catch (const Error& e) {
      theta_m_ok = false;
      detail += "theta_" + std::to_string(t) + ": " + e.what() + "; ";
    }
    const LinearChar* pick = nullptr;
    const LinearChar* stable_only = nullptr;
    for (const auto& c : theta_ms) {
      if (!linear_stable(c, d.Jm)) continue;
      if (!stable_only) stable_only = &c;
      if (c.restrict_to(d.Um_h).same_as(d.psi_m.restrict_to(d.Um_h))) {
        pick = &c;
        break;
      }
    }
    if (pick) ++agreeing;
    if (!pick) pick = stable_only;
    if (!pick) unstable.push_back(t);
    if (pick) {
      const auto& thetam = *pick;
      const SymplecticSpace Sm(d.Jm, d.Hm, thetam, p);
      const auto Rm = Sm.preimage(Sm.radical());
      if (!m_checked) {
        m_checked = true;
        std::string cf;
        const bool ok = check_closed_form(ctx, d, Sm, d.amin, d.CUm1, options.pair_limit, cf) && Sm.check_bilinear();
        ledger.add("commutator-closed-form", instance(ctx, d.orbit, "A_min"), ok, cf);
        const bool rad = radical_by_formula(ctx, d, d.amin, d.CUm1, d.Um_j, options.cap)->elements() == Rm->elements();
        ledger.add("radical", instance(ctx, d.orbit, "A_min"), rad);
        int log_am = 0;
        for (const auto& part : d.form.lambda.parts) log_am += part.d * part.d * part.m;
        idx_ok &= group_index(*d.Jm, *Rm) == ipow(q, log_am - n);
        idx_detail += ", [J_m:R] = " + std::to_string(group_index(*d.Jm, *Rm));
        const auto img = centralizer_image(ctx, d, d.amin);
        ledger.record("centralizer-surjective", instance(ctx, d.orbit, "A_min"), img == ipow(q, n), std::to_string(img) + " images");
      }
      const auto tilde = extend_linear_through_abelianization(Rm, thetam).front();
      const auto etam = heisenberg_lift(Sm, tilde).eta;
      dims_ok &= etam.degree() == deg_m;
      const auto eta = etam.induce_to(d.JmM);
      bridge_ok &= eta.degree() == etaM.degree() && eta.restrict_to(d.JM) == etaM;
      ++bridged;
    }

    const auto mult = table.decompose(etaM.induce_to(d.CKlp));
    std::size_t found = 0;
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (mult[i] <= 0 || table.irreducibles[i].degree() != etaM.degree()) continue;
      if (!(table.irreducibles[i].restrict_to(d.JM) == etaM)) continue;
      auto pi = table.irreducibles[i].induce_to(ctx.G);
      hat_ok &= pi.degree() == induce_index * etaM.degree();
      report.reps.push_back({t, found, pi.degree(), std::move(pi)});
      ++found;
    }
    hat_ok &= found == hat_count && found > 0;
  }
  ledger.add("heisenberg-dims", instance(ctx, d.orbit, "(i) index formula"), idx_ok && m_checked, idx_detail);
  ledger.record("theta-extension", instance(ctx, d.orbit, "theta_m = psi_beta on U_m^{el'+1}"), agreeing == thetas.size(),
                std::to_string(agreeing) + " of " + std::to_string(thetas.size()) + " theta_M");
  ledger.add("bridge", instance(ctx, d.orbit), bridge_ok && bridged > 0, std::to_string(bridged) + " theta_M bridged");
  ledger.add("theta-extension", instance(ctx, d.orbit, "theta_M extends to H_m^1"), theta_m_ok, detail);
  // The Heisenberg step for A_min needs theta_m stable under J_m^1; not every theta_M admits one.
  std::string missing;
  for (auto t : unstable) missing += (missing.empty() ? "theta_" : ", theta_") + std::to_string(t);
  ledger.record("theta-extension", instance(ctx, d.orbit, "every theta_M has a J_m-stable extension"), unstable.empty(),
                missing.empty() ? std::string("all") : "none for " + missing);
  ledger.add("theta-extension", instance(ctx, d.orbit, "some theta_M has a J_m-stable extension"),
             unstable.size() < thetas.size());
  ledger.add("heisenberg-dims", instance(ctx, d.orbit, "(ii) non-degenerate on J_M/H_M"), nondeg);
  ledger.add("heisenberg-dims", instance(ctx, d.orbit, "(ii)/(iii) degrees"), dims_ok,
             "deg eta_M = " + std::to_string(deg_M) + ", deg eta_m = " + std::to_string(deg_m));
  ledger.add("stabilizer", instance(ctx, d.orbit), stab_ok);
  ledger.add("eta-hat", instance(ctx, d.orbit), hat_ok, std::to_string(hat_count) + " extensions per eta_M");
}

}  // namespace

RepReport construct_orbit(const GroupContext& ctx, const OrbitRep& orbit, const ConstructionOptions& options) {
  const auto d = build_datum(ctx, orbit, options);
  RepReport report;
  report.orbit_key = orbit.key();
  report.level = orbit.level;
  report.partition = d.form.lambda.to_string();
  check_datum(ctx, d, report.ledger);
  report.sylow_ok = sylow_check(ctx, d, report.ledger);
  if (ctx.r % 2 == 0)
    even_pipeline(ctx, d, report, options);
  else
    odd_pipeline(ctx, d, report, options);
  finish_census(ctx, report);
  if (options.klp_extension && ctx.r % 2 == 1) klp_extension_check(ctx, d, report.ledger);
  return report;
}

void klp_extension_check(const GroupContext& ctx, const RegularDatum& d, Ledger& ledger) {
  const auto& Klp = ctx.K[ctx.lp];
  const auto q = ctx.ring->q();
  const int n = ctx.n;
  const SymplecticSpace S(Klp, ctx.K[ctx.l], d.psi, ctx.ring->p());
  const bool radical = ipow(ctx.ring->p(), S.radical_dim()) == ipow(q, n);
  ledger.add("klp-extension", instance(ctx, d.orbit, "radical order q^N"), radical,
             "radical dimension " + std::to_string(S.radical_dim()) + " over F_p");
  const auto tK = character_table(Klp);
  const auto tC = character_table(d.CKlp);
  const auto psi = d.psi.to_class_function();
  const auto want = static_cast<std::int64_t>(ipow(q, n * (n - 1) / 2));
  std::vector<ClassFunction> restricted;
  for (const auto& tau : tC.irreducibles) restricted.push_back(tau.restrict_to(Klp));
  bool ok = true;
  std::size_t count = 0;
  for (const auto& sigma : tK.irreducibles) {
    if (inner_int(sigma.restrict_to(ctx.K[ctx.l]), psi) == 0) continue;
    ++count;
    ok &= sigma.degree() == want;
    bool extends = false;
    for (const auto& r : restricted) extends = extends || r == sigma;
    ok &= extends;
  }
  ledger.add("klp-extension", instance(ctx, d.orbit, "Irr(K^l' | psi_beta) extends to CK^l'"), ok && count > 0,
             std::to_string(count) + " representations of degree " + std::to_string(want));
}

}  // namespace regrep
