#include "regrep/chartable.hpp"

#include <algorithm>
#include <numeric>

#include "regrep/error.hpp"
#include "regrep/kernels.hpp"
#include "regrep/modlinalg.hpp"
#include "regrep/modular.hpp"

namespace regrep {

namespace {

using modl::Row;

struct Splitter {
  const Group& G;
  const ClassData& cls;
  std::uint32_t ell;
  std::size_t k;

  // (M_j)_{ik} = #{x in C_j : x^-1 z_k in C_i}, by walking u over the inverse class.
  std::vector<Row> class_matrix(std::size_t j) const {
    std::vector<Row> M(k, Row(k, 0));
    const auto& codec = *G.codec();
    const auto& inverse_members = cls.members[cls.inverse[j]];
    for (std::size_t col = 0; col < k; ++col) {
      const Key z = cls.reps[col];
      for (auto u : inverse_members) {
        const auto i = cls.class_of[G.index_of(codec.mul(G.element(u), z))];
        M[i][col] = (M[i][col] + 1) % ell;
      }
    }
    return M;
  }

  // Split a space (rows in reduced echelon form) into eigenspaces of M.
  std::vector<std::vector<Row>> split(const std::vector<Row>& basis, const std::vector<int>& pivots,
                                      const std::vector<Row>& M) const {
    const std::size_t d = basis.size();
    // Columns of the restricted operator: coordinates of M b_s read at the pivots.
    std::vector<Row> A(d, Row(d, 0));
    for (std::size_t s = 0; s < d; ++s) {
      for (std::size_t t = 0; t < d; ++t)
        A[t][s] = kernels::dot_mod(M[pivots[t]].data(), basis[s].data(), k, ell);
    }
    const auto f = modl::charpoly(A, ell);
    const auto lambdas = modl::roots(f, ell);
    if (lambdas.size() <= 1) return {basis};
    std::vector<std::vector<Row>> out;
    std::size_t total = 0;
    for (auto lambda : lambdas) {
      auto shifted = A;
      for (std::size_t t = 0; t < d; ++t) shifted[t][t] = (shifted[t][t] + ell - lambda) % ell;
      const auto coords = modl::nullspace(shifted, static_cast<int>(d), ell);
      std::vector<Row> sub;
      for (const auto& c : coords) {
        Row v(k, 0);
        for (std::size_t s = 0; s < d; ++s)
          if (c[s] != 0) kernels::axpy_mod(v.data(), basis[s].data(), c[s], k, ell);
        sub.push_back(std::move(v));
      }
      total += sub.size();
      out.push_back(std::move(sub));
    }
    require(total == d, ErrorCode::CheckFailed, "class matrix is not diagonalizable modulo ell");
    return out;
  }
};

}  // namespace

CharacterTable character_table(const GroupPtr& Gp, const TableOptions& options) {
  const Group& G = *Gp;
  require(G.order() <= options.cap, ErrorCode::CapExceeded, "group exceeds the character-table cap");
  const ClassData& cls = G.classes();
  const std::size_t k = cls.reps.size();
  CharacterTable table;
  table.group = Gp;
  table.exponent = cls.exponent;
  const std::uint64_t ell64 = prime_congruent_one(cls.exponent, 2 * G.order() + 1);
  require(ell64 < (1u << 26), ErrorCode::CapExceeded, "no suitable prime below 2^26");
  const auto ell = static_cast<std::uint32_t>(ell64);
  table.ell = ell;
  table.root = powmod(primitive_root(ell), (ell - 1) / cls.exponent, ell);

  // Common eigenvectors of the class matrices.
  Splitter splitter{G, cls, ell, k};
  std::vector<Row> full;
  for (std::size_t i = 0; i < k; ++i) {
    Row e(k, 0);
    e[i] = 1;
    full.push_back(std::move(e));
  }
  std::vector<std::vector<Row>> spaces = {full};
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return cls.sizes[a] < cls.sizes[b]; });
  for (std::size_t j : order) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const auto& s) { return s.size() == 1; })) break;
    if (j == 0) continue;
    const auto M = splitter.class_matrix(j);
    std::vector<std::vector<Row>> next;
    for (auto& space : spaces) {
      if (space.size() == 1) {
        next.push_back(std::move(space));
        continue;
      }
      const auto pivots = modl::rref(space, ell);
      for (auto& piece : splitter.split(space, pivots, M)) next.push_back(std::move(piece));
    }
    spaces = std::move(next);
  }
  require(spaces.size() == k, ErrorCode::CheckFailed, "class matrices failed to separate the characters");

  // Degrees and values modulo ell.
  const std::uint64_t order_g = G.order();
  std::vector<std::pair<std::int64_t, Row>> chars;
  for (auto& space : spaces) {
    Row w = space[0];
    require(w[0] != 0, ErrorCode::CheckFailed, "central character vanishes on the identity");
    kernels::scale_mod(w.data(), static_cast<std::uint32_t>(invmod(w[0], ell)), k, ell);
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < k; ++i)
      s = (s + mulmod(mulmod(w[i], w[cls.inverse[i]], ell), invmod(cls.sizes[i] % ell, ell), ell)) % ell;
    const std::uint64_t d2 = mulmod(order_g % ell, invmod(s, ell), ell);
    std::int64_t degree = -1;
    for (std::uint64_t d = 1; d * d <= order_g; ++d)
      if (d * d % ell == d2) {
        degree = static_cast<std::int64_t>(d);
        break;
      }
    require(degree > 0 && order_g % degree == 0, ErrorCode::CheckFailed, "no valid degree for a character");
    Row values(k);
    for (std::size_t i = 0; i < k; ++i)
      values[i] = static_cast<std::uint32_t>(
          mulmod(mulmod(w[i], static_cast<std::uint64_t>(degree), ell), invmod(cls.sizes[i] % ell, ell), ell));
    chars.emplace_back(degree, std::move(values));
  }
  std::sort(chars.begin(), chars.end());

  // Power maps for the lift.
  std::vector<std::vector<std::uint32_t>> powers(k);
  for (std::size_t c = 0; c < k; ++c) {
    const auto o = cls.orders[c];
    powers[c].resize(o);
    Key x = G.codec()->identity();
    for (std::uint64_t j = 0; j < o; ++j) {
      powers[c][j] = G.class_of_key(x);
      x = G.codec()->mul(x, cls.reps[c]);
    }
  }
  std::int64_t degree_square_sum = 0;
  for (auto& [degree, values] : chars) {
    degree_square_sum += degree * degree;
    std::vector<CyclotomicValue> exact(k);
    for (std::size_t c = 0; c < k; ++c) {
      const auto o = cls.orders[c];
      const std::uint64_t zo = powmod(table.root, cls.exponent / o, ell);
      const std::uint64_t zo_inv = invmod(zo, ell);
      const std::uint64_t o_inv = invmod(o % ell, ell);
      std::vector<std::int64_t> counts(cls.exponent, 0);
      std::int64_t total = 0;
      for (std::uint64_t t = 0; t < o; ++t) {
        // mu_t = (1/o) sum_j chi(g^j) zeta_o^(-jt)
        const std::uint64_t step = powmod(zo_inv, t, ell);
        std::uint64_t acc = 0, w = 1;
        for (std::uint64_t j = 0; j < o; ++j) {
          acc = (acc + mulmod(values[powers[c][j]], w, ell)) % ell;
          w = mulmod(w, step, ell);
        }
        const auto mu = static_cast<std::int64_t>(mulmod(acc, o_inv, ell));
        require(mu <= degree, ErrorCode::CheckFailed, "eigenvalue multiplicity out of range while lifting");
        counts[t * (cls.exponent / o)] = mu;
        total += mu;
      }
      require(total == degree, ErrorCode::CheckFailed, "eigenvalue multiplicities do not add up to the degree");
      exact[c] = CyclotomicValue::from_exponent_counts(cls.exponent, counts);
      require(exact[c].eval_mod(ell, table.root) == values[c], ErrorCode::CheckFailed, "lifted value disagrees modulo ell");
    }
    table.irreducibles.emplace_back(Gp, std::move(exact));
    table.values_mod.push_back(values);
  }
  require(degree_square_sum == static_cast<std::int64_t>(order_g), ErrorCode::CheckFailed, "sum of squared degrees is not |G|");

  // Orthogonality audit.
  if (k <= options.exact_audit_limit) {
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a; b < k; ++b) {
        const Rational r = inner(table.irreducibles[a], table.irreducibles[b]);
        require(r == Rational{a == b ? 1 : 0, 1}, ErrorCode::CheckFailed, "row orthogonality fails");
      }
  } else {
    // Two independent primes: the table's own ell and a second one.
    const std::uint64_t ell2 = prime_congruent_one(cls.exponent, ell + 1);
    const std::uint64_t root2 = powmod(primitive_root(ell2), (ell2 - 1) / cls.exponent, ell2);
    for (auto [p, z] : {std::pair<std::uint64_t, std::uint64_t>{ell, table.root}, {ell2, root2}}) {
      std::vector<std::vector<std::uint64_t>> v(k, std::vector<std::uint64_t>(k));
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t c = 0; c < k; ++c) v[a][c] = table.irreducibles[a].at_class(c).eval_mod(p, z);
      const std::uint64_t inv_order = invmod(order_g % p, p);
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a; b < k; ++b) {
          std::uint64_t acc = 0;
          for (std::size_t c = 0; c < k; ++c)
            acc = (acc + mulmod(cls.sizes[c] % p, mulmod(v[a][c], v[b][cls.inverse[c]], p), p)) % p;
          require(mulmod(acc, inv_order, p) == (a == b ? 1u : 0u), ErrorCode::CheckFailed, "row orthogonality fails mod p");
        }
      for (std::size_t c1 = 0; c1 < k; ++c1)
        for (std::size_t c2 = c1; c2 < k; ++c2) {
          std::uint64_t acc = 0;
          for (std::size_t a = 0; a < k; ++a) acc = (acc + mulmod(v[a][c1], v[a][cls.inverse[c2]], p)) % p;
          const std::uint64_t expected = c1 == c2 ? (order_g / cls.sizes[c1]) % p : 0;
          require(acc == expected, ErrorCode::CheckFailed, "column orthogonality fails mod p");
        }
    }
  }
  return table;
}

std::vector<std::int64_t> CharacterTable::decompose(const ClassFunction& chi) const {
  const auto& cls = group->classes();
  const std::size_t k = cls.reps.size();
  // Values of chi may live in a cyclotomic field larger than Q(zeta_exp); embed through the lcm.
  std::uint64_t modulus = exponent;
  for (const auto& v : chi.values()) modulus = std::lcm(modulus, v.modulus());
  std::vector<std::int64_t> mult(irreducibles.size());
  if (modulus != exponent) {
    // Stored with a larger conductor than needed; fall back to exact inner products.
    for (std::size_t a = 0; a < irreducibles.size(); ++a) mult[a] = inner_int(chi, irreducibles[a]);
    return mult;
  }
  const auto chi_mod = chi.eval_mod(ell, root, exponent);
  const std::uint64_t inv_order = invmod(group->order() % ell, ell);
  for (std::size_t a = 0; a < irreducibles.size(); ++a) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < k; ++c)
      acc = (acc + mulmod(cls.sizes[c] % ell, mulmod(chi_mod[c], values_mod[a][cls.inverse[c]], ell), ell)) % ell;
    acc = mulmod(acc, inv_order, ell);
    mult[a] = acc > ell / 2 ? static_cast<std::int64_t>(acc) - static_cast<std::int64_t>(ell) : static_cast<std::int64_t>(acc);
  }
  // Exact recombination guards the symmetric lift.
  ClassFunction sum = ClassFunction::constant(group, 0);
  for (std::size_t a = 0; a < irreducibles.size(); ++a)
    if (mult[a] != 0) sum = sum + irreducibles[a].scaled(mult[a]);
  require(sum == chi, ErrorCode::CheckFailed, "decomposition does not recombine to the class function");
  return mult;
}

std::int64_t CharacterTable::find(const ClassFunction& chi) const {
  const auto chi_mod = chi.eval_mod(ell, root, exponent);
  for (std::size_t a = 0; a < irreducibles.size(); ++a)
    if (values_mod[a] == chi_mod && irreducibles[a] == chi) return static_cast<std::int64_t>(a);
  return -1;
}

}  // namespace regrep
