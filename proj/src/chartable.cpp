#include "pblocks/chartable.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pblocks/kernels.hpp"
#include "pblocks/modular.hpp"
#include "embedding.hpp"

namespace pblocks {

namespace {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::uint32_t multiplicative_order(std::uint32_t x, std::uint32_t q) {
  std::uint32_t k = 1;
  for (std::uint64_t y = x % q; y != 1; y = y * x % q) ++k;
  return k;
}

// A common eigenspace of the class matrices processed so far, basis rows in RREF.
struct Eigenspace {
  modq::Matrix basis;
  std::vector<std::size_t> pivots;
};

Eigenspace make_space(modq::Matrix basis, std::uint32_t q) {
  auto pivots = modq::rref(basis, q);
  return {std::move(basis), std::move(pivots)};
}

modq::Matrix class_matrix(const StructureConstants& sc, std::size_t i, std::uint32_t q) {
  const std::size_t k = sc.class_count();
  modq::Matrix m(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    auto row = sc.row(i, j);
    for (std::size_t l = 0; l < k; ++l) m.at(j, l) = modq::reduce(row[l], q);
  }
  return m;
}

// Splits a space into the eigenspaces of the class matrix restricted to it.
std::vector<Eigenspace> split(const Eigenspace& space, const modq::Matrix& mi, std::uint32_t q) {
  const std::size_t d = space.basis.rows, k = space.basis.cols;
  // Coordinates of a vector in the space are its entries at the pivot columns.
  modq::Matrix restricted(d, d);
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t r = 0; r < d; ++r)
      restricted.at(r, c) = simd::dot_mod({mi.row(space.pivots[r]), k}, {space.basis.row(c), k}, q);

  auto eigenvalues = modq::roots(modq::charpoly(restricted, q), q);
  if (eigenvalues.size() == 1) return {space};

  std::vector<Eigenspace> parts;
  std::size_t total = 0;
  for (auto lambda : eigenvalues) {
    modq::Matrix shifted = restricted;
    for (std::size_t r = 0; r < d; ++r) shifted.at(r, r) = modq::sub(shifted.at(r, r), lambda, q);
    modq::Matrix coords = modq::nullspace(std::move(shifted), q);
    modq::Matrix vectors(coords.rows, k);
    for (std::size_t v = 0; v < coords.rows; ++v)
      for (std::size_t c = 0; c < d; ++c)
        if (coords.at(v, c) != 0) simd::axpy_mod({vectors.row(v), k}, {space.basis.row(c), k}, coords.at(v, c), q);
    total += coords.rows;
    parts.push_back(make_space(std::move(vectors), q));
  }
  if (total != d)
    throw CharacterTableError("class matrix is not diagonalisable over F_" + std::to_string(q) +
                              " on a common eigenspace");
  return parts;
}

bool is_trivial_row(const Character& c) {
  if (c.degree != 1) return false;
  for (const auto& v : c.values) {
    auto n = v.as_rational_integer();
    if (!n || *n != 1) return false;
  }
  return true;
}

std::string pair_str(std::size_t a, std::size_t b) { return "(" + std::to_string(a) + ", " + std::to_string(b) + ")"; }

}  // namespace

ModulusChoice choose_modulus(std::uint32_t e, std::uint64_t order, std::uint64_t search_cap) {
  if (e == 0) throw CharacterTableError("exponent must be positive");
  const std::uint64_t bound = 2 * isqrt(order);
  std::uint64_t q = bound + 1;
  // first candidate congruent to 1 mod e
  q += (e + 1 - q % e) % e;
  for (; q <= search_cap; q += e) {
    if (!is_prime(q)) continue;
    const auto qq = static_cast<std::uint32_t>(q);
    for (std::uint32_t x = 1; x < qq; ++x)
      if (multiplicative_order(x, qq) == e) return {qq, x};
  }
  throw CharacterTableError("no prime q = 1 mod " + std::to_string(e) + " below search cap " +
                            std::to_string(search_cap));
}

CharacterTable::CharacterTable(const ClassData& classes, std::string group_hash, ModulusChoice modulus,
                               std::vector<Character> characters)
    : group_order_(classes.group_order()),
      exponent_(classes.exponent()),
      group_hash_(std::move(group_hash)),
      modulus_(modulus),
      characters_(std::move(characters)) {
  for (std::size_t j = 0; j < classes.count(); ++j)
    classes_.push_back({classes[j].size(), classes[j].element_order, classes.inverse_class(j)});
}

void CharacterTable::sort_rows() {
  std::stable_sort(characters_.begin(), characters_.end(), [](const Character& a, const Character& b) {
    bool ta = is_trivial_row(a), tb = is_trivial_row(b);
    if (ta != tb) return ta;
    if (a.degree != b.degree) return a.degree < b.degree;
    for (std::size_t j = 0; j < a.values.size(); ++j) {
      if (a.values[j].lex_less(b.values[j])) return true;
      if (b.values[j].lex_less(a.values[j])) return false;
    }
    return false;
  });
}

CharacterTable dixon_schneider(const FiniteGroup& group, const ClassData& classes, const StructureConstants& sc) {
  const std::size_t k = classes.count();
  const std::uint32_t e = classes.exponent();
  const std::uint64_t order = classes.group_order();
  const ModulusChoice modulus = choose_modulus(e, order);
  const std::uint32_t q = modulus.q;

  modq::Matrix identity(k, k);
  for (std::size_t j = 0; j < k; ++j) identity.at(j, j) = 1;
  std::vector<Eigenspace> spaces{make_space(std::move(identity), q)};

  auto all_split = [&] {
    return std::all_of(spaces.begin(), spaces.end(), [](const Eigenspace& s) { return s.basis.rows == 1; });
  };
  for (std::size_t i = 1; i < k && !all_split(); ++i) {
    const modq::Matrix mi = class_matrix(sc, i, q);
    std::vector<Eigenspace> next;
    for (const auto& space : spaces) {
      if (space.basis.rows == 1) {
        next.push_back(space);
        continue;
      }
      for (auto& part : split(space, mi, q)) next.push_back(std::move(part));
    }
    spaces = std::move(next);
  }
  if (!all_split() || spaces.size() != k)
    throw CharacterTableError("class matrices did not separate the characters modulo " + std::to_string(q));

  std::vector<std::uint32_t> size_inv(k);
  for (std::size_t j = 0; j < k; ++j) size_inv[j] = modq::inv(modq::reduce(classes[j].size(), q), q);
  const std::uint64_t max_degree = [&] {
    std::uint64_t r = 1;
    while ((r + 1) * (r + 1) <= order) ++r;
    return r;
  }();

  // Per element order o: twiddle[o][l * o + s] = mu^(-l s) with mu = lambda^(e/o).
  std::vector<std::vector<std::uint32_t>> twiddle(e + 1);
  for (std::size_t j = 0; j < k; ++j) {
    const std::uint32_t o = classes[j].element_order;
    if (!twiddle[o].empty()) continue;
    const std::uint32_t mu_inv = modq::inv(modq::pow(modulus.lambda, e / o, q), q);
    twiddle[o].resize(std::size_t{o} * o);
    for (std::uint32_t l = 0; l < o; ++l) {
      const std::uint32_t step = modq::pow(mu_inv, l, q);
      std::uint32_t x = 1;
      for (std::uint32_t s_ = 0; s_ < o; ++s_) {
        twiddle[o][std::size_t{l} * o + s_] = x;
        x = modq::mul(x, step, q);
      }
    }
  }

  std::vector<Character> characters;
  for (const auto& space : spaces) {
    const std::uint32_t* v = space.basis.row(0);
    if (v[0] == 0) throw CharacterTableError("eigenvector vanishes on the identity class");
    const std::uint32_t norm = modq::inv(v[0], q);
    std::vector<std::uint32_t> omega(k);
    for (std::size_t j = 0; j < k; ++j) omega[j] = modq::mul(v[j], norm, q);

    // |G| / chi(1)^2 = sum_j omega_j omega_{j*} / |K_j|
    std::uint32_t s = 0;
    for (std::size_t j = 0; j < k; ++j)
      s = modq::add(s, modq::mul(modq::mul(omega[j], omega[classes.inverse_class(j)], q), size_inv[j], q), q);
    if (s == 0) throw CharacterTableError("degenerate degree equation modulo " + std::to_string(q));
    const std::uint32_t target = modq::mul(modq::reduce(order, q), modq::inv(s, q), q);
    std::uint64_t degree = 0;
    for (std::uint64_t d = 1; d <= max_degree; ++d)
      if (order % d == 0 && modq::reduce(d * d, q) == target) {
        degree = d;
        break;
      }
    if (degree == 0) throw CharacterTableError("no admissible degree modulo " + std::to_string(q));

    std::vector<std::uint32_t> chi_mod(k);
    for (std::size_t j = 0; j < k; ++j)
      chi_mod[j] = modq::mul(modq::mul(omega[j], modq::reduce(degree, q), q), size_inv[j], q);

    Character chi;
    chi.degree = degree;
    std::vector<std::uint32_t> powers;
    for (std::size_t j = 0; j < k; ++j) {
      // Eigenvalue multiplicities of rho(g): m_l = (1/o) sum_s chi(g^s) mu^(-ls), mu = lambda^(e/o).
      const std::uint32_t o = classes[j].element_order;
      const std::uint32_t stride = e / o;
      const std::uint32_t o_inv = modq::inv(o % q, q);
      powers.resize(o);
      for (std::uint32_t s_ = 0; s_ < o; ++s_) powers[s_] = chi_mod[classes.power_class(j, s_)];
      std::vector<Integer> raw(e, 0);
      std::uint64_t total = 0;
      for (std::uint32_t l = 0; l < o; ++l) {
        const std::uint32_t acc = simd::dot_mod(powers, std::span(twiddle[o].data() + std::size_t{l} * o, o), q);
        const std::uint32_t m = modq::mul(acc, o_inv, q);
        raw[std::size_t{l} * stride] = m;
        total += m;
      }
      if (total != degree)
        throw CharacterTableError("eigenvalue multiplicities do not sum to the degree on class " + std::to_string(j));
      chi.values.push_back(CycInt::reduce(e, raw));
    }
    characters.push_back(std::move(chi));
  }

  CharacterTable table(classes, group.hash(), modulus, std::move(characters));
  table.sort_rows();
  auto check = verify_table(table, sc);
  if (!check.ok)
    throw CharacterTableError("computed table failed " + check.failed_check + ": " + check.detail);
  return table;
}

CharacterTable abelian_character_table(const FiniteGroup& group, const ClassData& classes) {
  if (!group.is_abelian()) throw CharacterTableError("abelian construction requires an abelian group");
  const std::size_t n = group.order();
  const std::uint32_t e = classes.exponent();

  // Extend characters of H = <g_1, ..., g_r> one cyclic step at a time; values stored as exponents of zeta_e.
  std::vector<Elem> members{0};
  std::vector<bool> in_h(n, false);
  in_h[0] = true;
  std::vector<std::vector<std::uint32_t>> chars{std::vector<std::uint32_t>(n, 0)};
  for (Elem g = 1; g < n; ++g) {
    if (in_h[g]) continue;
    std::uint32_t m = 1;
    Elem gm = g;
    while (!in_h[gm]) {
      gm = group.mul(gm, g);
      ++m;
    }
    std::vector<Elem> extended;
    for (std::uint32_t i = 0; i < m; ++i) {
      Elem gi = group.power(g, i);
      for (Elem h : members) extended.push_back(group.mul(h, gi));
    }
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& chi : chars) {
      const std::uint32_t a = chi[gm];
      if (a % m != 0) throw CharacterTableError("abelian extension step is inconsistent");
      for (std::uint32_t t = 0; t < m; ++t) {
        const std::uint64_t b = a / m + std::uint64_t{t} * (e / m);
        auto ext = chi;
        for (std::uint32_t i = 0; i < m; ++i) {
          Elem gi = group.power(g, i);
          for (Elem h : members) ext[group.mul(h, gi)] = static_cast<std::uint32_t>((chi[h] + i * b) % e);
        }
        next.push_back(std::move(ext));
      }
    }
    chars = std::move(next);
    members = std::move(extended);
    for (Elem x : members) in_h[x] = true;
  }

  std::vector<Character> rows;
  for (const auto& chi : chars) {
    Character c;
    c.degree = 1;
    for (std::size_t j = 0; j < classes.count(); ++j)
      c.values.push_back(CycInt::root_power(e, chi[classes[j].representative]));
    rows.push_back(std::move(c));
  }
  CharacterTable table(classes, group.hash(), choose_modulus(e, n), std::move(rows));
  table.sort_rows();
  return table;
}

TableVerification verify_table(const CharacterTable& table, const StructureConstants& sc) {
  const auto& cls = table.classes();
  const std::size_t k = cls.size();
  const std::size_t r = table.size();
  const std::uint32_t e = table.exponent();
  const Integer order = table.group_order();
  auto fail = [](std::string check, std::string detail) { return TableVerification{false, std::move(check), std::move(detail)}; };

  if (r != k) return fail("shape", std::to_string(r) + " characters for " + std::to_string(k) + " classes");
  if (sc.class_count() != k) return fail("shape", "structure constants have a different class count");
  for (std::size_t c = 0; c < r; ++c) {
    if (table[c].values.size() != k) return fail("shape", "row " + std::to_string(c) + " has the wrong length");
    for (const auto& v : table[c].values)
      if (v.modulus() != e) return fail("shape", "row " + std::to_string(c) + " uses a different modulus");
  }
  if (r == 0 || !is_trivial_row(table[0])) return fail("trivial_row", "row 0 is not the trivial character");

  Integer degree_sum = 0;
  for (std::size_t c = 0; c < r; ++c) {
    const auto d = table[c].degree;
    if (d == 0 || table.group_order() % d != 0)
      return fail("degree_divides_order", "row " + std::to_string(c) + " degree " + std::to_string(d));
    if (table[c].values[0] != CycInt::from_integer(e, d))
      return fail("degree_column", "row " + std::to_string(c) + " identity value differs from degree");
    degree_sum += Integer(d) * d;
  }
  if (degree_sum != order) return fail("degree_sum", "sum of squared degrees is " + degree_sum.str());

  std::vector<std::vector<CycInt>> conj(r);
  for (std::size_t c = 0; c < r; ++c)
    for (std::size_t j = 0; j < k; ++j) conj[c].push_back(table[c].values[j].conj());

  for (std::size_t c = 0; c < r; ++c)
    for (std::size_t j = 0; j < k; ++j)
      if (conj[c][j] != table[c].values[cls[j].inverse_class])
        return fail("inverse_conjugation", "character " + std::to_string(c) + ", class " + std::to_string(j));

  std::vector<std::vector<CycInt>> omega(r);
  for (std::size_t c = 0; c < r; ++c)
    for (std::size_t j = 0; j < k; ++j) {
      CycInt scaled = table[c].values[j] * Integer(cls[j].size);
      try {
        omega[c].push_back(scaled.exact_div(table[c].degree));
      } catch (const CyclotomicError&) {
        return fail("central_character_integrality", "character " + std::to_string(c) + ", class " + std::to_string(j));
      }
    }

  // The remaining identities are cubic in the table size; they are checked
  // exactly through modular images, with enough primes to cover the largest
  // coordinate any of the sums can reach.
  std::vector<std::vector<Integer>> norm(r), conj_norm(r), omega_norm(r);
  for (std::size_t c = 0; c < r; ++c)
    for (std::size_t j = 0; j < k; ++j) {
      norm[c].push_back(detail::l1_norm(table[c].values[j]));
      conj_norm[c].push_back(detail::l1_norm(conj[c][j]));
      omega_norm[c].push_back(detail::l1_norm(omega[c][j]));
    }
  Integer first = 0, second = 0, widest = 0, largest_class = 0;
  for (std::size_t j = 0; j < k; ++j) {
    Integer na = 0, nb = 0;
    for (std::size_t c = 0; c < r; ++c) {
      na = std::max(na, norm[c][j]);
      nb = std::max(nb, conj_norm[c][j]);
    }
    first += Integer(cls[j].size) * na * nb;
    largest_class = std::max(largest_class, Integer(cls[j].size));
  }
  for (std::size_t c = 0; c < r; ++c) {
    second += *std::max_element(norm[c].begin(), norm[c].end()) *
              *std::max_element(conj_norm[c].begin(), conj_norm[c].end());
    widest = std::max(widest, *std::max_element(omega_norm[c].begin(), omega_norm[c].end()));
  }
  const Integer growth = detail::reduction_growth(e);
  const Integer bound = std::max({Integer(growth * first + order), Integer(growth * second + order),
                                  Integer(growth * (widest * widest + largest_class * largest_class * widest))});

  auto exact_first = [&](std::size_t a, std::size_t b) {
    CycInt sum(e);
    for (std::size_t j = 0; j < k; ++j) sum += table[a].values[j] * conj[b][j] * Integer(cls[j].size);
    return sum.to_string();
  };
  auto exact_second = [&](std::size_t i, std::size_t j) {
    CycInt sum(e);
    for (std::size_t c = 0; c < r; ++c) sum += table[c].values[i] * conj[c][j];
    return sum.to_string();
  };

  for (const std::uint32_t ell : detail::embedding_primes(e, bound)) {
    const detail::ModularEmbedding embedding(e, ell);
    const std::size_t phi = embedding.count();
    // images[(c * k + j) * phi + t]
    std::vector<std::uint32_t> images(r * k * phi), omega_images(r * k * phi);
    for (std::size_t c = 0; c < r; ++c)
      for (std::size_t j = 0; j < k; ++j) {
        embedding.images(table[c].values[j], &images[(c * k + j) * phi]);
        embedding.images(omega[c][j], &omega_images[(c * k + j) * phi]);
      }
    const std::uint32_t order_mod = modq::reduce(table.group_order(), ell);

    // by_char[(t * r + c) * k + j] and by_class[(t * k + j) * r + c]
    std::vector<std::uint32_t> by_char(phi * r * k), by_class(phi * k * r);
    for (std::size_t c = 0; c < r; ++c)
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t t = 0; t < phi; ++t) {
          const std::uint32_t v = images[(c * k + j) * phi + t];
          by_char[(t * r + c) * k + j] = v;
          by_class[(t * k + j) * r + c] = v;
        }

    std::vector<std::uint32_t> weighted(k);
    for (std::size_t t = 0; t < phi; ++t) {
      const std::size_t tc = embedding.conjugate_index(t);
      for (std::size_t a = 0; a < r; ++a) {
        for (std::size_t j = 0; j < k; ++j)
          weighted[j] = modq::mul(by_char[(t * r + a) * k + j], modq::reduce(cls[j].size, ell), ell);
        for (std::size_t b = a; b < r; ++b) {
          const std::uint32_t s = simd::dot_mod(weighted, std::span(&by_char[(tc * r + b) * k], k), ell);
          if (s != (a == b ? order_mod : 0))
            return fail("first_orthogonality", "characters " + pair_str(a, b) + " give " + exact_first(a, b));
        }
      }
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
          const std::uint32_t s = simd::dot_mod(std::span(&by_class[(t * k + i) * r], r),
                                                std::span(&by_class[(tc * k + j) * r], r), ell);
          const std::uint32_t expected = i == j ? modq::reduce(table.group_order() / cls[i].size, ell) : 0;
          if (s != expected)
            return fail("second_orthogonality", "classes " + pair_str(i, j) + " give " + exact_second(i, j));
        }
    }

    std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> nonzero(k * k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i; j < k; ++j) {
        auto row = sc.row(i, j);
        for (std::size_t l = 0; l < k; ++l)
          if (row[l] != 0) nonzero[i * k + j].emplace_back(l, modq::reduce(row[l], ell));
      }
    std::vector<std::uint32_t> acc(phi);
    for (std::size_t c = 0; c < r; ++c)
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
          std::fill(acc.begin(), acc.end(), 0);
          for (const auto& [l, a] : nonzero[i * k + j])
            simd::axpy_mod(acc, std::span(&omega_images[(c * k + l) * phi], phi), a, ell);
          const std::uint32_t* wi = &omega_images[(c * k + i) * phi];
          const std::uint32_t* wj = &omega_images[(c * k + j) * phi];
          for (std::size_t t = 0; t < phi; ++t)
            if (modq::mul(wi[t], wj[t], ell) != acc[t])
              return fail("central_multiplicativity",
                          "character " + std::to_string(c) + ", classes " + pair_str(i, j));
        }
  }
  return {};
}

nlohmann::ordered_json cycint_to_json(const CycInt& value) {
  nlohmann::ordered_json j;
  j["e"] = value.modulus();
  auto coeffs = nlohmann::ordered_json::array();
  for (const auto& c : value.coordinates()) coeffs.push_back(c.str());
  j["coeffs"] = std::move(coeffs);
  return j;
}

CycInt cycint_from_json(const nlohmann::json& j) {
  try {
    const auto e = j.at("e").get<unsigned>();
    std::vector<Integer> coeffs;
    for (const auto& c : j.at("coeffs")) {
      const auto text = c.get<std::string>();
      if (text.empty() || text.find_first_not_of("-0123456789") != std::string::npos || text.find('-', 1) != std::string::npos)
        throw CyclotomicError("malformed integer string '" + text + "'");
      coeffs.emplace_back(text);
    }
    return CycInt::from_coordinates(e, std::move(coeffs));
  } catch (const nlohmann::json::exception& ex) {
    throw CyclotomicError(std::string("malformed cyclotomic value: ") + ex.what());
  }
}

nlohmann::ordered_json table_to_json(const CharacterTable& table) {
  nlohmann::ordered_json j;
  j["group_hash"] = table.group_hash();
  j["e"] = table.exponent();
  j["q"] = table.modulus().q;
  j["lambda"] = table.modulus().lambda;
  auto classes = nlohmann::ordered_json::array();
  for (const auto& c : table.classes()) classes.push_back({{"rep_order", c.element_order}, {"size", c.size}});
  j["classes"] = std::move(classes);
  auto rows = nlohmann::ordered_json::array();
  for (const auto& chi : table.characters()) {
    nlohmann::ordered_json row;
    row["degree"] = chi.degree;
    auto values = nlohmann::ordered_json::array();
    for (const auto& v : chi.values) values.push_back(cycint_to_json(v));
    row["values"] = std::move(values);
    rows.push_back(std::move(row));
  }
  j["characters"] = std::move(rows);
  return j;
}

CharacterTable table_from_json(const nlohmann::json& j, const ClassData& classes, const StructureConstants& sc,
                               const std::string& group_hash) {
  std::vector<Character> rows;
  ModulusChoice modulus{0, 0};
  try {
    if (j.contains("group_hash")) {
      const auto hash = j.at("group_hash").get<std::string>();
      if (!hash.empty() && hash != group_hash)
        throw CharacterTableError("table belongs to a different group (hash " + hash + ")");
    }
    const auto e = j.at("e").get<std::uint32_t>();
    if (e != classes.exponent())
      throw CharacterTableError("table exponent " + std::to_string(e) + " differs from group exponent " +
                                std::to_string(classes.exponent()));
    if (j.contains("q")) modulus.q = j.at("q").get<std::uint32_t>();
    if (j.contains("lambda")) modulus.lambda = j.at("lambda").get<std::uint32_t>();
    const auto& cls = j.at("classes");
    if (cls.size() != classes.count())
      throw CharacterTableError("table has " + std::to_string(cls.size()) + " classes, group has " +
                                std::to_string(classes.count()));
    for (std::size_t c = 0; c < cls.size(); ++c) {
      if (cls[c].at("size").get<std::uint64_t>() != classes[c].size() ||
          cls[c].at("rep_order").get<std::uint32_t>() != classes[c].element_order)
        throw CharacterTableError("class " + std::to_string(c) + " does not match the group");
    }
    for (const auto& row : j.at("characters")) {
      Character chi;
      chi.degree = row.at("degree").get<std::uint64_t>();
      for (const auto& v : row.at("values")) {
        chi.values.push_back(cycint_from_json(v));
        if (chi.values.back().modulus() != e) throw CharacterTableError("value modulus differs from table exponent");
      }
      rows.push_back(std::move(chi));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw CharacterTableError(std::string("character table schema mismatch: ") + ex.what());
  } catch (const CyclotomicError& ex) {
    throw CharacterTableError(std::string("character table schema mismatch: ") + ex.what());
  }
  CharacterTable table(classes, group_hash, modulus, std::move(rows));
  table.sort_rows();
  auto check = verify_table(table, sc);
  if (!check.ok) throw CharacterTableError("imported table failed " + check.failed_check + ": " + check.detail);
  return table;
}

}  // namespace pblocks
