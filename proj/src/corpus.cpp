#include "centra/corpus.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "centra/arith.hpp"
#include "centra/homomorphism.hpp"

namespace centra {

namespace {

// F_q with elements 0..q-1.  Prime fields use residues; q in {4, 8, 9} use
// base-p digit vectors as polynomial coefficients (digit i = coefficient of
// x^i) modulo a fixed irreducible: x^2+x+1, x^3+x+1, x^2+2x+2 respectively.
// Each of those reduces as x^k = x + 1.
class GaloisField {
public:
  explicit GaloisField(uint32_t q) : q_(q) {
    auto f = factorize(q);
    if (q < 2 || f.size() != 1)
      throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    p_ = static_cast<uint32_t>(f[0].first);
    k_ = static_cast<uint32_t>(f[0].second);
    if (k_ > 1 && q != 4 && q != 8 && q != 9)
      throw std::invalid_argument("no irreducible fixed for field size " +
                                  std::to_string(q));
    add_.resize(q * q);
    mul_.resize(q * q);
    for (uint32_t a = 0; a < q; ++a)
      for (uint32_t b = 0; b < q; ++b) {
        add_[a * q + b] = add_slow(a, b);
        mul_[a * q + b] = mul_slow(a, b);
      }
  }

  uint32_t q() const { return q_; }
  uint32_t add(uint32_t a, uint32_t b) const { return add_[a * q_ + b]; }
  uint32_t mul(uint32_t a, uint32_t b) const { return mul_[a * q_ + b]; }

  uint32_t inv(uint32_t a) const {
    for (uint32_t b = 1; b < q_; ++b)
      if (mul(a, b) == 1) return b;
    throw std::invalid_argument("no inverse of 0");
  }

  // Generator of the multiplicative group.
  uint32_t primitive() const {
    for (uint32_t g = 1; g < q_; ++g) {
      uint32_t t = g, steps = 1;
      while (t != 1) {
        t = mul(t, g);
        ++steps;
      }
      if (steps == q_ - 1) return g;
    }
    throw std::logic_error("no primitive element");
  }

private:
  uint32_t add_slow(uint32_t a, uint32_t b) const {
    uint32_t out = 0, pow = 1;
    for (uint32_t i = 0; i < k_; ++i) {
      out += ((a % p_ + b % p_) % p_) * pow;
      a /= p_;
      b /= p_;
      pow *= p_;
    }
    return out;
  }

  uint32_t mul_slow(uint32_t a, uint32_t b) const {
    if (k_ == 1) return (a * b) % p_;
    uint32_t da[3] = {0, 0, 0}, db[3] = {0, 0, 0}, conv[5] = {0, 0, 0, 0, 0};
    for (uint32_t i = 0; i < k_; ++i, a /= p_, b /= p_) {
      da[i] = a % p_;
      db[i] = b % p_;
    }
    for (uint32_t i = 0; i < k_; ++i)
      for (uint32_t j = 0; j < k_; ++j)
        conv[i + j] = (conv[i + j] + da[i] * db[j]) % p_;
    for (uint32_t d = 2 * k_ - 2; d >= k_; --d) {
      uint32_t c = conv[d];
      if (c == 0) continue;
      conv[d] = 0;
      // x^k = x + 1 for every supported irreducible.
      conv[d - k_ + 1] = (conv[d - k_ + 1] + c) % p_;
      conv[d - k_] = (conv[d - k_] + c) % p_;
    }
    uint32_t out = 0, pow = 1;
    for (uint32_t i = 0; i < k_; ++i, pow *= p_) out += conv[i] * pow;
    return out;
  }

  uint32_t q_, p_ = 0, k_ = 0;
  std::vector<uint32_t> add_, mul_;
};

using Mat = std::vector<uint32_t>;  // n*n row-major

Mat identity_mat(uint32_t n) {
  Mat m(n * n, 0);
  for (uint32_t i = 0; i < n; ++i) m[i * n + i] = 1;
  return m;
}

Mat transvection(uint32_t n, uint32_t i, uint32_t j, uint32_t lambda) {
  Mat m = identity_mat(n);
  m[i * n + j] = lambda;
  return m;
}

void decode(uint32_t value, uint32_t q, uint32_t n, std::vector<uint32_t>& v) {
  for (uint32_t i = n; i-- > 0;) {
    v[i] = value % q;
    value /= q;
  }
}

uint32_t encode(uint32_t q, const std::vector<uint32_t>& v) {
  uint32_t value = 0;
  for (uint32_t c : v) value = value * q + c;
  return value;
}

// Row vector times matrix.
void apply_mat(const GaloisField& F, uint32_t n, const Mat& m,
               const std::vector<uint32_t>& v, std::vector<uint32_t>& w) {
  for (uint32_t j = 0; j < n; ++j) {
    uint32_t s = 0;
    for (uint32_t i = 0; i < n; ++i) s = F.add(s, F.mul(v[i], m[i * n + j]));
    w[j] = s;
  }
}

// Action on the q^n - 1 nonzero vectors, numbered big-endian minus one.
Permutation vector_perm(const GaloisField& F, uint32_t n, const Mat& m) {
  uint32_t q = F.q();
  uint32_t total = static_cast<uint32_t>(ipow(q, static_cast<int>(n)));
  std::vector<uint32_t> img(total - 1), v(n), w(n);
  for (uint32_t value = 1; value < total; ++value) {
    decode(value, q, n, v);
    apply_mat(F, n, m, v, w);
    img[value - 1] = encode(q, w) - 1;
  }
  return Permutation(img);
}

// Projective points: nonzero vectors with first nonzero coordinate 1, in
// ascending big-endian order.
struct ProjectiveSpace {
  uint32_t n, total;
  std::vector<int32_t> point_of;   // value -> point, -1 off the section
  std::vector<uint32_t> value_of;  // point -> value

  ProjectiveSpace(const GaloisField& F, uint32_t n_) : n(n_) {
    uint32_t q = F.q();
    total = static_cast<uint32_t>(ipow(q, static_cast<int>(n)));
    point_of.assign(total, -1);
    std::vector<uint32_t> v(n);
    for (uint32_t value = 1; value < total; ++value) {
      decode(value, q, n, v);
      uint32_t lead = 0;
      while (v[lead] == 0) ++lead;
      if (v[lead] != 1) continue;
      point_of[value] = static_cast<int32_t>(value_of.size());
      value_of.push_back(value);
    }
  }

  Permutation perm(const GaloisField& F, const Mat& m) const {
    uint32_t q = F.q();
    std::vector<uint32_t> img(value_of.size()), v(n), w(n);
    for (size_t pt = 0; pt < value_of.size(); ++pt) {
      decode(value_of[pt], q, n, v);
      apply_mat(F, n, m, v, w);
      uint32_t lead = 0;
      while (w[lead] == 0) ++lead;
      uint32_t scale = F.inv(w[lead]);
      for (uint32_t j = 0; j < n; ++j) w[j] = F.mul(w[j], scale);
      img[pt] = static_cast<uint32_t>(point_of[encode(q, w)]);
    }
    return Permutation(img);
  }
};

uint64_t gl_order(uint32_t n, uint32_t q) {
  uint64_t qn = ipow(q, static_cast<int>(n)), out = 1;
  for (uint32_t i = 0; i < n; ++i) {
    uint64_t term = qn - ipow(q, static_cast<int>(i));
    if (out > std::numeric_limits<uint64_t>::max() / term)
      throw std::invalid_argument("group order exceeds 64 bits");
    out *= term;
  }
  return out;
}

// All transvections E_ij(a^t) over a basis 1, a, ..., a^(k-1) of F_q.
std::vector<Mat> sl_generator_mats(const GaloisField& F, uint32_t n) {
  uint32_t alpha = F.primitive();
  uint32_t k = static_cast<uint32_t>(factorize(F.q())[0].second);
  std::vector<Mat> out;
  uint32_t lambda = 1;
  for (uint32_t t = 0; t < k; ++t, lambda = F.mul(lambda, alpha))
    for (uint32_t i = 0; i < n; ++i)
      for (uint32_t j = 0; j < n; ++j)
        if (i != j) out.push_back(transvection(n, i, j, lambda));
  return out;
}

void check_params(uint32_t n, uint32_t q) {
  if (n < 2) throw std::invalid_argument("matrix groups need dimension >= 2");
  if (ipow(q, static_cast<int>(n)) > 100000)
    throw std::invalid_argument("q^n too large for a permutation action");
}

}  // namespace

Group make_symmetric(uint32_t n) {
  if (n == 0) throw std::invalid_argument("symmetric group needs n >= 1");
  if (n == 1) return Group(1);
  std::vector<uint32_t> cyc(n), swp(n);
  for (uint32_t i = 0; i < n; ++i) {
    cyc[i] = (i + 1) % n;
    swp[i] = i;
  }
  swp[0] = 1;
  swp[1] = 0;
  return Group(n, {Permutation(cyc), Permutation(swp)});
}

Group make_alternating(uint32_t n) {
  if (n == 0) throw std::invalid_argument("alternating group needs n >= 1");
  if (n < 3) return Group(n);
  std::vector<uint32_t> three(n), rest(n);
  for (uint32_t i = 0; i < n; ++i) three[i] = rest[i] = i;
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  if (n % 2 == 1) {
    for (uint32_t i = 2; i < n; ++i) rest[i] = 2 + (i - 1) % (n - 2);
  } else {
    for (uint32_t i = 1; i < n; ++i) rest[i] = 1 + i % (n - 1);
  }
  return Group(n, {Permutation(three), Permutation(rest)});
}

Group make_cyclic(uint32_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group needs n >= 1");
  if (n == 1) return Group(1);
  std::vector<uint32_t> cyc(n);
  for (uint32_t i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  return Group(n, {Permutation(cyc)});
}

Group make_dihedral(uint32_t n) {
  if (n < 3) throw std::invalid_argument("dihedral action needs n >= 3");
  std::vector<uint32_t> rot(n), flip(n);
  for (uint32_t i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    flip[i] = (n - i) % n;
  }
  return Group(n, {Permutation(rot), Permutation(flip)});
}

Group make_elementary_abelian(uint64_t p, uint32_t k) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (k == 0 || p * k > 100000)
    throw std::invalid_argument("rank out of range");
  uint32_t cycle = static_cast<uint32_t>(p);
  uint32_t degree = cycle * k;
  std::vector<Permutation> gens;
  for (uint32_t j = 0; j < k; ++j) {
    std::vector<uint32_t> img(degree);
    for (uint32_t i = 0; i < degree; ++i) img[i] = i;
    for (uint32_t i = 0; i < cycle; ++i)
      img[j * cycle + i] = j * cycle + (i + 1) % cycle;
    gens.emplace_back(img);
  }
  return Group(degree, std::move(gens));
}

Group make_gl(uint32_t n, uint32_t q) {
  check_params(n, q);
  GaloisField F(q);
  std::vector<Mat> mats = sl_generator_mats(F, n);
  if (q > 2) {
    Mat d = identity_mat(n);
    d[0] = F.primitive();
    mats.push_back(std::move(d));
  }
  std::vector<Permutation> gens;
  for (const Mat& m : mats) gens.push_back(vector_perm(F, n, m));
  Group g(static_cast<uint32_t>(ipow(q, static_cast<int>(n))) - 1, std::move(gens));
  if (g.order() != gl_order(n, q))
    throw std::logic_error("GL construction has wrong order");
  return g;
}

Group make_sl(uint32_t n, uint32_t q) {
  check_params(n, q);
  GaloisField F(q);
  std::vector<Permutation> gens;
  for (const Mat& m : sl_generator_mats(F, n)) gens.push_back(vector_perm(F, n, m));
  Group g(static_cast<uint32_t>(ipow(q, static_cast<int>(n))) - 1, std::move(gens));
  if (g.order() != gl_order(n, q) / (q - 1))
    throw std::logic_error("SL construction has wrong order");
  return g;
}

Group make_psl(uint32_t n, uint32_t q) {
  check_params(n, q);
  GaloisField F(q);
  ProjectiveSpace space(F, n);
  std::vector<Permutation> gens;
  for (const Mat& m : sl_generator_mats(F, n)) gens.push_back(space.perm(F, m));
  Group g(static_cast<uint32_t>(space.value_of.size()), std::move(gens));
  uint64_t want = gl_order(n, q) / (q - 1) / std::gcd<uint64_t>(n, q - 1);
  if (g.order() != want) throw std::logic_error("PSL construction has wrong order");
  return g;
}

Group make_m11() {
  Group g(11, {Permutation::parse_cycles(11, "(1 2 3 4 5 6 7 8 9 10 11)"),
               Permutation::parse_cycles(11, "(3 7 11 8)(4 10 5 6)")});
  if (g.order() != 7920) throw std::logic_error("M11 construction has wrong order");
  return g;
}

Group regular_representation(const Group& q, const Caps& caps) {
  const auto& elems = q.elements(caps);
  uint32_t n = static_cast<uint32_t>(elems.size());
  std::vector<Permutation> gens;
  for (const Permutation& g : q.generators()) {
    std::vector<uint32_t> img(n);
    for (uint32_t i = 0; i < n; ++i) img[i] = q.element_index(elems[i] * g, caps);
    gens.emplace_back(img);
  }
  return Group(n, std::move(gens));
}

Permutation automorphism_permutation(const Group& q,
                                     const std::vector<Permutation>& images,
                                     const Caps& caps) {
  Homomorphism h(q, q, images);  // validates the homomorphism property
  if (h.image().order() != q.order())
    throw std::invalid_argument("generator images do not define an automorphism");
  const auto& elems = q.elements(caps);
  std::vector<uint32_t> img(elems.size());
  for (size_t i = 0; i < elems.size(); ++i)
    img[i] = q.element_index(h.apply(elems[i]), caps);
  return Permutation(img);
}

Group make_affine_action(const Group& e, const Group& q, const Caps& caps) {
  if (e.degree() != q.degree())
    throw std::invalid_argument("E and Q act on different domains");
  uint32_t degree = q.degree();
  if (q.order() != degree)
    throw std::invalid_argument("Q is not regular: order differs from degree");
  std::vector<char> seen(degree, 0);
  std::vector<uint32_t> queue{0};
  seen[0] = 1;
  for (size_t at = 0; at < queue.size(); ++at)
    for (const Permutation& w : q.generators()) {
      uint32_t next = w[queue[at]];
      if (!seen[next]) {
        seen[next] = 1;
        queue.push_back(next);
      }
    }
  if (queue.size() != degree)
    throw std::invalid_argument("Q is not regular: action is intransitive");
  for (const Permutation& eg : e.generators())
    for (const Permutation& qg : q.generators())
      if (!q.contains(qg.conjugated_by(eg)))
        throw std::invalid_argument("E does not act on Q by automorphisms");

  std::vector<Permutation> gens = q.generators();
  for (const Permutation& eg : e.generators()) gens.push_back(eg);
  Group g(degree, std::move(gens));
  if (g.order() != q.order() * e.order())
    throw std::invalid_argument("E does not complement Q");
  (void)caps;
  return g;
}

namespace {

Group quaternion8() {
  return Group(8, {Permutation::parse_cycles(8, "(1 2 3 4)(5 8 7 6)"),
                   Permutation::parse_cycles(8, "(1 5 3 7)(2 6 4 8)")});
}

void add(std::vector<CorpusEntry>& out, std::string name, std::string builder,
         Group g, uint64_t order, bool soluble, bool simple) {
  if (g.order() != order)
    throw std::logic_error("corpus entry " + name + ": built order " +
                           std::to_string(g.order()) + ", annotated " +
                           std::to_string(order));
  out.push_back({std::move(name), std::move(builder), std::move(g), order,
                 soluble, simple, {}, {}});
}

// Q ⋊ E from automorphism images of Q's generators, recording the pieces.
void add_affine(std::vector<CorpusEntry>& out, std::string name,
                std::string builder, const Group& q,
                const std::vector<std::vector<Permutation>>& aut_images,
                uint64_t order) {
  Group qreg = regular_representation(q);
  std::vector<Permutation> e_gens;
  for (const auto& images : aut_images)
    e_gens.push_back(automorphism_permutation(q, images));
  Group e(qreg.degree(), e_gens);
  Group g = make_affine_action(e, qreg);
  if (g.order() != order)
    throw std::logic_error("corpus entry " + name + " order mismatch");
  CorpusEntry entry{std::move(name), std::move(builder), std::move(g),
                    order,           true,               false,
                    e_gens,          qreg.generators()};
  out.push_back(std::move(entry));
}

std::vector<CorpusEntry> build_corpus() {
  std::vector<CorpusEntry> out;

  for (uint32_t n = 1; n <= 12; ++n)
    add(out, "C" + std::to_string(n), "cyclic(" + std::to_string(n) + ")",
        make_cyclic(n), n, true, is_prime(n));

  add(out, "2^2", "elementary_abelian(2,2)", make_elementary_abelian(2, 2), 4,
      true, false);
  add(out, "2^3", "elementary_abelian(2,3)", make_elementary_abelian(2, 3), 8,
      true, false);
  add(out, "3^2", "elementary_abelian(3,2)", make_elementary_abelian(3, 2), 9,
      true, false);

  for (uint32_t n : {3, 4, 5, 6, 12})
    add(out, "D" + std::to_string(2 * n), "dihedral(" + std::to_string(n) + ")",
        make_dihedral(n), 2 * n, true, false);

  uint64_t fact = 1;
  for (uint32_t n = 2; n <= 6; ++n) {
    fact *= n;
    add(out, "S" + std::to_string(n), "symmetric(" + std::to_string(n) + ")",
        make_symmetric(n), fact, n <= 4, n == 2);
  }
  fact = 3;
  for (uint32_t n = 3; n <= 7; ++n) {
    add(out, "A" + std::to_string(n), "alternating(" + std::to_string(n) + ")",
        make_alternating(n), fact, n <= 4, n != 4);
    fact *= n + 1;
  }

  add(out, "Q8", "quaternion8", quaternion8(), 8, true, false);
  add(out, "SL2_3", "sl(2,3)", make_sl(2, 3), 24, true, false);
  add(out, "SL2_5", "sl(2,5)", make_sl(2, 5), 120, false, false);
  add(out, "GL2_2", "gl(2,2)", make_gl(2, 2), 6, true, false);
  add(out, "GL2_3", "gl(2,3)", make_gl(2, 3), 48, true, false);
  add(out, "GL3_2", "gl(3,2)", make_gl(3, 2), 168, false, true);

  for (uint32_t q : {4, 5, 7, 8, 9, 11, 13}) {
    uint64_t order = static_cast<uint64_t>(q) * (q * q - 1) / std::gcd(2u, q - 1);
    add(out, "PSL2_" + std::to_string(q), "psl(2," + std::to_string(q) + ")",
        make_psl(2, q), order, false, true);
  }
  add(out, "PSL3_2", "psl(3,2)", make_psl(3, 2), 168, false, true);

  add(out, "S4xA5", "product(symmetric(4), alternating(5))",
      direct_product(make_symmetric(4), make_alternating(5)), 1440, false, false);
  add(out, "SL2_5xC7", "product(sl(2,5), cyclic(7))",
      direct_product(make_sl(2, 5), make_cyclic(7)), 840, false, false);
  add(out, "A5xA5", "product(alternating(5), alternating(5))",
      direct_product(make_alternating(5), make_alternating(5)), 3600, false, false);
  add(out, "A5xC6", "product(alternating(5), cyclic(6))",
      direct_product(make_alternating(5), make_cyclic(6)), 360, false, false);

  {
    Group q = make_cyclic(3);
    Permutation a = q.generators()[0];
    add_affine(out, "3:2", "affine_action(C2, C3)", q, {{a.inverse()}}, 6);
  }
  {
    Group q = make_elementary_abelian(3, 2);
    Permutation a = q.generators()[0], b = q.generators()[1];
    add_affine(out, "3^2:2^2", "affine_action(C2xC2, C3xC3)", q,
               {{a.inverse(), b}, {a, b.inverse()}}, 36);
  }
  {
    Group q = make_elementary_abelian(2, 2);
    Permutation a = q.generators()[0], b = q.generators()[1];
    add_affine(out, "2^2:3", "affine_action(C3, C2xC2)", q, {{b, a * b}}, 12);
  }

  add(out, "M11", "m11", make_m11(), 7920, false, true);
  return out;
}

}  // namespace

const std::vector<CorpusEntry>& corpus_default() {
  static const std::vector<CorpusEntry> corpus = build_corpus();
  return corpus;
}

const CorpusEntry& corpus_entry(const std::string& name) {
  for (const CorpusEntry& entry : corpus_default())
    if (entry.name == name) return entry;
  throw std::out_of_range("no corpus entry named " + name);
}

}  // namespace centra
