#include "bogo/gl2/gl2.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "bogo/core/integer.hpp"
#include "bogo/core/modp.hpp"
#include "bogo/core/rng.hpp"

namespace bogo::gl2 {

namespace {

std::uint32_t mod(long long v, std::uint32_t n) {
  long long r = v % static_cast<long long>(n);
  return static_cast<std::uint32_t>(r < 0 ? r + n : r);
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void check_enum_prime(std::uint32_t p) {
  if (p < 5 || !is_prime_u64(p)) throw DomainError("expected a prime p >= 5");
  if (p > kMaxEnumPrime) throw GuardViolation("exhaustive GL2 enumeration is limited to p <= 13");
}

}  // namespace

Mat Mat::make(std::uint32_t n, long long a, long long b, long long c, long long d) {
  return {n, mod(a, n), mod(b, n), mod(c, n), mod(d, n)};
}

std::uint32_t Mat::det() const {
  const std::uint64_t ad = static_cast<std::uint64_t>(a) * d % n, bc = static_cast<std::uint64_t>(b) * c % n;
  return static_cast<std::uint32_t>((ad + n - bc) % n);
}

bool Mat::invertible() const { return std::gcd(det(), n) == 1; }

Mat Mat::inverse() const {
  const std::uint32_t dt = det();
  if (std::gcd(dt, n) != 1) throw DomainError("matrix is not invertible");
  const std::uint32_t di = n == 1 ? 0 : static_cast<std::uint32_t>(modp::inv(dt, n));
  auto s = [&](std::uint32_t v) { return static_cast<std::uint32_t>(static_cast<std::uint64_t>(v) * di % n); };
  return {n, s(d), s((n - b) % n), s((n - c) % n), s(a)};
}

Mat Mat::operator*(const Mat& o) const {
  auto dot = [&](std::uint64_t x, std::uint64_t y, std::uint64_t z, std::uint64_t w) {
    return static_cast<std::uint32_t>((x * y + z * w) % n);
  };
  return {n, dot(a, o.a, b, o.c), dot(a, o.b, b, o.d), dot(c, o.a, d, o.c), dot(c, o.b, d, o.d)};
}

Mat Mat::from_code(std::uint32_t n, std::uint32_t code) {
  Mat m{n, 0, 0, 0, 0};
  m.d = code % n;
  code /= n;
  m.c = code % n;
  code /= n;
  m.b = code % n;
  m.a = code / n;
  return m;
}

Subgroup::Subgroup(std::uint32_t n, std::vector<Mat> generators) : n_(n), gens_(std::move(generators)) {
  if (n < 2 || n > 255) throw DomainError("modulus out of range");
  for (const auto& g : gens_)
    if (g.n != n || !g.invertible()) throw DomainError("generator is not in GL2(Z/N)");
}

Subgroup Subgroup::full(std::uint32_t n) {
  Subgroup s(n, {});
  const std::uint64_t total = ipow(n, 4);
  if (gl2_order(n) > kMaterializeCap) throw GuardViolation("GL2(Z/N) exceeds the materialization cap");
  s.member_.assign(total, false);
  for (std::uint32_t code = 0; code < total; ++code) {
    Mat m = Mat::from_code(n, code);
    if (!m.invertible()) continue;
    s.elems_.push_back(m);
    s.member_[code] = true;
  }
  s.ready_ = true;
  return s;
}

void Subgroup::materialize() const {
  if (ready_) return;
  member_.assign(ipow(n_, 4), false);
  std::deque<Mat> queue;
  Mat id = Mat::identity(n_);
  member_[id.code()] = true;
  elems_.push_back(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Mat x = queue.front();
    queue.pop_front();
    for (const auto& g : gens_) {
      Mat y = x * g;
      if (member_[y.code()]) continue;
      member_[y.code()] = true;
      elems_.push_back(y);
      if (elems_.size() > kMaterializeCap) throw GuardViolation("subgroup exceeds the materialization cap");
      queue.push_back(y);
    }
  }
  ready_ = true;
}

const std::vector<Mat>& Subgroup::elements() const {
  materialize();
  return elems_;
}

bool Subgroup::contains(const Mat& m) const {
  materialize();
  return m.n == n_ && member_[m.code()];
}

std::uint64_t gl2_order(std::uint32_t n) {
  std::uint64_t r = 1;
  for (auto& [q, k] : factor_integer(BigInt(n))) {
    const std::uint64_t p = q.get_ui();
    r *= ipow(p, 4 * (k - 1)) * (p * p - 1) * (p * p - p);
  }
  return r;
}

Mat cartan_embed(std::uint32_t p, std::uint32_t eps, std::uint32_t x, std::uint32_t y) {
  return Mat::make(p, x, static_cast<long long>(eps) * y, y, x);
}

Cartan nonsplit_cartan(std::uint32_t p) {
  check_enum_prime(p);
  const std::uint32_t eps = static_cast<std::uint32_t>(modp::smallest_nonresidue(p));
  const std::uint64_t q1 = static_cast<std::uint64_t>(p) * p - 1;
  const Mat id = Mat::identity(p);
  for (std::uint32_t x = 0; x < p; ++x) {
    for (std::uint32_t y = 1; y < p; ++y) {
      Mat g = cartan_embed(p, eps, x, y), t = g;
      std::uint64_t ord = 1;
      while (t != id) t = t * g, ++ord;
      if (ord != q1) continue;
      Subgroup grp(p, {g});
      if (grp.order() != q1) throw Error("Cartan generator does not generate");
      return Cartan{p, eps, g, std::move(grp)};
    }
  }
  throw Error("no generator of F_q^* found");
}

std::uint64_t normalizer_order(const Cartan& g) {
  check_enum_prime(g.p);
  std::uint64_t count = 0;
  const Subgroup all = Subgroup::full(g.p);
  for (const auto& h : all.elements())
    if (g.group.contains(h * g.generator * h.inverse())) ++count;
  return count;
}

ClosureReport conjugate_closure(const Cartan& g) {
  check_enum_prime(g.p);
  const std::uint32_t p = g.p;
  std::set<std::vector<std::uint32_t>> conj;
  std::vector<Mat> conj_gens;
  std::vector<bool> in_union(ipow(p, 4), false);
  ClosureReport rep;
  const Subgroup all = Subgroup::full(p);
  for (const auto& h : all.elements()) {
    const Mat hi = h.inverse();
    std::vector<std::uint32_t> codes;
    for (const auto& x : g.group.elements()) codes.push_back((h * x * hi).code());
    std::sort(codes.begin(), codes.end());
    if (!conj.insert(codes).second) continue;
    conj_gens.push_back(h * g.generator * hi);
    for (auto c : codes)
      if (!in_union[c]) in_union[c] = true, ++rep.size;
  }
  rep.conjugates = conj.size();
  rep.generated_order = Subgroup(p, conj_gens).order();
  rep.generates = rep.generated_order == gl2_order(p);
  rep.min_intersection = ~0ULL;
  for (auto i = conj.begin(); i != conj.end(); ++i) {
    for (auto j = std::next(i); j != conj.end(); ++j) {
      std::vector<std::uint32_t> both;
      std::set_intersection(i->begin(), i->end(), j->begin(), j->end(), std::back_inserter(both));
      rep.min_intersection = std::min<std::uint64_t>(rep.min_intersection, both.size());
      rep.max_intersection = std::max<std::uint64_t>(rep.max_intersection, both.size());
    }
  }
  if (conj.size() < 2) rep.min_intersection = 0;
  return rep;
}

Mat matrix_log(std::uint32_t p, int n, const Mat& m) {
  if (n < 2) throw DomainError("matrix_log requires n >= 2");
  const std::uint32_t big = static_cast<std::uint32_t>(ipow(p, n)), small = big / p;
  if (m.n != big) throw DomainError("matrix modulus must be p^n");
  if (m.reduce(small) != Mat::identity(small)) throw DomainError("matrix is not in the kernel of reduction mod p^(n-1)");
  auto l = [&](std::uint32_t v, std::uint32_t one) { return ((v + big - one) % big) / small; };
  return {p, l(m.a, 1), l(m.b, 0), l(m.c, 0), l(m.d, 1)};
}

Mat kernel_element(std::uint32_t p, int n, const Mat& a) {
  const std::uint32_t big = static_cast<std::uint32_t>(ipow(p, n)), small = big / p;
  return Mat::make(big, 1 + static_cast<long long>(small) * (a.a % p), static_cast<long long>(small) * (a.b % p),
                   static_cast<long long>(small) * (a.c % p), 1 + static_cast<long long>(small) * (a.d % p));
}

namespace {

Mat add(const Mat& x, const Mat& y) {
  return {x.n, (x.a + y.a) % x.n, (x.b + y.b) % x.n, (x.c + y.c) % x.n, (x.d + y.d) % x.n};
}

}  // namespace

LogCheck log_additivity_exhaustive(std::uint32_t p, int n) {
  std::vector<Mat> kernel;
  for (std::uint32_t code = 0; code < ipow(p, 4); ++code) kernel.push_back(kernel_element(p, n, Mat::from_code(p, code)));
  std::vector<Mat> logs;
  for (const auto& k : kernel) logs.push_back(matrix_log(p, n, k));
  LogCheck out;
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    for (std::size_t j = 0; j < kernel.size(); ++j) {
      ++out.checked;
      if (matrix_log(p, n, kernel[i] * kernel[j]) != add(logs[i], logs[j])) ++out.failures;
    }
  }
  return out;
}

LogCheck log_equivariance_check(std::uint32_t p, int n, std::uint64_t samples, std::uint64_t seed) {
  const std::uint32_t big = static_cast<std::uint32_t>(ipow(p, n));
  Rng rng(seed);
  LogCheck out;
  for (std::uint64_t t = 0; t < samples; ++t) {
    Mat s;
    do {
      s = Mat::make(big, static_cast<long long>(uniform_below(rng, big)), static_cast<long long>(uniform_below(rng, big)),
                    static_cast<long long>(uniform_below(rng, big)), static_cast<long long>(uniform_below(rng, big)));
    } while (!s.invertible());
    Mat a = Mat::from_code(p, static_cast<std::uint32_t>(uniform_below(rng, ipow(p, 4))));
    Mat psi = kernel_element(p, n, a);
    Mat sb = s.reduce(p);
    ++out.checked;
    if (matrix_log(p, n, s * psi * s.inverse()) != sb * matrix_log(p, n, psi) * sb.inverse()) ++out.failures;
  }
  return out;
}

OrbitReport centralizer_orbit_check(const Subgroup& gamma, std::uint32_t p, const Mat& psi) {
  const std::uint32_t n = gamma.modulus();
  if (!is_prime_u64(p) || n % p != 0) throw DomainError("p must be a prime dividing N");
  const std::uint32_t m = n / p;
  if (psi.n != n) throw DomainError("psi has the wrong modulus");
  if (m > 1 && psi.reduce(m) != Mat::identity(m)) throw DomainError("psi is not in the mod-N/p kernel");
  if (!gamma.contains(psi)) throw DomainError("psi is not in Gamma");
  OrbitReport rep;
  rep.p4 = ipow(p, 4);
  for (const auto& g : gamma.elements()) {
    ++rep.gamma_order;
    if (m == 1 || g.reduce(m) == Mat::identity(m)) ++rep.kernel_order;
    if (g * psi == psi * g) ++rep.centralizer_order;
  }
  rep.passed = rep.kernel_order <= rep.p4 && rep.centralizer_order * rep.kernel_order >= rep.gamma_order;
  return rep;
}

Mat random_kernel_element(std::uint32_t n, std::uint32_t p, std::uint64_t seed) {
  if (!is_prime_u64(p) || n % p != 0) throw DomainError("p must be a prime dividing N");
  Rng rng(seed);
  const long long m = n / p;
  auto r = [&]() { return m * static_cast<long long>(uniform_below(rng, p)); };
  return Mat::make(n, 1 + r(), r(), r(), 1 + r());
}

}  // namespace bogo::gl2
