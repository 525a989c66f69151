#include "bogo/padic/formal_group.hpp"

#include "bogo/core/integer.hpp"

namespace bogo::padic {

FormalGroup<BigRational> formal_group(const CurveQ& e, int prec) {
  if (!e.is_integral()) throw DomainError("formal group needs an integral model");
  return FormalGroup<BigRational>(e.a(), e.b(), prec);
}

namespace {

LubinTateReport inspect(const std::vector<std::vector<std::uint64_t>>& residues, std::uint64_t p, int prec) {
  LubinTateReport rep;
  rep.p = p;
  rep.q = p * p;
  rep.prec = prec;
  auto is_zero = [](const std::vector<std::uint64_t>& v) {
    for (auto x : v)
      if (x) return false;
    return true;
  };
  rep.low_vanish = true;
  rep.high_vanish = true;
  for (int i = 1; i < prec; ++i) {
    const auto& r = residues[static_cast<std::size_t>(i)];
    if (!is_zero(r) && rep.first_nonzero == 0) rep.first_nonzero = i;
    if (static_cast<std::uint64_t>(i) < rep.q && !is_zero(r)) rep.low_vanish = false;
    if (static_cast<std::uint64_t>(i) > rep.q && !is_zero(r)) rep.high_vanish = false;
  }
  rep.coeff_q = residues[static_cast<std::size_t>(rep.q)];
  bool scalar = true;
  for (std::size_t i = 1; i < rep.coeff_q.size(); ++i) scalar &= rep.coeff_q[i] == 0;
  if (scalar && rep.coeff_q[0] == 1) rep.sign = 1;
  if (scalar && rep.coeff_q[0] == p - 1) rep.sign = -1;
  return rep;
}

void check_prec(std::uint64_t p, int prec) {
  if (p < 5 || !is_prime_u64(p)) throw DomainError("p must be a prime >= 5");
  if (static_cast<std::uint64_t>(prec) < p * p + 1) throw DomainError("precision must reach T^(p^2)");
  if (prec > kMaxSeriesPrecision) throw GuardViolation("series precision must be <= 64");
}

}  // namespace

LubinTateReport lubin_tate_signature(const CurveQ& e, std::uint64_t p, int prec) {
  check_prec(p, prec);
  if (count_points(reduce_mod(e, p)).a_p != 0) throw NotSupersingular("reduction at p is ordinary");
  auto fg = formal_group(e, prec);
  auto mp = fg.multiply(static_cast<long>(p));
  std::vector<std::vector<std::uint64_t>> res;
  for (const auto& c : mp.c) {
    if (c.get_den() != 1) throw Error("non-integral formal group coefficient");
    res.push_back({modp::reduce(c, p)});
  }
  return inspect(res, p, prec);
}

LubinTateReport lubin_tate_signature(const UElem& a, const UElem& b, int prec) {
  const std::uint64_t p = a.ring()->p();
  check_prec(p, prec);
  FormalGroup<UElem> fg(a, b, prec);
  auto mp = fg.multiply(static_cast<long>(p));
  std::vector<std::vector<std::uint64_t>> res;
  for (const auto& c : mp.c) res.push_back(c.residue());
  return inspect(res, p, prec);
}

std::pair<UElem, UElem> twist_by_sqrt(const CurveQ& e, long d, const RingPtr& ring) {
  if (!e.is_integral()) throw DomainError("twist needs an integral model");
  const std::uint64_t p = ring->p();
  const UElem dd = UElem::from_int(ring, d);
  if (!dd.is_unit()) throw DomainError("d must be a unit at p");
  std::uint64_t count = 1;
  for (int i = 0; i < ring->f(); ++i) count *= p;
  for (std::uint64_t idx = 1; idx < count; ++idx) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(ring->f()));
    std::uint64_t rest = idx;
    for (auto& x : c) x = rest % p, rest /= p;
    UElem r0(ring, c);
    if ((r0 * r0 - dd).is_unit()) continue;
    UElem s = sqrt_lift(dd, r0);
    auto lift = [&](const BigRational& x) { return UElem::from_int(ring, mpz_fdiv_ui(x.get_num_mpz_t(), ring->modulus())); };
    return {lift(e.a()) * dd, lift(e.b()) * dd * s};
  }
  throw DomainError("d is not a square in the residue field");
}

}  // namespace bogo::padic
