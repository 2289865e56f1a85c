#include "arapath/polynomial.hpp"

#include <algorithm>
#include <utility>

namespace arapath {

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (!(a.ring() == b.ring())) {
    throw RingMismatchError("polynomial operands live in different rings");
  }
}

namespace {

void require_in_ring(const Monomial& m, const Ring& ring) {
  if (m.max_var() > ring.nvars()) {
    throw DomainError("variable index " + std::to_string(m.max_var()) +
                      " exceeds ring with " + std::to_string(ring.nvars()) +
                      " variables");
  }
}

}  // namespace

Polynomial Polynomial::constant(const Ring& ring, std::int64_t c) {
  return from_terms(ring, {{c, Monomial()}});
}

Polynomial Polynomial::monomial(const Ring& ring, const Monomial& m,
                                std::int64_t c) {
  return from_terms(ring, {{c, m}});
}

Polynomial Polynomial::from_terms(const Ring& ring,
                                  std::vector<RawTerm> terms) {
  for (const auto& t : terms) require_in_ring(t.mono, ring);
  std::sort(terms.begin(), terms.end(),
            [&](const RawTerm& a, const RawTerm& b) {
              return compare(a.mono, b.mono, ring.order()) ==
                     std::strong_ordering::greater;
            });
  const PrimeField& F = ring.field();
  Polynomial out(ring);
  for (auto& t : terms) {
    std::uint32_t c = F.reduce(t.coeff);
    if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
      out.terms_.back().coeff = F.add(out.terms_.back().coeff, c);
      if (out.terms_.back().coeff == 0) out.terms_.pop_back();
    } else if (c != 0) {
      out.terms_.push_back({c, std::move(t.mono)});
    }
  }
  return out;
}

const Polynomial::Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
  return terms_.front();
}

std::int64_t Polynomial::degree() const {
  std::int64_t d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Polynomial Polynomial::tail() const {
  Polynomial out(ring_);
  if (terms_.size() > 1) {
    out.terms_.assign(terms_.begin() + 1, terms_.end());
  }
  return out;
}

Polynomial Polynomial::scaled(std::uint32_t c) const {
  const PrimeField& F = ring_.field();
  c %= F.characteristic();
  Polynomial out(ring_);
  if (c == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    out.terms_.push_back({F.mul(t.coeff, c), t.mono});
  }
  return out;
}

Polynomial Polynomial::monomial_mul(std::uint32_t c, const Monomial& m) const {
  const PrimeField& F = ring_.field();
  c %= F.characteristic();
  Polynomial out(ring_);
  if (c == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial prod = t.mono * m;
    require_in_ring(prod, ring_);
    out.terms_.push_back({F.mul(t.coeff, c), std::move(prod)});
  }
  return out;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_.field().inv(leading_coeff()));
}

std::uint32_t Polynomial::eval(std::span<const std::uint32_t> point) const {
  if (std::cmp_less(point.size(), ring_.nvars())) {
    throw DomainError("evaluation point has too few coordinates");
  }
  const PrimeField& F = ring_.field();
  std::uint32_t acc = 0;
  for (const auto& t : terms_) {
    std::uint32_t v = t.coeff;
    for (const auto& [var, exp] : t.mono.factors()) {
      v = F.mul(v, F.pow(point[var - 1], static_cast<std::uint64_t>(exp)));
    }
    acc = F.add(acc, v);
  }
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  const Ring& ring = a.ring();
  const PrimeField& F = ring.field();
  Polynomial out(ring);
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin(), ea = a.terms_.end();
  auto ib = b.terms_.begin(), eb = b.terms_.end();
  while (ia != ea && ib != eb) {
    auto cmp = compare(ia->mono, ib->mono, ring.order());
    if (cmp == std::strong_ordering::greater) {
      out.terms_.push_back(*ia++);
    } else if (cmp == std::strong_ordering::less) {
      out.terms_.push_back(*ib++);
    } else {
      std::uint32_t c = F.add(ia->coeff, ib->coeff);
      if (c != 0) out.terms_.push_back({c, ia->mono});
      ++ia;
      ++ib;
    }
  }
  out.terms_.insert(out.terms_.end(), ia, ea);
  out.terms_.insert(out.terms_.end(), ib, eb);
  return out;
}

Polynomial operator-(const Polynomial& a) {
  const PrimeField& F = a.ring().field();
  Polynomial out(a.ring());
  out.terms_.reserve(a.terms_.size());
  for (const auto& t : a.terms_) out.terms_.push_back({F.neg(t.coeff), t.mono});
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + (-b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  std::vector<Polynomial::RawTerm> raw;
  raw.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      raw.push_back({static_cast<std::int64_t>(ta.coeff) * tb.coeff,
                     ta.mono * tb.mono});
    }
  }
  return Polynomial::from_terms(a.ring(), std::move(raw));
}

Polynomial reverse_variables(const Polynomial& f) {
  const std::int32_t n = f.ring().nvars();
  return f.remapped(f.ring(), [n](std::int32_t v) { return n + 1 - v; });
}

}  // namespace arapath
