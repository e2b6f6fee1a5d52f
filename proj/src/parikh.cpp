#include "lcaf/parikh.hpp"

#include <algorithm>

#include "lcaf/error.hpp"

namespace lcaf {

void ParikhVector::slide(Symbol out, Symbol in) {
  if (counts_[out - 1] == 0) throw Error(ErrorKind::Underflow, "slide: outgoing symbol count is zero");
  --counts_[out - 1];
  ++counts_[in - 1];
}

void ParikhVector::extend(Symbol in) {
  ++counts_[in - 1];
  ++length_;
}

void ParikhVector::reset(std::size_t sigma) {
  counts_.assign(sigma, 0);
  length_ = 0;
}

void ParikhVector::assign(const ParikhVector& other) {
  counts_.assign(other.counts_.begin(), other.counts_.end());
  length_ = other.length_;
}

void ParikhVector::assign(std::span<const Count> counts, std::size_t length) {
  counts_.assign(counts.begin(), counts.end());
  length_ = length;
}

void parikh_into(ParikhVector& out, const RemappedText& text, std::size_t start, std::size_t length) {
  if (start < 1 || length < 1 || start + length - 1 > text.size())
    throw Error(ErrorKind::OutOfRange, "window exceeds text");
  out.reset(out.sigma());
  for (Symbol s : text.symbols().subspan(start - 1, length)) out.extend(s);
}

ParikhVector parikh_of(const RemappedText& text, std::size_t start, std::size_t length,
                       std::size_t sigma) {
  ParikhVector pv(sigma);
  parikh_into(pv, text, start, length);
  return pv;
}

Order cmp(const ParikhVector& p, const ParikhVector& q) {
  if (p.length() != q.length()) throw Error(ErrorKind::LengthMismatch, "cmp: window lengths differ");
  if (p.sigma() != q.sigma()) throw Error(ErrorKind::LengthMismatch, "cmp: alphabet sizes differ");
  auto pc = p.counts();
  auto qc = q.counts();
  auto [pi, qi] = std::mismatch(pc.begin(), pc.end(), qc.begin());
  if (pi == pc.end()) return Order::Equal;
  return *pi > *qi ? Order::Less : Order::Greater;
}

void DiffSet::rebuild(const ParikhVector& p, const ParikhVector& q) {
  coords_.clear();
  auto pc = p.counts();
  auto qc = q.counts();
  for (std::size_t i = 0; i < pc.size(); ++i) {
    if (pc[i] != qc[i]) coords_.emplace_hint(coords_.end(), static_cast<Symbol>(i + 1));
  }
}

void DiffSet::update(Symbol coord, const ParikhVector& p, const ParikhVector& q) {
  if (p[coord] != q[coord])
    coords_.insert(coord);
  else
    coords_.erase(coord);
}

DiffSet diff_build(const ParikhVector& p, const ParikhVector& q) {
  DiffSet ds;
  ds.rebuild(p, q);
  return ds;
}

void diff_update(DiffSet& ds, Symbol coord, const ParikhVector& p, const ParikhVector& q) {
  ds.update(coord, p, q);
}

Order diff_resolve(const DiffSet& ds, const ParikhVector& p, const ParikhVector& q) {
  return ds.resolve(p, q);
}

}  // namespace lcaf
