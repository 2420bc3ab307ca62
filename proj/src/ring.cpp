#include "cellalg/ring.hpp"

#include <cctype>
#include <set>
#include <stdexcept>

namespace cellalg {

namespace {

// Compares exponents in [lo, hi) under a non-block order.
int compare_range(OrderKind kind, const Monomial& a, const Monomial& b, std::size_t lo,
                  std::size_t hi) {
  if (kind == OrderKind::lex) {
    for (std::size_t i = lo; i < hi; ++i) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }
  std::uint64_t da = 0;
  std::uint64_t db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  // Reverse lexicographic tie-break: smaller trailing exponent wins.
  for (std::size_t i = hi; i > lo; --i) {
    if (a[i - 1] != b[i - 1]) return a[i - 1] > b[i - 1] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.size();
  switch (kind) {
    case OrderKind::degrevlex:
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      return compare_range(OrderKind::degrevlex, a, b, 0, n);
    case OrderKind::lex:
      return compare_range(OrderKind::lex, a, b, 0, n);
    case OrderKind::block: {
      const std::size_t k = std::min(block_size, n);
      if (int c = compare_range(inner, a, b, 0, k); c != 0) return c;
      return compare_range(inner, a, b, k, n);
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind) {
    case OrderKind::degrevlex:
      return "degrevlex";
    case OrderKind::lex:
      return "lex";
    case OrderKind::block:
      return "block(" + std::to_string(block_size) + "," +
             (inner == OrderKind::lex ? "lex" : "degrevlex") + ")";
  }
  return "?";
}

Ring::Ring(FieldSpec field, std::vector<std::string> vars, MonomialOrder order)
    : field_(field), vars_(std::move(vars)), order_(order) {
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (!is_identifier(v)) throw std::invalid_argument("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable '" + v + "'");
  }
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  return std::nullopt;
}

RingPtr make_ring(FieldSpec field, std::vector<std::string> vars, MonomialOrder order) {
  return std::make_shared<const Ring>(field, std::move(vars), order);
}

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  const auto first = static_cast<unsigned char>(s[0]);
  if (!std::isalpha(first) && s[0] != '_') return false;
  for (char c : s) {
    const auto u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && c != '_') return false;
  }
  return true;
}

}  // namespace cellalg
