#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cellalg/field.hpp"
#include "cellalg/monomial.hpp"

namespace cellalg {

enum class OrderKind { degrevlex, lex, block };

/// A monomial order.  `block` compares the first `block_size` variables by
/// `inner` and breaks ties on the remaining variables by `inner`; it
/// eliminates the leading block.
struct MonomialOrder {
  OrderKind kind = OrderKind::degrevlex;
  std::size_t block_size = 0;
  OrderKind inner = OrderKind::degrevlex;

  static MonomialOrder degrevlex() { return {}; }
  static MonomialOrder lex() { return {OrderKind::lex, 0, OrderKind::degrevlex}; }
  static MonomialOrder block(std::size_t elim_vars, OrderKind inner = OrderKind::degrevlex) {
    return {OrderKind::block, elim_vars, inner};
  }

  /// Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;

  std::string name() const;

  bool operator==(const MonomialOrder&) const = default;
};

/// Ambient polynomial ring K[x_1..x_t] with a fixed monomial order.
class Ring {
 public:
  Ring(FieldSpec field, std::vector<std::string> vars, MonomialOrder order = {});

  const FieldSpec& field() const { return field_; }
  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const MonomialOrder& order() const { return order_; }

  std::optional<std::size_t> index_of(const std::string& name) const;

  bool operator==(const Ring&) const = default;

 private:
  FieldSpec field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

/// Throws std::invalid_argument on duplicate or malformed variable names.
RingPtr make_ring(FieldSpec field, std::vector<std::string> vars, MonomialOrder order = {});

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

bool is_identifier(const std::string& s);

}  // namespace cellalg
