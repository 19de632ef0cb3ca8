#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <variant>

#include "rdmap/group_ring.hpp"
#include "rdmap/norm.hpp"

namespace rdmap {

class Multiplier;

namespace multiplier_kind {

// Finitely supported function given by its values.
struct Table {
  GroupRingElement values;
};

// exp(-r l(x)).
struct Heat {
  double r;
};

// exp(-r l(x)) for l(x) <= n, zero beyond.
struct TruncatedHeat {
  double r;
  Length n;
};

// inner(x) / scale.
struct Scaled {
  std::shared_ptr<const Multiplier> inner;
  double scale;
};

}  // namespace multiplier_kind

// A function phi on the group acting on the group ring by pointwise product,
// M_phi lambda(f) = lambda(phi . f).
class Multiplier {
 public:
  using Kind = std::variant<multiplier_kind::Table, multiplier_kind::Heat,
                            multiplier_kind::TruncatedHeat, multiplier_kind::Scaled>;

  static Multiplier table(GroupRingElement values);
  static Multiplier heat(double r);
  static Multiplier truncated_heat(double r, Length n);
  // Requires scale >= 1.
  static Multiplier scaled(Multiplier inner, double scale);

  const Kind& kind() const noexcept { return kind_; }

  Complex eval(const GroupDescriptor& g, const GroupElement& x) const;

  // sup_x |phi(x)| (1 + l(x))^s. Heat kinds use the real-variable supremum of
  // the decay profile; tables take the maximum over their support.
  double decay_sup(const GroupDescriptor& g, double s) const;

  // Whether phi has finite support, and |supp phi| when it does (saturating).
  std::optional<std::uint64_t> support_bound(const GroupDescriptor& g) const;

 private:
  explicit Multiplier(Kind kind) : kind_(std::move(kind)) {}

  Kind kind_;
};

GroupRingElement apply(const Multiplier& phi, const GroupRingElement& f);

struct MultiplierNormBound {
  double upper = 0.0;
  // |supp phi| when phi is finitely supported; M_phi then has at most that rank.
  std::optional<std::uint64_t> rank_bound;
};

// ||M_phi|| <= C K with K = sup |phi| (1 + l)^s.
MultiplierNormBound lemma_norm_bound(const Multiplier& phi, const GroupDescriptor& g,
                                     const RdParams& rd);

// The sharpest certified bound available: 1 for the heat multiplier (it is
// completely positive with phi(e) = 1), 1 + C K_n for its truncations, the
// inner bound divided by the scale for scaled kinds, C K for tables.
MultiplierNormBound certified_norm_bound(const Multiplier& phi, const GroupDescriptor& g,
                                         const RdParams& rd);

// C * sup_{x > n} exp(-r x) (1 + x)^s, bounding ||M_{phi_r} - M_{phi_{r,n}}||.
double tail_bound(double r, double s, Length n, double C);

// 1 + tail_bound: an upper bound for ||M_{phi_{r,n}}||.
double certified_scale(double r, double s, Length n, double C);

// The truncated heat multiplier divided by certified_scale, a contraction by
// construction.
Multiplier scaled_multiplier(double r, double s, Length n, double C);

struct DefectReport {
  // Bracket for ||lambda(phi . f) - lambda(f)||.
  NormBracket bracket;
  // sup_{x in supp f} |phi(x) - 1| * ||f||_1.
  double cheap_bound = 0.0;
};

DefectReport map_defect(const Multiplier& phi, const GroupRingElement& f, const RdParams& rd,
                        Length radius, const PowerIterationOptions& options = {});

}  // namespace rdmap
