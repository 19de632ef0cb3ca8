#include "rdmap/multiplier.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "rdmap/errors.hpp"
#include "rdmap/kernel.hpp"

namespace rdmap {

namespace mk = multiplier_kind;

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_positive_r(double r) {
  if (!(r > 0.0)) throw std::invalid_argument("heat multiplier requires r > 0");
}

}  // namespace

Multiplier Multiplier::table(GroupRingElement values) {
  return Multiplier(mk::Table{std::move(values)});
}

Multiplier Multiplier::heat(double r) {
  require_positive_r(r);
  return Multiplier(mk::Heat{r});
}

Multiplier Multiplier::truncated_heat(double r, Length n) {
  require_positive_r(r);
  if (n < 0) throw std::invalid_argument("truncation radius must be >= 0");
  return Multiplier(mk::TruncatedHeat{r, n});
}

Multiplier Multiplier::scaled(Multiplier inner, double scale) {
  if (!(scale >= 1.0) || !std::isfinite(scale)) {
    throw std::invalid_argument("multiplier scale must be a finite value >= 1");
  }
  return Multiplier(mk::Scaled{std::make_shared<const Multiplier>(std::move(inner)), scale});
}

Complex Multiplier::eval(const GroupDescriptor& g, const GroupElement& x) const {
  return std::visit(
      overloaded{
          [&](const mk::Table& t) {
            if (!(t.values.group() == g)) throw GroupMismatch("table multiplier over another group");
            validate(g, x);
            return t.values.coefficient(x);
          },
          [&](const mk::Heat& h) {
            return Complex(std::exp(-h.r * static_cast<double>(word_length(g, x))));
          },
          [&](const mk::TruncatedHeat& h) {
            const Length len = word_length(g, x);
            return len <= h.n ? Complex(std::exp(-h.r * static_cast<double>(len))) : Complex{};
          },
          [&](const mk::Scaled& s) { return s.inner->eval(g, x) / s.scale; },
      },
      kind_);
}

double Multiplier::decay_sup(const GroupDescriptor& g, double s) const {
  if (!(s > 0.0)) throw std::invalid_argument("decay exponent must be > 0");
  return std::visit(
      overloaded{
          [&](const mk::Table& t) {
            double k = 0.0;
            for (const auto& [x, c] : t.values.terms()) {
              const double len = static_cast<double>(word_length(g, x));
              k = std::max(k, std::abs(c) * std::pow(1.0 + len, s));
            }
            return k;
          },
          [&](const mk::Heat& h) { return decay_certificate(h.r, s).K(); },
          [&](const mk::TruncatedHeat& h) {
            // The profile increases up to its peak, so a truncation before the
            // peak is bounded by the value at the cut.
            const auto cert = decay_certificate(h.r, s);
            const auto n = static_cast<double>(h.n);
            return n < cert.peak() ? decay_profile(h.r, s, n) : cert.K();
          },
          [&](const mk::Scaled& sc) { return sc.inner->decay_sup(g, s) / sc.scale; },
      },
      kind_);
}

std::optional<std::uint64_t> Multiplier::support_bound(const GroupDescriptor& g) const {
  return std::visit(
      overloaded{
          [&](const mk::Table& t) -> std::optional<std::uint64_t> {
            return t.values.support_size();
          },
          [&](const mk::Heat&) -> std::optional<std::uint64_t> { return std::nullopt; },
          [&](const mk::TruncatedHeat& h) -> std::optional<std::uint64_t> {
            return ball_size(g, h.n);
          },
          [&](const mk::Scaled& s) { return s.inner->support_bound(g); },
      },
      kind_);
}

GroupRingElement apply(const Multiplier& phi, const GroupRingElement& f) {
  const auto& g = f.group();
  GroupRingElement out(g);
  for (const auto& [x, c] : f.terms()) out.add(x, phi.eval(g, x) * c);
  return out;
}

MultiplierNormBound lemma_norm_bound(const Multiplier& phi, const GroupDescriptor& g,
                                     const RdParams& rd) {
  const double k = phi.decay_sup(g, rd.s);
  if (!std::isfinite(k)) throw std::domain_error("multiplier has no finite decay constant");
  return {rd.C * k, phi.support_bound(g)};
}

MultiplierNormBound certified_norm_bound(const Multiplier& phi, const GroupDescriptor& g,
                                         const RdParams& rd) {
  MultiplierNormBound bound = lemma_norm_bound(phi, g, rd);
  std::visit(overloaded{
                 [](const mk::Table&) {},
                 [&](const mk::Heat&) { bound.upper = std::min(bound.upper, 1.0); },
                 [&](const mk::TruncatedHeat& h) {
                   bound.upper = std::min(bound.upper, certified_scale(h.r, rd.s, h.n, rd.C));
                 },
                 [&](const mk::Scaled& s) {
                   bound.upper = std::min(
                       bound.upper, certified_norm_bound(*s.inner, g, rd).upper / s.scale);
                 },
             },
             phi.kind());
  return bound;
}

double tail_bound(double r, double s, Length n, double C) {
  if (!(C > 0.0)) throw std::invalid_argument("tail bound requires C > 0");
  if (n < 0) throw std::invalid_argument("tail bound requires n >= 0");
  return C * decay_certificate(r, s).tail(static_cast<double>(n));
}

double certified_scale(double r, double s, Length n, double C) {
  return 1.0 + tail_bound(r, s, n, C);
}

Multiplier scaled_multiplier(double r, double s, Length n, double C) {
  return Multiplier::scaled(Multiplier::truncated_heat(r, n), certified_scale(r, s, n, C));
}

DefectReport map_defect(const Multiplier& phi, const GroupRingElement& f, const RdParams& rd,
                        Length radius, const PowerIterationOptions& options) {
  const GroupRingElement defect = apply(phi, f) - f;
  DefectReport report;
  report.bracket = opnorm_bracket(defect, rd, radius, options);
  double worst = 0.0;
  for (const auto& [x, c] : f.terms()) {
    worst = std::max(worst, std::abs(phi.eval(f.group(), x) - 1.0));
  }
  report.cheap_bound = worst * l1_norm(f);
  return report;
}

}  // namespace rdmap
