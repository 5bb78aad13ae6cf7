#include "capa/circumference.hpp"

#include "capa/errors.hpp"
#include "capa/oracle.hpp"
#include "capa/sexagesimal.hpp"

namespace capa {

JyaSeries jya_on_diameter_circle(const Rat& arc, const Rat& D,
                                 const Rat& cutoff) {
  if (D <= 0) throw DomainError("diameter must be positive");
  if (abs(arc) > 2 * D)
    throw DomainError("arc beyond the quadrant of the radius-D circle");
  JyaSeries out;
  const Rat arc2 = arc * arc;
  const Rat D2 = D * D;
  Rat term = arc;
  for (int k = 1; abs(term) >= cutoff; ++k) {
    out.terms.push_back(term);
    out.a_star += term;
    term *= -arc2 / (D2 * (2 * k) * (2 * k + 1));
  }
  return out;
}

CircumferenceResult refine_circumference(const Rat& D, const Rat& C_star) {
  if (D <= 0) throw DomainError("diameter must be positive");
  const Real pi_d = pi_real() * to_real(D);
  if (abs(to_real(C_star) - pi_d) > pi_d / 10)
    throw DomainError("C* must lie within 10% of pi D");

  CircumferenceTrace t;
  t.D = D;
  t.C_star = C_star;
  const JyaSeries series = jya_on_diameter_circle(C_star / 4, D);
  t.series_terms = series.terms;
  // The worked computation squares the thirds-rounded a*, not the raw sum;
  // the squared rows of the figure only come out this way.
  t.a_star = minutes_from_thirds(round_to_thirds(series.a_star));
  t.a_star_sq = t.a_star * t.a_star;
  t.b_star_sq = D * D - t.a_star_sq;
  if (t.b_star_sq < 0) throw DomainError("a* exceeds the diameter");
  t.sqrt_half_a = isqrt_rational(t.a_star_sq / 2, 28800);
  t.sqrt_half_b = isqrt_rational(t.b_star_sq / 2, 28800);
  t.delta_jya = abs(t.sqrt_half_b - t.sqrt_half_a);
  t.delta_arc =
      t.delta_jya + t.delta_jya * t.delta_jya * t.delta_jya / (6 * D * D);
  t.correction = 4 * t.delta_arc;
  t.direction =
      t.b_star_sq > t.a_star_sq ? 1 : (t.b_star_sq < t.a_star_sq ? -1 : 0);
  t.C = C_star + t.direction * t.correction;
  return {t.C, t};
}

std::pair<Rat, Rat> quadrant_jya_constants(const Rat& D) {
  if (D <= 0) throw DomainError("diameter must be positive");
  const Rat jya = isqrt_rational(D * D / 2, 28800);
  return {jya, jya};
}

}  // namespace capa
