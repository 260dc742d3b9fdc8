//! Floating-point dynamics over the real plane: orbit classification, basin
//! rasterization, and the one-variable maps `alpha` and `beta`.
//!
//! Attractor statements over the reals are numerical observations, not
//! theorems; the classifier therefore reports what an orbit did under
//! explicit thresholds (escape radius, attractor tolerance, confirmation
//! window) instead of asserting existence. Orbits that leave the escape
//! radius are labelled diverged with the step recorded, since such an orbit
//! can in principle return later; orbits that fall onto the diagonal
//! `x = y`, where the map is undefined, are labelled as having hit it.

use alloc::vec::Vec;

use num_complex::Complex;
use num_traits::Float;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::conic::{beta, beta_prime, conic_through, point_on_conic, Conic};
use crate::field::{Complex64, Field, FromInt, Rational};
use crate::poly::RatFun;
use crate::proj::{join, Pt1, Pt2};
use crate::psmap::{alpha, alpha_prime, ps_map, ps_map_proj, SigPoint};
use crate::{Error, Result};

/// Thresholds steering the orbit classifier.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrbitParams {
    pub max_iter: usize,
    /// Norm beyond which the orbit is assumed to diverge.
    pub escape_radius: f64,
    /// Distance at which a point counts as sitting on an attractor.
    pub attractor_tol: f64,
    /// Relative threshold on `|x - y|` below which the next step is treated
    /// as undefined.
    pub undefined_tol: f64,
    /// Consecutive in-tolerance steps required before an attractor label is
    /// assigned.
    pub confirm_window: usize,
    /// Second point of the two-point attractor; `(1, 0)` observed, `(4, 0)`
    /// for the formal companion family.
    pub partner_point: (f64, f64),
}

impl Default for OrbitParams {
    fn default() -> Self {
        OrbitParams {
            max_iter: 1000,
            escape_radius: 1e6,
            attractor_tol: 1e-6,
            undefined_tol: 1e-12,
            confirm_window: 20,
            partner_point: (1.0, 0.0),
        }
    }
}

/// What an orbit did.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbitClass {
    Diverged,
    OriginAttractor,
    TwoPointAttractor,
    OtherPeriodic,
    UndefinedHit,
    Unresolved,
}

impl OrbitClass {
    pub fn label(self) -> &'static str {
        match self {
            OrbitClass::Diverged => "diverged",
            OrbitClass::OriginAttractor => "origin_attractor",
            OrbitClass::TwoPointAttractor => "two_point_attractor",
            OrbitClass::OtherPeriodic => "other_periodic",
            OrbitClass::UndefinedHit => "undefined_hit",
            OrbitClass::Unresolved => "unresolved",
        }
    }
}

/// Classification outcome with the step at which it was decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub label: OrbitClass,
    pub steps_used: usize,
}

/// One floating step of the map; `None` off its domain.
#[inline]
pub fn map_step(x: f64, y: f64) -> Option<(f64, f64)> {
    let d = x - y;
    if d == 0.0 || !x.is_finite() || !y.is_finite() {
        return None;
    }
    let d2 = d * d;
    Some((2.0 * y * (y - x + 2.0) / d2, y * y / d2))
}

/// Classify one orbit.
///
/// Per step, in order: leaving the escape radius ends the orbit as
/// `diverged` (with the step recorded, since such an orbit can return); a
/// run of `confirm_window` consecutive steps within `attractor_tol` of
/// `{(0,0)}` or `{(0,0), partner}` assigns the attractor labels; a confirmed
/// near-return to an earlier point (detected against a power-of-two
/// snapshot and replayed once) gives `other_periodic`; a relative
/// near-diagonal, a non-finite value, or an exactly-diagonal point ends the
/// orbit as `undefined_hit` -- unless it happens inside the attractor
/// balls, because a superattracting collapse lands exactly on `(0, 0)`
/// (where the map is undefined) long before any window can complete, and
/// that is convergence, not failure. Orbits that survive `max_iter` steps
/// are `unresolved`.
pub fn classify_orbit(x0: f64, y0: f64, params: &OrbitParams) -> Classification {
    let tol2 = params.attractor_tol * params.attractor_tol;
    let (px, py) = params.partner_point;
    let mut x = x0;
    let mut y = y0;
    let mut streak = 0usize;
    let mut partner_seen = false;
    // Brent-style near-return detection
    let mut snap = (x0, y0);
    let mut snap_step = 0usize;
    let mut next_snap = 1usize;

    for k in 0..params.max_iter {
        let finite = x.is_finite() && y.is_finite();
        let d_origin = x * x + y * y;
        let d_partner = (x - px) * (x - px) + (y - py) * (y - py);
        let in_balls = finite && (d_origin <= tol2 || d_partner <= tol2);
        let settle = |partner: bool, k: usize| {
            let label = if partner {
                OrbitClass::TwoPointAttractor
            } else {
                OrbitClass::OriginAttractor
            };
            Classification {
                label,
                steps_used: k,
            }
        };

        if !finite {
            return Classification {
                label: OrbitClass::UndefinedHit,
                steps_used: k,
            };
        }
        if d_origin > params.escape_radius * params.escape_radius {
            return Classification {
                label: OrbitClass::Diverged,
                steps_used: k,
            };
        }
        if in_balls {
            streak += 1;
            partner_seen |= d_partner <= tol2;
            if streak >= params.confirm_window {
                return settle(partner_seen, k);
            }
        } else {
            streak = 0;
            partner_seen = false;
            // a near-return to the snapshot suggests a cycle; replay to confirm
            if k > snap_step {
                let ds = (x - snap.0) * (x - snap.0) + (y - snap.1) * (y - snap.1);
                if ds <= tol2 && confirm_cycle(x, y, k - snap_step, params) {
                    return Classification {
                        label: OrbitClass::OtherPeriodic,
                        steps_used: k,
                    };
                }
            }
        }
        let scale = Float::max(Float::abs(x), Float::abs(y));
        if Float::abs(x - y) <= params.undefined_tol * scale {
            return if in_balls {
                settle(partner_seen, k)
            } else {
                Classification {
                    label: OrbitClass::UndefinedHit,
                    steps_used: k,
                }
            };
        }
        match map_step(x, y) {
            Some((nx, ny)) => {
                x = nx;
                y = ny;
            }
            None => {
                return if in_balls {
                    settle(partner_seen, k)
                } else {
                    Classification {
                        label: OrbitClass::UndefinedHit,
                        steps_used: k,
                    }
                }
            }
        }
        if k + 1 == next_snap {
            snap = (x, y);
            snap_step = k + 1;
            next_snap *= 2;
        }
    }
    Classification {
        label: OrbitClass::Unresolved,
        steps_used: params.max_iter,
    }
}

fn confirm_cycle(x0: f64, y0: f64, period: usize, params: &OrbitParams) -> bool {
    let tol2 = params.attractor_tol * params.attractor_tol;
    let mut x = x0;
    let mut y = y0;
    for _ in 0..period {
        match map_step(x, y) {
            Some((nx, ny)) => {
                x = nx;
                y = ny;
            }
            None => return false,
        }
    }
    (x - x0) * (x - x0) + (y - y0) * (y - y0) <= tol2
}

/// A rectangular region of the plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Region {
    pub xmin: f64,
    pub xmax: f64,
    pub ymin: f64,
    pub ymax: f64,
}

/// Per-pixel classifications of a region, row-major with row 0 at `ymax`
/// (image convention).
#[derive(Debug, Clone, PartialEq)]
pub struct Raster {
    pub region: Region,
    pub width: usize,
    pub height: usize,
    pub cells: Vec<Classification>,
}

impl Raster {
    pub fn at(&self, col: usize, row: usize) -> Classification {
        self.cells[row * self.width + col]
    }

    /// Fraction of cells with the given label.
    pub fn fraction(&self, label: OrbitClass) -> f64 {
        let n = self.cells.iter().filter(|c| c.label == label).count();
        n as f64 / self.cells.len() as f64
    }
}

/// Classify the pixel-center grid of `region`. Deterministic: a fixed
/// iteration order and pure per-pixel work make reruns bit-identical.
pub fn raster(
    region: Region,
    width: usize,
    height: usize,
    params: &OrbitParams,
    pixel_budget: usize,
) -> Result<Raster> {
    if width == 0 || height == 0 {
        return Err(Error::Degenerate("empty raster"));
    }
    let pixels = width
        .checked_mul(height)
        .ok_or(Error::Degenerate("raster size overflow"))?;
    if pixels > pixel_budget {
        return Err(Error::BudgetExceeded {
            needed: pixels as u64,
            budget: pixel_budget as u64,
        });
    }
    let dx = (region.xmax - region.xmin) / width as f64;
    let dy = (region.ymax - region.ymin) / height as f64;
    let mut cells = Vec::with_capacity(pixels);
    for row in 0..height {
        let y = region.ymax - (row as f64 + 0.5) * dy;
        for col in 0..width {
            let x = region.xmin + (col as f64 + 0.5) * dx;
            cells.push(classify_orbit(x, y, params));
        }
    }
    Ok(Raster {
        region,
        width,
        height,
        cells,
    })
}

/// The second iterate of `(1 + delta, delta)` in floating point. One step
/// lands exactly on `(2 delta, delta^2)`; the next returns near `(1, 0)`
/// with the second coordinate contracted quadratically.
pub fn two_step_return(delta: f64) -> (f64, f64) {
    let (x1, y1) = map_step(1.0 + delta, delta).expect("off the diagonal");
    map_step(x1, y1).expect("off the diagonal")
}

// ---------------------------------------------------------------------------
// alpha: the second-iterate map on the harmonic and balanced loci
// ---------------------------------------------------------------------------

/// Results of the property suite for `alpha(t) = t^2 / (t - 2)^2`.
#[derive(Debug, Clone)]
pub struct AlphaReport {
    /// `alpha(2 / (1 + w)) = 2 / (1 + (2w^2 - 1))` as an exact identity of
    /// rational functions (the degree-two Tchebychev conjugacy).
    pub tchebychev_conjugacy_exact: bool,
    /// `alpha'(0) = 0`.
    pub origin_superattracting: bool,
    /// `|alpha'(1)| > 1` and `|alpha'(4)| > 1`.
    pub other_fixed_points_repelling: bool,
    pub invariance_samples: usize,
    /// Samples of `[1, oo)` whose image left `[1, oo)`.
    pub invariance_failures: usize,
    pub basin_samples: usize,
    /// Complex samples off `[1, oo)` that failed to reach 0.
    pub basin_failures: usize,
}

impl AlphaReport {
    pub fn all_ok(&self) -> bool {
        self.tchebychev_conjugacy_exact
            && self.origin_superattracting
            && self.other_fixed_points_repelling
            && self.invariance_failures == 0
            && self.basin_failures == 0
    }
}

/// Run the `alpha` property suite: the exact conjugacy to `2w^2 - 1`, the
/// fixed-point multipliers, forward invariance of `[1, oo)`, and convergence
/// to 0 off it.
pub fn alpha_dynamics_checks(samples: usize, max_iter: usize, seed: u64) -> AlphaReport {
    // exact conjugacy over Q(w): alpha(2 / (1 + w)) == 2 / (1 + (2w^2 - 1))
    let w = RatFun::var();
    let one = w.embed(1);
    let two = w.embed(2);
    let lhs_arg = two
        .clone()
        .div(&(one.clone() + w.clone()))
        .expect("1 + w is not zero in Q(w)");
    let lhs = alpha(&lhs_arg).expect("argument avoids the pole as a function");
    let tcheb = two.clone() * w.clone() * w.clone() - one.clone();
    let rhs = two
        .div(&(one + tcheb))
        .expect("denominator 2w^2 is nonzero");
    let conjugacy = lhs == rhs;

    let zero_mult = alpha_prime(&Rational::int(0)).expect("0 is not the pole");
    let one_mult = alpha_prime(&Rational::int(1)).expect("1 is not the pole");
    let four_mult = alpha_prime(&Rational::int(4)).expect("4 is not the pole");
    let origin_superattracting = Field::is_zero(&zero_mult);
    let abs_gt_one = |m: &Rational| {
        let num = m.numer().magnitude();
        let den = m.denom().magnitude();
        num > den
    };
    let other_repelling = abs_gt_one(&one_mult) && abs_gt_one(&four_mult);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut invariance_failures = 0usize;
    for _ in 0..samples {
        // log-uniform over [1, 1e6]
        let e: f64 = rng.gen_range(0.0..6.0);
        let t = Float::powf(10.0, e).max(1.0);
        if (t - 2.0).abs() < 1e-12 {
            continue; // the pole maps to infinity, which stays in the set
        }
        let image = t * t / ((t - 2.0) * (t - 2.0));
        if image < 1.0 - 1e-12 {
            invariance_failures += 1;
        }
    }

    let mut basin_failures = 0usize;
    let mut drawn = 0usize;
    while drawn < samples {
        let re: f64 = rng.gen_range(-10.0..10.0);
        let im: f64 = rng.gen_range(-10.0..10.0);
        // keep a margin from the Julia set [1, oo) so finitely many
        // iterations suffice
        if re >= 0.95 && Float::abs(im) < 0.05 {
            continue;
        }
        drawn += 1;
        let mut z = Complex::new(re, im);
        let mut ok = false;
        for _ in 0..max_iter {
            let d = z - 2.0;
            if d.norm_sqr() == 0.0 {
                break;
            }
            z = z * z / (d * d);
            if z.norm_sqr() <= 1e-16 {
                ok = true;
                break;
            }
        }
        if !ok {
            basin_failures += 1;
        }
    }

    AlphaReport {
        tchebychev_conjugacy_exact: conjugacy,
        origin_superattracting,
        other_fixed_points_repelling: other_repelling,
        invariance_samples: samples,
        invariance_failures,
        basin_samples: drawn,
        basin_failures,
    }
}

// ---------------------------------------------------------------------------
// beta: the parameter dynamics of the invariant conic
// ---------------------------------------------------------------------------

/// Results of the property suite for `beta`.
#[derive(Debug, Clone)]
pub struct BetaReport {
    /// `a = (10 - sqrt 37)/14` and `b = (10 + sqrt 37)/14`.
    pub fixed_point_a: f64,
    pub fixed_point_b: f64,
    pub multiplier_a: f64,
    pub multiplier_b: f64,
    /// `beta'(3/2)`, exactly `-2`.
    pub multiplier_c: f64,
    /// `|beta'((19 +- i sqrt 7)/16)|`, both at roundoff scale.
    pub critical_point_residuals: [f64; 2],
    /// Fraction of random real starts converging to `a`.
    pub convergence_fraction: f64,
    /// Limit of the geometric process on the invariant conic, normalised to
    /// `z = 1`, and the iteration count used.
    pub conic_process_limit: (f64, f64),
    pub conic_process_iterations: usize,
    /// Distance of the limit from `P_{2/7}(a)` computed directly.
    pub conic_process_residual: f64,
}

impl BetaReport {
    pub fn all_ok(&self) -> bool {
        self.multiplier_a < 1.0
            && self.multiplier_b > 1.0
            && self.multiplier_c.abs() > 1.0
            && self.critical_point_residuals.iter().all(|r| *r <= 1e-10)
            && self.convergence_fraction >= 0.9
            && self.conic_process_residual <= 1e-3
    }
}

/// The residual intersection of the invariant conic with the line joining
/// the mapped point back to `R1`: one step of the geometric process
/// `P -> P*`.
fn geometric_step(c27: &Conic<f64>, p: &Pt2<f64>) -> Result<Pt2<f64>> {
    let r1 = Pt2::from_ints(&0.0f64, [2, 1, 1]);
    let q = ps_map_proj(p)?;
    let line = join(&q, &r1)?;
    // the line passes through R1, so it belongs to the pencil
    // t x - y + (1 - 2t) z: recover t from the first two coordinates
    let t = Pt1::new(line.coords()[0], -line.coords()[1])
        .map_err(|_| Error::Degenerate("line through R1 is not in the pencil chart"))?;
    let mut next = point_on_conic(c27, &t)?;
    // keep coordinates at unit scale; the point is projective
    let m = next
        .0
        .iter()
        .fold(0.0f64, |acc, c| Float::max(acc, Float::abs(*c)));
    for c in next.0.iter_mut() {
        *c /= m;
    }
    Ok(next)
}

/// Run the `beta` property suite: multipliers at the fixed points and the
/// 2-cycle, vanishing of the derivative at the complex critical points,
/// convergence statistics of real starts, and the geometric iteration on the
/// invariant conic from the line parameter `t = 0`.
pub fn beta_dynamics_checks(starts: usize, max_iter: usize, seed: u64) -> Result<BetaReport> {
    let s37 = Float::sqrt(37.0f64);
    let a = (10.0 - s37) / 14.0;
    let b = (10.0 + s37) / 14.0;
    let mult_a = Float::abs(beta_prime(&a)?);
    let mult_b = Float::abs(beta_prime(&b)?);
    let mult_c_exact = beta_prime(&Rational::ratio(3, 2))?;
    let mult_c = rational_to_f64(&mult_c_exact);

    let s7 = Float::sqrt(7.0f64);
    let crit = [
        Complex64::new(19.0 / 16.0, s7 / 16.0),
        Complex64::new(19.0 / 16.0, -s7 / 16.0),
    ];
    let residuals = [beta_prime(&crit[0])?.norm(), beta_prime(&crit[1])?.norm()];

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut converged = 0usize;
    for _ in 0..starts {
        let mut t: f64 = rng.gen_range(-20.0..20.0);
        for _ in 0..max_iter {
            match beta(&t) {
                Ok(next) => t = next,
                Err(_) => break,
            }
            if Float::abs(t - a) <= 1e-9 {
                converged += 1;
                break;
            }
        }
    }

    // geometric process on the invariant conic from t0 = 0
    let c27 = conic_through(&(2.0f64 / 7.0))?;
    let mut p = point_on_conic(&c27, &Pt1::affine(0.0f64))?;
    let mut iterations = 0;
    for _ in 0..200 {
        p = geometric_step(&c27, &p)?;
        iterations += 1;
    }
    let z = p.coords()[2];
    let limit = (p.coords()[0] / z, p.coords()[1] / z);
    // reference point P_{2/7}(a) straight from the parametrization
    let pa = point_on_conic(&c27, &Pt1::affine(a))?;
    let reference = (
        pa.coords()[0] / pa.coords()[2],
        pa.coords()[1] / pa.coords()[2],
    );
    let residual = Float::hypot(limit.0 - reference.0, limit.1 - reference.1);

    Ok(BetaReport {
        fixed_point_a: a,
        fixed_point_b: b,
        multiplier_a: mult_a,
        multiplier_b: mult_b,
        multiplier_c: mult_c,
        critical_point_residuals: residuals,
        convergence_fraction: converged as f64 / starts as f64,
        conic_process_limit: limit,
        conic_process_iterations: iterations,
        conic_process_residual: residual,
    })
}

fn rational_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// Compare the floating map against the exact rational map on random points
/// bounded away from the diagonal; returns the worst relative error seen.
pub fn float_vs_exact_worst_error(samples: usize, seed: u64) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    let mut drawn = 0usize;
    while drawn < samples {
        let num = |rng: &mut ChaCha8Rng| rng.gen_range(-4000i64..4000);
        let (xn, yn) = (num(&mut rng), num(&mut rng));
        let x = xn as f64 / 100.0;
        let y = yn as f64 / 100.0;
        if Float::abs(x - y) < 0.1 {
            continue;
        }
        drawn += 1;
        let exact = ps_map(&SigPoint::new(
            Rational::ratio(xn, 100),
            Rational::ratio(yn, 100),
        ))
        .expect("off the diagonal");
        let (fx, fy) = map_step(x, y).expect("off the diagonal");
        let ex = rational_to_f64(&exact.x);
        let ey = rational_to_f64(&exact.y);
        // relative error of the image point as a vector; a single
        // coordinate can cross its own zero set, where componentwise
        // relative error is meaningless
        let err = Float::hypot(fx - ex, fy - ey);
        let scale = Float::max(Float::hypot(fx, fy), Float::hypot(ex, ey));
        if scale > 0.0 {
            worst = Float::max(worst, err / scale);
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_step_matches_exact() {
        assert!(float_vs_exact_worst_error(10_000, 7) <= 1e-9);
    }

    #[test]
    fn classify_examples() {
        let params = OrbitParams::default();
        // diagonal start dies immediately
        let c = classify_orbit(3.0, 3.0, &params);
        assert_eq!(c.label, OrbitClass::UndefinedHit);
        assert_eq!(c.steps_used, 0);

        // near (1, 0): alternates toward {(0,0), (1,0)}
        let c = classify_orbit(1.0 + 1e-3, 1e-3, &params);
        assert_eq!(c.label, OrbitClass::TwoPointAttractor);

        // harmonic start in the basin of alpha's superattracting 0
        let c = classify_orbit(1.5, 0.5, &params);
        assert!(
            matches!(
                c.label,
                OrbitClass::TwoPointAttractor | OrbitClass::OriginAttractor
            ),
            "{c:?}"
        );

        // slightly off the diagonal: the first step is enormous
        let c = classify_orbit(2.0, 2.001, &params);
        assert_eq!(c.label, OrbitClass::Diverged);
    }

    #[test]
    fn near_one_zero_iterates() {
        // the first step from (1 + d, d) lands on (2d, d^2) up to roundoff
        let d = 1e-3;
        let (x1, y1) = map_step(1.0 + d, d).unwrap();
        assert!(Float::abs(x1 - 2.0 * d) <= 1e-12 * d);
        assert!(Float::abs(y1 - d * d) <= 1e-12 * d);
        // the second step contracts the y-coordinate quadratically and
        // returns the x-coordinate to 1 + O(d^2)
        let (x2, y2) = two_step_return(d);
        assert!(Float::abs(x2 - 1.0) < 3.0 * d * d / 4.0, "x2 = {x2}");
        assert!(Float::abs(y2 - d * d / 4.0) < d * d * d, "y2 = {y2}");
    }

    #[test]
    fn formal_partner_family() {
        // The {(0,0), (4,0)} family is only formal: the transverse offset
        // from (4, 0) doubles per round trip, so the partner ball is only
        // visited from a tight start before the collapse onto the origin.
        let params = OrbitParams {
            partner_point: (4.0, 0.0),
            ..OrbitParams::default()
        };
        let c = classify_orbit(4.0 + 1e-8, 1e-8, &params);
        assert_eq!(c.label, OrbitClass::TwoPointAttractor, "{c:?}");
        // from a loose start the y-coordinate still collapses first
        let c = classify_orbit(4.0 + 1e-4, 1e-4, &params);
        assert_eq!(c.label, OrbitClass::OriginAttractor, "{c:?}");
    }

    #[test]
    fn raster_deterministic_and_budgeted() {
        let region = Region {
            xmin: -3.0,
            xmax: 3.0,
            ymin: -3.0,
            ymax: 3.0,
        };
        let params = OrbitParams {
            max_iter: 60,
            ..OrbitParams::default()
        };
        let a = raster(region, 40, 40, &params, 1 << 24).unwrap();
        let b = raster(region, 40, 40, &params, 1 << 24).unwrap();
        assert_eq!(a, b);
        // pixel centers on the diagonal x = y die at step 0
        let diag = a.at(7, 40 - 1 - 7);
        assert_eq!(diag.label, OrbitClass::UndefinedHit);
        assert_eq!(diag.steps_used, 0);
        // a contiguous block of the origin-family basin exists
        let origin_block = (0..38).any(|row| {
            (0..38).any(|col| {
                (0..3).all(|dr| {
                    (0..3).all(|dc| {
                        matches!(
                            a.at(col + dc, row + dr).label,
                            OrbitClass::OriginAttractor | OrbitClass::TwoPointAttractor
                        )
                    })
                })
            })
        });
        assert!(origin_block, "expected a 3x3 basin block");
        assert!(raster(region, 4000, 4000, &params, 1 << 20).is_err());
    }

    #[test]
    fn long_lived_orbits_concentrate_in_the_strip() {
        // The region between the harmonic line y = x - 1 and the balanced
        // parabola 4y = x^2 holds the orbits that take longest to resolve:
        // at a moderate iteration cap, every unresolved pixel center lies
        // there. (Whether such orbits are genuinely dense in the strip is
        // beyond a finite experiment; this only measures longevity.)
        let params = OrbitParams {
            max_iter: 50,
            ..OrbitParams::default()
        };
        let region = Region {
            xmin: -3.0,
            xmax: 3.0,
            ymin: -4.0,
            ymax: 3.0,
        };
        let grid = raster(region, 200, 200, &params, 1 << 22).unwrap();
        let dx = (region.xmax - region.xmin) / 200.0;
        let dy = (region.ymax - region.ymin) / 200.0;
        let mut unresolved = 0usize;
        for row in 0..200 {
            let y = region.ymax - (row as f64 + 0.5) * dy;
            for col in 0..200 {
                let x = region.xmin + (col as f64 + 0.5) * dx;
                if grid.at(col, row).label == OrbitClass::Unresolved {
                    unresolved += 1;
                    assert!(
                        y > x - 1.0 && 4.0 * y < x * x,
                        "unresolved pixel ({x}, {y}) outside the strip"
                    );
                }
            }
        }
        assert!(
            unresolved > 20,
            "expected a visible cluster, got {unresolved}"
        );

        // a harmonic start with Julia-interval parameter wanders long before
        // roundoff resolves it
        let c = classify_orbit(2.3, 1.3, &OrbitParams::default());
        assert!(c.steps_used > 40, "{c:?}");
    }

    #[test]
    fn alpha_suite() {
        let report = alpha_dynamics_checks(2000, 1000, 11);
        assert!(report.all_ok(), "{report:?}");
        // multipliers themselves
        assert_eq!(alpha_prime(&Rational::int(1)).unwrap(), Rational::int(4));
        assert_eq!(alpha_prime(&Rational::int(4)).unwrap(), Rational::int(-2));
        // orbit of -1 heads to 0
        let mut t = -1.0f64;
        for _ in 0..100 {
            t = t * t / ((t - 2.0) * (t - 2.0));
        }
        assert!(Float::abs(t) < 1e-12);
    }

    #[test]
    fn beta_suite() {
        let report = beta_dynamics_checks(400, 1000, 13).unwrap();
        assert!(report.all_ok(), "{report:?}");
        assert!((report.fixed_point_a - 0.2798).abs() < 1e-4);
        assert!((report.fixed_point_b - 1.1488).abs() < 1e-4);
        assert!((report.multiplier_a - 0.8098).abs() < 1e-3);
        assert_eq!(report.multiplier_c, -2.0);
        // the advertised limit point
        assert!((report.conic_process_limit.0 - 6.5951).abs() <= 1e-3);
        assert!((report.conic_process_limit.1 - 2.2857).abs() <= 1e-3);
    }
}
