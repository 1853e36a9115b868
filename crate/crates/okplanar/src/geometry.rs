//! Exact rational geometry: circle placement and the predicates used by the
//! planarizer. No floating point enters any comparison; f64 only steers the
//! choice of rational parameters.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

pub type Rat = BigRational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoint {
    pub x: Rat,
    pub y: Rat,
}

impl RatPoint {
    pub fn new(x: Rat, y: Rat) -> RatPoint {
        RatPoint { x, y }
    }

    pub fn on_unit_circle(&self) -> bool {
        &self.x * &self.x + &self.y * &self.y == Rat::one()
    }
}

/// Point of the unit circle with tangent half-angle `t`:
/// ((1 - t^2) / (1 + t^2), 2t / (1 + t^2)). Exactly on the circle for every
/// rational `t`.
pub fn circle_point(t: &Rat) -> RatPoint {
    let t2 = t * t;
    let denom = &t2 + Rat::one();
    RatPoint::new((Rat::one() - &t2) / denom.clone(), (t + t) / denom)
}

/// Cross product of (b - a) and (c - a).
pub fn orient(a: &RatPoint, b: &RatPoint, c: &RatPoint) -> Rat {
    (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x)
}

/// Total order on nonzero direction vectors by angle in [0, 2pi), starting at
/// the positive x-axis and increasing counter-clockwise in the usual
/// mathematical sense. This is the single rotational convention of the crate.
pub fn dir_cmp(a: &(Rat, Rat), b: &(Rat, Rat)) -> Ordering {
    let half = |v: &(Rat, Rat)| -> u8 {
        if v.1.is_positive() || (v.1.is_zero() && v.0.is_positive()) {
            0
        } else {
            1
        }
    };
    let (ha, hb) = (half(a), half(b));
    if ha != hb {
        return ha.cmp(&hb);
    }
    // Same half-plane: a precedes b iff cross(a, b) > 0.
    let cross = &a.0 * &b.1 - &a.1 * &b.0;
    if cross.is_positive() {
        Ordering::Less
    } else if cross.is_negative() {
        Ordering::Greater
    } else {
        Ordering::Equal
    }
}

/// Angular order of on-circle points, same convention as [`dir_cmp`].
pub fn angle_cmp(a: &RatPoint, b: &RatPoint) -> Ordering {
    dir_cmp(&(a.x.clone(), a.y.clone()), &(b.x.clone(), b.y.clone()))
}

/// Intersection point of segments `a0 a1` and `b0 b1` together with the
/// parameter of the point along `a0 a1`. The segments must properly cross;
/// the caller guarantees this combinatorially.
pub fn segment_intersection(
    a0: &RatPoint,
    a1: &RatPoint,
    b0: &RatPoint,
    b1: &RatPoint,
) -> (RatPoint, Rat) {
    let da = (&a1.x - &a0.x, &a1.y - &a0.y);
    let db = (&b1.x - &b0.x, &b1.y - &b0.y);
    let denom = &da.0 * &db.1 - &da.1 * &db.0;
    debug_assert!(!denom.is_zero(), "crossing chords cannot be parallel");
    let t = ((&b0.x - &a0.x) * &db.1 - (&b0.y - &a0.y) * &db.0) / denom.clone();
    let p = RatPoint::new(&a0.x + &t * &da.0, &a0.y + &t * &da.1);
    (p, t)
}

/// Exact rational points on the unit circle realizing the cyclic positions
/// `0..n`, with position `p` within angular tolerance pi/(4n) of `2 pi p / n`.
#[derive(Debug, Clone)]
pub struct CirclePlacement {
    pub points: Vec<RatPoint>,
}

/// Number of placements the planarizer tries before reporting concurrency.
pub const PLACEMENT_ATTEMPTS: usize = 6;

/// Default placement (attempt 0 of the schedule).
pub fn place_on_circle(n: usize) -> CirclePlacement {
    place_on_circle_attempt(n, 0)
}

/// Deterministic placement schedule. Attempt 0 aims exactly at the angles
/// `2 pi p / n`; later attempts raise the continued-fraction denominator floor
/// and add a tiny per-point angular offset (golden-ratio spaced, well inside
/// the tolerance). The offsets matter: for even n the tangent-half-angle
/// convergents of antipodal targets are exact reciprocals, so without offsets
/// opposite points stay exactly antipodal at every denominator budget and
/// three diameters of the drawing stay concurrent at the origin.
pub fn place_on_circle_attempt(n: usize, attempt: usize) -> CirclePlacement {
    assert!(n >= 3, "placement needs at least 3 positions");
    let tol = std::f64::consts::PI / (4.0 * n as f64);
    let min_denom: u64 = 1u64 << (6 + 4 * attempt.min(12));
    let points = (0..n)
        .map(|p| {
            if p == 0 {
                // Position 0 is the rotational gauge and stays at (1, 0); the
                // remaining points carry the symmetry-breaking offsets.
                return RatPoint::new(Rat::one(), Rat::zero());
            }
            let base = 2.0 * std::f64::consts::PI * p as f64 / n as f64;
            let offset = if attempt == 0 {
                0.0
            } else {
                // frac((p + 1) * phi + attempt * phi^2) in (-1/2, 1/2), scaled
                // to at most a quarter of the tolerance.
                const PHI: f64 = 0.618_033_988_749_894_9;
                let f = ((p + 1) as f64 * PHI + attempt as f64 * PHI * PHI).fract() - 0.5;
                f * tol * 0.5
            };
            let theta = base + offset;
            if (theta - std::f64::consts::PI).abs() < 1e-12 {
                return RatPoint::new(-Rat::one(), Rat::zero());
            }
            let target = (theta / 2.0).tan();
            let floor = if attempt == 0 { 1 } else { min_denom };
            let t = approximate(target, theta, tol, floor);
            circle_point(&t)
        })
        .collect();
    CirclePlacement { points }
}

/// First continued-fraction convergent of `target` whose circle point lands
/// within `tol` of the wanted angle and whose denominator is at least `floor`.
fn approximate(target: f64, theta: f64, tol: f64, floor: u64) -> Rat {
    let angle_of = |t: &Rat| -> f64 {
        let tf = rat_to_f64(t);
        let a = 2.0 * tf.atan();
        if a < 0.0 {
            a + 2.0 * std::f64::consts::PI
        } else {
            a
        }
    };
    let wanted = if theta < 0.0 {
        theta + 2.0 * std::f64::consts::PI
    } else {
        theta
    };

    // Convergents p_k/q_k of the continued fraction of target. The stopping
    // tolerance is a fifth of the placement tolerance, so the total drift
    // (offset plus approximation) stays well inside it.
    let (mut p0, mut q0) = (BigInt::one(), BigInt::zero());
    let (mut p1, mut q1) = (BigInt::from(target.floor() as i64), BigInt::one());
    let mut x = target - target.floor();
    for _ in 0..64 {
        let cand = Rat::new(p1.clone(), q1.clone());
        if q1 >= BigInt::from(floor) && (angle_of(&cand) - wanted).abs() <= tol * 0.2 {
            return cand;
        }
        if x.abs() < 1e-15 {
            break;
        }
        x = 1.0 / x;
        let a = x.floor();
        x -= a;
        let ai = BigInt::from(a as i64);
        let p2 = &ai * &p1 + &p0;
        let q2 = &ai * &q1 + &q0;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
    }
    // The expansion bottomed out (target effectively rational) without
    // reaching the denominator floor. Take a power-of-two denominator and an
    // odd numerator so the fraction cannot reduce below it, doubling until
    // the angle lands inside the tolerance.
    let mut denom: u64 = (floor.max(2)).next_power_of_two() * 1024;
    loop {
        let mut numer = (target * denom as f64).round() as i64;
        if numer % 2 == 0 {
            numer += 1;
        }
        let cand = Rat::new(BigInt::from(numer), BigInt::from(denom));
        if (angle_of(&cand) - wanted).abs() <= tol * 0.2 {
            return cand;
        }
        denom *= 2;
    }
}

fn rat_to_f64(r: &Rat) -> f64 {
    let num = r.numer().to_string().parse::<f64>().unwrap_or(f64::MAX);
    let den = r.denom().to_string().parse::<f64>().unwrap_or(f64::MAX);
    num / den
}

impl CirclePlacement {
    pub fn n(&self) -> usize {
        self.points.len()
    }

    /// All invariants at once: exactly on the circle, pairwise distinct,
    /// strictly increasing in angle.
    pub fn validate(&self) -> Result<()> {
        for (i, pt) in self.points.iter().enumerate() {
            if !pt.on_unit_circle() {
                return Err(Error::PreconditionViolated(format!(
                    "placement point {i} is off the unit circle"
                )));
            }
        }
        for w in self.points.windows(2) {
            if angle_cmp(&w[0], &w[1]) != Ordering::Less {
                return Err(Error::PreconditionViolated(
                    "placement points out of angular order".into(),
                ));
            }
        }
        Ok(())
    }
}
