//! The Pappus-Steiner map on signatures, its involution, preimages, and the
//! harmonic/balanced loci.
//!
//! ```text
//! pi([x, y])  = [ 2y(y - x + 2) / (x - y)^2 ,  y^2 / (x - y)^2 ]      (x != y)
//! tau([x, y]) = [ (2y - x) / (y - x + 1) ,  y / (y - x + 1) ]         (identity on H)
//! ```
//!
//! `pi` is a double cover ramified over the balanced parabola `B: x^2 = 4y`;
//! `tau` exchanges its two sheets and fixes the harmonic line `H: x = y + 1`
//! pointwise. `pi` swaps `H` and `B`, and the second iterate restricted to
//! either locus is the one-variable map `alpha(t) = t^2 / (t - 2)^2`.

use alloc::vec::Vec;

use crate::field::{Field, Tol};
use crate::proj::Pt2;
use crate::{Error, Result};

/// A signature point `[x, y]` of the affine plane the map acts on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigPoint<F> {
    pub x: F,
    pub y: F,
}

impl<F: Field> SigPoint<F> {
    pub fn new(x: F, y: F) -> Self {
        SigPoint { x, y }
    }

    pub fn from_ints(sample: &F, x: i64, y: i64) -> Self {
        SigPoint {
            x: sample.embed(x),
            y: sample.embed(y),
        }
    }

    pub fn on_diagonal(&self) -> bool {
        self.x == self.y
    }
}

/// Where a point sits relative to the known bad loci of the iteration.
///
/// `W1` is the diagonal where the map is undefined; `W2` and `W3` map into
/// `W1` after one and two steps. There is no closed form for the higher
/// `W_n`, so everything else is labelled interior-so-far and orbit routines
/// detect the diagonal lazily, step by step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DomainStratum {
    W1,
    W2,
    W3,
    InteriorSoFar,
}

impl DomainStratum {
    pub fn label(self) -> &'static str {
        match self {
            DomainStratum::W1 => "W1",
            DomainStratum::W2 => "W2",
            DomainStratum::W3 => "W3",
            DomainStratum::InteriorSoFar => "interior-so-far",
        }
    }
}

/// One application of the Pappus-Steiner map.
pub fn ps_map<F: Field>(z: &SigPoint<F>) -> Result<SigPoint<F>> {
    if z.on_diagonal() {
        return Err(Error::UndefinedOnDiagonal);
    }
    let d = z.x.clone() - z.y.clone();
    let d2 = d.clone() * d;
    let two = z.x.embed(2);
    let num_x = two.clone() * z.y.clone() * (z.y.clone() - z.x.clone() + two);
    let num_y = z.y.clone() * z.y.clone();
    Ok(SigPoint {
        x: num_x.div(&d2)?,
        y: num_y.div(&d2)?,
    })
}

/// The homogenized map on the plane `[x, y, z] -> [2y(y-x+2z), y^2, (x-y)^2]`.
pub fn ps_map_proj<F: Field>(p: &Pt2<F>) -> Result<Pt2<F>> {
    let [x, y, z] = p.coords().clone();
    let two = x.embed(2);
    let d = x.clone() - y.clone();
    Pt2::new(
        two.clone() * y.clone() * (y.clone() - x + two * z),
        y.clone() * y,
        d.clone() * d,
    )
}

/// The deck involution of the double cover; identity on the harmonic line.
pub fn involution<F: Field>(z: &SigPoint<F>) -> SigPoint<F> {
    let den = z.y.clone() - z.x.clone() + z.x.embed(1);
    if den.is_zero() {
        return z.clone(); // on H
    }
    let two = z.x.embed(2);
    let x = (two * z.y.clone() - z.x.clone())
        .div(&den)
        .expect("den nonzero");
    let y = z.y.clone().div(&den).expect("den nonzero");
    SigPoint { x, y }
}

/// Homogenized involution `[x, y, z] -> [2y - x, y, y - x + z]`.
pub fn involution_proj<F: Field>(p: &Pt2<F>) -> Result<Pt2<F>> {
    let [x, y, z] = p.coords().clone();
    let two = x.embed(2);
    Pt2::new(two * y.clone() - x.clone(), y.clone(), y - x + z)
}

/// The fiber of `pi` over a point.
#[derive(Debug, Clone, PartialEq)]
pub struct PreimageSet<F> {
    pub points: Vec<SigPoint<F>>,
    /// True when the target sits on the ramification image (`p^2 = 4q`): the
    /// fiber is the single point of `H` returned in `points`.
    pub ramified: bool,
    /// Set when the fiber is empty for a structural reason.
    pub diagnostic: Option<&'static str>,
}

/// All solutions of `pi(z) = w` in the field.
///
/// Solving `pi([x,y]) = [p,q]` eliminates to
/// `(p^2 - 4q) y^2 - 8pq y + 16 q^2 = 0` with `x = (2q - p) y / (2q) + 2`:
/// two solutions `y = 4q / (p +- 2 sqrt(q))` when `p^2 != 4q` and `q` is a
/// square, one solution `[2q/p + 1, 2q/p]` on the harmonic line when
/// `p^2 = 4q`, and none when `q` is a non-square. Over the floating fields
/// the `p^2 = 4q` branch is decided by `tol`.
pub fn preimages<F: Field>(w: &SigPoint<F>, tol: Tol) -> PreimageSet<F> {
    let p = &w.x;
    let q = &w.y;
    if q.is_zero() {
        // y must be 0, forcing the image onto [0,0]: nothing maps to [p,0]
        // with p != 0, and the fiber over [0,0] is the whole punctured axis.
        return PreimageSet {
            points: Vec::new(),
            ramified: false,
            diagnostic: Some("fiber over q = 0 is empty (p != 0) or an entire axis (p = 0)"),
        };
    }
    let four_q = q.embed(4) * q.clone();
    let p_sq = p.clone() * p.clone();
    if p_sq.tol_eq(&four_q, tol) {
        // p cannot vanish here since q != 0
        let t = (q.embed(2) * q.clone())
            .div(p)
            .expect("p nonzero on ramification locus");
        let z = SigPoint {
            x: t.clone() + t.embed(1),
            y: t,
        };
        return PreimageSet {
            points: alloc::vec![z],
            ramified: true,
            diagnostic: None,
        };
    }
    let Some((root, neg_root)) = q.sqrt_pair() else {
        return PreimageSet {
            points: Vec::new(),
            ramified: false,
            diagnostic: Some("q is not a square in the field"),
        };
    };
    let mut points = Vec::with_capacity(2);
    let two_q = q.embed(2) * q.clone();
    for s in [root, neg_root] {
        let den = p.clone() + s.embed(2) * s;
        if den.is_zero() {
            continue; // only possible at p^2 = 4q, handled above; guards roundoff
        }
        let y = four_q.clone().div(&den).expect("checked nonzero");
        let x =
            (two_q.clone() - p.clone()) * y.clone().div(&two_q).expect("q nonzero") + p.embed(2);
        points.push(SigPoint { x, y });
    }
    PreimageSet {
        points,
        ramified: false,
        diagnostic: None,
    }
}

/// Harmonic locus `H`: some defining quadruple has cross-ratio -1, i.e.
/// `x = y + 1`.
pub fn is_harmonic<F: Field>(z: &SigPoint<F>) -> bool {
    z.x == z.y.clone() + z.y.embed(1)
}

/// Balanced locus `B`: `j(r) = j(s)`, i.e. `x^2 = 4y`.
pub fn is_balanced<F: Field>(z: &SigPoint<F>) -> bool {
    z.x.clone() * z.x.clone() == z.y.embed(4) * z.y.clone()
}

/// The second-iterate map on either of `H`, `B`: `alpha(t) = t^2/(t-2)^2`.
pub fn alpha<F: Field>(t: &F) -> Result<F> {
    let d = t.clone() - t.embed(2);
    if d.is_zero() {
        return Err(Error::Pole("alpha at t = 2"));
    }
    (t.clone() * t.clone()).div(&(d.clone() * d))
}

/// Derivative `alpha'(t) = -4t / (t - 2)^3`.
pub fn alpha_prime<F: Field>(t: &F) -> Result<F> {
    let d = t.clone() - t.embed(2);
    if d.is_zero() {
        return Err(Error::Pole("alpha' at t = 2"));
    }
    (t.embed(-4) * t.clone()).div(&(d.clone() * d.clone() * d))
}

/// The cross-ratio shadow of `tau`: `w° = (2 - w) / (1 + w)`.
///
/// The domain excludes `{-1, 2, 1/2}` as stated for the operation, although
/// the formula itself is finite at `2` and `1/2`; [`circ_relaxed`] accepts
/// them.
pub fn circ<F: Field>(w: &F) -> Result<F> {
    let one = w.embed(1);
    if *w == w.embed(-1) || *w == w.embed(2) || w.clone() * w.embed(2) == one {
        return Err(Error::ExcludedParameter("circ at w in {-1, 2, 1/2}"));
    }
    circ_relaxed(w)
}

/// `w°` with only the genuine pole `w = -1` excluded.
pub fn circ_relaxed<F: Field>(w: &F) -> Result<F> {
    let den = w.embed(1) + w.clone();
    if den.is_zero() {
        return Err(Error::Pole("circ at w = -1"));
    }
    (w.embed(2) - w.clone()).div(&den)
}

/// The six cross-ratio values conjugate to `r` under the involution, in the
/// order `(2-r)/(r+1), (r+1)/(2-r), (r+1)/(2r-1), (2r-1)/(r+1), (2r-1)/(r-2),
/// (r-2)/(2r-1)`; the first is the declared `r°`.
pub fn circ_orbit<F: Field>(r: &F) -> Result<[F; 6]> {
    let one = r.embed(1);
    let two = r.embed(2);
    let a = two.clone() - r.clone(); // 2 - r
    let b = r.clone() + one; // r + 1
    let c = two.clone() * r.clone() - r.embed(1); // 2r - 1
    let d = r.clone() - two; // r - 2
    if b.is_zero() || a.is_zero() || c.is_zero() {
        return Err(Error::ExcludedParameter("circ orbit at r in {-1, 2, 1/2}"));
    }
    Ok([
        a.clone().div(&b)?,
        b.clone().div(&a)?,
        b.clone().div(&c)?,
        c.clone().div(&b)?,
        c.clone().div(&d)?,
        d.div(&c)?,
    ])
}

/// First matching stratum label for a point.
pub fn stratum<F: Field>(z: &SigPoint<F>) -> DomainStratum {
    if z.on_diagonal() {
        return DomainStratum::W1;
    }
    let two = z.x.embed(2);
    let four = z.x.embed(4);
    if z.y.is_zero() || z.y == two.clone() * z.x.clone() - four.clone() {
        return DomainStratum::W2;
    }
    let w3 = four.clone() * z.x.clone() * z.x.clone() - four.clone() * z.x.clone() * z.y.clone()
        + z.y.clone() * z.y.clone()
        - z.x.embed(8) * z.y.clone();
    if w3.is_zero() {
        return DomainStratum::W3;
    }
    DomainStratum::InteriorSoFar
}

/// A forward orbit, stopped early if it lands on the diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct Orbit<F> {
    /// Visited points, starting with the initial one.
    pub steps: Vec<SigPoint<F>>,
    /// Index of the step at which the map became undefined, if it did.
    pub hit_diagonal_at: Option<usize>,
}

/// Iterate `pi` up to `n` times from `start`.
pub fn orbit<F: Field>(start: &SigPoint<F>, n: usize) -> Orbit<F> {
    let mut steps = Vec::with_capacity(n + 1);
    steps.push(start.clone());
    for i in 0..n {
        let last = steps.last().expect("nonempty");
        if last.on_diagonal() {
            return Orbit {
                steps,
                hit_diagonal_at: Some(i),
            };
        }
        match ps_map(last) {
            Ok(next) => steps.push(next),
            Err(_) => {
                return Orbit {
                    steps,
                    hit_diagonal_at: Some(i),
                }
            }
        }
    }
    Orbit {
        steps,
        hit_diagonal_at: None,
    }
}
