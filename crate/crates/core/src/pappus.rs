//! Pappus configurations, their signatures, and the Steiner and Leisenring
//! constructions.
//!
//! A Pappus structure is an unordered pair of collinear point triples on two
//! distinct lines, all six points distinct and away from the lines'
//! intersection `P`. Permuting the second triple by `sigma` gives six Pappus
//! lines `Lambda_sigma`; Steiner's theorem makes the even three concurrent at
//! a point `E` and the odd three at `E'`. Read in the dual plane, the six
//! lines plus `{E, E'}` form a new Pappus structure, and the induced action
//! on signatures is the Pappus-Steiner map of [`crate::psmap`].
//!
//! Leisenring's variant (through the points `R_i = P Q_i ^ A_i B_i`) produces
//! six more lines `Psi_sigma` with the same concurrency pattern; the two
//! sextuples are projectively equivalent, and the conjugating matrices (`N`
//! between the Pappus and Leisenring sextuples of one configuration, `T`
//! between the Pappus sextuples of `C(r, s)` and `C(r°, s°)`) are verified
//! here in closed form.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::{Field, FromInt, Rational};
use crate::proj::{
    cross_ratio_of_lines, cross_ratio_on_line, incident, j_invariant, join, meet, Line2, Mat3, Pt2,
};
use crate::psmap::{circ, ps_map, SigPoint};
use crate::{Error, Result};

/// A permutation of `{1, 2, 3}`, stored as images (0-indexed).
///
/// The cycle `(1 3 2)` takes 1 to 3, so its bottom row reads `B3 B1 B2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Perm3 {
    images: [usize; 3],
    name: &'static str,
}

impl Perm3 {
    pub const E: Perm3 = Perm3 {
        images: [0, 1, 2],
        name: "e",
    };
    pub const S12: Perm3 = Perm3 {
        images: [1, 0, 2],
        name: "(12)",
    };
    pub const S13: Perm3 = Perm3 {
        images: [2, 1, 0],
        name: "(13)",
    };
    pub const S23: Perm3 = Perm3 {
        images: [0, 2, 1],
        name: "(23)",
    };
    pub const C123: Perm3 = Perm3 {
        images: [1, 2, 0],
        name: "(123)",
    };
    pub const C132: Perm3 = Perm3 {
        images: [2, 0, 1],
        name: "(132)",
    };

    /// All six, in the fixed order `e, (12), (13), (23), (123), (132)`.
    pub const ALL: [Perm3; 6] = [
        Self::E,
        Self::S12,
        Self::S13,
        Self::S23,
        Self::C123,
        Self::C132,
    ];
    pub const EVEN: [Perm3; 3] = [Self::E, Self::C123, Self::C132];
    pub const ODD: [Perm3; 3] = [Self::S12, Self::S13, Self::S23];

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_even(&self) -> bool {
        Self::EVEN.contains(self)
    }

    pub fn name(&self) -> &'static str {
        self.name
    }
}

/// Indices pairing `sigma` with `(13) sigma (13)` in [`Perm3::ALL`] order;
/// this is the correspondence the matrix `T` induces between the Pappus
/// sextuples of `C(r, s)` and `C(r°, s°)`.
pub const CIRC_SEXTUPLE_PAIRING: [usize; 6] = [0, 3, 2, 1, 5, 4];

/// A validated Pappus structure.
#[derive(Debug, Clone)]
pub struct PappusConfig<F> {
    a: [Pt2<F>; 3],
    b: [Pt2<F>; 3],
    line_a: Line2<F>,
    line_b: Line2<F>,
    vertex: Pt2<F>,
    dual: bool,
}

impl<F: Field> PappusConfig<F> {
    /// Build and validate a structure from the two point triples.
    pub fn new(a: [Pt2<F>; 3], b: [Pt2<F>; 3]) -> Result<Self> {
        Self::new_in_plane(a, b, false)
    }

    fn new_in_plane(a: [Pt2<F>; 3], b: [Pt2<F>; 3], dual: bool) -> Result<Self> {
        let all: [&Pt2<F>; 6] = [&a[0], &a[1], &a[2], &b[0], &b[1], &b[2]];
        for i in 0..6 {
            for j in (i + 1)..6 {
                if all[i].proj_eq(all[j]) {
                    return Err(Error::Structure("the six points must be pairwise distinct"));
                }
            }
        }
        let line_a = join(&a[0], &a[1]).map_err(|_| Error::Structure("A-points degenerate"))?;
        if !incident(&a[2], &line_a) {
            return Err(Error::Structure("A-points are not collinear"));
        }
        let line_b = join(&b[0], &b[1]).map_err(|_| Error::Structure("B-points degenerate"))?;
        if !incident(&b[2], &line_b) {
            return Err(Error::Structure("B-points are not collinear"));
        }
        if line_a.proj_eq(&line_b) {
            return Err(Error::Structure("the two carrier lines coincide"));
        }
        let vertex =
            meet(&line_a, &line_b).map_err(|_| Error::Structure("carrier lines coincide"))?;
        for p in all {
            if vertex.proj_eq(p) {
                return Err(Error::Structure(
                    "a point coincides with the lines' intersection",
                ));
            }
        }
        Ok(PappusConfig {
            a,
            b,
            line_a,
            line_b,
            vertex,
            dual,
        })
    }

    /// The standard structure `C(r, s)` on the lines `z1 = 0`, `z2 = 0`:
    /// `A = [0,1,r], [0,1,1], [0,1,0]` and `B = [1,0,s], [1,0,1], [1,0,0]`,
    /// so that the defining cross-ratios are exactly `r` and `s`.
    pub fn standard(r: &F, s: &F) -> Result<Self> {
        let one = r.embed(1);
        let zero = r.embed(0);
        let a = [
            Pt2::new(zero.clone(), one.clone(), r.clone())?,
            Pt2::new(zero.clone(), one.clone(), one.clone())?,
            Pt2::new(zero.clone(), one.clone(), zero.clone())?,
        ];
        let b = [
            Pt2::new(one.clone(), zero.clone(), s.clone())?,
            Pt2::new(one.clone(), zero.clone(), one.clone())?,
            Pt2::new(one, zero.clone(), zero)?,
        ];
        Self::new(a, b)
    }

    pub fn a_points(&self) -> &[Pt2<F>; 3] {
        &self.a
    }

    pub fn b_points(&self) -> &[Pt2<F>; 3] {
        &self.b
    }

    pub fn carrier_lines(&self) -> (&Line2<F>, &Line2<F>) {
        (&self.line_a, &self.line_b)
    }

    pub fn vertex(&self) -> &Pt2<F> {
        &self.vertex
    }

    /// True when this structure lives in the dual plane (reporting only).
    pub fn is_dual(&self) -> bool {
        self.dual
    }

    /// The defining cross-ratios `r = <A1, A2, A3, P>` and `s = <B1, B2, B3, P>`.
    pub fn params(&self) -> Result<(F, F)> {
        let r = cross_ratio_on_line(
            &self.line_a,
            [&self.a[0], &self.a[1], &self.a[2], &self.vertex],
        )?;
        let s = cross_ratio_on_line(
            &self.line_b,
            [&self.b[0], &self.b[1], &self.b[2], &self.vertex],
        )?;
        Ok((r, s))
    }

    /// The signature `[j(r) + j(s), j(r) j(s)]`.
    pub fn signature(&self) -> Result<SigPoint<F>> {
        let (r, s) = self.params()?;
        let jr = j_invariant(&r)?;
        let js = j_invariant(&s)?;
        Ok(SigPoint::new(jr.clone() + js.clone(), jr * js))
    }

    /// The Pappus line of the array with bottom row permuted by `sigma`,
    /// checking all three cross-hair points land on it.
    pub fn pappus_line(&self, sigma: Perm3) -> Result<Line2<F>> {
        let c = |i: usize| &self.b[sigma.apply(i)];
        let p12 = meet(&join(&self.a[0], c(1))?, &join(&self.a[1], c(0))?)?;
        let p23 = meet(&join(&self.a[1], c(2))?, &join(&self.a[2], c(1))?)?;
        let p13 = meet(&join(&self.a[0], c(2))?, &join(&self.a[2], c(0))?)?;
        let line = join(&p12, &p23)?;
        if F::EXACT && !incident(&p13, &line) {
            return Err(Error::Degenerate("Pappus collinearity check failed"));
        }
        Ok(line)
    }

    /// All six Pappus lines in [`Perm3::ALL`] order.
    pub fn pappus_lines(&self) -> Result<[Line2<F>; 6]> {
        let mut out = Vec::with_capacity(6);
        for sigma in Perm3::ALL {
            out.push(self.pappus_line(sigma)?);
        }
        Ok(out.try_into().expect("six lines"))
    }

    /// The Steiner concurrency points `(E, E')` of the even and odd line
    /// triples. Fails with [`Error::SteinerDegenerate`] exactly when both
    /// `r` and `s` satisfy `z^2 - z + 1 = 0`.
    pub fn steiner_points(&self) -> Result<(Pt2<F>, Pt2<F>)> {
        let lines = self.pappus_lines()?;
        let even = meet(&lines[0], &lines[4]).map_err(|_| Error::SteinerDegenerate)?;
        if F::EXACT && !incident(&even, &lines[5]) {
            return Err(Error::Degenerate("even Steiner concurrency failed"));
        }
        let odd = meet(&lines[1], &lines[2]).map_err(|_| Error::SteinerDegenerate)?;
        if F::EXACT && !incident(&odd, &lines[3]) {
            return Err(Error::Degenerate("odd Steiner concurrency failed"));
        }
        Ok((even, odd))
    }

    /// The structure Steiner's theorem produces in the dual plane: its
    /// `points` are the six Pappus lines, its carrier `lines` are `E` and
    /// `E'`. Defined only when the signature is off the diagonal.
    pub fn steiner_structure(&self) -> Result<PappusConfig<F>> {
        let sig = self.signature()?;
        if sig.on_diagonal() {
            return Err(Error::UndefinedOnDiagonal);
        }
        let lines = self.pappus_lines()?;
        let dual = |l: &Line2<F>| Pt2(l.coords().clone());
        PappusConfig::new_in_plane(
            [dual(&lines[0]), dual(&lines[4]), dual(&lines[5])],
            [dual(&lines[1]), dual(&lines[2]), dual(&lines[3])],
            !self.dual,
        )
    }

    /// The Leisenring line of the array with bottom row permuted by `sigma`:
    /// through `R_i = P Q_i ^ A_i C_i` where `Q_i` is the cross-hair point of
    /// the two complementary columns. Collinearity is checked.
    pub fn leisenring_line(&self, sigma: Perm3) -> Result<Line2<F>> {
        let c = |i: usize| &self.b[sigma.apply(i)];
        let q1 = meet(&join(&self.a[1], c(2))?, &join(&self.a[2], c(1))?)?;
        let q2 = meet(&join(&self.a[0], c(2))?, &join(&self.a[2], c(0))?)?;
        let q3 = meet(&join(&self.a[0], c(1))?, &join(&self.a[1], c(0))?)?;
        let r_pt = |i: usize, q: &Pt2<F>| -> Result<Pt2<F>> {
            meet(&join(&self.vertex, q)?, &join(&self.a[i], c(i))?)
        };
        let r1 = r_pt(0, &q1)?;
        let r2 = r_pt(1, &q2)?;
        let r3 = r_pt(2, &q3)?;
        let line = join(&r1, &r2)?;
        if F::EXACT && !incident(&r3, &line) {
            return Err(Error::Degenerate("Leisenring collinearity check failed"));
        }
        Ok(line)
    }

    /// All six Leisenring lines in [`Perm3::ALL`] order.
    pub fn leisenring_lines(&self) -> Result<[Line2<F>; 6]> {
        let mut out = Vec::with_capacity(6);
        for sigma in Perm3::ALL {
            out.push(self.leisenring_line(sigma)?);
        }
        Ok(out.try_into().expect("six lines"))
    }

    /// Rigby's concurrency points `(F, F')` of the even and odd Leisenring
    /// triples.
    pub fn leisenring_points(&self) -> Result<(Pt2<F>, Pt2<F>)> {
        let lines = self.leisenring_lines()?;
        let even = meet(&lines[0], &lines[4]).map_err(|_| Error::SteinerDegenerate)?;
        if F::EXACT && !incident(&even, &lines[5]) {
            return Err(Error::Degenerate("even Leisenring concurrency failed"));
        }
        let odd = meet(&lines[1], &lines[2]).map_err(|_| Error::SteinerDegenerate)?;
        if F::EXACT && !incident(&odd, &lines[3]) {
            return Err(Error::Degenerate("odd Leisenring concurrency failed"));
        }
        Ok((even, odd))
    }
}

// ---------------------------------------------------------------------------
// closed forms and conjugating matrices
// ---------------------------------------------------------------------------

/// Closed forms of the Steiner points for the standard structure `C(r, s)`:
///
/// ```text
/// E  = [ r(r-1)(s^2-s+1),  s(s-1)(r^2-r+1),  rs(rs-1) ]
/// E' = [ r(r-1)(s^2-s+1), -s(s-1)(r^2-r+1),  rs(r-s)  ]
/// ```
pub fn steiner_closed_forms<F: Field>(r: &F, s: &F) -> Result<(Pt2<F>, Pt2<F>)> {
    let one = r.embed(1);
    let ka = r.clone() * r.clone() - r.clone() + one.clone(); // r^2 - r + 1
    let kb = s.clone() * s.clone() - s.clone() + one.clone(); // s^2 - s + 1
    let fa = r.clone() * (r.clone() - one.clone()) * kb; // r(r-1)(s^2-s+1)
    let fb = s.clone() * (s.clone() - one.clone()) * ka; // s(s-1)(r^2-r+1)
    let rs = r.clone() * s.clone();
    let e = Pt2::new(fa.clone(), fb.clone(), rs.clone() * (rs.clone() - one))
        .map_err(|_| Error::SteinerDegenerate)?;
    let ep =
        Pt2::new(fa, -fb, rs * (r.clone() - s.clone())).map_err(|_| Error::SteinerDegenerate)?;
    Ok((e, ep))
}

/// Closed forms of Rigby's points for the standard structure `C(r, s)`:
///
/// ```text
/// F  = [ r(r-1)(s^2-s+1),  s(s-1)(r^2-r+1),  (r-1)(s-1)(r+s)(rs-1) ]
/// F' = [ r(r-1)(s^2-s+1), -s(s-1)(r^2-r+1), -(r-1)(s-1)(rs+1)(r-s) ]
/// ```
pub fn rigby_closed_forms<F: Field>(r: &F, s: &F) -> Result<(Pt2<F>, Pt2<F>)> {
    let one = r.embed(1);
    let ka = r.clone() * r.clone() - r.clone() + one.clone();
    let kb = s.clone() * s.clone() - s.clone() + one.clone();
    let rm1 = r.clone() - one.clone();
    let sm1 = s.clone() - one.clone();
    let fa = r.clone() * rm1.clone() * kb;
    let fb = s.clone() * sm1.clone() * ka;
    let rs = r.clone() * s.clone();
    let f = Pt2::new(
        fa.clone(),
        fb.clone(),
        rm1.clone() * sm1.clone() * (r.clone() + s.clone()) * (rs.clone() - one.clone()),
    )
    .map_err(|_| Error::SteinerDegenerate)?;
    let fp = Pt2::new(fa, -fb, -(rm1 * sm1 * (rs + one) * (r.clone() - s.clone())))
        .map_err(|_| Error::SteinerDegenerate)?;
    Ok((f, fp))
}

/// The matrix `N` conjugating the Pappus sextuple of `C(r, s)` into its
/// Leisenring sextuple: acting on line coordinates by `l -> N l`, it takes
/// `Lambda_sigma` to `Psi_sigma` for every `sigma` (and `EE'` to `FF'`).
pub fn leisenring_matrix<F: Field>(r: &F, s: &F) -> Mat3<F> {
    let zero = r.embed(0);
    let one = r.embed(1);
    let two = r.embed(2);
    Mat3([
        [two.clone(), zero.clone(), s.clone() + one.clone()],
        [zero.clone(), two, r.clone() + one.clone()],
        [zero.clone(), zero, -one],
    ])
}

/// The matrix `T` relating the Pappus sextuples of `C(r, s)` and
/// `C(r°, s°)`: acting on line coordinates by `l -> T l`, it takes
/// `Lambda_sigma(r, s)` to `Lambda_{(13) sigma (13)}(r°, s°)`
/// (see [`CIRC_SEXTUPLE_PAIRING`]).
///
/// Requires `r, s` outside `{0, 1, -1, 2, 1/2}`.
pub fn circ_matrix<F: Field>(r: &F, s: &F) -> Result<Mat3<F>> {
    let one = r.embed(1);
    let two = r.embed(2);
    for t in [r, s] {
        if t.is_zero()
            || *t == one
            || *t == -one.clone()
            || *t == two
            || t.clone() * two.clone() == one
        {
            return Err(Error::ExcludedParameter(
                "circ matrix needs r, s outside {0, 1, -1, 2, 1/2}",
            ));
        }
    }
    let entry = |t: &F| -> Result<(F, F)> {
        let tm1 = t.clone() - one.clone();
        let diag = (two.clone() * t.clone() - one.clone()) * (t.clone() - two.clone());
        Ok((
            diag.div(&(t.clone() * tm1.clone()))?,
            (t.clone() - two.clone()).div(&tm1)?,
        ))
    };
    let (ds, us) = entry(s)?;
    let (dr, ur) = entry(r)?;
    let zero = r.embed(0);
    Mat3::new([
        [ds, zero.clone(), us],
        [zero.clone(), dr, ur],
        [zero.clone(), zero.clone(), -(one.clone() + two)],
    ])
}

/// Rigby's harmonic separation: in the pencil through `P` parametrized by
/// `t -> z1 + t z2 = 0`, the lines `L, M, PE', PE` sit at `0, infinity, +-c`,
/// so their cross-ratio is `-1`. Checked here for any admissible `(r, s)`
/// via the standard structure.
pub fn rigby_harmonic_check<F: Field>(r: &F, s: &F) -> Result<bool> {
    let config = PappusConfig::standard(r, s)?;
    let (e, ep) = config.steiner_points()?;
    let pe = join(config.vertex(), &e)?;
    let pep = join(config.vertex(), &ep)?;
    let cr = cross_ratio_of_lines(&config.line_a, &config.line_b, &pep, &pe)?;
    Ok(cr == r.embed(-1))
}

/// Outcome of the Leisenring-equivalence verification for one `(r, s)`.
#[derive(Debug, Clone)]
pub struct LeisenringEquivalence<F> {
    /// `N` maps each `Lambda_sigma` to `Psi_sigma`, including the joins of
    /// the concurrency points.
    pub lines_match: bool,
    /// The dual-pencil cross-ratios agree: `c = d` and `c' = d'`.
    pub cross_ratios_match: bool,
    pub matrix: Mat3<F>,
}

impl<F> LeisenringEquivalence<F> {
    pub fn holds(&self) -> bool {
        self.lines_match && self.cross_ratios_match
    }
}

/// Verify that the Leisenring structure of `C(r, s)` is the image of its
/// Steiner structure under the matrix `N`, and that the identifying
/// cross-ratios coincide.
pub fn leisenring_equivalence_check<F: Field>(r: &F, s: &F) -> Result<LeisenringEquivalence<F>> {
    let config = PappusConfig::standard(r, s)?;
    let lam = config.pappus_lines()?;
    let psi = config.leisenring_lines()?;
    let (e, ep) = config.steiner_points()?;
    let (f, fp) = config.leisenring_points()?;
    let lam_star = join(&e, &ep)?;
    let psi_star = join(&f, &fp)?;

    let n = leisenring_matrix(r, s);
    let mut lines_match = n.act_dual(&lam_star).proj_eq(&psi_star);
    for i in 0..6 {
        lines_match &= n.act_dual(&lam[i]).proj_eq(&psi[i]);
    }

    let c = cross_ratio_of_lines(&lam[0], &lam[4], &lam[5], &lam_star)?;
    let cp = cross_ratio_of_lines(&lam[1], &lam[2], &lam[3], &lam_star)?;
    let d = cross_ratio_of_lines(&psi[0], &psi[4], &psi[5], &psi_star)?;
    let dp = cross_ratio_of_lines(&psi[1], &psi[2], &psi[3], &psi_star)?;
    let cross_ratios_match = c == d && cp == dp;

    Ok(LeisenringEquivalence {
        lines_match,
        cross_ratios_match,
        matrix: n,
    })
}

/// Verify that `T` carries the Pappus sextuple of `C(r, s)` onto that of
/// `C(r°, s°)`, line by line under [`CIRC_SEXTUPLE_PAIRING`].
pub fn circ_conjugation_check<F: Field>(r: &F, s: &F) -> Result<bool> {
    let t = circ_matrix(r, s)?;
    let rc = circ(r)?;
    let sc = circ(s)?;
    let lam = PappusConfig::standard(r, s)?.pappus_lines()?;
    let lam_circ = PappusConfig::standard(&rc, &sc)?.pappus_lines()?;
    let mut ok = true;
    for (i, &j) in CIRC_SEXTUPLE_PAIRING.iter().enumerate() {
        ok &= t.act_dual(&lam[i]).proj_eq(&lam_circ[j]);
    }
    // the pairing is a bijection, so the sextuples also match as sets
    Ok(ok)
}

// ---------------------------------------------------------------------------
// seeded verification drivers
// ---------------------------------------------------------------------------

/// Per-trial record of a verification run.
#[derive(Debug, Clone)]
pub struct TrialRecord {
    pub index: usize,
    pub params: String,
    pub ok: bool,
    pub detail: Option<String>,
}

/// Outcome of a seeded verification batch.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub target: &'static str,
    pub records: Vec<TrialRecord>,
    /// Draws skipped because they fell on an excluded locus.
    pub skipped: usize,
}

impl VerifyReport {
    pub fn all_ok(&self) -> bool {
        self.records.iter().all(|r| r.ok)
    }

    pub fn first_failure(&self) -> Option<&TrialRecord> {
        self.records.iter().find(|r| !r.ok)
    }
}

/// Small-integer parameter draw in `[-9, 9]` excluding `{0, 1}`.
pub fn sample_param<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let n = rng.gen_range(-9..=9i64);
        if n != 0 && n != 1 {
            return Rational::int(n);
        }
    }
}

fn run_trials<F>(target: &'static str, trials: usize, seed: u64, mut f: F) -> VerifyReport
where
    F: FnMut(&Rational, &Rational) -> Option<core::result::Result<(), String>>,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut records = Vec::with_capacity(trials);
    let mut skipped = 0;
    let mut index = 0;
    while records.len() < trials {
        let r = sample_param(&mut rng);
        let s = sample_param(&mut rng);
        match f(&r, &s) {
            None => skipped += 1,
            Some(outcome) => {
                records.push(TrialRecord {
                    index,
                    params: format!("r={r}, s={s}"),
                    ok: outcome.is_ok(),
                    detail: outcome.err(),
                });
                index += 1;
            }
        }
    }
    VerifyReport {
        target,
        records,
        skipped,
    }
}

/// Pappus's theorem on random structures: all six lines exist with their
/// collinearity checks, and distinct permutations give distinct lines for
/// generic parameters.
pub fn verify_pappus(trials: usize, seed: u64) -> VerifyReport {
    run_trials("pappus", trials, seed, |r, s| {
        let config = match PappusConfig::standard(r, s) {
            Ok(c) => c,
            Err(_) => return None,
        };
        let lines = match config.pappus_lines() {
            Ok(l) => l,
            Err(e) => return Some(Err(format!("line construction failed: {e}"))),
        };
        if r != s && lines[0].proj_eq(&lines[1]) {
            return Some(Err(String::from("sigma = e and sigma = (12) coincide")));
        }
        Some(Ok(()))
    })
}

/// Steiner's theorem and the signature theorem: concurrency points match the
/// closed forms, and `sig(steiner(Pi)) = pi(sig(Pi))`.
pub fn verify_steiner(trials: usize, seed: u64) -> VerifyReport {
    run_trials("steiner", trials, seed, |r, s| {
        let config = match PappusConfig::standard(r, s) {
            Ok(c) => c,
            Err(_) => return None,
        };
        let sig = config.signature().expect("valid config has a signature");
        if sig.on_diagonal() {
            return None; // x = y: steiner(Pi) undefined, counted as skipped
        }
        let (e, ep) = match config.steiner_points() {
            Ok(x) => x,
            Err(e) => return Some(Err(format!("Steiner points: {e}"))),
        };
        let (ce, cep) = steiner_closed_forms(r, s).expect("admissible parameters");
        if !e.proj_eq(&ce) || !ep.proj_eq(&cep) {
            return Some(Err(String::from(
                "closed forms disagree with concurrency points",
            )));
        }
        if e.proj_eq(&ep) {
            return Some(Err(String::from("E and E' coincide")));
        }
        let dual = match config.steiner_structure() {
            Ok(d) => d,
            Err(e) => return Some(Err(format!("steiner structure: {e}"))),
        };
        let got = dual.signature().expect("dual structure has a signature");
        let expect = ps_map(&sig).expect("off the diagonal");
        if got != expect {
            return Some(Err(format!(
                "signature theorem fails: got [{}, {}], expected [{}, {}]",
                got.x, got.y, expect.x, expect.y
            )));
        }
        Some(Ok(()))
    })
}

/// Leisenring's theorem, Rigby's concurrences, the closed forms of `F, F'`,
/// and the conjugating matrix `N`.
pub fn verify_leisenring(trials: usize, seed: u64) -> VerifyReport {
    run_trials("leisenring", trials, seed, |r, s| {
        let config = match PappusConfig::standard(r, s) {
            Ok(c) => c,
            Err(_) => return None,
        };
        match config.signature() {
            Ok(sig) if !sig.on_diagonal() => {}
            _ => return None,
        }
        let (f, fp) = match config.leisenring_points() {
            Ok(x) => x,
            Err(e) => return Some(Err(format!("Rigby points: {e}"))),
        };
        let (cf, cfp) = rigby_closed_forms(r, s).expect("admissible parameters");
        if !f.proj_eq(&cf) || !fp.proj_eq(&cfp) {
            return Some(Err(String::from("Rigby closed forms disagree")));
        }
        match leisenring_equivalence_check(r, s) {
            Ok(eq) if eq.holds() => Some(Ok(())),
            Ok(_) => Some(Err(String::from("N does not conjugate the sextuples"))),
            Err(e) => Some(Err(format!("equivalence check: {e}"))),
        }
    })
}

/// Harmonic separation of `L, M` by `PE', PE` on random structures.
pub fn verify_rigby_harmonic(trials: usize, seed: u64) -> VerifyReport {
    run_trials(
        "rigby-harmonic",
        trials,
        seed,
        |r, s| match rigby_harmonic_check(r, s) {
            Ok(true) => Some(Ok(())),
            Ok(false) => Some(Err(String::from("cross-ratio is not -1"))),
            Err(Error::Structure(_)) | Err(Error::SteinerDegenerate) => None,
            Err(e) => Some(Err(format!("{e}"))),
        },
    )
}

/// The `T` conjugation between `C(r, s)` and `C(r°, s°)` on random draws.
pub fn verify_circ_conjugation(trials: usize, seed: u64) -> VerifyReport {
    run_trials(
        "circ-conjugation",
        trials,
        seed,
        |r, s| match circ_conjugation_check(r, s) {
            Ok(true) => Some(Ok(())),
            Ok(false) => Some(Err(String::from("T does not map the sextuple correctly"))),
            Err(Error::ExcludedParameter(_)) | Err(Error::Structure(_)) => None,
            Err(Error::SteinerDegenerate) | Err(Error::UndefinedOnDiagonal) => None,
            Err(e) => Some(Err(format!("{e}"))),
        },
    )
}

/// The involution suite: `tau` is an involution, `pi . tau = pi` off the
/// harmonic line, and the fiber of `pi(z)` contains `z`.
pub fn verify_involution(trials: usize, seed: u64) -> VerifyReport {
    use crate::field::Tol;
    use crate::psmap::{involution, preimages};
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut records = Vec::with_capacity(trials);
    let mut skipped = 0usize;
    let mut index = 0usize;
    while records.len() < trials {
        let z = SigPoint::new(
            Rational::ratio(rng.gen_range(-50..50), rng.gen_range(1..10)),
            Rational::ratio(rng.gen_range(-50..50), rng.gen_range(1..10)),
        );
        if z.on_diagonal() {
            skipped += 1;
            continue;
        }
        let tz = involution(&z);
        let mut ok = involution(&tz) == z;
        let mut detail = if ok {
            None
        } else {
            Some(String::from("tau^2 != id here"))
        };
        if ok {
            match (ps_map(&z), ps_map(&tz)) {
                (Ok(a), Ok(b)) => {
                    if a != b {
                        ok = false;
                        detail = Some(String::from("pi(tau(z)) != pi(z)"));
                    } else if !a.y.is_zero() {
                        let fiber = preimages(&a, Tol::default());
                        if !fiber.points.contains(&z) {
                            ok = false;
                            detail = Some(String::from("fiber of pi(z) does not contain z"));
                        }
                    }
                }
                _ => {
                    skipped += 1;
                    continue;
                }
            }
        }
        records.push(TrialRecord {
            index,
            params: format!("x={}, y={}", z.x, z.y),
            ok,
            detail,
        });
        index += 1;
    }
    VerifyReport {
        target: "involution",
        records,
        skipped,
    }
}

/// Signature invariance under the full symmetry group: the six cross-ratio
/// substitutions in each slot and the swap `(r, s) -> (s, r)`.
pub fn verify_signature_symmetries(trials: usize, seed: u64) -> VerifyReport {
    use crate::proj::cross_ratio_orbit;
    run_trials("signature-symmetries", trials, seed, |r, s| {
        let config = match PappusConfig::standard(r, s) {
            Ok(c) => c,
            Err(_) => return None,
        };
        let sig = config.signature().expect("valid config");
        let orb_r = cross_ratio_orbit(r).expect("r outside 0,1");
        let orb_s = cross_ratio_orbit(s).expect("s outside 0,1");
        for rr in &orb_r {
            for ss in &orb_s {
                for (a, b) in [(rr, ss), (ss, rr)] {
                    let other = match PappusConfig::standard(a, b) {
                        Ok(c) => c,
                        Err(_) => continue,
                    };
                    let got = other.signature().expect("valid config");
                    if got != sig {
                        return Some(Err(format!("signature changed at r'={a}, s'={b}")));
                    }
                }
            }
        }
        Some(Ok(()))
    })
}
