//! Brute-force periodic-point detection over `F_p` and the congruence
//! predicates for periods 3 and 4.
//!
//! The detector walks the functional graph of the map on all `p^2` starting
//! points with a visited bitmap, so each point is stepped once and every
//! cycle of every length up to the requested period is found exactly. That
//! brute force is the ground truth; the congruence predicates
//!
//! ```text
//! n = 3:  p = 1, 5, 8, 12 (mod 13)   or   p = 1, 6 (mod 7)
//! n = 4:  p = 1, 4 (mod 5)           or   p = 1, 4, 13, 16 (mod 17)
//! ```
//!
//! and the root tests of the eliminant polynomials are checked against it
//! prime by prime. The criteria hold for all sufficiently large primes;
//! the finitely many bad primes (the discriminant primes and any where the
//! elimination degenerates) are configured as exempt rather than assumed
//! impossible.

use alloc::vec;
use alloc::vec::Vec;

use bitvec::vec::BitVec;

use crate::field::{mod_mul, Fp, Prime};
use crate::poly::IntPoly;
use crate::psmap::SigPoint;
use crate::{Error, Result};

/// The irreducible cubics `u`, `v` whose roots mod p signal period-3 points:
/// `u = x^3 - 84x^2 + 896x - 1984`, `v = x^3 - 48x^2 + 656x - 1856`.
pub fn period3_cubics() -> (IntPoly, IntPoly) {
    (
        IntPoly::from_ints(&[-1984, 896, -84, 1]),
        IntPoly::from_ints(&[-1856, 656, -48, 1]),
    )
}

/// The quartic `w = x^4 - 144x^3 + 3152x^2 - 16896x + 25856` of the period-4
/// elimination.
pub fn period4_quartic() -> IntPoly {
    IntPoly::from_ints(&[25856, -16896, 3152, -144, 1])
}

/// The five quadratic factors of the period-4 elimination; each has
/// discriminant `5 * square`, so they all reduce to the mod-5 criterion.
pub fn period4_quadratics() -> [IntPoly; 5] {
    [
        IntPoly::from_ints(&[304, -96, 1]),
        IntPoly::from_ints(&[29, -14, 1]),
        IntPoly::from_ints(&[80, -20, 1]),
        IntPoly::from_ints(&[16, -12, 1]),
        IntPoly::from_ints(&[64, -24, 1]),
    ]
}

/// The congruence predicate of the period theorems.
pub fn predicted_period(p: u64, n: u32) -> Result<bool> {
    match n {
        3 => Ok(matches!(p % 13, 1 | 5 | 8 | 12) || matches!(p % 7, 1 | 6)),
        4 => Ok(matches!(p % 5, 1 | 4) || matches!(p % 17, 1 | 4 | 13 | 16)),
        other => Err(Error::UnsupportedPeriod(other)),
    }
}

/// Root-existence of the eliminant polynomials mod p, the middle leg of the
/// triple cross-check.
pub fn poly_root_criterion(p: u64, n: u32) -> Result<bool> {
    match n {
        3 => {
            let (u, v) = period3_cubics();
            Ok(u.has_root_mod_p(p) || v.has_root_mod_p(p))
        }
        4 => {
            let w = period4_quartic();
            Ok(w.has_root_mod_p(p) || period4_quadratics().iter().any(|q| q.has_root_mod_p(p)))
        }
        other => Err(Error::UnsupportedPeriod(other)),
    }
}

/// Primes exempt from the period-`n` criteria: 2 and 3 always (excluded
/// characteristics) plus the discriminant primes of the period's
/// polynomials.
pub fn default_exempt(n: u32) -> &'static [u64] {
    match n {
        3 => &[2, 3, 7, 13, 31],
        4 => &[2, 3, 5, 17],
        _ => &[2, 3],
    }
}

/// Hard cap so the `p^2` bitmaps stay addressable with 32-bit indices.
const MAX_CYCLE_PRIME: u64 = 65_535;

fn all_inverses(p: u64) -> Vec<u64> {
    // inv[i] = -(p / i) * inv[p mod i], linear time
    let mut inv = vec![0u64; p as usize];
    if p > 1 {
        inv[1] = 1;
    }
    for i in 2..p {
        inv[i as usize] = p - mod_mul(p / i, inv[(p % i) as usize], p);
    }
    inv
}

/// One map step on encoded residues; `None` on the diagonal.
#[inline]
fn step(x: u64, y: u64, p: u64, inv: &[u64]) -> Option<(u64, u64)> {
    if x == y {
        return None;
    }
    let d = (x + p - y) % p;
    let d2inv = inv[mod_mul(d, d, p) as usize];
    let ymx2 = ((y + 2) % p + p - x) % p; // y - x + 2
    let px = mod_mul(mod_mul(2 * y % p, ymx2, p), d2inv, p);
    let py = mod_mul(mod_mul(y, y, p), d2inv, p);
    Some((px, py))
}

/// All cycles of exact length `n` (1 through 6) over `F_p`, each rotated to
/// start at its lexicographically smallest point and sorted.
///
/// Orbits that hit the diagonal die there; every one of the `p^2` starting
/// points is visited exactly once.
pub fn find_cycles(p: Prime, n: u32) -> Result<Vec<Vec<SigPoint<Fp>>>> {
    if !(1..=6).contains(&n) {
        return Err(Error::UnsupportedPeriod(n));
    }
    let pv = p.get();
    if pv > MAX_CYCLE_PRIME {
        return Err(Error::BudgetExceeded {
            needed: pv * pv,
            budget: MAX_CYCLE_PRIME * MAX_CYCLE_PRIME,
        });
    }
    let inv = all_inverses(pv);
    let total = (pv * pv) as usize;
    let mut visited: BitVec = BitVec::repeat(false, total);
    let mut in_path: BitVec = BitVec::repeat(false, total);
    let mut path: Vec<u32> = Vec::new();
    let mut cycles: Vec<Vec<(u64, u64)>> = Vec::new();

    for start in 0..total {
        if visited[start] {
            continue;
        }
        path.clear();
        let mut idx = start;
        loop {
            if in_path[idx] {
                // first return: the tail of `path` from idx onwards is a cycle
                let pos = path
                    .iter()
                    .position(|&v| v as usize == idx)
                    .expect("on path");
                let cyc = &path[pos..];
                if cyc.len() == n as usize {
                    let mut pts: Vec<(u64, u64)> = cyc
                        .iter()
                        .map(|&v| (v as u64 / pv, v as u64 % pv))
                        .collect();
                    let min_at = pts
                        .iter()
                        .enumerate()
                        .min_by_key(|(_, pt)| **pt)
                        .map(|(i, _)| i)
                        .expect("nonempty");
                    pts.rotate_left(min_at);
                    cycles.push(pts);
                }
                break;
            }
            if visited[idx] {
                break; // merged into an already-explored orbit
            }
            in_path.set(idx, true);
            path.push(idx as u32);
            match step(idx as u64 / pv, idx as u64 % pv, pv, &inv) {
                Some((nx, ny)) => idx = (nx * pv + ny) as usize,
                None => break, // diagonal
            }
        }
        for &v in &path {
            in_path.set(v as usize, false);
            visited.set(v as usize, true);
        }
    }
    cycles.sort();
    Ok(cycles
        .into_iter()
        .map(|cyc| {
            cyc.into_iter()
                .map(|(x, y)| SigPoint::new(p.elem_u64(x), p.elem_u64(y)))
                .collect()
        })
        .collect())
}

/// Check that a claimed cycle really is one of exact minimal period `n`:
/// consecutive steps follow the map, the last step closes, and no point
/// repeats early.
pub fn verify_cycle(p: Prime, cycle: &[SigPoint<Fp>], n: u32) -> bool {
    if cycle.len() != n as usize {
        return false;
    }
    let pv = p.get();
    let inv = all_inverses(pv);
    for i in 0..cycle.len() {
        let cur = &cycle[i];
        let next = &cycle[(i + 1) % cycle.len()];
        match step(cur.x.residue(), cur.y.residue(), pv, &inv) {
            Some((nx, ny)) => {
                if nx != next.x.residue() || ny != next.y.residue() {
                    return false;
                }
            }
            None => return false,
        }
        for j in (i + 1)..cycle.len() {
            if cycle[i] == cycle[j] {
                return false;
            }
        }
    }
    true
}

/// One row of the census table.
#[derive(Debug, Clone)]
pub struct CycleReport {
    pub p: u64,
    pub period: u32,
    /// Brute-force ground truth.
    pub exists: bool,
    /// A representative cycle when one exists.
    pub witness: Option<Vec<SigPoint<Fp>>>,
    /// The congruence predicate's claim.
    pub predicted: bool,
    pub agrees: bool,
    /// Known-bad prime: disagreements here are expected, not diagnostic.
    pub exempt: bool,
}

/// Census configuration: extra exempt primes found empirically, and the work
/// budget in map steps (the scan costs `p^2` per prime).
#[derive(Debug, Clone)]
pub struct CensusConfig {
    pub extra_exempt: Vec<u64>,
    pub budget: u64,
}

impl Default for CensusConfig {
    fn default() -> Self {
        CensusConfig {
            extra_exempt: Vec::new(),
            budget: 400_000_000,
        }
    }
}

impl CensusConfig {
    pub fn is_exempt(&self, p: u64, n: u32) -> bool {
        default_exempt(n).contains(&p) || self.extra_exempt.contains(&p)
    }
}

/// Census of one prime: brute force vs congruence.
pub fn census_prime(p: Prime, n: u32, config: &CensusConfig) -> Result<CycleReport> {
    let predicted = predicted_period(p.get(), n)?;
    let mut cycles = find_cycles(p, n)?;
    let exists = !cycles.is_empty();
    let witness = if exists {
        Some(cycles.swap_remove(0))
    } else {
        None
    };
    Ok(CycleReport {
        p: p.get(),
        period: n,
        exists,
        witness,
        predicted,
        agrees: exists == predicted,
        exempt: config.is_exempt(p.get(), n),
    })
}

/// Census over every prime in `[lo, hi]`, refusing ranges whose total work
/// `sum p^2` exceeds the configured budget.
pub fn census(lo: u64, hi: u64, n: u32, config: &CensusConfig) -> Result<Vec<CycleReport>> {
    if !matches!(n, 3 | 4) {
        return Err(Error::UnsupportedPeriod(n));
    }
    let primes = primes_in_range(lo, hi);
    let needed: u64 = primes.iter().map(|&p| p * p).sum();
    if needed > config.budget {
        return Err(Error::BudgetExceeded {
            needed,
            budget: config.budget,
        });
    }
    primes
        .into_iter()
        .map(|p| census_prime(Prime::new(p).expect("sieved prime >= 5"), n, config))
        .collect()
}

/// Primes in `[lo, hi]`, skipping the excluded characteristics 2 and 3.
pub fn primes_in_range(lo: u64, hi: u64) -> Vec<u64> {
    (lo.max(5)..=hi)
        .filter(|&p| crate::field::is_prime_u64(p))
        .collect()
}
