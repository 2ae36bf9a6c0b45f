//! Exact algebra on Seifert invariants of fibered spaces over `S^2`.
//!
//! A space is recorded as `(b; beta_1/alpha_1, ..., beta_n/alpha_n)`:
//! an integer Euler summand `b` plus one rational per exceptional fiber.
//! The normalized form used throughout has `0 < beta < alpha` for every
//! fiber, trivial fibers dropped, and fibers sorted, so equal normalized
//! invariants mean fiber-preserving homeomorphism.
//!
//! Orientation conventions are internal but consistent: reversing
//! orientation negates `b` and every `beta`, the Euler number is
//! `e = -(b + sum beta_i/alpha_i)`, and lens parameters come from the
//! two-fiber reduction below.  All derived facts (homology orders, lens
//! classes of torus-knot surgeries) are checked against independent
//! formulas in the test suite.

use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors from Seifert-invariant algebra.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SfsError {
    /// The invariants carry a degenerate (index-0) fiber; the requested
    /// operation is only defined for honest fibrations.
    #[error("operation undefined on invariants with a degenerate fiber")]
    DegenerateInput,
    /// A lens reduction was requested but more than two exceptional
    /// fibers remain after normalization.
    #[error("lens reduction needs at most two exceptional fibers, found {count}")]
    TooManyFibers { count: usize },
    /// Homeomorphism comparison is only implemented for at most three
    /// exceptional fibers.
    #[error("homeomorphism comparison supports at most three exceptional fibers, found {count}")]
    UnsupportedFamily { count: usize },
    /// A fiber `(alpha, beta)` must have `alpha >= 1` and coprime entries.
    #[error("invalid fiber ({alpha}, {beta}): alpha must be >= 1 and coprime to beta")]
    InvalidFiber { alpha: i64, beta: i64 },
    /// Lens parameters must be coprime.
    #[error("invalid lens parameters ({p}, {q}): entries must be coprime")]
    InvalidLens { p: i64, q: i64 },
    /// Intermediate arithmetic left the supported integer range.
    #[error("integer overflow in Seifert-invariant arithmetic")]
    Overflow,
}

/// One exceptional fiber, stored as the pair `(alpha, beta)` for the
/// rational `beta/alpha` with `alpha >= 1` and `gcd(alpha, beta) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Fiber {
    pub alpha: i64,
    pub beta: i64,
}

impl fmt::Display for Fiber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.beta, self.alpha)
    }
}

/// Seifert invariants of a fibered space over `S^2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SeifertInvariants {
    b: i64,
    fibers: Vec<Fiber>,
    degenerate: bool,
}

impl SeifertInvariants {
    /// Builds invariants from raw `(alpha, beta)` pairs.
    ///
    /// Pairs may be unnormalized (`beta` outside `[0, alpha)`, or
    /// `alpha = 1`); [`SeifertInvariants::normalize`] reduces them.
    pub fn new(b: i64, pairs: &[(i64, i64)]) -> Result<Self, SfsError> {
        let fibers = pairs
            .iter()
            .map(|&(alpha, beta)| {
                if alpha < 1 || alpha.unsigned_abs().gcd(&beta.unsigned_abs()) != 1 {
                    Err(SfsError::InvalidFiber { alpha, beta })
                } else {
                    Ok(Fiber { alpha, beta })
                }
            })
            .collect::<Result<_, _>>()?;
        Ok(SeifertInvariants {
            b,
            fibers,
            degenerate: false,
        })
    }

    /// Builds invariants marked as carrying a degenerate (index-0) fiber.
    ///
    /// Most operations refuse such input with [`SfsError::DegenerateInput`];
    /// the marker exists so degenerate fillings stay representable.
    pub fn new_degenerate(b: i64, pairs: &[(i64, i64)]) -> Result<Self, SfsError> {
        let mut inv = SeifertInvariants::new(b, pairs)?;
        inv.degenerate = true;
        Ok(inv)
    }

    /// The integer summand `b`.
    pub fn b(&self) -> i64 {
        self.b
    }

    /// The exceptional fibers.
    pub fn fibers(&self) -> &[Fiber] {
        &self.fibers
    }

    /// Whether a degenerate fiber is present.
    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    fn reject_degenerate(&self) -> Result<(), SfsError> {
        if self.degenerate {
            Err(SfsError::DegenerateInput)
        } else {
            Ok(())
        }
    }

    /// Normalizes to the unique form with `0 < beta < alpha` for every
    /// fiber, trivial fibers absorbed into `b`, and fibers sorted.
    ///
    /// ```
    /// use seifert_net_core::SeifertInvariants;
    /// let raw = SeifertInvariants::new(0, &[(2, 3), (5, -6)]).unwrap();
    /// let norm = raw.normalize().unwrap();
    /// assert_eq!(norm, SeifertInvariants::new(-1, &[(2, 1), (5, 4)]).unwrap());
    /// ```
    pub fn normalize(&self) -> Result<SeifertInvariants, SfsError> {
        self.reject_degenerate()?;
        let mut b = self.b;
        let mut fibers = Vec::with_capacity(self.fibers.len());
        for fiber in &self.fibers {
            let beta = fiber.beta.rem_euclid(fiber.alpha);
            b = b
                .checked_add((fiber.beta - beta) / fiber.alpha)
                .ok_or(SfsError::Overflow)?;
            if beta != 0 {
                fibers.push(Fiber {
                    alpha: fiber.alpha,
                    beta,
                });
            }
        }
        fibers.sort_unstable();
        Ok(SeifertInvariants {
            b,
            fibers,
            degenerate: false,
        })
    }

    /// The same space with reversed orientation: `b` and every `beta`
    /// are negated.  The result is generally unnormalized.
    pub fn reverse_orientation(&self) -> Result<SeifertInvariants, SfsError> {
        self.reject_degenerate()?;
        Ok(SeifertInvariants {
            b: -self.b,
            fibers: self
                .fibers
                .iter()
                .map(|f| Fiber {
                    alpha: f.alpha,
                    beta: -f.beta,
                })
                .collect(),
            degenerate: false,
        })
    }

    /// The Euler number `e = -(b + sum beta_i/alpha_i)`, exact.
    pub fn euler_number(&self) -> Result<Ratio<i64>, SfsError> {
        self.reject_degenerate()?;
        let mut sum = Ratio::from_integer(self.b);
        for fiber in &self.fibers {
            sum += Ratio::new(fiber.beta, fiber.alpha);
        }
        Ok(-sum)
    }

    /// The order of the first homology group:
    /// `|alpha_1 ... alpha_n (b + sum beta_i/alpha_i)|`, with `0`
    /// standing for infinite homology.
    pub fn first_homology_order(&self) -> Result<u64, SfsError> {
        self.reject_degenerate()?;
        let mut total: i128 = self.b as i128;
        for fiber in &self.fibers {
            total = total.checked_mul(fiber.alpha as i128).ok_or(SfsError::Overflow)?;
        }
        for (i, fiber) in self.fibers.iter().enumerate() {
            let mut term = fiber.beta as i128;
            for (j, other) in self.fibers.iter().enumerate() {
                if i != j {
                    term = term.checked_mul(other.alpha as i128).ok_or(SfsError::Overflow)?;
                }
            }
            total = total.checked_add(term).ok_or(SfsError::Overflow)?;
        }
        u64::try_from(total.unsigned_abs()).map_err(|_| SfsError::Overflow)
    }

    /// Reduces invariants with at most two exceptional fibers to lens
    /// parameters.
    ///
    /// The reduction absorbs `b` into the first fiber, forms the signed
    /// order `P = alpha_1 beta_2 + alpha_2 beta_1`, and solves a Bezout
    /// identity for the complementary parameter.  `P = 0` yields
    /// `S^2 x S^1` and `|P| = 1` yields `S^3`.
    ///
    /// ```
    /// use seifert_net_core::{LensSpace, SeifertInvariants};
    /// let inv = SeifertInvariants::new(0, &[(2, 1), (3, 1)]).unwrap();
    /// assert_eq!(inv.to_lens_parameters().unwrap(), LensSpace::new(5, 1).unwrap());
    /// ```
    pub fn to_lens_parameters(&self) -> Result<LensSpace, SfsError> {
        let norm = self.normalize()?;
        if norm.fibers.len() > 2 {
            return Err(SfsError::TooManyFibers {
                count: norm.fibers.len(),
            });
        }
        let mut fs: Vec<(i128, i128)> = norm
            .fibers
            .iter()
            .map(|f| (f.alpha as i128, f.beta as i128))
            .collect();
        while fs.len() < 2 {
            fs.push((1, 0));
        }
        let (a1, b1_raw) = fs[0];
        let (a2, b2) = fs[1];
        let b1 = b1_raw
            .checked_add((norm.b as i128).checked_mul(a1).ok_or(SfsError::Overflow)?)
            .ok_or(SfsError::Overflow)?;
        let mut p = a1
            .checked_mul(b2)
            .and_then(|t| t.checked_add(a2.checked_mul(b1)?))
            .ok_or(SfsError::Overflow)?;
        let eg = a1.extended_gcd(&b1);
        debug_assert_eq!(eg.gcd.abs(), 1);
        let (y, x) = (eg.x * eg.gcd, -eg.y * eg.gcd);
        debug_assert_eq!(a1 * y - b1 * x, 1);
        let mut q0 = -(a2 * y + b2 * x);
        debug_assert_eq!(q0 * a1 + a2, -x * p);
        if p < 0 {
            p = -p;
            q0 = -q0;
        }
        if p == 0 {
            return LensSpace::new(0, 1);
        }
        let q = q0.rem_euclid(p);
        LensSpace::new(
            i64::try_from(p).map_err(|_| SfsError::Overflow)?,
            i64::try_from(q).map_err(|_| SfsError::Overflow)?,
        )
    }
}

impl fmt::Display for SeifertInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};", self.b)?;
        for (i, fiber) in self.fibers.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, " {fiber}")?;
        }
        if self.degenerate {
            if !self.fibers.is_empty() {
                f.write_str(",")?;
            }
            f.write_str(" degenerate")?;
        }
        f.write_str(")")
    }
}

/// A lens space in the canonical form `L(p, q)` with `p >= 0` and
/// `0 <= q < max(p, 1)`; `L(0, 1)` is `S^2 x S^1` and `L(1, 0)` is `S^3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LensSpace {
    p: u64,
    q: u64,
}

impl LensSpace {
    /// Canonicalizes arbitrary coprime parameters.  Negative `p` is
    /// folded in by negating both entries, then `q` is reduced mod `p`.
    pub fn new(p: i64, q: i64) -> Result<Self, SfsError> {
        if p.unsigned_abs().gcd(&q.unsigned_abs()) != 1 {
            return Err(SfsError::InvalidLens { p, q });
        }
        let (p, q) = if p < 0 { (-p, -q) } else { (p, q) };
        if p == 0 {
            return Ok(LensSpace { p: 0, q: 1 });
        }
        Ok(LensSpace {
            p: p as u64,
            q: q.rem_euclid(p) as u64,
        })
    }

    /// The order parameter; `|H_1| = p`, with `0` for `S^2 x S^1`.
    pub fn p(&self) -> u64 {
        self.p
    }

    /// The class parameter, reduced mod `p`.
    pub fn q(&self) -> u64 {
        self.q
    }

    /// Unoriented homeomorphism: equal `p` and `q' ≡ ±q^{±1} (mod p)`.
    pub fn unoriented_equivalent(&self, other: &LensSpace) -> bool {
        if self.p != other.p {
            return false;
        }
        let p = self.p as i128;
        if p <= 1 {
            return true;
        }
        let a = self.q as i128;
        let b = other.q as i128;
        (a - b).rem_euclid(p) == 0
            || (a + b).rem_euclid(p) == 0
            || (a * b - 1).rem_euclid(p) == 0
            || (a * b + 1).rem_euclid(p) == 0
    }

    /// Oriented homeomorphism: equal `p` and `q' ≡ q^{±1} (mod p)`.
    pub fn oriented_equivalent(&self, other: &LensSpace) -> bool {
        if self.p != other.p {
            return false;
        }
        let p = self.p as i128;
        if p <= 1 {
            return true;
        }
        let a = self.q as i128;
        let b = other.q as i128;
        (a - b).rem_euclid(p) == 0 || (a * b - 1).rem_euclid(p) == 0
    }

    /// The same space with reversed orientation, `L(p, -q)`.
    pub fn reverse_orientation(&self) -> LensSpace {
        if self.p <= 1 {
            return *self;
        }
        LensSpace {
            p: self.p,
            q: (self.p - self.q) % self.p,
        }
    }
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.p, self.q) {
            (0, _) => f.write_str("S2 x S1"),
            (1, _) => f.write_str("S3"),
            (p, q) => write!(f, "L({p},{q})"),
        }
    }
}

/// Fibered homeomorphism test for invariants with at most three
/// exceptional fibers.
///
/// Two inputs are equivalent when their normalized forms agree up to
/// fiber permutation, or when both have at most two exceptional fibers
/// and reduce to oriented-equivalent lens spaces.
pub fn sfs_homeo_equivalent(
    a: &SeifertInvariants,
    b: &SeifertInvariants,
) -> Result<bool, SfsError> {
    let na = a.normalize()?;
    let nb = b.normalize()?;
    for inv in [&na, &nb] {
        if inv.fibers().len() > 3 {
            return Err(SfsError::UnsupportedFamily {
                count: inv.fibers().len(),
            });
        }
    }
    if na == nb {
        return Ok(true);
    }
    if na.fibers().len() <= 2 && nb.fibers().len() <= 2 {
        let la = na.to_lens_parameters()?;
        let lb = nb.to_lens_parameters()?;
        return Ok(la.oriented_equivalent(&lb));
    }
    Ok(false)
}
