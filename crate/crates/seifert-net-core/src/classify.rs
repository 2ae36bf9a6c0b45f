//! Classification of the manifolds obtained by integral surgery on a
//! torus knot.
//!
//! For a nontrivial torus knot `T(p,q)` the slope `m` determines the
//! result completely:
//!
//! * `m = pq` (the fiber slope): the fibration degenerates and the
//!   manifold is the connected sum of two lens spaces;
//! * `|pq - m| = 1`: a lens space;
//! * `q = 2` and `|2p - m| = 2`: a prism manifold, Seifert fibered over
//!   `S^2(2, 2, |p|)`;
//! * otherwise: a small Seifert fibered space over `S^2(q, |p|, |pq-m|)`.
//!
//! The Seifert invariants are computed by a change of basis from the
//! fibration of the knot exterior, not by searching for coefficients:
//! `beta_1` is the inverse of `p` mod `q`, `beta_2` completes the Bezout
//! identity `p beta_1 + q beta_2 + pq b_0 = 1`, and the filled solid
//! torus contributes a fiber of index `|m - pq|`.  The identity
//! `|H_1| = |m|` then holds by construction and is asserted in tests.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::model::{canonical_torus_knot, KnotError, TorusKnotId};
use crate::sfs::{LensSpace, SeifertInvariants, SfsError};

/// Errors from the classifier.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    /// The parameters do not name a canonical nontrivial torus knot.
    #[error("({p}, {q}) is not a canonical torus knot: {source}")]
    NotTorusKnot {
        p: i64,
        q: i64,
        #[source]
        source: KnotError,
    },
    /// The parameters are canonical but describe the unknot; use
    /// [`unknot_surgery`] for that branch.
    #[error("({p}, {q}) is the unknot; its surgeries are lens spaces, see the unknot branch")]
    UnknotHost { p: i64, q: i64 },
    /// `m = pq` gives a degenerate fibration with no honest invariants;
    /// use [`degenerate_description`].
    #[error("slope {m} equals the fiber slope pq; the fibration degenerates")]
    DegenerateSlope { m: i64 },
    /// Propagated algebra failure.
    #[error(transparent)]
    Algebra(#[from] SfsError),
}

/// The classifier's verdict for one surgery.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ManifoldDescription {
    /// Connected sum of two lens spaces, from the degenerate fiber slope.
    ConnectedSumLens { left: LensSpace, right: LensSpace },
    /// A lens space, from slopes adjacent to the fiber slope.
    Lens(LensSpace),
    /// A prism manifold; the invariants are normalized and fibered over
    /// `S^2(2, 2, |p|)`.
    Prism(SeifertInvariants),
    /// A small Seifert fibered space with three exceptional fibers;
    /// the invariants are normalized.
    SmallSfs(SeifertInvariants),
}

impl ManifoldDescription {
    /// Whether the description came from a degenerate fibration.
    pub fn is_degenerate(&self) -> bool {
        matches!(self, ManifoldDescription::ConnectedSumLens { .. })
    }

    /// Normalized Seifert invariants, when the manifold is presented by
    /// a single fibration.
    pub fn invariants(&self) -> Option<&SeifertInvariants> {
        match self {
            ManifoldDescription::Prism(inv) | ManifoldDescription::SmallSfs(inv) => Some(inv),
            _ => None,
        }
    }

    /// Order of the first homology group, with `0` for infinite.
    pub fn first_homology_order(&self) -> u64 {
        match self {
            ManifoldDescription::ConnectedSumLens { left, right } => left.p() * right.p(),
            ManifoldDescription::Lens(lens) => lens.p(),
            ManifoldDescription::Prism(inv) | ManifoldDescription::SmallSfs(inv) => inv
                .first_homology_order()
                .expect("classifier output is never degenerate"),
        }
    }
}

impl fmt::Display for ManifoldDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ManifoldDescription::ConnectedSumLens { left, right } => {
                write!(f, "connected sum {left} # {right}")
            }
            ManifoldDescription::Lens(lens) => {
                if lens.p() <= 1 {
                    write!(f, "{lens}")
                } else {
                    write!(f, "lens space {lens}")
                }
            }
            ManifoldDescription::Prism(inv) => {
                let orders: Vec<i64> = inv.fibers().iter().map(|fb| fb.alpha).collect();
                write!(
                    f,
                    "prism manifold, S2({},{},{})",
                    orders[0], orders[1], orders[2]
                )
            }
            ManifoldDescription::SmallSfs(inv) => {
                let orders: Vec<i64> = inv.fibers().iter().map(|fb| fb.alpha).collect();
                write!(
                    f,
                    "small Seifert fibered space over S2({},{},{})",
                    orders[0], orders[1], orders[2]
                )
            }
        }
    }
}

fn require_nontrivial(p: i64, q: i64) -> Result<TorusKnotId, ClassifyError> {
    let knot = canonical_torus_knot(p, q)
        .map_err(|source| ClassifyError::NotTorusKnot { p, q, source })?;
    if knot.is_unknot() {
        return Err(ClassifyError::UnknotHost { p, q });
    }
    if (knot.p(), knot.q()) != (p, q) {
        return Err(ClassifyError::NotTorusKnot {
            p,
            q,
            source: KnotError::NonCoprime { p, q },
        });
    }
    Ok(knot)
}

/// Modular inverse of `a` mod `n` for `n >= 2`, in `[1, n-1]`.
fn mod_inverse(a: i64, n: i64) -> i64 {
    let a = a.rem_euclid(n);
    for candidate in 1..n {
        if (a as i128 * candidate as i128).rem_euclid(n as i128) == 1 {
            return candidate;
        }
    }
    unreachable!("inputs are coprime by construction")
}

/// Seifert invariants of `m`-surgery on the nontrivial torus knot
/// `T(p,q)`, unnormalized, with fibers of index `q`, `|p|`, `|m - pq|`.
///
/// Requires canonical parameters and `m != pq`.
pub fn surgered_invariants(p: i64, q: i64, m: i64) -> Result<SeifertInvariants, ClassifyError> {
    require_nontrivial(p, q)?;
    if m == p * q {
        return Err(ClassifyError::DegenerateSlope { m });
    }
    if p < 0 {
        let positive = surgered_invariants(-p, q, -m)?;
        return Ok(positive.reverse_orientation()?);
    }
    let beta1 = mod_inverse(p, q);
    let t = (1 - p * beta1) / q;
    let beta2 = t.rem_euclid(p);
    let b0 = (t - beta2) / p;
    debug_assert_eq!(p * beta1 + q * beta2 + p * q * b0, 1);
    let mut alpha3 = m - p * q;
    let mut beta3 = b0 * alpha3 + 1;
    if alpha3 < 0 {
        alpha3 = -alpha3;
        beta3 = -beta3;
    }
    let invariants = SeifertInvariants::new(0, &[(q, beta1), (p, beta2), (alpha3, beta3)])?;
    debug_assert_eq!(
        invariants.first_homology_order()?,
        m.unsigned_abs(),
        "homology of surgery on T({p},{q}) at {m}"
    );
    Ok(invariants)
}

/// The connected sum of lens spaces produced by fiber-slope surgery on
/// `T(p,q)`.
pub fn degenerate_description(p: i64, q: i64) -> Result<ManifoldDescription, ClassifyError> {
    require_nontrivial(p, q)?;
    let (left, right) = if p > 0 {
        (
            LensSpace::new(p, q.rem_euclid(p))?,
            LensSpace::new(q, p.rem_euclid(q))?,
        )
    } else {
        (
            LensSpace::new(-p, (-q).rem_euclid(-p))?,
            LensSpace::new(q, p.rem_euclid(q))?,
        )
    };
    Ok(ManifoldDescription::ConnectedSumLens { left, right })
}

/// Classifies `m`-surgery on the nontrivial torus knot `T(p,q)`.
pub fn classify_surgery(p: i64, q: i64, m: i64) -> Result<ManifoldDescription, ClassifyError> {
    require_nontrivial(p, q)?;
    if m == p * q {
        return degenerate_description(p, q);
    }
    let invariants = surgered_invariants(p, q, m)?;
    if (p * q - m).abs() == 1 {
        return Ok(ManifoldDescription::Lens(invariants.to_lens_parameters()?));
    }
    let normalized = invariants.normalize()?;
    if q == 2 && (2 * p - m).abs() == 2 {
        let orders: Vec<i64> = normalized.fibers().iter().map(|fb| fb.alpha).collect();
        debug_assert_eq!(orders, vec![2, 2, p.abs()]);
        return Ok(ManifoldDescription::Prism(normalized));
    }
    debug_assert_eq!(normalized.fibers().len(), 3);
    Ok(ManifoldDescription::SmallSfs(normalized))
}

/// The lens-space branch for surgeries on the unknot: `L(m, 1)`, which
/// is `S^3` at `m = ±1` and `S^2 x S^1` at `m = 0`.
pub fn unknot_surgery(m: i64) -> ManifoldDescription {
    let lens = if m == 0 {
        LensSpace::new(0, 1)
    } else {
        LensSpace::new(m, 1)
    };
    ManifoldDescription::Lens(lens.expect("unknot surgery parameters are always coprime"))
}
