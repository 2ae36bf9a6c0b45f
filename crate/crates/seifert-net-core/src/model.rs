//! Core vocabulary: torus knot identifiers, knot descriptors, surgeries,
//! and twist steps.
//!
//! Torus knots are kept in a canonical form so that equal knots compare
//! equal: `T(p,q)` with `|p| > q >= 2` and `gcd(p, q) = 1` for nontrivial
//! knots, and the single id `T(1,1)` for the unknot.  The canonical form
//! absorbs the symmetries `T(p,q) = T(q,p)` and `T(-p,-q) = T(p,q)`.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors from torus-knot construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KnotError {
    /// The parameters share a factor, so they name a torus link, not a knot.
    #[error("non-coprime parameters ({p}, {q}) describe a torus link, not a knot")]
    NonCoprime { p: i64, q: i64 },
}

/// A torus knot in canonical form.
///
/// Construct through [`canonical_torus_knot`] or [`TorusKnotId::new`]; the
/// fields are private so every value in circulation is canonical.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TorusKnotId {
    p: i64,
    q: i64,
}

impl TorusKnotId {
    /// The unknot, stored as `T(1,1)`.
    pub const UNKNOT: TorusKnotId = TorusKnotId { p: 1, q: 1 };

    /// Canonicalizes `(p, q)`; see [`canonical_torus_knot`].
    pub fn new(p: i64, q: i64) -> Result<Self, KnotError> {
        canonical_torus_knot(p, q)
    }

    /// First parameter; satisfies `|p| > q` for nontrivial knots.
    pub fn p(&self) -> i64 {
        self.p
    }

    /// Second parameter; positive, and `>= 2` for nontrivial knots.
    pub fn q(&self) -> i64 {
        self.q
    }

    /// Whether this id is the unknot.
    pub fn is_unknot(&self) -> bool {
        self.q == 1
    }

    /// The mirror image `T(-p,q)`; the unknot is amphichiral.
    pub fn mirror(self) -> Self {
        if self.is_unknot() {
            self
        } else {
            TorusKnotId {
                p: -self.p,
                q: self.q,
            }
        }
    }

    /// Product `p * q`, the fiber slope of the knot.
    pub fn fiber_slope(&self) -> i64 {
        self.p * self.q
    }

    /// Label used in vertex keys and rendered output: `O` or `T(p,q)`.
    pub fn label(&self) -> String {
        if self.is_unknot() {
            "O".to_owned()
        } else {
            format!("T({},{})", self.p, self.q)
        }
    }
}

impl fmt::Display for TorusKnotId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl<'de> Deserialize<'de> for TorusKnotId {
    fn deserialize<D>(deserializer: D) -> Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        #[derive(Deserialize)]
        struct Raw {
            p: i64,
            q: i64,
        }
        let raw = Raw::deserialize(deserializer)?;
        canonical_torus_knot(raw.p, raw.q).map_err(serde::de::Error::custom)
    }
}

/// Puts torus-knot parameters into canonical form.
///
/// Rules, applied in order:
///
/// * `gcd(|p|, |q|)` must be `1`, otherwise [`KnotError::NonCoprime`]
///   (this also rejects `(0, 0)`);
/// * if `min(|p|, |q|) <= 1` the knot is the unknot `T(1,1)`;
/// * otherwise the symmetries `T(p,q) = T(q,p)` and `T(-p,-q) = T(p,q)`
///   are used to reach `|p| > q >= 2`.
///
/// ```
/// use seifert_net_core::canonical_torus_knot;
/// let k = canonical_torus_knot(2, -3).unwrap();
/// assert_eq!((k.p(), k.q()), (-3, 2));
/// assert!(canonical_torus_knot(4, 6).is_err());
/// ```
pub fn canonical_torus_knot(p: i64, q: i64) -> Result<TorusKnotId, KnotError> {
    if p.unsigned_abs().gcd(&q.unsigned_abs()) != 1 {
        return Err(KnotError::NonCoprime { p, q });
    }
    if p.abs().min(q.abs()) <= 1 {
        return Ok(TorusKnotId::UNKNOT);
    }
    let (mut p, mut q) = (p, q);
    loop {
        if q < 0 {
            p = -p;
            q = -q;
        }
        if p.abs() < q {
            std::mem::swap(&mut p, &mut q);
        } else {
            break;
        }
    }
    debug_assert!(p.abs() > q && q >= 2);
    Ok(TorusKnotId { p, q })
}

/// One twist along a seiferter, as recorded in a derived-knot script.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TwistStep {
    /// Catalog id of the seiferter twisted along.
    pub seiferter: String,
    /// Number of full twists; negative for left-handed twists.
    pub turns: i64,
    /// Linking number between the seiferter and the knot at the moment of
    /// the twist; the slope changes by `turns * linking_used^2`.
    pub linking_used: i64,
}

impl TwistStep {
    fn word(&self) -> String {
        format!("{}:{:+}", self.seiferter, self.turns)
    }
}

/// A knot appearing as a surgery vertex.
///
/// Most vertices are torus knots.  A few distinguished knots reached by
/// twisting carry conventional names (`figure-eight`, `P(-2,3,7)`), and
/// everything else produced by twisting is kept symbolically as the base
/// surgery plus the twist script that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KnotDescriptor {
    /// A torus knot or the unknot.
    Torus(TorusKnotId),
    /// A named non-torus knot, e.g. `P(-2,3,7)`.
    Named(String),
    /// The image of `base` under the twists in `script`.
    Derived {
        base: Box<SeifertSurgery>,
        script: Vec<TwistStep>,
    },
}

impl KnotDescriptor {
    /// Label used in vertex keys and rendered output.
    pub fn label(&self) -> String {
        match self {
            KnotDescriptor::Torus(k) => k.label(),
            KnotDescriptor::Named(name) => name.clone(),
            KnotDescriptor::Derived { base, script } => {
                let word: Vec<String> = script.iter().map(TwistStep::word).collect();
                format!("{}[{}]", base.key(), word.join(","))
            }
        }
    }

    /// The underlying torus knot id, when there is one.
    pub fn as_torus(&self) -> Option<TorusKnotId> {
        match self {
            KnotDescriptor::Torus(k) => Some(*k),
            _ => None,
        }
    }
}

impl fmt::Display for KnotDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// A Seifert surgery: a knot together with an integral slope.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SeifertSurgery {
    pub knot: KnotDescriptor,
    pub slope: i64,
}

impl SeifertSurgery {
    /// Surgery on a torus knot.
    pub fn torus(knot: TorusKnotId, slope: i64) -> Self {
        SeifertSurgery {
            knot: KnotDescriptor::Torus(knot),
            slope,
        }
    }

    /// Surgery on a named knot.
    pub fn named(name: impl Into<String>, slope: i64) -> Self {
        SeifertSurgery {
            knot: KnotDescriptor::Named(name.into()),
            slope,
        }
    }

    /// Unique key identifying the vertex, e.g. `T(-3,2)(-7)` or
    /// `P(-2,3,7)(18)`.
    pub fn key(&self) -> String {
        format!("{}({})", self.knot.label(), self.slope)
    }
}

impl fmt::Display for SeifertSurgery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key())
    }
}

/// The spreader-slope predicate for a torus-knot surgery.
///
/// Hyperbolic seiferters for `(T(p,q), m)` have only been found when
/// `q <= 2` or `m` is within one of the fiber slope `pq`.  The predicate
/// records that observation: it holds iff `q ∈ {1, 2}` or
/// `m ∈ {pq - 1, pq, pq + 1}`.
pub fn spreader_slope(knot: TorusKnotId, m: i64) -> bool {
    knot.q() <= 2 || (m - knot.fiber_slope()).abs() <= 1
}
