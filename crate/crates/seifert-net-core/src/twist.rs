//! Twisting surgeries along seiferters.
//!
//! A twist with `t` turns along a seiferter of linking number `w` sends
//! the surgery `(K, m)` to `(K', m + t * w^2)`, where `K'` is the image
//! of `K` under the twist.  For the basic seiferters the image is again
//! a torus knot with an explicit parameter shift; for cataloged
//! seiferters the image is known when the record carries an image rule,
//! and is otherwise kept symbolically as a derived knot.
//!
//! Twisting by `t` and then by `-t` along the same seiferter therefore
//! always returns to the starting vertex: scripts merge adjacent steps
//! along the same seiferter and resolve back through the image rules.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::{Catalog, CatalogError, SeifertKind, SeiferterSpec};
use crate::expr::Env;
use crate::model::{
    canonical_torus_knot, KnotDescriptor, SeifertSurgery, TorusKnotId, TwistStep,
};

/// The three basic seiferters every torus-knot surgery carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BasicSeiferter {
    /// Exceptional fiber of index `|p|`; linking number `q`.
    Sp,
    /// Exceptional fiber of index `q`; linking number `p`.
    Sq,
    /// Meridian of the knot; linking number `1`.
    Meridian,
}

impl BasicSeiferter {
    /// The catalog id of the corresponding record.
    pub fn id(self) -> &'static str {
        match self {
            BasicSeiferter::Sp => "s_p",
            BasicSeiferter::Sq => "s_q",
            BasicSeiferter::Meridian => "c_mu",
        }
    }

    /// Linking number with the host `T(p,q)`.
    pub fn linking(self, knot: TorusKnotId) -> i64 {
        match self {
            BasicSeiferter::Sp => knot.q(),
            BasicSeiferter::Sq => knot.p(),
            BasicSeiferter::Meridian => 1,
        }
    }
}

/// One step of a twist script, as written in script files.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScriptStep {
    pub seiferter: String,
    pub turns: i64,
}

/// Errors from the twist engine.
#[derive(Debug, Error)]
pub enum TwistError {
    #[error("basic twists need a torus-knot host, found {key}")]
    NotTorusHost { key: String },
    #[error("seiferter {seiferter:?} is not valid for the surgery {host}")]
    SeiferterNotValid { seiferter: String, host: String },
    #[error("seiferter {seiferter:?} is irrelevant for twisting at {host}: it acts trivially there")]
    IrrelevantSeiferter { seiferter: String, host: String },
    #[error("no catalog entry with id {0:?}")]
    UnknownSeiferter(String),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error("step {index}: {source}")]
    AtStep {
        index: usize,
        #[source]
        source: Box<TwistError>,
    },
}

/// Twists a torus-knot surgery along one of its basic seiferters.
///
/// * meridian: `(T(p,q), m) -> (T(p,q), m + t)`;
/// * `s_p`: `(T(p,q), m) -> (T(p + t q, q), m + t q^2)`;
/// * `s_q`: `(T(p,q), m) -> (T(p, q + t p), m + t p^2)`.
///
/// The parameter shifts keep the pair coprime, so the image is always a
/// torus knot (possibly the unknot).
///
/// ```
/// use seifert_net_core::{basic_twist, BasicSeiferter, SeifertSurgery, TorusKnotId};
/// let base = SeifertSurgery::torus(TorusKnotId::new(3, 2).unwrap(), 0);
/// let out = basic_twist(&base, BasicSeiferter::Sq, -1).unwrap();
/// assert_eq!(out, SeifertSurgery::torus(TorusKnotId::UNKNOT, -9));
/// ```
pub fn basic_twist(
    surgery: &SeifertSurgery,
    which: BasicSeiferter,
    turns: i64,
) -> Result<SeifertSurgery, TwistError> {
    let Some(knot) = surgery.knot.as_torus() else {
        return Err(TwistError::NotTorusHost {
            key: surgery.key(),
        });
    };
    let w = which.linking(knot);
    let slope = surgery.slope + turns * w * w;
    let image = match which {
        BasicSeiferter::Meridian => knot,
        BasicSeiferter::Sp => canonical_torus_knot(knot.p() + turns * knot.q(), knot.q())
            .expect("fiber twists preserve coprimality"),
        BasicSeiferter::Sq => canonical_torus_knot(knot.p(), knot.q() + turns * knot.p())
            .expect("fiber twists preserve coprimality"),
    };
    Ok(SeifertSurgery::torus(image, slope))
}

fn basic_kind(kind: SeifertKind) -> Option<BasicSeiferter> {
    match kind {
        SeifertKind::BasicSp => Some(BasicSeiferter::Sp),
        SeifertKind::BasicSq => Some(BasicSeiferter::Sq),
        SeifertKind::Meridian => Some(BasicSeiferter::Meridian),
        SeifertKind::Cataloged => None,
    }
}

/// Evaluates a record's base host from its constant family constraints.
/// Records that anchor named images always pin `p`, `q`, and `m`.
fn spec_base_host(spec: &SeiferterSpec) -> Option<(TorusKnotId, i64)> {
    let env = Env::default();
    let p = spec.family.p.as_ref()?.eval_int(&env).ok()?;
    let q = spec.family.q.as_ref()?.eval_int(&env).ok()?;
    let m = spec.family.m.as_ref()?.eval_int(&env).ok()?;
    let knot = canonical_torus_knot(i64::try_from(p).ok()?, i64::try_from(q).ok()?).ok()?;
    Some((knot, i64::try_from(m).ok()?))
}

/// Resolves the knot reached from `base` by `total` turns along the
/// seiferter `spec`, preferring image rules over a symbolic script.
fn resolve_image(
    spec: &SeiferterSpec,
    base: &SeifertSurgery,
    base_knot: TorusKnotId,
    total: i64,
    linking: i64,
    slope: i64,
    n: Option<i64>,
) -> Result<SeifertSurgery, TwistError> {
    if total == 0 {
        debug_assert_eq!(slope, base.slope);
        return Ok(base.clone());
    }
    if let Some(rule) = spec.named_images.iter().find(|r| r.turns == total) {
        return Ok(SeifertSurgery::named(rule.name.clone(), slope));
    }
    if let Some(rule) = spec.twist_images.iter().find(|r| r.turns == total) {
        let mut env = Env::host(base_knot.p(), base_knot.q(), base.slope);
        env.n = n;
        let eval = |expr: &crate::expr::Expr| -> Result<i64, TwistError> {
            let value = expr.eval_int(&env).map_err(|source| {
                TwistError::Catalog(CatalogError::Eval {
                    id: spec.id.clone(),
                    source,
                })
            })?;
            i64::try_from(value).map_err(|_| {
                TwistError::Catalog(CatalogError::Eval {
                    id: spec.id.clone(),
                    source: crate::expr::EvalError::Overflow,
                })
            })
        };
        let p = eval(&rule.p)?;
        let q = eval(&rule.q)?;
        let knot = canonical_torus_knot(p, q).map_err(|_| TwistError::SeiferterNotValid {
            seiferter: spec.id.clone(),
            host: base.key(),
        })?;
        return Ok(SeifertSurgery::torus(knot, slope));
    }
    Ok(SeifertSurgery {
        knot: KnotDescriptor::Derived {
            base: Box::new(base.clone()),
            script: vec![TwistStep {
                seiferter: spec.id.clone(),
                turns: total,
                linking_used: linking,
            }],
        },
        slope,
    })
}

/// Twists `surgery` along the cataloged seiferter `seiferter_id`.
///
/// The seiferter must be valid at the host: for torus hosts this means
/// the catalog record matches, for named or derived hosts it must be the
/// seiferter whose twists produced the vertex.
pub fn twist_along_seiferter(
    catalog: &Catalog,
    surgery: &SeifertSurgery,
    seiferter_id: &str,
    turns: i64,
) -> Result<SeifertSurgery, TwistError> {
    if turns == 0 {
        return Ok(surgery.clone());
    }
    match &surgery.knot {
        KnotDescriptor::Torus(knot) => {
            let spec = catalog
                .seiferter_spec(seiferter_id)
                .ok_or_else(|| TwistError::UnknownSeiferter(seiferter_id.to_owned()))?;
            let instance = catalog
                .instantiate(seiferter_id, *knot, surgery.slope)?
                .ok_or_else(|| TwistError::SeiferterNotValid {
                    seiferter: seiferter_id.to_owned(),
                    host: surgery.key(),
                })?;
            if instance.irrelevant_for_twisting {
                return Err(TwistError::IrrelevantSeiferter {
                    seiferter: seiferter_id.to_owned(),
                    host: surgery.key(),
                });
            }
            if let Some(basic) = basic_kind(instance.kind) {
                return basic_twist(surgery, basic, turns);
            }
            let w = instance.linking_for_twist();
            let slope = surgery.slope + turns * w * w;
            resolve_image(spec, surgery, *knot, turns, w, slope, instance.n)
        }
        KnotDescriptor::Named(name) => {
            let spec = catalog
                .seiferter_spec(seiferter_id)
                .ok_or_else(|| TwistError::UnknownSeiferter(seiferter_id.to_owned()))?;
            let rule = spec
                .named_images
                .iter()
                .find(|r| r.name == *name)
                .ok_or_else(|| TwistError::SeiferterNotValid {
                    seiferter: seiferter_id.to_owned(),
                    host: surgery.key(),
                })?;
            let (base_knot, base_m) =
                spec_base_host(spec).ok_or_else(|| TwistError::SeiferterNotValid {
                    seiferter: seiferter_id.to_owned(),
                    host: surgery.key(),
                })?;
            let base = SeifertSurgery::torus(base_knot, base_m);
            let instance = catalog
                .instantiate(seiferter_id, base_knot, base_m)?
                .ok_or_else(|| TwistError::SeiferterNotValid {
                    seiferter: seiferter_id.to_owned(),
                    host: surgery.key(),
                })?;
            let w = instance.linking_for_twist();
            if surgery.slope != base_m + rule.turns * w * w {
                return Err(TwistError::SeiferterNotValid {
                    seiferter: seiferter_id.to_owned(),
                    host: surgery.key(),
                });
            }
            let total = rule.turns + turns;
            let slope = surgery.slope + turns * w * w;
            resolve_image(spec, &base, base_knot, total, w, slope, instance.n)
        }
        KnotDescriptor::Derived { base, script } => {
            let last = script.last().expect("derived scripts are nonempty");
            if last.seiferter != seiferter_id {
                return Err(TwistError::SeiferterNotValid {
                    seiferter: seiferter_id.to_owned(),
                    host: surgery.key(),
                });
            }
            let Some(base_knot) = base.knot.as_torus() else {
                return Err(TwistError::NotTorusHost { key: base.key() });
            };
            if script.len() > 1 {
                let w = last.linking_used;
                let total = last.turns + turns;
                let slope = surgery.slope + turns * w * w;
                let mut new_script = script.clone();
                if total == 0 {
                    new_script.pop();
                } else {
                    new_script.last_mut().expect("nonempty").turns = total;
                }
                return Ok(SeifertSurgery {
                    knot: KnotDescriptor::Derived {
                        base: base.clone(),
                        script: new_script,
                    },
                    slope,
                });
            }
            let spec = catalog
                .seiferter_spec(seiferter_id)
                .ok_or_else(|| TwistError::UnknownSeiferter(seiferter_id.to_owned()))?;
            let instance = catalog.instantiate(seiferter_id, base_knot, base.slope)?;
            let n = instance.as_ref().and_then(|i| i.n);
            let w = last.linking_used;
            let total = last.turns + turns;
            let slope = surgery.slope + turns * w * w;
            resolve_image(spec, base, base_knot, total, w, slope, n)
        }
    }
}

/// Applies a script of twists in order.  Failures carry the index of the
/// offending step.
pub fn twist_sequence(
    catalog: &Catalog,
    surgery: &SeifertSurgery,
    steps: &[ScriptStep],
) -> Result<SeifertSurgery, TwistError> {
    let mut current = surgery.clone();
    for (index, step) in steps.iter().enumerate() {
        current = twist_along_seiferter(catalog, &current, &step.seiferter, step.turns).map_err(
            |source| TwistError::AtStep {
                index,
                source: Box::new(source),
            },
        )?;
    }
    Ok(current)
}

/// Whether a linking number `lk_target` is reachable from `lk_base`
/// under twists that change the slope denominator by multiples of `m`:
/// solvable `lk_target = ±lk_base + x * m`.
pub fn linking_obstruction_passes(lk_target: i64, lk_base: i64, m: i64) -> bool {
    if m == 0 {
        return lk_target.abs() == lk_base.abs();
    }
    (lk_target - lk_base) % m == 0 || (lk_target + lk_base) % m == 0
}

/// A fiber of the surgered space that could be the image of a seiferter
/// under m-equivalence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CandidateBase {
    Sp,
    Sq,
    Meridian,
    RegularFiber,
}

/// One candidate identification passing the linking obstruction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BasicCandidate {
    pub base: CandidateBase,
    pub base_linking: i64,
}

/// The basic fibers a seiferter of linking number `lk` at `(knot, m)`
/// could be m-equivalent to, filtered by the linking obstruction.
///
/// The candidate base linking numbers are `q` for `s_p`, `p` for `s_q`,
/// `1` for the meridian, and `pq` for a regular fiber.
pub fn m_equivalence_basic_candidates(
    knot: TorusKnotId,
    m: i64,
    lk: i64,
) -> Vec<BasicCandidate> {
    let bases = [
        (CandidateBase::Sp, knot.q()),
        (CandidateBase::Sq, knot.p()),
        (CandidateBase::Meridian, 1),
        (CandidateBase::RegularFiber, knot.fiber_slope()),
    ];
    bases
        .into_iter()
        .filter(|(_, base_linking)| linking_obstruction_passes(lk, *base_linking, m))
        .map(|(base, base_linking)| BasicCandidate {
            base,
            base_linking,
        })
        .collect()
}
