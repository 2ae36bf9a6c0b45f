//! The seiferter catalog: data-driven records of known seiferters and
//! annular pairs, with expression-valued fields so one record can cover
//! an infinite family of hosts.
//!
//! A record matches a host surgery `(T(p,q), m)` when its `family`
//! constraints hold and its `validity` predicate is true.  Records may
//! bind a family parameter `n` from the host via `n_from` (for example
//! `n_from = "q"` on a family with `q = n`).  Matching a record produces
//! a concrete [`Seiferter`] with evaluated linking data.
//!
//! The crate ships an embedded catalog; set the `SEIFERT_NET_CATALOG`
//! environment variable to load a different file through
//! [`Catalog::load`].

use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::expr::{Env, EvalError, Expr};
use crate::model::TorusKnotId;

static EMBEDDED_JSON: &str = include_str!("../data/catalog.json");
static EMBEDDED: OnceLock<Catalog> = OnceLock::new();

/// Supported catalog schema version.
pub const SCHEMA_VERSION: u32 = 1;

/// Environment variable that overrides the embedded catalog.
pub const CATALOG_ENV_VAR: &str = "SEIFERT_NET_CATALOG";

/// Errors from catalog loading, validation, and instantiation.
#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("failed to read catalog file {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("failed to parse catalog JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported catalog schema version {found}, expected {SCHEMA_VERSION}")]
    UnsupportedSchemaVersion { found: u32 },
    #[error("duplicate catalog id {0:?}")]
    DuplicateId(String),
    #[error("catalog is missing a seiferter of kind {0}")]
    MissingBasicSeiferter(&'static str),
    #[error("catalog entry {id:?} has an empty citation")]
    EmptyCitation { id: String },
    #[error("catalog entry {id:?} has an image rule with zero turns")]
    ZeroTurnImage { id: String },
    #[error("catalog entry {id:?} failed to evaluate: {source}")]
    Eval {
        id: String,
        #[source]
        source: EvalError,
    },
    #[error("catalog entry {id:?} produced a negative linking magnitude {value}")]
    NegativeLinking { id: String, value: i64 },
    #[error("catalog entry {id:?} produced a linking sign {value} outside -1..=1")]
    InvalidLinkingSign { id: String, value: i64 },
    #[error("catalog entry {id:?} claims a Hopf pair but its members link {value} times")]
    HopfLinkingContradiction { id: String, value: i64 },
    #[error("no catalog entry with id {0:?}")]
    UnknownId(String),
}

/// The kind of a seiferter record.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeifertKind {
    /// Exceptional fiber of index `|p|`.
    BasicSp,
    /// Exceptional fiber of index `q`.
    BasicSq,
    /// Meridian of the host knot.
    Meridian,
    /// Any other cataloged seiferter.
    Cataloged,
}

pub use SeifertKind as SeiferterKind;

/// Narrows an evaluated expression value to `i64`.
fn narrow(id: &str, value: i128) -> Result<i64, CatalogError> {
    i64::try_from(value).map_err(|_| CatalogError::Eval {
        id: id.to_owned(),
        source: EvalError::Overflow,
    })
}

impl fmt::Display for SeifertKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            SeifertKind::BasicSp => "basic_sp",
            SeifertKind::BasicSq => "basic_sq",
            SeifertKind::Meridian => "meridian",
            SeifertKind::Cataloged => "cataloged",
        };
        f.write_str(text)
    }
}

/// The sign part of a linking specification: a concrete expression or
/// the literal string `"unspecified"`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SignSpec {
    Unspecified,
    Expr(Expr),
}

impl Serialize for SignSpec {
    fn serialize<S>(&self, serializer: S) -> Result<S::Ok, S::Error>
    where
        S: serde::Serializer,
    {
        match self {
            SignSpec::Unspecified => serializer.serialize_str("unspecified"),
            SignSpec::Expr(expr) => expr.serialize(serializer),
        }
    }
}

impl<'de> Deserialize<'de> for SignSpec {
    fn deserialize<D>(deserializer: D) -> Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        let text = String::deserialize(deserializer)?;
        if text == "unspecified" {
            return Ok(SignSpec::Unspecified);
        }
        text.parse()
            .map(SignSpec::Expr)
            .map_err(serde::de::Error::custom)
    }
}

/// Linking data as stored in the catalog: a magnitude expression and an
/// optional sign expression.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkingSpec {
    pub expr: Expr,
    pub sign: SignSpec,
}

/// Family constraints tying host parameters to the family parameter `n`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<Expr>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<Expr>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<Expr>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<Expr>,
}

/// A conditional alias: under `when`, the seiferter coincides with the
/// curve described by `name`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AliasRule {
    pub when: Expr,
    pub name: String,
}

/// A known torus-knot image under a fixed number of twists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistImageRule {
    pub turns: i64,
    pub p: Expr,
    pub q: Expr,
}

/// A known named-knot image under a fixed number of twists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedImageRule {
    pub turns: i64,
    pub name: String,
}

/// One seiferter record as stored in the catalog file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeiferterSpec {
    pub id: String,
    pub kind: SeifertKind,
    #[serde(default)]
    pub family: FamilySpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_from: Option<Expr>,
    pub validity: Expr,
    pub linking: LinkingSpec,
    pub hyperbolic: Expr,
    pub citation: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub aliases: Vec<AliasRule>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub twist_images: Vec<TwistImageRule>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub named_images: Vec<NamedImageRule>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
}

/// One annular-pair record as stored in the catalog file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnnularPairSpec {
    pub id: String,
    pub members: [String; 2],
    #[serde(default)]
    pub family: FamilySpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_from: Option<Expr>,
    pub validity: Expr,
    pub pair_linking: Expr,
    pub per_knot_linking: [Expr; 2],
    pub is_hopf: Expr,
    pub hyperbolic: Expr,
    pub citation: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
}

/// Raw catalog file contents.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogData {
    pub schema_version: u32,
    pub seiferters: Vec<SeiferterSpec>,
    #[serde(default)]
    pub annular_pairs: Vec<AnnularPairSpec>,
}

/// A seiferter instantiated at a concrete host surgery.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Seiferter {
    pub id: String,
    pub kind: SeifertKind,
    /// `|lk(c, K)|`.
    pub linking_magnitude: i64,
    /// Sign of `lk(c, K)` when the record specifies one.
    pub linking_sign: Option<i64>,
    /// Whether the host-seiferter link complement is known hyperbolic.
    pub hyperbolic: bool,
    /// A seiferter bounding a disk in the knot complement twists the
    /// surgery trivially; only the unknotted host's meridian qualifies.
    pub irrelevant_for_twisting: bool,
    /// Names of coinciding curves under the record's alias rules.
    pub aliases: Vec<String>,
    /// Family parameter bound through `n_from`, if any.
    pub n: Option<i64>,
    pub citation: String,
}

impl Seiferter {
    /// The linking value used in slope arithmetic; the slope change of a
    /// twist only depends on the magnitude.
    pub fn linking_for_twist(&self) -> i64 {
        self.linking_magnitude
    }

    /// Signed linking number when the sign is on record.
    pub fn signed_linking(&self) -> Option<i64> {
        self.linking_sign.map(|s| s * self.linking_magnitude)
    }
}

/// An annular pair instantiated at a concrete host surgery.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnnularPairRecord {
    pub id: String,
    pub members: [String; 2],
    /// `|lk(c_1, c_2)|` between the two members.
    pub pair_linking: i64,
    /// `|lk(c_i, K)|` for each member.
    pub per_knot_linking: [i64; 2],
    /// Whether the members form a Hopf link in the three-sphere.
    pub is_hopf: bool,
    /// Whether the complement of `K` and both members is known hyperbolic.
    pub hyperbolic: bool,
    /// Free family parameter the record was instantiated at, if any.
    pub n: Option<i64>,
    pub citation: String,
}

/// A validated catalog.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalog {
    data: CatalogData,
}

impl Catalog {
    /// Parses and validates catalog JSON.
    pub fn from_json(json: &str) -> Result<Catalog, CatalogError> {
        let data: CatalogData = serde_json::from_str(json)?;
        let catalog = Catalog { data };
        catalog.validate()?;
        Ok(catalog)
    }

    /// Reads and validates a catalog file.
    pub fn from_path(path: impl AsRef<Path>) -> Result<Catalog, CatalogError> {
        let path = path.as_ref();
        let json = std::fs::read_to_string(path).map_err(|source| CatalogError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Catalog::from_json(&json)
    }

    /// The catalog shipped with the crate.
    pub fn embedded() -> &'static Catalog {
        EMBEDDED.get_or_init(|| {
            Catalog::from_json(EMBEDDED_JSON).expect("embedded catalog is valid")
        })
    }

    /// Loads the catalog named by `SEIFERT_NET_CATALOG`, or the embedded
    /// one when the variable is unset.
    pub fn load() -> Result<Catalog, CatalogError> {
        match std::env::var_os(CATALOG_ENV_VAR) {
            Some(path) => Catalog::from_path(path),
            None => Ok(Catalog::embedded().clone()),
        }
    }

    /// The raw records.
    pub fn data(&self) -> &CatalogData {
        &self.data
    }

    /// Structural validation: schema version, unique ids, the three basic
    /// seiferters, nonempty citations, and nonzero image turns.
    pub fn validate(&self) -> Result<(), CatalogError> {
        if self.data.schema_version != SCHEMA_VERSION {
            return Err(CatalogError::UnsupportedSchemaVersion {
                found: self.data.schema_version,
            });
        }
        let mut ids = BTreeSet::new();
        for spec in &self.data.seiferters {
            if !ids.insert(spec.id.clone()) {
                return Err(CatalogError::DuplicateId(spec.id.clone()));
            }
            if spec.citation.is_empty() {
                return Err(CatalogError::EmptyCitation {
                    id: spec.id.clone(),
                });
            }
            if spec
                .twist_images
                .iter()
                .map(|r| r.turns)
                .chain(spec.named_images.iter().map(|r| r.turns))
                .any(|turns| turns == 0)
            {
                return Err(CatalogError::ZeroTurnImage {
                    id: spec.id.clone(),
                });
            }
        }
        let mut pair_ids = BTreeSet::new();
        for spec in &self.data.annular_pairs {
            if !pair_ids.insert(spec.id.clone()) {
                return Err(CatalogError::DuplicateId(spec.id.clone()));
            }
            if spec.citation.is_empty() {
                return Err(CatalogError::EmptyCitation {
                    id: spec.id.clone(),
                });
            }
        }
        for kind in [SeifertKind::BasicSp, SeifertKind::BasicSq, SeifertKind::Meridian] {
            if !self.data.seiferters.iter().any(|s| s.kind == kind) {
                let name = match kind {
                    SeifertKind::BasicSp => "basic_sp",
                    SeifertKind::BasicSq => "basic_sq",
                    SeifertKind::Meridian => "meridian",
                    SeifertKind::Cataloged => unreachable!(),
                };
                return Err(CatalogError::MissingBasicSeiferter(name));
            }
        }
        Ok(())
    }

    /// The record with the given id, if present.
    pub fn seiferter_spec(&self, id: &str) -> Option<&SeiferterSpec> {
        self.data.seiferters.iter().find(|s| s.id == id)
    }

    /// The annular-pair record with the given id, if present.
    pub fn annular_pair_spec(&self, id: &str) -> Option<&AnnularPairSpec> {
        self.data.annular_pairs.iter().find(|s| s.id == id)
    }

    /// Environment for a record at a host, with `n` bound when the record
    /// declares `n_from`.
    fn record_env(
        id: &str,
        n_from: &Option<Expr>,
        knot: TorusKnotId,
        m: i64,
    ) -> Result<Env, CatalogError> {
        let mut env = Env::host(knot.p(), knot.q(), m);
        if let Some(n_expr) = n_from {
            let n = n_expr.eval_int(&env).map_err(|source| CatalogError::Eval {
                id: id.to_owned(),
                source,
            })?;
            env = env.with_n(narrow(id, n)?);
        }
        Ok(env)
    }

    fn family_matches(
        id: &str,
        family: &FamilySpec,
        env: &Env,
    ) -> Result<bool, CatalogError> {
        let checks = [
            (&family.p, env.p),
            (&family.q, env.q),
            (&family.m, env.m),
            (&family.n, env.n),
        ];
        for (expr, actual) in checks {
            if let Some(expr) = expr {
                let Some(actual) = actual else {
                    return Ok(false);
                };
                let value = expr.eval_int(env).map_err(|source| CatalogError::Eval {
                    id: id.to_owned(),
                    source,
                })?;
                if value != actual as i128 {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn instantiate_seiferter(
        spec: &SeiferterSpec,
        knot: TorusKnotId,
        m: i64,
    ) -> Result<Option<Seiferter>, CatalogError> {
        let env = Self::record_env(&spec.id, &spec.n_from, knot, m)?;
        if !Self::family_matches(&spec.id, &spec.family, &env)? {
            return Ok(None);
        }
        let eval_err = |source| CatalogError::Eval {
            id: spec.id.clone(),
            source,
        };
        if !spec.validity.eval_bool(&env).map_err(eval_err)? {
            return Ok(None);
        }
        let magnitude = narrow(&spec.id, spec.linking.expr.eval_int(&env).map_err(eval_err)?)?;
        if magnitude < 0 {
            return Err(CatalogError::NegativeLinking {
                id: spec.id.clone(),
                value: magnitude,
            });
        }
        let sign = match &spec.linking.sign {
            SignSpec::Unspecified => None,
            SignSpec::Expr(expr) => {
                let value = narrow(&spec.id, expr.eval_int(&env).map_err(eval_err)?)?;
                if !(-1..=1).contains(&value) {
                    return Err(CatalogError::InvalidLinkingSign {
                        id: spec.id.clone(),
                        value,
                    });
                }
                Some(value)
            }
        };
        let hyperbolic = spec.hyperbolic.eval_bool(&env).map_err(eval_err)?;
        let mut aliases = Vec::new();
        for rule in &spec.aliases {
            if rule.when.eval_bool(&env).map_err(eval_err)? {
                aliases.push(rule.name.clone());
            }
        }
        Ok(Some(Seiferter {
            id: spec.id.clone(),
            kind: spec.kind,
            linking_magnitude: magnitude,
            linking_sign: sign,
            hyperbolic,
            irrelevant_for_twisting: spec.kind == SeifertKind::Meridian && knot.is_unknot(),
            aliases,
            n: env.n,
            citation: spec.citation.clone(),
        }))
    }

    /// All seiferters valid at the host `(knot, m)`, in catalog order.
    /// The three basic seiferters match every host, so the list is never
    /// empty.
    pub fn lookup(&self, knot: TorusKnotId, m: i64) -> Result<Vec<Seiferter>, CatalogError> {
        let mut out = Vec::new();
        for spec in &self.data.seiferters {
            if let Some(seiferter) = Self::instantiate_seiferter(spec, knot, m)? {
                out.push(seiferter);
            }
        }
        Ok(out)
    }

    /// Instantiates one seiferter record at a host by id.  `Ok(None)`
    /// means the record exists but does not serve this host.
    pub fn instantiate(
        &self,
        id: &str,
        knot: TorusKnotId,
        m: i64,
    ) -> Result<Option<Seiferter>, CatalogError> {
        let spec = self
            .seiferter_spec(id)
            .ok_or_else(|| CatalogError::UnknownId(id.to_owned()))?;
        Self::instantiate_seiferter(spec, knot, m)
    }

    /// Instantiates an annular-pair record at a host.  Records whose
    /// validity involves a free parameter `n` need it passed explicitly.
    pub fn instantiate_annular_pair(
        &self,
        id: &str,
        knot: TorusKnotId,
        m: i64,
        n: Option<i64>,
    ) -> Result<Option<AnnularPairRecord>, CatalogError> {
        let spec = self
            .annular_pair_spec(id)
            .ok_or_else(|| CatalogError::UnknownId(id.to_owned()))?;
        let mut env = Self::record_env(&spec.id, &spec.n_from, knot, m)?;
        if env.n.is_none() {
            env.n = n;
        }
        if !Self::family_matches(&spec.id, &spec.family, &env)? {
            return Ok(None);
        }
        let eval_err = |source| CatalogError::Eval {
            id: spec.id.clone(),
            source,
        };
        let valid = match spec.validity.eval_bool(&env) {
            Ok(valid) => valid,
            Err(EvalError::UnboundVar(_)) if env.n.is_none() => return Ok(None),
            Err(source) => return Err(eval_err(source)),
        };
        if !valid {
            return Ok(None);
        }
        let pair_linking = narrow(&spec.id, spec.pair_linking.eval_int(&env).map_err(eval_err)?)?;
        let per_knot = [
            narrow(&spec.id, spec.per_knot_linking[0].eval_int(&env).map_err(eval_err)?)?,
            narrow(&spec.id, spec.per_knot_linking[1].eval_int(&env).map_err(eval_err)?)?,
        ];
        let is_hopf = spec.is_hopf.eval_bool(&env).map_err(eval_err)?;
        if is_hopf && pair_linking.abs() != 1 {
            return Err(CatalogError::HopfLinkingContradiction {
                id: spec.id.clone(),
                value: pair_linking,
            });
        }
        let hyperbolic = spec.hyperbolic.eval_bool(&env).map_err(eval_err)?;
        Ok(Some(AnnularPairRecord {
            id: spec.id.clone(),
            members: spec.members.clone(),
            pair_linking,
            per_knot_linking: per_knot,
            is_hopf,
            hyperbolic,
            n: env.n,
            citation: spec.citation.clone(),
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::canonical_torus_knot;

    fn knot(p: i64, q: i64) -> TorusKnotId {
        canonical_torus_knot(p, q).unwrap()
    }

    fn ids(list: &[Seiferter]) -> Vec<&str> {
        list.iter().map(|s| s.id.as_str()).collect()
    }

    #[test]
    fn embedded_catalog_loads_and_validates() {
        let catalog = Catalog::embedded();
        assert_eq!(catalog.data().schema_version, SCHEMA_VERSION);
        assert!(catalog.seiferter_spec("s_p").is_some());
        assert!(catalog.seiferter_spec("missing").is_none());
    }

    #[test]
    fn every_host_gets_the_three_basics() {
        let catalog = Catalog::embedded();
        for (p, q, m) in [(3, 2, 6), (-7, 4, -27), (11, 5, 0), (1, 1, 3)] {
            let list = catalog.lookup(knot(p, q), m).unwrap();
            let ids = ids(&list);
            assert!(ids.contains(&"s_p"), "s_p missing at ({p},{q},{m})");
            assert!(ids.contains(&"s_q"), "s_q missing at ({p},{q},{m})");
            assert!(ids.contains(&"c_mu"), "c_mu missing at ({p},{q},{m})");
        }
    }

    #[test]
    fn basic_linking_numbers_follow_the_host() {
        let catalog = Catalog::embedded();
        let list = catalog.lookup(knot(-7, 4), -27).unwrap();
        let sp = list.iter().find(|s| s.id == "s_p").unwrap();
        assert_eq!(sp.linking_magnitude, 4);
        assert_eq!(sp.signed_linking(), Some(4));
        assert!(!sp.hyperbolic);
        let sq = list.iter().find(|s| s.id == "s_q").unwrap();
        assert_eq!(sq.linking_magnitude, 7);
        assert_eq!(sq.signed_linking(), Some(-7));
        let mu = list.iter().find(|s| s.id == "c_mu").unwrap();
        assert_eq!(mu.linking_magnitude, 1);
        assert!(!mu.irrelevant_for_twisting);
    }

    #[test]
    fn unknot_meridian_is_flagged_irrelevant() {
        let catalog = Catalog::embedded();
        let list = catalog.lookup(TorusKnotId::UNKNOT, 4).unwrap();
        let mu = list.iter().find(|s| s.id == "c_mu").unwrap();
        assert!(mu.irrelevant_for_twisting);
        let sp = list.iter().find(|s| s.id == "s_p").unwrap();
        assert_eq!(sp.linking_magnitude, 1);
        assert!(!sp.irrelevant_for_twisting);
    }

    #[test]
    fn figure_two_hosts_carry_their_seiferters() {
        let catalog = Catalog::embedded();
        let c_host = catalog.lookup(knot(-3, 2), -2).unwrap();
        let c = c_host.iter().find(|s| s.id == "c").unwrap();
        assert_eq!(c.linking_magnitude, 0);
        assert_eq!(c.signed_linking(), Some(0));
        assert!(!c.hyperbolic);

        let cp_host = catalog.lookup(knot(-3, 2), -7).unwrap();
        assert!(cp_host.iter().all(|s| s.id != "c"));
        let c_prime = cp_host.iter().find(|s| s.id == "c_prime").unwrap();
        assert_eq!(c_prime.linking_magnitude, 5);
        assert!(c_prime.hyperbolic);
    }

    #[test]
    fn fiber_slope_records_alias_to_the_meridian_when_linking_is_one() {
        let catalog = Catalog::embedded();
        let list = catalog.lookup(knot(3, 2), 6).unwrap();
        let plus = list.iter().find(|s| s.id == "c_plus").unwrap();
        assert_eq!(plus.signed_linking(), Some(5));
        assert!(plus.hyperbolic);
        assert!(plus.aliases.is_empty());
        let minus = list.iter().find(|s| s.id == "c_minus").unwrap();
        assert_eq!(minus.signed_linking(), Some(1));
        assert!(!minus.hyperbolic);
        assert_eq!(minus.aliases, vec!["c_mu".to_owned()]);

        let list = catalog.lookup(knot(-4, 3), -12).unwrap();
        let plus = list.iter().find(|s| s.id == "c_plus").unwrap();
        assert_eq!(plus.signed_linking(), Some(-1));
        assert_eq!(plus.aliases, vec!["c_mu".to_owned()]);
        let minus = list.iter().find(|s| s.id == "c_minus").unwrap();
        assert_eq!(minus.signed_linking(), Some(-7));
        assert!(minus.hyperbolic);
    }

    #[test]
    fn even_host_family_tracks_slope_aliases() {
        let catalog = Catalog::embedded();
        let list = catalog.lookup(knot(7, 2), 14).unwrap();
        let cm = list.iter().find(|s| s.id == "c_m").unwrap();
        assert_eq!(cm.linking_magnitude, 7);
        assert_eq!(cm.linking_sign, None);
        assert_eq!(cm.aliases, vec!["s_q".to_owned()]);
        assert!(!cm.hyperbolic);

        let cm = catalog.instantiate("c_m", knot(7, 2), 16).unwrap().unwrap();
        assert_eq!(cm.linking_magnitude, 9);
        assert!(cm.hyperbolic);

        let cm = catalog.instantiate("c_m", knot(7, 2), 15).unwrap().unwrap();
        assert!(!cm.hyperbolic);
        assert_eq!(cm.aliases, vec!["(1,(p+1)/2)-cable of s_p".to_owned()]);

        assert!(catalog.instantiate("c_m", knot(5, 3), 14).unwrap().is_none());
    }

    #[test]
    fn trefoil_records_cover_every_slope_except_four() {
        let catalog = Catalog::embedded();
        for m in -30..=30 {
            let list = catalog.lookup(knot(3, 2), m).unwrap();
            let has_hyperbolic = list.iter().any(|s| s.hyperbolic);
            assert_eq!(has_hyperbolic, m != 4, "slope {m}");
        }
    }

    #[test]
    fn lens_family_records_bind_their_parameter() {
        let catalog = Catalog::embedded();
        let list = catalog.lookup(knot(5, 2), 9).unwrap();
        let c = list.iter().find(|s| s.id == "c_lens_plus").unwrap();
        assert_eq!(c.n, Some(2));
        assert_eq!(c.linking_magnitude, 6);
        assert!(c.hyperbolic);

        let list = catalog.lookup(knot(-7, 4), -27).unwrap();
        let c = list.iter().find(|s| s.id == "c_lens_plus_pre").unwrap();
        assert_eq!(c.n, Some(2));
        assert_eq!(c.linking_magnitude, 6);

        let list = catalog.lookup(knot(7, 3), 20).unwrap();
        let c = list.iter().find(|s| s.id == "c_lens_plus").unwrap();
        assert_eq!(c.n, Some(3));
        assert_eq!(c.linking_magnitude, 8);
        let star = list.iter().find(|s| s.id == "c_star").unwrap();
        assert_eq!(star.linking_magnitude, 5);

        assert!(catalog.instantiate("c_star", knot(5, 2), 9).unwrap().is_none());
        assert!(catalog
            .instantiate("c_lens_plus", knot(5, 2), 8)
            .unwrap()
            .is_none());

        let list = catalog.lookup(knot(3, 2), 5).unwrap();
        let c = list.iter().find(|s| s.id == "c_lens_minus").unwrap();
        assert_eq!(c.n, Some(2));
        assert_eq!(c.linking_magnitude, 5);
    }

    #[test]
    fn sporadic_record_sits_at_the_fiber_slope() {
        let catalog = Catalog::embedded();
        let c = catalog.instantiate("c_35", knot(5, 3), 15).unwrap().unwrap();
        assert_eq!(c.linking_magnitude, 4);
        assert!(c.hyperbolic);
        assert!(catalog.instantiate("c_35", knot(5, 3), 14).unwrap().is_none());
    }

    #[test]
    fn annular_pairs_instantiate_with_constraints() {
        let catalog = Catalog::embedded();
        let pair = catalog
            .instantiate_annular_pair("hopf_cmu_cm", knot(7, 2), 16, None)
            .unwrap()
            .unwrap();
        assert!(pair.is_hopf);
        assert_eq!(pair.pair_linking, 1);
        assert_eq!(pair.per_knot_linking, [1, 9]);

        assert!(catalog
            .instantiate_annular_pair("hopf_cmu_cm", knot(7, 2), 8, None)
            .unwrap()
            .is_none());

        let pair = catalog
            .instantiate_annular_pair("hopf_c_cp", TorusKnotId::UNKNOT, 2, Some(7))
            .unwrap()
            .unwrap();
        assert_eq!(pair.per_knot_linking, [1, 5]);
        assert!(catalog
            .instantiate_annular_pair("hopf_c_cp", TorusKnotId::UNKNOT, 2, Some(5))
            .unwrap()
            .is_none());
        assert!(catalog
            .instantiate_annular_pair("hopf_c_cp", TorusKnotId::UNKNOT, 2, Some(4))
            .unwrap()
            .is_none());

        let pair = catalog
            .instantiate_annular_pair("pair_c_cqm", TorusKnotId::UNKNOT, -3, Some(4))
            .unwrap()
            .unwrap();
        assert!(!pair.is_hopf);
        assert_eq!(pair.pair_linking, 3);
        assert_eq!(pair.per_knot_linking, [1, 4]);
        assert!(catalog
            .instantiate_annular_pair("pair_c_cqm", TorusKnotId::UNKNOT, -1, Some(3))
            .unwrap()
            .is_none());

        let pair = catalog
            .instantiate_annular_pair("pair_c_cqm_prime", TorusKnotId::UNKNOT, 3, Some(1))
            .unwrap()
            .unwrap();
        assert_eq!(pair.pair_linking, 2);
        assert_eq!(pair.per_knot_linking, [1, 4]);
        assert!(catalog
            .instantiate_annular_pair("pair_c_cqm_prime", TorusKnotId::UNKNOT, 1, Some(1))
            .unwrap()
            .is_none());
    }

    #[test]
    fn schema_violations_are_rejected() {
        let bad_version = r#"{"schema_version": 2, "seiferters": [], "annular_pairs": []}"#;
        assert!(matches!(
            Catalog::from_json(bad_version),
            Err(CatalogError::UnsupportedSchemaVersion { found: 2 })
        ));

        let missing_version = r#"{"seiferters": []}"#;
        assert!(matches!(
            Catalog::from_json(missing_version),
            Err(CatalogError::Json(_))
        ));

        let no_basics = r#"{"schema_version": 1, "seiferters": [], "annular_pairs": []}"#;
        assert!(matches!(
            Catalog::from_json(no_basics),
            Err(CatalogError::MissingBasicSeiferter(_))
        ));

        let bad_expr = r#"{
          "schema_version": 1,
          "seiferters": [{
            "id": "x", "kind": "basic_sp", "validity": "q +",
            "linking": {"expr": "q", "sign": "1"},
            "hyperbolic": "false", "citation": "docs/catalog.md#x"
          }],
          "annular_pairs": []
        }"#;
        assert!(matches!(
            Catalog::from_json(bad_expr),
            Err(CatalogError::Json(_))
        ));
    }

    #[test]
    fn hyperbolic_records_on_torus_hosts_sit_on_spreader_slopes() {
        use crate::model::spreader_slope;
        let catalog = Catalog::embedded();
        for p in -40..=40i64 {
            for q in 2..=6i64 {
                let Ok(k) = canonical_torus_knot(p, q) else { continue };
                if (k.p(), k.q()) != (p, q) {
                    continue;
                }
                let pq = p * q;
                for m in (pq - 25)..=(pq + 25) {
                    for s in catalog.lookup(k, m).unwrap() {
                        if s.hyperbolic {
                            assert!(
                                spreader_slope(k, m),
                                "hyperbolic seiferter {} at non-spreader host ({p},{q},{m})",
                                s.id
                            );
                        }
                    }
                }
            }
        }
    }
}
