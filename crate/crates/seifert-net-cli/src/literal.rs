//! Parsers for the command-line literals: surgeries written as
//! `T(p,q),m`, `O,m`, or `NAME,m`, and twist steps written as
//! `SEIFERTER:TURNS`.

use anyhow::{anyhow, bail, Result};
use seifert_net_core::twist::ScriptStep;
use seifert_net_core::{canonical_torus_knot, SeifertSurgery};

/// Parses a surgery literal.  The part after the last comma is the
/// integral slope; the part before it names the knot.
pub fn parse_surgery(text: &str) -> Result<SeifertSurgery> {
    let text = text.trim();
    let Some((knot_part, slope_part)) = text.rsplit_once(',') else {
        bail!("surgery literal {text:?} needs a slope: write 'T(p,q),m', 'O,m', or 'NAME,m'");
    };
    let slope: i64 = slope_part
        .trim()
        .parse()
        .map_err(|_| anyhow!("slope {:?} is not an integer", slope_part.trim()))?;
    let knot_part = knot_part.trim();
    if knot_part == "O" {
        return Ok(SeifertSurgery::torus(
            canonical_torus_knot(1, 1).expect("unknot parameters"),
            slope,
        ));
    }
    if let Some(inner) = knot_part
        .strip_prefix("T(")
        .and_then(|rest| rest.strip_suffix(')'))
    {
        let Some((p_part, q_part)) = inner.split_once(',') else {
            bail!("torus knot literal {knot_part:?} needs two parameters");
        };
        let p: i64 = p_part
            .trim()
            .parse()
            .map_err(|_| anyhow!("torus knot parameter {:?} is not an integer", p_part.trim()))?;
        let q: i64 = q_part
            .trim()
            .parse()
            .map_err(|_| anyhow!("torus knot parameter {:?} is not an integer", q_part.trim()))?;
        let knot = canonical_torus_knot(p, q)?;
        return Ok(SeifertSurgery::torus(knot, slope));
    }
    if knot_part.is_empty() {
        bail!("surgery literal {text:?} has an empty knot name");
    }
    Ok(SeifertSurgery::named(knot_part, slope))
}

/// Parses a twist step literal `SEIFERTER:TURNS`.
pub fn parse_step(text: &str) -> Result<ScriptStep> {
    let text = text.trim();
    let Some((id, turns_part)) = text.rsplit_once(':') else {
        bail!("twist step {text:?} needs a turn count: write 'SEIFERTER:TURNS', e.g. 'c_mu:-3'");
    };
    let id = id.trim();
    if id.is_empty() {
        bail!("twist step {text:?} has an empty seiferter id");
    }
    let turns: i64 = turns_part
        .trim()
        .parse()
        .map_err(|_| anyhow!("turn count {:?} is not an integer", turns_part.trim()))?;
    Ok(ScriptStep {
        seiferter: id.to_owned(),
        turns,
    })
}
