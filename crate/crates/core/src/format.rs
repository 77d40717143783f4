//! Text formats: diagram files and dual-rep files (JSON).
//!
//! Diagram: `{"genus": g, "alpha": [[..2g ints..] x g], "beta": .., "gamma": .., "label": ".."}`
//! with coordinates in the basis `a_1, b_1, ..., a_g, b_g`; `label` is optional.
//! Dual rep: `{"a1": [..2g..], "a2": [..], "a3": [..]}` of ambient lifts.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Number;

use crate::diagram::{CutSystem, TrisectionDiagram};
use crate::error::{Error, Result};
use crate::pairings::H2DualRep;
use crate::surface::SurfaceClass;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDiagram {
    genus: usize,
    alpha: Vec<Vec<Number>>,
    beta: Vec<Vec<Number>>,
    gamma: Vec<Vec<Number>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDualRep {
    a1: Vec<Number>,
    a2: Vec<Number>,
    a3: Vec<Number>,
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Format(format!("{e}"))
}

fn to_int(n: &Number) -> Result<BigInt> {
    n.to_string().parse::<BigInt>().map_err(|_| Error::Format(format!("`{n}` is not an integer")))
}

fn to_class(v: &[Number]) -> Result<SurfaceClass> {
    v.iter().map(to_int).collect::<Result<Vec<_>>>().map(SurfaceClass)
}

fn to_numbers(c: &SurfaceClass) -> Vec<Number> {
    c.0.iter().map(|x| x.to_string().parse().expect("decimal integers are JSON numbers")).collect()
}

pub fn parse_diagram(text: &str) -> Result<TrisectionDiagram> {
    let raw: RawDiagram = serde_json::from_str(text).map_err(json_error)?;
    let system = |curves: &[Vec<Number>]| -> Result<CutSystem> {
        Ok(CutSystem::new(curves.iter().map(|c| to_class(c)).collect::<Result<_>>()?))
    };
    let d = TrisectionDiagram::new(raw.genus, system(&raw.alpha)?, system(&raw.beta)?, system(&raw.gamma)?)
        .map_err(|e| Error::Format(format!("shape: {e}")))?;
    Ok(match raw.label {
        Some(l) => d.with_label(l),
        None => d,
    })
}

pub fn diagram_to_json(d: &TrisectionDiagram) -> String {
    let system = |cs: &CutSystem| cs.curves().iter().map(to_numbers).collect::<Vec<_>>();
    let raw = RawDiagram {
        genus: d.genus(),
        alpha: system(d.alpha()),
        beta: system(d.beta()),
        gamma: system(d.gamma()),
        label: d.label().map(str::to_string),
    };
    serde_json::to_string_pretty(&raw).expect("serialisable")
}

/// Parses a dual-rep file; lengths are checked against `genus`.
pub fn parse_dual_rep(text: &str, genus: usize) -> Result<H2DualRep> {
    let raw: RawDualRep = serde_json::from_str(text).map_err(json_error)?;
    let lifts = [&raw.a1, &raw.a2, &raw.a3].map(|v| to_class(v));
    let [a1, a2, a3] = lifts;
    let rep = H2DualRep::new([a1?, a2?, a3?]);
    for a in &rep.lifts {
        if a.len() != 2 * genus {
            return Err(Error::Format(format!("shape: expected vectors of length {}, found {}", 2 * genus, a.len())));
        }
    }
    Ok(rep)
}

pub fn dual_rep_to_json(k: &H2DualRep) -> String {
    let raw = RawDualRep { a1: to_numbers(&k.lifts[0]), a2: to_numbers(&k.lifts[1]), a3: to_numbers(&k.lifts[2]) };
    serde_json::to_string_pretty(&raw).expect("serialisable")
}
