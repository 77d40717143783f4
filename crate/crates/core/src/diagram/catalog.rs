use crate::error::{Error, Result};
use crate::pairings::intersection_form;

use super::{connected_sum, Trisection, TrisectionDiagram};

const BASE_NAMES: [&str; 6] = ["S4", "CP2", "CP2bar", "S1xS3", "S2xS2", "S2xS2_candidate"];

/// Names accepted by [`builtin`] besides `#`-joined connected sums.
pub fn builtin_names() -> &'static [&'static str] {
    &BASE_NAMES
}

fn base(name: &str) -> Option<TrisectionDiagram> {
    let d = match name {
        "S4" => TrisectionDiagram::from_i64(0, [&[], &[], &[]]),
        "CP2" => TrisectionDiagram::from_i64(1, [&[&[1, 0]], &[&[0, 1]], &[&[1, 1]]]),
        "CP2bar" => TrisectionDiagram::from_i64(1, [&[&[1, 0]], &[&[0, 1]], &[&[1, -1]]]),
        "S1xS3" => TrisectionDiagram::from_i64(1, [&[&[0, 1]], &[&[0, 1]], &[&[0, 1]]]),
        "S2xS2" => TrisectionDiagram::from_i64(
            2,
            [&[&[1, 0, 0, 0], &[0, 0, 1, 0]], &[&[0, 1, 0, 0], &[0, 0, 0, 1]], &[&[1, 0, 0, 1], &[0, 1, 1, 0]]],
        ),
        "S2xS2_candidate" => TrisectionDiagram::from_i64(
            2,
            [&[&[1, 0, 0, 0], &[0, 0, 1, 0]], &[&[0, 1, 0, 0], &[0, 0, 0, 1]], &[&[1, 1, 0, 0], &[0, 0, 1, 1]]],
        ),
        _ => return None,
    };
    Some(d.expect("catalog entries are well-shaped").with_label(name))
}

/// A catalog diagram, or a `#`-separated connected sum of catalog entries
/// (e.g. `CP2#CP2bar`).
///
/// `S2xS2_candidate` carries its computed form type in the label rather
/// than a claimed manifold name.
pub fn builtin(name: &str) -> Result<TrisectionDiagram> {
    let mut parts = name.split('#').map(|p| base(p.trim()).ok_or_else(|| Error::UnknownBuiltin(p.to_string())));
    let first = parts.next().expect("split yields at least one part")?;
    let mut d = parts.try_fold(first, |acc, p| connected_sum(&acc, &p?))?;
    if name == "S2xS2_candidate" {
        let form = intersection_form(&Trisection::new(d.clone())?)?;
        let (p, n) = form.signature;
        d = d.with_label(format!("S2xS2_candidate [{} form, signature ({p},{n})]", form.parity));
    } else {
        d = d.with_label(name);
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{k_values, validate};

    #[test]
    fn catalog_entries_are_valid() {
        for name in builtin_names() {
            let d = builtin(name).unwrap();
            assert!(validate(&d).is_valid(), "{name}");
        }
    }

    #[test]
    fn k_values_of_catalog() {
        assert_eq!(k_values(&builtin("S4").unwrap()).unwrap(), [0, 0, 0]);
        assert_eq!(k_values(&builtin("CP2").unwrap()).unwrap(), [0, 0, 0]);
        assert_eq!(k_values(&builtin("S1xS3").unwrap()).unwrap(), [1, 1, 1]);
        assert_eq!(k_values(&builtin("S1xS3#CP2#S1xS3").unwrap()).unwrap(), [2, 2, 2]);
    }

    #[test]
    fn sums_and_unknown_names() {
        let d = builtin("CP2#CP2bar").unwrap();
        assert_eq!(d.genus(), 2);
        assert_eq!(d.label(), Some("CP2#CP2bar"));
        assert_eq!(builtin("CP3"), Err(Error::UnknownBuiltin("CP3".into())));
        assert!(builtin("CP2#nope").is_err());
    }

    #[test]
    fn candidate_is_labelled_by_its_form() {
        let d = builtin("S2xS2_candidate").unwrap();
        assert_eq!(d.label(), Some("S2xS2_candidate [odd form, signature (2,0)]"));
    }
}
