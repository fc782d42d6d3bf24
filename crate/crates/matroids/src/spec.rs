//! Serialized, constructor-level matroid descriptions.
//!
//! The document format is JSON with a fixed key order on serialization, so
//! digests of serialized specs are stable. `parse` then `serialize` is the
//! identity on the value level.

use serde::{Deserialize, Serialize};

use crate::ground::GroundSet;
use crate::matroid::{is_prime, Matroid};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatroidSpec {
    pub name: String,
    pub kind: SpecKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpecKind {
    Uniform {
        rank: usize,
        size: usize,
    },
    Linear {
        p: u64,
        columns: Vec<Vec<u64>>,
    },
    Graphic {
        vertices: usize,
        edges: Vec<(usize, usize)>,
    },
    ExplicitBases {
        bases: Vec<Vec<String>>,
    },
    ExplicitCircuits {
        circuits: Vec<Vec<String>>,
    },
}

impl MatroidSpec {
    pub fn uniform(name: &str, rank: usize, size: usize) -> MatroidSpec {
        MatroidSpec {
            name: name.to_string(),
            kind: SpecKind::Uniform { rank, size },
            labels: None,
        }
    }

    /// Number of ground elements the spec describes.
    pub fn size(&self) -> usize {
        match &self.kind {
            SpecKind::Uniform { size, .. } => *size,
            SpecKind::Linear { columns, .. } => columns.len(),
            SpecKind::Graphic { edges, .. } => edges.len(),
            SpecKind::ExplicitBases { bases } => match &self.labels {
                Some(l) => l.len(),
                None => distinct_labels(bases).len(),
            },
            SpecKind::ExplicitCircuits { circuits } => match &self.labels {
                Some(l) => l.len(),
                None => distinct_labels(circuits).len(),
            },
        }
    }

    /// Structural validation per the spec-kind invariants.
    pub fn validate(&self) -> Result<()> {
        if let Some(labels) = &self.labels {
            for (i, l) in labels.iter().enumerate() {
                if labels[..i].contains(l) {
                    return Err(Error::InvalidSpec(format!("duplicate label {l:?}")));
                }
            }
        }
        match &self.kind {
            SpecKind::Uniform { rank, size } => {
                if rank > size {
                    return Err(Error::InvalidSpec(format!(
                        "uniform rank {rank} exceeds size {size}"
                    )));
                }
                self.check_label_count(*size)
            }
            SpecKind::Linear { p, columns } => {
                if !is_prime(*p) {
                    return Err(Error::SemanticError(format!(
                        "field order {p} is not prime"
                    )));
                }
                let dim = columns.first().map_or(0, Vec::len);
                if columns.iter().any(|c| c.len() != dim) {
                    return Err(Error::InvalidSpec("columns have unequal length".into()));
                }
                if columns.iter().flatten().any(|&v| v >= *p) {
                    return Err(Error::InvalidSpec(format!("column entry not in [0,{p})")));
                }
                self.check_label_count(columns.len())
            }
            SpecKind::Graphic { vertices, edges } => {
                if edges.iter().any(|&(u, v)| u >= *vertices || v >= *vertices) {
                    return Err(Error::InvalidSpec("edge endpoint out of range".into()));
                }
                self.check_label_count(edges.len())
            }
            SpecKind::ExplicitBases { bases } => {
                if bases.is_empty() {
                    return Err(Error::InvalidSpec("explicit_bases list is empty".into()));
                }
                let card = bases[0].len();
                if bases.iter().any(|b| b.len() != card) {
                    return Err(Error::InvalidSpec(
                        "explicit bases have unequal cardinality".into(),
                    ));
                }
                self.check_used_labels(bases)
            }
            SpecKind::ExplicitCircuits { circuits } => self.check_used_labels(circuits),
        }
    }

    fn check_label_count(&self, expected: usize) -> Result<()> {
        match &self.labels {
            Some(l) if l.len() != expected => Err(Error::InvalidSpec(format!(
                "{} labels given for {} elements",
                l.len(),
                expected
            ))),
            _ => Ok(()),
        }
    }

    fn check_used_labels(&self, sets: &[Vec<String>]) -> Result<()> {
        if let Some(labels) = &self.labels {
            for l in sets.iter().flatten() {
                if !labels.contains(l) {
                    return Err(Error::InvalidSpec(format!(
                        "label {l:?} not in the declared label list"
                    )));
                }
            }
        }
        Ok(())
    }

    fn ground(&self) -> Result<GroundSet> {
        if let Some(labels) = &self.labels {
            return GroundSet::new(labels.clone());
        }
        match &self.kind {
            SpecKind::ExplicitBases { bases } => GroundSet::new(distinct_labels(bases)),
            SpecKind::ExplicitCircuits { circuits } => GroundSet::new(distinct_labels(circuits)),
            _ => Ok(GroundSet::with_default_labels(self.size())),
        }
    }

    /// Build the described matroid; explicit kinds are axiom-verified
    /// eagerly up to the size cap.
    pub fn build(&self) -> Result<Matroid> {
        self.validate()?;
        let ground = self.ground()?;
        let m = match &self.kind {
            SpecKind::Uniform { rank, .. } => Matroid::uniform_on(ground, *rank)?,
            SpecKind::Linear { p, columns } => Matroid::linear_on(ground, *p, columns.clone())?,
            SpecKind::Graphic { vertices, edges } => {
                Matroid::graphic_on(ground, *vertices, edges.clone())?
            }
            SpecKind::ExplicitBases { bases } => {
                let masks = bases
                    .iter()
                    .map(|b| ground.mask_of(b))
                    .collect::<Result<Vec<_>>>()?;
                Matroid::from_bases(ground, masks)?
            }
            SpecKind::ExplicitCircuits { circuits } => {
                let masks = circuits
                    .iter()
                    .map(|c| ground.mask_of(c))
                    .collect::<Result<Vec<_>>>()?;
                Matroid::from_circuits(ground, masks)?
            }
        };
        Ok(m.with_name(&self.name))
    }
}

fn distinct_labels(sets: &[Vec<String>]) -> Vec<String> {
    let mut out: Vec<String> = sets.iter().flatten().cloned().collect();
    out.sort();
    out.dedup();
    out
}

/// Parse a spec document, reporting position information on failure.
pub fn parse_spec(text: &str) -> Result<MatroidSpec> {
    let spec: MatroidSpec = serde_json::from_str(text).map_err(|e| Error::ParseError {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    // structural validation; duplicate labels are reported with a position
    if let Err(Error::InvalidSpec(msg)) = spec.validate() {
        if msg.starts_with("duplicate label") {
            let (line, column) = position_of_duplicate(text, &msg);
            return Err(Error::ParseError {
                line,
                column,
                message: msg,
            });
        }
        return Err(Error::InvalidSpec(msg));
    }
    spec.validate()?;
    Ok(spec)
}

fn position_of_duplicate(text: &str, msg: &str) -> (usize, usize) {
    // msg looks like: duplicate label "x"
    let Some(start) = msg.find('"') else {
        return (0, 0);
    };
    let needle = &msg[start..];
    let first = text.find(needle);
    let second = first.and_then(|i| text[i + 1..].find(needle).map(|j| i + 1 + j));
    match second {
        Some(pos) => {
            let line = text[..pos].bytes().filter(|&b| b == b'\n').count() + 1;
            let column = pos - text[..pos].rfind('\n').map_or(0, |i| i + 1) + 1;
            (line, column)
        }
        None => (0, 0),
    }
}

/// Canonical serialization: fixed key order, two-space indentation.
pub fn serialize_spec(spec: &MatroidSpec) -> String {
    serde_json::to_string_pretty(spec).expect("spec serialization cannot fail")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_uniform() {
        let s = MatroidSpec::uniform("u24", 2, 4);
        let text = serialize_spec(&s);
        assert_eq!(parse_spec(&text).unwrap(), s);
    }

    #[test]
    fn duplicate_labels_are_a_parse_error() {
        let text = r#"{
  "name": "bad",
  "kind": { "uniform": { "rank": 1, "size": 2 } },
  "labels": ["x", "x"]
}"#;
        match parse_spec(text) {
            Err(Error::ParseError { line, .. }) => assert!(line >= 1),
            other => panic!("expected ParseError, got {other:?}"),
        }
    }

    #[test]
    fn non_prime_field_is_semantic() {
        let s = MatroidSpec {
            name: "bad".into(),
            kind: SpecKind::Linear {
                p: 4,
                columns: vec![vec![1]],
            },
            labels: None,
        };
        assert!(matches!(s.validate(), Err(Error::SemanticError(_))));
    }

    #[test]
    fn build_rejects_bad_uniform() {
        let s = MatroidSpec::uniform("bad", 3, 2);
        assert!(matches!(s.build(), Err(Error::InvalidSpec(_))));
    }

    #[test]
    fn explicit_bases_ground_from_union() {
        let s = MatroidSpec {
            name: "pair".into(),
            kind: SpecKind::ExplicitBases {
                bases: vec![vec!["a".into()], vec!["b".into()]],
            },
            labels: None,
        };
        let m = s.build().unwrap();
        assert_eq!(m.len(), 2);
        assert_eq!(m.rank_full(), 1);
    }
}
