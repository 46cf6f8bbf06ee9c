//! JSON mirrors of morphisms, bimorphisms and spans.
//!
//! ```json
//! {"kind":"ifas","dom":2,"cod":1,"fibers":[[[1,1],[2,1]]]}
//! {"kind":"if","dom":1,"cod":1,"assignments":[[1,-1]]}
//! {"flavor":"Q","src":1,"tgt":1,"apex":1,"left":{..},"right":{..}}
//! ```
//!
//! Indices are 1-based and labels are encoded `1` / `-1`.

use serde::{Deserialize, Serialize};

use crate::morphism::{Entry, Fiber, IfMor, IfasMor, Morphism};
use crate::spans::{QFlavor, Span};
use crate::{Error, Label, Result};

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum MorphismWire {
    Ifas {
        dom: usize,
        cod: usize,
        fibers: Vec<Vec<(usize, i64)>>,
    },
    If {
        dom: usize,
        cod: usize,
        assignments: Vec<(usize, i64)>,
    },
}

fn label(sign: i64) -> Result<Label> {
    Label::from_sign(sign).ok_or_else(|| Error::Json(format!("label must be 1 or -1, got {sign}")))
}

fn index(i: usize) -> Result<usize> {
    i.checked_sub(1)
        .ok_or_else(|| Error::Json("indices are 1-based".into()))
}

impl TryFrom<MorphismWire> for Morphism {
    type Error = Error;

    fn try_from(w: MorphismWire) -> Result<Morphism> {
        match w {
            MorphismWire::Ifas { dom, cod, fibers } => {
                if fibers.len() != cod {
                    return Err(Error::Json(format!(
                        "expected {cod} fibers, found {}",
                        fibers.len()
                    )));
                }
                let fibers = fibers
                    .into_iter()
                    .map(|f| {
                        f.into_iter()
                            .map(|(x, s)| Ok(Entry::new(index(x)?, label(s)?)))
                            .collect::<Result<Vec<_>>>()
                            .map(Fiber)
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(IfasMor::new(dom, fibers)?.into())
            }
            MorphismWire::If {
                dom,
                cod,
                assignments,
            } => {
                if assignments.len() != dom {
                    return Err(Error::Json(format!(
                        "expected {dom} assignments, found {}",
                        assignments.len()
                    )));
                }
                let assign = assignments
                    .into_iter()
                    .map(|(y, s)| Ok((index(y)?, label(s)?)))
                    .collect::<Result<Vec<_>>>()?;
                Ok(IfMor::new(cod, assign)?.into())
            }
        }
    }
}

impl From<&Morphism> for MorphismWire {
    fn from(m: &Morphism) -> MorphismWire {
        match m {
            Morphism::Ifas(f) => MorphismWire::Ifas {
                dom: f.dom(),
                cod: f.cod(),
                fibers: f
                    .fibers()
                    .iter()
                    .map(|fib| {
                        fib.entries()
                            .iter()
                            .map(|e| (e.elem + 1, e.label.sign() as i64))
                            .collect()
                    })
                    .collect(),
            },
            Morphism::If(f) => MorphismWire::If {
                dom: f.dom(),
                cod: f.cod(),
                assignments: f
                    .assignments()
                    .iter()
                    .map(|&(y, a)| (y + 1, a.sign() as i64))
                    .collect(),
            },
        }
    }
}

impl Serialize for Morphism {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MorphismWire::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Morphism {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = MorphismWire::deserialize(d)?;
        Morphism::try_from(w).map_err(serde::de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct SpanWire {
    flavor: QFlavor,
    src: usize,
    tgt: usize,
    apex: usize,
    left: Morphism,
    right: Morphism,
}

impl Serialize for Span {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SpanWire {
            flavor: self.flavor(),
            src: self.src(),
            tgt: self.tgt(),
            apex: self.apex(),
            left: self.left().clone(),
            right: self.right().clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Span {
    /// Reads a representative; the result is not canonicalised.
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let w = SpanWire::deserialize(d)?;
        let s = Span::representative(w.flavor, w.left, w.right).map_err(D::Error::custom)?;
        if (s.src(), s.tgt(), s.apex()) != (w.src, w.tgt, w.apex) {
            return Err(D::Error::custom("src/tgt/apex disagree with the legs"));
        }
        Ok(s)
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serialises")
}

pub fn morphism_from_json(text: &str) -> Result<Morphism> {
    Ok(serde_json::from_str(text)?)
}

pub fn span_from_json(text: &str) -> Result<Span> {
    Ok(serde_json::from_str(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::doublecat::fundamental_bimorphisms;
    use crate::morphism::{inv, mult};
    use Label::{One, T};

    #[test]
    fn worked_example_mirror() {
        let f: Morphism = IfasMor::from_lists(
            5,
            &[&[(1, One)], &[(0, T)], &[(3, T), (4, One)], &[(2, T)]],
        )
        .unwrap()
        .into();
        let text = r#"{"kind":"ifas","dom":5,"cod":4,"fibers":[[[2,1]],[[1,-1]],[[4,-1],[5,1]],[[3,-1]]]}"#;
        assert_eq!(to_json(&f), text);
        assert_eq!(morphism_from_json(text).unwrap(), f);
    }

    #[test]
    fn if_and_span_mirrors() {
        let f: Morphism = inv().to_if().into();
        assert_eq!(
            to_json(&f),
            r#"{"kind":"if","dom":1,"cod":1,"assignments":[[1,-1]]}"#
        );
        let s = Span::new(QFlavor::Q, mult().into(), mult().into()).unwrap();
        let text = to_json(&s);
        assert!(text.starts_with(r#"{"flavor":"Q","src":1,"tgt":1,"apex":2,"#));
        assert_eq!(span_from_json(&text).unwrap(), s);
    }

    #[test]
    fn bimorphism_mirror() {
        let [b1, ..] = fundamental_bimorphisms();
        let text = to_json(&b1);
        assert!(text.starts_with(r#"{"flavor":"IFAS2","top":{"kind":"ifas","dom":4"#));
        let back: crate::doublecat::Bimorphism = serde_json::from_str(&text).unwrap();
        assert_eq!(back, b1);
    }

    #[test]
    fn invalid_inputs() {
        for bad in [
            r#"{"kind":"ifas","dom":1,"cod":1,"fibers":[[[1,1],[1,-1]]]}"#,
            r#"{"kind":"ifas","dom":1,"cod":1,"fibers":[[[0,1]]]}"#,
            r#"{"kind":"ifas","dom":1,"cod":1,"fibers":[[[1,2]]]}"#,
            r#"{"kind":"ifas","dom":1,"cod":2,"fibers":[[[1,1]]]}"#,
            r#"{"kind":"if","dom":2,"cod":1,"assignments":[[1,1]]}"#,
            r#"{"kind":"set","dom":0,"cod":0}"#,
        ] {
            assert!(morphism_from_json(bad).is_err(), "{bad}");
        }
    }
}
