//! JSON wire formats: matrices as `{"rows", "cols", "entries"}` with
//! every entry a rational literal `"p/q"`, word parameters as
//! `{"word", "values"}`, and B2 parameters with typed slots. Parse
//! errors name the offending field.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gl::PositiveParams;
use crate::matrix::RatMatrix;
use crate::scalar::{format_scalar, parse_scalar, ExactScalar};
use crate::so3q::{B2Params, B2Slot};
use crate::weyl::CoxeterSystem;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

impl MatrixJson {
    pub fn from_matrix(m: &RatMatrix) -> Self {
        MatrixJson {
            rows: m.rows(),
            cols: m.cols(),
            entries: (0..m.rows())
                .map(|i| (0..m.cols()).map(|j| format_scalar(&m[(i, j)])).collect())
                .collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<RatMatrix> {
        if self.entries.len() != self.rows {
            return Err(Error::Input {
                field: "entries".into(),
                msg: format!("expected {} rows, got {}", self.rows, self.entries.len()),
            });
        }
        let mut flat = Vec::with_capacity(self.rows * self.cols);
        for (i, row) in self.entries.iter().enumerate() {
            if row.len() != self.cols {
                return Err(Error::Input {
                    field: "entries".into(),
                    msg: format!("row {} has {} entries, expected {}", i, row.len(), self.cols),
                });
            }
            for s in row {
                flat.push(parse_scalar(s).map_err(|e| Error::Input {
                    field: "entries".into(),
                    msg: e.to_string(),
                })?);
            }
        }
        Ok(RatMatrix::new(self.rows, self.cols, flat))
    }
}

pub fn matrix_from_json(s: &str) -> Result<RatMatrix> {
    let m: MatrixJson = serde_json::from_str(s).map_err(|e| Error::Input {
        field: "matrix".into(),
        msg: e.to_string(),
    })?;
    m.to_matrix()
}

pub fn matrix_to_json(m: &RatMatrix) -> String {
    serde_json::to_string(&MatrixJson::from_matrix(m)).expect("serializable")
}

/// Wire form of word parameters for type-A positivity:
/// `{"word":[...], "values":["p/q", ...]}` with 1-based letters.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ParamsJson {
    pub word: Vec<usize>,
    pub values: Vec<String>,
}

impl ParamsJson {
    pub fn from_params(p: &PositiveParams) -> Self {
        ParamsJson {
            word: p.word.letters().to_vec(),
            values: p.values.iter().map(format_scalar).collect(),
        }
    }

    /// `n` is the matrix size; the word is validated as reduced in the
    /// symmetric group S_n.
    pub fn to_params(&self, n: usize) -> Result<PositiveParams> {
        let word = CoxeterSystem::type_a(n)
            .reduced_word(&self.word)
            .map_err(|e| Error::Input { field: "word".into(), msg: e.to_string() })?;
        let values: Vec<ExactScalar> = self
            .values
            .iter()
            .map(|s| {
                parse_scalar(s).map_err(|e| Error::Input {
                    field: "values".into(),
                    msg: e.to_string(),
                })
            })
            .collect::<Result<_>>()?;
        PositiveParams::new(word, values)
    }
}

pub fn params_from_json(s: &str, n: usize) -> Result<PositiveParams> {
    let p: ParamsJson = serde_json::from_str(s).map_err(|e| Error::Input {
        field: "params".into(),
        msg: e.to_string(),
    })?;
    p.to_params(n)
}

pub fn params_to_json(p: &PositiveParams) -> String {
    serde_json::to_string(&ParamsJson::from_params(p)).expect("serializable")
}

/// One typed slot on the wire: `{"scalar":"p/q"}` or
/// `{"vector":["p/q", ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SlotJson {
    Scalar(String),
    Vector(Vec<String>),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct B2ParamsJson {
    pub word: Vec<usize>,
    pub slots: Vec<SlotJson>,
}

impl B2ParamsJson {
    pub fn from_params(p: &B2Params) -> Self {
        B2ParamsJson {
            word: p.word.clone(),
            slots: p
                .slots
                .iter()
                .map(|s| match s {
                    B2Slot::Scalar(x) => SlotJson::Scalar(format_scalar(x)),
                    B2Slot::Vector(v) => SlotJson::Vector(v.iter().map(format_scalar).collect()),
                })
                .collect(),
        }
    }

    pub fn to_params(&self) -> Result<B2Params> {
        let parse = |s: &str| {
            parse_scalar(s).map_err(|e| Error::Input {
                field: "slots".into(),
                msg: e.to_string(),
            })
        };
        let slots: Vec<B2Slot> = self
            .slots
            .iter()
            .map(|s| match s {
                SlotJson::Scalar(x) => Ok(B2Slot::Scalar(parse(x)?)),
                SlotJson::Vector(v) => {
                    Ok(B2Slot::Vector(v.iter().map(|x| parse(x)).collect::<Result<_>>()?))
                }
            })
            .collect::<Result<_>>()?;
        B2Params::new(self.word.clone(), slots)
    }
}

pub fn b2_params_from_json(s: &str) -> Result<B2Params> {
    let p: B2ParamsJson = serde_json::from_str(s).map_err(|e| Error::Input {
        field: "params".into(),
        msg: e.to_string(),
    })?;
    p.to_params()
}

pub fn b2_params_to_json(p: &B2Params) -> String {
    serde_json::to_string(&B2ParamsJson::from_params(p)).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, rat};

    #[test]
    fn matrix_roundtrip() {
        let m = RatMatrix::from_rows(vec![vec![rat(1), frac(-2, 3)], vec![rat(0), frac(7, 2)]]);
        let s = matrix_to_json(&m);
        assert_eq!(matrix_from_json(&s).unwrap(), m);
        assert!(s.contains("\"-2/3\""));
    }

    #[test]
    fn matrix_shape_errors() {
        let bad = r#"{"rows":2,"cols":2,"entries":[["1","2"]]}"#;
        assert!(matches!(matrix_from_json(bad), Err(Error::Input { field, .. }) if field == "entries"));
        let bad = r#"{"rows":1,"cols":1,"entries":[["1/0"]]}"#;
        assert!(matrix_from_json(bad).is_err());
    }

    #[test]
    fn params_roundtrip() {
        let word = CoxeterSystem::type_a(3).reduced_word(&[1, 2, 1]).unwrap();
        let p = PositiveParams::new(word, vec![rat(1), frac(1, 2), rat(3)]).unwrap();
        let s = params_to_json(&p);
        assert_eq!(params_from_json(&s, 3).unwrap(), p);
        assert!(params_from_json(r#"{"word":[1,2],"values":["1"]}"#, 3).is_err());
        // non-reduced words are rejected with a named field
        assert!(matches!(
            params_from_json(r#"{"word":[1,1],"values":["1","1"]}"#, 3),
            Err(Error::Input { field, .. }) if field == "word"
        ));
    }

    #[test]
    fn b2_params_roundtrip() {
        let p = B2Params::new(
            vec![1, 2],
            vec![B2Slot::Scalar(rat(2)), B2Slot::Vector(vec![rat(1), rat(0), rat(1)])],
        )
        .unwrap();
        let s = b2_params_to_json(&p);
        assert!(s.contains("\"scalar\""));
        assert!(s.contains("\"vector\""));
        assert_eq!(b2_params_from_json(&s).unwrap(), p);
        // slot type must match the letter
        let bad = r#"{"word":[1],"slots":[{"vector":["1"]}]}"#;
        assert!(b2_params_from_json(bad).is_err());
    }
}
