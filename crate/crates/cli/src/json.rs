//! JSON encodings shared by every subcommand.
//!
//! ```text
//! element   {"n":3,"sigma":[2,3,1],"scale":["2","3","1/6"],"translation":["0","0","0"]}
//! matrix    {"n":3,"rows":[["0","2","0"],["0","0","3"],["1/6","0","0"]]}
//! vector    ["1","2","4"]
//! group     {"n":3,"diag":[2.0,0.5,1.0]}
//! algebra   {"n":3,"tdiag":[0.693...,-0.693...,0.0]}
//! report    {"verdict":"symmetry","sigma":[...],"scale":[...]}
//!           {"verdict":"violation","witness":{"kind":"degenerate_tuple","tuple":[2,2,3],"product":"1/2"}}
//!           {"verdict":"violation","witness":{"kind":"permanent","value":"3/2"}}
//! ```

use std::fmt;

use bmsym_core::classify::{AffineVerdict, InvarianceReport, OracleReport, Witness};
use bmsym_core::lie::{DiagonalGroupElement, StructureConstants, TracelessDiagonal};
use bmsym_core::{AffineSymmetry, DenseMatrix, Permutation, Rational, ScaledPerm};
use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

/// Errors from decoding a document into a domain value.
#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("field \"n\" is {declared} but the data has length {actual}")]
    LengthMismatch { declared: usize, actual: usize },
    #[error(transparent)]
    Invalid(#[from] bmsym_core::Error),
}

/// A rational on the wire: a string `"p"` / `"p/q"`, or a bare JSON integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rat(pub Rational);

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct RatVisitor;
        impl Visitor<'_> for RatVisitor {
            type Value = Rat;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a rational string \"p\" or \"p/q\", or an integer")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Rat, E> {
                v.trim()
                    .parse::<Rational>()
                    .map(Rat)
                    .map_err(|_| E::custom(format!("invalid rational {v:?}")))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Rat, E> {
                Ok(Rat(Rational::from_integer(v.into())))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Rat, E> {
                Ok(Rat(Rational::from_integer(v.into())))
            }
        }
        d.deserialize_any(RatVisitor)
    }
}

fn rats(values: &[Rational]) -> Vec<Rat> {
    values.iter().cloned().map(Rat).collect()
}

fn unrat(values: Vec<Rat>) -> Vec<Rational> {
    values.into_iter().map(|r| r.0).collect()
}

fn check_len(declared: usize, actual: usize) -> Result<(), FormatError> {
    if declared != actual {
        return Err(FormatError::LengthMismatch { declared, actual });
    }
    Ok(())
}

/// Wire form of a [`ScaledPerm`] or [`AffineSymmetry`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementJson {
    pub n: usize,
    pub sigma: Vec<usize>,
    pub scale: Vec<Rat>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub translation: Option<Vec<Rat>>,
}

impl ElementJson {
    pub fn from_affine(s: &AffineSymmetry) -> Self {
        ElementJson {
            n: s.n(),
            sigma: s.linear_part().sigma().to_one_based(),
            scale: rats(s.linear_part().scale()),
            translation: Some(rats(s.translation_part())),
        }
    }

    pub fn from_linear(p: &ScaledPerm) -> Self {
        ElementJson {
            n: p.n(),
            sigma: p.sigma().to_one_based(),
            scale: rats(p.scale()),
            translation: None,
        }
    }

    /// Missing translation decodes as zero.
    pub fn into_affine(self) -> Result<AffineSymmetry, FormatError> {
        check_len(self.n, self.sigma.len())?;
        check_len(self.n, self.scale.len())?;
        let sigma = Permutation::from_one_based(&self.sigma)?;
        let linear = ScaledPerm::new(sigma, unrat(self.scale))?;
        Ok(match self.translation {
            Some(t) => {
                check_len(self.n, t.len())?;
                AffineSymmetry::new(linear, unrat(t))?
            }
            None => AffineSymmetry::linear(linear),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixJson {
    pub n: usize,
    pub rows: Vec<Vec<Rat>>,
}

impl MatrixJson {
    pub fn from_dense(m: &DenseMatrix) -> Self {
        MatrixJson {
            n: m.n(),
            rows: m.rows().iter().map(|r| rats(r)).collect(),
        }
    }

    pub fn into_dense(self) -> Result<DenseMatrix, FormatError> {
        check_len(self.n, self.rows.len())?;
        Ok(DenseMatrix::from_rows(
            self.rows.into_iter().map(unrat).collect(),
        )?)
    }
}

/// `{"n":..,"rows":..}` or a bare array of rows.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum MatrixInput {
    Object(MatrixJson),
    Rows(Vec<Vec<Rat>>),
}

impl MatrixInput {
    pub fn into_dense(self) -> Result<DenseMatrix, FormatError> {
        match self {
            MatrixInput::Object(m) => m.into_dense(),
            MatrixInput::Rows(rows) => Ok(DenseMatrix::from_rows(rows.into_iter().map(unrat).collect())?),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupJson {
    pub n: usize,
    pub diag: Vec<f64>,
}

impl GroupJson {
    pub fn from_element(a: &DiagonalGroupElement<f64>) -> Self {
        GroupJson {
            n: a.n(),
            diag: a.diag().to_vec(),
        }
    }

    pub fn into_element(self) -> Result<DiagonalGroupElement<f64>, FormatError> {
        check_len(self.n, self.diag.len())?;
        Ok(DiagonalGroupElement::new(self.diag)?)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraJson {
    pub n: usize,
    pub tdiag: Vec<f64>,
}

impl AlgebraJson {
    pub fn from_element(x: &TracelessDiagonal<f64>) -> Self {
        AlgebraJson {
            n: x.n(),
            tdiag: x.diag().to_vec(),
        }
    }

    pub fn into_element(self) -> Result<TracelessDiagonal<f64>, FormatError> {
        check_len(self.n, self.tdiag.len())?;
        Ok(TracelessDiagonal::new(self.tdiag)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessJson {
    DegenerateTuple { tuple: Vec<usize>, product: Rat },
    Permanent { value: Rat },
}

impl From<&Witness> for WitnessJson {
    fn from(w: &Witness) -> Self {
        match w {
            Witness::DegenerateTuple { tuple, product } => WitnessJson::DegenerateTuple {
                tuple: tuple.clone(),
                product: Rat(product.clone()),
            },
            Witness::PermanentMismatch { value } => WitnessJson::Permanent {
                value: Rat(value.clone()),
            },
        }
    }
}

impl From<WitnessJson> for Witness {
    fn from(w: WitnessJson) -> Self {
        match w {
            WitnessJson::DegenerateTuple { tuple, product } => Witness::DegenerateTuple {
                tuple,
                product: product.0,
            },
            WitnessJson::Permanent { value } => Witness::PermanentMismatch { value: value.0 },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ReportJson {
    Symmetry {
        sigma: Vec<usize>,
        scale: Vec<Rat>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        translation: Option<Vec<Rat>>,
    },
    Violation {
        witness: WitnessJson,
    },
}

impl From<&InvarianceReport> for ReportJson {
    fn from(r: &InvarianceReport) -> Self {
        match r {
            InvarianceReport::Symmetry(p) => ReportJson::Symmetry {
                sigma: p.sigma().to_one_based(),
                scale: rats(p.scale()),
                translation: None,
            },
            InvarianceReport::Violation(w) => ReportJson::Violation { witness: w.into() },
        }
    }
}

impl From<&AffineVerdict> for ReportJson {
    fn from(v: &AffineVerdict) -> Self {
        match v {
            AffineVerdict::Symmetry(s) => ReportJson::Symmetry {
                sigma: s.linear_part().sigma().to_one_based(),
                scale: rats(s.linear_part().scale()),
                translation: Some(rats(s.translation_part())),
            },
            AffineVerdict::Violation(w) => ReportJson::Violation { witness: w.into() },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleJson {
    pub n: usize,
    pub trials: u64,
    pub positives_passed: u64,
    pub perturbed_rejected: u64,
    pub seed: u64,
}

impl From<&OracleReport> for OracleJson {
    fn from(r: &OracleReport) -> Self {
        OracleJson {
            n: r.n,
            trials: r.trials,
            positives_passed: r.positives_passed,
            perturbed_rejected: r.perturbed_rejected,
            seed: r.seed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StructureJson {
    pub n: usize,
    pub dim: usize,
    /// `constants[i][j][k] = c^k_{ij}`, 0-based.
    pub constants: Vec<Vec<Vec<f64>>>,
}

impl StructureJson {
    pub fn new(n: usize, c: &StructureConstants<f64>) -> Self {
        let d = c.dim();
        StructureJson {
            n,
            dim: d,
            constants: (0..d)
                .map(|i| (0..d).map(|j| (0..d).map(|k| *c.get(i, j, k)).collect()).collect())
                .collect(),
        }
    }
}

/// A vector of rationals; strings and integers both accepted.
pub fn parse_vector(text: &str) -> Result<Vec<Rational>, FormatError> {
    Ok(unrat(serde_json::from_str::<Vec<Rat>>(text)?))
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RealEntry {
    Number(f64),
    Text(Rat),
}

/// A vector of reals; numbers or rational strings.
pub fn parse_real_vector(text: &str) -> Result<Vec<f64>, FormatError> {
    let entries: Vec<RealEntry> = serde_json::from_str(text)?;
    Ok(entries
        .into_iter()
        .map(|e| match e {
            RealEntry::Number(v) => v,
            RealEntry::Text(r) => bmsym_core::rational::to_f64(&r.0),
        })
        .collect())
}

/// Compact single-line encoding.
pub fn to_line<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("domain values always serialize")
}
