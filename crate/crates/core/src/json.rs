//! JSON forms of the library's values.
//!
//! Field elements are written as their integer codes. Output goes through
//! [`to_canonical_string`]: sorted keys and no insignificant whitespace, so
//! equal values serialize to identical bytes.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::fitting::FittingPair;
use crate::joyal::{EndoFunction, Tree};
use crate::linalg::{Matrix, Vector};
use crate::subspaces::Subspace;

pub fn to_canonical_string<T: Serialize>(value: &T) -> String {
    // serde_json::Value keeps object keys in a BTreeMap
    let v = serde_json::to_value(value).expect("library values always serialize");
    serde_json::to_string(&v).expect("a Value always serializes")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixJson {
    pub field: FieldSpec,
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<u32>>,
}

impl From<&Matrix> for MatrixJson {
    fn from(m: &Matrix) -> Self {
        MatrixJson {
            field: m.field().spec().clone(),
            rows: m.rows(),
            cols: m.cols(),
            data: m.row_codes(),
        }
    }
}

impl MatrixJson {
    pub fn to_matrix(&self) -> Result<Matrix> {
        let field = Field::new(self.field.clone())?;
        self.to_matrix_in(&field)
    }

    fn to_matrix_in(&self, field: &Field) -> Result<Matrix> {
        if &Field::new(self.field.clone())? != field {
            return Err(Error::FieldMismatch);
        }
        Matrix::from_codes(field, self.rows, self.cols, &self.data)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VectorJson {
    pub field: FieldSpec,
    pub entries: Vec<u32>,
}

impl From<&Vector> for VectorJson {
    fn from(v: &Vector) -> Self {
        VectorJson {
            field: v.field().spec().clone(),
            entries: v.codes(),
        }
    }
}

impl VectorJson {
    pub fn to_vector(&self) -> Result<Vector> {
        let field = Field::new(self.field.clone())?;
        Vector::from_codes(&field, &self.entries)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubspaceJson {
    pub field: FieldSpec,
    pub ambient: usize,
    pub basis: Vec<Vec<u32>>,
}

impl From<&Subspace> for SubspaceJson {
    fn from(s: &Subspace) -> Self {
        SubspaceJson {
            field: s.field().spec().clone(),
            ambient: s.ambient_dim(),
            basis: s.basis().iter().map(Vector::codes).collect(),
        }
    }
}

impl SubspaceJson {
    /// The canonical subspace, and whether the rows had to be re-canonicalized.
    pub fn to_subspace(&self) -> Result<(Subspace, bool)> {
        let field = Field::new(self.field.clone())?;
        let rows = self
            .basis
            .iter()
            .map(|r| {
                if r.len() != self.ambient {
                    return Err(Error::DimensionMismatch(format!(
                        "basis row of length {} in F^{}",
                        r.len(),
                        self.ambient
                    )));
                }
                Vector::from_codes(&field, r)
            })
            .collect::<Result<Vec<_>>>()?;
        Subspace::from_basis_rows(&field, self.ambient, &rows)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FittingPairJson {
    #[serde(rename = "V")]
    pub v: SubspaceJson,
    #[serde(rename = "W")]
    pub w: SubspaceJson,
    #[serde(rename = "R")]
    pub r: MatrixJson,
    #[serde(rename = "S")]
    pub s: MatrixJson,
}

impl From<&FittingPair> for FittingPairJson {
    fn from(fp: &FittingPair) -> Self {
        FittingPairJson {
            v: (&fp.v).into(),
            w: (&fp.w).into(),
            r: fp.r.matrix().into(),
            s: fp.s.matrix().into(),
        }
    }
}

impl FittingPairJson {
    pub fn to_pair(&self) -> Result<FittingPair> {
        use crate::subspaces::SubspaceMap;
        let (v, _) = self.v.to_subspace()?;
        let (w, _) = self.w.to_subspace()?;
        if v.field() != w.field() {
            return Err(Error::FieldMismatch);
        }
        let r = SubspaceMap::new(&v, &v, self.r.to_matrix_in(v.field())?)?;
        let s = SubspaceMap::new(&w, &w, self.s.to_matrix_in(w.field())?)?;
        Ok(FittingPair { w, v, r, s })
    }
}

/// A pair `(T, v)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairJson {
    #[serde(rename = "T")]
    pub t: MatrixJson,
    pub v: VectorJson,
}

impl PairJson {
    pub fn new(t: &Matrix, v: &Vector) -> Self {
        PairJson {
            t: t.into(),
            v: v.into(),
        }
    }

    pub fn to_pair(&self) -> Result<(Matrix, Vector)> {
        let t = self.t.to_matrix()?;
        let v = self.v.to_vector()?;
        if t.field() != v.field() {
            return Err(Error::FieldMismatch);
        }
        Ok((t, v))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TreeJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Tree> for TreeJson {
    fn from(t: &Tree) -> Self {
        TreeJson {
            n: t.n(),
            edges: t.edges().iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}

impl TreeJson {
    pub fn to_tree(&self) -> Result<Tree> {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|&[a, b]| (a, b)).collect();
        Tree::new(self.n, &edges)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionJson {
    pub n: usize,
    pub table: Vec<usize>,
}

impl From<&EndoFunction> for FunctionJson {
    fn from(f: &EndoFunction) -> Self {
        FunctionJson {
            n: f.n(),
            table: f.table().to_vec(),
        }
    }
}

impl FunctionJson {
    pub fn to_function(&self) -> Result<EndoFunction> {
        if self.table.len() != self.n {
            return Err(Error::InvalidFunction(format!(
                "table of length {} for n = {}",
                self.table.len(),
                self.n
            )));
        }
        EndoFunction::new(self.table.clone())
    }
}

/// A tree with two marked vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointedTreeJson {
    pub tree: TreeJson,
    pub v: usize,
    pub v2: usize,
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn matrix_format() {
        let f = Field::with_order(4).unwrap();
        let m = Matrix::square(&f, &[vec![0, 1], vec![3, 2]]).unwrap();
        let s = to_canonical_string(&MatrixJson::from(&m));
        assert_eq!(
            s,
            r#"{"cols":2,"data":[[0,1],[3,2]],"field":{"k":2,"p":2,"poly":[1,1,1]},"rows":2}"#
        );
        let back: MatrixJson = serde_json::from_str(&s).unwrap();
        assert_eq!(back.to_matrix().unwrap(), m);
    }

    #[test]
    fn prime_field_omits_poly() {
        let f = Field::prime(3).unwrap();
        let v = Vector::from_codes(&f, &[2, 0]).unwrap();
        assert_eq!(
            to_canonical_string(&VectorJson::from(&v)),
            r#"{"entries":[2,0],"field":{"k":1,"p":3}}"#
        );
    }

    #[test]
    fn rejects_bad_input() {
        let bad_code = r#"{"field":{"p":2,"k":1},"rows":1,"cols":1,"data":[[2]]}"#;
        let m: MatrixJson = serde_json::from_str(bad_code).unwrap();
        assert!(m.to_matrix().is_err());
        let ragged = r#"{"field":{"p":2,"k":1},"rows":2,"cols":2,"data":[[0,1],[0]]}"#;
        let m: MatrixJson = serde_json::from_str(ragged).unwrap();
        assert!(matches!(m.to_matrix(), Err(Error::DimensionMismatch(_))));
        let extra = r#"{"field":{"p":2,"k":1},"rows":0,"cols":0,"data":[],"x":1}"#;
        assert!(serde_json::from_str::<MatrixJson>(extra).is_err());

        let mixed = PairJson {
            t: MatrixJson {
                field: FieldSpec::prime(2),
                rows: 1,
                cols: 1,
                data: vec![vec![0]],
            },
            v: VectorJson {
                field: FieldSpec::prime(3),
                entries: vec![1],
            },
        };
        assert_eq!(mixed.to_pair(), Err(Error::FieldMismatch));
        let f = FunctionJson {
            n: 3,
            table: vec![0, 1],
        };
        assert!(f.to_function().is_err());
    }

    #[test]
    fn subspace_loader() {
        let js = SubspaceJson {
            field: FieldSpec::prime(2),
            ambient: 3,
            basis: vec![vec![1, 0, 1], vec![0, 1, 0]],
        };
        let (s, flagged) = js.to_subspace().unwrap();
        assert!(!flagged);
        assert_eq!(SubspaceJson::from(&s), js);
        let js = SubspaceJson {
            field: FieldSpec::prime(2),
            ambient: 3,
            basis: vec![vec![0, 1, 0], vec![1, 0, 1]],
        };
        assert!(js.to_subspace().unwrap().1);
    }

    #[test]
    fn fitting_pair_roundtrip() {
        let f = Field::prime(3).unwrap();
        let q = Matrix::square(&f, &[vec![1, 0, 0], vec![0, 0, 1], vec![0, 0, 0]]).unwrap();
        let fp = crate::fitting::fitting_decompose(&q).unwrap();
        let js = FittingPairJson::from(&fp);
        let text = to_canonical_string(&js);
        assert!(text.starts_with(r#"{"R":"#));
        let back: FittingPairJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_pair().unwrap(), fp);
    }

    proptest! {
        #[test]
        fn canonical_text_roundtrips(q in prop::sample::select(vec![2u32, 3, 4, 9]), n in 0usize..4, seed: u64) {
            let f = Field::with_order(q).unwrap();
            let total = u64::from(q).pow((n * n) as u32);
            let m = Matrix::from_index(&f, n, n, seed % total);
            let text = to_canonical_string(&MatrixJson::from(&m));
            let parsed: MatrixJson = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(to_canonical_string(&parsed), text);
            prop_assert_eq!(parsed.to_matrix().unwrap(), m);
        }
    }
}
