//! Fitting decomposition of an operator into a nilpotent part and an
//! automorphism part, and its inverse.

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::subspaces::{DirectSum, Subspace, SubspaceMap};

/// `X = W ⊕ V` with `Q` nilpotent on `W` (restriction `s`) and invertible on
/// `V` (restriction `r`). Restrictions are in reference coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FittingPair {
    pub w: Subspace,
    pub v: Subspace,
    pub r: SubspaceMap,
    pub s: SubspaceMap,
}

/// `ker(Q^i)` for `i = 0..=len`.
pub fn kernel_chain(q: &Matrix, len: usize) -> Result<Vec<Subspace>> {
    power_chain(q, len, |m| m.kernel_basis())
}

/// `im(Q^i)` for `i = 0..=len`.
pub fn image_chain(q: &Matrix, len: usize) -> Result<Vec<Subspace>> {
    power_chain(q, len, |m| m.image_basis())
}

fn power_chain(
    q: &Matrix,
    len: usize,
    basis: impl Fn(&Matrix) -> Vec<Vector>,
) -> Result<Vec<Subspace>> {
    let n = q.rows();
    let mut power = q.mat_pow(0)?;
    let mut chain = Vec::with_capacity(len + 1);
    for i in 0..=len {
        if i > 0 {
            power = power.mat_mul(q)?;
        }
        chain.push(Subspace::span(q.field(), n, &basis(&power))?);
    }
    Ok(chain)
}

fn restrict(q: &Matrix, s: &Subspace) -> Result<SubspaceMap> {
    let images = s
        .basis()
        .iter()
        .map(|x| q.apply(x))
        .collect::<Result<Vec<_>>>()?;
    SubspaceMap::from_images(s, s, &images)
        .map_err(|e| Error::Internal(format!("Fitting part is not invariant: {e}")))
}

/// Both chains are stable from `i = n`, so `W = ker(Q^n)` and `V = im(Q^n)`.
pub fn fitting_decompose(q: &Matrix) -> Result<FittingPair> {
    if !q.is_square() {
        return Err(Error::NonSquare {
            rows: q.rows(),
            cols: q.cols(),
        });
    }
    let n = q.rows();
    let qn = q.mat_pow(n as u64)?;
    let w = Subspace::span(q.field(), n, &qn.kernel_basis())?;
    let v = Subspace::span(q.field(), n, &qn.image_basis())?;
    let r = restrict(q, &v)?;
    let s = restrict(q, &w)?;
    Ok(FittingPair { w, v, r, s })
}

/// The operator acting as `r` on `v` and as `s` on `w`.
pub fn fitting_assemble(
    v: &Subspace,
    w: &Subspace,
    r: &SubspaceMap,
    s: &SubspaceMap,
) -> Result<Matrix> {
    if r.domain() != v || r.codomain() != v || s.domain() != w || s.codomain() != w {
        return Err(Error::DimensionMismatch(
            "restrictions do not match their subspaces".into(),
        ));
    }
    // validates complementarity
    DirectSum::new(v, w)?;
    if !r.is_invertible() {
        return Err(Error::NotAutomorphism);
    }
    if !s.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    let basis: Vec<Vector> = v.basis().iter().chain(w.basis()).cloned().collect();
    let mut images = r.images();
    images.extend(s.images());
    Matrix::from_basis_images(v.field(), &basis, &images)
}

pub fn assemble_pair(pair: &FittingPair) -> Result<Matrix> {
    fitting_assemble(&pair.v, &pair.w, &pair.r, &pair.s)
}
