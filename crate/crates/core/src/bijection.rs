//! The bijection `Nil(X) × X ≅ Lin(X)` for `X = F_q^n`.
//!
//! A pair `(T, v)` with `T` nilpotent is sent to an operator `Q` as follows.
//! The iterates `v, Tv, ..., T^{k-1}v` are an ordered basis of the cyclic
//! subspace `V` they span. Relative to the fixed complement `V^⊥` of `V`,
//! `T` splits into a map `V^⊥ -> V` and a nilpotent on `V^⊥`. The map becomes
//! a complement `W` of `V` (its graph), the nilpotent is transported onto `W`
//! by the canonical isomorphism `V^⊥ -> W`, and the ordered basis becomes an
//! automorphism `R` of `V`. `Q` is the operator with Fitting decomposition
//! `(W, V)` acting as `R` on `V` and the transported nilpotent on `W`.
//!
//! Every choice is fixed: reference bases are RREF bases and `V^⊥` is the
//! Steinitz complement, so both directions are deterministic functions.

use crate::error::{Error, Result};
use crate::fitting::{fitting_assemble, fitting_decompose};
use crate::linalg::{Matrix, Vector};
use crate::subspaces::{
    automorphism_to_basis, basis_to_automorphism, block_decompose, canonical_iso,
    complement_to_map, map_to_complement, OrderedBasis, Subspace, SubspaceMap,
};

/// A nilpotent operator together with a vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilPointed {
    t: Matrix,
    v: Vector,
}

impl NilPointed {
    pub fn new(t: Matrix, v: Vector) -> Result<Self> {
        if !t.is_nilpotent()? {
            return Err(Error::NotNilpotent);
        }
        if t.field() != v.field() {
            return Err(Error::FieldMismatch);
        }
        if v.len() != t.rows() {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for a {}x{} operator",
                v.len(),
                t.rows(),
                t.cols()
            )));
        }
        Ok(NilPointed { t, v })
    }

    pub fn operator(&self) -> &Matrix {
        &self.t
    }

    pub fn vector(&self) -> &Vector {
        &self.v
    }

    pub fn into_parts(self) -> (Matrix, Vector) {
        (self.t, self.v)
    }
}

/// `v, Tv, ..., T^{k-1}v` for the least `k` with `T^k v = 0`.
fn orbit(t: &Matrix, v: &Vector) -> Result<Vec<Vector>> {
    let n = t.rows();
    let mut iterates = Vec::new();
    let mut x = v.clone();
    while !x.is_zero() {
        if iterates.len() == n {
            return Err(Error::NotNilpotent);
        }
        let next = t.apply(&x)?;
        iterates.push(x);
        x = next;
    }
    Ok(iterates)
}

/// Least `k ≥ 0` with `T^k v = 0`.
pub fn degree(t: &Matrix, v: &Vector) -> Result<usize> {
    let pair = NilPointed::new(t.clone(), v.clone())?;
    let iterates = orbit(&pair.t, &pair.v)?;
    let span = Subspace::span(t.field(), t.rows(), &iterates)?;
    if span.dim() != iterates.len() {
        return Err(Error::Internal(format!(
            "iterates of {v:?} under a nilpotent are linearly dependent"
        )));
    }
    Ok(iterates.len())
}

pub fn forward(t: &Matrix, v: &Vector) -> Result<Matrix> {
    let pair = NilPointed::new(t.clone(), v.clone())?;
    forward_pair(&pair)
}

pub fn forward_pair(pair: &NilPointed) -> Result<Matrix> {
    let (t, v) = (&pair.t, &pair.v);
    let field = t.field();
    let n = t.rows();

    let iterates = orbit(t, v)?;
    let cyclic = OrderedBasis::spanning(field, n, iterates)
        .map_err(|_| Error::Internal("iterates are not a basis of their span".into()))?;
    let v_space = cyclic.subspace().clone();
    let v_perp = v_space.steinitz_complement();

    let blocks = block_decompose(t, &v_space, &v_perp)?;
    if !blocks.t_uu.is_nilpotent() {
        return Err(Error::Internal(
            "complementary block of a nilpotent is not nilpotent".into(),
        ));
    }

    let w = map_to_complement(&blocks.t_uv)?;
    let i = canonical_iso(&v_space, &v_perp, &w)?;
    let s = i.compose(&blocks.t_uu)?.compose(&i.inverse()?)?;
    let r = basis_to_automorphism(&cyclic);

    fitting_assemble(&v_space, &w, &r, &s)
}

pub fn inverse(q: &Matrix) -> Result<(Matrix, Vector)> {
    Ok(inverse_pair(q)?.into_parts())
}

pub fn inverse_pair(q: &Matrix) -> Result<NilPointed> {
    let field = q.field();
    let n = q.rows();
    let fp = fitting_decompose(q)?;

    let basis = automorphism_to_basis(&fp.r)?;
    let chain = basis.vectors();
    let v = chain
        .first()
        .cloned()
        .unwrap_or_else(|| Vector::zero(field, n));

    let v_perp = fp.v.steinitz_complement();
    let f = complement_to_map(&fp.w, &fp.v, &v_perp)?;
    let i = canonical_iso(&fp.v, &v_perp, &fp.w)?;
    let t_perp: SubspaceMap = i.inverse()?.compose(&fp.s)?.compose(&i)?;

    // T shifts the chain v_1 -> v_2 -> ... -> v_k -> 0 and acts as f + t_perp on V^⊥.
    let mut domain: Vec<Vector> = chain.to_vec();
    let mut images: Vec<Vector> = chain.iter().skip(1).cloned().collect();
    if !chain.is_empty() {
        images.push(Vector::zero(field, n));
    }
    for ((u, fu), tu) in v_perp.basis().iter().zip(f.images()).zip(t_perp.images()) {
        domain.push(u.clone());
        images.push(fu.add(&tu)?);
    }
    let t = Matrix::from_basis_images(field, &domain, &images)?;
    NilPointed::new(t, v).map_err(|e| Error::Internal(format!("inverse produced a bad pair: {e}")))
}
