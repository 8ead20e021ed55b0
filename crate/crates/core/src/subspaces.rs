//! Subspaces of `F_q^n` in canonical form, and the constructions on
//! complementary pairs that the main bijection is assembled from.
//!
//! Every subspace carries its RREF basis as the reference basis. Maps between
//! subspaces are matrices in those reference coordinates, so two maps are
//! equal exactly when their matrices are.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::linalg::{Matrix, Vector};

#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    /// The span of `vectors` inside `F_q^ambient`.
    pub fn span(field: &Field, ambient: usize, vectors: &[Vector]) -> Result<Self> {
        let m = Matrix::from_rows(field, ambient, vectors)?;
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i)).collect();
        Ok(Subspace {
            field: field.clone(),
            ambient,
            basis,
            pivots,
        })
    }

    pub fn zero(field: &Field, ambient: usize) -> Self {
        Subspace {
            field: field.clone(),
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &Field, ambient: usize) -> Self {
        Subspace {
            field: field.clone(),
            ambient,
            basis: (0..ambient)
                .map(|i| Vector::unit(field, ambient, i))
                .collect(),
            pivots: (0..ambient).collect(),
        }
    }

    /// Loads a subspace from rows that are expected to be its RREF basis.
    /// Returns the canonical subspace together with a flag that is `true`
    /// when the rows had to be re-canonicalized.
    pub fn from_basis_rows(field: &Field, ambient: usize, rows: &[Vector]) -> Result<(Self, bool)> {
        let s = Subspace::span(field, ambient, rows)?;
        let recanonicalized = s.basis.as_slice() != rows;
        Ok((s, recanonicalized))
    }

    /// Like [`Subspace::from_basis_rows`], but rejects non-canonical input.
    pub fn from_rref_rows(field: &Field, ambient: usize, rows: &[Vector]) -> Result<Self> {
        match Subspace::from_basis_rows(field, ambient, rows)? {
            (s, false) => Ok(s),
            (_, true) => Err(Error::NonCanonical),
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `ambient x dim` matrix with the reference basis as columns.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_columns(&self.field, self.ambient, &self.basis)
            .expect("basis vectors have ambient length")
    }

    fn check_vector(&self, x: &Vector) -> Result<()> {
        if x.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        if x.len() != self.ambient {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in F^{}",
                x.len(),
                self.ambient
            )));
        }
        Ok(())
    }

    fn check_same_ambient(&self, other: &Subspace) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "subspaces of F^{} and F^{}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    /// Coefficients of `x` in the reference basis.
    pub fn coords(&self, x: &Vector) -> Result<Vector> {
        self.check_vector(x)?;
        // In RREF the coefficient of row i is the entry of x at pivot i.
        let c = Vector::new(&self.field, self.pivots.iter().map(|&p| x.get(p)).collect());
        if self.combine(&c)? == *x {
            Ok(c)
        } else {
            Err(Error::NotInSubspace)
        }
    }

    pub fn contains(&self, x: &Vector) -> Result<bool> {
        match self.coords(x) {
            Ok(_) => Ok(true),
            Err(Error::NotInSubspace) => Ok(false),
            Err(e) => Err(e),
        }
    }

    /// The vector with the given reference coordinates.
    pub fn combine(&self, coords: &Vector) -> Result<Vector> {
        if coords.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} coordinates for a {}-dimensional subspace",
                coords.len(),
                self.dim()
            )));
        }
        let f = &self.field;
        let mut out = vec![Elem::ZERO; self.ambient];
        for (b, &c) in self.basis.iter().zip(coords.entries()) {
            if c.is_zero() {
                continue;
            }
            for (slot, &e) in out.iter_mut().zip(b.entries()) {
                *slot = f.add(*slot, f.mul(c, e));
            }
        }
        Ok(Vector::new(f, out))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_same_ambient(other)?;
        for b in &self.basis {
            if !other.contains(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `self ∩ other = {0}` and `self + other` is the ambient space.
    pub fn is_complement_of(&self, other: &Subspace) -> Result<bool> {
        self.check_same_ambient(other)?;
        if self.dim() + other.dim() != self.ambient {
            return Ok(false);
        }
        let all: Vec<Vector> = self.basis.iter().chain(&other.basis).cloned().collect();
        Ok(Subspace::span(&self.field, self.ambient, &all)?.dim() == self.ambient)
    }

    /// The complement spanned by the standard vectors at non-pivot coordinates.
    pub fn steinitz_complement(&self) -> Subspace {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.ambient).filter(|&j| !is_pivot[j]).collect();
        Subspace {
            field: self.field.clone(),
            ambient: self.ambient,
            basis: free
                .iter()
                .map(|&j| Vector::unit(&self.field, self.ambient, j))
                .collect(),
            pivots: free,
        }
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{:?} in F^{}", self.basis, self.ambient)
    }
}

pub fn steinitz_complement(v: &Subspace) -> Subspace {
    v.steinitz_complement()
}

/// An internal direct sum `X = first ⊕ second`, able to split vectors.
#[derive(Clone, Debug)]
pub struct DirectSum {
    first: Subspace,
    second: Subspace,
    /// Inverse of the matrix `[B_first | B_second]`.
    to_coords: Matrix,
}

impl DirectSum {
    pub fn new(first: &Subspace, second: &Subspace) -> Result<Self> {
        if !first.is_complement_of(second)? {
            return Err(Error::NotComplement);
        }
        let columns: Vec<Vector> = first.basis.iter().chain(&second.basis).cloned().collect();
        let m = Matrix::from_columns(&first.field, first.ambient, &columns)?;
        let to_coords = m.inverse().map_err(|_| Error::NotComplement)?;
        Ok(DirectSum {
            first: first.clone(),
            second: second.clone(),
            to_coords,
        })
    }

    pub fn first(&self) -> &Subspace {
        &self.first
    }

    pub fn second(&self) -> &Subspace {
        &self.second
    }

    /// Reference coordinates of the two components of `x`.
    pub fn split(&self, x: &Vector) -> Result<(Vector, Vector)> {
        self.first.check_vector(x)?;
        let c = self.to_coords.apply(x)?;
        let (a, b) = c.entries().split_at(self.first.dim());
        Ok((
            Vector::new(&self.first.field, a.to_vec()),
            Vector::new(&self.first.field, b.to_vec()),
        ))
    }

    /// The components of `x` themselves, as ambient vectors.
    pub fn components(&self, x: &Vector) -> Result<(Vector, Vector)> {
        let (a, b) = self.split(x)?;
        Ok((self.first.combine(&a)?, self.second.combine(&b)?))
    }
}

/// A linear map between two subspaces of the same ambient space, stored as a
/// `dim(codomain) x dim(domain)` matrix in reference coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubspaceMap {
    domain: Subspace,
    codomain: Subspace,
    matrix: Matrix,
}

impl SubspaceMap {
    pub fn new(domain: &Subspace, codomain: &Subspace, matrix: Matrix) -> Result<Self> {
        domain.check_same_ambient(codomain)?;
        if matrix.field() != domain.field() {
            return Err(Error::FieldMismatch);
        }
        if matrix.rows() != codomain.dim() || matrix.cols() != domain.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix for a map from dimension {} to dimension {}",
                matrix.rows(),
                matrix.cols(),
                domain.dim(),
                codomain.dim()
            )));
        }
        Ok(SubspaceMap {
            domain: domain.clone(),
            codomain: codomain.clone(),
            matrix,
        })
    }

    pub fn identity(v: &Subspace) -> Self {
        SubspaceMap {
            domain: v.clone(),
            codomain: v.clone(),
            matrix: Matrix::identity(&v.field, v.dim()),
        }
    }

    pub fn zero(domain: &Subspace, codomain: &Subspace) -> Self {
        SubspaceMap {
            domain: domain.clone(),
            codomain: codomain.clone(),
            matrix: Matrix::zero(&domain.field, codomain.dim(), domain.dim()),
        }
    }

    /// The map whose value on the `i`-th reference basis vector of `domain`
    /// is `images[i]`, an ambient vector lying in `codomain`.
    pub fn from_images(domain: &Subspace, codomain: &Subspace, images: &[Vector]) -> Result<Self> {
        if images.len() != domain.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} images for a {}-dimensional domain",
                images.len(),
                domain.dim()
            )));
        }
        let cols = images
            .iter()
            .map(|y| codomain.coords(y))
            .collect::<Result<Vec<_>>>()?;
        let matrix = Matrix::from_columns(&domain.field, codomain.dim(), &cols)?;
        SubspaceMap::new(domain, codomain, matrix)
    }

    pub fn domain(&self) -> &Subspace {
        &self.domain
    }

    pub fn codomain(&self) -> &Subspace {
        &self.codomain
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// Applies the map to an ambient vector lying in the domain.
    pub fn apply(&self, x: &Vector) -> Result<Vector> {
        let c = self.domain.coords(x)?;
        self.codomain.combine(&self.matrix.apply(&c)?)
    }

    /// Images of the domain's reference basis.
    pub fn images(&self) -> Vec<Vector> {
        self.matrix
            .columns()
            .iter()
            .map(|c| {
                self.codomain
                    .combine(c)
                    .expect("column length is dim(codomain)")
            })
            .collect()
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &SubspaceMap) -> Result<SubspaceMap> {
        if inner.codomain != self.domain {
            return Err(Error::DimensionMismatch(
                "composition of non-matching maps".into(),
            ));
        }
        SubspaceMap::new(
            &inner.domain,
            &self.codomain,
            self.matrix.mat_mul(&inner.matrix)?,
        )
    }

    pub fn inverse(&self) -> Result<SubspaceMap> {
        let inv = self.matrix.inverse()?;
        SubspaceMap::new(&self.codomain, &self.domain, inv)
    }

    pub fn is_endomorphism(&self) -> bool {
        self.domain == self.codomain
    }

    pub fn is_invertible(&self) -> bool {
        self.matrix.is_invertible().unwrap_or(false)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.is_endomorphism() && self.matrix.is_nilpotent().unwrap_or(false)
    }
}

/// An ordered basis of a subspace.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrderedBasis {
    subspace: Subspace,
    vectors: Vec<Vector>,
}

impl OrderedBasis {
    pub fn new(subspace: &Subspace, vectors: Vec<Vector>) -> Result<Self> {
        if vectors.len() != subspace.dim() {
            return Err(Error::NotABasis);
        }
        for x in &vectors {
            if !subspace.contains(x)? {
                return Err(Error::NotABasis);
            }
        }
        if Subspace::span(&subspace.field, subspace.ambient, &vectors)?.dim() != vectors.len() {
            return Err(Error::NotABasis);
        }
        Ok(OrderedBasis {
            subspace: subspace.clone(),
            vectors,
        })
    }

    /// The subspace spanned by `vectors`, with `vectors` as its ordered basis.
    pub fn spanning(field: &Field, ambient: usize, vectors: Vec<Vector>) -> Result<Self> {
        let s = Subspace::span(field, ambient, &vectors)?;
        OrderedBasis::new(&s, vectors)
    }

    pub fn reference(subspace: &Subspace) -> Self {
        OrderedBasis {
            subspace: subspace.clone(),
            vectors: subspace.basis.clone(),
        }
    }

    pub fn subspace(&self) -> &Subspace {
        &self.subspace
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }
}

/// The isomorphism `i: U -> W` between two complements of `V` with
/// `i(u) - u ∈ V`.
pub fn canonical_iso(v: &Subspace, u: &Subspace, w: &Subspace) -> Result<SubspaceMap> {
    if !u.is_complement_of(v)? {
        return Err(Error::NotComplement);
    }
    // u = (component in V) + (component in W); the W part is i(u).
    let vw = DirectSum::new(v, w)?;
    let cols = u
        .basis
        .iter()
        .map(|x| vw.split(x).map(|(_, in_w)| in_w))
        .collect::<Result<Vec<_>>>()?;
    let matrix = Matrix::from_columns(&u.field, w.dim(), &cols)?;
    SubspaceMap::new(u, w, matrix)
}

/// The graph `{u + f(u) : u ∈ U}` of `f: U -> V`, a complement of `V`.
pub fn map_to_complement(f: &SubspaceMap) -> Result<Subspace> {
    let (u, v) = (f.domain(), f.codomain());
    if !u.is_complement_of(v)? {
        return Err(Error::NotComplement);
    }
    let graph = u
        .basis
        .iter()
        .zip(f.images())
        .map(|(x, fx)| x.add(&fx))
        .collect::<Result<Vec<_>>>()?;
    Subspace::span(&u.field, u.ambient, &graph)
}

/// The map `f: U -> V` whose graph is the complement `W` of `V`:
/// `f(u) = i(u) - u` with `i` the canonical isomorphism `U -> W`.
pub fn complement_to_map(w: &Subspace, v: &Subspace, u: &Subspace) -> Result<SubspaceMap> {
    if !w.is_complement_of(v)? {
        return Err(Error::NotComplement);
    }
    let i = canonical_iso(v, u, w)?;
    let images = u
        .basis
        .iter()
        .zip(i.images())
        .map(|(x, ix)| ix.sub(x))
        .collect::<Result<Vec<_>>>()?;
    SubspaceMap::from_images(u, v, &images)
}

/// Blocks of an operator `T` on `V ⊕ U` with `TV ⊆ V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// `T` restricted to `V`.
    pub t_vv: SubspaceMap,
    /// `V`-component of `T` on `U`.
    pub t_uv: SubspaceMap,
    /// `U`-component of `T` on `U`.
    pub t_uu: SubspaceMap,
}

impl BlockDecomposition {
    /// The operator on the ambient space described by the three blocks.
    pub fn reassemble(&self) -> Result<Matrix> {
        let v = self.t_vv.domain();
        let u = self.t_uu.domain();
        let basis: Vec<Vector> = v.basis.iter().chain(&u.basis).cloned().collect();
        let mut images = self.t_vv.images();
        for (a, b) in self.t_uv.images().into_iter().zip(self.t_uu.images()) {
            images.push(a.add(&b)?);
        }
        Matrix::from_basis_images(&v.field, &basis, &images)
    }
}

pub fn block_decompose(t: &Matrix, v: &Subspace, u: &Subspace) -> Result<BlockDecomposition> {
    if t.field() != v.field() {
        return Err(Error::FieldMismatch);
    }
    if t.rows() != v.ambient || t.cols() != v.ambient {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} operator on F^{}",
            t.rows(),
            t.cols(),
            v.ambient
        )));
    }
    let sum = DirectSum::new(v, u)?;
    let tv = v
        .basis
        .iter()
        .map(|x| t.apply(x))
        .collect::<Result<Vec<_>>>()?;
    let t_vv = SubspaceMap::from_images(v, v, &tv).map_err(|e| match e {
        Error::NotInSubspace => Error::NotInvariant,
        other => other,
    })?;
    let mut uv_cols = Vec::with_capacity(u.dim());
    let mut uu_cols = Vec::with_capacity(u.dim());
    for x in &u.basis {
        let (a, b) = sum.split(&t.apply(x)?)?;
        uv_cols.push(a);
        uu_cols.push(b);
    }
    let f = &v.field;
    let t_uv = SubspaceMap::new(u, v, Matrix::from_columns(f, v.dim(), &uv_cols)?)?;
    let t_uu = SubspaceMap::new(u, u, Matrix::from_columns(f, u.dim(), &uu_cols)?)?;
    Ok(BlockDecomposition { t_vv, t_uv, t_uu })
}

/// The automorphism of `V` sending the reference basis to `b`, in order.
pub fn basis_to_automorphism(b: &OrderedBasis) -> SubspaceMap {
    SubspaceMap::from_images(&b.subspace, &b.subspace, &b.vectors)
        .expect("ordered basis vectors lie in their subspace")
}

/// The ordered basis `(R(r_1), ..., R(r_m))` for the reference basis `r`.
pub fn automorphism_to_basis(r: &SubspaceMap) -> Result<OrderedBasis> {
    if !r.is_endomorphism() || !r.is_invertible() {
        return Err(Error::NotAutomorphism);
    }
    Ok(OrderedBasis {
        subspace: r.domain.clone(),
        vectors: r.images(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf2() -> Field {
        Field::prime(2).unwrap()
    }

    fn vec(f: &Field, codes: &[u32]) -> Vector {
        Vector::from_codes(f, codes).unwrap()
    }

    fn span(f: &Field, n: usize, vs: &[&[u32]]) -> Subspace {
        let vs: Vec<Vector> = vs.iter().map(|c| vec(f, c)).collect();
        Subspace::span(f, n, &vs).unwrap()
    }

    #[test]
    fn span_and_coords() {
        let f = gf2();
        let z = Subspace::span(&f, 2, &[]).unwrap();
        assert_eq!(z, Subspace::zero(&f, 2));
        let v = span(&f, 2, &[&[1, 1]]);
        assert!(v.contains(&vec(&f, &[1, 1])).unwrap());
        assert!(!v.contains(&vec(&f, &[1, 0])).unwrap());
        assert_eq!(v.coords(&vec(&f, &[1, 1])).unwrap().codes(), vec![1]);
        assert_eq!(v.coords(&vec(&f, &[0, 1])), Err(Error::NotInSubspace));
    }

    #[test]
    fn span_is_canonical() {
        let f = Field::prime(3).unwrap();
        let a = span(&f, 3, &[&[1, 2, 0], &[2, 1, 1]]);
        let b = span(&f, 3, &[&[0, 0, 1], &[2, 1, 0], &[1, 2, 2]]);
        assert_eq!(a, b);
        assert_eq!(a.pivots(), &[0, 2]);
    }

    #[test]
    fn subspace_loader_flags_non_rref_rows() {
        let f = gf2();
        let rows = vec![vec(&f, &[1, 0, 1]), vec(&f, &[0, 1, 0])];
        let (s, flagged) = Subspace::from_basis_rows(&f, 3, &rows).unwrap();
        assert!(!flagged);
        assert_eq!(s.basis(), rows.as_slice());
        let rows = vec![vec(&f, &[1, 1, 1]), vec(&f, &[0, 1, 0])];
        let (s, flagged) = Subspace::from_basis_rows(&f, 3, &rows).unwrap();
        assert!(flagged);
        assert_eq!(s.basis()[0].codes(), vec![1, 0, 1]);
        assert_eq!(
            Subspace::from_rref_rows(&f, 3, &rows),
            Err(Error::NonCanonical)
        );
    }

    #[test]
    fn steinitz_examples() {
        let f = gf2();
        assert_eq!(
            Subspace::full(&f, 3).steinitz_complement(),
            Subspace::zero(&f, 3)
        );
        assert_eq!(
            Subspace::zero(&f, 3).steinitz_complement(),
            Subspace::full(&f, 3)
        );
        let v = span(&f, 2, &[&[1, 1]]);
        assert_eq!(steinitz_complement(&v), span(&f, 2, &[&[0, 1]]));
    }

    #[test]
    fn canonical_iso_examples() {
        let f = gf2();
        let v = span(&f, 2, &[&[1, 0]]);
        let u = span(&f, 2, &[&[0, 1]]);
        let w = span(&f, 2, &[&[1, 1]]);
        let i = canonical_iso(&v, &u, &w).unwrap();
        assert_eq!(i.apply(&vec(&f, &[0, 1])).unwrap().codes(), vec![1, 1]);
        assert_eq!(
            canonical_iso(&v, &u, &u).unwrap(),
            SubspaceMap::identity(&u)
        );
        let back = canonical_iso(&v, &w, &u).unwrap();
        assert_eq!(back.compose(&i).unwrap(), SubspaceMap::identity(&u));
        assert_eq!(canonical_iso(&v, &v, &w), Err(Error::NotComplement));
        assert_eq!(canonical_iso(&v, &u, &v), Err(Error::NotComplement));
    }

    #[test]
    fn graph_examples() {
        let f = gf2();
        let u = span(&f, 2, &[&[0, 1]]);
        let v = span(&f, 2, &[&[1, 0]]);
        assert_eq!(map_to_complement(&SubspaceMap::zero(&u, &v)).unwrap(), u);
        let g = SubspaceMap::from_images(&u, &v, &[vec(&f, &[1, 0])]).unwrap();
        let w = map_to_complement(&g).unwrap();
        assert_eq!(w, span(&f, 2, &[&[1, 1]]));
        assert_eq!(complement_to_map(&w, &v, &u).unwrap(), g);
        assert_eq!(complement_to_map(&v, &v, &u), Err(Error::NotComplement));
        let bad = SubspaceMap::zero(&v, &v);
        assert_eq!(map_to_complement(&bad), Err(Error::NotComplement));
    }

    #[test]
    fn block_examples() {
        let f = gf2();
        let v = span(&f, 2, &[&[1, 0]]);
        let u = span(&f, 2, &[&[0, 1]]);

        let id = block_decompose(&Matrix::identity(&f, 2), &v, &u).unwrap();
        assert_eq!(id.t_vv, SubspaceMap::identity(&v));
        assert_eq!(id.t_uv, SubspaceMap::zero(&u, &v));
        assert_eq!(id.t_uu, SubspaceMap::identity(&u));

        let z = block_decompose(&Matrix::zero(&f, 2, 2), &v, &u).unwrap();
        assert!(
            z.t_vv.matrix().is_zero() && z.t_uv.matrix().is_zero() && z.t_uu.matrix().is_zero()
        );

        let t = Matrix::square(&f, &[vec![0, 1], vec![0, 0]]).unwrap();
        let b = block_decompose(&t, &v, &u).unwrap();
        assert!(b.t_vv.matrix().is_zero());
        assert_eq!(b.t_uv.matrix().row_codes(), vec![vec![1]]);
        assert!(b.t_uu.matrix().is_zero());
        assert_eq!(b.reassemble().unwrap(), t);

        // e_1 -> e_2 leaves span{e_1}
        let t = Matrix::square(&f, &[vec![0, 0], vec![1, 0]]).unwrap();
        assert_eq!(block_decompose(&t, &v, &u), Err(Error::NotInvariant));
        assert_eq!(block_decompose(&t, &v, &v), Err(Error::NotComplement));
    }

    #[test]
    fn torsor_examples() {
        let f = gf2();
        let x = Subspace::full(&f, 2);
        let r = basis_to_automorphism(&OrderedBasis::reference(&x));
        assert_eq!(r, SubspaceMap::identity(&x));

        let b = OrderedBasis::new(&x, vec![vec(&f, &[0, 1]), vec(&f, &[1, 0])]).unwrap();
        let r = basis_to_automorphism(&b);
        assert_eq!(r.matrix().row_codes(), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(automorphism_to_basis(&r).unwrap(), b);

        let singular = SubspaceMap::zero(&x, &x);
        assert_eq!(
            automorphism_to_basis(&singular),
            Err(Error::NotAutomorphism)
        );
        assert_eq!(
            OrderedBasis::new(&x, vec![vec(&f, &[1, 1]), vec(&f, &[1, 1])]),
            Err(Error::NotABasis)
        );
    }

    #[test]
    fn zero_dimensional_cases() {
        let f = gf2();
        let z = Subspace::zero(&f, 0);
        assert_eq!(z.steinitz_complement(), z);
        assert!(z.is_complement_of(&z).unwrap());
        let i = canonical_iso(&z, &z, &z).unwrap();
        assert_eq!(i.matrix().rows(), 0);
        let r = basis_to_automorphism(&OrderedBasis::reference(&z));
        assert_eq!(automorphism_to_basis(&r).unwrap().vectors().len(), 0);
    }
}
