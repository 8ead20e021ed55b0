//! Exhaustive lemma-level checks shared by the `lemmas` and `acceptance`
//! test targets. Each returns the number of cases checked, or a description
//! of the first failure. Oracles here work by brute-force enumeration of
//! vectors and matrices, not through the library's own constructions.

#![allow(dead_code)]

use std::collections::BTreeMap;

use nilbij::field::Field;
use nilbij::fitting::{assemble_pair, fitting_decompose, image_chain, kernel_chain};
use nilbij::linalg::{Matrix, Vector};
use nilbij::subspaces::{
    automorphism_to_basis, basis_to_automorphism, canonical_iso, complement_to_map,
    map_to_complement, OrderedBasis, Subspace, SubspaceMap,
};

pub type Check = Result<u64, String>;

pub fn gf(q: u32) -> Field {
    Field::with_order(q).unwrap()
}

pub fn all_vectors(f: &Field, n: usize) -> Vec<Vector> {
    let total = u64::from(f.order()).pow(n as u32);
    (0..total).map(|i| Vector::from_index(f, n, i)).collect()
}

pub fn all_matrices(f: &Field, rows: usize, cols: usize) -> Vec<Matrix> {
    let total = u64::from(f.order()).pow((rows * cols) as u32);
    (0..total)
        .map(|i| Matrix::from_index(f, rows, cols, i))
        .collect()
}

/// Every subspace of `F^n`, as the row spaces of all `n x n` matrices.
pub fn all_subspaces(f: &Field, n: usize) -> Vec<Subspace> {
    let mut seen = BTreeMap::new();
    for m in all_matrices(f, n, n) {
        let rows: Vec<Vector> = (0..n).map(|i| m.row(i)).collect();
        let s = Subspace::span(f, n, &rows).unwrap();
        let key: Vec<Vec<u32>> = s.basis().iter().map(Vector::codes).collect();
        seen.entry(key).or_insert(s);
    }
    seen.into_values().collect()
}

/// Membership by enumerating all linear combinations of the basis.
fn elements(s: &Subspace) -> Vec<Vector> {
    let f = s.field();
    all_vectors(f, s.dim())
        .into_iter()
        .map(|c| {
            let mut x = Vector::zero(f, s.ambient_dim());
            for (b, &e) in s.basis().iter().zip(c.entries()) {
                x = x.add(&b.scale(e)).unwrap();
            }
            x
        })
        .collect()
}

fn brute_complements(a: &Subspace, b: &Subspace) -> bool {
    let ea = elements(a);
    let eb = elements(b);
    let meet = ea.iter().filter(|x| eb.contains(x)).count();
    let mut sums: Vec<Vec<u32>> = ea
        .iter()
        .flat_map(|x| eb.iter().map(move |y| x.add(y).unwrap().codes()))
        .collect();
    sums.sort();
    sums.dedup();
    let everything = u64::from(a.field().order()).pow(a.ambient_dim() as u32);
    meet == 1 && sums.len() as u64 == everything
}

pub fn steinitz_complement_axioms() -> Check {
    let mut cases = 0;
    for (q, n) in [(2, 3), (3, 2)] {
        let f = gf(q);
        for v in all_subspaces(&f, n) {
            let c = v.steinitz_complement();
            if v.dim() + c.dim() != n || !brute_complements(&v, &c) {
                return Err(format!("GF({q})^{n}: {c:?} is not a complement of {v:?}"));
            }
            cases += 1;
        }
    }
    Ok(cases)
}

pub fn graph_complement_roundtrips() -> Check {
    let f = gf(2);
    let n = 3;
    let subspaces = all_subspaces(&f, n);
    let mut cases = 0;
    for v in &subspaces {
        let u = v.steinitz_complement();
        let maps = all_matrices(&f, v.dim(), u.dim());
        for m in &maps {
            let g = SubspaceMap::new(&u, v, m.clone()).unwrap();
            let w = map_to_complement(&g).map_err(|e| e.to_string())?;
            if !brute_complements(&w, v) {
                return Err(format!("graph of {g:?} is not a complement"));
            }
            if complement_to_map(&w, v, &u).map_err(|e| e.to_string())? != g {
                return Err(format!("map -> complement -> map changed {g:?}"));
            }
            cases += 1;
        }
        let complements: Vec<&Subspace> = subspaces
            .iter()
            .filter(|w| w.dim() == u.dim() && brute_complements(w, v))
            .collect();
        if complements.len() != maps.len() {
            return Err(format!(
                "{v:?} has {} complements but {} maps U -> V",
                complements.len(),
                maps.len()
            ));
        }
        for w in complements {
            let g = complement_to_map(w, v, &u).map_err(|e| e.to_string())?;
            if &map_to_complement(&g).map_err(|e| e.to_string())? != w {
                return Err(format!("complement -> map -> complement changed {w:?}"));
            }
            cases += 1;
        }
    }
    Ok(cases)
}

pub fn canonical_iso_cocycle() -> Check {
    let f = gf(2);
    let n = 3;
    let subspaces = all_subspaces(&f, n);
    let mut cases = 0;
    for v in &subspaces {
        let comps: Vec<&Subspace> = subspaces
            .iter()
            .filter(|w| brute_complements(w, v))
            .collect();
        for u in &comps {
            if canonical_iso(v, u, u).unwrap() != SubspaceMap::identity(u) {
                return Err(format!(
                    "canonical_iso(V, U, U) is not the identity for {u:?}"
                ));
            }
            for w in &comps {
                let i = canonical_iso(v, u, w).unwrap();
                for x in elements(u) {
                    let ix = i.apply(&x).unwrap();
                    if !w.contains(&ix).unwrap() || !v.contains(&ix.sub(&x).unwrap()).unwrap() {
                        return Err(format!("i({x:?}) = {ix:?} violates i(u) - u in V"));
                    }
                }
                for x2 in &comps {
                    let lhs = canonical_iso(v, w, x2).unwrap().compose(&i).unwrap();
                    if lhs != canonical_iso(v, u, x2).unwrap() {
                        return Err(format!("cocycle fails for V={v:?} U={u:?} W={w:?}"));
                    }
                    cases += 1;
                }
            }
        }
    }
    Ok(cases)
}

pub fn fitting_roundtrips() -> Check {
    let f = gf(2);
    let mut cases = 0;
    for n in [2, 3] {
        for q in all_matrices(&f, n, n) {
            let fp = fitting_decompose(&q).map_err(|e| e.to_string())?;
            if fp.v.dim() + fp.w.dim() != n || !brute_complements(&fp.v, &fp.w) {
                return Err(format!("bad Fitting split of {q:?}"));
            }
            if assemble_pair(&fp).map_err(|e| e.to_string())? != q {
                return Err(format!("assemble(decompose({q:?})) differs"));
            }
            if fitting_decompose(&assemble_pair(&fp).unwrap()).unwrap() != fp {
                return Err(format!("decompose(assemble(..)) differs for {q:?}"));
            }
            let ker = kernel_chain(&q, n + 1).unwrap();
            let img = image_chain(&q, n + 1).unwrap();
            if ker[n] != ker[n + 1] || img[n] != img[n + 1] {
                return Err(format!("chains of {q:?} not stable at n"));
            }
            if q.is_nilpotent().unwrap() != (fp.v.dim() == 0) {
                return Err(format!(
                    "nilpotency of {q:?} disagrees with its Fitting split"
                ));
            }
            cases += 1;
        }
    }
    Ok(cases)
}

fn ordered_bases(s: &Subspace) -> Vec<Vec<Vector>> {
    let els = elements(s);
    let mut out: Vec<Vec<Vector>> = vec![vec![]];
    for _ in 0..s.dim() {
        let mut next = Vec::new();
        for partial in &out {
            for x in &els {
                let mut cand = partial.clone();
                cand.push(x.clone());
                let span = Subspace::span(s.field(), s.ambient_dim(), &cand).unwrap();
                if span.dim() == cand.len() {
                    next.push(cand);
                }
            }
        }
        out = next;
    }
    out
}

pub fn torsor_free_and_transitive() -> Check {
    let mut cases = 0;
    for (q, n) in [(2, 2), (2, 3), (3, 2)] {
        let f = gf(q);
        for v in all_subspaces(&f, n).into_iter().filter(|v| v.dim() <= 2) {
            let m = v.dim();
            let autos: Vec<SubspaceMap> = all_matrices(&f, m, m)
                .into_iter()
                .filter(|a| a.is_invertible().unwrap())
                .map(|a| SubspaceMap::new(&v, &v, a).unwrap())
                .collect();
            let bases = ordered_bases(&v);
            if bases.len() != autos.len() {
                return Err(format!(
                    "{v:?}: {} bases vs {} automorphisms",
                    bases.len(),
                    autos.len()
                ));
            }
            for b in &bases {
                let ob = OrderedBasis::new(&v, b.clone()).unwrap();
                let r = basis_to_automorphism(&ob);
                if automorphism_to_basis(&r).unwrap() != ob {
                    return Err(format!("torsor round trip fails for {b:?}"));
                }
                for b2 in &bases {
                    let movers = autos
                        .iter()
                        .filter(|g| b.iter().zip(b2).all(|(x, y)| g.apply(x).unwrap() == *y))
                        .count();
                    if movers != 1 {
                        return Err(format!("{movers} automorphisms move {b:?} to {b2:?}"));
                    }
                    cases += 1;
                }
            }
        }
    }
    Ok(cases)
}
