//! Randomized checks of the bijection at sizes too large to enumerate.

use nilbij::bijection::{degree, forward, inverse};
use nilbij::field::{Elem, Field};
use nilbij::fitting::fitting_decompose;
use nilbij::linalg::{Matrix, Vector};
use proptest::prelude::*;

fn field_and_dim() -> impl Strategy<Value = (Field, usize)> {
    (
        prop::sample::select(vec![2u32, 3, 4, 5, 7, 8, 9, 25]),
        1usize..=5,
    )
        .prop_map(|(q, n)| (Field::with_order(q).unwrap(), n))
}

fn matrix(f: &Field, n: usize, codes: &[u32]) -> Matrix {
    let q = f.order();
    let data = codes
        .iter()
        .take(n * n)
        .map(|&c| Elem::from_code(c % q))
        .collect();
    Matrix::new(f, n, n, data).unwrap()
}

fn vector(f: &Field, n: usize, codes: &[u32]) -> Vector {
    let q = f.order();
    Vector::new(
        f,
        codes
            .iter()
            .take(n)
            .map(|&c| Elem::from_code(c % q))
            .collect(),
    )
}

/// `P N P^{-1}` with `N` strictly lower triangular, if `P` is invertible.
fn conjugated_nilpotent(f: &Field, n: usize, p: &[u32], lower: &[u32]) -> Option<Matrix> {
    let p = matrix(f, n, p);
    let mut nil = matrix(f, n, lower);
    for i in 0..n {
        for j in i..n {
            nil.set(i, j, Elem::ZERO);
        }
    }
    let p_inv = p.inverse().ok()?;
    Some(p.mat_mul(&nil).unwrap().mat_mul(&p_inv).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn inverse_then_forward(
        (f, n) in field_and_dim(),
        codes in prop::collection::vec(any::<u32>(), 25),
    ) {
        let q = matrix(&f, n, &codes);
        let (t, v) = inverse(&q).unwrap();
        prop_assert!(t.is_nilpotent().unwrap());
        prop_assert_eq!(forward(&t, &v).unwrap(), q.clone());
        prop_assert_eq!(degree(&t, &v).unwrap(), fitting_decompose(&q).unwrap().v.dim());
    }

    #[test]
    fn forward_then_inverse(
        (f, n) in field_and_dim(),
        p in prop::collection::vec(any::<u32>(), 25),
        lower in prop::collection::vec(any::<u32>(), 25),
        v in prop::collection::vec(any::<u32>(), 5),
    ) {
        if let Some(t) = conjugated_nilpotent(&f, n, &p, &lower) {
            let v = vector(&f, n, &v);
            let q = forward(&t, &v).unwrap();
            prop_assert_eq!(inverse(&q).unwrap(), (t.clone(), v.clone()));
            prop_assert_eq!(fitting_decompose(&q).unwrap().v.dim(), degree(&t, &v).unwrap());
        }
    }
}
