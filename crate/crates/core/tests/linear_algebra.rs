use arsubcat::exactlin::{Matrix, PrimeField};
use proptest::prelude::*;

fn matrix(p: u64) -> impl Strategy<Value = Matrix> {
    (0usize..5, 0usize..5).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(0u32..p as u32, r * c).prop_map(move |data| {
            let f = PrimeField::new(p).unwrap();
            Matrix::from_fn(f, r, c, |i, j| data[i * c + j])
        })
    })
}

proptest! {
    #[test]
    fn rank_nullity(m in matrix(5)) {
        let k = m.kernel_basis();
        prop_assert_eq!(m.rank() + k.cols(), m.cols());
        prop_assert!(m.mul(&k).unwrap().is_zero());
    }

    #[test]
    fn rref_is_idempotent(m in matrix(7)) {
        let (r, _) = m.rref();
        prop_assert_eq!(r.rref().0, r);
    }

    #[test]
    fn solve_is_exact(m in matrix(5), seed in 0u64..1000) {
        let f = m.field();
        let x: Vec<u32> = (0..m.cols()).map(|i| ((seed + i as u64 * 7) % 5) as u32).collect();
        let b = m.mul(&Matrix::column_vector(f, &x)).unwrap();
        let sol = m.solve(&b).unwrap().expect("b lies in the column space");
        prop_assert_eq!(m.mul(&sol).unwrap(), b);
    }

    #[test]
    fn cokernel_kills_image(m in matrix(3)) {
        let c = m.cokernel_projection();
        prop_assert!(c.mul(&m).unwrap().is_zero());
        prop_assert_eq!(c.rows() + m.rank(), m.rows());
    }
}

#[test]
fn worked_examples() {
    let f = PrimeField::new(5).unwrap();
    let m = Matrix::from_rows(f, &[vec![2, 4], vec![1, 2]]).unwrap();
    let (r, piv) = m.rref();
    assert_eq!(r, Matrix::from_rows(f, &[vec![1, 2], vec![0, 0]]).unwrap());
    assert_eq!(piv, vec![0]);
    let k = Matrix::from_rows(f, &[vec![1, 2]]).unwrap().kernel_basis();
    assert_eq!(k.cols(), 1);
    // a multiple of (3, 1)
    assert_ne!(k.get(1, 0), 0);
    assert_eq!(k.get(0, 0), f.mul(3, k.get(1, 0)));
    let nil = Matrix::from_rows(f, &[vec![0, 1], vec![0, 0]]).unwrap();
    assert_eq!(nil.minimal_polynomial().unwrap().degree(), Some(2));
    assert!(PrimeField::new(4).is_err());
}
