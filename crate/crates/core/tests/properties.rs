mod common;

use lamd::cli::{parse_algebra_str, AlgebraDocument};
use lamd::grid::{order_key, IntegerGrid};
use lamd::kirillov::{generic_orbit_dim, kirillov_symbolic, orbit_dim};
use lamd::lie::{DualFunctional, LieAlgebra};
use lamd::linalg::{
    det_bareiss, inverse, rank, rank_kernel_image, rat, rref, Matrix, Rational, Subspace,
};
use lamd::poly::{
    generic_rank, groebner, normal_form, pfaffian, poly_det, psd_split, rational_roots,
    sturm_real_roots, GroebnerBudget, MultiPoly, PolyIdeal, PolyMatrix,
};
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::SeedableRng;

/// Cofactor expansion along the first row.
fn cofactor_det(m: &Matrix) -> Rational {
    let n = m.rows();
    if n == 0 {
        return Rational::one();
    }
    (0..n)
        .map(|j| {
            let minor_rows: Vec<Vec<Rational>> = (1..n)
                .map(|i| {
                    (0..n)
                        .filter(|&c| c != j)
                        .map(|c| m[(i, c)].clone())
                        .collect()
                })
                .collect();
            let minor = Matrix::from_rows(n - 1, minor_rows);
            let term = &m[(0, j)] * cofactor_det(&minor);
            if j % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-4i64..=4, rows * cols)
        .prop_map(move |v| Matrix::from_vec(rows, cols, v.into_iter().map(rat).collect()))
}

fn square() -> impl Strategy<Value = Matrix> {
    (1usize..=5).prop_flat_map(|n| matrix(n, n))
}

fn poly(nvars: usize) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0u32..=2, nvars), -3i64..=3), 0..5).prop_map(
        move |terms| {
            MultiPoly::from_terms(
                nvars,
                terms
                    .into_iter()
                    .map(|(e, c)| (lamd::poly::Monomial::new(e), rat(c))),
            )
        },
    )
}

fn semidirect(seed: u64) -> LieAlgebra {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let r = 1 + (seed % 2) as usize;
    let m = 1 + (seed % 3) as usize;
    let rho = common::commuting_family(&mut rng, m, r);
    LieAlgebra::semidirect_sum(r, m, &rho).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bareiss_matches_cofactor_expansion(m in square()) {
        prop_assert_eq!(det_bareiss(&m), cofactor_det(&m));
    }

    #[test]
    fn poly_det_matches_on_constants(m in square()) {
        let p = poly_det(&PolyMatrix::from_matrix(&m, 0)).unwrap();
        prop_assert_eq!(p.evaluate(&[]), det_bareiss(&m));
    }

    #[test]
    fn rank_nullity(m in (1usize..=4, 1usize..=5).prop_flat_map(|(r, c)| matrix(r, c))) {
        let (r, kernel, image) = rank_kernel_image(&m);
        prop_assert_eq!(r + kernel.dim(), m.cols());
        prop_assert_eq!(image.dim(), r);
        prop_assert_eq!(rank(&m.transpose()), r);
        for v in kernel.basis_vectors() {
            prop_assert!(m.mul_vec(&v).iter().all(Zero::is_zero));
        }
        let (once, _) = rref(&m);
        prop_assert_eq!(rref(&once).0, once);
    }

    #[test]
    fn inverse_is_two_sided(m in square()) {
        match inverse(&m) {
            Ok(inv) => {
                let id = Matrix::identity(m.rows());
                prop_assert_eq!(&m * &inv, id.clone());
                prop_assert_eq!(&inv * &m, id);
            }
            Err(_) => prop_assert!(det_bareiss(&m).is_zero()),
        }
    }

    #[test]
    fn subspace_dimension_formula(a in matrix(3, 5), b in matrix(2, 5)) {
        let u = Subspace::span(5, &a.row_vectors());
        let w = Subspace::span(5, &b.row_vectors());
        let sum = u.sum(&w).unwrap();
        let cap = u.intersect(&w).unwrap();
        prop_assert_eq!(sum.dim() + cap.dim(), u.dim() + w.dim());
        prop_assert_eq!(u.annihilator().dim() + u.dim(), 5);
        prop_assert!(sum.contains(&u).unwrap() && u.contains(&cap).unwrap());
    }

    #[test]
    fn polynomial_ring_laws(p in poly(2), q in poly(2), x in -3i64..=3, y in -3i64..=3) {
        let pt = [rat(x), rat(y)];
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!((&p * &q).evaluate(&pt), p.evaluate(&pt) * q.evaluate(&pt));
        prop_assert_eq!(&(&p + &q) * &(&p - &q), &(&p * &p) - &(&q * &q));
    }

    #[test]
    fn groebner_basis_reduces_generators(f in poly(2), g in poly(2)) {
        let combo = &(&MultiPoly::var(2, 0) * &f) - &g;
        let ideal = PolyIdeal::new(2, [f.clone(), g.clone()]);
        if let Ok(gb) = groebner(&ideal, &GroebnerBudget::default()) {
            for h in [f, g, combo] {
                prop_assert!(normal_form(&h, gb.generators()).is_zero());
            }
        }
    }

    #[test]
    fn psd_split_reconstructs(c in prop::collection::vec(-3i64..=3, 6)) {
        // quadratic form in three variables from its upper-triangular coefficients
        let v = |i| MultiPoly::var(3, i);
        let mut q = MultiPoly::zero(3);
        let mut idx = 0;
        for i in 0..3 {
            for j in i..3 {
                q = &q + &(&v(i) * &v(j)).scale(&rat(c[idx]));
                idx += 1;
            }
        }
        if !q.is_zero() {
            if let Some(s) = psd_split(&q).unwrap() {
                prop_assert_eq!(s.reconstruct(), q);
            }
        }
    }

    #[test]
    fn sturm_counts_distinct_rational_roots(roots in prop::collection::btree_set(-6i64..=6, 1..5)) {
        let t = MultiPoly::var(1, 0);
        let p = roots
            .iter()
            .fold(MultiPoly::one(1), |acc, &r| &acc * &(&t - &MultiPoly::constant(1, rat(r))));
        prop_assert_eq!(sturm_real_roots(&p).unwrap(), roots.len());
        let found = rational_roots(&p).unwrap();
        prop_assert_eq!(found, roots.iter().map(|&r| rat(r)).collect::<Vec<_>>());
        // t² + 1 times the product adds no real roots
        let lifted = &p * &(&(&t * &t) + &MultiPoly::one(1));
        prop_assert_eq!(sturm_real_roots(&lifted).unwrap(), roots.len());
    }

    #[test]
    fn pfaffian_squares_to_determinant(seed in any::<u64>(), half in 1usize..=3) {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let b = common::skew(&mut rng, 2 * half);
        let pf = pfaffian(&PolyMatrix::from_matrix(&b, 0)).unwrap().evaluate(&[]);
        prop_assert_eq!(&pf * &pf, det_bareiss(&b));
    }

    #[test]
    fn orbit_invariants_under_basis_change(seed in any::<u64>()) {
        let g = semidirect(seed);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let p = common::nonsingular(&mut rng, g.dim());
        let h = g.change_of_basis(&p).unwrap();
        prop_assert!(h.validate().is_ok());
        let k = generic_orbit_dim(&g).k;
        prop_assert_eq!(generic_orbit_dim(&h).k, k);
        prop_assert_eq!(h.derived(1).dim(), g.derived(1).dim());
        prop_assert_eq!(h.center().dim(), g.center().dim());
        for _ in 0..5 {
            let f = DualFunctional(common::vector(&mut rng, g.dim()));
            let d = orbit_dim(&g, &f);
            prop_assert!(d.is_multiple_of(2) && d <= k);
        }
    }

    #[test]
    fn reduced_rank_matches_full_symbolic_rank(seed in any::<u64>()) {
        let g = semidirect(seed);
        let full = generic_rank(kirillov_symbolic(&g).matrix());
        prop_assert_eq!(generic_orbit_dim(&g).k, full);
    }

    #[test]
    fn documents_round_trip(seed in any::<u64>()) {
        let g = semidirect(seed);
        let text = AlgebraDocument::from_algebra("g", &g).to_json();
        let (_, back) = parse_algebra_str(&text).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn grid_order_is_strict(dim in 1usize..=3, bound in 0u64..=2) {
        let keys: Vec<_> = IntegerGrid::bounded(dim, bound).map(|p| order_key(&p)).collect();
        prop_assert_eq!(keys.len() as u64, (2 * bound + 1).pow(dim as u32));
        prop_assert!(keys.windows(2).all(|w| w[0] < w[1]));
    }
}
