use proptest::prelude::*;

use trunctab_core::bijection::{pair_to_straight, shifted_to_tableau, straight_to_pair, tableau_to_shifted};
use trunctab_core::closed::{count_rect_minus_almost_square, count_rect_minus_staircase, f_straight};
use trunctab_core::exact::{binomial, limit_at_one, qbinom, Int, QPoly, QRationalFn, Rat};
use trunctab_core::oracle::{count_syt_oracle, Filling};
use trunctab_core::shape::{Partition, TruncatedShape};
use trunctab_core::symfunc::{rsk, rsk_inverse, schensted_stats, IntMatrix};

/// Turn arbitrary increments into a plane partition of `shape`: each entry is
/// its increment plus the larger of its right and lower neighbours.
fn plane_partition(shape: TruncatedShape, incs: &[u64]) -> Filling {
    let lens = shape.row_lens().to_vec();
    let starts: Vec<usize> = (0..lens.len()).map(|r| shape.row_start(r + 1)).collect();
    let mut rows: Vec<Vec<u64>> = lens.iter().map(|&l| vec![0; l]).collect();
    let mut it = incs.iter().cycle();
    for r in (0..rows.len()).rev() {
        for j in (0..lens[r]).rev() {
            let right = if j + 1 < lens[r] { rows[r][j + 1] } else { 0 };
            // same grid column in the next row
            let col = starts[r] + j;
            let below = (r + 1 < rows.len())
                .then(|| col.checked_sub(starts[r + 1]).and_then(|p| rows[r + 1].get(p).copied()))
                .flatten()
                .unwrap_or(0);
            rows[r][j] = it.next().copied().unwrap_or(0) + right.max(below);
        }
    }
    Filling::new(shape, rows).unwrap()
}

fn small_poly() -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-3i64..4, 0..5).prop_map(|c| QPoly::from_i64s(&c))
}

fn small_ratfn() -> impl Strategy<Value = QRationalFn> {
    (small_poly(), prop::collection::vec(1usize..5, 0..4))
        .prop_map(|(p, e)| QRationalFn::from_poly(p).mul(&QRationalFn::inverse_product(e)))
}

proptest! {
    #[test]
    fn expansion_is_multiplicative(f in small_ratfn(), g in small_ratfn()) {
        let order = 10;
        let lhs = f.mul(&g).expand(order).unwrap();
        let rhs = f.expand(order).unwrap().mul(&g.expand(order).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn expansion_is_additive(f in small_ratfn(), g in small_ratfn()) {
        let order = 10;
        let lhs = f.add(&g).expand(order).unwrap();
        let rhs = f.expand(order).unwrap().add(&g.expand(order).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gaussian_binomial_at_one(a in 0usize..12, b in 0usize..12) {
        prop_assert_eq!(qbinom(a, b as i64).eval_one(), binomial(a, b));
    }

    #[test]
    fn gaussian_binomial_is_palindromic(a in 0usize..10, b in 0usize..10) {
        prop_assume!(b <= a);
        let p = qbinom(a, b as i64);
        let mut c = p.coeffs().to_vec();
        c.reverse();
        prop_assert_eq!(c.as_slice(), p.coeffs());
    }

    #[test]
    fn limit_of_pure_product(exps in prop::collection::vec(1usize..7, 1..5)) {
        let f = QRationalFn::inverse_product(exps.iter().copied());
        let prod: usize = exps.iter().product();
        prop_assert_eq!(limit_at_one(&f, exps.len()).unwrap(), Rat::new(Int::from(1), Int::from(prod)));
    }

    #[test]
    fn staircase_bijection_roundtrip(n in 3usize..6, k in 0usize..3, incs in prop::collection::vec(0u64..3, 1..20)) {
        prop_assume!(k + 2 <= n);
        let shape = TruncatedShape::shifted_staircase(n, k).unwrap();
        let t = plane_partition(shape, &incs);
        let p = shifted_to_tableau(&t).unwrap();
        prop_assert!(p.is_reverse_semistandard());
        prop_assert_eq!(p.sum() + p.inner.size() as u64 * (n - k) as u64, t.sum());
        prop_assert_eq!(tableau_to_shifted(&p, n, k).unwrap(), t);
    }

    #[test]
    fn rectangle_bijection_roundtrip(
        n in 1usize..5, extra in 0usize..3, k in 0usize..4, incs in prop::collection::vec(0u64..3, 1..20),
    ) {
        prop_assume!(k < n);
        let m = n + extra;
        let shape = TruncatedShape::rect_minus_staircase(m, n, k).unwrap();
        let t = plane_partition(shape, &incs);
        let (p, q) = straight_to_pair(&t).unwrap();
        let weight = p.sum() as i64 + q.sum() as i64 - p.outer.size() as i64 + (p.inner.size() * (n - k)) as i64;
        prop_assert_eq!(weight, t.sum() as i64);
        prop_assert_eq!(pair_to_straight(&p, &q, n, m, k).unwrap(), t);
    }

    #[test]
    fn rsk_roundtrip(rows in 1usize..4, cols in 1usize..4, cells in prop::collection::vec(0u64..3, 9)) {
        let m: Vec<Vec<u64>> = (0..rows).map(|i| cells[i * 3..i * 3 + cols].to_vec()).collect();
        let a = IntMatrix::new(m).unwrap();
        let (p, q) = rsk(&a);
        prop_assert!(p.is_semistandard() && q.is_semistandard());
        prop_assert_eq!(p.shape(), q.shape());
        let shape = p.shape();
        prop_assert_eq!(schensted_stats(&a), (shape.get(0), shape.len()));
        prop_assert_eq!(rsk_inverse(&p, &q, rows, cols).unwrap(), a);
    }

    #[test]
    fn symmetric_rsk_gives_equal_tableaux(cells in prop::collection::vec(0u64..3, 6)) {
        let [a, b, c, d, e, f] = cells[..] else { unreachable!() };
        let m = IntMatrix::new(vec![vec![a, b, c], vec![b, d, e], vec![c, e, f]]).unwrap();
        let (p, q) = rsk(&m);
        prop_assert_eq!(p, q);
    }

    #[test]
    fn hook_formula_conjugation(parts in prop::collection::vec(1usize..6, 0..5)) {
        let mut parts = parts;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let lam = Partition::new(parts).unwrap();
        prop_assert_eq!(f_straight(&lam), f_straight(&lam.conjugate()));
    }

    #[test]
    fn rectangle_counts_are_transpose_symmetric(n in 1usize..7, m in 1usize..7, k in 0usize..4) {
        prop_assume!(k < n.min(m) && n * m <= 14);
        // the anti-diagonal flip swaps rows and columns of the staircase case
        let tall = TruncatedShape::rect_minus_staircase(m, n, k).unwrap();
        let wide = TruncatedShape::rect_minus_staircase(n, m, k).unwrap();
        let oracle = count_syt_oracle(&tall, 20).unwrap();
        prop_assert_eq!(&oracle, &count_syt_oracle(&wide, 20).unwrap());
        prop_assert_eq!(oracle, count_rect_minus_staircase(n.min(m), n.max(m), k).unwrap());
        if k >= 1 && 2 * k <= n.min(m) + 1 {
            prop_assert_eq!(count_rect_minus_almost_square(n, m, k).unwrap(), count_rect_minus_almost_square(m, n, k).unwrap());
        }
    }
}
