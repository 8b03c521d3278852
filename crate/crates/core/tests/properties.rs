use absperm::codegen::{dumbbell, random_tree};
use absperm::cone::{awgnc_pseudoweight, cumulative_histogram, in_fundamental_cone, is_minimal_pcw, is_unscaled_pcw};
use absperm::gaussian::{verify_gaussian_limit, DEFAULT_SCHEDULE, DEFAULT_TOLERANCE};
use absperm::linalg::{det_binary, perm_binary, rank_gf2};
use absperm::pcw::{absdet_pcw, det_vector, enumerate_subsets, is_codeword, mod2_reduce, perm_pcw, z_syndrome};
use absperm::tanner::{bit_distance, build_tanner, verify_signed_completion, completion_in_restricted_cone};
use absperm::{BinaryMatrix, ColumnSubset, IntVector};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = BinaryMatrix> {
    prop::collection::vec(prop::collection::vec(0u8..=1, cols), rows).prop_map(|r| BinaryMatrix::from_rows(&r).unwrap())
}

fn square(max: usize) -> impl Strategy<Value = BinaryMatrix> {
    (0..=max).prop_flat_map(|k| matrix(k, k))
}

/// `m x n` with `m < n`.
fn wide() -> impl Strategy<Value = BinaryMatrix> {
    (1usize..=4).prop_flat_map(|m| (m + 1..=7).prop_flat_map(move |n| matrix(m, n)))
}

fn with_subset() -> impl Strategy<Value = (BinaryMatrix, ColumnSubset)> {
    wide().prop_flat_map(|h| {
        let (m, n) = (h.rows(), h.cols());
        (Just(h), prop::sample::subsequence((0..n).collect::<Vec<_>>(), m + 1))
            .prop_map(move |(h, s)| (h, ColumnSubset::new(s, n).unwrap()))
    })
}

fn permute_rows(h: &BinaryMatrix, perm: &[usize]) -> BinaryMatrix {
    let all: Vec<usize> = (0..h.cols()).collect();
    h.submatrix(perm, &all).unwrap()
}

fn rational(v: &[BigInt], num: i64, den: i64) -> Vec<BigRational> {
    v.iter().map(|x| BigRational::new(x * num, BigInt::from(den))).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn det_and_perm_agree_mod_two(m in square(7)) {
        let d = det_binary(&m).unwrap();
        let p = perm_binary(&m).unwrap();
        prop_assert_eq!((&d - &p) % 2, BigInt::zero());
        prop_assert!(d.abs() <= p);
    }

    #[test]
    fn row_swap_flips_det_and_keeps_perm(m in (2usize..=6).prop_flat_map(|k| matrix(k, k)), a in 0usize..6, b in 0usize..6) {
        let k = m.rows();
        let (a, b) = (a % k, b % k);
        prop_assume!(a != b);
        let mut swapped = m.clone();
        swapped.swap_rows(a, b);
        prop_assert_eq!(det_binary(&swapped).unwrap(), -det_binary(&m).unwrap());
        prop_assert_eq!(perm_binary(&swapped).unwrap(), perm_binary(&m).unwrap());
    }

    #[test]
    fn perm_ignores_row_and_column_order(
        (m, rows, cols) in (1usize..=6).prop_flat_map(|k| (
            matrix(k, k),
            Just((0..k).collect::<Vec<_>>()).prop_shuffle(),
            Just((0..k).collect::<Vec<_>>()).prop_shuffle(),
        ))
    ) {
        prop_assert_eq!(perm_binary(&m.submatrix(&rows, &cols).unwrap()).unwrap(), perm_binary(&m).unwrap());
    }

    #[test]
    fn det_vector_lemma((h, s) in with_subset()) {
        let nu = det_vector(&h, &s).unwrap();
        prop_assert!(z_syndrome(&h, &nu).unwrap().is_zero());
        let c = mod2_reduce(&nu);
        prop_assert!(is_codeword(&h, &c).unwrap());
        let a = absdet_pcw(&h, &s).unwrap();
        let p = perm_pcw(&h, &s).unwrap();
        prop_assert_eq!(&mod2_reduce(&a), &c);
        prop_assert_eq!(&mod2_reduce(&p), &c);
        for i in 0..h.cols() {
            prop_assert!(a[i] <= p[i]);
            if !s.contains(i) {
                prop_assert!(a[i].is_zero() && p[i].is_zero());
            }
        }
        prop_assert!(is_unscaled_pcw(&h, &a).unwrap());
        prop_assert!(is_unscaled_pcw(&h, &p).unwrap());
    }

    #[test]
    fn row_order_invariance(
        ((h, s), perm) in with_subset().prop_flat_map(|(h, s)| {
            let m = h.rows();
            (Just((h, s)), Just((0..m).collect::<Vec<_>>()).prop_shuffle())
        })
    ) {
        let hp = permute_rows(&h, &perm);
        prop_assert_eq!(absdet_pcw(&hp, &s).unwrap(), absdet_pcw(&h, &s).unwrap());
        prop_assert_eq!(perm_pcw(&hp, &s).unwrap(), perm_pcw(&h, &s).unwrap());
        let (a, b) = (det_vector(&hp, &s).unwrap(), det_vector(&h, &s).unwrap());
        prop_assert!(a == b || a == b.scale(&BigInt::from(-1)));
    }

    #[test]
    fn cone_membership_is_scale_invariant(
        h in wide(),
        w in prop::collection::vec(0i64..6, 7),
        num in 1i64..50,
        den in 1i64..50,
    ) {
        let w = IntVector::from_i64s(&w[..h.cols()]);
        let base = in_fundamental_cone(&h, &w).unwrap().member;
        let scaled = in_fundamental_cone(&h, &rational(&w, num, den)).unwrap();
        prop_assert_eq!(base, scaled.member);
        prop_assert_eq!(scaled.member, scaled.violated.is_empty());
    }

    #[test]
    fn absolute_null_vectors_lie_in_cone(
        h in wide(),
        coeffs in prop::collection::vec(-5i64..=5, 8),
        den in 1i64..30,
    ) {
        // rational combinations of det-vectors span null vectors of H
        let n = h.cols();
        let mut nu = vec![BigInt::zero(); n];
        for (s, c) in enumerate_subsets(n, h.rows() + 1).zip(&coeffs) {
            for (acc, x) in nu.iter_mut().zip(det_vector(&h, &s).unwrap().iter()) {
                *acc += x * c;
            }
        }
        prop_assert!(z_syndrome(&h, &nu).unwrap().is_zero());
        let omega: Vec<BigRational> = rational(&nu, 1, den).into_iter().map(|x| x.abs()).collect();
        prop_assert!(in_fundamental_cone(&h, &omega).unwrap().member);
    }

    #[test]
    fn minimality_is_scale_invariant((h, s) in with_subset(), k in 2i64..9) {
        let w = absdet_pcw(&h, &s).unwrap();
        prop_assume!(!w.is_zero());
        prop_assert_eq!(
            is_minimal_pcw(&h, &w).unwrap(),
            is_minimal_pcw(&h, &w.scale(&BigInt::from(k))).unwrap()
        );
    }

    #[test]
    fn codeword_pseudoweight_is_hamming_weight(h in wide()) {
        let n = h.cols();
        for word in 1u32..(1 << n) {
            let c: Vec<u8> = (0..n).map(|i| ((word >> i) & 1) as u8).collect();
            if is_codeword(&h, &c).unwrap() {
                let as_int: Vec<BigInt> = c.iter().map(|&b| BigInt::from(b)).collect();
                let pw = awgnc_pseudoweight(&as_int).unwrap();
                prop_assert_eq!(pw.ratio(), &BigRational::from_integer(BigInt::from(word.count_ones())));
            }
        }
    }

    #[test]
    fn histogram_counts_are_cumulative(h in wide()) {
        let weights: Vec<_> = enumerate_subsets(h.cols(), h.rows() + 1)
            .map(|s| awgnc_pseudoweight(&absdet_pcw(&h, &s).unwrap()).unwrap())
            .collect();
        let edges: Vec<f64> = (0..=16).map(|k| k as f64 * 0.5).collect();
        let hist = cumulative_histogram(&weights, &edges).unwrap();
        prop_assert!(hist.counts.windows(2).all(|w| w[0] <= w[1]));
        let nonzero = weights.iter().filter(|w| !w.is_zero_vector()).count() as u64;
        prop_assert_eq!(hist.total, nonzero);
        prop_assert_eq!(hist.zero_count + nonzero, weights.len() as u64);
    }

    #[test]
    fn gaussian_error_shrinks_along_schedule((h, s) in with_subset()) {
        let report = verify_gaussian_limit(&h, &s, &DEFAULT_SCHEDULE, DEFAULT_TOLERANCE).unwrap();
        prop_assert!(report.monotone());
        prop_assert!(report.all_converged(), "max error {}", report.max_error);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn tree_codes_have_binary_pcws((n, m, seed) in (3usize..=9).prop_flat_map(|n| (Just(n), 1..n, any::<u64>()))) {
        let h = random_tree(n, m, seed).unwrap();
        for s in enumerate_subsets(n, m + 1) {
            for v in [absdet_pcw(&h, &s).unwrap(), perm_pcw(&h, &s).unwrap()] {
                prop_assert!(v.iter().all(|x| x.is_zero() || x.is_one()), "{v} for S = {s}");
            }
        }
    }

    #[test]
    fn bit_distances_are_even((n, m, seed) in (3usize..=12).prop_flat_map(|n| (Just(n), 1..n, any::<u64>()))) {
        let g = build_tanner(&random_tree(n, m, seed).unwrap());
        for a in 0..n {
            for b in 0..n {
                prop_assert_eq!(bit_distance(&g, a, b).unwrap().unwrap() % 2, 0);
            }
        }
    }

    #[test]
    fn signed_completion_holds_when_defined((n, m, seed) in (3usize..=12).prop_flat_map(|n| (Just(n), 1..n, any::<u64>()))) {
        let h = random_tree(n, m, seed).unwrap();
        for root in 0..n {
            if let Ok(result) = verify_signed_completion(&h, root) {
                prop_assert!(result.verified);
                prop_assert!(completion_in_restricted_cone(&h, &result).unwrap());
                prop_assert!(result.nu.iter().zip(result.omega.iter()).all(|(a, b)| &a.abs() == b));
            }
        }
    }
}

#[test]
fn signed_completion_on_structured_graphs() {
    let star = BinaryMatrix::from_rows(&[[1, 1, 1]]).unwrap();
    let cycle = |k: usize| {
        let ones: Vec<(usize, usize)> = (0..k).flat_map(|j| [(j, j), (j, (j + 1) % k)]).collect();
        BinaryMatrix::from_ones(k, k, &ones).unwrap()
    };
    let mut graphs = vec![star];
    graphs.extend((3..=8).map(cycle));
    graphs.extend((3..=8).map(|k| dumbbell(k).unwrap()));
    let mut verified = 0;
    for h in &graphs {
        for root in 0..h.cols() {
            if let Ok(result) = verify_signed_completion(h, root) {
                assert!(result.verified, "root {root} of {h:?}");
                assert!(completion_in_restricted_cone(h, &result).unwrap());
                verified += 1;
            }
        }
    }
    // star: 3 roots, cycles: every root, dumbbells: the bridge
    assert!(verified >= 3 + (3..=8).sum::<usize>() + 6);
}

#[test]
fn dumbbell_codes_have_dimension_two() {
    for k in 3..=8 {
        let h = dumbbell(k).unwrap();
        assert_eq!(rank_gf2(&h), 2 * k - 1);
        assert_eq!(h.cols() - rank_gf2(&h), 2);
    }
}
