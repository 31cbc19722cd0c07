use howe::graded::{binomial, sym_hilbert, weyl_dim, CompactGroup};
use howe::jantzen::verify_witness;
use howe::rootsys::reflect_weight;
use howe::survey::{sweep_u, SweepReport};
use howe::theta::{
    enumerate_sigma_o, enumerate_sigma_u, theta_o_lowest, theta_u_lowest, to_highest_gl, to_highest_sp,
};
use howe::weight::{format_q, is_positive_integer, parse_q, q_frac, q_int};
use howe::{check_irreducible, pairing, reflect, RootSystem, Status, SystemKind, Weight};
use num_bigint::BigUint;
use proptest::prelude::*;
use std::collections::HashSet;

fn system() -> impl Strategy<Value = RootSystem> {
    prop_oneof![
        (1u32..=3, 1u32..=3).prop_map(|(n, m)| RootSystem::gl(n, m).unwrap()),
        (1u32..=5).prop_map(|p| RootSystem::sp(p).unwrap()),
    ]
}

fn half_weight(rank: usize) -> impl Strategy<Value = Weight> {
    prop::collection::vec(-12i64..=12, rank).prop_map(|v| Weight::from_halves(&v))
}

fn system_and_weight() -> impl Strategy<Value = (RootSystem, Weight)> {
    system().prop_flat_map(|rs| {
        let r = rs.kind().rank();
        (Just(rs), half_weight(r))
    })
}

// brute-force Gelfand–Tsetlin pattern count
fn gt_count(top: &[i64]) -> u64 {
    if top.len() <= 1 {
        return 1;
    }
    let mut total = 0;
    let mut row = vec![0i64; top.len() - 1];
    fn fill(top: &[i64], row: &mut Vec<i64>, i: usize, total: &mut u64) {
        if i == row.len() {
            *total += gt_count(row);
            return;
        }
        for x in top[i + 1]..=top[i] {
            row[i] = x;
            fill(top, row, i + 1, total);
        }
    }
    fill(top, &mut row, 0, &mut total);
    total
}

// number of exponent vectors of length d with sum n
fn monomials(d: u64, n: u64) -> u64 {
    if d == 1 {
        return 1;
    }
    (0..=n).map(|k| monomials(d - 1, n - k)).sum()
}

proptest! {
    #[test]
    fn reflection_is_an_involution_and_permutes_roots(rs in system()) {
        let roots: Vec<Vec<i64>> = rs.roots().iter().map(|r| r.coords().to_vec()).collect();
        for a in &roots {
            let mut image = HashSet::new();
            for g in &roots {
                let once = reflect(a, g).unwrap();
                let ints = once.to_ints().unwrap();
                prop_assert!(rs.root(&ints).is_some());
                prop_assert_eq!(reflect_weight(a, &once).unwrap(), Weight::from_ints(g));
                image.insert(ints);
            }
            prop_assert_eq!(image.len(), roots.len());
        }
    }

    #[test]
    fn rho_is_one_on_simple_roots(rs in system()) {
        for s in rs.simple_roots() {
            prop_assert_eq!(pairing(rs.rho(), &s).unwrap(), q_int(1));
        }
    }

    #[test]
    fn root_counts(rs in system()) {
        let (noncompact, compact) = match rs.kind() {
            SystemKind::Gl { n, m } => (2 * n * m, n * (n - 1) + m * (m - 1)),
            SystemKind::Sp { p } => (p * p + p, p * p - p),
        };
        prop_assert_eq!(rs.noncompact_roots().count() as u32, noncompact);
        prop_assert_eq!(rs.compact_roots().count() as u32, compact);
        prop_assert_eq!(rs.positive_roots().count() * 2, rs.roots().len());
    }

    #[test]
    fn pairing_is_linear((rs, x) in system_and_weight(), c in -6i64..=6) {
        let y = rs.rho().clone();
        for r in rs.roots() {
            let a = r.coords();
            let lhs = pairing(&x.checked_add(&y.scale(&q_int(c))).unwrap(), a).unwrap();
            let rhs = pairing(&x, a).unwrap() + q_int(c) * pairing(&y, a).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn verdict_ignores_central_shift(n in 1u32..=3, m in 1u32..=3, seed in prop::collection::vec(-8i64..=8, 6), c in -5i64..=5) {
        let rs = RootSystem::gl(n, m).unwrap();
        let lambda = Weight::from_halves(&seed[..(n + m) as usize]);
        let shift = Weight::new(vec![q_frac(c, 2); (n + m) as usize]);
        let a = check_irreducible(&rs, &lambda).unwrap();
        let b = check_irreducible(&rs, &lambda.checked_add(&shift).unwrap()).unwrap();
        prop_assert_eq!(a.status, b.status);
        prop_assert_eq!(a.witnesses, b.witnesses);
    }

    #[test]
    fn verdict_survives_negate_reverse(n in 1u32..=3, m in 1u32..=3, seed in prop::collection::vec(-8i64..=8, 6)) {
        let lambda = Weight::from_halves(&seed[..(n + m) as usize]);
        let a = check_irreducible(&RootSystem::gl(n, m).unwrap(), &lambda).unwrap();
        let b = check_irreducible(&RootSystem::gl(m, n).unwrap(), &lambda.negate_reverse()).unwrap();
        prop_assert_eq!(a.status, b.status);
    }

    #[test]
    fn witnesses_are_sound((rs, lambda) in system_and_weight()) {
        let v = check_irreducible(&rs, &lambda).unwrap();
        let shifted = lambda.checked_add(rs.rho()).unwrap();
        for w in &v.witnesses {
            prop_assert!(verify_witness(&rs, &lambda, w));
        }
        // independent recount of unrescued roots
        let mut unrescued = 0;
        for alpha in rs.positive_noncompact_roots() {
            let val = pairing(&shifted, alpha.coords()).unwrap();
            if !is_positive_integer(&val) {
                continue;
            }
            let rescued = rs.noncompact_roots().any(|g| {
                pairing(&shifted, g.coords()).unwrap() == q_int(0)
                    && reflect(alpha.coords(), g.coords())
                        .unwrap()
                        .to_ints()
                        .map(|r| rs.is_compact_root(&r))
                        .unwrap_or(false)
            });
            if !rescued {
                unrescued += 1;
            }
        }
        match v.status {
            Status::Irreducible => prop_assert_eq!(unrescued, 0),
            Status::Reducible => prop_assert!(unrescued > 0 && rs.kind().is_type_a()),
            Status::Unknown => prop_assert!(unrescued > 0 && !rs.kind().is_type_a()),
        }
    }

    #[test]
    fn unitary_theta_is_decreasing_and_injective(m in 1u32..=3, n in 1u32..=3, p in 1u32..=4, bound in 0u32..=3) {
        let mut seen = HashSet::new();
        for s in enumerate_sigma_u(p, m, n, bound) {
            let low = theta_u_lowest(&s).unwrap();
            let high = to_highest_gl(&low, m, n).unwrap();
            let (x, y) = high.split_blocks(n as usize);
            prop_assert!(x.is_weakly_decreasing() && y.is_weakly_decreasing());
            prop_assert!(seen.insert(low.to_string()));
        }
    }

    #[test]
    fn orthogonal_theta_is_decreasing_and_injective(n in 1u32..=7, p in 1u32..=4, bound in 0u32..=3) {
        // for even n and k = n/2 the two signs label the same O(n) module
        let mut seen = std::collections::HashMap::new();
        for s in enumerate_sigma_o(n, p, bound) {
            let low = theta_o_lowest(&s).unwrap();
            prop_assert!(to_highest_sp(&low).is_weakly_decreasing());
            prop_assert_eq!(to_highest_sp(&to_highest_sp(&low)), low.clone());
            if let Some(prev) = seen.insert(low.to_string(), s.clone()) {
                let prev: howe::SignedWeight = prev;
                prop_assert!(n % 2 == 0 && 2 * s.k() == n as usize && prev.a() == s.a(), "{} and {} collide", prev, s);
            }
        }
    }

    #[test]
    fn enumeration_grows_with_bound(m in 1u32..=3, n in 1u32..=3, p in 1u32..=4, bound in 0u32..=3) {
        let small: HashSet<_> = enumerate_sigma_u(p, m, n, bound).into_iter().collect();
        let large: HashSet<_> = enumerate_sigma_u(p, m, n, bound + 1).into_iter().collect();
        prop_assert!(small.is_subset(&large));
        let small: HashSet<_> = enumerate_sigma_o(2 * n + 1, p, bound).into_iter().collect();
        let large: HashSet<_> = enumerate_sigma_o(2 * n + 1, p, bound + 1).into_iter().collect();
        prop_assert!(small.is_subset(&large));
    }

    #[test]
    fn pascal_recurrence(n in 1u64..=60, k in 1u64..=60) {
        prop_assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
    }

    #[test]
    fn hilbert_slice_counts_monomials(d in 1u64..=5, n in 0u64..=8) {
        prop_assert_eq!(sym_hilbert(d, n).unwrap(), BigUint::from(monomials(d, n)));
    }

    #[test]
    fn unitary_weyl_dim_counts_patterns(mut v in prop::collection::vec(-3i64..=3, 1..=4)) {
        v.sort_unstable_by(|a, b| b.cmp(a));
        prop_assert_eq!(
            weyl_dim(CompactGroup::Unitary, &Weight::from_ints(&v)).unwrap(),
            BigUint::from(gt_count(&v))
        );
    }

    #[test]
    fn small_orthogonal_weyl_dims(a in 0i64..=6, b in 0i64..=6) {
        let (hi, lo) = (a.max(b), a.min(b));
        let o3 = weyl_dim(CompactGroup::Orthogonal { n: 3 }, &Weight::from_ints(&[a])).unwrap();
        prop_assert_eq!(o3, BigUint::from((2 * a + 1) as u64));
        // SO(4) is (SU(2) x SU(2))/±1
        let so4 = ((hi + lo + 1) * (hi - lo + 1)) as u64;
        let expect = if lo != 0 { 2 * so4 } else { so4 };
        let o4 = weyl_dim(CompactGroup::Orthogonal { n: 4 }, &Weight::from_ints(&[hi, lo])).unwrap();
        prop_assert_eq!(o4, BigUint::from(expect));
    }

    #[test]
    fn rationals_serialize_canonically(num in -500i64..=500, den in 1i64..=60) {
        let q = q_frac(num, den);
        let text = format_q(&q);
        prop_assert_eq!(parse_q(&text).unwrap(), q.clone());
        prop_assert_eq!(format_q(&parse_q(&format!("{}/{}", num * 3, den * 3)).unwrap()), text.clone());
        prop_assert!(!text.contains('.'));
        if let Some((_, d)) = text.split_once('/') {
            prop_assert!(d.parse::<i64>().unwrap() > 1);
        }
    }

    #[test]
    fn weights_round_trip_through_json((_, w) in system_and_weight()) {
        let s = serde_json::to_string(&w).unwrap();
        prop_assert_eq!(serde_json::from_str::<Weight>(&s).unwrap(), w.clone());
        prop_assert_eq!(s.parse::<String>().unwrap(), serde_json::to_string(&w).unwrap());
    }
}

#[test]
fn unitary_sweep_grows_with_p() {
    for (m, n) in [(1, 1), (1, 2), (2, 2)] {
        let mut last = 0;
        for p in 1..=4 {
            let total = sweep_u(m, n, p, 2).unwrap().total;
            assert!(total >= last, "m={m} n={n} p={p}");
            last = total;
        }
    }
}

#[test]
fn decimal_input_is_rejected() {
    assert!(parse_q("0.5").is_err());
    assert!(parse_q("1/0").is_err());
    assert!("1.5, 2".parse::<Weight>().is_err());
}

#[test]
fn sweep_report_round_trips() {
    let mut r = sweep_u(2, 1, 2, 3).unwrap();
    r.wall_time_ms = None;
    let json = r.to_json().unwrap();
    let back = SweepReport::from_json(&json).unwrap();
    assert_eq!(back, r);
    assert_eq!(back.to_json().unwrap(), json);
}
