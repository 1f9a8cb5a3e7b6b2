use num_bigint::BigInt;
use num_traits::Zero;

use vcg_core::closed_form::{vz_cohomology, CohClass, Symbol};
use vcg_core::group::{validate, CheckedSpec, GroupSpec, ThetaSpec};
use vcg_core::linalg::FinAb;
use vcg_core::oracle::{
    bar_cohomology, stated_cup_oracle, periodic_cohomology, Coefficients, CyclicModule, Limits,
    Oracle, DEFAULT_BAR_CELLS,
};

fn spec(s: GroupSpec, theta: Option<ThetaSpec>) -> CheckedSpec {
    validate(s, theta).unwrap()
}

fn oracle(s: &CheckedSpec, top: usize) -> Oracle {
    Oracle::new(s, top, Limits::default()).unwrap()
}

fn z7z3(c_a: u64, c_b: u64) -> CheckedSpec {
    spec(
        GroupSpec::Metacyclic { a: 7, b: 3, r: 2 },
        Some(ThetaSpec::metacyclic(0, c_a, c_b)),
    )
}

fn groups(o: &Oracle, range: std::ops::RangeInclusive<usize>) -> Vec<String> {
    range
        .map(|n| o.integral(n).unwrap().group().to_string())
        .collect()
}

#[test]
fn quaternion_groups() {
    let q8 = oracle(&spec(GroupSpec::Quaternion { i: 3 }, None), 7);
    assert_eq!(
        groups(&q8, 0..=6),
        ["Z", "0", "Z_2 ⊕ Z_2", "0", "Z_8", "0", "Z_2 ⊕ Z_2"]
    );
    let q16 = oracle(&spec(GroupSpec::Quaternion { i: 4 }, None), 5);
    assert_eq!(q16.integral(4).unwrap().group(), &FinAb::cyclic(16));
}

#[test]
fn bar_agrees_with_resolution_on_small_groups() {
    let q8 = spec(GroupSpec::Quaternion { i: 3 }, None);
    let o = oracle(&q8, 4);
    for n in 0..=2 {
        let bar = bar_cohomology(o.group(), &Coefficients::Integers, n, DEFAULT_BAR_CELLS).unwrap();
        assert_eq!(bar.group(), o.integral(n).unwrap().group(), "n = {n}");
    }
    let s3 = z7z3(1, 1);
    let o = oracle(&s3, 3);
    for n in 0..=1 {
        let bar = bar_cohomology(o.group(), &Coefficients::Integers, n, DEFAULT_BAR_CELLS).unwrap();
        assert_eq!(bar.group(), o.integral(n).unwrap().group(), "n = {n}");
    }
}

#[test]
fn metacyclic_groups() {
    let o = oracle(&z7z3(1, 1), 7);
    assert_eq!(
        groups(&o, 0..=6),
        ["Z", "0", "Z_3", "0", "Z_3", "0", "Z_21"]
    );
}

#[test]
fn cyclic_resolution_matches_periodic_complex() {
    for m in 2..=12u64 {
        let s = spec(GroupSpec::Cyclic { m }, None);
        let o = oracle(&s, 5);
        for n in 0..=4 {
            let want = periodic_cohomology(m, CyclicModule::integers(), n).unwrap();
            assert_eq!(o.integral(n).unwrap().group(), &want, "m = {m}, n = {n}");
            if let Ok(bar) =
                bar_cohomology(o.group(), &Coefficients::Integers, n, DEFAULT_BAR_CELLS)
            {
                assert_eq!(bar.group(), &want, "bar, m = {m}, n = {n}");
            }
        }
    }
}

#[test]
fn odd_degrees_vanish() {
    let specs = [
        spec(GroupSpec::Quaternion { i: 3 }, None),
        spec(GroupSpec::Quaternion { i: 4 }, None),
        spec(GroupSpec::ZbTimesQ { b: 3, i: 3 }, None),
        z7z3(1, 1),
        spec(GroupSpec::Metacyclic { a: 5, b: 4, r: 2 }, None),
        spec(GroupSpec::Cyclic { m: 24 }, None),
    ];
    for s in &specs {
        let o = oracle(s, 4);
        for n in [1, 3] {
            assert!(o.integral(n).unwrap().group().is_trivial(), "{} n = {n}", s.spec);
        }
    }
}

#[test]
fn twisted_coefficients() {
    let s = spec(GroupSpec::ZbTimesQ { b: 3, i: 3 }, None);
    let o = oracle(&s, 4);
    for (j, eps) in [(1u64, 1u64), (2, 5)] {
        let m = o.twisted_coefficients(5, (1, 4, 4), j).unwrap();
        let h: Vec<FinAb> = (0..=3).map(|p| o.cohomology(&m, p).unwrap().group().clone()).collect();
        let want = [FinAb::cyclic(eps), FinAb::trivial(), FinAb::trivial(), FinAb::trivial()];
        assert_eq!(h, want, "j = {j}");
    }
}

#[test]
fn induced_actions() {
    let o = oracle(&z7z3(2, 1), 3);
    let t = o.induced_action(2).unwrap();
    assert!(t.is_identity());

    let q8 = oracle(&spec(GroupSpec::Quaternion { i: 3 }, None), 5);
    assert!(q8.induced_action(2).unwrap().is_identity());
    assert!(q8.induced_action(4).unwrap().is_identity());

    // y ↦ xy: a transvection of order 2 fixing one nonzero class
    let q16 = spec(
        GroupSpec::Quaternion { i: 4 },
        Some(ThetaSpec::standard(1, 1, 1, 1)),
    );
    let o = oracle(&q16, 3);
    let t = o.induced_action(2).unwrap();
    assert_eq!(t.order(10), Some(2));
    assert_eq!(t.invariants().unwrap(), FinAb::cyclic(2));
}

#[test]
fn induced_action_is_contravariant() {
    // x ↦ y, y ↦ x and x ↦ x^{-1} ... compose two Q8 automorphisms
    let q8 = spec(GroupSpec::Quaternion { i: 3 }, None);
    let o = oracle(&q8, 3);
    let g = o.group();
    let sw = spec(
        GroupSpec::Quaternion { i: 3 },
        Some(ThetaSpec::general((0, 1), (1, 0))),
    );
    let rot = spec(
        GroupSpec::Quaternion { i: 3 },
        Some(ThetaSpec::general((0, 1), (1, 1))),
    );
    let p = sw.theta_map(g).unwrap().permutation;
    let q = rot.theta_map(g).unwrap().permutation;
    let pq: Vec<usize> = (0..g.order()).map(|x| p[q[x]]).collect();
    let tp = o.induced_action_by(&p, 2).unwrap();
    let tq = o.induced_action_by(&q, 2).unwrap();
    let tpq = o.induced_action_by(&pq, 2).unwrap();
    let reduce = |m: &vcg_core::linalg::IntMatrix| {
        m.entries()
            .map(|(i, j, x)| (i, j, x.clone() % BigInt::from(2)))
            .filter(|(_, _, x): &(usize, usize, BigInt)| !x.is_zero())
            .collect::<Vec<_>>()
    };
    // (p∘q)^* = q^* p^*
    assert_eq!(reduce(&tq.matrix.mul(&tp.matrix)), reduce(&tpq.matrix));
    assert_eq!(tq.order(10), Some(3));
}

#[test]
fn fz_matches_closed_form_family_one() {
    let s = z7z3(2, 1);
    let o = oracle(&s, 8);
    for n in 0..=7 {
        let got = o.fz_cohomology(n).unwrap();
        assert_eq!(got, vz_cohomology(&s, n as u64).group, "n = {n}");
    }
    assert_eq!(o.fz_cohomology(2).unwrap(), FinAb::cyclic(3));
    assert_eq!(o.fz_cohomology(7).unwrap(), FinAb::cyclic(21));
    for n in [2, 4, 6] {
        assert_eq!(o.fz_cohomology(n).unwrap(), o.fz_cohomology(n + 1).unwrap());
    }
}

#[test]
fn trivial_twist_keeps_even_groups() {
    let s = spec(GroupSpec::Quaternion { i: 3 }, Some(ThetaSpec::default()));
    let o = oracle(&s, 5);
    for n in [2, 4] {
        assert_eq!(&o.fz_cohomology(n).unwrap(), o.integral(n).unwrap().group());
    }
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

#[test]
fn aw_unit_law() {
    let o = oracle(&spec(GroupSpec::Quaternion { i: 3 }, None), 5);
    let h0 = o.integral(0).unwrap();
    let h2 = o.integral(2).unwrap();
    let mut cmp = o.comparison();
    let one = &h0.representatives()[0];
    for g in h2.representatives() {
        let c = cmp.cup(one, 0, g, 2).unwrap();
        assert_eq!(h2.classify(&c).unwrap(), h2.classify(g).unwrap());
    }
}

#[test]
fn aw_quaternion_products() {
    let o = oracle(&spec(GroupSpec::Quaternion { i: 3 }, None), 5);
    let h2 = o.integral(2).unwrap();
    let h4 = o.integral(4).unwrap();
    assert_eq!(h4.orders(), vec![big(8)]);
    let reps = h2.representatives().to_vec();
    let mut cmp = o.comparison();
    let mut prod = |x: &[BigInt], y: &[BigInt]| h4.classify(&cmp.cup(x, 2, y, 2).unwrap()).unwrap();
    // every class squares to zero and the two basis classes multiply to 4δ_4
    assert_eq!(prod(&reps[0], &reps[0]), vec![big(0)]);
    assert_eq!(prod(&reps[1], &reps[1]), vec![big(0)]);
    assert_eq!(prod(&reps[0], &reps[1]), vec![big(4)]);
    assert_eq!(prod(&reps[1], &reps[0]), vec![big(4)]);
}

#[test]
fn aw_cyclic_square_generates() {
    let o = oracle(&spec(GroupSpec::Cyclic { m: 5 }, None), 5);
    let h2 = o.integral(2).unwrap();
    let h4 = o.integral(4).unwrap();
    let a = &h2.representatives()[0];
    let mut cmp = o.comparison();
    let sq = h4.classify(&cmp.cup(a, 2, a, 2).unwrap()).unwrap();
    assert!(sq[0] != big(0));
}

#[test]
fn stated_cup_examples() {
    use Symbol::*;
    let s = z7z3(2, 1);
    assert!(stated_cup_oracle(&s, A(1), EtaA(2)).unwrap().is_zero());
    let p = stated_cup_oracle(&s, B(1), Eta).unwrap();
    assert_eq!(p.coefficient(EtaB(1)), 1);
    let p = stated_cup_oracle(&s, A(3), Eta).unwrap();
    assert_eq!(p.coefficient(EtaA(3)), 1);
    assert_eq!(stated_cup_oracle(&s, EtaA(1), EtaA(2)).unwrap(), CohClass::zero(8));
}
