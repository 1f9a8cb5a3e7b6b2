use vcg_core::closed_form::{finite_cohomology, vz_cohomology, Ring, Symbol};
use vcg_core::group::{validate, CheckedSpec, GroupSpec, ThetaSpec};
use vcg_core::linalg::FinAb;

use Symbol::*;

fn z7z3(c_a: u64, c_b: u64) -> CheckedSpec {
    validate(
        GroupSpec::Metacyclic { a: 7, b: 3, r: 2 },
        Some(ThetaSpec::metacyclic(0, c_a, c_b)),
    )
    .unwrap()
}

fn z5z3q8(theta: ThetaSpec) -> CheckedSpec {
    validate(
        GroupSpec::ZaZbQ {
            a: 5,
            b: 3,
            i: 3,
            r: 1,
            r_x: 4,
            r_y: 4,
        },
        Some(theta),
    )
    .unwrap()
}

#[test]
fn metacyclic_cup_examples() {
    let ring = Ring::twisted(&z7z3(2, 1));
    let p = ring.cup_symbols(A(3), Eta).unwrap();
    assert_eq!(p, ring.generator(EtaA(3)).unwrap());
    let p = ring.cup_symbols(B(1), B(1)).unwrap();
    assert_eq!(p, ring.generator(B(2)).unwrap());
    for (x, y) in [(EtaA(1), EtaB(2)), (EtaA(3), EtaA(3)), (A(3), B(3)), (EtaB(1), Eta)] {
        assert!(ring.cup_symbols(x, y).unwrap().is_zero(), "{x}·{y}");
    }
    // δ_1 A_1 coefficient: 7·δ_3/(δ_2·A_1) = 49 ≡ 0 mod A_3 = 7
    assert!(ring.cup_symbols(A(1), EtaA(2)).unwrap().is_zero());
}

#[test]
fn metacyclic_period() {
    let ring = Ring::twisted(&z7z3(2, 1));
    let (deg, class) = ring.periodicity().unwrap();
    assert_eq!(deg, 6);
    assert_eq!(ring.render(&class), "φ_a^3 + φ_b^3");
    for s in [A(1), B(1), A(2), EtaA(3), EtaB(2), A(3), B(3)] {
        let g = ring.generator(s).unwrap();
        let shifted = ring.cup(&class, &g).unwrap();
        let target = match s {
            A(j) => A(j + 3),
            B(j) => B(j + 3),
            EtaA(j) => EtaA(j + 3),
            EtaB(j) => EtaB(j + 3),
            _ => unreachable!(),
        };
        assert_eq!(shifted, ring.generator(target).unwrap(), "{s}");
    }
}

#[test]
fn quaternion_relations() {
    let q8 = validate(GroupSpec::Quaternion { i: 3 }, None).unwrap();
    let ring = Ring::finite(&q8);
    let gg = ring.cup_symbols(Gamma(0), GammaPrime(0)).unwrap();
    assert_eq!(gg, ring.class(4, [(Delta(1), 4)]).unwrap());
    assert!(ring.cup_symbols(Gamma(0), Gamma(0)).unwrap().is_zero());
    assert!(ring.cup_symbols(GammaPrime(0), GammaPrime(0)).unwrap().is_zero());

    let q16 = validate(GroupSpec::Quaternion { i: 4 }, None).unwrap();
    let ring = Ring::finite(&q16);
    let eight = ring.class(4, [(Delta(1), 8)]).unwrap();
    assert_eq!(ring.cup_symbols(GammaPrime(0), GammaPrime(0)).unwrap(), eight);
    assert_eq!(ring.cup_symbols(Gamma(0), GammaPrime(0)).unwrap(), eight);
    assert!(ring.cup_symbols(Gamma(0), Gamma(0)).unwrap().is_zero());
}

#[test]
fn zbq_presentation_lists_annihilations() {
    let spec = validate(GroupSpec::ZbTimesQ { b: 3, i: 4 }, None).unwrap();
    let ring = Ring::finite(&spec);
    let pres = ring.presentation(8).unwrap();
    let order = |s: Symbol| pres.generators.iter().find(|g| g.symbol == s).unwrap().order;
    assert_eq!(order(B(1)), 3);
    assert_eq!(order(Gamma(0)), 2);
    assert_eq!(order(GammaPrime(0)), 2);
    assert_eq!(order(Delta(1)), 16);
    for (x, y) in [(B(1), Gamma(0)), (B(1), GammaPrime(0)), (B(1), Delta(1))] {
        let rule = pres
            .relations
            .iter()
            .find(|r| (r.left, r.right) == (x, y))
            .unwrap();
        assert!(rule.product.is_zero(), "{}", rule.rendered);
    }
}

#[test]
fn quaternionic_period_classes() {
    let ring = Ring::twisted(&z5z3q8(ThetaSpec::default()));
    let (deg, class) = ring.periodicity().unwrap();
    assert_eq!(deg, 4);
    assert_eq!(ring.render(&class), "α_2² + β_2² + δ_4");

    // k = 3 has order 2 mod 8, so p = 2 is even
    let q8 = validate(
        GroupSpec::Quaternion { i: 3 },
        Some(ThetaSpec::standard(1, 1, 3, 0)),
    )
    .unwrap();
    let ring = Ring::twisted(&q8);
    assert_eq!(ring.invariants().p, 2);
    let (deg, class) = ring.periodicity().unwrap();
    assert_eq!(deg, 4);
    assert_eq!(class, ring.class(4, [(Delta(1), 1)]).unwrap());
}

#[test]
fn rings_are_commutative_and_associative() {
    let specs = [
        z7z3(2, 1),
        z7z3(1, 1),
        z7z3(4, 1),
        z5z3q8(ThetaSpec::default()),
        validate(GroupSpec::Quaternion { i: 4 }, Some(ThetaSpec::standard(1, 1, 3, 2))).unwrap(),
        validate(GroupSpec::Quaternion { i: 3 }, Some(ThetaSpec::general((0, 1), (1, 0)))).unwrap(),
    ];
    for s in &specs {
        for ring in [Ring::finite(s), Ring::twisted(s)] {
            ring.check_commutativity(12).unwrap();
            ring.check_associativity(12).unwrap();
        }
    }
}

#[test]
fn cup_orders_divide() {
    let ring = Ring::twisted(&z7z3(2, 1));
    let gens = ring.generators(12).unwrap();
    for &x in &gens {
        for &y in &gens {
            let p = ring.cup_symbols(x, y).unwrap();
            for (&s, _) in &p.terms {
                let (ox, oy, os) = (
                    ring.order(x).unwrap(),
                    ring.order(y).unwrap(),
                    ring.order(s).unwrap(),
                );
                let g = vcg_core::arith::gcd(ox, oy);
                assert_eq!(g % os.max(1), 0, "{x}·{y} lands in order {os}");
            }
        }
    }
}

#[test]
fn group_level_periodicity() {
    let specs = [z7z3(2, 1), z7z3(4, 1), z5z3q8(ThetaSpec::default())];
    for s in &specs {
        let period = Ring::twisted(s).invariants().period();
        for n in 2..=2 + 2 * period {
            assert_eq!(
                vz_cohomology(s, n).group,
                vz_cohomology(s, n + period).group,
                "n = {n}"
            );
        }
    }
}

#[test]
fn pattern_at_4j_plus_2_is_stable() {
    let s = z5z3q8(ThetaSpec::default());
    let shape = |n: u64| {
        vz_cohomology(&s, n)
            .summands
            .iter()
            .map(|x| x.name.starts_with("Z_2"))
            .filter(|&b| b)
            .count()
    };
    assert!((0..5).all(|j| shape(4 * j + 2) == shape(2)));
}

#[test]
fn finite_values() {
    let m = validate(GroupSpec::Metacyclic { a: 7, b: 3, r: 2 }, None).unwrap();
    let got: Vec<FinAb> = (0..=6).map(|n| finite_cohomology(&m, n).group).collect();
    let want = [
        FinAb::free(1),
        FinAb::trivial(),
        FinAb::cyclic(3),
        FinAb::trivial(),
        FinAb::cyclic(3),
        FinAb::trivial(),
        FinAb::cyclic(21),
    ];
    assert_eq!(got, want);
}
