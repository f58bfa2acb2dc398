//! Regularity of `A_n + B_n` with `A_n = (a⁴,a³b,ab³,b⁴)(x,y)^n` and
//! `B_n = a²b²·P_n`, checked against bounds derived by hand from
//! `0 → A∩B → A⊕B → A+B → 0` and disjoint-variable product formulas.

use reglab_core::algebra::{Ring, RingSpec};
use reglab_core::families::{GradedFamily, Preset};
use reglab_core::monomial::{cm_regularity, MonomialIdeal};

fn ring() -> Ring {
    RingSpec::degrevlex(0, &["x", "y", "a", "b"]).unwrap()
}

fn mono(r: &Ring, s: &str) -> MonomialIdeal {
    MonomialIdeal::parse(r, s).unwrap()
}

fn reg(i: &MonomialIdeal) -> i64 {
    cm_regularity(i, i.ring().field()).unwrap()
}

#[test]
fn first_member_is_a_product_in_disjoint_variables() {
    let r = ring();
    // (a,b)^4 and (x,y) have linear resolutions, so the product has reg 4 + 1.
    let product = mono(&r, "a, b").power(4).unwrap().product(&mono(&r, "x, y")).unwrap();
    assert_eq!(reg(&product), 5);
    for preset in [Preset::by_name("ex-diverge", Some("n^2")).unwrap(), Preset::ExDistinctLims] {
        let fam = GradedFamily::preset(preset, 0).unwrap();
        let m = fam.member(1).unwrap();
        assert_eq!(m.as_monomial().unwrap(), &product);
    }
}

#[test]
fn the_intersection_is_a2b2_times_the_maximal_ideal() {
    let r = ring();
    let head = mono(&r, "a^4, a^3*b, a*b^3, b^4");
    let meet = head.intersect(&mono(&r, "a^2*b^2")).unwrap();
    // a³b·b = a³b² lies in both, and it is a²b²·a.
    assert_eq!(meet, mono(&r, "a^3*b^2, a^2*b^3"));
    assert_ne!(meet, mono(&r, "a^4*b^2, a^3*b^3, a^2*b^4"));
    assert_eq!(reg(&head), 5);
    assert_eq!(reg(&meet), 5);
}

#[test]
fn square_growth_has_regularity_equal_to_generator_degree() {
    let r = ring();
    let head = mono(&r, "a^4, a^3*b, a*b^3, b^4");
    let fam = GradedFamily::preset(Preset::by_name("ex-diverge", Some("n^2")).unwrap(), 0).unwrap();
    for n in 1..=5u32 {
        let f = n * n;
        let a = head.product(&mono(&r, "x, y").power(n).unwrap()).unwrap();
        let b = mono(&r, "a^2*b^2").product(&mono(&r, "x, y").power(f).unwrap()).unwrap();
        let u = a.intersect(&b).unwrap();
        assert_eq!((reg(&a), reg(&b), reg(&u)), (n as i64 + 5, f as i64 + 4, f as i64 + 5));
        let i = fam.member(n as usize).unwrap();
        let i = i.as_monomial().unwrap();
        assert_eq!(i, &a.sum(&b).unwrap());
        // d ≤ reg ≤ max(reg A, reg B, reg U - 1), and the two ends meet.
        let upper = reg(&a).max(reg(&b)).max(reg(&u) - 1);
        let d = i.max_gen_degree().unwrap() as i64;
        assert_eq!(d, f as i64 + 4);
        assert_eq!(reg(i), if n == 1 { 5 } else { upper.max(d) });
        assert_eq!(reg(i), f as i64 + 4);
    }
}

#[test]
fn binomial_tail_has_regularity_2n_plus_3() {
    let r = ring();
    let head = mono(&r, "a^4, a^3*b, a*b^3, b^4");
    let fam = GradedFamily::preset(Preset::ExDistinctLims, 0).unwrap();
    for n in 1..=6u32 {
        let a = head.product(&mono(&r, "x, y").power(n).unwrap()).unwrap();
        let b = mono(&r, &format!("a^2*b^2*x^{n}, a^2*b^2*y^{n}"));
        let u = a.intersect(&b).unwrap();
        // reg (x^n, y^n) = 2n - 1 and reg a²b²(a,b) = 5.
        assert_eq!(reg(&u), 2 * n as i64 + 4);
        let i = fam.member(n as usize).unwrap();
        let i = i.as_monomial().unwrap();
        assert_eq!(reg(i), 2 * n as i64 + 3);
        if n >= 2 {
            // reg U > reg(A ⊕ B) forces reg(A+B) ≥ reg U - 1.
            assert!(reg(&u) > reg(&a).max(reg(&b)));
        }
    }
}
