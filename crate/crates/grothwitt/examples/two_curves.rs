//! Deciding how the measures of two curves relate.
//!
//! For curves X_1, X_2 over a common GF(q) exactly three things can
//! happen: some base change makes their Jacobians isogenous (equal
//! numerators), some base change makes both curves special (all
//! eigenvalues +sqrt(q)), or neither ever happens and the two measures
//! are algebraically independent. Both escape hatches are decided
//! exactly: isogeny by comparing numerators degree by degree, and
//! specialness by testing whether alpha^2/q is a root of unity via
//! cyclotomic factorization.

use grothwitt::field::FieldSpec;
use grothwitt::rational_witt::OnePoly;
use grothwitt::skolem::{classify_two_curves, special_orders, TwoCurvesClass};
use grothwitt::zeta::{Curve, ZetaData};
use grothwitt::{parse_rat, Error, Int};

fn genus_one(q: u64, trace: i64) -> Result<ZetaData, Error> {
    // Numerator 1 - a t + q t^2 for trace a.
    let tail = vec![
        parse_rat(&(-trace).to_string())?,
        parse_rat(&q.to_string())?,
    ];
    ZetaData::from_numerator(Int::from(q), 1, OnePoly::new(tail))
}

fn line(q: u64) -> Result<ZetaData, Error> {
    let field = match q {
        2 => FieldSpec::new(2, 1, 0)?,
        4 => FieldSpec::new(2, 2, 0)?,
        _ => unreachable!("only q = 2, 4 used here"),
    };
    Curve::projective_line(field).zeta(1, 1_000_000)
}

fn main() -> Result<(), Error> {
    // An elliptic curve against itself: isogenous immediately.
    let e = genus_one(2, 1)?;
    let outcome = classify_two_curves(&e, &e, 120, 50)?;
    assert_eq!(outcome.class, TwoCurvesClass::IsogenousJacobians { m: 1 });
    println!("E vs E: {:?}", outcome.class);

    // P^1 over F_4 against the supersingular curve with numerator
    // (1 + 2t)^2: after one quadratic base change both are special.
    let ss = genus_one(4, -4)?;
    println!(
        "\nsupersingular eigenvalue ratios alpha^2/q are roots of unity of orders {:?}",
        special_orders(&ss).expect("eigenvalue ratios are roots of unity")
    );
    let outcome = classify_two_curves(&line(4)?, &ss, 120, 50)?;
    assert_eq!(outcome.class, TwoCurvesClass::BecomesSpecialBoth { m: 2 });
    println!("P^1 vs supersingular E over F_4: {:?}", outcome.class);
    let d = outcome.diagnostics.expect("traces differ");
    println!("  candidate relation: {}", d.relation.render());
    println!("  vanishes on all ghost indices up to 50: {}", d.vanishes);

    // P^1 against an ordinary elliptic curve over F_2: neither escape
    // hatch ever fires, so the measures are independent.
    let ordinary = genus_one(2, 1)?;
    assert!(special_orders(&ordinary).is_none());
    let outcome = classify_two_curves(&line(2)?, &ordinary, 120, 50)?;
    assert_eq!(outcome.class, TwoCurvesClass::IndependentCertified);
    println!("\nP^1 vs ordinary E over F_2: {:?}", outcome.class);
    let d = outcome.diagnostics.expect("traces differ");
    println!("  candidate relation: {}", d.relation.render());
    println!(
        "  fails at ghost index {:?}",
        d.counterexample.expect("the relation does not persist").0
    );
    Ok(())
}
